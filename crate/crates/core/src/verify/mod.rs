//! Seeded, exact, randomized verification of the library's identities.
//!
//! Every check evaluates both sides of an identity exactly; a single
//! mismatch is a counterexample. Draws are derived per sample from
//! `(seed, check name, sample index)` (see [`seed`]), so reports are
//! reproducible and independent of evaluation order. Over GF(p) with
//! `p ≤ 7` a check enumerates its whole input space when that space has at
//! most 10⁶ tuples.

mod checks;
pub mod seed;

use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::skewfield::{Field, FieldElement};
use checks::{Applies, Check, Kind, Outcome};

/// Attempts per sample before the slot is reported as unfilled.
pub const MAX_REDRAWS: usize = 1000;
/// Witnesses kept per check; failures beyond this are only counted.
pub const WITNESS_CAP: usize = 10;
/// Largest tuple space that is enumerated instead of sampled.
pub const EXHAUSTIVE_LIMIT: u64 = 1_000_000;
/// Largest prime whose field is enumerated.
pub const EXHAUSTIVE_MAX_PRIME: u64 = 7;

/// Which right-hand side the conjugation check compares against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum P6Form {
    /// `A·c_r(A,B;C,D)·A⁻¹`
    Statement,
    /// `A·c_r(A,C;B,D)·A⁻¹`
    Proof,
}

/// Which product the multiplication construction is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MulOrder {
    #[serde(rename = "a*b")]
    AB,
    #[serde(rename = "b*a")]
    BA,
}

pub(crate) const P6_FORM: P6Form = P6Form::Statement;
pub(crate) const MUL_ORDER: MulOrder = MulOrder::AB;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSpec {
    pub name: String,
    pub field: Field,
    pub samples: usize,
    pub seed: u64,
}

impl CheckSpec {
    pub fn new(name: impl Into<String>, field: Field, samples: usize, seed: u64) -> Result<Self> {
        let spec = CheckSpec {
            name: name.into(),
            field,
            samples,
            seed,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::InvalidArgs("samples must be at least 1".into()));
        }
        checks::find(&self.name)
            .map(|_| ())
            .ok_or_else(|| Error::UnknownCheck(self.name.clone()))
    }
}

/// One counterexample: the drawn inputs and both evaluated sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub description: String,
    /// Samples that met the precondition set and were evaluated.
    pub samples_run: usize,
    pub skipped: bool,
    pub passed: bool,
    /// Samples on which the two sides differed.
    pub failures: usize,
    /// Draws rejected by the precondition set.
    pub redraws: usize,
    /// Sample slots left empty after [`MAX_REDRAWS`] rejected draws.
    pub unfilled: usize,
    pub exhaustive: bool,
    /// Witness-search checks: 1-based index of the first sample that
    /// produced a witness.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub first_witness_at: Option<usize>,
    pub witnesses: Vec<Witness>,
}

impl CheckRecord {
    fn new(check: &Check) -> Self {
        CheckRecord {
            name: check.name.to_string(),
            description: check.description.to_string(),
            samples_run: 0,
            skipped: false,
            passed: false,
            failures: 0,
            redraws: 0,
            unfilled: 0,
            exhaustive: false,
            first_witness_at: None,
            witnesses: Vec::new(),
        }
    }

    fn skipped(check: &Check) -> Self {
        CheckRecord {
            skipped: true,
            ..CheckRecord::new(check)
        }
    }

    fn record(&mut self, inputs: &[FieldElement], outcome: Result<Outcome>) -> bool {
        let (lhs, rhs) = match outcome {
            Ok(Outcome::Redraw) => {
                self.redraws += 1;
                return false;
            }
            Ok(Outcome::Holds) => {
                self.samples_run += 1;
                return true;
            }
            Ok(Outcome::Fails { lhs, rhs }) => (lhs, rhs),
            Err(e) => (format!("error: {e}"), "no error".to_string()),
        };
        self.samples_run += 1;
        self.failures += 1;
        if self.first_witness_at.is_none() {
            self.first_witness_at = Some(self.samples_run);
        }
        if self.witnesses.len() < WITNESS_CAP {
            self.witnesses.push(Witness {
                inputs: inputs.iter().map(|x| x.to_string()).collect(),
                lhs,
                rhs,
            });
        }
        true
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct P6Resolution {
    pub samples: usize,
    pub statement_matches: usize,
    pub proof_matches: usize,
    /// The form matching every sample, if exactly one does.
    pub chosen: Option<P6Form>,
    /// The form the `P6` and `P7` checks use.
    pub pinned: P6Form,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MulOrderResolution {
    pub samples: usize,
    pub ab_matches: usize,
    pub ba_matches: usize,
    pub chosen: Option<MulOrder>,
    pub pinned: MulOrder,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub field: Field,
    pub seed: u64,
    pub samples: usize,
    /// Seconds since the Unix epoch; the only nondeterministic field.
    pub timestamp: u64,
    pub p6_form: P6Resolution,
    pub mul_order: MulOrderResolution,
    pub checks: Vec<CheckRecord>,
}

impl VerificationReport {
    /// True iff every non-skipped check passed.
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.skipped || c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failed(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.skipped && !c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The report with its timestamp zeroed, for reproducibility checks.
    pub fn without_timestamp(&self) -> Self {
        VerificationReport {
            timestamp: 0,
            ..self.clone()
        }
    }
}

pub fn check_names() -> Vec<&'static str> {
    checks::all().iter().map(|c| c.name).collect()
}

fn applies(check: &Check, field: Field) -> bool {
    match check.applies {
        Applies::All => true,
        Applies::CommutativeOnly => field.is_commutative(),
        Applies::NoncommutativeOnly => !field.is_commutative(),
    }
}

/// All tuples of `field`'s elements of length `arity`, when small enough.
fn enumeration(check: &Check, field: Field) -> Option<(Vec<FieldElement>, usize)> {
    let Field::Gf(p) = field else { return None };
    if !check.enumerable || p > EXHAUSTIVE_MAX_PRIME {
        return None;
    }
    let space = p.checked_pow(check.arity as u32)?;
    (space <= EXHAUSTIVE_LIMIT).then(|| (field.elements().unwrap_or_default(), space as usize))
}

fn run_exhaustive(check: &Check, field: Field, elements: &[FieldElement], space: usize) -> CheckRecord {
    let mut record = CheckRecord::new(check);
    record.exhaustive = true;
    let p = elements.len();
    let mut tuple = Vec::with_capacity(check.arity);
    for mut code in 0..space {
        tuple.clear();
        for _ in 0..check.arity {
            tuple.push(elements[code % p].clone());
            code /= p;
        }
        let outcome = (check.eval)(field, &tuple);
        record.record(&tuple, outcome);
    }
    record
}

fn run_sampled(check: &Check, field: Field, seed: u64, samples: usize) -> CheckRecord {
    let mut record = CheckRecord::new(check);
    for n in 0..samples {
        let mut rng = seed::sample_rng(seed, check.name, n as u64);
        let filled = (0..MAX_REDRAWS).any(|_| {
            let tuple = check.draw(field, &mut rng);
            let outcome = (check.eval)(field, &tuple);
            record.record(&tuple, outcome)
        });
        if !filled {
            record.unfilled += 1;
        }
    }
    record
}

fn finish(check: &Check, mut record: CheckRecord) -> CheckRecord {
    record.passed = match check.kind {
        Kind::Identity => record.failures == 0 && record.unfilled == 0 && record.samples_run > 0,
        Kind::WitnessSearch => record.failures > 0,
    };
    record
}

fn execute(check: &Check, field: Field, seed: u64, samples: usize) -> CheckRecord {
    let record = match enumeration(check, field) {
        Some((elements, space)) => run_exhaustive(check, field, &elements, space),
        None => run_sampled(check, field, seed, samples),
    };
    finish(check, record)
}

/// Run one check. Unlike [`run_suite`], a check outside its field class
/// still runs: `P9` over ℚ reports `passed = false` because no witness
/// exists.
pub fn run_check(spec: &CheckSpec) -> Result<CheckRecord> {
    spec.validate()?;
    let check = checks::find(&spec.name).expect("validated");
    Ok(execute(check, spec.field, spec.seed, spec.samples))
}

/// Run every check. Checks outside the field's class are recorded as
/// skipped with `passed = false`; [`VerificationReport::all_passed`]
/// ignores them.
pub fn run_suite(field: Field, seed: u64, samples: usize) -> VerificationReport {
    let samples = samples.max(1);
    let checks = checks::all()
        .iter()
        .map(|check| {
            if applies(check, field) {
                execute(check, field, seed, samples)
            } else {
                CheckRecord::skipped(check)
            }
        })
        .collect();
    VerificationReport {
        field,
        seed,
        samples,
        timestamp: SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0),
        p6_form: resolve_p6_form(field, seed, samples),
        mul_order: resolve_mul_order(field, seed, samples),
        checks,
    }
}

fn resolve<T>(
    name: &str,
    field: Field,
    seed: u64,
    samples: usize,
    arity: usize,
    sides: impl Fn(&[FieldElement]) -> Result<Option<T>>,
) -> Vec<T> {
    let mut found = Vec::with_capacity(samples);
    for n in 0..samples {
        let mut rng = seed::sample_rng(seed, name, n as u64);
        for _ in 0..MAX_REDRAWS {
            let tuple: Vec<FieldElement> = (0..arity).map(|_| field.random(&mut rng)).collect();
            if let Ok(Some(t)) = sides(&tuple) {
                found.push(t);
                break;
            }
        }
    }
    found
}

fn choose<T: Copy>(samples: usize, a: usize, b: usize, forms: (T, T)) -> Option<T> {
    match (a == samples, b == samples) {
        (true, false) => Some(forms.0),
        (false, true) => Some(forms.1),
        _ => None,
    }
}

/// Count how often each candidate right-hand side of the conjugation
/// identity `c_r(A⁻¹,B⁻¹;C⁻¹,D⁻¹) = A·X·A⁻¹` matches. `chosen` is the
/// form that matched every sample when the other did not.
pub fn resolve_p6_form(field: Field, seed: u64, samples: usize) -> P6Resolution {
    let sides = resolve("resolve_p6_form", field, seed, samples, 4, |x| {
        checks::conjugation_sides(&x[0], &x[1], &x[2], &x[3])
    });
    let statement_matches = sides.iter().filter(|(l, s, _)| l == s).count();
    let proof_matches = sides.iter().filter(|(l, _, p)| l == p).count();
    P6Resolution {
        samples: sides.len(),
        statement_matches,
        proof_matches,
        chosen: choose(sides.len(), statement_matches, proof_matches, (P6Form::Statement, P6Form::Proof)),
        pinned: P6_FORM,
    }
}

/// Count how often the multiplication construction yields `a·b` versus
/// `b·a`.
pub fn resolve_mul_order(field: Field, seed: u64, samples: usize) -> MulOrderResolution {
    let sides = resolve("resolve_mul_order", field, seed, samples, 8, checks::construction_product);
    let ab_matches = sides.iter().filter(|(got, ab, _)| got == ab).count();
    let ba_matches = sides.iter().filter(|(got, _, ba)| got == ba).count();
    MulOrderResolution {
        samples: sides.len(),
        ab_matches,
        ba_matches,
        chosen: choose(sides.len(), ab_matches, ba_matches, (MulOrder::AB, MulOrder::BA)),
        pinned: MUL_ORDER,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(name: &str, field: Field, samples: usize) -> CheckSpec {
        CheckSpec::new(name, field, samples, 42).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert_eq!(
            CheckSpec::new("P99", Field::Rational, 10, 0),
            Err(Error::UnknownCheck("P99".into()))
        );
        assert!(CheckSpec::new("P1", Field::Rational, 0, 0).is_err());
    }

    #[test]
    fn p1_over_rationals_passes() {
        let r = run_check(&spec("P1", Field::Rational, 200)).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.samples_run, 200);
        assert!(r.witnesses.is_empty());
    }

    #[test]
    fn p9_has_no_witness_in_a_field() {
        let r = run_check(&spec("P9", Field::Rational, 100)).unwrap();
        assert!(!r.passed);
        assert_eq!(r.failures, 0);
    }

    #[test]
    fn p9_finds_a_quaternion_witness() {
        let r = run_check(&spec("P9", Field::Quaternion, 100)).unwrap();
        assert!(r.passed);
        assert_eq!(r.witnesses[0].inputs.len(), 4);
        assert_ne!(r.witnesses[0].lhs, r.witnesses[0].rhs);
    }

    #[test]
    fn small_prime_fields_are_enumerated() {
        let r = run_check(&spec("P1", Field::Gf(5), 1)).unwrap();
        assert!(r.exhaustive && r.passed);
        // ordered 4-tuples of distinct elements of GF(5)
        assert_eq!(r.samples_run, 5 * 4 * 3 * 2);
        assert_eq!(r.samples_run + r.redraws, 625);
    }

    #[test]
    fn witnesses_are_capped_but_failures_counted() {
        let r = run_check(&spec("P13c", Field::Rational, 50)).unwrap();
        assert!(!r.passed);
        assert!(r.failures > WITNESS_CAP);
        assert_eq!(r.witnesses.len(), WITNESS_CAP);
    }

    #[test]
    fn conjugation_resolution_picks_the_statement() {
        let q = resolve_p6_form(Field::Quaternion, 7, 100);
        assert_eq!(q.samples, 100);
        assert_eq!(q.statement_matches, 100);
        assert!(q.proof_matches < 100);
        assert_eq!(q.chosen, Some(P6Form::Statement));

        // conjugation is trivial over ℚ, and c_r(A,C;B,D) = I − c_r(A,B;C,D)
        let r = resolve_p6_form(Field::Rational, 7, 50);
        assert_eq!(r.statement_matches, 50);
        assert_eq!(r.proof_matches, 0);
        assert_eq!(r.chosen, Some(P6Form::Statement));
    }

    #[test]
    fn construction_realizes_a_times_b() {
        let q = resolve_mul_order(Field::Quaternion, 3, 50);
        assert_eq!(q.chosen, Some(MulOrder::AB));
    }

    #[test]
    fn suite_skips_by_field_class() {
        let report = run_suite(Field::Quaternion, 1, 5);
        let p8 = report.check("P8").unwrap();
        assert!(p8.skipped && !p8.passed);
        assert!(!report.check("P9").unwrap().skipped);
        let report = run_suite(Field::Rational, 1, 5);
        assert!(report.check("P9").unwrap().skipped);
        assert!(report.check("norm_multiplicative").unwrap().skipped);
    }

    #[test]
    fn suite_is_deterministic() {
        let a = run_suite(Field::Gf(101), 9, 20).without_timestamp();
        let b = run_suite(Field::Gf(101), 9, 20).without_timestamp();
        assert_eq!(a.to_json(), b.to_json());
    }
}
