//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if
//! any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use skewratio::ratio::cross_ratio_of;
use skewratio::verify::{CheckRecord, P6Form};
use skewratio::{
    check_desargues, generate_desargues_config, resolve_p6_form, run_check, run_suite,
    CheckSpec, ExtendedPoint, Field, PerspectiveMode,
};

const SEED: u64 = 42;
const SAMPLED: [Field; 3] = [Field::Rational, Field::Gf(101), Field::Quaternion];

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    ok: bool,
    notes: Vec<String>,
}

impl Verdict {
    fn new() -> Self {
        Verdict { ok: true, notes: Vec::new() }
    }

    fn require(&mut self, ok: bool, note: impl Into<String>) {
        if !ok {
            self.ok = false;
            self.notes.push(note.into());
        }
    }

    /// Require a check to pass with exactly `samples` evaluated samples, or
    /// by exhaustive enumeration.
    fn check(&mut self, name: &str, field: Field, samples: usize) -> CheckRecord {
        let r = run_check(&CheckSpec::new(name, field, samples, SEED).unwrap()).unwrap();
        let counted = r.exhaustive || r.samples_run == samples;
        let summary = match r.witnesses.first() {
            Some(w) => format!(
                "{name} on {field}: {} of {} failed, e.g. inputs {:?}: {} vs {}",
                r.failures, r.samples_run, w.inputs, w.lhs, w.rhs
            ),
            None => format!("{name} on {field}: passed={} samples_run={}", r.passed, r.samples_run),
        };
        self.require(r.passed && counted, summary);
        r
    }
}

fn distinct_triple(field: Field, rng: &mut ChaCha8Rng) -> [skewratio::FieldElement; 3] {
    loop {
        let [p, q, s] = std::array::from_fn(|_| field.random(rng));
        if p != q && p != s && q != s {
            return [p, q, s];
        }
    }
}

fn c1_degenerate_table() -> Verdict {
    let mut v = Verdict::new();
    for field in [Field::Rational, Field::Gf(5), Field::Gf(101), Field::Quaternion] {
        let one = ExtendedPoint::Finite(field.one());
        let zero = ExtendedPoint::Finite(field.zero());
        let inf = ExtendedPoint::Infinity(field);
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        for _ in 0..20 {
            let [p, q, s] = distinct_triple(field, &mut rng);
            let cases = [
                ("A=B", [&p, &p, &q, &s], &one),
                ("A=C", [&p, &q, &p, &s], &zero),
                ("A=D", [&p, &q, &s, &p], &inf),
                ("B=C", [&p, &q, &q, &s], &inf),
                ("B=D", [&p, &q, &s, &q], &zero),
                ("C=D", [&p, &q, &s, &s], &one),
            ];
            for (label, [a, b, c, d], expected) in cases {
                let got = cross_ratio_of(a, b, c, d);
                v.require(got.as_ref() == Ok(expected), format!("{label} on {field}: {got:?}"));
            }
        }
    }
    v
}

fn c2_identity_suites() -> Verdict {
    let mut v = Verdict::new();
    for name in ["P1", "P2", "P3", "P4", "P5a", "P5b", "P5c", "P11", "P12"] {
        for field in SAMPLED {
            v.check(name, field, 1000);
        }
        let r = v.check(name, Field::Gf(5), 1);
        v.require(r.exhaustive, format!("{name} on gf:5 was not enumerated"));
    }
    v
}

fn c3_conjugation() -> Verdict {
    let mut v = Verdict::new();
    let res = resolve_p6_form(Field::Quaternion, SEED, 1000);
    v.require(res.samples == 1000, format!("only {} conjugation samples", res.samples));
    let unique = (res.statement_matches == 1000) != (res.proof_matches == 1000);
    v.require(
        unique && res.chosen.is_some(),
        format!("statement {} / proof {} of 1000", res.statement_matches, res.proof_matches),
    );
    v.require(res.chosen == Some(res.pinned), format!("pinned {:?} but {:?} matched", res.pinned, res.chosen));
    v.check("P6", Field::Quaternion, 1000);
    v.check("P7", Field::Quaternion, 1000);
    let report = run_suite(Field::Quaternion, SEED, 5);
    v.require(
        report.p6_form.chosen == Some(P6Form::Statement) && report.to_json().contains("\"p6_form\""),
        "report does not record the chosen form",
    );
    v
}

fn c4_commutativity() -> Verdict {
    let mut v = Verdict::new();
    let r = v.check("P8", Field::Gf(5), 1);
    v.require(r.exhaustive, "P8 on gf:5 was not enumerated");
    v.check("P8", Field::Rational, 1000);
    let r = v.check("P9", Field::Quaternion, 100);
    v.require(
        r.first_witness_at.is_some_and(|n| n <= 100),
        format!("P9 first witness at {:?}", r.first_witness_at),
    );
    for field in SAMPLED {
        v.check("P10", field, 1000);
    }
    v
}

fn c5_ratio_laws() -> Verdict {
    let mut v = Verdict::new();
    let laws = [
        "P13a", "P13b", "P13c", "P13d", "P13e", "P14a", "P14b", "P14c", "P14d", "P15a", "P15b",
    ];
    for field in SAMPLED {
        for name in laws {
            if name == "P14c" && !field.is_commutative() {
                continue;
            }
            v.check(name, field, 1000);
        }
    }
    let suite = run_suite(Field::Quaternion, SEED, 1);
    v.require(suite.check("P14c").is_some_and(|c| c.skipped), "P14c not skipped on quaternions");
    v
}

fn c6_solve_round_trip() -> Verdict {
    let mut v = Verdict::new();
    for field in SAMPLED {
        v.check("P16a", field, 1000);
        v.check("P16b", field, 1000);
    }
    v
}

fn c7_constructions() -> Verdict {
    let mut v = Verdict::new();
    for field in SAMPLED {
        v.check("plane_add", field, 500);
        v.check("plane_mul", field, 500);
        v.check("plane_aux_independence", field, 500);
    }
    v
}

fn c8_desargues() -> Verdict {
    let mut v = Verdict::new();
    for field in SAMPLED {
        for mode in [PerspectiveMode::Parallel, PerspectiveMode::Concurrent] {
            let mut good = 0;
            let mut tamper_caught = 0;
            for n in 0..200 {
                let Ok(cfg) = generate_desargues_config(field, SEED + n, mode) else { continue };
                good += (check_desargues(&cfg) == Ok(true)) as usize;
                let tampered = cfg.tamper_c_prime().and_then(|t| check_desargues(&t));
                tamper_caught += (tampered != Ok(true)) as usize;
            }
            v.require(good == 200, format!("{field} {mode:?}: {good}/200 pass"));
            v.require(tamper_caught == 200, format!("{field} {mode:?}: {tamper_caught}/200 tampered caught"));
        }
    }
    v
}

fn c9_axioms() -> Verdict {
    let mut v = Verdict::new();
    let axioms = [
        "add_assoc", "add_comm", "mul_assoc", "distributive", "identities", "inverses",
        "no_zero_divisors", "inverse_involution", "inverse_of_product", "difference_of_inverses",
    ];
    for field in SAMPLED {
        for name in axioms {
            v.check(name, field, 1000);
        }
    }
    v.check("norm_multiplicative", Field::Quaternion, 1000);
    let r = v.check("no_zero_divisors", Field::Gf(5), 1);
    v.require(r.exhaustive, "no_zero_divisors on gf:5 was not enumerated");
    v
}

fn c10_determinism() -> Verdict {
    let mut v = Verdict::new();
    for field in [Field::Rational, Field::Gf(7), Field::Gf(101), Field::Quaternion] {
        let a = run_suite(field, SEED, 20);
        let b = run_suite(field, SEED, 20);
        v.require(
            a.without_timestamp().to_json() == b.without_timestamp().to_json(),
            format!("{field}: reports differ"),
        );
    }
    v
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("degenerate table", c1_degenerate_table),
        ("identity suites P1-P5, P11, P12", c2_identity_suites),
        ("conjugation P6/P7", c3_conjugation),
        ("commutativity P8-P10", c4_commutativity),
        ("ratio laws P13-P15", c5_ratio_laws),
        ("fourth-point round trip P16", c6_solve_round_trip),
        ("geometric/algebraic agreement", c7_constructions),
        ("Desargues checker", c8_desargues),
        ("skew-field axioms", c9_axioms),
        ("determinism", c10_determinism),
    ];
    let mut failed = 0;
    for (n, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let status = if verdict.ok { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {status} {title} ({:.1}s)", n + 1, start.elapsed().as_secs_f64());
        for note in verdict.notes.iter().take(8) {
            println!("    {note}");
        }
        failed += !verdict.ok as usize;
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
