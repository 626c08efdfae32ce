//! The check catalogue.
//!
//! Each check draws a tuple of field elements, rejects tuples outside its
//! precondition set ([`Outcome::Redraw`]), and compares two exactly
//! evaluated sides. Names `P1`..`P16` follow the property numbering used in
//! the README.

use std::fmt::Display;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::plane::{
    check_desargues, coordinatize, generate_with_rng, geometric_add, geometric_mul, line_through,
    parallel_through, point_at, DesarguesConfig, Intersection, Perspective, PerspectiveMode,
    PlanePoint,
};
use crate::ratio::{cross_ratio, cross_ratio_alt, cross_ratio_of, ratio2, ratio3, solve_fourth_point, CrossRatioArgs, ExtendedPoint};
use crate::skewfield::{Field, FieldElement};
use crate::Error;

use super::{MulOrder, P6Form, MUL_ORDER, P6_FORM};

pub(crate) enum Outcome {
    Redraw,
    Holds,
    Fails { lhs: String, rhs: String },
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Applies {
    All,
    CommutativeOnly,
    NoncommutativeOnly,
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Kind {
    /// Passes iff no sample fails.
    Identity,
    /// Passes iff some sample fails, i.e. a witness exists.
    WitnessSearch,
}

type Draw = fn(Field, &mut ChaCha8Rng) -> Vec<FieldElement>;
type Eval = fn(Field, &[FieldElement]) -> Result<Outcome>;

pub(crate) struct Check {
    pub name: &'static str,
    pub description: &'static str,
    pub applies: Applies,
    pub kind: Kind,
    pub arity: usize,
    /// Exhaustive enumeration over small GF(p) is allowed.
    pub enumerable: bool,
    pub draw: Option<Draw>,
    pub eval: Eval,
}

impl Check {
    pub fn draw(&self, field: Field, rng: &mut ChaCha8Rng) -> Vec<FieldElement> {
        match self.draw {
            Some(draw) => draw(field, rng),
            None => (0..self.arity).map(|_| field.random(rng)).collect(),
        }
    }
}

pub(crate) fn find(name: &str) -> Option<&'static Check> {
    CHECKS.iter().find(|c| c.name == name)
}

pub(crate) fn all() -> &'static [Check] {
    CHECKS
}

fn compare<T: PartialEq + Display>(lhs: T, rhs: T) -> Outcome {
    if lhs == rhs {
        Outcome::Holds
    } else {
        Outcome::Fails {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

fn distinct(xs: &[&FieldElement]) -> bool {
    xs.iter()
        .enumerate()
        .all(|(n, x)| xs[n + 1..].iter().all(|y| x != y))
}

fn nonzero(xs: &[&FieldElement]) -> bool {
    xs.iter().all(|x| !x.is_zero())
}

fn list<T: Display>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join("; "))
}

/// The cross-ratio of four distinct finite points, which is always finite.
fn cr(a: &FieldElement, b: &FieldElement, c: &FieldElement, d: &FieldElement) -> Result<FieldElement> {
    match cross_ratio_of(a, b, c, d)? {
        ExtendedPoint::Finite(x) => Ok(x),
        ExtendedPoint::Infinity(_) => Err(Error::InvalidArgs("unexpected infinite cross-ratio".into())),
    }
}

macro_rules! four {
    ($x:expr) => {{
        let [a, b, c, d] = &$x[..4] else { unreachable!() };
        (a, b, c, d)
    }};
}

macro_rules! three {
    ($x:expr) => {{
        let [a, b, c] = &$x[..3] else { unreachable!() };
        (a, b, c)
    }};
}

macro_rules! two {
    ($x:expr) => {{
        let [a, b] = &$x[..2] else { unreachable!() };
        (a, b)
    }};
}

// ---- skew-field axioms -------------------------------------------------

fn add_assoc(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let (a, b, c) = three!(x);
    Ok(compare(a.add(b)?.add(c)?, a.add(&b.add(c)?)?))
}

fn add_comm(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let (a, b) = two!(x);
    Ok(compare(a.add(b)?, b.add(a)?))
}

fn mul_assoc(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let (a, b, c) = three!(x);
    Ok(compare(a.mul(b)?.mul(c)?, a.mul(&b.mul(c)?)?))
}

fn distributive(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let (a, b, c) = three!(x);
    let sum = b.add(c)?;
    let lhs = [a.mul(&sum)?, sum.mul(a)?];
    let rhs = [a.mul(b)?.add(&a.mul(c)?)?, b.mul(a)?.add(&c.mul(a)?)?];
    Ok(compare(list(&lhs), list(&rhs)))
}

fn identities(field: Field, x: &[FieldElement]) -> Result<Outcome> {
    let a = &x[0];
    let (zero, one) = (field.zero(), field.one());
    let lhs = [zero.add(a)?, a.add(&zero)?, one.mul(a)?, a.mul(&one)?];
    Ok(compare(list(&lhs), list(&[a, a, a, a])))
}

fn inverses(field: Field, x: &[FieldElement]) -> Result<Outcome> {
    let a = &x[0];
    let mut lhs = vec![a.add(&a.neg())?];
    let mut rhs = vec![field.zero()];
    if !a.is_zero() {
        let inv = a.inv()?;
        lhs.extend([a.mul(&inv)?, inv.mul(a)?]);
        rhs.extend([field.one(), field.one()]);
    }
    Ok(compare(list(&lhs), list(&rhs)))
}

fn no_zero_divisors(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let (a, b) = two!(x);
    let product = a.mul(b)?;
    if product.is_zero() && !a.is_zero() && !b.is_zero() {
        return Ok(Outcome::Fails {
            lhs: product.to_string(),
            rhs: "a nonzero product".into(),
        });
    }
    Ok(Outcome::Holds)
}

fn inverse_involution(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let a = &x[0];
    if a.is_zero() {
        return Ok(Outcome::Redraw);
    }
    Ok(compare(a.inv()?.inv()?, a.clone()))
}

fn inverse_of_product(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let (a, b) = two!(x);
    if !nonzero(&[a, b]) {
        return Ok(Outcome::Redraw);
    }
    Ok(compare(a.mul(b)?.inv()?, b.inv()?.mul(&a.inv()?)?))
}

fn difference_of_inverses(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let (a, b) = two!(x);
    if !nonzero(&[a, b]) {
        return Ok(Outcome::Redraw);
    }
    let lhs = a.inv()?.sub(&b.inv()?)?;
    let rhs = b.inv()?.mul(&b.sub(a)?)?.mul(&a.inv()?)?;
    Ok(compare(lhs, rhs))
}

fn norm_multiplicative(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let (a, b) = two!(x);
    let (Some(na), Some(nb), Some(nab)) = (a.norm(), b.norm(), a.mul(b)?.norm()) else {
        return Ok(Outcome::Fails {
            lhs: "norm undefined".into(),
            rhs: "quaternion norm".into(),
        });
    };
    Ok(compare(nab, &na * &nb))
}

const CENTER_PROBES: usize = 50;

fn draw_center(field: Field, rng: &mut ChaCha8Rng) -> Vec<FieldElement> {
    let x = if rng.gen_bool(0.5) {
        field.random_central(rng)
    } else {
        field.random(rng)
    };
    std::iter::once(x)
        .chain((0..CENTER_PROBES).map(|_| field.random(rng)))
        .collect()
}

fn center_matches_sampling(field: Field, x: &[FieldElement]) -> Result<Outcome> {
    let a = &x[0];
    let mut brute = true;
    for s in field.basis().iter().chain(&x[1..]) {
        brute &= a.commutes(s)?;
    }
    Ok(compare(a.is_central(), brute))
}

// ---- cross-ratio identities --------------------------------------------

fn degenerate_table(field: Field, x: &[FieldElement]) -> Result<Outcome> {
    let (p, q, s) = three!(x);
    if !distinct(&[p, q, s]) {
        return Ok(Outcome::Redraw);
    }
    let cases = [(p, p, q, s), (p, q, p, s), (p, q, s, p), (p, q, q, s), (p, q, s, q), (p, q, s, s)];
    let mut got = Vec::new();
    for (a, b, c, d) in cases {
        got.push(cross_ratio_of(a, b, c, d)?);
    }
    let one = ExtendedPoint::Finite(field.one());
    let zero = ExtendedPoint::Finite(field.zero());
    let inf = ExtendedPoint::Infinity(field);
    let expected = [one.clone(), zero.clone(), inf.clone(), inf, zero, one];
    Ok(compare(list(&got), list(&expected)))
}

fn p1_inverse_law(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let (a, b, c, d) = four!(x);
    if !distinct(&[a, b, c, d]) {
        return Ok(Outcome::Redraw);
    }
    Ok(compare(cr(a, b, d, c)?, cr(a, b, c, d)?.inv()?))
}

fn p2_negation_law(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let (a, b, c, d) = four!(x);
    if !distinct(&[a, b, c, d]) {
        return Ok(Outcome::Redraw);
    }
    Ok(compare(cr(&a.neg(), &b.neg(), &c.neg(), &d.neg())?, cr(a, b, d, c)?))
}

fn p3_alternative_formula(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let (a, b, c, d) = four!(x);
    if !distinct(&[a, b, c, d]) {
        return Ok(Outcome::Redraw);
    }
    Ok(compare(cross_ratio_alt(a, b, c, d)?, cr(a, b, c, d)?))
}

fn p4_complement(field: Field, x: &[FieldElement]) -> Result<Outcome> {
    let (a, b, c, d) = four!(x);
    if !distinct(&[a, b, c, d]) {
        return Ok(Outcome::Redraw);
    }
    Ok(compare(field.one().sub(&cr(a, b, c, d)?)?, cr(a, c, b, d)?))
}

/// Distinct points whose cross-ratio avoids O and I.
fn generic_cross_ratio(x: &[FieldElement]) -> Result<Option<FieldElement>> {
    let (a, b, c, d) = four!(x);
    if !distinct(&[a, b, c, d]) {
        return Ok(None);
    }
    let r = cr(a, b, c, d)?;
    Ok((!r.is_zero() && !r.is_one()).then_some(r))
}

fn p5a(field: Field, x: &[FieldElement]) -> Result<Outcome> {
    let Some(r) = generic_cross_ratio(x)? else { return Ok(Outcome::Redraw) };
    let (a, b, c, d) = four!(x);
    Ok(compare(cr(a, d, b, c)?, field.one().sub(&r.inv()?)?))
}

fn p5b(field: Field, x: &[FieldElement]) -> Result<Outcome> {
    let Some(r) = generic_cross_ratio(x)? else { return Ok(Outcome::Redraw) };
    let (a, b, c, d) = four!(x);
    Ok(compare(cr(a, c, d, b)?, field.one().sub(&r)?.inv()?))
}

fn p5c(field: Field, x: &[FieldElement]) -> Result<Outcome> {
    let Some(r) = generic_cross_ratio(x)? else { return Ok(Outcome::Redraw) };
    let (a, b, c, d) = four!(x);
    Ok(compare(cr(a, d, c, b)?, r.sub(&field.one())?.inv()?.mul(&r)?))
}

/// `c_r(A⁻¹,B⁻¹;C⁻¹,D⁻¹)` together with `A·X·A⁻¹` for both candidate `X`.
pub(crate) fn conjugation_sides(
    a: &FieldElement,
    b: &FieldElement,
    c: &FieldElement,
    d: &FieldElement,
) -> Result<Option<(FieldElement, FieldElement, FieldElement)>> {
    if !distinct(&[a, b, c, d]) || !nonzero(&[a, b, c, d]) {
        return Ok(None);
    }
    let lhs = cr(&a.inv()?, &b.inv()?, &c.inv()?, &d.inv()?)?;
    let conj = |x: FieldElement| -> Result<FieldElement> { a.mul(&x)?.mul(&a.inv()?) };
    let statement = conj(cr(a, b, c, d)?)?;
    let proof = conj(cr(a, c, b, d)?)?;
    Ok(Some((lhs, statement, proof)))
}

fn pinned_x(a: &FieldElement, b: &FieldElement, c: &FieldElement, d: &FieldElement) -> Result<FieldElement> {
    match P6_FORM {
        P6Form::Statement => cr(a, b, c, d),
        P6Form::Proof => cr(a, c, b, d),
    }
}

fn p6_conjugation(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let (a, b, c, d) = four!(x);
    let Some((lhs, statement, proof)) = conjugation_sides(a, b, c, d)? else {
        return Ok(Outcome::Redraw);
    };
    let rhs = match P6_FORM {
        P6Form::Statement => statement,
        P6Form::Proof => proof,
    };
    Ok(compare(lhs, rhs))
}

fn draw_central_first(field: Field, rng: &mut ChaCha8Rng) -> Vec<FieldElement> {
    let mut v = vec![field.random_central(rng)];
    v.extend((0..3).map(|_| field.random(rng)));
    v
}

fn p7_central_collapse(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let (a, b, c, d) = four!(x);
    if !a.is_central() {
        return Ok(Outcome::Redraw);
    }
    let Some((lhs, _, _)) = conjugation_sides(a, b, c, d)? else {
        return Ok(Outcome::Redraw);
    };
    Ok(compare(lhs, pinned_x(a, b, c, d)?))
}

fn swapped_pairs(x: &[FieldElement]) -> Result<Option<(FieldElement, FieldElement)>> {
    let (a, b, c, d) = four!(x);
    if !distinct(&[a, b, c, d]) {
        return Ok(None);
    }
    Ok(Some((cr(a, b, c, d)?, cr(b, a, d, c)?)))
}

fn p8_commutative_symmetry(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let Some((l, r)) = swapped_pairs(x)? else { return Ok(Outcome::Redraw) };
    Ok(compare(l, r))
}

fn p9_noncommutative_witness(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let Some((l, r)) = swapped_pairs(x)? else { return Ok(Outcome::Redraw) };
    Ok(compare(l, r))
}

/// For quaternions, plant `D` so that `r(B,A;D)` lies in the centralizer
/// `ℚ + ℚ·r(A,B;C)` of `r(A,B;C)`; random draws almost never commute.
fn draw_commuting_ratios(field: Field, rng: &mut ChaCha8Rng) -> Vec<FieldElement> {
    let (a, b, c) = (field.random(rng), field.random(rng), field.random(rng));
    if field.is_commutative() {
        return vec![a.clone(), b, c, field.random(rng)];
    }
    let mut planted = || -> Result<FieldElement> {
        let r2 = ratio3(&a, &b, &c)?;
        let alpha = field.random_central(rng);
        let beta = if rng.gen_bool(0.25) { field.zero() } else { field.random_central(rng) };
        let r1 = alpha.add(&beta.mul(&r2)?)?;
        // (A−D)⁻¹(B−D) = R₁  ⟺  D·(R₁ − I) = A·R₁ − B
        a.mul(&r1)?.sub(&b)?.mul(&r1.sub(&field.one())?.inv()?)
    };
    let d = planted().unwrap_or_else(|_| field.zero());
    vec![a.clone(), b.clone(), c.clone(), d]
}

fn p10_center_conditions(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let (a, b, c, d) = four!(x);
    if !distinct(&[a, b, c, d]) {
        return Ok(Outcome::Redraw);
    }
    if !ratio3(b, a, d)?.commutes(&ratio3(a, b, c)?)? {
        return Ok(Outcome::Redraw);
    }
    Ok(compare(cr(a, b, c, d)?, cr(b, a, d, c)?))
}

fn p11_factorization(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let (a, b, c, d) = four!(x);
    if !distinct(&[a, b, c, d]) {
        return Ok(Outcome::Redraw);
    }
    Ok(compare(cr(a, b, c, d)?, ratio3(b, a, d)?.mul(&ratio3(a, b, c)?)?))
}

fn p12_infinity_reductions(field: Field, x: &[FieldElement]) -> Result<Outcome> {
    let (a, b, c, d) = four!(x);
    if !distinct(&[a, b, c, d]) {
        return Ok(Outcome::Redraw);
    }
    let inf = ExtendedPoint::Infinity(field);
    let f = |p: &FieldElement| ExtendedPoint::Finite(p.clone());
    let eval = |p: [ExtendedPoint; 4]| -> Result<ExtendedPoint> {
        let [p0, p1, p2, p3] = p;
        cross_ratio(&CrossRatioArgs::new(p0, p1, p2, p3)?)
    };
    let lhs = [
        eval([inf.clone(), f(b), f(c), f(d)])?,
        eval([f(a), inf.clone(), f(c), f(d)])?,
        eval([f(a), f(b), inf.clone(), f(d)])?,
        eval([f(a), f(b), f(c), inf])?,
    ];
    let rhs = [
        f(&b.sub(d)?.mul(&b.sub(c)?.inv()?)?),
        f(&ratio3(c, d, a)?),
        f(&ratio3(b, a, d)?),
        f(&ratio3(a, b, c)?),
    ];
    Ok(compare(list(&lhs), list(&rhs)))
}

// ---- ratio laws --------------------------------------------------------

fn p13a(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let (a, b, c) = three!(x);
    if c.is_zero() {
        return Ok(Outcome::Redraw);
    }
    Ok(compare(ratio2(&a.add(b)?, c)?, ratio2(a, c)?.add(&ratio2(b, c)?)?))
}

fn p13b(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let (a, b, c) = three!(x);
    if c.is_zero() {
        return Ok(Outcome::Redraw);
    }
    Ok(compare(ratio2(&a.mul(b)?, c)?, ratio2(a, c)?.mul(b)?))
}

fn p13c(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let (a, b, c) = three!(x);
    if !nonzero(&[b, c]) {
        return Ok(Outcome::Redraw);
    }
    Ok(compare(ratio2(a, &b.mul(c)?)?, c.inv()?.mul(&ratio2(a, c)?)?))
}

fn p13d(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let (a, b) = two!(x);
    if !nonzero(&[a, b]) {
        return Ok(Outcome::Redraw);
    }
    let symmetric = ratio2(a, b)? == ratio2(b, a)?;
    if symmetric == (a == b) {
        return Ok(Outcome::Holds);
    }
    Ok(Outcome::Fails {
        lhs: format!("r(A:B)=r(B:A) is {symmetric}"),
        rhs: format!("A=B is {}", a == b),
    })
}

fn p13e(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let (a, b) = two!(x);
    if !nonzero(&[a, b]) {
        return Ok(Outcome::Redraw);
    }
    Ok(compare(ratio2(a, b)?.inv()?, ratio2(b, a)?))
}

fn p14a(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let (a, b, c) = three!(x);
    if b == c {
        return Ok(Outcome::Redraw);
    }
    Ok(compare(ratio3(&a.neg(), &b.neg(), &c.neg())?, ratio3(a, b, c)?))
}

fn inverted_ratio(x: &[FieldElement]) -> Result<Option<FieldElement>> {
    let (a, b, c) = three!(x);
    if !distinct(&[a, b, c]) || !nonzero(&[a, b, c]) {
        return Ok(None);
    }
    ratio3(&a.inv()?, &b.inv()?, &c.inv()?).map(Some)
}

fn p14b(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let Some(lhs) = inverted_ratio(x)? else { return Ok(Outcome::Redraw) };
    let (a, b, c) = three!(x);
    Ok(compare(lhs, b.mul(&ratio3(a, b, c)?)?.mul(&a.inv()?)?))
}

fn p14c(field: Field, x: &[FieldElement]) -> Result<Outcome> {
    let Some(lhs) = inverted_ratio(x)? else { return Ok(Outcome::Redraw) };
    let (a, b, c) = three!(x);
    Ok(compare(lhs, ratio3(a, b, c)?.mul(&ratio3(b, a, &field.zero())?)?))
}

fn p14d(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let (a, b, c) = three!(x);
    if !distinct(&[a, b, c]) {
        return Ok(Outcome::Redraw);
    }
    Ok(compare(ratio3(a, b, c)?.inv()?, ratio3(b, a, c)?))
}

fn p15a(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let (b, x1, x2) = three!(x);
    if b.is_zero() || x1 == x2 {
        return Ok(Outcome::Redraw);
    }
    let injective = ratio2(x1, b)? != ratio2(x2, b)?;
    let solved = ratio2(&b.mul(x1)?, b)?;
    Ok(compare(
        format!("injective={injective} r(B·R:B)={solved}"),
        format!("injective=true r(B·R:B)={x1}"),
    ))
}

fn p15b(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let (b, c, x1, x2) = four!(x);
    if b == c || x1 == x2 {
        return Ok(Outcome::Redraw);
    }
    let injective = ratio3(x1, b, c)? != ratio3(x2, b, c)?;
    // r(X,B;C) = R  ⟺  X = C + (B−C)·R
    let preimage = c.add(&b.sub(c)?.mul(x1)?)?;
    let solved = ratio3(&preimage, b, c)?;
    Ok(compare(
        format!("injective={injective} r(X,B;C)={solved}"),
        format!("injective=true r(X,B;C)={x1}"),
    ))
}

fn p16a_round_trip(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let (r, a, b, c) = four!(x);
    if r.is_zero() || r.is_one() || !distinct(&[a, b, c]) {
        return Ok(Outcome::Redraw);
    }
    let d = match solve_fourth_point(r, a, b, c) {
        Err(Error::InfiniteSolution) => return Ok(Outcome::Redraw),
        other => other?,
    };
    let again = solve_fourth_point(r, a, b, c)?;
    let back = cross_ratio_of(a, b, c, &d)?;
    Ok(compare(
        format!("c_r={back} resolve={again}"),
        format!("c_r={r} resolve={d}"),
    ))
}

fn p16b_uniqueness(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let Some(r) = generic_cross_ratio(x)? else { return Ok(Outcome::Redraw) };
    let (a, b, c, d) = four!(x);
    Ok(compare(solve_fourth_point(&r, a, b, c)?, d.clone()))
}

// ---- plane -------------------------------------------------------------

fn point(x: &FieldElement, y: &FieldElement) -> PlanePoint {
    PlanePoint { x: x.clone(), y: y.clone() }
}

fn plane_incidence(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let (p, q, r) = (point(&x[0], &x[1]), point(&x[2], &x[3]), point(&x[4], &x[5]));
    if p == q {
        return Ok(Outcome::Redraw);
    }
    let l = line_through(&p, &q)?;
    let m = parallel_through(&l, &r)?;
    let on_l = l.contains(&r)?;
    let facts = [
        l.contains(&p)?,
        l.contains(&q)?,
        line_through(&q, &p)? == l,
        m.contains(&r)?,
        m.is_parallel(&l),
        parallel_through(&m, &r)? == m,
        // Playfair: through r off l, the parallel misses l; through r on l it is l
        if on_l { m == l } else { crate::plane::intersect(&l, &m)? == Intersection::Parallel },
    ];
    Ok(compare(list(&facts), list(&[true; 7])))
}

fn plane_coordinates(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let (o, i, t) = (point(&x[0], &x[1]), point(&x[2], &x[3]), &x[4]);
    if o == i {
        return Ok(Outcome::Redraw);
    }
    let p = point_at(&o, &i, t)?;
    let on_line = line_through(&o, &i)?.contains(&p)?;
    let back = coordinatize(&o, &i, &p)?;
    let again = point_at(&o, &i, &back)?;
    Ok(compare(
        format!("on_line={on_line} t={back} P={again}"),
        format!("on_line=true t={t} P={p}"),
    ))
}

struct PlaneCase {
    o: PlanePoint,
    i: PlanePoint,
    a: PlanePoint,
    b: PlanePoint,
    ta: FieldElement,
    tb: FieldElement,
}

fn plane_case(x: &[FieldElement]) -> Result<Option<PlaneCase>> {
    let (o, i) = (point(&x[0], &x[1]), point(&x[2], &x[3]));
    if o == i {
        return Ok(None);
    }
    let (ta, tb) = (x[4].clone(), x[5].clone());
    let a = point_at(&o, &i, &ta)?;
    let b = point_at(&o, &i, &tb)?;
    Ok(Some(PlaneCase { o, i, a, b, ta, tb }))
}

fn aux_points(x: &[FieldElement], line_of: &PlaneCase) -> Result<Option<Vec<PlanePoint>>> {
    let base = line_through(&line_of.o, &line_of.i)?;
    let mut aux: Vec<PlanePoint> = Vec::new();
    for pair in x.chunks(2) {
        let p = point(&pair[0], &pair[1]);
        if base.contains(&p)? || aux.contains(&p) {
            return Ok(None);
        }
        aux.push(p);
    }
    Ok(Some(aux))
}

fn plane_add(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let Some(case) = plane_case(x)? else { return Ok(Outcome::Redraw) };
    let Some(aux) = aux_points(&x[6..8], &case)? else { return Ok(Outcome::Redraw) };
    let c = geometric_add(&case.o, &case.i, &case.a, &case.b, &aux[0])?;
    Ok(compare(coordinatize(&case.o, &case.i, &c.result)?, case.ta.add(&case.tb)?))
}

pub(crate) fn construction_product(x: &[FieldElement]) -> Result<Option<(FieldElement, FieldElement, FieldElement)>> {
    let Some(case) = plane_case(x)? else { return Ok(None) };
    let Some(aux) = aux_points(&x[6..8], &case)? else { return Ok(None) };
    let c = geometric_mul(&case.o, &case.i, &case.a, &case.b, &aux[0])?;
    let got = coordinatize(&case.o, &case.i, &c.result)?;
    Ok(Some((got, case.ta.mul(&case.tb)?, case.tb.mul(&case.ta)?)))
}

fn plane_mul(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let Some((got, ab, ba)) = construction_product(x)? else { return Ok(Outcome::Redraw) };
    let expected = match MUL_ORDER {
        MulOrder::AB => ab,
        MulOrder::BA => ba,
    };
    Ok(compare(got, expected))
}

const AUX_POINTS: usize = 10;

fn plane_aux_independence(_: Field, x: &[FieldElement]) -> Result<Outcome> {
    let Some(case) = plane_case(x)? else { return Ok(Outcome::Redraw) };
    let Some(aux) = aux_points(&x[6..6 + 2 * AUX_POINTS], &case)? else { return Ok(Outcome::Redraw) };
    let mut sums = Vec::new();
    let mut products = Vec::new();
    for b1 in &aux {
        sums.push(geometric_add(&case.o, &case.i, &case.a, &case.b, b1)?.result);
        products.push(geometric_mul(&case.o, &case.i, &case.a, &case.b, b1)?.result);
    }
    let uniform = |v: &[PlanePoint]| v.iter().all(|p| *p == v[0]);
    if uniform(&sums) && uniform(&products) {
        return Ok(Outcome::Holds);
    }
    Ok(Outcome::Fails {
        lhs: format!("sums {} products {}", list(&sums), list(&products)),
        rhs: "one point each".into(),
    })
}

fn flatten(cfg: &DesarguesConfig) -> Vec<FieldElement> {
    let mut v = Vec::new();
    for p in cfg.points() {
        v.extend([p.x.clone(), p.y.clone()]);
    }
    if let Perspective::Center(p) = &cfg.perspective {
        v.extend([p.x.clone(), p.y.clone()]);
    }
    v
}

fn unflatten(x: &[FieldElement]) -> DesarguesConfig {
    let p = |n: usize| point(&x[2 * n], &x[2 * n + 1]);
    DesarguesConfig {
        a: p(0),
        b: p(1),
        c: p(2),
        a2: p(3),
        b2: p(4),
        c2: p(5),
        perspective: if x.len() == 14 { Perspective::Center(p(6)) } else { Perspective::ParallelAxis },
    }
}

fn draw_desargues(field: Field, rng: &mut ChaCha8Rng, mode: PerspectiveMode) -> Vec<FieldElement> {
    generate_with_rng(field, rng, mode).map(|c| flatten(&c)).unwrap_or_default()
}

fn desargues(x: &[FieldElement]) -> Result<Outcome> {
    if x.is_empty() {
        return Ok(Outcome::Fails {
            lhs: "generation failed".into(),
            rhs: "a configuration".into(),
        });
    }
    let cfg = unflatten(x);
    Ok(compare(check_desargues(&cfg)?, true))
}

// ---- catalogue ---------------------------------------------------------

macro_rules! check {
    ($name:expr, $desc:expr, $applies:ident, $kind:ident, $arity:expr, $enumerable:expr, $draw:expr, $eval:expr) => {
        Check {
            name: $name,
            description: $desc,
            applies: Applies::$applies,
            kind: Kind::$kind,
            arity: $arity,
            enumerable: $enumerable,
            draw: $draw,
            eval: $eval,
        }
    };
}

static CHECKS: &[Check] = &[
    check!("add_assoc", "(x+y)+z = x+(y+z)", All, Identity, 3, true, None, add_assoc),
    check!("add_comm", "x+y = y+x", All, Identity, 2, true, None, add_comm),
    check!("mul_assoc", "(xy)z = x(yz)", All, Identity, 3, true, None, mul_assoc),
    check!("distributive", "x(y+z) = xy+xz and (y+z)x = yx+zx", All, Identity, 3, true, None, distributive),
    check!("identities", "0+x = x+0 = x and 1x = x1 = x", All, Identity, 1, true, None, identities),
    check!("inverses", "x+(-x) = 0 and x x^-1 = x^-1 x = 1", All, Identity, 1, true, None, inverses),
    check!("no_zero_divisors", "xy = 0 implies x = 0 or y = 0", All, Identity, 2, true, None, no_zero_divisors),
    check!("inverse_involution", "(x^-1)^-1 = x", All, Identity, 1, true, None, inverse_involution),
    check!("inverse_of_product", "(ab)^-1 = b^-1 a^-1", All, Identity, 2, true, None, inverse_of_product),
    check!("difference_of_inverses", "X^-1 - Y^-1 = Y^-1 (Y-X) X^-1", All, Identity, 2, true, None, difference_of_inverses),
    check!("norm_multiplicative", "N(pq) = N(p) N(q)", NoncommutativeOnly, Identity, 2, true, None, norm_multiplicative),
    check!("center_matches_sampling", "is_central(x) agrees with commuting against the basis and 50 samples", All, Identity, 1 + CENTER_PROBES, false, Some(draw_center), center_matches_sampling),
    check!("degenerate_table", "A=B: I, A=C: O, A=D: inf, B=C: inf, B=D: O, C=D: I", All, Identity, 3, true, None, degenerate_table),
    check!("P1", "c_r(A,B;D,C) = c_r(A,B;C,D)^-1", All, Identity, 4, true, None, p1_inverse_law),
    check!("P2", "c_r(-A,-B;-C,-D) = c_r(A,B;D,C)", All, Identity, 4, true, None, p2_negation_law),
    check!("P3", "alternative formula equals c_r(A,B;C,D)", All, Identity, 4, true, None, p3_alternative_formula),
    check!("P4", "I - c_r(A,B;C,D) = c_r(A,C;B,D)", All, Identity, 4, true, None, p4_complement),
    check!("P5a", "c_r(A,D;B,C) = I - c_r(A,B;C,D)^-1", All, Identity, 4, true, None, p5a),
    check!("P5b", "c_r(A,C;D,B) = (I - c_r(A,B;C,D))^-1", All, Identity, 4, true, None, p5b),
    check!("P5c", "c_r(A,D;C,B) = (c_r(A,B;C,D) - I)^-1 c_r(A,B;C,D)", All, Identity, 4, true, None, p5c),
    check!("P6", "c_r(A^-1,B^-1;C^-1,D^-1) = A c_r(A,B;C,D) A^-1", All, Identity, 4, true, None, p6_conjugation),
    check!("P7", "central A: c_r(A^-1,B^-1;C^-1,D^-1) = c_r(A,B;C,D)", All, Identity, 4, true, Some(draw_central_first), p7_central_collapse),
    check!("P8", "c_r(A,B;C,D) = c_r(B,A;D,C) in a commutative field", CommutativeOnly, Identity, 4, true, None, p8_commutative_symmetry),
    check!("P9", "some tuple has c_r(A,B;C,D) != c_r(B,A;D,C)", NoncommutativeOnly, WitnessSearch, 4, true, None, p9_noncommutative_witness),
    check!("P10", "commuting r(B,A;D), r(A,B;C) give c_r(A,B;C,D) = c_r(B,A;D,C)", All, Identity, 4, true, Some(draw_commuting_ratios), p10_center_conditions),
    check!("P11", "c_r(A,B;C,D) = r(B,A;D) r(A,B;C)", All, Identity, 4, true, None, p11_factorization),
    check!("P12", "one-infinity forms reduce to ratio expressions", All, Identity, 4, true, None, p12_infinity_reductions),
    check!("P13a", "r(A+B:C) = r(A:C) + r(B:C)", All, Identity, 3, true, None, p13a),
    check!("P13b", "r(AB:C) = r(A:C) B", All, Identity, 3, true, None, p13b),
    check!("P13c", "r(A:BC) = C^-1 r(A:C)", All, Identity, 3, true, None, p13c),
    check!("P13d", "r(A:B) = r(B:A) iff A = B", All, Identity, 2, true, None, p13d),
    check!("P13e", "r(A:B)^-1 = r(B:A)", All, Identity, 2, true, None, p13e),
    check!("P14a", "r(-A,-B;-C) = r(A,B;C)", All, Identity, 3, true, None, p14a),
    check!("P14b", "r(A^-1,B^-1;C^-1) = B r(A,B;C) A^-1", All, Identity, 3, true, None, p14b),
    check!("P14c", "r(A^-1,B^-1;C^-1) = r(A,B;C) r(B,A;O) in a commutative field", CommutativeOnly, Identity, 3, true, None, p14c),
    check!("P14d", "r(A,B;C)^-1 = r(B,A;C)", All, Identity, 3, true, None, p14d),
    check!("P15a", "X -> r(X:B) is injective and X = B R solves r(X:B) = R", All, Identity, 3, true, None, p15a),
    check!("P15b", "X -> r(X,B;C) is injective and X = C + (B-C) R solves r(X,B;C) = R", All, Identity, 4, true, None, p15b),
    check!("P16a", "c_r(A,B;C,solve(R,A,B,C)) = R, and solving again gives the same D", All, Identity, 4, true, None, p16a_round_trip),
    check!("P16b", "solve(c_r(A,B;C,D),A,B,C) = D", All, Identity, 4, true, None, p16b_uniqueness),
    check!("plane_incidence", "unique joining line and Playfair parallel", All, Identity, 6, true, None, plane_incidence),
    check!("plane_coordinates", "coordinatize and point_at are inverse", All, Identity, 5, true, None, plane_coordinates),
    check!("plane_add", "the addition construction realizes a+b", All, Identity, 8, true, None, plane_add),
    check!("plane_mul", "the multiplication construction realizes a*b", All, Identity, 8, true, None, plane_mul),
    check!("plane_aux_independence", "constructions agree across 10 auxiliary points", All, Identity, 6 + 2 * AUX_POINTS, false, None, plane_aux_independence),
    check!("desargues_parallel", "generated parallel-mode configurations satisfy AC || A'C'", All, Identity, 12, false, Some(|f, r| draw_desargues(f, r, PerspectiveMode::Parallel)), |_, x| desargues(x)),
    check!("desargues_concurrent", "generated concurrent-mode configurations satisfy AC || A'C'", All, Identity, 14, false, Some(|f, r| draw_desargues(f, r, PerspectiveMode::Concurrent)), |_, x| desargues(x)),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        for (n, c) in CHECKS.iter().enumerate() {
            assert!(CHECKS[n + 1..].iter().all(|d| d.name != c.name), "{}", c.name);
        }
    }

    #[test]
    fn planted_commuting_ratios_commute() {
        use rand::SeedableRng;
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut accepted = 0;
        for _ in 0..50 {
            let x = draw_commuting_ratios(Field::Quaternion, &mut rng);
            if let Outcome::Holds = p10_center_conditions(Field::Quaternion, &x).unwrap() {
                accepted += 1;
            }
        }
        assert!(accepted >= 45, "{accepted}");
    }
}
