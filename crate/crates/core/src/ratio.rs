//! Ratios of two and three points and the cross-ratio of four points on a
//! coordinatized line.
//!
//! Points of the line are elements of the skew field K. Products are never
//! reordered: `r(A:B) = B⁻¹A`, `r(A,B;C) = (B−C)⁻¹(A−C)` and
//!
//! ```text
//! c_r(A,B;C,D) = [(A−D)⁻¹(B−D)]·[(B−C)⁻¹(A−C)]
//! ```
//!
//! Other orderings of the four factors give different points in a
//! noncommutative field; only this one is the cross-ratio.

use std::fmt;

use crate::error::{Error, Result};
use crate::skewfield::{Field, FieldElement};

/// A point of the line extended by ∞, with the convention O⁻¹ = ∞.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtendedPoint {
    Finite(FieldElement),
    Infinity(Field),
}

impl ExtendedPoint {
    pub fn field(&self) -> Field {
        match self {
            ExtendedPoint::Finite(x) => x.field(),
            ExtendedPoint::Infinity(f) => *f,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ExtendedPoint::Infinity(_))
    }

    pub fn finite(&self) -> Option<&FieldElement> {
        match self {
            ExtendedPoint::Finite(x) => Some(x),
            ExtendedPoint::Infinity(_) => None,
        }
    }

    pub fn inv(&self) -> ExtendedPoint {
        match self {
            ExtendedPoint::Finite(x) if x.is_zero() => ExtendedPoint::Infinity(x.field()),
            ExtendedPoint::Finite(x) => ExtendedPoint::Finite(x.inv().expect("nonzero")),
            ExtendedPoint::Infinity(f) => ExtendedPoint::Finite(f.zero()),
        }
    }

    pub fn neg(&self) -> ExtendedPoint {
        match self {
            ExtendedPoint::Finite(x) => ExtendedPoint::Finite(x.neg()),
            inf => inf.clone(),
        }
    }

    /// Parses an element literal, or `inf`.
    pub fn parse(field: Field, literal: &str) -> Result<Self> {
        if literal.trim() == "inf" {
            Ok(ExtendedPoint::Infinity(field))
        } else {
            field.parse(literal).map(ExtendedPoint::Finite)
        }
    }
}

impl From<FieldElement> for ExtendedPoint {
    fn from(x: FieldElement) -> Self {
        ExtendedPoint::Finite(x)
    }
}

impl fmt::Display for ExtendedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedPoint::Finite(x) => x.fmt(f),
            ExtendedPoint::Infinity(_) => f.write_str("inf"),
        }
    }
}

/// Validated arguments of a cross-ratio: one field, at most one ∞, and no
/// three points equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossRatioArgs {
    points: [ExtendedPoint; 4],
}

impl CrossRatioArgs {
    pub fn new(a: ExtendedPoint, b: ExtendedPoint, c: ExtendedPoint, d: ExtendedPoint) -> Result<Self> {
        let points = [a, b, c, d];
        let field = points[0].field();
        if let Some(p) = points.iter().find(|p| p.field() != field) {
            return Err(Error::FieldMismatch {
                left: field.to_string(),
                right: p.field().to_string(),
            });
        }
        if points.iter().filter(|p| p.is_infinity()).count() > 1 {
            return Err(Error::InvalidArgs("at most one argument may be inf".into()));
        }
        for i in 0..4 {
            let equal = points.iter().filter(|p| **p == points[i]).count();
            if equal >= 3 {
                return Err(Error::InvalidArgs("three of the four points are equal".into()));
            }
        }
        Ok(CrossRatioArgs { points })
    }

    pub fn finite(a: &FieldElement, b: &FieldElement, c: &FieldElement, d: &FieldElement) -> Result<Self> {
        CrossRatioArgs::new(a.clone().into(), b.clone().into(), c.clone().into(), d.clone().into())
    }

    pub fn points(&self) -> &[ExtendedPoint; 4] {
        &self.points
    }

    pub fn field(&self) -> Field {
        self.points[0].field()
    }
}

/// `r(A:B) = B⁻¹A`.
pub fn ratio2(a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
    b.inv()?.mul(a)
}

/// `r(A,B;C) = (B−C)⁻¹(A−C)`.
pub fn ratio3(a: &FieldElement, b: &FieldElement, c: &FieldElement) -> Result<FieldElement> {
    b.sub(c)?.inv()?.mul(&a.sub(c)?)
}

/// The cross-ratio `c_r(A,B;C,D)`.
///
/// One ∞ argument selects the reduced forms; a coincident pair selects the
/// fixed values (A=B → I, A=C → O, A=D → ∞, B=C → ∞, B=D → O, C=D → I);
/// otherwise the defining product is evaluated.
pub fn cross_ratio(args: &CrossRatioArgs) -> Result<ExtendedPoint> {
    let field = args.field();
    let [a, b, c, d] = args.points();
    let finite = |p: &ExtendedPoint| p.finite().cloned();
    match (finite(a), finite(b), finite(c), finite(d)) {
        (None, Some(b), Some(c), Some(d)) => right_quotient(&b.sub(&d)?, &b.sub(&c)?),
        (Some(a), None, Some(c), Some(d)) => left_quotient(&a.sub(&d)?, &a.sub(&c)?),
        (Some(a), Some(b), None, Some(d)) => left_quotient(&a.sub(&d)?, &b.sub(&d)?),
        (Some(a), Some(b), Some(c), None) => left_quotient(&b.sub(&c)?, &a.sub(&c)?),
        (Some(a), Some(b), Some(c), Some(d)) => {
            let table = [
                (&a, &b, ExtendedPoint::Finite(field.one())),
                (&a, &c, ExtendedPoint::Finite(field.zero())),
                (&a, &d, ExtendedPoint::Infinity(field)),
                (&b, &c, ExtendedPoint::Infinity(field)),
                (&b, &d, ExtendedPoint::Finite(field.zero())),
                (&c, &d, ExtendedPoint::Finite(field.one())),
            ];
            if let Some((_, _, value)) = table.into_iter().find(|(x, y, _)| x == y) {
                return Ok(value);
            }
            Ok(ExtendedPoint::Finite(cross_ratio_distinct(&a, &b, &c, &d)?))
        }
        _ => unreachable!("validated: at most one infinity"),
    }
}

/// `c_r` of four finite points, through [`CrossRatioArgs`].
pub fn cross_ratio_of(a: &FieldElement, b: &FieldElement, c: &FieldElement, d: &FieldElement) -> Result<ExtendedPoint> {
    cross_ratio(&CrossRatioArgs::finite(a, b, c, d)?)
}

fn cross_ratio_distinct(a: &FieldElement, b: &FieldElement, c: &FieldElement, d: &FieldElement) -> Result<FieldElement> {
    let left = ratio3(b, a, d)?;
    let right = ratio3(a, b, c)?;
    left.mul(&right)
}

// x⁻¹y, with O⁻¹ = ∞.
fn left_quotient(x: &FieldElement, y: &FieldElement) -> Result<ExtendedPoint> {
    if x.is_zero() {
        return Ok(ExtendedPoint::Infinity(x.field()));
    }
    Ok(ExtendedPoint::Finite(x.inv()?.mul(y)?))
}

// x·y⁻¹, with O⁻¹ = ∞.
fn right_quotient(x: &FieldElement, y: &FieldElement) -> Result<ExtendedPoint> {
    if y.is_zero() {
        return Ok(ExtendedPoint::Infinity(y.field()));
    }
    Ok(ExtendedPoint::Finite(x.mul(&y.inv()?)?))
}

/// `[(A−B)⁻¹ − (A−D)⁻¹]·[(A−B)⁻¹ − (A−C)⁻¹]⁻¹`, equal to the cross-ratio on
/// pairwise distinct points.
pub fn cross_ratio_alt(a: &FieldElement, b: &FieldElement, c: &FieldElement, d: &FieldElement) -> Result<FieldElement> {
    let ab = a.sub(b)?.inv()?;
    let ac = a.sub(c)?.inv()?;
    let ad = a.sub(d)?.inv()?;
    ab.sub(&ad)?.mul(&ab.sub(&ac)?.inv()?)
}

/// The unique `D` with `c_r(A,B;C,D) = R`.
///
/// Writing `c_r = r(B,A;D)·r(A,B;C)` and `S = R·r(A,B;C)⁻¹`, the condition
/// `(A−D)⁻¹(B−D) = S` is linear in `D` and gives `D = (A·S − B)(S − I)⁻¹`.
/// `S = I` means the solution is ∞.
pub fn solve_fourth_point(r: &FieldElement, a: &FieldElement, b: &FieldElement, c: &FieldElement) -> Result<FieldElement> {
    for x in [a, b, c] {
        r.same_field(x)?;
    }
    if r.is_zero() || r.is_one() {
        return Err(Error::InvalidRatio);
    }
    if a == b || a == c || b == c {
        return Err(Error::InvalidArgs("A, B, C must be pairwise distinct".into()));
    }
    let field = r.field();
    let s = r.mul(&ratio3(a, b, c)?.inv()?)?;
    let s_minus_one = s.sub(&field.one())?;
    if s_minus_one.is_zero() {
        return Err(Error::InfiniteSolution);
    }
    a.mul(&s)?.sub(b)?.mul(&s_minus_one.inv()?)
}

/// `(−A, −B, −C, −D)`; ∞ is fixed.
pub fn negate_all(points: &[ExtendedPoint; 4]) -> [ExtendedPoint; 4] {
    points.clone().map(|p| p.neg())
}

/// `(A⁻¹, B⁻¹, C⁻¹, D⁻¹)` for nonzero points.
pub fn invert_all(points: &[FieldElement; 4]) -> Result<[FieldElement; 4]> {
    let [a, b, c, d] = points;
    Ok([a.inv()?, b.inv()?, c.inv()?, d.inv()?])
}

/// `r(B:A)`, which equals `r(A:B)⁻¹`.
pub fn ratio2_inverse_law(a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
    ratio2(b, a)
}

/// The three-point ratio under every ordering of its arguments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ratio3Permutations {
    pub abc: FieldElement,
    pub bac: FieldElement,
    pub acb: FieldElement,
    pub cab: FieldElement,
    pub bca: FieldElement,
    pub cba: FieldElement,
}

pub fn ratio3_permutations(a: &FieldElement, b: &FieldElement, c: &FieldElement) -> Result<Ratio3Permutations> {
    if a == b || a == c || b == c {
        return Err(Error::DivisionByZero);
    }
    Ok(Ratio3Permutations {
        abc: ratio3(a, b, c)?,
        bac: ratio3(b, a, c)?,
        acb: ratio3(a, c, b)?,
        cab: ratio3(c, a, b)?,
        bca: ratio3(b, c, a)?,
        cba: ratio3(c, b, a)?,
    })
}
