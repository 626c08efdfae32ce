//! Exact arithmetic over three concrete skew fields behind one element type.
//!
//! [`Field`] names a field instance (ℚ, GF(p) for a prime p, or ℍ(ℚ)) and
//! [`FieldElement`] is a value in one of them. Binary operations check that
//! both operands come from the same instance and fail with
//! [`Error::FieldMismatch`] otherwise; nothing is coerced.

mod gfp;
mod literal;
mod quaternion;
mod rational;

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use gfp::{is_prime, GaloisPrime};
pub use quaternion::RationalQuaternion;
pub use rational::Rational;

/// Bound on numerators and denominators of randomly drawn rationals.
pub const RANDOM_BOUND: i64 = 1000;

/// A field instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Field {
    Rational,
    Gf(u64),
    Quaternion,
}

impl Field {
    /// GF(p); fails unless `p` is prime.
    pub fn gf(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Field::Gf(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn is_commutative(&self) -> bool {
        !matches!(self, Field::Quaternion)
    }

    pub fn zero(&self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        match *self {
            Field::Rational => FieldElement::Rational(n.into()),
            Field::Gf(p) => FieldElement::Gf(GaloisPrime::from_i64(n, p)),
            Field::Quaternion => FieldElement::Quaternion(RationalQuaternion::scalar(n.into())),
        }
    }

    /// Parses an element literal; see the crate README for the grammar.
    pub fn parse(&self, literal: &str) -> Result<FieldElement> {
        literal::parse_element(*self, literal)
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        match *self {
            Field::Rational => FieldElement::Rational(random_rational(rng)),
            Field::Gf(p) => FieldElement::Gf(GaloisPrime::new(rng.gen_range(0..p), p)),
            Field::Quaternion => FieldElement::Quaternion(RationalQuaternion::new(
                random_rational(rng),
                random_rational(rng),
                random_rational(rng),
                random_rational(rng),
            )),
        }
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        loop {
            let x = self.random(rng);
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// A random element of the center z[K].
    pub fn random_central<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        match self {
            Field::Quaternion => {
                FieldElement::Quaternion(RationalQuaternion::scalar(random_rational(rng)))
            }
            _ => self.random(rng),
        }
    }

    /// Every element, for finite fields.
    pub fn elements(&self) -> Option<Vec<FieldElement>> {
        match *self {
            Field::Gf(p) => Some((0..p).map(|r| FieldElement::Gf(GaloisPrime::new(r, p))).collect()),
            _ => None,
        }
    }

    /// Elements used as a spanning set when testing centrality: {1, i, j, k}
    /// for quaternions, {1} otherwise.
    pub fn basis(&self) -> Vec<FieldElement> {
        match self {
            Field::Quaternion => vec![
                self.one(),
                FieldElement::Quaternion(RationalQuaternion::i()),
                FieldElement::Quaternion(RationalQuaternion::j()),
                FieldElement::Quaternion(RationalQuaternion::k()),
            ],
            _ => vec![self.one()],
        }
    }
}

fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let n = rng.gen_range(-RANDOM_BOUND..=RANDOM_BOUND);
    let d = rng.gen_range(1..=RANDOM_BOUND);
    Rational::new(n, d).expect("nonzero denominator")
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => f.write_str("rational"),
            Field::Gf(p) => write!(f, "gf:{p}"),
            Field::Quaternion => f.write_str("quaternion"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "rational" => Ok(Field::Rational),
            "quaternion" => Ok(Field::Quaternion),
            other => match other.strip_prefix("gf:") {
                Some(p) => {
                    let p: u64 = p.parse().map_err(|_| Error::UnknownField(s.to_string()))?;
                    Field::gf(p)
                }
                None => Err(Error::UnknownField(s.to_string())),
            },
        }
    }
}

impl TryFrom<String> for Field {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Field> for String {
    fn from(f: Field) -> String {
        f.to_string()
    }
}

/// One element of a skew field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(Rational),
    Gf(GaloisPrime),
    Quaternion(RationalQuaternion),
}

impl FieldElement {
    pub fn field(&self) -> Field {
        match self {
            FieldElement::Rational(_) => Field::Rational,
            FieldElement::Gf(x) => Field::Gf(x.modulus()),
            FieldElement::Quaternion(_) => Field::Quaternion,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(x) => x.is_zero(),
            FieldElement::Gf(x) => x.is_zero(),
            FieldElement::Quaternion(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.field().one()
    }

    pub fn same_field(&self, other: &Self) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.field().to_string(),
                right: other.field().to_string(),
            })
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        use FieldElement::*;
        Ok(match (self, rhs) {
            (Rational(x), Rational(y)) => Rational(x + y),
            (Gf(x), Gf(y)) if x.modulus() == y.modulus() => Gf(x.add(y)),
            (Quaternion(x), Quaternion(y)) => Quaternion(x.add(y)),
            _ => return Err(self.same_field(rhs).unwrap_err()),
        })
    }

    pub fn neg(&self) -> Self {
        use FieldElement::*;
        match self {
            Rational(x) => Rational(-x),
            Gf(x) => Gf(x.neg()),
            Quaternion(x) => Quaternion(x.neg()),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        use FieldElement::*;
        Ok(match (self, rhs) {
            (Rational(x), Rational(y)) => Rational(x * y),
            (Gf(x), Gf(y)) if x.modulus() == y.modulus() => Gf(x.mul(y)),
            (Quaternion(x), Quaternion(y)) => Quaternion(x.mul(y)),
            _ => return Err(self.same_field(rhs).unwrap_err()),
        })
    }

    pub fn inv(&self) -> Result<Self> {
        use FieldElement::*;
        let r = match self {
            Rational(x) => x.recip().map(Rational),
            Gf(x) => x.inv().map(Gf),
            Quaternion(x) => x.inv().map(Quaternion),
        };
        r.ok_or(Error::DivisionByZero)
    }

    /// `x·y == y·x`.
    pub fn commutes(&self, other: &Self) -> Result<bool> {
        Ok(self.mul(other)? == other.mul(self)?)
    }

    /// Membership in the center z[K].
    pub fn is_central(&self) -> bool {
        match self {
            FieldElement::Quaternion(q) => q.is_scalar(),
            _ => true,
        }
    }

    /// `q⁻¹·p·q`, the conjugate of `self` by `q`.
    pub fn conjugate_by(&self, q: &Self) -> Result<Self> {
        q.inv()?.mul(self)?.mul(q)
    }

    /// Quaternion norm; `None` for commutative instances.
    pub fn norm(&self) -> Option<Rational> {
        match self {
            FieldElement::Quaternion(q) => Some(q.norm()),
            _ => None,
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(x) => x.fmt(f),
            FieldElement::Gf(x) => x.fmt(f),
            FieldElement::Quaternion(x) => x.fmt(f),
        }
    }
}
