use std::fmt;

use super::Rational;

/// A Hamilton quaternion `a + b·i + c·j + d·k` with rational coefficients.
///
/// The norm `a² + b² + c² + d²` is a sum of rational squares, so it vanishes
/// only at zero; this is what makes ℍ(ℚ) a division ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalQuaternion {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl RationalQuaternion {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        RationalQuaternion { a, b, c, d }
    }

    pub fn scalar(a: Rational) -> Self {
        RationalQuaternion::new(a, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn zero() -> Self {
        RationalQuaternion::scalar(Rational::zero())
    }

    pub fn one() -> Self {
        RationalQuaternion::scalar(Rational::one())
    }

    pub fn i() -> Self {
        RationalQuaternion::new(Rational::zero(), Rational::one(), Rational::zero(), Rational::zero())
    }

    pub fn j() -> Self {
        RationalQuaternion::new(Rational::zero(), Rational::zero(), Rational::one(), Rational::zero())
    }

    pub fn k() -> Self {
        RationalQuaternion::new(Rational::zero(), Rational::zero(), Rational::zero(), Rational::one())
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        RationalQuaternion::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_scalar(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn components(&self) -> [&Rational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn norm(&self) -> Rational {
        let sq = |x: &Rational| x * x;
        let ab = &sq(&self.a) + &sq(&self.b);
        let cd = &sq(&self.c) + &sq(&self.d);
        &ab + &cd
    }

    pub fn conjugate(&self) -> Self {
        RationalQuaternion::new(self.a.clone(), -&self.b, -&self.c, -&self.d)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        RationalQuaternion::new(
            &self.a + &rhs.a,
            &self.b + &rhs.b,
            &self.c + &rhs.c,
            &self.d + &rhs.d,
        )
    }

    pub fn neg(&self) -> Self {
        RationalQuaternion::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }

    /// Hamilton product: i² = j² = k² = ijk = −1.
    pub fn mul(&self, rhs: &Self) -> Self {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&rhs.a, &rhs.b, &rhs.c, &rhs.d);
        let a = &(&(a1 * a2) - &(b1 * b2)) - &(&(c1 * c2) + &(d1 * d2));
        let b = &(&(a1 * b2) + &(b1 * a2)) + &(&(c1 * d2) - &(d1 * c2));
        let c = &(&(a1 * c2) - &(b1 * d2)) + &(&(c1 * a2) + &(d1 * b2));
        let d = &(&(a1 * d2) + &(b1 * c2)) + &(&(d1 * a2) - &(c1 * b2));
        RationalQuaternion::new(a, b, c, d)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        RationalQuaternion::new(s * &self.a, s * &self.b, s * &self.c, s * &self.d)
    }

    /// `conjugate / norm`; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        let n = self.norm().recip()?;
        Some(self.conjugate().scale(&n))
    }
}

impl fmt::Display for RationalQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (coef, unit) in self.components().into_iter().zip(["", "i", "j", "k"]) {
            if coef.is_zero() {
                continue;
            }
            let term = match unit {
                "" => coef.to_string(),
                _ if coef.is_one() => unit.to_string(),
                _ if (-coef).is_one() => format!("-{unit}"),
                _ => format!("{coef}{unit}"),
            };
            if !out.is_empty() && !term.starts_with('-') {
                out.push('+');
            }
            out.push_str(&term);
        }
        f.write_str(&out)
    }
}
