use std::fmt;

/// An element of the prime field GF(p), carrying its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GaloisPrime {
    residue: u64,
    modulus: u64,
}

/// Trial division up to √n.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl GaloisPrime {
    /// The caller guarantees `modulus` is prime; [`crate::Field::gf`] checks it.
    pub(crate) fn new(value: u64, modulus: u64) -> Self {
        GaloisPrime {
            residue: value % modulus,
            modulus,
        }
    }

    pub(crate) fn from_i64(value: i64, modulus: u64) -> Self {
        let m = modulus as i128;
        let r = (value as i128).rem_euclid(m);
        GaloisPrime::new(r as u64, modulus)
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.residue == 0
    }

    pub(crate) fn add(&self, rhs: &Self) -> Self {
        let s = (self.residue as u128 + rhs.residue as u128) % self.modulus as u128;
        GaloisPrime::new(s as u64, self.modulus)
    }

    pub(crate) fn neg(&self) -> Self {
        GaloisPrime::new((self.modulus - self.residue) % self.modulus, self.modulus)
    }

    pub(crate) fn mul(&self, rhs: &Self) -> Self {
        let p = (self.residue as u128 * rhs.residue as u128) % self.modulus as u128;
        GaloisPrime::new(p as u64, self.modulus)
    }

    /// Fermat inverse `x^(p-2)`; `None` for zero.
    pub(crate) fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let mut base = *self;
        let mut exp = self.modulus - 2;
        let mut acc = GaloisPrime::new(1, self.modulus);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        Some(acc)
    }
}

impl fmt::Display for GaloisPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime(101));
        assert!(!is_prime(4));
        assert!(!is_prime(1_000_000));
    }

    #[test]
    fn inverses_mod_seven() {
        // brute force: x * y == 1 (mod 7)
        for x in 1..7u64 {
            let expected = (1..7u64).find(|y| x * y % 7 == 1).unwrap();
            assert_eq!(GaloisPrime::new(x, 7).inv().unwrap().residue(), expected);
        }
        assert!(GaloisPrime::new(0, 7).inv().is_none());
    }

    #[test]
    fn negation_and_product() {
        assert_eq!(GaloisPrime::new(3, 7).neg().residue(), 4);
        assert_eq!(GaloisPrime::new(0, 7).neg().residue(), 0);
        assert_eq!(GaloisPrime::new(3, 5).mul(&GaloisPrime::new(4, 5)).residue(), 2);
        assert_eq!(GaloisPrime::from_i64(-1, 5).residue(), 4);
    }
}
