//! The library against arithmetic it does not share code with: plain `u64`
//! modular arithmetic for GF(p), and 4×4 rational matrices for ℍ(ℚ).

use num::{BigRational, One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use skewratio::ratio::cross_ratio_of;
use skewratio::{solve_fourth_point, ExtendedPoint, Field, FieldElement};

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// In a commutative field c_r(a,b;c,d) = (b−d)(a−c) / ((a−d)(b−c)).
fn gf_cross_ratio(p: u64, [a, b, c, d]: [u64; 4]) -> u64 {
    let sub = |x: u64, y: u64| (x + p - y) % p;
    let num = sub(b, d) * sub(a, c) % p;
    let den = sub(a, d) * sub(b, c) % p;
    num * pow_mod(den, p - 2, p) % p
}

#[test]
fn gf7_cross_ratio_matches_modular_arithmetic() {
    let field = Field::Gf(7);
    let el = |n: u64| field.from_i64(n as i64);
    for code in 0..7u64.pow(4) {
        let t = [code % 7, code / 7 % 7, code / 49 % 7, code / 343];
        if (0..4).any(|i| (i + 1..4).any(|j| t[i] == t[j])) {
            continue;
        }
        let got = cross_ratio_of(&el(t[0]), &el(t[1]), &el(t[2]), &el(t[3])).unwrap();
        assert_eq!(got, ExtendedPoint::Finite(el(gf_cross_ratio(7, t))), "{t:?}");
    }
}

type Matrix = [[BigRational; 4]; 4];

fn q(a: &BigRational, b: &BigRational, c: &BigRational, d: &BigRational) -> Matrix {
    // left multiplication by a + bi + cj + dk on the basis (1, i, j, k)
    let n = |x: &BigRational| -x;
    [
        [a.clone(), n(b), n(c), n(d)],
        [b.clone(), a.clone(), n(d), c.clone()],
        [c.clone(), d.clone(), a.clone(), n(b)],
        [d.clone(), n(c), b.clone(), a.clone()],
    ]
}

fn mat_mul(x: &Matrix, y: &Matrix) -> Matrix {
    std::array::from_fn(|r| {
        std::array::from_fn(|c| (0..4).fold(BigRational::zero(), |acc, k| acc + &x[r][k] * &y[k][c]))
    })
}

fn to_matrix(x: &FieldElement) -> Matrix {
    let FieldElement::Quaternion(h) = x else { panic!("quaternion expected") };
    let [a, b, c, d] = h.components().map(|r| r.to_string().parse::<BigRational>().unwrap());
    q(&a, &b, &c, &d)
}

#[test]
fn quaternion_product_matches_matrix_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let x = Field::Quaternion.random(&mut rng);
        let y = Field::Quaternion.random(&mut rng);
        assert_eq!(to_matrix(&x.mul(&y).unwrap()), mat_mul(&to_matrix(&x), &to_matrix(&y)));
        if !x.is_zero() {
            let id: Matrix = std::array::from_fn(|r| {
                std::array::from_fn(|c| if r == c { BigRational::one() } else { BigRational::zero() })
            });
            assert_eq!(mat_mul(&to_matrix(&x), &to_matrix(&x.inv().unwrap())), id);
        }
    }
}

#[test]
fn quaternion_cross_ratio_satisfies_its_defining_equation() {
    // R = (A−D)⁻¹(B−D)(B−C)⁻¹(A−C)  ⟺  (A−D)·R·(A−C)⁻¹·(B−C) = B−D
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let field = Field::Quaternion;
    for _ in 0..200 {
        let [a, b, c, d]: [FieldElement; 4] = std::array::from_fn(|_| field.random(&mut rng));
        let ExtendedPoint::Finite(r) = cross_ratio_of(&a, &b, &c, &d).unwrap() else { panic!() };
        let m = |x: &FieldElement, y: &FieldElement| to_matrix(&x.sub(y).unwrap());
        let inv_ac = to_matrix(&a.sub(&c).unwrap().inv().unwrap());
        let lhs = mat_mul(&mat_mul(&mat_mul(&m(&a, &d), &to_matrix(&r)), &inv_ac), &m(&b, &c));
        assert_eq!(lhs, m(&b, &d));
    }
}

#[test]
fn solved_point_reproduces_the_ratio_in_every_field() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for field in [Field::Rational, Field::Gf(101), Field::Quaternion] {
        let mut solved = 0;
        while solved < 100 {
            let [r, a, b, c]: [FieldElement; 4] = std::array::from_fn(|_| field.random(&mut rng));
            if r.is_zero() || r.is_one() || a == b || a == c || b == c {
                continue;
            }
            let Ok(d) = solve_fourth_point(&r, &a, &b, &c) else { continue };
            assert_eq!(cross_ratio_of(&a, &b, &c, &d).unwrap(), ExtendedPoint::Finite(r));
            solved += 1;
        }
    }
}
