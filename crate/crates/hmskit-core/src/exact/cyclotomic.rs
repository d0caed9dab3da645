//! Cyclotomic polynomials and field arithmetic in ℚ(ζ_m).
//!
//! Φ_m is computed by the classical recursion: divide x^m - 1 exactly by the
//! product of Φ_d over proper divisors d of m. Scalars are vectors of length
//! φ(m) against the power basis of ℚ[x]/Φ_m; inversion runs the extended
//! Euclidean algorithm against Φ_m, which never fails on nonzero input
//! because Φ_m is irreducible over ℚ.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::QPoly;
use super::{ExactError, Rational};

/// Euler totient by trial division; m stays tiny here (at most 12 in tests).
pub fn euler_phi(m: u32) -> usize {
    let mut n = m;
    let mut phi = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            phi = phi / p * (p - 1);
        }
        p += 1;
    }
    if n > 1 {
        phi = phi / n * (n - 1);
    }
    phi as usize
}

fn compute_cyclotomic(m: u32) -> QPoly {
    if m == 1 {
        // x - 1
        return QPoly::x_pow_minus_one(1);
    }
    let mut denom = QPoly::one();
    for d in 1..m {
        if m % d == 0 {
            denom = denom.mul(&cyclotomic_poly(d));
        }
    }
    QPoly::x_pow_minus_one(m as usize).exact_div(&denom)
}

/// The m-th cyclotomic polynomial Φ_m, memoized.
pub fn cyclotomic_poly(m: u32) -> QPoly {
    assert!(m >= 1, "cyclotomic order must be positive");
    static CACHE: OnceLock<Mutex<HashMap<u32, QPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&m) {
        return p.clone();
    }
    // compute outside the lock: the recursion re-enters this function
    let p = compute_cyclotomic(m);
    cache.lock().unwrap().insert(m, p.clone());
    p
}

/// An element of ℚ(ζ_m), stored as φ(m) rational coordinates against the
/// power basis 1, ζ_m, ..., ζ_m^{φ(m)-1}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycScalar {
    order: u32,
    coeffs: Vec<Rational>,
}

impl CycScalar {
    /// Wraps coordinates already of length φ(order).
    pub fn from_coeffs(order: u32, coeffs: Vec<Rational>) -> Self {
        assert_eq!(
            coeffs.len(),
            euler_phi(order),
            "coefficient vector must have length phi(order)"
        );
        CycScalar { order, coeffs }
    }

    /// Reduces an arbitrary polynomial in ζ_m modulo Φ_m.
    pub fn from_poly(order: u32, p: &QPoly) -> Self {
        let phi = cyclotomic_poly(order);
        let (_, r) = p.div_rem(&phi);
        let mut coeffs = r.coeffs().to_vec();
        coeffs.resize(euler_phi(order), Rational::zero());
        CycScalar { order, coeffs }
    }

    pub fn zero(order: u32) -> Self {
        CycScalar {
            order,
            coeffs: vec![Rational::zero(); euler_phi(order)],
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, Rational::one())
    }

    pub fn from_rational(order: u32, c: Rational) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn from_int(order: u32, n: i64) -> Self {
        Self::from_rational(order, super::rat_int(n))
    }

    /// The primitive root ζ_m itself.
    pub fn zeta(order: u32) -> Self {
        Self::zeta_pow(order, 1)
    }

    /// ζ_m^k for any integer k (negative exponents allowed).
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        Self::from_poly(order, &QPoly::monomial(e))
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Some(q) when the element lies in ℚ ⊂ ℚ(ζ_m).
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check_order(&self, rhs: &CycScalar) {
        assert_eq!(self.order, rhs.order, "cyclotomic order mismatch");
    }

    pub fn add(&self, rhs: &CycScalar) -> CycScalar {
        self.check_order(rhs);
        CycScalar {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &CycScalar) -> CycScalar {
        self.check_order(rhs);
        CycScalar {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> CycScalar {
        CycScalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, rhs: &CycScalar) -> CycScalar {
        self.check_order(rhs);
        let prod = QPoly::new(self.coeffs.clone()).mul(&QPoly::new(rhs.coeffs.clone()));
        CycScalar::from_poly(self.order, &prod)
    }

    pub fn scale(&self, c: &Rational) -> CycScalar {
        CycScalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplicative inverse by the extended Euclidean algorithm mod Φ_m.
    pub fn inv(&self) -> Result<CycScalar, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero { order: self.order });
        }
        let phi = cyclotomic_poly(self.order);
        let a = QPoly::new(self.coeffs.clone());
        // invariant: r0 = t0*a + s0*phi, r1 = t1*a + s1*phi (s never materialized)
        let (mut r0, mut r1) = (phi.clone(), a);
        let (mut t0, mut t1) = (QPoly::zero(), QPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            t0 = t1;
            t1 = t;
        }
        // r0 is a nonzero constant: phi is irreducible and deg a < deg phi
        let g = r0.coeff(0);
        assert_eq!(r0.degree(), Some(0), "gcd with cyclotomic must be constant");
        let inv_poly = t0.scale(&(Rational::one() / g));
        Ok(CycScalar::from_poly(self.order, &inv_poly))
    }

    pub fn div(&self, rhs: &CycScalar) -> Result<CycScalar, ExactError> {
        Ok(self.mul(&rhs.inv()?))
    }

    pub fn pow(&self, k: u32) -> CycScalar {
        let mut out = CycScalar::one(self.order);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Numeric image under ζ_m ↦ exp(2πi/m), by Horner evaluation. The error
    /// is bounded by representation epsilon times the coefficient magnitude;
    /// see `embed_error_bound`.
    pub fn embed_complex(&self) -> Complex64 {
        let theta = 2.0 * std::f64::consts::PI / self.order as f64;
        let zeta = Complex64::from_polar(1.0, theta);
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * zeta + Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
        }
        acc
    }

    /// A conservative bound on |embed_complex(self) - exact value|.
    pub fn embed_error_bound(&self) -> f64 {
        let mass: f64 = self.coeffs.iter().map(|c| c.abs().to_f64().unwrap_or(f64::MAX)).sum();
        f64::EPSILON * (4.0 * self.coeffs.len() as f64 + 8.0) * (1.0 + mass)
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " [m={}]", self.order)
    }
}

impl std::ops::Add for &CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &CycScalar) -> CycScalar {
        CycScalar::add(self, rhs)
    }
}

impl std::ops::Sub for &CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &CycScalar) -> CycScalar {
        CycScalar::sub(self, rhs)
    }
}

impl std::ops::Mul for &CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &CycScalar) -> CycScalar {
        CycScalar::mul(self, rhs)
    }
}

impl std::ops::Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar::neg(self)
    }
}

/// Field addition in ℚ(ζ_m); orders must match.
pub fn cyc_add(a: &CycScalar, b: &CycScalar) -> CycScalar {
    a.add(b)
}

/// Field multiplication in ℚ(ζ_m); orders must match.
pub fn cyc_mul(a: &CycScalar, b: &CycScalar) -> CycScalar {
    a.mul(b)
}

/// Field inverse in ℚ(ζ_m); zero input is the one reportable error.
pub fn cyc_inv(a: &CycScalar) -> Result<CycScalar, ExactError> {
    a.inv()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};
    use proptest::prelude::*;

    fn int_poly(cs: &[i64]) -> QPoly {
        QPoly::new(cs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn cyclotomic_small_orders_frozen() {
        assert_eq!(cyclotomic_poly(1), int_poly(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), int_poly(&[1, 1]));
        assert_eq!(cyclotomic_poly(3), int_poly(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(4), int_poly(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(5), int_poly(&[1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic_poly(6), int_poly(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), int_poly(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn phi_matches_degree() {
        for m in 1..=12 {
            assert_eq!(cyclotomic_poly(m).degree(), Some(euler_phi(m)), "m={m}");
        }
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(5), 4);
        assert_eq!(euler_phi(12), 4);
    }

    #[test]
    fn zeta_cubed_is_one() {
        let z = CycScalar::zeta(3);
        assert!(z.mul(&z.pow(2)).is_one());
        assert_eq!(CycScalar::zeta_pow(3, -1), z.pow(2));
    }

    #[test]
    fn add_identity() {
        let z5 = CycScalar::zeta(5);
        assert_eq!(cyc_add(&z5, &CycScalar::zero(5)), z5);
    }

    #[test]
    fn inv_one_plus_zeta3_is_minus_zeta3() {
        // (1 + z)(-z) = -z - z^2 = 1 in Q(zeta_3)
        let a = cyc_add(&CycScalar::one(3), &CycScalar::zeta(3));
        let inv = cyc_inv(&a).unwrap();
        assert_eq!(inv, CycScalar::zeta(3).neg());
        assert!(cyc_mul(&a, &inv).is_one());
    }

    #[test]
    fn inv_of_zero_is_reported() {
        assert_eq!(
            cyc_inv(&CycScalar::zero(7)),
            Err(crate::exact::ExactError::DivisionByZero { order: 7 })
        );
    }

    #[test]
    fn embed_oracles() {
        let one = CycScalar::one(4).embed_complex();
        assert!((one - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        let i = CycScalar::zeta(4).embed_complex();
        assert!((i - Complex64::new(0.0, 1.0)).norm() < 1e-15);
        // zeta_5 + zeta_5^4 = 2 cos(2 pi / 5) = (sqrt(5) - 1) / 2
        let golden = cyc_add(&CycScalar::zeta(5), &CycScalar::zeta_pow(5, 4)).embed_complex();
        let expect = 2.0 * (2.0 * std::f64::consts::PI / 5.0).cos();
        assert!((golden.re - expect).abs() < 1e-12);
        assert!((golden.re - 0.618_033_988_749_894).abs() < 1e-12);
        assert!(golden.im.abs() < 1e-12);
    }

    #[test]
    fn rational_detection() {
        let z = CycScalar::zeta(5);
        // z * z^4 = 1 collapses to a rational
        assert_eq!(z.mul(&z.pow(4)).as_rational(), Some(rat_int(1)));
        assert_eq!(z.as_rational(), None);
        assert_eq!(CycScalar::from_rational(5, rat(3, 7)).as_rational(), Some(rat(3, 7)));
    }

    fn arb_scalar(order: u32) -> impl Strategy<Value = CycScalar> {
        let phi = euler_phi(order);
        proptest::collection::vec((-100i64..=100, 1i64..=20), phi).prop_map(move |cs| {
            CycScalar::from_coeffs(order, cs.into_iter().map(|(n, d)| rat(n, d)).collect())
        })
    }

    fn arb_triple() -> impl Strategy<Value = (CycScalar, CycScalar, CycScalar)> {
        (1u32..=12).prop_flat_map(|m| (arb_scalar(m), arb_scalar(m), arb_scalar(m)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms((a, b, c) in arb_triple()) {
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&a.neg()), CycScalar::zero(a.order()));
        }

        #[test]
        fn inverse_round_trip((a, _, _) in arb_triple()) {
            if !a.is_zero() {
                prop_assert!(a.mul(&a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn embedding_is_ring_hom((a, b, _) in arb_triple()) {
            let (ea, eb) = (a.embed_complex(), b.embed_complex());
            let sum = a.add(&b);
            let prod = a.mul(&b);
            let tol_add = 1e-12 * (1.0 + ea.norm() + eb.norm());
            prop_assert!((sum.embed_complex() - (ea + eb)).norm() < tol_add + sum.embed_error_bound());
            let tol_mul = 1e-12 * (1.0 + ea.norm() * eb.norm());
            prop_assert!((prod.embed_complex() - ea * eb).norm() < tol_mul + prod.embed_error_bound());
        }
    }
}
