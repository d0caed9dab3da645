//! Exact rational and cyclotomic-field arithmetic.
//!
//! Scalars live in ℚ(ζ_m) = ℚ[x]/Φ_m(x), represented by coefficient vectors
//! of length φ(m) against the power basis 1, ζ, ..., ζ^{φ(m)-1}. Working
//! modulo the cyclotomic polynomial Φ_m (rather than x^m - 1) makes the
//! scalars a field, which the idempotent and invariant-projector formulas
//! downstream rely on. Orders used in practice are m = n + 2 for n in 1..=4;
//! property tests push to order 12.

mod cyclotomic;
mod poly;

pub use cyclotomic::{cyc_add, cyc_inv, cyc_mul, cyclotomic_poly, euler_phi, CycScalar};
pub use poly::QPoly;

use num_bigint::BigInt;

/// Arbitrary-precision rational, always reduced, denominator positive.
pub type Rational = num_rational::BigRational;

/// Errors from exact arithmetic. Division by zero is the only runtime
/// failure a caller is expected to handle; shape violations panic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("division by zero in Q(zeta_{order})")]
    DivisionByZero { order: u32 },
}

/// Shorthand for the rational n/d.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the rational n/1.
pub fn rat_int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_normalizes() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(1, -2), rat(-1, 2));
        assert!(rat(1, -2).denom() > &BigInt::from(0));
    }
}
