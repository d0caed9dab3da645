//! Dense univariate polynomials over ℚ with exact division.
//!
//! Just enough polynomial arithmetic to build cyclotomic polynomials and run
//! the extended Euclidean algorithm behind cyclotomic inversion. Coefficients
//! are stored low degree first with no trailing zeros.

use super::Rational;
use num_traits::{One, Zero};

/// Polynomial over ℚ, dense, lowest coefficient first, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Vec<Rational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        QPoly {
            coeffs: vec![Rational::one()],
        }
    }

    pub fn constant(c: Rational) -> Self {
        QPoly::new(vec![c])
    }

    /// x^d with coefficient one.
    pub fn monomial(d: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[d] = Rational::one();
        QPoly { coeffs }
    }

    /// x^m - 1, the starting point of the cyclotomic recursion.
    pub fn x_pow_minus_one(m: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); m + 1];
        coeffs[0] = -Rational::one();
        coeffs[m] = Rational::one();
        QPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> Rational {
        self.coeffs.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        QPoly::new(out)
    }

    pub fn sub(&self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        QPoly::new(out)
    }

    pub fn mul(&self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }

    pub fn scale(&self, c: &Rational) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Quotient and remainder by a nonzero divisor; exact over ℚ.
    pub fn div_rem(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        let d = divisor.degree().expect("division by zero polynomial");
        let lead_inv = Rational::one() / divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(d)];
        while rem.len() > d {
            let k = rem.len() - 1 - d;
            let c = rem.last().unwrap() * &lead_inv;
            if !c.is_zero() {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    let t = &c * b;
                    rem[k + j] -= t;
                }
                quot[k] = c;
            }
            // the leading entry is now exactly zero by construction
            rem.pop();
        }
        (QPoly::new(quot), QPoly::new(rem))
    }

    /// Division known to be exact; panics if a remainder survives, which
    /// would mean the cyclotomic recursion itself is broken.
    pub fn exact_div(&self, divisor: &QPoly) -> QPoly {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "exact_div left a remainder");
        q
    }
}
