//! Exact rational linear programming for zonotope incidence queries.
//!
//! A deliberately small two-phase simplex over arbitrary-precision
//! rationals. Bland's rule (lowest eligible index enters, lowest-index
//! tie-break leaves) makes cycling impossible, so termination needs no
//! perturbation tricks. The LPs solved here have at most a few dozen
//! variables, so dense tableaux are the simplest correct choice.

use crate::exact::Rational;
use num_traits::{One, Signed, Zero};

/// Outcome of `maximize`: either the program is infeasible or we get the
/// optimum value together with a maximizing point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Optimal { value: Rational, point: Vec<Rational> },
}

/// max c·x subject to A x = b, x >= 0.
///
/// Rows are taken as given (b may have either sign); the caller does not
/// need to canonicalize. The feasible regions arising from zonotope
/// membership are bounded, so unboundedness is a caller error and panics.
pub fn maximize(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    for row in a {
        assert_eq!(row.len(), n, "constraint row width must match objective");
    }
    assert_eq!(b.len(), m);

    // Tableau layout: columns 0..n are the structural variables, columns
    // n..n+m the artificials, column n+m the right-hand side.
    let cols = n + m + 1;
    let mut t = vec![vec![Rational::zero(); cols]; m];
    for (i, row) in a.iter().enumerate() {
        let flip = b[i].is_negative();
        for (j, v) in row.iter().enumerate() {
            t[i][j] = if flip { -v.clone() } else { v.clone() };
        }
        t[i][n + i] = Rational::one();
        t[i][cols - 1] = if flip { -b[i].clone() } else { b[i].clone() };
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Phase one: minimize the sum of artificials, i.e. maximize its negative.
    let mut phase_obj = vec![Rational::zero(); cols];
    for i in 0..m {
        for j in 0..cols {
            let add = t[i][j].clone();
            phase_obj[j] += add;
        }
    }
    for j in n..n + m {
        phase_obj[j] = Rational::zero();
    }
    simplex(&mut t, &mut basis, &mut phase_obj, n + m);
    if !phase_obj[cols - 1].is_zero() {
        return LpOutcome::Infeasible;
    }

    // Drive any artificial still basic (necessarily at zero) out of the
    // basis; a row with no structural pivot available is redundant and is
    // simply blanked so it can never constrain phase two.
    for i in 0..m {
        if basis[i] >= n {
            if let Some(j) = (0..n).find(|&j| !t[i][j].is_zero()) {
                pivot(&mut t, &mut basis, &mut phase_obj, i, j);
            } else {
                for v in t[i].iter_mut() {
                    *v = Rational::zero();
                }
            }
        }
    }

    // Phase two: the real objective, expressed in terms of the current basis.
    let mut obj = vec![Rational::zero(); cols];
    for j in 0..n {
        obj[j] = c[j].clone();
    }
    for i in 0..m {
        if basis[i] < n && !obj[basis[i]].is_zero() {
            let coeff = obj[basis[i]].clone();
            for j in 0..cols {
                let sub = &coeff * &t[i][j];
                obj[j] -= sub;
            }
        }
    }
    simplex(&mut t, &mut basis, &mut obj, n);

    let mut point = vec![Rational::zero(); n];
    for i in 0..m {
        if basis[i] < n {
            point[basis[i]] = t[i][cols - 1].clone();
        }
    }
    LpOutcome::Optimal { value: -obj[cols - 1].clone(), point }
}

/// Run simplex iterations until no reduced cost is positive. `limit` bounds
/// the eligible entering columns (used to freeze artificials in phase two).
fn simplex(t: &mut [Vec<Rational>], basis: &mut [usize], obj: &mut [Rational], limit: usize) {
    let cols = obj.len();
    loop {
        // Bland: the entering column is the lowest index with a positive
        // reduced cost (we maximize, and `obj` stores negated costs so t
        // stays a plain elimination target).
        let Some(enter) = (0..limit).find(|&j| obj[j].is_positive()) else {
            return;
        };
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..t.len() {
            if t[i][enter].is_positive() {
                let ratio = &t[i][cols - 1] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, best)) => {
                        ratio < *best || (ratio == *best && basis[i] < basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let (row, _) = leave.expect("zonotope feasible regions are bounded");
        pivot(t, basis, obj, row, enter);
    }
}

fn pivot(t: &mut [Vec<Rational>], basis: &mut [usize], obj: &mut [Rational], row: usize, col: usize) {
    let cols = obj.len();
    let inv = t[row][col].clone();
    for v in t[row].iter_mut() {
        *v /= &inv;
    }
    for i in 0..t.len() {
        if i != row && !t[i][col].is_zero() {
            let f = t[i][col].clone();
            for j in 0..cols {
                let sub = &f * &t[row][j];
                t[i][j] -= sub;
            }
        }
    }
    if !obj[col].is_zero() {
        let f = obj[col].clone();
        for j in 0..cols {
            let sub = &f * &t[row][j];
            obj[j] -= sub;
        }
    }
    basis[row] = col;
}
