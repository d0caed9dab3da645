//! Exact linear algebra over ℚ(ζ_m).
//!
//! The elimination kernel is plain Gauss-Jordan with exact field division and
//! deterministic first-nonzero pivoting, so every rank, kernel, and image
//! below is reproducible bit for bit. Matrices are dense row-major
//! `Vec<Vec<CycScalar>>`; everything in this project that is large enough to
//! care about sparsity splits into small blocks first (see the bar oracle).

mod graded;

pub use graded::{invariant_subspace, BasisLabel, Degree, GradedMap, GradedSpace};

use crate::exact::CycScalar;

/// Reduced row echelon form in place; returns the pivot column indices in
/// increasing order. Rows must share a common length.
pub fn rref_in_place(mat: &mut [Vec<CycScalar>]) -> Vec<usize> {
    let nrows = mat.len();
    if nrows == 0 {
        return vec![];
    }
    let ncols = mat[0].len();
    debug_assert!(mat.iter().all(|r| r.len() == ncols), "ragged matrix");
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pr) = (rank..nrows).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(rank, pr);
        let inv = mat[rank][col].inv().expect("pivot entry is nonzero");
        for c in col..ncols {
            if !mat[rank][c].is_zero() {
                mat[rank][c] = mat[rank][c].mul(&inv);
            }
        }
        for r in 0..nrows {
            if r != rank && !mat[r][col].is_zero() {
                let factor = mat[r][col].clone();
                for c in col..ncols {
                    if mat[rank][c].is_zero() {
                        continue;
                    }
                    let t = factor.mul(&mat[rank][c]);
                    mat[r][c] = mat[r][c].sub(&t);
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    pivots
}

/// Rank of a dense matrix.
pub fn mat_rank(mat: &[Vec<CycScalar>]) -> usize {
    let mut work = mat.to_vec();
    rref_in_place(&mut work).len()
}

/// Basis of the right kernel, one vector per free column, in free-column
/// order. `ncols` and `order` disambiguate the empty-matrix case.
pub fn kernel_basis_raw(mat: &[Vec<CycScalar>], ncols: usize, order: u32) -> Vec<Vec<CycScalar>> {
    let mut work = mat.to_vec();
    let pivots = rref_in_place(&mut work);
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; ncols];
        for &p in &pivots {
            v[p] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![CycScalar::zero(order); ncols];
        v[free] = CycScalar::one(order);
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = work[i][free].neg();
        }
        basis.push(v);
    }
    basis
}

/// Basis of the column space: the original columns at the pivot positions,
/// returned as codomain coordinate vectors.
pub fn image_basis_raw(mat: &[Vec<CycScalar>]) -> Vec<Vec<CycScalar>> {
    let mut work = mat.to_vec();
    let pivots = rref_in_place(&mut work);
    pivots
        .iter()
        .map(|&c| mat.iter().map(|row| row[c].clone()).collect())
        .collect()
}

/// Matrix times vector, exactly.
pub fn matvec(mat: &[Vec<CycScalar>], v: &[CycScalar], order: u32) -> Vec<CycScalar> {
    mat.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(CycScalar::zero(order), |acc, (a, x)| acc.add(&a.mul(x)))
        })
        .collect()
}
