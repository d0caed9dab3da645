//! The truncated cohomology window: the four populated cells with total
//! degree at most 2, the contraction differential between them, explicit
//! kernel and cokernel bases, and the cyclic-invariant part of the
//! degree-two piece.
//!
//! Everything here is exact linear algebra over the rationals. The window
//! uses the fractional grading, so the populated cells are (0,0), (1,0),
//! (2,0) and (n+2, −n), with the differential of bidegree (n+1, −n)
//! mapping (1,0) into (n+2, −n) and (2,0) into (n+3, −n).

use std::collections::BTreeMap;

use num_traits::{ToPrimitive, Zero};

use crate::algebra::{character_generators, DiagGroupElement, GroupKind};
use crate::exact::{rat, rat_int, CycScalar, Rational};
use crate::linalg::{kernel_basis_raw, mat_rank, rref_in_place};

use super::schouten::schouten_diff;
use super::{monomials_of_degree, subsets_of_size, PolyVector, PvTerm};

/// Exact dimensions, ranks, and bases for the truncated window.
#[derive(Debug, Clone)]
pub struct TruncatedReport {
    pub n: u8,
    pub hh1_dim: usize,
    pub hh2_dim: usize,
    /// Dimensions of the cells (0,0), (1,0), (2,0), (n+2, −n).
    pub dim_cell_00: usize,
    pub dim_cell_10: usize,
    pub dim_cell_20: usize,
    pub dim_cell_top: usize,
    pub rank_delta_10: usize,
    pub rank_delta_20: usize,
    /// Kernel basis of the differential on (1,0).
    pub hh1_basis: Vec<PolyVector>,
    /// Kernel basis of the differential on (2,0).
    pub hh2_kernel_basis: Vec<PolyVector>,
    /// Cokernel representatives inside (n+2, −n).
    pub hh2_coker_reps: Vec<PolyVector>,
}

impl TruncatedReport {
    /// Kernel and cokernel representatives together: a basis of the
    /// degree-two cohomology.
    pub fn hh2_basis(&self) -> Vec<PolyVector> {
        let mut out = self.hh2_kernel_basis.clone();
        out.extend(self.hh2_coker_reps.iter().cloned());
        out
    }
}

/// Cyclic-invariant part of the degree-two cohomology.
#[derive(Debug, Clone)]
pub struct CyclicReport {
    pub n: u8,
    pub dim: usize,
    /// Representatives of a basis of the invariant subspace.
    pub basis: Vec<PolyVector>,
    /// Whether y_1^{n+2} + … + y_{n+2}^{n+2} lies in the invariant span.
    pub generator_present: bool,
    /// Whether the rotation permutes the n+2 difference generators of the
    /// (1,0)-kernel transitively.
    pub kernel_permuted_transitively: bool,
}

/// Monomial ⊗ wedge basis of the untwisted part of a cell in the fractional
/// grading, restricted to sum-zero-group invariants, in lexicographic term
/// order. Twisted sectors are checked to be absent by the unit tests, not
/// assumed.
pub(crate) fn untwisted_cell_terms(n: u8, s: i64, t: &Rational) -> Vec<PvTerm> {
    let m = n as usize + 2;
    assert!(s >= 0, "cell degree must be non-negative");
    let a = rat_int(s) + t * rat(m as i64, n as i64);
    assert!(a.is_integer(), "cell ({s}, {t}) has a non-integral wedge exponent");
    let a = a.to_integer().to_i64().expect("wedge exponent fits i64");
    assert!((0..=m as i64).contains(&a), "cell ({s}, {t}) is empty");
    let all: Vec<u8> = (1..=m as u8).collect();
    let gens = character_generators(GroupKind::GammaTilde, n as u32);
    let mut terms = Vec::new();
    for exps in monomials_of_degree(&all, s as usize, m) {
        for wedge in subsets_of_size(&all, a as usize) {
            let mut ch = vec![0i64; m];
            for (i, &e) in exps.iter().enumerate() {
                ch[i] -= e as i64;
            }
            for &i in &wedge {
                ch[i as usize - 1] += 1;
            }
            let invariant = gens.iter().all(|g| {
                g.iter().zip(&ch).map(|(a, b)| a * b).sum::<i64>().rem_euclid(m as i64) == 0
            });
            if invariant {
                terms.push(PvTerm { exps: exps.clone(), wedge });
            }
        }
    }
    terms.sort();
    terms
}

fn pv_of(n: u8, term: &PvTerm) -> PolyVector {
    PolyVector::monomial(n, &term.exps, &term.wedge)
}

fn index_of(terms: &[PvTerm]) -> BTreeMap<PvTerm, usize> {
    terms.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect()
}

/// Coordinates of a multivector in a term basis; panics if a term is
/// missing from the basis (it never is for invariant inputs).
fn coords(pv: &PolyVector, index: &BTreeMap<PvTerm, usize>, width: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); width];
    for (term, c) in pv.terms() {
        let i = *index.get(term).unwrap_or_else(|| panic!("term {term:?} outside the cell"));
        out[i] = c.clone();
    }
    out
}

fn to_cyc_matrix(rows: &[Vec<Rational>]) -> Vec<Vec<CycScalar>> {
    rows.iter()
        .map(|r| r.iter().map(|c| CycScalar::from_rational(1, c.clone())).collect())
        .collect()
}

/// Differential matrix (rows = codomain terms, columns = domain terms).
fn delta_matrix(
    n: u8,
    domain: &[PvTerm],
    codomain_index: &BTreeMap<PvTerm, usize>,
    codomain_len: usize,
) -> Vec<Vec<Rational>> {
    let mut mat = vec![vec![Rational::zero(); domain.len()]; codomain_len];
    for (col, term) in domain.iter().enumerate() {
        let image = schouten_diff(&pv_of(n, term)).expect("cell terms are untwisted");
        for (t, c) in image.terms() {
            let row =
                *codomain_index.get(t).expect("differential image stays in the invariant cell");
            mat[row][col] = c.clone();
        }
    }
    mat
}

/// Solves `columns · x = rhs` exactly; None if inconsistent.
fn solve_exact(columns: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let height = rhs.len();
    let width = columns.len();
    let mut aug = vec![vec![CycScalar::zero(1); width + 1]; height];
    for (j, col) in columns.iter().enumerate() {
        assert_eq!(col.len(), height, "column height mismatch");
        for (i, c) in col.iter().enumerate() {
            aug[i][j] = CycScalar::from_rational(1, c.clone());
        }
    }
    for (i, c) in rhs.iter().enumerate() {
        aug[i][width] = CycScalar::from_rational(1, c.clone());
    }
    let pivots = rref_in_place(&mut aug);
    if pivots.contains(&width) {
        return None;
    }
    let mut x = vec![Rational::zero(); width];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = aug[row][width].as_rational().expect("order-1 scalar is rational");
    }
    Some(x)
}

/// Assembles the truncated window for 1 ≤ n ≤ 4: cell bases, the two
/// differential instances, kernel and cokernel bases, and the dimensions
/// of the degree-one and degree-two cohomology.
pub fn truncated_hh(n: u8) -> TruncatedReport {
    assert!((1..=4).contains(&n), "n must be in 1..=4");
    let m = n as usize + 2;
    let t0 = rat_int(0);
    let ttop = rat_int(-(n as i64));

    let cell00 = untwisted_cell_terms(n, 0, &t0);
    let cell10 = untwisted_cell_terms(n, 1, &t0);
    let cell20 = untwisted_cell_terms(n, 2, &t0);
    let cell_top = untwisted_cell_terms(n, m as i64, &ttop);
    // Codomain of the differential on (2,0): the cell (n+3, −n).
    let cell_next = untwisted_cell_terms(n, m as i64 + 1, &ttop);

    let top_index = index_of(&cell_top);
    let next_index = index_of(&cell_next);

    let delta10 = delta_matrix(n, &cell10, &top_index, cell_top.len());
    let delta20 = delta_matrix(n, &cell20, &next_index, cell_next.len());

    let rank_delta_10 = mat_rank(&to_cyc_matrix(&delta10));
    let rank_delta_20 = mat_rank(&to_cyc_matrix(&delta20));

    let kernel_to_pvs = |matrix: &[Vec<Rational>], domain: &[PvTerm]| -> Vec<PolyVector> {
        kernel_basis_raw(&to_cyc_matrix(matrix), domain.len(), 1)
            .into_iter()
            .map(|v| {
                let mut pv = PolyVector::zero(n);
                for (i, c) in v.into_iter().enumerate() {
                    let c = c.as_rational().expect("order-1 scalar is rational");
                    if !c.is_zero() {
                        pv.add_term(domain[i].clone(), c);
                    }
                }
                pv
            })
            .collect()
    };

    let hh1_basis = kernel_to_pvs(&delta10, &cell10);
    let hh2_kernel_basis = kernel_to_pvs(&delta20, &cell20);

    // Cokernel representatives inside (n+2, −n): the non-pivot coordinates
    // of the row-reduced image of the (1,0) differential.
    let mut image_rows: Vec<Vec<CycScalar>> = (0..cell10.len())
        .map(|col| {
            (0..cell_top.len())
                .map(|row| CycScalar::from_rational(1, delta10[row][col].clone()))
                .collect()
        })
        .collect();
    let image_pivots = rref_in_place(&mut image_rows);
    let hh2_coker_reps: Vec<PolyVector> = (0..cell_top.len())
        .filter(|i| !image_pivots.contains(i))
        .map(|i| pv_of(n, &cell_top[i]))
        .collect();

    let hh1_dim = cell10.len() - rank_delta_10;
    let hh2_dim = (cell20.len() - rank_delta_20) + (cell_top.len() - rank_delta_10);

    TruncatedReport {
        n,
        hh1_dim,
        hh2_dim,
        dim_cell_00: cell00.len(),
        dim_cell_10: cell10.len(),
        dim_cell_20: cell20.len(),
        dim_cell_top: cell_top.len(),
        rank_delta_10,
        rank_delta_20,
        hh1_basis,
        hh2_kernel_basis,
        hh2_coker_reps,
    }
}

fn sort_with_sign(mut v: Vec<u8>) -> (Vec<u8>, i64) {
    let mut sign = 1i64;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    (v, sign)
}

/// The rotation y_k ↦ y_{k+1}, v_k ↦ v_{k+1} (indices mod n+2), with signs
/// from re-sorting wedge factors. Sectors rotate along.
pub fn cyclic_shift(pv: &PolyVector) -> PolyVector {
    let m = pv.order() as usize;
    let mut sector_exps = vec![0u8; m];
    for (i, &e) in pv.sector().exps().iter().enumerate() {
        sector_exps[(i + 1) % m] = e;
    }
    let sector = DiagGroupElement::new(m as u32, sector_exps);
    let mut out = PolyVector::zero_in_sector(sector);
    for (term, c) in pv.terms() {
        let mut exps = vec![0u16; m];
        for (i, &e) in term.exps.iter().enumerate() {
            exps[(i + 1) % m] = e;
        }
        let shifted: Vec<u8> =
            term.wedge.iter().map(|&i| if i as usize == m { 1 } else { i + 1 }).collect();
        let (wedge, sign) = sort_with_sign(shifted);
        out.add_term(PvTerm { exps, wedge }, c * rat_int(sign));
    }
    out
}

/// The n+2 cyclic difference generators d_k = y_k⊗v_k − y_{k+1}⊗v_{k+1}.
fn difference_generators(n: u8) -> Vec<PolyVector> {
    let m = n as usize + 2;
    (1..=m)
        .map(|k| {
            let succ = if k == m { 1 } else { k + 1 };
            let mut ek = vec![0u16; m];
            ek[k - 1] = 1;
            let mut es = vec![0u16; m];
            es[succ - 1] = 1;
            PolyVector::monomial(n, &ek, &[k as u8])
                .sub(&PolyVector::monomial(n, &es, &[succ as u8]))
        })
        .collect()
}

/// Whether every kernel generator of the (2,0) differential has cyclic
/// permutations summing to zero. The degree-one analogue is true; this one
/// is not, and the unit tests pin the honest answer.
pub fn hh2_kernel_cyclic_sums_vanish(n: u8) -> bool {
    let report = truncated_hh(n);
    let m = n as usize + 2;
    report.hh2_kernel_basis.iter().all(|b| {
        let mut acc = PolyVector::zero(n);
        let mut cur = b.clone();
        for _ in 0..m {
            acc = acc.add(&cur);
            cur = cyclic_shift(&cur);
        }
        acc.is_zero()
    })
}

/// Invariants of the degree-two cohomology under the rotation. The induced
/// action is block diagonal: the kernel part of the basis maps to kernel
/// combinations, and cokernel representatives map to representatives modulo
/// the image.
pub fn cyclic_invariant_hh2(n: u8) -> CyclicReport {
    let report = truncated_hh(n);
    let m = n as usize + 2;
    let t0 = rat_int(0);
    let ttop = rat_int(-(n as i64));
    let cell20 = untwisted_cell_terms(n, 2, &t0);
    let cell_top = untwisted_cell_terms(n, m as i64, &ttop);
    let index20 = index_of(&cell20);
    let index_top = index_of(&cell_top);

    let kdim = report.hh2_kernel_basis.len();
    let cdim = report.hh2_coker_reps.len();

    // Kernel block: columns of the kernel basis in (2,0) coordinates.
    let kernel_cols: Vec<Vec<Rational>> = report
        .hh2_kernel_basis
        .iter()
        .map(|b| coords(b, &index20, cell20.len()))
        .collect();
    let mut action = vec![vec![Rational::zero(); kdim + cdim]; kdim + cdim];
    for (i, b) in report.hh2_kernel_basis.iter().enumerate() {
        let shifted = coords(&cyclic_shift(b), &index20, cell20.len());
        let x = solve_exact(&kernel_cols, &shifted)
            .expect("rotation preserves the kernel of the differential");
        for (r, c) in x.into_iter().enumerate() {
            action[r][i] = c;
        }
    }

    // Cokernel block: image columns of the (1,0) differential followed by
    // the representatives themselves span the top cell; express the shifted
    // representative there and keep its representative part.
    let top_index_of = |pv: &PolyVector| coords(pv, &index_top, cell_top.len());
    let mut mixed_cols: Vec<Vec<Rational>> = Vec::new();
    let cell10 = untwisted_cell_terms(n, 1, &t0);
    for term in &cell10 {
        let image = schouten_diff(&pv_of(n, term)).expect("untwisted");
        mixed_cols.push(top_index_of(&image));
    }
    let image_width = mixed_cols.len();
    for rep in &report.hh2_coker_reps {
        mixed_cols.push(top_index_of(rep));
    }
    for (j, rep) in report.hh2_coker_reps.iter().enumerate() {
        let shifted = top_index_of(&cyclic_shift(rep));
        let x = solve_exact(&mixed_cols, &shifted)
            .expect("image and representatives span the top cell");
        for r in 0..cdim {
            action[kdim + r][kdim + j] = x[image_width + r].clone();
        }
    }

    // Invariants: kernel of (action − identity).
    let dim_total = kdim + cdim;
    let mut fix = vec![vec![CycScalar::zero(1); dim_total]; dim_total];
    for r in 0..dim_total {
        for c in 0..dim_total {
            let mut entry = action[r][c].clone();
            if r == c {
                entry -= rat_int(1);
            }
            fix[r][c] = CycScalar::from_rational(1, entry);
        }
    }
    let invariants: Vec<Vec<Rational>> = kernel_basis_raw(&fix, dim_total, 1)
        .into_iter()
        .map(|v| {
            v.into_iter().map(|c| c.as_rational().expect("order-1 scalar is rational")).collect()
        })
        .collect();

    let basis: Vec<PolyVector> = invariants
        .iter()
        .map(|w| {
            let mut pv = PolyVector::zero(n);
            for (i, b) in report.hh2_kernel_basis.iter().enumerate() {
                pv = pv.add(&b.scale(&w[i]));
            }
            for (j, rep) in report.hh2_coker_reps.iter().enumerate() {
                pv = pv.add(&rep.scale(&w[kdim + j]));
            }
            pv
        })
        .collect();

    // Membership of Σ y_k^{n+2}: its class has coordinate 1 on every
    // cokernel representative and 0 on the kernel block.
    let mut gen_coords = vec![Rational::zero(); dim_total];
    for j in 0..cdim {
        gen_coords[kdim + j] = rat_int(1);
    }
    let inv_rows: Vec<Vec<Rational>> = invariants.clone();
    let rank_inv = mat_rank(&to_cyc_matrix(&inv_rows));
    let mut with_gen = inv_rows;
    with_gen.push(gen_coords);
    let generator_present = mat_rank(&to_cyc_matrix(&with_gen)) == rank_inv;

    // Transitivity of the rotation on the difference generators of the
    // (1,0) kernel.
    let diffs = difference_generators(n);
    let mut transitive = true;
    for k in 0..m {
        let expected = &diffs[(k + 1) % m];
        if &cyclic_shift(&diffs[k]) != expected {
            transitive = false;
        }
    }

    CyclicReport {
        n,
        dim: invariants.len(),
        basis,
        generator_present,
        kernel_permuted_transitively: transitive,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GroupKind;
    use crate::hochschild::{hh_dim, BidegreeCell, Grading, TorusInvariance};
    use rand::{Rng, SeedableRng};

    #[test]
    fn frozen_cell_dimensions() {
        // (dim(0,0), dim(1,0), dim(2,0), dim(n+2,−n)) per n.
        let expected = [(1, 3, 6, 4), (1, 4, 6, 5), (1, 5, 10, 6), (1, 6, 15, 7)];
        for n in 1..=4u8 {
            let r = truncated_hh(n);
            let got = (r.dim_cell_00, r.dim_cell_10, r.dim_cell_20, r.dim_cell_top);
            assert_eq!(got, expected[n as usize - 1], "n={n}");
        }
    }

    #[test]
    fn twisted_sectors_in_the_window_sit_only_at_cell_two_zero() {
        // At (0,0), (1,0), and the top cell every twisted sector lands at a
        // negative wedge exponent, so the group-summed dimension equals the
        // untwisted count. At (2,0) a sector fixing all but two coordinates
        // enters with wedge exponent 0; its invariance condition forces all
        // character components equal, which a degree-2 monomial on the fixed
        // coordinates satisfies only when m = 4 (one monomial per sector,
        // 18 sectors). The truncation deliberately ignores those classes.
        let twisted_at_20 = [0usize, 18, 0, 0];
        for n in 1..=4u8 {
            let m = n as i64 + 2;
            let cells = [(0i64, rat_int(0)), (1, rat_int(0)), (2, rat_int(0)), (m, rat_int(-(n as i64)))];
            for (s, t) in cells {
                let untwisted = untwisted_cell_terms(n, s, &t).len();
                let full = hh_dim(&BidegreeCell::new(
                    n,
                    s,
                    t.clone(),
                    Grading::Fractional,
                    GroupKind::GammaTilde,
                    TorusInvariance::None,
                ));
                let expected_extra = if s == 2 { twisted_at_20[n as usize - 1] } else { 0 };
                assert_eq!(full, untwisted + expected_extra, "n={n}, cell ({s}, {t})");
            }
        }
    }

    #[test]
    fn window_is_empty_away_from_the_four_cells() {
        // Scan total degree ≤ 2, t ≤ 0 on the fractional-degree lattice
        // t = k/(n+2); only the four known cells may be populated.
        for n in 1..=2u8 {
            let m = n as i64 + 2;
            for k in -(2 * n as i64 + 2) * m..=0 {
                let t = rat(k, m);
                for s in 0..=(3 * m) {
                    if rat_int(s) + t.clone() > rat_int(2) {
                        continue;
                    }
                    let known = (s == 0 && k == 0)
                        || (s == 1 && k == 0)
                        || (s == 2 && k == 0)
                        || (s == m && t == rat_int(-(n as i64)));
                    if known {
                        continue;
                    }
                    let dim = hh_dim(&BidegreeCell::new(
                        n,
                        s,
                        t.clone(),
                        Grading::Fractional,
                        GroupKind::GammaTilde,
                        TorusInvariance::None,
                    ));
                    assert_eq!(dim, 0, "n={n}, cell ({s}, {t})");
                }
            }
        }
    }

    #[test]
    fn honest_truncated_dimensions() {
        // Computed by this crate's own exact elimination; the degree-one
        // count matches n+1 for every n, the degree-two count does not
        // match 2n+3 at n = 1, 3, 4.
        let expected = [(2, 4), (3, 7), (4, 11), (5, 16)];
        for n in 1..=4u8 {
            let r = truncated_hh(n);
            assert_eq!((r.hh1_dim, r.hh2_dim), expected[n as usize - 1], "n={n}");
            assert_eq!(r.hh1_dim, n as usize + 1);
            assert_eq!(r.rank_delta_10, 1, "n={n}");
        }
    }

    #[test]
    fn frozen_delta20_ranks() {
        let expected = [5, 3, 4, 5];
        for n in 1..=4u8 {
            assert_eq!(truncated_hh(n).rank_delta_20, expected[n as usize - 1], "n={n}");
        }
    }

    #[test]
    fn hh1_basis_is_a_kernel_basis_containing_the_differences() {
        for n in 1..=4u8 {
            let r = truncated_hh(n);
            assert_eq!(r.hh1_basis.len(), r.hh1_dim);
            for b in &r.hh1_basis {
                assert!(schouten_diff(b).unwrap().is_zero());
            }
            // The difference generators lie in the kernel and span it.
            let m = n as usize + 2;
            let t0 = rat_int(0);
            let cell10 = untwisted_cell_terms(n, 1, &t0);
            let index = index_of(&cell10);
            let mut rows: Vec<Vec<Rational>> =
                r.hh1_basis.iter().map(|b| coords(b, &index, cell10.len())).collect();
            let base_rank = mat_rank(&to_cyc_matrix(&rows));
            assert_eq!(base_rank, r.hh1_dim);
            for d in difference_generators(n).iter().take(m - 1) {
                assert!(schouten_diff(d).unwrap().is_zero());
                rows.push(coords(d, &index, cell10.len()));
            }
            assert_eq!(mat_rank(&to_cyc_matrix(&rows)), r.hh1_dim);
        }
    }

    #[test]
    fn coker_reps_are_the_pure_powers() {
        // Lexicographic term order lists y_{n+2}^{n+2} first and y_1^{n+2}
        // last (after the pivot y_1⋯y_{n+2} is removed).
        for n in 1..=4u8 {
            let r = truncated_hh(n);
            let m = n as usize + 2;
            assert_eq!(r.hh2_coker_reps.len(), m);
            for (k, rep) in r.hh2_coker_reps.iter().enumerate() {
                let mut exps = vec![0u16; m];
                exps[m - 1 - k] = m as u16;
                assert_eq!(rep, &PolyVector::monomial(n, &exps, &[]), "n={n}, k={k}");
            }
        }
    }

    #[test]
    fn shift_commutes_with_the_differential() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(37);
        for n in 1..=3u8 {
            let m = n as usize + 2;
            for _ in 0..40 {
                let mut w = PolyVector::zero(n);
                for _ in 0..3 {
                    let exps: Vec<u16> = (0..m).map(|_| rng.gen_range(0..=2)).collect();
                    let mut wedge: Vec<u8> =
                        (1..=m as u8).filter(|_| rng.gen_bool(0.4)).collect();
                    wedge.sort();
                    w.add_term(PvTerm { exps, wedge }, rat(rng.gen_range(-4..=4), 1));
                }
                let lhs = cyclic_shift(&schouten_diff(&w).unwrap());
                let rhs = schouten_diff(&cyclic_shift(&w)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn shift_has_order_n_plus_two() {
        let w = PolyVector::monomial(2, &[1, 0, 2, 0], &[1, 3, 4]);
        let mut cur = w.clone();
        for _ in 0..4 {
            cur = cyclic_shift(&cur);
        }
        assert_eq!(cur, w);
    }

    #[test]
    fn hh1_kernel_cyclic_sums_vanish_exactly() {
        for n in 1..=4u8 {
            let m = n as usize + 2;
            let d1 = &difference_generators(n)[0];
            let mut acc = PolyVector::zero(n);
            let mut cur = d1.clone();
            for _ in 0..m {
                acc = acc.add(&cur);
                cur = cyclic_shift(&cur);
            }
            assert!(acc.is_zero(), "n={n}");
        }
    }

    #[test]
    fn hh2_kernel_cyclic_sums_do_not_vanish() {
        // The degree-two analogue of the telescoping identity fails: the
        // rotation fixes some kernel generators (their orbit sums are n+2
        // times themselves, not zero).
        for n in 1..=4u8 {
            assert!(!hh2_kernel_cyclic_sums_vanish(n), "n={n}");
        }
    }

    #[test]
    fn honest_cyclic_invariant_dimensions() {
        // Invariants: the power-sum class plus rotation-invariant cycles in
        // the kernel block (one at n ≤ 2, two at n = 3, 4).
        let expected = [2, 2, 3, 3];
        for n in 1..=4u8 {
            let r = cyclic_invariant_hh2(n);
            assert_eq!(r.dim, expected[n as usize - 1], "n={n}");
            assert!(r.generator_present, "n={n}");
            assert!(r.kernel_permuted_transitively, "n={n}");
            assert_eq!(r.basis.len(), r.dim);
        }
    }

    #[test]
    fn invariant_basis_vectors_are_fixed_by_the_shift_up_to_the_image() {
        // Kernel-part combinations are literally fixed; cokernel parts are
        // fixed modulo the image of the (1,0) differential.
        for n in 1..=2u8 {
            let r = cyclic_invariant_hh2(n);
            let m = n as usize + 2;
            let ttop = rat_int(-(n as i64));
            let t0 = rat_int(0);
            let cell_top = untwisted_cell_terms(n, m as i64, &ttop);
            let index_top = index_of(&cell_top);
            for b in &r.basis {
                let diff = cyclic_shift(b).sub(b);
                if diff.is_zero() {
                    continue;
                }
                // Residue must lie in the image of the (1,0) differential.
                let cell10 = untwisted_cell_terms(n, 1, &t0);
                let cols: Vec<Vec<Rational>> = cell10
                    .iter()
                    .map(|term| {
                        coords(
                            &schouten_diff(&pv_of(n, term)).unwrap(),
                            &index_top,
                            cell_top.len(),
                        )
                    })
                    .collect();
                let rhs = coords(&diff, &index_top, cell_top.len());
                assert!(solve_exact(&cols, &rhs).is_some(), "n={n}");
            }
        }
    }
}
