//! Independent bar-complex oracle: graded Hochschild cohomology computed
//! straight from the normalized bar complex at a fixed internal degree, with
//! no closed formula in sight. The complex is blocked by conserved gradings
//! (torus weight defect and group-grade defect), so every elimination runs
//! on a small dense block even when the ambient cochain space has tens of
//! thousands of coordinates.
//!
//! The sign convention is the classical graded one: for a cochain φ of
//! internal degree t,
//!   (δφ)(a_1,…,a_{s+1}) = (−1)^{|a_1||φ|} a_1 φ(a_2,…)
//!     + Σ_i (−1)^i φ(…, a_i a_{i+1}, …) + (−1)^{s+1} φ(a_1,…,a_s) a_{s+1}
//! with |a| the internal-degree parity and |φ| = t mod 2. A two-dimensional
//! arbiter algebra in the tests pins this convention down before the real
//! computation trusts it.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::{smash_basis, DiagGroupElement, GroupKind, SmashElement};
use crate::exact::CycScalar;
use crate::linalg::mat_rank;

use super::HochschildError;

const GUARD: usize = 100_000;

/// A finite graded algebra presented by structure constants, plus additive
/// gradings the differential conserves (used only for block splitting).
struct BarAlgebra {
    order: u32,
    unit: usize,
    degree: Vec<i64>,
    /// weight\[i\]\[k\] = k-th conserved charge of basis element i.
    weight: Vec<Vec<i64>>,
    /// Modulus per charge; 0 means conserved over the integers.
    modulus: Vec<i64>,
    /// products\[i\]\[j\] = expansion of basis_i · basis_j.
    products: Vec<Vec<Vec<(usize, CycScalar)>>>,
    non_units: Vec<usize>,
}

type Tuple = (Vec<usize>, usize);

impl BarAlgebra {
    /// The order-3 cyclic smash product at n = 1: 24-dimensional, scalars
    /// in the third cyclotomic field.
    fn order_three_smash() -> BarAlgebra {
        let n = 1u8;
        let basis = smash_basis(n, GroupKind::Cyclic);
        let dim = basis.len();
        let key_of = |s: &[u8], g: &DiagGroupElement| (s.to_vec(), g.exps().to_vec());
        let index: HashMap<(Vec<u8>, Vec<u8>), usize> =
            basis.iter().enumerate().map(|(i, (s, g))| (key_of(s, g), i)).collect();
        let unit = index[&(Vec::new(), vec![0, 0, 0])];
        let degree: Vec<i64> = basis.iter().map(|(s, _)| s.len() as i64).collect();
        let weight: Vec<Vec<i64>> = basis
            .iter()
            .map(|(s, g)| {
                let mut w = vec![0i64; 3];
                for &i in s {
                    w[i as usize - 1] = 1;
                }
                w.push(g.exps()[0] as i64);
                w
            })
            .collect();
        let elements: Vec<SmashElement> = basis
            .iter()
            .map(|(s, g)| SmashElement::from_term(n, s, g, CycScalar::one(3)))
            .collect();
        let mut products = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                let prod = elements[i].mul(&elements[j]);
                for (s, g, c) in prod.terms() {
                    products[i][j].push((index[&(s.to_vec(), g.to_vec())], c.clone()));
                }
            }
        }
        let non_units = (0..dim).filter(|&i| i != unit).collect();
        BarAlgebra {
            order: 3,
            unit,
            degree,
            weight,
            modulus: vec![0, 0, 0, 3],
            products,
            non_units,
        }
    }

    /// Exterior algebra on one generator: the arbiter for the sign
    /// convention. Basis {1, v}, v² = 0.
    #[cfg(test)]
    fn exterior_line() -> BarAlgebra {
        let one = CycScalar::one(1);
        BarAlgebra {
            order: 1,
            unit: 0,
            degree: vec![0, 1],
            weight: vec![vec![0], vec![1]],
            modulus: vec![0],
            products: vec![
                vec![vec![(0, one.clone())], vec![(1, one.clone())]],
                vec![vec![(1, one)], vec![]],
            ],
            non_units: vec![1],
        }
    }

    /// Number of (input tuple, output) pairs at cochain length s and
    /// internal degree t, by degree-histogram convolution. Cheap, so the
    /// resource guard can fire before anything is materialized.
    fn count_cochains(&self, s: usize, t: i64) -> u128 {
        let mut ahist: BTreeMap<i64, u128> = BTreeMap::new();
        for &i in &self.non_units {
            *ahist.entry(self.degree[i]).or_insert(0) += 1;
        }
        let mut conv: BTreeMap<i64, u128> = BTreeMap::new();
        conv.insert(0, 1);
        for _ in 0..s {
            let mut next: BTreeMap<i64, u128> = BTreeMap::new();
            for (&d, &c) in &conv {
                for (&da, &ca) in &ahist {
                    *next.entry(d + da).or_insert(0) += c * ca;
                }
            }
            conv = next;
        }
        let mut total = 0u128;
        for (&d, &c) in &conv {
            let matching =
                self.degree.iter().filter(|&&db| db == d + t).count() as u128;
            total += c * matching;
        }
        total
    }

    /// Basis of the restricted cochain space, in deterministic order.
    fn cochain_space(&self, s: usize, t: i64) -> Result<Vec<Tuple>, HochschildError> {
        let count = self.count_cochains(s, t);
        if count > GUARD as u128 {
            return Err(HochschildError::ResourceGuard {
                dim: count.min(usize::MAX as u128) as usize,
            });
        }
        let mut out = Vec::with_capacity(count as usize);
        let mut tuple = vec![0usize; s];
        self.enumerate(s, t, 0, 0, &mut tuple, &mut out);
        Ok(out)
    }

    fn enumerate(
        &self,
        s: usize,
        t: i64,
        slot: usize,
        used_degree: i64,
        tuple: &mut Vec<usize>,
        out: &mut Vec<Tuple>,
    ) {
        if slot == s {
            for (b, &db) in self.degree.iter().enumerate() {
                if db == used_degree + t {
                    out.push((tuple.clone(), b));
                }
            }
            return;
        }
        for &a in &self.non_units {
            tuple[slot] = a;
            self.enumerate(s, t, slot + 1, used_degree + self.degree[a], tuple, out);
        }
    }

    /// Conserved-charge defect of a cochain basis element; δ preserves it.
    fn defect(&self, tuple: &[usize], b: usize) -> Vec<i64> {
        (0..self.modulus.len())
            .map(|k| {
                let mut d = self.weight[b][k];
                for &a in tuple {
                    d -= self.weight[a][k];
                }
                if self.modulus[k] > 0 {
                    d = d.rem_euclid(self.modulus[k]);
                }
                d
            })
            .collect()
    }

    /// Sparse columns of δ: C^s(t) → C^{s+1}(t).
    fn delta_columns(
        &self,
        s: usize,
        t: i64,
        dom: &[Tuple],
        cod_index: &HashMap<Tuple, usize>,
    ) -> Vec<Vec<(usize, CycScalar)>> {
        // Pair expansions hitting each non-unit target; the unit component
        // of a product is dropped because normalized cochains kill it.
        let dim = self.degree.len();
        let mut pair_hits: Vec<Vec<(usize, usize, CycScalar)>> = vec![Vec::new(); dim];
        for &p in &self.non_units {
            for &q in &self.non_units {
                for (z, c) in &self.products[p][q] {
                    if *z != self.unit {
                        pair_hits[*z].push((p, q, c.clone()));
                    }
                }
            }
        }
        let phi_odd = t.rem_euclid(2) == 1;
        let last_sign = if (s + 1) % 2 == 1 { -1i64 } else { 1 };
        dom.iter()
            .map(|(tuple, b)| {
                let mut acc: HashMap<usize, CycScalar> = HashMap::new();
                let mut add = |row: usize, c: CycScalar, order: u32| {
                    let entry = acc.entry(row).or_insert_with(|| CycScalar::zero(order));
                    *entry = entry.add(&c);
                };
                // First term: left multiplication by a fresh input.
                for &x in &self.non_units {
                    let sign = if phi_odd && self.degree[x].rem_euclid(2) == 1 { -1 } else { 1 };
                    for (out, c) in &self.products[x][*b] {
                        let mut key_tuple = Vec::with_capacity(s + 1);
                        key_tuple.push(x);
                        key_tuple.extend_from_slice(tuple);
                        let row = cod_index[&(key_tuple, *out)];
                        add(row, c.scale(&crate::exact::rat_int(sign)), self.order);
                    }
                }
                // Middle terms: contract two adjacent inputs.
                for i in 0..s {
                    let sign = if (i + 1) % 2 == 1 { -1i64 } else { 1 };
                    for (p, q, c) in &pair_hits[tuple[i]] {
                        let mut key_tuple = Vec::with_capacity(s + 1);
                        key_tuple.extend_from_slice(&tuple[..i]);
                        key_tuple.push(*p);
                        key_tuple.push(*q);
                        key_tuple.extend_from_slice(&tuple[i + 1..]);
                        let row = cod_index[&(key_tuple, *b)];
                        add(row, c.scale(&crate::exact::rat_int(sign)), self.order);
                    }
                }
                // Last term: right multiplication by a fresh input.
                for &x in &self.non_units {
                    for (out, c) in &self.products[*b][x] {
                        let mut key_tuple = Vec::with_capacity(s + 1);
                        key_tuple.extend_from_slice(tuple);
                        key_tuple.push(x);
                        let row = cod_index[&(key_tuple, *out)];
                        add(row, c.scale(&crate::exact::rat_int(last_sign)), self.order);
                    }
                }
                let mut entries: Vec<(usize, CycScalar)> =
                    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                entries.sort_by_key(|(r, _)| *r);
                entries
            })
            .collect()
    }

    /// Rank of δ: C^s(t) → C^{s+1}(t), block by conserved-charge defect.
    fn rank_delta(&self, s: usize, t: i64) -> Result<usize, HochschildError> {
        let dom = self.cochain_space(s, t)?;
        if dom.is_empty() {
            return Ok(0);
        }
        let cod = self.cochain_space(s + 1, t)?;
        let cod_index: HashMap<Tuple, usize> =
            cod.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        let columns = self.delta_columns(s, t, &dom, &cod_index);

        let mut col_blocks: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
        for (j, (tuple, b)) in dom.iter().enumerate() {
            col_blocks.entry(self.defect(tuple, *b)).or_default().push(j);
        }

        // Only rows a column actually hits matter for rank; the conserved
        // defect keeps different blocks' row supports disjoint.
        let mut rank = 0usize;
        for (key, cols) in &col_blocks {
            let mut rows: HashMap<usize, usize> = HashMap::new();
            for &j in cols {
                for (row, _) in &columns[j] {
                    let (tuple, b) = &cod[*row];
                    debug_assert_eq!(
                        &self.defect(tuple, *b),
                        key,
                        "differential must conserve the charge defect"
                    );
                    let local = rows.len();
                    rows.entry(*row).or_insert(local);
                }
            }
            if rows.is_empty() {
                continue;
            }
            let mut dense =
                vec![vec![CycScalar::zero(self.order); cols.len()]; rows.len()];
            for (local_c, &j) in cols.iter().enumerate() {
                for (row, c) in &columns[j] {
                    dense[rows[row]][local_c] = c.clone();
                }
            }
            rank += mat_rank(&dense);
        }
        Ok(rank)
    }

    /// Graded Hochschild cohomology dimension at bar degree `beta` and
    /// internal degree t.
    fn hh(&self, beta: usize, t: i64) -> Result<usize, HochschildError> {
        let dim_cur = self.cochain_space(beta, t)?.len();
        let rank_cur = self.rank_delta(beta, t)?;
        let rank_prev = if beta == 0 { 0 } else { self.rank_delta(beta - 1, t)? };
        Ok(dim_cur - rank_cur - rank_prev)
    }
}

/// Hochschild cohomology of the order-3 smash product from the normalized
/// bar complex restricted to internal degree t. Only n = 1 is in range:
/// the algebra is 24-dimensional there and the restricted cochain spaces
/// stay under the 10^5 guard.
pub fn bar_oracle(n: u8, degree: usize, t: i64) -> Result<usize, HochschildError> {
    assert_eq!(n, 1, "the bar oracle only runs at n = 1");
    assert!(degree <= 2, "cohomological degree must be at most 2");
    assert!(t.abs() <= 3, "internal degree must satisfy |t| <= 3");
    BarAlgebra::order_three_smash().hh(degree, t)
}
