//! Exterior algebra elements, smash products with the diagonal groups, group
//! algebra idempotents, and the graded Hom pieces e_k Q̃ e_j.
//!
//! Scalars always live in ℚ(ζ_{n+2}): the group action on the exterior
//! generators produces roots of unity even when inputs are rational.

use std::collections::BTreeMap;

use crate::exact::{rat, CycScalar};
use crate::linalg::{BasisLabel, Degree, GradedSpace};

use super::group::{enumerate_group, DiagGroupElement, GroupKind};
use super::koszul::merge_sign;

/// Element of ΛV for V of dimension n+2, as a signed sum of sorted index
/// subsets with ℚ(ζ_{n+2}) coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtElement {
    n: u8,
    terms: BTreeMap<Vec<u8>, CycScalar>,
}

impl ExtElement {
    pub fn zero(n: u8) -> Self {
        ExtElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn order(&self) -> u32 {
        self.n as u32 + 2
    }

    pub fn dim_v(&self) -> u8 {
        self.n + 2
    }

    /// c · v_S for a sorted subset S of {1, ..., n+2}.
    pub fn monomial(n: u8, subset: &[u8], coeff: CycScalar) -> Self {
        assert!(subset.windows(2).all(|w| w[0] < w[1]), "subset must be sorted");
        assert!(subset.iter().all(|&i| 1 <= i && i <= n + 2), "index out of range");
        assert_eq!(coeff.order(), n as u32 + 2);
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(subset.to_vec(), coeff);
        }
        ExtElement { n, terms }
    }

    pub fn scalar(n: u8, c: CycScalar) -> Self {
        Self::monomial(n, &[], c)
    }

    pub fn one(n: u8) -> Self {
        Self::scalar(n, CycScalar::one(n as u32 + 2))
    }

    /// The generator v_i.
    pub fn generator(n: u8, i: u8) -> Self {
        Self::monomial(n, &[i], CycScalar::one(n as u32 + 2))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u8], &CycScalar)> {
        self.terms.iter().map(|(s, c)| (s.as_slice(), c))
    }

    pub fn coeff(&self, subset: &[u8]) -> CycScalar {
        self.terms
            .get(subset)
            .cloned()
            .unwrap_or_else(|| CycScalar::zero(self.n as u32 + 2))
    }

    /// Coefficient of the top form v_1 ∧ ... ∧ v_{n+2}.
    pub fn top_coeff(&self) -> CycScalar {
        let full: Vec<u8> = (1..=self.n + 2).collect();
        self.coeff(&full)
    }

    fn insert(&mut self, subset: Vec<u8>, c: CycScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(subset) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, rhs: &ExtElement) -> ExtElement {
        assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for (s, c) in &rhs.terms {
            out.insert(s.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> ExtElement {
        ExtElement {
            n: self.n,
            terms: self.terms.iter().map(|(s, c)| (s.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, rhs: &ExtElement) -> ExtElement {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &CycScalar) -> ExtElement {
        let mut out = ExtElement::zero(self.n);
        for (s, a) in &self.terms {
            out.insert(s.clone(), a.mul(c));
        }
        out
    }

    /// Wedge product with Koszul signs from the shared merge rule.
    pub fn wedge(&self, rhs: &ExtElement) -> ExtElement {
        assert_eq!(self.n, rhs.n);
        let mut out = ExtElement::zero(self.n);
        for (sa, ca) in &self.terms {
            for (sb, cb) in &rhs.terms {
                if let Some((merged, sign)) = merge_sign(sa, sb) {
                    let mut c = ca.mul(cb);
                    if sign < 0 {
                        c = c.neg();
                    }
                    out.insert(merged, c);
                }
            }
        }
        out
    }

    /// Restriction to one wedge degree.
    pub fn graded_component(&self, degree: usize) -> ExtElement {
        ExtElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(s, _)| s.len() == degree)
                .map(|(s, c)| (s.clone(), c.clone()))
                .collect(),
        }
    }

    /// Wedge degrees present in the support.
    pub fn degrees(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.terms.keys().map(|s| s.len()).collect();
        ds.dedup();
        ds.sort_unstable();
        ds.dedup();
        ds
    }
}

/// Element of the smash product ΛV ⋊ G, as a sum of v_S ⊗ g terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmashElement {
    n: u8,
    terms: BTreeMap<(Vec<u8>, Vec<u8>), CycScalar>,
}

impl SmashElement {
    pub fn zero(n: u8) -> Self {
        SmashElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn order(&self) -> u32 {
        self.n as u32 + 2
    }

    pub fn from_term(n: u8, subset: &[u8], g: &DiagGroupElement, coeff: CycScalar) -> Self {
        assert!(subset.windows(2).all(|w| w[0] < w[1]));
        assert!(subset.iter().all(|&i| 1 <= i && i <= n + 2));
        assert_eq!(g.order_m(), n as u32 + 2);
        assert_eq!(coeff.order(), n as u32 + 2);
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((subset.to_vec(), g.exps().to_vec()), coeff);
        }
        SmashElement { n, terms }
    }

    pub fn one(n: u8) -> Self {
        Self::from_term(
            n,
            &[],
            &DiagGroupElement::identity(n as u32 + 2),
            CycScalar::one(n as u32 + 2),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u8], &[u8], &CycScalar)> {
        self.terms.iter().map(|((s, g), c)| (s.as_slice(), g.as_slice(), c))
    }

    fn insert(&mut self, key: (Vec<u8>, Vec<u8>), c: CycScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, rhs: &SmashElement) -> SmashElement {
        assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert(k.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> SmashElement {
        SmashElement {
            n: self.n,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, rhs: &SmashElement) -> SmashElement {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &CycScalar) -> SmashElement {
        let mut out = SmashElement::zero(self.n);
        for (k, a) in &self.terms {
            out.insert(k.clone(), a.mul(c));
        }
        out
    }

    /// Smash multiplication: (a ⊗ g)(b ⊗ h) = (a ∧ g·b) ⊗ gh, where g acts
    /// on v_S by the root of unity ζ^{Σ_{i∈S} g_i}.
    pub fn mul(&self, rhs: &SmashElement) -> SmashElement {
        assert_eq!(self.n, rhs.n);
        let m = self.n as u32 + 2;
        let mut out = SmashElement::zero(self.n);
        for ((sa, ga), ca) in &self.terms {
            let g = DiagGroupElement::new(m, ga.clone());
            for ((sb, gb), cb) in &rhs.terms {
                let Some((merged, sign)) = merge_sign(sa, sb) else {
                    continue;
                };
                let h = DiagGroupElement::new(m, gb.clone());
                let mut c = ca.mul(cb).mul(&g.act_on_subset(sb));
                if sign < 0 {
                    c = c.neg();
                }
                out.insert((merged, g.mul(&h).exps().to_vec()), c);
            }
        }
        out
    }
}

/// The primitive idempotent e_j = (1/m) Σ_l ζ^{-jl} γ^l of the cyclic group
/// algebra, inside the smash product; j is taken modulo m.
pub fn idempotent(n: u8, j: i64) -> SmashElement {
    let m = n as u32 + 2;
    let inv_m = CycScalar::from_rational(m, rat(1, m as i64));
    let mut out = SmashElement::zero(n);
    for l in 0..m as i64 {
        let coeff = CycScalar::zeta_pow(m, -j * l).mul(&inv_m);
        let term = SmashElement::from_term(n, &[], &DiagGroupElement::scalar_power(m, l), coeff);
        out = out.add(&term);
    }
    out
}

/// All m primitive idempotents e_0, ..., e_{m-1} for the cyclic group of
/// order m acting on ΛV with dim V = m.
pub fn idempotents(m: u32) -> Vec<SmashElement> {
    assert!(m >= 2);
    (0..m as i64).map(|j| idempotent((m - 2) as u8, j)).collect()
}

/// Basis of ΛV ⋊ G as (subset, group element) pairs, deterministic order.
pub fn smash_basis(n: u8, kind: GroupKind) -> Vec<(Vec<u8>, DiagGroupElement)> {
    let dim = n as usize + 2;
    let group = enumerate_group(kind, n as u32);
    let mut out = Vec::with_capacity((1usize << dim) * group.len());
    for mask in 0u32..(1u32 << dim) {
        let subset: Vec<u8> = (0..dim as u8).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect();
        for g in &group {
            out.push((subset.clone(), g.clone()));
        }
    }
    out
}

#[cfg(test)]
pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num = 1usize;
    for i in 0..k {
        num = num * (n - i) / (i + 1);
    }
    num
}

/// The graded piece e_k Q̃ e_j as a labeled space: monomials v_S ⊗ e_j with
/// |S| ≡ k - j mod n+2, carrying the fractional regrading
/// deg = (n·|S| + 2(k-j)) / (n+2) and the torus character of v_S.
///
/// Under this regrading the forward pieces (j ≤ k) sit in integer degree
/// k - j and the diagonal carries degrees {0, n}.
pub fn hom_piece(n: u8, j: u8, k: u8) -> GradedSpace {
    let m = n as usize + 2;
    assert!((1..=m as u8).contains(&j) && (1..=m as u8).contains(&k));
    let windows: Vec<usize> = if j == k {
        vec![0, m]
    } else {
        vec![(k as i64 - j as i64).rem_euclid(m as i64) as usize]
    };
    let mut labels = Vec::new();
    for mask in 0u32..(1u32 << m) {
        let subset: Vec<u8> = (0..m as u8).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect();
        if !windows.contains(&subset.len()) {
            continue;
        }
        let name = if subset.is_empty() {
            format!("e{j}")
        } else {
            let idx: String = subset.iter().map(|i| i.to_string()).collect();
            format!("v{idx}e{j}")
        };
        let degree = Degree(rat(
            n as i64 * subset.len() as i64 + 2 * (k as i64 - j as i64),
            m as i64,
        ));
        let mut character = vec![0i64; m];
        for &i in &subset {
            character[i as usize - 1] = 1;
        }
        labels.push(BasisLabel {
            name,
            degree,
            character,
        });
    }
    labels.sort_by(|a, b| a.name.len().cmp(&b.name.len()).then(a.name.cmp(&b.name)));
    GradedSpace::new(n as u32 + 2, labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn v(n: u8, i: u8) -> ExtElement {
        ExtElement::generator(n, i)
    }

    #[test]
    fn wedge_examples() {
        let n = 2u8;
        let v12 = ExtElement::monomial(n, &[1, 2], CycScalar::one(4));
        assert_eq!(v(n, 1).wedge(&v(n, 2)), v12);
        assert_eq!(v(n, 2).wedge(&v(n, 1)), v12.neg());
        assert!(v(n, 1).wedge(&v(n, 1)).is_zero());
    }

    fn random_ext(rng: &mut ChaCha8Rng, n: u8) -> ExtElement {
        let m = n as u32 + 2;
        let mut out = ExtElement::zero(n);
        for _ in 0..rng.gen_range(1..=3) {
            let mask: u32 = rng.gen_range(0..(1u32 << (n + 2)));
            let subset: Vec<u8> = (0..n + 2).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect();
            let c = match rng.gen_range(0..4) {
                0 => CycScalar::zeta(m),
                1 => CycScalar::from_int(m, -1),
                2 => CycScalar::from_int(m, 2),
                _ => CycScalar::one(m),
            };
            out = out.add(&ExtElement::monomial(n, &subset, c));
        }
        out
    }

    fn random_smash(rng: &mut ChaCha8Rng, n: u8, group: &[DiagGroupElement]) -> SmashElement {
        let m = n as u32 + 2;
        let mut out = SmashElement::zero(n);
        for _ in 0..rng.gen_range(1..=3) {
            let mask: u32 = rng.gen_range(0..(1u32 << (n + 2)));
            let subset: Vec<u8> = (0..n + 2).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect();
            let g = &group[rng.gen_range(0..group.len())];
            let c = match rng.gen_range(0..3) {
                0 => CycScalar::zeta(m),
                1 => CycScalar::from_int(m, -2),
                _ => CycScalar::one(m),
            };
            out = out.add(&SmashElement::from_term(n, &subset, g, c));
        }
        out
    }

    #[test]
    fn wedge_associative_and_graded_commutative() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=4u8 {
            for _ in 0..40 {
                let (a, b, c) = (
                    random_ext(&mut rng, n),
                    random_ext(&mut rng, n),
                    random_ext(&mut rng, n),
                );
                assert_eq!(a.wedge(&b).wedge(&c), a.wedge(&b.wedge(&c)));
                // graded commutativity checked on homogeneous pieces
                for p in 0..=(n as usize + 2) {
                    for q in 0..=(n as usize + 2) {
                        let ap = a.graded_component(p);
                        let bq = b.graded_component(q);
                        let lhs = ap.wedge(&bq);
                        let rhs = bq.wedge(&ap);
                        if (p * q) % 2 == 0 {
                            assert_eq!(lhs, rhs);
                        } else {
                            assert_eq!(lhs, rhs.neg());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn idempotent_identities_exact() {
        for m in [3u32, 4, 5, 6] {
            let es = idempotents(m);
            let n = (m - 2) as u8;
            let mut total = SmashElement::zero(n);
            for (j, e) in es.iter().enumerate() {
                assert_eq!(e.mul(e), *e, "e_{j}^2 = e_{j} at m={m}");
                for (k, f) in es.iter().enumerate() {
                    if j != k {
                        assert!(e.mul(f).is_zero(), "e_{j} e_{k} = 0 at m={m}");
                    }
                }
                total = total.add(e);
            }
            assert_eq!(total, SmashElement::one(n), "sum of idempotents = 1 at m={m}");
        }
    }

    #[test]
    fn idempotent_e0_matches_formula_at_m3() {
        // e_0 = (1 + γ + γ^2)/3
        let third = CycScalar::from_rational(3, rat(1, 3));
        let mut expect = SmashElement::zero(1);
        for l in 0..3 {
            expect = expect.add(&SmashElement::from_term(
                1,
                &[],
                &DiagGroupElement::scalar_power(3, l),
                third.clone(),
            ));
        }
        assert_eq!(idempotent(1, 0), expect);
        assert_eq!(expect.mul(&expect), expect);
    }

    #[test]
    fn smash_multiplication_associative() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=3u8 {
            let group = enumerate_group(GroupKind::GammaTilde, n as u32);
            for _ in 0..30 {
                let a = random_smash(&mut rng, n, &group);
                let b = random_smash(&mut rng, n, &group);
                let c = random_smash(&mut rng, n, &group);
                assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            }
        }
    }

    #[test]
    fn smash_dimensions() {
        for n in 1..=3u8 {
            let m = n as usize + 2;
            assert_eq!(
                smash_basis(n, GroupKind::Cyclic).len(),
                (1 << m) * m,
                "dim of ΛV ⋊ Γ_(n+2)"
            );
            assert_eq!(
                smash_basis(n, GroupKind::GammaTilde).len(),
                (1 << m) * m.pow(n as u32 + 1)
            );
        }
    }

    #[test]
    fn hom_piece_dimensions_match_table() {
        for n in 1..=4u8 {
            let m = n as usize + 2;
            for j in 1..=m as u8 {
                for k in 1..=m as u8 {
                    let dim = hom_piece(n, j, k).dim();
                    let expect = if j < k {
                        binomial(m, (k - j) as usize)
                    } else if j == k {
                        2
                    } else {
                        binomial(m, (k as i64 - j as i64 + m as i64) as usize)
                    };
                    assert_eq!(dim, expect, "n={n} j={j} k={k}");
                }
            }
        }
        // the three spelled-out instances
        assert_eq!(hom_piece(2, 1, 2).dim(), 4);
        assert_eq!(hom_piece(2, 1, 1).dim(), 2);
        assert_eq!(hom_piece(1, 2, 1).dim(), 3);
    }

    #[test]
    fn regrading_shift_is_exact() {
        for n in 1..=4u8 {
            let m = n as usize + 2;
            for j in 1..=m as u8 {
                for k in 1..=m as u8 {
                    let piece = hom_piece(n, j, k);
                    for label in piece.labels() {
                        let wedge_deg: i64 = label.character.iter().sum();
                        let lhs = &label.degree.0 - rat(n as i64 * wedge_deg, m as i64);
                        assert_eq!(lhs, rat(2 * (k as i64 - j as i64), m as i64));
                    }
                }
            }
        }
    }

    #[test]
    fn diagonal_hom_degrees_are_zero_and_n() {
        for n in 1..=4u8 {
            let piece = hom_piece(n, 1, 1);
            let mut degs: Vec<Rational> = piece.labels().iter().map(|l| l.degree.0.clone()).collect();
            degs.sort();
            degs.dedup();
            assert_eq!(degs, vec![rat(0, 1), rat(n as i64, 1)]);
        }
    }
}
