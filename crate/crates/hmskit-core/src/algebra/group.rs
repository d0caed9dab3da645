//! The finite diagonal symmetry groups: the cyclic group Γ_{n+2} generated by
//! ζ·id, the sum-zero subgroup Γ̃ of (ℤ/(n+2))^{n+2}, and its image Γ in the
//! projective group, represented by exponent vectors normalized so the first
//! coordinate is trivial.

use crate::exact::CycScalar;

/// Diagonal element diag(ζ^{a_1}, ..., ζ^{a_{n+2}}) of order m = n+2,
/// stored by its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagGroupElement {
    m: u32,
    exps: Vec<u8>,
}

impl DiagGroupElement {
    pub fn new(m: u32, exps: Vec<u8>) -> Self {
        assert_eq!(exps.len(), m as usize, "exponent vector has length n+2 = m");
        assert!(exps.iter().all(|&e| (e as u32) < m));
        DiagGroupElement { m, exps }
    }

    pub fn identity(m: u32) -> Self {
        DiagGroupElement {
            m,
            exps: vec![0; m as usize],
        }
    }

    /// γ^l where γ = ζ·id generates Γ_{n+2}.
    pub fn scalar_power(m: u32, l: i64) -> Self {
        let e = l.rem_euclid(m as i64) as u8;
        DiagGroupElement {
            m,
            exps: vec![e; m as usize],
        }
    }

    pub fn order_m(&self) -> u32 {
        self.m
    }

    pub fn exps(&self) -> &[u8] {
        &self.exps
    }

    pub fn mul(&self, rhs: &DiagGroupElement) -> DiagGroupElement {
        assert_eq!(self.m, rhs.m);
        DiagGroupElement {
            m: self.m,
            exps: self
                .exps
                .iter()
                .zip(&rhs.exps)
                .map(|(&a, &b)| ((a as u32 + b as u32) % self.m) as u8)
                .collect(),
        }
    }

    pub fn inverse(&self) -> DiagGroupElement {
        DiagGroupElement {
            m: self.m,
            exps: self
                .exps
                .iter()
                .map(|&a| ((self.m - a as u32) % self.m) as u8)
                .collect(),
        }
    }

    /// Canonical projective representative: divide by the scalar that makes
    /// the first coordinate trivial.
    pub fn normalize_projective(&self) -> DiagGroupElement {
        let a0 = self.exps[0] as u32;
        DiagGroupElement {
            m: self.m,
            exps: self
                .exps
                .iter()
                .map(|&a| ((a as u32 + self.m - a0) % self.m) as u8)
                .collect(),
        }
    }

    /// The scalar ζ^{Σ_{i∈S} a_i} by which the element acts on v_S
    /// (1-based generator indices).
    pub fn act_on_subset(&self, subset: &[u8]) -> CycScalar {
        let total: i64 = subset.iter().map(|&i| self.exps[i as usize - 1] as i64).sum();
        CycScalar::zeta_pow(self.m, total)
    }

    /// Indices (1-based) of the coordinates fixed by the element.
    pub fn fixed_indices(&self) -> Vec<u8> {
        self.exps
            .iter()
            .enumerate()
            .filter_map(|(i, &a)| (a == 0).then_some(i as u8 + 1))
            .collect()
    }

    /// Exponent vector as signed integers, for character arithmetic.
    pub fn exps_i64(&self) -> Vec<i64> {
        self.exps.iter().map(|&a| a as i64).collect()
    }
}

/// Which of the three diagonal groups to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    /// Cyclic Γ_{n+2} = ⟨ζ·id⟩, order n+2.
    Cyclic,
    /// Γ̃: exponent vectors with coordinate sum ≡ 0 mod n+2, order (n+2)^{n+1}.
    GammaTilde,
    /// Γ = Γ̃ modulo scalars, normalized first coordinate, order (n+2)^n.
    Gamma,
}

/// Enumerates the chosen group in a deterministic order.
pub fn enumerate_group(kind: GroupKind, n: u32) -> Vec<DiagGroupElement> {
    let m = n + 2;
    match kind {
        GroupKind::Cyclic => (0..m as i64).map(|l| DiagGroupElement::scalar_power(m, l)).collect(),
        GroupKind::GammaTilde => sum_zero_vectors(m, false),
        GroupKind::Gamma => sum_zero_vectors(m, true),
    }
}

/// A small generating set of the chosen group, as integer exponent vectors.
/// A character w is invariant under the whole group iff dot(g, w) ≡ 0 mod
/// (n+2) for every generator g returned here; this replaces a sweep over all
/// (n+2)^{n+1} elements in invariance counts.
pub fn character_generators(kind: GroupKind, n: u32) -> Vec<Vec<i64>> {
    let m = (n + 2) as usize;
    match kind {
        GroupKind::Cyclic => vec![vec![1i64; m]],
        // Consecutive differences e_i - e_{i+1} generate the sum-zero
        // subgroup: any integer vector with coordinate sum km differs from a
        // root-lattice vector by km·e_1 ≡ 0 mod m.
        GroupKind::GammaTilde => (0..m - 1)
            .map(|i| {
                let mut g = vec![0i64; m];
                g[i] = 1;
                g[i + 1] = -1;
                g
            })
            .collect(),
        // Projective representatives have first coordinate zero; differences
        // on the remaining coordinates generate them by the same argument.
        GroupKind::Gamma => (1..m - 1)
            .map(|i| {
                let mut g = vec![0i64; m];
                g[i] = 1;
                g[i + 1] = -1;
                g
            })
            .collect(),
    }
}

/// All exponent vectors with zero coordinate sum; optionally only those with
/// first coordinate zero (projective representatives).
fn sum_zero_vectors(m: u32, first_zero: bool) -> Vec<DiagGroupElement> {
    let len = m as usize;
    let free = if first_zero { len - 2 } else { len - 1 };
    let start = if first_zero { 1 } else { 0 };
    let mut out = Vec::new();
    let mut exps = vec![0u8; len];
    let total = (m as u64).pow(free as u32);
    for code in 0..total {
        let mut c = code;
        let mut sum = 0u32;
        for slot in 0..free {
            let digit = (c % m as u64) as u8;
            c /= m as u64;
            exps[start + slot] = digit;
            sum += digit as u32;
        }
        exps[len - 1] = ((m - (sum % m)) % m) as u8;
        out.push(DiagGroupElement::new(m, exps.clone()));
    }
    out
}
