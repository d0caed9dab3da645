//! Closed-form Hochschild cohomology of the diagonal smash products, the
//! contraction differential against y_1⋯y_{n+2}, the truncated cohomology
//! report, its cyclic invariants, and an independent bar-complex oracle.
//!
//! The central computation is a character count: for a diagonal group
//! element γ with fixed subspace V^γ, the sector at bidegree (s, t)
//! is S^s(V^γ)^∨ ⊗ Λ^a(V^γ) ⊗ Λ^{codim}(V/V^γ) with the Λ-exponent a read
//! off from the grading, and taking invariants under the group (and
//! optionally a torus) is a dot-product test on integer weight vectors.
//! Everything in this module is exact; floating point never appears.

pub mod bar;
pub mod schouten;
pub mod truncated;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{character_generators, enumerate_group, DiagGroupElement, GroupKind};
use crate::exact::{rat, rat_int, Rational};
use crate::linalg::{invariant_subspace, BasisLabel, Degree, GradedSpace};

pub use bar::bar_oracle;
pub use schouten::{schouten_diff, schouten_sign_flipped, with_schouten_sign_flipped};
pub use truncated::{cyclic_invariant_hh2, cyclic_shift, truncated_hh, CyclicReport, TruncatedReport};

/// Errors from the Hochschild computations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum HochschildError {
    /// The contraction differential is only defined on the untwisted sector.
    #[error("contraction differential applied to a twisted-sector multivector")]
    TwistedSector,
    /// A restricted bar cochain space grew past the hard guard.
    #[error("restricted bar cochain space has dimension {dim}, above the 10^5 guard")]
    ResourceGuard { dim: usize },
}

/// Internal grading convention used to locate a bidegree cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Grading {
    /// Wedge generators have internal degree 1: Λ-exponent a = s + t − codim.
    Plain,
    /// Wedge generators have internal degree n/(n+2):
    /// a = s + ((n+2)/n)·t − codim.
    Fractional,
}

/// Optional torus invariance imposed on top of the finite group.
///
/// `H` is the full diagonal torus of the special linear group, `T` its image
/// in the projective linear group. A weight vector is fixed by either one
/// exactly when all of its components are equal as integers (triviality
/// modulo the determinant relation), so the two selectors agree on every
/// space this crate builds; both are kept so call sites can say which group
/// they mean.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TorusInvariance {
    None,
    T,
    H,
}

/// A single (s, t) cell of the cohomology, together with the grading, the
/// finite diagonal group, and an optional torus constraint.
#[derive(Debug, Clone)]
pub struct BidegreeCell {
    pub n: u8,
    /// Cohomological (bar) degree; the symmetric-power exponent.
    pub s: i64,
    /// Internal degree, rational in the fractional grading.
    pub t: Rational,
    pub grading: Grading,
    pub group: GroupKind,
    pub torus: TorusInvariance,
}

impl BidegreeCell {
    pub fn new(
        n: u8,
        s: i64,
        t: Rational,
        grading: Grading,
        group: GroupKind,
        torus: TorusInvariance,
    ) -> Self {
        assert!(n >= 1, "n must be at least 1");
        BidegreeCell { n, s, t, grading, group, torus }
    }
}

/// The fixed subspace of a diagonal group element: which coordinates it
/// leaves alone, and the codimension of their span.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedSpace {
    /// 1-based indices i with trivial exponent.
    pub indices: Vec<u8>,
    pub codim: usize,
}

/// Fixed coordinates of a diagonal element; codim = (n+2) − #fixed.
pub fn fixed_space(g: &DiagGroupElement) -> FixedSpace {
    let indices = g.fixed_indices();
    let codim = g.order_m() as usize - indices.len();
    FixedSpace { indices, codim }
}

/// One exact term of a polynomial multivector: a monomial exponent vector
/// over y_1..y_{n+2} together with a sorted wedge subset of {1..n+2}.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PvTerm {
    pub exps: Vec<u16>,
    pub wedge: Vec<u8>,
}

impl PvTerm {
    pub fn poly_degree(&self) -> i64 {
        self.exps.iter().map(|&e| e as i64).sum()
    }

    pub fn wedge_degree(&self) -> i64 {
        self.wedge.len() as i64
    }
}

/// A formal rational combination of monomial ⊗ wedge terms in a fixed
/// sector. The twisted top form on V/V^γ is implicit in the sector, so the
/// invariant is that exponents and wedge indices only touch coordinates
/// fixed by the sector element.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyVector {
    sector: DiagGroupElement,
    terms: BTreeMap<PvTerm, Rational>,
}

impl PolyVector {
    /// Zero multivector in the untwisted sector.
    pub fn zero(n: u8) -> Self {
        PolyVector::zero_in_sector(DiagGroupElement::identity(n as u32 + 2))
    }

    pub fn zero_in_sector(sector: DiagGroupElement) -> Self {
        PolyVector { sector, terms: BTreeMap::new() }
    }

    /// Single untwisted term with coefficient 1.
    pub fn monomial(n: u8, exps: &[u16], wedge: &[u8]) -> Self {
        let mut pv = PolyVector::zero(n);
        pv.add_term(PvTerm { exps: exps.to_vec(), wedge: wedge.to_vec() }, rat_int(1));
        pv
    }

    pub fn monomial_in_sector(sector: DiagGroupElement, exps: &[u16], wedge: &[u8]) -> Self {
        let mut pv = PolyVector::zero_in_sector(sector);
        pv.add_term(PvTerm { exps: exps.to_vec(), wedge: wedge.to_vec() }, rat_int(1));
        pv
    }

    pub fn sector(&self) -> &DiagGroupElement {
        &self.sector
    }

    pub fn order(&self) -> u32 {
        self.sector.order_m()
    }

    pub fn is_untwisted(&self) -> bool {
        self.sector == DiagGroupElement::identity(self.sector.order_m())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&PvTerm, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, term: &PvTerm) -> Rational {
        self.terms.get(term).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds coeff·term, keeping the sector invariant and dropping zeros.
    pub fn add_term(&mut self, term: PvTerm, coeff: Rational) {
        let m = self.sector.order_m() as usize;
        assert_eq!(term.exps.len(), m, "exponent width must be n+2");
        let fixed = self.sector.fixed_indices();
        for (i, &e) in term.exps.iter().enumerate() {
            assert!(
                e == 0 || fixed.contains(&(i as u8 + 1)),
                "polynomial part must live on coordinates fixed by the sector"
            );
        }
        assert!(
            term.wedge.windows(2).all(|w| w[0] < w[1]),
            "wedge indices must be strictly increasing"
        );
        for &i in &term.wedge {
            assert!(i >= 1 && i as usize <= m, "wedge index out of range");
            assert!(fixed.contains(&i), "wedge part must lie in the fixed subspace");
        }
        let entry = self.terms.entry(term).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            let dead: Vec<PvTerm> =
                self.terms.iter().filter(|(_, c)| c.is_zero()).map(|(t, _)| t.clone()).collect();
            for t in dead {
                self.terms.remove(&t);
            }
        }
    }

    pub fn add(&self, rhs: &PolyVector) -> PolyVector {
        assert_eq!(self.sector, rhs.sector, "sector mismatch");
        let mut out = self.clone();
        for (t, c) in rhs.terms() {
            out.add_term(t.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> PolyVector {
        self.scale(&rat_int(-1))
    }

    pub fn sub(&self, rhs: &PolyVector) -> PolyVector {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &Rational) -> PolyVector {
        let mut out = PolyVector::zero_in_sector(self.sector.clone());
        if c.is_zero() {
            return out;
        }
        for (t, k) in self.terms() {
            out.terms.insert(t.clone(), c * k);
        }
        out
    }

    /// The (s, t) bidegree in the fractional grading, when homogeneous:
    /// s is the polynomial degree and t = (a + codim − s)·n/(n+2) where a is
    /// the wedge degree. None when terms disagree.
    pub fn bidegree(&self) -> Option<(i64, Rational)> {
        let m = self.sector.order_m() as i64;
        let n = m - 2;
        let codim = fixed_space(&self.sector).codim as i64;
        let mut seen: Option<(i64, Rational)> = None;
        for (term, _) in self.terms() {
            let s = term.poly_degree();
            let t = rat((term.wedge_degree() + codim - s) * n, m);
            match &seen {
                None => seen = Some((s, t)),
                Some(prev) if *prev == (s, t) => {}
                Some(_) => return None,
            }
        }
        seen
    }
}

impl fmt::Display for PolyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // Reverse lexicographic order puts low-index variables first, so
        // the cyclic generator reads y1^3+y2^3+y3^3 rather than backwards.
        for (term, coeff) in self.terms().rev() {
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in term.exps.iter().enumerate() {
                if e == 1 {
                    factors.push(format!("y{}", i + 1));
                } else if e > 1 {
                    factors.push(format!("y{}^{}", i + 1, e));
                }
            }
            let poly = factors.join("*");
            let wedge: String = term.wedge.iter().map(|i| format!("v{i}")).collect();
            let body = match (poly.is_empty(), wedge.is_empty()) {
                (true, true) => "1".to_string(),
                (false, true) => poly,
                (true, false) => wedge,
                (false, false) => format!("{poly} {wedge}"),
            };
            let mag = coeff.abs();
            let unsigned = if body == "1" {
                format!("{mag}")
            } else if mag == rat_int(1) {
                body
            } else {
                format!("{mag}*{body}")
            };
            if first {
                if coeff.is_negative() {
                    write!(f, "-{unsigned}")?;
                } else {
                    write!(f, "{unsigned}")?;
                }
                first = false;
            } else if coeff.is_negative() {
                write!(f, "-{unsigned}")?;
            } else {
                write!(f, "+{unsigned}")?;
            }
        }
        Ok(())
    }
}

/// All exponent vectors of total degree d supported on `vars` (1-based),
/// full width `width`, in lexicographic order.
pub(crate) fn monomials_of_degree(vars: &[u8], d: usize, width: usize) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    let mut exps = vec![0u16; width];
    fn rec(vars: &[u8], pos: usize, left: usize, exps: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if pos == vars.len() {
            if left == 0 {
                out.push(exps.clone());
            }
            return;
        }
        for e in 0..=left {
            exps[vars[pos] as usize - 1] = e as u16;
            rec(vars, pos + 1, left - e, exps, out);
            exps[vars[pos] as usize - 1] = 0;
        }
    }
    rec(vars, 0, d, &mut exps, &mut out);
    out.sort();
    out
}

/// All sorted k-subsets of `vars`, in lexicographic order.
pub(crate) fn subsets_of_size(vars: &[u8], k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(vars: &[u8], start: usize, k: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..vars.len() {
            cur.push(vars[i]);
            rec(vars, i + 1, k, cur, out);
            cur.pop();
        }
    }
    rec(vars, 0, k, &mut cur, &mut out);
    out
}

/// The Λ-exponent of a sector, or None when the cell does not populate it
/// (non-integral or out of range). Never an error: such sectors contribute 0.
fn lambda_exponent(cell: &BidegreeCell, codim: usize, fixed_dim: usize) -> Option<usize> {
    let m = cell.n as i64 + 2;
    let n = cell.n as i64;
    let a = match cell.grading {
        Grading::Plain => rat_int(cell.s) + cell.t.clone() - rat_int(codim as i64),
        Grading::Fractional => {
            rat_int(cell.s) + cell.t.clone() * rat(m, n) - rat_int(codim as i64)
        }
    };
    if !a.is_integer() {
        return None;
    }
    let a = a.to_integer().to_i64().expect("lambda exponent fits i64");
    if a < 0 || a as usize > fixed_dim {
        return None;
    }
    Some(a as usize)
}

/// Labeled monomial basis of one sector of a cell: monomials of degree s in
/// the fixed coordinates tensor wedge subsets of size a, with the implicit
/// dual top form on the moving coordinates folded into the character.
fn sector_space(cell: &BidegreeCell, g: &DiagGroupElement) -> Option<GradedSpace> {
    if cell.s < 0 {
        return None;
    }
    let m = cell.n as usize + 2;
    let fixed = fixed_space(g);
    let a = lambda_exponent(cell, fixed.codim, fixed.indices.len())?;
    let monos = monomials_of_degree(&fixed.indices, cell.s as usize, m);
    let wedges = subsets_of_size(&fixed.indices, a);
    let mut twist = vec![0i64; m];
    for i in 1..=m as u8 {
        if !fixed.indices.contains(&i) {
            twist[i as usize - 1] = -1;
        }
    }
    let mut labels = Vec::with_capacity(monos.len() * wedges.len());
    for exps in &monos {
        for wedge in &wedges {
            let mut character = twist.clone();
            for (i, &e) in exps.iter().enumerate() {
                character[i] -= e as i64;
            }
            for &i in wedge {
                character[i as usize - 1] += 1;
            }
            let name = format!(
                "{} | {}",
                PolyVector::monomial(cell.n, exps, wedge),
                g.exps().iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
            );
            labels.push(BasisLabel { name, degree: Degree(cell.t.clone()), character });
        }
    }
    if labels.is_empty() {
        return None;
    }
    Some(GradedSpace::new(cell.n as u32 + 2, labels))
}

fn sector_dim(cell: &BidegreeCell, g: &DiagGroupElement) -> usize {
    let Some(space) = sector_space(cell, g) else { return 0 };
    let m = cell.n as u32 + 2;
    let ggens = character_generators(cell.group, cell.n as u32);
    let group_pass = invariant_subspace(&space, m, &ggens);
    match cell.torus {
        TorusInvariance::None => group_pass.len(),
        TorusInvariance::T | TorusInvariance::H => {
            let tgens: Vec<Vec<i64>> = (0..m as usize - 1)
                .map(|i| {
                    let mut v = vec![0i64; m as usize];
                    v[i] = 1;
                    v[i + 1] = -1;
                    v
                })
                .collect();
            let torus_pass = invariant_subspace(&space, 0, &tgens);
            group_pass.iter().filter(|i| torus_pass.contains(i)).count()
        }
    }
}

/// Dimension of the chosen invariant part of the cohomology at one bidegree
/// cell: the sum over group elements γ of the invariant dimension of
/// S^s(V^γ)^∨ ⊗ Λ^a(V^γ) ⊗ Λ^{codim}(V/V^γ). Exact character counting;
/// sectors with non-integral or out-of-range Λ-exponent contribute zero.
pub fn hh_dim(cell: &BidegreeCell) -> usize {
    let sectors = enumerate_group(cell.group, cell.n as u32);
    sectors.par_iter().map(|g| sector_dim(cell, g)).sum()
}
