//! Graded spaces with rational degrees, graded maps, and invariant subspaces
//! of diagonal abelian actions.
//!
//! Degrees in this project live in (1/(n+2))ℤ or mixed (1/n)ℤ lattices, so
//! they are stored as exact rationals. Basis labels are opaque names carrying
//! their degree and an integer character vector; a diagonal group element
//! acts on a label by the root of unity picked out by the dot product of its
//! exponent vector with the label's character.

use std::fmt;

use crate::exact::{CycScalar, Rational};

use super::{image_basis_raw, kernel_basis_raw, mat_rank, matvec};

/// Exact rational degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Degree(pub Rational);

impl Degree {
    pub fn int(n: i64) -> Self {
        Degree(crate::exact::rat_int(n))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Degree(crate::exact::rat(n, d))
    }

    pub fn add(&self, rhs: &Degree) -> Degree {
        Degree(&self.0 + &rhs.0)
    }

    pub fn sub(&self, rhs: &Degree) -> Degree {
        Degree(&self.0 - &rhs.0)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A named basis element with its degree and diagonal character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisLabel {
    pub name: String,
    pub degree: Degree,
    /// Integer weight vector; the group pairs with it modulo its exponent.
    pub character: Vec<i64>,
}

/// Finite-dimensional graded vector space over ℚ(ζ_m) with labeled basis.
#[derive(Debug, Clone)]
pub struct GradedSpace {
    order: u32,
    labels: Vec<BasisLabel>,
}

impl GradedSpace {
    pub fn new(order: u32, labels: Vec<BasisLabel>) -> Self {
        let mut names: Vec<&str> = labels.iter().map(|l| l.name.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), labels.len(), "basis labels must be distinct");
        GradedSpace { order, labels }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    pub fn degree(&self, i: usize) -> &Degree {
        &self.labels[i].degree
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l.name == name)
    }
}

/// Degree-homogeneous linear map between graded spaces, stored as a dense
/// matrix with rows indexed by the codomain basis.
#[derive(Debug, Clone)]
pub struct GradedMap {
    domain: GradedSpace,
    codomain: GradedSpace,
    shift: Degree,
    matrix: Vec<Vec<CycScalar>>,
}

impl GradedMap {
    /// Checks shape and homogeneity: a nonzero entry in row r, column c
    /// requires deg(codomain_r) = deg(domain_c) + shift.
    pub fn new(
        domain: GradedSpace,
        codomain: GradedSpace,
        shift: Degree,
        matrix: Vec<Vec<CycScalar>>,
    ) -> Self {
        assert_eq!(domain.order(), codomain.order(), "scalar field mismatch");
        assert_eq!(matrix.len(), codomain.dim(), "row count = codomain dim");
        for (r, row) in matrix.iter().enumerate() {
            assert_eq!(row.len(), domain.dim(), "column count = domain dim");
            for (c, entry) in row.iter().enumerate() {
                if !entry.is_zero() {
                    assert_eq!(
                        codomain.degree(r),
                        &domain.degree(c).add(&shift),
                        "entry ({r},{c}) breaks homogeneity"
                    );
                }
            }
        }
        GradedMap {
            domain,
            codomain,
            shift,
            matrix,
        }
    }

    pub fn domain(&self) -> &GradedSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &GradedSpace {
        &self.codomain
    }

    pub fn shift(&self) -> &Degree {
        &self.shift
    }

    pub fn matrix(&self) -> &[Vec<CycScalar>] {
        &self.matrix
    }

    pub fn apply(&self, v: &[CycScalar]) -> Vec<CycScalar> {
        assert_eq!(v.len(), self.domain.dim());
        matvec(&self.matrix, v, self.domain.order())
    }

    pub fn rank(&self) -> usize {
        mat_rank(&self.matrix)
    }

    /// Exact kernel basis as domain coordinate vectors.
    pub fn kernel_basis(&self) -> Vec<Vec<CycScalar>> {
        kernel_basis_raw(&self.matrix, self.domain.dim(), self.domain.order())
    }

    /// Exact image basis as codomain coordinate vectors.
    pub fn image_basis(&self) -> Vec<Vec<CycScalar>> {
        image_basis_raw(&self.matrix)
    }
}

/// Indices of the basis labels fixed by every generator of a diagonal
/// abelian action. Generator `g` fixes label `l` iff dot(g, l.character) is
/// divisible by `modulus`; `modulus == 0` means the dot product must vanish
/// over the integers (a one-parameter torus rather than a finite group).
/// This is a pure character count; no elimination.
pub fn invariant_subspace(space: &GradedSpace, modulus: u32, generators: &[Vec<i64>]) -> Vec<usize> {
    let m = modulus as i64;
    (0..space.dim())
        .filter(|&i| {
            let w = &space.labels()[i].character;
            generators.iter().all(|g| {
                assert_eq!(g.len(), w.len(), "character length mismatch");
                let dot: i64 = g.iter().zip(w).map(|(a, b)| a * b).sum();
                if m == 0 {
                    dot == 0
                } else {
                    dot.rem_euclid(m) == 0
                }
            })
        })
        .collect()
}
