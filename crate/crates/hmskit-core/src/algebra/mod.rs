//! Exterior algebras, diagonal symmetry groups, smash products, and the
//! trivial-extension category, with every structural identity verified
//! exactly: idempotent relations, Hom-table dimensions, the fractional
//! regrading, and associativity of the signed composition.

pub mod group;
pub mod koszul;
pub mod smash;
pub mod trivext;

pub use group::{character_generators, enumerate_group, DiagGroupElement, GroupKind};
pub use koszul::{merge_sign, with_trivext_sign_flipped};
pub use smash::{hom_piece, idempotent, idempotents, smash_basis, ExtElement, SmashElement};
pub use trivext::{hom_window, triv_ext_compose, TrivExtMorphism};

/// Errors from categorical operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("object mismatch: cannot compose {f_source}->{f_target} after {g_source}->{g_target}")]
    ObjectMismatch {
        f_source: u8,
        f_target: u8,
        g_source: u8,
        g_target: u8,
    },
}
