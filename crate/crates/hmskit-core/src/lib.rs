//! Exact computational algebra and verified numerics for a family of graded
//! Koszul-type algebras and the torus fibrations mirror to them.
//!
//! The crate is organized bottom-up:
//!
//! * [`exact`]: rational and cyclotomic-field arithmetic (everything above it
//!   is exact unless a function name says otherwise);
//! * [`linalg`]: fraction-free linear algebra over cyclotomic fields on graded
//!   spaces, plus invariant subspaces under diagonal group actions;
//! * [`algebra`]: exterior algebras, finite diagonal groups, smash products,
//!   idempotent decompositions, and the trivial-extension category they
//!   assemble into;
//! * [`hochschild`]: Hochschild cohomology via a closed fixed-point formula,
//!   the truncated spectral-sequence computation in low degrees, and an
//!   independent bar-complex oracle;
//! * [`lg`]: critical points and critical values of the superpotentials on the
//!   mirror tori, by exact elimination and by verified Newton iteration;
//! * [`coamoeba`]: zonotope membership by exact linear programming, lifted
//!   zonotope packings on the torus, and raster probes of fiber coamoebas;
//! * [`flow`]: Hamiltonian circle flows near the large-volume limit, frame
//!   transport, and monodromy phase estimates.
//!
//! All public computations return either exact data or a value together with
//! the tolerance it was checked against; nothing silently rounds.

pub mod algebra;
pub mod coamoeba;
pub mod exact;
pub mod flow;
pub mod hochschild;
pub mod lg;
pub mod linalg;
