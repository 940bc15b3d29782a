//! Exact spectral toolkit for the crown graph `Cr(n)` and its line graph `L(Cr(n))`.
//!
//! The crate builds the graph families, derives their adjacency, distance and
//! distance-`i` matrices, computes exact integer spectra through big-integer
//! characteristic polynomials, and checks the known closed forms for these
//! spectra against the computed ones.
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`graph`] | graph constructors, line graph, direct product, small isomorphism search |
//! | [`matrix`] | integer matrices, BFS distances, distance-`i` matrices, identity checks |
//! | [`spectra`] | characteristic polynomials, integer roots, nullity, Jacobi cross-check |
//! | [`automorphism`] | permutations, the `PA = AP` criterion, the reversal involution |
//! | [`closed_forms`] | closed-form spectra and the per-`n` verification driver |
//! | [`report`] | verification records, ledger output, text formats |

pub mod automorphism;
pub mod closed_forms;
pub mod error;
pub mod graph;
pub mod matrix;
pub mod report;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::{Graph, Side, VertexLabel};
pub use matrix::IntMatrix;
pub use report::{ClaimId, ClaimRecord, Status, VerificationReport};
pub use spectra::{ApproxSpectrum, CharPoly, RootOutcome, Spectrum};
