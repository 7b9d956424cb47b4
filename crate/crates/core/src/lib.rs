//! Classification of maximal Cohen-Macaulay modules over the cyclic
//! quotient surface singularities 1/n(1,a).
//!
//! The crate is organized as a pipeline:
//!
//! - [`hj`] validates the pair (n, a) and computes the Hirzebruch-Jung
//!   continued fraction of n/a, the i- and j-series, the dual resolution
//!   graph and the multiplicity e(R);
//! - [`classify`] decomposes every module index over the i-series and
//!   decides generator counts, special and Ulrich membership, AR translation
//!   and duals, the generator census and the Hilbert-Kunz multiplicity;
//! - [`quiver`] builds the Auslander-Reiten quiver and renders it (and the
//!   dual graph) as DOT text;
//! - [`oracle`] recomputes minimal generators of every module directly from
//!   its monomial congruence class, sharing no code with the modules above,
//!   and cross-checks the whole classification against that ground truth.
//!
//! All arithmetic is exact: indices and counts are `i64`, the Hilbert-Kunz
//! multiplicity is a reduced [`classify::Fraction`], and group orders are
//! capped at 2^31 so no intermediate product can overflow.

pub mod classify;
pub mod error;
pub mod hj;
pub mod oracle;
pub mod quiver;

pub use classify::{Fraction, ModuleReport};
pub use error::Error;
pub use hj::{DualGraph, GroupParams, HjExpansion};
pub use oracle::CheckReport;
pub use quiver::QuiverGraph;
