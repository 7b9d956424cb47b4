//! Support library for the `ulrich` binary: document assembly/rendering and
//! the census sweep. Kept as a library so integration tests can exercise the
//! same types the binary serializes.

pub mod census;
pub mod document;
