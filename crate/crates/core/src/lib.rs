//! Spectral symmetry of cubical hypermatrices and uniform hypergraphs.
//!
//! * [`tensor`]: sparse cubical r-tensors, the eigen-equation, digraphs,
//!   components, diagonal similarity.
//! * [`hypergraph`]: r-uniform hypergraphs, adjacency tensors, weak
//!   chromatic numbers, counterexample families.
//! * [`parity`]: odd-colorings (over `Z_r`) and odd transversals (over GF(2)).
//! * [`spectra`]: Perron pairs by shifted power iteration and the
//!   spectrum-negation maps built from parity certificates.
//! * [`charpoly`]: exact characteristic polynomials for tiny tensors.
//! * [`json`]: the file formats used by the command-line tool.

pub mod charpoly;
pub mod digraph;
pub mod hypergraph;
pub mod json;
pub mod parity;
pub mod scalar;
pub mod spectra;
pub mod tensor;

pub use hypergraph::Hypergraph;
pub use scalar::Scalar;
pub use tensor::CubicalTensor;
