//! Farey maps M₃(n) and Hecke maps M₄(n), M₆(n) as explicit finite graphs.
//!
//! The crate builds the underlying graphs from the modular-group vertex model,
//! computes their spectra exactly (as multisets of quadratic surds) and
//! numerically (Jacobi rotations), and checks the covering and product
//! relations between maps of different levels.

pub mod arith;
pub mod coverings;
pub mod error;
pub mod farey;
pub mod graph;
pub mod hecke;
pub mod psl2;
pub mod spectra;
pub mod verdict;

pub use error::{Error, Result};
pub use farey::FareyVertex;
pub use graph::RegularGraph;
pub use hecke::{HeckeFamily, HeckeVertex, Parity};
pub use psl2::ProjectiveMatrix;
pub use spectra::{NumericSpectrum, Spectrum, Surd};
pub use verdict::Verdict;
