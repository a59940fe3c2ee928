//! Exact and numeric adjacency spectra of Farey graphs.
//!
//! Exact spectra are multisets of [`Surd`]s produced by the closed-form
//! recursion in [`closed_form_spectrum`]. The numeric path ([`numeric_spectrum`])
//! diagonalises the adjacency matrix directly and exists to cross-check it.

mod closed_form;
mod multiset;
mod numeric;
mod ramanujan;
mod surd;

pub use closed_form::{base_spectrum, closed_form_spectrum};
pub use multiset::{format_decimal, Spectrum, SpectrumRecord};
pub use numeric::{
    cluster, compare_spectra, numeric_spectrum, symmetric_eigenvalues, NumericSpectrum,
    CLUSTER_WIDTH, DEFAULT_EIGEN_TOL, MAX_SWEEPS,
};
pub use ramanujan::{is_ramanujan, lambda1, ramanujan_bound_holds, verify_block_structure};
pub use surd::Surd;
