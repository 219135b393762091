//! The spectral-parameter R matrix on tensor products of fundamental
//! modules: existence and uniqueness by exact linear solve over Q(q,z),
//! spectral decomposition against the closed forms, the Yang-Baxter
//! equation, and compatibility with truncation.

mod solve;
mod spectral;
mod trunc_compat;
mod ybe;

pub use solve::{solve_r, RMatrix};
pub use spectral::{closed_form, spectral_decompose, spectral_via_truncation, t_range, verify_spectral_theorem, MRegime, SpectralData};
pub use trunc_compat::{check_truncation_compat, iterated_truncation_report, TruncCompatReport};
pub use ybe::{check_unitarity, check_ybe};

#[cfg(test)]
mod tests;
