//! Crystal bases at q = 0: Kashiwara operators in the four parity cases,
//! crystal graphs of declared lattices, the combinatorial tensor rule,
//! and connectivity certificates with auxiliary primed colors coming
//! from the embedded homogeneous subalgebra.

mod connect;
mod graph;
mod kashiwara;
mod tensor_rule;

pub use connect::{connectivity_with_primed, ConnectivityCertificate, EdgeColor};
pub use graph::{crystal_of, CrystalGraph};
pub use kashiwara::{kashiwara, string_decompose, KashiwaraDir};
pub use tensor_rule::tensor_crystal;

#[cfg(test)]
mod tests;
