//! Hecke algebra action on tensor powers of the natural module, Young
//! symmetrizers, Garnir straightening, and the irreducible polynomial
//! modules with semistandard tableau bases.

mod build_v;
mod garnir;
mod hecke;
mod perm;
mod symmetrizer;

pub use build_v::{build_v, PolyModule};
pub use garnir::{check_garnir_straightening, garnir_element, GarnirBelt};
pub use hecke::{HeckeElement, TensorSpace};
pub use perm::Perm;
pub use symmetrizer::{column_element, young_symmetrizer, Symmetrizer};

#[cfg(test)]
mod tests;
