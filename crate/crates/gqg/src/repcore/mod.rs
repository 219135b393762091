//! Weight modules with explicit generator actions.
//!
//! A module stores a labelled basis, a weight map, and sparse matrices
//! for the actions of e_i and f_i over the affine index set I; the
//! Cartan actions are diagonal and derived from the weights. All modules
//! here have polynomial weights.

mod hwv;
mod module;
mod relations;
mod truncate;
mod words;

pub use hwv::{commutant_dim, highest_weight_vectors, singular_vectors_at, GeneratorSet};
pub use module::{psi_twist, BasisLabel, Comult, WeightModule};
pub use relations::{relation_suite, verify_relations, RelationCheck, RelationReport};
pub use truncate::{truncate, truncate_to_all_zeros, truncate_to_all_ones, Truncation};
pub use words::{phi_embed, phi_words_unchecked, tau_maps, AlgebraWord, GenMap, GenSym};

#[cfg(test)]
mod tests;
