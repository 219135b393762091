//! Highest weight vectors and commutants by exact linear algebra.

use crate::combin::Weight;
use crate::linalg::{kernel_basis, rank_of, SparseVec};
use crate::repcore::module::WeightModule;
use std::collections::BTreeMap;

/// Which raising/lowering operators generate, besides the Cartan torus
/// (which is always included implicitly through the weight grading).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GeneratorSet {
    /// All affine indices 0..n.
    Full,
    /// The finite indices 1..n only.
    Finite,
}

impl GeneratorSet {
    pub fn indices(&self, n: usize) -> Vec<usize> {
        match self {
            GeneratorSet::Full => (0..n).collect(),
            GeneratorSet::Finite => (1..n).collect(),
        }
    }
}

/// For each weight, a basis of the joint kernel of the chosen raising
/// operators restricted to that weight space. Only weights with nonzero
/// kernel are returned.
pub fn highest_weight_vectors(
    m: &WeightModule,
    gens: GeneratorSet,
) -> Vec<(Weight, Vec<SparseVec>)> {
    let indices = gens.indices(m.n());
    let mut out = Vec::new();
    for (w, block) in m.weight_blocks() {
        let local: BTreeMap<usize, usize> = block
            .iter()
            .enumerate()
            .map(|(loc, &g)| (g, loc))
            .collect();
        // Equation rows: for each raising operator and each target row,
        // sum_j x_j e[row, j] = 0 over the block columns.
        let mut rows: BTreeMap<(usize, usize), Vec<(usize, crate::qfield::FieldElem)>> =
            BTreeMap::new();
        for &i in &indices {
            for (loc, &g) in block.iter().enumerate() {
                for (r, c) in m.act_e[i].cols[g].iter() {
                    rows.entry((i, *r)).or_default().push((loc, c.clone()));
                }
            }
        }
        let kernel = kernel_basis(
            rows.into_values().map(SparseVec::from_entries),
            block.len(),
        );
        if !kernel.is_empty() {
            let global: Vec<SparseVec> = kernel
                .into_iter()
                .map(|v| {
                    SparseVec::from_entries(
                        v.iter().map(|(loc, c)| (block[*loc], c.clone())).collect(),
                    )
                })
                .collect();
            let _ = &local;
            out.push((w, global));
        }
    }
    out
}

/// Basis of the joint kernel of the chosen raising operators inside a
/// single weight space.
pub fn singular_vectors_at(
    m: &WeightModule,
    gens: GeneratorSet,
    weight: &Weight,
) -> Vec<SparseVec> {
    let block: Vec<usize> = (0..m.dim())
        .filter(|&i| &m.weights[i] == weight)
        .collect();
    if block.is_empty() {
        return Vec::new();
    }
    let mut rows: BTreeMap<(usize, usize), Vec<(usize, crate::qfield::FieldElem)>> =
        BTreeMap::new();
    for &i in &gens.indices(m.n()) {
        for (loc, &g) in block.iter().enumerate() {
            for (r, c) in m.act_e[i].cols[g].iter() {
                rows.entry((i, *r)).or_default().push((loc, c.clone()));
            }
        }
    }
    kernel_basis(rows.into_values().map(SparseVec::from_entries), block.len())
        .into_iter()
        .map(|v| {
            SparseVec::from_entries(v.iter().map(|(loc, c)| (block[*loc], c.clone())).collect())
        })
        .collect()
}

/// Dimension of the space of operators commuting with the chosen
/// generators and with the Cartan torus. Weight-preservation confines the
/// unknown operator to block-diagonal form; the remaining constraints are
/// the commutation relations with each e_i and f_i in the set.
pub fn commutant_dim(m: &WeightModule, gens: GeneratorSet) -> usize {
    let indices = gens.indices(m.n());
    let blocks: Vec<(Weight, Vec<usize>)> = m.weight_blocks().into_iter().collect();
    let block_of: BTreeMap<Weight, usize> = blocks
        .iter()
        .enumerate()
        .map(|(k, (w, _))| (w.clone(), k))
        .collect();
    let index_in_block: BTreeMap<usize, (usize, usize)> = blocks
        .iter()
        .enumerate()
        .flat_map(|(k, (_, b))| {
            b.iter()
                .enumerate()
                .map(move |(loc, &g)| (g, (k, loc)))
        })
        .collect();
    // Unknown layout: X restricted to block k is a d_k x d_k matrix.
    let mut offset = vec![0usize; blocks.len() + 1];
    for (k, (_, b)) in blocks.iter().enumerate() {
        offset[k + 1] = offset[k] + b.len() * b.len();
    }
    let unknowns = offset[blocks.len()];
    let var = |k: usize, r: usize, c: usize| -> usize {
        offset[k] + r * blocks[k].1.len() + c
    };

    let mut rows: Vec<SparseVec> = Vec::new();
    for &i in &indices {
        for mats in [&m.act_e, &m.act_f] {
            let g = &mats[i];
            // Constraint (X g - g X)[r, c] = 0 for every r, c; rows are
            // grouped per (target row r, source column c).
            let mut per_entry: BTreeMap<(usize, usize), Vec<(usize, crate::qfield::FieldElem)>> =
                BTreeMap::new();
            for col in 0..m.dim() {
                let (kc, lc) = index_in_block[&col];
                for (mid, gval) in g.cols[col].iter() {
                    let (kr, lr) = index_in_block[mid];
                    // (X g)[r, col] includes X[r, mid] g[mid, col] for r
                    // in the block of mid.
                    for (lrow, &grow) in blocks[kr].1.iter().enumerate() {
                        per_entry
                            .entry((grow, col))
                            .or_default()
                            .push((var(kr, lrow, lr), gval.clone()));
                    }
                    // (g X)[mid-row-space, col'] contributions handled in
                    // the subtraction pass below.
                    let _ = (kc, lc);
                }
            }
            for col in 0..m.dim() {
                let (kc, lc) = index_in_block[&col];
                // (g X)[r, col] = sum_s g[r, s] X[s, col] with s in the
                // block of col.
                for (ls, &s) in blocks[kc].1.iter().enumerate() {
                    for (r, gval) in g.cols[s].iter() {
                        per_entry
                            .entry((*r, col))
                            .or_default()
                            .push((var(kc, ls, lc), gval.neg()));
                    }
                }
            }
            rows.extend(per_entry.into_values().map(SparseVec::from_entries));
        }
    }
    let _ = block_of;
    let rank = rank_of(rows);
    unknowns - rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::EpsilonSignature;

    #[test]
    fn natural_module_hwv_and_commutant() {
        let sig = EpsilonSignature::parse("0110").unwrap();
        let m = WeightModule::natural(&sig);
        let hwvs = highest_weight_vectors(&m, GeneratorSet::Finite);
        assert_eq!(hwvs.len(), 1);
        let (w, basis) = &hwvs[0];
        assert_eq!(w, &Weight(vec![1, 0, 0, 0]));
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0], SparseVec::unit(0));
        // Irreducible over the full affine generator set.
        assert_eq!(commutant_dim(&m, GeneratorSet::Full), 1);
        // Over the finite part the natural module is still irreducible.
        assert_eq!(commutant_dim(&m, GeneratorSet::Finite), 1);
    }
}
