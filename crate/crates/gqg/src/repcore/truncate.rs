//! The truncation functor: restriction to weight spaces vanishing at a
//! removed letter, carrying modules over a signature to modules over the
//! subsequence through the embedded generator words.

use crate::combin::{Tableau, Weight};
use crate::error::{Error, Result};
use crate::linalg::SparseMat;
use crate::repcore::module::{BasisLabel, WeightModule};
use crate::repcore::words::{phi_embed, phi_words_unchecked, GenMap};

/// A truncated module together with the inclusion bookkeeping.
pub struct Truncation {
    /// For each basis vector of the truncated module, its index in the
    /// parent module.
    pub parent_indices: Vec<usize>,
    pub module: WeightModule,
}

impl Truncation {
    /// Restriction of a parent-space matrix to the truncated subspace.
    /// Fails when the matrix does not preserve the subspace.
    pub fn restrict(&self, mat: &SparseMat) -> Result<SparseMat> {
        restrict_matrix(mat, &self.parent_indices)
    }
}

fn restrict_matrix(mat: &SparseMat, keep: &[usize]) -> Result<SparseMat> {
    let pos: std::collections::BTreeMap<usize, usize> =
        keep.iter().enumerate().map(|(l, &g)| (g, l)).collect();
    let mut out = SparseMat::zero(keep.len(), keep.len());
    for (lc, &gc) in keep.iter().enumerate() {
        for (r, c) in mat.cols[gc].iter() {
            match pos.get(r) {
                Some(&lr) => out.set(lr, lc, c.clone()),
                None => {
                    return Err(Error::ClosureFailure(format!(
                        "entry ({}, {}) leaves the truncated subspace",
                        r, gc
                    )))
                }
            }
        }
    }
    Ok(out)
}

fn relabel(label: &BasisLabel, removed: usize) -> Result<BasisLabel> {
    Ok(match label {
        BasisLabel::Letter(j) => {
            if *j == removed {
                return Err(Error::ClosureFailure(
                    "basis label uses the removed letter".into(),
                ));
            }
            BasisLabel::Letter(if *j > removed { *j - 1 } else { *j })
        }
        BasisLabel::MVec(m) => {
            let mut m = m.clone();
            if m[removed - 1] != 0 {
                return Err(Error::ClosureFailure(
                    "occupation vector uses the removed letter".into(),
                ));
            }
            m.remove(removed - 1);
            BasisLabel::MVec(m)
        }
        BasisLabel::Tab(t) => {
            let rows = t
                .rows()
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|&x| {
                            if x as usize == removed {
                                Err(Error::ClosureFailure(
                                    "tableau uses the removed letter".into(),
                                ))
                            } else if x as usize > removed {
                                Ok(x - 1)
                            } else {
                                Ok(x)
                            }
                        })
                        .collect::<Result<Vec<u8>>>()
                })
                .collect::<Result<Vec<Vec<u8>>>>()?;
            BasisLabel::Tab(Tableau::new(t.shape().clone(), rows)?)
        }
        BasisLabel::Word(parts) => BasisLabel::Word(
            parts
                .iter()
                .map(|p| relabel(p, removed))
                .collect::<Result<Vec<_>>>()?,
        ),
    })
}

fn truncate_with(m: &WeightModule, removed: usize, map: &GenMap) -> Result<Truncation> {
    if m.weights.iter().any(|w| !w.is_polynomial()) {
        return Err(Error::Precondition(
            "truncation requires polynomial weights".into(),
        ));
    }
    let reduced = m.sig.remove_letter(removed)?;
    let keep: Vec<usize> = (0..m.dim())
        .filter(|&idx| m.weights[idx].coeff(removed) == 0)
        .collect();
    let basis = keep
        .iter()
        .map(|&g| relabel(&m.basis[g], removed))
        .collect::<Result<Vec<_>>>()?;
    let weights: Vec<Weight> = keep
        .iter()
        .map(|&g| {
            let mut w = m.weights[g].0.clone();
            w.remove(removed - 1);
            Weight(w)
        })
        .collect();
    let np = reduced.len();
    let mut act_e = Vec::with_capacity(np);
    let mut act_f = Vec::with_capacity(np);
    for j in 0..np {
        act_e.push(restrict_matrix(&map.e[j].evaluate(m), &keep)?);
        act_f.push(restrict_matrix(&map.f[j].evaluate(m), &keep)?);
    }
    Ok(Truncation {
        parent_indices: keep,
        module: WeightModule {
            sig: reduced.clone(),
            basis,
            weights,
            act_e,
            act_f,
            params: m.params.clone(),
            name: format!("tr[-{}]({})", removed, m.name),
        },
    })
}

/// Truncation at a removed letter, under the stated length preconditions
/// of the subalgebra embedding.
pub fn truncate(m: &WeightModule, removed: usize) -> Result<Truncation> {
    let map = phi_embed(&m.sig, removed)?;
    truncate_with(m, removed, &map)
}

/// Iterated truncation removing every odd letter, down to the
/// homogeneous all-even subsequence. No length preconditions.
pub fn truncate_to_all_zeros(m: &WeightModule) -> Result<Truncation> {
    truncate_iterated(m, 1)
}

/// Iterated truncation removing every even letter.
pub fn truncate_to_all_ones(m: &WeightModule) -> Result<Truncation> {
    truncate_iterated(m, 0)
}

fn truncate_iterated(m: &WeightModule, removed_parity: u8) -> Result<Truncation> {
    let mut current = Truncation {
        parent_indices: (0..m.dim()).collect(),
        module: m.clone(),
    };
    loop {
        let sig = current.module.sig.clone();
        let letter = (1..=sig.len()).find(|&j| sig.parity(j) == removed_parity);
        match letter {
            None => return Ok(current),
            Some(j) => {
                if sig.len() == 1 {
                    return Err(Error::Precondition(
                        "cannot truncate away the whole alphabet".into(),
                    ));
                }
                let map = phi_words_unchecked(&sig, j)?;
                let next = truncate_with(&current.module, j, &map)?;
                let parent_indices = next
                    .parent_indices
                    .iter()
                    .map(|&l| current.parent_indices[l])
                    .collect();
                current = Truncation {
                    parent_indices,
                    module: next.module,
                };
            }
        }
    }
}
