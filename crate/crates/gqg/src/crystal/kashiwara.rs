//! The modified root operators. The case depends on the parities of the
//! letters i and i+1:
//!
//! * (0,1): e~ u = q_i^{-1} k_i e_i u and f~ u = f_i u,
//! * (1,0): e~ u = e_i u and f~ u = q_i f_i k_i^{-1} u,
//! * (0,0): the lower-crystal operators through the string decomposition
//!   u = sum f_i^{(k)} u_k with e_i u_k = 0,
//! * (1,1): the upper-crystal operators, with the q-power corrections
//!   q^{-l_k + 2k - 1} and q^{l_k - 2k - 1}, l_k = <wt(u_k), alpha_i^vee>.

use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, SparseMat, SparseVec, Span};
use crate::qfield::{qfactorial, FieldElem};
use crate::repcore::WeightModule;
use std::collections::BTreeMap;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum KashiwaraDir {
    Raise,
    Lower,
}

/// A term of the string decomposition: the component f^{(k)} u_k.
pub struct StringComponent {
    pub k: usize,
    /// u_k itself (killed by the raising operator).
    pub top: SparseVec,
    /// <wt(u_k), alpha^vee> evaluated through the supplied weight map.
    pub l_k: i64,
}

/// Decomposes v = sum_k f^{(k)} u_k with E u_k = 0. The weight of an
/// ambient index is supplied by `wt_key`, the root direction of the
/// string by `alpha` (in the same key coordinates), and the pairing
/// value <wt, alpha^vee> by `pair`.
pub fn string_decompose(
    e_mat: &SparseMat,
    f_mat: &SparseMat,
    v: &SparseVec,
    wt_key: &dyn Fn(usize) -> Vec<i64>,
    alpha: &[i64],
    pair: &dyn Fn(usize) -> i64,
) -> Result<Vec<StringComponent>> {
    if v.is_zero() {
        return Ok(vec![]);
    }
    // Split v by weight; each homogeneous component decomposes within
    // the strings through its own ladder.
    let mut by_weight: BTreeMap<Vec<i64>, Vec<(usize, FieldElem)>> = BTreeMap::new();
    for (i, c) in v.iter() {
        by_weight
            .entry(wt_key(*i))
            .or_default()
            .push((*i, c.clone()));
    }
    let mut out = Vec::new();
    for (_, entries) in by_weight {
        let hom = SparseVec::from_entries(entries);
        out.extend(string_decompose_homogeneous(
            e_mat, f_mat, &hom, wt_key, alpha, pair,
        )?);
    }
    Ok(out)
}

fn string_decompose_homogeneous(
    e_mat: &SparseMat,
    f_mat: &SparseMat,
    v: &SparseVec,
    wt_key: &dyn Fn(usize) -> Vec<i64>,
    alpha: &[i64],
    pair: &dyn Fn(usize) -> i64,
) -> Result<Vec<StringComponent>> {
    let dim = e_mat.nrows;
    let base_weight = wt_key(v.leading().unwrap().0);
    // The ambient indices of weight mu + k alpha, for k = 0, 1, ... until
    // the block is empty.
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut level = base_weight;
    loop {
        let block: Vec<usize> = (0..dim).filter(|&i| wt_key(i) == level).collect();
        if block.is_empty() {
            break;
        }
        blocks.push(block);
        level = level
            .iter()
            .zip(alpha)
            .map(|(a, b)| a + b)
            .collect();
    }
    // Singular vectors per level k: kernel of E restricted to block k.
    let mut candidates: Vec<(usize, SparseVec, SparseVec)> = Vec::new(); // (k, u_k-vec, f^{(k)} u_k)
    for (k, block) in blocks.iter().enumerate() {
        let local: BTreeMap<usize, usize> = block
            .iter()
            .enumerate()
            .map(|(l, &g)| (g, l))
            .collect();
        let mut rows: BTreeMap<usize, Vec<(usize, FieldElem)>> = BTreeMap::new();
        for (l, &g) in block.iter().enumerate() {
            for (r, c) in e_mat.cols[g].iter() {
                rows.entry(*r).or_default().push((l, c.clone()));
            }
        }
        let kernel = kernel_basis(rows.into_values().map(SparseVec::from_entries), block.len());
        let inv_fact = qfactorial(k as u64).inv().unwrap();
        for kv in kernel {
            let top = SparseVec::from_entries(
                kv.iter().map(|(l, c)| (block[*l], c.clone())).collect(),
            );
            // f^{(k)} top.
            let mut img = top.clone();
            for _ in 0..k {
                img = f_mat.apply(&img);
            }
            img = img.scale(&inv_fact);
            if !img.is_zero() {
                candidates.push((k, top, img));
            }
        }
        let _ = local;
    }
    // Express v in the images.
    let mut span = Span::new(dim);
    let mut kept: Vec<&(usize, SparseVec, SparseVec)> = Vec::new();
    for cand in &candidates {
        if span.insert(&cand.2) {
            kept.push(cand);
        } else {
            return Err(Error::Linalg(
                "string images unexpectedly dependent".into(),
            ));
        }
    }
    let coeffs = span
        .express(v)
        .ok_or_else(|| Error::Linalg("vector outside its string span".into()))?;
    let mut out = Vec::new();
    for (pos, c) in coeffs {
        let (k, top, _) = kept[pos];
        let top_scaled = top.scale(&c);
        let l_k = pair(top.leading().unwrap().0);
        out.push(StringComponent {
            k: *k,
            top: top_scaled,
            l_k,
        });
    }
    Ok(out)
}

/// Applies f^{(k)} to a vector.
fn divided_power(f_mat: &SparseMat, v: &SparseVec, k: usize) -> SparseVec {
    let mut img = v.clone();
    for _ in 0..k {
        img = f_mat.apply(&img);
    }
    img.scale(&qfactorial(k as u64).inv().unwrap())
}

/// The Kashiwara operator on a module vector for the affine color i.
pub fn kashiwara(
    m: &WeightModule,
    i: usize,
    dir: KashiwaraDir,
    v: &SparseVec,
) -> Result<SparseVec> {
    let sig = &m.sig;
    let pa = sig.parity_idx(i);
    let pb = sig.parity_idx(i + 1);
    match (pa, pb) {
        (0, 1) => match dir {
            // e~ = q_i^{-1} k_i e_i.
            KashiwaraDir::Raise => {
                let w = m.act_e[i].apply(v);
                let w = m.act_k(i, 1).apply(&w);
                Ok(w.scale(&sig.q_i(i).inv().unwrap()))
            }
            KashiwaraDir::Lower => Ok(m.act_f[i].apply(v)),
        },
        (1, 0) => match dir {
            KashiwaraDir::Raise => Ok(m.act_e[i].apply(v)),
            // f~ = q_i f_i k_i^{-1}.
            KashiwaraDir::Lower => {
                let w = m.act_k(i, -1).apply(v);
                let w = m.act_f[i].apply(&w);
                Ok(w.scale(&sig.q_i(i)))
            }
        },
        (a, b) => {
            debug_assert_eq!(a, b);
            let wt_key = |idx: usize| m.weights[idx].0.clone();
            let pair = |idx: usize| m.weights[idx].pair_alpha_check(sig, i);
            let alpha = crate::combin::Weight::alpha(sig, i).0;
            let comps = string_decompose(&m.act_e[i], &m.act_f[i], v, &wt_key, &alpha, &pair)?;
            let mut acc = SparseVec::zero();
            for comp in comps {
                match (a, dir) {
                    (0, KashiwaraDir::Raise) => {
                        if comp.k >= 1 {
                            acc = acc.add(&divided_power(&m.act_f[i], &comp.top, comp.k - 1));
                        }
                    }
                    (0, KashiwaraDir::Lower) => {
                        acc = acc.add(&divided_power(&m.act_f[i], &comp.top, comp.k + 1));
                    }
                    (1, KashiwaraDir::Raise) => {
                        if comp.k >= 1 {
                            let c = FieldElem::q_pow(-comp.l_k + 2 * comp.k as i64 - 1);
                            acc = acc.add(
                                &divided_power(&m.act_f[i], &comp.top, comp.k - 1).scale(&c),
                            );
                        }
                    }
                    (1, KashiwaraDir::Lower) => {
                        let c = FieldElem::q_pow(comp.l_k - 2 * comp.k as i64 - 1);
                        acc = acc
                            .add(&divided_power(&m.act_f[i], &comp.top, comp.k + 1).scale(&c));
                    }
                    _ => unreachable!(),
                }
            }
            Ok(acc)
        }
    }
}
