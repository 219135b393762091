//! Existence and uniqueness of the intertwiner by exact linear solve.
//!
//! The map solved for is T = P R(z) : W_l(x) (x) W_m(y) -> W_m(y) (x) W_l(x),
//! intertwining the coproduct actions on both sides. Weight preservation
//! confines T to block form; the remaining constraints come from all
//! raising and lowering generators including the affine index, which
//! carries the spectral ratio z = x/y. The solution space must be one
//! dimensional; the solution is then normalized.

use crate::combin::{EpsilonSignature, Weight};
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, SparseMat, SparseVec};
use crate::qfield::FieldElem;
use crate::repcore::{BasisLabel, Comult, WeightModule};
use std::collections::BTreeMap;

/// A solved R matrix. `t_mat` is the flipped matrix P R(z) mapping the
/// (l, m) tensor product to the (m, l) one; both modules are stored.
pub struct RMatrix {
    pub sig: EpsilonSignature,
    pub l: u32,
    pub m: u32,
    pub dim_l: usize,
    pub dim_m: usize,
    pub a: WeightModule,
    pub b: WeightModule,
    pub t_mat: SparseMat,
}

impl RMatrix {
    /// R(z) as an endomorphism of the (l, m) tensor product: the flip
    /// composed with `t_mat`.
    pub fn r_endo(&self) -> SparseMat {
        let (dl, dm) = (self.dim_l, self.dim_m);
        let mut cols = Vec::with_capacity(self.t_mat.cols.len());
        for col in &self.t_mat.cols {
            // B index (jm, il) -> A index (il, jm).
            cols.push(col.remap(|idx| {
                let jm = idx / dl;
                let il = idx % dl;
                Some(il * dm + jm)
            }));
        }
        SparseMat::from_cols(self.a.dim(), cols)
    }
}

/// The anchor basis label |s e_i0> for the least even letter, or the
/// lexicographically largest occupation vector when every letter is odd.
fn anchor_mvec(sig: &EpsilonSignature, s: u32) -> Vec<u32> {
    let mut m = vec![0u32; sig.len()];
    match sig.first_zero_letter() {
        Some(i0) => {
            m[i0 - 1] = s;
        }
        None => {
            // All letters odd: fill 0/1 from the left.
            for k in 0..s as usize {
                m[k] = 1;
            }
        }
    }
    m
}

/// Solves for the unique intertwiner on W_l(z) (x) W_m(1). For M >= 1
/// the result is normalized to fix the anchor vector; for M = 0 the
/// normalization is deferred to the spectral anchor (rho at the largest
/// t equals one) and performed here through the same gauge.
pub fn solve_r(sig: &EpsilonSignature, l: u32, m: u32) -> Result<RMatrix> {
    if !crate::combin::Partition::row(l).is_hook(sig)
        || !crate::combin::Partition::row(m).is_hook(sig)
    {
        return Err(Error::Precondition(
            "both single-row shapes must be hooks".into(),
        ));
    }
    let z = FieldElem::z();
    let one = FieldElem::one();
    let wl = WeightModule::fundamental(sig, l, &z)?;
    let wm = WeightModule::fundamental(sig, m, &one)?;
    let a = WeightModule::tensor(&wl, &wm, Comult::Delta)?;
    let b = WeightModule::tensor(&wm, &wl, Comult::Delta)?;

    let t_mat = solve_intertwiner(&a, &b)?;

    // Normalization at the anchor.
    let dl = wl.dim();
    let dm = wm.dim();
    let anchor_l = BasisLabel::MVec(anchor_mvec(sig, l));
    let anchor_m = BasisLabel::MVec(anchor_mvec(sig, m));
    let ia = wl
        .index_of(&anchor_l)
        .expect("anchor exists in the left factor");
    let ib = wm
        .index_of(&anchor_m)
        .expect("anchor exists in the right factor");
    let col = ia * dm + ib;
    let target_row = ib * dl + ia;
    let scale = if sig.m_zeros() >= 1 {
        let c = t_mat.get(target_row, col);
        if c.is_zero() {
            return Err(Error::SolveDimension { found: 0 });
        }
        c.inv()?
    } else {
        // M = 0: gauge through the top spectral component. The singular
        // vector at the largest t has a one-dimensional weight space
        // gauge; normalize T to act as the identity on it.
        let t_top = super::spectral::t_range(sig, l, m)
            .into_iter()
            .max()
            .ok_or_else(|| Error::Precondition("empty spectral range".into()))?;
        let (va, vb) = super::spectral::gauged_singular_pair(&a, &b, sig, l, m, t_top)?;
        let img = apply_mat(&t_mat, &va);
        let c = proportionality(&img, &vb)?;
        c.inv()?
    };
    Ok(RMatrix {
        sig: sig.clone(),
        l,
        m,
        dim_l: dl,
        dim_m: dm,
        a,
        b,
        t_mat: t_mat.scale(&scale),
    })
}

fn apply_mat(mat: &SparseMat, v: &SparseVec) -> SparseVec {
    mat.apply(v)
}

/// The scalar c with img = c * v, exactly; errors when img is not
/// proportional to v.
pub fn proportionality(img: &SparseVec, v: &SparseVec) -> Result<FieldElem> {
    if img.is_zero() {
        return Ok(FieldElem::zero());
    }
    let (iv, cv) = v
        .leading()
        .ok_or_else(|| Error::Linalg("proportionality against zero".into()))?;
    let ci = img.get(iv);
    let c = ci.div(cv)?;
    let diff = img.add_scaled(v, &c.neg());
    if !diff.is_zero() {
        return Err(Error::Linalg(
            "vectors are not proportional".into(),
        ));
    }
    Ok(c)
}

/// Solves T Delta_A(g) = Delta_B(g) T for all generators, returning the
/// unique (up to scale) solution. Errors if the solution space dimension
/// is not one.
pub fn solve_intertwiner(a: &WeightModule, b: &WeightModule) -> Result<SparseMat> {
    let n = a.n();
    // Weight blocks on both sides; unknowns T[r, c] for weight-matched
    // pairs.
    let blocks_a = a.weight_blocks();
    let blocks_b = b.weight_blocks();
    let mut var_of: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut vars: Vec<(usize, usize)> = Vec::new();
    for (w, ca) in &blocks_a {
        if let Some(rb) = blocks_b.get(w) {
            for &c in ca {
                for &r in rb {
                    var_of.insert((r, c), vars.len());
                    vars.push((r, c));
                }
            }
        }
    }
    let unknowns = vars.len();

    let mut rows: Vec<SparseVec> = Vec::new();
    for i in 0..n {
        for (ma, mb) in [(&a.act_e[i], &b.act_e[i]), (&a.act_f[i], &b.act_f[i])] {
            // (T M - N T)[r, c] = 0.
            let mut per_entry: BTreeMap<(usize, usize), Vec<(usize, FieldElem)>> =
                BTreeMap::new();
            for c in 0..a.dim() {
                for (mid, mval) in ma.cols[c].iter() {
                    // (T M)[r, c] includes T[r, mid] M[mid, c] for the
                    // rows r weight-matched with column mid.
                    let w = &a.weights[*mid];
                    if let Some(rb) = blocks_b.get(w) {
                        for &r in rb {
                            if let Some(&v) = var_of.get(&(r, *mid)) {
                                per_entry
                                    .entry((r, c))
                                    .or_default()
                                    .push((v, mval.clone()));
                            }
                        }
                    }
                }
            }
            for c in 0..a.dim() {
                let w = &a.weights[c];
                if let Some(rb) = blocks_b.get(w) {
                    for &s in rb {
                        if let Some(&v) = var_of.get(&(s, c)) {
                            for (r, nval) in mb.cols[s].iter() {
                                per_entry
                                    .entry((*r, c))
                                    .or_default()
                                    .push((v, nval.neg()));
                            }
                        }
                    }
                }
            }
            rows.extend(per_entry.into_values().map(SparseVec::from_entries));
        }
    }

    let kernel = kernel_basis(rows, unknowns);
    if kernel.len() != 1 {
        return Err(Error::SolveDimension {
            found: kernel.len(),
        });
    }
    let solution = &kernel[0];
    let mut t_mat = SparseMat::zero(b.dim(), a.dim());
    for (var, coeff) in solution.iter() {
        let (r, c) = vars[*var];
        t_mat.set(r, c, coeff.clone());
    }
    Ok(t_mat)
}
