//! The Yang-Baxter equation on triple tensor products, checked exactly
//! with two independent formal spectral ratios.

use crate::combin::EpsilonSignature;
use crate::error::Result;
use crate::linalg::{SparseMat, SparseVec};
use crate::qfield::FieldElem;

use super::solve::solve_r;

/// Embeds a two-site operator into a three-factor space at the given
/// pair of slots. Dims are the three factor dimensions.
fn embed_two_site(
    op: &SparseMat,
    dims: (usize, usize, usize),
    slots: (usize, usize),
) -> SparseMat {
    let (d1, d2, d3) = dims;
    let total = d1 * d2 * d3;
    let decode = |idx: usize| -> (usize, usize, usize) {
        (idx / (d2 * d3), (idx / d3) % d2, idx % d3)
    };
    let encode = |a: usize, b: usize, c: usize| a * d2 * d3 + b * d3 + c;
    // The two-site operator indexes its pair as x * dy + y.
    let (sx, sy) = slots;
    let pair_dims = |slot: usize| match slot {
        0 => d1,
        1 => d2,
        _ => d3,
    };
    let dy = pair_dims(sy);
    let mut out = SparseMat::zero(total, total);
    for idx in 0..total {
        let t = decode(idx);
        let get = |slot: usize| match slot {
            0 => t.0,
            1 => t.1,
            _ => t.2,
        };
        let pair_idx = get(sx) * dy + get(sy);
        for (img, coeff) in op.cols[pair_idx].iter() {
            let (nx, ny) = (img / dy, img % dy);
            let mut parts = [t.0, t.1, t.2];
            parts[sx] = nx;
            parts[sy] = ny;
            out.set(encode(parts[0], parts[1], parts[2]), idx, coeff.clone());
        }
    }
    out
}

/// Checks R_12(u) R_13(uv) R_23(v) = R_23(v) R_13(uv) R_12(u) on
/// W_{s1} (x) W_{s2} (x) W_{s3}, with u and v independent formals.
pub fn check_ybe(sig: &EpsilonSignature, s1: u32, s2: u32, s3: u32) -> Result<bool> {
    let r12 = solve_r(sig, s1, s2)?;
    let r13 = solve_r(sig, s1, s3)?;
    let r23 = solve_r(sig, s2, s3)?;
    let dims = (r12.dim_l, r12.dim_m, r23.dim_m);
    let u = FieldElem::u();
    let v = FieldElem::v();
    let uv = u.mul(&v);

    let r12u = embed_two_site(&r12.r_endo().specialize_z(&u)?, dims, (0, 1));
    let r13uv = embed_two_site(&r13.r_endo().specialize_z(&uv)?, dims, (0, 2));
    let r23v = embed_two_site(&r23.r_endo().specialize_z(&v)?, dims, (1, 2));

    let lhs = r12u.mul(&r13uv).mul(&r23v);
    let rhs = r23v.mul(&r13uv).mul(&r12u);
    Ok(lhs.sub(&rhs).is_zero())
}

/// Unitarity: the solved map composed with the solved map of the
/// swapped pair at the inverse ratio is the identity.
pub fn check_unitarity(sig: &EpsilonSignature, l: u32, m: u32) -> Result<bool> {
    let rm_lm = solve_r(sig, l, m)?;
    let rm_ml = solve_r(sig, m, l)?;
    let z_inv = FieldElem::z().inv()?;
    let mut t_back_cols = Vec::with_capacity(rm_ml.t_mat.cols.len());
    for col in &rm_ml.t_mat.cols {
        let mut entries = Vec::with_capacity(col.0.len());
        for (r, c) in col.iter() {
            entries.push((*r, c.specialize_z(&z_inv)?));
        }
        t_back_cols.push(SparseVec::from_entries(entries));
    }
    let t_back = SparseMat::from_cols(rm_ml.t_mat.nrows, t_back_cols);
    let composite = t_back.mul(&rm_lm.t_mat);
    let id = SparseMat::identity(rm_lm.a.dim());
    Ok(composite.sub(&id).is_zero())
}
