//! Compatibility of the solved intertwiner with truncation: removing a
//! letter commutes with the flipped R matrix, and iterated removal of
//! every odd letter reproduces the homogeneous spectral data.

use crate::combin::EpsilonSignature;
use crate::error::{Error, Result};
use crate::linalg::SparseMat;
use crate::repcore::truncate;
use serde_json::json;
use std::collections::BTreeMap;

use super::solve::{solve_r, RMatrix};
use super::spectral::{spectral_decompose, spectral_via_truncation, t_range, verify_spectral_theorem};

pub struct TruncCompatReport {
    pub sig: EpsilonSignature,
    pub removed: usize,
    pub l: u32,
    pub m: u32,
    /// tr o (PR) = (PR') o tr, exactly.
    pub diagram_commutes: bool,
    /// t-components whose shape stops being a hook after removal must
    /// have singular vectors truncating to zero.
    pub vanishing_projectors_ok: bool,
}

impl TruncCompatReport {
    pub fn ok(&self) -> bool {
        self.diagram_commutes && self.vanishing_projectors_ok
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "eps": self.sig.to_string(),
            "removed": self.removed,
            "l": self.l,
            "m": self.m,
            "diagram_commutes": self.diagram_commutes,
            "vanishing_projectors": self.vanishing_projectors_ok,
            "ok": self.ok(),
        })
    }
}

/// Restriction of the solved map to the subspace with vanishing weight
/// at the removed letter, compared entrywise against the solved map of
/// the reduced signature.
pub fn check_truncation_compat(
    sig: &EpsilonSignature,
    l: u32,
    m: u32,
    removed: usize,
) -> Result<TruncCompatReport> {
    let reduced = sig.remove_letter(removed)?;
    if reduced.len() < 4 {
        return Err(Error::Precondition(
            "reduced signature shorter than 4".into(),
        ));
    }
    let rm = solve_r(sig, l, m)?;
    let rm_small = solve_r(&reduced, l, m)?;

    let tr_a = truncate(&rm.a, removed)?;
    let tr_b = truncate(&rm.b, removed)?;
    // Label-aligned index maps into the reduced-world modules.
    let map_into = |tr: &crate::repcore::Truncation,
                    small: &crate::repcore::WeightModule|
     -> Result<Vec<usize>> {
        tr.module
            .basis
            .iter()
            .map(|lbl| {
                small
                    .index_of(lbl)
                    .ok_or_else(|| Error::Linalg("label missing after truncation".into()))
            })
            .collect()
    };
    let amap = map_into(&tr_a, &rm_small.a)?;
    let bmap = map_into(&tr_b, &rm_small.b)?;
    let pos_b: BTreeMap<usize, usize> = tr_b
        .parent_indices
        .iter()
        .enumerate()
        .map(|(lidx, &g)| (g, lidx))
        .collect();

    let mut commutes = true;
    'outer: for (la, &ga) in tr_a.parent_indices.iter().enumerate() {
        // Column of the big map, restricted.
        let restricted = rm.t_mat.cols[ga].remap(|r| pos_b.get(&r).copied());
        // Support must not leave the truncated subspace (weights ensure
        // it cannot, but verify cheaply).
        if restricted.0.len() != rm.t_mat.cols[ga].0.len() {
            commutes = false;
            break;
        }
        let expected = &rm_small.t_mat.cols[amap[la]];
        for (rloc, c) in restricted.iter() {
            if expected.get(bmap[*rloc]) != c.clone() {
                commutes = false;
                break 'outer;
            }
        }
        if restricted.0.len() != expected.0.len() {
            commutes = false;
            break;
        }
    }

    // Projector vanishing: singular vectors at t's that stop being hooks
    // must have no support left after truncation.
    let mut vanishing_ok = true;
    let big_ts = t_range(sig, l, m);
    let small_ts: std::collections::BTreeSet<u32> =
        t_range(&reduced, l, m).into_iter().collect();
    let keep: std::collections::BTreeSet<usize> =
        tr_a.parent_indices.iter().copied().collect();
    let sd = spectral_decompose(&rm)?;
    for (t, va) in &sd.hwv_a {
        if big_ts.contains(t) && !small_ts.contains(t) {
            let truncated = va.remap(|idx| if keep.contains(&idx) { Some(idx) } else { None });
            if !truncated.is_zero() {
                vanishing_ok = false;
            }
        }
    }

    Ok(TruncCompatReport {
        sig: sig.clone(),
        removed,
        l,
        m,
        diagram_commutes: commutes,
        vanishing_projectors_ok: vanishing_ok,
    })
}

/// Iterated truncation down to the all-even subsequence reproduces the
/// homogeneous spectral scalars: the eigenvalue list computed through
/// the truncated map equals the one computed at the original level, for
/// every t surviving truncation.
pub fn iterated_truncation_report(rm: &RMatrix) -> Result<serde_json::Value> {
    let sd = spectral_decompose(rm)?;
    let via = spectral_via_truncation(rm)?;
    let at_level: BTreeMap<u32, String> =
        sd.rho.iter().map(|(t, v)| (*t, v.to_string())).collect();
    let mut agree = true;
    for (t, v) in &via.rho {
        match at_level.get(t) {
            Some(s) if *s == v.to_string() => {}
            _ => agree = false,
        }
    }
    let matches_theorem = verify_spectral_theorem(&sd).matches;
    Ok(json!({
        "eps": rm.sig.to_string(),
        "l": rm.l,
        "m": rm.m,
        "spectral_level": sd.rho.iter().map(|(t, v)| json!([t, v.to_string()])).collect::<Vec<_>>(),
        "spectral_truncated": via.rho.iter().map(|(t, v)| json!([t, v.to_string()])).collect::<Vec<_>>(),
        "truncation_agrees": agree,
        "matches_theorem": matches_theorem,
    }))
}

/// Helper for callers that need the restricted matrix itself.
pub fn restrict_map(
    t_mat: &SparseMat,
    keep_cols: &[usize],
    keep_rows: &[usize],
) -> Result<SparseMat> {
    let pos: BTreeMap<usize, usize> = keep_rows
        .iter()
        .enumerate()
        .map(|(l, &g)| (g, l))
        .collect();
    let mut cols = Vec::with_capacity(keep_cols.len());
    for &g in keep_cols {
        let full = &t_mat.cols[g];
        let restricted = full.remap(|r| pos.get(&r).copied());
        if restricted.0.len() != full.0.len() {
            return Err(Error::ClosureFailure(
                "map leaves the truncated subspace".into(),
            ));
        }
        cols.push(restricted);
    }
    Ok(SparseMat::from_cols(keep_rows.len(), cols))
}
