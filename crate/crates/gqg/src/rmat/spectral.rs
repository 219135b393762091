//! Spectral decomposition of the flipped R matrix over the finite
//! highest weight vectors, and verification against the closed forms.
//!
//! The two-row decomposition of W_l (x) W_m is multiplicity free; for
//! each admissible t the finite-singular vector at the weight of the
//! two-row genuine highest tableau spans a line. Gauging both sides so
//! the lexicographically largest occupation label carries coefficient 1
//! pins the eigenvalue rho_t(z) exactly; the list is then normalized at
//! the regime anchor (t = 0 when the signature has an even letter, the
//! largest t otherwise).

use crate::combin::{h_lambda, EpsilonSignature, Partition, Weight};
use crate::error::{Error, Result};
use crate::linalg::{SparseMat, SparseVec};
use crate::qfield::FieldElem;
use crate::repcore::{singular_vectors_at, truncate_to_all_zeros, GeneratorSet, WeightModule};
use serde_json::json;

use super::solve::{proportionality, RMatrix};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MRegime {
    MZero,
    MOne,
    MBig,
}

impl MRegime {
    pub fn of(sig: &EpsilonSignature) -> MRegime {
        match sig.m_zeros() {
            0 => MRegime::MZero,
            1 => MRegime::MOne,
            _ => MRegime::MBig,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            MRegime::MZero => "M=0",
            MRegime::MOne => "M=1",
            MRegime::MBig => "M>=2",
        }
    }
}

pub struct SpectralData {
    pub sig: EpsilonSignature,
    pub l: u32,
    pub m: u32,
    pub regime: MRegime,
    /// (t, eigenvalue), anchored per regime.
    pub rho: Vec<(u32, FieldElem)>,
    /// The gauged singular vectors on the source side, aligned with rho.
    pub hwv_a: Vec<(u32, SparseVec)>,
}

/// The admissible t's: 0 <= t <= min(l, m) with (l+m-t, t) a hook shape.
pub fn t_range(sig: &EpsilonSignature, l: u32, m: u32) -> Vec<u32> {
    (0..=l.min(m))
        .filter(|&t| {
            Partition::new(vec![l + m - t, t])
                .map(|p| p.is_hook(sig))
                .unwrap_or(false)
        })
        .collect()
}

/// The weight of the finite highest weight vector of the t-component.
pub fn mu_t(sig: &EpsilonSignature, l: u32, m: u32, t: u32) -> Result<Weight> {
    let shape = Partition::new(vec![l + m - t, t])?;
    Ok(h_lambda(&shape, sig)?.weight(sig.len()))
}

/// The finite-singular lines of both sides at the t-component weight,
/// gauged so the leading coordinate (the lexicographically largest
/// occupation pair) is one.
pub fn gauged_singular_pair(
    a: &WeightModule,
    b: &WeightModule,
    sig: &EpsilonSignature,
    l: u32,
    m: u32,
    t: u32,
) -> Result<(SparseVec, SparseVec)> {
    let w = mu_t(sig, l, m, t)?;
    let va = singular_line(a, &w, t)?;
    let vb = singular_line(b, &w, t)?;
    Ok((va, vb))
}

fn singular_line(module: &WeightModule, w: &Weight, t: u32) -> Result<SparseVec> {
    let lines = singular_vectors_at(module, GeneratorSet::Finite, w);
    if lines.len() != 1 {
        return Err(Error::Linalg(format!(
            "singular space at t = {} has dimension {}, expected 1",
            t,
            lines.len()
        )));
    }
    let v = &lines[0];
    let lead = v
        .leading()
        .ok_or_else(|| Error::Linalg("zero singular vector".into()))?
        .1
        .clone();
    Ok(v.scale(&lead.inv()?))
}

/// Decomposes the solved map spectrally over the finite highest weight
/// vectors. Every eigenvalue must be an exact proportionality; the
/// eigenvalue list is anchored at t = 0 (or the largest t when M = 0).
pub fn spectral_decompose(rm: &RMatrix) -> Result<SpectralData> {
    let sig = &rm.sig;
    let (l, m) = (rm.l, rm.m);
    let ts = t_range(sig, l, m);
    if ts.is_empty() {
        return Err(Error::Precondition("empty spectral range".into()));
    }
    let mut raw: Vec<(u32, FieldElem, SparseVec)> = Vec::new();
    for &t in &ts {
        let (va, vb) = gauged_singular_pair(&rm.a, &rm.b, sig, l, m, t)?;
        let img = rm.t_mat.apply(&va);
        let rho = proportionality(&img, &vb)?;
        if rho.is_zero() {
            return Err(Error::Linalg(format!(
                "vanishing eigenvalue at t = {}",
                t
            )));
        }
        raw.push((t, rho, va));
    }
    let regime = MRegime::of(sig);
    let anchor_t = match regime {
        MRegime::MZero => *ts.last().unwrap(),
        _ => 0,
    };
    let anchor_rho = raw
        .iter()
        .find(|(t, _, _)| *t == anchor_t)
        .map(|(_, r, _)| r.clone())
        .expect("anchor t is in range");
    let inv = anchor_rho.inv()?;
    Ok(SpectralData {
        sig: sig.clone(),
        l,
        m,
        regime,
        rho: raw.iter().map(|(t, r, _)| (*t, r.mul(&inv))).collect(),
        hwv_a: raw.into_iter().map(|(t, _, v)| (t, v)).collect(),
    })
}

/// The same spectral scalars computed in the all-even truncated world,
/// where the lattice-normalized highest weight vectors live. Defined
/// when the signature has at least two even letters.
pub fn spectral_via_truncation(rm: &RMatrix) -> Result<SpectralData> {
    let sig = &rm.sig;
    if sig.m_zeros() < 2 {
        return Err(Error::Precondition(
            "truncated spectral route needs at least two even letters".into(),
        ));
    }
    let tr_a = truncate_to_all_zeros(&rm.a)?;
    let tr_b = truncate_to_all_zeros(&rm.b)?;
    // Restrict the solved map to the truncated subspaces.
    let pos_b: std::collections::BTreeMap<usize, usize> = tr_b
        .parent_indices
        .iter()
        .enumerate()
        .map(|(lidx, &g)| (g, lidx))
        .collect();
    let mut cols = Vec::with_capacity(tr_a.parent_indices.len());
    for &ga in &tr_a.parent_indices {
        cols.push(rm.t_mat.cols[ga].remap(|r| pos_b.get(&r).copied()));
    }
    let t_small = SparseMat::from_cols(tr_b.parent_indices.len(), cols);

    let small_sig = tr_a.module.sig.clone();
    let (l, m) = (rm.l, rm.m);
    let ts = t_range(&small_sig, l, m);
    let mut raw: Vec<(u32, FieldElem, SparseVec)> = Vec::new();
    for &t in &ts {
        let (va, vb) = gauged_singular_pair(&tr_a.module, &tr_b.module, &small_sig, l, m, t)?;
        let img = t_small.apply(&va);
        let rho = proportionality(&img, &vb)?;
        raw.push((t, rho, va));
    }
    let anchor_rho = raw
        .iter()
        .find(|(t, _, _)| *t == 0)
        .map(|(_, r, _)| r.clone())
        .ok_or_else(|| Error::Precondition("t = 0 missing after truncation".into()))?;
    let inv = anchor_rho.inv()?;
    Ok(SpectralData {
        sig: sig.clone(),
        l,
        m,
        regime: MRegime::of(sig),
        rho: raw.iter().map(|(t, r, _)| (*t, r.mul(&inv))).collect(),
        hwv_a: raw.into_iter().map(|(t, _, v)| (t, v)).collect(),
    })
}

/// The closed-form eigenvalue list for the signature's regime.
pub fn closed_form(sig: &EpsilonSignature, l: u32, m: u32) -> Vec<(u32, FieldElem)> {
    let n = sig.len() as u32;
    let z = FieldElem::z();
    let factor = |i: u32| -> (FieldElem, FieldElem) {
        let c = (l + m) as i64 - 2 * i as i64 + 2;
        let qc = FieldElem::q_pow(c);
        // (1 - q^c z) and (z - q^c).
        (
            FieldElem::one().sub(&qc.mul(&z)),
            z.sub(&qc),
        )
    };
    match MRegime::of(sig) {
        MRegime::MZero => {
            let lo = (l + m).saturating_sub(n);
            let hi = l.min(m);
            (lo..=hi)
                .map(|t| {
                    let mut acc = FieldElem::one();
                    for i in (t + 1)..=hi {
                        let (num, den) = factor(i);
                        acc = acc.mul(&den).div(&num).unwrap();
                    }
                    (t, acc)
                })
                .collect()
        }
        MRegime::MOne | MRegime::MBig => {
            let hi = if MRegime::of(sig) == MRegime::MOne {
                l.min(m).min(n - 1)
            } else {
                l.min(m)
            };
            (0..=hi)
                .map(|t| {
                    let mut acc = FieldElem::one();
                    for i in 1..=t {
                        let (num, den) = factor(i);
                        acc = acc.mul(&num).div(&den).unwrap();
                    }
                    (t, acc)
                })
                .collect()
        }
    }
}

pub struct SpectralReport {
    pub matches: bool,
    pub expected: Vec<(u32, FieldElem)>,
}

/// Compares computed eigenvalues with the closed forms, exactly,
/// including the admissible range of t.
pub fn verify_spectral_theorem(sd: &SpectralData) -> SpectralReport {
    let expected = closed_form(&sd.sig, sd.l, sd.m);
    let matches = expected.len() == sd.rho.len()
        && expected
            .iter()
            .zip(&sd.rho)
            .all(|((te, ve), (tc, vc))| te == tc && ve == vc);
    SpectralReport { matches, expected }
}

impl SpectralData {
    pub fn to_json(&self) -> serde_json::Value {
        let report = verify_spectral_theorem(self);
        json!({
            "l": self.l,
            "m": self.m,
            "eps": self.sig.to_string(),
            "M_regime": self.regime.label(),
            "rho": self.rho.iter().map(|(t, v)| json!({
                "t": t,
                "value": v.to_string(),
            })).collect::<Vec<_>>(),
            "matches_theorem": report.matches,
        })
    }
}
