//! The weight module type and the basic constructions: natural module,
//! fundamental modules with spectral parameter, and tensor products
//! under the two comultiplications.

use crate::combin::{EpsilonSignature, Tableau, Weight};
use crate::error::{Error, Result};
use crate::linalg::{SparseMat, SparseVec};
use crate::qfield::{qint, FieldElem};
use serde_json::json;
use std::collections::BTreeMap;
use std::fmt;

/// Default cap on module dimensions; override with GQG_MAX_DIM.
const DEFAULT_MAX_DIM: usize = 5000;

pub fn max_dim() -> usize {
    std::env::var("GQG_MAX_DIM")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_MAX_DIM)
}

/// A basis label: letters of the natural module, occupation vectors of
/// fundamental modules, tableaux of polynomial modules, or tensor words.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisLabel {
    Letter(usize),
    MVec(Vec<u32>),
    Tab(Tableau),
    Word(Vec<BasisLabel>),
}

impl BasisLabel {
    /// Flattened tensor concatenation.
    pub fn tensor(a: &BasisLabel, b: &BasisLabel) -> BasisLabel {
        let mut parts = match a {
            BasisLabel::Word(xs) => xs.clone(),
            other => vec![other.clone()],
        };
        match b {
            BasisLabel::Word(xs) => parts.extend(xs.iter().cloned()),
            other => parts.push(other.clone()),
        }
        BasisLabel::Word(parts)
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Letter(j) => write!(f, "v{}", j),
            BasisLabel::MVec(m) => {
                let body = m
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                write!(f, "|{}>", body)
            }
            BasisLabel::Tab(t) => write!(f, "{}", t),
            BasisLabel::Word(parts) => {
                let body = parts
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join("(x)");
                write!(f, "{}", body)
            }
        }
    }
}

impl fmt::Debug for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Which comultiplication a tensor product uses.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Comult {
    Delta,
    DeltaPlus,
}

/// A finite-dimensional weight module with explicit generator actions.
#[derive(Clone)]
pub struct WeightModule {
    pub sig: EpsilonSignature,
    pub basis: Vec<BasisLabel>,
    pub weights: Vec<Weight>,
    /// act_e[i] is the matrix of e_i, for i in 0..n.
    pub act_e: Vec<SparseMat>,
    pub act_f: Vec<SparseMat>,
    /// Spectral parameters of the tensor factors, one per factor.
    pub params: Vec<FieldElem>,
    pub name: String,
}

impl WeightModule {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn n(&self) -> usize {
        self.sig.len()
    }

    /// The eigenvalue q_j^{mu_j} of omega_j on the basis vector `idx`.
    pub fn omega_eigen(&self, letter: usize, idx: usize) -> FieldElem {
        omega_power(&self.sig, letter, self.weights[idx].coeff(letter), 1)
    }

    /// The eigenvalue of k_i = omega_i omega_{i+1}^{-1}, affine index.
    pub fn k_eigen(&self, i: usize, idx: usize) -> FieldElem {
        self.k_eigen_pow(i, idx, 1)
    }

    /// The eigenvalue of k_i^{p}.
    pub fn k_eigen_pow(&self, i: usize, idx: usize, p: i64) -> FieldElem {
        let a = self.sig.letter(i);
        let b = self.sig.letter(i + 1);
        let w = &self.weights[idx];
        omega_power(&self.sig, a, w.coeff(a), p)
            .mul(&omega_power(&self.sig, b, w.coeff(b), -p))
    }

    /// The diagonal matrix of omega_letter^{p}.
    pub fn act_omega(&self, letter: usize, p: i64) -> SparseMat {
        let mut m = SparseMat::zero(self.dim(), self.dim());
        for idx in 0..self.dim() {
            m.set(
                idx,
                idx,
                omega_power(&self.sig, letter, self.weights[idx].coeff(letter), p),
            );
        }
        m
    }

    /// The diagonal matrix of k_i^{p}.
    pub fn act_k(&self, i: usize, p: i64) -> SparseMat {
        let mut m = SparseMat::zero(self.dim(), self.dim());
        for idx in 0..self.dim() {
            m.set(idx, idx, self.k_eigen_pow(i, idx, p));
        }
        m
    }

    /// Basis indices grouped by weight.
    pub fn weight_blocks(&self) -> BTreeMap<Weight, Vec<usize>> {
        let mut blocks: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
        for (idx, w) in self.weights.iter().enumerate() {
            blocks.entry(w.clone()).or_default().push(idx);
        }
        blocks
    }

    pub fn index_of(&self, label: &BasisLabel) -> Option<usize> {
        self.basis.iter().position(|b| b == label)
    }

    /// The natural n-dimensional module: omega_i v_j = q_i^{d_ij} v_j,
    /// e_k v_j = d_{k,j-1} v_{j-1}, f_k v_j = d_{kj} v_{j+1}, indices
    /// modulo n.
    pub fn natural(sig: &EpsilonSignature) -> Self {
        let n = sig.len();
        let basis: Vec<BasisLabel> = (1..=n).map(BasisLabel::Letter).collect();
        let weights: Vec<Weight> = (1..=n).map(|j| Weight::delta(n, j)).collect();
        let mut act_e = vec![SparseMat::zero(n, n); n];
        let mut act_f = vec![SparseMat::zero(n, n); n];
        for j in 1..=n {
            // e_k v_j = v_{j-1} for k = j-1 mod n.
            let k = (j - 1) % n;
            act_e[k].set(sig.letter(j + n - 1) - 1, j - 1, FieldElem::one());
            // f_k v_j = v_{j+1} for k = j mod n.
            let k = j % n;
            act_f[k].set(sig.letter(j + 1) - 1, j - 1, FieldElem::one());
        }
        WeightModule {
            sig: sig.clone(),
            basis,
            weights,
            act_e,
            act_f,
            params: vec![FieldElem::one()],
            name: format!("V[{}]", sig),
        }
    }

    /// The fundamental module W_{s}(x): basis |m> over occupation
    /// vectors with |m| = s, entries free at even letters and 0/1 at odd
    /// letters; the spectral parameter x enters through index 0.
    pub fn fundamental(sig: &EpsilonSignature, s: u32, x: &FieldElem) -> Result<Self> {
        let n = sig.len();
        let mvecs = enumerate_mvecs(sig, s);
        if mvecs.len() > max_dim() {
            return Err(Error::DimensionCap {
                dim: mvecs.len(),
                cap: max_dim(),
            });
        }
        let index: BTreeMap<Vec<u32>, usize> = mvecs
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let dim = mvecs.len();
        let basis: Vec<BasisLabel> = mvecs.iter().map(|m| BasisLabel::MVec(m.clone())).collect();
        let weights: Vec<Weight> = mvecs
            .iter()
            .map(|m| Weight(m.iter().map(|&c| c as i64).collect()))
            .collect();
        let x_inv = if s > 0 { x.inv()? } else { FieldElem::one() };
        let mut act_e = vec![SparseMat::zero(dim, dim); n];
        let mut act_f = vec![SparseMat::zero(dim, dim); n];
        for (col, m) in mvecs.iter().enumerate() {
            for i in 0..n {
                let a = sig.letter(i) - 1; // position gaining under e_i
                let b = sig.letter(i + 1) - 1; // position losing under e_i
                // e_i |m> = x^{d_i0} q^{m_{i+1} - m_i - 1} [m_{i+1}] |m + e_i - e_{i+1}>
                if m[b] > 0 {
                    let mut t = m.clone();
                    t[a] += 1;
                    t[b] -= 1;
                    if admissible(sig, &t) {
                        let coeff = FieldElem::q_pow(m[b] as i64 - m[a] as i64 - 1)
                            .mul(&qint(m[b] as i64));
                        let coeff = if i == 0 { coeff.mul(x) } else { coeff };
                        act_e[i].set(index[&t], col, coeff);
                    }
                }
                // f_i |m> = x^{-d_i0} q^{m_i - m_{i+1} - 1} [m_i] |m - e_i + e_{i+1}>
                if m[a] > 0 {
                    let mut t = m.clone();
                    t[a] -= 1;
                    t[b] += 1;
                    if admissible(sig, &t) {
                        let coeff = FieldElem::q_pow(m[a] as i64 - m[b] as i64 - 1)
                            .mul(&qint(m[a] as i64));
                        let coeff = if i == 0 { coeff.mul(&x_inv) } else { coeff };
                        act_f[i].set(index[&t], col, coeff);
                    }
                }
            }
        }
        Ok(WeightModule {
            sig: sig.clone(),
            basis,
            weights,
            act_e,
            act_f,
            params: vec![x.clone()],
            name: format!("W[{},{}]({})", s, sig, x),
        })
    }

    /// Tensor product of two modules over the same signature.
    pub fn tensor(a: &WeightModule, b: &WeightModule, comult: Comult) -> Result<Self> {
        if a.sig != b.sig {
            return Err(Error::Precondition(
                "tensor factors over different signatures".into(),
            ));
        }
        let n = a.n();
        let dim = a.dim() * b.dim();
        if dim > max_dim() {
            return Err(Error::DimensionCap {
                dim,
                cap: max_dim(),
            });
        }
        let idx = |ia: usize, ib: usize| ia * b.dim() + ib;
        let mut basis = Vec::with_capacity(dim);
        let mut weights = Vec::with_capacity(dim);
        for ia in 0..a.dim() {
            for ib in 0..b.dim() {
                basis.push(BasisLabel::tensor(&a.basis[ia], &b.basis[ib]));
                weights.push(a.weights[ia].add(&b.weights[ib]));
            }
        }
        let mut act_e = Vec::with_capacity(n);
        let mut act_f = Vec::with_capacity(n);
        for i in 0..n {
            let mut e = SparseMat::zero(dim, dim);
            let mut f = SparseMat::zero(dim, dim);
            for ia in 0..a.dim() {
                for ib in 0..b.dim() {
                    let col = idx(ia, ib);
                    match comult {
                        Comult::Delta => {
                            // e_i (x) 1 + k_i^{-1} (x) e_i
                            for (r, c) in a.act_e[i].cols[ia].iter() {
                                e.set(idx(*r, ib), col, c.clone());
                            }
                            let ka = a.k_eigen_pow(i, ia, -1);
                            for (r, c) in b.act_e[i].cols[ib].iter() {
                                e.set(idx(ia, *r), col, ka.mul(c));
                            }
                            // f_i (x) k_i + 1 (x) f_i
                            let kb = b.k_eigen(i, ib);
                            for (r, c) in a.act_f[i].cols[ia].iter() {
                                f.set(idx(*r, ib), col, kb.mul(c));
                            }
                            for (r, c) in b.act_f[i].cols[ib].iter() {
                                f.set(idx(ia, *r), col, c.clone());
                            }
                        }
                        Comult::DeltaPlus => {
                            // 1 (x) e_i + e_i (x) k_i
                            for (r, c) in b.act_e[i].cols[ib].iter() {
                                e.set(idx(ia, *r), col, c.clone());
                            }
                            let kb = b.k_eigen(i, ib);
                            for (r, c) in a.act_e[i].cols[ia].iter() {
                                e.set(idx(*r, ib), col, kb.mul(c));
                            }
                            // k_i^{-1} (x) f_i + f_i (x) 1
                            let ka = a.k_eigen_pow(i, ia, -1);
                            for (r, c) in b.act_f[i].cols[ib].iter() {
                                f.set(idx(ia, *r), col, ka.mul(c));
                            }
                            for (r, c) in a.act_f[i].cols[ia].iter() {
                                f.set(idx(*r, ib), col, c.clone());
                            }
                        }
                    }
                }
            }
            act_e.push(e);
            act_f.push(f);
        }
        let mut params = a.params.clone();
        params.extend(b.params.iter().cloned());
        Ok(WeightModule {
            sig: a.sig.clone(),
            basis,
            weights,
            act_e,
            act_f,
            params,
            name: format!("{}(x){}", a.name, b.name),
        })
    }

    pub fn tensor_many(factors: &[&WeightModule], comult: Comult) -> Result<Self> {
        let mut acc = factors[0].clone();
        for m in &factors[1..] {
            acc = WeightModule::tensor(&acc, m, comult)?;
        }
        Ok(acc)
    }

    /// Structural check that every action matrix respects the weight
    /// grading: e_i maps the mu-space into the (mu + alpha_i)-space and
    /// f_i into the (mu - alpha_i)-space.
    pub fn check_weight_grading(&self) -> bool {
        for i in 0..self.n() {
            let alpha = Weight::alpha(&self.sig, i);
            for col in 0..self.dim() {
                let up = self.weights[col].add(&alpha);
                for (row, _) in self.act_e[i].cols[col].iter() {
                    if self.weights[*row] != up {
                        return false;
                    }
                }
                let down = self.weights[col].sub(&alpha);
                for (row, _) in self.act_f[i].cols[col].iter() {
                    if self.weights[*row] != down {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mats = |mats: &[SparseMat]| -> serde_json::Value {
            json!(mats
                .iter()
                .map(|m| {
                    m.cols
                        .iter()
                        .enumerate()
                        .flat_map(|(j, col)| {
                            col.iter()
                                .map(move |(i, c)| json!([i, j, c.to_string()]))
                        })
                        .collect::<Vec<_>>()
                })
                .collect::<Vec<_>>())
        };
        json!({
            "signature": self.sig.to_string(),
            "name": self.name,
            "dim": self.dim(),
            "basis": self.basis.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
            "weights": self.weights.iter().map(|w| w.0.clone()).collect::<Vec<_>>(),
            "act_e": mats(&self.act_e),
            "act_f": mats(&self.act_f),
        })
    }
}

/// q_letter^{c*p} as a signed monomial.
fn omega_power(sig: &EpsilonSignature, letter: usize, c: i64, p: i64) -> FieldElem {
    let e = c * p;
    if sig.parity(letter) == 0 {
        FieldElem::q_pow(e)
    } else {
        FieldElem::signed_q_pow(if e % 2 == 0 { 1 } else { -1 }, -e)
    }
}

fn admissible(sig: &EpsilonSignature, m: &[u32]) -> bool {
    m.iter()
        .enumerate()
        .all(|(k, &c)| sig.entries()[k] == 0 || c <= 1)
}

/// Occupation vectors with |m| = s, largest first in lexicographic order
/// so |s e_1> comes first when eps_1 = 0.
fn enumerate_mvecs(sig: &EpsilonSignature, s: u32) -> Vec<Vec<u32>> {
    let n = sig.len();
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn go(
        sig: &EpsilonSignature,
        pos: usize,
        rem: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        let n = sig.len();
        if pos == n {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let cap = if sig.entries()[pos] == 1 { rem.min(1) } else { rem };
        for c in (0..=cap).rev() {
            cur[pos] = c;
            go(sig, pos + 1, rem - c, cur, out);
        }
        cur[pos] = 0;
    }
    go(sig, 0, s, &mut cur, &mut out);
    out
}

/// The diagonal intertwiner between the Delta and Delta_plus tensor
/// products: on u (x) v of weights mu, nu it multiplies by
/// prod_i q_i^{mu_i nu_i}.
pub fn psi_twist(a: &WeightModule, b: &WeightModule) -> SparseMat {
    let sig = &a.sig;
    let dim = a.dim() * b.dim();
    let mut m = SparseMat::zero(dim, dim);
    for ia in 0..a.dim() {
        for ib in 0..b.dim() {
            let mut acc = FieldElem::one();
            for letter in 1..=sig.len() {
                let p = a.weights[ia].coeff(letter) * b.weights[ib].coeff(letter);
                if p != 0 {
                    acc = acc.mul(&omega_power(sig, letter, p, 1));
                }
            }
            let idx = ia * b.dim() + ib;
            m.set(idx, idx, acc);
        }
    }
    m
}

/// The flip a (x) b -> b (x) a as a matrix from the (A,B) tensor basis
/// to the (B,A) tensor basis.
pub fn flip_matrix(dim_a: usize, dim_b: usize) -> SparseMat {
    let mut m = SparseMat::zero(dim_a * dim_b, dim_a * dim_b);
    for ia in 0..dim_a {
        for ib in 0..dim_b {
            m.set(ib * dim_a + ia, ia * dim_b + ib, FieldElem::one());
        }
    }
    m
}

/// Convenience: the basis index of a pure tensor in a two-factor tensor
/// module built by `tensor`.
pub fn pair_index(b_dim: usize, ia: usize, ib: usize) -> usize {
    ia * b_dim + ib
}

/// A sparse unit vector.
pub fn unit_vec(i: usize) -> SparseVec {
    SparseVec::unit(i)
}
