//! Connectivity certification for tensor products of fundamental-type
//! crystals. Besides the affine colors, auxiliary primed colors act on
//! the sub-lattice supported on even letters: each consecutive pair of
//! even letters (cyclically) carries an embedded sl2 through the
//! composed subalgebra embedding, and its lower-crystal operators
//! provide extra edges. A spanning tree to the anchor vertex certifies
//! connectedness.

use crate::combin::EpsilonSignature;
use crate::error::{Error, Result};
use crate::linalg::{SparseMat, SparseVec};
use crate::qfield::FieldElem;
use crate::repcore::{
    phi_words_unchecked, BasisLabel, Comult, GenMap, WeightModule,
};
use serde_json::json;
use std::collections::BTreeMap;

use super::graph::{crystal_of, reduce_mod_q, CrystalGraph};
use super::kashiwara::string_decompose;
use super::tensor_rule::tensor_crystal;

/// An edge color: an affine index, or a primed index from the embedded
/// homogeneous subalgebra.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum EdgeColor {
    Plain(usize),
    Primed(usize),
}

impl std::fmt::Display for EdgeColor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EdgeColor::Plain(i) => write!(f, "{}", i),
            EdgeColor::Primed(i) => write!(f, "{}'", i),
        }
    }
}

pub struct ConnectivityCertificate {
    pub sig: EpsilonSignature,
    pub l: u32,
    pub m: u32,
    pub labels: Vec<String>,
    /// Undirected adjacency with colors, for reporting.
    pub edges: Vec<(usize, usize, EdgeColor)>,
    /// Whether only the plain (affine) colors already connect the graph.
    pub plain_connected: bool,
    pub connected: bool,
    /// BFS tree: vertex -> (parent, color) for every non-anchor vertex
    /// when connected.
    pub tree: BTreeMap<usize, (usize, EdgeColor)>,
    /// Vertices unreachable from the anchor when disconnected.
    pub unreached: Vec<usize>,
    pub anchor: usize,
}

impl ConnectivityCertificate {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "signature": self.sig.to_string(),
            "l": self.l,
            "m": self.m,
            "anchor": self.labels[self.anchor],
            "connected": self.connected,
            "plain_colors_suffice": self.plain_connected,
            "unreached": self.unreached.iter().map(|&v| self.labels[v].clone()).collect::<Vec<_>>(),
            "tree_edges": self.tree.iter().map(|(v, (p, c))| {
                json!([self.labels[*v], self.labels[*p], c.to_string()])
            }).collect::<Vec<_>>(),
        })
    }

    pub fn to_dot(&self) -> String {
        use std::fmt::Write as _;
        let mut s = String::new();
        writeln!(s, "digraph connectivity {{").unwrap();
        for (v, label) in self.labels.iter().enumerate() {
            writeln!(s, "  n{} [label=\"{}\"];", v, label).unwrap();
        }
        for (a, b, c) in &self.edges {
            let style = match c {
                EdgeColor::Plain(_) => "solid",
                EdgeColor::Primed(_) => "dashed",
            };
            writeln!(
                s,
                "  n{} -> n{} [label=\"{}\", style={}];",
                a, b, c, style
            )
            .unwrap();
        }
        writeln!(s, "}}").unwrap();
        s
    }
}

/// The composed embedding of the all-even subalgebra, the even letters
/// in increasing order, and the generator words evaluated on a module.
fn all_zeros_chain(sig: &EpsilonSignature) -> Result<(EpsilonSignature, GenMap)> {
    let mut cur_sig = sig.clone();
    let mut chain = GenMap::identity(sig);
    loop {
        match (1..=cur_sig.len()).find(|&j| cur_sig.parity(j) == 1) {
            None => return Ok((cur_sig, chain)),
            Some(j) => {
                let step = phi_words_unchecked(&cur_sig, j)?;
                // step maps the reduced algebra into cur_sig's algebra;
                // compose through the existing chain into the ambient.
                chain = step.then(&chain);
                cur_sig = cur_sig.remove_letter(j)?;
            }
        }
    }
}

/// Builds the (I and primed-I)-colored graph on the crystal of
/// W_l (x) W_m at parameters 1 and certifies connectivity to the anchor
/// |l e_1> (x) |m e_1>. Requires an even first letter.
pub fn connectivity_with_primed(
    sig: &EpsilonSignature,
    l: u32,
    m: u32,
) -> Result<ConnectivityCertificate> {
    if sig.parity(1) != 0 {
        return Err(Error::Precondition(
            "connectivity certificate needs an even first letter".into(),
        ));
    }
    let one = FieldElem::one();
    let wl = WeightModule::fundamental(sig, l, &one)?;
    let wm = WeightModule::fundamental(sig, m, &one)?;
    let colors: Vec<usize> = (0..sig.len()).collect();
    let scale_l = vec![FieldElem::one(); wl.dim()];
    let scale_m = vec![FieldElem::one(); wm.dim()];
    let gl = crystal_of(&wl, &scale_l, &colors)?;
    let gm = crystal_of(&wm, &scale_m, &colors)?;
    if !gl.is_crystal() || !gm.is_crystal() {
        return Err(Error::LatticeViolation(
            "factor crystal axioms fail; cannot certify connectivity".into(),
        ));
    }
    let product = tensor_crystal(sig, &gl, &gm)?;

    let mut edges: Vec<(usize, usize, EdgeColor)> = Vec::new();
    for v in 0..product.num_vertices() {
        for (c, (t, _)) in &product.f_edges[v] {
            edges.push((v, *t, EdgeColor::Plain(*c)));
        }
    }

    // Plain-only connectivity, for reporting.
    let plain_connected = product.is_connected();

    // Primed edges on the even-supported sub-lattice.
    let tensor = WeightModule::tensor(&wl, &wm, Comult::Delta)?;
    let truncated: Vec<usize> = (0..tensor.dim())
        .filter(|&idx| {
            sig.one_letters()
                .iter()
                .all(|&j| tensor.weights[idx].coeff(j) == 0)
        })
        .collect();
    let m_zeros = sig.m_zeros();
    if m_zeros >= 2 && !truncated.is_empty() {
        let (_, chain) = all_zeros_chain(sig)?;
        let zeros = sig.zero_letters();
        let scale = vec![FieldElem::one(); tensor.dim()];
        for k in 0..m_zeros {
            // Primed color k acts through the embedded sl2 with matrices
            // E_k, F_k; the pairing letters are (j_k, j_{k+1}) cyclically.
            let e_mat: SparseMat = chain.e[k].evaluate(&tensor);
            let f_mat: SparseMat = chain.f[k].evaluate(&tensor);
            let (ja, jb) = if k == 0 {
                (zeros[m_zeros - 1], zeros[0])
            } else {
                (zeros[k - 1], zeros[k])
            };
            let wt_key = |idx: usize| tensor.weights[idx].0.clone();
            let pair = |idx: usize| {
                tensor.weights[idx].coeff(ja) - tensor.weights[idx].coeff(jb)
            };
            let mut alpha = vec![0i64; sig.len()];
            alpha[ja - 1] += 1;
            alpha[jb - 1] -= 1;
            for &v in &truncated {
                let start = SparseVec::unit(v);
                // Lower-crystal operators (the embedded pairs are even).
                for lower in [true, false] {
                    let comps =
                        string_decompose(&e_mat, &f_mat, &start, &wt_key, &alpha, &pair)?;
                    let mut acc = SparseVec::zero();
                    for comp in comps {
                        let shift = if lower { comp.k + 1 } else {
                            if comp.k == 0 { continue; }
                            comp.k - 1
                        };
                        let mut img = comp.top.clone();
                        for _ in 0..shift {
                            img = f_mat.apply(&img);
                        }
                        img = img.scale(
                            &crate::qfield::qfactorial(shift as u64).inv().unwrap(),
                        );
                        acc = acc.add(&img);
                    }
                    match reduce_mod_q(&acc, &scale) {
                        Err(msg) => {
                            return Err(Error::LatticeViolation(format!(
                                "primed color {} at vertex {}: {}",
                                k, v, msg
                            )))
                        }
                        Ok(coords) => {
                            if coords.len() == 1 {
                                let t = coords[0].0;
                                if lower {
                                    edges.push((v, t, EdgeColor::Primed(k)));
                                } else {
                                    edges.push((t, v, EdgeColor::Primed(k)));
                                }
                            } else if coords.len() > 1 {
                                return Err(Error::LatticeViolation(format!(
                                    "primed image not a signed basis vector at {}",
                                    v
                                )));
                            }
                        }
                    }
                }
            }
        }
    }

    // BFS from the anchor over the undirected union.
    let anchor_label = {
        let mut ma = vec![0u32; sig.len()];
        ma[0] = l;
        let mut mb = vec![0u32; sig.len()];
        mb[0] = m;
        BasisLabel::tensor(&BasisLabel::MVec(ma), &BasisLabel::MVec(mb))
    };
    let anchor = tensor
        .basis
        .iter()
        .position(|b| *b == anchor_label)
        .ok_or_else(|| Error::Precondition("anchor vector missing".into()))?;
    let dim = tensor.dim();
    let mut adjacency: Vec<Vec<(usize, EdgeColor)>> = vec![Vec::new(); dim];
    for (a, b, c) in &edges {
        adjacency[*a].push((*b, *c));
        adjacency[*b].push((*a, *c));
    }
    let mut tree = BTreeMap::new();
    let mut seen = vec![false; dim];
    seen[anchor] = true;
    let mut queue = std::collections::VecDeque::from([anchor]);
    while let Some(v) = queue.pop_front() {
        for &(t, c) in &adjacency[v] {
            if !seen[t] {
                seen[t] = true;
                tree.insert(t, (v, c));
                queue.push_back(t);
            }
        }
    }
    let unreached: Vec<usize> = (0..dim).filter(|&v| !seen[v]).collect();
    Ok(ConnectivityCertificate {
        sig: sig.clone(),
        l,
        m,
        labels: tensor.basis.iter().map(|b| b.to_string()).collect(),
        edges,
        plain_connected,
        connected: unreached.is_empty(),
        tree,
        unreached,
        anchor,
    })
}
