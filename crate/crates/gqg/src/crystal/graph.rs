//! Crystal graphs of declared lattices: the Kashiwara operators are
//! computed exactly and reduced mod q times the lattice, and the crystal
//! base axioms are checked and reported per (color, vertex).

use crate::combin::Weight;
use crate::error::Result;
use crate::linalg::SparseVec;
use crate::qfield::FieldElem;
use crate::repcore::WeightModule;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::json;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::kashiwara::{kashiwara, KashiwaraDir};

/// An edge map: per vertex and color, the target vertex and sign.
pub type EdgeMap = Vec<BTreeMap<usize, (usize, i8)>>;

#[derive(Clone)]
pub struct CrystalGraph {
    /// Vertex display labels.
    pub labels: Vec<String>,
    pub weights: Vec<Weight>,
    /// Colors carried by the graph (affine indices).
    pub colors: Vec<usize>,
    /// f~ edges: per vertex, color -> (target, sign).
    pub f_edges: EdgeMap,
    /// e~ edges likewise.
    pub e_edges: EdgeMap,
    /// Axiom violations, one message per (color, vertex) finding.
    pub findings: Vec<String>,
    /// Parity case of each color, used by the tensor rule.
    pub color_parity: BTreeMap<usize, (u8, u8)>,
}

impl CrystalGraph {
    pub fn is_crystal(&self) -> bool {
        self.findings.is_empty()
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    /// The string statistic eps_i(b): steps of e~ until zero.
    pub fn eps_stat(&self, i: usize, b: usize) -> usize {
        let mut k = 0;
        let mut cur = b;
        while let Some((t, _)) = self.e_edges[cur].get(&i) {
            cur = *t;
            k += 1;
            debug_assert!(k <= self.num_vertices());
        }
        k
    }

    /// The string statistic phi_i(b): steps of f~ until zero.
    pub fn phi_stat(&self, i: usize, b: usize) -> usize {
        let mut k = 0;
        let mut cur = b;
        while let Some((t, _)) = self.f_edges[cur].get(&i) {
            cur = *t;
            k += 1;
            debug_assert!(k <= self.num_vertices());
        }
        k
    }

    /// Undirected connectivity of the colored graph.
    pub fn is_connected(&self) -> bool {
        if self.num_vertices() == 0 {
            return true;
        }
        let mut seen = vec![false; self.num_vertices()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for (_, (t, _)) in self.f_edges[v].iter().chain(self.e_edges[v].iter()) {
                if !seen[*t] {
                    seen[*t] = true;
                    stack.push(*t);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Graph equality as colored directed graphs mod sign.
    pub fn same_unsigned_graph(&self, other: &CrystalGraph) -> bool {
        if self.num_vertices() != other.num_vertices() || self.colors != other.colors {
            return false;
        }
        for v in 0..self.num_vertices() {
            for &c in &self.colors {
                if self.f_edges[v].get(&c).map(|(t, _)| t)
                    != other.f_edges[v].get(&c).map(|(t, _)| t)
                {
                    return false;
                }
                if self.e_edges[v].get(&c).map(|(t, _)| t)
                    != other.e_edges[v].get(&c).map(|(t, _)| t)
                {
                    return false;
                }
            }
        }
        true
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        writeln!(s, "digraph crystal {{").unwrap();
        writeln!(s, "  rankdir=TB;").unwrap();
        for (v, label) in self.labels.iter().enumerate() {
            writeln!(s, "  n{} [label=\"{}\"];", v, label).unwrap();
        }
        for (v, edges) in self.f_edges.iter().enumerate() {
            for (color, (t, sign)) in edges {
                let tag = if *sign < 0 {
                    format!("{} (-)", color)
                } else {
                    format!("{}", color)
                };
                writeln!(s, "  n{} -> n{} [label=\"{}\", color={}];", v, t, tag, v_color(*color)).unwrap();
            }
        }
        writeln!(s, "}}").unwrap();
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "vertices": self.labels,
            "weights": self.weights.iter().map(|w| w.0.clone()).collect::<Vec<_>>(),
            "colors": self.colors,
            "f_edges": self.f_edges.iter().enumerate().flat_map(|(v, m)| {
                m.iter().map(move |(c, (t, s))| json!([v, c, t, s]))
            }).collect::<Vec<_>>(),
            "e_edges": self.e_edges.iter().enumerate().flat_map(|(v, m)| {
                m.iter().map(move |(c, (t, s))| json!([v, c, t, s]))
            }).collect::<Vec<_>>(),
            "findings": self.findings,
            "is_crystal": self.is_crystal(),
        })
    }
}

fn v_color(color: usize) -> &'static str {
    const PALETTE: [&str; 8] = [
        "black", "red", "blue", "green", "orange", "purple", "brown", "cyan",
    ];
    PALETTE[color % PALETTE.len()]
}

/// Reduces an exact vector mod q L, where L is the lattice spanned by
/// scale[k] * basis_k. Returns the rational coordinate vector at q = 0,
/// or a finding message when the vector leaves the lattice.
pub fn reduce_mod_q(
    v: &SparseVec,
    scale: &[FieldElem],
) -> std::result::Result<Vec<(usize, BigRational)>, String> {
    let mut out = Vec::new();
    for (i, c) in v.iter() {
        let coord = c.div(&scale[*i]).expect("nonzero lattice scale");
        if coord.is_zero() {
            continue;
        }
        match coord.valuation_at_q0() {
            Err(e) => return Err(format!("coordinate {} not valuated: {}", i, e)),
            Ok(val) if val < 0 => {
                return Err(format!(
                    "coordinate {} has valuation {} < 0 ({})",
                    i, val, coord
                ))
            }
            Ok(0) => out.push((*i, coord.value_at_q0().unwrap())),
            Ok(_) => {}
        }
    }
    Ok(out)
}

/// Builds the crystal graph of a module on a declared lattice. The
/// lattice is the A0-span of scale[k] * (basis vector k); vertices are
/// the signed classes of the lattice basis vectors with positive
/// canonical sign. Axiom failures are findings, never panics.
pub fn crystal_of(
    m: &WeightModule,
    scale: &[FieldElem],
    colors: &[usize],
) -> Result<CrystalGraph> {
    let dim = m.dim();
    let mut f_edges: EdgeMap = vec![BTreeMap::new(); dim];
    let mut e_edges: EdgeMap = vec![BTreeMap::new(); dim];
    let mut findings = Vec::new();
    for &i in colors {
        for b in 0..dim {
            let start = SparseVec::unit(b).scale(&scale[b]);
            for dir in [KashiwaraDir::Lower, KashiwaraDir::Raise] {
                let image = kashiwara(m, i, dir, &start)?;
                match reduce_mod_q(&image, scale) {
                    Err(msg) => findings.push(format!(
                        "lattice violation at color {} vertex {} ({:?}): {}",
                        i, b, dir, msg
                    )),
                    Ok(coords) => {
                        if coords.is_empty() {
                            continue;
                        }
                        if coords.len() != 1 || !is_pm_one(&coords[0].1) {
                            findings.push(format!(
                                "image at color {} vertex {} ({:?}) is not a signed basis vector",
                                i, b, dir
                            ));
                            continue;
                        }
                        let (target, value) = (coords[0].0, &coords[0].1);
                        let sign = if value.is_negative() { -1 } else { 1 };
                        match dir {
                            KashiwaraDir::Lower => {
                                f_edges[b].insert(i, (target, sign));
                            }
                            KashiwaraDir::Raise => {
                                e_edges[b].insert(i, (target, sign));
                            }
                        }
                    }
                }
            }
        }
    }
    // Axiom: f~ b = b' iff e~ b' = +-b, and weight compatibility.
    for &i in colors {
        let alpha = Weight::alpha(&m.sig, i);
        for b in 0..dim {
            if let Some((t, _)) = f_edges[b].get(&i) {
                if m.weights[*t] != m.weights[b].sub(&alpha) {
                    findings.push(format!(
                        "f~ edge at color {} vertex {} breaks the weight grading",
                        i, b
                    ));
                }
                match e_edges[*t].get(&i) {
                    Some((back, _)) if *back == b => {}
                    _ => findings.push(format!(
                        "axiom 5 fails at color {} vertex {}: no inverse e~ edge",
                        i, b
                    )),
                }
            }
            if let Some((t, _)) = e_edges[b].get(&i) {
                match f_edges[*t].get(&i) {
                    Some((back, _)) if *back == b => {}
                    _ => findings.push(format!(
                        "axiom 5 fails at color {} vertex {}: no inverse f~ edge",
                        i, b
                    )),
                }
            }
        }
    }
    let parity = colors
        .iter()
        .map(|&i| (i, (m.sig.parity_idx(i), m.sig.parity_idx(i + 1))))
        .collect();
    Ok(CrystalGraph {
        labels: m.basis.iter().map(|b| b.to_string()).collect(),
        weights: m.weights.clone(),
        colors: colors.to_vec(),
        f_edges,
        e_edges,
        findings,
        color_parity: parity,
    })
}

fn is_pm_one(v: &BigRational) -> bool {
    v.is_one() || (-v).is_one()
}
