//! The combinatorial tensor product rule: the Kashiwara operators on a
//! tensor of crystals act on one factor, selected by weights for
//! isotropic colors and by string statistics for even colors, with a
//! sign twist in the all-odd-parity case.

use crate::combin::EpsilonSignature;
use crate::error::{Error, Result};
use std::collections::BTreeMap;

use super::graph::{CrystalGraph, EdgeMap};

/// Builds the tensor crystal of two crystal graphs over the same
/// signature by the combinatorial rule, with no linear algebra. Vertices
/// are pairs (a, b) indexed a * |B| + b, matching the basis order of the
/// tensor module.
pub fn tensor_crystal(
    sig: &EpsilonSignature,
    ga: &CrystalGraph,
    gb: &CrystalGraph,
) -> Result<CrystalGraph> {
    if ga.colors != gb.colors {
        return Err(Error::Precondition(
            "tensor factors carry different color sets".into(),
        ));
    }
    let colors = ga.colors.clone();
    let (da, db) = (ga.num_vertices(), gb.num_vertices());
    let dim = da * db;
    let idx = |a: usize, b: usize| a * db + b;
    let mut f_edges: EdgeMap = vec![BTreeMap::new(); dim];
    let mut e_edges: EdgeMap = vec![BTreeMap::new(); dim];

    for &i in &colors {
        let (pa, pb) = *ga
            .color_parity
            .get(&i)
            .ok_or_else(|| Error::Precondition(format!("color {} missing parity", i)))?;
        for a in 0..da {
            for b in 0..db {
                let v = idx(a, b);
                // Decide which factor each operator acts on.
                // `true` means the left factor.
                let (e_left, f_left, sign_right): (bool, bool, i8) = match (pa, pb) {
                    (0, 1) => {
                        let pair_b = ga_pair(sig, gb, i, b);
                        (pair_b == 0, pair_b == 0, 1)
                    }
                    (1, 0) => {
                        let pair_a = ga_pair(sig, ga, i, a);
                        (pair_a > 0, pair_a > 0, 1)
                    }
                    (0, 0) => {
                        let phi_b = gb.phi_stat(i, b) as i64;
                        let eps_a = ga.eps_stat(i, a) as i64;
                        (phi_b < eps_a, phi_b <= eps_a, 1)
                    }
                    (1, 1) => {
                        let phi_a = ga.phi_stat(i, a) as i64;
                        let eps_b = gb.eps_stat(i, b) as i64;
                        // sigma_i = (-1)^{(wt(a), alpha_i)}.
                        let form = ga.weights[a].form(
                            sig,
                            &crate::combin::Weight::alpha(sig, i),
                        );
                        let sigma = if form % 2 == 0 { 1i8 } else { -1i8 };
                        (phi_a >= eps_b, phi_a > eps_b, sigma)
                    }
                    _ => unreachable!(),
                };
                // e~ edge.
                if e_left {
                    if let Some((t, s)) = ga.e_edges[a].get(&i) {
                        e_edges[v].insert(i, (idx(*t, b), *s));
                    }
                } else if let Some((t, s)) = gb.e_edges[b].get(&i) {
                    e_edges[v].insert(i, (idx(a, *t), s * if pa == 1 && pb == 1 { sign_right } else { 1 }));
                }
                // f~ edge.
                if f_left {
                    if let Some((t, s)) = ga.f_edges[a].get(&i) {
                        f_edges[v].insert(i, (idx(*t, b), *s));
                    }
                } else if let Some((t, s)) = gb.f_edges[b].get(&i) {
                    f_edges[v].insert(i, (idx(a, *t), s * if pa == 1 && pb == 1 { sign_right } else { 1 }));
                }
            }
        }
    }

    let mut labels = Vec::with_capacity(dim);
    let mut weights = Vec::with_capacity(dim);
    for a in 0..da {
        for b in 0..db {
            labels.push(format!("{}(x){}", ga.labels[a], gb.labels[b]));
            weights.push(ga.weights[a].add(&gb.weights[b]));
        }
    }
    Ok(CrystalGraph {
        labels,
        weights,
        colors,
        f_edges,
        e_edges,
        findings: vec![],
        color_parity: ga.color_parity.clone(),
    })
}

/// <wt(b), alpha_i^vee> read from a factor graph.
fn ga_pair(sig: &EpsilonSignature, g: &CrystalGraph, i: usize, b: usize) -> i64 {
    g.weights[b].pair_alpha_check(sig, i)
}
