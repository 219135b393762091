use super::*;
use crate::combin::{enumerate_sst, EpsilonSignature, Partition};
use crate::linalg::SparseVec;
use crate::qfield::FieldElem;
use crate::repcore::{Comult, WeightModule};
use crate::schurweyl::build_v;

fn sig(s: &str) -> EpsilonSignature {
    EpsilonSignature::parse(s).unwrap()
}

fn ones(n: usize) -> Vec<FieldElem> {
    vec![FieldElem::one(); n]
}

#[test]
fn natural_crystal_is_a_cycle() {
    for s in EpsilonSignature::all(4) {
        let nat = WeightModule::natural(&s);
        let colors: Vec<usize> = (0..4).collect();
        let g = crystal_of(&nat, &ones(4), &colors).unwrap();
        assert!(g.is_crystal(), "sig {}: {:?}", s, g.findings);
        // f~_k v_k = v_{k+1} in every parity case, including the affine
        // wrap f~_0 v_4 = v_1.
        for k in 1..4usize {
            assert_eq!(g.f_edges[k - 1].get(&k).map(|(t, _)| *t), Some(k));
        }
        assert_eq!(g.f_edges[3].get(&0).map(|(t, _)| *t), Some(0));
        assert!(g.is_connected());
    }
}

#[test]
fn fundamental_crystal_axioms_small() {
    for n in [4usize, 5] {
        for s in EpsilonSignature::all(n) {
            for spin in 1..=3u32 {
                let w = WeightModule::fundamental(&s, spin, &FieldElem::one()).unwrap();
                let colors: Vec<usize> = (0..n).collect();
                let g = crystal_of(&w, &ones(w.dim()), &colors).unwrap();
                assert!(
                    g.is_crystal(),
                    "W_{} sig {}: {:?}",
                    spin,
                    s,
                    g.findings
                );
                assert!(g.is_connected(), "W_{} sig {} disconnected", spin, s);
            }
        }
    }
}

#[test]
fn sl2_string_round_trip() {
    // Case 3 on a 2-dimensional string: e~ f~ u = u for a singular u with
    // <wt, alpha^vee> = 1.
    let s = sig("0011");
    let nat = WeightModule::natural(&s);
    let u = SparseVec::unit(0); // v_1, singular for color 1
    let f = kashiwara(&nat, 1, KashiwaraDir::Lower, &u).unwrap();
    assert!(!f.is_zero());
    let back = kashiwara(&nat, 1, KashiwaraDir::Raise, &f).unwrap();
    assert_eq!(back, u);
}

#[test]
fn tensor_rule_agrees_with_linear_algebra_on_w1_w1() {
    for s in EpsilonSignature::all(4) {
        let w1 = WeightModule::fundamental(&s, 1, &FieldElem::one()).unwrap();
        let colors: Vec<usize> = (0..4).collect();
        let g1 = crystal_of(&w1, &ones(4), &colors).unwrap();
        assert!(g1.is_crystal(), "factor sig {}", s);
        let combinatorial = tensor_crystal(&s, &g1, &g1).unwrap();
        let t = WeightModule::tensor(&w1, &w1, Comult::Delta).unwrap();
        let linear = crystal_of(&t, &ones(16), &colors).unwrap();
        assert!(linear.is_crystal(), "product sig {}: {:?}", s, linear.findings);
        assert!(
            combinatorial.same_unsigned_graph(&linear),
            "tensor rule mismatch for sig {}",
            s
        );
    }
}

#[test]
fn tensor_rule_agrees_on_w2_w1() {
    for s in [sig("0110"), sig("1010"), sig("0011"), sig("1111")] {
        let w2 = WeightModule::fundamental(&s, 2, &FieldElem::one()).unwrap();
        let w1 = WeightModule::fundamental(&s, 1, &FieldElem::one()).unwrap();
        let colors: Vec<usize> = (0..4).collect();
        let g2 = crystal_of(&w2, &ones(w2.dim()), &colors).unwrap();
        let g1 = crystal_of(&w1, &ones(4), &colors).unwrap();
        let combinatorial = tensor_crystal(&s, &g2, &g1).unwrap();
        let t = WeightModule::tensor(&w2, &w1, Comult::Delta).unwrap();
        let linear = crystal_of(&t, &ones(t.dim()), &colors).unwrap();
        assert!(linear.is_crystal(), "product sig {}: {:?}", s, linear.findings);
        assert!(
            combinatorial.same_unsigned_graph(&linear),
            "tensor rule mismatch for sig {}",
            s
        );
    }
}

#[test]
fn connectivity_certificates_small() {
    for s in EpsilonSignature::all(4) {
        if s.parity(1) != 0 {
            continue;
        }
        let cert = connectivity_with_primed(&s, 1, 1).unwrap();
        assert!(cert.connected, "sig {} unreached {:?}", s, cert.unreached);
        let cert = connectivity_with_primed(&s, 2, 1).unwrap();
        assert!(cert.connected, "sig {} unreached {:?}", s, cert.unreached);
    }
}

#[test]
fn connectivity_example_0110_l2_m1() {
    let s = sig("0110");
    let cert = connectivity_with_primed(&s, 2, 1).unwrap();
    assert!(cert.connected);
    // The tree reaches every vertex.
    assert_eq!(cert.tree.len() + 1, cert.labels.len());
    // DOT export mentions a primed color when one was used.
    let dot = cert.to_dot();
    assert!(dot.contains("digraph"));
}

#[test]
fn polynomial_module_crystal_for_standard_signature() {
    // For the sorted signature the declared lattice {q^{-d(T)} v_T} is a
    // crystal base and its finite-colored graph matches the tableau
    // crystal computed from reversed column words.
    for (s, shape) in [
        (sig("0011"), Partition::new(vec![2, 1]).unwrap()),
        (sig("0011"), Partition::new(vec![2, 2]).unwrap()),
        (sig("0111"), Partition::new(vec![2, 1]).unwrap()),
    ] {
        let pm = build_v(&shape, &s).unwrap();
        assert_eq!(pm.sig, s, "already even-first");
        let scale: Vec<FieldElem> = pm
            .d_stats
            .iter()
            .map(|&d| FieldElem::q_pow(-d))
            .collect();
        let colors: Vec<usize> = (1..4).collect();
        let g = crystal_of(&pm.module, &scale, &colors).unwrap();
        assert!(g.is_crystal(), "sig {} shape {}: {:?}", s, shape, g.findings);

        // Tableau crystal through reversed column words.
        let nat = WeightModule::natural(&s);
        let gnat = crystal_of(&nat, &ones(4), &colors).unwrap();
        let l = shape.size() as usize;
        let mut word_graph = gnat.clone();
        for _ in 1..l {
            word_graph = tensor_crystal(&s, &word_graph, &gnat).unwrap();
        }
        // Index of a word vertex: digits base n, first tensor slot most
        // significant.
        let word_index = |word: &[u8]| -> usize {
            word.iter().fold(0usize, |acc, &x| acc * 4 + (x as usize - 1))
        };
        let tabs = enumerate_sst(&shape, &s);
        let index_of_tab: std::collections::BTreeMap<usize, usize> = tabs
            .iter()
            .enumerate()
            .map(|(k, t)| (word_index(&t.column_word()), k))
            .collect();
        for (k, t) in tabs.iter().enumerate() {
            let v = word_index(&t.column_word());
            for &i in &colors {
                let word_target = word_graph.f_edges[v]
                    .get(&i)
                    .map(|(t, _)| index_of_tab.get(t).copied());
                let module_target = g.f_edges[k].get(&i).map(|(t, _)| Some(*t));
                assert_eq!(
                    word_target, module_target,
                    "tableau crystal mismatch: shape {} sig {} T {} color {}",
                    shape, s, t, i
                );
            }
        }
    }
}

#[test]
fn polynomial_module_crystal_findings_are_reported_not_fatal() {
    // For arbitrary signatures the candidate lattice need not satisfy
    // the axioms; the graph construction must report findings instead of
    // failing.
    let s = sig("1001");
    let shape = Partition::new(vec![2, 1]).unwrap();
    let pm = build_v(&shape, &s).unwrap();
    let scale: Vec<FieldElem> = pm
        .d_stats
        .iter()
        .map(|&d| FieldElem::q_pow(-d))
        .collect();
    let colors: Vec<usize> = (1..4).collect();
    // Whatever the outcome, this must not error out.
    let g = crystal_of(&pm.module, &scale, &colors).unwrap();
    let _ = g.is_crystal();
}

#[test]
fn dot_and_json_exports() {
    let s = sig("0110");
    let w = WeightModule::fundamental(&s, 1, &FieldElem::one()).unwrap();
    let colors: Vec<usize> = (0..4).collect();
    let g = crystal_of(&w, &ones(4), &colors).unwrap();
    let dot = g.to_dot();
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("|1,0,0,0>"));
    let j = g.to_json();
    assert_eq!(j["is_crystal"], true);
}
