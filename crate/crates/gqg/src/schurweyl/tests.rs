use super::*;
use crate::combin::{enumerate_sst, h_lambda, sst_count, EpsilonSignature, Partition};
use crate::linalg::SparseVec;
use crate::qfield::FieldElem;
use crate::repcore::{Comult, GeneratorSet, WeightModule};

fn sig(s: &str) -> EpsilonSignature {
    EpsilonSignature::parse(s).unwrap()
}

fn lam(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

#[test]
fn finite_r_matrix_examples() {
    let s = sig("0110");
    let space = TensorSpace::new(&s, 2).unwrap();
    // R(v_i (x) v_i) = q^{-1} q_i^{-1} v_i (x) v_i, here i = 2 odd:
    // q^{-1} (-q^{-1})^{-1} = -1... value is q^{-1} * (-q) = -1? No:
    // q_2 = -q^{-1}, so q_2^{-1} = -q and the coefficient is -1.
    let v22 = SparseVec::unit(space.index_of(&[2, 2]));
    let r = space.apply_r(&v22, 0);
    assert_eq!(r.get(space.index_of(&[2, 2])), FieldElem::from_int(-1));
    // i = 1 even: q^{-1} q^{-1} = q^{-2}.
    let v11 = SparseVec::unit(space.index_of(&[1, 1]));
    let r = space.apply_r(&v11, 0);
    assert_eq!(r.get(space.index_of(&[1, 1])), FieldElem::q_pow(-2));
    // i > j: swap with q^{-1}.
    let v21 = SparseVec::unit(space.index_of(&[2, 1]));
    let r = space.apply_r(&v21, 0);
    assert_eq!(r.get(space.index_of(&[1, 2])), FieldElem::q_pow(-1));
    assert!(r.get(space.index_of(&[2, 1])).is_zero());
    // i < j: diagonal (q^{-2} - 1) plus swap q^{-1}.
    let v12 = SparseVec::unit(space.index_of(&[1, 2]));
    let r = space.apply_r(&v12, 0);
    assert_eq!(
        r.get(space.index_of(&[1, 2])),
        FieldElem::q_pow(-2).sub(&FieldElem::one())
    );
    assert_eq!(r.get(space.index_of(&[2, 1])), FieldElem::q_pow(-1));
}

/// The quadratic and braid relations hold for the two-site R matrix for
/// every signature, including those with an odd first letter.
#[test]
fn hecke_relations_on_tensor_space() {
    for n in [4usize, 5] {
        for s in EpsilonSignature::all(n) {
            let space = TensorSpace::new(&s, 3).unwrap();
            let qm2 = FieldElem::q_pow(-2);
            for idx in 0..space.dim() {
                let v = SparseVec::unit(idx);
                for k in 0..2 {
                    // (h_k - q^{-2})(h_k + 1) = 0.
                    let hv = space.apply_r(&v, k);
                    let lhs = space
                        .apply_r(&hv, k)
                        .add_scaled(&hv, &qm2.sub(&FieldElem::one()).neg())
                        .add_scaled(&v, &qm2.neg());
                    assert!(lhs.is_zero(), "quadratic sig {} idx {} k {}", s, idx, k);
                }
                // Braid: h_0 h_1 h_0 = h_1 h_0 h_1.
                let a = space.apply_r(&space.apply_r(&space.apply_r(&v, 0), 1), 0);
                let b = space.apply_r(&space.apply_r(&space.apply_r(&v, 1), 0), 1);
                assert_eq!(a, b, "braid sig {} idx {}", s, idx);
            }
        }
    }
}

/// The Hecke action commutes with the finite generators for every
/// signature with even first letter (the standing assumption of the
/// two-site R matrix), and also for the all-odd signature.
#[test]
fn hecke_commutes_with_finite_action() {
    for n in [4usize] {
        for s in EpsilonSignature::all(n) {
            if s.parity(1) != 0 && s.m_zeros() > 0 {
                continue;
            }
            let nat = WeightModule::natural(&s);
            let t3 = WeightModule::tensor_many(&[&nat, &nat, &nat], Comult::Delta).unwrap();
            let space = TensorSpace::new(&s, 3).unwrap();
            for k in 0..2usize {
                for i in 1..n {
                    for mats in [&t3.act_e, &t3.act_f] {
                        for col in 0..t3.dim() {
                            let v = SparseVec::unit(col);
                            let lhs = space.apply_r(&mats[i].apply(&v), k);
                            let rhs = mats[i].apply(&space.apply_r(&v, k));
                            assert_eq!(lhs, rhs, "sig {} k {} i {}", s, k, i);
                        }
                    }
                    // Cartan commutation is automatic: R preserves content.
                }
            }
        }
    }
}

#[test]
fn hecke_element_algebra() {
    // h_i^2 = (q^{-2} - 1) h_i + q^{-2} in the abstract algebra.
    let h = HeckeElement::gen(3, 0);
    let sq = h.mul(&h);
    let expected = h
        .scale(&FieldElem::q_pow(-2).sub(&FieldElem::one()))
        .add(&HeckeElement::one(3).scale(&FieldElem::q_pow(-2)));
    assert_eq!(sq, expected);
    // Braid in the abstract algebra.
    let h0 = HeckeElement::gen(3, 0);
    let h1 = HeckeElement::gen(3, 1);
    assert_eq!(h0.mul(&h1).mul(&h0), h1.mul(&h0).mul(&h1));
}

#[test]
fn symmetrizer_degeneracies() {
    // Single row: the symmetrizer is e_plus.
    let sym = young_symmetrizer(&lam(&[3])).unwrap();
    assert_eq!(sym.element, sym.e_plus);
    assert_eq!(sym.e_plus.num_terms(), 6);
    // Single column: the symmetrizer is e_minus.
    let sym = young_symmetrizer(&lam(&[1, 1, 1])).unwrap();
    assert_eq!(sym.element, sym.e_minus);
}

#[test]
fn symmetrizer_annihilates_repeated_even_letter() {
    // lambda = (2,1): Y kills v_1 (x) v_1 (x) v_1 when 1 is even.
    let s = sig("0110");
    let space = TensorSpace::new(&s, 3).unwrap();
    let sym = young_symmetrizer(&lam(&[2, 1])).unwrap();
    let v = SparseVec::unit(space.index_of(&[1, 1, 1]));
    assert!(space.apply(&v, &sym.element).is_zero());
}

#[test]
fn column_and_garnir_relations_annihilate() {
    let shapes = [lam(&[2, 1]), lam(&[2, 2]), lam(&[3, 1]), lam(&[2, 2, 1])];
    for s in [sig("0110"), sig("0011"), sig("1010")] {
        for shape in &shapes {
            let l = shape.size() as usize;
            let sym = young_symmetrizer(shape).unwrap();
            let space = TensorSpace::new(&s, l).unwrap();
            // Column relations Y C_a = 0 whenever a+1 is below a.
            for a in 0..l {
                let (row, col) = sym.t_minus.cell[a];
                if sym.t_minus.letter.get(&(row + 1, col)) == Some(&(a + 1)) {
                    let yc = sym.element.mul(&column_element(l, a));
                    for idx in 0..space.dim().min(64) {
                        let v = SparseVec::unit(idx);
                        assert!(
                            space.apply(&v, &yc).is_zero(),
                            "column relation {} a={} sig {}",
                            shape,
                            a,
                            s
                        );
                    }
                }
            }
            // Garnir relations Y G_a = 0 for every belt.
            for a in 0..l {
                if let Some(belt) = garnir::garnir_belt(&sym, a) {
                    let g = garnir_element(l, &belt);
                    let yg = sym.element.mul(&g);
                    for idx in 0..space.dim().min(64) {
                        let v = SparseVec::unit(idx);
                        assert!(
                            space.apply(&v, &yg).is_zero(),
                            "garnir relation {} a={} sig {}",
                            shape,
                            a,
                            s
                        );
                    }
                }
            }
        }
    }
}

use crate::schurweyl::garnir;

#[test]
fn build_v_dimensions_small() {
    for s in EpsilonSignature::all(4) {
        for shape in [lam(&[2]), lam(&[1, 1]), lam(&[2, 1]), lam(&[2, 2])] {
            if !shape.is_hook(&s) {
                continue;
            }
            let pm = build_v(&shape, &s).unwrap();
            assert_eq!(
                pm.module.dim() as u64,
                sst_count(&shape, &pm.sig),
                "shape {} sig {} built over {}",
                shape,
                s,
                pm.sig
            );
        }
    }
}

#[test]
fn build_v_single_box_is_natural() {
    let s = sig("0110");
    let pm = build_v(&lam(&[1]), &s).unwrap();
    let nat = WeightModule::natural(&s);
    for i in 1..4 {
        assert_eq!(pm.module.act_e[i], nat.act_e[i]);
        assert_eq!(pm.module.act_f[i], nat.act_f[i]);
    }
}

#[test]
fn build_v_highest_weight_vector() {
    for s in EpsilonSignature::all(4) {
        for shape in [lam(&[2]), lam(&[2, 1])] {
            if !shape.is_hook(&s) {
                continue;
            }
            let pm = build_v(&shape, &s).unwrap();
            let h = h_lambda(&shape, &pm.sig).unwrap();
            let hi = pm
                .tableaux
                .iter()
                .position(|t| *t == h)
                .expect("H is semistandard");
            for i in 1..4 {
                assert!(
                    pm.module.act_e[i].cols[hi].is_zero(),
                    "e_{} v_H != 0 for {} over {}",
                    i,
                    shape,
                    pm.sig
                );
            }
        }
    }
}

#[test]
fn build_v_weight_grading_and_hwv_uniqueness() {
    let s = sig("0110");
    let pm = build_v(&lam(&[2, 1]), &s).unwrap();
    assert!(pm.module.check_weight_grading());
    let h = h_lambda(&lam(&[2, 1]), &pm.sig).unwrap();
    let hw = h.weight(4);
    let hwvs = crate::repcore::highest_weight_vectors(&pm.module, GeneratorSet::Finite);
    let at_hw: Vec<_> = hwvs.iter().filter(|(w, _)| *w == hw).collect();
    assert_eq!(at_hw.len(), 1);
    assert_eq!(at_hw[0].1.len(), 1);
}

#[test]
fn schur_weyl_dimension_count() {
    // sum over hook shapes of |SST| * f^lambda = n^l.
    for n in [4usize, 5] {
        for s in [
            EpsilonSignature::short(vec![0; n]).unwrap(),
            sig("0110"),
            sig("1101"),
        ] {
            if s.len() != n {
                continue;
            }
            for l in 2..=4u32 {
                let mut total = 0u64;
                for shape in Partition::all_of(l) {
                    total += sst_count(&shape, &s) * crate::combin::standard_count(&shape);
                }
                assert_eq!(total, (n as u64).pow(l), "sig {} l {}", s, l);
            }
        }
    }
}

#[test]
fn straightening_identity_small_shapes() {
    // All qualifying belts for shapes (2,1) and (2,2) over n = 4
    // signatures: the identity must hold exactly.
    let mut checked = 0usize;
    for s in EpsilonSignature::all(4) {
        for shape in [lam(&[2, 1]), lam(&[2, 2])] {
            let l = shape.size() as usize;
            let sym = young_symmetrizer(&shape).unwrap();
            let space = TensorSpace::new(&s, l).unwrap();
            // Column-semistandard fillings.
            for t in all_column_semistandard(&shape, &s) {
                for a in 0..l {
                    if garnir::garnir_belt(&sym, a).is_none() {
                        continue;
                    }
                    match check_garnir_straightening(&s, &sym, &space, &t, a) {
                        Ok(ok) => {
                            assert!(ok, "straightening {} {} belt {} sig {}", shape, t, a, s);
                            checked += 1;
                        }
                        Err(crate::error::Error::Precondition(_)) => {}
                        Err(e) => panic!("unexpected error: {}", e),
                    }
                }
            }
        }
    }
    assert!(checked > 50, "expected many qualifying belts, got {}", checked);
}

#[test]
fn straightening_rejects_bad_hypothesis() {
    // T(a) < T(d) violates the hypothesis.
    let s = sig("0011");
    let shape = lam(&[2, 1]);
    let sym = young_symmetrizer(&shape).unwrap();
    let space = TensorSpace::new(&s, 3).unwrap();
    // T_minus: letters 0,1 down the first column, 2 to the right of 0.
    // T(a=0) = 1 at cell (0,0), T(d=2) = 3 at cell (0,1): 1 < 3.
    let t = crate::combin::Tableau::new(shape, vec![vec![1, 3], vec![2]]).unwrap();
    assert!(matches!(
        check_garnir_straightening(&s, &sym, &space, &t, 0),
        Err(crate::error::Error::Precondition(_))
    ));
}

fn all_column_semistandard(
    shape: &Partition,
    s: &EpsilonSignature,
) -> Vec<crate::combin::Tableau> {
    // Brute force over all fillings; fine at these sizes.
    let cells = shape.cells();
    let mut rows: Vec<Vec<u8>> = shape
        .parts()
        .iter()
        .map(|&len| vec![1u8; len as usize])
        .collect();
    let mut out = Vec::new();
    fn go(
        cells: &[(usize, usize)],
        k: usize,
        n: usize,
        shape: &Partition,
        s: &EpsilonSignature,
        rows: &mut Vec<Vec<u8>>,
        out: &mut Vec<crate::combin::Tableau>,
    ) {
        if k == cells.len() {
            let t = crate::combin::Tableau::new(shape.clone(), rows.clone()).unwrap();
            if t.is_column_semistandard(s) {
                out.push(t);
            }
            return;
        }
        let (r, c) = cells[k];
        for x in 1..=n as u8 {
            rows[r][c] = x;
            go(cells, k + 1, n, shape, s, rows, out);
        }
        rows[r][c] = 1;
    }
    go(
        &cells,
        0,
        s.len(),
        shape,
        s,
        &mut rows,
        &mut out,
    );
    out
}

#[test]
fn finite_r_yang_baxter() {
    for s in EpsilonSignature::all(4) {
        let space = TensorSpace::new(&s, 3).unwrap();
        for idx in 0..space.dim() {
            let v = SparseVec::unit(idx);
            let a = space.apply_r(&space.apply_r(&space.apply_r(&v, 0), 1), 0);
            let b = space.apply_r(&space.apply_r(&space.apply_r(&v, 1), 0), 1);
            assert_eq!(a, b, "sig {} idx {}", s, idx);
        }
    }
}
