//! The Iwahori-Hecke algebra of type A with quadratic relation
//! (h_i - q^{-2})(h_i + 1) = 0, acting on tensor powers of the natural
//! module through the finite two-site R matrix.

use crate::combin::EpsilonSignature;
use crate::error::{Error, Result};
use crate::linalg::SparseVec;
use crate::qfield::FieldElem;
use crate::schurweyl::perm::Perm;
use std::collections::BTreeMap;

/// Soft bound on tensor degree: elements have |S_l| basis terms.
pub const MAX_TENSOR_DEGREE: usize = 6;

/// A formal linear combination of the standard basis h(w).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeckeElement {
    pub terms: BTreeMap<Perm, FieldElem>,
}

impl HeckeElement {
    pub fn zero() -> Self {
        HeckeElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn one(l: usize) -> Self {
        HeckeElement {
            terms: BTreeMap::from([(Perm::identity(l), FieldElem::one())]),
        }
    }

    pub fn basis(w: Perm) -> Self {
        HeckeElement {
            terms: BTreeMap::from([(w, FieldElem::one())]),
        }
    }

    pub fn gen(l: usize, i: usize) -> Self {
        Self::basis(Perm::transposition(l, i))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, w: Perm, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(entry) => {
                *entry = entry.add(&c);
                if entry.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        HeckeElement {
            terms: self
                .terms
                .iter()
                .map(|(w, k)| (w.clone(), k.mul(c)))
                .collect(),
        }
    }

    /// Right multiplication by the generator h_i:
    /// h(w) h_i = h(w s_i) when the length goes up, and
    /// (q^{-2} - 1) h(w) + q^{-2} h(w s_i) when it goes down.
    pub fn mul_gen(&self, i: usize) -> Self {
        let mut out = HeckeElement::zero();
        let qm2 = FieldElem::q_pow(-2);
        let qm2_minus_1 = qm2.sub(&FieldElem::one());
        for (w, c) in &self.terms {
            let l = w.degree();
            let ws = w.compose(&Perm::transposition(l, i));
            if ws.length() > w.length() {
                out.add_term(ws, c.clone());
            } else {
                out.add_term(w.clone(), c.mul(&qm2_minus_1));
                out.add_term(ws, c.mul(&qm2));
            }
        }
        out
    }

    /// Right multiplication by h(w) along its canonical reduced word.
    pub fn mul_basis(&self, w: &Perm) -> Self {
        let mut acc = self.clone();
        for i in w.reduced_word() {
            acc = acc.mul_gen(i);
        }
        acc
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = HeckeElement::zero();
        for (w, c) in &other.terms {
            out = out.add(&self.mul_basis(w).scale(c));
        }
        out
    }
}

/// The tensor power of the natural module as an index space, with the
/// two-site R matrix action. Basis index digits are letters minus one,
/// most significant digit = leftmost tensor slot.
pub struct TensorSpace {
    pub sig: EpsilonSignature,
    pub degree: usize,
}

impl TensorSpace {
    pub fn new(sig: &EpsilonSignature, degree: usize) -> Result<Self> {
        if degree > MAX_TENSOR_DEGREE {
            return Err(Error::Precondition(format!(
                "tensor degree {} exceeds the soft limit {}",
                degree, MAX_TENSOR_DEGREE
            )));
        }
        Ok(TensorSpace {
            sig: sig.clone(),
            degree,
        })
    }

    pub fn dim(&self) -> usize {
        self.sig.len().pow(self.degree as u32)
    }

    /// The letter (1..=n) in slot `k` (0-based from the left).
    pub fn letter_at(&self, idx: usize, k: usize) -> usize {
        let n = self.sig.len();
        (idx / n.pow((self.degree - 1 - k) as u32)) % n + 1
    }

    pub fn index_of(&self, letters: &[u8]) -> usize {
        let n = self.sig.len();
        letters
            .iter()
            .fold(0usize, |acc, &x| acc * n + (x as usize - 1))
    }

    pub fn letters_of(&self, idx: usize) -> Vec<u8> {
        (0..self.degree)
            .map(|k| self.letter_at(idx, k) as u8)
            .collect()
    }

    fn swap_slots(&self, idx: usize, k: usize) -> usize {
        let n = self.sig.len();
        let pk = n.pow((self.degree - 1 - k) as u32);
        let pk1 = n.pow((self.degree - 2 - k) as u32);
        let a = (idx / pk) % n;
        let b = (idx / pk1) % n;
        idx - a * pk - b * pk1 + b * pk + a * pk1
    }

    /// Applies the two-site R matrix at slots (k, k+1):
    /// v_i (x) v_i -> q^{-1} q_i^{-1} v_i (x) v_i,
    /// v_i (x) v_j -> q^{-1} v_j (x) v_i for i > j,
    /// v_i (x) v_j -> (q^{-2} - 1) v_i (x) v_j + q^{-1} v_j (x) v_i for i < j.
    pub fn apply_r(&self, v: &SparseVec, k: usize) -> SparseVec {
        let mut acc: BTreeMap<usize, FieldElem> = BTreeMap::new();
        let qm1 = FieldElem::q_pow(-1);
        let qm2_minus_1 = FieldElem::q_pow(-2).sub(&FieldElem::one());
        let mut push = |i: usize, c: FieldElem| {
            let entry = acc.entry(i).or_insert_with(FieldElem::zero);
            *entry = entry.add(&c);
        };
        for (idx, c) in v.iter() {
            let a = self.letter_at(*idx, k);
            let b = self.letter_at(*idx, k + 1);
            if a == b {
                let coeff = qm1.mul(&self.sig.q_i(a).inv().unwrap());
                push(*idx, c.mul(&coeff));
            } else if a > b {
                push(self.swap_slots(*idx, k), c.mul(&qm1));
            } else {
                push(*idx, c.mul(&qm2_minus_1));
                push(self.swap_slots(*idx, k), c.mul(&qm1));
            }
        }
        SparseVec::from_entries(acc.into_iter().collect())
    }

    /// Applies h(w) along the canonical reduced word of w.
    pub fn apply_basis(&self, v: &SparseVec, w: &Perm) -> SparseVec {
        // h(w) = h_{k_1} ... h_{k_m} acts with the rightmost factor
        // first.
        let word = w.reduced_word();
        let mut acc = v.clone();
        for &k in word.iter().rev() {
            acc = self.apply_r(&acc, k);
        }
        acc
    }

    pub fn apply(&self, v: &SparseVec, h: &HeckeElement) -> SparseVec {
        let mut acc = SparseVec::zero();
        for (w, c) in &h.terms {
            acc = acc.add_scaled(&self.apply_basis(v, w), c);
        }
        acc
    }
}
