//! Formal words in the generators, used to carry the reflection
//! isomorphisms between algebras with swapped parities and the
//! subalgebra embedding that realizes a shorter signature inside a
//! longer one.

use crate::combin::EpsilonSignature;
use crate::error::{Error, Result};
use crate::linalg::SparseMat;
use crate::qfield::FieldElem;
use crate::repcore::module::WeightModule;

/// A generator symbol: e_i, f_i (affine index), or omega_letter^power.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GenSym {
    E(usize),
    F(usize),
    Om(usize, i64),
}

/// A formal linear combination of generator words with field coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraWord {
    pub terms: Vec<(FieldElem, Vec<GenSym>)>,
}

impl AlgebraWord {
    pub fn zero() -> Self {
        AlgebraWord { terms: vec![] }
    }

    pub fn one() -> Self {
        AlgebraWord {
            terms: vec![(FieldElem::one(), vec![])],
        }
    }

    pub fn gen(sym: GenSym) -> Self {
        AlgebraWord {
            terms: vec![(FieldElem::one(), vec![sym])],
        }
    }

    pub fn word(syms: Vec<GenSym>) -> Self {
        AlgebraWord {
            terms: vec![(FieldElem::one(), syms)],
        }
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        AlgebraWord {
            terms: self
                .terms
                .iter()
                .map(|(k, w)| (k.mul(c), w.clone()))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&FieldElem::from_int(-1))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        AlgebraWord { terms }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (c1, w1) in &self.terms {
            for (c2, w2) in &other.terms {
                let mut w = w1.clone();
                w.extend(w2.iter().cloned());
                terms.push((c1.mul(c2), w));
            }
        }
        AlgebraWord { terms }
    }

    /// The twisted bracket [a, b]_c = ab - c * ba.
    pub fn bracket(a: &Self, b: &Self, c: &FieldElem) -> Self {
        a.mul(b).add(&b.mul(a).scale(&c.neg()))
    }

    /// Substitutes every symbol by a word.
    pub fn substitute(&self, f: &impl Fn(&GenSym) -> AlgebraWord) -> AlgebraWord {
        let mut acc = AlgebraWord::zero();
        for (c, w) in &self.terms {
            let mut prod = AlgebraWord {
                terms: vec![(c.clone(), vec![])],
            };
            for sym in w {
                prod = prod.mul(&f(sym));
            }
            acc = acc.add(&prod);
        }
        acc
    }

    /// Evaluates the word on a module by composing action matrices.
    pub fn evaluate(&self, m: &WeightModule) -> SparseMat {
        let dim = m.dim();
        let mut acc = SparseMat::zero(dim, dim);
        for (c, w) in &self.terms {
            let mut mat = SparseMat::identity(dim);
            // The word acts right factor first: matrix product in order.
            for sym in w.iter().rev() {
                let g = match sym {
                    GenSym::E(i) => m.act_e[*i].clone(),
                    GenSym::F(i) => m.act_f[*i].clone(),
                    GenSym::Om(letter, p) => m.act_omega(*letter, *p),
                };
                mat = g.mul(&mat);
            }
            acc = acc.add(&mat.scale(c));
        }
        acc
    }
}

/// k_i^{p} as a word in the omegas, affine index modulo n.
fn k_word(sig: &EpsilonSignature, i: usize, p: i64) -> AlgebraWord {
    AlgebraWord::word(vec![
        GenSym::Om(sig.letter(i), p),
        GenSym::Om(sig.letter(i + 1), -p),
    ])
}

/// D_{ij} = q_i^{<alpha_j, delta_i^vee>} q_{i+1}^{-<alpha_j, delta_{i+1}^vee>}.
pub fn d_ij(sig: &EpsilonSignature, i: usize, j: usize) -> FieldElem {
    let pair = |k: usize| -> i64 {
        let mut p = 0;
        if sig.letter(k) == sig.letter(j) {
            p += 1;
        }
        if sig.letter(k) == sig.letter(j + 1) {
            p -= 1;
        }
        p
    };
    sig.q_i(i)
        .pow(pair(i))
        .unwrap()
        .mul(&sig.q_i(i + 1).pow(-pair(i + 1)).unwrap())
}

/// Images of a full generator system as words in another algebra,
/// indexed by the affine index set of the source. When the map is a
/// letter-relabelling on the Cartan part (as for the subalgebra
/// embedding), `omega` records the letter map so maps can be composed.
#[derive(Clone)]
pub struct GenMap {
    pub e: Vec<AlgebraWord>,
    pub f: Vec<AlgebraWord>,
    pub k: Vec<AlgebraWord>,
    pub k_inv: Vec<AlgebraWord>,
    /// omega[j-1] = the codomain letter carrying the domain letter j.
    pub omega: Option<Vec<usize>>,
}

impl GenMap {
    /// The identity system on a signature of length n.
    pub fn identity(sig: &EpsilonSignature) -> Self {
        let n = sig.len();
        GenMap {
            e: (0..n).map(|i| AlgebraWord::gen(GenSym::E(i))).collect(),
            f: (0..n).map(|i| AlgebraWord::gen(GenSym::F(i))).collect(),
            k: (0..n).map(|i| k_word(sig, i, 1)).collect(),
            k_inv: (0..n).map(|i| k_word(sig, i, -1)).collect(),
            omega: Some((1..=n).collect()),
        }
    }

    /// Evaluates the images on a module of the target algebra.
    pub fn evaluate(&self, m: &WeightModule) -> EvaluatedGens {
        EvaluatedGens {
            e: self.e.iter().map(|w| w.evaluate(m)).collect(),
            f: self.f.iter().map(|w| w.evaluate(m)).collect(),
            k: self.k.iter().map(|w| w.evaluate(m)).collect(),
            k_inv: self.k_inv.iter().map(|w| w.evaluate(m)).collect(),
        }
    }

    /// Composition: `self` maps A -> B, `outer` maps B -> C; the result
    /// maps A -> C by substituting outer's words into self's. Requires
    /// the outer map to carry an omega letter map.
    pub fn then(&self, outer: &GenMap) -> GenMap {
        let outer_omega = outer
            .omega
            .as_ref()
            .expect("outer map must carry an omega letter map");
        let sub = |w: &AlgebraWord| -> AlgebraWord {
            w.substitute(&|sym: &GenSym| match sym {
                GenSym::E(i) => outer.e[*i].clone(),
                GenSym::F(i) => outer.f[*i].clone(),
                GenSym::Om(letter, p) => {
                    AlgebraWord::gen(GenSym::Om(outer_omega[*letter - 1], *p))
                }
            })
        };
        GenMap {
            e: self.e.iter().map(sub).collect(),
            f: self.f.iter().map(sub).collect(),
            k: self.k.iter().map(sub).collect(),
            k_inv: self.k_inv.iter().map(sub).collect(),
            omega: self.omega.as_ref().map(|om| {
                om.iter().map(|&j| outer_omega[j - 1]).collect()
            }),
        }
    }
}

/// Concrete generator matrices on a fixed module.
pub struct EvaluatedGens {
    pub e: Vec<SparseMat>,
    pub f: Vec<SparseMat>,
    pub k: Vec<SparseMat>,
    pub k_inv: Vec<SparseMat>,
}

impl EvaluatedGens {
    pub fn from_module(m: &WeightModule) -> Self {
        let n = m.n();
        EvaluatedGens {
            e: m.act_e.clone(),
            f: m.act_f.clone(),
            k: (0..n).map(|i| m.act_k(i, 1)).collect(),
            k_inv: (0..n).map(|i| m.act_k(i, -1)).collect(),
        }
    }
}

/// The reflection isomorphisms attached to a finite index 1 <= i <= n-1:
/// returns the swapped signature, the images of the source generators
/// (words in the swapped algebra), and the images of the inverse map
/// (words in the source algebra). The twisted bracket [a,b]_c reads
/// ab - c ba, and D is computed in the codomain of each map.
pub fn tau_maps(
    sig: &EpsilonSignature,
    i: usize,
) -> Result<(EpsilonSignature, GenMap, GenMap)> {
    let n = sig.len();
    if i < 1 || i > n - 1 {
        return Err(Error::Precondition(format!(
            "reflection index {} out of range 1..={}",
            i,
            n - 1
        )));
    }
    let mut entries = sig.entries().to_vec();
    entries.swap(i - 1, i);
    let swapped = EpsilonSignature::short(entries)?;

    let adjacent = |j: usize| -> bool {
        let d = (j + n - i) % n;
        d == 1 || d == n - 1
    };

    // tau_i : U(sig) -> U(swapped); D in the swapped algebra.
    let mut tau = GenMap::identity(&swapped);
    tau.e[i] = AlgebraWord::word(vec![
        GenSym::F(i),
        GenSym::Om(swapped.letter(i), 1),
        GenSym::Om(swapped.letter(i + 1), -1),
    ])
    .neg();
    tau.f[i] = AlgebraWord::word(vec![
        GenSym::Om(swapped.letter(i), -1),
        GenSym::Om(swapped.letter(i + 1), 1),
        GenSym::E(i),
    ])
    .neg();
    tau.k[i] = k_word(&swapped, i, -1);
    tau.k_inv[i] = k_word(&swapped, i, 1);
    for j in 0..n {
        if j != i && adjacent(j) {
            let d = d_ij(&swapped, i, j);
            let e_i = AlgebraWord::gen(GenSym::E(i));
            let e_j = AlgebraWord::gen(GenSym::E(j));
            let f_i = AlgebraWord::gen(GenSym::F(i));
            let f_j = AlgebraWord::gen(GenSym::F(j));
            tau.e[j] = AlgebraWord::bracket(&e_i, &e_j, &d);
            tau.f[j] = AlgebraWord::bracket(&f_j, &f_i, &d.inv()?);
            tau.k[j] = k_word(&swapped, i, 1).mul(&k_word(&swapped, j, 1));
            tau.k_inv[j] = k_word(&swapped, i, -1).mul(&k_word(&swapped, j, -1));
        }
    }

    // tau_i^{-1} : U(swapped) -> U(sig); D in the source algebra.
    let mut tau_inv = GenMap::identity(sig);
    tau_inv.e[i] = AlgebraWord::word(vec![
        GenSym::Om(sig.letter(i), -1),
        GenSym::Om(sig.letter(i + 1), 1),
        GenSym::F(i),
    ])
    .neg();
    tau_inv.f[i] = AlgebraWord::word(vec![
        GenSym::E(i),
        GenSym::Om(sig.letter(i), 1),
        GenSym::Om(sig.letter(i + 1), -1),
    ])
    .neg();
    tau_inv.k[i] = k_word(sig, i, -1);
    tau_inv.k_inv[i] = k_word(sig, i, 1);
    for j in 0..n {
        if j != i && adjacent(j) {
            let d = d_ij(sig, i, j);
            let e_i = AlgebraWord::gen(GenSym::E(i));
            let e_j = AlgebraWord::gen(GenSym::E(j));
            let f_i = AlgebraWord::gen(GenSym::F(i));
            let f_j = AlgebraWord::gen(GenSym::F(j));
            tau_inv.e[j] = AlgebraWord::bracket(&e_j, &e_i, &d);
            tau_inv.f[j] = AlgebraWord::bracket(&f_i, &f_j, &d.inv()?);
            tau_inv.k[j] = k_word(sig, i, 1).mul(&k_word(sig, j, 1));
            tau_inv.k_inv[j] = k_word(sig, i, -1).mul(&k_word(sig, j, -1));
        }
    }

    // The reflections are not letter relabellings on the Cartan part.
    tau.omega = None;
    tau_inv.omega = None;
    Ok((swapped, tau, tau_inv))
}

/// Generator words realizing the algebra of the signature with the given
/// letter removed, inside the ambient algebra. No length preconditions;
/// the words are well-defined ambient elements regardless.
pub fn phi_words_unchecked(sig: &EpsilonSignature, removed: usize) -> Result<GenMap> {
    let n = sig.len();
    if removed < 1 || removed > n {
        return Err(Error::Precondition(format!(
            "removed letter {} out of range 1..={}",
            removed, n
        )));
    }
    let e = |i: usize| AlgebraWord::gen(GenSym::E(i % n));
    let f = |i: usize| AlgebraWord::gen(GenSym::F(i % n));
    let kw = |i: usize, p: i64| k_word(sig, i % n, p);

    let np = n - 1; // length of the reduced signature
    // Letter relabelling: letters below the removal keep their name,
    // letters above shift down by one.
    let omega: Vec<usize> = (1..=np)
        .map(|j| if j < removed { j } else { j + 1 })
        .collect();
    let mut map = GenMap {
        e: Vec::with_capacity(np),
        f: Vec::with_capacity(np),
        k: Vec::with_capacity(np),
        k_inv: Vec::with_capacity(np),
        omega: Some(omega),
    };
    for j in 0..np {
        let (ej, fj, kj, kinvj) = if removed == n {
            if j == 0 {
                let d = d_ij(sig, n - 1, 0);
                (
                    AlgebraWord::bracket(&e(n - 1), &e(0), &d),
                    AlgebraWord::bracket(&f(0), &f(n - 1), &d.inv()?),
                    kw(n - 1, 1).mul(&kw(0, 1)),
                    kw(n - 1, -1).mul(&kw(0, -1)),
                )
            } else {
                (e(j), f(j), kw(j, 1), kw(j, -1))
            }
        } else if removed == 1 {
            if j == 0 {
                let d = d_ij(sig, 0, 1);
                (
                    AlgebraWord::bracket(&e(0), &e(1), &d),
                    AlgebraWord::bracket(&f(1), &f(0), &d.inv()?),
                    kw(0, 1).mul(&kw(1, 1)),
                    kw(0, -1).mul(&kw(1, -1)),
                )
            } else {
                (e(j + 1), f(j + 1), kw(j + 1, 1), kw(j + 1, -1))
            }
        } else {
            // Interior removal 2 <= removed <= n-1.
            let i = removed;
            if j + 2 <= i {
                (e(j), f(j), kw(j, 1), kw(j, -1))
            } else if j == i - 1 {
                let d = d_ij(sig, i - 1, i);
                (
                    AlgebraWord::bracket(&e(i - 1), &e(i), &d),
                    AlgebraWord::bracket(&f(i), &f(i - 1), &d.inv()?),
                    kw(i - 1, 1).mul(&kw(i, 1)),
                    kw(i - 1, -1).mul(&kw(i, -1)),
                )
            } else {
                (e(j + 1), f(j + 1), kw(j + 1, 1), kw(j + 1, -1))
            }
        };
        map.e.push(ej);
        map.f.push(fj);
        map.k.push(kj);
        map.k_inv.push(kinvj);
    }
    Ok(map)
}

/// The subalgebra embedding with its stated preconditions: the ambient
/// signature has length >= 4, and when it has length exactly 4 the
/// reduced signature must be homogeneous.
pub fn phi_embed(sig: &EpsilonSignature, removed: usize) -> Result<GenMap> {
    if sig.len() < 4 {
        return Err(Error::Precondition(format!(
            "ambient signature {} shorter than 4",
            sig
        )));
    }
    if sig.len() == 4 {
        let reduced = sig.remove_letter(removed)?;
        if !reduced.is_homogeneous() {
            return Err(Error::Precondition(format!(
                "removal from length 4 requires a homogeneous remainder, got {}",
                reduced
            )));
        }
    }
    phi_words_unchecked(sig, removed)
}
