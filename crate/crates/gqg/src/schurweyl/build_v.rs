//! Irreducible polynomial modules realized inside tensor powers of the
//! natural module: the span of the symmetrizer images of semistandard
//! tableau monomials, with the finite generator actions written in the
//! tableau basis by exact change of basis.

use crate::combin::{enumerate_sst, EpsilonSignature, Partition, Tableau};
use crate::error::{Error, Result};
use crate::linalg::{SparseMat, SparseVec, Span};
use crate::qfield::FieldElem;
use crate::repcore::{BasisLabel, Comult, WeightModule};
use crate::schurweyl::hecke::TensorSpace;
use crate::schurweyl::symmetrizer::{young_symmetrizer, Symmetrizer};

impl TensorSpace {
    pub fn dim_degree(&self) -> usize {
        self.degree
    }
}

/// v_T: the symmetrizer applied to the monomial whose slots carry the
/// letters of T in T_minus position order.
pub fn tableau_vector(sym: &Symmetrizer, space: &TensorSpace, t: &Tableau) -> SparseVec {
    let letters: Vec<u8> = (0..sym.degree)
        .map(|pos| {
            let (row, col) = sym.t_minus.cell[pos];
            t.entry(row, col)
        })
        .collect();
    let start = SparseVec::unit(space.index_of(&letters));
    space.apply(&start, &sym.element)
}

/// A polynomial module with tableau basis, together with its ambient
/// realization.
pub struct PolyModule {
    /// The signature the module was actually constructed over; equals
    /// the requested one when its first letter is even, and a rotation
    /// placing an even letter first otherwise.
    pub sig: EpsilonSignature,
    pub shape: Partition,
    /// The module over `sig` with tableau basis labels. Index-0 actions
    /// are not defined for these finite-type modules.
    pub module: WeightModule,
    pub tableaux: Vec<Tableau>,
    /// v_T realized in the ambient tensor power, aligned with `tableaux`.
    pub vectors: Vec<SparseVec>,
    /// d(T) statistics, aligned with `tableaux`.
    pub d_stats: Vec<i64>,
    /// The ambient tensor power of the natural module (absent for a
    /// single box where the module is the natural module itself).
    pub ambient: WeightModule,
}

/// Rotates the signature so that an even letter comes first, returning
/// the rotated signature and the rotation offset (letters map
/// j -> j - offset mod n).
pub fn rotate_to_even_first(sig: &EpsilonSignature) -> Option<(EpsilonSignature, usize)> {
    let first = sig.first_zero_letter()?;
    let offset = first - 1;
    let n = sig.len();
    let entries: Vec<u8> = (0..n)
        .map(|k| sig.entries()[(k + offset) % n])
        .collect();
    Some((EpsilonSignature::short(entries).unwrap(), offset))
}

/// Builds the polynomial module for a hook shape. When the first letter
/// of the signature is odd, the construction runs over the rotated
/// signature with an even letter first (the finite R matrix presumes an
/// even first letter); the rotated signature is reported in the result.
pub fn build_v(shape: &Partition, sig: &EpsilonSignature) -> Result<PolyModule> {
    if !shape.is_hook(sig) {
        return Err(Error::NotHook(shape.to_string(), sig.to_string()));
    }
    if sig.parity(1) == 0 || sig.m_zeros() == 0 {
        // All-odd signatures use the construction directly: the two-site
        // R matrix satisfies the Hecke and braid relations for any
        // parities (checked in the test suite), and the dimension count
        // certifies the outcome case by case.
        build_v_direct(shape, sig)
    } else {
        let (rotated, _) = rotate_to_even_first(sig).expect("has an even letter");
        build_v_direct(shape, &rotated)
    }
}

fn build_v_direct(shape: &Partition, sig: &EpsilonSignature) -> Result<PolyModule> {
    let l = shape.size() as usize;
    let n = sig.len();
    let tableaux = enumerate_sst(shape, sig);
    let nat = WeightModule::natural(sig);

    if l == 1 {
        // Single box: the natural module with tableau labels.
        let mut module = nat.clone();
        module.basis = tableaux
            .iter()
            .map(|t| BasisLabel::Tab(t.clone()))
            .collect();
        module.name = format!("V[{},{}]", shape, sig);
        let vectors = (0..n).map(SparseVec::unit).collect();
        return Ok(PolyModule {
            sig: sig.clone(),
            shape: shape.clone(),
            module,
            d_stats: tableaux.iter().map(|t| t.d_stat()).collect(),
            tableaux,
            vectors,
            ambient: nat,
        });
    }

    let space = TensorSpace::new(sig, l)?;
    let sym = young_symmetrizer(shape)?;
    let factors: Vec<&WeightModule> = std::iter::repeat(&nat).take(l).collect();
    let ambient = WeightModule::tensor_many(&factors, Comult::Delta)?;

    let vectors: Vec<SparseVec> = tableaux
        .iter()
        .map(|t| tableau_vector(&sym, &space, t))
        .collect();
    let mut span = Span::new(ambient.dim());
    for v in &vectors {
        if !span.insert(v) {
            return Err(Error::Linalg(format!(
                "tableau vectors are linearly dependent for {} over {}",
                shape, sig
            )));
        }
    }

    let dim = vectors.len();
    let mut act_e = vec![SparseMat::zero(dim, dim); n];
    let mut act_f = vec![SparseMat::zero(dim, dim); n];
    for i in 1..n {
        for (col, v) in vectors.iter().enumerate() {
            let ev = ambient.act_e[i].apply(v);
            let coeffs = span.express(&ev).ok_or_else(|| {
                Error::ClosureFailure(format!(
                    "e_{} leaves the tableau span for {} over {}",
                    i, shape, sig
                ))
            })?;
            for (row, c) in coeffs {
                act_e[i].set(row, col, c);
            }
            let fv = ambient.act_f[i].apply(v);
            let coeffs = span.express(&fv).ok_or_else(|| {
                Error::ClosureFailure(format!(
                    "f_{} leaves the tableau span for {} over {}",
                    i, shape, sig
                ))
            })?;
            for (row, c) in coeffs {
                act_f[i].set(row, col, c);
            }
        }
    }

    let weights = tableaux.iter().map(|t| t.weight(n)).collect();
    let module = WeightModule {
        sig: sig.clone(),
        basis: tableaux
            .iter()
            .map(|t| BasisLabel::Tab(t.clone()))
            .collect(),
        weights,
        act_e,
        act_f,
        params: vec![],
        name: format!("V[{},{}]", shape, sig),
    };
    Ok(PolyModule {
        sig: sig.clone(),
        shape: shape.clone(),
        module,
        d_stats: tableaux.iter().map(|t| t.d_stat()).collect(),
        tableaux,
        vectors,
        ambient,
    })
}
