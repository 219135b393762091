//! q-deformed Young symmetrizers.
//!
//! For a partition of l boxes, T_plus fills the diagram row by row and
//! T_minus column by column; w_lambda carries T_minus to T_plus. The
//! symmetrizer is h(w_lambda^{-1}) e_plus h(w_lambda) e_minus with
//! e_plus the sum of h(w) over the row group of T_plus and e_minus the
//! (-q^2)^{-l(w)}-weighted sum over the column group of T_minus.

use crate::combin::Partition;
use crate::error::{Error, Result};
use crate::qfield::FieldElem;
use crate::schurweyl::hecke::{HeckeElement, MAX_TENSOR_DEGREE};
use crate::schurweyl::perm::Perm;

/// Young tableau fillings of a shape by 0-based letters, as cell lists.
#[derive(Clone, Debug)]
pub struct StandardFilling {
    /// cell (row, col) -> letter in 0..l.
    pub letter: std::collections::BTreeMap<(usize, usize), usize>,
    /// letter -> cell.
    pub cell: Vec<(usize, usize)>,
}

impl StandardFilling {
    fn from_cells(cells: Vec<(usize, usize)>) -> Self {
        let mut letter = std::collections::BTreeMap::new();
        for (k, &c) in cells.iter().enumerate() {
            letter.insert(c, k);
        }
        StandardFilling {
            letter,
            cell: cells,
        }
    }

    /// Row-by-row filling (top to bottom, left to right).
    pub fn row_major(shape: &Partition) -> Self {
        Self::from_cells(shape.cells())
    }

    /// Column-by-column filling (left to right, top to bottom).
    pub fn col_major(shape: &Partition) -> Self {
        let conj = shape.conjugate();
        let mut cells = Vec::new();
        for (c, &height) in conj.parts().iter().enumerate() {
            for r in 0..height as usize {
                cells.push((r, c));
            }
        }
        Self::from_cells(cells)
    }
}

/// The symmetrizer with its building blocks.
pub struct Symmetrizer {
    pub shape: Partition,
    pub degree: usize,
    pub w_lambda: Perm,
    pub e_plus: HeckeElement,
    pub e_minus: HeckeElement,
    pub element: HeckeElement,
    pub t_minus: StandardFilling,
}

/// Enumerates the Young subgroup permuting letters within each listed
/// block.
fn young_subgroup(l: usize, blocks: &[Vec<usize>]) -> Vec<Perm> {
    let mut out = vec![Perm::identity(l)];
    for block in blocks {
        if block.len() <= 1 {
            continue;
        }
        let perms = Perm::all(block.len());
        let mut next = Vec::with_capacity(out.len() * perms.len());
        for base in &out {
            for p in &perms {
                let mut map = base.map().to_vec();
                for (pos, &src) in block.iter().enumerate() {
                    map[src] = base.apply(block[p.apply(pos)]);
                }
                next.push(Perm::from_map(map));
            }
        }
        out = next;
    }
    out
}

pub fn young_symmetrizer(shape: &Partition) -> Result<Symmetrizer> {
    let l = shape.size() as usize;
    if l < 1 || l > MAX_TENSOR_DEGREE {
        return Err(Error::Precondition(format!(
            "symmetrizer degree {} outside 1..={}",
            l, MAX_TENSOR_DEGREE
        )));
    }
    let t_plus = StandardFilling::row_major(shape);
    let t_minus = StandardFilling::col_major(shape);
    // w_lambda(T_minus) = T_plus: the letter at a cell of T_minus maps to
    // the letter at the same cell of T_plus.
    let mut map = vec![0usize; l];
    for (cell, &lm) in &t_minus.letter {
        map[lm] = t_plus.letter[cell];
    }
    let w_lambda = Perm::from_map(map);

    // Row blocks of T_plus.
    let row_blocks: Vec<Vec<usize>> = shape
        .parts()
        .iter()
        .enumerate()
        .map(|(r, &len)| {
            (0..len as usize)
                .map(|c| t_plus.letter[&(r, c)])
                .collect()
        })
        .collect();
    // Column blocks of T_minus.
    let conj = shape.conjugate();
    let col_blocks: Vec<Vec<usize>> = conj
        .parts()
        .iter()
        .enumerate()
        .map(|(c, &height)| {
            (0..height as usize)
                .map(|r| t_minus.letter[&(r, c)])
                .collect()
        })
        .collect();

    let mut e_plus = HeckeElement::zero();
    for w in young_subgroup(l, &row_blocks) {
        e_plus = e_plus.add(&HeckeElement::basis(w));
    }
    // The signed weight (-q^2)^{l(w)} makes e_minus a right
    // antisymmetrizer: e_minus h_a = -e_minus for column generators,
    // which is exactly what the column relation Y C_a = 0 needs.
    let mut e_minus = HeckeElement::zero();
    let neg_q2 = FieldElem::signed_q_pow(-1, 2);
    for w in young_subgroup(l, &col_blocks) {
        let c = neg_q2.pow(w.length() as i64).unwrap();
        e_minus = e_minus.add(&HeckeElement::basis(w).scale(&c));
    }

    let element = HeckeElement::basis(w_lambda.inverse())
        .mul(&e_plus)
        .mul(&HeckeElement::basis(w_lambda.clone()))
        .mul(&e_minus);

    Ok(Symmetrizer {
        shape: shape.clone(),
        degree: l,
        w_lambda,
        e_plus,
        e_minus,
        element,
        t_minus,
    })
}

/// The column relation element C_a = 1 + h_a, 0-based letter a, defined
/// when a+1 sits directly below a in T_minus.
pub fn column_element(l: usize, a: usize) -> HeckeElement {
    HeckeElement::one(l).add(&HeckeElement::gen(l, a))
}
