//! Sparse exact linear algebra over the function fields.
//!
//! Vectors are sorted sparse index/value lists; matrices are stored
//! column-major (column j is the image of the j-th basis vector).
//! Rank, kernel and membership questions all run through a single
//! incremental echelon structure with leading coefficients normalized
//! to one and pivoting on the first nonzero coordinate.

use crate::qfield::FieldElem;
use std::collections::BTreeMap;

/// A sparse vector: strictly increasing indices, nonzero entries.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SparseVec(pub Vec<(usize, FieldElem)>);

impl SparseVec {
    pub fn zero() -> Self {
        SparseVec(Vec::new())
    }

    pub fn unit(i: usize) -> Self {
        SparseVec(vec![(i, FieldElem::one())])
    }

    pub fn from_entries(mut entries: Vec<(usize, FieldElem)>) -> Self {
        entries.sort_by_key(|(i, _)| *i);
        let mut out: Vec<(usize, FieldElem)> = Vec::with_capacity(entries.len());
        for (i, c) in entries {
            match out.last_mut() {
                Some((j, acc)) if *j == i => *acc = acc.add(&c),
                _ => out.push((i, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        SparseVec(out)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> FieldElem {
        match self.0.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => self.0[k].1.clone(),
            Err(_) => FieldElem::zero(),
        }
    }

    pub fn leading(&self) -> Option<(usize, &FieldElem)> {
        self.0.first().map(|(i, c)| (*i, c))
    }

    pub fn scale(&self, c: &FieldElem) -> SparseVec {
        if c.is_zero() {
            return SparseVec::zero();
        }
        SparseVec(self.0.iter().map(|(i, x)| (*i, x.mul(c))).collect())
    }

    /// self + c * other.
    pub fn add_scaled(&self, other: &SparseVec, c: &FieldElem) -> SparseVec {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (ia, ca) = &self.0[i];
            let (ib, cb) = &other.0[j];
            match ia.cmp(ib) {
                std::cmp::Ordering::Less => {
                    out.push((*ia, ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((*ib, cb.mul(c)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = ca.add(&cb.mul(c));
                    if !s.is_zero() {
                        out.push((*ia, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.0[i..].iter().cloned());
        out.extend(other.0[j..].iter().map(|(ib, cb)| (*ib, cb.mul(c))));
        SparseVec(out)
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(other, &FieldElem::one())
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec(self.0.iter().map(|(i, c)| (*i, c.neg())).collect())
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, FieldElem)> {
        self.0.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|(i, _)| *i)
    }

    /// Applies an index remapping, dropping entries mapped to `None`.
    pub fn remap(&self, f: impl Fn(usize) -> Option<usize>) -> SparseVec {
        SparseVec::from_entries(
            self.0
                .iter()
                .filter_map(|(i, c)| f(*i).map(|j| (j, c.clone())))
                .collect(),
        )
    }
}

/// A sparse matrix, column-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMat {
    pub nrows: usize,
    pub cols: Vec<SparseVec>,
}

impl SparseMat {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SparseMat {
            nrows,
            cols: vec![SparseVec::zero(); ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseMat {
            nrows: n,
            cols: (0..n).map(SparseVec::unit).collect(),
        }
    }

    pub fn from_cols(nrows: usize, cols: Vec<SparseVec>) -> Self {
        SparseMat { nrows, cols }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    pub fn set(&mut self, row: usize, col: usize, value: FieldElem) {
        let column = &mut self.cols[col];
        match column.0.binary_search_by_key(&row, |(j, _)| *j) {
            Ok(k) => {
                if value.is_zero() {
                    column.0.remove(k);
                } else {
                    column.0[k].1 = value;
                }
            }
            Err(k) => {
                if !value.is_zero() {
                    column.0.insert(k, (row, value));
                }
            }
        }
    }

    pub fn get(&self, row: usize, col: usize) -> FieldElem {
        self.cols[col].get(row)
    }

    /// Matrix-vector application.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::zero();
        for (j, c) in v.iter() {
            acc = acc.add_scaled(&self.cols[*j], c);
        }
        acc
    }

    /// Composition self * other (apply other first).
    pub fn mul(&self, other: &SparseMat) -> SparseMat {
        SparseMat {
            nrows: self.nrows,
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn add(&self, other: &SparseMat) -> SparseMat {
        debug_assert_eq!(self.nrows, other.nrows);
        debug_assert_eq!(self.ncols(), other.ncols());
        SparseMat {
            nrows: self.nrows,
            cols: self
                .cols
                .iter()
                .zip(&other.cols)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &SparseMat) -> SparseMat {
        self.add(&other.scale(&FieldElem::from_int(-1)))
    }

    pub fn scale(&self, c: &FieldElem) -> SparseMat {
        SparseMat {
            nrows: self.nrows,
            cols: self.cols.iter().map(|col| col.scale(c)).collect(),
        }
    }

    pub fn transpose(&self) -> SparseMat {
        let mut cols = vec![Vec::new(); self.nrows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, c) in col.iter() {
                cols[*i].push((j, c.clone()));
            }
        }
        SparseMat {
            nrows: self.ncols(),
            cols: cols.into_iter().map(SparseVec::from_entries).collect(),
        }
    }

    /// The commutator self*other - other*self.
    pub fn commutator(&self, other: &SparseMat) -> SparseMat {
        self.mul(other).sub(&other.mul(self))
    }

    /// First nonzero entry in column order, if any: (row, col, value).
    pub fn first_nonzero(&self) -> Option<(usize, usize, FieldElem)> {
        for (j, col) in self.cols.iter().enumerate() {
            if let Some((i, c)) = col.leading() {
                return Some((i, j, c.clone()));
            }
        }
        None
    }

    /// Entrywise substitution z -> value.
    pub fn specialize_z(&self, value: &FieldElem) -> crate::error::Result<SparseMat> {
        let mut cols = Vec::with_capacity(self.cols.len());
        for col in &self.cols {
            let mut entries = Vec::with_capacity(col.0.len());
            for (i, c) in col.iter() {
                let s = c.specialize_z(value)?;
                if !s.is_zero() {
                    entries.push((*i, s));
                }
            }
            cols.push(SparseVec(entries));
        }
        Ok(SparseMat {
            nrows: self.nrows,
            cols,
        })
    }
}

/// Incremental row echelon with normalized leading ones.
#[derive(Clone, Default)]
pub struct Echelon {
    /// lead column -> row, each row's first entry has coefficient 1.
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn leads(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, &SparseVec)> {
        self.rows.iter().map(|(l, r)| (*l, r))
    }

    /// Fully reduces `v` against the echelon: no coordinate of the
    /// residual is a pivot column. Each pivot row's non-lead entries sit
    /// strictly right of its lead, so a single left-to-right scan works.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut r = v.clone();
        let mut k = 0;
        while k < r.0.len() {
            let idx = r.0[k].0;
            match self.rows.get(&idx) {
                Some(row) => {
                    let c = r.0[k].1.neg();
                    r = r.add_scaled(row, &c);
                }
                None => k += 1,
            }
        }
        r
    }

    /// Inserts `v`; returns the lead column if the residual was nonzero.
    pub fn insert(&mut self, v: &SparseVec) -> Option<usize> {
        let r = self.reduce(v);
        match r.leading() {
            None => None,
            Some((lead, c)) => {
                let inv = c.inv().expect("nonzero leading coefficient");
                let normalized = r.scale(&inv);
                self.rows.insert(lead, normalized);
                Some(lead)
            }
        }
    }

    /// Membership of `v` in the row span.
    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }
}

/// Rank of a set of vectors.
pub fn rank_of(vectors: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(&v);
    }
    e.rank()
}

/// Basis of the kernel of the linear map whose equation rows are given:
/// all x with row . x = 0 for every row. `ncols` is the unknown count.
pub fn kernel_basis(rows: impl IntoIterator<Item = SparseVec>, ncols: usize) -> Vec<SparseVec> {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(&r);
    }
    // Back-substitution: for each pivot-free column f, the kernel vector
    // with x_f = 1 and pivot coordinates determined bottom-up.
    let pivots: Vec<usize> = e.leads().collect();
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for f in 0..ncols {
        if pivot_set.contains(&f) {
            continue;
        }
        let mut x: BTreeMap<usize, FieldElem> = BTreeMap::new();
        x.insert(f, FieldElem::one());
        for (lead, row) in e.rows.iter().rev() {
            if *lead > f {
                continue;
            }
            let mut s = FieldElem::zero();
            for (j, c) in row.iter().skip(1) {
                if let Some(xc) = x.get(j) {
                    s = s.add(&c.mul(xc));
                }
            }
            if !s.is_zero() {
                x.insert(*lead, s.neg());
            }
        }
        basis.push(SparseVec::from_entries(x.into_iter().collect()));
    }
    basis
}

/// A span with expression bookkeeping: vectors are inserted with an
/// augmented tail recording the combination, so members can be expressed
/// in terms of the inserted generators.
pub struct Span {
    dim: usize,
    e: Echelon,
    count: usize,
}

impl Span {
    pub fn new(dim: usize) -> Self {
        Span {
            dim,
            e: Echelon::new(),
            count: 0,
        }
    }

    /// Inserts a vector; returns true if it enlarged the span.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let mut aug = v.clone();
        aug.0.push((self.dim + self.count, FieldElem::one()));
        self.count += 1;
        // The augmented tail never collides with head coordinates, and
        // the reduction is driven by head leads only when the head is
        // nonzero; a zero head leaves a pure-tail residual.
        match self.e.reduce(&aug).leading() {
            Some((lead, _)) if lead < self.dim => {
                self.e.insert(&aug);
                true
            }
            _ => false,
        }
    }

    pub fn rank(&self) -> usize {
        self.e
            .leads()
            .filter(|&l| l < self.dim)
            .count()
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        let r = self.e.reduce(v);
        r.leading().map_or(true, |(l, _)| l >= self.dim)
    }

    /// Expresses `v` as a combination of the inserted generators:
    /// returns coefficients indexed by insertion order, or None if `v`
    /// is outside the span.
    pub fn express(&self, v: &SparseVec) -> Option<Vec<(usize, FieldElem)>> {
        let r = self.e.reduce(v);
        if r.leading().map_or(false, |(l, _)| l < self.dim) {
            return None;
        }
        Some(
            r.iter()
                .map(|(i, c)| (i - self.dim, c.neg()))
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(n: i64) -> FieldElem {
        FieldElem::from_int(n)
    }

    fn vecf(entries: &[(usize, i64)]) -> SparseVec {
        SparseVec::from_entries(entries.iter().map(|&(i, c)| (i, fe(c))).collect())
    }

    #[test]
    fn sparse_vec_arith() {
        let a = vecf(&[(0, 1), (2, 3)]);
        let b = vecf(&[(1, 2), (2, -3)]);
        let s = a.add(&b);
        assert_eq!(s, vecf(&[(0, 1), (1, 2)]));
        assert!(a.add_scaled(&a, &fe(-1)).is_zero());
    }

    #[test]
    fn matrix_mul_identity() {
        let mut m = SparseMat::zero(3, 3);
        m.set(0, 1, fe(2));
        m.set(2, 0, fe(5));
        let id = SparseMat::identity(3);
        assert_eq!(m.mul(&id), m);
        assert_eq!(id.mul(&m), m);
    }

    #[test]
    fn kernel_small() {
        // x0 + x1 = 0, x1 + x2 = 0 -> kernel spanned by (1, -1, 1).
        let rows = vec![vecf(&[(0, 1), (1, 1)]), vecf(&[(1, 1), (2, 1)])];
        let k = kernel_basis(rows, 3);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        // Normalize so the free coordinate is 1: the basis vector is built
        // from free column 2.
        assert_eq!(v.get(2), fe(1));
        assert_eq!(v.get(1), fe(-1));
        assert_eq!(v.get(0), fe(1));
    }

    #[test]
    fn rank_and_membership() {
        let rows = vec![
            vecf(&[(0, 1), (1, 1)]),
            vecf(&[(0, 2), (1, 2)]),
            vecf(&[(1, 1)]),
        ];
        assert_eq!(rank_of(rows.clone()), 2);
        let mut e = Echelon::new();
        for r in &rows {
            e.insert(r);
        }
        assert!(e.contains(&vecf(&[(0, 3), (1, 7)])));
        assert!(!e.contains(&vecf(&[(2, 1)])));
    }

    #[test]
    fn span_expression() {
        let mut span = Span::new(3);
        let v0 = vecf(&[(0, 1), (1, 1)]);
        let v1 = vecf(&[(1, 1), (2, 1)]);
        assert!(span.insert(&v0));
        assert!(span.insert(&v1));
        assert!(!span.insert(&v0.add(&v1)));
        let t = vecf(&[(0, 2), (1, 5), (2, 3)]);
        let coeffs = span.express(&t).unwrap();
        let mut rebuilt = SparseVec::zero();
        let gens = [v0, v1];
        for (i, c) in coeffs {
            rebuilt = rebuilt.add_scaled(&gens[i], &c);
        }
        assert_eq!(rebuilt, t);
        assert!(span.express(&vecf(&[(0, 1)])).is_none());
    }
}
