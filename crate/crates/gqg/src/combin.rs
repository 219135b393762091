//! Combinatorics of epsilon signatures, hook partitions and semistandard
//! tableaux over the graded alphabet 1 < 2 < ... < n.
//!
//! A letter i is even when eps_i = 0 and odd when eps_i = 1. A filling is
//! semistandard when rows and columns weakly increase, even letters are
//! strict down columns and odd letters are strict along rows. The set of
//! shapes carrying at least one such tableau is exactly the set of
//! (M|N)-hook partitions.

use crate::error::{Error, Result};
use crate::qfield::FieldElem;
use serde_json::json;
use std::collections::BTreeMap;
use std::fmt;

/// The 0/1 parameter sequence. Index arithmetic on the affine index set
/// I = {0, 1, ..., n-1} is understood modulo n, with the letter of index
/// 0 being n.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EpsilonSignature {
    eps: Vec<u8>,
}

impl EpsilonSignature {
    /// A signature for the generalized quantum group; requires n >= 4.
    pub fn new(eps: Vec<u8>) -> Result<Self> {
        if eps.len() < 4 {
            return Err(Error::Precondition(format!(
                "signature length {} < 4",
                eps.len()
            )));
        }
        Self::short(eps)
    }

    /// A signature of any positive length. Shorter sequences arise from
    /// iterated truncation and from classical (homogeneous) alphabets.
    pub fn short(eps: Vec<u8>) -> Result<Self> {
        if eps.is_empty() {
            return Err(Error::Precondition("empty signature".into()));
        }
        if eps.iter().any(|&e| e > 1) {
            return Err(Error::Parse("signature entries must be 0 or 1".into()));
        }
        Ok(EpsilonSignature { eps })
    }

    pub fn parse(s: &str) -> Result<Self> {
        let eps = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0u8),
                '1' => Ok(1u8),
                _ => Err(Error::Parse(format!("bad signature character '{}'", c))),
            })
            .collect::<Result<Vec<u8>>>()?;
        Self::short(eps)
    }

    /// All 2^n signatures of length n, in lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        (0..(1u32 << n))
            .map(|mask| EpsilonSignature {
                eps: (0..n).map(|k| ((mask >> (n - 1 - k)) & 1) as u8).collect(),
            })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.eps.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// M, the number of even letters.
    pub fn m_zeros(&self) -> usize {
        self.eps.iter().filter(|&&e| e == 0).count()
    }

    /// N, the number of odd letters.
    pub fn n_ones(&self) -> usize {
        self.eps.iter().filter(|&&e| e == 1).count()
    }

    /// Parity of a letter in 1..=n.
    pub fn parity(&self, letter: usize) -> u8 {
        debug_assert!(letter >= 1 && letter <= self.len());
        self.eps[letter - 1]
    }

    /// The letter (in 1..=n) attached to an affine index, modulo n.
    pub fn letter(&self, i: usize) -> usize {
        let n = self.len();
        let r = i % n;
        if r == 0 {
            n
        } else {
            r
        }
    }

    /// Parity of the letter attached to an affine index.
    pub fn parity_idx(&self, i: usize) -> u8 {
        self.parity(self.letter(i))
    }

    /// q_i = q when eps_i = 0 and -q^{-1} when eps_i = 1, index modulo n.
    pub fn q_i(&self, i: usize) -> FieldElem {
        if self.parity_idx(i) == 0 {
            FieldElem::q()
        } else {
            FieldElem::signed_q_pow(-1, -1)
        }
    }

    /// Whether the affine index i is odd (isotropic), i.e. the letters i
    /// and i+1 have different parities.
    pub fn is_odd_index(&self, i: usize) -> bool {
        self.parity_idx(i) != self.parity_idx(i + 1)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.eps.iter().all(|&e| e == self.eps[0])
    }

    /// The smallest even letter, if any.
    pub fn first_zero_letter(&self) -> Option<usize> {
        self.eps.iter().position(|&e| e == 0).map(|p| p + 1)
    }

    /// Letters of all even entries, increasing.
    pub fn zero_letters(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&j| self.parity(j) == 0).collect()
    }

    pub fn one_letters(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&j| self.parity(j) == 1).collect()
    }

    /// Removes the given letter (1-based), producing the subsequence.
    pub fn remove_letter(&self, letter: usize) -> Result<Self> {
        if letter < 1 || letter > self.len() {
            return Err(Error::Precondition(format!(
                "letter {} out of range 1..={}",
                letter,
                self.len()
            )));
        }
        if self.len() == 1 {
            return Err(Error::Precondition("cannot remove the last letter".into()));
        }
        let mut eps = self.eps.clone();
        eps.remove(letter - 1);
        Ok(EpsilonSignature { eps })
    }

    /// The homogeneous subsequence of all even letters (eps_{M|0}).
    pub fn all_zeros_subsequence(&self) -> Result<Self> {
        Self::short(vec![0; self.m_zeros()])
    }

    /// The homogeneous subsequence of all odd letters (eps_{0|N}).
    pub fn all_ones_subsequence(&self) -> Result<Self> {
        Self::short(vec![1; self.n_ones()])
    }

    pub fn entries(&self) -> &[u8] {
        &self.eps
    }
}

impl fmt::Display for EpsilonSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.eps {
            write!(f, "{}", e)?;
        }
        Ok(())
    }
}

impl fmt::Debug for EpsilonSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// An integral weight, written in the delta basis: mu = sum mu_i delta_i.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    pub fn delta(n: usize, letter: usize) -> Self {
        let mut w = vec![0; n];
        w[letter - 1] = 1;
        Weight(w)
    }

    /// alpha_i = delta_i - delta_{i+1}, affine index modulo n.
    pub fn alpha(sig: &EpsilonSignature, i: usize) -> Self {
        let n = sig.len();
        let mut w = vec![0; n];
        w[sig.letter(i) - 1] += 1;
        w[sig.letter(i + 1) - 1] -= 1;
        Weight(w)
    }

    pub fn add(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn coeff(&self, letter: usize) -> i64 {
        self.0[letter - 1]
    }

    /// The pairing <mu, alpha_i^vee> with
    /// alpha_i^vee = delta_i^vee - (-1)^{eps_i + eps_{i+1}} delta_{i+1}^vee.
    pub fn pair_alpha_check(&self, sig: &EpsilonSignature, i: usize) -> i64 {
        let a = self.coeff(sig.letter(i));
        let b = self.coeff(sig.letter(i + 1));
        let sign = if (sig.parity_idx(i) + sig.parity_idx(i + 1)) % 2 == 0 {
            1
        } else {
            -1
        };
        a - sign * b
    }

    /// The symmetric form (mu | nu) with (delta_i | delta_j) =
    /// (-1)^{eps_i} delta_{ij}.
    pub fn form(&self, sig: &EpsilonSignature, o: &Weight) -> i64 {
        self.0
            .iter()
            .zip(&o.0)
            .enumerate()
            .map(|(k, (a, b))| if sig.entries()[k] == 0 { a * b } else { -(a * b) })
            .sum()
    }

    /// Sum of coefficients.
    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

/// A partition: weakly decreasing positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Parse(format!(
                "parts must weakly decrease: {:?}",
                parts
            )));
        }
        Ok(Partition { parts })
    }

    pub fn parse(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Partition::new(vec![]);
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad partition part '{}'", t)))
            })
            .collect::<Result<Vec<u32>>>()?;
        Partition::new(parts)
    }

    /// The rectangle (s^r).
    pub fn rect(s: u32, r: u32) -> Self {
        if s == 0 {
            Partition { parts: vec![] }
        } else {
            Partition {
                parts: vec![s; r as usize],
            }
        }
    }

    /// The single row (s).
    pub fn row(s: u32) -> Self {
        Partition::rect(s, 1)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    /// The i-th part, 1-based, zero beyond the last row.
    pub fn part(&self, i: usize) -> u32 {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1) as usize;
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p as usize >= c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// The (M|N)-hook condition: lambda_{M+1} <= N.
    pub fn is_hook(&self, sig: &EpsilonSignature) -> bool {
        self.part(sig.m_zeros() + 1) as usize <= sig.n_ones()
    }

    /// All partitions of exactly `n` boxes.
    pub fn all_of(n: u32) -> Vec<Partition> {
        fn go(rem: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: acc.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                acc.push(p);
                go(rem - p, p, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All nonempty partitions with at most `boxes` boxes.
    pub fn all_up_to(boxes: u32) -> Vec<Partition> {
        (1..=boxes).flat_map(Partition::all_of).collect()
    }

    /// Row-major cell list (row, col), 0-based.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut cells = Vec::new();
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 0..len as usize {
                cells.push((r, c));
            }
        }
        cells
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// A filling of a Young diagram with letters of the graded alphabet.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u8>>,
}

impl Tableau {
    pub fn new(shape: Partition, rows: Vec<Vec<u8>>) -> Result<Self> {
        if rows.len() != shape.num_rows()
            || rows
                .iter()
                .zip(shape.parts())
                .any(|(row, &len)| row.len() != len as usize)
        {
            return Err(Error::Parse("rows do not match shape".into()));
        }
        Ok(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn entry(&self, r: usize, c: usize) -> u8 {
        self.rows[r][c]
    }

    /// Semistandardness: rows and columns weakly increase, even letters
    /// strict down columns, odd letters strict along rows.
    pub fn is_semistandard(&self, sig: &EpsilonSignature) -> bool {
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                if x < 1 || x as usize > sig.len() {
                    return false;
                }
                if c > 0 {
                    let left = self.rows[r][c - 1];
                    if left > x || (left == x && sig.parity(x as usize) == 1) {
                        return false;
                    }
                }
                if r > 0 && self.rows[r - 1].len() > c {
                    let above = self.rows[r - 1][c];
                    if above > x || (above == x && sig.parity(x as usize) == 0) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Each column is semistandard (ignores the row conditions).
    pub fn is_column_semistandard(&self, sig: &EpsilonSignature) -> bool {
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                if x < 1 || x as usize > sig.len() {
                    return false;
                }
                if r > 0 && self.rows[r - 1].len() > c {
                    let above = self.rows[r - 1][c];
                    if above > x || (above == x && sig.parity(x as usize) == 0) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The column reading word: columns left to right, bottom to top.
    pub fn column_word(&self) -> Vec<u8> {
        let mut w = Vec::with_capacity(self.shape.size() as usize);
        let cols = self.shape.part(1) as usize;
        for c in 0..cols {
            let height = self.rows.iter().filter(|row| row.len() > c).count();
            for r in (0..height).rev() {
                w.push(self.rows[r][c]);
            }
        }
        w
    }

    /// Content weight: mu_i = multiplicity of the letter i.
    pub fn weight(&self, n: usize) -> Weight {
        let mut w = vec![0i64; n];
        for row in &self.rows {
            for &x in row {
                w[x as usize - 1] += 1;
            }
        }
        Weight(w)
    }

    /// d(T) = sum over columns of sum_{u<v} d_u d_v, where d_u is the
    /// multiplicity of the letter u in the column.
    pub fn d_stat(&self) -> i64 {
        let cols = self.shape.part(1) as usize;
        let mut total = 0i64;
        for c in 0..cols {
            let mut mult: BTreeMap<u8, i64> = BTreeMap::new();
            for row in &self.rows {
                if row.len() > c {
                    *mult.entry(row[c]).or_insert(0) += 1;
                }
            }
            let counts: Vec<i64> = mult.values().copied().collect();
            for i in 0..counts.len() {
                for j in (i + 1)..counts.len() {
                    total += counts[i] * counts[j];
                }
            }
        }
        total
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "shape": self.shape.parts(),
            "rows": self.rows,
        })
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join(" / ");
        write!(f, "[{}]", body)
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// All semistandard tableaux of the given shape, sorted by the
/// lexicographic order of their column reading words.
pub fn enumerate_sst(shape: &Partition, sig: &EpsilonSignature) -> Vec<Tableau> {
    let cells = shape.cells();
    let mut rows: Vec<Vec<u8>> = shape
        .parts()
        .iter()
        .map(|&len| vec![0u8; len as usize])
        .collect();
    let mut out = Vec::new();
    fill(&cells, 0, sig, shape, &mut rows, &mut out);
    out.sort_by_key(|t| t.column_word());
    out
}

fn fill(
    cells: &[(usize, usize)],
    k: usize,
    sig: &EpsilonSignature,
    shape: &Partition,
    rows: &mut Vec<Vec<u8>>,
    out: &mut Vec<Tableau>,
) {
    if k == cells.len() {
        out.push(Tableau {
            shape: shape.clone(),
            rows: rows.clone(),
        });
        return;
    }
    let (r, c) = cells[k];
    for x in 1..=sig.len() as u8 {
        if c > 0 {
            let left = rows[r][c - 1];
            if left > x || (left == x && sig.parity(x as usize) == 1) {
                continue;
            }
        }
        if r > 0 {
            let above = rows[r - 1][c];
            if above > x || (above == x && sig.parity(x as usize) == 0) {
                continue;
            }
        }
        rows[r][c] = x;
        fill(cells, k + 1, sig, shape, rows, out);
        rows[r][c] = 0;
    }
}

/// |SST(shape)| without keeping the list around.
pub fn sst_count(shape: &Partition, sig: &EpsilonSignature) -> u64 {
    enumerate_sst(shape, sig).len() as u64
}

/// The genuine highest weight tableau H_lambda, defined by inductively
/// filling the first remaining row with i+1 when eps_{i+1} = 0 and the
/// first remaining column when eps_{i+1} = 1.
pub fn h_lambda(shape: &Partition, sig: &EpsilonSignature) -> Result<Tableau> {
    if !shape.is_hook(sig) {
        return Err(Error::NotHook(shape.to_string(), sig.to_string()));
    }
    let mut rows: Vec<Vec<u8>> = shape
        .parts()
        .iter()
        .map(|&len| vec![0u8; len as usize])
        .collect();
    // The unfilled region stays a skew shape anchored top-left: `top` is
    // its first row, `left[r]` the first unfilled column of row r.
    let mut top = 0usize;
    let mut left: Vec<usize> = vec![0; shape.num_rows()];
    let mut remaining = shape.size();
    let mut letter = 0usize;
    while remaining > 0 {
        letter += 1;
        if letter > sig.len() {
            return Err(Error::Precondition(format!(
                "alphabet exhausted filling H for {} over {}",
                shape, sig
            )));
        }
        if sig.parity(letter) == 0 {
            let r = top;
            for c in left[r]..shape.part(r + 1) as usize {
                rows[r][c] = letter as u8;
                remaining -= 1;
            }
            top += 1;
        } else {
            let col = left[top];
            for r in top..shape.num_rows() {
                if left[r] == col && (shape.part(r + 1) as usize) > col {
                    rows[r][col] = letter as u8;
                    left[r] += 1;
                    remaining -= 1;
                }
            }
            while top < shape.num_rows() && left[top] >= shape.part(top + 1) as usize {
                top += 1;
            }
        }
    }
    let t = Tableau {
        shape: shape.clone(),
        rows,
    };
    debug_assert!(t.is_semistandard(sig), "H_lambda must be semistandard");
    Ok(t)
}

/// The hook Schur character: the multiset of content weights of all
/// semistandard tableaux of the given shape.
pub fn hook_schur_char(shape: &Partition, sig: &EpsilonSignature) -> BTreeMap<Weight, u64> {
    let mut char_map = BTreeMap::new();
    for t in enumerate_sst(shape, sig) {
        *char_map.entry(t.weight(sig.len())).or_insert(0) += 1;
    }
    char_map
}

/// The Kostka number: classical semistandard tableaux of the given shape
/// with the given content, computed by brute-force filling.
pub fn kostka(shape: &Partition, content: &[u32]) -> u64 {
    if shape.size() != content.iter().sum::<u32>() {
        return 0;
    }
    let sig = EpsilonSignature::short(vec![0; content.len()]).expect("nonempty content");
    enumerate_sst(shape, &sig)
        .into_iter()
        .filter(|t| {
            let w = t.weight(content.len());
            w.0.iter()
                .zip(content)
                .all(|(&have, &want)| have == want as i64)
        })
        .count() as u64
}

/// Kostka number for rectangular content (s^r).
pub fn kostka_rect(shape: &Partition, s: u32, r: u32) -> u64 {
    kostka(shape, &vec![s; r as usize])
}

/// The number of standard tableaux of the given shape.
pub fn standard_count(shape: &Partition) -> u64 {
    kostka(shape, &vec![1; shape.size() as usize])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(s: &str) -> EpsilonSignature {
        EpsilonSignature::parse(s).unwrap()
    }

    fn lam(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn hook_examples() {
        // Worked example: n = 5, eps = (0,1,1,0,0), lambda = (6,5,4,2,1).
        assert!(lam(&[6, 5, 4, 2, 1]).is_hook(&sig("01100")));
        assert!(lam(&[1]).is_hook(&sig("0110")));
        // M = 1, N = 2: lambda_2 = 3 > 2.
        assert!(!lam(&[3, 3, 3]).is_hook(&sig("011")));
    }

    #[test]
    fn conjugate_involution() {
        for boxes in 1..=6 {
            for p in Partition::all_of(boxes) {
                assert_eq!(p.conjugate().conjugate(), p);
            }
        }
    }

    #[test]
    fn sst_single_box() {
        assert_eq!(sst_count(&lam(&[1]), &sig("0110")), 4);
    }

    #[test]
    fn sst_column_two_letters() {
        // Letters {1,2} with parities (0,1): columns (1,2) and (2,2).
        let ts = enumerate_sst(&lam(&[1, 1]), &sig("01"));
        let rows: Vec<Vec<Vec<u8>>> = ts.iter().map(|t| t.rows().to_vec()).collect();
        assert_eq!(rows, vec![vec![vec![1], vec![2]], vec![vec![2], vec![2]]]);
    }

    #[test]
    fn sst_empty_iff_not_hook() {
        assert!(enumerate_sst(&lam(&[3, 3, 3]), &sig("011")).is_empty());
        for n in 1..=5usize {
            for s in EpsilonSignature::all(n) {
                for boxes in 1..=6 {
                    for p in Partition::all_of(boxes) {
                        let nonempty = !enumerate_sst(&p, &s).is_empty();
                        assert_eq!(nonempty, p.is_hook(&s), "shape {} sig {}", p, s);
                    }
                }
            }
        }
    }

    #[test]
    fn d_stat_examples() {
        let col12 = Tableau::new(lam(&[1, 1]), vec![vec![1], vec![2]]).unwrap();
        assert_eq!(col12.d_stat(), 1);
        let col22 = Tableau::new(lam(&[1, 1]), vec![vec![2], vec![2]]).unwrap();
        assert_eq!(col22.d_stat(), 0);
        // Columns (1,2) and (1,3): 1 + 1.
        let t = Tableau::new(lam(&[2, 2]), vec![vec![1, 1], vec![2, 3]]).unwrap();
        assert_eq!(t.d_stat(), 2);
    }

    #[test]
    fn d_stat_nonnegative_and_single_letter_zero() {
        for s in EpsilonSignature::all(4) {
            for p in Partition::all_up_to(4) {
                for t in enumerate_sst(&p, &s) {
                    assert!(t.d_stat() >= 0);
                }
            }
        }
        let single = Tableau::new(lam(&[1, 1, 1]), vec![vec![2], vec![2], vec![2]]).unwrap();
        assert_eq!(single.d_stat(), 0);
    }

    #[test]
    fn h_lambda_worked_example() {
        let t = h_lambda(&lam(&[6, 5, 4, 2, 1]), &sig("01100")).unwrap();
        let expected = vec![
            vec![1, 1, 1, 1, 1, 1],
            vec![2, 3, 4, 4, 4],
            vec![2, 3, 5, 5],
            vec![2, 3],
            vec![2],
        ];
        assert_eq!(t.rows(), &expected[..]);
    }

    #[test]
    fn h_lambda_small() {
        let t = h_lambda(&lam(&[1]), &sig("0110")).unwrap();
        assert_eq!(t.rows(), &[vec![1]]);
        let t = h_lambda(&lam(&[2, 2]), &sig("0011")).unwrap();
        assert_eq!(t.rows(), &[vec![1, 1], vec![2, 2]]);
        // All-odd alphabet fills columns.
        let t = h_lambda(&lam(&[3, 1]), &sig("1111")).unwrap();
        assert_eq!(t.rows(), &[vec![1, 2, 3], vec![1]]);
    }

    #[test]
    fn h_lambda_is_semistandard_whenever_hook() {
        for n in 4..=5usize {
            for s in EpsilonSignature::all(n) {
                for p in Partition::all_up_to(5) {
                    if p.is_hook(&s) {
                        let t = h_lambda(&p, &s).unwrap();
                        assert!(t.is_semistandard(&s), "H {} {} = {}", p, s, t);
                    } else {
                        assert!(h_lambda(&p, &s).is_err());
                    }
                }
            }
        }
    }

    #[test]
    fn weight_of_examples() {
        let t = Tableau::new(lam(&[1]), vec![vec![3]]).unwrap();
        assert_eq!(t.weight(4), Weight(vec![0, 0, 1, 0]));
        let h = h_lambda(&lam(&[2, 2]), &sig("0011")).unwrap();
        assert_eq!(h.weight(4), Weight(vec![2, 2, 0, 0]));
        let col = Tableau::new(lam(&[1, 1]), vec![vec![1], vec![2]]).unwrap();
        assert_eq!(col.weight(4), Weight(vec![1, 1, 0, 0]));
    }

    #[test]
    fn hook_schur_char_single_box() {
        let c = hook_schur_char(&lam(&[1]), &sig("0110"));
        assert_eq!(c.len(), 4);
        assert!(c.values().all(|&m| m == 1));
    }

    #[test]
    fn hook_schur_char_column() {
        let c = hook_schur_char(&lam(&[1, 1]), &sig("01"));
        assert_eq!(c.get(&Weight(vec![1, 1])), Some(&1));
        assert_eq!(c.get(&Weight(vec![0, 2])), Some(&1));
        assert_eq!(c.len(), 2);
    }

    #[test]
    fn hook_schur_char_permutation_invariance() {
        // Permuting the signature permutes the weight coordinates of the
        // character accordingly; in particular all counts are invariant.
        for n in 2..=5usize {
            for s in EpsilonSignature::all(n) {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.sort_by_key(|&k| s.entries()[k]);
                let sorted =
                    EpsilonSignature::short(perm.iter().map(|&k| s.entries()[k]).collect())
                        .unwrap();
                for p in Partition::all_up_to(4) {
                    let ca = hook_schur_char(&p, &s);
                    let cb = hook_schur_char(&p, &sorted);
                    let mut mapped: BTreeMap<Weight, u64> = BTreeMap::new();
                    for (w, m) in &ca {
                        let moved = Weight(perm.iter().map(|&k| w.0[k]).collect());
                        *mapped.entry(moved).or_insert(0) += m;
                    }
                    assert_eq!(mapped, cb, "shape {} sig {}", p, s);
                }
            }
        }
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka_rect(&lam(&[6]), 2, 3), 1);
        assert_eq!(kostka_rect(&lam(&[2, 2]), 2, 2), 1);
        assert_eq!(kostka_rect(&lam(&[2, 1, 1]), 2, 2), 0);
        assert_eq!(kostka_rect(&lam(&[3, 1]), 2, 2), 1);
        assert_eq!(standard_count(&lam(&[2, 1])), 2);
        assert_eq!(standard_count(&lam(&[2, 2])), 2);
        assert_eq!(standard_count(&lam(&[3, 2])), 5);
    }

    #[test]
    fn signature_basics() {
        let s = sig("0110");
        assert_eq!(s.m_zeros(), 2);
        assert_eq!(s.n_ones(), 2);
        assert_eq!(s.letter(0), 4);
        assert_eq!(s.letter(5), 1);
        // index 0 pairs letters (4,1) with parities (0,0): even.
        assert!(!s.is_odd_index(0));
        assert!(s.is_odd_index(1)); // (0,1)
        assert!(!s.is_odd_index(2)); // (1,1)
        assert!(s.is_odd_index(3)); // (1,0)
    }

    #[test]
    fn signature_parse_errors() {
        assert!(EpsilonSignature::parse("012").is_err());
        assert!(EpsilonSignature::new(vec![0, 1, 1]).is_err());
        assert!(EpsilonSignature::short(vec![0, 1, 1]).is_ok());
    }
}
