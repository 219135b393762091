//! Sparse Laurent polynomials with integer coefficients in q, z, u, v.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Number of variables in the fixed universe.
pub const NVARS: usize = 4;

/// Variable names, in monomial-order precedence (q dominates).
pub const VAR_NAMES: [&str; NVARS] = ["q", "z", "u", "v"];

/// An exponent vector. Negative entries are allowed (Laurent).
/// The derived `Ord` is the fixed monomial order: lexicographic with
/// q > z > u > v.
pub type Exp = [i16; NVARS];

pub const EXP_ZERO: Exp = [0; NVARS];

fn exp_add(a: &Exp, b: &Exp) -> Exp {
    let mut r = EXP_ZERO;
    for k in 0..NVARS {
        r[k] = a[k].checked_add(b[k]).expect("exponent overflow");
    }
    r
}

fn exp_sub(a: &Exp, b: &Exp) -> Exp {
    let mut r = EXP_ZERO;
    for k in 0..NVARS {
        r[k] = a[k].checked_sub(b[k]).expect("exponent overflow");
    }
    r
}

/// A Laurent polynomial: sorted term list, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: Vec<(Exp, BigInt)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        LaurentPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly {
                terms: vec![(EXP_ZERO, c)],
            }
        }
    }

    pub fn monomial(exp: Exp, c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly {
                terms: vec![(exp, c)],
            }
        }
    }

    /// The variable with index `k` (0 = q, 1 = z, 2 = u, 3 = v).
    pub fn var(k: usize) -> Self {
        let mut e = EXP_ZERO;
        e[k] = 1;
        Self::monomial(e, BigInt::one())
    }

    /// Builds from an arbitrary term list (merges duplicates, drops zeros).
    pub fn from_terms(terms: Vec<(Exp, BigInt)>) -> Self {
        let mut map: BTreeMap<Exp, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            if c.is_zero() {
                continue;
            }
            let entry = map.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                map.remove(&e);
            }
        }
        LaurentPoly {
            terms: map.into_iter().collect(),
        }
    }

    pub fn terms(&self) -> &[(Exp, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == EXP_ZERO && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == EXP_ZERO)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True if variable `k` appears with nonzero exponent.
    pub fn uses_var(&self, k: usize) -> bool {
        self.terms.iter().any(|(e, _)| e[k] != 0)
    }

    /// Componentwise minimum of exponent vectors over all terms.
    /// Zero for the zero polynomial.
    pub fn min_exp(&self) -> Exp {
        let mut m = match self.terms.first() {
            None => return EXP_ZERO,
            Some((e, _)) => *e,
        };
        for (e, _) in &self.terms[1..] {
            for k in 0..NVARS {
                m[k] = m[k].min(e[k]);
            }
        }
        m
    }

    /// Componentwise maximum of exponent vectors over all terms.
    pub fn max_exp(&self) -> Exp {
        let mut m = match self.terms.first() {
            None => return EXP_ZERO,
            Some((e, _)) => *e,
        };
        for (e, _) in &self.terms[1..] {
            for k in 0..NVARS {
                m[k] = m[k].max(e[k]);
            }
        }
        m
    }

    /// Multiplies by the monomial with exponent vector `shift`.
    pub fn shifted(&self, shift: &Exp) -> Self {
        if *shift == EXP_ZERO {
            return self.clone();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (exp_add(e, shift), c.clone()))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        // Merge of two sorted term lists.
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].0.cmp(&other.terms[j].0) {
                Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 + &other.terms[j].1;
                    if !c.is_zero() {
                        out.push((self.terms[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        LaurentPoly { terms: out }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return LaurentPoly {
                terms: other.terms.iter().map(|(e2, c2)| (exp_add(e, e2), c * c2)).collect(),
            };
        }
        if other.terms.len() == 1 {
            return other.mul(self);
        }
        let mut map: BTreeMap<Exp, BigInt> = BTreeMap::new();
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (e1, c1) in &small.terms {
            for (e2, c2) in &big.terms {
                let e = exp_add(e1, e2);
                let entry = map.entry(e).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
                if entry.is_zero() {
                    map.remove(&e);
                }
            }
        }
        LaurentPoly {
            terms: map.into_iter().collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = LaurentPoly::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Positive gcd of all coefficients. Zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_content(&self, c: &BigInt) -> Self {
        assert!(!c.is_zero());
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, k)| {
                    let (qt, r) = k.div_rem(c);
                    debug_assert!(r.is_zero(), "content division must be exact");
                    (*e, qt)
                })
                .collect(),
        }
    }

    /// Exact polynomial division; panics if the division is not exact.
    /// Both operands must be genuine polynomials (no negative exponents).
    pub fn div_exact(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Self::zero();
        }
        if d.is_one() {
            return self.clone();
        }
        if d.terms.len() == 1 {
            let (de, dc) = &d.terms[0];
            return LaurentPoly {
                terms: self
                    .terms
                    .iter()
                    .map(|(e, c)| {
                        let (qt, r) = c.div_rem(dc);
                        debug_assert!(r.is_zero(), "monomial division must be exact");
                        (exp_sub(e, de), qt)
                    })
                    .collect(),
            };
        }
        // Term-by-term reduction against the leading (largest) term of d.
        let (dlead_e, dlead_c) = d.terms.last().unwrap();
        let mut rem = self.clone();
        let mut quo: Vec<(Exp, BigInt)> = Vec::new();
        while !rem.is_zero() {
            let (re, rc) = rem.terms.last().unwrap();
            let qe = exp_sub(re, dlead_e);
            let (qc, rr) = rc.div_rem(dlead_c);
            assert!(rr.is_zero(), "polynomial division must be exact");
            let qterm = LaurentPoly::monomial(qe, qc.clone());
            rem = rem.sub(&qterm.mul(d));
            quo.push((qe, qc));
        }
        LaurentPoly::from_terms(quo)
    }

    /// Sign of the coefficient of the lowest term in the monomial order.
    pub fn lowest_coeff_sign(&self) -> i32 {
        match self.terms.first() {
            None => 0,
            Some((_, c)) => {
                if c.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    /// The coefficient of the given exponent vector (zero if absent).
    pub fn coeff(&self, e: &Exp) -> BigInt {
        match self.terms.binary_search_by(|(t, _)| t.cmp(e)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let mono = format_monomial(e);
            let abs = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mono.is_empty() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", mono)?;
            } else {
                write!(f, "{}*{}", abs, mono)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn format_monomial(e: &Exp) -> String {
    let mut parts = Vec::new();
    for k in 0..NVARS {
        match e[k] {
            0 => {}
            1 => parts.push(VAR_NAMES[k].to_string()),
            p => parts.push(format!("{}^{}", VAR_NAMES[k], p)),
        }
    }
    parts.join("*")
}
