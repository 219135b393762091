//! Reduced rational functions over the integers in q, z, u, v.

use super::gcd::gcd_poly;
use super::laurent::{Exp, LaurentPoly, EXP_ZERO, NVARS};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

/// An exact element of Q(q), Q(q,z) or Q(q,z,u,v), stored as a reduced
/// and normalized ratio of integer-coefficient Laurent polynomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElem {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl FieldElem {
    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return FieldElem {
                num,
                den: LaurentPoly::one(),
            };
        }
        // Shift both parts into the polynomial range before gcd.
        let mn = num.min_exp();
        let md = den.min_exp();
        let mut shift = EXP_ZERO;
        for k in 0..NVARS {
            shift[k] = -mn[k].min(md[k]);
        }
        let mut num = num.shifted(&shift);
        let mut den = den.shifted(&shift);
        if !den.is_one() {
            let g = gcd_poly(&num, &den);
            if !g.is_one() {
                num = num.div_exact(&g);
                den = den.div_exact(&g);
            }
        }
        // Move any residual monomial factor of the denominator into the
        // numerator, so the denominator has minimal exponent 0 everywhere.
        let t = den.min_exp();
        if t != EXP_ZERO {
            let mut neg = EXP_ZERO;
            for k in 0..NVARS {
                neg[k] = -t[k];
            }
            den = den.shifted(&neg);
            num = num.shifted(&neg);
        }
        if den.lowest_coeff_sign() < 0 {
            num = num.neg();
            den = den.neg();
        }
        FieldElem { num, den }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self::canonical(p, LaurentPoly::one())
    }

    pub fn from_ratio(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    pub fn zero() -> Self {
        FieldElem {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        FieldElem {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        FieldElem {
            num: LaurentPoly::constant(BigInt::from(n)),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::canonical(
            LaurentPoly::constant(r.numer().clone()),
            LaurentPoly::constant(r.denom().clone()),
        )
    }

    /// The variable q.
    pub fn q() -> Self {
        Self::from_poly(LaurentPoly::var(0))
    }

    /// The spectral variable z.
    pub fn z() -> Self {
        Self::from_poly(LaurentPoly::var(1))
    }

    /// Auxiliary spectral variable u.
    pub fn u() -> Self {
        Self::from_poly(LaurentPoly::var(2))
    }

    /// Auxiliary spectral variable v.
    pub fn v() -> Self {
        Self::from_poly(LaurentPoly::var(3))
    }

    /// The monomial q^a.
    pub fn q_pow(a: i64) -> Self {
        let mut e = EXP_ZERO;
        e[0] = i16::try_from(a).expect("exponent out of range");
        FieldElem {
            num: LaurentPoly::monomial(e, BigInt::one()),
            den: LaurentPoly::one(),
        }
    }

    /// A signed monomial sign * q^a.
    pub fn signed_q_pow(sign: i64, a: i64) -> Self {
        let mut e = EXP_ZERO;
        e[0] = i16::try_from(a).expect("exponent out of range");
        FieldElem {
            num: LaurentPoly::monomial(e, BigInt::from(sign)),
            den: LaurentPoly::one(),
        }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn uses_var(&self, k: usize) -> bool {
        self.num.uses_var(k) || self.den.uses_var(k)
    }

    /// A rough size measure used for pivot selection.
    pub fn complexity(&self) -> usize {
        self.num.num_terms() + self.den.num_terms()
    }

    pub fn neg(&self) -> Self {
        FieldElem {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && other.den.is_one() {
            return FieldElem {
                num: self.num.add(&other.num),
                den: LaurentPoly::one(),
            };
        }
        if self.den == other.den {
            let num = self.num.add(&other.num);
            return Self::canonical(num, self.den.clone());
        }
        let g = gcd_poly(&self.den, &other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            let den = self.den.mul(&other.den);
            // With coprime denominators no new common factor can appear
            // beyond units; canonicalize only monomials and signs.
            return Self::canonical_no_gcd(num, den);
        }
        let da = self.den.div_exact(&g);
        let db = other.den.div_exact(&g);
        let num = self.num.mul(&db).add(&other.num.mul(&da));
        let den = self.den.mul(&db);
        // Any common factor of num and den divides g.
        let h = gcd_poly(&num, &g);
        if h.is_one() {
            Self::canonical_no_gcd(num, den)
        } else {
            Self::canonical_no_gcd(num.div_exact(&h), den.div_exact(&h))
        }
    }

    /// Canonicalization that skips the gcd step (already-reduced pairs).
    fn canonical_no_gcd(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let t = den.min_exp();
        let (mut num, mut den) = if t != EXP_ZERO {
            let mut neg = EXP_ZERO;
            for k in 0..NVARS {
                neg[k] = -t[k];
            }
            (num.shifted(&neg), den.shifted(&neg))
        } else {
            (num, den)
        };
        if den.lowest_coeff_sign() < 0 {
            num = num.neg();
            den = den.neg();
        }
        FieldElem { num, den }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        if self.den.is_one() && other.den.is_one() {
            return FieldElem {
                num: self.num.mul(&other.num),
                den: LaurentPoly::one(),
            };
        }
        // Cross-cancel so the product of reduced fractions stays reduced.
        let (an, bd) = cross_cancel(&self.num, &other.den);
        let (bn, ad) = cross_cancel(&other.num, &self.den);
        Self::canonical_no_gcd(an.mul(&bn), ad.mul(&bd))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical_no_gcd(
            self.den.clone(),
            self.num.clone(),
        ))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, n: i64) -> Result<Self> {
        if n == 0 {
            return Ok(Self::one());
        }
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        let mut b = base;
        let mut m = n.unsigned_abs();
        while m > 0 {
            if m & 1 == 1 {
                acc = acc.mul(&b);
            }
            m >>= 1;
            if m > 0 {
                b = b.mul(&b);
            }
        }
        Ok(acc)
    }

    /// The valuation v with self = q^v * (unit at q = 0). Defined for
    /// nonzero elements of Q(q) only.
    pub fn valuation_at_q0(&self) -> Result<i64> {
        if self.is_zero() {
            return Err(Error::ValuationUndefined("element is zero".into()));
        }
        for k in 1..NVARS {
            if self.uses_var(k) {
                return Err(Error::ValuationUndefined(format!(
                    "element involves {}",
                    super::laurent::VAR_NAMES[k]
                )));
            }
        }
        // Canonical form: denominator has minimal q-exponent 0, hence a
        // nonzero value at q = 0.
        Ok(self.num.min_exp()[0] as i64)
    }

    /// Membership in the local ring A0 of rational functions regular at q=0.
    pub fn is_in_a0(&self) -> bool {
        self.is_zero() || self.valuation_at_q0().map_or(false, |v| v >= 0)
    }

    /// The value at q = 0 for elements of A0 in Q(q).
    pub fn value_at_q0(&self) -> Result<BigRational> {
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        let v = self.valuation_at_q0()?;
        if v < 0 {
            return Err(Error::ValuationUndefined(
                "negative valuation at q=0".into(),
            ));
        }
        if v > 0 {
            return Ok(BigRational::zero());
        }
        let n = self.num.coeff(&EXP_ZERO);
        let d = self.den.coeff(&EXP_ZERO);
        Ok(BigRational::new(n, d))
    }

    /// Exact substitution of variables. Entries of `at` that are `None`
    /// leave the variable untouched.
    pub fn specialize(&self, at: &[Option<FieldElem>; NVARS]) -> Result<FieldElem> {
        let n = eval_poly(&self.num, at)?;
        let d = eval_poly(&self.den, at)?;
        if d.is_zero() {
            return Err(Error::PoleAtSpecialization {
                denominator: self.den.to_string(),
            });
        }
        n.div(&d)
    }

    /// Substitution z -> value, the common case.
    pub fn specialize_z(&self, value: &FieldElem) -> Result<FieldElem> {
        let mut at: [Option<FieldElem>; NVARS] = [None, None, None, None];
        at[1] = Some(value.clone());
        self.specialize(&at)
    }
}

fn cross_cancel(a: &LaurentPoly, b: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    if a.is_one() || b.is_one() {
        return (a.clone(), b.clone());
    }
    // Shift into polynomial range for the gcd, then undo.
    let ma = a.min_exp();
    let mb = b.min_exp();
    let mut sa = EXP_ZERO;
    let mut sb = EXP_ZERO;
    for k in 0..NVARS {
        sa[k] = -ma[k].min(0);
        sb[k] = -mb[k].min(0);
    }
    let ap = a.shifted(&sa);
    let bp = b.shifted(&sb);
    let g = gcd_poly(&ap, &bp);
    if g.is_one() {
        (a.clone(), b.clone())
    } else {
        let mut usa = EXP_ZERO;
        let mut usb = EXP_ZERO;
        for k in 0..NVARS {
            usa[k] = -sa[k];
            usb[k] = -sb[k];
        }
        (
            ap.div_exact(&g).shifted(&usa),
            bp.div_exact(&g).shifted(&usb),
        )
    }
}

fn eval_poly(p: &LaurentPoly, at: &[Option<FieldElem>; NVARS]) -> Result<FieldElem> {
    let mut acc = FieldElem::zero();
    for (e, c) in p.terms() {
        let mut term = FieldElem {
            num: LaurentPoly::constant(c.clone()),
            den: LaurentPoly::one(),
        };
        let mut residual: Exp = EXP_ZERO;
        for k in 0..NVARS {
            if e[k] == 0 {
                continue;
            }
            match &at[k] {
                None => residual[k] = e[k],
                Some(val) => {
                    if val.is_zero() && e[k] < 0 {
                        return Err(Error::DivisionByZero);
                    }
                    term = term.mul(&val.pow(e[k] as i64)?);
                }
            }
        }
        if residual != EXP_ZERO {
            term = term.mul(&FieldElem::from_poly(LaurentPoly::monomial(
                residual,
                num_bigint::BigInt::one(),
            )));
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.num_terms() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if self.den.num_terms() > 1 {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl From<i64> for FieldElem {
    fn from(n: i64) -> Self {
        FieldElem::from_int(n)
    }
}

// A BigInt constant has the canonical form (c, 1) already, except c = 0.
impl From<BigInt> for FieldElem {
    fn from(c: BigInt) -> Self {
        FieldElem {
            num: LaurentPoly::constant(c),
            den: LaurentPoly::one(),
        }
    }
}

impl std::ops::Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::neg(self)
    }
}

impl std::ops::Add for &FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        FieldElem::add(self, rhs)
    }
}

impl std::ops::Sub for &FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        FieldElem::sub(self, rhs)
    }
}

impl std::ops::Mul for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        FieldElem::mul(self, rhs)
    }
}
