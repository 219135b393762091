//! Multivariate polynomial gcd by primitive pseudo-remainder sequences.
//!
//! Polynomials are viewed recursively: dense in the highest active
//! variable with coefficients in the remaining ones; the base case is a
//! univariate polynomial in q over the integers. Contents are split off
//! at every level, so remainders stay primitive and coefficient growth
//! is fraction-free.

use super::laurent::{Exp, LaurentPoly, EXP_ZERO, NVARS};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

/// A coefficient ring with exact division and gcd.
trait GcdRing: Clone {
    fn ring_zero() -> Self;
    fn ring_is_zero(&self) -> bool;
    fn mul(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn gcd(a: &Self, b: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
}

impl GcdRing for BigInt {
    fn ring_zero() -> Self {
        Zero::zero()
    }
    fn ring_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn gcd(a: &Self, b: &Self) -> Self {
        Integer::gcd(a, b)
    }
    fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        debug_assert!(Zero::is_zero(&r), "integer division must be exact");
        q
    }
}

impl GcdRing for LaurentPoly {
    fn ring_zero() -> Self {
        LaurentPoly::zero()
    }
    fn ring_is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn mul(&self, o: &Self) -> Self {
        LaurentPoly::mul(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        LaurentPoly::sub(self, o)
    }
    fn gcd(a: &Self, b: &Self) -> Self {
        gcd_poly(a, b)
    }
    fn div_exact(&self, d: &Self) -> Self {
        LaurentPoly::div_exact(self, d)
    }
}

/// Dense univariate polynomial over `R`, ascending degree, trimmed.
#[derive(Clone)]
struct UPoly<R>(Vec<R>);

impl<R: GcdRing> UPoly<R> {
    fn trim(mut self) -> Self {
        while self.0.last().map_or(false, |c| c.ring_is_zero()) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn deg(&self) -> usize {
        debug_assert!(!self.is_zero());
        self.0.len() - 1
    }

    fn lc(&self) -> &R {
        self.0.last().unwrap()
    }

    fn scale(&self, c: &R) -> Self {
        UPoly(self.0.iter().map(|k| k.mul(c)).collect()).trim()
    }

    /// self * c - other * x^shift * d
    fn scaled_sub(&self, c: &R, other: &Self, shift: usize, d: &R) -> Self {
        let n = (self.0.len()).max(other.0.len() + shift);
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = if i < self.0.len() {
                self.0[i].mul(c)
            } else {
                R::ring_zero()
            };
            let b = if i >= shift && i - shift < other.0.len() {
                other.0[i - shift].mul(d)
            } else {
                R::ring_zero()
            };
            out.push(a.sub(&b));
        }
        UPoly(out).trim()
    }

    fn content(&self) -> R {
        let mut g = R::ring_zero();
        for c in &self.0 {
            g = R::gcd(&g, c);
        }
        g
    }

    fn div_content(&self, c: &R) -> Self {
        UPoly(self.0.iter().map(|k| k.div_exact(c)).collect())
    }

    fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        self.div_content(&c)
    }

    /// Pseudo-remainder of self by d (deg self >= deg d, d nonzero).
    fn prem(&self, d: &Self) -> Self {
        let mut r = self.clone();
        let lb = d.lc().clone();
        while !r.is_zero() && r.deg() >= d.deg() {
            let sh = r.deg() - d.deg();
            let coef = r.lc().clone();
            r = r.scaled_sub(&lb, d, sh, &coef);
        }
        r
    }
}

/// Primitive PRS gcd of two primitive univariate polynomials.
fn upoly_gcd_primitive<R: GcdRing>(a: UPoly<R>, b: UPoly<R>) -> UPoly<R> {
    let (mut r0, mut r1) = if a.is_zero() || (!b.is_zero() && a.deg() < b.deg()) {
        (b, a)
    } else {
        (a, b)
    };
    while !r1.is_zero() {
        let r2 = r0.prem(&r1).primitive();
        r0 = r1;
        r1 = r2;
    }
    r0.primitive()
}

/// Divides out the monomial q^min so all exponents are nonnegative with
/// minimum 0 in every variable.
fn shift_to_poly(p: &LaurentPoly) -> LaurentPoly {
    let m = p.min_exp();
    if m == EXP_ZERO {
        return p.clone();
    }
    let mut neg = EXP_ZERO;
    for k in 0..NVARS {
        neg[k] = -m[k];
    }
    p.shifted(&neg)
}

fn highest_active_var(a: &LaurentPoly, b: &LaurentPoly) -> Option<usize> {
    for k in (1..NVARS).rev() {
        if a.uses_var(k) || b.uses_var(k) {
            return Some(k);
        }
    }
    None
}

fn to_upoly(p: &LaurentPoly, k: usize) -> UPoly<LaurentPoly> {
    let deg = p.max_exp()[k];
    debug_assert!(p.min_exp()[k] >= 0, "gcd input must be a polynomial");
    let mut coeffs = vec![Vec::new(); deg as usize + 1];
    for (e, c) in p.terms() {
        let mut e2: Exp = *e;
        let d = e2[k] as usize;
        e2[k] = 0;
        coeffs[d].push((e2, c.clone()));
    }
    UPoly(coeffs.into_iter().map(LaurentPoly::from_terms).collect()).trim()
}

fn from_upoly(u: &UPoly<LaurentPoly>, k: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    for (d, c) in u.0.iter().enumerate() {
        let mut e = EXP_ZERO;
        e[k] = d as i16;
        acc = acc.add(&c.shifted(&e));
    }
    acc
}

fn to_base(p: &LaurentPoly) -> UPoly<BigInt> {
    let deg = p.max_exp()[0];
    debug_assert!(p.min_exp()[0] >= 0);
    let mut coeffs = vec![BigInt::zero(); deg as usize + 1];
    for (e, c) in p.terms() {
        debug_assert!(e[1] == 0 && e[2] == 0 && e[3] == 0);
        coeffs[e[0] as usize] += c;
    }
    UPoly(coeffs).trim()
}

fn from_base(u: &UPoly<BigInt>) -> LaurentPoly {
    let mut terms = Vec::new();
    for (d, c) in u.0.iter().enumerate() {
        if !c.is_zero() {
            let mut e = EXP_ZERO;
            e[0] = d as i16;
            terms.push((e, c.clone()));
        }
    }
    LaurentPoly::from_terms(terms)
}

/// Sign- and unit-normalized gcd: the result has positive lowest
/// coefficient under the monomial order.
fn normalize_sign(p: LaurentPoly) -> LaurentPoly {
    if p.lowest_coeff_sign() < 0 {
        p.neg()
    } else {
        p
    }
}

/// Full gcd (including integer content) of two Laurent polynomials,
/// as a genuine polynomial: monomial factors are units and are stripped,
/// so inputs are shifted into the polynomial range first.
pub fn gcd_poly(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return normalize_sign(shift_to_poly(b));
    }
    if b.is_zero() {
        return normalize_sign(shift_to_poly(a));
    }
    let a = &shift_to_poly(a);
    let b = &shift_to_poly(b);
    if a.is_one() || b.is_one() {
        return LaurentPoly::one();
    }
    if a.is_constant() && b.is_constant() {
        return LaurentPoly::constant(Integer::gcd(&a.content(), &b.content()));
    }
    match highest_active_var(a, b) {
        None => {
            // Univariate in q over the integers.
            let ua = to_base(a);
            let ub = to_base(b);
            let ca = ua.content();
            let cb = ub.content();
            let c = Integer::gcd(&ca, &cb);
            let g = upoly_gcd_primitive(ua.div_content(&ca), ub.div_content(&cb));
            normalize_sign(from_base(&g).scale(&c))
        }
        Some(k) => {
            let ua = to_upoly(a, k);
            let ub = to_upoly(b, k);
            let ca = ua.content();
            let cb = ub.content();
            let c = gcd_poly(&ca, &cb);
            let g = upoly_gcd_primitive(ua.div_content(&ca), ub.div_content(&cb));
            normalize_sign(from_upoly(&g, k).mul(&c))
        }
    }
}
