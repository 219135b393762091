//! Exact arithmetic in Q(q) and Q(q,z).
//!
//! Elements are reduced ratios of integer-coefficient Laurent polynomials.
//! The variable universe is fixed as `q, z, u, v`: `q` is the quantum
//! parameter, `z` the spectral ratio, and `u, v` are auxiliary spectral
//! variables used only when three tensor factors carry independent
//! parameters (Yang-Baxter checks). Every element is canonical:
//!
//! * numerator and denominator share no polynomial factor,
//! * the integer contents of numerator and denominator are coprime,
//! * the denominator has minimal exponent 0 in every variable, and its
//!   lowest term under the fixed monomial order (lexicographic with
//!   q > z > u > v, ascending) has positive coefficient.
//!
//! Equality is structural equality of canonical forms and agrees with
//! cross-multiplication.

mod elem;
mod gcd;
mod laurent;

pub use elem::FieldElem;
pub use laurent::{Exp, LaurentPoly, NVARS, VAR_NAMES};

use num_bigint::BigInt;

/// The quantum integer [m] = (q^m - q^-m)/(q - q^-1), as a Laurent polynomial
/// q^{m-1} + q^{m-3} + ... + q^{1-m}.
pub fn qint(m: i64) -> FieldElem {
    if m == 0 {
        return FieldElem::zero();
    }
    let (sign, m) = if m < 0 { (-1, -m) } else { (1, m) };
    let mut terms = Vec::with_capacity(m as usize);
    for j in 0..m {
        let mut e = [0i16; NVARS];
        e[0] = (m - 1 - 2 * j) as i16;
        terms.push((e, BigInt::from(sign)));
    }
    FieldElem::from_poly(LaurentPoly::from_terms(terms))
}

/// The quantum factorial [m]! = [1][2]...[m].
pub fn qfactorial(m: u64) -> FieldElem {
    let mut acc = FieldElem::one();
    for j in 1..=m {
        acc = acc.mul(&qint(j as i64));
    }
    acc
}

/// The quantum binomial [m choose k] = [m]! / ([k]! [m-k]!).
pub fn qbinomial(m: u64, k: u64) -> FieldElem {
    if k > m {
        return FieldElem::zero();
    }
    qfactorial(m)
        .div(&qfactorial(k).mul(&qfactorial(m - k)))
        .expect("quantum factorials are nonzero")
}

#[cfg(test)]
mod tests;
