use super::*;
use crate::error::Error;
use num_bigint::BigInt;
use proptest::prelude::*;

fn q() -> FieldElem {
    FieldElem::q()
}

fn z() -> FieldElem {
    FieldElem::z()
}

fn fe(n: i64) -> FieldElem {
    FieldElem::from_int(n)
}

/// (1 - q^2 z)/(z - q^2), the l = m = 1 spectral factor.
fn spectral_factor() -> FieldElem {
    let one = FieldElem::one();
    let q2z = q().pow(2).unwrap().mul(&z());
    let num = one.sub(&q2z);
    let den = z().sub(&q().pow(2).unwrap());
    num.div(&den).unwrap()
}

#[test]
fn unit_cancellation() {
    assert!(q().mul(&q().pow(-1).unwrap()).is_one());
}

#[test]
fn additive_inverse() {
    let a = q().sub(&q().pow(-1).unwrap());
    let b = q().pow(-1).unwrap().sub(&q());
    assert!(a.add(&b).is_zero());
}

#[test]
fn multiplicative_inverse_of_spectral_factor() {
    let a = spectral_factor();
    let b = a.inv().unwrap();
    assert!(a.mul(&b).is_one());
}

#[test]
fn canonical_string_form() {
    assert_eq!(spectral_factor().to_string(), "(1 - q^2*z)/(z - q^2)");
    assert_eq!(fe(5).to_string(), "5");
    assert_eq!(qint(2).to_string(), "q^-1 + q");
    assert_eq!(
        fe(1).div(&q().sub(&q().pow(2).unwrap())).unwrap().to_string(),
        "q^-1/(1 - q)"
    );
}

#[test]
fn qint_values() {
    assert!(qint(0).is_zero());
    assert!(qint(1).is_one());
    let expected = q().add(&q().pow(-1).unwrap());
    assert_eq!(qint(2), expected);
    assert_eq!(qint(-3), qint(3).neg());
    // [3] = q^2 + 1 + q^-2
    let three = q().pow(2).unwrap().add(&FieldElem::one()).add(&q().pow(-2).unwrap());
    assert_eq!(qint(3), three);
}

#[test]
fn qbinomial_values() {
    assert!(qbinomial(4, 0).is_one());
    assert_eq!(qbinomial(2, 1), qint(2));
    // [4 choose 2] = [4]![2]!^-2 ... = q^4 + q^2 + 2 + q^-2 + q^-4
    let e = q().pow(4).unwrap()
        .add(&q().pow(2).unwrap())
        .add(&fe(2))
        .add(&q().pow(-2).unwrap())
        .add(&q().pow(-4).unwrap());
    assert_eq!(qbinomial(4, 2), e);
}

#[test]
fn valuation_examples() {
    let a = q().pow(2).unwrap().div(&FieldElem::one().add(&q())).unwrap();
    assert_eq!(a.valuation_at_q0().unwrap(), 2);
    let b = fe(1).div(&q().sub(&q().pow(2).unwrap())).unwrap();
    assert_eq!(b.valuation_at_q0().unwrap(), -1);
    assert_eq!(fe(5).valuation_at_q0().unwrap(), 0);
    assert!(FieldElem::zero().valuation_at_q0().is_err());
    assert!(z().valuation_at_q0().is_err());
}

#[test]
fn specialization_examples() {
    let q2 = q().pow(2).unwrap();
    assert_eq!(z().specialize_z(&q2).unwrap(), q2);

    let a = spectral_factor();
    let at = q().pow(-2).unwrap();
    assert!(a.specialize_z(&at).unwrap().is_zero());

    let b = a.inv().unwrap();
    match b.specialize_z(&at) {
        Err(Error::PoleAtSpecialization { denominator }) => {
            assert_eq!(denominator, "1 - q^2*z");
        }
        other => panic!("expected pole error, got {:?}", other),
    }
}

#[test]
fn value_at_q0() {
    let a = FieldElem::one().add(&q()).div(&fe(2).add(&q())).unwrap();
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    assert_eq!(a.value_at_q0().unwrap(), half);
    let b = q().div(&FieldElem::one().add(&q())).unwrap();
    assert!(b.value_at_q0().unwrap().is_zero());
}

use num_rational::BigRational;
use num_traits::Zero;

fn arb_poly(max_terms: usize, with_z: bool) -> impl Strategy<Value = LaurentPoly> {
    let term = (
        -4i16..5,
        if with_z { -2i16..3 } else { 0i16..1 },
        -5i64..6,
    );
    proptest::collection::vec(term, 0..max_terms).prop_map(|ts| {
        LaurentPoly::from_terms(
            ts.into_iter()
                .map(|(eq, ez, c)| {
                    let mut e = [0i16; NVARS];
                    e[0] = eq;
                    e[1] = ez;
                    (e, BigInt::from(c))
                })
                .collect(),
        )
    })
}

fn arb_field_elem() -> impl Strategy<Value = FieldElem> {
    (arb_poly(4, true), arb_poly(3, true))
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| FieldElem::from_ratio(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in arb_field_elem(), b in arb_field_elem(), c in arb_field_elem()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn equality_matches_cross_multiplication(a in arb_field_elem(), b in arb_field_elem()) {
        let cross = a.num().mul(b.den()) == b.num().mul(a.den());
        prop_assert_eq!(a == b, cross);
        prop_assert_eq!(a.sub(&b).is_zero(), cross);
    }

    #[test]
    fn canonical_form_is_idempotent(a in arb_field_elem()) {
        let again = FieldElem::from_ratio(a.num().clone(), a.den().clone()).unwrap();
        prop_assert_eq!(&again, &a);
        if !a.is_zero() {
            let double = FieldElem::from_ratio(
                a.num().mul(a.num()),
                a.den().mul(a.num()),
            ).unwrap();
            prop_assert_eq!(double, a);
        }
    }

    #[test]
    fn inverses(a in arb_field_elem()) {
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn valuation_is_additive(a in arb_field_elem(), b in arb_field_elem()) {
        // Restrict to q-only nonzero elements.
        let strip = |x: &FieldElem| -> Option<FieldElem> {
            if x.is_zero() || x.uses_var(1) { None } else { Some(x.clone()) }
        };
        if let (Some(a), Some(b)) = (strip(&a), strip(&b)) {
            let va = a.valuation_at_q0().unwrap();
            let vb = b.valuation_at_q0().unwrap();
            prop_assert_eq!(a.mul(&b).valuation_at_q0().unwrap(), va + vb);
        }
    }
}
