use super::*;
use crate::combin::EpsilonSignature;
use crate::qfield::FieldElem;

fn sig(s: &str) -> EpsilonSignature {
    EpsilonSignature::parse(s).unwrap()
}

/// (1 - q^c z)/(z - q^c).
fn spectral_factor(c: i64) -> FieldElem {
    let qc = FieldElem::q_pow(c);
    FieldElem::one()
        .sub(&qc.mul(&FieldElem::z()))
        .div(&FieldElem::z().sub(&qc))
        .unwrap()
}

#[test]
fn solve_r_unique_and_spectral_11() {
    let s = sig("0110");
    let rm = solve_r(&s, 1, 1).unwrap();
    let sd = spectral_decompose(&rm).unwrap();
    assert_eq!(sd.rho.len(), 2);
    assert!(sd.rho[0].1.is_one());
    assert_eq!(sd.rho[1].1, spectral_factor(2));
    assert!(verify_spectral_theorem(&sd).matches);
    assert_eq!(
        sd.to_json()["rho"][1]["value"],
        "(1 - q^2*z)/(z - q^2)"
    );
}

#[test]
fn solve_r_spectral_21() {
    let s = sig("0110");
    let rm = solve_r(&s, 2, 1).unwrap();
    let sd = spectral_decompose(&rm).unwrap();
    assert_eq!(sd.rho.len(), 2);
    assert_eq!(sd.rho[1].1, spectral_factor(3));
    assert!(verify_spectral_theorem(&sd).matches);
}

#[test]
fn spectral_regimes_m0_m1() {
    // M = 0: anchor at the top t.
    let s = sig("1111");
    let rm = solve_r(&s, 2, 1).unwrap();
    let sd = spectral_decompose(&rm).unwrap();
    assert!(verify_spectral_theorem(&sd).matches, "M=0: {:?}", sd.rho);
    assert!(sd.rho.last().unwrap().1.is_one());
    // M = 1.
    let s = sig("0111");
    let rm = solve_r(&s, 1, 1).unwrap();
    let sd = spectral_decompose(&rm).unwrap();
    assert!(verify_spectral_theorem(&sd).matches, "M=1: {:?}", sd.rho);
}

#[test]
fn spectral_for_odd_first_letter() {
    let s = sig("1010");
    let rm = solve_r(&s, 1, 1).unwrap();
    let sd = spectral_decompose(&rm).unwrap();
    assert!(verify_spectral_theorem(&sd).matches, "{:?}", sd.rho);
}

#[test]
fn truncated_route_agrees() {
    for s in [sig("0110"), sig("0101")] {
        let rm = solve_r(&s, 1, 1).unwrap();
        let sd = spectral_decompose(&rm).unwrap();
        let via = spectral_via_truncation(&rm).unwrap();
        assert_eq!(sd.rho, via.rho, "sig {}", s);
    }
}

#[test]
fn ybe_111() {
    for s in [sig("0110"), sig("1011")] {
        assert!(check_ybe(&s, 1, 1, 1).unwrap(), "sig {}", s);
    }
}

#[test]
fn ybe_211() {
    let s = sig("0110");
    assert!(check_ybe(&s, 2, 1, 1).unwrap());
}

#[test]
fn unitarity() {
    let s = sig("0110");
    assert!(check_unitarity(&s, 1, 1).unwrap());
    assert!(check_unitarity(&s, 2, 1).unwrap());
}

#[test]
fn truncation_compatibility_5_to_4() {
    let s = sig("01101");
    // Remove an odd letter, keeping the first zero in place.
    let rep = check_truncation_compat(&s, 1, 1, 5).unwrap();
    assert!(rep.ok(), "{:?}", rep.to_json());
    let rep = check_truncation_compat(&s, 2, 1, 3).unwrap();
    assert!(rep.ok(), "{:?}", rep.to_json());
}

#[test]
fn iterated_truncation_matches() {
    let s = sig("0110");
    let rm = solve_r(&s, 2, 2).unwrap();
    let rep = iterated_truncation_report(&rm).unwrap();
    assert_eq!(rep["truncation_agrees"], true);
    assert_eq!(rep["matches_theorem"], true);
}

#[test]
fn r_fixes_anchor_and_ratio_form() {
    let s = sig("0011");
    let rm = solve_r(&s, 2, 2).unwrap();
    let sd = spectral_decompose(&rm).unwrap();
    // rho_t / rho_{t-1} = (1 - q^{l+m-2t+2} z)/(z - q^{l+m-2t+2}).
    for w in sd.rho.windows(2) {
        let (t0, r0) = &w[0];
        let (t1, r1) = &w[1];
        assert_eq!(t1 - t0, 1);
        let c = (rm.l + rm.m) as i64 - 2 * *t1 as i64 + 2;
        assert_eq!(r1.div(r0).unwrap(), spectral_factor(c));
    }
}
