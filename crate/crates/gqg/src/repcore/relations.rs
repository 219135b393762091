//! Verification of the defining relations as exact matrix identities.
//!
//! Every relation is evaluated on the module and reported pass/fail with
//! the first offending matrix entry. The k-based variant of the relation
//! system is used so the same checker runs both on a module's own
//! generators and on images of generators under the reflection and
//! embedding maps.

use crate::combin::EpsilonSignature;
use crate::linalg::SparseMat;
use crate::qfield::{qint, FieldElem};
use crate::repcore::module::WeightModule;
use crate::repcore::words::EvaluatedGens;
use std::fmt;

#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub name: String,
    pub ok: bool,
    /// (row, col, value) of the first failing entry of the defect matrix.
    pub failure: Option<(usize, usize, String)>,
}

#[derive(Clone, Debug, Default)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.ok)
    }

    fn push(&mut self, name: String, defect: &SparseMat) {
        match defect.first_nonzero() {
            None => self.checks.push(RelationCheck {
                name,
                ok: true,
                failure: None,
            }),
            Some((r, c, v)) => self.checks.push(RelationCheck {
                name,
                ok: false,
                failure: Some((r, c, v.to_string())),
            }),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "all_ok": self.all_ok(),
            "checks": self.checks.iter().map(|c| serde_json::json!({
                "name": c.name,
                "ok": c.ok,
                "failure": c.failure.as_ref().map(|(r, col, v)| serde_json::json!([r, col, v])),
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "{} {}{}",
                if c.ok { "pass" } else { "FAIL" },
                c.name,
                match &c.failure {
                    None => String::new(),
                    Some((r, col, v)) => format!("  first defect at ({},{}) = {}", r, col, v),
                }
            )?;
        }
        Ok(())
    }
}

/// Cyclic adjacency on the affine index set.
fn cyclic_adjacent(n: usize, i: usize, j: usize) -> bool {
    let d = (j + n - i) % n;
    d == 1 || d == n - 1
}

/// Runs the k-based defining relation system on evaluated generators,
/// with parities taken from `sig` (the algebra the generators present).
pub fn relation_suite(gens: &EvaluatedGens, sig: &EpsilonSignature) -> RelationReport {
    let n = sig.len();
    let mut report = RelationReport::default();
    let qdiff = FieldElem::q().sub(&FieldElem::q_pow(-1));
    let dim = gens.e[0].nrows;
    let id = SparseMat::identity(dim);

    // k_i k_i^{-1} = 1.
    for i in 0..n {
        let defect = gens.k[i].mul(&gens.k_inv[i]).sub(&id);
        report.push(format!("cartan-inverse[i={}]", i), &defect);
    }

    // k_i e_j k_i^{-1} = D_ij e_j and k_i f_j k_i^{-1} = D_ij^{-1} f_j.
    for i in 0..n {
        for j in 0..n {
            let d = crate::repcore::words::d_ij(sig, i, j);
            let lhs = gens.k[i].mul(&gens.e[j]).mul(&gens.k_inv[i]);
            let defect = lhs.sub(&gens.e[j].scale(&d));
            report.push(format!("weyl-e[i={},j={}]", i, j), &defect);
            let lhs = gens.k[i].mul(&gens.f[j]).mul(&gens.k_inv[i]);
            let defect = lhs.sub(&gens.f[j].scale(&d.inv().unwrap()));
            report.push(format!("weyl-f[i={},j={}]", i, j), &defect);
        }
    }

    // e_i f_j - f_j e_i = delta_ij (k_i - k_i^{-1})/(q - q^{-1}).
    for i in 0..n {
        for j in 0..n {
            let lhs = gens.e[i].mul(&gens.f[j]).sub(&gens.f[j].mul(&gens.e[i]));
            let rhs = if i == j {
                gens.k[i]
                    .sub(&gens.k_inv[i])
                    .scale(&FieldElem::one().div(&qdiff).unwrap())
            } else {
                SparseMat::zero(dim, dim)
            };
            report.push(format!("weyl-ef[i={},j={}]", i, j), &lhs.sub(&rhs));
        }
    }

    // e_i^2 = f_i^2 = 0 for isotropic i.
    for i in 0..n {
        if sig.is_odd_index(i) {
            report.push(
                format!("isotropic-e2[i={}]", i),
                &gens.e[i].mul(&gens.e[i]),
            );
            report.push(
                format!("isotropic-f2[i={}]", i),
                &gens.f[i].mul(&gens.f[i]),
            );
        }
    }

    // Distant commutation.
    for i in 0..n {
        for j in 0..n {
            if i < j && !cyclic_adjacent(n, i, j) {
                report.push(
                    format!("distant-e[i={},j={}]", i, j),
                    &gens.e[i].commutator(&gens.e[j]),
                );
                report.push(
                    format!("distant-f[i={},j={}]", i, j),
                    &gens.f[i].commutator(&gens.f[j]),
                );
            }
        }
    }

    // Serre relations at even i for adjacent j:
    // x_i^2 x_j - (-1)^{eps_i} [2] x_i x_j x_i + x_j x_i^2 = 0.
    for i in 0..n {
        if sig.is_odd_index(i) {
            continue;
        }
        let sign = if sig.parity_idx(i) == 0 { 1 } else { -1 };
        let c = qint(2).scale_int(sign);
        for j in 0..n {
            if j == i || !cyclic_adjacent(n, i, j) {
                continue;
            }
            for (tag, x) in [("e", &gens.e), ("f", &gens.f)] {
                let xi = &x[i];
                let xj = &x[j];
                let defect = xi
                    .mul(xi)
                    .mul(xj)
                    .sub(&xi.mul(xj).mul(xi).scale(&c))
                    .add(&xj.mul(xi).mul(xi));
                report.push(format!("serre-even-{}[i={},j={}]", tag, i, j), &defect);
            }
        }
    }

    // Degree-four relations at isotropic i (n >= 4 keeps i-1, i, i+1
    // distinct):
    // x_i x_{i-1} x_i x_{i+1} - x_i x_{i+1} x_i x_{i-1} + x_{i+1} x_i x_{i-1} x_i
    //   - x_{i-1} x_i x_{i+1} x_i + (-1)^{eps_i} [2] x_i x_{i-1} x_{i+1} x_i = 0.
    if n >= 4 {
        for i in 0..n {
            if !sig.is_odd_index(i) {
                continue;
            }
            let im = (i + n - 1) % n;
            let ip = (i + 1) % n;
            let sign = if sig.parity_idx(i) == 0 { 1 } else { -1 };
            let c = qint(2).scale_int(sign);
            for (tag, x) in [("e", &gens.e), ("f", &gens.f)] {
                let (a, b, d) = (&x[i], &x[im], &x[ip]);
                let defect = a
                    .mul(b)
                    .mul(a)
                    .mul(d)
                    .sub(&a.mul(d).mul(a).mul(b))
                    .add(&d.mul(a).mul(b).mul(a))
                    .sub(&b.mul(a).mul(d).mul(a))
                    .add(&a.mul(b).mul(d).mul(a).scale(&c));
                report.push(format!("serre-odd-{}[i={}]", tag, i), &defect);
            }
        }
    }

    report
}

/// Full verification of the defining relations on a module, including
/// the omega-conjugation relations that need the Cartan torus itself.
pub fn verify_relations(m: &WeightModule) -> RelationReport {
    let sig = &m.sig;
    let n = sig.len();
    let gens = EvaluatedGens::from_module(m);
    let mut report = relation_suite(&gens, sig);

    // omega_j e_i omega_j^{-1} = q_j^{<alpha_i, delta_j^vee>} e_i, and the
    // inverse power for f_i.
    for j in 1..=n {
        let om = m.act_omega(j, 1);
        let om_inv = m.act_omega(j, -1);
        let qj = sig.q_i(j);
        for i in 0..n {
            let mut p = 0i64;
            if sig.letter(i) == j {
                p += 1;
            }
            if sig.letter(i + 1) == j {
                p -= 1;
            }
            let lhs = om.mul(&gens.e[i]).mul(&om_inv);
            let defect = lhs.sub(&gens.e[i].scale(&qj.pow(p).unwrap()));
            report.push(format!("omega-e[j={},i={}]", j, i), &defect);
            let lhs = om.mul(&gens.f[i]).mul(&om_inv);
            let defect = lhs.sub(&gens.f[i].scale(&qj.pow(-p).unwrap()));
            report.push(format!("omega-f[j={},i={}]", j, i), &defect);
        }
    }

    report
}

trait ScaleInt {
    fn scale_int(&self, s: i64) -> FieldElem;
}

impl ScaleInt for FieldElem {
    fn scale_int(&self, s: i64) -> FieldElem {
        self.mul(&FieldElem::from_int(s))
    }
}
