//! Lorentz algebra representations over Q(i, sqrt2).
//!
//! A basis is stored as three rotation generators `S_c` (so that
//! `S_ab = eps_abc S_c`) and three boosts `S_0a`. The defining relation is
//! checked with metric `diag(-1, 1, 1, 1)`: that is the signature under
//! which the explicit three-, seven- and eight-dimensional realizations
//! used here close (with `diag(1,-1,-1,-1)` every boost-boost bracket
//! flips sign, which is the same algebra written as `S -> -S`).

use crate::catalog::{eps, eps_combo, k_rows, spin_one, RepLabel, Representation};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{GaussianRational as Gr, Scalar, Sqrt2Rational as Sq};
use serde::Serialize;

pub const METRIC: [i64; 4] = [-1, 1, 1, 1];

#[derive(Clone, Debug)]
pub struct LorentzBasis {
    pub dim: usize,
    /// `S_c`, the rotation part: `S_ab = eps_abc S_c`.
    pub rot: [Matrix<Sq>; 3],
    /// `S_0a`, the boost part.
    pub boost: [Matrix<Sq>; 3],
    pub source: String,
}

pub fn lift(m: &Matrix<Gr>) -> Matrix<Sq> {
    m.map(|e| Sq::from(e.clone()))
}

impl LorentzBasis {
    /// Signed lookup of `S_{mu nu}` (indices 0..=3).
    pub fn s(&self, mu: usize, nu: usize) -> Matrix<Sq> {
        match (mu, nu) {
            (m, n) if m == n => Matrix::zeros(self.dim, self.dim),
            (0, a) => self.boost[a - 1].clone(),
            (a, 0) => self.boost[a - 1].neg(),
            (a, b) => {
                let mut out = Matrix::zeros(self.dim, self.dim);
                for c in 0..3 {
                    let e = eps(a - 1, b - 1, c);
                    if e != 0 {
                        out = out.add(&self.rot[c].scale(&Sq::from_int(e)));
                    }
                }
                out
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LorentzViolation {
    pub mu: usize,
    pub nu: usize,
    pub lambda: usize,
    pub sigma: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct LorentzReport {
    pub source: String,
    pub violations: Vec<LorentzViolation>,
}

impl LorentzReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Exact check of `[S_mn, S_ls] = i(g_ml S_ns + g_ns S_ml - g_nl S_ms -
/// g_ms S_nl)` over all index pairs.
pub fn verify_lorentz(basis: &LorentzBasis) -> LorentzReport {
    let mut violations = Vec::new();
    let g = |i: usize| Sq::from_int(METRIC[i]);
    let i_unit = Sq::i();
    let pairs: Vec<(usize, usize)> = (0..4)
        .flat_map(|m| ((m + 1)..4).map(move |n| (m, n)))
        .collect();
    for &(mu, nu) in &pairs {
        for &(la, si) in &pairs {
            let lhs = basis.s(mu, nu).commutator(&basis.s(la, si));
            let rhs = basis
                .s(nu, si)
                .scale(&g(mu).mul(&delta(mu, la)))
                .add(&basis.s(mu, la).scale(&g(nu).mul(&delta(nu, si))))
                .sub(&basis.s(mu, si).scale(&g(nu).mul(&delta(nu, la))))
                .sub(&basis.s(nu, la).scale(&g(mu).mul(&delta(mu, si))))
                .scale(&i_unit);
            if lhs != rhs {
                violations.push(LorentzViolation {
                    mu,
                    nu,
                    lambda: la,
                    sigma: si,
                });
            }
        }
    }
    LorentzReport {
        source: basis.source.clone(),
        violations,
    }
}

fn delta(a: usize, b: usize) -> Sq {
    if a == b {
        Sq::one()
    } else {
        Sq::zero()
    }
}

/// Candidate Lorentz basis from a Galilei representation:
/// `S_ab = eps_abc S_c`, `S_0a = nu (eta_a - eta_a^+)`. Closure holds for
/// five of the catalog rows and fails for the rest; `verify_lorentz`
/// decides.
pub fn lorentz_from_galilei(rep: &Representation, nu: &Sq) -> LorentzBasis {
    let rot = [0, 1, 2].map(|a| lift(&rep.s[a]));
    let boost = [0, 1, 2].map(|a| {
        lift(&rep.eta[a])
            .sub(&lift(&rep.eta[a]).adjoint())
            .scale(nu)
    });
    LorentzBasis {
        dim: rep.dim,
        rot,
        boost,
        source: format!("galilei:{}", rep.label),
    }
}

/// The scale factor the closure lemma needs for each of the five rows it
/// covers: `1/sqrt2` for the rows whose boosts contain both off-diagonal
/// block families, `1` otherwise.
pub fn lemma_nu(label: RepLabel) -> Option<Sq> {
    let one = Sq::one();
    let inv_sqrt2 = Sq::inv_sqrt2();
    match label.to_string().as_str() {
        "D(1,1,0)" | "D(1,1,1)" | "D(2,0,0)" => Some(one),
        "D(1,2,1)" | "D(3,1,1)" => Some(inv_sqrt2),
        _ => None,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BuiltinLorentz {
    /// Three-dimensional: `S_ab = eps_abc s_c`, `S_0a = i s_a`.
    ThreeDim,
    /// Seven-dimensional block realization with sqrt2 entries.
    SevenDim,
    /// Eight-dimensional block realization.
    EightDim,
}

/// The printed explicit Lorentz realizations.
pub fn builtin_lorentz(which: BuiltinLorentz) -> LorentzBasis {
    let s3 = spin_one();
    let ks = k_rows();
    let i = Sq::i();
    let half = Sq::from(Gr::from_ratio(1, 2));
    let sqrt2 = Sq::sqrt2();
    match which {
        BuiltinLorentz::ThreeDim => LorentzBasis {
            dim: 3,
            rot: [0, 1, 2].map(|a| lift(&s3[a])),
            boost: [0, 1, 2].map(|a| lift(&s3[a]).scale(&i)),
            source: "lorentz:D(1,0)".into(),
        },
        BuiltinLorentz::SevenDim => {
            let rot = [0, 1, 2].map(|c| {
                Matrix::block_diag(&[lift(&s3[c]), lift(&s3[c]), Matrix::zeros(1, 1)])
            });
            let boost = [0, 1, 2].map(|a| {
                let sa = lift(&s3[a]);
                let ka = lift(&ks[a]);
                let ka_dag = lift(&ks[a].adjoint());
                let mut m: Matrix<Sq> = Matrix::zeros(7, 7);
                m.paste(0, 0, &sa.scale(&i));
                m.paste(0, 3, &sa.neg());
                m.paste(0, 6, &ka_dag.scale(&i.mul(&sqrt2)));
                m.paste(3, 0, &sa);
                m.paste(3, 3, &sa.scale(&i));
                m.paste(3, 6, &ka_dag.scale(&sqrt2).neg());
                m.paste(6, 0, &ka.scale(&i.mul(&sqrt2)));
                m.paste(6, 3, &ka.scale(&sqrt2));
                m.scale(&half)
            });
            LorentzBasis {
                dim: 7,
                rot,
                boost,
                source: "lorentz:D(1/2,1/2)+D(1,0)".into(),
            }
        }
        BuiltinLorentz::EightDim => {
            let rot = [0, 1, 2].map(|c| {
                Matrix::block_diag(&[
                    lift(&s3[c]),
                    lift(&s3[c]),
                    Matrix::zeros(2, 2),
                ])
            });
            let boost = [0, 1, 2].map(|a| {
                let sa = lift(&s3[a]);
                let ka = lift(&ks[a]);
                let ka_dag = lift(&ks[a].adjoint());
                let mut m: Matrix<Sq> = Matrix::zeros(8, 8);
                m.paste(0, 0, &sa.scale(&i));
                m.paste(0, 3, &sa.neg());
                m.paste(0, 6, &ka_dag.scale(&i));
                m.paste(0, 7, &ka_dag);
                m.paste(3, 0, &sa);
                m.paste(3, 3, &sa.scale(&i));
                m.paste(3, 6, &ka_dag.neg());
                m.paste(3, 7, &ka_dag.scale(&i));
                m.paste(6, 0, &ka.scale(&i));
                m.paste(6, 3, &ka);
                m.paste(7, 0, &ka.neg());
                m.paste(7, 3, &ka.scale(&i));
                m.scale(&half)
            });
            LorentzBasis {
                dim: 8,
                rot,
                boost,
                source: "lorentz:D(1/2,1/2)+D(0,0)+D(0,0)".into(),
            }
        }
    }
}

/// Verification outcome for one closure-lemma candidate.
#[derive(Clone, Debug, Serialize)]
pub struct LemmaOutcome {
    pub label: String,
    pub nu_is_inv_sqrt2: bool,
    pub closes: bool,
}

/// Runs the candidate construction for every vector catalog row with the
/// lemma's scale (default 1 where the lemma does not apply) and records
/// which close.
pub fn lemma_survey() -> Result<Vec<LemmaOutcome>> {
    let mut out = Vec::new();
    for &label in crate::catalog::VECTOR_LABELS.iter() {
        if label.to_string() == "D(0,0,0)" {
            continue;
        }
        let rep = crate::catalog::build_rep(label)?;
        let nu = lemma_nu(label).unwrap_or_else(Sq::one);
        let basis = lorentz_from_galilei(&rep, &nu);
        out.push(LemmaOutcome {
            label: label.to_string(),
            nu_is_inv_sqrt2: nu == Sq::inv_sqrt2(),
            closes: verify_lorentz(&basis).pass(),
        });
    }
    Ok(out)
}

/// Generic relation check for a Galilei generator pair over the extended
/// scalars, reusing the exact commutator bookkeeping.
pub fn verify_hg_sq(s: &[Matrix<Sq>; 3], eta: &[Matrix<Sq>; 3]) -> bool {
    for a in 0..3 {
        for b in 0..3 {
            if s[a].commutator(&s[b]) != eps_combo(s, a, b) {
                return false;
            }
            if eta[a].commutator(&s[b]) != eps_combo(eta, a, b) {
                return false;
            }
            if !eta[a].commutator(&eta[b]).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Rejects bases that fail closure, for use before contraction.
pub fn require_lorentz(basis: &LorentzBasis) -> Result<()> {
    let report = verify_lorentz(basis);
    if report.pass() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "{}: {} Lorentz relations violated",
            basis.source,
            report.violations.len()
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build_rep;

    #[test]
    fn builtin_bases_close() {
        for which in [
            BuiltinLorentz::ThreeDim,
            BuiltinLorentz::SevenDim,
            BuiltinLorentz::EightDim,
        ] {
            let basis = builtin_lorentz(which);
            let report = verify_lorentz(&basis);
            assert!(
                report.pass(),
                "{}: {} violations",
                basis.source,
                report.violations.len()
            );
        }
    }

    #[test]
    fn lemma_rows_close_and_others_fail() {
        let survey = lemma_survey().unwrap();
        for outcome in survey {
            let expected = matches!(
                outcome.label.as_str(),
                "D(1,1,0)" | "D(1,1,1)" | "D(1,2,1)" | "D(2,0,0)" | "D(3,1,1)"
            );
            assert_eq!(outcome.closes, expected, "{}", outcome.label);
        }
    }

    #[test]
    fn wrong_scale_fails() {
        // The five-dimensional row closes only with the 1/sqrt2 scale.
        let rep = build_rep("D(1,2,1)".parse().unwrap()).unwrap();
        let basis = lorentz_from_galilei(&rep, &Sq::one());
        assert!(!verify_lorentz(&basis).pass());
    }

    #[test]
    fn zero_basis_passes() {
        let z = || [0, 1, 2].map(|_| Matrix::<Sq>::zeros(2, 2));
        let basis = LorentzBasis {
            dim: 2,
            rot: z(),
            boost: z(),
            source: "zero".into(),
        };
        assert!(verify_lorentz(&basis).pass());
    }
}
