//! Inonu-Wigner contraction of Lorentz representations down to the
//! Galilei catalog, exactly in the contraction parameter.
//!
//! The procedure: rescale the boosts `S_0a -> eps^r S_0a`, conjugate all
//! generators by a parameter-dependent matrix `U(eps)`, and take the
//! parameter to zero entrywise. Everything runs over Laurent polynomials
//! so the limit is a coefficient extraction, not an approximation.

use crate::catalog::{build_rep, RepLabel};
use crate::classify::{generator_intertwiners, invertible_in_span};
use crate::error::Result;
use crate::laurent::{invert_monomial_matrix, laurent_limit, lift as laurent_lift, specialize, Laurent};
use crate::lorentz::{
    builtin_lorentz, lemma_nu, lift, lorentz_from_galilei, require_lorentz, verify_hg_sq,
    BuiltinLorentz, LorentzBasis,
};
use crate::matrix::Matrix;
use crate::scalar::{GaussianRational as Gr, Scalar, Sqrt2Rational as Sq};
use serde::Serialize;

/// A contraction scheme: the conjugating matrix as a Laurent matrix plus
/// the power of the parameter multiplying the boosts (default 1).
#[derive(Clone, Debug)]
pub struct ContractionScheme {
    pub u: Matrix<Laurent<Sq>>,
    pub boost_rescale_exponent: i64,
}

impl ContractionScheme {
    /// Diagonal scheme from per-entry parameter exponents.
    pub fn diagonal(exponents: &[i64]) -> Self {
        let n = exponents.len();
        let mut u = Matrix::zeros(n, n);
        for (k, &e) in exponents.iter().enumerate() {
            u.set(k, k, Laurent::eps(e));
        }
        ContractionScheme {
            u,
            boost_rescale_exponent: 1,
        }
    }

    pub fn identity(n: usize) -> Self {
        ContractionScheme {
            u: Matrix::identity(n),
            boost_rescale_exponent: 1,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ContractionOutcome {
    pub source: String,
    pub target: String,
    pub limit_exists: bool,
    /// The limit generators satisfy the Galilei defining relations.
    pub limit_satisfies_relations: bool,
    /// The limit equals the catalog row entry for entry.
    pub matches_exactly: bool,
    /// The limit is carried to the catalog row by an invertible
    /// intertwiner (recorded when not exact).
    pub matches_after_adjustment: bool,
    pub adjustment: Option<Matrix<Sq>>,
    /// Laurent conjugation specialized at eps in {1/2, 1/4, 1/8} equals
    /// the direct numeric conjugation at the same value, exactly.
    pub specialization_consistent: bool,
    /// Entrywise float distance of the specialization at eps = 10^-k
    /// (k = 3..8) from the limit stays below 10*eps.
    pub numeric_limit_consistent: bool,
}

impl ContractionOutcome {
    pub fn pass(&self) -> bool {
        self.limit_exists
            && self.limit_satisfies_relations
            && (self.matches_exactly || self.matches_after_adjustment)
            && self.specialization_consistent
            && self.numeric_limit_consistent
    }
}

/// Conjugated, rescaled generators as Laurent matrices.
fn transformed_generators(
    basis: &LorentzBasis,
    scheme: &ContractionScheme,
) -> Result<([Matrix<Laurent<Sq>>; 3], [Matrix<Laurent<Sq>>; 3])> {
    let u = &scheme.u;
    let u_inv = invert_monomial_matrix(u)?;
    let rescale: Laurent<Sq> = Laurent::eps(scheme.boost_rescale_exponent);
    let rot = [0, 1, 2].map(|a| u.mul(&laurent_lift(&basis.rot[a])).mul(&u_inv));
    let boost = [0, 1, 2].map(|a| {
        u.mul(&laurent_lift(&basis.boost[a]).scale(&rescale))
            .mul(&u_inv)
    });
    Ok((rot, boost))
}

/// Runs one contraction and compares the limit against a catalog row.
pub fn contract(
    basis: &LorentzBasis,
    scheme: &ContractionScheme,
    target: RepLabel,
) -> Result<ContractionOutcome> {
    let (rot_l, boost_l) = transformed_generators(basis, scheme)?;
    let mut outcome = ContractionOutcome {
        source: basis.source.clone(),
        target: target.to_string(),
        limit_exists: false,
        limit_satisfies_relations: false,
        matches_exactly: false,
        matches_after_adjustment: false,
        adjustment: None,
        specialization_consistent: false,
        numeric_limit_consistent: false,
    };
    let mut rot = Vec::new();
    let mut boost = Vec::new();
    for a in 0..3 {
        match (laurent_limit(&rot_l[a]), laurent_limit(&boost_l[a])) {
            (Ok(r), Ok(b)) => {
                rot.push(r);
                boost.push(b);
            }
            _ => return Ok(outcome),
        }
    }
    outcome.limit_exists = true;
    let rot: [Matrix<Sq>; 3] = rot.try_into().unwrap();
    let boost: [Matrix<Sq>; 3] = boost.try_into().unwrap();
    outcome.limit_satisfies_relations = verify_hg_sq(&rot, &boost);

    let cat = build_rep(target)?;
    let cat_s = [0, 1, 2].map(|a| lift(&cat.s[a]));
    let cat_eta = [0, 1, 2].map(|a| lift(&cat.eta[a]));
    if cat.dim == basis.dim {
        outcome.matches_exactly = (0..3).all(|a| rot[a] == cat_s[a] && boost[a] == cat_eta[a]);
        if !outcome.matches_exactly && outcome.limit_satisfies_relations {
            let space = generator_intertwiners(&rot, &boost, &cat_s, &cat_eta);
            if let Some(x) = invertible_in_span(&space, 200_000) {
                outcome.matches_after_adjustment = true;
                outcome.adjustment = Some(x);
            }
        }
    }

    // Exact specialization cross-check at eps in {1/2, 1/4, 1/8}.
    outcome.specialization_consistent = [2i64, 4, 8].iter().all(|&den| {
        let eps = Sq::from(Gr::from_ratio(1, den));
        let u_num = specialize(&scheme.u, &eps);
        let Ok(u_num_inv) = u_num.inverse() else {
            return false;
        };
        let mut scale = Sq::one();
        let e = scheme.boost_rescale_exponent;
        for _ in 0..e.unsigned_abs() {
            scale = scale.mul(&eps);
        }
        if e < 0 {
            scale = scale.inv().unwrap();
        }
        (0..3).all(|a| {
            let direct_rot = u_num.mul(&basis.rot[a]).mul(&u_num_inv);
            let direct_boost = u_num
                .mul(&basis.boost[a].scale(&scale))
                .mul(&u_num_inv);
            direct_rot == specialize(&rot_l[a], &eps) && direct_boost == specialize(&boost_l[a], &eps)
        })
    });

    // Numeric convergence: |specialized - limit| <= 10 * eps entrywise.
    outcome.numeric_limit_consistent = (3..=8u32).all(|k| {
        let eps_f = 10f64.powi(-(k as i32));
        let eps = Sq::from(Gr::from_ratio(1, 10i64.pow(k)));
        (0..3).all(|a| {
            let spec = specialize(&boost_l[a], &eps);
            let mut worst: f64 = 0.0;
            for (r, c, v) in spec.entries() {
                let lim = boost[a].get(r, c).to_c64();
                worst = worst.max((v.to_c64() - lim).norm());
            }
            worst <= 10.0 * eps_f
        })
    });

    Ok(outcome)
}

/// One row of the contraction table: a Lorentz basis, the scheme, and the
/// Galilei row it contracts to.
pub struct ContractionRow {
    pub target: RepLabel,
    pub basis: LorentzBasis,
    pub scheme: ContractionScheme,
}

/// The nine contraction rows (every nontrivial catalog vector row).
pub fn contraction_rows() -> Result<Vec<ContractionRow>> {
    let lemma = |name: &str| -> Result<LorentzBasis> {
        let label: RepLabel = name.parse()?;
        let rep = build_rep(label)?;
        let nu = lemma_nu(label).expect("lemma row");
        let basis = lorentz_from_galilei(&rep, &nu);
        require_lorentz(&basis)?;
        Ok(basis)
    };
    let mut rows = Vec::new();
    let mut push = |target: &str, basis: LorentzBasis, exps: Vec<i64>| -> Result<()> {
        rows.push(ContractionRow {
            target: target.parse()?,
            basis,
            scheme: ContractionScheme::diagonal(&exps),
        });
        Ok(())
    };
    push(
        "D(1,0,0)",
        builtin_lorentz(BuiltinLorentz::ThreeDim),
        vec![0, 0, 0],
    )?;
    push("D(1,1,0)", lemma("D(1,1,0)")?, vec![0, 0, 0, -1])?;
    push("D(1,1,1)", lemma("D(1,1,1)")?, vec![0, 0, 0, 1])?;
    push("D(1,2,1)", lemma("D(1,2,1)")?, vec![0, 0, 0, 1, -1])?;
    push(
        "D(2,0,0)",
        lemma("D(2,0,0)")?,
        vec![0, 0, 0, -1, -1, -1],
    )?;
    push(
        "D(2,1,0)",
        builtin_lorentz(BuiltinLorentz::SevenDim),
        vec![0, 0, 0, -1, -1, -1, -1],
    )?;
    push(
        "D(2,1,1)",
        builtin_lorentz(BuiltinLorentz::SevenDim),
        vec![0, 0, 0, 1, 1, 1, 1],
    )?;
    push(
        "D(2,2,1)",
        builtin_lorentz(BuiltinLorentz::EightDim),
        vec![0, 0, 0, -1, -1, -1, 0, -1],
    )?;
    push(
        "D(3,1,1)",
        lemma("D(3,1,1)")?,
        vec![0, 0, 0, -1, -1, -1, -2, -2, -2, -1],
    )?;
    Ok(rows)
}

/// Contracts every table row; reports in row order.
pub fn run_all() -> Result<Vec<ContractionOutcome>> {
    contraction_rows()?
        .iter()
        .map(|row| contract(&row.basis, &row.scheme, row.target))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_rows_contract_to_their_targets() {
        for outcome in run_all().unwrap() {
            assert!(outcome.pass(), "{outcome:?}");
        }
    }

    #[test]
    fn four_dim_row_is_exact() {
        // diag(1,1,1,eps) on the four-dimensional basis lands exactly on
        // the catalog matrices, no adjustment needed.
        let rows = contraction_rows().unwrap();
        let row = rows.iter().find(|r| r.target.to_string() == "D(1,1,1)").unwrap();
        let outcome = contract(&row.basis, &row.scheme, row.target).unwrap();
        assert!(outcome.matches_exactly, "{outcome:?}");
    }

    #[test]
    fn seven_dim_rows_need_adjustment() {
        // The printed 7-dim conjugators land on rescaled block entries;
        // the recorded intertwiner absorbs the scale.
        let rows = contraction_rows().unwrap();
        for name in ["D(2,1,0)", "D(2,1,1)"] {
            let row = rows.iter().find(|r| r.target.to_string() == name).unwrap();
            let outcome = contract(&row.basis, &row.scheme, row.target).unwrap();
            assert!(!outcome.matches_exactly, "{name}");
            assert!(outcome.matches_after_adjustment, "{name}: {outcome:?}");
        }
    }

    #[test]
    fn undefined_contraction_is_reported() {
        // Inverting the rescale direction leaves poles: eps^-1 survives.
        let rows = contraction_rows().unwrap();
        let row = rows.iter().find(|r| r.target.to_string() == "D(1,1,1)").unwrap();
        let mut scheme = row.scheme.clone();
        scheme.boost_rescale_exponent = -1;
        let outcome = contract(&row.basis, &scheme, row.target).unwrap();
        assert!(!outcome.limit_exists);
    }

    #[test]
    fn identity_scheme_gives_degenerate_boosts() {
        // With U = I the rescaled boosts vanish in the limit: a valid but
        // non-faithful outcome that fails the target comparison.
        let label: RepLabel = "D(2,0,0)".parse().unwrap();
        let rep = build_rep(label).unwrap();
        let basis = lorentz_from_galilei(&rep, &Sq::one());
        let scheme = ContractionScheme::identity(rep.dim);
        let outcome = contract(&basis, &scheme, label).unwrap();
        assert!(outcome.limit_exists);
        assert!(outcome.limit_satisfies_relations);
        assert!(!outcome.matches_exactly);
        assert!(!outcome.matches_after_adjustment);
    }
}
