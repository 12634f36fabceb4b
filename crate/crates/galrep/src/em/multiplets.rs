//! Matrix multiplets: the five-vector of Dirac-type matrices, the matrix
//! tensor of their commutators, and the sub-multiplets they contain.
//!
//! There are two printed conventions for the four-dimensional matrices: an
//! abstract definition through genuine (4+1)-dimensional Dirac matrices,
//! and the explicit light-cone set of `beta.rs`. They are not scalar
//! multiples of one another (their anticommutator normalizations differ),
//! so this module builds the Dirac-side objects explicitly, verifies every
//! claim there, and *also* records that plugging the explicit light-cone
//! set into the same formulas does not satisfy the algebra: a surfaced
//! inconsistency, not a silent repair.

use super::beta::{beta_matrices, BetaSet};
use crate::catalog::{build_rep, eps, RepLabel};
use crate::classify::{generator_intertwiners, invertible_in_span};
use crate::linsolve::{null_space, rank};
use crate::lorentz::lift;
use crate::matrix::Matrix;
use crate::scalar::{GaussianRational as Gr, Scalar, Sqrt2Rational as Sq};
use serde::Serialize;

/// Genuine (4+1)-dimensional Dirac matrices:
/// `gamma_0 = diag(I, -I)`, `gamma_a = [[0, sigma_a], [-sigma_a, 0]]`,
/// `gamma_4 = i gamma_5`, so `gamma_mu gamma_nu + gamma_nu gamma_mu =
/// 2 diag(1, -1, -1, -1, -1)`.
pub fn dirac_gammas() -> [Matrix<Sq>; 5] {
    let p: Vec<Matrix<Sq>> = crate::catalog::pauli()
        .iter()
        .map(|m| m.map(|e: &Gr| Sq::from(e.clone())))
        .collect();
    let i = Sq::i();
    let mut g0: Matrix<Sq> = Matrix::zeros(4, 4);
    g0.paste(0, 0, &Matrix::identity(2));
    g0.paste(2, 2, &Matrix::identity(2).neg());
    let ga = [0, 1, 2].map(|a| {
        let mut m: Matrix<Sq> = Matrix::zeros(4, 4);
        m.paste(0, 2, &p[a]);
        m.paste(2, 0, &p[a].neg());
        m
    });
    let mut g5: Matrix<Sq> = Matrix::zeros(4, 4);
    g5.paste(0, 2, &Matrix::identity(2));
    g5.paste(2, 0, &Matrix::identity(2));
    let g4 = g5.scale(&i);
    [g0, ga[0].clone(), ga[1].clone(), ga[2].clone(), g4]
}

/// The five-vector built from the Dirac matrices:
/// `psi = beta_0 = sqrt2 (gamma_0 + gamma_4)`, `U_a = beta_a = gamma_a`,
/// `C = beta_4 = sqrt2 (gamma_0 - gamma_4)`.
pub fn dirac_beta_set() -> BetaSet {
    let g = dirac_gammas();
    let sqrt2 = Sq::sqrt2();
    BetaSet {
        b0: g[0].add(&g[4]).scale(&sqrt2),
        ba: [g[1].clone(), g[2].clone(), g[3].clone()],
        b4: g[0].sub(&g[4]).scale(&sqrt2),
    }
}

/// The Galilei generators carried by the Dirac matrices:
/// `S_a = (i/4) eps_abc gamma_b gamma_c`,
/// `eta_a = (1/(2 sqrt2)) (gamma_0 + gamma_4) gamma_a`.
///
/// The rotation coefficient carries the imaginary unit: with a bare 1/4
/// the rotation algebra does not close (checked in
/// `quarter_without_imaginary_unit_fails`); `i/4` is the standard
/// normalization and reproduces every claimed identity.
pub fn matrix_generators() -> ([Matrix<Sq>; 3], [Matrix<Sq>; 3]) {
    let g = dirac_gammas();
    generators_from(&g, true)
}

fn generators_from(g: &[Matrix<Sq>; 5], with_i: bool) -> ([Matrix<Sq>; 3], [Matrix<Sq>; 3]) {
    let quarter = if with_i {
        Sq::i().mul(&Sq::from(Gr::from_ratio(1, 4)))
    } else {
        Sq::from(Gr::from_ratio(1, 4))
    };
    let coeff = Sq::inv_sqrt2().mul(&Sq::from(Gr::from_ratio(1, 2)));
    let s = [0, 1, 2].map(|a| {
        let mut acc: Matrix<Sq> = Matrix::zeros(4, 4);
        for b in 0..3 {
            for c in 0..3 {
                let e = eps(a, b, c);
                if e != 0 {
                    acc = acc.add(&g[1 + b].mul(&g[1 + c]).scale(&Sq::from_int(e)));
                }
            }
        }
        acc.scale(&quarter)
    });
    let lightcone = g[0].add(&g[4]);
    let eta = [0, 1, 2].map(|a| lightcone.mul(&g[1 + a]).scale(&coeff));
    (s, eta)
}

/// The displayed quarter-coefficient without the imaginary unit.
pub fn matrix_generators_bare_quarter() -> ([Matrix<Sq>; 3], [Matrix<Sq>; 3]) {
    let g = dirac_gammas();
    generators_from(&g, false)
}

/// Same formulas applied to the explicit light-cone set as if its members
/// were the Dirac matrices.
pub fn generators_from_lightcone_set() -> ([Matrix<Sq>; 3], [Matrix<Sq>; 3]) {
    let b = beta_matrices();
    let g = [
        b.b0.clone(),
        b.ba[0].clone(),
        b.ba[1].clone(),
        b.ba[2].clone(),
        b.b4.clone(),
    ];
    generators_from(&g, true)
}

/// Expands a target in the span of `basis` (vectorized, exact);
/// `None` when not in the span.
fn expand_in_span(basis: &[Matrix<Sq>], target: &Matrix<Sq>) -> Option<Vec<Sq>> {
    // Solve sum c_t basis_t = target by null space of the augmented set:
    // coefficients (c, -1) in the kernel with last coordinate normalized.
    let k = basis.len();
    let dim = target.nrows() * target.ncols();
    let mut rows: Vec<Vec<Sq>> = Vec::with_capacity(dim);
    for idx in 0..dim {
        let (r, c) = (idx / target.ncols(), idx % target.ncols());
        let mut row: Vec<Sq> = basis.iter().map(|b| b.get(r, c).clone()).collect();
        row.push(target.get(r, c).clone());
        rows.push(row);
    }
    let kernel = null_space(rows, k + 1);
    for v in kernel {
        if let Some(last_inv) = v[k].inv() {
            let coeffs: Vec<Sq> = v[..k].iter().map(|c| c.mul(&last_inv).neg()).collect();
            return Some(coeffs);
        }
    }
    None
}

#[derive(Clone, Debug, Serialize)]
pub struct FiveVectorReport {
    /// The generator formulas close the Galilei algebra on the Dirac side.
    pub dirac_generators_close: bool,
    /// The same formulas applied to the light-cone set do not close;
    /// recorded as data.
    pub lightcone_formulas_close: bool,
    /// The five matrices are linearly independent.
    pub beta_span_dim: usize,
    /// Commutator action `[S_a, beta_mu]`, `[eta_a, beta_mu]` stays in the
    /// span.
    pub adjoint_closes: bool,
    /// The five-dimensional adjoint action satisfies the Galilei algebra.
    pub adjoint_satisfies_relations: bool,
    /// Equivalent to the five-dimensional catalog row.
    pub adjoint_matches_five_vector: bool,
    /// The invariant-scalar slot of the multiplet is boost-inert:
    /// `[eta_a, beta_0] = 0`. (Under the printed identification the
    /// `beta_0` member carries the potential component that boosts leave
    /// fixed; the opposite slot `beta_4` transforms, which
    /// `c_slot_transforms` records.)
    pub psi_slot_invariant: bool,
    pub c_slot_transforms: bool,
}

impl FiveVectorReport {
    pub fn pass(&self) -> bool {
        self.dirac_generators_close
            && self.beta_span_dim == 5
            && self.adjoint_closes
            && self.adjoint_satisfies_relations
            && self.adjoint_matches_five_vector
            && self.psi_slot_invariant
            && self.c_slot_transforms
            // the light-cone shortcut failing is part of the record
            && !self.lightcone_formulas_close
    }
}

/// Adjoint action matrices of generators on a list of span matrices:
/// `[G, X_j] = sum_i ad[i][j] X_i`. Returns `None` if the span does not
/// close.
fn adjoint_action(
    generators: &[Matrix<Sq>],
    span: &[Matrix<Sq>],
) -> Option<Vec<Matrix<Sq>>> {
    let k = span.len();
    let mut out = Vec::new();
    for g in generators {
        let mut ad = Matrix::zeros(k, k);
        for (j, x) in span.iter().enumerate() {
            let image = g.commutator(x);
            let coeffs = expand_in_span(span, &image)?;
            for (i, c) in coeffs.into_iter().enumerate() {
                ad.set(i, j, c);
            }
        }
        out.push(ad);
    }
    Some(out)
}

fn span_rank(mats: &[Matrix<Sq>]) -> usize {
    let rows: Vec<Vec<Sq>> = mats.iter().map(|m| m.vectorize()).collect();
    rank(rows)
}

/// Runs the five-vector checks.
pub fn five_vector_check() -> FiveVectorReport {
    let (s, eta) = matrix_generators();
    let dirac_generators_close = crate::lorentz::verify_hg_sq(&s, &eta);
    let (s_lc, eta_lc) = generators_from_lightcone_set();
    let lightcone_formulas_close = crate::lorentz::verify_hg_sq(&s_lc, &eta_lc);

    let b = dirac_beta_set();
    let span = vec![
        b.b0.clone(),
        b.ba[0].clone(),
        b.ba[1].clone(),
        b.ba[2].clone(),
        b.b4.clone(),
    ];
    let beta_span_dim = span_rank(&span);
    let gens: Vec<Matrix<Sq>> = s.iter().chain(eta.iter()).cloned().collect();
    let ad = adjoint_action(&gens, &span);
    let (adjoint_closes, adjoint_satisfies_relations, adjoint_matches_five_vector) = match ad {
        None => (false, false, false),
        Some(ad) => {
            let ad_s: [Matrix<Sq>; 3] = [ad[0].clone(), ad[1].clone(), ad[2].clone()];
            let ad_eta: [Matrix<Sq>; 3] = [ad[3].clone(), ad[4].clone(), ad[5].clone()];
            let rel = crate::lorentz::verify_hg_sq(&ad_s, &ad_eta);
            let label: RepLabel = "D(1,2,1)".parse().unwrap();
            let cat = build_rep(label).unwrap();
            let cat_s = [0, 1, 2].map(|a| lift(&cat.s[a]));
            let cat_eta = [0, 1, 2].map(|a| lift(&cat.eta[a]));
            let space = generator_intertwiners(&ad_s, &ad_eta, &cat_s, &cat_eta);
            let matched = invertible_in_span(&space, 200_000).is_some();
            (true, rel, matched)
        }
    };
    let psi_slot_invariant = (0..3).all(|a| eta[a].commutator(&b.b0).is_zero());
    let c_slot_transforms = (0..3).any(|a| !eta[a].commutator(&b.b4).is_zero());
    FiveVectorReport {
        dirac_generators_close,
        lightcone_formulas_close,
        beta_span_dim,
        adjoint_closes,
        adjoint_satisfies_relations,
        adjoint_matches_five_vector,
        psi_slot_invariant,
        c_slot_transforms,
    }
}

/// The matrix tensor `S_mn = beta_m beta_n - beta_n beta_m` and its
/// sub-multiplets.
///
/// Because the multiplet identification sends `beta_0` to the slot the
/// boosts leave fixed, the tensor component families sort by their boost
/// behaviour as
///   `[beta_0, beta_a]` (inert, gradient-type), `[beta_0, beta_4]`
///   (gains the gradient family), `[beta_a, beta_b]` (curl-type, gains
///   the gradient family), `[beta_4, beta_a]` (maximal, gains the other
///   two).
/// The printed sub-multiplet lists close when their vector families are
/// read against this behaviour; each list's closing orientation and the
/// representation type it carries are recorded.
#[derive(Clone, Debug, Serialize)]
pub struct TensorReport {
    /// The ten independent components span a ten-dimensional space.
    pub tensor_span_dim: usize,
    /// Adjoint action closes on the span.
    pub adjoint_closes: bool,
    /// The ten-dimensional adjoint action satisfies the Galilei algebra
    /// and matches the ten-vector catalog row.
    pub adjoint_satisfies_relations: bool,
    pub adjoint_matches_ten_vector: bool,
    /// Sub-multiplet closure: four-, six- and seven-component families.
    pub sub4_closes: bool,
    pub sub6_closes: bool,
    pub sub7_closes: bool,
    /// The closed seven-dimensional family (gradient + curl + scalar
    /// slots) carries the second seven-vector row: in the coefficient
    /// action the gradient components gain from the others, which is the
    /// `K` slot of that row.
    pub sub7_matches_second_seven_vector: bool,
    /// The alternative seven-component reading (maximal + curl + scalar)
    /// does not close; recorded as data. The field-theoretic version of
    /// that multiplet needs the gradient family constrained to zero,
    /// which has no matrix analogue.
    pub maximal_seven_span_closes: bool,
}

impl TensorReport {
    pub fn pass(&self) -> bool {
        self.tensor_span_dim == 10
            && self.adjoint_closes
            && self.adjoint_satisfies_relations
            && self.adjoint_matches_ten_vector
            && self.sub4_closes
            && self.sub6_closes
            && self.sub7_closes
            && self.sub7_matches_second_seven_vector
            && !self.maximal_seven_span_closes
    }
}

/// `S_mn` for the Dirac-side beta set.
pub fn matrix_tensor(b: &BetaSet) -> Vec<Vec<Matrix<Sq>>> {
    (0..5)
        .map(|mu| (0..5).map(|nu| b.get(mu).commutator(b.get(nu))).collect())
        .collect()
}

fn closes_under(generators: &[Matrix<Sq>], span: &[Matrix<Sq>]) -> bool {
    adjoint_action(generators, span).is_some()
}

/// The four component families, ordered as (gradient, curl, maximal,
/// scalar): `t[0][a]`, curl combinations, `t[4][a]`, and `t[0][4]`.
pub fn tensor_families(t: &[Vec<Matrix<Sq>>]) -> (Vec<Matrix<Sq>>, Vec<Matrix<Sq>>, Vec<Matrix<Sq>>, Matrix<Sq>) {
    let gradient: Vec<Matrix<Sq>> = (1..=3).map(|a| t[0][a].clone()).collect();
    let curl: Vec<Matrix<Sq>> = (0..3)
        .map(|c| {
            let mut acc: Matrix<Sq> = Matrix::zeros(4, 4);
            for a in 0..3 {
                for bb in 0..3 {
                    let e = eps(c, a, bb);
                    if e != 0 {
                        acc = acc.add(&t[1 + a][1 + bb].scale(&Sq::from_int(e)));
                    }
                }
            }
            acc.scale(&Sq::from(Gr::from_ratio(1, 2)))
        })
        .collect();
    let maximal: Vec<Matrix<Sq>> = (1..=3).map(|a| t[4][a].clone()).collect();
    let scalar = t[0][4].clone();
    (gradient, curl, maximal, scalar)
}

pub fn tensor_multiplet_check() -> TensorReport {
    let (s, eta) = matrix_generators();
    let b = dirac_beta_set();
    let t = matrix_tensor(&b);
    let (grad, curl, maximal, scalar) = tensor_families(&t);

    // Ten-vector order (R, W, N, B) by boost behaviour.
    let mut span10: Vec<Matrix<Sq>> = Vec::new();
    span10.extend(grad.iter().cloned());
    span10.extend(curl.iter().cloned());
    span10.extend(maximal.iter().cloned());
    span10.push(scalar.clone());
    let tensor_span_dim = span_rank(&span10);

    let gens: Vec<Matrix<Sq>> = s.iter().chain(eta.iter()).cloned().collect();
    let ad = adjoint_action(&gens, &span10);
    let (adjoint_closes, adjoint_satisfies_relations, adjoint_matches_ten_vector) = match ad {
        None => (false, false, false),
        Some(ad) => {
            let ad_s: [Matrix<Sq>; 3] = [ad[0].clone(), ad[1].clone(), ad[2].clone()];
            let ad_eta: [Matrix<Sq>; 3] = [ad[3].clone(), ad[4].clone(), ad[5].clone()];
            let rel = crate::lorentz::verify_hg_sq(&ad_s, &ad_eta);
            let cat = build_rep("D(3,1,1)".parse().unwrap()).unwrap();
            let cat_s = [0, 1, 2].map(|a| lift(&cat.s[a]));
            let cat_eta = [0, 1, 2].map(|a| lift(&cat.eta[a]));
            let space = generator_intertwiners(&ad_s, &ad_eta, &cat_s, &cat_eta);
            let matched = invertible_in_span(&space, 200_000).is_some();
            (true, rel, matched)
        }
    };

    // Sub-multiplets: vector family + scalar; curl + vector families;
    // gradient + curl + scalar (the closed seven-dimensional span).
    let sub4: Vec<Matrix<Sq>> = grad.iter().cloned().chain([scalar.clone()]).collect();
    let sub6: Vec<Matrix<Sq>> = curl.iter().cloned().chain(grad.iter().cloned()).collect();
    let sub7: Vec<Matrix<Sq>> = grad
        .iter()
        .cloned()
        .chain(curl.iter().cloned())
        .chain([scalar.clone()])
        .collect();
    let sub4_closes = closes_under(&gens, &sub4);
    let sub6_closes = closes_under(&gens, &sub6);
    let sub7_closes = closes_under(&gens, &sub7);
    let alt7: Vec<Matrix<Sq>> = maximal
        .iter()
        .cloned()
        .chain(curl.iter().cloned())
        .chain([scalar.clone()])
        .collect();
    let maximal_seven_span_closes = closes_under(&gens, &alt7);

    let sub7_matches_second_seven_vector = match adjoint_action(&gens, &sub7) {
        None => false,
        Some(ad) => {
            let ad_s: [Matrix<Sq>; 3] = [ad[0].clone(), ad[1].clone(), ad[2].clone()];
            let ad_eta: [Matrix<Sq>; 3] = [ad[3].clone(), ad[4].clone(), ad[5].clone()];
            let cat = build_rep("D(2,1,1)".parse().unwrap()).unwrap();
            let cat_s = [0, 1, 2].map(|a| lift(&cat.s[a]));
            let cat_eta = [0, 1, 2].map(|a| lift(&cat.eta[a]));
            let space = generator_intertwiners(&ad_s, &ad_eta, &cat_s, &cat_eta);
            invertible_in_span(&space, 200_000).is_some()
        }
    };

    TensorReport {
        tensor_span_dim,
        adjoint_closes,
        adjoint_satisfies_relations,
        adjoint_matches_ten_vector,
        sub4_closes,
        sub6_closes,
        sub7_closes,
        sub7_matches_second_seven_vector,
        maximal_seven_span_closes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dirac_clifford_relations() {
        let g = dirac_gammas();
        let metric = [1i64, -1, -1, -1, -1];
        for mu in 0..5 {
            for nu in 0..5 {
                let anti = g[mu].anticommutator(&g[nu]);
                let expect = if mu == nu {
                    Matrix::identity(4).scale(&Sq::from_int(2 * metric[mu]))
                } else {
                    Matrix::zeros(4, 4)
                };
                assert_eq!(anti, expect, "mu={mu} nu={nu}");
            }
        }
    }

    #[test]
    fn five_vector_report_passes() {
        let report = five_vector_check();
        assert!(report.pass(), "{report:?}");
    }

    #[test]
    fn quarter_without_imaginary_unit_fails() {
        let (s, eta) = matrix_generators_bare_quarter();
        assert!(!crate::lorentz::verify_hg_sq(&s, &eta));
    }

    #[test]
    fn rotation_action_pattern() {
        // [S_3, beta_1] = i beta_2: the vector slots rotate into each other.
        let (s, _) = matrix_generators();
        let b = dirac_beta_set();
        let lhs = s[2].commutator(&b.ba[0]);
        assert_eq!(lhs, b.ba[1].scale(&Sq::i()));
    }

    #[test]
    fn tensor_report_passes() {
        let report = tensor_multiplet_check();
        assert!(report.pass(), "{report:?}");
    }

    #[test]
    fn tensor_antisymmetry() {
        let b = dirac_beta_set();
        let t = matrix_tensor(&b);
        for mu in 0..5 {
            for nu in 0..5 {
                assert_eq!(t[mu][nu], t[nu][mu].neg());
            }
        }
    }

    #[test]
    fn gradient_slots_are_boost_invariant() {
        // The gradient family [beta_0, beta_a] commutes with every boost
        // generator, matching the boost-inert slots of the ten-vector.
        let (_, eta) = matrix_generators();
        let b = dirac_beta_set();
        let t = matrix_tensor(&b);
        let (grad, _, _, _) = tensor_families(&t);
        for g in &grad {
            for e in &eta {
                assert!(e.commutator(g).is_zero());
            }
        }
    }
}
