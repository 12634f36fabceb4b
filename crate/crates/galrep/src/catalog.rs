//! The catalog of indecomposable hg(1,3) representations on spin 0, 1/2
//! and 1 carrier spaces: construction, defining-relation verification,
//! numeric invariants, and finite boost/rotation transformations.
//!
//! A representation is a triple of rotation generators `S_a` and a triple
//! of commuting boost generators `eta_a` with
//!   [S_a, S_b] = i eps_abc S_c,
//!   [eta_a, S_b] = i eps_abc eta_c,
//!   [eta_a, eta_b] = 0.
//! Vector representations are labelled `D(n, m, lambda)`: `n` spin-1
//! blocks, `m` scalar slots (as printed in the source table; the trivial
//! scalar representation is labelled `D(0,0,0)` although it occupies one
//! slot), and `lambda` a 0/1 invariant separating otherwise identical
//! block counts.

pub mod laws;
pub mod rotation;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ops;
use crate::scalar::{GaussianRational as Gr, Scalar};
use num_rational::BigRational;
use serde::Serialize;
use std::fmt;

/// Label of a catalog representation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum RepLabel {
    /// A vector-kind row `D(n, m, lambda)`.
    Vector { n: u8, m: u8, lambda: u8 },
    /// The irreducible spin-1/2 representation (boosts act trivially).
    SpinorIrreducible,
    /// The four-dimensional indecomposable spin-1/2 representation.
    SpinorBispinor,
}

impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepLabel::Vector { n, m, lambda } => write!(f, "D({n},{m},{lambda})"),
            RepLabel::SpinorIrreducible => write!(f, "spinor"),
            RepLabel::SpinorBispinor => write!(f, "bispinor"),
        }
    }
}

impl Serialize for RepLabel {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

/// The ten vector rows in canonical order.
pub const VECTOR_LABELS: [RepLabel; 10] = [
    RepLabel::Vector { n: 0, m: 0, lambda: 0 },
    RepLabel::Vector { n: 1, m: 0, lambda: 0 },
    RepLabel::Vector { n: 1, m: 1, lambda: 0 },
    RepLabel::Vector { n: 1, m: 1, lambda: 1 },
    RepLabel::Vector { n: 1, m: 2, lambda: 1 },
    RepLabel::Vector { n: 2, m: 0, lambda: 0 },
    RepLabel::Vector { n: 2, m: 1, lambda: 0 },
    RepLabel::Vector { n: 2, m: 1, lambda: 1 },
    RepLabel::Vector { n: 2, m: 2, lambda: 1 },
    RepLabel::Vector { n: 3, m: 1, lambda: 1 },
];

pub fn all_labels() -> Vec<RepLabel> {
    let mut v = VECTOR_LABELS.to_vec();
    v.push(RepLabel::SpinorIrreducible);
    v.push(RepLabel::SpinorBispinor);
    v
}

impl std::str::FromStr for RepLabel {
    type Err = Error;

    /// Parses `D(n,m,l)` plus the legacy aliases: `D(3,1,2)` for
    /// `D(3,1,1)` (the same row appears under both names in the source;
    /// the lambda oracle fixes the label), and `D_k` for the k-th row of
    /// the table (`D_5` = `D(1,2,1)`, `D_7` = `D(2,1,0)`, `D_8` =
    /// `D(2,1,1)`), and `spinor`/`bispinor`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let lower = t.to_ascii_lowercase();
        match lower.as_str() {
            "spinor" => return Ok(RepLabel::SpinorIrreducible),
            "bispinor" => return Ok(RepLabel::SpinorBispinor),
            _ => {}
        }
        if let Some(idx) = lower.strip_prefix("d_") {
            let k: usize = idx
                .parse()
                .map_err(|_| Error::UnknownLabel(s.to_string()))?;
            if (1..=10).contains(&k) {
                return Ok(VECTOR_LABELS[k - 1]);
            }
            return Err(Error::UnknownLabel(s.to_string()));
        }
        let inner = lower
            .strip_prefix("d(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::UnknownLabel(s.to_string()))?;
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::UnknownLabel(s.to_string()));
        }
        let nums: Vec<u8> = parts
            .iter()
            .map(|p| p.parse::<u8>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::UnknownLabel(s.to_string()))?;
        let (n, m, lambda) = (nums[0], nums[1], nums[2]);
        // Alias: the printed heading D(3,1,2) refers to the D(3,1,1) row.
        let lambda = if (n, m, lambda) == (3, 1, 2) { 1 } else { lambda };
        let label = RepLabel::Vector { n, m, lambda };
        if VECTOR_LABELS.contains(&label) {
            Ok(label)
        } else {
            Err(Error::UnknownLabel(s.to_string()))
        }
    }
}

/// Finite-boost parameters: velocity, central-charge mass and the phase
/// constant. The mass and phase enter only through a scalar phase factor
/// which cancels in every sesquilinear check, so matrix level operations
/// depend on `v` alone.
#[derive(Clone, Debug)]
pub struct BoostParams {
    pub v: [GrRational; 3],
    pub m: GrRational,
    pub c: GrRational,
}

pub type GrRational = BigRational;

/// A catalog representation: dimension plus generator triples.
#[derive(Clone, Debug)]
pub struct Representation {
    pub label: RepLabel,
    pub dim: usize,
    pub s: [Matrix<Gr>; 3],
    pub eta: [Matrix<Gr>; 3],
}

/// The three spin-1 matrices.
pub fn spin_one() -> [Matrix<Gr>; 3] {
    let i = Gr::i();
    let mi = i.neg();
    let z = Gr::zero();
    [
        Matrix::from_rows(vec![
            vec![z.clone(), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), mi.clone()],
            vec![z.clone(), i.clone(), z.clone()],
        ]),
        Matrix::from_rows(vec![
            vec![z.clone(), z.clone(), i.clone()],
            vec![z.clone(), z.clone(), z.clone()],
            vec![mi.clone(), z.clone(), z.clone()],
        ]),
        Matrix::from_rows(vec![
            vec![z.clone(), mi, z.clone()],
            vec![i, z.clone(), z.clone()],
            vec![z.clone(), z.clone(), z],
        ]),
    ]
}

/// The three row matrices `k_a = (i e_a)^T`, shape 1x3.
pub fn k_rows() -> [Matrix<Gr>; 3] {
    let mk = |a: usize| {
        Matrix::from_fn(1, 3, |_, c| if c == a { Gr::i() } else { Gr::zero() })
    };
    [mk(0), mk(1), mk(2)]
}

/// The Pauli matrices.
pub fn pauli() -> [Matrix<Gr>; 3] {
    let i = Gr::i();
    let one = Gr::one();
    let z = Gr::zero();
    [
        Matrix::from_rows(vec![vec![z.clone(), one.clone()], vec![one.clone(), z.clone()]]),
        Matrix::from_rows(vec![vec![z.clone(), i.neg()], vec![i, z.clone()]]),
        Matrix::from_rows(vec![vec![one.clone(), z.clone()], vec![z.clone(), one.neg()]]),
    ]
}

/// Carrier-space block layout of a vector representation: `n` spin-1
/// blocks followed by `m` scalar slots.
pub fn vector_block_dims(n: u8, m: u8) -> (usize, usize) {
    // D(0,0,0) is printed with n = m = 0 but lives on one scalar slot.
    if n == 0 && m == 0 {
        (0, 1)
    } else {
        (n as usize, m as usize)
    }
}

/// Assembles vector-kind generators from the block data `(A, B, C)`:
/// `S_a = diag(I_n (x) s_a, 0_m)` and
/// `eta_a = [[A (x) s_a, B (x) k_a^+], [C (x) k_a, 0]]`.
pub fn assemble_vector_generators(
    a: &Matrix<Gr>,
    b: &Matrix<Gr>,
    c: &Matrix<Gr>,
) -> (usize, [Matrix<Gr>; 3], [Matrix<Gr>; 3]) {
    let n = a.nrows();
    let m = b.ncols();
    assert_eq!(a.ncols(), n);
    assert_eq!(b.nrows(), n);
    assert_eq!(c.nrows(), m);
    assert_eq!(c.ncols(), n);
    let dim = 3 * n + m;
    let s3 = spin_one();
    let ks = k_rows();
    let mut s_out = Vec::with_capacity(3);
    let mut eta_out = Vec::with_capacity(3);
    for axis in 0..3 {
        let mut s = Matrix::zeros(dim, dim);
        for blk in 0..n {
            s.paste(3 * blk, 3 * blk, &s3[axis]);
        }
        s_out.push(s);
        let mut eta = Matrix::zeros(dim, dim);
        eta.paste(0, 0, &a.kron(&s3[axis]));
        eta.paste(0, 3 * n, &b.kron(&ks[axis].adjoint()));
        eta.paste(3 * n, 0, &c.kron(&ks[axis]));
        eta_out.push(eta);
    }
    (
        dim,
        s_out.try_into().unwrap(),
        eta_out.try_into().unwrap(),
    )
}

/// Block data `(A, B, C)` of each vector row, in the table's printed form.
pub fn table_blocks(n: u8, m: u8, lambda: u8) -> Option<(Matrix<Gr>, Matrix<Gr>, Matrix<Gr>)> {
    let gm = |rows: usize, cols: usize, entries: &[i64]| {
        Matrix::from_fn(rows, cols, |r, c| Gr::from_int(entries[r * cols + c]))
    };
    let (a, b, c) = match (n, m, lambda) {
        (0, 0, 0) => (gm(0, 0, &[]), gm(0, 1, &[]), gm(1, 0, &[])),
        (1, 0, 0) => (gm(1, 1, &[0]), gm(1, 0, &[]), gm(0, 1, &[])),
        (1, 1, 0) => (gm(1, 1, &[0]), gm(1, 1, &[0]), gm(1, 1, &[1])),
        (1, 1, 1) => (gm(1, 1, &[0]), gm(1, 1, &[1]), gm(1, 1, &[0])),
        (1, 2, 1) => (gm(1, 1, &[0]), gm(1, 2, &[1, 0]), gm(2, 1, &[0, 1])),
        (2, 0, 0) => (gm(2, 2, &[0, 0, 1, 0]), gm(2, 0, &[]), gm(0, 2, &[])),
        (2, 1, 0) => (gm(2, 2, &[0, 0, 1, 0]), gm(2, 1, &[0, 0]), gm(1, 2, &[1, 0])),
        (2, 1, 1) => (gm(2, 2, &[0, 1, 0, 0]), gm(2, 1, &[1, 0]), gm(1, 2, &[0, 0])),
        (2, 2, 1) => (
            gm(2, 2, &[0, 0, 1, 0]),
            gm(2, 2, &[0, 0, 1, 0]),
            gm(2, 2, &[0, 0, 1, 0]),
        ),
        (3, 1, 1) => (
            gm(3, 3, &[0, 0, 0, 1, 0, 0, 0, 1, 0]),
            gm(3, 1, &[0, 0, 1]),
            gm(1, 3, &[-1, 0, 0]),
        ),
        _ => return None,
    };
    Some((a, b, c))
}

/// Builds the catalog representation for a label, matrices exactly as
/// printed in the source tables.
pub fn build_rep(label: RepLabel) -> Result<Representation> {
    match label {
        RepLabel::Vector { n, m, lambda } => {
            let (a, b, c) =
                table_blocks(n, m, lambda).ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
            let (dim, s, eta) = assemble_vector_generators(&a, &b, &c);
            Ok(Representation { label, dim, s, eta })
        }
        RepLabel::SpinorIrreducible => {
            let half = Gr::from_ratio(1, 2);
            let s = pauli().map(|p| p.scale(&half));
            let eta = [Matrix::zeros(2, 2), Matrix::zeros(2, 2), Matrix::zeros(2, 2)];
            Ok(Representation { label, dim: 2, s, eta })
        }
        RepLabel::SpinorBispinor => {
            let half = Gr::from_ratio(1, 2);
            let p = pauli();
            let mut s = Vec::new();
            let mut eta = Vec::new();
            for axis in 0..3 {
                let blk = p[axis].scale(&half);
                let mut sm = Matrix::zeros(4, 4);
                sm.paste(0, 0, &blk);
                sm.paste(2, 2, &blk);
                s.push(sm);
                let mut em = Matrix::zeros(4, 4);
                em.paste(2, 0, &blk);
                eta.push(em);
            }
            Ok(Representation {
                label,
                dim: 4,
                s: s.try_into().unwrap(),
                eta: eta.try_into().unwrap(),
            })
        }
    }
}

/// One defining-relation violation.
#[derive(Clone, Debug, Serialize)]
pub struct RelationViolation {
    /// Which family: `ss`, `eta_s`, or `eta_eta`.
    pub family: &'static str,
    pub a: usize,
    pub b: usize,
}

/// Result of checking the 21 defining commutation relations.
#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub label: String,
    pub violations: Vec<RelationViolation>,
}

impl RelationReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

pub(crate) fn eps(a: usize, b: usize, c: usize) -> i64 {
    match (a, b, c) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

/// Structure-constant combination `i sum_c eps_abc X_c`.
pub(crate) fn eps_combo<K: crate::scalar::ComplexScalar>(
    xs: &[Matrix<K>; 3],
    a: usize,
    b: usize,
) -> Matrix<K> {
    let dim = xs[0].nrows();
    let mut out = Matrix::zeros(dim, dim);
    for c in 0..3 {
        let e = eps(a, b, c);
        if e == 0 {
            continue;
        }
        out = out.add(&xs[c].scale(&K::imaginary_unit().mul(&K::from_int(e))));
    }
    out
}

/// Exact check of all defining relations; violations are data, not errors.
pub fn verify_hg_relations(rep: &Representation) -> RelationReport {
    verify_hg_triples(&rep.s, &rep.eta, rep.label.to_string())
}

/// Same check for generator triples that do not come from the catalog.
pub fn verify_hg_triples<K: crate::scalar::ComplexScalar>(
    s: &[Matrix<K>; 3],
    eta: &[Matrix<K>; 3],
    label: String,
) -> RelationReport {
    let mut violations = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            if s[a].commutator(&s[b]) != eps_combo(s, a, b) {
                violations.push(RelationViolation { family: "ss", a, b });
            }
            if eta[a].commutator(&s[b]) != eps_combo(eta, a, b) {
                violations.push(RelationViolation { family: "eta_s", a, b });
            }
            if !eta[a].commutator(&eta[b]).is_zero() {
                violations.push(RelationViolation { family: "eta_eta", a, b });
            }
        }
    }
    RelationReport { label, violations }
}

/// `sum_a eta_a^+ eta_a`.
pub fn boost_norm_matrix(rep: &Representation) -> Matrix<Gr> {
    let mut acc = Matrix::zeros(rep.dim, rep.dim);
    for a in 0..3 {
        acc = acc.add(&rep.eta[a].adjoint().mul(&rep.eta[a]));
    }
    acc
}

/// Outcome of the trace-normalization check
/// `Trace(sum eta^+ eta) = 6(n-1) + 3(m + delta_{n,3})`.
#[derive(Clone, Debug, Serialize)]
pub struct TraceNormalization {
    pub label: String,
    pub trace: Gr,
    pub formula: Gr,
    pub matches: bool,
}

/// Evaluates the normalization trace and the closed formula. The formula
/// is the printed one; it holds for the nine nontrivial vector rows and
/// fails by construction for the trivial scalar row, which the report
/// flags rather than hides.
pub fn trace_normalization(rep: &Representation) -> Result<TraceNormalization> {
    let RepLabel::Vector { n, m, .. } = rep.label else {
        return Err(Error::Unsupported(
            "trace normalization is defined for vector-kind representations only".into(),
        ));
    };
    let trace = boost_norm_matrix(rep).trace();
    let delta3 = if n == 3 { 1 } else { 0 };
    let formula = Gr::from_int(6 * (n as i64 - 1) + 3 * (m as i64 + delta3));
    Ok(TraceNormalization {
        label: rep.label.to_string(),
        matches: trace == formula,
        trace,
        formula,
    })
}

/// Outcome of the lambda-invariant evaluation.
#[derive(Clone, Debug, Serialize)]
pub struct LambdaInvariant {
    pub label: String,
    /// `Trace((S.S - 2) sum_a eta_a^+ eta_a)`, exact.
    pub trace: Gr,
    /// The printed normalization (trace divided by 3); takes values 0, -2
    /// on the catalog.
    pub printed_convention: Gr,
    /// Label normalization `-trace/6`, which reproduces the table's 0/1
    /// values; this is the convention used everywhere else in the crate.
    pub label_value: Gr,
    pub matches_label: bool,
}

/// Evaluates the lambda invariant. The two displayed normalizations of
/// the same trace disagree in the source (the row that one section heads
/// `D(3,1,2)` is `D(3,1,1)` in the tables); both numbers are reported and
/// the `-trace/6` normalization is the one that matches the table labels.
pub fn lambda_invariant(rep: &Representation) -> Result<LambdaInvariant> {
    let RepLabel::Vector { lambda, .. } = rep.label else {
        return Err(Error::Unsupported(
            "lambda invariant is defined for vector-kind representations only".into(),
        ));
    };
    let mut casimir = Matrix::zeros(rep.dim, rep.dim);
    for a in 0..3 {
        casimir = casimir.add(&rep.s[a].mul(&rep.s[a]));
    }
    let shifted = casimir.sub(&Matrix::identity(rep.dim).scale(&Gr::from_int(2)));
    let trace = shifted.mul(&boost_norm_matrix(rep)).trace();
    let third = Gr::from_ratio(1, 3);
    let neg_sixth = Gr::from_ratio(-1, 6);
    let label_value = trace.mul(&neg_sixth);
    Ok(LambdaInvariant {
        label: rep.label.to_string(),
        printed_convention: trace.mul(&third),
        matches_label: label_value == Gr::from_int(lambda as i64),
        label_value,
        trace,
    })
}

/// Finite boost from full parameters. The mass and phase constant enter
/// the transformation only through the scalar phase factor, which cancels
/// in every sesquilinear check, so the matrix depends on the velocity
/// alone.
pub fn boost_matrix_params(rep: &Representation, params: &BoostParams) -> Matrix<Gr> {
    boost_matrix(rep, &params.v)
}

/// Finite boost `T(v) = exp(i sum_a v_a eta_a)` at rational velocity.
pub fn boost_matrix(rep: &Representation, v: &[BigRational; 3]) -> Matrix<Gr> {
    let mut x = Matrix::zeros(rep.dim, rep.dim);
    for a in 0..3 {
        let coeff = Gr::new(BigRational::from_integer(0.into()), v[a].clone());
        x = x.add(&rep.eta[a].scale(&coeff));
    }
    ops::exp_nilpotent(&x).expect("boost generators are nilpotent")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn spin_one_relations() {
        let s = spin_one();
        // [s_1, s_2] = i s_3 and cyclic.
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(s[a].commutator(&s[b]), eps_combo(&s, a, b));
            }
        }
    }

    #[test]
    fn k_row_identities() {
        // s_a k_b^+ = i eps_abc k_c^+ and k_a s_b = i eps_abc k_c.
        let s = spin_one();
        let k = k_rows();
        for a in 0..3 {
            for b in 0..3 {
                let mut rhs_col = Matrix::zeros(3, 1);
                let mut rhs_row = Matrix::zeros(1, 3);
                for c in 0..3 {
                    let e = eps(a, b, c);
                    if e != 0 {
                        let w = Gr::i().mul(&Gr::from_int(e));
                        rhs_col = rhs_col.add(&k[c].adjoint().scale(&w));
                        rhs_row = rhs_row.add(&k[c].scale(&w));
                    }
                }
                assert_eq!(s[a].mul(&k[b].adjoint()), rhs_col);
                assert_eq!(k[a].mul(&s[b]), rhs_row);
            }
        }
        // k_a^+ k_b - k_b^+ k_a = [s_a, s_b]
        for a in 0..3 {
            for b in 0..3 {
                let lhs = k[a]
                    .adjoint()
                    .mul(&k[b])
                    .sub(&k[b].adjoint().mul(&k[a]));
                assert_eq!(lhs, s[a].commutator(&s[b]));
            }
        }
    }

    #[test]
    fn all_catalog_reps_satisfy_relations() {
        for label in all_labels() {
            let rep = build_rep(label).unwrap();
            let report = verify_hg_relations(&rep);
            assert!(report.pass(), "{label}: {:?}", report.violations);
        }
    }

    #[test]
    fn catalog_dimensions() {
        let dims: Vec<usize> = VECTOR_LABELS
            .iter()
            .map(|&l| build_rep(l).unwrap().dim)
            .collect();
        assert_eq!(dims, vec![1, 3, 4, 4, 5, 6, 7, 7, 8, 10]);
    }

    #[test]
    fn perturbed_rep_fails() {
        // D(2,0,0) with an extra unit entry in eta_1 breaks [eta_1, eta_2] = 0.
        let mut rep = build_rep("D(2,0,0)".parse().unwrap()).unwrap();
        rep.eta[0].set(0, 3, Gr::one());
        let report = verify_hg_relations(&rep);
        assert!(report
            .violations
            .iter()
            .any(|v| v.family == "eta_eta" && v.a == 0 && v.b == 1));
    }

    #[test]
    fn flipped_corner_sign_in_largest_row_fails() {
        // The minus sign on the bottom-left row block of the 10-dimensional
        // representation is essential: with +k_a the boosts stop commuting.
        let (a, b, _) = table_blocks(3, 1, 1).unwrap();
        let c_flipped = Matrix::from_fn(1, 3, |_, c| {
            if c == 0 { Gr::one() } else { Gr::zero() }
        });
        let (_, s, eta) = assemble_vector_generators(&a, &b, &c_flipped);
        let report = verify_hg_triples(&s, &eta, "D(3,1,1)+flip".into());
        assert!(!report.pass());
        assert!(report.violations.iter().all(|v| v.family == "eta_eta"));
    }

    #[test]
    fn trace_normalization_values() {
        let expected: [(&str, i64, bool); 10] = [
            ("D(0,0,0)", 0, false), // formula gives -6; flagged, not hidden
            ("D(1,0,0)", 0, true),
            ("D(1,1,0)", 3, true),
            ("D(1,1,1)", 3, true),
            ("D(1,2,1)", 6, true),
            ("D(2,0,0)", 6, true),
            ("D(2,1,0)", 9, true),
            ("D(2,1,1)", 9, true),
            ("D(2,2,1)", 12, true),
            ("D(3,1,1)", 18, true),
        ];
        for (name, trace, matches) in expected {
            let rep = build_rep(name.parse().unwrap()).unwrap();
            let tn = trace_normalization(&rep).unwrap();
            assert_eq!(tn.trace, Gr::from_int(trace), "{name}");
            assert_eq!(tn.matches, matches, "{name}");
        }
    }

    #[test]
    fn lambda_matches_labels() {
        for &label in VECTOR_LABELS.iter() {
            let rep = build_rep(label).unwrap();
            let li = lambda_invariant(&rep).unwrap();
            assert!(li.matches_label, "{label}: {:?}", li);
            // The printed normalization is -2 wherever the label says 1.
            let RepLabel::Vector { lambda, .. } = label else { unreachable!() };
            let printed = if lambda == 1 { -2 } else { 0 };
            assert_eq!(li.printed_convention, Gr::from_int(printed));
        }
    }

    #[test]
    fn boost_composition() {
        for &label in VECTOR_LABELS.iter() {
            let rep = build_rep(label).unwrap();
            let v = [ratio(1, 2), ratio(-1, 3), ratio(2, 1)];
            let w = [ratio(3, 5), ratio(1, 7), ratio(-1, 2)];
            let vw = [&v[0] + &w[0], &v[1] + &w[1], &v[2] + &w[2]];
            assert_eq!(
                boost_matrix(&rep, &v).mul(&boost_matrix(&rep, &w)),
                boost_matrix(&rep, &vw),
                "{label}"
            );
        }
    }

    #[test]
    fn phase_parameters_do_not_enter_the_matrix() {
        let rep = build_rep("D(1,2,1)".parse().unwrap()).unwrap();
        let v = [ratio(1, 3), ratio(-1, 2), ratio(2, 5)];
        let with_mass = BoostParams {
            v: v.clone(),
            m: ratio(7, 2),
            c: ratio(-4, 9),
        };
        let massless = BoostParams {
            v: v.clone(),
            m: ratio(0, 1),
            c: ratio(0, 1),
        };
        assert_eq!(
            boost_matrix_params(&rep, &with_mass),
            boost_matrix_params(&rep, &massless)
        );
    }

    #[test]
    fn boost_exponentials_terminate_by_block_depth() {
        // Two-block rows square to zero in the exponent; the deepest row
        // terminates at third order.
        let two = build_rep("D(2,0,0)".parse().unwrap()).unwrap();
        let x = two.eta[0].add(&two.eta[1]).scale(&Gr::i());
        assert_eq!(x.nilpotency_index(), Some(2));
        let deep = build_rep("D(3,1,1)".parse().unwrap()).unwrap();
        let x = deep.eta[0].add(&deep.eta[2]).scale(&Gr::i());
        assert_eq!(x.nilpotency_index(), Some(3));
    }

    #[test]
    fn label_aliases() {
        let l: RepLabel = "D(3,1,2)".parse().unwrap();
        assert_eq!(l, RepLabel::Vector { n: 3, m: 1, lambda: 1 });
        let l: RepLabel = "D_5".parse().unwrap();
        assert_eq!(l, RepLabel::Vector { n: 1, m: 2, lambda: 1 });
        let l: RepLabel = "D_7".parse().unwrap();
        assert_eq!(l, RepLabel::Vector { n: 2, m: 1, lambda: 0 });
        let l: RepLabel = "D_8".parse().unwrap();
        assert_eq!(l, RepLabel::Vector { n: 2, m: 1, lambda: 1 });
        assert!("D(4,1,0)".parse::<RepLabel>().is_err());
        assert!("no-such-label".parse::<RepLabel>().is_err());
    }
}
