//! Printed finite-boost laws for the vector representations, and the
//! convention matching that ties each carrier-space boost
//! `T(v) = exp(i sum v_a eta_a)` to its printed component law.
//!
//! The printed laws fix neither the sign of the exponent, nor whether the
//! components transform directly or contragradiently, nor the relative
//! signs of the basis slots. `match_convention` searches the finite set
//! of candidate dressings (direct/dual action, exponent sign, per-block
//! sign flips) and records every dressing under which the carrier boost
//! reproduces the printed law as an exact polynomial identity in `v`.

use super::{build_rep, RepLabel, Representation};
use crate::matrix::Matrix;
use crate::ops;
use crate::poly::MPoly;
use crate::scalar::{GaussianRational as Gr, Scalar};
use serde::Serialize;

pub type VPoly = MPoly<Gr>;
pub const V_ARITY: usize = 3;
pub const V_NAMES: [&str; 3] = ["v1", "v2", "v3"];

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum CompKind {
    Vector3,
    Scalar,
}

/// Printed component list (kind and name) for each vector label, in the
/// order the transformation law displays them.
pub fn printed_components(label: RepLabel) -> Option<Vec<(CompKind, &'static str)>> {
    use CompKind::*;
    let RepLabel::Vector { n, m, lambda } = label else {
        return None;
    };
    Some(match (n, m, lambda) {
        (0, 0, 0) => vec![(Scalar, "psi")],
        (1, 0, 0) => vec![(Vector3, "R")],
        (1, 1, 0) => vec![(Vector3, "U"), (Scalar, "psi")],
        (1, 1, 1) => vec![(Vector3, "R"), (Scalar, "B")],
        (1, 2, 1) => vec![(Scalar, "psi"), (Vector3, "U"), (Scalar, "C")],
        (2, 0, 0) => vec![(Vector3, "R"), (Vector3, "W")],
        (2, 1, 0) => vec![(Vector3, "R"), (Vector3, "W"), (Scalar, "B")],
        (2, 1, 1) => vec![(Vector3, "K"), (Vector3, "R"), (Scalar, "psi")],
        (2, 2, 1) => vec![
            (Vector3, "R"),
            (Vector3, "K"),
            (Scalar, "B"),
            (Scalar, "psi"),
        ],
        (3, 1, 1) => vec![
            (Vector3, "R"),
            (Vector3, "W"),
            (Vector3, "N"),
            (Scalar, "B"),
        ],
        _ => return None,
    })
}

fn v(idx: usize) -> VPoly {
    VPoly::var(V_ARITY, idx)
}

fn vzero() -> VPoly {
    VPoly::zero_with(V_ARITY)
}

/// 3x1 column of the boost velocity.
fn v_col() -> Matrix<VPoly> {
    Matrix::from_fn(3, 1, |r, _| v(r))
}

fn v_row() -> Matrix<VPoly> {
    Matrix::from_fn(1, 3, |_, c| v(c))
}

/// Cross-product operator: `(v x R)_j = sum C[j][b] R_b`.
fn v_cross() -> Matrix<VPoly> {
    let mut m = Matrix::zeros(3, 3);
    m.set(0, 1, v(2).neg());
    m.set(0, 2, v(1));
    m.set(1, 0, v(2));
    m.set(1, 2, v(0).neg());
    m.set(2, 0, v(1).neg());
    m.set(2, 1, v(0));
    m
}

/// Outer product `v v^T`.
fn v_outer() -> Matrix<VPoly> {
    Matrix::from_fn(3, 3, |r, c| v(r).mul(&v(c)))
}

fn v_sq() -> VPoly {
    (0..3).fold(vzero(), |acc, a| acc.add(&v(a).mul(&v(a))))
}

/// The printed boost law as a matrix acting on the printed components.
pub fn law_matrix(label: RepLabel) -> Option<Matrix<VPoly>> {
    let comps = printed_components(label)?;
    let sizes: Vec<usize> = comps
        .iter()
        .map(|(k, _)| if *k == CompKind::Vector3 { 3 } else { 1 })
        .collect();
    let offs: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, s| {
            let o = *acc;
            *acc += s;
            Some(o)
        })
        .collect();
    let dim: usize = sizes.iter().sum();
    let mut l: Matrix<VPoly> = Matrix::identity(dim);
    let slot = |name: &str| comps.iter().position(|(_, n)| *n == name).unwrap();
    let add = |l: &mut Matrix<VPoly>, to: usize, from: usize, block: &Matrix<VPoly>| {
        let mut acc = l.block(offs[to], offs[from], sizes[to], sizes[from]);
        acc = acc.add(block);
        l.paste(offs[to], offs[from], &acc);
    };
    let RepLabel::Vector { n, m, lambda } = label else {
        return None;
    };
    match (n, m, lambda) {
        (0, 0, 0) | (1, 0, 0) => {}
        (1, 1, 0) => add(&mut l, slot("U"), slot("psi"), &v_col()),
        (1, 1, 1) => add(&mut l, slot("B"), slot("R"), &v_row()),
        (1, 2, 1) => {
            add(&mut l, slot("U"), slot("psi"), &v_col());
            add(&mut l, slot("C"), slot("U"), &v_row());
            let half = VPoly::constant(V_ARITY, Gr::from_ratio(1, 2)).mul(&v_sq());
            add(&mut l, slot("C"), slot("psi"), &Matrix::from_vec(1, 1, vec![half]));
        }
        (2, 0, 0) => add(&mut l, slot("W"), slot("R"), &v_cross()),
        (2, 1, 0) => {
            add(&mut l, slot("W"), slot("R"), &v_cross());
            add(&mut l, slot("B"), slot("R"), &v_row());
        }
        (2, 1, 1) => {
            add(&mut l, slot("K"), slot("R"), &v_cross());
            add(&mut l, slot("K"), slot("psi"), &v_col());
        }
        (2, 2, 1) => {
            add(&mut l, slot("K"), slot("R"), &v_cross());
            add(&mut l, slot("K"), slot("psi"), &v_col());
            add(&mut l, slot("B"), slot("R"), &v_row());
        }
        (3, 1, 1) => {
            add(&mut l, slot("W"), slot("R"), &v_cross());
            add(&mut l, slot("N"), slot("W"), &v_cross());
            add(&mut l, slot("N"), slot("B"), &v_col());
            let second = v_outer().sub(&Matrix::identity(3).scale(
                &VPoly::constant(V_ARITY, Gr::from_ratio(1, 2)).mul(&v_sq()),
            ));
            add(&mut l, slot("N"), slot("R"), &second);
            add(&mut l, slot("B"), slot("R"), &v_row());
        }
        _ => return None,
    }
    Some(l)
}

/// Symbolic carrier boost `exp(sign * i sum v_a eta_a)`.
pub fn boost_symbolic(rep: &Representation, sign: i8) -> Matrix<VPoly> {
    let mut x: Matrix<VPoly> = Matrix::zeros(rep.dim, rep.dim);
    for a in 0..3 {
        let coeff = v(a).scale(&Gr::i().mul(&Gr::from_int(sign as i64)));
        x = x.add(&rep.eta[a].map(|e| VPoly::constant(V_ARITY, e.clone())).scale(&coeff));
    }
    ops::exp_nilpotent(&x).expect("boost generators are nilpotent")
}

/// Symbolic contragredient boost `exp(-sign * i sum v_a eta_a^T)`.
pub fn boost_symbolic_dual(rep: &Representation, sign: i8) -> Matrix<VPoly> {
    let mut x: Matrix<VPoly> = Matrix::zeros(rep.dim, rep.dim);
    for a in 0..3 {
        let coeff = v(a).scale(&Gr::i().mul(&Gr::from_int(-sign as i64)));
        x = x.add(
            &rep.eta[a]
                .transpose()
                .map(|e| VPoly::constant(V_ARITY, e.clone()))
                .scale(&coeff),
        );
    }
    ops::exp_nilpotent(&x).expect("boost generators are nilpotent")
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum BoostAction {
    Direct,
    Dual,
}

/// One dressing under which the carrier boost reproduces the printed law.
#[derive(Clone, Debug, Serialize)]
pub struct LawConvention {
    pub action: BoostAction,
    pub exponent_sign: i8,
    /// Sign per printed component block (the first block is fixed +1).
    pub slot_signs: Vec<i8>,
    /// Printed vector component `k` is carrier spin-1 block `vec_perm[k]`.
    pub vec_perm: Vec<usize>,
    /// Printed scalar component `k` is carrier scalar slot `scal_perm[k]`.
    pub scal_perm: Vec<usize>,
    /// True when the dressing is the plain direct boost with no flips and
    /// the identity slot assignment.
    pub plain: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LawMatchReport {
    pub label: String,
    /// Every dressing that works, in deterministic search order.
    pub matches: Vec<LawConvention>,
}

impl LawMatchReport {
    pub fn matched(&self) -> bool {
        !self.matches.is_empty()
    }
    pub fn canonical(&self) -> Option<&LawConvention> {
        self.matches.first()
    }
}

/// Signed slot-mapping matrix from the carrier basis (spin-1 blocks then
/// scalar slots) to the printed component basis: printed vector component
/// `k` reads carrier block `vec_perm[k]`, printed scalar `k` reads carrier
/// slot `scal_perm[k]`, each multiplied by the component's sign.
pub fn carrier_to_printed(
    label: RepLabel,
    vec_perm: &[usize],
    scal_perm: &[usize],
    slot_signs: &[i8],
) -> Option<Matrix<Gr>> {
    let comps = printed_components(label)?;
    let rep = build_rep(label).ok()?;
    let (nblocks, _) = match label {
        RepLabel::Vector { n, m, .. } => super::vector_block_dims(n, m),
        _ => return None,
    };
    let mut p = Matrix::zeros(rep.dim, rep.dim);
    let mut printed_off = 0;
    let mut vec_seen = 0;
    let mut scal_seen = 0;
    for (idx, (kind, _)) in comps.iter().enumerate() {
        let sign = Gr::from_int(slot_signs[idx] as i64);
        match kind {
            CompKind::Vector3 => {
                let carrier_off = 3 * vec_perm[vec_seen];
                for t in 0..3 {
                    p.set(printed_off + t, carrier_off + t, sign.clone());
                }
                vec_seen += 1;
                printed_off += 3;
            }
            CompKind::Scalar => {
                let carrier_off = 3 * nblocks + scal_perm[scal_seen];
                p.set(printed_off, carrier_off, sign);
                scal_seen += 1;
                printed_off += 1;
            }
        }
    }
    Some(p)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    fn rec(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            rec(items, k + 1, out);
            items.swap(k, i);
        }
    }
    rec(&mut items, 0, &mut out);
    out.sort();
    out
}

/// Searches the dressing space and records every convention under which
/// the carrier boost equals the printed law. Less-dressed conventions
/// come first: identity slot assignment, then no sign flips, then the
/// direct action with positive exponent.
pub fn match_convention(rep: &Representation) -> Option<LawMatchReport> {
    let law = law_matrix(rep.label)?;
    let comps = printed_components(rep.label)?;
    let nblocks = comps.len();
    let nvec = comps.iter().filter(|(k, _)| *k == CompKind::Vector3).count();
    let nscal = nblocks - nvec;
    let mut matches = Vec::new();
    let nmasks: u32 = 1 << (nblocks.saturating_sub(1));
    let boosts = [
        (BoostAction::Direct, 1i8, boost_symbolic(rep, 1)),
        (BoostAction::Direct, -1, boost_symbolic(rep, -1)),
        (BoostAction::Dual, 1, boost_symbolic_dual(rep, 1)),
        (BoostAction::Dual, -1, boost_symbolic_dual(rep, -1)),
    ];
    for vec_perm in permutations(nvec) {
        for scal_perm in permutations(nscal) {
            for mask in 0..nmasks {
                let mut slot_signs = vec![1i8; nblocks];
                for b in 1..nblocks {
                    if mask & (1 << (b - 1)) != 0 {
                        slot_signs[b] = -1;
                    }
                }
                let p = carrier_to_printed(rep.label, &vec_perm, &scal_perm, &slot_signs)?;
                let p_lift = p.map(|e| VPoly::constant(V_ARITY, e.clone()));
                // Signed permutation: inverse is the transpose.
                let p_inv = p.transpose().map(|e| VPoly::constant(V_ARITY, e.clone()));
                for (action, sign, t) in &boosts {
                    let dressed = p_lift.mul(t).mul(&p_inv);
                    if dressed == law {
                        let identity_assignment = vec_perm.iter().enumerate().all(|(i, &j)| i == j)
                            && scal_perm.iter().enumerate().all(|(i, &j)| i == j);
                        matches.push(LawConvention {
                            action: *action,
                            exponent_sign: *sign,
                            slot_signs: slot_signs.clone(),
                            vec_perm: vec_perm.clone(),
                            scal_perm: scal_perm.clone(),
                            plain: identity_assignment
                                && mask == 0
                                && *action == BoostAction::Direct
                                && *sign == 1,
                        });
                    }
                }
            }
        }
    }
    Some(LawMatchReport {
        label: rep.label.to_string(),
        matches,
    })
}

/// Rotation generators on the printed components: spin-1 blocks on the
/// vector components, zero on scalars.
pub fn printed_rotations(label: RepLabel) -> Option<[Matrix<Gr>; 3]> {
    let comps = printed_components(label)?;
    let s3 = super::spin_one();
    let mut out = Vec::with_capacity(3);
    for axis in 0..3 {
        let blocks: Vec<Matrix<Gr>> = comps
            .iter()
            .map(|(kind, _)| match kind {
                CompKind::Vector3 => s3[axis].clone(),
                CompKind::Scalar => Matrix::zeros(1, 1),
            })
            .collect();
        out.push(Matrix::block_diag(&blocks));
    }
    Some(out.try_into().unwrap())
}

/// Boost generators read off the printed law: `eta_a = -i dL/dv_a (0)`.
pub fn printed_boost_generators(label: RepLabel) -> Option<[Matrix<Gr>; 3]> {
    let law = law_matrix(label)?;
    let mut out = Vec::with_capacity(3);
    for a in 0..3 {
        let gen = law.map(|p| {
            let lin = p.derivative(a);
            let val = lin.eval(&[Gr::zero(), Gr::zero(), Gr::zero()]);
            val.mul(&Gr::i().neg())
        });
        out.push(gen);
    }
    Some(out.try_into().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{verify_hg_triples, VECTOR_LABELS};

    #[test]
    fn every_vector_law_is_matched() {
        for &label in VECTOR_LABELS.iter() {
            let rep = build_rep(label).unwrap();
            let report = match_convention(&rep).unwrap();
            assert!(report.matched(), "no convention found for {label}");
        }
    }

    #[test]
    fn trivial_rows_are_plain() {
        for name in ["D(0,0,0)", "D(1,0,0)"] {
            let rep = build_rep(name.parse().unwrap()).unwrap();
            let report = match_convention(&rep).unwrap();
            assert!(
                report.matches.iter().any(|c| c.plain),
                "{name}: {:?}",
                report.matches
            );
        }
    }

    #[test]
    fn four_vector_pair_needs_dual_action() {
        // The two four-dimensional rows print laws generated by the
        // contragredient of their table matrices, with opposite exponent
        // signs.
        for (name, sign) in [("D(1,1,0)", 1i8), ("D(1,1,1)", -1)] {
            let rep = build_rep(name.parse().unwrap()).unwrap();
            let report = match_convention(&rep).unwrap();
            let canon = report.canonical().unwrap();
            assert_eq!(canon.action, BoostAction::Dual, "{name}");
            assert_eq!(canon.exponent_sign, sign, "{name}");
            assert!(canon.slot_signs.iter().all(|&s| s == 1), "{name}");
        }
    }

    #[test]
    fn negative_exponent_rows() {
        // These laws are the direct boost at reversed velocity, with no
        // slot adjustments.
        for name in ["D(2,0,0)", "D(2,1,0)"] {
            let rep = build_rep(name.parse().unwrap()).unwrap();
            let report = match_convention(&rep).unwrap();
            let canon = report.canonical().unwrap();
            assert_eq!(canon.action, BoostAction::Direct, "{name}");
            assert_eq!(canon.exponent_sign, -1, "{name}");
            assert!(canon.slot_signs.iter().all(|&s| s == 1), "{name}");
        }
    }

    #[test]
    fn single_flip_rows() {
        // Direct action with exactly one flipped printed component.
        for name in ["D(1,2,1)", "D(2,1,1)", "D(3,1,1)"] {
            let rep = build_rep(name.parse().unwrap()).unwrap();
            let report = match_convention(&rep).unwrap();
            let canon = report.canonical().unwrap();
            assert_eq!(canon.action, BoostAction::Direct, "{name}");
            let flips = canon.slot_signs.iter().filter(|&&s| s == -1).count();
            assert_eq!(flips, 1, "{name}: {:?}", report.matches);
        }
    }

    #[test]
    fn eight_dim_row_crosses_scalar_slots() {
        // In the 8-dimensional row the printed scalars pair with the
        // carrier slots in reverse order.
        let rep = build_rep("D(2,2,1)".parse().unwrap()).unwrap();
        let report = match_convention(&rep).unwrap();
        let canon = report.canonical().unwrap();
        assert_eq!(canon.scal_perm, vec![1, 0], "{:?}", report.matches);
    }

    #[test]
    fn printed_generators_close() {
        // The generators read off each printed law satisfy the defining
        // relations with the printed rotations.
        for &label in VECTOR_LABELS.iter() {
            let s = printed_rotations(label).unwrap();
            let eta = printed_boost_generators(label).unwrap();
            let report = verify_hg_triples(&s, &eta, format!("printed:{label}"));
            assert!(report.pass(), "{label}: {:?}", report.violations);
        }
    }
}
