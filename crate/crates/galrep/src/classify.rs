//! Independent re-derivation of the classification.
//!
//! Vector representations are built from block data `(A, B, C)` subject to
//! `A^2 + BC = 0`, `CA = 0`, `AB = 0`; indecomposability forces `A` to be
//! a single nilpotent Jordan cell (or empty). The search enumerates the
//! block data over a finite coefficient set with the linear constraints
//! solved first, filters by the quadratic constraint and indecomposability,
//! buckets by equivalence and matches each class against the catalog.
//!
//! Indecomposability is decided through the commutant: a representation is
//! indecomposable over the algebraic closure iff its commutant algebra is
//! local, i.e. every element is a scalar plus a nilpotent. That holds iff
//! the trace-form radical of the commutant has codimension one, which is a
//! rank computation and stays exact.

use crate::catalog::{
    assemble_vector_generators, build_rep, spin_one, verify_hg_triples, RepLabel, Representation,
    VECTOR_LABELS,
};
use crate::error::{Error, Result};
use crate::linsolve::{null_space, rank, solve_matrix_linear_space, MatrixEquation};
use crate::matrix::Matrix;
use crate::scalar::{GaussianRational as Gr, Scalar};
use serde::Serialize;

/// Block data of a vector representation in the standard ansatz.
#[derive(Clone, Debug, PartialEq)]
pub struct AbcTriple {
    pub a: Matrix<Gr>,
    pub b: Matrix<Gr>,
    pub c: Matrix<Gr>,
}

impl AbcTriple {
    pub fn n(&self) -> usize {
        self.a.nrows()
    }
    pub fn m(&self) -> usize {
        self.b.ncols()
    }
    pub fn dim(&self) -> usize {
        3 * self.n() + self.m()
    }
}

/// Per-equation outcome of the defining block equations.
#[derive(Clone, Debug, Serialize)]
pub struct AbcReport {
    pub sq_plus_bc: bool,
    pub ca: bool,
    pub ab: bool,
    /// Derived consequence `A^3 = 0`.
    pub a_cubed: bool,
}

impl AbcReport {
    pub fn pass(&self) -> bool {
        self.sq_plus_bc && self.ca && self.ab
    }
}

pub fn check_abc(t: &AbcTriple) -> AbcReport {
    let n = t.n();
    let a2 = t.a.mul(&t.a);
    AbcReport {
        sq_plus_bc: a2.add(&t.b.mul(&t.c)).is_zero(),
        ca: t.c.mul(&t.a).is_zero(),
        ab: t.a.mul(&t.b).is_zero(),
        a_cubed: if n == 0 {
            true
        } else {
            t.a.pow(3).is_zero()
        },
    }
}

/// Extracts the block data from a representation in the standard ansatz.
pub fn decompose_eta(rep: &Representation) -> Result<AbcTriple> {
    let s3 = spin_one();
    // Infer the number of spin-1 blocks from the rotation generators.
    let dim = rep.dim;
    let mut n = None;
    for cand in 0..=dim / 3 {
        let m = dim - 3 * cand;
        let mut ok = true;
        for axis in 0..3 {
            let mut expected = Matrix::zeros(dim, dim);
            for blk in 0..cand {
                expected.paste(3 * blk, 3 * blk, &s3[axis]);
            }
            if rep.s[axis] != expected {
                ok = false;
                break;
            }
        }
        if ok {
            n = Some((cand, m));
            break;
        }
    }
    let Some((n, m)) = n else {
        return Err(Error::Structure(
            "rotation generators are not in the spin-1 block form".into(),
        ));
    };
    let mi = Gr::i().neg();
    let i = Gr::i();
    let mut a = Matrix::zeros(n, n);
    let mut b = Matrix::zeros(n, m);
    let mut c = Matrix::zeros(m, n);
    // Read coefficients off axis 3 / axis 1 reference entries, then verify
    // every block against all three axes exactly.
    for bi in 0..n {
        for bj in 0..n {
            // s_3 has entry (0,1) = -i.
            let probe = rep.eta[2].get(3 * bi, 3 * bj + 1).clone();
            a.set(bi, bj, probe.mul(&mi.inv().unwrap()));
        }
        for sj in 0..m {
            // k_1^+ has entry (0) = -i.
            let probe = rep.eta[0].get(3 * bi, 3 * n + sj).clone();
            b.set(bi, sj, probe.mul(&mi.inv().unwrap()));
        }
    }
    for si in 0..m {
        for bj in 0..n {
            // k_1 has entry (0) = i.
            let probe = rep.eta[0].get(3 * n + si, 3 * bj).clone();
            c.set(si, bj, probe.mul(&i.inv().unwrap()));
        }
    }
    let triple = AbcTriple { a, b, c };
    let (_, _, eta) = assemble_vector_generators(&triple.a, &triple.b, &triple.c);
    for axis in 0..3 {
        if eta[axis] != rep.eta[axis] {
            return Err(Error::Structure(
                "boost generators are not of the Kronecker block form".into(),
            ));
        }
    }
    Ok(triple)
}

/// Builds the full representation from validated block data.
pub fn assemble_rep(t: &AbcTriple) -> Result<Representation> {
    let report = check_abc(t);
    if !report.pass() {
        return Err(Error::Structure(format!(
            "block equations violated: {report:?}"
        )));
    }
    let (dim, s, eta) = assemble_vector_generators(&t.a, &t.b, &t.c);
    let label = RepLabel::Vector {
        n: t.n() as u8,
        m: t.m() as u8,
        lambda: 0, // provisional; classification assigns the real label
    };
    let rep = Representation { label, dim, s, eta };
    let check = verify_hg_triples(&rep.s, &rep.eta, "assembled".into());
    if !check.pass() {
        return Err(Error::Structure(format!(
            "assembled generators violate the defining relations: {:?}",
            check.violations
        )));
    }
    Ok(rep)
}

// ---- commutant and intertwiners in the block parameterization ----
//
// Every matrix commuting with the block rotation generators is
// diag(P (x) I_3, Q); intertwining the boosts then reduces to
// P A1 = A2 P, P B1 = B2 Q, Q C1 = C2 P. This cuts the unknown count
// from dim^2 to n^2 + m^2.

fn vec_index(r: usize, c: usize, ncols: usize) -> usize {
    r * ncols + c
}

/// Basis of `(P, Q)` pairs with `P A1 = A2 P`, `P B1 = B2 Q`, `Q C1 = C2 P`.
pub fn block_intertwiners(t1: &AbcTriple, t2: &AbcTriple) -> Vec<(Matrix<Gr>, Matrix<Gr>)> {
    assert_eq!((t1.n(), t1.m()), (t2.n(), t2.m()));
    let n = t1.n();
    let m = t1.m();
    let unknowns = n * n + m * m;
    let q_off = n * n;
    let mut rows: Vec<Vec<Gr>> = Vec::new();
    // P A1 - A2 P = 0 (n x n outputs)
    for i in 0..n {
        for j in 0..n {
            let mut row = vec![Gr::zero(); unknowns];
            for k in 0..n {
                let v = t1.a.get(k, j).clone();
                row[vec_index(i, k, n)] = row[vec_index(i, k, n)].add(&v);
                let v = t2.a.get(i, k).neg();
                row[vec_index(k, j, n)] = row[vec_index(k, j, n)].add(&v);
            }
            rows.push(row);
        }
    }
    // P B1 - B2 Q = 0 (n x m outputs)
    for i in 0..n {
        for j in 0..m {
            let mut row = vec![Gr::zero(); unknowns];
            for k in 0..n {
                let v = t1.b.get(k, j).clone();
                row[vec_index(i, k, n)] = row[vec_index(i, k, n)].add(&v);
            }
            for k in 0..m {
                let v = t2.b.get(i, k).neg();
                row[q_off + vec_index(k, j, m)] = row[q_off + vec_index(k, j, m)].add(&v);
            }
            rows.push(row);
        }
    }
    // Q C1 - C2 P = 0 (m x n outputs)
    for i in 0..m {
        for j in 0..n {
            let mut row = vec![Gr::zero(); unknowns];
            for k in 0..m {
                let v = t1.c.get(k, j).clone();
                row[q_off + vec_index(i, k, m)] = row[q_off + vec_index(i, k, m)].add(&v);
            }
            for k in 0..n {
                let v = t2.c.get(i, k).neg();
                row[vec_index(k, j, n)] = row[vec_index(k, j, n)].add(&v);
            }
            rows.push(row);
        }
    }
    null_space(rows, unknowns)
        .into_iter()
        .map(|v| {
            let p = Matrix::from_vec(n, n, v[..n * n].to_vec());
            let q = Matrix::from_vec(m, m, v[n * n..].to_vec());
            (p, q)
        })
        .collect()
}

/// Locality of the commutant algebra via the trace-form radical:
/// `dim C - dim rad(C) == 1`. The carrier-space trace of
/// `diag(P (x) I_3, Q)` pairs is `3 tr(P P') + tr(Q Q')`.
fn block_commutant_is_local(t: &AbcTriple) -> bool {
    let basis = block_intertwiners(t, t);
    let k = basis.len();
    if k == 0 {
        return false; // cannot happen: identity always commutes
    }
    let three = Gr::from_int(3);
    let mut gram: Vec<Vec<Gr>> = Vec::with_capacity(k);
    for (pi, qi) in &basis {
        let mut row = Vec::with_capacity(k);
        for (pj, qj) in &basis {
            let t1 = if pi.nrows() > 0 {
                pi.mul(pj).trace()
            } else {
                Gr::zero()
            };
            let t2 = if qi.nrows() > 0 {
                qi.mul(qj).trace()
            } else {
                Gr::zero()
            };
            row.push(three.mul(&t1).add(&t2));
        }
        gram.push(row);
    }
    let rad_dim = k - rank(gram);
    k - rad_dim == 1
}

/// Finds an invertible `(P, Q)` combination in the span, by exhaustive
/// grid evaluation of the determinant polynomial. The grid has more
/// values per variable than the polynomial's degree, so an empty result
/// proves that no invertible combination exists.
fn invertible_block_combo(
    basis: &[(Matrix<Gr>, Matrix<Gr>)],
    n: usize,
    m: usize,
) -> Option<(Matrix<Gr>, Matrix<Gr>)> {
    let k = basis.len();
    if k == 0 {
        return if n == 0 && m == 0 {
            Some((Matrix::zeros(0, 0), Matrix::zeros(0, 0)))
        } else {
            None
        };
    }
    let deg = n + m; // det P * det Q has total degree <= n + m
    let vals: Vec<i64> = (0..=(deg as i64)).collect();
    let mut idx = vec![0usize; k];
    loop {
        let mut p = Matrix::zeros(n, n);
        let mut q = Matrix::zeros(m, m);
        for (t, &vi) in idx.iter().enumerate() {
            let c = Gr::from_int(vals[vi]);
            p = p.add(&basis[t].0.scale(&c));
            q = q.add(&basis[t].1.scale(&c));
        }
        let dp = p.det().unwrap_or_else(Gr::zero);
        let dq = q.det().unwrap_or_else(Gr::zero);
        if !dp.is_zero() && !dq.is_zero() {
            return Some((p, q));
        }
        // advance the mixed-radix counter
        let mut carry = true;
        for slot in idx.iter_mut() {
            if *slot + 1 < vals.len() {
                *slot += 1;
                carry = false;
                break;
            }
            *slot = 0;
        }
        if carry {
            return None;
        }
    }
}

/// Equivalence of two ansatz triples with the same block counts; returns
/// the intertwiner assembled on the full carrier space.
pub fn block_equivalent(t1: &AbcTriple, t2: &AbcTriple) -> Option<Matrix<Gr>> {
    if (t1.n(), t1.m()) != (t2.n(), t2.m()) {
        return None;
    }
    let basis = block_intertwiners(t1, t2);
    let (p, q) = invertible_block_combo(&basis, t1.n(), t1.m())?;
    let x = Matrix::block_diag(&[p.kron(&Matrix::identity(3)), q]);
    Some(x)
}

// ---- general-representation commutant and equivalence ----

/// Basis of `{X : X S1_a = S2_a X, X eta1_a = eta2_a X}`, computed in two
/// stages: the rotation intertwiners first, then the boost constraints in
/// that (much smaller) parameter space. Generic over the scalar field so
/// the contraction comparisons can reuse it over Q(i, sqrt2).
pub fn generator_intertwiners<K: Scalar>(
    s1: &[Matrix<K>; 3],
    eta1: &[Matrix<K>; 3],
    s2: &[Matrix<K>; 3],
    eta2: &[Matrix<K>; 3],
) -> Vec<Matrix<K>> {
    let d1 = s1[0].nrows();
    let d2 = s2[0].nrows();
    let mut eqs = Vec::new();
    for a in 0..3 {
        eqs.push(MatrixEquation::intertwines(&s1[a], &s2[a]));
    }
    let stage1 = solve_matrix_linear_space(&eqs, d2, d1);
    if stage1.is_empty() {
        return Vec::new();
    }
    let k = stage1.len();
    let mut rows: Vec<Vec<K>> = Vec::new();
    for a in 0..3 {
        let images: Vec<Matrix<K>> = stage1
            .iter()
            .map(|x| x.mul(&eta1[a]).sub(&eta2[a].mul(x)))
            .collect();
        for i in 0..d2 {
            for j in 0..d1 {
                let row: Vec<K> = images.iter().map(|im| im.get(i, j).clone()).collect();
                if row.iter().any(|v| !v.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let combos = null_space(rows, k);
    combos
        .into_iter()
        .map(|coef| {
            let mut x = Matrix::zeros(d2, d1);
            for (t, c) in coef.iter().enumerate() {
                x = x.add(&stage1[t].scale(c));
            }
            x
        })
        .collect()
}

/// Exhaustive invertibility decision on a span of square matrices: the
/// determinant has degree at most `d` in each coefficient, so vanishing
/// on the full `(d+1)^k` grid proves there is no invertible element.
/// Falls back to a deterministic wide sweep past the cap (positive
/// answers only).
pub fn invertible_in_span<K: Scalar>(basis: &[Matrix<K>], cap: usize) -> Option<Matrix<K>> {
    let k = basis.len();
    if k == 0 {
        return None;
    }
    let d = basis[0].nrows();
    let per_var = d + 1;
    let grid_size = (per_var as f64).powi(k as i32);
    if grid_size <= cap as f64 {
        let mut idx = vec![0usize; k];
        loop {
            let mut x = Matrix::zeros(d, d);
            for (t, &vi) in idx.iter().enumerate() {
                x = x.add(&basis[t].scale(&K::from_int(vi as i64)));
            }
            if let Some(det) = x.det() {
                if !det.is_zero() {
                    return Some(x);
                }
            }
            let mut carry = true;
            for slot in idx.iter_mut() {
                if *slot + 1 < per_var {
                    *slot += 1;
                    carry = false;
                    break;
                }
                *slot = 0;
            }
            if carry {
                return None;
            }
        }
    }
    let mut state: u64 = 0x9e3779b97f4a7c15;
    for _ in 0..2000 {
        let mut x = Matrix::zeros(d, d);
        for b in basis.iter() {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            let c = ((state >> 33) % 19) as i64 - 9;
            x = x.add(&b.scale(&K::from_int(c)));
        }
        if let Some(det) = x.det() {
            if !det.is_zero() {
                return Some(x);
            }
        }
    }
    None
}

pub fn intertwiner_space(r1: &Representation, r2: &Representation) -> Vec<Matrix<Gr>> {
    generator_intertwiners(&r1.s, &r1.eta, &r2.s, &r2.eta)
}

pub fn commutant(rep: &Representation) -> Vec<Matrix<Gr>> {
    intertwiner_space(rep, rep)
}

/// Indecomposability over the algebraic closure: the commutant is local.
pub fn is_indecomposable(rep: &Representation) -> bool {
    // Representations in the standard block form take the fast path.
    if let Ok(t) = decompose_eta(rep) {
        return block_commutant_is_local(&t);
    }
    let basis = commutant(rep);
    let k = basis.len();
    if k == 0 {
        return false;
    }
    let mut gram: Vec<Vec<Gr>> = Vec::with_capacity(k);
    for xi in &basis {
        let row: Vec<Gr> = basis.iter().map(|xj| xi.mul(xj).trace()).collect();
        gram.push(row);
    }
    let rad_dim = k - rank(gram);
    k - rad_dim == 1
}

/// Equivalence witness search: `None` is a proof of inequivalence for the
/// span sizes that arise here (see `invertible_in_span`).
pub fn are_equivalent(r1: &Representation, r2: &Representation) -> Option<Matrix<Gr>> {
    if r1.dim != r2.dim {
        return None;
    }
    let basis = intertwiner_space(r1, r2);
    invertible_in_span(&basis, 200_000)
}

// ---- the search ----

#[derive(Clone, Debug, Serialize)]
pub struct ClassRecord {
    /// Structural block counts of the representative.
    pub n: usize,
    pub m: usize,
    /// Label data of the matched catalog row.
    pub label_n: u8,
    pub label_m: u8,
    pub lambda: u8,
    pub dim: usize,
    pub catalog_label: String,
    pub trivial: bool,
    /// Number of enumerated triples falling into this class.
    pub members: usize,
    /// Block data of the canonical representative.
    pub representative_a: Matrix<Gr>,
    pub representative_b: Matrix<Gr>,
    pub representative_c: Matrix<Gr>,
}

/// Lower shift Jordan cell of size `n` (zero matrix for `n = 1`).
pub fn jordan_cell(n: usize) -> Matrix<Gr> {
    Matrix::from_fn(n, n, |r, c| {
        if r == c + 1 { Gr::one() } else { Gr::zero() }
    })
}

/// Enumerates and classifies the block triples with `A` a single Jordan
/// cell, coefficients of `B` and `C` drawn from `coeffs`, and
/// `-1 <= n - m <= 2`, `n <= nmax`. Returns the equivalence classes,
/// each matched against the catalog.
pub fn search_solutions(nmax: usize, coeffs: &[i64]) -> Vec<ClassRecord> {
    let mut classes: Vec<(AbcTriple, usize)> = Vec::new();

    // The trivial scalar representation: no spin-1 block, one slot.
    if nmax >= usize::from(false) {
        let t = AbcTriple {
            a: Matrix::zeros(0, 0),
            b: Matrix::zeros(0, 1),
            c: Matrix::zeros(1, 0),
        };
        classes.push((t, 1));
    }

    for n in 1..=nmax.min(3) {
        let a = jordan_cell(n);
        // Right and left null spaces of A: the linear constraints
        // AB = 0 and CA = 0 force the columns of B (rows of C) there.
        let right_null = {
            let rows: Vec<Vec<Gr>> = (0..n)
                .map(|r| (0..n).map(|c| a.get(r, c).clone()).collect())
                .collect();
            null_space(rows, n)
        };
        let left_null = {
            let at = a.transpose();
            let rows: Vec<Vec<Gr>> = (0..n)
                .map(|r| (0..n).map(|c| at.get(r, c).clone()).collect())
                .collect();
            null_space(rows, n)
        };
        let m_lo = n.saturating_sub(2);
        let m_hi = n + 1;
        for m in m_lo..=m_hi {
            // B = u b^T with u spanning null(A); C = c w^T likewise.
            let combos = coeff_vectors(coeffs, m * right_null.len());
            for bcoef in &combos {
                let b = build_from_null(&right_null, bcoef, n, m, false);
                for ccoef in &combos {
                    let c = build_from_null(&left_null, ccoef, n, m, true);
                    let t = AbcTriple {
                        a: a.clone(),
                        b: b.clone(),
                        c: c.clone(),
                    };
                    if !check_abc(&t).pass() {
                        continue;
                    }
                    if !block_commutant_is_local(&t) {
                        continue;
                    }
                    let mut placed = false;
                    for (rep_t, count) in classes.iter_mut() {
                        if (rep_t.n(), rep_t.m()) == (t.n(), t.m())
                            && block_equivalent(rep_t, &t).is_some()
                        {
                            *count += 1;
                            placed = true;
                            break;
                        }
                    }
                    if !placed {
                        classes.push((t, 1));
                    }
                }
            }
        }
    }

    // Match each class against the catalog rows.
    let catalog: Vec<(RepLabel, AbcTriple)> = VECTOR_LABELS
        .iter()
        .map(|&l| {
            let rep = build_rep(l).unwrap();
            (l, decompose_eta(&rep).unwrap())
        })
        .collect();
    let mut out: Vec<ClassRecord> = classes
        .into_iter()
        .map(|(t, members)| {
            let matched = catalog
                .iter()
                .find(|(_, ct)| block_equivalent(ct, &t).is_some());
            let (label, label_n, label_m, lambda) = match matched {
                Some((l, _)) => {
                    let RepLabel::Vector { n, m, lambda } = *l else {
                        unreachable!()
                    };
                    (l.to_string(), n, m, lambda)
                }
                None => ("unmatched".to_string(), 0, 0, 0),
            };
            ClassRecord {
                n: t.n(),
                m: t.m(),
                label_n,
                label_m,
                lambda,
                dim: t.dim(),
                trivial: label == "D(0,0,0)",
                catalog_label: label,
                members,
                representative_a: t.a,
                representative_b: t.b,
                representative_c: t.c,
            }
        })
        .collect();
    out.sort_by_key(|c| (c.label_n, c.label_m, c.lambda, c.dim));
    out
}

fn coeff_vectors(coeffs: &[i64], len: usize) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * coeffs.len());
        for v in &out {
            for &c in coeffs {
                let mut w = v.clone();
                w.push(c);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

fn build_from_null(
    null_basis: &[Vec<Gr>],
    coeffs: &[i64],
    n: usize,
    m: usize,
    is_c: bool,
) -> Matrix<Gr> {
    // B columns (or C rows) are coefficient combinations of the null basis.
    let k = null_basis.len();
    let mut cols: Vec<Vec<Gr>> = Vec::with_capacity(m);
    for j in 0..m {
        let mut col = vec![Gr::zero(); n];
        for (t, base) in null_basis.iter().enumerate() {
            let c = Gr::from_int(coeffs[j * k + t]);
            for r in 0..n {
                col[r] = col[r].add(&c.mul(&base[r]));
            }
        }
        cols.push(col);
    }
    if is_c {
        Matrix::from_fn(m, n, |r, c| cols[r][c].clone())
    } else {
        Matrix::from_fn(n, m, |r, c| cols[c][r].clone())
    }
}

/// Spinor-side classification: `A (x) sigma` boosts with `A^2 = 0` force
/// `A` to be a sum of two-cell Jordan blocks and zeros; filtering by
/// indecomposability leaves exactly two representations.
pub fn spinor_classification(nmax: usize) -> Vec<(Representation, RepLabel)> {
    let pauli = crate::catalog::pauli();
    let half = Gr::from_ratio(1, 2);
    let mut found = Vec::new();
    for n in 1..=nmax {
        for partition in partitions_into_one_two(n) {
            let mut a = Matrix::zeros(n, n);
            let mut off = 0;
            for part in &partition {
                if *part == 2 {
                    a.set(off + 1, off, Gr::one());
                }
                off += part;
            }
            let mut s = Vec::new();
            let mut eta = Vec::new();
            for axis in 0..3 {
                s.push(Matrix::identity(n).kron(&pauli[axis].scale(&half)));
                eta.push(a.kron(&pauli[axis]));
            }
            let rep = Representation {
                label: if n == 1 {
                    RepLabel::SpinorIrreducible
                } else {
                    RepLabel::SpinorBispinor
                },
                dim: 2 * n,
                s: s.try_into().unwrap(),
                eta: eta.try_into().unwrap(),
            };
            let relations = verify_hg_triples(&rep.s, &rep.eta, "spinor-candidate".into());
            if !relations.pass() || !is_indecomposable(&rep) {
                continue;
            }
            // Match against the two catalog spinor rows.
            for label in [RepLabel::SpinorIrreducible, RepLabel::SpinorBispinor] {
                let cat = build_rep(label).unwrap();
                if cat.dim == rep.dim && are_equivalent(&cat, &rep).is_some() {
                    found.push((rep, label));
                    break;
                }
            }
        }
    }
    found
}

fn partitions_into_one_two(n: usize) -> Vec<Vec<usize>> {
    // Non-increasing partitions with parts in {1, 2}.
    let twos_max = n / 2;
    (0..=twos_max)
        .rev()
        .map(|twos| {
            let mut p = vec![2; twos];
            p.extend(std::iter::repeat(1).take(n - 2 * twos));
            p
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::all_labels;

    #[test]
    fn catalog_triples_pass_block_equations() {
        for &label in VECTOR_LABELS.iter() {
            let rep = build_rep(label).unwrap();
            let t = decompose_eta(&rep).unwrap();
            let report = check_abc(&t);
            assert!(report.pass() && report.a_cubed, "{label}");
            // Reassembly reproduces the catalog matrices exactly.
            let rebuilt = assemble_rep(&t).unwrap();
            for a in 0..3 {
                assert_eq!(rebuilt.eta[a], rep.eta[a], "{label}");
                assert_eq!(rebuilt.s[a], rep.s[a], "{label}");
            }
        }
    }

    #[test]
    fn known_block_data() {
        // D(2,0,0): A is the 2x2 lower cell, B and C empty.
        let rep = build_rep("D(2,0,0)".parse().unwrap()).unwrap();
        let t = decompose_eta(&rep).unwrap();
        assert_eq!(t.a, jordan_cell(2));
        assert_eq!(t.m(), 0);
        // D(1,2,1): A = 0 (1x1), B = (1 0), C = (0 1)^T.
        let rep = build_rep("D(1,2,1)".parse().unwrap()).unwrap();
        let t = decompose_eta(&rep).unwrap();
        assert!(t.a.is_zero());
        assert_eq!(t.b, Matrix::from_fn(1, 2, |_, c| Gr::from_int(1 - c as i64)));
        assert_eq!(t.c, Matrix::from_fn(2, 1, |r, _| Gr::from_int(r as i64)));
    }

    #[test]
    fn abc_failures() {
        // A = 1 (1x1) fails A^2 + BC = 0.
        let t = AbcTriple {
            a: Matrix::identity(1),
            b: Matrix::zeros(1, 0),
            c: Matrix::zeros(0, 1),
        };
        assert!(!check_abc(&t).pass());
        // The 3x3 cell with zero B, C fails: A^2 != 0.
        let t = AbcTriple {
            a: jordan_cell(3),
            b: Matrix::zeros(3, 1),
            c: Matrix::zeros(1, 3),
        };
        let r = check_abc(&t);
        assert!(!r.sq_plus_bc && r.ca && r.ab && r.a_cubed);
    }

    #[test]
    fn loose_jordan_triple_is_rejected() {
        // A two-cell with an unconstrained scalar coupling violates the
        // linear block equation C A = 0, so no representation exists on
        // that data.
        let t = AbcTriple {
            a: jordan_cell(2),
            b: Matrix::zeros(2, 1),
            c: Matrix::from_fn(1, 2, |_, c| Gr::from_int(c as i64)),
        };
        let report = check_abc(&t);
        assert!(!report.ca && report.sq_plus_bc && report.ab);
        assert!(assemble_rep(&t).is_err());
    }

    #[test]
    fn catalog_rows_are_indecomposable() {
        for label in all_labels() {
            let rep = build_rep(label).unwrap();
            assert!(is_indecomposable(&rep), "{label}");
        }
    }

    #[test]
    fn direct_sum_is_decomposable() {
        let r1 = build_rep("D(1,0,0)".parse().unwrap()).unwrap();
        let r0 = build_rep("D(0,0,0)".parse().unwrap()).unwrap();
        let s = [0, 1, 2].map(|a| Matrix::block_diag(&[r1.s[a].clone(), r0.s[a].clone()]));
        let eta = [0, 1, 2].map(|a| Matrix::block_diag(&[r1.eta[a].clone(), r0.eta[a].clone()]));
        let sum = Representation {
            label: r1.label,
            dim: 4,
            s,
            eta,
        };
        assert!(!is_indecomposable(&sum));
    }

    #[test]
    fn conjugated_rep_is_equivalent() {
        let rep = build_rep("D(1,1,1)".parse().unwrap()).unwrap();
        // Conjugate by an invertible rational matrix.
        let p: Matrix<Gr> = Matrix::from_ints(
            4,
            &[1, 0, 2, 0, 0, 1, 0, 0, 0, -1, 1, 0, 3, 0, 0, 1],
        );
        let p_inv = p.inverse().unwrap();
        let conj = Representation {
            label: rep.label,
            dim: 4,
            s: [0, 1, 2].map(|a| p.mul(&rep.s[a]).mul(&p_inv)),
            eta: [0, 1, 2].map(|a| p.mul(&rep.eta[a]).mul(&p_inv)),
        };
        let witness = are_equivalent(&rep, &conj).expect("equivalent");
        for a in 0..3 {
            assert_eq!(witness.mul(&rep.s[a]), conj.s[a].mul(&witness));
            assert_eq!(witness.mul(&rep.eta[a]), conj.eta[a].mul(&witness));
        }
    }

    #[test]
    fn distinct_rows_are_inequivalent() {
        let pairs = [("D(1,1,0)", "D(1,1,1)"), ("D(2,1,0)", "D(2,1,1)")];
        for (x, y) in pairs {
            let rx = build_rep(x.parse().unwrap()).unwrap();
            let ry = build_rep(y.parse().unwrap()).unwrap();
            assert!(are_equivalent(&rx, &ry).is_none(), "{x} vs {y}");
        }
    }

    #[test]
    fn search_finds_the_ten_classes() {
        let classes = search_solutions(3, &[-1, 0, 1]);
        assert_eq!(classes.len(), 10, "{classes:#?}");
        let labels: Vec<&str> = classes.iter().map(|c| c.catalog_label.as_str()).collect();
        let expected: Vec<String> = VECTOR_LABELS.iter().map(|l| l.to_string()).collect();
        assert_eq!(labels, expected.iter().map(|s| s.as_str()).collect::<Vec<_>>());
    }

    #[test]
    fn search_restricted_to_one_block() {
        let classes = search_solutions(1, &[-1, 0, 1]);
        let labels: Vec<&str> = classes.iter().map(|c| c.catalog_label.as_str()).collect();
        assert_eq!(
            labels,
            vec!["D(0,0,0)", "D(1,0,0)", "D(1,1,0)", "D(1,1,1)", "D(1,2,1)"]
        );
    }

    #[test]
    fn spinor_classification_finds_two() {
        let found = spinor_classification(3);
        assert_eq!(found.len(), 2);
        let labels: Vec<RepLabel> = found.iter().map(|(_, l)| *l).collect();
        assert!(labels.contains(&RepLabel::SpinorIrreducible));
        assert!(labels.contains(&RepLabel::SpinorBispinor));
    }
}
