//! Finite Laurent polynomials in the contraction parameter.
//!
//! A `Laurent<K>` is a finitely supported map from integer exponents to
//! coefficients; zero coefficients are never stored. Matrices over
//! `Laurent<K>` are the carrier for contraction computations: conjugate
//! exactly, then take the exponent-zero part as the limit.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Debug, Default)]
pub struct Laurent<K: Scalar> {
    terms: BTreeMap<i64, K>,
}

impl<K: Scalar> Laurent<K> {
    pub fn constant(k: K) -> Self {
        let mut terms = BTreeMap::new();
        if !k.is_zero() {
            terms.insert(0, k);
        }
        Laurent { terms }
    }

    /// `k * eps^exp`.
    pub fn monomial(k: K, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !k.is_zero() {
            terms.insert(exp, k);
        }
        Laurent { terms }
    }

    pub fn eps(exp: i64) -> Self {
        Laurent::monomial(K::one(), exp)
    }

    pub fn coeff(&self, exp: i64) -> K {
        self.terms.get(&exp).cloned().unwrap_or_else(K::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &K)> {
        self.terms.iter()
    }

    /// True when the support is a single exponent (a unit of the ring).
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Evaluates at a nonzero scalar value of the parameter.
    pub fn specialize(&self, eps: &K) -> K {
        let mut acc = K::zero();
        let inv = eps.inv().expect("specialization point must be nonzero");
        for (&e, c) in &self.terms {
            let mut p = K::one();
            if e >= 0 {
                for _ in 0..e {
                    p = p.mul(eps);
                }
            } else {
                for _ in 0..(-e) {
                    p = p.mul(&inv);
                }
            }
            acc = acc.add(&c.mul(&p));
        }
        acc
    }
}

impl<K: Scalar> Scalar for Laurent<K> {
    fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
        }
    }
    fn one() -> Self {
        Laurent::constant(K::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_int(n: i64) -> Self {
        Laurent::constant(K::from_int(n))
    }
    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.terms.clone();
        for (&e, c) in &rhs.terms {
            let v = match out.remove(&e) {
                Some(prev) => prev.add(c),
                None => c.clone(),
            };
            if !v.is_zero() {
                out.insert(e, v);
            }
        }
        Laurent { terms: out }
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        let mut out: BTreeMap<i64, K> = BTreeMap::new();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                let e = e1 + e2;
                let add = c1.mul(c2);
                let v = match out.remove(&e) {
                    Some(prev) => prev.add(&add),
                    None => add,
                };
                if !v.is_zero() {
                    out.insert(e, v);
                }
            }
        }
        Laurent { terms: out }
    }
    fn neg(&self) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(&e, c)| (e, c.neg())).collect(),
        }
    }
    fn conj(&self) -> Self {
        // The parameter is real; conjugation acts on coefficients.
        Laurent {
            terms: self.terms.iter().map(|(&e, c)| (e, c.conj())).collect(),
        }
    }
    fn inv(&self) -> Option<Self> {
        // Units are the monomials.
        if self.terms.len() != 1 {
            return None;
        }
        let (&e, c) = self.terms.iter().next().unwrap();
        Some(Laurent::monomial(c.inv()?, -e))
    }
}

impl<K: Scalar> fmt::Display for Laurent<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*eps")?,
                _ => write!(f, "({c})*eps^{e}")?,
            }
        }
        Ok(())
    }
}

/// Lifts a scalar matrix into the Laurent ring.
pub fn lift<K: Scalar>(m: &Matrix<K>) -> Matrix<Laurent<K>> {
    m.map(|v| Laurent::constant(v.clone()))
}

/// The parameter-to-zero limit: keeps the exponent-zero coefficient and
/// fails on any surviving negative power, naming the offending entry.
pub fn laurent_limit<K: Scalar>(m: &Matrix<Laurent<K>>) -> Result<Matrix<K>> {
    for (r, c, v) in m.entries() {
        if let Some(e) = v.min_exp() {
            if e < 0 {
                return Err(Error::ContractionUndefined {
                    row: r,
                    col: c,
                    order: -e,
                });
            }
        }
    }
    Ok(m.map(|v| v.coeff(0)))
}

/// Entrywise specialization at a nonzero parameter value.
pub fn specialize<K: Scalar>(m: &Matrix<Laurent<K>>, eps: &K) -> Matrix<K> {
    m.map(|v| v.specialize(eps))
}

/// Exact inverse of a monomial matrix (exactly one nonzero single-term
/// entry in every row and column). All contracting matrices used here are
/// of this shape, as are their signed-permutation adjustments.
pub fn invert_monomial_matrix<K: Scalar>(m: &Matrix<Laurent<K>>) -> Result<Matrix<Laurent<K>>> {
    if !m.is_square() {
        return Err(Error::Shape("monomial inverse requires square".into()));
    }
    let n = m.nrows();
    let mut out = Matrix::zeros(n, n);
    let mut seen_col = vec![false; n];
    for r in 0..n {
        let mut hit = None;
        for c in 0..n {
            if !m.get(r, c).is_zero() {
                if hit.is_some() {
                    return Err(Error::Unsupported(
                        "Laurent inverse implemented for monomial matrices only".into(),
                    ));
                }
                hit = Some(c);
            }
        }
        let c = hit.ok_or(Error::Singular)?;
        if seen_col[c] {
            return Err(Error::Singular);
        }
        seen_col[c] = true;
        let inv = m
            .get(r, c)
            .inv()
            .ok_or_else(|| Error::Unsupported("entry is not a unit".into()))?;
        out.set(c, r, inv);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational as Gr;

    #[test]
    fn limit_keeps_constant_term() {
        let x: Matrix<Gr> = Matrix::from_ints(2, &[1, 2, 3, 4]);
        let y: Matrix<Gr> = Matrix::from_ints(2, &[5, 0, 0, 5]);
        // eps*X + Y -> Y
        let m = lift(&x).scale(&Laurent::eps(1)).add(&lift(&y));
        assert_eq!(laurent_limit(&m).unwrap(), y);
    }

    #[test]
    fn limit_rejects_poles() {
        let x: Matrix<Gr> = Matrix::from_ints(2, &[1, 0, 0, 0]);
        let m = lift(&x).scale(&Laurent::eps(-1));
        match laurent_limit(&m) {
            Err(Error::ContractionUndefined { row: 0, col: 0, order: 1 }) => {}
            other => panic!("expected pole error, got {other:?}"),
        }
    }

    #[test]
    fn monomial_inverse() {
        let mut u: Matrix<Laurent<Gr>> = Matrix::zeros(2, 2);
        u.set(0, 0, Laurent::eps(2));
        u.set(1, 1, Laurent::monomial(Gr::from_int(3), -1));
        let inv = invert_monomial_matrix(&u).unwrap();
        assert_eq!(u.mul(&inv), Matrix::identity(2));
    }
}
