//! Multivariate polynomials over an exact scalar, used for symbolic
//! boost parameters, polynomial field configurations and covariance
//! residuals. The variable set is positional; display names are supplied
//! by the caller.

use crate::scalar::{ComplexScalar, Scalar};
use std::collections::BTreeMap;
use std::fmt;

pub type Monomial = Vec<u16>;

#[derive(Clone, Debug)]
pub struct MPoly<K: Scalar> {
    arity: usize,
    terms: BTreeMap<Monomial, K>,
}

/// Equality ignores the declared arity: monomials are compared with
/// trailing zero exponents stripped, so a constant of arity 0 equals the
/// same constant in any variable set.
impl<K: Scalar> PartialEq for MPoly<K> {
    fn eq(&self, other: &Self) -> bool {
        let trim = |m: &Monomial| {
            let mut t = m.clone();
            while t.last() == Some(&0) {
                t.pop();
            }
            t
        };
        let a: BTreeMap<Monomial, &K> = self.terms.iter().map(|(m, c)| (trim(m), c)).collect();
        let b: BTreeMap<Monomial, &K> = other.terms.iter().map(|(m, c)| (trim(m), c)).collect();
        a.len() == b.len()
            && a.iter()
                .all(|(m, c)| b.get(m).map_or(false, |d| *c == *d))
    }
}

impl<K: Scalar> MPoly<K> {
    pub fn zero_with(arity: usize) -> Self {
        MPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, k: K) -> Self {
        let mut p = MPoly::zero_with(arity);
        if !k.is_zero() {
            p.terms.insert(vec![0; arity], k);
        }
        p
    }

    pub fn var(arity: usize, idx: usize) -> Self {
        assert!(idx < arity);
        let mut mono = vec![0u16; arity];
        mono[idx] = 1;
        let mut p = MPoly::zero_with(arity);
        p.terms.insert(mono, K::one());
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &K)> {
        self.terms.iter()
    }

    pub fn insert_term(&mut self, mono: Monomial, k: K) {
        assert_eq!(mono.len(), self.arity);
        let v = match self.terms.remove(&mono) {
            Some(prev) => prev.add(&k),
            None => k,
        };
        if !v.is_zero() {
            self.terms.insert(mono, v);
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.iter().all(|&e| e == 0))
    }

    pub fn constant_term(&self) -> K {
        self.terms
            .get(&vec![0; self.arity])
            .cloned()
            .unwrap_or_else(K::zero)
    }

    pub fn scale(&self, k: &K) -> Self {
        if k.is_zero() {
            return MPoly::zero_with(self.arity);
        }
        let mut out = MPoly::zero_with(self.arity);
        for (m, c) in &self.terms {
            out.insert_term(m.clone(), c.mul(k));
        }
        out
    }

    /// Partial derivative with respect to variable `idx`; a variable
    /// absent from the polynomial's variable set differentiates to zero.
    pub fn derivative(&self, idx: usize) -> Self {
        if idx >= self.arity {
            return MPoly::zero_with(self.arity);
        }
        let mut out = MPoly::zero_with(self.arity);
        for (m, c) in &self.terms {
            let e = m[idx];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2[idx] = e - 1;
            out.insert_term(m2, c.mul(&K::from_int(e as i64)));
        }
        out
    }

    /// Substitutes `value` for variable `idx` (same arity).
    pub fn substitute(&self, idx: usize, value: &MPoly<K>) -> Self {
        assert_eq!(value.arity, self.arity);
        let mut out = MPoly::zero_with(self.arity);
        for (m, c) in &self.terms {
            let mut reduced = m.clone();
            let e = reduced[idx];
            reduced[idx] = 0;
            let mut term = MPoly::zero_with(self.arity);
            term.insert_term(reduced, c.clone());
            for _ in 0..e {
                term = term.mul(value);
            }
            out = out.add(&term);
        }
        out
    }

    /// Full evaluation at scalar values (extra trailing values are ignored).
    pub fn eval(&self, values: &[K]) -> K {
        assert!(values.len() >= self.arity);
        let mut acc = K::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (idx, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&values[idx]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    pub fn display_with<'a>(&'a self, names: &'a [&'a str]) -> MPolyDisplay<'a, K> {
        MPolyDisplay { poly: self, names }
    }
}

impl<K: Scalar> Scalar for MPoly<K> {
    /// Arity-0 zero; binary operations unify arity with the other operand.
    fn zero() -> Self {
        MPoly::zero_with(0)
    }
    fn one() -> Self {
        MPoly::constant(0, K::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_int(n: i64) -> Self {
        MPoly::constant(0, K::from_int(n))
    }
    fn add(&self, rhs: &Self) -> Self {
        let (a, b) = unify(self, rhs);
        let mut out = a.clone();
        for (m, c) in &b.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        let (a, b) = unify(self, rhs);
        let mut out = MPoly::zero_with(a.arity);
        for (m1, c1) in &a.terms {
            for (m2, c2) in &b.terms {
                let mono: Monomial = m1.iter().zip(m2.iter()).map(|(x, y)| x + y).collect();
                out.insert_term(mono, c1.mul(c2));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        let mut out = MPoly::zero_with(self.arity);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), c.neg());
        }
        out
    }
    fn conj(&self) -> Self {
        // Variables are real symbols; conjugation acts on coefficients.
        let mut out = MPoly::zero_with(self.arity);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), c.conj());
        }
        out
    }
    fn inv(&self) -> Option<Self> {
        if self.is_constant() {
            Some(MPoly::constant(self.arity, self.constant_term().inv()?))
        } else {
            None
        }
    }
}

/// Pads the lower-arity operand with trailing fresh variables so that
/// constants built by `Scalar::from_int` combine with any polynomial.
fn unify<'a, K: Scalar>(a: &'a MPoly<K>, b: &'a MPoly<K>) -> (MPoly<K>, MPoly<K>) {
    let arity = a.arity.max(b.arity);
    (pad(a, arity), pad(b, arity))
}

fn pad<K: Scalar>(p: &MPoly<K>, arity: usize) -> MPoly<K> {
    if p.arity == arity {
        return p.clone();
    }
    let mut out = MPoly::zero_with(arity);
    for (m, c) in &p.terms {
        let mut mono = m.clone();
        mono.resize(arity, 0);
        out.terms.insert(mono, c.clone());
    }
    out
}

impl<K: ComplexScalar> ComplexScalar for MPoly<K> {
    fn imaginary_unit() -> Self {
        MPoly::constant(0, K::imaginary_unit())
    }
}

pub struct MPolyDisplay<'a, K: Scalar> {
    poly: &'a MPoly<K>,
    names: &'a [&'a str],
}

impl<K: Scalar> fmt::Display for MPolyDisplay<'_, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.poly.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (idx, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = self.names.get(idx).copied().unwrap_or("?");
                if e == 1 {
                    write!(f, "*{name}")?;
                } else {
                    write!(f, "*{name}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl<K: Scalar> fmt::Display for MPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        static FALLBACK: [&str; 12] = [
            "x0", "x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8", "x9", "x10", "x11",
        ];
        write!(f, "{}", self.display_with(&FALLBACK[..self.arity.min(12)]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational as Gr;

    type P = MPoly<Gr>;

    #[test]
    fn derivative_of_product() {
        let x = P::var(2, 0);
        let y = P::var(2, 1);
        let p = x.mul(&x).mul(&y).add(&y.mul(&y)); // x^2 y + y^2
        let dx = p.derivative(0);
        assert_eq!(dx, x.scale(&Gr::from_int(2)).mul(&y));
        let dy = p.derivative(1);
        assert_eq!(dy, x.mul(&x).add(&y.scale(&Gr::from_int(2))));
    }

    #[test]
    fn substitution() {
        let x = P::var(2, 0);
        let y = P::var(2, 1);
        // x^2 with x -> x + y
        let p = x.mul(&x).substitute(0, &x.add(&y));
        let expect = x
            .mul(&x)
            .add(&x.mul(&y).scale(&Gr::from_int(2)))
            .add(&y.mul(&y));
        assert_eq!(p, expect);
    }
}
