//! Exact scalar towers: Q(i) and Q(i, sqrt(2)).
//!
//! `GaussianRational` is the base field for every matrix in the catalog.
//! `Sqrt2Rational` adjoins sqrt(2); it is needed by the Lorentz-side
//! constructions and the Clifford-type matrices, whose entries contain
//! sqrt(2) factors. Both are exact: equality is decidable and arithmetic
//! never rounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Field operations required of every matrix entry type.
///
/// `conj` is complex conjugation (identity on real rings) and `inv`
/// returns `None` for non-units, which lets non-field rings such as
/// polynomials and Laurent series share the same matrix code.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_int(n: i64) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn conj(&self) -> Self;
    fn inv(&self) -> Option<Self>;
}

/// Scalars containing the imaginary unit.
pub trait ComplexScalar: Scalar {
    fn imaginary_unit() -> Self;
}

fn big_ratio(num: i64, den: i64) -> BigRational {
    assert!(den != 0, "zero denominator");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// An element of Q(i): exact complex number with rational real and
/// imaginary parts, stored reduced.
#[derive(Clone, PartialEq, Eq, Debug, Default, Hash)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        GaussianRational {
            re: big_ratio(num, den),
            im: BigRational::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    /// `(num/den)*i`.
    pub fn i_ratio(num: i64, den: i64) -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: big_ratio(num, den),
        }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Squared modulus, a nonnegative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn to_c64(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        GaussianRational::from_ratio(n, 1)
    }
}

impl Scalar for GaussianRational {
    fn zero() -> Self {
        GaussianRational::default()
    }
    fn one() -> Self {
        GaussianRational::from_ratio(1, 1)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn from_int(n: i64) -> Self {
        GaussianRational::from_ratio(n, 1)
    }
    fn add(&self, rhs: &Self) -> Self {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
    fn neg(&self) -> Self {
        GaussianRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
    fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussianRational {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }
}


impl ComplexScalar for GaussianRational {
    fn imaginary_unit() -> Self {
        GaussianRational::i()
    }
}

fn fmt_rational(r: &BigRational) -> String {
    r.to_string()
}

impl fmt::Display for GaussianRational {
    /// Canonical form `a/b+c/d*i`; a zero part is dropped, zero prints `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rational(&self.re));
        }
        if self.re.is_zero() {
            return write!(f, "{}*i", fmt_rational(&self.im));
        }
        if self.im.is_negative() {
            write!(
                f,
                "{}-{}*i",
                fmt_rational(&self.re),
                fmt_rational(&(-self.im.clone()))
            )
        } else {
            write!(f, "{}+{}*i", fmt_rational(&self.re), fmt_rational(&self.im))
        }
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(BigRational::from_integer(n))
    }
}

impl std::str::FromStr for GaussianRational {
    type Err = crate::error::Error;

    /// Accepts `a/b`, `c/d*i`, `i`, `-i`, and `a/b+c/d*i` (either sign).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || crate::error::Error::Parse(format!("bad scalar `{s}`"));
        if compact.is_empty() {
            return Err(err());
        }
        // Split at the last top-level +/- that is not the leading sign.
        let bytes = compact.as_bytes();
        let mut split = None;
        for (idx, &b) in bytes.iter().enumerate().skip(1) {
            if (b == b'+' || b == b'-') && bytes[idx - 1] != b'/' && bytes[idx - 1] != b'*' {
                split = Some(idx);
            }
        }
        let parse_part = |p: &str| -> Option<(BigRational, bool)> {
            // Returns (value, is_imaginary).
            if let Some(stripped) = p.strip_suffix("*i") {
                Some((parse_rational(stripped)?, true))
            } else if p == "i" {
                Some((BigRational::one(), true))
            } else if p == "-i" {
                Some((-BigRational::one(), true))
            } else {
                Some((parse_rational(p)?, false))
            }
        };
        let mut out = GaussianRational::default();
        let parts: Vec<&str> = match split {
            Some(idx) => vec![&compact[..idx], &compact[idx..]],
            None => vec![compact.as_str()],
        };
        for part in parts {
            let part = part.strip_prefix('+').unwrap_or(part);
            let (val, imag) = parse_part(part).ok_or_else(err)?;
            if imag {
                if !out.im.is_zero() {
                    return Err(err());
                }
                out.im = val;
            } else {
                if !out.re.is_zero() {
                    return Err(err());
                }
                out.re = val;
            }
        }
        Ok(out)
    }
}

impl serde::Serialize for GaussianRational {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for GaussianRational {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An element of Q(i, sqrt(2)), stored as `base + root * sqrt(2)` with
/// Gaussian-rational `base` and `root`.
#[derive(Clone, PartialEq, Eq, Debug, Default, Hash)]
pub struct Sqrt2Rational {
    pub base: GaussianRational,
    pub root: GaussianRational,
}

impl Sqrt2Rational {
    pub fn new(base: GaussianRational, root: GaussianRational) -> Self {
        Sqrt2Rational { base, root }
    }

    pub fn sqrt2() -> Self {
        Sqrt2Rational {
            base: GaussianRational::zero(),
            root: GaussianRational::one(),
        }
    }

    /// `(num/den) * sqrt(2)`.
    pub fn sqrt2_ratio(num: i64, den: i64) -> Self {
        Sqrt2Rational {
            base: GaussianRational::zero(),
            root: GaussianRational::from_ratio(num, den),
        }
    }

    /// `1/sqrt(2) = sqrt(2)/2`.
    pub fn inv_sqrt2() -> Self {
        Sqrt2Rational::sqrt2_ratio(1, 2)
    }

    pub fn i() -> Self {
        Sqrt2Rational::from(GaussianRational::i())
    }

    /// True when the sqrt(2) part vanishes.
    pub fn is_gaussian(&self) -> bool {
        self.root.is_zero()
    }

    pub fn to_c64(&self) -> num_complex::Complex64 {
        self.base.to_c64() + self.root.to_c64() * std::f64::consts::SQRT_2
    }
}

impl From<GaussianRational> for Sqrt2Rational {
    fn from(base: GaussianRational) -> Self {
        Sqrt2Rational {
            base,
            root: GaussianRational::zero(),
        }
    }
}

impl From<i64> for Sqrt2Rational {
    fn from(n: i64) -> Self {
        Sqrt2Rational::from(GaussianRational::from(n))
    }
}

impl Scalar for Sqrt2Rational {
    fn zero() -> Self {
        Sqrt2Rational::default()
    }
    fn one() -> Self {
        Sqrt2Rational::from(GaussianRational::one())
    }
    fn is_zero(&self) -> bool {
        self.base.is_zero() && self.root.is_zero()
    }
    fn from_int(n: i64) -> Self {
        Sqrt2Rational::from(GaussianRational::from_int(n))
    }
    fn add(&self, rhs: &Self) -> Self {
        Sqrt2Rational {
            base: self.base.add(&rhs.base),
            root: self.root.add(&rhs.root),
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        Sqrt2Rational {
            base: self.base.sub(&rhs.base),
            root: self.root.sub(&rhs.root),
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        // (a + b r)(c + d r) = (ac + 2bd) + (ad + bc) r, r^2 = 2.
        let two = GaussianRational::from_int(2);
        Sqrt2Rational {
            base: self
                .base
                .mul(&rhs.base)
                .add(&two.mul(&self.root.mul(&rhs.root))),
            root: self.base.mul(&rhs.root).add(&self.root.mul(&rhs.base)),
        }
    }
    fn neg(&self) -> Self {
        Sqrt2Rational {
            base: self.base.neg(),
            root: self.root.neg(),
        }
    }
    fn conj(&self) -> Self {
        // sqrt(2) is real, so complex conjugation acts componentwise.
        Sqrt2Rational {
            base: self.base.conj(),
            root: self.root.conj(),
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // 1/(a + b r) = (a - b r)/(a^2 - 2 b^2); the denominator is a
        // nonzero element of Q(i) because sqrt(2) is irrational over Q(i).
        let two = GaussianRational::from_int(2);
        let den = self
            .base
            .mul(&self.base)
            .sub(&two.mul(&self.root.mul(&self.root)));
        let den_inv = den.inv()?;
        Some(Sqrt2Rational {
            base: self.base.mul(&den_inv),
            root: self.root.neg().mul(&den_inv),
        })
    }
}


impl ComplexScalar for Sqrt2Rational {
    fn imaginary_unit() -> Self {
        Sqrt2Rational::i()
    }
}

impl fmt::Display for Sqrt2Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.root.is_zero() {
            return write!(f, "{}", self.base);
        }
        if self.base.is_zero() {
            return write!(f, "({})*s2", self.root);
        }
        write!(f, "({})+({})*s2", self.base, self.root)
    }
}

impl serde::Serialize for Sqrt2Rational {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

/// Complex double-precision adapter used only for the numeric cross-checks
/// (finite rotations, contraction limits at small parameter values).
#[derive(Clone, Copy, PartialEq, Debug, Default)]
pub struct CF64(pub num_complex::Complex64);

impl fmt::Display for CF64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Scalar for CF64 {
    fn zero() -> Self {
        CF64(num_complex::Complex64::new(0.0, 0.0))
    }
    fn one() -> Self {
        CF64(num_complex::Complex64::new(1.0, 0.0))
    }
    fn is_zero(&self) -> bool {
        self.0.norm() == 0.0
    }
    fn from_int(n: i64) -> Self {
        CF64(num_complex::Complex64::new(n as f64, 0.0))
    }
    fn add(&self, rhs: &Self) -> Self {
        CF64(self.0 + rhs.0)
    }
    fn sub(&self, rhs: &Self) -> Self {
        CF64(self.0 - rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        CF64(self.0 * rhs.0)
    }
    fn neg(&self) -> Self {
        CF64(-self.0)
    }
    fn conj(&self) -> Self {
        CF64(self.0.conj())
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(CF64(self.0.inv()))
        }
    }
}


impl ComplexScalar for CF64 {
    fn imaginary_unit() -> Self {
        CF64(num_complex::Complex64::i())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_field_axioms() {
        let a = GaussianRational::new(big_ratio(3, 4), big_ratio(-2, 5));
        let b = GaussianRational::new(big_ratio(-1, 3), big_ratio(7, 2));
        assert_eq!(a.mul(&b), b.mul(&a));
        let inv = a.inv().unwrap();
        assert_eq!(a.mul(&inv), GaussianRational::one());
        assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn gaussian_display_roundtrip() {
        for s in ["0", "3", "-1/2", "1*i", "-2/3*i", "1/2+1/3*i", "5-2*i"] {
            let v: GaussianRational = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        let i2: GaussianRational = "i".parse().unwrap();
        assert_eq!(i2, GaussianRational::i());
    }

    #[test]
    fn sqrt2_inverse() {
        let x = Sqrt2Rational::new(
            GaussianRational::new(big_ratio(1, 2), big_ratio(1, 3)),
            GaussianRational::new(big_ratio(-2, 1), big_ratio(1, 7)),
        );
        assert_eq!(x.mul(&x.inv().unwrap()), Sqrt2Rational::one());
        // sqrt2 * sqrt2 = 2, sqrt2 * 1/sqrt2 = 1
        assert_eq!(
            Sqrt2Rational::sqrt2().mul(&Sqrt2Rational::sqrt2()),
            Sqrt2Rational::from_int(2)
        );
        assert_eq!(
            Sqrt2Rational::sqrt2().mul(&Sqrt2Rational::inv_sqrt2()),
            Sqrt2Rational::one()
        );
    }
}
