//! Parser for the polynomial input grammar: rational coefficients,
//! variables `t, x1, x2, x3`, operators `+ - * ^` and parentheses.

use super::{fvar, FPoly, EM_ARITY, VAR_T, VAR_X};
use crate::error::{Error, Result};
use crate::poly::MPoly;
use crate::scalar::{GaussianRational as Gr, Scalar};

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
}

pub fn parse_poly(input: &str) -> Result<FPoly> {
    let mut p = Parser {
        chars: input.chars().peekable(),
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.chars.peek().is_some() {
        return Err(Error::Parse(format!("trailing input in `{input}`")));
    }
    Ok(poly)
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn expr(&mut self) -> Result<FPoly> {
        self.skip_ws();
        let mut negate = false;
        if matches!(self.chars.peek(), Some('-')) {
            self.chars.next();
            negate = true;
        } else if matches!(self.chars.peek(), Some('+')) {
            self.chars.next();
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            self.skip_ws();
            match self.chars.peek() {
                Some('+') => {
                    self.chars.next();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some('-') => {
                    self.chars.next();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<FPoly> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.chars.peek() {
                Some('*') => {
                    self.chars.next();
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<FPoly> {
        let base = self.base()?;
        self.skip_ws();
        if matches!(self.chars.peek(), Some('^')) {
            self.chars.next();
            self.skip_ws();
            let mut digits = String::new();
            while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
                digits.push(self.chars.next().unwrap());
            }
            let e: u32 = digits
                .parse()
                .map_err(|_| Error::Parse("bad exponent".into()))?;
            let mut acc = MPoly::constant(EM_ARITY, Gr::one());
            for _ in 0..e {
                acc = acc.mul(&base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<FPoly> {
        self.skip_ws();
        match self.chars.peek() {
            Some('(') => {
                self.chars.next();
                let inner = self.expr()?;
                self.skip_ws();
                if self.chars.next() != Some(')') {
                    return Err(Error::Parse("expected `)`".into()));
                }
                Ok(inner)
            }
            Some('t') => {
                self.chars.next();
                Ok(fvar(VAR_T))
            }
            Some('x') => {
                self.chars.next();
                match self.chars.next() {
                    Some('1') => Ok(fvar(VAR_X[0])),
                    Some('2') => Ok(fvar(VAR_X[1])),
                    Some('3') => Ok(fvar(VAR_X[2])),
                    other => Err(Error::Parse(format!("unknown variable x{other:?}"))),
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let mut digits = String::new();
                while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
                    digits.push(self.chars.next().unwrap());
                }
                let num: i64 = digits
                    .parse()
                    .map_err(|_| Error::Parse("bad integer".into()))?;
                self.skip_ws();
                if matches!(self.chars.peek(), Some('/')) {
                    self.chars.next();
                    self.skip_ws();
                    let mut den_digits = String::new();
                    while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
                        den_digits.push(self.chars.next().unwrap());
                    }
                    let den: i64 = den_digits
                        .parse()
                        .map_err(|_| Error::Parse("bad denominator".into()))?;
                    if den == 0 {
                        return Err(Error::Parse("zero denominator".into()));
                    }
                    return Ok(MPoly::constant(EM_ARITY, Gr::from_ratio(num, den)));
                }
                Ok(MPoly::constant(EM_ARITY, Gr::from_int(num)))
            }
            other => Err(Error::Parse(format!("unexpected input {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_basic_grammar() {
        let p = parse_poly("t^2*x1 - 3/2*x2 + (x3 - 1)*x1").unwrap();
        let q = {
            let t = fvar(VAR_T);
            let x1 = fvar(VAR_X[0]);
            let x2 = fvar(VAR_X[1]);
            let x3 = fvar(VAR_X[2]);
            t.mul(&t)
                .mul(&x1)
                .sub(&x2.scale(&Gr::from_ratio(3, 2)))
                .add(&x3.sub(&MPoly::constant(EM_ARITY, Gr::one())).mul(&x1))
        };
        assert_eq!(p, q);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_poly("x4").is_err());
        assert!(parse_poly("t +").is_err());
        assert!(parse_poly("(t").is_err());
    }
}
