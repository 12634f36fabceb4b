//! Fallible kernel entry points with shape validation.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// `X Y - Y X`, exactly.
pub fn commutator<K: Scalar>(x: &Matrix<K>, y: &Matrix<K>) -> Result<Matrix<K>> {
    if !x.is_square() || x.nrows() != y.nrows() || !y.is_square() {
        return Err(Error::Shape(format!(
            "commutator needs equal square shapes, got {}x{} and {}x{}",
            x.nrows(),
            x.ncols(),
            y.nrows(),
            y.ncols()
        )));
    }
    Ok(x.commutator(y))
}

/// Exact exponential of a nilpotent matrix as the finite sum of powers
/// divided by factorials. Rejects non-nilpotent input.
pub fn exp_nilpotent<K: Scalar>(x: &Matrix<K>) -> Result<Matrix<K>> {
    if !x.is_square() {
        return Err(Error::Shape("exp needs a square matrix".into()));
    }
    let dim = x.nrows();
    let Some(index) = x.nilpotency_index() else {
        return Err(Error::NotNilpotent { dim, power: dim });
    };
    let mut acc = Matrix::identity(dim);
    let mut power = Matrix::identity(dim);
    let mut factorial: i64 = 1;
    for k in 1..index {
        power = power.mul(x);
        factorial *= k as i64;
        let inv = K::from_int(factorial)
            .inv()
            .expect("factorial is invertible");
        acc = acc.add(&power.scale(&inv));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational as Gr;

    #[test]
    fn exp_of_zero_is_identity() {
        let z: Matrix<Gr> = Matrix::zeros(3, 3);
        assert_eq!(exp_nilpotent(&z).unwrap(), Matrix::identity(3));
    }

    #[test]
    fn exp_rejects_invertible() {
        let m: Matrix<Gr> = Matrix::identity(2);
        assert!(matches!(
            exp_nilpotent(&m),
            Err(Error::NotNilpotent { .. })
        ));
    }

    #[test]
    fn exp_inverse_is_exp_of_negative() {
        let j: Matrix<Gr> = Matrix::from_ints(3, &[0, 0, 0, 1, 0, 0, 0, 1, 0]);
        let e = exp_nilpotent(&j).unwrap();
        let e_inv = exp_nilpotent(&j.neg()).unwrap();
        assert_eq!(e.mul(&e_inv), Matrix::identity(3));
    }

    #[test]
    fn commutator_shape_error() {
        let a: Matrix<Gr> = Matrix::identity(2);
        let b: Matrix<Gr> = Matrix::identity(3);
        assert!(matches!(commutator(&a, &b), Err(Error::Shape(_))));
    }
}
