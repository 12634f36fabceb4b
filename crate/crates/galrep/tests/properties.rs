//! Property tests: exactness of the kernel arithmetic, nilpotent
//! exponentials, and confluence of the operator normalization.

use galrep::catalog::{all_labels, build_rep};
use galrep::matrix::Matrix;
use galrep::oper::{FieldName, OpPoly};
use galrep::ops::exp_nilpotent;
use galrep::scalar::{GaussianRational as Gr, Scalar, Sqrt2Rational as Sq};
use num_rational::BigRational;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn small_scalar() -> impl Strategy<Value = Gr> {
    (small_rational(), small_rational()).prop_map(|(re, im)| Gr::new(re, im))
}

fn small_matrix(n: usize) -> impl Strategy<Value = Matrix<Gr>> {
    proptest::collection::vec(small_scalar(), n * n)
        .prop_map(move |data| Matrix::from_vec(n, n, data))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matrix_multiplication_is_associative(
        a in small_matrix(3),
        b in small_matrix(3),
        c in small_matrix(3),
    ) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn matrix_distributivity(
        a in small_matrix(3),
        b in small_matrix(3),
        c in small_matrix(3),
    ) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn reordered_evaluation_agrees(
        a in small_matrix(2),
        b in small_matrix(2),
        c in small_matrix(2),
        d in small_matrix(2),
    ) {
        // (AB)(CD) computed two different ways.
        let left = a.mul(&b).mul(&c.mul(&d));
        let right = a.mul(&b.mul(&c)).mul(&d);
        prop_assert_eq!(left, right);
    }
}

#[test]
fn catalog_boost_exponentials_invert() {
    let v = [
        BigRational::new(1.into(), 2.into()),
        BigRational::new((-2).into(), 3.into()),
        BigRational::new(5.into(), 7.into()),
    ];
    for label in all_labels() {
        let rep = build_rep(label).unwrap();
        let mut x: Matrix<Gr> = Matrix::zeros(rep.dim, rep.dim);
        for a in 0..3 {
            let coeff = Gr::new(BigRational::from_integer(0.into()), v[a].clone());
            x = x.add(&rep.eta[a].scale(&coeff));
        }
        let e = exp_nilpotent(&x).unwrap();
        let e_inv = exp_nilpotent(&x.neg()).unwrap();
        assert_eq!(e.mul(&e_inv), Matrix::identity(rep.dim), "{label}");
    }
}

// ---- operator normalization confluence ----

#[derive(Clone, Debug)]
enum Expr {
    Atom(u8),
    Mul(Box<Expr>, Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
}

fn atom_poly(idx: u8) -> OpPoly {
    let pauli = galrep::catalog::pauli();
    match idx % 8 {
        0 => OpPoly::momentum(2, 0),
        1 => OpPoly::momentum(2, 1),
        2 => OpPoly::momentum(2, 2),
        3 => OpPoly::field(2, FieldName::Phi),
        4 => OpPoly::field(2, FieldName::Gen(0)),
        5 => OpPoly::from_matrix(pauli[0].map(|e: &Gr| Sq::from(e.clone()))),
        6 => OpPoly::from_matrix(pauli[2].map(|e: &Gr| Sq::from(e.clone())))
            .mul(&OpPoly::mass_power(2, -1)),
        _ => OpPoly::field(2, FieldName::X(0)),
    }
}

fn eval_left(e: &Expr) -> OpPoly {
    match e {
        Expr::Atom(i) => atom_poly(*i),
        Expr::Mul(a, b) => eval_left(a).mul(&eval_left(b)),
        Expr::Add(a, b) => eval_left(a).add(&eval_left(b)),
    }
}

/// Same value, different association: products are re-parenthesized by
/// flattening chains and folding from the right.
fn eval_right(e: &Expr) -> OpPoly {
    fn flatten_mul(e: &Expr, out: &mut Vec<OpPoly>) {
        match e {
            Expr::Mul(a, b) => {
                flatten_mul(a, out);
                flatten_mul(b, out);
            }
            other => out.push(eval_right(other)),
        }
    }
    match e {
        Expr::Atom(i) => atom_poly(*i),
        Expr::Add(a, b) => eval_right(b).add(&eval_right(a)),
        Expr::Mul(_, _) => {
            let mut factors = Vec::new();
            flatten_mul(e, &mut factors);
            let mut acc = factors.pop().unwrap();
            while let Some(f) = factors.pop() {
                acc = f.mul(&acc);
            }
            acc
        }
    }
}

fn expr_strategy() -> impl Strategy<Value = Expr> {
    let leaf = (0u8..8).prop_map(Expr::Atom);
    leaf.prop_recursive(3, 24, 4, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            (inner.clone(), inner)
                .prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normalization_is_confluent(e in expr_strategy()) {
        prop_assert_eq!(eval_left(&e), eval_right(&e));
    }

    #[test]
    fn adjoint_reverses_products(a in expr_strategy(), b in expr_strategy()) {
        let x = eval_left(&a);
        let y = eval_left(&b);
        prop_assert_eq!(x.mul(&y).adjoint(), y.adjoint().mul(&x.adjoint()));
    }
}
