//! The centrally extended Galilei algebra realized by operators: momenta,
//! angular momenta, boosts with a mass term, and the central charge.
//!
//! The boost operator is taken as `K_a = m x_a - t p_a - eta_a`, the sign
//! under which the full bracket table holds as stated (the variant
//! `t p_a - m x_a + eta_a` satisfies the same table with the two
//! `[K, P]`-type brackets negated; both are checked and reported).

use super::{FieldName, OpPoly};
use crate::catalog::Representation;
use crate::matrix::Matrix;
use crate::scalar::{Scalar, Sqrt2Rational as Sq};
use serde::Serialize;

pub struct ExtendedAlgebra {
    pub dim: usize,
    pub p0: OpPoly,
    pub p: [OpPoly; 3],
    pub j: [OpPoly; 3],
    pub k: [OpPoly; 3],
    pub central: OpPoly,
}

fn lift_matrix(m: &Matrix<crate::scalar::GaussianRational>) -> Matrix<Sq> {
    m.map(|e| Sq::from(e.clone()))
}

/// Builds the operator realization carried by a catalog representation.
pub fn extended_algebra(rep: &Representation) -> ExtendedAlgebra {
    let d = rep.dim;
    let x = |a: usize| OpPoly::field(d, FieldName::X(a as u8));
    let t = OpPoly::field(d, FieldName::T);
    let p = [0, 1, 2].map(|a| OpPoly::momentum(d, 1 + a));
    let p0 = OpPoly::momentum(d, 0);
    let mass = OpPoly::mass_power(d, 1);
    let eps = |a: usize, b: usize, c: usize| -> i64 {
        match (a, b, c) {
            (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
            (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
            _ => 0,
        }
    };
    let j = [0, 1, 2].map(|a| {
        let mut orbital = OpPoly::zero(d);
        for b in 0..3 {
            for c in 0..3 {
                let e = eps(a, b, c);
                if e != 0 {
                    orbital = orbital.add(&x(b).mul(&p[c]).scale(&Sq::from_int(e)));
                }
            }
        }
        orbital.add(&OpPoly::from_matrix(lift_matrix(&rep.s[a])))
    });
    let k = [0, 1, 2].map(|a| {
        mass.mul(&x(a))
            .sub(&t.mul(&p[a]))
            .sub(&OpPoly::from_matrix(lift_matrix(&rep.eta[a])))
    });
    ExtendedAlgebra {
        dim: d,
        p0,
        p,
        j,
        k,
        central: mass,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BracketCheck {
    pub name: String,
    pub holds: bool,
}

/// Checks every bracket of the extended algebra exactly.
pub fn verify_extended_algebra(rep: &Representation) -> Vec<BracketCheck> {
    let alg = extended_algebra(rep);
    let d = alg.dim;
    let i = Sq::i();
    let eps = |a: usize, b: usize, c: usize| -> i64 {
        match (a, b, c) {
            (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
            (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
            _ => 0,
        }
    };
    let combo = |xs: &[OpPoly; 3], a: usize, b: usize| -> OpPoly {
        let mut acc = OpPoly::zero(d);
        for c in 0..3 {
            let e = eps(a, b, c);
            if e != 0 {
                acc = acc.add(&xs[c].scale(&i.mul(&Sq::from_int(e))));
            }
        }
        acc
    };
    let mut checks = Vec::new();
    let mut push = |name: String, holds: bool| checks.push(BracketCheck { name, holds });
    for a in 0..3 {
        for b in 0..3 {
            push(
                format!("[J{},J{}]", a + 1, b + 1),
                alg.j[a].commutator(&alg.j[b]) == combo(&alg.j, a, b),
            );
            push(
                format!("[J{},K{}]", a + 1, b + 1),
                alg.j[a].commutator(&alg.k[b]) == combo(&alg.k, a, b),
            );
            push(
                format!("[J{},P{}]", a + 1, b + 1),
                alg.j[a].commutator(&alg.p[b]) == combo(&alg.p, a, b),
            );
            push(
                format!("[K{},K{}]", a + 1, b + 1),
                alg.k[a].commutator(&alg.k[b]).is_zero(),
            );
            push(
                format!("[P{},P{}]", a + 1, b + 1),
                alg.p[a].commutator(&alg.p[b]).is_zero(),
            );
            // [K_a, P_b] = i delta_ab M
            let expect = if a == b {
                alg.central.scale(&i)
            } else {
                OpPoly::zero(d)
            };
            push(
                format!("[K{},P{}]", a + 1, b + 1),
                alg.k[a].commutator(&alg.p[b]) == expect,
            );
        }
        push(
            format!("[K{},P0]", a + 1),
            alg.k[a].commutator(&alg.p0) == alg.p[a].scale(&i),
        );
        push(
            format!("[P0,P{}]", a + 1),
            alg.p0.commutator(&alg.p[a]).is_zero(),
        );
        push(
            format!("[M,J{}]", a + 1),
            alg.central.commutator(&alg.j[a]).is_zero(),
        );
        push(
            format!("[M,K{}]", a + 1),
            alg.central.commutator(&alg.k[a]).is_zero(),
        );
        push(
            format!("[M,P{}]", a + 1),
            alg.central.commutator(&alg.p[a]).is_zero(),
        );
    }
    push(
        "[M,P0]".into(),
        alg.central.commutator(&alg.p0).is_zero(),
    );
    checks
}

/// The sign-reversed boost variant `t p_a - m x_a + eta_a`: the bracket
/// table holds with `[K, P0]` and `[K, P]` negated. Returns true when
/// that reversed pattern is confirmed.
pub fn reversed_boost_flips_central_brackets(rep: &Representation) -> bool {
    let alg = extended_algebra(rep);
    let i = Sq::i();
    let k_rev = [0, 1, 2].map(|a| alg.k[a].neg());
    (0..3).all(|a| {
        k_rev[a].commutator(&alg.p0) == alg.p[a].scale(&i).neg()
            && k_rev[a].commutator(&alg.p[a]) == alg.central.scale(&i).neg()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build_rep;

    #[test]
    fn extended_algebra_holds_for_catalog_rows() {
        for name in ["D(2,0,0)", "D(1,1,1)", "bispinor"] {
            let rep = build_rep(name.parse().unwrap()).unwrap();
            let checks = verify_extended_algebra(&rep);
            for c in &checks {
                assert!(c.holds, "{name}: {} fails", c.name);
            }
        }
    }

    #[test]
    fn boost_momentum_bracket_is_central() {
        let rep = build_rep("D(2,0,0)".parse().unwrap()).unwrap();
        let alg = extended_algebra(&rep);
        let lhs = alg.k[0].commutator(&alg.p[0]);
        assert_eq!(lhs, alg.central.scale(&Sq::i()));
    }

    #[test]
    fn rotation_boost_bracket() {
        // [J_1, K_2] = i K_3.
        let rep = build_rep("D(2,0,0)".parse().unwrap()).unwrap();
        let alg = extended_algebra(&rep);
        assert_eq!(
            alg.j[0].commutator(&alg.k[1]),
            alg.k[2].scale(&Sq::i())
        );
    }

    #[test]
    fn reversed_boost_variant() {
        let rep = build_rep("D(1,1,0)".parse().unwrap()).unwrap();
        assert!(reversed_boost_flips_central_brackets(&rep));
    }
}
