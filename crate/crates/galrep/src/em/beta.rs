//! The Galilean Clifford-type matrices: the four-dimensional `beta_mu`
//! set and its anticommutator table.

use crate::catalog::pauli;
use crate::matrix::Matrix;
use crate::scalar::{GaussianRational as Gr, Sqrt2Rational as Sq};

/// The five matrices `beta_0, beta_1..beta_3, beta_4`.
#[derive(Clone, Debug)]
pub struct BetaSet {
    pub b0: Matrix<Sq>,
    pub ba: [Matrix<Sq>; 3],
    pub b4: Matrix<Sq>,
}

impl BetaSet {
    pub fn get(&self, mu: usize) -> &Matrix<Sq> {
        match mu {
            0 => &self.b0,
            1..=3 => &self.ba[mu - 1],
            4 => &self.b4,
            _ => panic!("beta index out of range"),
        }
    }
}

/// The explicit choice: `beta_0 = [[0,0],[-sqrt2,0]]`,
/// `beta_a = diag(sigma_a, -sigma_a)`, `beta_4 = [[0,sqrt2],[0,0]]`
/// in 2x2 blocks.
pub fn beta_matrices() -> BetaSet {
    let sqrt2 = Sq::sqrt2();
    let p: Vec<Matrix<Sq>> = pauli()
        .iter()
        .map(|m| m.map(|e: &Gr| Sq::from(e.clone())))
        .collect();
    let mut b0: Matrix<Sq> = Matrix::zeros(4, 4);
    b0.paste(2, 0, &Matrix::identity(2).scale(&sqrt2).neg());
    let mut b4: Matrix<Sq> = Matrix::zeros(4, 4);
    b4.paste(0, 2, &Matrix::identity(2).scale(&sqrt2));
    let ba = [0, 1, 2].map(|a| {
        let mut m: Matrix<Sq> = Matrix::zeros(4, 4);
        m.paste(0, 0, &p[a]);
        m.paste(2, 2, &p[a].neg());
        m
    });
    BetaSet { b0, ba, b4 }
}

/// The full 5x5 anticommutator table `{beta_mu, beta_nu}`.
pub fn beta_anticommutators(b: &BetaSet) -> Vec<Vec<Matrix<Sq>>> {
    (0..5)
        .map(|mu| {
            (0..5)
                .map(|nu| b.get(mu).anticommutator(b.get(nu)))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    #[test]
    fn anticommutator_table() {
        let b = beta_matrices();
        let table = beta_anticommutators(&b);
        let two = Matrix::<Sq>::identity(4).scale(&Sq::from_int(2));
        // Spatial pairs: {beta_a, beta_b} = 2 delta_ab.
        for a in 1..=3 {
            for c in 1..=3 {
                if a == c {
                    assert_eq!(table[a][c], two);
                } else {
                    assert!(table[a][c].is_zero());
                }
            }
            // Light-cone pairs vanish against the spatial ones.
            assert!(table[0][a].is_zero());
            assert!(table[4][a].is_zero());
        }
        // The two nilpotent directions square to zero and pair to -2.
        assert!(table[0][0].is_zero());
        assert!(table[4][4].is_zero());
        assert_eq!(table[0][4], two.neg());
        assert_eq!(table[4][0], two.neg());
    }
}
