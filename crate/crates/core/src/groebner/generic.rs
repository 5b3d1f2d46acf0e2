//! Random coordinate changes and linear forms drawn from a seed.

use num::{BigInt, BigRational, One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::monomial::Monomial;

use super::linalg::determinant;
use super::poly::{RationalPoly, RationalPolyIdeal};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixKind {
    DenseRandom,
    UpperTriangularRandom,
    Identity,
}

/// An invertible `n x n` rational matrix `g` acting by `x_j -> sum_i g[i][j] x_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateChange {
    matrix: Vec<Vec<BigRational>>,
    seed: u64,
    kind: MatrixKind,
}

fn entry(rng: &mut ChaCha8Rng, bound: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(rng.gen_range(-bound..=bound)))
}

impl CoordinateChange {
    pub fn identity(n: usize) -> Self {
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                    .collect()
            })
            .collect();
        CoordinateChange {
            matrix,
            seed: 0,
            kind: MatrixKind::Identity,
        }
    }

    /// Draws entries uniformly from `[-bound, bound]`, redrawing singular samples.
    pub fn draw(n: usize, seed: u64, bound: i64, kind: MatrixKind) -> Self {
        assert!(bound >= 1, "entry bound must be positive");
        if kind == MatrixKind::Identity {
            return Self::identity(n);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let matrix: Vec<Vec<BigRational>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| match kind {
                            MatrixKind::UpperTriangularRandom if i > j => BigRational::zero(),
                            _ => entry(&mut rng, bound),
                        })
                        .collect()
                })
                .collect();
            if !determinant(&matrix).is_zero() {
                return CoordinateChange { matrix, seed, kind };
            }
        }
    }

    pub fn matrix(&self) -> &[Vec<BigRational>] {
        &self.matrix
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn determinant(&self) -> BigRational {
        determinant(&self.matrix)
    }

    fn images(&self) -> Vec<RationalPoly> {
        let n = self.matrix.len();
        (0..n)
            .map(|j| RationalPoly::linear_form(&(0..n).map(|i| self.matrix[i][j].clone()).collect::<Vec<_>>()))
            .collect()
    }

    pub fn apply(&self, p: &RationalPoly) -> RationalPoly {
        p.substitute(&self.images())
    }

    pub fn apply_ideal(&self, ideal: &RationalPolyIdeal) -> RationalPolyIdeal {
        ideal.substitute(&self.images())
    }
}

/// `s` linear forms in `n` variables with integer coefficients in `[-bound, bound]`.
pub fn random_linear_forms(n: usize, s: usize, seed: u64, bound: i64) -> Vec<RationalPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..s)
        .map(|_| loop {
            let coeffs: Vec<BigRational> = (0..n).map(|_| entry(&mut rng, bound)).collect();
            let form = RationalPoly::linear_form(&coeffs);
            if !form.is_zero() {
                break form;
            }
        })
        .collect()
}

/// Variables as linear forms, `x_v` for each 1-based `v`.
pub fn variable_forms(n: usize, vars: &[usize]) -> Vec<RationalPoly> {
    vars.iter()
        .map(|&v| RationalPoly::monomial(Monomial::var(n, v)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn draws_are_reproducible_and_invertible() {
        let a = CoordinateChange::draw(3, 7, 97, MatrixKind::DenseRandom);
        let b = CoordinateChange::draw(3, 7, 97, MatrixKind::DenseRandom);
        assert_eq!(a, b);
        assert!(!a.determinant().is_zero());
        let u = CoordinateChange::draw(3, 7, 2, MatrixKind::UpperTriangularRandom);
        assert!(u.matrix()[2][0].is_zero() && u.matrix()[1][0].is_zero());
        assert!(!u.determinant().is_zero());
    }

    #[test]
    fn identity_fixes_polynomials() {
        let p = RationalPoly::monomial(Monomial::new(vec![1, 2]));
        assert_eq!(CoordinateChange::identity(2).apply(&p), p);
    }

    #[test]
    fn tiny_bound_still_invertible() {
        for seed in 0..20 {
            let g = CoordinateChange::draw(3, seed, 1, MatrixKind::DenseRandom);
            assert!(!g.determinant().is_zero());
        }
    }
}
