//! Exact rational linear algebra: rank and determinant by Gaussian elimination.

use std::collections::HashMap;

use num::{BigRational, One, Zero};

use crate::monomial::{for_each_exponent, Monomial};

use super::poly::RationalPoly;

/// Incremental row echelon form over the rationals.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    /// Pivot column and the row normalised to 1 at that column.
    rows: Vec<(usize, Vec<BigRational>)>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the current pivots and keeps it if independent.
    /// Each stored row is zero at the pivots of the rows stored before it, so
    /// one pass in insertion order suffices.
    pub fn insert(&mut self, mut row: Vec<BigRational>) -> bool {
        for (pivot, basis) in &self.rows {
            if !row[*pivot].is_zero() {
                let c = row[*pivot].clone();
                for (x, b) in row.iter_mut().zip(basis) {
                    if !b.is_zero() {
                        *x -= &c * b;
                    }
                }
            }
        }
        match row.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(p) => {
                let inv = row[p].recip();
                for x in row.iter_mut() {
                    *x *= &inv;
                }
                self.rows.push((p, row));
                true
            }
        }
    }
}

pub fn rank(rows: Vec<Vec<BigRational>>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

pub fn determinant(matrix: &[Vec<BigRational>]) -> BigRational {
    let n = matrix.len();
    let mut a: Vec<Vec<BigRational>> = matrix.to_vec();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if !a[r][col].is_zero() {
                let f = &a[r][col] / &pivot;
                for c in col..n {
                    let sub = &f * &a[col][c];
                    a[r][c] -= sub;
                }
            }
        }
    }
    det
}

/// Coordinates of degree-`t` polynomials in the monomial basis of `R_t`.
pub struct DegreeSpace {
    index: HashMap<Monomial, usize>,
}

impl DegreeSpace {
    pub fn new(n: usize, t: u64) -> Self {
        let mut index = HashMap::new();
        for_each_exponent(n, t, |e| {
            let k = index.len();
            index.insert(Monomial::new(e.to_vec()), k);
        });
        DegreeSpace { index }
    }

    pub fn dim(&self) -> usize {
        self.index.len()
    }

    pub fn coordinates(&self, p: &RationalPoly) -> Vec<BigRational> {
        let mut row = vec![BigRational::zero(); self.dim()];
        for (m, c) in p.terms() {
            row[self.index[m]] = c.clone();
        }
        row
    }
}

/// `dim_Q (J)_t` for the ideal `J` generated by homogeneous `gens`.
pub fn degree_rank(n: usize, gens: &[RationalPoly], t: u64) -> usize {
    let space = DegreeSpace::new(n, t);
    let mut e = Echelon::new();
    for g in gens {
        let Some(d) = g.homogeneous_degree() else { continue };
        if d > t {
            continue;
        }
        for_each_exponent(n, t - d, |m| {
            if e.rank() < space.dim() {
                e.insert(space.coordinates(&g.mul_monomial(&Monomial::new(m.to_vec()))));
            }
        });
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn q(a: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(a))
    }

    #[test]
    fn determinant_and_rank() {
        let m = vec![vec![q(2), q(1)], vec![q(4), q(3)]];
        assert_eq!(determinant(&m), q(2));
        let singular = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert_eq!(determinant(&singular), q(0));
        assert_eq!(rank(singular), 1);
        assert_eq!(rank(vec![vec![q(0), q(0)]]), 0);
    }

    #[test]
    fn degree_rank_of_conic() {
        // (x1*x2) in two variables: dims of I_t are 0, 0, 1, 2, 3
        let g = RationalPoly::monomial(Monomial::new(vec![1, 1]));
        let dims: Vec<usize> = (0..5).map(|t| degree_rank(2, std::slice::from_ref(&g), t)).collect();
        assert_eq!(dims, vec![0, 0, 1, 2, 3]);
    }
}
