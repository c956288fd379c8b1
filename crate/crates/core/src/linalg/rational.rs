use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::IntMatrix;
use crate::error::{Error, Result};

/// Dense row-major matrix over the rationals, used for block elimination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn from_int(m: &IntMatrix) -> Self {
        let data = (0..m.rows())
            .flat_map(|i| m.row(i).iter().cloned().map(BigRational::from_integer))
            .collect();
        RatMatrix { rows: m.rows(), cols: m.cols(), data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension("product"));
        }
        let mut out = RatMatrix { rows: self.rows, cols: rhs.cols, data: alloc::vec![BigRational::zero(); self.rows * rhs.cols] };
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::Dimension("elementwise"));
        }
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        Ok(RatMatrix { rows: self.rows, cols: self.cols, data })
    }

    /// Gaussian elimination with exact pivots.
    pub fn det(&self) -> Result<BigRational> {
        if self.rows != self.cols {
            return Err(Error::Dimension("determinant of non-square matrix"));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = BigRational::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[(i, k)].is_zero()) else {
                return Ok(BigRational::zero());
            };
            if p != k {
                a.swap_rows(p, k);
                det = -det;
            }
            let pivot = a[(k, k)].clone();
            det *= &pivot;
            for i in k + 1..n {
                let f = &a[(i, k)] / &pivot;
                if f.is_zero() {
                    continue;
                }
                for j in k..n {
                    let v = &f * &a[(k, j)];
                    a[(i, j)] -= v;
                }
            }
        }
        Ok(det)
    }

    /// Solves `self · X = rhs`; `None` when `self` is singular.
    pub fn solve(&self, rhs: &RatMatrix) -> Result<Option<RatMatrix>> {
        if self.rows != self.cols || rhs.rows != self.rows {
            return Err(Error::Dimension("solve"));
        }
        let n = self.rows;
        let m = rhs.cols;
        let mut a = self.clone();
        let mut b = rhs.clone();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[(i, k)].is_zero()) else {
                return Ok(None);
            };
            a.swap_rows(p, k);
            b.swap_rows(p, k);
            let inv = a[(k, k)].recip();
            for j in 0..n {
                a[(k, j)] *= &inv;
            }
            for j in 0..m {
                b[(k, j)] *= &inv;
            }
            for i in 0..n {
                if i == k || a[(i, k)].is_zero() {
                    continue;
                }
                let f = a[(i, k)].clone();
                for j in 0..n {
                    let v = &f * &a[(k, j)];
                    a[(i, j)] -= v;
                }
                for j in 0..m {
                    let v = &f * &b[(k, j)];
                    b[(i, j)] -= v;
                }
            }
        }
        Ok(Some(b))
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = BigRational;
    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigRational {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::det_exact;
    use num_bigint::BigInt;

    #[test]
    fn det_matches_bareiss() {
        let m = IntMatrix::from_rows(&[[0, 2, -1], [3, 1, 4], [-2, 5, 0]]);
        let exact = det_exact(&m).unwrap();
        assert_eq!(RatMatrix::from_int(&m).det().unwrap(), BigRational::from_integer(exact));
    }

    #[test]
    fn solve_round_trip() {
        let a = RatMatrix::from_int(&IntMatrix::from_rows(&[[2, 1], [1, 3]]));
        let b = RatMatrix::from_int(&IntMatrix::from_rows(&[[1, 0], [0, 1]]));
        let x = a.solve(&b).unwrap().unwrap();
        assert_eq!(a.mul(&x).unwrap(), b);
        assert_eq!(x[(0, 0)], BigRational::new(BigInt::from(3), BigInt::from(5)));
        let singular = RatMatrix::from_int(&IntMatrix::from_rows(&[[1, 2], [2, 4]]));
        assert_eq!(singular.solve(&b).unwrap(), None);
    }
}
