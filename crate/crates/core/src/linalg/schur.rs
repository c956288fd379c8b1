use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::matrix::{det_exact, IntMatrix};
use super::rational::RatMatrix;
use crate::error::{Error, Result};

/// `det [[A, B], [C, D]] == det(D) · det(A - B D^-1 C)`, checked exactly.
///
/// Returns `None` when `D` is singular.
pub fn schur_determinant_check(a: &IntMatrix, b: &IntMatrix, c: &IntMatrix, d: &IntMatrix) -> Result<Option<bool>> {
    if !a.is_square() || !d.is_square() {
        return Err(Error::Dimension("diagonal blocks must be square"));
    }
    let full = det_exact(&IntMatrix::from_blocks(a, b, c, d)?)?;
    let det_d = det_exact(d)?;
    if det_d == BigInt::from(0) {
        return Ok(None);
    }
    let d_inv_c = RatMatrix::from_int(d).solve(&RatMatrix::from_int(c))?.expect("det(D) != 0");
    let complement = RatMatrix::from_int(a).sub(&RatMatrix::from_int(b).mul(&d_inv_c)?)?;
    let rhs = BigRational::from_integer(det_d) * complement.det()?;
    Ok(Some(rhs == BigRational::from_integer(full)))
}

/// Outcome of [`schur_charpoly_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurCheck {
    pub passed: Vec<i64>,
    pub failed: Vec<i64>,
    /// Points where `x I - D` is singular.
    pub skipped: Vec<i64>,
}

impl SchurCheck {
    pub fn ok(&self) -> bool {
        self.failed.is_empty() && !self.passed.is_empty()
    }
}

/// Checks the Schur identity for `x I - [[A, B], [C, D]]` at each sample `x`,
/// i.e. `det(xI - M) = det(xI - D) · det(xI - A - B (xI - D)^-1 C)`.
pub fn schur_charpoly_check(
    a: &IntMatrix,
    b: &IntMatrix,
    c: &IntMatrix,
    d: &IntMatrix,
    points: &[i64],
) -> Result<SchurCheck> {
    let mut out = SchurCheck { passed: Vec::new(), failed: Vec::new(), skipped: Vec::new() };
    let (nb, nc) = (b.neg(), c.neg());
    for &x in points {
        let xb = BigInt::from(x);
        match schur_determinant_check(&a.shifted(&xb), &nb, &nc, &d.shifted(&xb))? {
            Some(true) => out.passed.push(x),
            Some(false) => out.failed.push(x),
            None => out.skipped.push(x),
        }
    }
    if out.passed.is_empty() && out.failed.is_empty() {
        return Err(Error::AllPointsSingular);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_off_diagonal_blocks() {
        let a = IntMatrix::from_rows(&[[1, 2], [3, 4]]);
        let d = IntMatrix::from_rows(&[[2, 0], [1, 5]]);
        let z = IntMatrix::zeros(2, 2);
        assert_eq!(schur_determinant_check(&a, &z, &z, &d).unwrap(), Some(true));
        let r = schur_charpoly_check(&a, &z, &z, &d, &[-3, 0, 1, 7]).unwrap();
        assert!(r.ok());
    }

    #[test]
    fn singular_points_are_skipped() {
        // D = diag(1, 2): x I - D is singular at x = 1 and x = 2.
        let a = IntMatrix::from_rows(&[[0, 1], [1, 0]]);
        let b = IntMatrix::from_rows(&[[1, 1], [0, 1]]);
        let d = IntMatrix::from_rows(&[[1, 0], [0, 2]]);
        let r = schur_charpoly_check(&a, &b, &b.transpose(), &d, &[1, 2, 3]).unwrap();
        assert_eq!(r.skipped, [1, 2]);
        assert_eq!(r.passed, [3]);
        assert_eq!(schur_charpoly_check(&a, &b, &b.transpose(), &d, &[1, 2]), Err(Error::AllPointsSingular));
    }
}
