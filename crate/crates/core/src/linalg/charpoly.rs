use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::{det_exact, IntMatrix};
use super::poly::IntPolynomial;
use crate::error::{Error, Result};

/// Largest matrix order accepted by [`char_poly_exact`].
pub const DEFAULT_MATRIX_CAP: usize = 256;

/// `det(x I - M)` with the default order cap.
pub fn char_poly_exact(m: &IntMatrix) -> Result<IntPolynomial> {
    char_poly_with_cap(m, DEFAULT_MATRIX_CAP)
}

/// `det(x I - M)` by evaluation at `x = 0, 1, ..., n` and exact interpolation.
///
/// Interpolation runs over the rationals in Newton form; every coefficient
/// must come out integral or the call fails with [`Error::NonIntegral`].
pub fn char_poly_with_cap(m: &IntMatrix, cap: usize) -> Result<IntPolynomial> {
    if !m.is_square() {
        return Err(Error::Dimension("characteristic polynomial of non-square matrix"));
    }
    let n = m.order();
    if n > cap {
        return Err(Error::CapExceeded { order: n, cap });
    }
    let values = (0..=n)
        .map(|x| det_exact(&m.shifted(&BigInt::from(x))))
        .collect::<Result<Vec<_>>>()?;
    interpolate_consecutive(values)
}

/// Polynomial through `(i, values[i])`, `i = 0..len`.
fn interpolate_consecutive(mut values: Vec<BigInt>) -> Result<IntPolynomial> {
    let n = values.len();
    // Forward differences in place: values[j] becomes Δ^j f(0).
    for j in 1..n {
        for i in (j..n).rev() {
            let d = &values[i] - &values[i - 1];
            values[i] = d;
        }
    }
    // f(x) = Σ_j Δ^j f(0) / j! · x(x-1)...(x-j+1)
    let mut acc: Vec<BigRational> = alloc::vec![BigRational::zero(); n];
    let mut falling: Vec<BigInt> = alloc::vec![BigInt::one()];
    let mut factorial = BigInt::one();
    for (j, delta) in values.iter().enumerate() {
        if j > 0 {
            factorial *= j;
            // falling *= (x - (j - 1))
            let shift = BigInt::from(j - 1);
            let mut next = alloc::vec![BigInt::zero(); falling.len() + 1];
            for (i, c) in falling.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * &shift;
            }
            falling = next;
        }
        if delta.is_zero() {
            continue;
        }
        let scale = BigRational::new(delta.clone(), factorial.clone());
        for (i, c) in falling.iter().enumerate() {
            acc[i] += &scale * BigRational::from_integer(c.clone());
        }
    }
    let coeffs = acc
        .into_iter()
        .enumerate()
        .map(|(i, c)| if c.is_integer() { Ok(c.to_integer()) } else { Err(Error::NonIntegral(i)) })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPolynomial::new(coeffs))
}

/// Fraction-free Faddeev–LeVerrier:
/// `M_0 = 0`, `c_n = 1`, `M_k = A M_(k-1) + c_(n-k+1) I`, `c_(n-k) = -tr(A M_k) / k`.
///
/// For integer `A` each division by `k` is exact; a remainder is reported as
/// [`Error::NonIntegral`].
pub fn char_poly_faddeev_leverrier(a: &IntMatrix) -> Result<IntPolynomial> {
    if !a.is_square() {
        return Err(Error::Dimension("characteristic polynomial of non-square matrix"));
    }
    let n = a.order();
    let mut coeffs = alloc::vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut mk = IntMatrix::zeros(n, n);
    for k in 1..=n {
        let mut next = a.mul(&mk)?;
        for i in 0..n {
            next[(i, i)] += &coeffs[n - k + 1];
        }
        mk = next;
        let t = a.mul(&mk)?.trace();
        let (q, r) = (-t).div_rem(&BigInt::from(k));
        if !r.is_zero() {
            return Err(Error::NonIntegral(n - k));
        }
        coeffs[n - k] = q;
    }
    Ok(IntPolynomial::new(coeffs))
}
