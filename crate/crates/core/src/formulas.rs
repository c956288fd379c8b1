//! Closed forms for the model graph of `G(k, p)`, parameterised by `(k, p)`.
//!
//! Throughout, `h = 2^k p` is the order of `<r>` and `n = 2h` the number of
//! vertices. Coefficients are computed with big integers from the printed
//! expressions, so every comparison downstream is exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::Result;
use crate::group::GroupSpec;
use crate::linalg::{FactoredPolynomial, IntMatrix, IntPolynomial};
use crate::spectra::ExactSpectrum;

/// Derived quantities of `G(k, p)` and its model graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FormulaSet {
    pub k: u32,
    pub p: u64,
    /// `2^k p`
    pub h: u64,
    /// `2^(k+1) p`
    pub n: u64,
    /// `2^(k-2) p (5 + 2^(k+1) p)`
    pub m: u128,
    /// `2^(k-1) p - 1`
    pub theta: u64,
}

impl FormulaSet {
    pub fn new(k: u32, p: u64) -> Result<Self> {
        let spec = GroupSpec::semidihedral(k, p)?;
        let h = spec.rotation_order();
        let n = spec.order();
        let m = (h as u128 / 4) * (5 + n as u128);
        Ok(FormulaSet { k, p, h, n, m, theta: spec.theta() })
    }

    fn pow2(&self, e: u32) -> BigInt {
        BigInt::one() << e
    }

    fn p_pow(&self, e: u32) -> BigInt {
        num_traits::pow(BigInt::from(self.p), e as usize)
    }

    /// `c · 2^e2 · p^ep`, with `e2` allowed to be `k`-relative.
    fn term(&self, c: i64, e2: u32, ep: u32) -> BigInt {
        BigInt::from(c) * self.pow2(e2) * self.p_pow(ep)
    }

    /// `x^(2^(k-1)p - 1) (x+1)^(5·2^(k-2)p - 3) (x-1)^(2^(k-2)p - 1) · q(x)`
    /// with the quintic `q` of the adjacency closed form.
    pub fn adjacency_charpoly(&self) -> FactoredPolynomial {
        let (k, h) = (self.k, self.h);
        let quintic = IntPolynomial::new(alloc::vec![
            -(self.term(1, 3 * k - 2, 3) - self.term(1, 2 * k - 2, 2) - self.term(1, k, 1)),
            self.term(5, 2 * k - 2, 2) - self.term(3, k - 1, 1) - 1,
            self.term(3, 2 * k - 1, 2) - self.term(1, k + 2, 1) - 2,
            -self.term(5, k - 1, 1),
            BigInt::from(2) - BigInt::from(h),
            BigInt::one(),
        ]);
        FactoredPolynomial::new()
            .with_factor(IntPolynomial::from_i64s(&[0, 1]), h / 2 - 1)
            .with_factor(IntPolynomial::from_i64s(&[1, 1]), 5 * (h / 4) - 3)
            .with_factor(IntPolynomial::from_i64s(&[-1, 1]), h / 4 - 1)
            .with_factor(quintic, 1)
    }

    /// `x (x - 2^(k+1)p)(x - 3·2^(k-1)p)(x - 2^k p)^(2^k p - 3)(x-4)^(2^(k-2)p)(x-2)^(2^(k-2)p)(x-1)^(2^(k-1)p)`
    pub fn laplacian_charpoly(&self) -> FactoredPolynomial {
        let h = self.h;
        let lin = |root: u64| IntPolynomial::linear(BigInt::from(root));
        FactoredPolynomial::new()
            .with_factor(lin(0), 1)
            .with_factor(lin(2 * h), 1)
            .with_factor(lin(3 * h / 2), 1)
            .with_factor(lin(h), h - 3)
            .with_factor(lin(4), h / 4)
            .with_factor(lin(2), h / 4)
            .with_factor(lin(1), h / 2)
    }

    /// `(x-1)^(2^(k-1)p - 1)(x-2)^(2^(k-2)p)(x-4)^(2^(k-2)p - 1)(2^k p - x - 2)^(2^k p - 3) · b(x)`
    /// with the degree-5 bracket `b` (leading coefficient `-1`), as printed.
    /// The expansion is monic because `2^k p - 3` is odd.
    pub fn signless_charpoly(&self) -> FactoredPolynomial {
        let (k, h) = (self.k, self.h);
        let bracket = IntPolynomial::new(alloc::vec![
            self.term(15, 3 * k, 3) - self.term(31, 2 * k + 1, 2) + self.term(5, k + 4, 1) - 32,
            self.term(135, 2 * k - 1, 2) - self.term(25, 3 * k, 3) - self.term(9, k + 2, 1) - 8,
            self.term(3, 3 * k + 1, 3) + self.term(11, 2 * k + 1, 2) - self.term(65, k, 1) + 28,
            BigInt::from(14) - self.term(5, 2 * k + 1, 2) - self.term(5, k - 1, 1),
            self.term(11, k - 1, 1) - 1,
            BigInt::from(-1),
        ]);
        let lin = |root: u64| IntPolynomial::linear(BigInt::from(root));
        FactoredPolynomial::new()
            .with_factor(lin(1), h / 2 - 1)
            .with_factor(lin(2), h / 4)
            .with_factor(lin(4), h / 4 - 1)
            .with_factor(IntPolynomial::new(alloc::vec![BigInt::from(h) - 2, BigInt::from(-1)]), h - 3)
            .with_factor(bracket, 1)
    }

    /// `{0^1, 1^(2^(k-1)p), 2^(2^(k-2)p), 4^(2^(k-2)p), (2^k p)^(2^k p - 3), (3·2^(k-1)p)^1, (2^(k+1)p)^1}`
    pub fn laplacian_spectrum(&self) -> ExactSpectrum {
        let h = self.h;
        ExactSpectrum::from_integers(&[
            (0.into(), 1),
            (1.into(), h / 2),
            (2.into(), h / 4),
            (4.into(), h / 4),
            (h.into(), h - 3),
            ((3 * h / 2).into(), 1),
            ((2 * h).into(), 1),
        ])
    }

    /// `(5 · 2^k p - 13) / 4`.
    pub fn laplacian_energy(&self) -> BigRational {
        BigRational::new(BigInt::from(5 * self.h) - 13, BigInt::from(4))
    }

    /// Spectral radius of the clique `B` on `<r>`: `2^k p - 1`.
    pub fn clique_radius(&self) -> f64 {
        (self.h - 1) as f64
    }

    /// Bounds `base < λ1 ≤ base + √(2^k p) + (1 + √r)/2` with `r = 2^(k+1)p`
    /// (as stated) or `r = 1 + 2^(k+1)p` (as derived from `λ1(Z)`).
    pub fn spectral_radius_bounds(&self, base: f64) -> RadiusBounds {
        let h = self.h as f64;
        let sq = libm::sqrt(h);
        RadiusBounds {
            lower: base,
            upper_stated: base + sq + (1.0 + libm::sqrt(2.0 * h)) / 2.0,
            upper_derived: base + sq + (1.0 + libm::sqrt(1.0 + 2.0 * h)) / 2.0,
        }
    }

    /// Matrices `Y1`, `Y2`, `Z` with `A = Y1 + Y2 + Z` for the model adjacency
    /// `A`, in canonical vertex order.
    ///
    /// * `Y1 = diag(B, O)` (the clique on `<r>`)
    /// * `Y2 = [[O, W], [W^T, O]]`, `W` has a single row of ones (vertex `e`)
    /// * `Z = [[O, X], [X^T, D]]`, `X` has ones in row `u` over the `s r^odd` columns
    pub fn radius_split(&self) -> RadiusSplit {
        let h = self.h as usize;
        let n = 2 * h;
        let one = || BigInt::one();
        let zero = BigInt::default;
        let y1 = IntMatrix::from_fn(n, n, |i, j| if i < h && j < h && i != j { one() } else { zero() });
        let y2 = IntMatrix::from_fn(n, n, |i, j| if (i == 0 && j >= h) || (j == 0 && i >= h) { one() } else { zero() });
        let odd_cols = h..h + h / 2;
        let z = IntMatrix::from_fn(n, n, |i, j| {
            let x_entry = (i == 1 && odd_cols.contains(&j)) || (j == 1 && odd_cols.contains(&i));
            let d_entry = i >= h && j >= h && i != j && (i - h) / 2 == (j - h) / 2 && i < h + h / 2;
            if x_entry || d_entry { one() } else { zero() }
        });
        RadiusSplit { y1, y2, z }
    }

    /// `(x^2 - 2^k p) x^(2^(k+1)p - 2)`
    pub fn y2_charpoly(&self) -> FactoredPolynomial {
        FactoredPolynomial::new()
            .with_factor(IntPolynomial::new(alloc::vec![-BigInt::from(self.h), 0.into(), 1.into()]), 1)
            .with_factor(IntPolynomial::from_i64s(&[0, 1]), self.n - 2)
    }

    /// `x^(3·2^(k-1)p - 1)(x-1)^(2^(k-2)p - 1)(x+1)^(2^(k-2)p)(x^2 - x - 2^(k-1)p)`
    pub fn z_charpoly(&self) -> FactoredPolynomial {
        let h = self.h;
        FactoredPolynomial::new()
            .with_factor(IntPolynomial::from_i64s(&[0, 1]), 3 * h / 2 - 1)
            .with_factor(IntPolynomial::from_i64s(&[-1, 1]), h / 4 - 1)
            .with_factor(IntPolynomial::from_i64s(&[1, 1]), h / 4)
            .with_factor(IntPolynomial::new(alloc::vec![-BigInt::from(h / 2), (-1).into(), 1.into()]), 1)
    }

    /// `±√(2^k p)`, the non-zero eigenvalues of `Y2`.
    pub fn y2_top_eigenvalue(&self) -> f64 {
        libm::sqrt(self.h as f64)
    }

    /// `(1 + √(1 + 2^(k+1)p)) / 2`, the largest eigenvalue of `Z`.
    pub fn z_top_eigenvalue(&self) -> f64 {
        (1.0 + libm::sqrt(1.0 + self.n as f64)) / 2.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusBounds {
    pub lower: f64,
    /// Upper bound with `√(2^(k+1)p)`.
    pub upper_stated: f64,
    /// Upper bound with `√(1 + 2^(k+1)p)`.
    pub upper_derived: f64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadiusSplit {
    pub y1: IntMatrix,
    pub y2: IntMatrix,
    pub z: IntMatrix,
}

impl RadiusSplit {
    pub fn y(&self) -> IntMatrix {
        self.y1.add(&self.y2).expect("same order")
    }

    pub fn total(&self) -> IntMatrix {
        self.y().add(&self.z).expect("same order")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::model_graph;
    use crate::linalg::{char_poly_exact, matrix_of, MatrixKind};
    use alloc::vec::Vec;
    use num_traits::{ToPrimitive, Zero};

    fn set(k: u32, p: u64) -> FormulaSet {
        FormulaSet::new(k, p).unwrap()
    }

    fn exponents(f: &FactoredPolynomial) -> Vec<u64> {
        f.factors.iter().map(|(_, e)| *e).collect()
    }

    #[test]
    fn basic_quantities() {
        let f = set(2, 3);
        assert_eq!((f.h, f.n, f.m, f.theta), (12, 24, 87, 5));
        assert_eq!(set(2, 5).m, 225);
        assert_eq!(set(3, 3).m, 318);
        assert!(FormulaSet::new(2, 9).is_err());
    }

    #[test]
    fn adjacency_examples() {
        let f = set(2, 3).adjacency_charpoly();
        assert_eq!(f.factors[3].0, IntPolynomial::from_i64s(&[-384, 161, 166, -30, -10, 1]));
        assert_eq!(exponents(&f)[..3], [5, 12, 2]);
        let e = f.expand();
        assert_eq!(e.degree(), Some(24));
        assert!(e.coeff(23).is_zero());
        let f = set(2, 5).adjacency_charpoly();
        assert_eq!(exponents(&f)[..3], [9, 22, 4]);
        assert_eq!(f.degree(), 40);
    }

    #[test]
    fn laplacian_examples() {
        let f = set(2, 3).laplacian_charpoly();
        let roots: Vec<(i64, u64)> =
            f.factors.iter().map(|(b, e)| ((-b.coeff(0)).to_i64().unwrap(), *e)).collect();
        assert_eq!(roots, [(0, 1), (24, 1), (18, 1), (12, 9), (4, 3), (2, 3), (1, 6)]);
        let e = f.expand();
        assert_eq!(e.degree(), Some(24));
        assert_eq!(-e.coeff(23), BigInt::from(174));
        let f = set(3, 3).laplacian_charpoly();
        assert_eq!(f.degree(), 48);
        assert_eq!(f.factors[3], (IntPolynomial::linear(24.into()), 21));
    }

    #[test]
    fn signless_examples() {
        let f = set(2, 3).signless_charpoly();
        assert_eq!(f.factors[4].0, IntPolynomial::from_i64s(&[17920, -33920, 12784, -1456, 65, -1]));
        let e = f.expand();
        assert!(e.is_monic());
        assert_eq!(-e.coeff(23), BigInt::from(174));
        for (k, p) in [(2, 3), (2, 5), (2, 7), (3, 3), (3, 5), (4, 3)] {
            let f = set(k, p);
            assert_eq!(f.signless_charpoly().degree(), f.n);
            assert_eq!(f.signless_charpoly().leading_sign(), 1);
        }
    }

    #[test]
    fn spectrum_examples() {
        let s = set(2, 3).laplacian_spectrum();
        let ints: Vec<(i64, u64)> = s.entries.iter().map(|(v, m)| (v.to_integer().to_i64().unwrap(), *m)).collect();
        assert_eq!(ints, [(0, 1), (1, 6), (2, 3), (4, 3), (12, 9), (18, 1), (24, 1)]);
        let s = set(2, 5).laplacian_spectrum();
        let ints: Vec<(i64, u64)> = s.entries.iter().map(|(v, m)| (v.to_integer().to_i64().unwrap(), *m)).collect();
        assert_eq!(ints, [(0, 1), (1, 10), (2, 5), (4, 5), (20, 17), (30, 1), (40, 1)]);
    }

    #[test]
    fn energy_examples() {
        let q = |a: i64| BigRational::new(a.into(), 4.into());
        assert_eq!(set(2, 3).laplacian_energy(), q(47));
        assert_eq!(set(2, 5).laplacian_energy(), q(87));
        assert_eq!(set(3, 3).laplacian_energy(), q(107));
    }

    #[test]
    fn radius_bound_examples() {
        let b = set(2, 3).spectral_radius_bounds(11.0);
        assert_eq!(b.lower, 11.0);
        let stated = 11.0 + libm::sqrt(12.0) + (1.0 + libm::sqrt(24.0)) / 2.0;
        assert!((b.upper_stated - stated).abs() < 1e-12);
        assert!((b.upper_stated - 17.414).abs() < 1e-3);
        assert!((b.upper_derived - (11.0 + libm::sqrt(12.0) + 3.0)).abs() < 1e-12);
        for (k, p) in [(2, 3), (2, 5), (3, 7), (5, 11)] {
            let f = set(k, p);
            let b = f.spectral_radius_bounds(f.clique_radius());
            assert!(b.upper_derived > b.upper_stated);
        }
    }

    #[test]
    fn radius_split_reassembles_model() {
        for (k, p) in [(2, 3), (2, 5), (3, 3)] {
            let f = set(k, p);
            let split = f.radius_split();
            let a = matrix_of(&model_graph(k, p).unwrap(), MatrixKind::Adjacency);
            assert_eq!(split.total(), a);
            assert!(split.y2.is_symmetric() && split.z.is_symmetric());
        }
    }

    #[test]
    fn split_charpolys_are_exact() {
        for (k, p) in [(2, 3), (2, 5)] {
            let f = set(k, p);
            let split = f.radius_split();
            assert_eq!(char_poly_exact(&split.y2).unwrap(), f.y2_charpoly().expand());
            assert_eq!(char_poly_exact(&split.z).unwrap(), f.z_charpoly().expand());
        }
    }
}
