//! Floating-point spectra and exact spectrum bookkeeping.
//!
//! The eigensolver is cyclic Jacobi on a dense symmetric matrix; it is
//! deterministic for a fixed input and reports the worst residual
//! `‖M v - λ v‖` over the computed eigenpairs.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{matrix_of, IntMatrix, IntPolynomial, MatrixKind};

/// Default relative eigenvalue tolerance.
pub const DEFAULT_TOL: f64 = 1e-9;

const MAX_SWEEPS: usize = 100;

/// Dense symmetric matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    /// Requires exact symmetry.
    pub fn new(n: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::Dimension("symmetric matrix data length"));
        }
        for i in 0..n {
            for j in 0..i {
                if data[i * n + j] != data[j * n + i] {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
        }
        Ok(SymMatrix { n, data })
    }

    pub fn from_int(m: &IntMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::Dimension("symmetric matrix must be square"));
        }
        Self::new(m.rows(), m.to_f64())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn frobenius(&self) -> f64 {
        libm::sqrt(self.data.iter().map(|v| v * v).sum())
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn add(&self, rhs: &SymMatrix) -> Result<SymMatrix> {
        if self.n != rhs.n {
            return Err(Error::Dimension("sum of symmetric matrices"));
        }
        Ok(SymMatrix { n: self.n, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenResult {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// `max ‖M v - λ v‖` over the computed pairs.
    pub residual: f64,
}

impl EigenResult {
    pub fn largest(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0)
    }

    pub fn smallest(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
///
/// Fails with [`Error::NoConvergence`] if the off-diagonal mass does not
/// vanish or the final residual exceeds `tol · max(1, ‖M‖_F)`.
pub fn symmetric_eigenvalues(m: &SymMatrix, tol: f64) -> Result<EigenResult> {
    let n = m.n;
    let mut a = m.data.clone();
    let mut v = alloc::vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let norm = m.frobenius();
    let scale = if norm > 1.0 { norm } else { 1.0 };

    let mut sweeps = 0;
    loop {
        let off: f64 = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| a[i * n + j] * a[i * n + j]).sum();
        if libm::sqrt(off) <= f64::EPSILON * scale {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence(sweeps));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = libm::copysign(1.0, theta) / (libm::fabs(theta) + libm::sqrt(theta * theta + 1.0));
                let c = 1.0 / libm::sqrt(t * t + 1.0);
                let s = t * c;
                a[p * n + p] -= t * apq;
                a[q * n + q] += t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    if k != p && k != q {
                        let (akp, akq) = (a[k * n + p], a[k * n + q]);
                        let (np, nq) = (c * akp - s * akq, s * akp + c * akq);
                        a[k * n + p] = np;
                        a[p * n + k] = np;
                        a[k * n + q] = nq;
                        a[q * n + k] = nq;
                    }
                    let (vkp, vkq) = (v[k * n + p], v[k * n + q]);
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut residual: f64 = 0.0;
    for j in 0..n {
        let lambda = a[j * n + j];
        let r2: f64 = (0..n)
            .map(|i| {
                let mv: f64 = (0..n).map(|k| m.data[i * n + k] * v[k * n + j]).sum();
                let d = mv - lambda * v[i * n + j];
                d * d
            })
            .sum();
        residual = residual.max(libm::sqrt(r2));
    }
    if residual > tol * scale {
        return Err(Error::NoConvergence(sweeps));
    }
    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eigenvalues.sort_by(f64::total_cmp);
    Ok(EigenResult { eigenvalues, residual })
}

/// Eigenvalues of one of the graph's matrices.
pub fn graph_eigenvalues(g: &Graph, kind: MatrixKind, tol: f64) -> Result<EigenResult> {
    symmetric_eigenvalues(&SymMatrix::from_int(&matrix_of(g, kind))?, tol)
}

/// A run of nearly equal eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cluster {
    pub mean: f64,
    pub min: f64,
    pub max: f64,
    pub multiplicity: u64,
}

/// Greedy clustering of sorted values: a value joins the current cluster when
/// it lies within `tol` of the previous value.
pub fn cluster_multiplicities(values: &[f64], tol: f64) -> Vec<Cluster> {
    let mut out: Vec<(f64, f64, f64, u64)> = Vec::new();
    let mut prev: Option<f64> = None;
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    for &x in &sorted {
        match (out.last_mut(), prev) {
            (Some(c), Some(p)) if x - p <= tol => {
                c.0 += x;
                c.2 = x;
                c.3 += 1;
            }
            _ => out.push((x, x, x, 1)),
        }
        prev = Some(x);
    }
    out.into_iter()
        .map(|(sum, min, max, multiplicity)| Cluster { mean: sum / multiplicity as f64, min, max, multiplicity })
        .collect()
}

/// Clustering tolerance `1e-6 · max(1, λ_max)`.
pub fn default_cluster_tol(values: &[f64]) -> f64 {
    let top = values.iter().fold(0.0f64, |m, v| m.max(libm::fabs(*v)));
    1e-6 * top.max(1.0)
}

/// Largest absolute adjacency eigenvalue.
pub fn spectral_radius(g: &Graph) -> Result<f64> {
    let eig = graph_eigenvalues(g, MatrixKind::Adjacency, DEFAULT_TOL)?;
    Ok(eig.eigenvalues.iter().fold(0.0f64, |m, v| m.max(libm::fabs(*v))))
}

/// Spectrum with exact rational eigenvalues, strictly ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactSpectrum {
    pub entries: Vec<(BigRational, u64)>,
}

impl ExactSpectrum {
    pub fn from_integers(entries: &[(BigInt, u64)]) -> Self {
        ExactSpectrum { entries: entries.iter().map(|(v, m)| (BigRational::from_integer(v.clone()), *m)).collect() }
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.entries.windows(2).all(|w| w[0].0 < w[1].0)
    }

    /// `Π (x - λ)^mult`; `None` if an eigenvalue is not an integer.
    pub fn to_polynomial(&self) -> Option<IntPolynomial> {
        self.entries.iter().try_fold(IntPolynomial::one(), |acc, (v, m)| {
            v.is_integer().then(|| &acc * &IntPolynomial::linear(v.to_integer()).pow(*m))
        })
    }

    /// Whether `poly` is exactly `Π (x - λ)^mult`: every root occurs with the
    /// stated multiplicity and nothing is left over.
    pub fn divides_exactly(&self, poly: &IntPolynomial) -> bool {
        let mut rest = poly.clone();
        for (v, m) in &self.entries {
            if !v.is_integer() {
                return false;
            }
            let (found, cofactor) = rest.root_multiplicity(&v.to_integer());
            if found != *m {
                return false;
            }
            rest = cofactor;
        }
        rest == IntPolynomial::one()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Multiplicity {
    /// `Σ_i |μ_i - 2m/n|` over all `n` eigenvalues.
    With,
    /// One term per distinct eigenvalue.
    Without,
}

/// Exact `LE = Σ |μ - 2m/n|`.
pub fn laplacian_energy_exact(spectrum: &ExactSpectrum, m: u128, n: u64, mode: Multiplicity) -> Result<BigRational> {
    let total = spectrum.total_multiplicity();
    if total != n {
        return Err(Error::MultiplicitySum { got: total, expected: n });
    }
    let mean = BigRational::new(BigInt::from(2 * m), BigInt::from(n));
    Ok(spectrum.entries.iter().fold(BigRational::zero(), |acc, (mu, mult)| {
        let w = match mode {
            Multiplicity::With => *mult,
            Multiplicity::Without => 1,
        };
        acc + (mu - &mean).abs() * BigRational::from_integer(BigInt::from(w))
    }))
}

/// Floating `LE` from a full list of eigenvalues.
pub fn laplacian_energy_f64(eigenvalues: &[f64], m: u128, n: u64) -> Result<f64> {
    if eigenvalues.len() as u64 != n {
        return Err(Error::MultiplicitySum { got: eigenvalues.len() as u64, expected: n });
    }
    let mean = 2.0 * m as f64 / n as f64;
    Ok(eigenvalues.iter().map(|mu| libm::fabs(mu - mean)).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{model_graph, Graph};
    use alloc::vec;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| libm::fabs(x - y) <= tol)
    }

    #[test]
    fn small_spectra() {
        let k3 = graph_eigenvalues(&Graph::complete(3), MatrixKind::Adjacency, DEFAULT_TOL).unwrap();
        assert!(close(&k3.eigenvalues, &[-1.0, -1.0, 2.0], 1e-12));
        let k2 = graph_eigenvalues(&Graph::complete(2), MatrixKind::Laplacian, DEFAULT_TOL).unwrap();
        assert!(close(&k2.eigenvalues, &[0.0, 2.0], 1e-12));
    }

    #[test]
    fn rejects_asymmetric() {
        assert_eq!(SymMatrix::new(2, vec![0.0, 1.0, 2.0, 0.0]), Err(Error::NotSymmetric(1, 0)));
    }

    #[test]
    fn model_laplacian_spectrum() {
        let eig = graph_eigenvalues(&model_graph(2, 3).unwrap(), MatrixKind::Laplacian, DEFAULT_TOL).unwrap();
        let mut expected = vec![0.0];
        for (v, m) in [(1.0, 6), (2.0, 3), (4.0, 3), (12.0, 9), (18.0, 1), (24.0, 1)] {
            expected.extend(core::iter::repeat_n(v, m));
        }
        assert!(close(&eig.eigenvalues, &expected, 1e-9 * 24.0));
        let clusters = cluster_multiplicities(&eig.eigenvalues, default_cluster_tol(&eig.eigenvalues));
        let mults: Vec<u64> = clusters.iter().map(|c| c.multiplicity).collect();
        assert_eq!(mults, vec![1, 6, 3, 3, 9, 1, 1]);
    }

    #[test]
    fn clustering() {
        let c = cluster_multiplicities(&[1.0000000001, 0.9999999999], 1e-6);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].multiplicity, 2);
        assert!(libm::fabs(c[0].mean - 1.0) < 1e-12);
        let c = cluster_multiplicities(&[-1.0, -1.0, 2.0], 1e-6);
        assert_eq!(c.iter().map(|c| (c.mean, c.multiplicity)).collect::<Vec<_>>(), vec![(-1.0, 2), (2.0, 1)]);
        assert!(cluster_multiplicities(&[], 1e-6).is_empty());
    }

    #[test]
    fn radius_examples() {
        for n in 2..7 {
            assert!(libm::fabs(spectral_radius(&Graph::complete(n)).unwrap() - (n - 1) as f64) < 1e-12);
        }
        let r = spectral_radius(&model_graph(2, 3).unwrap()).unwrap();
        assert!(r > 11.0 && r <= 17.465, "{r}");
    }

    #[test]
    fn k2_energy() {
        let spec = ExactSpectrum::from_integers(&[(BigInt::from(0), 1), (BigInt::from(2), 1)]);
        assert_eq!(laplacian_energy_exact(&spec, 1, 2, Multiplicity::With).unwrap(), BigRational::from_integer(2.into()));
        assert!(matches!(
            laplacian_energy_exact(&spec, 1, 3, Multiplicity::With),
            Err(Error::MultiplicitySum { got: 2, expected: 3 })
        ));
        assert_eq!(laplacian_energy_f64(&[0.0, 2.0], 1, 2).unwrap(), 2.0);
    }

    #[test]
    fn exact_spectrum_division() {
        let spec = ExactSpectrum::from_integers(&[(BigInt::from(-1), 2), (BigInt::from(2), 1)]);
        let k3 = IntPolynomial::from_i64s(&[-2, -3, 0, 1]);
        assert!(spec.divides_exactly(&k3));
        assert_eq!(spec.to_polynomial().unwrap(), k3);
        let wrong = ExactSpectrum::from_integers(&[(BigInt::from(-1), 1), (BigInt::from(2), 1)]);
        assert!(!wrong.divides_exactly(&k3));
    }
}
