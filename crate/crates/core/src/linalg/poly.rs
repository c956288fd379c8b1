use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense polynomial with big-integer coefficients, lowest degree first.
///
/// Always normalized: the last stored coefficient is non-zero, and the zero
/// polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(alloc::vec![c])
    }

    /// `x - root`.
    pub fn linear(root: BigInt) -> Self {
        Self::new(alloc::vec![-root, BigInt::one()])
    }

    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = alloc::vec![BigInt::zero(); degree];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Quotient and remainder on division by a monic polynomial.
    ///
    /// Panics if `divisor` is not monic.
    pub fn div_rem_monic(&self, divisor: &IntPolynomial) -> (IntPolynomial, IntPolynomial) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let d = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Self::zero(), self.clone());
        }
        let mut quot = alloc::vec![BigInt::zero(); rem.len() - d];
        for i in (0..quot.len()).rev() {
            let q = core::mem::take(&mut rem[i + d]);
            if q.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs[..d].iter().enumerate() {
                rem[i + j] -= &q * c;
            }
            quot[i] = q;
        }
        rem.truncate(d);
        (Self::new(quot), Self::new(rem))
    }

    /// Largest `e` with `(x - root)^e` dividing `self`, and the cofactor.
    /// The zero polynomial reports `(0, 0)`.
    pub fn root_multiplicity(&self, root: &BigInt) -> (u64, IntPolynomial) {
        if self.is_zero() {
            return (0, Self::zero());
        }
        let lin = Self::linear(root.clone());
        let mut mult = 0;
        let mut cur = self.clone();
        loop {
            let (q, r) = cur.div_rem_monic(&lin);
            if !r.is_zero() {
                return (mult, cur);
            }
            mult += 1;
            cur = q;
        }
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = alloc::vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if !a.is_one() || i == 0 {
                write!(f, "{a}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// `scalar · Π base_i^exponent_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredPolynomial {
    pub scalar: BigInt,
    pub factors: Vec<(IntPolynomial, u64)>,
}

impl FactoredPolynomial {
    pub fn new() -> Self {
        FactoredPolynomial { scalar: BigInt::one(), factors: Vec::new() }
    }

    pub fn with_factor(mut self, base: IntPolynomial, exponent: u64) -> Self {
        self.factors.push((base, exponent));
        self
    }

    /// `Σ exponent · deg(base)`.
    pub fn degree(&self) -> u64 {
        self.factors.iter().map(|(b, e)| b.degree().unwrap_or(0) as u64 * e).sum()
    }

    pub fn expand(&self) -> IntPolynomial {
        self.factors
            .iter()
            .fold(IntPolynomial::constant(self.scalar.clone()), |acc, (base, e)| &acc * &base.pow(*e))
    }

    /// Expansion multiplied by the sign that makes the leading coefficient positive.
    pub fn expand_sign_normalized(&self) -> IntPolynomial {
        let p = self.expand();
        if p.leading().is_negative() {
            -&p
        } else {
            p
        }
    }

    /// Sign of the leading coefficient of the expansion, computed from the
    /// factors without expanding.
    pub fn leading_sign(&self) -> i8 {
        let mut sign = if self.scalar.is_negative() { -1 } else { 1 };
        for (base, e) in &self.factors {
            if base.leading().is_negative() && e % 2 == 1 {
                sign = -sign;
            }
        }
        if self.scalar.is_zero() || self.factors.iter().any(|(b, _)| b.is_zero()) {
            0
        } else {
            sign
        }
    }
}

impl Default for FactoredPolynomial {
    fn default() -> Self {
        Self::new()
    }
}

impl fmt::Display for FactoredPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.scalar.is_one() {
            write!(f, "{}", self.scalar)?;
        }
        for (base, e) in &self.factors {
            write!(f, "({base})")?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
