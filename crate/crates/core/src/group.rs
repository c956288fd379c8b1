//! Canonical elements and arithmetic for `Z_n` and `G(k, p)`.
//!
//! Every element of `G(k, p)` is stored as `s^a r^b` with `a ∈ {0, 1}` and
//! `b ∈ [0, 2^k p)`. From `s r s^-1 = r^θ` (with `θ = 2^(k-1) p - 1`) one gets
//! `r^b s = s r^(θ b)`, hence the product law
//!
//! ```text
//! (s^a r^b)(s^c r^d) = s^(a xor c) r^(θ^c b + d)
//! ```
//!
//! which is well defined because `θ² ≡ 1 (mod 2^k p)`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::primes::is_prime;

/// Element `s^a r^b`. Cyclic groups only use `a = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement {
    pub a: u8,
    pub b: u64,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement { a: 0, b: 0 };

    pub const fn new(a: u8, b: u64) -> Self {
        GroupElement { a, b }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s^{} r^{}", self.a, self.b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Cyclic { n: u64 },
    /// `G(k, p)`; the name does not claim isomorphism with the classical
    /// semidihedral family.
    SemidihedralType { k: u32, p: u64 },
}

/// A validated group descriptor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    kind: GroupKind,
    /// Order of `r` (`n` for cyclic groups, `2^k p` otherwise).
    modulus: u64,
    /// Twist exponent `θ`; `1` for cyclic groups.
    theta: u64,
}

impl GroupSpec {
    pub fn cyclic(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGroup);
        }
        Ok(GroupSpec { kind: GroupKind::Cyclic { n }, modulus: n, theta: 1 })
    }

    pub fn semidihedral(k: u32, p: u64) -> Result<Self> {
        if k < 2 {
            return Err(Error::ExponentTooSmall(k));
        }
        if p == 2 || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        // 2^(k+1) p must fit in a u64.
        let modulus = (k < 63)
            .then(|| 1u64 << k)
            .and_then(|pk| pk.checked_mul(p))
            .filter(|h| h.checked_mul(2).is_some())
            .ok_or(Error::OrderOverflow)?;
        Ok(GroupSpec {
            kind: GroupKind::SemidihedralType { k, p },
            modulus,
            theta: modulus / 2 - 1,
        })
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn is_cyclic(&self) -> bool {
        matches!(self.kind, GroupKind::Cyclic { .. })
    }

    /// `(k, p)` for `G(k, p)`.
    pub fn params(&self) -> Option<(u32, u64)> {
        match self.kind {
            GroupKind::SemidihedralType { k, p } => Some((k, p)),
            GroupKind::Cyclic { .. } => None,
        }
    }

    /// Order of the rotation subgroup `<r>`.
    pub fn rotation_order(&self) -> u64 {
        self.modulus
    }

    pub fn theta(&self) -> u64 {
        self.theta
    }

    pub fn order(&self) -> u64 {
        if self.is_cyclic() {
            self.modulus
        } else {
            2 * self.modulus
        }
    }

    /// The central involution `u = r^(2^(k-1) p)`.
    pub fn central_involution(&self) -> Option<GroupElement> {
        (!self.is_cyclic()).then(|| GroupElement::new(0, self.modulus / 2))
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::IDENTITY
    }

    pub fn generator_r(&self) -> GroupElement {
        GroupElement::new(0, 1 % self.modulus)
    }

    pub fn generator_s(&self) -> Option<GroupElement> {
        (!self.is_cyclic()).then_some(GroupElement::new(1, 0))
    }

    pub fn contains(&self, x: GroupElement) -> bool {
        let a_ok = if self.is_cyclic() { x.a == 0 } else { x.a <= 1 };
        a_ok && x.b < self.modulus
    }

    pub fn check(&self, x: GroupElement) -> Result<GroupElement> {
        if self.contains(x) {
            Ok(x)
        } else {
            Err(Error::NonCanonical { a: x.a, b: x.b })
        }
    }

    /// All elements: first `<r>` by exponent, then `s r^b` by exponent.
    pub fn elements(&self) -> Vec<GroupElement> {
        let s_range = if self.is_cyclic() { 0..1 } else { 0..2 };
        s_range
            .flat_map(|a| (0..self.modulus).map(move |b| GroupElement::new(a, b)))
            .collect()
    }

    pub fn multiply(&self, x: GroupElement, y: GroupElement) -> Result<GroupElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul_unchecked(x, y))
    }

    pub(crate) fn mul_unchecked(&self, x: GroupElement, y: GroupElement) -> GroupElement {
        let m = self.modulus as u128;
        let twisted = if y.a == 1 { (self.theta as u128 * x.b as u128) % m } else { x.b as u128 };
        GroupElement::new(x.a ^ y.a, ((twisted + y.b as u128) % m) as u64)
    }

    pub fn inverse(&self, x: GroupElement) -> Result<GroupElement> {
        self.check(x)?;
        Ok(self.inv_unchecked(x))
    }

    fn inv_unchecked(&self, x: GroupElement) -> GroupElement {
        if x.a == 0 {
            GroupElement::new(0, (self.modulus - x.b) % self.modulus)
        } else {
            // (s r^b)^-1 = r^-b s = s r^(-θ b)
            let m = self.modulus as u128;
            let neg = (self.modulus - x.b) % self.modulus;
            GroupElement::new(1, ((self.theta as u128 * neg as u128) % m) as u64)
        }
    }

    pub fn pow(&self, x: GroupElement, mut e: u64) -> Result<GroupElement> {
        self.check(x)?;
        let mut base = x;
        let mut acc = GroupElement::IDENTITY;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_unchecked(acc, base);
            }
            base = self.mul_unchecked(base, base);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Smallest `m >= 1` with `x^m = e`.
    pub fn element_order(&self, x: GroupElement) -> Result<u64> {
        self.check(x)?;
        let mut order = 1;
        let mut y = x;
        while !y.is_identity() {
            y = self.mul_unchecked(y, x);
            order += 1;
        }
        Ok(order)
    }

    /// `[x^0, x^1, ..., x^(o(x)-1)]`.
    pub fn cyclic_subgroup(&self, x: GroupElement) -> Result<Vec<GroupElement>> {
        self.check(x)?;
        let mut out = alloc::vec![GroupElement::IDENTITY];
        let mut y = x;
        while !y.is_identity() {
            out.push(y);
            y = self.mul_unchecked(y, x);
        }
        Ok(out)
    }

    /// Position of `x` in [`GroupSpec::elements`].
    pub fn index_of(&self, x: GroupElement) -> usize {
        (x.a as u64 * self.modulus + x.b) as usize
    }

    /// Checks the defining relations of `G(k, p)` and the group axioms.
    ///
    /// Associativity is checked exhaustively for groups of order at most 48
    /// and on a deterministic stride through the triple space otherwise.
    pub fn validate_presentation(&self) -> Result<PresentationReport> {
        let s = self.generator_s().ok_or(Error::NotSemidihedral)?;
        let r = self.generator_r();
        let h = self.modulus;
        let e = GroupElement::IDENTITY;
        let mut checks = Vec::new();

        checks.push(("r^(2^k p) = e", self.pow(r, h)? == e));
        checks.push(("s^2 = e", self.mul_unchecked(s, s) == e));
        let srs = self.mul_unchecked(self.mul_unchecked(s, r), self.inv_unchecked(s));
        checks.push(("s r s^-1 = r^theta", srs == self.pow(r, self.theta)?));
        checks.push(("theta^2 = 1 mod 2^k p", (self.theta as u128).pow(2) % h as u128 == 1));
        checks.push(("order r = 2^k p", self.element_order(r)? == h));

        let elements = self.elements();
        let mut seen = elements.clone();
        seen.sort();
        seen.dedup();
        checks.push(("|G| = 2^(k+1) p", seen.len() as u64 == self.order() && self.order() == 2 * h));

        let closure_and_inverse = elements.iter().all(|&x| {
            let xi = self.inv_unchecked(x);
            self.contains(xi) && self.mul_unchecked(x, xi) == e && self.mul_unchecked(xi, x) == e
        });
        checks.push(("inverses", closure_and_inverse));
        checks.push((
            "identity",
            elements.iter().all(|&x| self.mul_unchecked(x, e) == x && self.mul_unchecked(e, x) == x),
        ));
        checks.push(("associativity", self.associative_on_sample(&elements)));

        Ok(PresentationReport { order: self.order(), checks })
    }

    fn associative_on_sample(&self, elements: &[GroupElement]) -> bool {
        let n = elements.len() as u64;
        let total = n * n * n;
        let (count, stride) = if n <= 48 { (total, 1) } else { (20_000, coprime_stride(total)) };
        (0..count).all(|i| {
            let t = (i * stride) % total;
            let (x, y, z) = (
                elements[(t / (n * n)) as usize],
                elements[((t / n) % n) as usize],
                elements[(t % n) as usize],
            );
            self.mul_unchecked(self.mul_unchecked(x, y), z) == self.mul_unchecked(x, self.mul_unchecked(y, z))
        })
    }

    /// The partition `H0 ∪ H1 ∪ H2 ∪ H3` of `G(k, p)`.
    pub fn class_partition(&self) -> Result<ClassPartition> {
        let u = self.central_involution().ok_or(Error::NotSemidihedral)?;
        let h = self.modulus;
        let h0 = alloc::vec![GroupElement::IDENTITY, u];
        let h1 = (1..h).filter(|&b| b != u.b).map(|b| GroupElement::new(0, b)).collect();
        let h2 = (0..h).step_by(2).map(|b| GroupElement::new(1, b)).collect();
        let h3 = (1..h).step_by(2).map(|b| GroupElement::new(1, b)).collect();
        Ok(ClassPartition { h0, h1, h2, h3 })
    }
}

fn coprime_stride(total: u64) -> u64 {
    // A large odd stride coprime to `total` visits distinct triples.
    let mut stride = total / 2 + 1;
    while num_integer::gcd(stride, total) != 1 {
        stride += 1;
    }
    stride
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationReport {
    pub order: u64,
    pub checks: Vec<(&'static str, bool)>,
}

impl PresentationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.checks.iter().filter(|(_, ok)| !ok).map(|(name, _)| *name)
    }
}

/// `H0 = {e, u}`, `H1 = <r> \ H0`, `H2 = {s r^even}`, `H3 = {s r^odd}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassPartition {
    pub h0: Vec<GroupElement>,
    pub h1: Vec<GroupElement>,
    pub h2: Vec<GroupElement>,
    pub h3: Vec<GroupElement>,
}

impl ClassPartition {
    pub fn sizes(&self) -> [usize; 4] {
        [self.h0.len(), self.h1.len(), self.h2.len(), self.h3.len()]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::String;
    use alloc::vec;

    fn g(k: u32, p: u64) -> GroupSpec {
        GroupSpec::semidihedral(k, p).unwrap()
    }

    const fn el(a: u8, b: u64) -> GroupElement {
        GroupElement::new(a, b)
    }

    /// Normal form of a word in `s`, `r` by rewriting with
    /// `r s -> s r^θ`, `s s -> ()`, `r^h -> ()`.
    fn reduce_word(word: &str, h: usize, theta: usize) -> GroupElement {
        let mut w: String = word.into();
        loop {
            let before = w.clone();
            if let Some(i) = w.find("rs") {
                let mut next = String::new();
                next.push_str(&w[..i]);
                next.push('s');
                next.extend(core::iter::repeat_n('r', theta));
                next.push_str(&w[i + 2..]);
                w = next;
            }
            w = w.replace("ss", "");
            let rh: String = core::iter::repeat_n('r', h).collect();
            w = w.replace(&rh, "");
            if w == before {
                break;
            }
        }
        let a = w.starts_with('s') as u8;
        let b = w.chars().filter(|&c| c == 'r').count() as u64;
        assert!(!w[a as usize..].contains('s'));
        el(a, b)
    }

    fn word_of(x: GroupElement) -> String {
        let mut w = String::new();
        if x.a == 1 {
            w.push('s');
        }
        w.extend(core::iter::repeat_n('r', x.b as usize));
        w
    }

    #[test]
    fn cayley_table_matches_word_rewriting() {
        let spec = g(2, 3);
        let elems = spec.elements();
        for &x in &elems {
            for &y in &elems {
                let mut w = word_of(x);
                w.push_str(&word_of(y));
                assert_eq!(spec.multiply(x, y).unwrap(), reduce_word(&w, 12, 5), "{x} * {y}");
            }
        }
    }

    #[test]
    fn multiply_examples() {
        let spec = g(2, 3);
        assert_eq!(spec.multiply(el(1, 0), el(1, 0)).unwrap(), el(0, 0));
        assert_eq!(spec.multiply(el(0, 0), el(0, 7)).unwrap(), el(0, 7));
        assert_eq!(spec.multiply(el(0, 1), el(1, 0)).unwrap(), el(1, 5));
    }

    #[test]
    fn non_canonical_rejected() {
        let spec = g(2, 3);
        assert_eq!(spec.multiply(el(0, 12), el(0, 0)), Err(Error::NonCanonical { a: 0, b: 12 }));
        assert!(spec.inverse(el(2, 0)).is_err());
        let z = GroupSpec::cyclic(5).unwrap();
        assert!(z.multiply(el(1, 0), el(0, 0)).is_err());
    }

    #[test]
    fn inverse_examples() {
        let spec = g(2, 3);
        assert_eq!(spec.inverse(el(0, 0)).unwrap(), el(0, 0));
        assert_eq!(spec.inverse(el(0, 5)).unwrap(), el(0, 7));
        assert_eq!(spec.inverse(el(1, 0)).unwrap(), el(1, 0));
    }

    #[test]
    fn order_examples() {
        let spec = g(2, 3);
        assert_eq!(spec.element_order(el(1, 2)).unwrap(), 2);
        assert_eq!(spec.element_order(el(1, 1)).unwrap(), 4);
        assert_eq!(spec.element_order(el(0, 1)).unwrap(), 12);
    }

    #[test]
    fn cyclic_subgroup_examples() {
        let spec = g(2, 3);
        assert_eq!(spec.cyclic_subgroup(el(1, 1)).unwrap(), vec![el(0, 0), el(1, 1), el(0, 6), el(1, 7)]);
        assert_eq!(spec.cyclic_subgroup(el(0, 0)).unwrap(), vec![el(0, 0)]);
        assert_eq!(spec.cyclic_subgroup(el(0, 6)).unwrap(), vec![el(0, 0), el(0, 6)]);
    }

    #[test]
    fn presentation_examples() {
        let r = g(2, 3).validate_presentation().unwrap();
        assert!(r.all_pass(), "{:?}", r);
        assert_eq!(r.order, 24);
        let r = g(3, 5).validate_presentation().unwrap();
        assert!(r.all_pass());
        assert_eq!(r.order, 80);
        assert_eq!(GroupSpec::semidihedral(1, 3), Err(Error::ExponentTooSmall(1)));
        assert_eq!(GroupSpec::cyclic(7).unwrap().validate_presentation(), Err(Error::NotSemidihedral));
    }

    #[test]
    fn construction_rejects_bad_primes() {
        assert_eq!(GroupSpec::semidihedral(2, 9), Err(Error::NotOddPrime(9)));
        assert_eq!(GroupSpec::semidihedral(2, 2), Err(Error::NotOddPrime(2)));
        assert_eq!(GroupSpec::semidihedral(2, 1), Err(Error::NotOddPrime(1)));
        assert_eq!(GroupSpec::semidihedral(62, 3), Err(Error::OrderOverflow));
        assert_eq!(GroupSpec::cyclic(0), Err(Error::EmptyGroup));
    }

    #[test]
    fn partition_sizes() {
        assert_eq!(g(2, 3).class_partition().unwrap().sizes(), [2, 10, 6, 6]);
        assert_eq!(g(2, 5).class_partition().unwrap().sizes(), [2, 18, 10, 10]);
        assert_eq!(g(3, 3).class_partition().unwrap().sizes(), [2, 22, 12, 12]);
    }

    #[test]
    fn partition_matches_direct_classification() {
        // Classify all 48 elements of G(3,3) by form and element order.
        let spec = g(3, 3);
        let part = spec.class_partition().unwrap();
        let u = spec.central_involution().unwrap();
        for x in spec.elements() {
            let class = match (x.a, spec.element_order(x).unwrap()) {
                (0, _) if x == GroupElement::IDENTITY || x == u => 0,
                (0, _) => 1,
                (1, 2) => 2,
                (1, 4) => 3,
                other => panic!("unexpected {other:?}"),
            };
            let sets = [&part.h0, &part.h1, &part.h2, &part.h3];
            for (i, set) in sets.iter().enumerate() {
                assert_eq!(set.contains(&x), i == class, "{x}");
            }
        }
    }
}
