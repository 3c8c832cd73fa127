//! Arithmetic in GF(p^k).
//!
//! Elements are polynomials over Z/pZ of degree below `k`, stored as
//! coefficient vectors from the constant term upward.  The reducing modulus is
//! the first monic irreducible polynomial of degree `k` in lexicographic order
//! on coefficient vectors read from the constant term upward, so every field
//! order names exactly one representation.  For `k = 1` the modulus is `X` and
//! the arithmetic collapses to integers mod `p`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest field order the constructors accept by default.
pub const DEFAULT_MAX_ORDER: u64 = 32;

#[derive(Debug, PartialEq, Eq)]
struct Inner {
    p: u64,
    k: usize,
    q: u64,
    /// Monic, degree `k`, coefficients constant-term first (length `k + 1`).
    modulus: Vec<u64>,
}

/// A concrete field GF(p^k) together with its reducing modulus.
#[derive(Clone, Debug)]
pub struct FieldSpec {
    inner: Arc<Inner>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl Eq for FieldSpec {}

impl FieldSpec {
    /// Builds GF(p^k), requiring `p` prime, `k >= 1`, and `p^k` within the
    /// default order bound.
    pub fn new(p: u64, k: usize) -> Result<FieldSpec> {
        FieldSpec::with_bound(p, k, DEFAULT_MAX_ORDER)
    }

    /// Same as [`FieldSpec::new`] with an explicit order bound.
    pub fn with_bound(p: u64, k: usize, bound: u64) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = p.saturating_pow(k as u32);
        if q > bound {
            return Err(Error::FieldTooLarge { q, bound });
        }
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            smallest_irreducible(p, k)
        };
        Ok(FieldSpec {
            inner: Arc::new(Inner { p, k, q, modulus }),
        })
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    pub fn degree(&self) -> usize {
        self.inner.k
    }

    /// The field order q = p^k.
    pub fn order(&self) -> u64 {
        self.inner.q
    }

    /// Reducing modulus, constant term first, length `degree() + 1`.
    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            spec: self.clone(),
            coeffs: vec![0; self.inner.k],
        }
    }

    pub fn one(&self) -> FieldElement {
        let mut coeffs = vec![0; self.inner.k];
        coeffs[0] = 1;
        FieldElement { spec: self.clone(), coeffs }
    }

    /// The residue class of `X`, generating the extension; `None` for `k = 1`.
    pub fn generator(&self) -> Option<FieldElement> {
        if self.inner.k < 2 {
            return None;
        }
        let mut coeffs = vec![0; self.inner.k];
        coeffs[1] = 1;
        Some(FieldElement { spec: self.clone(), coeffs })
    }

    /// Builds the element with the given coefficients (constant term first),
    /// reducing each mod p.  Shorter vectors are padded with zeros.
    pub fn element(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() > self.inner.k {
            return Err(Error::CoefficientLength {
                expected: self.inner.k,
                got: coeffs.len(),
            });
        }
        let mut full = vec![0; self.inner.k];
        for (i, &c) in coeffs.iter().enumerate() {
            full[i] = c % self.inner.p;
        }
        Ok(FieldElement { spec: self.clone(), coeffs: full })
    }

    /// Embeds an integer into the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        let p = self.inner.p as i64;
        let r = n.rem_euclid(p) as u64;
        let mut coeffs = vec![0; self.inner.k];
        coeffs[0] = r;
        FieldElement { spec: self.clone(), coeffs }
    }

    /// Element number `i` in the canonical order: coefficient vectors read as
    /// base-p integers with the constant term least significant.
    pub fn from_index(&self, i: u64) -> Result<FieldElement> {
        if i >= self.inner.q {
            return Err(Error::IndexOutOfRange { index: i, count: self.inner.q });
        }
        let mut coeffs = vec![0; self.inner.k];
        let mut rest = i;
        for c in coeffs.iter_mut() {
            *c = rest % self.inner.p;
            rest /= self.inner.p;
        }
        Ok(FieldElement { spec: self.clone(), coeffs })
    }

    /// All q elements in canonical order, zero first.
    pub fn enumerate(&self) -> Vec<FieldElement> {
        (0..self.inner.q).map(|i| self.from_index(i).unwrap()).collect()
    }
}

/// An element of a [`FieldSpec`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    spec: FieldSpec,
    coeffs: Vec<u64>,
}

impl std::hash::Hash for FieldSpec {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.inner.p.hash(state);
        self.inner.k.hash(state);
    }
}

impl FieldElement {
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    /// Coefficients, constant term first, length `spec().degree()`.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    /// Position in the canonical element order.
    pub fn index(&self) -> u64 {
        let p = self.spec.inner.p;
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
    }

    fn check_spec(&self, other: &FieldElement) -> Result<()> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_spec(other)?;
        let p = self.spec.inner.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        Ok(FieldElement { spec: self.spec.clone(), coeffs })
    }

    pub fn neg(&self) -> FieldElement {
        let p = self.spec.inner.p;
        let coeffs = self.coeffs.iter().map(|&a| (p - a) % p).collect();
        FieldElement { spec: self.spec.clone(), coeffs }
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_spec(other)?;
        let p = self.spec.inner.p;
        let prod = poly_mul(&self.coeffs, &other.coeffs, p);
        let rem = poly_rem(&prod, &self.spec.inner.modulus, p);
        let mut coeffs = vec![0; self.spec.inner.k];
        coeffs[..rem.len()].copy_from_slice(&rem);
        Ok(FieldElement { spec: self.spec.clone(), coeffs })
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        let mut result = self.spec.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).unwrap();
            }
            base = base.mul(&base).unwrap();
            e >>= 1;
        }
        result
    }

    /// Multiplicative inverse via a^(q-2); errors on zero.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(self.spec.inner.q - 2))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.spec.inner.k == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for d in (0..self.spec.inner.k).rev() {
            let c = self.coeffs[d];
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match d {
                0 => write!(f, "{c}")?,
                1 if c == 1 => write!(f, "a")?,
                1 => write!(f, "{c}a")?,
                _ if c == 1 => write!(f, "a^{d}")?,
                _ => write!(f, "{c}a^{d}")?,
            }
        }
        Ok(())
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Writes `q` as `p^k` with `p` prime, if possible.
pub fn prime_power(q: u64) -> Option<(u64, usize)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut rest = q;
            let mut k = 0;
            while rest % p == 0 {
                rest /= p;
                k += 1;
            }
            return if rest == 1 { Some((p, k)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    out
}

fn poly_deg(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

/// Remainder of `a` divided by the monic polynomial `b`, trailing zeros
/// stripped.
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = poly_deg(b).expect("monic divisor");
    debug_assert_eq!(b[db], 1);
    let mut rem = a.to_vec();
    while let Some(da) = poly_deg(&rem) {
        if da < db {
            break;
        }
        let lead = rem[da];
        let shift = da - db;
        for (i, &bi) in b.iter().enumerate().take(db + 1) {
            let sub = (lead * bi) % p;
            rem[i + shift] = (rem[i + shift] + p * p - sub) % p;
        }
    }
    let deg = poly_deg(&rem).map_or(0, |d| d + 1);
    rem.truncate(deg);
    rem
}

fn is_irreducible(cand: &[u64], p: u64) -> bool {
    let k = poly_deg(cand).unwrap();
    for d in 1..=k / 2 {
        // All monic divisors of degree d.
        let mut tail = vec![0u64; d];
        loop {
            let mut g = tail.clone();
            g.push(1);
            if poly_rem(cand, &g, p).is_empty() {
                return false;
            }
            if !odometer(&mut tail, p) {
                break;
            }
        }
    }
    true
}

/// Advances `digits` as a base-p counter with the last entry fastest; returns
/// false once it wraps around to all zeros.
fn odometer(digits: &mut [u64], p: u64) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < p {
            return true;
        }
        *d = 0;
    }
    false
}

/// First monic irreducible of degree k over Z/pZ in lexicographic order on
/// coefficient vectors read constant-term first.
fn smallest_irreducible(p: u64, k: usize) -> Vec<u64> {
    let mut tail = vec![0u64; k];
    loop {
        let mut cand = tail.clone();
        cand.push(1);
        if is_irreducible(&cand, p) {
            return cand;
        }
        // Stepping with the constant term slowest walks candidates in
        // lexicographic order.
        if !odometer(&mut tail, p) {
            unreachable!("an irreducible polynomial of every degree exists");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent reducibility oracle: search for an explicit factorization
    /// into two monic polynomials of positive degree.
    fn product_reducible(cand: &[u64], p: u64) -> bool {
        let k = poly_deg(cand).unwrap();
        for dg in 1..k {
            let dh = k - dg;
            let mut gt = vec![0u64; dg];
            loop {
                let mut g = gt.clone();
                g.push(1);
                let mut ht = vec![0u64; dh];
                loop {
                    let mut h = ht.clone();
                    h.push(1);
                    if poly_mul(&g, &h, p) == cand {
                        return true;
                    }
                    if !odometer(&mut ht, p) {
                        break;
                    }
                }
                if !odometer(&mut gt, p) {
                    break;
                }
            }
        }
        false
    }

    #[test]
    fn modulus_is_smallest_irreducible() {
        for (p, k) in [(2u64, 2usize), (3, 2), (2, 3), (2, 4), (5, 2), (3, 3), (2, 5)] {
            let spec = FieldSpec::new(p, k).unwrap();
            let modulus = spec.modulus().to_vec();
            assert!(!product_reducible(&modulus, p), "modulus for GF({p}^{k}) reducible");
            // Minimality: every lexicographically earlier monic candidate factors.
            let mut tail = vec![0u64; k];
            loop {
                let mut cand = tail.clone();
                cand.push(1);
                if cand == modulus {
                    break;
                }
                assert!(
                    product_reducible(&cand, p),
                    "candidate {cand:?} before modulus {modulus:?} is irreducible"
                );
                assert!(odometer(&mut tail, p));
            }
        }
    }

    #[test]
    fn frozen_moduli() {
        assert_eq!(FieldSpec::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(FieldSpec::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FieldSpec::new(2, 3).unwrap().modulus(), &[1, 0, 1, 1]);
        assert_eq!(FieldSpec::new(5, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(FieldSpec::new(7, 1).unwrap().modulus(), &[0, 1]);
    }

    #[test]
    fn gf4_generator_squares_to_a_plus_one() {
        let f4 = FieldSpec::new(2, 2).unwrap();
        let a = f4.generator().unwrap();
        let a_plus_1 = f4.element(&[1, 1]).unwrap();
        assert_eq!(a.mul(&a).unwrap(), a_plus_1);
        assert_eq!(a.mul(&a_plus_1).unwrap(), f4.one());
        assert_eq!(a.inv().unwrap(), a_plus_1);
    }

    #[test]
    fn gf4_enumeration_and_rendering() {
        let f4 = FieldSpec::new(2, 2).unwrap();
        let shown: Vec<String> = f4.enumerate().iter().map(|e| e.to_string()).collect();
        assert_eq!(shown, ["0", "1", "a", "a+1"]);
    }

    #[test]
    fn gf9_rendering() {
        let f9 = FieldSpec::new(3, 2).unwrap();
        let shown: Vec<String> = f9.enumerate().iter().map(|e| e.to_string()).collect();
        assert_eq!(shown, ["0", "1", "2", "a", "a+1", "a+2", "2a", "2a+1", "2a+2"]);
    }

    #[test]
    fn gf5_inverse_of_two() {
        let f5 = FieldSpec::new(5, 1).unwrap();
        let two = f5.from_int(2);
        let three = f5.from_int(3);
        assert_eq!(two.mul(&three).unwrap(), f5.one());
        assert_eq!(two.inv().unwrap(), three);
    }

    fn small_orders() -> Vec<(u64, usize)> {
        vec![(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4)]
    }

    #[test]
    fn field_axioms_exhaustive() {
        for (p, k) in small_orders() {
            let f = FieldSpec::with_bound(p, k, 32).unwrap();
            let elems = f.enumerate();
            let q = f.order() as usize;
            assert_eq!(elems.len(), q);
            for a in &elems {
                assert_eq!(a.add(&f.zero()).unwrap(), *a);
                assert_eq!(a.mul(&f.one()).unwrap(), *a);
                assert_eq!(a.add(&a.neg()).unwrap(), f.zero());
                if !a.is_zero() {
                    assert_eq!(a.mul(&a.inv().unwrap()).unwrap(), f.one());
                }
                for b in &elems {
                    assert_eq!(a.add(b).unwrap(), b.add(a).unwrap());
                    assert_eq!(a.mul(b).unwrap(), b.mul(a).unwrap());
                    for c in &elems {
                        assert_eq!(
                            a.add(b).unwrap().add(c).unwrap(),
                            a.add(&b.add(c).unwrap()).unwrap()
                        );
                        assert_eq!(
                            a.mul(b).unwrap().mul(c).unwrap(),
                            a.mul(&b.mul(c).unwrap()).unwrap()
                        );
                        assert_eq!(
                            a.mul(&b.add(c).unwrap()).unwrap(),
                            a.mul(b).unwrap().add(&a.mul(c).unwrap()).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn unit_group_is_cyclic_and_torsion_matches_order() {
        for (p, k) in small_orders() {
            let f = FieldSpec::with_bound(p, k, 32).unwrap();
            let q = f.order();
            let mut found_generator = false;
            for a in f.enumerate() {
                if a.is_zero() {
                    continue;
                }
                assert!(a.pow(q - 1).is_one(), "c^(q-1) != 1 in GF({q})");
                let mut ord = 1;
                let mut acc = a.clone();
                while !acc.is_one() {
                    acc = acc.mul(&a).unwrap();
                    ord += 1;
                }
                assert_eq!((q - 1) % ord, 0);
                if ord == q - 1 {
                    found_generator = true;
                }
            }
            assert!(found_generator, "no multiplicative generator in GF({q})");
        }
    }

    #[test]
    fn frobenius_is_additive() {
        for (p, k) in small_orders() {
            let f = FieldSpec::with_bound(p, k, 32).unwrap();
            let elems = f.enumerate();
            for a in &elems {
                for b in &elems {
                    assert_eq!(
                        a.add(b).unwrap().pow(p),
                        a.pow(p).add(&b.pow(p)).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn enumeration_is_base_p_order() {
        let f8 = FieldSpec::new(2, 3).unwrap();
        for (i, e) in f8.enumerate().into_iter().enumerate() {
            assert_eq!(e.index(), i as u64);
            assert_eq!(f8.from_index(i as u64).unwrap(), e);
        }
        // Constant term is the least significant digit.
        assert_eq!(f8.from_index(1).unwrap().coeffs(), &[1, 0, 0]);
        assert_eq!(f8.from_index(2).unwrap().coeffs(), &[0, 1, 0]);
        assert_eq!(f8.from_index(6).unwrap().coeffs(), &[0, 1, 1]);
    }

    #[test]
    fn constructor_rejects_bad_parameters() {
        assert!(matches!(FieldSpec::new(4, 1), Err(Error::NotPrime(4))));
        assert!(matches!(FieldSpec::new(2, 0), Err(Error::ZeroDegree)));
        assert!(matches!(FieldSpec::new(2, 6), Err(Error::FieldTooLarge { .. })));
        assert!(FieldSpec::with_bound(2, 6, 64).is_ok());
    }

    #[test]
    fn cross_field_operations_fail() {
        let f4 = FieldSpec::new(2, 2).unwrap();
        let f9 = FieldSpec::new(3, 2).unwrap();
        assert!(matches!(f4.one().add(&f9.one()), Err(Error::FieldMismatch)));
        assert!(matches!(f4.one().mul(&f9.one()), Err(Error::FieldMismatch)));
    }

    #[test]
    fn prime_power_factoring() {
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(32), Some((2, 5)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(0), None);
    }
}
