//! Arithmetic in GF(p^e) with a polynomial basis.
//!
//! An element is an integer in `[0, q)` whose base-p digits, least significant
//! first, are the coefficients of its representative polynomial modulo the
//! field's monic irreducible modulus. Multiplication and inversion are served
//! from discrete log tables built at construction; the `*_poly` methods are the
//! table-free reference semantics and are what the tables are checked against.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u32 = 1 << 16;

/// An element of some GF(q), stored as its integer encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    /// exp[i] = g^i for i in 0..2(q-1), doubled so products of logs need no reduction.
    exp: Vec<u32>,
    /// log[a] for a != 0; log[0] is unused.
    log: Vec<u32>,
    /// zech[i] = log(1 + g^i), or `NONE` when 1 + g^i = 0.
    zech: Vec<u32>,
    /// frob[a] = a^p
    frob: Vec<u32>,
}

const NONE: u32 = u32::MAX;

/// The finite field GF(p^e). Cheap to clone; equality compares `(p, e, modulus)`.
#[derive(Clone)]
pub struct FieldSpec(Arc<Tables>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.e == other.0.e && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.0.p)
            .field("e", &self.0.e)
            .field("modulus", &self.0.modulus)
            .finish()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod [", self.0.p, self.0.e)?;
        for (i, c) in self.0.modulus.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

// Dense polynomials over GF(p), constant term first, no trailing zeros
// (the zero polynomial is the empty vector).
mod poly {
    pub fn trim(a: &mut Vec<u32>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    pub fn inv_mod_p(a: u32, p: u32) -> u32 {
        // p is prime and small, Fermat is plenty.
        let mut result = 1u64;
        let mut base = a as u64 % p as u64;
        let mut exp = p - 2;
        while exp > 0 {
            if exp & 1 == 1 {
                result = result * base % p as u64;
            }
            base = base * base % p as u64;
            exp >>= 1;
        }
        result as u32
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u32; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = ((out[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
            }
        }
        trim(&mut out);
        out
    }

    pub fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let len = a.len().max(b.len());
        let mut out: Vec<u32> = (0..len)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect();
        trim(&mut out);
        out
    }

    /// Returns (quotient, remainder). `b` must be nonzero.
    pub fn divrem(a: &[u32], b: &[u32], p: u32) -> (Vec<u32>, Vec<u32>) {
        let mut rem = a.to_vec();
        trim(&mut rem);
        let db = b.len() - 1;
        let lead_inv = inv_mod_p(b[db], p);
        if rem.len() < b.len() {
            return (Vec::new(), rem);
        }
        let mut quot = vec![0u32; rem.len() - db];
        while rem.len() > db && !rem.is_empty() {
            let shift = rem.len() - 1 - db;
            let coef = (rem[rem.len() - 1] as u64 * lead_inv as u64 % p as u64) as u32;
            quot[shift] = coef;
            for (j, &bj) in b.iter().enumerate() {
                let idx = shift + j;
                rem[idx] = ((rem[idx] as u64 + p as u64 - coef as u64 * bj as u64 % p as u64) % p as u64) as u32;
            }
            trim(&mut rem);
        }
        trim(&mut quot);
        (quot, rem)
    }
}

impl FieldSpec {
    /// Builds GF(p^e). Without an explicit modulus the lexicographically smallest
    /// monic irreducible of degree `e` is used, comparing coefficients constant term first.
    pub fn new(p: u32, e: u32, modulus: Option<&[u32]>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let q = checked_order(p, e).ok_or(Error::UnsupportedOrder { p, e })?;
        let modulus = match modulus {
            Some(m) => {
                validate_modulus(p, e, m)?;
                if !is_irreducible(m, p) {
                    return Err(Error::ReducibleModulus(m.to_vec()));
                }
                m.to_vec()
            }
            None => default_modulus(p, e),
        };
        Ok(FieldSpec(Arc::new(Tables::build(p, e, q, modulus))))
    }

    /// GF(p) with modulus `x`.
    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1, None)
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.0.p
    }

    #[inline]
    pub fn e(&self) -> u32 {
        self.0.e
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn element(&self, value: u32) -> Result<FieldElement> {
        if value < self.0.q {
            Ok(FieldElement(value))
        } else {
            Err(Error::ElementOutOfRange { value, q: self.0.q })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.0.q).map(FieldElement)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> {
        (1..self.0.q).map(FieldElement)
    }

    pub fn check_level(&self, ell: u32) -> Result<()> {
        if ell < self.0.e {
            Ok(())
        } else {
            Err(Error::InvalidLevel { ell, max: self.0.e - 1 })
        }
    }

    /// Coefficients of the representative polynomial, constant term first, length e.
    pub fn digits(&self, a: FieldElement) -> Vec<u32> {
        let mut v = a.0;
        (0..self.0.e)
            .map(|_| {
                let d = v % self.0.p;
                v /= self.0.p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> FieldElement {
        let v = digits.iter().rev().fold(0u32, |acc, &d| acc * self.0.p + d);
        FieldElement(v)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let t = &*self.0;
        if t.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if t.e == 1 {
            let s = a.0 + b.0;
            return FieldElement(if s >= t.p { s - t.p } else { s });
        }
        if a.0 == 0 {
            return b;
        }
        if b.0 == 0 {
            return a;
        }
        // a + b = a (1 + b/a)
        let la = t.log[a.0 as usize];
        let lb = t.log[b.0 as usize];
        let n = t.q - 1;
        let d = if lb >= la { lb - la } else { lb + n - la };
        let z = t.zech[d as usize];
        if z == NONE {
            FieldElement(0)
        } else {
            FieldElement(t.exp[(la + z) as usize])
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let t = &*self.0;
        if t.p == 2 || a.0 == 0 {
            return a;
        }
        if t.e == 1 {
            return FieldElement(t.p - a.0);
        }
        // -1 = g^((q-1)/2) for odd q
        let l = t.log[a.0 as usize] + (t.q - 1) / 2;
        FieldElement(t.exp[l as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement(0);
        }
        let t = &*self.0;
        FieldElement(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        let t = &*self.0;
        let l = t.log[a.0 as usize];
        Ok(FieldElement(t.exp[((t.q - 1 - l) % (t.q - 1)) as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, exp: u64) -> FieldElement {
        if exp == 0 {
            return FieldElement::ONE;
        }
        if a.0 == 0 {
            return FieldElement::ZERO;
        }
        let t = &*self.0;
        let n = (t.q - 1) as u64;
        let l = (t.log[a.0 as usize] as u64 * (exp % n)) % n;
        FieldElement(t.exp[l as usize])
    }

    /// sigma^ell(a) = a^(p^ell), by `ell mod e` applications of the p-th power map.
    pub fn frobenius(&self, a: FieldElement, ell: u32) -> FieldElement {
        let t = &*self.0;
        let mut x = a.0;
        for _ in 0..(ell % t.e) {
            x = t.frob[x as usize];
        }
        FieldElement(x)
    }

    /// Membership in the subfield GF(p^m), i.e. `a^(p^m) = a`.
    pub fn in_subfield(&self, a: FieldElement, m: u32) -> bool {
        let t = &*self.0;
        let mut x = a.0;
        for _ in 0..m {
            x = t.frob[x as usize];
        }
        x == a.0
    }

    /// The ell-Galois form `sum_i x_i * y_i^(p^ell)`.
    pub fn galois_inner(&self, x: &[FieldElement], y: &[FieldElement], ell: u32) -> Result<FieldElement> {
        self.check_level(ell)?;
        if x.len() != y.len() {
            return Err(Error::DimensionMismatch(format!(
                "vectors of length {} and {}",
                x.len(),
                y.len()
            )));
        }
        Ok(x.iter().zip(y).fold(FieldElement::ZERO, |acc, (&a, &b)| {
            self.add(acc, self.mul(a, self.frobenius(b, ell)))
        }))
    }

    /// Plain dot product `sum_i x_i y_i`. Panics on length mismatch.
    pub fn dot(&self, x: &[FieldElement], y: &[FieldElement]) -> FieldElement {
        assert_eq!(x.len(), y.len(), "dot product of unequal lengths");
        x.iter()
            .zip(y)
            .fold(FieldElement::ZERO, |acc, (&a, &b)| self.add(acc, self.mul(a, b)))
    }

    /// Reference addition: coefficientwise mod p.
    pub fn add_poly(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.0.p;
        let d: Vec<u32> = self
            .digits(a)
            .iter()
            .zip(self.digits(b))
            .map(|(x, y)| (x + y) % p)
            .collect();
        self.from_digits(&d)
    }

    /// Reference multiplication: polynomial product reduced modulo the modulus.
    pub fn mul_poly(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.0.mul_poly(a.0, b.0).into()
    }

    /// Reference inversion by the extended Euclidean algorithm in GF(p)[x].
    pub fn inv_poly(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        let p = self.0.p;
        let mut a_poly = self.digits(a);
        poly::trim(&mut a_poly);
        // Invariant: s_i * a = r_i (mod modulus)
        let (mut r0, mut r1) = (self.0.modulus.clone(), a_poly);
        let (mut s0, mut s1): (Vec<u32>, Vec<u32>) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (quot, rem) = poly::divrem(&r0, &r1, p);
            let s2 = poly::sub(&s0, &poly::mul(&quot, &s1, p), p);
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is a nonzero constant since the modulus is irreducible.
        let c = poly::inv_mod_p(r0[0], p);
        let mut out: Vec<u32> = s0.iter().map(|&x| (x as u64 * c as u64 % p as u64) as u32).collect();
        let (_, rem) = poly::divrem(&out, &self.0.modulus, p);
        out = rem;
        out.resize(self.0.e as usize, 0);
        Ok(self.from_digits(&out))
    }
}

impl From<u32> for FieldElement {
    fn from(v: u32) -> Self {
        FieldElement(v)
    }
}

impl Tables {
    fn build(p: u32, e: u32, q: u32, modulus: Vec<u32>) -> Tables {
        let mut t = Tables {
            p,
            e,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
            zech: Vec::new(),
            frob: Vec::new(),
        };
        let n = (q - 1) as usize;
        let generator = (1..q)
            .find(|&g| t.multiplicative_order(g) == n)
            .expect("GF(q)* is cyclic");
        let mut exp = Vec::with_capacity(2 * n);
        let mut x = 1u32;
        for _ in 0..n {
            exp.push(x);
            x = t.mul_poly(x, generator);
        }
        for i in 0..n {
            exp.push(exp[i]);
        }
        let mut log = vec![0u32; q as usize];
        for (i, &v) in exp.iter().take(n).enumerate() {
            log[v as usize] = i as u32;
        }
        t.exp = exp;
        t.log = log;
        let one_plus = |v: u32| -> u32 {
            // 1 + v, coefficientwise
            if p == 2 {
                v ^ 1
            } else {
                let low = v % p;
                v - low + (low + 1) % p
            }
        };
        t.zech = (0..n)
            .map(|i| {
                let s = one_plus(t.exp[i]);
                if s == 0 {
                    NONE
                } else {
                    t.log[s as usize]
                }
            })
            .collect();
        t.frob = (0..q)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    t.exp[((t.log[a as usize] as u64 * p as u64) % n as u64) as usize]
                }
            })
            .collect();
        t
    }

    fn multiplicative_order(&self, g: u32) -> usize {
        let mut x = g;
        let mut order = 1usize;
        while x != 1 {
            x = self.mul_poly(x, g);
            order += 1;
            if order > self.q as usize {
                return 0;
            }
        }
        order
    }

    fn mul_poly(&self, a: u32, b: u32) -> u32 {
        let p = self.p;
        let to_digits = |mut v: u32| -> Vec<u32> {
            (0..self.e)
                .map(|_| {
                    let d = v % p;
                    v /= p;
                    d
                })
                .collect()
        };
        let prod = poly::mul(&to_digits(a), &to_digits(b), p);
        let (_, rem) = poly::divrem(&prod, &self.modulus, p);
        rem.iter().rev().fold(0u32, |acc, &d| acc * p + d)
    }
}

fn checked_order(p: u32, e: u32) -> Option<u32> {
    if e == 0 {
        return None;
    }
    let mut q: u64 = 1;
    for _ in 0..e {
        q *= p as u64;
        if q > MAX_ORDER as u64 {
            return None;
        }
    }
    Some(q as u32)
}

fn validate_modulus(p: u32, e: u32, m: &[u32]) -> Result<()> {
    let bad = |detail: &str| Error::BadModulus {
        expected: e,
        p,
        detail: detail.to_string(),
    };
    if m.len() != e as usize + 1 {
        return Err(bad(&format!("expected {} coefficients, got {}", e + 1, m.len())));
    }
    if m.iter().any(|&c| c >= p) {
        return Err(bad("coefficient out of range"));
    }
    if m[e as usize] != 1 {
        return Err(bad("leading coefficient is not 1"));
    }
    Ok(())
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
pub fn is_irreducible(m: &[u32], p: u32) -> bool {
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut divisor: Vec<u32> = Vec::with_capacity(d + 1);
            let mut v = idx;
            for _ in 0..d {
                divisor.push((v % p as u64) as u32);
                v /= p as u64;
            }
            divisor.push(1);
            let (_, rem) = poly::divrem(m, &divisor, p);
            if rem.is_empty() {
                return false;
            }
        }
    }
    true
}

/// Smallest monic irreducible of degree `e`, comparing `(c0, c1, ..., c_{e-1})` lexicographically.
pub fn default_modulus(p: u32, e: u32) -> Vec<u32> {
    let count = (p as u64).pow(e);
    for idx in 0..count {
        // c0 is the most significant digit of idx.
        let mut m = vec![0u32; e as usize + 1];
        let mut v = idx;
        for i in (0..e as usize).rev() {
            m[i] = (v % p as u64) as u32;
            v /= p as u64;
        }
        m[e as usize] = 1;
        if is_irreducible(&m, p) {
            return m;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f8() -> FieldSpec {
        FieldSpec::new(2, 3, Some(&[1, 1, 0, 1])).unwrap()
    }

    #[test]
    fn construction_examples() {
        let f = f8();
        assert_eq!(f.q(), 8);
        let f3 = FieldSpec::new(3, 1, None).unwrap();
        assert_eq!(f3.modulus(), &[0, 1]);
        let f4 = FieldSpec::new(2, 2, Some(&[1, 1, 1])).unwrap();
        assert_eq!(f4.q(), 4);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(FieldSpec::new(4, 1, None).unwrap_err().code(), "E_NOT_PRIME");
        assert_eq!(FieldSpec::new(2, 17, None).unwrap_err().code(), "E_UNSUPPORTED_ORDER");
        assert_eq!(FieldSpec::new(2, 0, None).unwrap_err().code(), "E_UNSUPPORTED_ORDER");
        // x^2 + 1 = (x + 1)^2 over GF(2)
        assert_eq!(
            FieldSpec::new(2, 2, Some(&[1, 0, 1])).unwrap_err().code(),
            "E_REDUCIBLE_MODULUS"
        );
        assert_eq!(
            FieldSpec::new(2, 2, Some(&[1, 1, 0])).unwrap_err().code(),
            "E_BAD_MODULUS"
        );
        assert_eq!(FieldSpec::new(2, 2, Some(&[1, 1])).unwrap_err().code(), "E_BAD_MODULUS");
        assert_eq!(
            FieldSpec::new(3, 2, Some(&[1, 3, 1])).unwrap_err().code(),
            "E_BAD_MODULUS"
        );
    }

    #[test]
    fn default_moduli() {
        assert_eq!(default_modulus(2, 2), vec![1, 1, 1]);
        // x^3 + 1 has root 1, next is x^3 + x^2 + 1
        assert_eq!(default_modulus(2, 3), vec![1, 0, 1, 1]);
        // x^2 + 1 is irreducible over GF(3)
        assert_eq!(default_modulus(3, 2), vec![1, 0, 1]);
        assert_eq!(default_modulus(5, 1), vec![0, 1]);
    }

    #[test]
    fn arithmetic_examples() {
        let f = f8();
        assert_eq!(f.mul(2.into(), 2.into()), FieldElement(4));
        assert_eq!(f.mul(4.into(), 2.into()), FieldElement(3));
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(f3.add(2.into(), 2.into()), FieldElement(1));
        assert_eq!(f.inv(FieldElement::ZERO), Err(Error::ZeroInverse));
    }

    #[test]
    fn frobenius_examples() {
        let f = f8();
        assert_eq!(f.frobenius(2.into(), 1), FieldElement(4));
        assert_eq!(f.frobenius(5.into(), 1), FieldElement(7));
        for ell in 0..3 {
            assert_eq!(f.frobenius(FieldElement::ONE, ell), FieldElement::ONE);
        }
    }

    #[test]
    fn galois_inner_examples() {
        let f = f8();
        let x: Vec<FieldElement> = [1, 1, 3, 3].map(FieldElement).to_vec();
        let y: Vec<FieldElement> = [0, 5, 1, 0].map(FieldElement).to_vec();
        assert_eq!(f.galois_inner(&x, &y, 1).unwrap(), FieldElement(4));
        let zero = vec![FieldElement::ZERO; 4];
        assert_eq!(f.galois_inner(&zero, &y, 2).unwrap(), FieldElement::ZERO);
        let f3 = FieldSpec::prime(3).unwrap();
        let v: Vec<FieldElement> = [2, 2, 2, 2, 1, 1, 1, 1].map(FieldElement).to_vec();
        assert_eq!(f3.galois_inner(&v, &v, 0).unwrap(), FieldElement(2));
        assert!(f.galois_inner(&x, &y[..3], 0).is_err());
        assert!(f.galois_inner(&x, &y, 3).is_err());
    }

    // Table-driven arithmetic must agree with the polynomial reference, exhaustively.
    #[test]
    fn tables_match_polynomial_semantics() {
        for (p, e) in [
            (2, 1),
            (2, 2),
            (2, 3),
            (2, 4),
            (3, 1),
            (3, 2),
            (5, 2),
            (7, 1),
            (3, 3),
            (2, 6),
        ] {
            let f = FieldSpec::new(p, e, None).unwrap();
            for a in f.elements() {
                if !a.is_zero() {
                    assert_eq!(f.inv(a).unwrap(), f.inv_poly(a).unwrap(), "inv {a} in {f}");
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
                }
                assert_eq!(f.add(a, f.neg(a)), FieldElement::ZERO);
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul_poly(a, b), "mul {a} {b} in {f}");
                    assert_eq!(f.add(a, b), f.add_poly(a, b), "add {a} {b} in {f}");
                }
            }
        }
    }

    #[test]
    fn frobenius_is_an_automorphism_of_order_e() {
        for (p, e) in [(2, 2), (2, 3), (2, 4), (2, 6), (3, 2), (3, 3), (5, 2), (7, 2)] {
            let f = FieldSpec::new(p, e, None).unwrap();
            for a in f.elements() {
                assert_eq!(f.frobenius(a, e), a);
                assert_eq!(f.frobenius(a, 1), f.pow(a, p as u64));
                for b in f.elements() {
                    for ell in 0..e {
                        assert_eq!(
                            f.frobenius(f.add(a, b), ell),
                            f.add(f.frobenius(a, ell), f.frobenius(b, ell))
                        );
                        assert_eq!(
                            f.frobenius(f.mul(a, b), ell),
                            f.mul(f.frobenius(a, ell), f.frobenius(b, ell))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn subfield_membership() {
        let f16 = FieldSpec::new(2, 4, None).unwrap();
        assert_eq!(f16.elements().filter(|&a| f16.in_subfield(a, 1)).count(), 2);
        assert_eq!(f16.elements().filter(|&a| f16.in_subfield(a, 2)).count(), 4);
    }

    #[test]
    fn largest_field_builds() {
        let f = FieldSpec::new(2, 16, None).unwrap();
        let a = FieldElement(12345);
        assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
        assert_eq!(f.mul(a, FieldElement(777)), f.mul_poly(a, FieldElement(777)));
    }
}
