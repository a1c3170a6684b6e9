//! GF(p^d) with a canonical modulus and table-driven arithmetic.
//!
//! Elements are stored as their integer encoding `c_0 + c_1 p + ... + c_{d-1} p^{d-1}`
//! where `c_i` are the coefficients of the residue class modulo the defining
//! polynomial. The encoding fixes the enumeration order of elements, so two
//! constructions of the same field always agree element by element.

use std::fmt;

use num_bigint::BigUint;

use super::integers::{factorize, gcd, is_prime};
use super::poly::Poly;
use crate::error::{Error, Result};

/// Largest field order that can be constructed.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

/// Fields up to this order get full addition and multiplication tables.
const TABLE_LIMIT: u32 = 256;
const TABLE_STRIDE: usize = 256;
const NO_LOG: u32 = u32::MAX;

/// An element of some [`GaloisField`], identified by its integer encoding.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Fq(u16);

impl Fq {
    pub const ZERO: Fq = Fq(0);
    pub const ONE: Fq = Fq(1);

    pub const fn encoding(self) -> u32 {
        self.0 as u32
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Unvalidated constructor for enumeration loops that already know `v < q`.
    #[inline]
    pub(crate) const fn from_raw(v: u16) -> Fq {
        Fq(v)
    }
}

#[derive(Clone, Debug)]
enum Arith {
    /// Full tables with a fixed stride of 256.
    Tables { add: Box<[u16]>, mul: Box<[u16]> },
    /// Prime field too large for tables: reduce machine products directly.
    Prime,
    /// Extension field too large for tables: Zech logarithms for addition.
    Zech { zech: Box<[u32]> },
}

/// The four operations an inner loop needs, so kernels can be monomorphised
/// over the arithmetic backend instead of dispatching per operation.
pub(crate) trait FieldOps {
    fn add(&self, a: Fq, b: Fq) -> Fq;
    fn mul(&self, a: Fq, b: Fq) -> Fq;
    fn neg(&self, a: Fq) -> Fq;
    fn inv_nonzero(&self, a: Fq) -> Fq;

    #[inline]
    fn pow_small(&self, base: Fq, e: usize) -> Fq {
        (0..e).fold(Fq::ONE, |acc, _| self.mul(acc, base))
    }
}

const TABLE_SIZE: usize = TABLE_STRIDE * TABLE_STRIDE;

/// Table arithmetic for fields of order at most 256. Every encoding fits in a
/// byte, so indices stay in range without bounds checks.
#[derive(Clone, Copy)]
pub(crate) struct TableOps<'a> {
    add: &'a [u16; TABLE_SIZE],
    mul: &'a [u16; TABLE_SIZE],
    neg: &'a [u16],
    inv: &'a [u16],
}

impl TableOps<'_> {
    #[inline(always)]
    fn idx(a: Fq, b: Fq) -> usize {
        ((a.0 as u8 as usize) << 8) | b.0 as u8 as usize
    }
}

impl FieldOps for TableOps<'_> {
    #[inline(always)]
    fn add(&self, a: Fq, b: Fq) -> Fq {
        Fq(self.add[Self::idx(a, b)])
    }

    #[inline(always)]
    fn mul(&self, a: Fq, b: Fq) -> Fq {
        Fq(self.mul[Self::idx(a, b)])
    }

    #[inline(always)]
    fn neg(&self, a: Fq) -> Fq {
        Fq(self.neg[a.0 as usize])
    }

    #[inline(always)]
    fn inv_nonzero(&self, a: Fq) -> Fq {
        Fq(self.inv[a.0 as usize])
    }
}

impl FieldOps for GaloisField {
    #[inline]
    fn add(&self, a: Fq, b: Fq) -> Fq {
        GaloisField::add(self, a, b)
    }

    #[inline]
    fn mul(&self, a: Fq, b: Fq) -> Fq {
        GaloisField::mul(self, a, b)
    }

    #[inline]
    fn neg(&self, a: Fq) -> Fq {
        GaloisField::neg(self, a)
    }

    #[inline]
    fn inv_nonzero(&self, a: Fq) -> Fq {
        GaloisField::inv_nonzero(self, a)
    }
}

/// The finite field GF(p^d).
#[derive(Clone)]
pub struct GaloisField {
    p: u32,
    d: u32,
    q: u32,
    /// Monic defining polynomial over GF(p), ascending, length d+1. Empty for d = 1.
    modulus: Vec<u32>,
    generator: Fq,
    /// `exp[k] = g^(k mod (q-1))` for `k < 2(q-1)`.
    exp: Box<[u16]>,
    log: Box<[u32]>,
    neg: Box<[u16]>,
    inv: Box<[u16]>,
    arith: Arith,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GaloisField")
            .field("p", &self.p)
            .field("d", &self.d)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.d == other.d && self.modulus == other.modulus
    }
}

impl Eq for GaloisField {}

/// Schoolbook arithmetic on encodings, used only while building the tables.
struct DigitArith {
    p: u32,
    d: usize,
    modulus: Vec<u32>,
}

impl DigitArith {
    fn digits(&self, mut x: u32) -> Vec<u32> {
        let mut out = vec![0; self.d];
        for c in out.iter_mut() {
            *c = x % self.p;
            x /= self.p;
        }
        out
    }

    fn encode(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        let (a, b) = (self.digits(a), self.digits(b));
        let sum: Vec<u32> = a.iter().zip(&b).map(|(x, y)| (x + y) % self.p).collect();
        self.encode(&sum)
    }

    fn neg(&self, a: u32) -> u32 {
        let a: Vec<u32> = self.digits(a).iter().map(|&x| (self.p - x) % self.p).collect();
        self.encode(&a)
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        if self.d == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        let p = self.p as u64;
        let (a, b) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * self.d - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for i in (self.d..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            for j in 0..self.d {
                let sub = c * self.modulus[j] as u64 % p;
                prod[i - self.d + j] = (prod[i - self.d + j] + p - sub) % p;
            }
            prod[i] = 0;
        }
        let low: Vec<u32> = prod[..self.d].iter().map(|&c| c as u32).collect();
        self.encode(&low)
    }

    fn pow(&self, mut base: u32, mut e: u64) -> u32 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

impl GaloisField {
    /// Builds GF(p^d) with its canonical modulus.
    pub fn new(p: u64, d: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::ZeroExtensionDegree);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let order = BigUint::from(p).pow(d);
        if order > BigUint::from(MAX_FIELD_ORDER) {
            return Err(Error::FieldTooLarge {
                order: order.to_string(),
                bound: MAX_FIELD_ORDER,
            });
        }
        let p = p as u32;
        let modulus = if d == 1 {
            Vec::new()
        } else {
            let base = GaloisField::new(p as u64, 1)?;
            canonical_modulus(&base, d as usize)
        };
        Ok(Self::build(p, d, modulus))
    }

    /// Builds the field of order `q`, factoring `q` as a prime power.
    pub fn of_order(q: u64) -> Result<Self> {
        let pp = super::integers::PrimePower::new(q)?;
        GaloisField::new(pp.p(), pp.d())
    }

    fn build(p: u32, d: u32, modulus: Vec<u32>) -> Self {
        let q = p.pow(d);
        let slow = DigitArith {
            p,
            d: d as usize,
            modulus: modulus.clone(),
        };
        let group_order = (q - 1) as u64;
        let prime_factors: Vec<u64> = factorize(group_order).into_iter().map(|(l, _)| l).collect();
        let generator = (1..q)
            .find(|&g| prime_factors.iter().all(|&l| slow.pow(g, group_order / l) != 1))
            .expect("the unit group of a finite field is cyclic");

        let m = (q - 1) as usize;
        let mut exp = vec![0u16; 2 * m];
        let mut log = vec![NO_LOG; q as usize];
        let mut x = 1u32;
        for k in 0..m {
            exp[k] = x as u16;
            exp[k + m] = x as u16;
            log[x as usize] = k as u32;
            x = slow.mul(x, generator);
        }
        let neg: Box<[u16]> = (0..q).map(|a| slow.neg(a) as u16).collect();

        let arith = if q <= TABLE_LIMIT {
            let mut add = vec![0u16; TABLE_STRIDE * TABLE_STRIDE];
            let mut mul = vec![0u16; TABLE_STRIDE * TABLE_STRIDE];
            for a in 0..q {
                for b in 0..q {
                    let idx = (a as usize) * TABLE_STRIDE + b as usize;
                    add[idx] = slow.add(a, b) as u16;
                    mul[idx] = if a == 0 || b == 0 {
                        0
                    } else {
                        exp[(log[a as usize] + log[b as usize]) as usize]
                    };
                }
            }
            Arith::Tables {
                add: add.into(),
                mul: mul.into(),
            }
        } else if d == 1 {
            Arith::Prime
        } else {
            let zech = (0..m)
                .map(|k| log[slow.add(1, exp[k] as u32) as usize])
                .collect();
            Arith::Zech { zech }
        };

        GaloisField {
            p,
            d,
            q,
            modulus,
            generator: Fq(generator as u16),
            inv: (0..q as usize)
                .map(|a| if a == 0 { 0 } else { exp[((m as u32 - log[a]) % m as u32) as usize] })
                .collect(),
            exp: exp.into(),
            log: log.into(),
            neg,
            arith,
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Defining polynomial over GF(p), ascending and monic; empty for prime fields.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The primitive element of smallest encoding.
    pub fn generator(&self) -> Fq {
        self.generator
    }

    /// Validates that `value` encodes an element of this field.
    pub fn element(&self, value: u64) -> Result<Fq> {
        if value < self.q as u64 {
            Ok(Fq(value as u16))
        } else {
            Err(Error::ElementOutOfRange {
                value,
                order: self.q,
            })
        }
    }

    /// Rejects elements whose encoding cannot belong to this field.
    pub fn check(&self, x: Fq) -> Result<Fq> {
        self.element(x.encoding() as u64)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, k: i64) -> Fq {
        Fq(k.rem_euclid(self.p as i64) as u16)
    }

    pub fn from_digits(&self, digits: &[u32]) -> Result<Fq> {
        if digits.len() > self.d as usize || digits.iter().any(|&c| c >= self.p) {
            return Err(Error::Parse {
                literal: format!("{digits:?}"),
                reason: format!("expected at most {} digits below {}", self.d, self.p),
            });
        }
        let enc = digits.iter().rev().fold(0u32, |acc, &c| acc * self.p + c);
        Ok(Fq(enc as u16))
    }

    /// Base-p digits of `x`, least significant first, always `d` of them.
    pub fn digits(&self, x: Fq) -> Vec<u32> {
        let mut v = x.encoding();
        (0..self.d)
            .map(|_| {
                let c = v % self.p;
                v /= self.p;
                c
            })
            .collect()
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Fq> + '_ {
        (0..self.q).map(|v| Fq(v as u16))
    }

    pub fn units(&self) -> impl Iterator<Item = Fq> + '_ {
        (1..self.q).map(|v| Fq(v as u16))
    }

    #[inline]
    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        match &self.arith {
            Arith::Tables { add, .. } => Fq(add[(a.0 as usize) * TABLE_STRIDE + b.0 as usize]),
            Arith::Prime => {
                let s = a.0 as u32 + b.0 as u32;
                Fq(if s >= self.p { s - self.p } else { s } as u16)
            }
            Arith::Zech { zech } => {
                if a.0 == 0 {
                    return b;
                }
                if b.0 == 0 {
                    return a;
                }
                let m = self.q - 1;
                let la = self.log[a.0 as usize];
                let lb = self.log[b.0 as usize];
                let z = zech[((lb + m - la) % m) as usize];
                if z == NO_LOG {
                    Fq::ZERO
                } else {
                    Fq(self.exp[(la + z) as usize])
                }
            }
        }
    }

    #[inline]
    pub fn neg(&self, a: Fq) -> Fq {
        Fq(self.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        match &self.arith {
            Arith::Tables { mul, .. } => Fq(mul[(a.0 as usize) * TABLE_STRIDE + b.0 as usize]),
            Arith::Prime => Fq(((a.0 as u64 * b.0 as u64) % self.p as u64) as u16),
            Arith::Zech { .. } => {
                if a.0 == 0 || b.0 == 0 {
                    Fq::ZERO
                } else {
                    Fq(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
                }
            }
        }
    }

    pub fn inv(&self, a: Fq) -> Result<Fq> {
        if a.is_zero() {
            Err(Error::ZeroInverse)
        } else {
            Ok(self.inv_nonzero(a))
        }
    }

    #[inline]
    pub(crate) fn inv_nonzero(&self, a: Fq) -> Fq {
        debug_assert!(!a.is_zero());
        Fq(self.inv[a.0 as usize])
    }

    /// Borrowed lookup tables for hot loops, when the field is small enough to have them.
    pub(crate) fn table_ops(&self) -> Option<TableOps<'_>> {
        match &self.arith {
            Arith::Tables { add, mul } => Some(TableOps {
                add: add.as_ref().try_into().ok()?,
                mul: mul.as_ref().try_into().ok()?,
                neg: &self.neg,
                inv: &self.inv,
            }),
            _ => None,
        }
    }

    pub fn div(&self, a: Fq, b: Fq) -> Result<Fq> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Square-and-multiply; `0^0 = 1`.
    pub fn pow(&self, mut base: Fq, mut e: u64) -> Fq {
        let mut acc = Fq::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn pow_big(&self, base: Fq, e: &BigUint) -> Fq {
        let mut acc = Fq::ONE;
        for i in (0..e.bits()).rev() {
            acc = self.mul(acc, acc);
            if e.bit(i) {
                acc = self.mul(acc, base);
            }
        }
        acc
    }

    /// Smallest `t >= 1` with `x^t = 1`.
    pub fn multiplicative_order(&self, x: Fq) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::ZeroOrder);
        }
        let mut t = (self.q - 1) as u64;
        for (l, _) in factorize(t) {
            while t.is_multiple_of(l) && self.pow(x, t / l) == Fq::ONE {
                t /= l;
            }
        }
        Ok(t)
    }

    /// The n-th roots of unity in this field, ascending by encoding.
    pub fn roots_of_unity(&self, n: u64) -> Vec<Fq> {
        let m = (self.q - 1) as u64;
        let g = gcd(n, m);
        let step = m / g;
        let mut roots: Vec<Fq> = (0..g).map(|k| Fq(self.exp[(k * step) as usize])).collect();
        roots.sort();
        roots
    }

    /// The inverse Frobenius `x -> x^(1/p) = x^(q/p)`.
    pub fn frobenius_inverse(&self, x: Fq) -> Fq {
        self.pow(x, (self.q / self.p) as u64)
    }

    /// Parses an element literal: base-p digits joined by `:`, least significant first.
    pub fn parse_element(&self, literal: &str) -> Result<Fq> {
        let bad = |reason: String| Error::Parse {
            literal: literal.to_string(),
            reason,
        };
        let digits = literal
            .trim()
            .split(':')
            .map(|s| s.trim().parse::<u32>().map_err(|_| bad(format!("`{s}` is not a digit"))))
            .collect::<Result<Vec<_>>>()?;
        if digits.len() > self.d as usize {
            return Err(bad(format!("more than {} digits", self.d)));
        }
        if let Some(c) = digits.iter().find(|&&c| c >= self.p) {
            return Err(bad(format!("digit {c} is not below {}", self.p)));
        }
        self.from_digits(&digits)
    }

    pub fn format_element(&self, x: Fq) -> String {
        self.digits(x)
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(":")
    }
}

/// The irreducible monic polynomial of degree `d` whose lower coefficients
/// have the smallest base-p encoding.
fn canonical_modulus(base: &GaloisField, d: usize) -> Vec<u32> {
    let p = base.order() as u64;
    let count = p.pow(d as u32);
    (0..count)
        .map(|enc| {
            let mut coeffs = Vec::with_capacity(d + 1);
            let mut v = enc;
            for _ in 0..d {
                coeffs.push(base.from_int((v % p) as i64));
                v /= p;
            }
            coeffs.push(Fq::ONE);
            Poly::from_coeffs(coeffs)
        })
        .find(|f| f.is_irreducible(base))
        .map(|f| f.coeffs().iter().map(|c| c.encoding()).collect())
        .expect("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_moduli() {
        assert_eq!(GaloisField::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(GaloisField::new(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(GaloisField::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert!(GaloisField::new(3, 1).unwrap().modulus().is_empty());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(GaloisField::new(4, 1), Err(Error::NotPrime(4)));
        assert_eq!(GaloisField::new(3, 0), Err(Error::ZeroExtensionDegree));
        assert!(matches!(GaloisField::new(2, 17), Err(Error::FieldTooLarge { .. })));
        assert!(matches!(GaloisField::new(65537, 1), Err(Error::FieldTooLarge { .. })));
    }

    #[test]
    fn small_examples() {
        let f4 = GaloisField::new(2, 2).unwrap();
        let w = f4.parse_element("0:1").unwrap();
        let w1 = f4.parse_element("1:1").unwrap();
        assert_eq!(f4.mul(w, w1), Fq::ONE);
        assert_eq!(f4.multiplicative_order(w).unwrap(), 3);
        assert_eq!(f4.roots_of_unity(3), vec![Fq(1), w, w1]);

        let f5 = GaloisField::new(5, 1).unwrap();
        assert_eq!(f5.inv(f5.from_int(2)).unwrap(), f5.from_int(3));
        assert_eq!(f5.multiplicative_order(f5.from_int(2)).unwrap(), 4);
        assert_eq!(f5.roots_of_unity(3), vec![Fq::ONE]);
        assert_eq!(f5.inv(Fq::ZERO), Err(Error::ZeroInverse));
        assert_eq!(f5.multiplicative_order(Fq::ZERO), Err(Error::ZeroOrder));

        let f3 = GaloisField::new(3, 1).unwrap();
        assert_eq!(f3.roots_of_unity(2), vec![Fq(1), Fq(2)]);
    }

    #[test]
    fn literals() {
        let f9 = GaloisField::new(3, 2).unwrap();
        let x = f9.parse_element("2:1").unwrap();
        assert_eq!(x.encoding(), 5);
        assert_eq!(f9.format_element(x), "2:1");
        assert_eq!(f9.format_element(f9.parse_element("2").unwrap()), "2:0");
        assert!(f9.parse_element("3").is_err());
        assert!(f9.parse_element("1:1:1").is_err());
        assert!(f9.parse_element("a").is_err());
        assert!(f9.element(9).is_err());
    }

    /// Field axioms on every element of every supported arithmetic path.
    #[test]
    fn axioms_exhaustive() {
        // 4, 9 use tables; 257 is a large prime field; 343 = 7^3 uses Zech logarithms.
        for (p, d) in [(2, 2), (3, 2), (2, 4), (257, 1), (7, 3)] {
            let f = GaloisField::new(p, d).unwrap();
            let q = f.order() as u64;
            let els: Vec<Fq> = f.elements().collect();
            let sample: Vec<Fq> = els.iter().copied().step_by(((q / 40).max(1)) as usize).collect();
            for &a in &sample {
                assert_eq!(f.add(a, f.neg(a)), Fq::ZERO);
                assert_eq!(f.mul(a, Fq::ONE), a);
                assert_eq!(f.pow(a, q), a);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Fq::ONE);
                    assert_eq!(f.pow(f.frobenius_inverse(a), p), a);
                }
                for &b in &sample {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in sample.iter().take(8) {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.add(a, f.add(b, c)), f.add(f.add(a, b), c));
                    }
                }
            }
        }
    }

    #[test]
    fn order_census() {
        for (p, d) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4)] {
            let f = GaloisField::new(p, d).unwrap();
            let m = (f.order() - 1) as u64;
            let mut census = std::collections::BTreeMap::new();
            for x in f.units() {
                let t = f.multiplicative_order(x).unwrap();
                assert_eq!(m % t, 0);
                assert_eq!(f.pow(x, t), Fq::ONE);
                *census.entry(t).or_insert(0u64) += 1;
            }
            assert_eq!(census.values().sum::<u64>(), m);
            for (t, count) in census {
                assert_eq!(count, super::super::integers::totient(t));
            }
        }
    }

    #[test]
    fn big_exponents() {
        let f = GaloisField::new(7, 1).unwrap();
        let e = BigUint::from(10u32).pow(30) + 3u32;
        let x = f.from_int(3);
        // 3 has order 6 and 10^30 + 3 is 1 mod 6.
        assert_eq!(f.pow_big(x, &e), x);
    }

    #[test]
    fn determinism() {
        let a = GaloisField::new(3, 3).unwrap();
        let b = std::thread::spawn(|| GaloisField::new(3, 3).unwrap()).join().unwrap();
        assert_eq!(a, b);
        for x in a.elements() {
            for y in a.elements() {
                assert_eq!(a.mul(x, y), b.mul(x, y));
            }
        }
    }
}
