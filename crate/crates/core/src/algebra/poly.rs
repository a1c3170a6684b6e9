//! Dense univariate polynomials over a [`GaloisField`].
//!
//! Coefficients are stored in ascending order and kept normalised: the last
//! stored coefficient is nonzero, and the zero polynomial has no coefficients.
//! Its degree is reported as `None`, never as `-1`.

use super::field::{Fq, GaloisField};
use crate::error::{Error, Result};

/// Default cap on the number of items an enumeration may produce.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 100_000_000;

#[derive(Clone, Default, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Poly {
    coeffs: Vec<Fq>,
}

/// Output of [`Poly::extended_gcd`]: `a*u + b*v = gcd`, with `gcd` monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedGcd {
    pub gcd: Poly,
    pub u: Poly,
    pub v: Poly,
}

impl Poly {
    pub fn from_coeffs(mut coeffs: Vec<Fq>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![Fq::ONE] }
    }

    pub fn constant(c: Fq) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `c * z^k`.
    pub fn monomial(c: Fq, k: usize) -> Self {
        let mut coeffs = vec![Fq::ZERO; k + 1];
        coeffs[k] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[Fq] {
        &self.coeffs
    }

    /// Coefficient of `z^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Fq {
        self.coeffs.get(i).copied().unwrap_or(Fq::ZERO)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<Fq> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == Some(Fq::ONE)
    }

    pub fn add(&self, other: &Poly, f: &GaloisField) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Poly, f: &GaloisField) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn neg(&self, f: &GaloisField) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn scale(&self, c: Fq, f: &GaloisField) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|&x| f.mul(x, c)).collect())
    }

    pub fn mul(&self, other: &Poly, f: &GaloisField) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Fq::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn pow(&self, mut k: u64, f: &GaloisField) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base, f);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base, f);
            }
        }
        acc
    }

    pub fn eval(&self, x: Fq, f: &GaloisField) -> Fq {
        self.coeffs
            .iter()
            .rev()
            .fold(Fq::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Divides by the leading coefficient; the zero polynomial is returned unchanged.
    pub fn monic(&self, f: &GaloisField) -> Poly {
        match self.leading_coeff() {
            Some(lc) => self.scale(f.inv_nonzero(lc), f),
            None => Poly::zero(),
        }
    }

    /// The unique `(quotient, remainder)` with `self = quotient * divisor + remainder`
    /// and `deg remainder < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly, f: &GaloisField) -> Result<(Poly, Poly)> {
        let db = divisor.degree().ok_or(Error::ZeroDivisor)?;
        let Some(da) = self.degree() else {
            return Ok((Poly::zero(), Poly::zero()));
        };
        if da < db {
            return Ok((Poly::zero(), self.clone()));
        }
        let inv_lc = f.inv_nonzero(divisor.coeffs[db]);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Fq::ZERO; da - db + 1];
        for i in (db..=da).rev() {
            let c = f.mul(rem[i], inv_lc);
            if c.is_zero() {
                continue;
            }
            quot[i - db] = c;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, b));
            }
        }
        rem.truncate(db);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    pub fn rem(&self, divisor: &Poly, f: &GaloisField) -> Result<Poly> {
        Ok(self.div_rem(divisor, f)?.1)
    }

    /// Bézout cofactors with a monic gcd. `(a, 0)` yields `(monic(a), lc(a)^-1, 0)`.
    pub fn extended_gcd(a: &Poly, b: &Poly, f: &GaloisField) -> Result<ExtendedGcd> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (quot, rem) = r0.div_rem(&r1, f)?;
            let s2 = s0.sub(&quot.mul(&s1, f), f);
            let t2 = t0.sub(&quot.mul(&t1, f), f);
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv_lc = f.inv_nonzero(r0.leading_coeff().expect("nonzero by the loop condition"));
        Ok(ExtendedGcd {
            gcd: r0.scale(inv_lc, f),
            u: s0.scale(inv_lc, f),
            v: t0.scale(inv_lc, f),
        })
    }

    pub fn gcd(a: &Poly, b: &Poly, f: &GaloisField) -> Result<Poly> {
        Ok(Poly::extended_gcd(a, b, f)?.gcd)
    }

    pub fn is_coprime(a: &Poly, b: &Poly, f: &GaloisField) -> bool {
        Poly::gcd(a, b, f).is_ok_and(|g| g.degree() == Some(0))
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &Poly, f: &GaloisField) -> Result<Poly> {
        let mut acc = Poly::one().rem(m, f)?;
        let mut base = self.rem(m, f)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, f).rem(m, f)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, f).rem(m, f)?;
            }
        }
        Ok(acc)
    }

    /// Ben-Or: a polynomial of degree `n >= 1` over GF(q) is irreducible iff
    /// `gcd(self, z^(q^i) - z) = 1` for every `1 <= i <= n/2`.
    pub fn is_irreducible(&self, f: &GaloisField) -> bool {
        let Some(n) = self.degree() else {
            return false;
        };
        if n == 0 {
            return false;
        }
        let z = Poly::monomial(Fq::ONE, 1);
        let mut h = z.rem(self, f).expect("nonzero modulus");
        for _ in 0..n / 2 {
            h = h.pow_mod(f.order() as u64, self, f).expect("nonzero modulus");
            let g = Poly::gcd(self, &h.sub(&z, f), f).expect("self is nonzero");
            if g.degree() != Some(0) {
                return false;
            }
        }
        true
    }

    /// Parses a polynomial literal: comma-separated element literals, ascending degree.
    pub fn parse(literal: &str, f: &GaloisField) -> Result<Poly> {
        if literal.trim().is_empty() {
            return Err(Error::Parse {
                literal: literal.to_string(),
                reason: "empty polynomial literal".into(),
            });
        }
        let coeffs = literal
            .split(',')
            .map(|s| f.parse_element(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }

    /// Inverse of [`Poly::parse`]; the zero polynomial prints as the zero element.
    pub fn format(&self, f: &GaloisField) -> String {
        if self.is_zero() {
            return f.format_element(Fq::ZERO);
        }
        self.coeffs
            .iter()
            .map(|&c| f.format_element(c))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// `q^n` if it fits under `bound`.
pub(crate) fn checked_count(q: u32, n: usize, bound: u64) -> Result<u64> {
    let total = u32::try_from(n)
        .ok()
        .and_then(|n| (q as u64).checked_pow(n))
        .filter(|&t| t <= bound);
    total.ok_or_else(|| Error::BudgetExceeded {
        required: format!("{q}^{n}"),
        budget: bound,
    })
}

/// Writes the coefficients of index `idx` into `out`: digit `i` of `idx` in base q.
#[inline]
pub(crate) fn fill_from_index(out: &mut [Fq], mut idx: u64, q: u32) {
    for c in out.iter_mut() {
        *c = Fq::from_raw((idx % q as u64) as u16);
        idx /= q as u64;
    }
}

/// Increments a base-q odometer; returns `false` after wrapping to all zeros.
#[inline]
pub(crate) fn advance(digits: &mut [Fq], q: u32) -> bool {
    for c in digits.iter_mut() {
        let next = c.encoding() + 1;
        if next < q {
            *c = Fq::from_raw(next as u16);
            return true;
        }
        *c = Fq::ZERO;
    }
    false
}

/// The monic polynomial of degree `n` with index `idx` in enumeration order:
/// coefficient `c_i` is digit `i` of `idx` written in base q.
pub fn monic_from_index(n: usize, idx: u64, f: &GaloisField) -> Poly {
    let mut coeffs = vec![Fq::ZERO; n + 1];
    fill_from_index(&mut coeffs[..n], idx, f.order());
    coeffs[n] = Fq::ONE;
    Poly { coeffs }
}

/// Stream of all monic polynomials of degree `n`, starting at `z^n`, with the
/// constant coefficient varying fastest.
#[derive(Clone, Debug)]
pub struct MonicPolys {
    n: usize,
    q: u32,
    next: u64,
    total: u64,
}

impl Iterator for MonicPolys {
    type Item = Poly;

    fn next(&mut self) -> Option<Poly> {
        if self.next >= self.total {
            return None;
        }
        let mut coeffs = vec![Fq::ZERO; self.n + 1];
        fill_from_index(&mut coeffs[..self.n], self.next, self.q);
        coeffs[self.n] = Fq::ONE;
        self.next += 1;
        Some(Poly { coeffs })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for MonicPolys {}

pub fn enumerate_monic(n: usize, f: &GaloisField) -> Result<MonicPolys> {
    enumerate_monic_bounded(n, f, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_monic_bounded(n: usize, f: &GaloisField, bound: u64) -> Result<MonicPolys> {
    let total = checked_count(f.order(), n, bound)?;
    Ok(MonicPolys {
        n,
        q: f.order(),
        next: 0,
        total,
    })
}

/// All polynomials of degree `< n` (the zero polynomial first), in index order.
pub fn enumerate_below(n: usize, f: &GaloisField) -> Result<impl Iterator<Item = Poly> + '_> {
    let total = checked_count(f.order(), n, DEFAULT_ENUMERATION_BOUND)?;
    Ok((0..total).map(move |idx| {
        let mut coeffs = vec![Fq::ZERO; n];
        fill_from_index(&mut coeffs, idx, f.order());
        Poly::from_coeffs(coeffs)
    }))
}
