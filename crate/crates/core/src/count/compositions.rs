use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::algebra::integers::{divisors, gcd, mobius};
use crate::error::{Error, Result};

/// Compositions of `n` in lexicographic order of their part sequences,
/// starting from `(1, 1, ..., 1)` and ending with `(n)`.
#[derive(Clone, Debug)]
pub struct Compositions {
    next: Option<Vec<usize>>,
}

impl Compositions {
    pub fn new(n: usize) -> Self {
        Compositions {
            next: (n > 0).then(|| vec![1; n]),
        }
    }
}

impl Iterator for Compositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        if current.len() > 1 {
            let mut succ = current.clone();
            let last = succ.pop().expect("at least two parts");
            *succ.last_mut().expect("at least one part") += 1;
            succ.extend(std::iter::repeat_n(1, last - 1));
            self.next = Some(succ);
        }
        Some(current)
    }
}

pub fn validate_composition(parts: &[usize]) -> Result<()> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::InvalidComposition(format!("{parts:?}")));
    }
    Ok(())
}

/// `gcd(n_1, ..., n_r)`.
pub fn composition_gcd(parts: &[usize]) -> u64 {
    parts.iter().fold(0, |g, &p| gcd(g, p as u64))
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `pi_r(n)`: compositions of `n` into `r` parts, `binom(n - 1, r - 1)`.
pub fn pi_r(n: u64, r: u64) -> BigUint {
    if n == 0 || r == 0 {
        return BigUint::from((n == 0 && r == 0) as u8);
    }
    binomial(n - 1, r - 1)
}

/// `pi_r(n, d)`: compositions of `n` into `r` parts with gcd exactly `d`.
pub fn pi_r_gcd(n: u64, r: u64, d: u64) -> Result<BigUint> {
    if d == 0 || !n.is_multiple_of(d) {
        return Err(Error::NotADivisor { a: d, n });
    }
    let m = n / d;
    let mut pos = BigUint::zero();
    let mut neg = BigUint::zero();
    for e in divisors(m) {
        match mobius(e) {
            1 => pos += pi_r(m / e, r),
            -1 => neg += pi_r(m / e, r),
            _ => {}
        }
    }
    Ok(pos - neg)
}

/// One composition together with its unit-solution count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionTally {
    pub parts: Vec<usize>,
    pub gcd: u64,
    pub count: BigUint,
}
