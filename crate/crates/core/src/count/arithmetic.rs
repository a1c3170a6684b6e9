//! Arithmetic functions on `1..=limit`, stored with index 0 unused.

use crate::algebra::integers::gcd;
use crate::error::{Error, Result};

/// Largest table any sieve here will build.
pub const MAX_SIEVE: usize = 10_000_000;

fn check_limit(limit: usize) -> Result<()> {
    if limit > MAX_SIEVE {
        return Err(Error::SieveTooLarge {
            requested: limit,
            limit: MAX_SIEVE,
        });
    }
    Ok(())
}

/// Linear sieve returning `(mobius, totient)`.
fn linear_sieve(limit: usize) -> Result<(Vec<i64>, Vec<i64>)> {
    check_limit(limit)?;
    let mut mu = vec![0i64; limit + 1];
    let mut phi = vec![0i64; limit + 1];
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    if limit >= 1 {
        mu[1] = 1;
        phi[1] = 1;
    }
    for i in 2..=limit {
        if !composite[i] {
            primes.push(i);
            mu[i] = -1;
            phi[i] = i as i64 - 1;
        }
        for &p in &primes {
            let ip = i * p;
            if ip > limit {
                break;
            }
            composite[ip] = true;
            if i % p == 0 {
                mu[ip] = 0;
                phi[ip] = phi[i] * p as i64;
                break;
            }
            mu[ip] = -mu[i];
            phi[ip] = phi[i] * (p as i64 - 1);
        }
    }
    Ok((mu, phi))
}

pub fn mobius_sieve(limit: usize) -> Result<Vec<i64>> {
    linear_sieve(limit).map(|(mu, _)| mu)
}

pub fn totient_sieve(limit: usize) -> Result<Vec<i64>> {
    linear_sieve(limit).map(|(_, phi)| phi)
}

/// `k -> gcd(k, m)` on `1..=limit`.
pub fn gcd_with(m: u64, limit: usize) -> Result<Vec<i64>> {
    check_limit(limit)?;
    Ok((0..=limit as u64)
        .map(|k| if k == 0 { 0 } else { gcd(k, m) as i64 })
        .collect())
}

/// `k -> k^0 = 1` on `1..=limit`.
pub fn one(limit: usize) -> Result<Vec<i64>> {
    check_limit(limit)?;
    let mut v = vec![1i64; limit + 1];
    v[0] = 0;
    Ok(v)
}

/// The indicator of `k = 1`, the identity for Dirichlet convolution.
pub fn unit(limit: usize) -> Result<Vec<i64>> {
    check_limit(limit)?;
    let mut v = vec![0i64; limit + 1];
    if limit >= 1 {
        v[1] = 1;
    }
    Ok(v)
}

/// `(f * g)(k) = sum_{ab = k} f(a) g(b)` on the common range.
pub fn dirichlet_convolve(f: &[i64], g: &[i64]) -> Vec<i64> {
    let limit = f.len().min(g.len()).saturating_sub(1);
    let mut out = vec![0i64; limit + 1];
    for a in 1..=limit {
        if f[a] == 0 {
            continue;
        }
        for b in 1..=limit / a {
            out[a * b] += f[a] * g[b];
        }
    }
    out
}
