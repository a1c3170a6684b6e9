//! Betti ranks, weights and Frobenius permutation data of `Res_n`, and the
//! trace-formula reconstruction of its point count.
//!
//! `H^{2i}` is nonzero exactly for `i = 0` and for `0 < i < n` with `(n - i) | n`.
//! Writing `a = n - i`, it is a permutation module on
//! `O_a = {1 <= m <= n : gcd(m, n) = a}` of rank `phi(n/a)`, pure of weight
//! `i`, with Frobenius acting by `m -> q m mod n` and scaling by `q^i`.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::algebra::integers::{divisors, gcd, totient};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomRow {
    /// Cohomological degree `2i`.
    pub degree: u64,
    /// The divisor `a = n - i`.
    pub divisor: u64,
    pub orbit: Vec<u64>,
    pub rank: u64,
    pub weight: u64,
    /// The row is of Tate type for `q` iff `q = 1 mod tate_modulus`.
    pub tate_modulus: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomTable {
    pub n: u64,
    /// Ordered by increasing degree.
    pub rows: Vec<CohomRow>,
}

impl CohomTable {
    /// Rank of `H^degree`; zero in odd degrees and above `2n - 2`.
    pub fn betti(&self, degree: u64) -> u64 {
        self.rows
            .iter()
            .find(|r| r.degree == degree)
            .map_or(0, |r| r.rank)
    }

    pub fn total_rank(&self) -> u64 {
        self.rows.iter().map(|r| r.rank).sum()
    }
}

/// `{1 <= m <= n : gcd(m, n) = a}`, ascending.
pub fn orbit_set(n: u64, a: u64) -> Vec<u64> {
    if a == 0 || !n.is_multiple_of(a) {
        return Vec::new();
    }
    let k = n / a;
    (1..=k).filter(|&j| gcd(j, k) == 1).map(|j| j * a).collect()
}

pub fn betti_table(n: u64) -> Result<CohomTable> {
    if n == 0 {
        return Err(Error::Shape("degree must be at least 1".into()));
    }
    // Divisors in descending order give increasing i = n - a.
    let rows = divisors(n)
        .into_iter()
        .rev()
        .map(|a| {
            let i = n - a;
            CohomRow {
                degree: 2 * i,
                divisor: a,
                orbit: orbit_set(n, a),
                rank: totient(n / a),
                weight: i,
                tate_modulus: n / a,
            }
        })
        .collect();
    Ok(CohomTable { n, rows })
}

/// Multiplication by `q` on `O_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobPermutation {
    pub n: u64,
    pub divisor: u64,
    pub q: u64,
    pub elements: Vec<u64>,
    /// `images[k]` is the image of `elements[k]`.
    pub images: Vec<u64>,
    pub fixed_count: u64,
    /// Cycle lengths, ascending.
    pub cycle_type: Vec<u64>,
}

impl FrobPermutation {
    pub fn is_identity(&self) -> bool {
        self.fixed_count == self.elements.len() as u64
    }

    /// Trace of Frobenius on `H^{2(n-a)}`: `q^(n-a)` times the fixed points.
    pub fn trace(&self) -> BigUint {
        BigUint::from(self.q).pow((self.n - self.divisor) as u32) * self.fixed_count
    }
}

fn check_coprime(n: u64, q: u64) -> Result<()> {
    if q < 2 || gcd(q, n) != 1 {
        return Err(Error::NotCoprimeToDegree { q, n });
    }
    Ok(())
}

pub fn frobenius_action(n: u64, a: u64, q: u64) -> Result<FrobPermutation> {
    if n == 0 || a == 0 || !n.is_multiple_of(a) {
        return Err(Error::NotADivisor { a, n });
    }
    check_coprime(n, q)?;
    let elements = orbit_set(n, a);
    let qm = q % n;
    let images: Vec<u64> = elements
        .iter()
        .map(|&m| match (qm * m) % n {
            0 => n,
            r => r,
        })
        .collect();
    let fixed_count = elements.iter().zip(&images).filter(|(m, i)| m == i).count() as u64;
    let mut seen = vec![false; elements.len()];
    let mut cycle_type = Vec::new();
    for start in 0..elements.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            len += 1;
            k = elements.binary_search(&images[k]).expect("O_a is stable under q");
        }
        cycle_type.push(len);
    }
    cycle_type.sort_unstable();
    Ok(FrobPermutation {
        n,
        divisor: a,
        q,
        elements,
        images,
        fixed_count,
        cycle_type,
    })
}

/// Whether `H^{2i}` is of Tate type for `q`, i.e. `q = 1 mod n/(n-i)`.
pub fn is_tate(n: u64, i: u64, q: u64) -> bool {
    i < n && n.is_multiple_of(n - i) && q % (n / (n - i)) == 1 % (n / (n - i))
}

/// `sum_i q^((2n-1) - i) * fixed(O_{n-i})` over the nonzero rows.
pub fn lefschetz_count(n: u64, q: u64) -> Result<BigUint> {
    check_coprime(n, q)?;
    let table = betti_table(n)?;
    let mut total = BigUint::from(0u8);
    for row in &table.rows {
        let fixed = frobenius_action(n, row.divisor, q)?.fixed_count;
        if fixed > 0 {
            total += BigUint::from(q).pow((2 * n - 1 - row.weight) as u32) * fixed;
        }
    }
    Ok(total)
}

/// Degree of the `m`-isotypic part: 0 for `m = 0`, otherwise `2(n - gcd(m, n))`.
pub fn isotypic_degree(n: u64, m: u64) -> u64 {
    if m == 0 {
        0
    } else {
        2 * (n - gcd(m, n))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "index")]
pub enum IsotypicLabel {
    /// A single character `m` of `Z/n`.
    Character(u64),
    /// The Frobenius-stable block `O_a`, for `q` not `1 mod n`.
    Block(u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsotypicEntry {
    pub label: IsotypicLabel,
    pub degree: u64,
    pub rank: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsotypicTable {
    pub n: u64,
    pub q: u64,
    /// True when `q = 1 mod n`, so every character is Frobenius-stable.
    pub per_character: bool,
    pub entries: Vec<IsotypicEntry>,
}

/// The decomposition under `Z/n`: one entry per character `m` in `0..n` when
/// `q = 1 mod n`, otherwise the invariant part plus one block per `O_a`.
pub fn isotypic_table(n: u64, q: u64) -> Result<IsotypicTable> {
    check_coprime(n, q)?;
    let per_character = q % n == 1 % n;
    let mut entries = vec![IsotypicEntry {
        label: IsotypicLabel::Character(0),
        degree: 0,
        rank: 1,
    }];
    if per_character {
        entries.extend((1..n).map(|m| IsotypicEntry {
            label: IsotypicLabel::Character(m),
            degree: isotypic_degree(n, m),
            rank: 1,
        }));
    } else {
        entries.extend(divisors(n).into_iter().rev().filter(|&a| a < n).map(|a| IsotypicEntry {
            label: IsotypicLabel::Block(a),
            degree: 2 * (n - a),
            rank: totient(n / a),
        }));
    }
    Ok(IsotypicTable {
        n,
        q,
        per_character,
        entries,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiRowRecord {
    pub degree: u64,
    pub a: u64,
    pub rank: u64,
    pub weight: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace_contribution: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tate: Option<bool>,
}

/// JSON form of a Betti table, with Frobenius data when `q` is given.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiReport {
    pub n: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    pub rows: Vec<BettiRowRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lefschetz: Option<String>,
}

/// `trace_contribution` is the row's term `q^((2n-1) - i) * fixed` of [`lefschetz_count`].
pub fn betti_report(n: u64, q: Option<u64>) -> Result<BettiReport> {
    let table = betti_table(n)?;
    if let Some(q) = q {
        check_coprime(n, q)?;
    }
    let rows = table
        .rows
        .iter()
        .map(|row| {
            let mut rec = BettiRowRecord {
                degree: row.degree,
                a: row.divisor,
                rank: row.rank,
                weight: row.weight,
                fixed: None,
                trace_contribution: None,
                tate: None,
            };
            if let Some(q) = q {
                let fixed = frobenius_action(n, row.divisor, q)?.fixed_count;
                let term = BigUint::from(q).pow((2 * n - 1 - row.weight) as u32) * fixed;
                rec.fixed = Some(fixed);
                rec.trace_contribution = Some(term.to_string());
                rec.tate = Some(is_tate(n, row.weight, q));
            }
            Ok(rec)
        })
        .collect::<Result<Vec<_>>>()?;
    let lefschetz = q.map(|q| lefschetz_count(n, q)).transpose()?.map(|c| c.to_string());
    Ok(BettiReport { n, q, rows, lefschetz })
}
