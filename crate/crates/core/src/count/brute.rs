//! Exhaustive enumeration oracle.
//!
//! The outer polynomial (`psi`, or `A` for pointed maps) is distributed across
//! rayon workers; each worker walks every inner polynomial with an odometer and
//! reuses one set of buffers, so the hot loop never allocates.

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::field::{Fq, GaloisField};
use crate::algebra::poly::{advance, fill_from_index};
use crate::error::{Error, Result};
use crate::resultant::EuclidScratch;

/// Enumeration budget used when the caller does not pick one.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variety {
    /// Monic pairs with `Res(phi, psi) = 1`.
    Res,
    /// Monic pairs with nonzero resultant.
    Mn,
    /// `psi` monic with vanishing `z^(n-1)` coefficient, `deg phi <= n - 1`, `Res(phi, psi) = 1`.
    Xn,
    /// Pointed maps `A/B` with a prescribed resultant.
    Fn,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    One,
    Value(Fq),
    AllNonzero,
}

#[derive(Clone, Copy, Debug)]
pub struct CountQuery<'a> {
    pub n: usize,
    pub field: &'a GaloisField,
    pub variety: Variety,
    pub target: Target,
}

impl<'a> CountQuery<'a> {
    /// The query with the natural target of `variety`: nonzero for `Mn`, one otherwise.
    pub fn new(variety: Variety, n: usize, field: &'a GaloisField) -> Result<Self> {
        if n == 0 {
            return Err(Error::Shape("degree must be at least 1".into()));
        }
        let target = match variety {
            Variety::Mn => Target::AllNonzero,
            _ => Target::One,
        };
        Ok(CountQuery {
            n,
            field,
            variety,
            target,
        })
    }

    pub fn with_target(mut self, target: Target) -> Result<Self> {
        if let Target::Value(x) = target {
            if self.field.check(x)?.is_zero() {
                return Err(Error::ZeroTarget);
            }
        }
        self.target = target;
        Ok(self)
    }

    /// Number of candidate points the enumeration visits.
    pub fn enumeration_size(&self) -> BigUint {
        let q = BigUint::from(self.field.order());
        let e = match self.variety {
            Variety::Xn => 2 * self.n - 1,
            _ => 2 * self.n,
        };
        q.pow(e as u32)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BruteForceConfig {
    /// Maximum enumeration size.
    pub budget: u64,
    /// Worker threads; `None` uses the global rayon pool.
    pub workers: Option<usize>,
}

impl Default for BruteForceConfig {
    fn default() -> Self {
        BruteForceConfig {
            budget: DEFAULT_BUDGET,
            workers: None,
        }
    }
}

pub fn brute_force_count(query: &CountQuery, config: &BruteForceConfig) -> Result<BigUint> {
    let size = query.enumeration_size();
    if size > BigUint::from(config.budget) {
        return Err(Error::BudgetExceeded {
            required: size.to_string(),
            budget: config.budget,
        });
    }
    let run = || count_parallel(query);
    let total = match config.workers {
        None => run(),
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .map_err(|e| Error::ThreadPool(e.to_string()))?
            .install(run),
    };
    Ok(BigUint::from(total))
}

fn count_parallel(query: &CountQuery) -> u64 {
    let n = query.n;
    let q = query.field.order();
    let outer_digits = match query.variety {
        Variety::Xn => n - 1,
        _ => n,
    };
    let outer = (q as u64).pow(outer_digits as u32);
    (0..outer)
        .into_par_iter()
        .map_init(
            || Worker::new(query),
            |w, idx| w.count_outer(idx),
        )
        .sum()
}

struct Worker<'a> {
    query: &'a CountQuery<'a>,
    outer: Vec<Fq>,
    inner: Vec<Fq>,
    scratch: EuclidScratch,
}

impl<'a> Worker<'a> {
    fn new(query: &'a CountQuery<'a>) -> Self {
        let n = query.n;
        let mut outer = vec![Fq::ZERO; n + 1];
        outer[n] = Fq::ONE;
        Worker {
            query,
            outer,
            inner: vec![Fq::ZERO; n + 1],
            scratch: EuclidScratch::default(),
        }
    }

    #[inline]
    fn hit(&self, v: Fq) -> bool {
        match self.query.target {
            Target::One => v == Fq::ONE,
            Target::Value(x) => v == x,
            Target::AllNonzero => !v.is_zero(),
        }
    }

    /// Counts the inner loop for one outer (monic, denominator-side) polynomial.
    fn count_outer(&mut self, idx: u64) -> u64 {
        let n = self.query.n;
        let field = self.query.field;
        let q = field.order();
        match self.query.variety {
            Variety::Xn => {
                fill_from_index(&mut self.outer[..n - 1], idx, q);
                self.outer[n - 1] = Fq::ZERO;
            }
            _ => fill_from_index(&mut self.outer[..n], idx, q),
        }
        self.inner.iter_mut().for_each(|c| *c = Fq::ZERO);
        // The inner polynomial is phi (monic) for Res and Mn, and has degree < n otherwise.
        let digits = n;
        let monic = matches!(self.query.variety, Variety::Res | Variety::Mn);
        if monic {
            self.inner[n] = Fq::ONE;
        }
        let mut count = 0u64;
        loop {
            let len = if monic {
                n + 1
            } else {
                match self.inner[..digits].iter().rposition(|c| !c.is_zero()) {
                    Some(k) => k + 1,
                    None => 0,
                }
            };
            let value = if len == 0 {
                Fq::ZERO
            } else {
                self.scratch.resultant(field, &self.inner[..len], &self.outer)
            };
            if self.hit(value) {
                count += 1;
            }
            if !advance(&mut self.inner[..digits], q) {
                break;
            }
        }
        count
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(variety: Variety, n: usize, q: u64) -> u64 {
        let f = GaloisField::of_order(q).unwrap();
        let query = CountQuery::new(variety, n, &f).unwrap();
        let c = brute_force_count(&query, &BruteForceConfig::default()).unwrap();
        u64::try_from(c).unwrap()
    }

    #[test]
    fn tiny_values() {
        assert_eq!(count(Variety::Res, 1, 2), 2);
        assert_eq!(count(Variety::Res, 2, 2), 8);
        assert_eq!(count(Variety::Res, 2, 3), 36);
        assert_eq!(count(Variety::Fn, 2, 3), 36);
        assert_eq!(count(Variety::Mn, 2, 3), 54);
        assert_eq!(count(Variety::Mn, 1, 2), 2);
        assert_eq!(count(Variety::Xn, 2, 3), 12);
        assert_eq!(count(Variety::Xn, 1, 5), 1);
    }

    #[test]
    fn value_targets_and_budget() {
        let f3 = GaloisField::new(3, 1).unwrap();
        let q = CountQuery::new(Variety::Fn, 2, &f3)
            .unwrap()
            .with_target(Target::Value(f3.from_int(2)))
            .unwrap();
        assert_eq!(brute_force_count(&q, &BruteForceConfig::default()).unwrap(), BigUint::from(18u32));
        assert!(q.with_target(Target::Value(Fq::ZERO)).is_err());
        let tight = BruteForceConfig {
            budget: 80,
            workers: Some(1),
        };
        assert!(matches!(
            brute_force_count(&q, &tight),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn thread_count_does_not_matter() {
        let f4 = GaloisField::new(2, 2).unwrap();
        let q = CountQuery::new(Variety::Res, 3, &f4).unwrap();
        let counts: Vec<BigUint> = [Some(1), Some(3), None]
            .into_iter()
            .map(|workers| {
                brute_force_count(
                    &q,
                    &BruteForceConfig {
                        budget: DEFAULT_BUDGET,
                        workers,
                    },
                )
                .unwrap()
            })
            .collect();
        assert!(counts.windows(2).all(|w| w[0] == w[1]));
    }
}
