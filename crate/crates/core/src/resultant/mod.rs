//! Resultants, the action of the n-th roots of unity, and perfect-power strata.
//!
//! Convention used everywhere in the crate:
//!
//! ```text
//! Res(f, g) = lc(g)^deg(f) * prod_{g(b) = 0} f(b)
//! ```
//!
//! which is the determinant of the Sylvester matrix with ascending coefficient
//! rows, the rows of `f` first. For a monic pair `(phi, psi)` this is the
//! product of `phi` over the roots of `psi`; in degree one it is `a_0 - b_0`.
//! For a pointed map `A/B` the resultant is `Res(B, A)`, the product of `B`
//! over the roots of `A`.

mod action;
mod sylvester;

pub use action::{mu_n_action, mu_n_orbit, nth_root_monic, y_join, y_split, YSplit};
pub use sylvester::SylvesterMatrix;

use crate::algebra::field::{FieldOps, Fq, GaloisField};
use crate::algebra::maps::{MonicPair, PointedMap};
use crate::algebra::poly::Poly;
use crate::error::{Error, Result};

/// Degree bound for either input of [`resultant`].
pub const MAX_RESULTANT_DEGREE: usize = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Gaussian elimination on the Sylvester matrix. Slow reference path.
    Sylvester,
    /// Remainder sequence with leading-coefficient corrections.
    Euclid,
}

pub fn resultant(f: &Poly, g: &Poly, method: Method, field: &GaloisField) -> Result<Fq> {
    for p in [f, g] {
        if let Some(degree) = p.degree().filter(|&d| d > MAX_RESULTANT_DEGREE) {
            return Err(Error::DegreeTooLarge {
                degree,
                bound: MAX_RESULTANT_DEGREE,
            });
        }
    }
    match (f.is_zero(), g.is_zero()) {
        (true, true) => return Err(Error::BothZero),
        // a zero input shares every root of the other one; a nonzero constant has none.
        (true, false) => return Ok(if g.degree() == Some(0) { Fq::ONE } else { Fq::ZERO }),
        (false, true) => return Ok(if f.degree() == Some(0) { Fq::ONE } else { Fq::ZERO }),
        _ => {}
    }
    Ok(match method {
        Method::Sylvester => SylvesterMatrix::new(f, g, field).determinant(field),
        Method::Euclid => EuclidScratch::default().resultant(field, f.coeffs(), g.coeffs()),
    })
}

/// `Res(phi, psi)`: the product of `phi` over the roots of `psi`.
pub fn pair_resultant(pair: &MonicPair, field: &GaloisField) -> Fq {
    EuclidScratch::default().resultant(field, pair.phi().coeffs(), pair.psi().coeffs())
}

/// `R(A, B)`: the product of `B` over the roots of `A`.
pub fn pointed_resultant(map: &PointedMap, field: &GaloisField) -> Fq {
    if map.den().is_zero() {
        return Fq::ZERO;
    }
    EuclidScratch::default().resultant(field, map.den().coeffs(), map.num().coeffs())
}

/// Reusable buffers for the Euclidean resultant, so enumeration loops do not allocate.
#[derive(Clone, Debug, Default)]
pub struct EuclidScratch {
    a: Vec<Fq>,
    b: Vec<Fq>,
}

impl EuclidScratch {
    /// `Res(f, g)` for normalised, nonzero coefficient slices.
    pub fn resultant(&mut self, field: &GaloisField, f: &[Fq], g: &[Fq]) -> Fq {
        debug_assert!(f.last().is_some_and(|c| !c.is_zero()));
        debug_assert!(g.last().is_some_and(|c| !c.is_zero()));
        self.a.clear();
        self.a.extend_from_slice(g);
        self.b.clear();
        self.b.extend_from_slice(f);
        // Res(f, g) equals the classical Res_std(g, f) = lc(g)^deg f * prod_{g=0} f.
        match field.table_ops() {
            Some(ops) => classical_in_place(&ops, &mut self.a, &mut self.b),
            None => classical_in_place(field, &mut self.a, &mut self.b),
        }
    }
}

/// Classical `Res_std(x, y) = lc(x)^deg(y) * prod_{x(a)=0} y(a)`, destroying both buffers.
fn classical_in_place<F: FieldOps>(ops: &F, x: &mut [Fq], y: &mut [Fq]) -> Fq {
    let mut x = x;
    let mut y = y;
    let mut dx = x.len() - 1;
    let mut dy = y.len() - 1;
    let mut acc = Fq::ONE;
    loop {
        if dy == 0 {
            return ops.mul(acc, ops.pow_small(y[0], dx));
        }
        if dx == 0 {
            return ops.mul(acc, ops.pow_small(x[0], dy));
        }
        if dx >= dy {
            // Res_std(x, y) = (-1)^(dx dy) lc(y)^(dx - dr) Res_std(y, x mod y)
            let Some(dr) = reduce(ops, x, dx, y, dy) else {
                return Fq::ZERO;
            };
            if (dx * dy) % 2 == 1 {
                acc = ops.neg(acc);
            }
            acc = ops.mul(acc, ops.pow_small(y[dy], dx - dr));
            std::mem::swap(&mut x, &mut y);
            dx = dy;
            dy = dr;
        } else {
            // Res_std(x, y) = lc(x)^(dy - dr) Res_std(x, y mod x)
            let Some(dr) = reduce(ops, y, dy, x, dx) else {
                return Fq::ZERO;
            };
            acc = ops.mul(acc, ops.pow_small(x[dx], dy - dr));
            dy = dr;
        }
    }
}

/// Replaces `num[..=dn]` by its remainder modulo `den[..=dd]` and returns the
/// new degree, or `None` when the remainder vanishes.
#[inline(always)]
fn reduce<F: FieldOps>(ops: &F, num: &mut [Fq], dn: usize, den: &[Fq], dd: usize) -> Option<usize> {
    let num = &mut num[..=dn];
    let den = &den[..=dd];
    let lc = den[dd];
    let monic = lc == Fq::ONE;
    let inv_lc = if monic { Fq::ONE } else { ops.inv_nonzero(lc) };
    for i in (dd..=dn).rev() {
        let c = num[i];
        if c.is_zero() {
            continue;
        }
        let minus_c = ops.neg(if monic { c } else { ops.mul(c, inv_lc) });
        let window = &mut num[i - dd..i];
        for (t, &d) in window.iter_mut().zip(&den[..dd]) {
            *t = ops.add(*t, ops.mul(minus_c, d));
        }
        num[i] = Fq::ZERO;
    }
    num[..dd].iter().rposition(|c| !c.is_zero())
}
