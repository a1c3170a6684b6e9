//! The two models of degree-n rational maps used throughout the crate.
//!
//! A [`MonicPair`] `(phi, psi)` has both entries monic of degree `n`. A
//! [`PointedMap`] `A/B` has `A` monic of degree `n` and `deg B < n`. The map
//! `(phi, psi) -> (A, B) = (psi, phi - psi)` is a bijection between them that
//! preserves the resultant value.

use super::field::GaloisField;
use super::poly::Poly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonicPair {
    phi: Poly,
    psi: Poly,
}

impl MonicPair {
    pub fn new(phi: Poly, psi: Poly) -> Result<Self> {
        if !phi.is_monic() || !psi.is_monic() {
            return Err(Error::Shape("both entries of a monic pair must be monic".into()));
        }
        match (phi.degree(), psi.degree()) {
            (Some(a), Some(b)) if a == b && a >= 1 => Ok(MonicPair { phi, psi }),
            _ => Err(Error::Shape(format!(
                "monic pair needs equal degrees >= 1, got {:?} and {:?}",
                phi.degree(),
                psi.degree()
            ))),
        }
    }

    pub fn phi(&self) -> &Poly {
        &self.phi
    }

    pub fn psi(&self) -> &Poly {
        &self.psi
    }

    pub fn degree(&self) -> usize {
        self.psi.degree().expect("validated on construction")
    }

    pub fn to_pointed(&self, f: &GaloisField) -> PointedMap {
        PointedMap {
            num: self.psi.clone(),
            den: self.phi.sub(&self.psi, f),
        }
    }
}

/// `num / den` with `num` monic of degree `n >= 1` and `deg den < n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointedMap {
    num: Poly,
    den: Poly,
}

impl PointedMap {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if !num.is_monic() || num.degree() == Some(0) {
            return Err(Error::Shape("numerator must be monic of degree >= 1".into()));
        }
        if den.degree() >= num.degree() {
            return Err(Error::Shape(
                "denominator degree must be below the numerator degree".into(),
            ));
        }
        Ok(PointedMap { num, den })
    }

    /// Like [`PointedMap::new`], additionally requiring `gcd(num, den) = 1`.
    pub fn reduced(num: Poly, den: Poly, f: &GaloisField) -> Result<Self> {
        let map = PointedMap::new(num, den)?;
        if map.is_reduced(f) {
            Ok(map)
        } else {
            Err(Error::NotCoprime)
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn degree(&self) -> usize {
        self.num.degree().expect("validated on construction")
    }

    pub fn is_reduced(&self, f: &GaloisField) -> bool {
        Poly::is_coprime(&self.num, &self.den, f)
    }

    pub fn to_monic_pair(&self, f: &GaloisField) -> MonicPair {
        MonicPair {
            phi: self.num.add(&self.den, f),
            psi: self.num.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::{enumerate_below, enumerate_monic};
    use std::collections::HashSet;

    #[test]
    fn shape_validation() {
        let f3 = GaloisField::new(3, 1).unwrap();
        let p = |s| Poly::parse(s, &f3).unwrap();
        assert!(MonicPair::new(p("1,1"), p("0,1")).is_ok());
        assert!(MonicPair::new(p("1,1"), p("0,0,1")).is_err());
        assert!(MonicPair::new(p("1,2"), p("0,1")).is_err());
        assert!(MonicPair::new(p("1"), p("1")).is_err());
        assert!(PointedMap::new(p("0,1"), p("1")).is_ok());
        assert!(PointedMap::new(p("0,1"), p("0,1")).is_err());
        assert!(PointedMap::new(p("1"), Poly::zero()).is_err());
        assert_eq!(
            PointedMap::reduced(p("0,0,1"), p("0,1"), &f3),
            Err(Error::NotCoprime)
        );
    }

    #[test]
    fn conversion_example() {
        let f3 = GaloisField::new(3, 1).unwrap();
        let p = |s| Poly::parse(s, &f3).unwrap();
        let pair = MonicPair::new(p("1,1"), p("0,1")).unwrap();
        let map = pair.to_pointed(&f3);
        assert_eq!(map.num(), &p("0,1"));
        assert_eq!(map.den(), &p("1"));
        assert_eq!(map.to_monic_pair(&f3), pair);
    }

    #[test]
    fn conversion_is_a_bijection() {
        for (pr, d, n) in [(2, 1, 3), (3, 1, 2), (2, 2, 2)] {
            let f = GaloisField::new(pr, d).unwrap();
            let mut images = HashSet::new();
            for psi in enumerate_monic(n, &f).unwrap() {
                for phi in enumerate_monic(n, &f).unwrap() {
                    let pair = MonicPair::new(phi, psi.clone()).unwrap();
                    let map = pair.to_pointed(&f);
                    assert_eq!(map.to_monic_pair(&f), pair);
                    assert!(PointedMap::new(map.num().clone(), map.den().clone()).is_ok());
                    images.insert(map);
                }
            }
            let q = f.order() as usize;
            assert_eq!(images.len(), q.pow(2 * n as u32));
            let pointed = enumerate_monic(n, &f).unwrap().count() * enumerate_below(n, &f).unwrap().count();
            assert_eq!(images.len(), pointed);
        }
    }
}
