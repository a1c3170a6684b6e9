//! Bezout forms, the monoid sum of pointed maps and continued-fraction decomposition.
//!
//! A reduced pointed map `A/B` of degree `n` has a unique Bezout form
//! `A U + B V = 1` with `deg U <= n - 2` and `deg V <= n - 1`, giving the
//! matrix `[[A, -V], [B, U]]`. The sum of two maps multiplies these matrices.
//! Every map factors as a sum of degree-`n_i` maps `P_i / a_i` with `P_i`
//! monic and `a_i` a unit, and the resultant of the sum is
//! `epsilon(n_1, ..., n_r) * prod a_i^(n_i)`.

use serde::{Deserialize, Serialize};

use crate::algebra::field::{Fq, GaloisField};
use crate::algebra::maps::PointedMap;
use crate::algebra::poly::Poly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BezoutForm {
    pub u: Poly,
    pub v: Poly,
}

/// The Bezout matrix `[[A, -V], [B, U]]` of a reduced pointed map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BezoutMatrix {
    pub a: Poly,
    pub b: Poly,
    pub u: Poly,
    pub v: Poly,
}

pub fn bezout_normal_form(map: &PointedMap, field: &GaloisField) -> Result<BezoutForm> {
    let a = map.num();
    let b = map.den();
    let eg = Poly::extended_gcd(a, b, field)?;
    if eg.gcd != Poly::one() {
        return Err(Error::NotCoprime);
    }
    let v = eg.v.rem(a, field)?;
    let (u, r) = Poly::one().sub(&b.mul(&v, field), field).div_rem(a, field)?;
    debug_assert!(r.is_zero());
    Ok(BezoutForm { u, v })
}

impl BezoutMatrix {
    pub fn of(map: &PointedMap, field: &GaloisField) -> Result<Self> {
        let BezoutForm { u, v } = bezout_normal_form(map, field)?;
        Ok(BezoutMatrix {
            a: map.num().clone(),
            b: map.den().clone(),
            u,
            v,
        })
    }

    /// Matrix product; the result is again in normal form when both factors are.
    pub fn mul(&self, rhs: &BezoutMatrix, f: &GaloisField) -> BezoutMatrix {
        BezoutMatrix {
            a: self.a.mul(&rhs.a, f).sub(&self.v.mul(&rhs.b, f), f),
            b: self.b.mul(&rhs.a, f).add(&self.u.mul(&rhs.b, f), f),
            v: self.a.mul(&rhs.v, f).add(&self.v.mul(&rhs.u, f), f),
            u: self.u.mul(&rhs.u, f).sub(&self.b.mul(&rhs.v, f), f),
        }
    }

    /// `A U + B V`, which is 1 for a valid Bezout matrix.
    pub fn determinant(&self, f: &GaloisField) -> Poly {
        self.a.mul(&self.u, f).add(&self.b.mul(&self.v, f), f)
    }

    pub fn to_map(&self) -> Result<PointedMap> {
        PointedMap::new(self.a.clone(), self.b.clone())
    }
}

/// The monoid sum `x (+) y`: numerator `A1 A2 - V1 B2`, denominator `B1 A2 + U1 B2`.
pub fn oplus(x: &PointedMap, y: &PointedMap, field: &GaloisField) -> Result<PointedMap> {
    BezoutMatrix::of(x, field)?
        .mul(&BezoutMatrix::of(y, field)?, field)
        .to_map()
}

/// One summand `poly / unit` of a decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Part {
    pub poly: Poly,
    pub unit: Fq,
}

impl Part {
    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    pub fn to_map(&self) -> Result<PointedMap> {
        validate_part(&self.poly, self.unit)?;
        PointedMap::new(self.poly.clone(), Poly::constant(self.unit))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Decomposition {
    pub parts: Vec<Part>,
}

impl Decomposition {
    pub fn composition(&self) -> Vec<usize> {
        self.parts.iter().map(Part::degree).collect()
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().map(Part::degree).sum()
    }

    pub fn epsilon(&self) -> i8 {
        epsilon_sign(&self.composition())
    }

    pub fn recompose(&self, field: &GaloisField) -> Result<PointedMap> {
        recompose(self, field)
    }

    pub fn to_record(&self, field: &GaloisField) -> DecompositionRecord {
        DecompositionRecord {
            parts: self
                .parts
                .iter()
                .map(|p| PartRecord {
                    poly: p.poly.format(field),
                    unit: field.format_element(p.unit),
                })
                .collect(),
            epsilon: self.epsilon(),
        }
    }

    pub fn from_record(record: &DecompositionRecord, field: &GaloisField) -> Result<Self> {
        let parts = record
            .parts
            .iter()
            .map(|p| {
                let poly = Poly::parse(&p.poly, field)?;
                let unit = field.parse_element(&p.unit)?;
                validate_part(&poly, unit)?;
                Ok(Part { poly, unit })
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.is_empty() {
            return Err(Error::Shape("a decomposition needs at least one part".into()));
        }
        let d = Decomposition { parts };
        if d.epsilon() != record.epsilon {
            return Err(Error::Shape(format!(
                "epsilon {} does not match composition {:?}",
                record.epsilon,
                d.composition()
            )));
        }
        Ok(d)
    }
}

fn validate_part(poly: &Poly, unit: Fq) -> Result<()> {
    if !poly.is_monic() || poly.degree() == Some(0) {
        return Err(Error::Shape("each part needs a monic polynomial of degree >= 1".into()));
    }
    if unit.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartRecord {
    pub poly: String,
    pub unit: String,
}

/// JSON shape of a decomposition: `{"parts": [{"poly", "unit"}], "epsilon"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionRecord {
    pub parts: Vec<PartRecord>,
    pub epsilon: i8,
}

/// Splits a reduced pointed map into `P_1/a_1 (+) ... (+) P_r/a_r`.
pub fn cf_decompose(map: &PointedMap, field: &GaloisField) -> Result<Decomposition> {
    if !map.is_reduced(field) {
        return Err(Error::NotCoprime);
    }
    let mut a = map.num().clone();
    let mut b = map.den().clone();
    let mut parts = Vec::new();
    loop {
        let unit = b.leading_coeff().ok_or(Error::NotCoprime)?;
        if b.degree() == Some(0) {
            parts.push(Part { poly: a, unit });
            return Ok(Decomposition { parts });
        }
        let (p, r) = a.scale(unit, field).div_rem(&b, field)?;
        a = b.scale(field.inv_nonzero(unit), field);
        b = r.neg(field);
        parts.push(Part { poly: p, unit });
    }
}

pub fn recompose(d: &Decomposition, field: &GaloisField) -> Result<PointedMap> {
    let mut parts = d.parts.iter();
    let first = parts
        .next()
        .ok_or_else(|| Error::Shape("a decomposition needs at least one part".into()))?;
    let mut acc = BezoutMatrix::of(&first.to_map()?, field)?;
    for p in parts {
        acc = acc.mul(&BezoutMatrix::of(&p.to_map()?, field)?, field);
    }
    acc.to_map()
}

/// `(-1)^(sum_{i<j} n_i n_j)`.
pub fn epsilon_sign(composition: &[usize]) -> i8 {
    let mut prefix = 0usize;
    let mut parity = 0usize;
    for &n in composition {
        parity ^= (prefix * n) & 1;
        prefix += n;
    }
    if parity == 0 {
        1
    } else {
        -1
    }
}

/// `epsilon(n) * prod a_i^(n_i)`, the resultant of the recomposed map.
pub fn resultant_from_decomposition(d: &Decomposition, field: &GaloisField) -> Fq {
    let prod = d
        .parts
        .iter()
        .fold(Fq::ONE, |acc, p| field.mul(acc, field.pow(p.unit, p.degree() as u64)));
    if d.epsilon() < 0 {
        field.neg(prod)
    } else {
        prod
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resultant::pointed_resultant;

    fn p(f: &GaloisField, s: &str) -> Poly {
        Poly::parse(s, f).unwrap()
    }

    #[test]
    fn bezout_example() {
        let f3 = GaloisField::new(3, 1).unwrap();
        let map = PointedMap::new(p(&f3, "0,0,1"), p(&f3, "1,1")).unwrap();
        let form = bezout_normal_form(&map, &f3).unwrap();
        assert_eq!(form.u, p(&f3, "1"));
        assert_eq!(form.v, p(&f3, "1,2"));
        let not_reduced = PointedMap::new(p(&f3, "0,0,1"), p(&f3, "0,1")).unwrap();
        assert_eq!(bezout_normal_form(&not_reduced, &f3), Err(Error::NotCoprime));
    }

    #[test]
    fn oplus_example() {
        let f3 = GaloisField::new(3, 1).unwrap();
        let z = PointedMap::new(p(&f3, "0,1"), p(&f3, "1")).unwrap();
        let sum = oplus(&z, &z, &f3).unwrap();
        assert_eq!(sum.num(), &p(&f3, "2,0,1"));
        assert_eq!(sum.den(), &p(&f3, "0,1"));
    }

    #[test]
    fn decomposition_example() {
        let f3 = GaloisField::new(3, 1).unwrap();
        let map = PointedMap::new(p(&f3, "2,0,1"), p(&f3, "0,1")).unwrap();
        let d = cf_decompose(&map, &f3).unwrap();
        let z = Part { poly: p(&f3, "0,1"), unit: Fq::ONE };
        assert_eq!(d.parts, vec![z.clone(), z]);
        assert_eq!(d.epsilon(), -1);
        assert_eq!(recompose(&d, &f3).unwrap(), map);
        assert_eq!(resultant_from_decomposition(&d, &f3), pointed_resultant(&map, &f3));
        assert_eq!(resultant_from_decomposition(&d, &f3), f3.from_int(-1));
    }

    #[test]
    fn epsilon_values() {
        assert_eq!(epsilon_sign(&[1]), 1);
        assert_eq!(epsilon_sign(&[1, 1]), -1);
        assert_eq!(epsilon_sign(&[2, 1]), 1);
        assert_eq!(epsilon_sign(&[1, 1, 1]), -1);
        assert_eq!(epsilon_sign(&[1, 1, 1, 1]), 1);
        assert_eq!(epsilon_sign(&[3, 1, 1]), -1);
        assert_eq!(epsilon_sign(&[2, 2, 1]), 1);
    }

    #[test]
    fn record_round_trip() {
        let f9 = GaloisField::new(3, 2).unwrap();
        let den = p(&f9, "1:1,0:2");
        let map = crate::algebra::poly::enumerate_monic(2, &f9)
            .unwrap()
            .map(|a| PointedMap::new(a, den.clone()).unwrap())
            .find(|m| m.is_reduced(&f9))
            .unwrap();
        let d = cf_decompose(&map, &f9).unwrap();
        assert_eq!(d.composition(), vec![1, 1]);
        let rec = d.to_record(&f9);
        let json = serde_json::to_string(&rec).unwrap();
        let back: DecompositionRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(Decomposition::from_record(&back, &f9).unwrap(), d);
        let mut wrong = rec.clone();
        wrong.epsilon = -wrong.epsilon;
        assert!(Decomposition::from_record(&wrong, &f9).is_err());
    }
}
