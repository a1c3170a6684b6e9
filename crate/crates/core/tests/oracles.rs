//! Checks against oracles that share no code with the library: determinants
//! and root products mod p written out here, and direct enumeration.

use std::collections::HashSet;

use num_bigint::BigUint;

use reslab::algebra::poly::{enumerate_below, enumerate_monic};
use reslab::calculus::{recompose, Decomposition, Part};
use reslab::count::{
    count_convolution_form, count_divisor_form, count_mn, count_value_x, count_xn, structured_count,
    structured_count_enumerated, Compositions,
};
use reslab::resultant::{resultant, Method};
use reslab::{Fq, GaloisField, PointedMap, Poly, PrimePower};

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn det_mod(mut m: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = m.len();
    let mut det = 1u64;
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| m[r][col] != 0) else {
            return 0;
        };
        if pivot != col {
            m.swap(pivot, col);
            det = (p - det) % p;
        }
        det = det * m[col][col] % p;
        let inv = pow_mod(m[col][col], p - 2, p);
        let pivot_row = m[col].clone();
        for row in m.iter_mut().skip(col + 1) {
            let factor = row[col] * inv % p;
            for (x, &y) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = (*x + p * p - factor * y % p) % p;
            }
        }
    }
    det
}

/// `lc(g)^deg f * prod_{g(b) = 0} f(b)` over F_p, via the classical Sylvester
/// determinant of `(g, f)` with coefficients listed from the top.
/// Coefficients are ascending and trimmed; both inputs nonzero.
fn oracle_resultant(f: &[u64], g: &[u64], p: u64) -> u64 {
    let df = f.len() - 1;
    let dg = g.len() - 1;
    let size = df + dg;
    let mut m = vec![vec![0u64; size]; size];
    for row in 0..df {
        for (i, &c) in g.iter().rev().enumerate() {
            m[row][row + i] = c;
        }
    }
    for row in 0..dg {
        for (i, &c) in f.iter().rev().enumerate() {
            m[df + row][row + i] = c;
        }
    }
    det_mod(m, p)
}

fn ints(poly: &Poly, f: &GaloisField) -> Vec<u64> {
    assert_eq!(f.degree(), 1, "integer oracle needs a prime field");
    poly.coeffs().iter().map(|&c| c.encoding() as u64).collect()
}

fn oracle_count(n: usize, p: u64, keep: impl Fn(u64, &[u64]) -> bool) -> u64 {
    let f = GaloisField::new(p, 1).unwrap();
    let polys: Vec<Vec<u64>> = enumerate_monic(n, &f).unwrap().map(|x| ints(&x, &f)).collect();
    let mut count = 0;
    for psi in &polys {
        for phi in &polys {
            let r = oracle_resultant(phi, psi, p);
            count += keep(r, psi) as u64;
        }
    }
    count
}

#[test]
fn determinant_oracle_matches_library() {
    for p in [2u64, 3, 5, 7] {
        let f = GaloisField::new(p, 1).unwrap();
        let polys: Vec<Poly> = enumerate_below(4, &f).unwrap().filter(|x| !x.is_zero()).collect();
        for a in &polys {
            for b in &polys {
                let expected = oracle_resultant(&ints(a, &f), &ints(b, &f), p);
                for method in [Method::Sylvester, Method::Euclid] {
                    let got = resultant(a, b, method, &f).unwrap();
                    assert_eq!(got.encoding() as u64, expected, "{a:?} {b:?} over F_{p}");
                }
            }
        }
    }
}

#[test]
fn root_product_oracle() {
    // psi splits over F_p with known roots, so the defining product is direct.
    let p = 11u64;
    let f = GaloisField::new(p, 1).unwrap();
    for roots in [[1u64, 2, 3], [0, 5, 5], [4, 7, 10]] {
        let mut psi = Poly::one();
        for &r in &roots {
            let lin = Poly::from_coeffs(vec![f.from_int(-(r as i64)), Fq::ONE]);
            psi = psi.mul(&lin, &f);
        }
        for phi in enumerate_below(3, &f).unwrap().filter(|x| !x.is_zero()) {
            let c = ints(&phi, &f);
            let expected = roots.iter().fold(1u64, |acc, &r| {
                let v = c.iter().rev().fold(0u64, |s, &k| (s * r + k) % p);
                acc * v % p
            });
            let got = resultant(&phi, &psi, Method::Euclid, &f).unwrap();
            assert_eq!(got.encoding() as u64, expected);
        }
    }
}

#[test]
fn point_counts_from_oracle() {
    let pp = |q| PrimePower::new(q).unwrap();
    assert_eq!(oracle_count(1, 5, |r, _| r == 1), 5);
    assert_eq!(oracle_count(2, 2, |r, _| r == 1), 8);
    assert_eq!(oracle_count(2, 3, |r, _| r == 1), 36);
    assert_eq!(oracle_count(2, 3, |r, _| r == 2), 18);
    assert_eq!(oracle_count(2, 3, |r, _| r != 0), 54);
    assert_eq!(oracle_count(2, 3, |r, psi| r == 1 && psi[1] == 0), 12);
    assert_eq!(oracle_count(3, 5, |r, _| r == 1), 3125);
    assert_eq!(oracle_count(3, 7, |r, _| r == 1), 17_493);
    assert_eq!(oracle_count(3, 7, |r, psi| r == 1 && psi[2] == 0), 2499);

    assert_eq!(count_convolution_form(2, pp(2)), BigUint::from(8u8));
    assert_eq!(count_divisor_form(3, pp(5)), BigUint::from(3125u16));
    assert_eq!(structured_count(3, pp(7)), BigUint::from(17_493u16));
    assert_eq!(count_mn(2, pp(3)), BigUint::from(54u8));
    assert_eq!(count_xn(2, pp(3)).unwrap(), BigUint::from(12u8));
    assert_eq!(count_xn(3, pp(7)).unwrap(), BigUint::from(2499u16));
    let f3 = GaloisField::new(3, 1).unwrap();
    assert_eq!(count_value_x(2, &f3, f3.from_int(2)).unwrap(), BigUint::from(18u8));
}

#[test]
fn value_fibres_from_oracle() {
    for p in [3u64, 5, 7] {
        let f = GaloisField::new(p, 1).unwrap();
        for n in 1..=2 {
            for x in 1..p {
                let brute = oracle_count(n, p, |r, _| r == x);
                let formula = count_value_x(n as u64, &f, f.element(x).unwrap()).unwrap();
                assert_eq!(formula, BigUint::from(brute), "n={n} p={p} x={x}");
            }
        }
    }
}

#[test]
fn decompositions_biject_onto_reduced_maps() {
    for q in [2u64, 3, 4] {
        let f = GaloisField::of_order(q).unwrap();
        let units: Vec<Fq> = f.units().collect();
        for n in 1..=3usize {
            let mut seen = HashSet::new();
            for parts in Compositions::new(n) {
                let mut partial: Vec<Vec<Part>> = vec![vec![]];
                for &k in &parts {
                    let mut next = Vec::new();
                    for prefix in &partial {
                        for poly in enumerate_monic(k, &f).unwrap() {
                            for &unit in &units {
                                let mut v = prefix.clone();
                                v.push(Part { poly: poly.clone(), unit });
                                next.push(v);
                            }
                        }
                    }
                    partial = next;
                }
                for parts in partial {
                    let map = recompose(&Decomposition { parts }, &f).unwrap();
                    assert_eq!(map.degree(), n);
                    assert!(map.is_reduced(&f));
                    assert!(seen.insert(map), "two decompositions give one map");
                }
            }
            let reduced = enumerate_monic(n, &f)
                .unwrap()
                .flat_map(|a| {
                    let f = &f;
                    enumerate_below(n, f)
                        .unwrap()
                        .map(move |b| PointedMap::new(a.clone(), b).unwrap())
                        .filter(|m| m.is_reduced(f))
                        .collect::<Vec<_>>()
                })
                .count();
            assert_eq!(seen.len(), reduced);
            assert_eq!(BigUint::from(reduced), count_mn(n as u64, PrimePower::new(q).unwrap()));
        }
    }
}

#[test]
fn enumerated_structured_form_beyond_unit_range() {
    for q in [PrimePower::new(49).unwrap(), PrimePower::new(64).unwrap(), PrimePower::new(121).unwrap()] {
        for n in [16, 18, 20] {
            assert_eq!(structured_count_enumerated(n, q).unwrap(), count_convolution_form(n as u64, q));
        }
    }
}
