//! Closed-form point counts. All results are exact big integers.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::compositions::{composition_gcd, validate_composition, CompositionTally, Compositions};
use crate::algebra::field::{Fq, GaloisField};
use crate::algebra::integers::{divisors, gcd, mobius, totient, PrimePower};
use crate::calculus::epsilon_sign;
use crate::error::{Error, Result};

/// Largest degree for which [`structured_count_enumerated`] walks every composition.
pub const MAX_ENUMERATED_DEGREE: usize = 22;

fn big_pow(q: u64, e: u64) -> BigUint {
    BigUint::from(q).pow(e as u32)
}

fn to_unsigned(x: BigInt) -> BigUint {
    debug_assert!(!x.is_negative());
    x.to_biguint().expect("counts are non-negative")
}

/// `sum_{a | n, (n/a) | q - 1} phi(n/a) q^(n - 1 + a)`.
///
/// This is `q^(2n-1) sum phi(n/a) q^(a-n)` over the divisors `a` with
/// `q = 1 mod n/a`. It equals the convolution form for every `n` and `q`.
pub fn count_divisor_form(n: u64, q: PrimePower) -> BigUint {
    let q = q.q();
    divisors(n)
        .into_iter()
        .filter(|&a| (q - 1).is_multiple_of(n / a))
        .map(|a| BigUint::from(totient(n / a)) * big_pow(q, n - 1 + a))
        .sum()
}

/// Whether `gcd(p, n) = 1`. The divisor form holds without it, but the
/// Lefschetz reconstruction needs `gcd(q, n) = 1`.
pub fn divisor_form_in_domain(n: u64, q: PrimePower) -> bool {
    gcd(q.p(), n) == 1
}

/// `q^n sum_{abc = n} mu(a) q^(b-1) g(c)` for an arbitrary weight `g`.
fn convolution_with(n: u64, q: u64, g: impl Fn(u64) -> u64) -> BigUint {
    let mut total = BigInt::zero();
    for a in divisors(n) {
        let mu = mobius(a);
        if mu == 0 {
            continue;
        }
        for b in divisors(n / a) {
            let c = n / a / b;
            let term = BigInt::from(big_pow(q, b - 1)) * g(c);
            if mu > 0 {
                total += term;
            } else {
                total -= term;
            }
        }
    }
    to_unsigned(total) * big_pow(q, n)
}

/// `q^n sum_{abc = n} mu(a) q^(b-1) gcd(c, q - 1)`.
pub fn count_convolution_form(n: u64, q: PrimePower) -> BigUint {
    let q = q.q();
    convolution_with(n, q, |c| gcd(c, q - 1))
}

/// Number of degree-`n` pointed maps whose resultant is a fixed unit of
/// multiplicative order `o`.
pub fn count_value_of_order(n: u64, q: PrimePower, o: u64) -> Result<BigUint> {
    let q = q.q();
    if o == 0 || !(q - 1).is_multiple_of(o) {
        return Err(Error::NotADivisor { a: o, n: q - 1 });
    }
    let slack = (q - 1) / o;
    Ok(convolution_with(n, q, |c| {
        let g = gcd(c, q - 1);
        if slack.is_multiple_of(g) {
            g
        } else {
            0
        }
    }))
}

/// Number of degree-`n` pointed maps `A/B` with `R(A, B) = x`.
pub fn count_value_x(n: u64, field: &GaloisField, x: Fq) -> Result<BigUint> {
    let x = field.check(x)?;
    if x.is_zero() {
        return Err(Error::ZeroTarget);
    }
    let q = PrimePower::from_parts(field.characteristic() as u64, field.degree())?;
    count_value_of_order(n, q, field.multiplicative_order(x)?)
}

/// `q^(2n) - q^(2n-1)`: monic pairs with nonzero resultant.
pub fn count_mn(n: u64, q: PrimePower) -> BigUint {
    big_pow(q.q(), 2 * n - 1) * (q.q() - 1)
}

/// `|Res_n| / q`, the count of the slice where the `z^(n-1)` coefficient of `psi` vanishes.
pub fn count_xn(n: u64, q: PrimePower) -> Result<BigUint> {
    if gcd(q.q(), n) != 1 {
        return Err(Error::NotCoprimeToDegree { q: q.q(), n });
    }
    let total = count_convolution_form(n, q);
    let (quot, rem) = total.div_rem(&BigUint::from(q.q()));
    if !rem.is_zero() {
        return Err(Error::NonIntegral {
            numerator: total.to_string(),
            denominator: q.q().to_string(),
        });
    }
    Ok(quot)
}

/// `#{(a_1..a_r) units : prod a_i^(n_i) = x}` where `x` has order `o`.
///
/// With `g = gcd(q - 1, n_1, ..., n_r)` this is `(q-1)^(r-1) g` when `x` is a
/// `g`-th power, that is when `o` divides `(q-1)/g`, and zero otherwise.
pub fn unit_solution_count_of_order(parts: &[usize], q: PrimePower, o: u64) -> Result<BigUint> {
    validate_composition(parts)?;
    let q1 = q.q() - 1;
    if o == 0 || !q1.is_multiple_of(o) {
        return Err(Error::NotADivisor { a: o, n: q1 });
    }
    let g = gcd(q1, composition_gcd(parts));
    if !(q1 / g).is_multiple_of(o) {
        return Ok(BigUint::zero());
    }
    Ok(BigUint::from(q1).pow(parts.len() as u32 - 1) * g)
}

pub fn unit_solution_count(parts: &[usize], field: &GaloisField, x: Fq) -> Result<BigUint> {
    let x = field.check(x)?;
    if x.is_zero() {
        return Err(Error::ZeroTarget);
    }
    let q = PrimePower::from_parts(field.characteristic() as u64, field.degree())?;
    unit_solution_count_of_order(parts, q, field.multiplicative_order(x)?)
}

fn order_of_sign(sign: i8, q: PrimePower) -> u64 {
    if sign > 0 || q.p() == 2 {
        1
    } else {
        2
    }
}

/// `sum over compositions of q^n C(n, epsilon(n))`, grouped by part count `r`
/// and gcd `d`: `q^n sum_r sum_{d | n} pi_r(n, d) (q-1)^(r-1) gcd(q-1, d)`.
///
/// `C(n, -1) = C(n, 1)` whenever `epsilon = -1`, since a negative sign forces
/// an odd part.
pub fn structured_count(n: u64, q: PrimePower) -> BigUint {
    let q1 = q.q() - 1;
    let pascal = pascal_triangle(n as usize);
    // weights[r] = sum_d pi_r(n, d) gcd(q - 1, d), with pi_r(n, d) expanded by
    // Moebius inversion over compositions of n/d.
    let mut weights = vec![BigInt::zero(); n as usize + 1];
    for d in divisors(n) {
        let g = gcd(q1, d);
        let m = n / d;
        for e in divisors(m) {
            let mu = mobius(e);
            if mu == 0 {
                continue;
            }
            let k = (m / e) as usize;
            for r in 1..=k {
                let term = BigInt::from(pascal[k - 1][r - 1].clone()) * g;
                if mu > 0 {
                    weights[r] += term;
                } else {
                    weights[r] -= term;
                }
            }
        }
    }
    let mut inner = BigInt::zero();
    let mut unit_power = BigInt::one();
    for w in weights.iter().skip(1) {
        inner += w * &unit_power;
        unit_power *= q1;
    }
    to_unsigned(inner) * big_pow(q.q(), n)
}

/// Rows `0..n` of Pascal's triangle.
fn pascal_triangle(n: usize) -> Vec<Vec<BigUint>> {
    let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n);
    for m in 0..n {
        let mut row = vec![BigUint::one(); m + 1];
        for k in 1..m {
            row[k] = &rows[m - 1][k - 1] + &rows[m - 1][k];
        }
        rows.push(row);
    }
    rows
}

/// Every composition of `n` with `C(n, epsilon(n))`, in lexicographic order.
pub fn composition_tallies(n: usize, q: PrimePower) -> Result<Vec<CompositionTally>> {
    if n > MAX_ENUMERATED_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree: n,
            bound: MAX_ENUMERATED_DEGREE,
        });
    }
    Compositions::new(n)
        .map(|parts| {
            let o = order_of_sign(epsilon_sign(&parts), q);
            Ok(CompositionTally {
                gcd: composition_gcd(&parts),
                count: unit_solution_count_of_order(&parts, q, o)?,
                parts,
            })
        })
        .collect()
}

/// [`structured_count`] evaluated literally, one composition at a time.
pub fn structured_count_enumerated(n: usize, q: PrimePower) -> Result<BigUint> {
    let total: BigUint = composition_tallies(n, q)?.into_iter().map(|t| t.count).sum();
    Ok(total * big_pow(q.q(), n as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(q: u64) -> PrimePower {
        PrimePower::new(q).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(count_convolution_form(2, pp(3)), BigUint::from(36u32));
        assert_eq!(count_divisor_form(2, pp(3)), BigUint::from(36u32));
        assert_eq!(count_divisor_form(3, pp(5)), BigUint::from(3125u32));
        assert_eq!(count_divisor_form(3, pp(7)), BigUint::from(17493u32));
        assert_eq!(count_convolution_form(6, pp(5)), BigUint::from(49_218_750u64));
        assert_eq!(structured_count(2, pp(3)), BigUint::from(36u32));
        assert_eq!(count_mn(2, pp(3)), BigUint::from(54u32));
        assert_eq!(count_mn(1, pp(2)), BigUint::from(2u32));
        assert_eq!(count_xn(2, pp(3)).unwrap(), BigUint::from(12u32));
        assert_eq!(count_xn(3, pp(7)).unwrap(), BigUint::from(2499u32));
        assert_eq!(count_xn(2, pp(4)), Err(Error::NotCoprimeToDegree { q: 4, n: 2 }));
        for q in PrimePower::up_to(50) {
            assert_eq!(count_convolution_form(1, q), BigUint::from(q.q()));
        }
    }

    #[test]
    fn value_x() {
        let f3 = GaloisField::new(3, 1).unwrap();
        assert_eq!(count_value_x(2, &f3, f3.from_int(2)).unwrap(), BigUint::from(18u32));
        assert_eq!(count_value_x(2, &f3, Fq::ONE).unwrap(), BigUint::from(36u32));
        assert_eq!(count_value_x(2, &f3, Fq::ZERO), Err(Error::ZeroTarget));
        let f7 = GaloisField::new(7, 1).unwrap();
        for x in f7.units() {
            assert_eq!(count_value_x(1, &f7, x).unwrap(), BigUint::from(7u32));
        }
    }

    #[test]
    fn unit_solutions() {
        let f3 = GaloisField::new(3, 1).unwrap();
        let f5 = GaloisField::new(5, 1).unwrap();
        assert_eq!(unit_solution_count(&[1, 1], &f3, Fq::ONE).unwrap(), BigUint::from(2u32));
        assert_eq!(unit_solution_count(&[2], &f5, Fq::ONE).unwrap(), BigUint::from(2u32));
        assert_eq!(unit_solution_count(&[2], &f5, f5.from_int(2)).unwrap(), BigUint::zero());
        assert!(unit_solution_count(&[], &f5, Fq::ONE).is_err());
        assert!(unit_solution_count(&[2, 0], &f5, Fq::ONE).is_err());
    }

    #[test]
    fn structured_forms_agree() {
        for q in PrimePower::up_to(32) {
            for n in 1..=14 {
                let grouped = structured_count(n as u64, q);
                assert_eq!(structured_count_enumerated(n, q).unwrap(), grouped, "n={n} q={q}");
                assert_eq!(grouped, count_convolution_form(n as u64, q));
            }
        }
    }
}
