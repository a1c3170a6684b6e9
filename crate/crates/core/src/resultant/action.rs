use super::{pair_resultant, EuclidScratch};
use crate::algebra::field::{Fq, GaloisField};
use crate::algebra::integers::factorize;
use crate::algebra::maps::MonicPair;
use crate::algebra::poly::Poly;
use crate::error::{Error, Result};

/// `lambda . (phi, psi) = (psi + lambda (phi - psi), psi)` for `lambda^n = 1`.
///
/// Multiplies the resultant by `lambda^n`, so the action preserves every fibre.
pub fn mu_n_action(lambda: Fq, pair: &MonicPair, field: &GaloisField) -> Result<MonicPair> {
    let lambda = field.check(lambda)?;
    let n = pair.degree();
    if lambda.is_zero() || field.pow(lambda, n as u64) != Fq::ONE {
        return Err(Error::NotRootOfUnity(field.format_element(lambda), n));
    }
    let diff = pair.phi().sub(pair.psi(), field);
    let phi = pair.psi().add(&diff.scale(lambda, field), field);
    MonicPair::new(phi, pair.psi().clone())
}

/// The orbit of `pair` under `mu_n(F_q)`, sorted and without repeats.
pub fn mu_n_orbit(pair: &MonicPair, field: &GaloisField) -> Vec<MonicPair> {
    let mut orbit: Vec<MonicPair> = field
        .roots_of_unity(pair.degree() as u64)
        .into_iter()
        .map(|l| mu_n_action(l, pair, field).expect("root of unity"))
        .collect();
    orbit.sort_by(|a, b| (a.psi(), a.phi()).cmp(&(b.psi(), b.phi())));
    orbit.dedup();
    orbit
}

/// The unique monic `chi` with `chi^k = psi`, if there is one.
pub fn nth_root_monic(psi: &Poly, k: usize, field: &GaloisField) -> Option<Poly> {
    if k == 0 || !psi.is_monic() {
        return None;
    }
    let mut root = psi.clone();
    for (l, e) in factorize(k as u64) {
        for _ in 0..e {
            root = prime_root(&root, l as usize, field)?;
        }
    }
    Some(root)
}

fn prime_root(psi: &Poly, l: usize, field: &GaloisField) -> Option<Poly> {
    let n = psi.degree()?;
    if n % l != 0 {
        return None;
    }
    let a = n / l;
    let chi = if l as u32 == field.characteristic() {
        if (0..=n).any(|i| i % l != 0 && !psi.coeff(i).is_zero()) {
            return None;
        }
        Poly::from_coeffs((0..=a).map(|i| field.frobenius_inverse(psi.coeff(i * l))).collect())
    } else {
        // Top-down undetermined coefficients: the z^(n-j) coefficient of chi^l
        // is l * chi_(a-j) plus terms in higher coefficients of chi.
        let l_inv = field.inv_nonzero(field.from_int(l as i64));
        let mut coeffs = vec![Fq::ZERO; a + 1];
        coeffs[a] = Fq::ONE;
        for j in 1..=a {
            let partial = Poly::from_coeffs(coeffs.clone()).pow(l as u64, field);
            let gap = field.sub(psi.coeff(n - j), partial.coeff(n - j));
            coeffs[a - j] = field.mul(gap, l_inv);
        }
        Poly::from_coeffs(coeffs)
    };
    (chi.pow(l as u64, field) == *psi).then_some(chi)
}

/// A pair in the stratum where `psi` is a perfect `n/a`-th power, written as
/// `psi = chi^(n/a)` and `phi = phi0 * chi + phi1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YSplit {
    pub chi: Poly,
    pub phi1: Poly,
    pub phi0: Poly,
    /// `Res(phi1, chi)`, an `(n/a)`-th root of unity.
    pub root_value: Fq,
}

/// Splits a pair with `Res(phi, psi) = 1` whose `psi` is a perfect `n/a`-th power.
pub fn y_split(pair: &MonicPair, a: usize, field: &GaloisField) -> Result<YSplit> {
    let n = pair.degree();
    if a == 0 || !n.is_multiple_of(a) {
        return Err(Error::NotADivisor {
            a: a as u64,
            n: n as u64,
        });
    }
    let res = pair_resultant(pair, field);
    if res != Fq::ONE {
        return Err(Error::ResultantNotOne(field.format_element(res)));
    }
    let k = n / a;
    let chi = nth_root_monic(pair.psi(), k, field).ok_or(Error::NotPerfectPower(k))?;
    let (phi0, phi1) = pair.phi().div_rem(&chi, field)?;
    let root_value = EuclidScratch::default().resultant(field, pair.phi().coeffs(), chi.coeffs());
    debug_assert_eq!(field.pow(root_value, k as u64), Fq::ONE);
    Ok(YSplit {
        chi,
        phi1,
        phi0,
        root_value,
    })
}

/// Inverse of [`y_split`]: `(phi0 * chi + phi1, chi^k)`.
pub fn y_join(split: &YSplit, k: usize, field: &GaloisField) -> Result<MonicPair> {
    let psi = split.chi.pow(k as u64, field);
    let phi = split.phi0.mul(&split.chi, field).add(&split.phi1, field);
    MonicPair::new(phi, psi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::enumerate_monic;

    #[test]
    fn action_preserves_resultant_and_psi() {
        let f7 = GaloisField::new(7, 1).unwrap();
        let mu2 = f7.roots_of_unity(2);
        for psi in enumerate_monic(2, &f7).unwrap() {
            for phi in enumerate_monic(2, &f7).unwrap() {
                let pair = MonicPair::new(phi, psi.clone()).unwrap();
                let r = pair_resultant(&pair, &f7);
                for &l in &mu2 {
                    let moved = mu_n_action(l, &pair, &f7).unwrap();
                    assert_eq!(moved.psi(), pair.psi());
                    assert_eq!(pair_resultant(&moved, &f7), r);
                }
            }
        }
    }

    #[test]
    fn action_rejects_non_roots() {
        let f7 = GaloisField::new(7, 1).unwrap();
        let p = |s| Poly::parse(s, &f7).unwrap();
        let pair = MonicPair::new(p("1,0,1"), p("0,0,1")).unwrap();
        assert!(matches!(
            mu_n_action(f7.from_int(3), &pair, &f7),
            Err(Error::NotRootOfUnity(_, 2))
        ));
        assert!(mu_n_action(Fq::ZERO, &pair, &f7).is_err());
        assert_eq!(mu_n_orbit(&pair, &f7).len(), 2);
    }

    #[test]
    fn roots() {
        let f5 = GaloisField::new(5, 1).unwrap();
        let f4 = GaloisField::new(2, 2).unwrap();
        for (f, k) in [(&f5, 2usize), (&f5, 5), (&f4, 2), (&f4, 3)] {
            for chi in enumerate_monic(2, f).unwrap() {
                let psi = chi.pow(k as u64, f);
                assert_eq!(nth_root_monic(&psi, k, f), Some(chi));
            }
        }
        let p = |s| Poly::parse(s, &f5).unwrap();
        assert_eq!(nth_root_monic(&p("1,0,1"), 2, &f5), None);
        assert_eq!(nth_root_monic(&p("0,1,0,1"), 2, &f5), None);
    }

    #[test]
    fn split_examples() {
        let f3 = GaloisField::new(3, 1).unwrap();
        let p = |s| Poly::parse(s, &f3).unwrap();
        // Res(z^2+1, z^2) = 1 and z^2 = z^2: a = 1, chi = z.
        let pair = MonicPair::new(p("1,0,1"), p("0,0,1")).unwrap();
        let split = y_split(&pair, 1, &f3).unwrap();
        assert_eq!(split.chi, p("0,1"));
        assert_eq!(split.phi1, p("1"));
        assert_eq!(split.phi0, p("0,1"));
        assert_eq!(split.root_value, Fq::ONE);
        assert_eq!(y_join(&split, 2, &f3).unwrap(), pair);

        let whole = y_split(&pair, 2, &f3).unwrap();
        assert_eq!(whole.chi, p("0,0,1"));
        assert_eq!(whole.phi0, p("1"));
        assert_eq!(y_join(&whole, 1, &f3).unwrap(), pair);

        let bad = MonicPair::new(p("1,0,1"), p("0,1,1")).unwrap();
        assert!(matches!(y_split(&bad, 1, &f3), Err(Error::ResultantNotOne(_))));
        assert!(matches!(y_split(&pair, 3, &f3), Err(Error::NotADivisor { .. })));
    }
}
