use crate::algebra::field::{Fq, GaloisField};
use crate::algebra::poly::Poly;

/// The `(m+n) x (m+n)` Sylvester matrix of `f` (degree `n`) and `g` (degree `m`):
/// `m` rows of ascending `f` coefficients, then `n` rows of ascending `g`
/// coefficients, each row shifted one column right of the previous one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylvesterMatrix {
    size: usize,
    entries: Vec<Fq>,
}

impl SylvesterMatrix {
    /// Both inputs must be nonzero.
    pub fn new(f: &Poly, g: &Poly, _field: &GaloisField) -> Self {
        let n = f.degree().expect("nonzero f");
        let m = g.degree().expect("nonzero g");
        let size = n + m;
        let mut entries = vec![Fq::ZERO; size * size];
        for row in 0..m {
            for (k, &c) in f.coeffs().iter().enumerate() {
                entries[row * size + row + k] = c;
            }
        }
        for row in 0..n {
            for (k, &c) in g.coeffs().iter().enumerate() {
                entries[(m + row) * size + row + k] = c;
            }
        }
        SylvesterMatrix { size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, row: usize, col: usize) -> Fq {
        self.entries[row * self.size + col]
    }

    /// Gaussian elimination over the field.
    pub fn determinant(&self, field: &GaloisField) -> Fq {
        let n = self.size;
        let mut m = self.entries.clone();
        let mut det = Fq::ONE;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !m[r * n + col].is_zero()) else {
                return Fq::ZERO;
            };
            if pivot != col {
                for k in 0..n {
                    m.swap(pivot * n + k, col * n + k);
                }
                det = field.neg(det);
            }
            let pv = m[col * n + col];
            det = field.mul(det, pv);
            let inv = field.inv_nonzero(pv);
            for r in col + 1..n {
                let factor = field.mul(m[r * n + col], inv);
                if factor.is_zero() {
                    continue;
                }
                for k in col..n {
                    let sub = field.mul(factor, m[col * n + k]);
                    m[r * n + k] = field.sub(m[r * n + k], sub);
                }
            }
        }
        det
    }
}
