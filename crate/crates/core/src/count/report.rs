use serde::{Deserialize, Serialize};

use super::brute::{brute_force_count, BruteForceConfig, CountQuery, Variety};
use super::formulas::{count_convolution_form, count_divisor_form, divisor_form_in_domain, structured_count};
use crate::algebra::field::GaloisField;
use crate::algebra::integers::{gcd, PrimePower};
use crate::cohom::lefschetz_count;
use crate::error::{Error, Result};

/// Counts are decimal strings since they outgrow 64 bits quickly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MethodCounts {
    pub divisor: String,
    pub convolution: String,
    pub structured: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lefschetz: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub brute: Option<String>,
}

impl MethodCounts {
    pub fn values(&self) -> impl Iterator<Item = &str> {
        [&self.divisor, &self.convolution, &self.structured]
            .into_iter()
            .chain(self.lefschetz.as_ref())
            .chain(self.brute.as_ref())
            .map(String::as_str)
    }

    pub fn agree(&self) -> bool {
        let mut it = self.values();
        let first = it.next();
        it.all(|v| Some(v) == first)
    }
}

/// One line of the verification report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub n: u64,
    pub q: u64,
    pub methods: MethodCounts,
    pub agree: bool,
    pub notes: String,
}

/// Evaluates every applicable method for `|Res_n(F_q)|`. The brute-force oracle
/// runs when the enumeration fits in the budget; otherwise it is skipped and noted.
pub fn verify_point(n: u64, q: PrimePower, config: &BruteForceConfig) -> Result<VerificationRecord> {
    if n == 0 {
        return Err(Error::Shape("degree must be at least 1".into()));
    }
    let mut notes = Vec::new();
    if !divisor_form_in_domain(n, q) {
        notes.push(format!("p = {} divides n", q.p()));
    }
    let lefschetz = if gcd(q.q(), n) == 1 {
        Some(lefschetz_count(n, q.q())?.to_string())
    } else {
        notes.push("lefschetz skipped: gcd(q, n) > 1".to_string());
        None
    };
    let field = GaloisField::new(q.p(), q.d())?;
    let query = CountQuery::new(Variety::Res, n as usize, &field)?;
    let brute = match brute_force_count(&query, config) {
        Ok(c) => Some(c.to_string()),
        Err(Error::BudgetExceeded { required, budget }) => {
            notes.push(format!("brute force skipped: {required} points exceed budget {budget}"));
            None
        }
        Err(e) => return Err(e),
    };
    let methods = MethodCounts {
        divisor: count_divisor_form(n, q).to_string(),
        convolution: count_convolution_form(n, q).to_string(),
        structured: structured_count(n, q).to_string(),
        lefschetz,
        brute,
    };
    Ok(VerificationRecord {
        n,
        q: q.q(),
        agree: methods.agree(),
        methods,
        notes: notes.join("; "),
    })
}
