use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("extension degree must be at least 1")]
    ZeroExtensionDegree,
    #[error("field order {order} exceeds the supported bound {bound}")]
    FieldTooLarge { order: String, bound: u64 },
    #[error("element encoding {value} lies outside the field of order {order}")]
    ElementOutOfRange { value: u64, order: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("zero has no multiplicative order")]
    ZeroOrder,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("operation is undefined when both polynomials are zero")]
    BothZero,
    #[error("polynomial degree {degree} exceeds the bound {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },
    #[error("enumeration needs {required} items but the budget is {budget}")]
    BudgetExceeded { required: String, budget: u64 },
    #[error("malformed literal `{literal}`: {reason}")]
    Parse { literal: String, reason: String },
    #[error("invalid shape: {0}")]
    Shape(String),
    #[error("polynomials are not coprime")]
    NotCoprime,
    #[error("{0} is not an n-th root of unity for n = {1}")]
    NotRootOfUnity(String, usize),
    #[error("{a} does not divide {n}")]
    NotADivisor { a: u64, n: u64 },
    #[error("polynomial is not the {0}-th power of a monic polynomial")]
    NotPerfectPower(usize),
    #[error("resultant of the pair is {0}, expected 1")]
    ResultantNotOne(String),
    #[error("q = {q} is not coprime to n = {n}")]
    NotCoprimeToDegree { q: u64, n: u64 },
    #[error("resultant target must be a unit")]
    ZeroTarget,
    #[error("count {numerator} is not divisible by {denominator}")]
    NonIntegral { numerator: String, denominator: String },
    #[error("sieve bound {requested} exceeds the limit {limit}")]
    SieveTooLarge { requested: usize, limit: usize },
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("thread pool: {0}")]
    ThreadPool(String),
}
