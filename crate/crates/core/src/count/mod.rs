//! Point counts: closed forms, composition sums and the brute-force oracle.

pub mod arithmetic;
mod brute;
mod compositions;
mod formulas;
mod report;

pub use brute::{brute_force_count, BruteForceConfig, CountQuery, Target, Variety, DEFAULT_BUDGET};
pub use compositions::{
    binomial, composition_gcd, pi_r, pi_r_gcd, validate_composition, CompositionTally, Compositions,
};
pub use formulas::{
    composition_tallies, count_convolution_form, count_divisor_form, count_mn, count_value_of_order,
    count_value_x, count_xn, divisor_form_in_domain, structured_count, structured_count_enumerated,
    unit_solution_count, unit_solution_count_of_order, MAX_ENUMERATED_DEGREE,
};
pub use report::{verify_point, MethodCounts, VerificationRecord};
