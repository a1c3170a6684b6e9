//! Finite fields, polynomials over them, and the two rational-map models.

pub mod field;
pub mod integers;
pub mod maps;
pub mod poly;
