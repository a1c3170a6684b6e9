//! Exact arithmetic on the varieties of monic polynomial pairs with prescribed
//! resultant over finite fields.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`]: GF(p^d), polynomials over it, and the two rational-map models
//!   ([`MonicPair`] and [`PointedMap`]).
//! * [`resultant`]: Sylvester and Euclidean resultants, the action of the
//!   n-th roots of unity, and the splitting of perfect-power strata.
//! * [`calculus`]: Bézout normal forms, the addition law of pointed maps and
//!   the continued-fraction decomposition with its sign.
//! * [`count`]: closed-form point counts, multiplicative number theory and the
//!   brute-force enumeration oracle.
//! * [`cohom`]: Betti ranks, Frobenius permutations, traces and the
//!   Lefschetz reconstruction of the point count.

pub mod algebra;
pub mod calculus;
pub mod cohom;
pub mod count;
pub mod error;
pub mod resultant;

pub use algebra::field::{Fq, GaloisField};
pub use algebra::integers::PrimePower;
pub use algebra::maps::{MonicPair, PointedMap};
pub use algebra::poly::Poly;
pub use error::{Error, Result};
