//! Beatty sequences `S(alpha, beta) = { floor(n*alpha + beta) : n in Z }` over
//! exact arithmetic.
//!
//! The crate decides the classical partition and disjointness criteria for
//! pairs of Beatty sequences, simulates the two-runner stadium model that
//! produces them, and checks every criterion against brute-force window scans.
//!
//! * [`exact`]: rationals and quadratic irrationals with exact floor and order.
//! * [`sequences`]: terms, membership, offset normalization.
//! * [`criteria`]: complementary moduli, Skolem's and Fraenkel's criteria.
//! * [`disjointness`]: coprime moduli, the Japanese remainder theorem, the
//!   `gamma > 2` criterion.
//! * [`stadium`]: the event-driven runner model.
//! * [`oracle`]: window-based ground truth.

pub mod criteria;
pub mod disjointness;
mod error;
pub mod exact;
pub mod oracle;
pub mod sequences;
pub mod stadium;

pub use error::{Error, Result};
pub use exact::{parse_real, ExactReal, Rational};
pub use sequences::BeattySeq;
