//! Exact verification engine for Collatz (3x+1) step-count identities.
//!
//! For a positive integer `N`, let `D`, `O` and `E` be the total, odd and
//! even iteration counts on the way to 1. The residue
//! `Res(N) = 2^E / (3^O * N)` is handled as an exact triple, and every
//! verdict on it (lower bound, the `Res <= 2` conjecture, the `O^(1/9)`
//! bound, and the six floor/ceiling step-count formulas) is decided with
//! integer comparisons only.
//!
//! * [`trajectory`] walks trajectories with a `u128` fast path and
//!   arbitrary-precision fallback.
//! * [`exact`] holds the residue representation and the integer checks.
//! * [`analysis`] checks the auxiliary harmonic-sum bounds with exact
//!   rationals against fixed-point transcendental evaluation.
//! * [`scanner`] runs chunked, resumable, multi-threaded range scans.
//! * [`cli`] is the `residue-lab` command-line front end.

pub mod analysis;
pub mod cli;
mod decimal;
mod error;
pub mod exact;
mod outcome;
pub mod scanner;
pub mod trajectory;

pub use decimal::parse_biguint;
pub use error::{Error, Result};
pub use outcome::{CheckOutcome, Verdict};

pub use num_bigint::BigUint;
