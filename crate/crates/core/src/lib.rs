//! A subset-sum laboratory.
//!
//! The candidate solver conforms an instance to a family of underdetermined
//! linear systems and searches their solution spaces through a directional
//! contribution table; independent exhaustive and dynamic-programming oracles
//! provide ground truth; the harness replicates the accuracy protocol at desk
//! scale and persists any disagreement it finds.
//!
//! All method-internal arithmetic is exact. The modules are generic over the
//! integer scalar ([`numerics::Scalar`]): [`Int`] (arbitrary precision) is the
//! reference lane, and solves whose magnitudes pass a conservative bound run
//! on `i128` for speed with identical results.

pub mod generators;
pub mod harness;
pub mod linsys;
pub mod numerics;
pub mod oracles;
pub mod solver;

pub use numerics::{Int, Rat, Scalar};
pub use solver::{Instance, Solution, SolveOutcome, SolverConfig};
