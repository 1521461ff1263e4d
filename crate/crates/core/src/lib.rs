//! Executable constructions from computable PAC learning.
//!
//! Hypotheses are finitely supported 0/1 functions on the naturals, identified
//! with their support. Every loss and probability is an exact rational; floating
//! point only shows up in aggregate experiment rates.
//!
//! Module map:
//! - [`hypothesis`], [`sample`], [`loss`]: the shared vocabulary (hypotheses,
//!   samples, distributions, exact empirical and true risk).
//! - [`dims`]: shattering, VC and Littlestone dimension on finite windows,
//!   refutation of candidate VC witnesses.
//! - [`machines`]: a counter-machine model with step-bounded execution,
//!   Cantor pairing, program enumeration and enumerable functions.
//! - [`classes`]: decidable hypothesis classes (baselines, the good-hypothesis
//!   extension, the block class and the diagonal class).
//! - [`learners`]: ERM over bounded enumerations, the asymptotic ERM for the
//!   block class and the lift of a proper learner to an asymptotic ERM.
//! - [`harness`]: seeded Monte-Carlo PAC and uniform-convergence experiments and
//!   the two computability demonstrations.
//! - [`cli`]: the `cpac` command line.

pub mod classes;
pub mod cli;
pub mod dims;
pub mod error;
pub mod harness;
pub mod hypothesis;
pub mod learners;
pub mod loss;
pub mod machines;
pub mod rational;
pub mod sample;

pub use error::{Error, Result};
pub use hypothesis::Hypothesis;
pub use rational::Rational;
pub use sample::{Distribution, LabeledExample, Sample};
