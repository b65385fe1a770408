//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A parameter or state component failed validation.
    #[error("invalid {field}: {reason}")]
    Invalid { field: String, reason: String },

    /// An orbit left the overflow guard; `last_valid` is the index of the
    /// last in-range state.
    #[error("orbit diverged after step {last_valid}")]
    Diverged { last_valid: usize },

    /// Too few samples for the requested period bound.
    #[error("period detection needs at least {need} samples, got {got}")]
    InsufficientSamples { got: usize, need: usize },

    /// Sign condition for bisection not met.
    #[error("no crossing in bracket [{lo}, {hi}]")]
    NoCrossing { lo: f64, hi: f64 },

    /// A sweep or crossing evaluation did not settle onto a period-1 attractor.
    #[error("attractor at {parameter} = {value} is not period 1")]
    NonPeriodOneAttractor { parameter: &'static str, value: f64 },

    /// The two independent fixed-point routes disagree; this signals a bug in
    /// the solver, not bad input.
    #[error("internal consistency failure: {detail}")]
    SolverInconsistency { detail: String },

    /// Bad operation configuration (ranges, counts).
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
