//! Analysis toolkit for a two-player conflict model built from coupled
//! logistic-style feedback.
//!
//! The library covers the full pipeline: the parameterized map and its
//! orbits ([`model`]), fixed points with dual stability classification
//! ([`stability`]), single-parameter attractor sweeps with period detection
//! and Lyapunov exponents ([`sweep`]), hawk-dove games with Nash equilibria
//! and dominance ([`game`]), and declarative scenario files with built-in
//! presets ([`scenario`]). Everything numeric is generic over the scalar
//! type via [`num::Real`]; the CLI and scenario I/O use `f64`.

pub mod error;
pub mod game;
pub mod mat2;
pub mod model;
pub mod num;
pub mod poly;
pub mod report;
pub mod scenario;
pub mod stability;
pub mod sweep;

pub use error::{Error, Result};
pub use num::Real;

/// Double-precision aliases for the common types.
pub type ModelParams64 = model::ModelParams<f64>;
pub type State64 = model::State<f64>;
pub type MapCoefficients64 = model::MapCoefficients<f64>;
pub type Orbit64 = model::Orbit<f64>;
pub type FixedPoint64 = stability::FixedPoint<f64>;
pub type FixedPointReport64 = stability::FixedPointReport<f64>;
pub type SweepConfig64 = sweep::SweepConfig<f64>;
pub type SweepResult64 = sweep::SweepResult<f64>;
pub type BimatrixGame64 = game::BimatrixGame<f64>;
pub type Equilibrium64 = game::Equilibrium<f64>;
