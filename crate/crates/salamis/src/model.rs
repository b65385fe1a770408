//! The two-player conflict map.
//!
//! Each participant's next strategic-behavior value is a constant (strength
//! plus naval-technology level) minus a geography-weighted logistic feedback
//! from the opponent's current value:
//!
//! ```text
//! x' = P_x + TN_x - 4 G (D_y + E_x) y (1 - y)
//! y' = P_y + TN_y - 4 (1 - G) (D_x + E_y) x (1 - x)
//! ```
//!
//! One iteration step corresponds to one hour of battle time.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::num::Real;

/// Display label of the iteration time unit.
pub const TIME_UNIT: &str = "hours";

/// Coordinate magnitude beyond which an orbit is declared divergent.
pub const OVERFLOW_GUARD: f64 = 1e12;

/// The nine model parameters. All are dimensionless fractions; the intended
/// range is [0,1] but out-of-range values are meaningful for exploration
/// (bifurcation sweeps extend into negative parameter regions).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelParams<T> {
    /// Relative strength of participant x.
    #[serde(rename = "P_x")]
    pub p_x: T,
    /// Relative strength of participant y.
    #[serde(rename = "P_y")]
    pub p_y: T,
    /// Technological naval capability of x.
    #[serde(rename = "TN_x")]
    pub tn_x: T,
    /// Technological naval capability of y.
    #[serde(rename = "TN_y")]
    pub tn_y: T,
    /// Ease of terrain; enters x's equation as G and y's as 1-G.
    #[serde(rename = "G")]
    pub g: T,
    /// Damage inflicted by x on y.
    #[serde(rename = "D_x")]
    pub d_x: T,
    /// Damage inflicted by y on x.
    #[serde(rename = "D_y")]
    pub d_y: T,
    /// Preparation expenses of x.
    #[serde(rename = "E_x")]
    pub e_x: T,
    /// Preparation expenses of y.
    #[serde(rename = "E_y")]
    pub e_y: T,
}

/// Identifies one of the nine parameters, e.g. for sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParamId {
    PX,
    PY,
    TNX,
    TNY,
    G,
    DX,
    DY,
    EX,
    EY,
}

impl ParamId {
    pub const ALL: [ParamId; 9] = [
        ParamId::PX,
        ParamId::PY,
        ParamId::TNX,
        ParamId::TNY,
        ParamId::G,
        ParamId::DX,
        ParamId::DY,
        ParamId::EX,
        ParamId::EY,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ParamId::PX => "P_x",
            ParamId::PY => "P_y",
            ParamId::TNX => "TN_x",
            ParamId::TNY => "TN_y",
            ParamId::G => "G",
            ParamId::DX => "D_x",
            ParamId::DY => "D_y",
            ParamId::EX => "E_x",
            ParamId::EY => "E_y",
        }
    }

    pub fn parse(s: &str) -> Option<ParamId> {
        Self::ALL.iter().copied().find(|id| id.name() == s)
    }
}

impl std::fmt::Display for ParamId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// How strictly parameter ranges are enforced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValidationMode {
    /// Every field must lie in [0,1].
    Strict,
    /// Any finite value is accepted; out-of-range fields are reported as
    /// warnings.
    Exploration,
}

/// Result of validating a parameter set: the fields found outside [0,1].
/// Empty in strict mode (violations are errors there).
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ValidationOutcome {
    pub warnings: Vec<&'static str>,
}

/// The grouped constants of the map. Deterministic function of the
/// parameters; all dynamics operations work from these.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MapCoefficients<T> {
    /// Constant term of the x equation: P_x + TN_x.
    pub a_x: T,
    /// Coupling of the x equation to y's logistic term: 4 G (D_y + E_x).
    pub c_x: T,
    /// Constant term of the y equation: P_y + TN_y.
    pub a_y: T,
    /// Coupling of the y equation to x's logistic term: 4 (1-G) (D_x + E_y).
    pub c_y: T,
}

/// One point of the two-player state space. Values outside [0,1] are legal;
/// the map itself can leave the unit square.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct State<T> {
    pub x: T,
    pub y: T,
}

impl<T: Real> State<T> {
    pub fn new(x: T, y: T) -> Self {
        Self { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Exchange the two coordinates (role swap).
    pub fn swapped(&self) -> Self {
        Self::new(self.y, self.x)
    }

    /// Max-norm distance to another state.
    pub fn dist_max(&self, other: &Self) -> T {
        (self.x - other.x).abs().max((self.y - other.y).abs())
    }

    /// Project both coordinates onto [0,1].
    pub fn clamped(&self) -> Self {
        Self::new(
            self.x.max(T::zero()).min(T::one()),
            self.y.max(T::zero()).min(T::one()),
        )
    }
}

/// A finite forward trajectory s_0..s_T, replayable from its first state.
#[derive(Debug, Clone, PartialEq)]
pub struct Orbit<T> {
    pub states: Vec<State<T>>,
}

impl<T: Real> Orbit<T> {
    pub fn initial(&self) -> State<T> {
        self.states[0]
    }

    pub fn last(&self) -> State<T> {
        *self.states.last().expect("orbit is never empty")
    }

    pub fn len_steps(&self) -> usize {
        self.states.len() - 1
    }

    /// Display label of the step unit (one step = one hour).
    pub fn time_unit(&self) -> &'static str {
        TIME_UNIT
    }
}

impl<T: Real> ModelParams<T> {
    fn fields(&self) -> [(&'static str, T); 9] {
        [
            ("P_x", self.p_x),
            ("P_y", self.p_y),
            ("TN_x", self.tn_x),
            ("TN_y", self.tn_y),
            ("G", self.g),
            ("D_x", self.d_x),
            ("D_y", self.d_y),
            ("E_x", self.e_x),
            ("E_y", self.e_y),
        ]
    }

    pub fn get(&self, id: ParamId) -> T {
        match id {
            ParamId::PX => self.p_x,
            ParamId::PY => self.p_y,
            ParamId::TNX => self.tn_x,
            ParamId::TNY => self.tn_y,
            ParamId::G => self.g,
            ParamId::DX => self.d_x,
            ParamId::DY => self.d_y,
            ParamId::EX => self.e_x,
            ParamId::EY => self.e_y,
        }
    }

    /// Copy of the parameter set with one field replaced.
    pub fn with(&self, id: ParamId, value: T) -> Self {
        let mut out = *self;
        match id {
            ParamId::PX => out.p_x = value,
            ParamId::PY => out.p_y = value,
            ParamId::TNX => out.tn_x = value,
            ParamId::TNY => out.tn_y = value,
            ParamId::G => out.g = value,
            ParamId::DX => out.d_x = value,
            ParamId::DY => out.d_y = value,
            ParamId::EX => out.e_x = value,
            ParamId::EY => out.e_y = value,
        }
        out
    }

    /// Exchange the two participants' roles: swaps the x/y parameter pairs
    /// and replaces G by 1-G. Composes with [`State::swapped`] to commute
    /// with the map.
    pub fn swapped(&self) -> Self {
        Self {
            p_x: self.p_y,
            p_y: self.p_x,
            tn_x: self.tn_y,
            tn_y: self.tn_x,
            g: T::one() - self.g,
            d_x: self.d_y,
            d_y: self.d_x,
            e_x: self.e_y,
            e_y: self.e_x,
        }
    }
}

/// Validate a parameter set. Non-finite fields are always an error; fields
/// outside [0,1] are an error in strict mode and a warning in exploration
/// mode.
pub fn validate_params<T: Real>(
    params: &ModelParams<T>,
    mode: ValidationMode,
) -> Result<ValidationOutcome> {
    let mut warnings = Vec::new();
    for (name, v) in params.fields() {
        if !v.is_finite() {
            return Err(Error::Invalid {
                field: format!("params.{name}"),
                reason: format!("non-finite value {v}"),
            });
        }
        if v < T::zero() || v > T::one() {
            match mode {
                ValidationMode::Strict => {
                    return Err(Error::Invalid {
                        field: format!("params.{name}"),
                        reason: format!("{v} outside [0,1]"),
                    })
                }
                ValidationMode::Exploration => warnings.push(name),
            }
        }
    }
    Ok(ValidationOutcome { warnings })
}

/// Group the parameters into the map coefficients.
pub fn derive_coefficients<T: Real>(params: &ModelParams<T>) -> Result<MapCoefficients<T>> {
    validate_params(params, ValidationMode::Exploration)?;
    let four = T::of(4.0);
    Ok(MapCoefficients {
        a_x: params.p_x + params.tn_x,
        c_x: four * params.g * (params.d_y + params.e_x),
        a_y: params.p_y + params.tn_y,
        c_y: four * (T::one() - params.g) * (params.d_x + params.e_y),
    })
}

impl<T: Real> MapCoefficients<T> {
    /// One raw map application. No input checks, no clamping; the result may
    /// leave [0,1] or even overflow, which callers guard against.
    pub fn apply(&self, s: State<T>) -> State<T> {
        State::new(
            self.a_x - self.c_x * s.y * (T::one() - s.y),
            self.a_y - self.c_y * s.x * (T::one() - s.x),
        )
    }
}

/// One checked map step.
pub fn step<T: Real>(coeffs: &MapCoefficients<T>, s: State<T>) -> Result<State<T>> {
    if !s.is_finite() {
        return Err(Error::Invalid {
            field: "state".into(),
            reason: format!("non-finite state ({}, {})", s.x, s.y),
        });
    }
    Ok(coeffs.apply(s))
}

/// Iterate the map `steps` times, recording every state. With `clamp` set,
/// each coordinate is projected onto [0,1] after each step. An orbit whose
/// coordinates exceed the overflow guard stops with a divergence error
/// carrying the index of the last in-range state.
pub fn orbit<T: Real>(
    coeffs: &MapCoefficients<T>,
    initial: State<T>,
    steps: usize,
    clamp: bool,
) -> Result<Orbit<T>> {
    if !initial.is_finite() {
        return Err(Error::Invalid {
            field: "initial".into(),
            reason: "non-finite initial state".into(),
        });
    }
    let guard = T::of(OVERFLOW_GUARD);
    let mut states = Vec::with_capacity(steps + 1);
    states.push(initial);
    for t in 0..steps {
        let mut next = coeffs.apply(states[t]);
        if clamp {
            next = next.clamped();
        }
        if !next.is_finite() || next.x.abs() > guard || next.y.abs() > guard {
            return Err(Error::Diverged { last_valid: t });
        }
        states.push(next);
    }
    Ok(Orbit { states })
}

/// Jacobian of the map at a state: [[0, c_x (2y-1)], [c_y (2x-1), 0]].
/// The diagonal is exactly zero, so the trace is exactly zero everywhere.
pub fn jacobian_at<T: Real>(coeffs: &MapCoefficients<T>, s: State<T>) -> Mat2<T> {
    let two = T::of(2.0);
    Mat2::new(
        T::zero(),
        coeffs.c_x * (two * s.y - T::one()),
        coeffs.c_y * (two * s.x - T::one()),
        T::zero(),
    )
}
