//! Declarative scenario files and the built-in preset catalog.
//!
//! A scenario is a JSON document with keys `name`, `params`, and optional
//! `simulate` and `game` blocks. Unknown keys are rejected so that a typo in
//! one of nine similarly named parameters cannot silently fall back to a
//! default.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::game::{hawk_dove_first_injurer, hawk_dove_symmetric, BimatrixGame};
use crate::model::{validate_params, ModelParams, State, ValidationMode};

/// Error from parsing or validating a scenario document. The message carries
/// the dotted field path (e.g. `params.G`) where applicable.
#[derive(Debug, Error)]
#[error("{0}")]
pub struct ScenarioError(pub String);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: String,
    pub params: ModelParams<f64>,
    #[serde(default)]
    pub simulate: SimulateBlock,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub game: Option<GameBlock>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimulateBlock {
    /// Initial state as [x, y].
    #[serde(default = "default_initial")]
    pub initial: [f64; 2],
    #[serde(default = "default_steps")]
    pub steps: u32,
    #[serde(default)]
    pub clamp: bool,
}

fn default_initial() -> [f64; 2] {
    [0.5, 0.5]
}

fn default_steps() -> u32 {
    24
}

impl Default for SimulateBlock {
    fn default() -> Self {
        Self {
            initial: default_initial(),
            steps: default_steps(),
            clamp: false,
        }
    }
}

impl SimulateBlock {
    pub fn initial_state(&self) -> State<f64> {
        State::new(self.initial[0], self.initial[1])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameBlock {
    pub variant: GameVariant,
    pub benefit: f64,
    pub cost: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GameVariant {
    #[serde(rename = "symmetric")]
    Symmetric,
    #[serde(rename = "first-injurer")]
    FirstInjurer,
}

impl GameVariant {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "symmetric" => Some(GameVariant::Symmetric),
            "first-injurer" => Some(GameVariant::FirstInjurer),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            GameVariant::Symmetric => "symmetric",
            GameVariant::FirstInjurer => "first-injurer",
        }
    }

    pub fn build(&self, benefit: f64, cost: f64) -> crate::error::Result<BimatrixGame<f64>> {
        match self {
            GameVariant::Symmetric => hawk_dove_symmetric(benefit, cost),
            GameVariant::FirstInjurer => hawk_dove_first_injurer(benefit, cost),
        }
    }
}

/// The game used when a scenario has no game block.
pub fn default_game_block() -> GameBlock {
    GameBlock {
        variant: GameVariant::FirstInjurer,
        benefit: 2.0,
        cost: 1.0,
    }
}

impl Scenario {
    /// The scenario's game block, or the default first-injurer game.
    pub fn game_block(&self) -> GameBlock {
        self.game.unwrap_or_else(default_game_block)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scenario serializes")
    }
}

/// Parse and validate a scenario document.
pub fn parse_scenario(text: &str) -> Result<Scenario, ScenarioError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let scenario: Scenario = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        if path == "." {
            ScenarioError(format!("{inner}"))
        } else {
            ScenarioError(format!("{path}: {inner}"))
        }
    })?;
    if scenario.name.is_empty() {
        return Err(ScenarioError("name: must be nonempty".into()));
    }
    validate_params(&scenario.params, ValidationMode::Exploration)
        .map_err(|e| ScenarioError(e.to_string()))?;
    if !scenario.simulate.initial_state().is_finite() {
        return Err(ScenarioError("simulate.initial: must be finite".into()));
    }
    if let Some(g) = &scenario.game {
        if !(g.benefit.is_finite() && g.cost.is_finite()) {
            return Err(ScenarioError("game: benefit and cost must be finite".into()));
        }
    }
    Ok(scenario)
}

fn scenario(name: &str, params: ModelParams<f64>) -> Scenario {
    Scenario {
        name: name.to_string(),
        params,
        simulate: SimulateBlock::default(),
        game: None,
    }
}

fn straits_params() -> ModelParams<f64> {
    ModelParams {
        p_x: 0.25,
        p_y: 0.8,
        tn_x: 0.7,
        tn_y: 0.35,
        g: 0.4,
        d_x: 0.8,
        d_y: 0.2,
        e_x: 0.3,
        e_y: 0.7,
    }
}

/// Names of the built-in presets, catalog order.
pub const PRESET_NAMES: [&str; 6] = [
    "salamis_straits",
    "open_saronic",
    "isthmus",
    "damage_even",
    "damage_persian_edge",
    "damage_greek_edge",
];

/// Look up a built-in preset by name.
pub fn preset(name: &str) -> Option<Scenario> {
    let p = straits_params();
    match name {
        // the historical battle location, narrow straits
        "salamis_straits" => Some(scenario(name, p)),
        // counterfactual: open sea, near the critical terrain value
        "open_saronic" => Some(scenario(name, ModelParams { g: 0.64, ..p })),
        // counterfactual: mixed sea/land battle at the isthmus
        "isthmus" => Some(scenario(name, ModelParams { g: 0.7, ..p })),
        // bilateral damage variants over the straits baseline
        "damage_even" => Some(scenario(name, ModelParams { d_x: 0.5, d_y: 0.5, ..p })),
        "damage_persian_edge" => Some(scenario(name, ModelParams { d_x: 0.3, d_y: 0.7, ..p })),
        "damage_greek_edge" => Some(scenario(name, ModelParams { d_x: 0.8, d_y: 0.2, ..p })),
        _ => None,
    }
}
