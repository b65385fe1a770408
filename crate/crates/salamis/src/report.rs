//! Serializable report structures shared by the CLI and tests, plus the
//! fixed-format number rendering used in CSV output.

use serde::Serialize;

use crate::game::{correspondence_report, BimatrixGame, CorrespondenceRow};
use crate::model::{derive_coefficients, State};
use crate::scenario::Scenario;
use crate::stability::{analyze, settle_time, FixedPointReport, SettleOutcome};
use crate::error::Result;

/// Epsilon used for the settle-time summaries printed by the CLI.
pub const SETTLE_EPSILON: f64 = 1e-3;

/// Sustained-window length for those summaries.
pub const SETTLE_WINDOW: usize = 10;

/// Render with up to 9 significant digits, trailing zeros trimmed, plain
/// decimal notation. `0.75` stays `0.75`, not `7.5e-1`.
pub fn fmt_sig9(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let exp = v.abs().log10().floor() as i32;
    let decimals = (8 - exp).clamp(0, 30) as usize;
    let s = format!("{v:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// One fixed point with its verdict, flattened for serialization.
#[derive(Debug, Clone, Serialize)]
pub struct FixedPointRecord {
    pub x: f64,
    pub y: f64,
    pub residual: f64,
    pub admissible: bool,
    pub trace: f64,
    pub determinant: f64,
    pub discriminant: f64,
    /// Eigenvalues as [re, im] pairs.
    pub eigenvalues: [[f64; 2]; 2],
    pub paper_scheme: String,
    pub discrete_scheme: String,
}

impl FixedPointRecord {
    pub fn from_report(r: &FixedPointReport<f64>) -> Self {
        let v = &r.verdict;
        Self {
            x: r.point.location.x,
            y: r.point.location.y,
            residual: r.point.residual,
            admissible: r.point.admissible,
            trace: v.trace,
            determinant: v.determinant,
            discriminant: v.discriminant,
            eigenvalues: [
                [v.eigenvalues[0].re, v.eigenvalues[0].im],
                [v.eigenvalues[1].re, v.eigenvalues[1].im],
            ],
            paper_scheme: v.paper_scheme.to_string(),
            discrete_scheme: v.discrete_scheme.to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeReport {
    pub scenario: String,
    pub fixed_points: Vec<FixedPointRecord>,
}

impl AnalyzeReport {
    pub fn build(scenario: &Scenario) -> Result<(Self, Vec<FixedPointReport<f64>>)> {
        let reports = analyze(&scenario.params, &scenario.name)?;
        let rec = Self {
            scenario: scenario.name.clone(),
            fixed_points: reports.iter().map(FixedPointRecord::from_report).collect(),
        };
        Ok((rec, reports))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BehaviorRecord {
    pub x: f64,
    pub y: f64,
    pub x_participant: String,
    pub y_participant: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorrespondenceRecord {
    pub x: f64,
    pub y: f64,
    pub x_label: String,
    pub y_label: String,
    /// Pure profile as (row, column) strategy names, x participant on rows.
    pub profile: [String; 2],
    pub is_nash: bool,
}

impl CorrespondenceRecord {
    fn from_row(row: &CorrespondenceRow<f64>, game: &BimatrixGame<f64>) -> Self {
        Self {
            x: row.location.x,
            y: row.location.y,
            x_label: row.x_label.to_string(),
            y_label: row.y_label.to_string(),
            profile: [
                game.row_label(row.row_strategy).to_string(),
                game.col_label(row.col_strategy).to_string(),
            ],
            is_nash: row.is_nash,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SettleRecord {
    pub target_x: f64,
    pub target_y: f64,
    pub epsilon: f64,
    pub window: usize,
    /// Settle step, absent when the orbit never sustained the window.
    pub steps: Option<usize>,
    pub diverged: bool,
}

/// The bundle emitted by the `report` command.
#[derive(Debug, Clone, Serialize)]
pub struct CombinedReport {
    pub scenario: String,
    pub game: GameDescription,
    pub analysis: AnalyzeReport,
    pub behavior: Vec<BehaviorRecord>,
    pub correspondence: Vec<CorrespondenceRecord>,
    pub settle: Option<SettleRecord>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GameDescription {
    pub variant: String,
    pub benefit: f64,
    pub cost: f64,
}

impl CombinedReport {
    pub fn build(scenario: &Scenario) -> Result<Self> {
        let block = scenario.game_block();
        let game = block.variant.build(block.benefit, block.cost)?;
        let (analysis, reports) = AnalyzeReport::build(scenario)?;

        let behavior = reports
            .iter()
            .filter(|r| r.point.admissible)
            .map(|r| {
                let (lx, ly) = crate::game::behavior_label(
                    &r.point.location,
                    crate::game::BEHAVIOR_THRESHOLD,
                );
                BehaviorRecord {
                    x: r.point.location.x,
                    y: r.point.location.y,
                    x_participant: lx.to_string(),
                    y_participant: ly.to_string(),
                }
            })
            .collect();

        let correspondence = correspondence_report(&reports, &game)
            .iter()
            .map(|row| CorrespondenceRecord::from_row(row, &game))
            .collect();

        let settle = settle_summary(scenario, &reports)?;

        Ok(Self {
            scenario: scenario.name.clone(),
            game: GameDescription {
                variant: block.variant.name().to_string(),
                benefit: block.benefit,
                cost: block.cost,
            },
            analysis,
            behavior,
            correspondence,
            settle,
        })
    }
}

/// Settle time of the scenario's simulated orbit toward the nearest
/// admissible attracting fixed point, when one exists.
pub fn settle_summary(
    scenario: &Scenario,
    reports: &[FixedPointReport<f64>],
) -> Result<Option<SettleRecord>> {
    let coeffs = derive_coefficients(&scenario.params)?;
    let initial = scenario.simulate.initial_state();
    // final simulated state decides which attractor is "nearest"
    let probe = {
        let mut s = initial;
        for _ in 0..scenario.simulate.steps {
            s = coeffs.apply(s);
            if !s.is_finite() || s.x.abs() > 1e12 || s.y.abs() > 1e12 {
                break;
            }
        }
        s
    };
    let target: Option<State<f64>> = reports
        .iter()
        .filter(|r| r.point.admissible && r.verdict.discrete_scheme.is_stable())
        .map(|r| r.point.location)
        .min_by(|a, b| {
            a.dist_max(&probe)
                .partial_cmp(&b.dist_max(&probe))
                .unwrap()
        });
    let Some(target) = target else {
        return Ok(None);
    };
    let outcome = settle_time(&coeffs, initial, target, SETTLE_EPSILON, SETTLE_WINDOW)?;
    Ok(Some(SettleRecord {
        target_x: target.x,
        target_y: target.y,
        epsilon: SETTLE_EPSILON,
        window: SETTLE_WINDOW,
        steps: outcome.step(),
        diverged: matches!(outcome, SettleOutcome::Diverged { .. }),
    }))
}
