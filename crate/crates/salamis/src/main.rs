//! Command-line interface: analyze, simulate, sweep, game, report.
//!
//! Exit codes: 0 success, 1 usage or I/O failure, 2 scenario parse or
//! validation failure, 3 numerical/internal failure.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde::Serialize;

use salamis::error::Error;
use salamis::game::{
    dominant_strategies, mixed_nash_support_enum, BimatrixGame, EquilibriumKind, Player,
    Strictness,
};
use salamis::model::{derive_coefficients, validate_params, ParamId, ValidationMode};
use salamis::report::{fmt_sig9, AnalyzeReport, CombinedReport, SettleRecord};
use salamis::scenario::{parse_scenario, preset, GameVariant, Scenario, PRESET_NAMES};
use salamis::sweep::{sweep, SweepConfig};

#[derive(Parser)]
#[command(name = "salamis", version, about = "Two-player conflict map analysis")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Path to a scenario JSON file.
    #[arg(long, global = true, value_name = "PATH", conflicts_with = "preset")]
    scenario: Option<PathBuf>,

    /// Name of a built-in preset scenario.
    #[arg(long, global = true, value_name = "NAME")]
    preset: Option<String>,

    /// Require every parameter to lie in [0,1].
    #[arg(long, global = true)]
    strict: bool,

    /// Emit JSON instead of text where applicable.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Locate and classify all fixed points of the scenario's map.
    Analyze,
    /// Iterate the map and emit a t,x,y time series as CSV.
    Simulate {
        /// Number of steps (default: the scenario's simulate block).
        #[arg(long)]
        steps: Option<u32>,
        /// Override the initial x coordinate.
        #[arg(long, allow_negative_numbers = true)]
        x0: Option<f64>,
        /// Override the initial y coordinate.
        #[arg(long, allow_negative_numbers = true)]
        y0: Option<f64>,
        /// Write the CSV here instead of stdout.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Sweep one parameter and characterize the attractor at each value.
    Sweep {
        /// Parameter to sweep (P_x, P_y, TN_x, TN_y, G, D_x, D_y, E_x, E_y).
        #[arg(long)]
        param: String,
        #[arg(long, allow_negative_numbers = true)]
        from: f64,
        #[arg(long, allow_negative_numbers = true)]
        to: f64,
        #[arg(long, default_value_t = 101)]
        points: usize,
        /// Warm-up steps discarded before sampling.
        #[arg(long, default_value_t = salamis::sweep::DEFAULT_TRANSIENT)]
        transient: usize,
        /// Samples retained per grid value.
        #[arg(long, default_value_t = salamis::sweep::DEFAULT_SAMPLES)]
        samples: usize,
        /// Also estimate the largest Lyapunov exponent per value.
        #[arg(long)]
        lyapunov: bool,
        /// Output prefix for <prefix>_samples.csv and <prefix>_summary.csv.
        #[arg(long, default_value = "sweep")]
        out: String,
    },
    /// Print a hawk-dove game's tables, equilibria, and dominance facts.
    Game {
        /// Game variant: symmetric or first-injurer.
        #[arg(long)]
        variant: String,
        #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
        benefit: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        cost: f64,
    },
    /// Combined JSON report: analysis, behavior labels, equilibrium
    /// correspondence, and settle time.
    Report,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

fn io_failure(e: std::io::Error, what: &str) -> Failure {
    Failure { code: 1, message: format!("{what}: {e}") }
}

fn scenario_failure(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Invalid { .. } => 2,
            Error::Config(_) | Error::InsufficientSamples { .. } => 1,
            Error::Diverged { .. }
            | Error::NoCrossing { .. }
            | Error::NonPeriodOneAttractor { .. }
            | Error::SolverInconsistency { .. } => 3,
        };
        Failure { code, message: e.to_string() }
    }
}

fn load_scenario(cli: &Cli) -> Result<Scenario, Failure> {
    let scenario = match (&cli.scenario, &cli.preset) {
        (Some(path), None) => {
            let text = fs::read_to_string(path)
                .map_err(|e| io_failure(e, &format!("reading {}", path.display())))?;
            parse_scenario(&text).map_err(|e| scenario_failure(e.to_string()))?
        }
        (None, Some(name)) => preset(name).ok_or_else(|| {
            usage(format!(
                "unknown preset '{name}'; available: {}",
                PRESET_NAMES.join(", ")
            ))
        })?,
        _ => {
            return Err(usage(
                "a scenario is required: pass --scenario <path> or --preset <name>",
            ))
        }
    };
    let mode = if cli.strict {
        ValidationMode::Strict
    } else {
        ValidationMode::Exploration
    };
    validate_params(&scenario.params, mode)
        .map_err(|e| scenario_failure(e.to_string()))?;
    Ok(scenario)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Analyze => cmd_analyze(&cli),
        Command::Simulate { steps, x0, y0, out } => {
            cmd_simulate(&cli, *steps, *x0, *y0, out.as_deref())
        }
        Command::Sweep {
            param,
            from,
            to,
            points,
            transient,
            samples,
            lyapunov,
            out,
        } => cmd_sweep(
            &cli, param, *from, *to, *points, *transient, *samples, *lyapunov, out,
        ),
        Command::Game { variant, benefit, cost } => cmd_game(&cli, variant, *benefit, *cost),
        Command::Report => cmd_report(&cli),
    }
}

fn fmt_complex(re: f64, im: f64) -> String {
    if im == 0.0 {
        format!("{re:.6}")
    } else if re == 0.0 {
        format!("{im:+.6}i")
    } else {
        format!("{re:.6}{im:+.6}i")
    }
}

fn cmd_analyze(cli: &Cli) -> Result<(), Failure> {
    let scenario = load_scenario(cli)?;
    let (record, _) = AnalyzeReport::build(&scenario)?;
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&record).expect("serializable"));
        return Ok(());
    }
    println!("scenario: {}", record.scenario);
    println!("fixed points: {}", record.fixed_points.len());
    for (i, p) in record.fixed_points.iter().enumerate() {
        println!(
            "E{}: ({:.6}, {:.6})  residual {:.2e}  {}",
            i + 1,
            p.x,
            p.y,
            p.residual,
            if p.admissible { "admissible" } else { "inadmissible" }
        );
        println!(
            "    trace {:.6}  det {:.6}  discriminant {:.6}",
            p.trace, p.determinant, p.discriminant
        );
        println!(
            "    eigenvalues {}, {}",
            fmt_complex(p.eigenvalues[0][0], p.eigenvalues[0][1]),
            fmt_complex(p.eigenvalues[1][0], p.eigenvalues[1][1]),
        );
        println!(
            "    paper scheme: {}  discrete scheme: {}",
            p.paper_scheme, p.discrete_scheme
        );
    }
    Ok(())
}

fn settle_line(settle: &Option<SettleRecord>) -> Option<String> {
    let s = settle.as_ref()?;
    let mut line = match s.steps {
        Some(t) => format!(
            "settle: t={} toward ({}, {})",
            t,
            fmt_sig9(s.target_x),
            fmt_sig9(s.target_y)
        ),
        None => format!(
            "settle: not reached toward ({}, {})",
            fmt_sig9(s.target_x),
            fmt_sig9(s.target_y)
        ),
    };
    line.push_str(&format!(" (eps={}, window={})", fmt_sig9(s.epsilon), s.window));
    if s.diverged {
        line.push_str(" [diverged]");
    }
    Some(line)
}

fn cmd_simulate(
    cli: &Cli,
    steps: Option<u32>,
    x0: Option<f64>,
    y0: Option<f64>,
    out: Option<&std::path::Path>,
) -> Result<(), Failure> {
    let mut scenario = load_scenario(cli)?;
    if let Some(n) = steps {
        scenario.simulate.steps = n;
    }
    if let Some(x) = x0 {
        scenario.simulate.initial[0] = x;
    }
    if let Some(y) = y0 {
        scenario.simulate.initial[1] = y;
    }
    if !scenario.simulate.initial_state().is_finite() {
        return Err(usage("initial state must be finite"));
    }

    let coeffs = derive_coefficients(&scenario.params)?;
    let guard = salamis::model::OVERFLOW_GUARD;
    let mut csv = String::from("t,x,y\n");
    let mut s = scenario.simulate.initial_state();
    let mut diverged_at: Option<u32> = None;
    csv.push_str(&format!("0,{},{}\n", fmt_sig9(s.x), fmt_sig9(s.y)));
    for t in 1..=scenario.simulate.steps {
        s = coeffs.apply(s);
        if scenario.simulate.clamp {
            s = s.clamped();
        }
        if !s.is_finite() || s.x.abs() > guard || s.y.abs() > guard {
            diverged_at = Some(t);
            break;
        }
        csv.push_str(&format!("{t},{},{}\n", fmt_sig9(s.x), fmt_sig9(s.y)));
    }
    if let Some(t) = diverged_at {
        csv.push_str(&format!("# diverged at t={t}\n"));
    }

    // settle summary toward the nearest admissible attracting fixed point
    let reports = salamis::stability::analyze(&scenario.params, &scenario.name)?;
    let settle = salamis::report::settle_summary(&scenario, &reports)?;
    let note = settle_line(&settle);

    match out {
        Some(path) => {
            fs::write(path, csv)
                .map_err(|e| io_failure(e, &format!("writing {}", path.display())))?;
            if let Some(note) = note {
                println!("{note}");
            }
        }
        None => {
            print!("{csv}");
            if let Some(note) = note {
                eprintln!("{note}");
            }
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    cli: &Cli,
    param: &str,
    from: f64,
    to: f64,
    points: usize,
    transient: usize,
    samples: usize,
    lyapunov: bool,
    out: &str,
) -> Result<(), Failure> {
    let scenario = load_scenario(cli)?;
    let Some(parameter) = ParamId::parse(param) else {
        let valid: Vec<&str> = ParamId::ALL.iter().map(|p| p.name()).collect();
        return Err(usage(format!(
            "unknown parameter '{param}'; valid names: {}",
            valid.join(", ")
        )));
    };
    let mut config = SweepConfig::new(parameter, from, to, points);
    config.transient = transient;
    config.samples = samples;
    config.lyapunov = lyapunov;
    config.initial = scenario.simulate.initial_state();
    let results = sweep(&scenario.params, &config)?;

    let mut samples_csv = String::from("param,sample_index,x,y\n");
    let mut summary_csv = String::from("param,period,lyapunov_max,diverged\n");
    for r in &results {
        let v = fmt_sig9(r.value);
        for (k, s) in r.samples.iter().enumerate() {
            samples_csv.push_str(&format!("{v},{k},{},{}\n", fmt_sig9(s.x), fmt_sig9(s.y)));
        }
        let period = r.period.map(|p| p.to_string()).unwrap_or_default();
        let ly = r.lyapunov.map(fmt_sig9).unwrap_or_default();
        summary_csv.push_str(&format!("{v},{period},{ly},{}\n", r.diverged));
    }
    let samples_path = format!("{out}_samples.csv");
    let summary_path = format!("{out}_summary.csv");
    fs::write(&samples_path, samples_csv)
        .map_err(|e| io_failure(e, &format!("writing {samples_path}")))?;
    fs::write(&summary_path, summary_csv)
        .map_err(|e| io_failure(e, &format!("writing {summary_path}")))?;
    eprintln!("wrote {samples_path} and {summary_path}");
    Ok(())
}

#[derive(Serialize)]
struct GameReport {
    variant: String,
    benefit: f64,
    cost: f64,
    row_payoffs: Vec<Vec<f64>>,
    col_payoffs: Vec<Vec<f64>>,
    equilibria: Vec<EquilibriumRecord>,
    dominance: Vec<DominanceRecord>,
}

#[derive(Serialize)]
struct EquilibriumRecord {
    kind: String,
    row: Vec<f64>,
    col: Vec<f64>,
    payoffs: (f64, f64),
}

#[derive(Serialize)]
struct DominanceRecord {
    player: String,
    dominating: String,
    dominated: String,
    strictness: String,
}

fn cmd_game(cli: &Cli, variant: &str, benefit: f64, cost: f64) -> Result<(), Failure> {
    let Some(variant) = GameVariant::parse(variant) else {
        return Err(usage(format!(
            "invalid variant '{variant}'; expected symmetric or first-injurer"
        )));
    };
    if !(benefit.is_finite() && cost.is_finite()) {
        return Err(usage("benefit and cost must be finite"));
    }
    let game = variant.build(benefit, cost)?;
    let equilibria = mixed_nash_support_enum(&game)?;
    let dominance = dominant_strategies(&game);

    if cli.json {
        let (m, n) = (game.rows(), game.cols());
        let report = GameReport {
            variant: variant.name().to_string(),
            benefit,
            cost,
            row_payoffs: (0..m)
                .map(|i| (0..n).map(|j| game.row_payoff(i, j)).collect())
                .collect(),
            col_payoffs: (0..m)
                .map(|i| (0..n).map(|j| game.col_payoff(i, j)).collect())
                .collect(),
            equilibria: equilibria
                .iter()
                .map(|e| EquilibriumRecord {
                    kind: match e.kind {
                        EquilibriumKind::Pure => "pure".into(),
                        EquilibriumKind::Mixed => "mixed".into(),
                    },
                    row: e.row.clone(),
                    col: e.col.clone(),
                    payoffs: e.payoffs,
                })
                .collect(),
            dominance: dominance
                .iter()
                .map(|d| DominanceRecord {
                    player: d.player.to_string(),
                    dominating: strategy_label(&game, d.player, d.dominating),
                    dominated: strategy_label(&game, d.player, d.dominated),
                    strictness: match d.strictness {
                        Strictness::Strict => "strict".into(),
                        Strictness::Weak => "weak".into(),
                    },
                })
                .collect(),
        };
        println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
        return Ok(());
    }

    println!("game: {} (benefit {}, cost {})", variant.name(), benefit, cost);
    println!("payoffs (row, column):");
    for i in 0..game.rows() {
        let cells: Vec<String> = (0..game.cols())
            .map(|j| format!("({}, {})", game.row_payoff(i, j), game.col_payoff(i, j)))
            .collect();
        println!("  {:<5} {}", game.row_label(i), cells.join("  "));
    }
    println!("equilibria:");
    for e in &equilibria {
        match e.kind {
            EquilibriumKind::Pure => {
                let (rs, cs) = e.supports();
                println!(
                    "  pure: ({}, {})  payoffs ({}, {})",
                    game.row_label(rs[0]),
                    game.col_label(cs[0]),
                    e.payoffs.0,
                    e.payoffs.1
                );
            }
            EquilibriumKind::Mixed => {
                let probs = |v: &[f64]| {
                    v.iter().map(|p| fmt_sig9(*p)).collect::<Vec<_>>().join(", ")
                };
                println!(
                    "  mixed: row [{}]  col [{}]  payoffs ({}, {})",
                    probs(&e.row),
                    probs(&e.col),
                    e.payoffs.0,
                    e.payoffs.1
                );
            }
        }
    }
    if dominance.is_empty() {
        println!("dominance: none");
    } else {
        println!("dominance:");
        for d in &dominance {
            println!(
                "  {} player: {} {} dominates {}",
                d.player,
                strategy_label(&game, d.player, d.dominating),
                match d.strictness {
                    Strictness::Strict => "strictly",
                    Strictness::Weak => "weakly",
                },
                strategy_label(&game, d.player, d.dominated)
            );
        }
    }
    Ok(())
}

fn strategy_label(game: &BimatrixGame<f64>, player: Player, idx: usize) -> String {
    match player {
        Player::Row => game.row_label(idx).to_string(),
        Player::Column => game.col_label(idx).to_string(),
    }
}

fn cmd_report(cli: &Cli) -> Result<(), Failure> {
    let scenario = load_scenario(cli)?;
    let report = CombinedReport::build(&scenario)?;
    let text = serde_json::to_string_pretty(&report).expect("serializable");
    println!("{text}");
    let _ = std::io::stdout().flush();
    Ok(())
}
