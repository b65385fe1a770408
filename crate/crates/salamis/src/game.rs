//! Small strategic-form games: hawk-dove generators, Nash equilibria by
//! support enumeration, dominance facts, and the bridge from dynamical fixed
//! points to behavioral labels.

use std::fmt;

use crate::error::{Error, Result};
use crate::model::State;
use crate::num::Real;
use crate::stability::FixedPointReport;

/// Best-response tie tolerance.
pub const EQUILIBRIUM_TOL: f64 = 1e-9;

/// Two equilibria closer than this (max norm over both strategy vectors)
/// are duplicates.
pub const EQUILIBRIUM_DEDUP_TOL: f64 = 1e-8;

/// Largest side supported by the support enumeration.
pub const SUPPORT_ENUM_MAX: usize = 4;

/// Hawk strategy index in the generated 2x2 games.
pub const HAWK: usize = 0;
/// Dove strategy index in the generated 2x2 games.
pub const DOVE: usize = 1;

/// A two-player strategic-form game: row payoffs A, column payoffs B.
#[derive(Debug, Clone, PartialEq)]
pub struct BimatrixGame<T> {
    a: Vec<Vec<T>>,
    b: Vec<Vec<T>>,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
}

impl<T: Real> BimatrixGame<T> {
    pub fn new(
        a: Vec<Vec<T>>,
        b: Vec<Vec<T>>,
        row_labels: Vec<String>,
        col_labels: Vec<String>,
    ) -> Result<Self> {
        let m = a.len();
        if m == 0 || a[0].is_empty() {
            return Err(Error::Config("payoff tables must be at least 1x1".into()));
        }
        let n = a[0].len();
        let rect = |t: &[Vec<T>]| t.len() == m && t.iter().all(|r| r.len() == n);
        if !rect(&a) || !rect(&b) {
            return Err(Error::Config("payoff tables must be rectangular and same-shaped".into()));
        }
        let finite = |t: &[Vec<T>]| t.iter().flatten().all(|v| v.is_finite());
        if !finite(&a) || !finite(&b) {
            return Err(Error::Config("payoff entries must be finite".into()));
        }
        if row_labels.len() != m || col_labels.len() != n {
            return Err(Error::Config("label counts must match table shape".into()));
        }
        Ok(Self { a, b, row_labels, col_labels })
    }

    pub fn rows(&self) -> usize {
        self.a.len()
    }

    pub fn cols(&self) -> usize {
        self.a[0].len()
    }

    pub fn row_payoff(&self, i: usize, j: usize) -> T {
        self.a[i][j]
    }

    pub fn col_payoff(&self, i: usize, j: usize) -> T {
        self.b[i][j]
    }

    pub fn row_label(&self, i: usize) -> &str {
        &self.row_labels[i]
    }

    pub fn col_label(&self, j: usize) -> &str {
        &self.col_labels[j]
    }

    /// Expected payoffs of mixed profile (p, q) as (row, column).
    #[allow(clippy::needless_range_loop)]
    pub fn expected_payoffs(&self, p: &[T], q: &[T]) -> (T, T) {
        let mut ea = T::zero();
        let mut eb = T::zero();
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                let w = p[i] * q[j];
                ea = ea + w * self.a[i][j];
                eb = eb + w * self.b[i][j];
            }
        }
        (ea, eb)
    }
}

fn hawk_dove_labels() -> (Vec<String>, Vec<String>) {
    let labels = vec!["Hawk".to_string(), "Dove".to_string()];
    (labels.clone(), labels)
}

fn hawk_dove_row_table<T: Real>(benefit: T, cost: T) -> Vec<Vec<T>> {
    let half = T::of(0.5);
    vec![
        vec![(benefit - cost) * half, benefit],
        vec![T::zero(), benefit * half],
    ]
}

/// Symmetric hawk-dove: both players face the same payoff structure
/// (column table is the transpose of the row table).
pub fn hawk_dove_symmetric<T: Real>(benefit: T, cost: T) -> Result<BimatrixGame<T>> {
    let a = hawk_dove_row_table(benefit, cost);
    let b = vec![vec![a[0][0], a[1][0]], vec![a[0][1], a[1][1]]];
    let (rl, cl) = hawk_dove_labels();
    BimatrixGame::new(a, b, rl, cl)
}

/// Asymmetric hawk-dove where the row player strikes first: the column
/// player is left with nothing whenever the row player plays Hawk.
pub fn hawk_dove_first_injurer<T: Real>(benefit: T, cost: T) -> Result<BimatrixGame<T>> {
    let a = hawk_dove_row_table(benefit, cost);
    let b = vec![
        vec![T::zero(), T::zero()],
        vec![benefit, benefit * T::of(0.5)],
    ];
    let (rl, cl) = hawk_dove_labels();
    BimatrixGame::new(a, b, rl, cl)
}

/// Whether a pure strategy profile is a Nash equilibrium (ties count as best
/// responses).
fn pure_is_nash<T: Real>(game: &BimatrixGame<T>, i: usize, j: usize, tol: T) -> bool {
    let row_best = (0..game.rows()).all(|k| game.a[k][j] <= game.a[i][j] + tol);
    let col_best = (0..game.cols()).all(|k| game.b[i][k] <= game.b[i][j] + tol);
    row_best && col_best
}

fn indicator<T: Real>(len: usize, idx: usize) -> Vec<T> {
    (0..len)
        .map(|k| if k == idx { T::one() } else { T::zero() })
        .collect()
}

fn pure_equilibrium<T: Real>(game: &BimatrixGame<T>, i: usize, j: usize) -> Equilibrium<T> {
    let row = indicator(game.rows(), i);
    let col = indicator(game.cols(), j);
    let payoffs = game.expected_payoffs(&row, &col);
    Equilibrium {
        row,
        col,
        payoffs,
        kind: EquilibriumKind::Pure,
    }
}

/// Pure or mixed Nash equilibrium.
#[derive(Debug, Clone, PartialEq)]
pub struct Equilibrium<T> {
    pub row: Vec<T>,
    pub col: Vec<T>,
    pub payoffs: (T, T),
    pub kind: EquilibriumKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquilibriumKind {
    Pure,
    Mixed,
}

impl<T: Real> Equilibrium<T> {
    /// Indices of strategies played with positive probability.
    pub fn supports(&self) -> (Vec<usize>, Vec<usize>) {
        let pick = |v: &[T]| {
            v.iter()
                .enumerate()
                .filter(|(_, &p)| p > T::of(EQUILIBRIUM_TOL))
                .map(|(i, _)| i)
                .collect()
        };
        (pick(&self.row), pick(&self.col))
    }
}

/// No unilateral pure deviation improves either player's payoff by more than
/// `tol`. Verifiable without trusting any enumerator.
pub fn is_equilibrium<T: Real>(game: &BimatrixGame<T>, row: &[T], col: &[T], tol: T) -> bool {
    let (ea, eb) = game.expected_payoffs(row, col);
    for i in 0..game.rows() {
        let (dev, _) = game.expected_payoffs(&indicator(game.rows(), i), col);
        if dev > ea + tol {
            return false;
        }
    }
    for j in 0..game.cols() {
        let (_, dev) = game.expected_payoffs(row, &indicator(game.cols(), j));
        if dev > eb + tol {
            return false;
        }
    }
    true
}

/// All pure-strategy Nash equilibria in row-major order.
pub fn pure_nash<T: Real>(game: &BimatrixGame<T>) -> Vec<Equilibrium<T>> {
    let tol = T::of(EQUILIBRIUM_TOL);
    let mut out = Vec::new();
    for i in 0..game.rows() {
        for j in 0..game.cols() {
            if pure_is_nash(game, i, j, tol) {
                out.push(pure_equilibrium(game, i, j));
            }
        }
    }
    out
}

/// Solve the square linear system via Gaussian elimination with partial
/// pivoting; `None` when singular.
#[allow(clippy::needless_range_loop)]
fn solve_linear<T: Real>(mut m: Vec<Vec<T>>, mut rhs: Vec<T>) -> Option<Vec<T>> {
    let n = rhs.len();
    for col in 0..n {
        let pivot = (col..n).max_by(|&a, &b| {
            m[a][col]
                .abs()
                .partial_cmp(&m[b][col].abs())
                .unwrap_or(std::cmp::Ordering::Equal)
        })?;
        if m[pivot][col].abs() < T::of(1e-12) {
            return None;
        }
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        for row in col + 1..n {
            let f = m[row][col] / m[col][col];
            for k in col..n {
                m[row][k] = m[row][k] - f * m[col][k];
            }
            rhs[row] = rhs[row] - f * rhs[col];
        }
    }
    let mut x = vec![T::zero(); n];
    for row in (0..n).rev() {
        let mut acc = rhs[row];
        for k in row + 1..n {
            acc = acc - m[row][k] * x[k];
        }
        x[row] = acc / m[row][row];
    }
    x.iter().all(|v| v.is_finite()).then_some(x)
}

/// Opponent mixture over `cols` making every row in `rows` indifferent under
/// payoff table `t`, or `None` when the system is singular/infeasible.
fn support_mixture<T: Real>(
    t: &[Vec<T>],
    rows: &[usize],
    cols: &[usize],
) -> Option<(Vec<T>, T)> {
    // unknowns: one weight per column in the support, plus the common payoff
    let k = cols.len();
    let mut m = Vec::with_capacity(k + 1);
    let mut rhs = Vec::with_capacity(k + 1);
    // indifference rows: sum_j t[i][j] q_j - u = 0 for i in support
    for &i in rows {
        let mut r: Vec<T> = cols.iter().map(|&j| t[i][j]).collect();
        r.push(-T::one());
        m.push(r);
        rhs.push(T::zero());
    }
    // normalization: sum q_j = 1
    let mut norm = vec![T::one(); k];
    norm.push(T::zero());
    m.push(norm);
    rhs.push(T::one());
    let sol = solve_linear(m, rhs)?;
    let (q, u) = (sol[..k].to_vec(), sol[k]);
    let tol = T::of(EQUILIBRIUM_TOL);
    if q.iter().any(|&p| p < -tol) {
        return None;
    }
    Some((q.iter().map(|&p| p.max(T::zero())).collect(), u))
}

fn scatter<T: Real>(len: usize, idx: &[usize], vals: &[T]) -> Vec<T> {
    let mut out = vec![T::zero(); len];
    for (&i, &v) in idx.iter().zip(vals) {
        out[i] = v;
    }
    out
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// All Nash equilibria found by enumerating equal-size support pairs and
/// solving the indifference systems, pure profiles included. Every candidate
/// must pass the no-deviation check; singular systems are skipped, never
/// patched. Supports up to 4x4.
pub fn mixed_nash_support_enum<T: Real>(game: &BimatrixGame<T>) -> Result<Vec<Equilibrium<T>>> {
    let (m, n) = (game.rows(), game.cols());
    if m > SUPPORT_ENUM_MAX || n > SUPPORT_ENUM_MAX {
        return Err(Error::Config(format!(
            "support enumeration handles up to {SUPPORT_ENUM_MAX}x{SUPPORT_ENUM_MAX} games"
        )));
    }
    let tol = T::of(EQUILIBRIUM_TOL);
    let dedup = T::of(EQUILIBRIUM_DEDUP_TOL);
    let mut out: Vec<Equilibrium<T>> = Vec::new();
    let push_unique = |e: Equilibrium<T>, out: &mut Vec<Equilibrium<T>>| {
        let same = |a: &[T], b: &[T]| {
            a.iter()
                .zip(b)
                .all(|(&x, &y)| (x - y).abs() < dedup)
        };
        if !out.iter().any(|o| same(&o.row, &e.row) && same(&o.col, &e.col)) {
            out.push(e);
        }
    };

    for size in 1..=m.min(n) {
        for rows in subsets_of_size(m, size) {
            for cols in subsets_of_size(n, size) {
                if size == 1 {
                    let (i, j) = (rows[0], cols[0]);
                    if pure_is_nash(game, i, j, tol) {
                        push_unique(pure_equilibrium(game, i, j), &mut out);
                    }
                    continue;
                }
                // column mixture makes supported rows indifferent in A
                let Some((q, _)) = support_mixture(&game.a, &rows, &cols) else {
                    continue;
                };
                // row mixture makes supported columns indifferent in B
                // (transpose B so columns become rows)
                let bt: Vec<Vec<T>> = (0..n)
                    .map(|j| (0..m).map(|i| game.b[i][j]).collect())
                    .collect();
                let Some((p, _)) = support_mixture(&bt, &cols, &rows) else {
                    continue;
                };
                let row = scatter(m, &rows, &p);
                let col = scatter(n, &cols, &q);
                if !is_equilibrium(game, &row, &col, tol) {
                    continue;
                }
                let payoffs = game.expected_payoffs(&row, &col);
                let pure = row.iter().chain(col.iter()).all(|&v| {
                    v.abs() < tol || (v - T::one()).abs() < tol
                });
                push_unique(
                    Equilibrium {
                        row,
                        col,
                        payoffs,
                        kind: if pure {
                            EquilibriumKind::Pure
                        } else {
                            EquilibriumKind::Mixed
                        },
                    },
                    &mut out,
                );
            }
        }
    }
    Ok(out)
}

/// Which player a dominance fact concerns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Player {
    Row,
    Column,
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Row => "row",
            Player::Column => "column",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strictness {
    Strict,
    Weak,
}

/// One strategy dominating another for one player.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DominanceFact {
    pub player: Player,
    pub dominating: usize,
    pub dominated: usize,
    pub strictness: Strictness,
}

/// All pairwise dominance facts. Strict needs a strictly better payoff
/// against every opponent strategy; weak needs at least as good everywhere
/// and strictly better somewhere.
pub fn dominant_strategies<T: Real>(game: &BimatrixGame<T>) -> Vec<DominanceFact> {
    let mut out = Vec::new();
    let classify = |diffs: &[T]| -> Option<Strictness> {
        if diffs.iter().all(|&d| d > T::zero()) {
            Some(Strictness::Strict)
        } else if diffs.iter().all(|&d| d >= T::zero()) && diffs.iter().any(|&d| d > T::zero()) {
            Some(Strictness::Weak)
        } else {
            None
        }
    };
    for s1 in 0..game.rows() {
        for s2 in 0..game.rows() {
            if s1 == s2 {
                continue;
            }
            let diffs: Vec<T> = (0..game.cols())
                .map(|j| game.a[s1][j] - game.a[s2][j])
                .collect();
            if let Some(strictness) = classify(&diffs) {
                out.push(DominanceFact {
                    player: Player::Row,
                    dominating: s1,
                    dominated: s2,
                    strictness,
                });
            }
        }
    }
    for s1 in 0..game.cols() {
        for s2 in 0..game.cols() {
            if s1 == s2 {
                continue;
            }
            let diffs: Vec<T> = (0..game.rows())
                .map(|i| game.b[i][s1] - game.b[i][s2])
                .collect();
            if let Some(strictness) = classify(&diffs) {
                out.push(DominanceFact {
                    player: Player::Column,
                    dominating: s1,
                    dominated: s2,
                    strictness,
                });
            }
        }
    }
    out
}

/// Behavioral reading of a state coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BehaviorLabel {
    /// Aggressive: coordinate at or above the threshold.
    HawkLike,
    /// Mild: coordinate below the threshold.
    DoveLike,
}

impl BehaviorLabel {
    /// Strategy index in the hawk-dove tables.
    pub fn strategy_index(self) -> usize {
        match self {
            BehaviorLabel::HawkLike => HAWK,
            BehaviorLabel::DoveLike => DOVE,
        }
    }
}

impl fmt::Display for BehaviorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BehaviorLabel::HawkLike => "Hawk-like (aggressive)",
            BehaviorLabel::DoveLike => "Dove-like (mild)",
        })
    }
}

/// Default threshold separating aggressive from mild behavior.
pub const BEHAVIOR_THRESHOLD: f64 = 0.5;

/// Label both coordinates of a state against a threshold.
pub fn behavior_label<T: Real>(s: &State<T>, threshold: T) -> (BehaviorLabel, BehaviorLabel) {
    let lab = |v: T| {
        if v >= threshold {
            BehaviorLabel::HawkLike
        } else {
            BehaviorLabel::DoveLike
        }
    };
    (lab(s.x), lab(s.y))
}

/// One row of the fixed-point / equilibrium correspondence table.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrespondenceRow<T> {
    pub location: State<T>,
    pub scenario: String,
    /// Behavior of the x participant, who takes the row (first-injurer) role.
    pub x_label: BehaviorLabel,
    /// Behavior of the y participant, who takes the column role.
    pub y_label: BehaviorLabel,
    pub row_strategy: usize,
    pub col_strategy: usize,
    pub is_nash: bool,
}

/// Pair each admissible fixed point's behavior labels with the matching pure
/// profile of `game` and state whether that profile is a Nash equilibrium.
/// The x participant is mapped onto the row player.
pub fn correspondence_report<T: Real>(
    reports: &[FixedPointReport<T>],
    game: &BimatrixGame<T>,
) -> Vec<CorrespondenceRow<T>> {
    let tol = T::of(EQUILIBRIUM_TOL);
    reports
        .iter()
        .filter(|r| r.point.admissible)
        .map(|r| {
            let (x_label, y_label) =
                behavior_label(&r.point.location, T::of(BEHAVIOR_THRESHOLD));
            let row_strategy = x_label.strategy_index();
            let col_strategy = y_label.strategy_index();
            CorrespondenceRow {
                location: r.point.location,
                scenario: r.scenario.clone(),
                x_label,
                y_label,
                row_strategy,
                col_strategy,
                is_nash: pure_is_nash(game, row_strategy, col_strategy, tol),
            }
        })
        .collect()
}
