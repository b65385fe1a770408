//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured values (visible with `--nocapture`, and on any failure).
//!
//! Expected values are frozen from independent oracles: hand iteration of
//! the map, a bisection sign-scan of the fixed-point quartic, closed-form
//! algebra for the branch crossing, central finite differences for the
//! Jacobian, and a brute-force grid scan for game equilibria.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use salamis::game::{
    dominant_strategies, hawk_dove_first_injurer, hawk_dove_symmetric, mixed_nash_support_enum,
    pure_nash, DominanceFact, EquilibriumKind, Player, Strictness, DOVE, HAWK,
};
use salamis::model::{
    derive_coefficients, jacobian_at, orbit, ModelParams, ParamId, State,
};
use salamis::scenario::{parse_scenario, preset, GameBlock, GameVariant, Scenario, SimulateBlock};
use salamis::stability::{
    analyze, fixed_points, settle_time, PaperClass, SearchBox, SettleOutcome,
};
use salamis::sweep::{crossing_point, lyapunov_max, sweep, SweepConfig};

fn baseline() -> ModelParams<f64> {
    preset("salamis_straits").unwrap().params
}

fn near(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

#[test]
fn criterion_01_baseline_fixed_points() {
    let reports = analyze(&baseline(), "salamis_straits").unwrap();
    assert_eq!(reports.len(), 2, "expected exactly two fixed points");
    let e1 = &reports[0].point;
    let e2 = &reports[1].point;
    assert!(near(e1.location.x, 0.75, 1e-2) && near(e1.location.y, 0.475, 1e-2));
    assert!(near(e2.location.x, 0.96, 1e-2) && near(e2.location.y, 1.012, 1e-2));
    assert!(e1.residual < 1e-10 && e2.residual < 1e-10);
    assert!(e1.admissible);
    assert!(!e2.admissible, "E2 must be rejected: y = {} > 1", e2.location.y);
    println!(
        "criterion 01 PASS: E1=({:.6},{:.6}) E2=({:.6},{:.6}) residuals {:.1e}/{:.1e}",
        e1.location.x, e1.location.y, e2.location.x, e2.location.y, e1.residual, e2.residual
    );
}

#[test]
#[allow(clippy::approx_constant)] // det(J at E2) really is -2.718
fn criterion_02_baseline_stability_numbers() {
    let reports = analyze(&baseline(), "salamis_straits").unwrap();
    let v1 = &reports[0].verdict;
    let v2 = &reports[1].verdict;
    assert!(near(v1.determinant, 0.069, 2e-3), "det1 = {}", v1.determinant);
    assert!(v1.eigenvalues[0].re.abs() < 1e-12);
    assert!(near(v1.eigenvalues[0].im, 0.264, 2e-3));
    assert!(near(v1.eigenvalues[1].im, -0.264, 2e-3));
    assert!(near(v2.determinant, -2.718, 2e-2), "det2 = {}", v2.determinant);
    assert!(near(v2.eigenvalues[0].re, 1.648, 5e-3));
    assert!(near(v2.eigenvalues[1].re, -1.648, 5e-3));
    assert_eq!(v1.paper_scheme, PaperClass::Center);
    assert_eq!(v2.paper_scheme, PaperClass::Saddle);
    println!(
        "criterion 02 PASS: det1={:.6} eig1=±{:.4}i det2={:.6} eig2=±{:.4}",
        v1.determinant, v1.eigenvalues[0].im, v2.determinant, v2.eigenvalues[0].re
    );
}

#[test]
fn criterion_03_open_saronic() {
    let params = preset("open_saronic").unwrap().params;
    let reports = analyze(&params, "open_saronic").unwrap();
    assert_eq!(reports.len(), 2);
    let (p1, p2) = (&reports[0].point.location, &reports[1].point.location);
    assert!(near(p1.x, 0.667, 1e-2) && near(p1.y, 0.67, 1e-2));
    assert!(near(p2.x, 0.904, 1e-2) && near(p2.y, 0.963, 1e-2));
    let (v1, v2) = (&reports[0].verdict, &reports[1].verdict);
    assert!(near(v1.determinant, -0.314, 5e-3), "det1 = {}", v1.determinant);
    assert!(near(v2.determinant, -2.068, 1e-2), "det2 = {}", v2.determinant);
    assert_eq!(v1.paper_scheme, PaperClass::Saddle);
    assert_eq!(v2.paper_scheme, PaperClass::Saddle);
    println!(
        "criterion 03 PASS: E1=({:.4},{:.4}) E2=({:.4},{:.4}) dets {:.4}/{:.4}, both saddles",
        p1.x, p1.y, p2.x, p2.y, v1.determinant, v2.determinant
    );
}

#[test]
fn criterion_04_isthmus() {
    let params = preset("isthmus").unwrap().params;
    let reports = analyze(&params, "isthmus").unwrap();
    assert_eq!(reports.len(), 2);
    let (v1, v2) = (&reports[0].verdict, &reports[1].verdict);
    assert!(near(v1.determinant, -0.583, 1e-2), "det1 = {}", v1.determinant);
    assert!(near(v2.determinant, -1.526, 2e-2), "det2 = {}", v2.determinant);
    assert_eq!(v1.paper_scheme, PaperClass::Saddle);
    assert_eq!(v2.paper_scheme, PaperClass::Saddle);
    println!(
        "criterion 04 PASS: dets {:.4}/{:.4} at refined points, both saddles",
        v1.determinant, v2.determinant
    );
}

#[test]
fn criterion_05_settle_times() {
    let start = State::new(0.5, 0.5);
    let mut measured = Vec::new();
    for (name, lo, hi) in [("salamis_straits", 4.0, 8.0), ("open_saronic", 8.0, 13.0)] {
        let params = preset(name).unwrap().params;
        let coeffs = derive_coefficients(&params).unwrap();
        let reports = analyze(&params, name).unwrap();
        let target = reports
            .iter()
            .find(|r| r.point.admissible && r.verdict.discrete_scheme.is_stable())
            .expect("admissible attracting fixed point")
            .point
            .location;
        let t = match settle_time(&coeffs, start, target, 1e-3, 10).unwrap() {
            SettleOutcome::Settled(t) => t as f64,
            other => panic!("{name} did not settle: {other:?}"),
        };
        assert!(t >= lo && t <= hi, "{name} settle {t} outside [{lo}, {hi}]");
        measured.push((name, t));
    }
    // post-settle ordering: y stays strictly above x once settled
    for name in ["open_saronic", "isthmus"] {
        let params = preset(name).unwrap().params;
        let coeffs = derive_coefficients(&params).unwrap();
        let reports = analyze(&params, name).unwrap();
        let target = reports
            .iter()
            .find(|r| r.point.admissible && r.verdict.discrete_scheme.is_stable())
            .unwrap()
            .point
            .location;
        assert!(target.y > target.x, "{name}: attractor must have y > x");
        let t = settle_time(&coeffs, start, target, 1e-3, 10)
            .unwrap()
            .step()
            .unwrap();
        let o = orbit(&coeffs, start, t + 20, false).unwrap();
        for s in &o.states[t..] {
            assert!(s.y > s.x, "{name}: post-settle state ({}, {}) has x >= y", s.x, s.y);
        }
    }
    println!("criterion 05 PASS: settle {measured:?}, post-settle y > x in both counterfactuals");
}

#[test]
fn criterion_06_branch_crossing() {
    let g = crossing_point(&baseline(), ParamId::G, (0.5, 0.7)).unwrap();
    assert!(near(g, 0.6375, 5e-3), "crossing at {g}");

    // independent closed-form oracle: at G = 0.6375 the common fixed point is
    // exactly s = 2/3 in both coordinates; verify algebraically and by raw
    // iteration of the map written out longhand.
    let s: f64 = 2.0 / 3.0;
    let (g0, px, tnx, py, tny): (f64, f64, f64, f64, f64) = (0.6375, 0.25, 0.7, 0.8, 0.35);
    let cx = 4.0 * g0 * (0.2 + 0.3);
    let cy = 4.0 * (1.0 - g0) * (0.8 + 0.7);
    assert!((px + tnx - cx * s * (1.0 - s) - s).abs() < 1e-12);
    assert!((py + tny - cy * s * (1.0 - s) - s).abs() < 1e-12);
    let (mut x, mut y) = (0.5, 0.5);
    for _ in 0..2000 {
        let nx = px + tnx - cx * y * (1.0 - y);
        let ny = py + tny - cy * x * (1.0 - x);
        x = nx;
        y = ny;
    }
    assert!((x - s).abs() < 1e-9 && (y - s).abs() < 1e-9, "attractor ({x}, {y})");
    println!("criterion 06 PASS: crossing G={g:.6}, attractor at 0.6375 = ({x:.12}, {y:.12})");
}

/// Shared sweep for the TN_x chaos criteria.
fn tnx_sweep() -> Vec<salamis::SweepResult64> {
    let mut config = SweepConfig::new(ParamId::TNX, -1.0, 1.0, 2001);
    config.lyapunov = true;
    sweep(&baseline(), &config).unwrap()
}

#[test]
fn criterion_07a_tnx_period_two_window() {
    let results = tnx_sweep();
    let mut counts = std::collections::BTreeMap::new();
    for r in &results {
        let key = if r.diverged {
            "diverged".to_string()
        } else {
            match r.period {
                Some(p) => format!("period {p}"),
                None => "aperiodic".to_string(),
            }
        };
        *counts.entry(key).or_insert(0usize) += 1;
    }
    println!("criterion 07a: TN_x grid outcome counts: {counts:?}");
    let has_period_two = results.iter().any(|r| r.period == Some(2));
    assert!(
        has_period_two,
        "no full-state period-2 value exists on the 2001-point TN_x grid; the map \
         updates x from y and y from x, so each coordinate evolves under the 2-step \
         composition and the first doubling appears as full-state period 4 (the \
         two-branch 'bubbles' are period-4 orbits with two distinct values per \
         coordinate); observed outcomes: {counts:?}"
    );
    println!("criterion 07a PASS");
}

#[test]
fn criterion_07b_tnx_period_four_and_chaos() {
    let results = tnx_sweep();
    let n4 = results.iter().filter(|r| r.period == Some(4)).count();
    assert!(n4 > 0, "expected at least one period-4 value");
    let chaotic: Vec<f64> = results
        .iter()
        .filter(|r| !r.diverged && r.period.is_none() && r.lyapunov.is_some_and(|l| l > 0.01))
        .map(|r| r.value)
        .collect();
    assert!(
        !chaotic.is_empty(),
        "expected at least one aperiodic value with Lyapunov > 0.01"
    );
    assert!(
        chaotic.iter().all(|&v| v < 0.0),
        "chaotic values should sit in the negative TN_x sub-range"
    );
    println!(
        "criterion 07b PASS: {} period-4 values, {} chaotic values (first at TN_x={})",
        n4,
        chaotic.len(),
        chaotic[0]
    );
}

#[test]
fn criterion_07c_g_sweep_period_one_everywhere() {
    let config = SweepConfig::new(ParamId::G, 0.05, 0.95, 181);
    let results = sweep(&baseline(), &config).unwrap();
    let bad: Vec<(f64, Option<usize>, bool)> = results
        .iter()
        .filter(|r| r.period != Some(1))
        .map(|r| (r.value, r.period, r.diverged))
        .collect();
    assert!(
        bad.is_empty(),
        "{} of 181 G values are not period 1: the admissible fixed-point pair is \
         annihilated in a fold near G = 0.72194 (the quartic has no real roots \
         beyond it) and orbits from (0.5, 0.5) escape to infinity for G >= 0.725, \
         so no attractor exists there at all; first failures: {:?}",
        bad.len(),
        &bad[..bad.len().min(4)]
    );
    println!("criterion 07c PASS");
}

#[test]
fn criterion_08_lyapunov_oracle() {
    for (name, expect) in [("salamis_straits", -1.330), ("open_saronic", -0.578)] {
        let params = preset(name).unwrap().params;
        let coeffs = derive_coefficients(&params).unwrap();
        let l = lyapunov_max(&coeffs, State::new(0.5, 0.5), 5000, 500).unwrap();
        assert!(near(l, expect, 2e-2), "{name}: lyapunov {l} vs {expect}");
        // cross-route check: the tangent iteration must equal the log
        // spectral radius computed from the quartic fixed point's eigenvalues
        let reports = analyze(&params, name).unwrap();
        let rho = reports
            .iter()
            .find(|r| r.point.admissible && r.verdict.discrete_scheme.is_stable())
            .unwrap()
            .verdict
            .spectral_radius();
        assert!(near(l, rho.ln(), 1e-6), "{name}: {l} vs ln(rho) = {}", rho.ln());
        println!("criterion 08: {name} lyapunov {l:.6} = ln({rho:.6})");
    }
    println!("criterion 08 PASS");
}

#[test]
fn criterion_09_game_results() {
    // first-injurer, B=2, C=1: pure equilibria exactly {(H,H),(H,D)}, row
    // Hawk strictly dominant
    let fi = hawk_dove_first_injurer(2.0, 1.0).unwrap();
    let pures = pure_nash(&fi);
    let supports: Vec<(Vec<usize>, Vec<usize>)> = pures.iter().map(|e| e.supports()).collect();
    assert_eq!(
        supports,
        vec![(vec![HAWK], vec![HAWK]), (vec![HAWK], vec![DOVE])],
        "first-injurer pure equilibria"
    );
    assert!(dominant_strategies(&fi).contains(&DominanceFact {
        player: Player::Row,
        dominating: HAWK,
        dominated: DOVE,
        strictness: Strictness::Strict,
    }));

    // symmetric, B=1, C=2: (H,D), (D,H) plus the mixed equilibrium at
    // hawk probability B/C = 0.5
    let sym = hawk_dove_symmetric(1.0, 2.0).unwrap();
    let eqs = mixed_nash_support_enum(&sym).unwrap();
    assert_eq!(eqs.len(), 3);
    let mixed: Vec<_> = eqs.iter().filter(|e| e.kind == EquilibriumKind::Mixed).collect();
    assert_eq!(mixed.len(), 1);
    assert!(near(mixed[0].row[HAWK], 0.5, 1e-9));
    assert!(near(mixed[0].col[HAWK], 0.5, 1e-9));

    // independent oracle: brute-force grid scan for 2e-3-equilibria of the
    // symmetric game on a 1e-3 grid of (hawk prob row, hawk prob col)
    let payoff_row = |p: f64, q: f64| -> f64 {
        // A = [[-0.5, 1], [0, 0.5]]
        p * (q * -0.5 + (1.0 - q) * 1.0) + (1.0 - p) * ((1.0 - q) * 0.5)
    };
    let payoff_col = |p: f64, q: f64| payoff_row(q, p); // symmetric game
    let mut grid_hits: Vec<(f64, f64)> = Vec::new();
    let eps = 2e-3;
    for i in 0..=1000 {
        let p = i as f64 / 1000.0;
        for j in 0..=1000 {
            let q = j as f64 / 1000.0;
            let base_r = payoff_row(p, q);
            let base_c = payoff_col(p, q);
            let gain_r = (payoff_row(1.0, q) - base_r).max(payoff_row(0.0, q) - base_r);
            let gain_c = (payoff_col(p, 1.0) - base_c).max(payoff_col(p, 0.0) - base_c);
            if gain_r <= eps && gain_c <= eps {
                grid_hits.push((p, q));
            }
        }
    }
    assert!(!grid_hits.is_empty());
    // every enumerated equilibrium has a grid hit next to it, and every grid
    // hit clusters around an enumerated equilibrium
    let locations: Vec<(f64, f64)> = eqs.iter().map(|e| (e.row[HAWK], e.col[HAWK])).collect();
    for &(p, q) in &locations {
        assert!(
            grid_hits.iter().any(|&(gp, gq)| near(gp, p, 2e-3) && near(gq, q, 2e-3)),
            "no grid hit near enumerated equilibrium ({p}, {q})"
        );
    }
    for &(gp, gq) in &grid_hits {
        assert!(
            locations.iter().any(|&(p, q)| near(gp, p, 1e-2) && near(gq, q, 1e-2)),
            "grid hit ({gp}, {gq}) far from every enumerated equilibrium"
        );
    }
    println!(
        "criterion 09 PASS: first-injurer pures {supports:?}, symmetric eqs at {locations:?}, {} grid hits",
        grid_hits.len()
    );
}

#[test]
fn criterion_10a_role_swap_symmetry() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a1a_0001);
    for trial in 0..1000 {
        // half the draws in the nominal box, half wider
        let span: (f64, f64) = if trial % 2 == 0 { (0.0, 1.0) } else { (-1.0, 2.0) };
        let draw = |rng: &mut ChaCha8Rng| rng.gen_range(span.0..span.1);
        let p = ModelParams {
            p_x: draw(&mut rng),
            p_y: draw(&mut rng),
            tn_x: draw(&mut rng),
            tn_y: draw(&mut rng),
            g: draw(&mut rng),
            d_x: draw(&mut rng),
            d_y: draw(&mut rng),
            e_x: draw(&mut rng),
            e_y: draw(&mut rng),
        };
        let s = State::new(rng.gen_range(-2.0..3.0), rng.gen_range(-2.0..3.0));
        let c = derive_coefficients(&p).unwrap();
        let cs = derive_coefficients(&p.swapped()).unwrap();
        let a = c.apply(s).swapped();
        let b = cs.apply(s.swapped());
        let tol = 1e-12 * a.x.abs().max(a.y.abs()).max(1.0);
        assert!(
            (a.x - b.x).abs() <= tol && (a.y - b.y).abs() <= tol,
            "trial {trial}: swap(step(p,s)) = ({}, {}) vs step(swap p, swap s) = ({}, {})",
            a.x, a.y, b.x, b.y
        );
    }
    println!("criterion 10a PASS: role-swap symmetry on 1000 draws");
}

#[test]
fn criterion_10b_quartic_vs_newton_agreement() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a1a_0002);
    let mut total_roots = 0usize;
    for trial in 0..500 {
        let mut f = || rng.gen_range(0.0..1.0);
        let p = ModelParams {
            p_x: f(),
            p_y: f(),
            tn_x: f(),
            tn_y: f(),
            g: f(),
            d_x: f(),
            d_y: f(),
            e_x: f(),
            e_y: f(),
        };
        // fixed_points cross-checks the quartic route against the Newton
        // multistart internally and errors on any disagreement beyond 1e-6
        let pts = fixed_points(&p, SearchBox::default())
            .unwrap_or_else(|e| panic!("trial {trial}: {e}"));
        total_roots += pts.len();

        // independent oracle: raw sign-change scan of the quartic built from
        // first principles, no shared code with the library root finder
        let ax = p.p_x + p.tn_x;
        let cx = 4.0 * p.g * (p.d_y + p.e_x);
        let ay = p.p_y + p.tn_y;
        let cy = 4.0 * (1.0 - p.g) * (p.d_x + p.e_y);
        let poly = |x: f64| {
            let u = x - x * x;
            let yy = ay - cy * u;
            ax - cx * yy * (1.0 - yy) - x
        };
        let mut scan_roots = Vec::new();
        let n = 40_000;
        let mut prev = -2.0;
        let mut fprev = poly(prev);
        for i in 1..=n {
            let x = -2.0 + 5.0 * i as f64 / n as f64;
            let fx = poly(x);
            if fprev == 0.0 || (fprev < 0.0) != (fx < 0.0) {
                let (mut lo, mut hi) = (prev, x);
                let mut flo = fprev;
                for _ in 0..100 {
                    let mid = 0.5 * (lo + hi);
                    let fm = poly(mid);
                    if (fm < 0.0) == (flo < 0.0) {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                scan_roots.push(0.5 * (lo + hi));
            }
            prev = x;
            fprev = fx;
        }
        // every scan root inside the box must appear among the library's
        // fixed points (the scan cannot see tangent double roots, so it may
        // find a subset)
        for r in scan_roots {
            let y = ay - cy * r * (1.0 - r);
            if !(-2.0..=3.0).contains(&y) {
                continue;
            }
            assert!(
                pts.iter().any(|fp| (fp.location.x - r).abs() < 1e-6),
                "trial {trial}: scan root x={r} missing from fixed_points"
            );
        }
    }
    println!("criterion 10b PASS: dual-route agreement on 500 draws ({total_roots} roots total)");
}

#[test]
fn criterion_10c_jacobian_vs_finite_differences() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a1a_0003);
    let c = derive_coefficients(&baseline()).unwrap();
    let h = 1e-5;
    for _ in 0..100 {
        let s = State::new(rng.gen_range(-1.0..2.0), rng.gen_range(-1.0..2.0));
        let j = jacobian_at(&c, s);
        // central differences of the raw map, written out independently
        let f = |x: f64, y: f64| {
            (
                c.a_x - c.c_x * y * (1.0 - y),
                c.a_y - c.c_y * x * (1.0 - x),
            )
        };
        let fd11 = (f(s.x + h, s.y).0 - f(s.x - h, s.y).0) / (2.0 * h);
        let fd12 = (f(s.x, s.y + h).0 - f(s.x, s.y - h).0) / (2.0 * h);
        let fd21 = (f(s.x + h, s.y).1 - f(s.x - h, s.y).1) / (2.0 * h);
        let fd22 = (f(s.x, s.y + h).1 - f(s.x, s.y - h).1) / (2.0 * h);
        let scale = j.m12.abs().max(j.m21.abs()).max(1.0);
        for (an, fd) in [(j.m11, fd11), (j.m12, fd12), (j.m21, fd21), (j.m22, fd22)] {
            assert!(
                (an - fd).abs() / scale < 1e-6,
                "state ({}, {}): analytic {an} vs fd {fd}",
                s.x,
                s.y
            );
        }
    }
    println!("criterion 10c PASS: Jacobian matches central differences at 100 states");
}

#[test]
fn criterion_10d_equilibrium_affine_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a1a_0004);
    let support_sets = |game: &salamis::BimatrixGame64| -> Vec<(Vec<usize>, Vec<usize>)> {
        let mut v: Vec<_> = mixed_nash_support_enum(game)
            .unwrap()
            .iter()
            .map(|e| e.supports())
            .collect();
        v.sort();
        v
    };
    for trial in 0..200 {
        let mut cell = || rng.gen_range(-5.0..5.0);
        let a = vec![vec![cell(), cell()], vec![cell(), cell()]];
        let b = vec![vec![cell(), cell()], vec![cell(), cell()]];
        let labels = || vec!["s0".to_string(), "s1".to_string()];
        let game =
            salamis::game::BimatrixGame::new(a.clone(), b.clone(), labels(), labels()).unwrap();
        let scale = rng.gen_range(0.1..5.0);
        let shift = rng.gen_range(-3.0..3.0);
        let xf = |t: &Vec<Vec<f64>>| -> Vec<Vec<f64>> {
            t.iter()
                .map(|r| r.iter().map(|&v| scale * v + shift).collect())
                .collect()
        };
        let game2 =
            salamis::game::BimatrixGame::new(xf(&a), xf(&b), labels(), labels()).unwrap();
        assert_eq!(
            support_sets(&game),
            support_sets(&game2),
            "trial {trial}: supports changed under affine map (scale {scale}, shift {shift})"
        );
    }
    println!("criterion 10d PASS: equilibrium supports invariant on 200 games");
}

#[test]
fn criterion_10e_scenario_round_trip() {
    for name in salamis::scenario::PRESET_NAMES {
        let s = preset(name).unwrap();
        assert_eq!(parse_scenario(&s.to_json()).unwrap(), s, "preset {name}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a1a_0005);
    for trial in 0..200 {
        let mut f = || rng.gen_range(-1.0..2.0);
        let params = ModelParams {
            p_x: f(),
            p_y: f(),
            tn_x: f(),
            tn_y: f(),
            g: f(),
            d_x: f(),
            d_y: f(),
            e_x: f(),
            e_y: f(),
        };
        let game = if rng.gen_bool(0.5) {
            Some(GameBlock {
                variant: if rng.gen_bool(0.5) {
                    GameVariant::Symmetric
                } else {
                    GameVariant::FirstInjurer
                },
                benefit: rng.gen_range(0.0..4.0),
                cost: rng.gen_range(0.0..4.0),
            })
        } else {
            None
        };
        let s = Scenario {
            name: format!("random_{trial}"),
            params,
            simulate: SimulateBlock {
                initial: [rng.gen_range(-1.0..2.0), rng.gen_range(-1.0..2.0)],
                steps: rng.gen_range(0..500),
                clamp: rng.gen_bool(0.25),
            },
            game,
        };
        let back = parse_scenario(&s.to_json()).unwrap();
        assert_eq!(back, s, "trial {trial} round trip");
    }
    println!("criterion 10e PASS: presets and 200 random scenarios round-trip");
}

#[test]
fn criterion_10f_csv_bit_identical_reruns() {
    let dir = tempfile::tempdir().unwrap();
    let bin = env!("CARGO_BIN_EXE_salamis");
    let run = |args: &[&str]| {
        let out = std::process::Command::new(bin)
            .args(args)
            .current_dir(dir.path())
            .output()
            .expect("binary runs");
        assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    };
    let read = |name: &str| std::fs::read(dir.path().join(name)).unwrap();

    run(&["simulate", "--preset", "salamis_straits", "--out", "a.csv"]);
    run(&["simulate", "--preset", "salamis_straits", "--out", "b.csv"]);
    assert_eq!(read("a.csv"), read("b.csv"));

    let sweep_args = [
        "sweep", "--preset", "salamis_straits", "--param", "TN_x", "--from", "-0.3", "--to",
        "0.3", "--points", "61", "--lyapunov",
    ];
    run(&[&sweep_args[..], &["--out", "s1"]].concat());
    run(&[&sweep_args[..], &["--out", "s2"]].concat());
    assert_eq!(read("s1_samples.csv"), read("s2_samples.csv"));
    assert_eq!(read("s1_summary.csv"), read("s2_summary.csv"));
    assert!(!read("s1_samples.csv").is_empty());
    println!("criterion 10f PASS: simulate and sweep CSVs identical across reruns");
}
