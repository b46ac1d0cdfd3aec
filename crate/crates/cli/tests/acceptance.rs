//! Acceptance gate: one test per acceptance criterion, each printing a
//! single `criterion NN: PASS/FAIL` line (run with `--nocapture` to see
//! the lines as they complete).
//!
//! Exact criteria use hand-derived or reference-implementation oracles.
//! Statistical criteria run fixed, consecutively numbered seed sets
//! chosen up front; thresholds and runtime caps are stated inline.
//! Tests serialize on a mutex so the timed criteria are not distorted by
//! concurrent load.

use std::fs;
use std::path::PathBuf;
use std::process::Command;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use citylife_core::{
    convergence_sweep, ring_experiment, run_trial, trajectory_run, BoundaryPolicy, GridState,
    RingGeometry, RingSchedule, SeedStream, SimConfig, SweepSpec,
};

static SERIAL: Mutex<()> = Mutex::new(());

fn lock() -> std::sync::MutexGuard<'static, ()> {
    SERIAL
        .lock()
        .unwrap_or_else(|poisoned| poisoned.into_inner())
}

fn report(num: u32, pass: bool, started: Instant, detail: &str) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    let line = format!(
        "criterion {num:02}: {verdict} ({:.2}s) {detail}",
        started.elapsed().as_secs_f64()
    );
    println!("{line}");
    assert!(pass, "{line}");
}

/// 500 random grids, sizes 1x1 through 64x64, p in {0.1, ..., 0.9},
/// stepped under both boundary policies: the packed kernel must match
/// the per-cell reference bit-exactly. Cap: 10 s.
#[test]
fn criterion_01_kernel_matches_reference_on_random_grids() {
    let _g = lock();
    let started = Instant::now();
    let mut stream = SeedStream::new(0xACCE5501);
    let mut mismatches = 0usize;
    for i in 0..500 {
        let w = 1 + (stream.next_u64() % 64) as usize;
        let h = 1 + (stream.next_u64() % 64) as usize;
        let p = f64::from((i % 9) as u32 + 1) / 10.0;
        let grid = citylife_core::bernoulli_seed(w, h, p, &mut stream).unwrap();
        for boundary in [BoundaryPolicy::Dead, BoundaryPolicy::Toroidal] {
            if grid.step(boundary) != grid.step_reference(boundary) {
                mismatches += 1;
            }
        }
    }
    let in_time = started.elapsed() < Duration::from_secs(10);
    report(
        1,
        mismatches == 0 && in_time,
        started,
        &format!("500 random grids, both boundaries: {mismatches} mismatches"),
    );
}

/// Block still life (100 steps), blinker period 2 (100 steps), glider on
/// a 16x16 torus translated by (+1,+1) every 4 steps (64 steps). Exact.
#[test]
fn criterion_02_known_patterns_evolve_exactly() {
    let _g = lock();
    let started = Instant::now();
    let mut ok = true;

    let block =
        GridState::from_fn(4, 4, |r, c| (1..=2).contains(&r) && (1..=2).contains(&c)).unwrap();
    let mut s = block.clone();
    for _ in 0..100 {
        s = s.step(BoundaryPolicy::Dead);
        ok &= s == block;
    }

    let horizontal = GridState::from_fn(5, 5, |r, c| r == 2 && (1..=3).contains(&c)).unwrap();
    let vertical = GridState::from_fn(5, 5, |r, c| c == 2 && (1..=3).contains(&r)).unwrap();
    let mut s = horizontal.clone();
    for t in 1..=100 {
        s = s.step(BoundaryPolicy::Dead);
        let expected = if t % 2 == 1 { &vertical } else { &horizontal };
        ok &= &s == expected;
    }

    let cells = [(0usize, 1usize), (1, 2), (2, 0), (2, 1), (2, 2)];
    let glider = GridState::from_fn(16, 16, |r, c| {
        cells.iter().any(|&(gr, gc)| (gr + 4, gc + 4) == (r, c))
    })
    .unwrap();
    let mut s = glider.clone();
    for step in 1..=64 {
        s = s.step(BoundaryPolicy::Toroidal);
        if step % 4 == 0 {
            let k = step / 4;
            let expected = GridState::from_fn(16, 16, |r, c| {
                glider.is_alive((r + 16 - k % 16) % 16, (c + 16 - k % 16) % 16)
            })
            .unwrap();
            ok &= s == expected;
        }
    }

    report(2, ok, started, "block, blinker, and torus glider exact");
}

/// All-alive 10x10 under the dead boundary converges at exactly step 2
/// (corners survive t1, nothing survives t2), and a p=1.0 sweep of 15
/// trials reports mean exactly 2.0.
#[test]
fn criterion_03_deterministic_convergence_oracle() {
    let _g = lock();
    let started = Instant::now();

    let all_alive = GridState::from_fn(10, 10, |_, _| true).unwrap();
    let rec = run_trial(&all_alive, &SimConfig::default()).unwrap();
    let single_ok = rec.converged
        && rec.convergence_step == Some(2)
        && rec.alive_series == vec![1.0, 0.04, 0.0, 0.0];

    let spec = SweepSpec {
        probabilities: vec![1.0],
        ..SweepSpec::new(7777)
    };
    let summary = convergence_sweep(&spec).unwrap();
    let sweep_ok = summary.per_p[0].converged_count == 15
        && summary.per_p[0].mean_convergence_steps == Some(2.0);

    report(
        3,
        single_ok && sweep_ok,
        started,
        &format!(
            "convergence_step={:?}, sweep mean={:?}",
            rec.convergence_step, summary.per_p[0].mean_convergence_steps
        ),
    );
}

/// Mid-range seeding takes longer to settle: mean convergence steps at
/// p=0.5 strictly above p=0.1 and p=1.0 for at least 9 of 10 base
/// seeds. 10x10, 15 trials per p, cap 1000. Cap: 30 s.
#[test]
fn criterion_04_midrange_p_converges_slowest() {
    let _g = lock();
    let started = Instant::now();
    let base_seeds: Vec<u64> = (1001..=1010).collect();
    let mut holds = 0usize;
    let mut details = Vec::new();
    for &seed in &base_seeds {
        let summary = convergence_sweep(&SweepSpec::new(seed)).unwrap();
        let mean_at = |p: f64| {
            summary
                .per_p
                .iter()
                .find(|s| (s.p - p).abs() < 1e-9)
                .and_then(|s| s.mean_convergence_steps)
        };
        let (low, mid, high) = (mean_at(0.1), mean_at(0.5), mean_at(1.0));
        let ordered = match (low, mid, high) {
            (Some(l), Some(m), Some(h)) => m > l && m > h,
            _ => false,
        };
        if ordered {
            holds += 1;
        }
        details.push(format!(
            "{seed}:{}",
            if ordered { "ok" } else { "inverted" }
        ));
    }
    let in_time = started.elapsed() < Duration::from_secs(30);
    report(
        4,
        holds >= 9 && in_time,
        started,
        &format!("ordering held for {holds}/10 seeds [{}]", details.join(" ")),
    );
}

/// Dense seeding dies almost immediately: at p=0.85 on 100x100, at
/// least 90% of 15 seeded trials converge within 10 steps. Cap: 60 s.
///
/// Known red. The measured fast-convergence rate is ~65% (150
/// independent seeds, both boundary policies): about a third of trials
/// strand a small period-2 oscillator in the debris, and convergence
/// here means an exact fixed point, which an oscillator never reaches.
/// The threshold stays as pinned instead of being tuned to fit; see
/// dense_debris_oscillates_with_period_two in the core tests for the
/// mechanism.
#[test]
fn criterion_05_dense_seeding_converges_fast() {
    let _g = lock();
    let started = Instant::now();
    let cfg = SimConfig::default();
    let mut fast = 0usize;
    for seed in 2001..=2015u64 {
        let rec = trajectory_run(100, 100, 0.85, &cfg, seed).unwrap();
        if rec.converged && rec.convergence_step.unwrap() <= 10 {
            fast += 1;
        }
    }
    let in_time = started.elapsed() < Duration::from_secs(60);
    report(
        5,
        fast >= 14 && in_time,
        started,
        &format!("{fast}/15 trials converged within 10 steps"),
    );
}

/// Balanced seeding keeps simmering: at p=0.5 on 100x100 with cap 1000,
/// at least 90% of 15 trials never converge, and every trial's mean
/// alive fraction over t in [500, 1000] lies in [0.02, 0.10].
/// Cap: 180 s.
#[test]
fn criterion_06_balanced_seeding_stays_active() {
    let _g = lock();
    let started = Instant::now();
    let cfg = SimConfig::default();
    let mut non_converged = 0usize;
    let mut window_ok = 0usize;
    let mut means = Vec::new();
    for seed in 3001..=3015u64 {
        let rec = trajectory_run(100, 100, 0.5, &cfg, seed).unwrap();
        if !rec.converged {
            non_converged += 1;
        }
        // converged runs hold their fixed point, so index past the end
        // reads as the final value
        let at = |t: usize| {
            *rec.alive_series
                .get(t)
                .unwrap_or_else(|| rec.alive_series.last().unwrap())
        };
        let mean: f64 = (500..=1000).map(at).sum::<f64>() / 501.0;
        if (0.02..=0.10).contains(&mean) {
            window_ok += 1;
        }
        means.push(format!("{mean:.4}"));
    }
    let in_time = started.elapsed() < Duration::from_secs(180);
    report(
        6,
        non_converged >= 14 && window_ok == 15 && in_time,
        started,
        &format!(
            "{non_converged}/15 non-converged, {window_ok}/15 window means in range [{}]",
            means.join(" ")
        ),
    );
}

/// The ring gradient flattens out: geom(11,10) with the default
/// schedule, cap 1000, 10 seeds. A seed passes when its final overall
/// fraction lies in [0.02, 0.09] and its ring spread (max - min
/// fraction) is at most 0.06; at least 8 of the 10 seeds must pass.
/// Cap: 180 s.
#[test]
fn criterion_07_ring_gradient_flattens() {
    let _g = lock();
    let started = Instant::now();
    let geom = RingGeometry::new(11, 10).unwrap();
    let sched = RingSchedule::default_gradient(&geom).unwrap();
    let cfg = SimConfig::default();
    let mut passing = 0usize;
    let mut details = Vec::new();
    for seed in 4001..=4010u64 {
        let rec = ring_experiment(&geom, &sched, &cfg, seed).unwrap();
        let overall = *rec.trial.alive_series.last().unwrap();
        let max = rec
            .final_ring_fractions
            .iter()
            .cloned()
            .fold(f64::MIN, f64::max);
        let min = rec
            .final_ring_fractions
            .iter()
            .cloned()
            .fold(f64::MAX, f64::min);
        let spread = max - min;
        let seed_ok = (0.02..=0.09).contains(&overall) && spread <= 0.06;
        if seed_ok {
            passing += 1;
        }
        details.push(format!(
            "{seed}:{overall:.4}/{spread:.4}{}",
            if seed_ok { "" } else { "!" }
        ));
    }
    let in_time = started.elapsed() < Duration::from_secs(180);
    report(
        7,
        passing >= 8 && in_time,
        started,
        &format!(
            "{passing}/10 seeds within overall [0.02,0.09] and spread <= 0.06 [{}]",
            details.join(" ")
        ),
    );
}

/// The initial gradient is statistically faithful: at t=0 each ring's
/// alive count should sit within 3 sigma of Binomial(n_k, P_k). Across
/// 20 seeds x 6 rings, fail only when 3 or more checks violate.
#[test]
fn criterion_08_initial_ring_gradient_is_binomial() {
    let _g = lock();
    let started = Instant::now();
    let geom = RingGeometry::new(11, 10).unwrap();
    let sched = RingSchedule::default_gradient(&geom).unwrap();
    let sizes: Vec<usize> = geom.ring_masks().iter().map(|m| m.len()).collect();
    let cfg = SimConfig {
        max_steps: 0,
        ..SimConfig::default()
    };
    let mut violations = 0usize;
    for seed in 5001..=5020u64 {
        let rec = ring_experiment(&geom, &sched, &cfg, seed).unwrap();
        for (k, &frac) in rec.final_ring_fractions.iter().enumerate() {
            let n = sizes[k] as f64;
            let p = sched.probs()[k];
            let observed = frac * n;
            let sigma = (n * p * (1.0 - p)).sqrt();
            if (observed - n * p).abs() > 3.0 * sigma {
                violations += 1;
            }
        }
    }
    report(
        8,
        violations < 3,
        started,
        &format!("{violations} of 120 ring checks outside 3 sigma"),
    );
}

/// Overpopulation collapse: p=0.9 on 100x100 drops below 0.15 alive by
/// t=2 in every one of 15 seeded trials.
#[test]
fn criterion_09_overpopulation_collapses_by_t2() {
    let _g = lock();
    let started = Instant::now();
    let cfg = SimConfig {
        max_steps: 5,
        ..SimConfig::default()
    };
    let mut ok = 0usize;
    let mut worst: f64 = 0.0;
    for seed in 6001..=6015u64 {
        let rec = trajectory_run(100, 100, 0.9, &cfg, seed).unwrap();
        let at2 = *rec
            .alive_series
            .get(2)
            .unwrap_or_else(|| rec.alive_series.last().unwrap());
        worst = worst.max(at2);
        if at2 < 0.15 {
            ok += 1;
        }
    }
    report(
        9,
        ok == 15,
        started,
        &format!("{ok}/15 trials below 0.15 at t=2 (worst {worst:.4})"),
    );
}

/// End-to-end determinism through the binary: every subcommand with a
/// fixed seed writes byte-identical files across repeated runs, and the
/// sweep is byte-identical between parallel and forced-serial execution.
#[test]
fn criterion_10_cli_outputs_are_byte_identical() {
    let _g = lock();
    let started = Instant::now();
    let dir = std::env::temp_dir().join(format!("citylife-acceptance-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = |name: &str| dir.join(name);
    let bin = env!("CARGO_BIN_EXE_citylife");

    let run = |args: &[&str], serial: bool| {
        let mut cmd = Command::new(bin);
        cmd.args(args);
        if serial {
            cmd.env("CITYLIFE_SERIAL", "1");
        }
        let out = cmd.output().unwrap();
        assert!(
            out.status.success(),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    };
    let read = |p: &PathBuf| fs::read(p).unwrap();
    let mut ok = true;

    for round in ["a", "b"] {
        run(
            &[
                "run",
                "--width",
                "50",
                "--height",
                "50",
                "--p",
                "0.5",
                "--seed",
                "424242",
                "--steps",
                "300",
                "--boundary",
                "torus",
                "--out-csv",
                path(&format!("run-{round}.csv")).to_str().unwrap(),
                "--snapshot-at",
                "300",
                "--out-pgm",
                path(&format!("run-{round}.pgm")).to_str().unwrap(),
            ],
            false,
        );
        run(
            &[
                "sweep",
                "--trials",
                "5",
                "--steps",
                "300",
                "--seed",
                "424242",
                "--out-json",
                path(&format!("sweep-{round}.json")).to_str().unwrap(),
            ],
            round == "b",
        );
        run(
            &[
                "rings",
                "--probs",
                "0.9,0.9,0.8,0.6,0.4,0.2",
                "--steps",
                "200",
                "--seed",
                "424242",
                "--out-csv",
                path(&format!("rings-{round}.csv")).to_str().unwrap(),
                "--out-pgm-final",
                path(&format!("rings-{round}.pgm")).to_str().unwrap(),
            ],
            false,
        );
        let pattern = path("pattern.txt");
        fs::write(&pattern, ".O.\n.O.\n.O.\n").unwrap();
        run(
            &[
                "render",
                "--in-pattern",
                pattern.to_str().unwrap(),
                "--out-pgm",
                path(&format!("render-{round}.pgm")).to_str().unwrap(),
                "--scale",
                "3",
            ],
            false,
        );
    }

    for name in [
        "run.csv",
        "run.pgm",
        "sweep.json",
        "rings.csv",
        "rings.pgm",
        "render.pgm",
    ] {
        let (stem, ext) = name.split_once('.').unwrap();
        let a = read(&path(&format!("{stem}-a.{ext}")));
        let b = read(&path(&format!("{stem}-b.{ext}")));
        if a != b {
            ok = false;
            println!("criterion 10: byte mismatch in {name}");
        }
    }

    report(
        10,
        ok,
        started,
        "run/sweep/rings/render byte-identical (sweep incl. serial vs parallel)",
    );
}

/// Packed kernel speed: at least 5x the per-cell reference on a
/// 1024x1024 torus, measured per step over 1000 packed steps and 25
/// reference steps. The 5x ratio gates; the 2 s absolute figure for the
/// 1000 packed steps is reported as information only.
#[test]
fn criterion_11_packed_kernel_speedup() {
    let _g = lock();
    let started = Instant::now();
    let mut stream = SeedStream::new(0xBE9C);
    let grid = citylife_core::bernoulli_seed(1024, 1024, 0.5, &mut stream).unwrap();

    let t0 = Instant::now();
    let mut s = grid.clone();
    for _ in 0..1000 {
        s = s.step(BoundaryPolicy::Toroidal);
    }
    std::hint::black_box(s.alive_count());
    let packed_total = t0.elapsed();
    let packed_per_step = packed_total.as_secs_f64() / 1000.0;

    let t0 = Instant::now();
    let mut s = grid.clone();
    for _ in 0..25 {
        s = s.step_reference(BoundaryPolicy::Toroidal);
    }
    std::hint::black_box(s.alive_count());
    let reference_per_step = t0.elapsed().as_secs_f64() / 25.0;

    let ratio = reference_per_step / packed_per_step;
    report(
        11,
        ratio >= 5.0,
        started,
        &format!(
            "speedup {ratio:.0}x; 1000 packed steps took {:.3}s (informational target <= 2s)",
            packed_total.as_secs_f64()
        ),
    );
}
