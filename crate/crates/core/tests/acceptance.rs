//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero if any fail.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_6, PI};
use std::process::{Command, ExitCode};
use std::time::Instant;

use bivalent::cascade::{self, CascadeSpec, OmegaLimit};
use bivalent::entanglement::{bell_chsh_scan, epr_run, EprSpec};
use bivalent::experiment::default_epr_grid;
use bivalent::measurement::{born_estimate, flip_fraction, uncertainty_mc, uncertainty_trig};
use bivalent::oracle::{prob_up, singlet_correlation, state_from_point};
use bivalent::sphere::grid_overlap_count;
use bivalent::{latitude_stats, BitSequence, DyadicExponent, GridSpec, SpherePoint, ThresholdSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict { pass, detail: detail.into() }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn operator_algebra() -> Verdict {
    let start = Instant::now();
    let mut r = rng(1);
    let pairs: Vec<(DyadicExponent, DyadicExponent)> = (0..50)
        .map(|_| {
            let mut q = || DyadicExponent::from_signed(r.gen_range(-4096..4096), r.gen_range(0..=11)).unwrap();
            (q(), q())
        })
        .collect();
    let four = DyadicExponent::integer(4);
    let mut failures = 0usize;
    for k in 0..1000 {
        let s = BitSequence::random(1 << 12, &mut rng(1000 + k)).unwrap();
        let i = s.apply_i().unwrap();
        failures += (i.apply_i().unwrap() != s.negate()) as usize;
        let mut roots: Vec<BitSequence> = (0..=8).map(|n| s.apply_i_root(n).unwrap()).collect();
        for n in 1..=8 {
            let twice = roots[n].apply_i_root(n as u32).unwrap();
            failures += (twice != roots[n - 1]) as usize;
        }
        roots.clear();
        for &(q1, q2) in &pairs {
            let lhs = s.apply_i_power(q2).unwrap().apply_i_power(q1).unwrap();
            failures += (lhs != s.apply_i_power(q1 + q2).unwrap()) as usize;
        }
        failures += (s.apply_i_power(four).unwrap() != s) as usize;
        failures += ((1..4).try_fold(i, |acc, _| acc.apply_i()).unwrap() != s) as usize;
    }
    let secs = start.elapsed().as_secs_f64();
    verdict(failures == 0 && secs < 10.0, format!("{failures} failures, {secs:.2} s"))
}

fn worked_example() -> Verdict {
    let mut failures = 0;
    for mask in 0u32..256 {
        let a: Vec<i8> = (0..8).map(|i| if mask >> i & 1 == 1 { 1 } else { -1 }).collect();
        let got = BitSequence::from_signs(&a).unwrap().apply_i_root(1).unwrap().to_signs();
        failures += (got != [-a[3], a[2], a[0], a[1], -a[7], a[6], a[4], a[5]]) as usize;
    }
    verdict(failures == 0, format!("{failures}/256 mismatches"))
}

fn sensitivity() -> Verdict {
    let mut exact_failures = 0;
    for k in 0..500 {
        let s = BitSequence::random(1 << 11, &mut rng(5000 + k)).unwrap();
        for n in 0..=10u32 {
            let first = s.apply_i_root(n).unwrap().get(0);
            exact_failures += (first != -s.get((2usize << n) - 1)) as usize;
        }
    }
    let mut worst = 0.0f64;
    for n in 0..=10 {
        let r = flip_fraction(n, 10_000, 300 + n as u64).unwrap();
        worst = worst.max((r.estimate - 0.5).abs());
    }
    verdict(
        exact_failures == 0 && worst <= 0.02,
        format!("{exact_failures} first-element failures, max |flip - 0.5| = {worst:.4}"),
    )
}

fn born_rule() -> Verdict {
    let start = Instant::now();
    let thetas = [-FRAC_PI_2, -FRAC_PI_3, 0.0, FRAC_PI_6, FRAC_PI_4, FRAC_PI_2];
    let mut pass = true;
    let mut worst = 0.0f64;
    for (k, &theta) in thetas.iter().enumerate() {
        let r = born_estimate(theta, 100_000, 400 + k as u64).unwrap();
        let exact = (1.0 + theta.sin()) / 2.0;
        let oracle = prob_up(&state_from_point(&SpherePoint::new(theta, 0.0).unwrap())).unwrap();
        pass &= r.agrees_with(exact, 4.0) && (r.estimate - oracle).abs() <= 4.0 * r.std_error + 1e-12;
        if r.std_error > 0.0 {
            worst = worst.max((r.estimate - exact).abs() / r.std_error);
        } else {
            pass &= r.estimate == exact;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    verdict(pass && secs < 60.0, format!("max deviation {worst:.2} se, {secs:.2} s"))
}

fn latitude_statistics() -> Verdict {
    let s = BitSequence::random(1_000_000, &mut rng(6)).unwrap();
    let mut pass = true;
    let (mut worst_mean, mut worst_std) = (0.0f64, 0.0f64);
    for theta in [-FRAC_PI_2, -1.0, -FRAC_PI_6, 0.0, 0.5, FRAC_PI_3, FRAC_PI_2] {
        let st = latitude_stats(&ThresholdSpec::with_default_window(theta).unwrap(), &s).unwrap();
        let sigma = theta.cos().abs() / (st.count as f64).sqrt();
        let dev = (st.mean - theta.sin()).abs();
        pass &= dev <= 4.0 * sigma + 1e-12;
        if sigma > 1e-12 {
            worst_mean = worst_mean.max(dev / sigma);
        }
        let std_dev = (st.std_dev() - theta.cos().abs()).abs();
        pass &= std_dev <= 0.01;
        worst_std = worst_std.max(std_dev);
    }
    verdict(pass, format!("max mean deviation {worst_mean:.2} sigma, max std deviation {worst_std:.5}"))
}

fn uncertainty_identity() -> Verdict {
    let pairs = [(0.4, 1.0), (1.0, 0.6), (FRAC_PI_2, 2.0), (2.2, 4.0), (0.8, 5.5)];
    let (mut worst_mc, mut worst_trig) = (0.0f64, 0.0f64);
    for (k, &(colat, lon)) in pairs.iter().enumerate() {
        let u = uncertainty_mc(colat, lon, 1_000_000, 600 + k as u64).unwrap();
        worst_mc = worst_mc.max(u.discrepancy());
        // The equatorial pole at longitude pi/2 is (0, 1, 0).
        let y = colat.sin() * lon.sin();
        let t = uncertainty_trig(colat, lon).unwrap();
        worst_trig = worst_trig.max((t.cos_colat - y).abs()).max((t.colat.cos() - y).abs());
    }
    verdict(
        worst_mc <= 0.01 && worst_trig <= 1e-12,
        format!("max MC discrepancy {worst_mc:.4}, max trig error {worst_trig:.1e}"),
    )
}

fn epr_correlation() -> Verdict {
    let mut pass = true;
    let mut worst = 0.0f64;
    let grid = default_epr_grid();
    for (k, &d) in grid.iter().enumerate() {
        let r = epr_run(&EprSpec::new(d, 100_000, 700 + k as u64).unwrap()).unwrap().correlation;
        let expected = singlet_correlation(d).unwrap();
        pass &= r.agrees_with(expected, 4.0);
        if r.std_error > 0.0 {
            worst = worst.max((r.estimate - expected).abs() / r.std_error);
        }
    }
    let endpoints = [(0.0, -1.0), (PI, 1.0)].into_iter().all(|(d, c)| {
        let r = epr_run(&EprSpec::new(d, 100_000, 799).unwrap()).unwrap().correlation;
        r.estimate == c && r.std_error == 0.0
    });
    let chsh = bell_chsh_scan([0.0, FRAC_PI_4, FRAC_PI_2, 3.0 * FRAC_PI_4], 1_000_000, 800).unwrap();
    let chsh_ok = (chsh.estimate - 2.0 * 2f64.sqrt()).abs() <= 0.02 && chsh.estimate > 2.0;
    verdict(
        pass && endpoints && chsh_ok,
        format!(
            "{} points, max deviation {worst:.2} se, endpoints exact: {endpoints}, CHSH {:.4}",
            grid.len(),
            chsh.estimate
        ),
    )
}

/// Independent count: dot product of each grid point with the tilted pole.
fn brute_force_overlap(big_n: u32, tilt: f64) -> usize {
    let pole = [tilt.sin(), 0.0, tilt.cos()];
    let step = PI / (2.0 * big_n as f64);
    let circles: Vec<f64> = (-(big_n as i64)..=big_n as i64).map(|m| (m as f64 * step).sin()).collect();
    let mut hits = 0;
    for n in 1..=big_n {
        let lon = 2.0 * PI * n as f64 / big_n as f64;
        for m in -(big_n as i64)..=big_n as i64 {
            let lat = m as f64 * step;
            let p = [lat.cos() * lon.cos(), lat.cos() * lon.sin(), lat.sin()];
            let dot: f64 = p.iter().zip(pole).map(|(a, b)| a * b).sum();
            hits += circles.iter().any(|c| (c - dot).abs() <= 1e-12) as usize;
        }
    }
    hits
}

fn grid_rotation() -> Verdict {
    let mut pass = true;
    let mut max_count = 0;
    for big_n in [4u32, 8, 16] {
        let grid = GridSpec::new(big_n).unwrap();
        for tilt in [0.3, 0.7731, 1.1, 1.9, 2.6] {
            let c = grid_overlap_count(&grid, tilt);
            pass &= c <= 2 && c == brute_force_overlap(big_n, tilt);
            max_count = max_count.max(c);
        }
        pass &= grid_overlap_count(&grid, 0.0) == grid.point_count();
        pass &= brute_force_overlap(big_n, 0.0) == grid.point_count();
    }
    verdict(pass, format!("max generic count {max_count}, identity keeps all points"))
}

fn cascade_convergence() -> Verdict {
    let mut pass = true;
    let mut worst = 0.0f64;
    for k_l in [1.0, 2.0, 0.5] {
        let spec = CascadeSpec::new(-5.0 / 3.0, k_l, 30).unwrap();
        let tau = cascade::turnover_time(k_l, -5.0 / 3.0).unwrap();
        let dev = (cascade::omega_sum(&spec) - 2.7024 * tau).abs() / tau;
        worst = worst.max(dev);
        pass &= dev <= 1e-3;
        let limit = cascade::omega_limit(&spec).finite().unwrap();
        for n in 1..=30 {
            let s = spec.with_levels(n).unwrap();
            pass &= limit - cascade::omega_sum(&s) <= cascade::tail_bound(&s).unwrap() + 1e-12 * limit;
        }
    }
    let divergent = cascade::omega_limit(&CascadeSpec::new(-3.0, 1.0, 30).unwrap()) == OmegaLimit::Divergent;
    verdict(pass && divergent, format!("max |omega/tau - 2.7024| = {worst:.1e}, slope -3 divergent: {divergent}"))
}

fn cli_reproducibility() -> Verdict {
    let cases: [&[&str]; 7] = [
        &["born", "--trials", "20000"],
        &["epr", "--trials", "5000", "--seed", "7"],
        &["chsh", "--trials", "20000"],
        &["uncertainty", "--colat", "1.0", "--lon", "0.6", "--trials", "20000", "--format", "csv"],
        &["cascade", "--levels", "30"],
        &["noncomputability", "--max-n", "10", "--trials", "5000"],
        &["grid-overlap", "--tilt", "0.77"],
    ];
    let run = |args: &[&str], threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_bivalent"))
            .arg("experiment")
            .args(args)
            .args(["--parallel", threads])
            .output()
            .unwrap();
        assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        out.stdout
    };
    let mut mismatches = 0;
    for args in cases {
        let base = run(args, "1");
        mismatches += (run(args, "1") != base) as usize;
        for threads in ["2", "4", "16"] {
            mismatches += (run(args, threads) != base) as usize;
        }
    }
    verdict(mismatches == 0, format!("{} experiments x 5 runs, {mismatches} mismatches", cases.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict); 10] = [
        ("operator algebra", operator_algebra),
        ("worked example", worked_example),
        ("sensitivity anchor", sensitivity),
        ("Born rule", born_rule),
        ("latitude statistics", latitude_statistics),
        ("uncertainty identity", uncertainty_identity),
        ("EPR correlation", epr_correlation),
        ("grid rotation", grid_rotation),
        ("cascade", cascade_convergence),
        ("reproducibility", cli_reproducibility),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let v = check();
        failed += (!v.pass) as usize;
        println!("{} {:>2} {name}: {}", if v.pass { "PASS" } else { "FAIL" }, k + 1, v.detail);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
