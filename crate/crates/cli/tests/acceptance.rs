//! Acceptance suite: one test per criterion, each printing a PASS line once
//! its checks hold (run with `--nocapture` to see them). Tolerances are
//! pinned in the assertions.

use std::time::Instant;

use rayon::prelude::*;

use aircov_cli::bench::oracle_agreement;
use aircov_cli::experiment::{derive_trial_seed, run_experiment, ExperimentConfig};
use aircov_cli::report::csv_string;
use aircov_core::baselines::{min_sum_distance_placement, random_placement};
use aircov_core::maxcover::TieBreak;
use aircov_core::rf::{max_link_distance_m, min_altitude_noss_m, noss_power_bounds};
use aircov_core::scenario::gen_hppp;
use aircov_core::solver::{
    evaluate_placement, inclusive_grid, solve_at_altitude, solve_noss, solve_oss, SweepConfig,
};
use aircov_core::{Airspace, Point3, RadioConfig, SharingPolicy};

fn iv_defaults() -> RadioConfig {
    RadioConfig::new(30.0, 2e9, 2.0, -70.0, 60.0, -10.0).unwrap()
}

fn corridor() -> Airspace {
    Airspace::centered(3000.0, 3000.0, 100.0, 300.0).unwrap()
}

fn noss_defaults() -> SharingPolicy {
    SharingPolicy::Noss {
        guard_alt_m: 50.0,
        interference_dbm: -73.0,
    }
}

#[test]
fn c1_analytic_constants() {
    let d_max = max_link_distance_m(&iv_defaults());
    assert!(
        (d_max - 1193.7).abs() <= 0.5,
        "d_max(30 dBm) = {d_max}, want 1193.7 ± 0.5 m"
    );

    let cfg19 = iv_defaults().with_eirp_dbm(19.0);
    let z_min = min_altitude_noss_m(&cfg19, &noss_defaults()).unwrap();
    assert!(
        (z_min - 525.2).abs() <= 0.5,
        "z_min(19 dBm) = {z_min}, want 525.2 ± 0.5 m"
    );

    let bounds = noss_power_bounds(&iv_defaults(), &noss_defaults(), &corridor()).unwrap();
    assert!(bounds.feasible);
    assert!(
        (bounds.p_low_dbm - 13.42).abs() <= 0.05,
        "p_low = {}, want 13.42 ± 0.05 dBm",
        bounds.p_low_dbm
    );
    assert!(
        (bounds.p_high_dbm - 24.11).abs() <= 0.05,
        "p_high = {}, want 24.11 ± 0.05 dBm",
        bounds.p_high_dbm
    );

    println!(
        "acceptance C1 (analytic constants): PASS \
         (d_max = {d_max:.2} m, z_min = {z_min:.2} m, bounds = [{:.3}, {:.3}] dBm)",
        bounds.p_low_dbm, bounds.p_high_dbm
    );
}

#[test]
fn c2_oracle_equivalence() {
    let start = Instant::now();
    let report = oracle_agreement(25, 200, 202, 25.0);
    let elapsed = start.elapsed();
    assert_eq!(
        report.agreement,
        200,
        "sweep disagreed with the brute-force oracle on {} of 200 instances",
        200 - report.agreement
    );
    assert!(
        elapsed.as_secs() < 60,
        "oracle equivalence took {elapsed:?}, budget 60 s"
    );
    println!(
        "acceptance C2 (oracle equivalence): PASS (agreement {}/200 in {elapsed:.2?})",
        report.agreement
    );
}

#[test]
fn c3_optimality_dominance() {
    let start = Instant::now();
    let cfg = iv_defaults();
    let airspace = corridor();
    let sweep = SweepConfig::default();
    let d_max = max_link_distance_m(&cfg);
    let wins: Vec<bool> = (0..100u64)
        .into_par_iter()
        .map(|i| {
            let scenario = gen_hppp(airspace, 30.0, derive_trial_seed(300, 0, i));
            if scenario.users.is_empty() {
                return true;
            }
            let best = solve_oss(&scenario, &cfg, &airspace, &sweep);
            let minsum =
                min_sum_distance_placement(&scenario, &cfg, &SharingPolicy::Oss, &airspace)
                    .unwrap();
            let random =
                random_placement(&scenario, &airspace, &cfg, &SharingPolicy::Oss, 9000 + i)
                    .unwrap();
            // Snap the random altitude onto the solver's grid.
            let k = ((random.bs_position.z - airspace.h_max_m) / sweep.altitude_step_m).round();
            let z = (airspace.h_max_m + k * sweep.altitude_step_m).min(airspace.h_max_m + d_max);
            let snapped = evaluate_placement(
                &scenario,
                Point3::new(random.bs_position.x, random.bs_position.y, z),
                &cfg,
            );
            best.count >= minsum.count && best.count >= snapped.count
        })
        .collect();
    let elapsed = start.elapsed();
    let holds = wins.iter().filter(|w| **w).count();
    assert_eq!(
        holds,
        100,
        "dominance failed on {} of 100 instances",
        100 - holds
    );
    assert!(
        elapsed.as_secs() < 300,
        "dominance run took {elapsed:?}, budget 5 min"
    );
    println!("acceptance C3 (optimality dominance): PASS (100/100 in {elapsed:.2?})");
}

#[test]
fn c4_beamwidth_monotonicity() {
    let airspace = corridor();
    let sweep = SweepConfig::default();
    let beamwidths = [30.0, 45.0, 60.0, 75.0, 90.0];
    let monotone: Vec<bool> = (0..50u64)
        .into_par_iter()
        .map(|i| {
            let scenario = gen_hppp(airspace, 30.0, derive_trial_seed(400, 0, i));
            let mut last = 0usize;
            for bw in beamwidths {
                let cfg = RadioConfig::new(30.0, 2e9, 2.0, -70.0, bw, -10.0).unwrap();
                let p = solve_oss(&scenario, &cfg, &airspace, &sweep);
                if p.count < last {
                    return false;
                }
                last = p.count;
            }
            true
        })
        .collect();
    let holds = monotone.iter().filter(|m| **m).count();
    assert_eq!(
        holds,
        50,
        "coverage decreased with beamwidth on {} of 50 scenarios",
        50 - holds
    );
    println!("acceptance C4 (beamwidth monotonicity): PASS (50/50 scenarios)");
}

#[test]
fn c5_noss_minimum_altitude() {
    let airspace = corridor();
    let cfg19 = iv_defaults().with_eirp_dbm(19.0);
    let policy = noss_defaults();
    let sweep = SweepConfig::default();
    let trials = 50u64;

    // Fixed-altitude mean curve at P_T = 19 dBm over the feasible grid.
    let z_min = min_altitude_noss_m(&cfg19, &policy).unwrap();
    let z_lo = z_min.max(airspace.h_max_m);
    let z_hi = airspace.h_max_m + max_link_distance_m(&cfg19);
    let zs = inclusive_grid(z_lo, z_hi, sweep.altitude_step_m);
    let per_trial: Vec<(Vec<usize>, bool)> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let scenario = gen_hppp(airspace, 30.0, derive_trial_seed(500, 0, t));
            let curve: Vec<usize> = zs
                .iter()
                .map(|&z| solve_at_altitude(&scenario, &cfg19, z, TieBreak::default()).count)
                .collect();
            let full =
                solve_noss(&scenario, &iv_defaults(), &policy, &airspace, &sweep, false).unwrap();
            let fast =
                solve_noss(&scenario, &iv_defaults(), &policy, &airspace, &sweep, true).unwrap();
            (curve, full.count == fast.count)
        })
        .collect();

    let mut means = vec![0.0f64; zs.len()];
    for (curve, _) in &per_trial {
        for (m, c) in means.iter_mut().zip(curve) {
            *m += *c as f64;
        }
    }
    let argmax = means
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
        .unwrap()
        .0;
    assert_eq!(
        argmax, 0,
        "mean-count curve peaks at z = {:.1} m, not the lowest feasible altitude {:.1} m",
        zs[argmax], zs[0]
    );

    let matches = per_trial.iter().filter(|(_, eq)| *eq).count() as u64;
    assert!(
        matches * 100 >= trials * 95,
        "fast-altitude mode matched the full sweep on only {matches}/{trials} instances"
    );
    println!(
        "acceptance C5 (N-OSS minimum altitude): PASS \
         (curve peak at {:.1} m; fast mode matched {matches}/{trials})",
        zs[0]
    );
}

#[test]
fn c6_noss_interior_power_optimum() {
    let bounds = noss_power_bounds(&iv_defaults(), &noss_defaults(), &corridor()).unwrap();
    let powers = inclusive_grid(bounds.p_low_dbm, bounds.p_high_dbm, 0.5);
    let values: Vec<String> = powers.iter().map(|p| format!("{p}")).collect();
    let config = ExperimentConfig::parse_toml(&format!(
        "sweep = \"eirp\"\nsweep_values = [{}]\ntrials = 50\nmaster_seed = 600\n\
         policy = \"noss\"\ndensity_per_km3 = 30.0\nfast_altitude = true\n",
        values.join(", ")
    ))
    .unwrap();
    let result = run_experiment(&config).unwrap();
    let means: Vec<f64> = result
        .rows
        .iter()
        .map(|r| r.per_series[0].optimal.mean_covered)
        .collect();
    let argmax = means
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
        .unwrap()
        .0;
    let last = means.len() - 1;
    assert!(
        argmax > 0 && argmax < last,
        "mean-count-vs-power argmax sits at the boundary (index {argmax} of {last}): {means:?}"
    );
    assert!(
        means[argmax] > means[0] && means[argmax] > means[last],
        "mean-count-vs-power curve is monotone: {means:?}"
    );
    println!(
        "acceptance C6 (N-OSS interior power optimum): PASS \
         (argmax at {:.2} dBm strictly inside [{:.2}, {:.2}])",
        powers[argmax], powers[0], powers[last]
    );
}

#[test]
fn c7_guard_altitude_trend() {
    let config = ExperimentConfig::parse_toml(
        "sweep = \"guard_altitude\"\nsweep_values = [25, 100]\ntrials = 200\n\
         master_seed = 700\npolicy = \"noss\"\ndensity_per_km3 = 30.0\n\
         fast_altitude = true\n",
    )
    .unwrap();
    let result = run_experiment(&config).unwrap();
    let low_guard = result.rows[0].per_series[0].optimal.mean_covered;
    let high_guard = result.rows[1].per_series[0].optimal.mean_covered;
    assert!(
        low_guard >= high_guard,
        "mean coverage at h_guard = 25 m ({low_guard}) below h_guard = 100 m ({high_guard})"
    );
    println!(
        "acceptance C7 (guard-altitude trend): PASS \
         (mean {low_guard:.3} at 25 m >= {high_guard:.3} at 100 m)"
    );
}

#[test]
fn c8_clustering_trend() {
    let config = ExperimentConfig::parse_toml(
        "sweep = \"daughter_density\"\nsweep_values = [100, 400]\ntrials = 200\n\
         master_seed = 800\npolicy = \"oss\"\ngenerator = \"mcpp\"\n\
         parent_density_per_km3 = 5.0\ndaughter_radius_m = 150.0\nbaselines = true\n",
    )
    .unwrap();
    let result = run_experiment(&config).unwrap();
    let sparse = &result.rows[0].per_series[0];
    let dense = &result.rows[1].per_series[0];
    assert!(
        dense.optimal.mean_covered > sparse.optimal.mean_covered,
        "optimal mean coverage did not grow with daughter density: {} vs {}",
        sparse.optimal.mean_covered,
        dense.optimal.mean_covered
    );
    // Denser clusters help every placement approach.
    for pick in [
        |s: &aircov_cli::experiment::SeriesStats| s.min_sum_distance.unwrap().mean_covered,
        |s: &aircov_cli::experiment::SeriesStats| s.random.unwrap().mean_covered,
    ] {
        assert!(
            pick(dense) > pick(sparse),
            "baseline mean coverage did not grow with daughter density: {} vs {}",
            pick(sparse),
            pick(dense)
        );
    }
    println!(
        "acceptance C8 (clustering trend): PASS \
         (optimal {:.3} > {:.3}; minsum {:.3} > {:.3}; random {:.3} > {:.3})",
        dense.optimal.mean_covered,
        sparse.optimal.mean_covered,
        dense.min_sum_distance.unwrap().mean_covered,
        sparse.min_sum_distance.unwrap().mean_covered,
        dense.random.unwrap().mean_covered,
        sparse.random.unwrap().mean_covered
    );
}

#[test]
fn c9_generator_statistics_and_determinism() {
    // Empirical HPPP mean over 500 trials within 3σ of λV = 54.
    let airspace = corridor();
    let trials = 500u64;
    let total: usize = (0..trials)
        .map(|t| {
            gen_hppp(airspace, 30.0, derive_trial_seed(900, 0, t))
                .users
                .len()
        })
        .sum();
    let mean = total as f64 / trials as f64;
    let sigma = (54.0 / trials as f64).sqrt();
    assert!(
        (mean - 54.0).abs() <= 3.0 * sigma,
        "empirical HPPP mean {mean} outside 54 ± {:.3}",
        3.0 * sigma
    );

    // Same master seed, different thread counts: byte-identical CSV.
    let config = ExperimentConfig::parse_toml(
        "sweep = \"guard_altitude\"\nsweep_values = [25, 75]\ntrials = 20\n\
         master_seed = 901\npolicy = \"noss\"\ndensity_per_km3 = 20.0\n\
         baselines = true\nfast_altitude = true\n",
    )
    .unwrap();
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(|| run_experiment(&config).unwrap());
    let multi = rayon::ThreadPoolBuilder::new()
        .num_threads(8)
        .build()
        .unwrap()
        .install(|| run_experiment(&config).unwrap());
    let csv_single = csv_string(&single);
    assert_eq!(
        csv_single,
        csv_string(&multi),
        "sweep CSV differs between 1-thread and 8-thread execution"
    );
    println!(
        "acceptance C9 (generator statistics, determinism): PASS \
         (HPPP mean {mean:.3} vs 54 ± {:.3}; CSV identical across pools)",
        3.0 * sigma
    );
}
