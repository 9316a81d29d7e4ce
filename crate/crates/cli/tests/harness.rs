//! Tests of the experiment runner and the report emitters.

use aircov_cli::experiment::{derive_trial_seed, run_experiment, ExperimentConfig, SweepVariable};
use aircov_cli::report::{csv_string, svg_string};
use aircov_core::scenario::gen_hppp;
use aircov_core::Airspace;

fn parse(text: &str) -> ExperimentConfig {
    ExperimentConfig::parse_toml(text).unwrap()
}

#[test]
fn single_user_single_value_single_trial() {
    // Find a master seed whose first derived trial puts exactly one user in
    // the corridor at density 1/km³, then check the aggregate is mean 1,
    // std 0.
    let airspace = Airspace::centered(3000.0, 3000.0, 100.0, 300.0).unwrap();
    let master = (0..)
        .find(|m| {
            let seed = derive_trial_seed(*m, 0, 0);
            gen_hppp(airspace, 1.0, seed).users.len() == 1
        })
        .unwrap();
    let config = parse(&format!(
        "sweep = \"beamwidth\"\nsweep_values = [90]\ntrials = 1\nmaster_seed = {master}\n\
         density_per_km3 = 1.0\n"
    ));
    let result = run_experiment(&config).unwrap();
    assert_eq!(result.rows.len(), 1);
    let stats = &result.rows[0].per_series[0].optimal;
    assert_eq!(stats.mean_covered, 1.0);
    assert_eq!(stats.std_covered, 0.0);
}

#[test]
fn rows_follow_sweep_value_order_and_carry_tx_power() {
    let config = parse(
        "sweep = \"beamwidth\"\nsweep_values = [30, 60, 90]\ntrials = 2\n\
         master_seed = 11\ndensity_per_km3 = 10.0\n",
    );
    let result = run_experiment(&config).unwrap();
    assert_eq!(result.variable, SweepVariable::Beamwidth);
    let values: Vec<f64> = result.rows.iter().map(|r| r.sweep_value).collect();
    assert_eq!(values, vec![30.0, 60.0, 90.0]);
    // P_t(θ_B) = P_T − 10·log10(29000/θ_B²) grows with the beamwidth.
    let tx: Vec<f64> = result
        .rows
        .iter()
        .map(|r| r.per_series[0].tx_power_dbm.unwrap())
        .collect();
    assert!(tx[0] < tx[1] && tx[1] < tx[2]);
    assert!((tx[1] - 20.939).abs() < 1e-3);
}

#[test]
fn csv_is_identical_across_thread_counts() {
    let config = parse(
        "sweep = \"guard_altitude\"\nsweep_values = [25, 100]\ntrials = 8\n\
         master_seed = 3\npolicy = \"noss\"\ndensity_per_km3 = 20.0\nbaselines = true\n",
    );
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(|| run_experiment(&config).unwrap());
    let multi = rayon::ThreadPoolBuilder::new()
        .num_threads(4)
        .build()
        .unwrap()
        .install(|| run_experiment(&config).unwrap());
    assert_eq!(csv_string(&single), csv_string(&multi));
}

#[test]
fn csv_reloads_to_emitted_precision() {
    let config = parse(
        "sweep = \"beamwidth\"\nsweep_values = [45, 75]\ntrials = 4\nmaster_seed = 9\n\
         density_per_km3 = 15.0\n",
    );
    let result = run_experiment(&config).unwrap();
    let text = csv_string(&result);
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    for (row, line) in result.rows.iter().zip(lines) {
        let cells: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        assert_eq!(cells.len(), header.len());
        assert_eq!(cells[0], row.sweep_value);
        let mean = row.per_series[0].optimal.mean_covered;
        assert!((cells[1] - mean).abs() < 5e-7); // emitted at 6 decimals
    }
}

#[test]
fn empty_rows_give_header_only_csv_and_no_svg_series() {
    let config =
        parse("sweep = \"beamwidth\"\nsweep_values = [60]\ntrials = 1\ndensity_per_km3 = 0.0\n");
    let mut result = run_experiment(&config).unwrap();
    result.rows.clear();
    let text = csv_string(&result);
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with("beamwidth_deg,"));
    let svg = svg_string(&result);
    assert!(!svg.contains("<polyline"));
    assert!(svg.contains("</svg>"));
}

#[test]
fn means_stay_within_user_count_bounds() {
    let config = parse(
        "sweep = \"daughter_density\"\nsweep_values = [100, 300]\ntrials = 6\n\
         master_seed = 2\ngenerator = \"mcpp\"\nparent_density_per_km3 = 4.0\n\
         daughter_radius_m = 120.0\nbaselines = true\n",
    );
    let result = run_experiment(&config).unwrap();
    for row in &result.rows {
        for s in &row.per_series {
            assert!(s.optimal.mean_covered >= 0.0);
            assert!(s.optimal.std_covered >= 0.0);
            let minsum = s.min_sum_distance.as_ref().unwrap();
            let random = s.random.as_ref().unwrap();
            assert!(minsum.mean_covered <= s.optimal.mean_covered + 1e-9);
            assert!(random.mean_covered <= s.optimal.mean_covered + 1e-9);
        }
    }
}

#[test]
fn altitude_sweep_reuses_scenarios_across_values() {
    // The altitude curve observes one scenario population: every row's mean
    // must reproduce from the trial-indexed seeds alone, independent of the
    // altitude value index.
    let config = parse(
        "sweep = \"altitude\"\nsweep_values = [400, 800]\ntrials = 5\nmaster_seed = 21\n\
         density_per_km3 = 10.0\n",
    );
    let result = run_experiment(&config).unwrap();
    assert_eq!(result.rows.len(), 2);
    let airspace = config.airspace().unwrap();
    let cfg = aircov_core::RadioConfig::new(30.0, 2e9, 2.0, -70.0, 60.0, -10.0).unwrap();
    for row in &result.rows {
        let mut total = 0usize;
        for t in 0..5u64 {
            let scenario = gen_hppp(airspace, 10.0, derive_trial_seed(21, 0, t));
            let p = aircov_core::solver::solve_at_altitude(
                &scenario,
                &cfg,
                row.sweep_value,
                aircov_core::maxcover::TieBreak::default(),
            );
            total += p.count;
        }
        assert_eq!(row.per_series[0].optimal.mean_covered, total as f64 / 5.0);
    }
}

#[test]
fn noss_altitude_sweep_zeroes_infeasible_altitudes() {
    // z_min(19 dBm) = 525.2 m: altitudes below it deliver no coverage.
    let config = parse(
        "sweep = \"altitude\"\nsweep_values = [500, 530]\ntrials = 10\nmaster_seed = 77\n\
         policy = \"noss\"\neirp_dbm = 19.0\ndensity_per_km3 = 30.0\n",
    );
    let result = run_experiment(&config).unwrap();
    assert_eq!(result.rows[0].per_series[0].optimal.mean_covered, 0.0);
    assert!(result.rows[1].per_series[0].optimal.mean_covered > 0.0);
}

#[test]
fn trial_seeds_are_stable_and_disjoint() {
    // The derivation is part of the reproducibility contract; these values
    // must never change.
    assert_eq!(derive_trial_seed(0, 0, 0), derive_trial_seed(0, 0, 0));
    let a = derive_trial_seed(42, 0, 0);
    let b = derive_trial_seed(42, 0, 1);
    let c = derive_trial_seed(42, 1, 0);
    let d = derive_trial_seed(43, 0, 0);
    assert!(a != b && a != c && a != d && b != c);
}

#[test]
fn eirp_values_outside_bounds_are_rejected_before_running() {
    let config = parse(
        "sweep = \"eirp\"\nsweep_values = [30]\ntrials = 1\npolicy = \"noss\"\n\
         density_per_km3 = 5.0\n",
    );
    let err = run_experiment(&config).unwrap_err();
    assert!(err.to_string().contains("feasible interval"), "{err}");
}

#[test]
fn guard_sweep_requires_noss() {
    let config = parse(
        "sweep = \"guard_altitude\"\nsweep_values = [50]\ntrials = 1\n\
         density_per_km3 = 5.0\n",
    );
    assert!(run_experiment(&config).is_err());
}
