//! Monte-Carlo sweep experiments over scenario populations.
//!
//! An experiment sweeps exactly one variable (altitude, beamwidth, daughter
//! density, EIRP, or guard altitude), regenerating `trials` scenarios per
//! sweep value from seeds derived from the master seed, running the
//! requested solver and optionally the two baselines on each, and
//! aggregating means and sample standard deviations.
//!
//! Parameter lists (`beamwidth_deg_list`, `eirp_dbm_list`, `lth_db_list`)
//! produce one curve family per combination, evaluated on the same
//! scenarios. Trials run in a rayon pool; results are reduced in trial
//! order, so the output is byte-identical for any thread count.

use std::path::PathBuf;

use rayon::prelude::*;
use serde::Deserialize;
use thiserror::Error;

use aircov_core::baselines::{min_sum_distance_placement, random_placement, BaselineError};
use aircov_core::rf::{min_altitude_noss_m, noss_power_bounds, transmit_power_dbm};
use aircov_core::scenario::{gen_hppp, gen_mcpp};
use aircov_core::solver::{
    solve_at_altitude, solve_noss, solve_noss_fixed_power, solve_oss, SolveError,
};
use aircov_core::{
    Airspace, McppParams, Placement, RadioConfig, Scenario, SharingPolicy, SweepConfig,
};

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("invalid experiment config: {0}")]
    Config(String),
    #[error("infeasible experiment config: {0}")]
    Infeasible(String),
}

/// The quantity a sweep varies; everything else is held at its configured
/// value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepVariable {
    /// Fixed-altitude coverage evaluation (no altitude search).
    Altitude,
    Beamwidth,
    DaughterDensity,
    Eirp,
    GuardAltitude,
}

impl SweepVariable {
    /// CSV column name, units included.
    pub fn column_name(self) -> &'static str {
        match self {
            SweepVariable::Altitude => "altitude_m",
            SweepVariable::Beamwidth => "beamwidth_deg",
            SweepVariable::DaughterDensity => "daughter_density_per_km3",
            SweepVariable::Eirp => "eirp_dbm",
            SweepVariable::GuardAltitude => "guard_altitude_m",
        }
    }

    pub fn axis_label(self) -> &'static str {
        match self {
            SweepVariable::Altitude => "UAV-BS altitude (m)",
            SweepVariable::Beamwidth => "antenna beamwidth (deg)",
            SweepVariable::DaughterDensity => "daughter density (per km3)",
            SweepVariable::Eirp => "EIRP (dBm)",
            SweepVariable::GuardAltitude => "guard altitude (m)",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PolicyKind {
    #[default]
    Oss,
    Noss,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorKind {
    #[default]
    Hppp,
    Mcpp,
}

/// Accepts `sweep = "altitude"` as well as a list, so that a config naming
/// several sweep variables fails validation with a clear message rather
/// than a type error.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum SweepField {
    One(SweepVariable),
    Many(Vec<SweepVariable>),
}

fn default_trials() -> u32 {
    50
}
fn default_eirp() -> f64 {
    30.0
}
fn default_carrier() -> f64 {
    2e9
}
fn default_exponent() -> f64 {
    2.0
}
fn default_sensitivity() -> f64 {
    -70.0
}
fn default_beamwidth() -> f64 {
    60.0
}
fn default_sidelobe() -> f64 {
    -10.0
}
fn default_area() -> f64 {
    3000.0
}
fn default_h_min() -> f64 {
    100.0
}
fn default_h_max() -> f64 {
    300.0
}
fn default_h_guard() -> f64 {
    50.0
}
fn default_interference() -> f64 {
    -73.0
}
fn default_density() -> f64 {
    30.0
}
fn default_parent_density() -> f64 {
    5.0
}
fn default_daughter_density() -> f64 {
    200.0
}
fn default_daughter_radius() -> f64 {
    150.0
}
fn default_alt_step() -> f64 {
    5.0
}
fn default_power_step() -> f64 {
    0.5
}
fn default_fast_altitude() -> bool {
    true
}

/// Flat key-value experiment description; see the repo's configs/ directory
/// for complete examples. Unknown keys are rejected.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub sweep: SweepField,
    pub sweep_values: Vec<f64>,
    #[serde(default = "default_trials")]
    pub trials: u32,
    #[serde(default)]
    pub master_seed: u64,

    #[serde(default)]
    pub policy: PolicyKind,
    #[serde(default = "default_h_guard")]
    pub h_guard_m: f64,
    #[serde(default = "default_interference")]
    pub interference_dbm: f64,

    #[serde(default = "default_eirp")]
    pub eirp_dbm: f64,
    #[serde(default)]
    pub eirp_dbm_list: Option<Vec<f64>>,
    /// Link-budget series L_th = P_T − P_min; mapped to EIRP values.
    #[serde(default)]
    pub lth_db_list: Option<Vec<f64>>,
    #[serde(default = "default_carrier")]
    pub carrier_hz: f64,
    #[serde(default = "default_exponent")]
    pub pathloss_exp: f64,
    #[serde(default = "default_sensitivity")]
    pub sensitivity_dbm: f64,
    #[serde(default = "default_beamwidth")]
    pub beamwidth_deg: f64,
    #[serde(default)]
    pub beamwidth_deg_list: Option<Vec<f64>>,
    #[serde(default = "default_sidelobe")]
    pub sidelobe_gain_db: f64,

    #[serde(default = "default_area")]
    pub area_x_m: f64,
    #[serde(default = "default_area")]
    pub area_y_m: f64,
    #[serde(default = "default_h_min")]
    pub h_min_m: f64,
    #[serde(default = "default_h_max")]
    pub h_max_m: f64,

    #[serde(default)]
    pub generator: GeneratorKind,
    #[serde(default = "default_density")]
    pub density_per_km3: f64,
    #[serde(default = "default_parent_density")]
    pub parent_density_per_km3: f64,
    #[serde(default = "default_daughter_density")]
    pub daughter_density_per_km3: f64,
    #[serde(default = "default_daughter_radius")]
    pub daughter_radius_m: f64,

    #[serde(default = "default_alt_step")]
    pub altitude_step_m: f64,
    #[serde(default = "default_power_step")]
    pub power_step_db: f64,
    #[serde(default = "default_fast_altitude")]
    pub fast_altitude: bool,
    #[serde(default)]
    pub baselines: bool,

    #[serde(default)]
    pub csv: Option<PathBuf>,
    #[serde(default)]
    pub svg: Option<PathBuf>,
}

/// One curve family: the radio parameters that differ from row to row stay
/// fixed within a series.
#[derive(Debug, Clone)]
pub struct Series {
    /// Column prefix; empty for the single default series.
    pub label: String,
    pub eirp_dbm: f64,
    pub beamwidth_deg: f64,
}

impl ExperimentConfig {
    pub fn parse_toml(text: &str) -> Result<Self, ExperimentError> {
        toml::from_str(text).map_err(|e| ExperimentError::Config(e.to_string()))
    }

    pub fn sweep_variable(&self) -> Result<SweepVariable, ExperimentError> {
        match &self.sweep {
            SweepField::One(v) => Ok(*v),
            SweepField::Many(vs) if vs.len() == 1 => Ok(vs[0]),
            SweepField::Many(vs) => Err(ExperimentError::Config(format!(
                "exactly one sweep variable required, got {}",
                vs.len()
            ))),
        }
    }

    pub fn airspace(&self) -> Result<Airspace, ExperimentError> {
        Airspace::centered(self.area_x_m, self.area_y_m, self.h_min_m, self.h_max_m)
            .map_err(|e| ExperimentError::Config(e.to_string()))
    }

    pub fn policy(&self) -> SharingPolicy {
        match self.policy {
            PolicyKind::Oss => SharingPolicy::Oss,
            PolicyKind::Noss => SharingPolicy::Noss {
                guard_alt_m: self.h_guard_m,
                interference_dbm: self.interference_dbm,
            },
        }
    }

    fn base_radio(
        &self,
        eirp_dbm: f64,
        beamwidth_deg: f64,
    ) -> Result<RadioConfig, ExperimentError> {
        RadioConfig::new(
            eirp_dbm,
            self.carrier_hz,
            self.pathloss_exp,
            self.sensitivity_dbm,
            beamwidth_deg,
            self.sidelobe_gain_db,
        )
        .map_err(|e| ExperimentError::Config(e.to_string()))
    }

    /// Expands the parameter lists into curve families.
    pub fn series(&self) -> Result<Vec<Series>, ExperimentError> {
        let variable = self.sweep_variable()?;
        if self.eirp_dbm_list.is_some() && self.lth_db_list.is_some() {
            return Err(ExperimentError::Config(
                "eirp_dbm_list and lth_db_list are aliases; give only one".into(),
            ));
        }
        let eirps: Vec<(String, f64)> = if let Some(list) = &self.eirp_dbm_list {
            if variable == SweepVariable::Eirp {
                return Err(ExperimentError::Config(
                    "eirp_dbm_list cannot be combined with an eirp sweep".into(),
                ));
            }
            list.iter().map(|v| (format!("pt{v}"), *v)).collect()
        } else if let Some(list) = &self.lth_db_list {
            if variable == SweepVariable::Eirp {
                return Err(ExperimentError::Config(
                    "lth_db_list cannot be combined with an eirp sweep".into(),
                ));
            }
            list.iter()
                .map(|v| (format!("lth{v}"), self.sensitivity_dbm + *v))
                .collect()
        } else {
            vec![(String::new(), self.eirp_dbm)]
        };
        let beamwidths: Vec<(String, f64)> = if let Some(list) = &self.beamwidth_deg_list {
            if variable == SweepVariable::Beamwidth {
                return Err(ExperimentError::Config(
                    "beamwidth_deg_list cannot be combined with a beamwidth sweep".into(),
                ));
            }
            list.iter().map(|v| (format!("bw{v}"), *v)).collect()
        } else {
            vec![(String::new(), self.beamwidth_deg)]
        };
        let mut out = Vec::new();
        for (el, eirp) in &eirps {
            for (bl, bw) in &beamwidths {
                let label = match (el.is_empty(), bl.is_empty()) {
                    (true, true) => String::new(),
                    (false, true) => el.clone(),
                    (true, false) => bl.clone(),
                    (false, false) => format!("{el}_{bl}"),
                };
                out.push(Series {
                    label,
                    eirp_dbm: *eirp,
                    beamwidth_deg: *bw,
                });
            }
        }
        Ok(out)
    }

    /// Full validation pass; every error is reported before any trial runs.
    pub fn validate(&self) -> Result<(), ExperimentError> {
        let variable = self.sweep_variable()?;
        if self.trials < 1 {
            return Err(ExperimentError::Config("trials must be >= 1".into()));
        }
        if self.sweep_values.is_empty() {
            return Err(ExperimentError::Config(
                "sweep_values must be non-empty".into(),
            ));
        }
        if !(self.altitude_step_m > 0.0 && self.power_step_db > 0.0) {
            return Err(ExperimentError::Config(
                "sweep steps must be positive".into(),
            ));
        }
        let airspace = self.airspace()?;
        self.policy()
            .validate()
            .map_err(|e| ExperimentError::Config(e.to_string()))?;
        if variable == SweepVariable::GuardAltitude && self.policy == PolicyKind::Oss {
            return Err(ExperimentError::Config(
                "guard_altitude sweeps require the noss policy".into(),
            ));
        }
        if variable == SweepVariable::DaughterDensity && self.generator != GeneratorKind::Mcpp {
            return Err(ExperimentError::Config(
                "daughter_density sweeps require the mcpp generator".into(),
            ));
        }
        if self.generator == GeneratorKind::Mcpp {
            self.mcpp_params(None)
                .validate()
                .map_err(|e| ExperimentError::Config(e.to_string()))?;
        } else if self.density_per_km3 < 0.0 {
            return Err(ExperimentError::Config(
                "density_per_km3 must be >= 0".into(),
            ));
        }
        // Instantiate every (series, sweep value) radio/policy combination.
        for series in self.series()? {
            for &value in &self.sweep_values {
                let (eirp, bw) = match variable {
                    SweepVariable::Beamwidth => (series.eirp_dbm, value),
                    SweepVariable::Eirp => (value, series.beamwidth_deg),
                    _ => (series.eirp_dbm, series.beamwidth_deg),
                };
                let cfg = self.base_radio(eirp, bw)?;
                let policy = match variable {
                    SweepVariable::GuardAltitude => SharingPolicy::Noss {
                        guard_alt_m: value,
                        interference_dbm: self.interference_dbm,
                    },
                    _ => self.policy(),
                };
                if let SharingPolicy::Noss { .. } = policy {
                    let bounds = noss_power_bounds(&cfg, &policy, &airspace)
                        .map_err(|e| ExperimentError::Config(e.to_string()))?;
                    if !bounds.feasible
                        || !bounds.p_low_dbm.is_finite()
                        || !bounds.p_high_dbm.is_finite()
                    {
                        return Err(ExperimentError::Infeasible(format!(
                            "N-OSS power bounds infeasible for series {:?} at sweep value {value}: \
                             p_low = {}, p_high = {}, omega = {}",
                            series.label, bounds.p_low_dbm, bounds.p_high_dbm, bounds.omega
                        )));
                    }
                    if variable == SweepVariable::Eirp
                        && !(bounds.p_low_dbm - 1e-9 <= value && value <= bounds.p_high_dbm + 1e-9)
                    {
                        return Err(ExperimentError::Infeasible(format!(
                            "eirp sweep value {value} dBm outside the feasible interval \
                             [{:.3}, {:.3}] dBm",
                            bounds.p_low_dbm, bounds.p_high_dbm
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn mcpp_params(&self, daughter_density_override: Option<f64>) -> McppParams {
        McppParams {
            parent_density_per_km3: self.parent_density_per_km3,
            daughter_density_per_km3: daughter_density_override
                .unwrap_or(self.daughter_density_per_km3),
            daughter_radius_m: self.daughter_radius_m,
        }
    }
}

// ---------------------------------------------------------------------------
// Seeding
// ---------------------------------------------------------------------------

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Trial seed as a pure function of (master seed, sweep value index, trial
/// index); appending sweep values never perturbs existing trials.
pub fn derive_trial_seed(master_seed: u64, value_index: u64, trial_index: u64) -> u64 {
    let mut s = splitmix64(master_seed);
    s = splitmix64(s ^ value_index.wrapping_mul(0xff51_afd7_ed55_8ccd));
    splitmix64(s ^ trial_index.wrapping_mul(0xc4ce_b9fe_1a85_ec53))
}

const RANDOM_BASELINE_SALT: u64 = 0x5241_4e44_0000_0001;

// ---------------------------------------------------------------------------
// Results
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct MethodStats {
    pub mean_covered: f64,
    pub std_covered: f64,
    pub mean_altitude_m: f64,
    pub mean_eirp_dbm: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeriesStats {
    pub optimal: MethodStats,
    pub min_sum_distance: Option<MethodStats>,
    pub random: Option<MethodStats>,
    /// Transmit power P_t(θ_B) for beamwidth sweeps.
    pub tx_power_dbm: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub sweep_value: f64,
    pub per_series: Vec<SeriesStats>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub variable: SweepVariable,
    pub series_labels: Vec<String>,
    pub trials: u32,
    pub rows: Vec<SweepRow>,
}

fn mean_std(samples: &[f64]) -> (f64, f64) {
    if samples.is_empty() {
        return (0.0, 0.0);
    }
    let n = samples.len() as f64;
    let mean = samples.iter().sum::<f64>() / n;
    if samples.len() < 2 {
        return (mean, 0.0);
    }
    let var = samples.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

fn stats_from(placements: &[Option<Placement>]) -> MethodStats {
    let counts: Vec<f64> = placements
        .iter()
        .map(|p| p.as_ref().map_or(0.0, |p| p.count as f64))
        .collect();
    let (mean_covered, std_covered) = mean_std(&counts);
    let alts: Vec<f64> = placements
        .iter()
        .filter_map(|p| p.as_ref().map(|p| p.bs_position.z))
        .collect();
    let eirps: Vec<f64> = placements
        .iter()
        .filter_map(|p| p.as_ref().map(|p| p.eirp_dbm))
        .collect();
    MethodStats {
        mean_covered,
        std_covered,
        mean_altitude_m: mean_std(&alts).0,
        mean_eirp_dbm: mean_std(&eirps).0,
    }
}

// ---------------------------------------------------------------------------
// Execution
// ---------------------------------------------------------------------------

struct TrialOutcome {
    optimal: Option<Placement>,
    min_sum_distance: Option<Placement>,
    random: Option<Placement>,
}

fn generate_scenario(
    config: &ExperimentConfig,
    airspace: Airspace,
    variable: SweepVariable,
    value: f64,
    seed: u64,
) -> Scenario {
    match config.generator {
        GeneratorKind::Hppp => gen_hppp(airspace, config.density_per_km3, seed),
        GeneratorKind::Mcpp => {
            let over = (variable == SweepVariable::DaughterDensity).then_some(value);
            gen_mcpp(airspace, config.mcpp_params(over), seed)
        }
    }
}

fn zero_placement(scenario: &Scenario, altitude: f64, eirp: f64) -> Placement {
    Placement {
        bs_position: aircov_core::Point3::new(
            scenario.airspace.mid_x(),
            scenario.airspace.mid_y(),
            altitude,
        ),
        eirp_dbm: eirp,
        covered: vec![false; scenario.users.len()],
        count: 0,
    }
}

#[allow(clippy::too_many_arguments)]
fn run_optimal(
    config: &ExperimentConfig,
    scenario: &Scenario,
    cfg: &RadioConfig,
    policy: &SharingPolicy,
    airspace: &Airspace,
    sweep: &SweepConfig,
    variable: SweepVariable,
    value: f64,
) -> Result<Placement, SolveError> {
    match (variable, policy) {
        (SweepVariable::Altitude, SharingPolicy::Oss) => {
            Ok(solve_at_altitude(scenario, cfg, value, sweep.tie_break))
        }
        (SweepVariable::Altitude, noss @ SharingPolicy::Noss { .. }) => {
            // An altitude below the interference-safe minimum cannot be
            // used; it contributes zero coverage to the curve.
            let z_min = min_altitude_noss_m(cfg, noss)?;
            if value < z_min - 1e-6 {
                Ok(zero_placement(scenario, value, cfg.eirp_dbm))
            } else {
                Ok(solve_at_altitude(scenario, cfg, value, sweep.tie_break))
            }
        }
        (SweepVariable::Eirp, SharingPolicy::Oss) => Ok(solve_oss(scenario, cfg, airspace, sweep)),
        (SweepVariable::Eirp, noss @ SharingPolicy::Noss { .. }) => solve_noss_fixed_power(
            scenario,
            cfg,
            noss,
            airspace,
            sweep,
            value,
            config.fast_altitude,
        ),
        (_, SharingPolicy::Oss) => Ok(solve_oss(scenario, cfg, airspace, sweep)),
        (_, noss @ SharingPolicy::Noss { .. }) => {
            solve_noss(scenario, cfg, noss, airspace, sweep, config.fast_altitude)
        }
    }
}

/// Runs the full sweep. Configuration problems surface before any trial
/// executes; the returned rows follow the order of `sweep_values`.
pub fn run_experiment(config: &ExperimentConfig) -> Result<SweepResult, ExperimentError> {
    config.validate()?;
    let variable = config.sweep_variable()?;
    let series = config.series()?;
    let airspace = config.airspace()?;
    let sweep = SweepConfig {
        altitude_step_m: config.altitude_step_m,
        power_step_db: config.power_step_db,
        ..SweepConfig::default()
    };

    let mut rows = Vec::with_capacity(config.sweep_values.len());
    for (value_index, &value) in config.sweep_values.iter().enumerate() {
        // The altitude sweep observes the same scenarios at every altitude
        // (the curve is a function of the observation altitude, not a new
        // population); other sweeps draw fresh scenarios per value.
        let seed_value_index = match variable {
            SweepVariable::Altitude => 0,
            _ => value_index as u64,
        };
        let outcomes: Vec<Vec<TrialOutcome>> = (0..config.trials as u64)
            .into_par_iter()
            .map(|trial| {
                let seed = derive_trial_seed(config.master_seed, seed_value_index, trial);
                let scenario = generate_scenario(config, airspace, variable, value, seed);
                series
                    .iter()
                    .map(|s| {
                        run_trial(
                            config,
                            &scenario,
                            s,
                            &airspace,
                            &sweep,
                            variable,
                            value,
                            seed_value_index,
                            trial,
                        )
                    })
                    .collect()
            })
            .collect();

        let per_series = series
            .iter()
            .enumerate()
            .map(|(si, s)| {
                let optimal: Vec<Option<Placement>> =
                    outcomes.iter().map(|t| t[si].optimal.clone()).collect();
                let minsum: Vec<Option<Placement>> = outcomes
                    .iter()
                    .map(|t| t[si].min_sum_distance.clone())
                    .collect();
                let random: Vec<Option<Placement>> =
                    outcomes.iter().map(|t| t[si].random.clone()).collect();
                let tx_power_dbm = (variable == SweepVariable::Beamwidth)
                    .then(|| transmit_power_dbm(s.eirp_dbm, value))
                    .transpose()
                    .ok()
                    .flatten();
                SeriesStats {
                    optimal: stats_from(&optimal),
                    min_sum_distance: config.baselines.then(|| stats_from(&minsum)),
                    random: config.baselines.then(|| stats_from(&random)),
                    tx_power_dbm,
                }
            })
            .collect();
        rows.push(SweepRow {
            sweep_value: value,
            per_series,
        });
    }
    Ok(SweepResult {
        variable,
        series_labels: series.iter().map(|s| s.label.clone()).collect(),
        trials: config.trials,
        rows,
    })
}

#[allow(clippy::too_many_arguments)]
fn run_trial(
    config: &ExperimentConfig,
    scenario: &Scenario,
    series: &Series,
    airspace: &Airspace,
    sweep: &SweepConfig,
    variable: SweepVariable,
    value: f64,
    seed_value_index: u64,
    trial: u64,
) -> TrialOutcome {
    let (eirp, bw) = match variable {
        SweepVariable::Beamwidth => (series.eirp_dbm, value),
        SweepVariable::Eirp => (value, series.beamwidth_deg),
        _ => (series.eirp_dbm, series.beamwidth_deg),
    };
    // Validated up front in ExperimentConfig::validate.
    let cfg = config
        .base_radio(eirp, bw)
        .expect("radio config validated before execution");
    let policy = match variable {
        SweepVariable::GuardAltitude => SharingPolicy::Noss {
            guard_alt_m: value,
            interference_dbm: config.interference_dbm,
        },
        _ => config.policy(),
    };
    let optimal = run_optimal(
        config, scenario, &cfg, &policy, airspace, sweep, variable, value,
    )
    .ok();
    let (min_sum_distance, random) = if config.baselines {
        let minsum = match min_sum_distance_placement(scenario, &cfg, &policy, airspace) {
            Ok(p) => Some(p),
            Err(BaselineError::EmptyScenario) => {
                Some(zero_placement(scenario, airspace.h_max_m, cfg.eirp_dbm))
            }
            Err(_) => None,
        };
        let seed = derive_trial_seed(
            config.master_seed ^ RANDOM_BASELINE_SALT,
            seed_value_index,
            trial,
        );
        let random = random_placement(scenario, airspace, &cfg, &policy, seed).ok();
        (minsum, random)
    } else {
        (None, None)
    };
    TrialOutcome {
        optimal,
        min_sum_distance,
        random,
    }
}
