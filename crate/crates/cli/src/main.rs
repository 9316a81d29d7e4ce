//! Command-line surface: scenario generation, single-scenario placement,
//! Monte-Carlo sweeps, and solver-versus-oracle benchmarking.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use aircov_cli::bench::oracle_agreement;
use aircov_cli::experiment::{run_experiment, ExperimentConfig, ExperimentError};
use aircov_cli::report::{csv_string, emit_csv, emit_svg};
use aircov_core::rf::{max_link_distance_m, min_altitude_noss_m, noss_power_bounds, RfError};
use aircov_core::scenario::{gen_hppp, gen_mcpp, load_scenario, save_scenario, ScenarioError};
use aircov_core::solver::{audit_placement, solve_noss, solve_oss, SolveError};
use aircov_core::{
    Airspace, McppParams, Placement, RadioConfig, Scenario, SharingPolicy, SweepConfig,
};

#[derive(Debug)]
enum CliError {
    Usage(String),
    Infeasible(String),
    Io(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Infeasible(_) => 2,
            CliError::Io(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Infeasible(m) | CliError::Io(m) => m,
        }
    }
}

impl From<RfError> for CliError {
    fn from(e: RfError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<ScenarioError> for CliError {
    fn from(e: ScenarioError) -> Self {
        match e {
            ScenarioError::InvalidParams(_) => CliError::Usage(e.to_string()),
            _ => CliError::Io(e.to_string()),
        }
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        CliError::Infeasible(e.to_string())
    }
}

impl From<ExperimentError> for CliError {
    fn from(e: ExperimentError) -> Self {
        match e {
            ExperimentError::Config(_) => CliError::Usage(e.to_string()),
            ExperimentError::Infeasible(_) => CliError::Infeasible(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolicyArg {
    Oss,
    Noss,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GeneratorArg {
    Hppp,
    Mcpp,
}

/// Radio, airspace, and sharing-policy parameters shared by subcommands.
#[derive(Debug, Args)]
struct CommonArgs {
    /// EIRP P_T in dBm.
    #[arg(long, default_value_t = 30.0, allow_negative_numbers = true)]
    eirp_dbm: f64,
    /// Carrier frequency in Hz.
    #[arg(long, default_value_t = 2e9)]
    carrier_hz: f64,
    /// Pathloss exponent n.
    #[arg(long, default_value_t = 2.0)]
    pathloss_exp: f64,
    /// Receiver sensitivity P_min in dBm.
    #[arg(long, default_value_t = -70.0, allow_negative_numbers = true)]
    sensitivity_dbm: f64,
    /// Antenna beamwidth in degrees.
    #[arg(long, default_value_t = 60.0)]
    beamwidth_deg: f64,
    /// Side-lobe gain in dB.
    #[arg(long, default_value_t = -10.0, allow_negative_numbers = true)]
    sidelobe_gain_db: f64,
    /// Horizontal extent of the area in x, meters (centered on the origin).
    #[arg(long, default_value_t = 3000.0)]
    area_x_m: f64,
    /// Horizontal extent of the area in y, meters (centered on the origin).
    #[arg(long, default_value_t = 3000.0)]
    area_y_m: f64,
    /// Corridor floor, meters.
    #[arg(long, default_value_t = 100.0)]
    h_min_m: f64,
    /// Corridor ceiling, meters.
    #[arg(long, default_value_t = 300.0)]
    h_max_m: f64,
    /// Spectrum sharing policy.
    #[arg(long, value_enum, default_value_t = PolicyArg::Oss)]
    policy: PolicyArg,
    /// Guard altitude for terrestrial users under N-OSS, meters.
    #[arg(long, default_value_t = 50.0)]
    h_guard_m: f64,
    /// Peak tolerated interference at terrestrial users, dBm (N-OSS).
    #[arg(long, default_value_t = -73.0, allow_negative_numbers = true)]
    interference_dbm: f64,
}

impl CommonArgs {
    fn radio(&self) -> Result<RadioConfig, CliError> {
        Ok(RadioConfig::new(
            self.eirp_dbm,
            self.carrier_hz,
            self.pathloss_exp,
            self.sensitivity_dbm,
            self.beamwidth_deg,
            self.sidelobe_gain_db,
        )?)
    }

    fn airspace(&self) -> Result<Airspace, CliError> {
        Ok(Airspace::centered(
            self.area_x_m,
            self.area_y_m,
            self.h_min_m,
            self.h_max_m,
        )?)
    }

    fn sharing_policy(&self) -> Result<SharingPolicy, CliError> {
        let policy = match self.policy {
            PolicyArg::Oss => SharingPolicy::Oss,
            PolicyArg::Noss => SharingPolicy::Noss {
                guard_alt_m: self.h_guard_m,
                interference_dbm: self.interference_dbm,
            },
        };
        policy.validate()?;
        Ok(policy)
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "aircov",
    about = "Optimal 3D placement of a directional-antenna UAV base station \
             for maximal coverage of UAV users",
    version
)]
struct Cli {
    #[command(flatten)]
    common: CommonArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a scenario file of UAV-user positions.
    Gen {
        /// Output scenario file.
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = GeneratorArg::Hppp)]
        generator: GeneratorArg,
        /// HPPP density, users per km³.
        #[arg(long, default_value_t = 30.0)]
        density_per_km3: f64,
        /// MCPP parent density per km³.
        #[arg(long, default_value_t = 5.0)]
        parent_density_per_km3: f64,
        /// MCPP daughter density per km³.
        #[arg(long, default_value_t = 200.0)]
        daughter_density_per_km3: f64,
        /// MCPP cluster radius, meters.
        #[arg(long, default_value_t = 150.0)]
        daughter_radius_m: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Solve one scenario and print the placement report.
    Solve {
        /// Scenario file to solve (its stored airspace governs).
        #[arg(long)]
        scenario: PathBuf,
        /// Evaluate only the minimum feasible altitude per power (N-OSS).
        #[arg(long, default_value_t = false)]
        fast_altitude: bool,
        /// Altitude grid step, meters.
        #[arg(long, default_value_t = 5.0)]
        altitude_step_m: f64,
        /// Power grid step, dB (N-OSS).
        #[arg(long, default_value_t = 0.5)]
        power_step_db: f64,
    },
    /// Run a Monte-Carlo sweep experiment from a config file.
    Sweep {
        /// TOML config; see configs/ for examples.
        #[arg(long)]
        config: PathBuf,
    },
    /// Compare the placement solver against the brute-force oracle.
    Bench {
        /// Users per instance.
        #[arg(long, default_value_t = 20)]
        users: usize,
        /// Number of seeded instances.
        #[arg(long, default_value_t = 200)]
        instances: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Oracle grid resolution, meters.
        #[arg(long, default_value_t = 25.0)]
        resolution_m: f64,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Gen {
            out,
            generator,
            density_per_km3,
            parent_density_per_km3,
            daughter_density_per_km3,
            daughter_radius_m,
            seed,
        } => {
            let airspace = cli.common.airspace()?;
            let scenario = match generator {
                GeneratorArg::Hppp => {
                    if density_per_km3 < 0.0 {
                        return Err(CliError::Usage(format!(
                            "density must be >= 0, got {density_per_km3}"
                        )));
                    }
                    gen_hppp(airspace, density_per_km3, seed)
                }
                GeneratorArg::Mcpp => {
                    let params = McppParams {
                        parent_density_per_km3,
                        daughter_density_per_km3,
                        daughter_radius_m,
                    };
                    params.validate()?;
                    gen_mcpp(airspace, params, seed)
                }
            };
            save_scenario(&scenario, &out)?;
            println!("wrote {} users to {}", scenario.users.len(), out.display());
            Ok(())
        }
        Command::Solve {
            scenario,
            fast_altitude,
            altitude_step_m,
            power_step_db,
        } => {
            let path = scenario;
            let scenario = load_scenario(&path)?;
            let cfg = cli.common.radio()?;
            let policy = cli.common.sharing_policy()?;
            let sweep = SweepConfig {
                altitude_step_m,
                power_step_db,
                ..SweepConfig::default()
            };
            sweep.validate()?;
            let airspace = scenario.airspace;
            let placement = match &policy {
                SharingPolicy::Oss => solve_oss(&scenario, &cfg, &airspace, &sweep),
                noss @ SharingPolicy::Noss { .. } => {
                    solve_noss(&scenario, &cfg, noss, &airspace, &sweep, fast_altitude)?
                }
            };
            audit_placement(&placement, &scenario, &cfg, &policy)?;
            print_report(&path, &scenario, &cfg, &policy, &placement)?;
            Ok(())
        }
        Command::Sweep { config } => {
            let text = std::fs::read_to_string(&config)
                .map_err(|e| CliError::Io(format!("{}: {e}", config.display())))?;
            let experiment = ExperimentConfig::parse_toml(&text)?;
            let result = run_experiment(&experiment)?;
            if let Some(path) = &experiment.csv {
                emit_csv(&result, path)?;
                println!("wrote {}", path.display());
            }
            if let Some(path) = &experiment.svg {
                emit_svg(&result, path)?;
                println!("wrote {}", path.display());
            }
            if experiment.csv.is_none() && experiment.svg.is_none() {
                print!("{}", csv_string(&result));
            }
            Ok(())
        }
        Command::Bench {
            users,
            instances,
            seed,
            resolution_m,
        } => {
            if users == 0 || instances == 0 || resolution_m <= 0.0 {
                return Err(CliError::Usage(
                    "users, instances, and resolution must be positive".into(),
                ));
            }
            let report = oracle_agreement(users, instances, seed, resolution_m);
            println!("instances: {} with {} users each", report.instances, users);
            println!("agreement {}/{}", report.agreement, report.instances);
            let per = |total: std::time::Duration| total.as_secs_f64() * 1e3 / instances as f64;
            println!(
                "angular sweep: {:.1} ms total ({:.3} ms/instance)",
                report.sweep_total.as_secs_f64() * 1e3,
                per(report.sweep_total)
            );
            println!(
                "brute force:   {:.1} ms total ({:.3} ms/instance)",
                report.brute_total.as_secs_f64() * 1e3,
                per(report.brute_total)
            );
            if report.agreement != report.instances {
                return Err(CliError::Infeasible(format!(
                    "oracle disagreement on {} instances",
                    report.instances - report.agreement
                )));
            }
            Ok(())
        }
    }
}

fn print_report(
    path: &std::path::Path,
    scenario: &Scenario,
    cfg: &RadioConfig,
    policy: &SharingPolicy,
    placement: &Placement,
) -> Result<(), CliError> {
    let generator = match &scenario.generator {
        aircov_core::scenario::Generator::Hppp { density_per_km3 } => {
            format!("hppp density {density_per_km3}/km3")
        }
        aircov_core::scenario::Generator::Mcpp(p) => format!(
            "mcpp parents {}/km3 daughters {}/km3 radius {} m",
            p.parent_density_per_km3, p.daughter_density_per_km3, p.daughter_radius_m
        ),
        aircov_core::scenario::Generator::Manual => "manual".to_string(),
    };
    println!(
        "scenario: {} ({} users, seed {}, {})",
        path.display(),
        scenario.users.len(),
        scenario.seed,
        generator
    );
    let cfg_at = cfg.with_eirp_dbm(placement.eirp_dbm);
    match policy {
        SharingPolicy::Oss => println!("policy: oss"),
        noss @ SharingPolicy::Noss {
            guard_alt_m,
            interference_dbm,
        } => {
            let bounds = noss_power_bounds(cfg, noss, &scenario.airspace)?;
            println!(
                "policy: noss (h_guard {guard_alt_m} m, interference {interference_dbm} dBm, \
                 feasible EIRP [{:.2}, {:.2}] dBm)",
                bounds.p_low_dbm, bounds.p_high_dbm
            );
            println!(
                "min altitude at chosen EIRP: {:.2} m",
                min_altitude_noss_m(&cfg_at, noss)?
            );
        }
    }
    println!("eirp: {:.2} dBm", placement.eirp_dbm);
    println!("d_max: {:.2} m", max_link_distance_m(&cfg_at));
    println!(
        "placement: x = {:.2} m, y = {:.2} m, z = {:.2} m",
        placement.bs_position.x, placement.bs_position.y, placement.bs_position.z
    );
    let region = aircov_core::geom::region_descriptor(
        max_link_distance_m(&cfg_at),
        cfg_at.beamwidth_deg,
        placement.bs_position,
    );
    println!(
        "coverage region: cone height {:.2} m, base radius {:.2} m, \
         cap semi-axis {:.2} m, ellipsoid center z = {:.2} m",
        region.h_cone_m, region.r_base_m, region.cap_semi_axis_m, region.ellipsoid_center.z
    );
    println!("covered: {} / {}", placement.count, scenario.users.len());
    println!("audit: ok");
    let indices: Vec<String> = placement
        .covered
        .iter()
        .enumerate()
        .filter(|(_, covered)| **covered)
        .map(|(i, _)| i.to_string())
        .collect();
    println!("covered indices: {}", indices.join(" "));
    Ok(())
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
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
