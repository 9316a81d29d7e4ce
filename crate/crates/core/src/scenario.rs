//! Seeded generation and persistence of UAV-user point sets.
//!
//! Two spatial point processes populate the corridor: a homogeneous Poisson
//! point process (HPPP) and a Matérn cluster point process (MCPP) whose
//! daughters are uniform in a sphere around each parent. Generation is a
//! pure function of (parameters, seed); the ChaCha stream keeps scenarios
//! identical across platforms and thread counts.
//!
//! # Scenario file format
//!
//! Plain text, one record per line, `#` starts a comment line:
//!
//! ```text
//! format aircov-scenario 1
//! seed 42
//! generator hppp 30
//! airspace -1500 1500 -1500 1500 100 300
//! unit meters
//! users 2
//! user 0 -123.5 417.25 150
//! user 1 88.0 -9.75 287.5
//! ```
//!
//! `generator` is `hppp <density_per_km3>`,
//! `mcpp <parent_density_per_km3> <daughter_density_per_km3>
//! <daughter_radius_m>`, or `manual`. `airspace` is
//! `x_min x_max y_min y_max h_min h_max` in meters. `user` records carry
//! `index x y z`. Floats are written with shortest round-trip precision.

use std::fs;
use std::io::Write;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Poisson};
use thiserror::Error;

use crate::geom::Point3;
use crate::real::Real;
use crate::rf::Airspace;

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: {field}: {message}")]
    Parse {
        path: String,
        line: usize,
        field: String,
        message: String,
    },
    #[error("user {index} out of bounds: {field} = {value} not in [{lo}, {hi}]")]
    UserOutOfBounds {
        index: usize,
        field: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
}

/// Matérn cluster process parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McppParams<F> {
    /// Parent (cluster head) density λ_P, per km³.
    pub parent_density_per_km3: F,
    /// Daughter density λ_D inside each cluster sphere, per km³.
    pub daughter_density_per_km3: F,
    /// Cluster sphere radius r_D, meters.
    pub daughter_radius_m: F,
}

impl<F: Real> McppParams<F> {
    pub fn validate(&self) -> Result<(), ScenarioError> {
        if !(self.parent_density_per_km3 > F::zero()
            && self.daughter_density_per_km3 > F::zero()
            && self.daughter_radius_m > F::zero())
        {
            return Err(ScenarioError::InvalidParams(format!(
                "MCPP parameters must be strictly positive, got λ_P = {}, λ_D = {}, r_D = {}",
                self.parent_density_per_km3, self.daughter_density_per_km3, self.daughter_radius_m
            )));
        }
        Ok(())
    }
}

/// How a scenario's users were produced.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Generator<F> {
    Hppp {
        density_per_km3: F,
    },
    Mcpp(McppParams<F>),
    /// Hand-built or externally supplied user set.
    Manual,
}

/// A set of UAV users plus the metadata needed to regenerate it.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario<F> {
    pub users: Vec<Point3<F>>,
    pub seed: u64,
    pub generator: Generator<F>,
    pub airspace: Airspace<F>,
}

impl<F: Real> Scenario<F> {
    /// Wraps an explicit user list, validating corridor membership.
    pub fn manual(users: Vec<Point3<F>>, airspace: Airspace<F>) -> Result<Self, ScenarioError> {
        let s = Self {
            users,
            seed: 0,
            generator: Generator::Manual,
            airspace,
        };
        s.validate()?;
        Ok(s)
    }

    /// Every user must lie inside the horizontal bounds and the corridor.
    pub fn validate(&self) -> Result<(), ScenarioError> {
        for (index, u) in self.users.iter().enumerate() {
            let checks = [
                ("x", u.x, self.airspace.x_min_m, self.airspace.x_max_m),
                ("y", u.y, self.airspace.y_min_m, self.airspace.y_max_m),
                ("z", u.z, self.airspace.h_min_m, self.airspace.h_max_m),
            ];
            for (field, value, lo, hi) in checks {
                if !(lo <= value && value <= hi) {
                    return Err(ScenarioError::UserOutOfBounds {
                        index,
                        field,
                        value: value.to_f64().unwrap_or(f64::NAN),
                        lo: lo.to_f64().unwrap_or(f64::NAN),
                        hi: hi.to_f64().unwrap_or(f64::NAN),
                    });
                }
            }
        }
        Ok(())
    }
}

fn poisson_count(mean: f64, rng: &mut ChaCha8Rng) -> usize {
    if mean <= 0.0 {
        return 0;
    }
    let draw: f64 = Poisson::new(mean)
        .expect("positive finite mean")
        .sample(rng);
    draw as usize
}

fn uniform_in_box<F: Real + rand::distr::uniform::SampleUniform>(
    airspace: &Airspace<F>,
    rng: &mut ChaCha8Rng,
) -> Point3<F> {
    Point3::new(
        rng.random_range(airspace.x_min_m..=airspace.x_max_m),
        rng.random_range(airspace.y_min_m..=airspace.y_max_m),
        rng.random_range(airspace.h_min_m..=airspace.h_max_m),
    )
}

/// Homogeneous Poisson point process: the user count is Poisson(λ·V) with V
/// the corridor volume in km³, positions independent uniform in the box.
pub fn gen_hppp<F: Real + rand::distr::uniform::SampleUniform>(
    airspace: Airspace<F>,
    density_per_km3: F,
    seed: u64,
) -> Scenario<F> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mean = (density_per_km3 * airspace.volume_km3())
        .to_f64()
        .unwrap_or(0.0);
    let count = poisson_count(mean, &mut rng);
    let users = (0..count)
        .map(|_| uniform_in_box(&airspace, &mut rng))
        .collect();
    Scenario {
        users,
        seed,
        generator: Generator::Hppp { density_per_km3 },
        airspace,
    }
}

/// Daughters of one cluster head: Poisson(λ_D · (4/3)π r_D³) points uniform
/// in the sphere around `parent`, truncated to the corridor box by
/// rejection.
pub fn sample_daughters<F: Real + rand::distr::uniform::SampleUniform>(
    parent: Point3<F>,
    params: &McppParams<F>,
    airspace: &Airspace<F>,
    rng: &mut ChaCha8Rng,
) -> Vec<Point3<F>> {
    let r_km = params.daughter_radius_m.to_f64().unwrap_or(0.0) * 1e-3;
    let sphere_km3 = 4.0 / 3.0 * std::f64::consts::PI * r_km.powi(3);
    let mean = params.daughter_density_per_km3.to_f64().unwrap_or(0.0) * sphere_km3;
    let count = poisson_count(mean, rng);
    let r = params.daughter_radius_m;
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        // Uniform in the ball by rejection from the enclosing cube.
        let offset = loop {
            let dx = rng.random_range(-r..=r);
            let dy = rng.random_range(-r..=r);
            let dz = rng.random_range(-r..=r);
            if dx * dx + dy * dy + dz * dz <= r * r {
                break (dx, dy, dz);
            }
        };
        let p = Point3::new(
            parent.x + offset.0,
            parent.y + offset.1,
            parent.z + offset.2,
        );
        if airspace.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// Matérn cluster point process: parent heads are an HPPP(λ_P) in the box;
/// each contributes a sphere of daughters via [`sample_daughters`]. Only
/// daughters become users.
pub fn gen_mcpp<F: Real + rand::distr::uniform::SampleUniform>(
    airspace: Airspace<F>,
    params: McppParams<F>,
    seed: u64,
) -> Scenario<F> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let parent_mean = (params.parent_density_per_km3 * airspace.volume_km3())
        .to_f64()
        .unwrap_or(0.0);
    let parent_count = poisson_count(parent_mean, &mut rng);
    let parents: Vec<Point3<F>> = (0..parent_count)
        .map(|_| uniform_in_box(&airspace, &mut rng))
        .collect();
    let mut users = Vec::new();
    for parent in parents {
        users.extend(sample_daughters(parent, &params, &airspace, &mut rng));
    }
    Scenario {
        users,
        seed,
        generator: Generator::Mcpp(params),
        airspace,
    }
}

// ---------------------------------------------------------------------------
// Persistence (f64 scenarios; the on-disk format is an f64 contract)
// ---------------------------------------------------------------------------

fn fmt_f64(x: f64) -> String {
    // Shortest representation that round-trips.
    format!("{x}")
}

/// Writes a scenario to the line-oriented text format documented in the
/// module docs.
pub fn save_scenario(s: &Scenario<f64>, path: impl AsRef<Path>) -> Result<(), ScenarioError> {
    let path = path.as_ref();
    let mut out = String::new();
    out.push_str("# aircov scenario file\n");
    out.push_str("format aircov-scenario 1\n");
    out.push_str(&format!("seed {}\n", s.seed));
    match &s.generator {
        Generator::Hppp { density_per_km3 } => {
            out.push_str(&format!("generator hppp {}\n", fmt_f64(*density_per_km3)));
        }
        Generator::Mcpp(p) => {
            out.push_str(&format!(
                "generator mcpp {} {} {}\n",
                fmt_f64(p.parent_density_per_km3),
                fmt_f64(p.daughter_density_per_km3),
                fmt_f64(p.daughter_radius_m)
            ));
        }
        Generator::Manual => out.push_str("generator manual\n"),
    }
    let a = &s.airspace;
    out.push_str(&format!(
        "airspace {} {} {} {} {} {}\n",
        fmt_f64(a.x_min_m),
        fmt_f64(a.x_max_m),
        fmt_f64(a.y_min_m),
        fmt_f64(a.y_max_m),
        fmt_f64(a.h_min_m),
        fmt_f64(a.h_max_m)
    ));
    out.push_str("unit meters\n");
    out.push_str(&format!("users {}\n", s.users.len()));
    for (i, u) in s.users.iter().enumerate() {
        out.push_str(&format!(
            "user {} {} {} {}\n",
            i,
            fmt_f64(u.x),
            fmt_f64(u.y),
            fmt_f64(u.z)
        ));
    }
    let mut file = fs::File::create(path).map_err(|source| ScenarioError::Io {
        path: path.display().to_string(),
        source,
    })?;
    file.write_all(out.as_bytes())
        .map_err(|source| ScenarioError::Io {
            path: path.display().to_string(),
            source,
        })
}

struct Parser<'a> {
    path: &'a str,
}

impl<'a> Parser<'a> {
    fn err(&self, line: usize, field: &str, message: impl Into<String>) -> ScenarioError {
        ScenarioError::Parse {
            path: self.path.to_string(),
            line,
            field: field.to_string(),
            message: message.into(),
        }
    }

    fn f64_field(&self, line: usize, field: &str, tok: Option<&str>) -> Result<f64, ScenarioError> {
        let tok = tok.ok_or_else(|| self.err(line, field, "missing value"))?;
        tok.parse::<f64>()
            .map_err(|e| self.err(line, field, format!("not a number ({e}): {tok:?}")))
    }
}

/// Reads a scenario file, validating the header, record counts, and the
/// corridor invariants. Errors identify the offending line and field.
pub fn load_scenario(path: impl AsRef<Path>) -> Result<Scenario<f64>, ScenarioError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| ScenarioError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let path_str = path.display().to_string();
    let p = Parser { path: &path_str };

    let mut seed: Option<u64> = None;
    let mut generator: Option<Generator<f64>> = None;
    let mut airspace: Option<Airspace<f64>> = None;
    let mut declared_users: Option<usize> = None;
    let mut users: Vec<Point3<f64>> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut toks = trimmed.split_whitespace();
        let key = toks.next().unwrap();
        match key {
            "format" => {
                let name = toks.next().unwrap_or("");
                let version = toks.next().unwrap_or("");
                if name != "aircov-scenario" || version != "1" {
                    return Err(p.err(
                        line,
                        "format",
                        format!("unsupported format {name:?} version {version:?}"),
                    ));
                }
            }
            "seed" => {
                let tok = toks
                    .next()
                    .ok_or_else(|| p.err(line, "seed", "missing value"))?;
                seed = Some(tok.parse::<u64>().map_err(|e| {
                    p.err(
                        line,
                        "seed",
                        format!("not an unsigned integer ({e}): {tok:?}"),
                    )
                })?);
            }
            "generator" => {
                let kind = toks
                    .next()
                    .ok_or_else(|| p.err(line, "generator", "missing kind"))?;
                generator = Some(match kind {
                    "hppp" => Generator::Hppp {
                        density_per_km3: p.f64_field(line, "density_per_km3", toks.next())?,
                    },
                    "mcpp" => Generator::Mcpp(McppParams {
                        parent_density_per_km3: p.f64_field(
                            line,
                            "parent_density_per_km3",
                            toks.next(),
                        )?,
                        daughter_density_per_km3: p.f64_field(
                            line,
                            "daughter_density_per_km3",
                            toks.next(),
                        )?,
                        daughter_radius_m: p.f64_field(line, "daughter_radius_m", toks.next())?,
                    }),
                    "manual" => Generator::Manual,
                    other => {
                        return Err(p.err(line, "generator", format!("unknown kind {other:?}")))
                    }
                });
            }
            "airspace" => {
                let a = Airspace::new(
                    p.f64_field(line, "x_min_m", toks.next())?,
                    p.f64_field(line, "x_max_m", toks.next())?,
                    p.f64_field(line, "y_min_m", toks.next())?,
                    p.f64_field(line, "y_max_m", toks.next())?,
                    p.f64_field(line, "h_min_m", toks.next())?,
                    p.f64_field(line, "h_max_m", toks.next())?,
                )
                .map_err(|e| p.err(line, "airspace", e.to_string()))?;
                airspace = Some(a);
            }
            "unit" => {
                let unit = toks.next().unwrap_or("");
                if unit != "meters" {
                    return Err(p.err(line, "unit", format!("expected meters, got {unit:?}")));
                }
            }
            "users" => {
                let tok = toks
                    .next()
                    .ok_or_else(|| p.err(line, "users", "missing count"))?;
                declared_users =
                    Some(tok.parse::<usize>().map_err(|e| {
                        p.err(line, "users", format!("not a count ({e}): {tok:?}"))
                    })?);
            }
            "user" => {
                let idx = toks
                    .next()
                    .ok_or_else(|| p.err(line, "index", "missing value"))?;
                let idx: usize = idx
                    .parse()
                    .map_err(|e| p.err(line, "index", format!("not an index ({e}): {idx:?}")))?;
                if idx != users.len() {
                    return Err(p.err(
                        line,
                        "index",
                        format!(
                            "expected {} (records must be dense and ordered)",
                            users.len()
                        ),
                    ));
                }
                users.push(Point3::new(
                    p.f64_field(line, "x", toks.next())?,
                    p.f64_field(line, "y", toks.next())?,
                    p.f64_field(line, "z", toks.next())?,
                ));
            }
            other => return Err(p.err(line, "record", format!("unknown record {other:?}"))),
        }
    }

    let airspace = airspace.ok_or_else(|| p.err(0, "airspace", "missing airspace record"))?;
    if let Some(n) = declared_users {
        if n != users.len() {
            return Err(p.err(
                0,
                "users",
                format!("declared {n} users but found {}", users.len()),
            ));
        }
    }
    let scenario = Scenario {
        users,
        seed: seed.unwrap_or(0),
        generator: generator.unwrap_or(Generator::Manual),
        airspace,
    };
    scenario.validate()?;
    Ok(scenario)
}
