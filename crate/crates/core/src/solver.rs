//! Optimal UAV-BS placement by exhaustive sweep over the feasible grid.
//!
//! Under OSS the altitude is swept over [h_max, h_max + d_max]; under N-OSS
//! an outer EIRP sweep over [P_T^low, P_T^high] is added and the altitude
//! loop starts at the interference-safe minimum z_min(P_T). At each grid
//! cell the 2D subproblem is solved exactly by
//! [`max_coverage_2d`](crate::maxcover::max_coverage_2d).
//!
//! Sweeping altitudes rather than horizontal positions is what keeps the
//! search exact: at a fixed altitude the coverage condition per user is one
//! closed disk, and the max-depth point of the disk arrangement is the
//! optimal horizontal placement.

use thiserror::Error;

use crate::geom::{disks_at_altitude, Point2, Point3};
use crate::maxcover::{max_coverage_2d, TieBreak};
use crate::real::Real;
use crate::rf::{
    self, max_link_distance_m, min_altitude_noss_m, noss_power_bounds, Airspace, RadioConfig,
    RfError, SharingPolicy,
};
use crate::scenario::Scenario;

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("infeasible N-OSS power bounds: p_low = {p_low_dbm} dBm, p_high = {p_high_dbm} dBm, omega = {omega}")]
    InfeasiblePowerBounds {
        p_low_dbm: f64,
        p_high_dbm: f64,
        omega: f64,
    },
    #[error(transparent)]
    Rf(#[from] RfError),
    #[error("placement audit failed: {0}")]
    AuditFailed(String),
}

/// A UAV-BS position with its EIRP and the users it covers.
#[derive(Debug, Clone, PartialEq)]
pub struct Placement<F> {
    pub bs_position: Point3<F>,
    pub eirp_dbm: F,
    /// Per-user coverage indicators, aligned with the scenario's user list.
    pub covered: Vec<bool>,
    pub count: usize,
}

/// Discretization of the continuous altitude and power sweeps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig<F> {
    pub altitude_step_m: F,
    pub power_step_db: F,
    pub tie_break: TieBreak,
}

impl<F: Real> Default for SweepConfig<F> {
    fn default() -> Self {
        Self {
            altitude_step_m: F::lit(5.0),
            power_step_db: F::lit(0.5),
            tie_break: TieBreak::default(),
        }
    }
}

impl<F: Real> SweepConfig<F> {
    pub fn validate(&self) -> Result<(), RfError> {
        if !(self.altitude_step_m > F::zero() && self.power_step_db > F::zero()) {
            return Err(RfError::InvalidConfig(format!(
                "sweep steps must be positive, got altitude {} m, power {} dB",
                self.altitude_step_m, self.power_step_db
            )));
        }
        Ok(())
    }
}

/// Grid over [lo, hi] with the given step, both endpoints included; the
/// final point lands exactly on `hi`. Collapses to [lo] when hi ≤ lo.
pub fn inclusive_grid<F: Real>(lo: F, hi: F, step: F) -> Vec<F> {
    let mut grid = Vec::new();
    if !(hi > lo) {
        grid.push(lo);
        return grid;
    }
    let eps = step * F::lit(1e-9);
    let mut k = 0usize;
    loop {
        let v = lo + F::from_usize(k).unwrap() * step;
        if v >= hi - eps {
            break;
        }
        grid.push(v);
        k += 1;
    }
    grid.push(hi);
    grid
}

/// Evaluates coverage for an arbitrary base-station position: indicators
/// from the exact per-user predicate, using the EIRP in `cfg`.
pub fn evaluate_placement<F: Real>(
    scenario: &Scenario<F>,
    bs_position: Point3<F>,
    cfg: &RadioConfig<F>,
) -> Placement<F> {
    let d_max = max_link_distance_m(cfg);
    let covered: Vec<bool> = scenario
        .users
        .iter()
        .map(|u| rf::is_covered(bs_position, *u, d_max, cfg.beamwidth_deg))
        .collect();
    let count = covered.iter().filter(|c| **c).count();
    Placement {
        bs_position,
        eirp_dbm: cfg.eirp_dbm,
        covered,
        count,
    }
}

/// Best horizontal placement at one fixed altitude.
pub fn solve_at_altitude<F: Real>(
    scenario: &Scenario<F>,
    cfg: &RadioConfig<F>,
    bs_alt_m: F,
    tie_break: TieBreak,
) -> Placement<F> {
    let d_max = max_link_distance_m(cfg);
    let disks = disks_at_altitude(&scenario.users, bs_alt_m, d_max, cfg.beamwidth_deg);
    let (pt, _, count) = max_coverage_2d(&disks, tie_break);
    let pos = if count == 0 {
        Point3::new(
            scenario.airspace.mid_x(),
            scenario.airspace.mid_y(),
            bs_alt_m,
        )
    } else {
        Point3::new(pt.x, pt.y, bs_alt_m)
    };
    let placement = evaluate_placement(scenario, pos, cfg);
    debug_assert_eq!(placement.count, count);
    placement
}

/// One grid-cell outcome during a sweep.
struct Cell<F> {
    count: usize,
    z: F,
    eirp: F,
    pt: Point2<F>,
}

impl<F: Real> Cell<F> {
    /// Total order implementing the tie-break rule: more coverage first,
    /// then lower altitude, lower EIRP, lexicographically smaller (x, y).
    fn better_than(&self, other: &Self) -> bool {
        if self.count != other.count {
            return self.count > other.count;
        }
        if self.z != other.z {
            return self.z < other.z;
        }
        if self.eirp != other.eirp {
            return self.eirp < other.eirp;
        }
        self.pt.x < other.pt.x || (self.pt.x == other.pt.x && self.pt.y < other.pt.y)
    }
}

fn sweep_altitudes<F: Real>(
    scenario: &Scenario<F>,
    cfg: &RadioConfig<F>,
    zs: &[F],
    tie_break: TieBreak,
) -> Cell<F> {
    let d_max = max_link_distance_m(cfg);
    let mut best: Option<Cell<F>> = None;
    for &z in zs {
        let disks = disks_at_altitude(&scenario.users, z, d_max, cfg.beamwidth_deg);
        let (pt, _, count) = max_coverage_2d(&disks, tie_break);
        let cell = Cell {
            count,
            z,
            eirp: cfg.eirp_dbm,
            pt,
        };
        if best.as_ref().is_none_or(|b| cell.better_than(b)) {
            best = Some(cell);
        }
    }
    best.expect("altitude grid is never empty")
}

fn finish<F: Real>(
    scenario: &Scenario<F>,
    cfg: &RadioConfig<F>,
    best: Cell<F>,
    fallback_alt: F,
) -> Placement<F> {
    let pos = if best.count == 0 {
        // Nothing coverable: park mid-airspace at the lowest feasible altitude.
        Point3::new(
            scenario.airspace.mid_x(),
            scenario.airspace.mid_y(),
            fallback_alt,
        )
    } else {
        Point3::new(best.pt.x, best.pt.y, best.z)
    };
    let placement = evaluate_placement(scenario, pos, &cfg.with_eirp_dbm(best.eirp));
    debug_assert_eq!(placement.count, best.count);
    placement
}

/// Optimal placement under OSS: sweeps z over [h_max, h_max + d_max] and
/// solves the 2D subproblem at each altitude. The EIRP is the configured one.
pub fn solve_oss<F: Real>(
    scenario: &Scenario<F>,
    cfg: &RadioConfig<F>,
    airspace: &Airspace<F>,
    sweep: &SweepConfig<F>,
) -> Placement<F> {
    let d_max = max_link_distance_m(cfg);
    let zs = inclusive_grid(
        airspace.h_max_m,
        airspace.h_max_m + d_max,
        sweep.altitude_step_m,
    );
    let best = sweep_altitudes(scenario, cfg, &zs, sweep.tie_break);
    finish(scenario, cfg, best, airspace.h_max_m)
}

fn noss_cell<F: Real>(
    scenario: &Scenario<F>,
    cfg_sans_power: &RadioConfig<F>,
    policy: &SharingPolicy<F>,
    airspace: &Airspace<F>,
    sweep: &SweepConfig<F>,
    eirp_dbm: F,
    fast_altitude: bool,
) -> Result<(Cell<F>, F), SolveError> {
    let cfg = cfg_sans_power.with_eirp_dbm(eirp_dbm);
    let z_min = min_altitude_noss_m(&cfg, policy)?;
    let z_lo = airspace.h_max_m.max(z_min);
    let z_hi = airspace.h_max_m + max_link_distance_m(&cfg);
    // z_lo > z_hi means the coverage region cannot reach the corridor at
    // this power; the single feasible-altitude evaluation yields count 0.
    let zs = if fast_altitude {
        vec![z_lo]
    } else {
        inclusive_grid(z_lo, z_hi.max(z_lo), sweep.altitude_step_m)
    };
    Ok((sweep_altitudes(scenario, &cfg, &zs, sweep.tie_break), z_lo))
}

/// Optimal placement under N-OSS at one fixed EIRP: the altitude loop runs
/// over [max(h_max, z_min(P_T)), h_max + d_max(P_T)], or just its lower
/// endpoint when `fast_altitude` is set.
pub fn solve_noss_fixed_power<F: Real>(
    scenario: &Scenario<F>,
    cfg_sans_power: &RadioConfig<F>,
    policy: &SharingPolicy<F>,
    airspace: &Airspace<F>,
    sweep: &SweepConfig<F>,
    eirp_dbm: F,
    fast_altitude: bool,
) -> Result<Placement<F>, SolveError> {
    let (best, z_lo) = noss_cell(
        scenario,
        cfg_sans_power,
        policy,
        airspace,
        sweep,
        eirp_dbm,
        fast_altitude,
    )?;
    Ok(finish(
        scenario,
        &cfg_sans_power.with_eirp_dbm(eirp_dbm),
        best,
        z_lo,
    ))
}

/// Optimal placement and EIRP under N-OSS: outer sweep over the feasible
/// power interval, inner altitude sweep per power. With `fast_altitude` only
/// the minimum feasible altitude is evaluated per power, which empirically
/// matches the full sweep.
///
/// Errors when the power bounds are infeasible (Ω ≤ 0, crossed, or
/// non-finite); an unreachable corridor with feasible bounds yields a
/// count-0 placement instead.
pub fn solve_noss<F: Real>(
    scenario: &Scenario<F>,
    cfg_sans_power: &RadioConfig<F>,
    policy: &SharingPolicy<F>,
    airspace: &Airspace<F>,
    sweep: &SweepConfig<F>,
    fast_altitude: bool,
) -> Result<Placement<F>, SolveError> {
    let bounds = noss_power_bounds(cfg_sans_power, policy, airspace)?;
    if !bounds.feasible || !bounds.p_low_dbm.is_finite() || !bounds.p_high_dbm.is_finite() {
        return Err(SolveError::InfeasiblePowerBounds {
            p_low_dbm: bounds.p_low_dbm.to_f64().unwrap_or(f64::NAN),
            p_high_dbm: bounds.p_high_dbm.to_f64().unwrap_or(f64::NAN),
            omega: bounds.omega.to_f64().unwrap_or(f64::NAN),
        });
    }
    let powers = inclusive_grid(bounds.p_low_dbm, bounds.p_high_dbm, sweep.power_step_db);
    let mut best: Option<(Cell<F>, F)> = None;
    for &p in &powers {
        let (cell, z_lo) = noss_cell(
            scenario,
            cfg_sans_power,
            policy,
            airspace,
            sweep,
            p,
            fast_altitude,
        )?;
        if best.as_ref().is_none_or(|(b, _)| cell.better_than(b)) {
            best = Some((cell, z_lo));
        }
    }
    let (cell, z_lo) = best.expect("power grid is never empty");
    let eirp = cell.eirp;
    Ok(finish(
        scenario,
        &cfg_sans_power.with_eirp_dbm(eirp),
        cell,
        z_lo,
    ))
}

/// Re-checks a placement against the exact coverage predicate and, under
/// N-OSS, the interference altitude floor.
pub fn audit_placement<F: Real>(
    placement: &Placement<F>,
    scenario: &Scenario<F>,
    cfg: &RadioConfig<F>,
    policy: &SharingPolicy<F>,
) -> Result<(), SolveError> {
    if placement.covered.len() != scenario.users.len() {
        return Err(SolveError::AuditFailed(format!(
            "indicator length {} != user count {}",
            placement.covered.len(),
            scenario.users.len()
        )));
    }
    let cfg = cfg.with_eirp_dbm(placement.eirp_dbm);
    let d_max = max_link_distance_m(&cfg);
    let mut count = 0usize;
    for (i, (u, &flag)) in scenario.users.iter().zip(&placement.covered).enumerate() {
        let actual = rf::is_covered(placement.bs_position, *u, d_max, cfg.beamwidth_deg);
        if actual != flag {
            return Err(SolveError::AuditFailed(format!(
                "indicator mismatch for user {i}: recorded {flag}, predicate says {actual}"
            )));
        }
        count += usize::from(flag);
    }
    if count != placement.count {
        return Err(SolveError::AuditFailed(format!(
            "count {} != number of true indicators {count}",
            placement.count
        )));
    }
    if policy.is_noss() {
        let z_min = min_altitude_noss_m(&cfg, policy)?;
        if placement.bs_position.z < z_min - F::lit(1e-6) {
            return Err(SolveError::AuditFailed(format!(
                "altitude {} below interference-safe minimum {z_min}",
                placement.bs_position.z
            )));
        }
    }
    Ok(())
}
