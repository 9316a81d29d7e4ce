//! Benchmark placements: minimum sum distance and random.
//!
//! Both honor the same feasibility constraints as the solver — the h_max
//! altitude floor, raised to z_min(P_T) under N-OSS — and evaluate coverage
//! with the exact predicate. Neither optimizes coverage; they exist to be
//! compared against.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::geom::Point3;
use crate::real::Real;
use crate::rf::{
    max_link_distance_m, min_altitude_noss_m, noss_power_bounds, Airspace, RadioConfig, RfError,
    SharingPolicy,
};
use crate::scenario::Scenario;
use crate::solver::{evaluate_placement, Placement};

#[derive(Debug, Error)]
pub enum BaselineError {
    #[error("minimum-sum-distance placement requires a non-empty scenario")]
    EmptyScenario,
    #[error("infeasible N-OSS power bounds: p_low = {p_low_dbm} dBm, p_high = {p_high_dbm} dBm")]
    InfeasiblePowerBounds { p_low_dbm: f64, p_high_dbm: f64 },
    #[error(transparent)]
    Rf(#[from] RfError),
}

fn altitude_floor<F: Real>(
    cfg: &RadioConfig<F>,
    policy: &SharingPolicy<F>,
    airspace: &Airspace<F>,
) -> Result<F, RfError> {
    match policy {
        SharingPolicy::Oss => Ok(airspace.h_max_m),
        SharingPolicy::Noss { .. } => Ok(airspace.h_max_m.max(min_altitude_noss_m(cfg, policy)?)),
    }
}

fn sum_distance<F: Real>(users: &[Point3<F>], q: &Point3<F>) -> F {
    users.iter().fold(F::zero(), |acc, u| acc + u.dist(q))
}

/// Places the UAV-BS at the point minimizing the sum of distances to all
/// users, subject to the altitude floor: iteratively reweighted centroid
/// updates (Weiszfeld) with the altitude coordinate projected onto the
/// feasible half-line. Converges when the update step drops below 1e-6 m
/// or after 10 000 iterations.
pub fn min_sum_distance_placement<F: Real>(
    scenario: &Scenario<F>,
    cfg: &RadioConfig<F>,
    policy: &SharingPolicy<F>,
    airspace: &Airspace<F>,
) -> Result<Placement<F>, BaselineError> {
    if scenario.users.is_empty() {
        return Err(BaselineError::EmptyScenario);
    }
    let floor = altitude_floor(cfg, policy, airspace)?;
    let users = &scenario.users;
    let n = F::from_usize(users.len()).unwrap();

    // Start from the centroid, altitude projected.
    let mut q = users.iter().fold(Point3::<F>::default(), |acc, u| {
        Point3::new(acc.x + u.x / n, acc.y + u.y / n, acc.z + u.z / n)
    });
    q.z = q.z.max(floor);
    let mut objective = sum_distance(users, &q);

    for _ in 0..10_000 {
        // Gradient is undefined at a data point; step off it.
        if users.iter().any(|u| u.dist(&q) < F::lit(1e-12)) {
            q.x = q.x + F::lit(1e-9);
            continue;
        }
        let mut wsum = F::zero();
        let mut next = Point3::<F>::default();
        for u in users {
            let w = F::one() / u.dist(&q);
            wsum = wsum + w;
            next = Point3::new(next.x + u.x * w, next.y + u.y * w, next.z + u.z * w);
        }
        let mut next = Point3::new(next.x / wsum, next.y / wsum, next.z / wsum);
        next.z = next.z.max(floor);
        let step = q.dist(&next);
        let next_objective = sum_distance(users, &next);
        debug_assert!(
            next_objective <= objective + F::lit(1e-9) * (F::one() + objective),
            "sum-distance objective increased: {objective} -> {next_objective}"
        );
        q = next;
        objective = next_objective;
        if step < F::lit(1e-6) {
            break;
        }
    }
    Ok(evaluate_placement(scenario, q, cfg))
}

/// Places the UAV-BS uniformly at random in the same feasible region the
/// solver sweeps: horizontal position uniform in the airspace box, altitude
/// uniform in [floor, h_max + d_max]; under N-OSS the EIRP is first drawn
/// uniformly from [P_T^low, P_T^high].
pub fn random_placement<F>(
    scenario: &Scenario<F>,
    airspace: &Airspace<F>,
    cfg: &RadioConfig<F>,
    policy: &SharingPolicy<F>,
    seed: u64,
) -> Result<Placement<F>, BaselineError>
where
    F: Real + rand::distr::uniform::SampleUniform,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x = rng.random_range(airspace.x_min_m..=airspace.x_max_m);
    let y = rng.random_range(airspace.y_min_m..=airspace.y_max_m);
    let cfg = match policy {
        SharingPolicy::Oss => *cfg,
        SharingPolicy::Noss { .. } => {
            let bounds = noss_power_bounds(cfg, policy, airspace)?;
            if !bounds.feasible || !bounds.p_low_dbm.is_finite() || !bounds.p_high_dbm.is_finite() {
                return Err(BaselineError::InfeasiblePowerBounds {
                    p_low_dbm: bounds.p_low_dbm.to_f64().unwrap_or(f64::NAN),
                    p_high_dbm: bounds.p_high_dbm.to_f64().unwrap_or(f64::NAN),
                });
            }
            cfg.with_eirp_dbm(rng.random_range(bounds.p_low_dbm..=bounds.p_high_dbm))
        }
    };
    let floor = altitude_floor(&cfg, policy, airspace)?;
    let ceiling = (airspace.h_max_m + max_link_distance_m(&cfg)).max(floor);
    let z = rng.random_range(floor..=ceiling);
    Ok(evaluate_placement(scenario, Point3::new(x, y, z), &cfg))
}
