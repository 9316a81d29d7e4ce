//! Solver-versus-oracle agreement and timing on seeded disk instances.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use aircov_core::geom::{disks_at_altitude, UserDisk};
use aircov_core::maxcover::{brute_force_2d, max_coverage_2d, TieBreak};
use aircov_core::rf::max_link_distance_m;
use aircov_core::{Point3, RadioConfig};

#[derive(Debug, Clone, Copy)]
pub struct BenchReport {
    pub instances: usize,
    pub agreement: usize,
    pub sweep_total: Duration,
    pub brute_total: Duration,
}

/// Random instance in the solver's native geometry: `users` points uniform
/// in the default corridor, observed at a random altitude with randomized
/// EIRP and beamwidth.
pub fn random_instance(users: usize, seed: u64) -> Vec<UserDisk<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<Point3> = (0..users)
        .map(|_| {
            Point3::new(
                rng.random_range(-1500.0..=1500.0),
                rng.random_range(-1500.0..=1500.0),
                rng.random_range(100.0..=300.0),
            )
        })
        .collect();
    let eirp = rng.random_range(15.0..=35.0);
    let beamwidth = rng.random_range(30.0..=120.0);
    let cfg = RadioConfig::new(eirp, 2e9, 2.0, -70.0, beamwidth, -10.0).unwrap();
    let d_max = max_link_distance_m(&cfg);
    let z = rng.random_range(300.0..=300.0 + d_max);
    disks_at_altitude(&points, z, d_max, beamwidth)
}

/// Runs `instances` seeded instances through both the angular sweep and the
/// brute-force oracle and counts exact count agreements.
pub fn oracle_agreement(
    users: usize,
    instances: usize,
    seed: u64,
    resolution_m: f64,
) -> BenchReport {
    let mut agreement = 0usize;
    let mut sweep_total = Duration::ZERO;
    let mut brute_total = Duration::ZERO;
    for k in 0..instances {
        let disks = random_instance(users, seed.wrapping_add(k as u64));
        let t0 = Instant::now();
        let (_, _, fast) = max_coverage_2d(&disks, TieBreak::default());
        sweep_total += t0.elapsed();
        let t0 = Instant::now();
        let (_, slow) = brute_force_2d(&disks, resolution_m);
        brute_total += t0.elapsed();
        agreement += usize::from(fast == slow);
    }
    BenchReport {
        instances,
        agreement,
        sweep_total,
        brute_total,
    }
}
