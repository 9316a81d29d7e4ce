//! Optimal 3D placement of a directional-antenna UAV base station for
//! maximal coverage of UAV users.
//!
//! The crate is organized around the placement pipeline:
//!
//! - [`rf`] — link-budget and spectrum-sharing arithmetic: antenna gain,
//!   pathloss, maximal link distance, the N-OSS minimum-altitude and
//!   EIRP-interval constraints, and the per-user coverage predicate.
//! - [`geom`] — the coverage region (cone capped by a sphere) and its
//!   reduction, at a fixed base-station altitude, to one closed disk per
//!   coverable user.
//! - [`maxcover`] — exact maximum-depth point in a disk arrangement
//!   (angular sweep, O(n² log n)) plus a brute-force oracle.
//! - [`solver`] — the altitude sweep (OSS) and the joint power/altitude
//!   sweep (N-OSS) built on the 2D subproblem.
//! - [`scenario`] — seeded HPPP / Matérn-cluster user generation and
//!   scenario file persistence.
//! - [`baselines`] — minimum-sum-distance and random placements for
//!   comparison.
//!
//! The numeric core is generic over the scalar type via [`Real`] (f32 or
//! f64); the aliases below fix f64, which is what the solvers and the CLI
//! use.

// Negated float comparisons like `!(x > 0.0)` are deliberate: they treat
// NaN as a validation failure instead of silently passing it through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod baselines;
pub mod geom;
pub mod maxcover;
pub mod real;
pub mod rf;
pub mod scenario;
pub mod solver;

pub use real::Real;

// Concrete f64 instantiations used throughout the harness and CLI.
pub type Point2 = geom::Point2<f64>;
pub type Point3 = geom::Point3<f64>;
pub type UserDisk = geom::UserDisk<f64>;
pub type RegionDescriptor = geom::RegionDescriptor<f64>;
pub type RadioConfig = rf::RadioConfig<f64>;
pub type SharingPolicy = rf::SharingPolicy<f64>;
pub type Airspace = rf::Airspace<f64>;
pub type NossPowerBounds = rf::NossPowerBounds<f64>;
pub type Scenario = scenario::Scenario<f64>;
pub type McppParams = scenario::McppParams<f64>;
pub type Placement = solver::Placement<f64>;
pub type SweepConfig = solver::SweepConfig<f64>;
