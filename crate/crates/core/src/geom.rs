//! Coverage-region geometry.
//!
//! The 3D coverage region of a down-tilted directional antenna is a spherical
//! sector: a cone of half-angle `θ_B/2` with apex at the base station, capped
//! by the sphere of radius `d_max`. At a fixed base-station altitude the
//! region intersects each user's horizontal plane in a disk, which reduces
//! the 3D placement subproblem to a 2D one: [`disks_at_altitude`] builds one
//! disk per coverable user, and membership in that disk is equivalent to the
//! 3D coverage predicate.

use crate::real::Real;

/// A point in the horizontal plane, in meters.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point2<F> {
    pub x: F,
    pub y: F,
}

impl<F: Real> Point2<F> {
    pub fn new(x: F, y: F) -> Self {
        Self { x, y }
    }

    /// Squared Euclidean distance to `other` in m².
    pub fn dist_sq(&self, other: &Self) -> F {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }

    pub fn dist(&self, other: &Self) -> F {
        self.dist_sq(other).sqrt()
    }
}

/// A point in the simulation volume, in meters.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point3<F> {
    pub x: F,
    pub y: F,
    pub z: F,
}

impl<F: Real> Point3<F> {
    pub fn new(x: F, y: F, z: F) -> Self {
        Self { x, y, z }
    }

    /// Horizontal projection.
    pub fn xy(&self) -> Point2<F> {
        Point2::new(self.x, self.y)
    }

    pub fn dist_sq(&self, other: &Self) -> F {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        let dz = self.z - other.z;
        dx * dx + dy * dy + dz * dz
    }

    pub fn dist(&self, other: &Self) -> F {
        self.dist_sq(other).sqrt()
    }
}

/// Geometric descriptors of the coverage region at a given link range.
///
/// `h_cone_m` and `r_base_m` describe the cone; `cap_semi_axis_m` and
/// `ellipsoid_center` describe the faced-down half ellipsoid conventionally
/// drawn over the spherical cap. The ellipsoid is a visualization aid only:
/// coverage decisions use the exact sector conditions (see
/// [`admissible_radius_m`]), and strictly between `h_cone` and `d_max` the
/// ellipsoid radius over-estimates the cap radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionDescriptor<F> {
    /// Maximal link distance in meters.
    pub d_max_m: F,
    /// Cone height: d_max · cos(θ_B/2).
    pub h_cone_m: F,
    /// Cone base radius: d_max · sin(θ_B/2).
    pub r_base_m: F,
    /// Vertical semi-axis of the half ellipsoid: d_max − h_cone.
    pub cap_semi_axis_m: F,
    /// Center of the half ellipsoid: (x_BS, y_BS, z_BS − h_cone).
    pub ellipsoid_center: Point3<F>,
}

/// The horizontal footprint of the coverage region in one user's plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UserDisk<F> {
    /// The user's horizontal position.
    pub center_xy: Point2<F>,
    /// Admissible horizontal offset of the base station, in meters.
    pub radius_m: F,
    /// Index of the user in the originating scenario.
    pub user_index: usize,
}

impl<F: Real> UserDisk<F> {
    /// Closed-disk membership test. This is the single boundary definition
    /// shared by the solvers, the brute-force oracle, and (through
    /// [`admissible_radius_m`]) the 3D coverage predicate.
    pub fn contains(&self, p: &Point2<F>) -> bool {
        self.center_xy.dist_sq(p) <= self.radius_m * self.radius_m
    }
}

/// Computes the cone/ellipsoid descriptors for a base station at `bs`.
pub fn region_descriptor<F: Real>(
    d_max_m: F,
    beamwidth_deg: F,
    bs: Point3<F>,
) -> RegionDescriptor<F> {
    let half = (beamwidth_deg / F::lit(2.0)).to_radians();
    let h_cone_m = d_max_m * half.cos();
    let r_base_m = d_max_m * half.sin();
    RegionDescriptor {
        d_max_m,
        h_cone_m,
        r_base_m,
        cap_semi_axis_m: d_max_m - h_cone_m,
        ellipsoid_center: Point3::new(bs.x, bs.y, bs.z - h_cone_m),
    }
}

/// Maximal horizontal offset at which a user `ue_alt_m` meters high is
/// covered by a base station `bs_alt_m` meters high, or `None` if no
/// horizontal position covers it.
///
/// With Δz = bs_alt − ue_alt, the beamwidth condition caps the offset at
/// Δz·tan(θ_B/2) and the link-range condition at √(d_max² − Δz²); the disk
/// radius is the smaller of the two. Δz ≤ 0 (user level with or above the
/// down-tilted antenna) and Δz > d_max are uncoverable.
pub fn admissible_radius_m<F: Real>(
    bs_alt_m: F,
    ue_alt_m: F,
    d_max_m: F,
    beamwidth_deg: F,
) -> Option<F> {
    let dz = bs_alt_m - ue_alt_m;
    if dz <= F::zero() || dz > d_max_m {
        return None;
    }
    let half = (beamwidth_deg / F::lit(2.0)).to_radians();
    let cone = dz * half.tan();
    let cap = (d_max_m * d_max_m - dz * dz).max(F::zero()).sqrt();
    Some(cone.min(cap))
}

/// Reduces the 3D coverage test at a fixed base-station altitude to one
/// closed disk per coverable user. Users that cannot be covered at this
/// altitude are omitted; a user exactly `d_max` below contributes a
/// radius-0 disk.
pub fn disks_at_altitude<F: Real>(
    users: &[Point3<F>],
    bs_alt_m: F,
    d_max_m: F,
    beamwidth_deg: F,
) -> Vec<UserDisk<F>> {
    users
        .iter()
        .enumerate()
        .filter_map(|(i, u)| {
            admissible_radius_m(bs_alt_m, u.z, d_max_m, beamwidth_deg).map(|r| UserDisk {
                center_xy: u.xy(),
                radius_m: r,
                user_index: i,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn region_descriptor_matches_hand_values() {
        // d_max = 1193.66 m, θ_B = 60°: h_cone = d·cos30°, R_base = d·sin30°.
        let r = region_descriptor(1193.66, 60.0, Point3::new(0.0, 0.0, 1500.0));
        assert!(close(r.h_cone_m, 1033.74, 0.01));
        assert!(close(r.r_base_m, 596.83, 0.01));
        assert!(close(r.ellipsoid_center.z, 466.26, 0.01));
        assert!(close(r.cap_semi_axis_m, 1193.66 - 1033.74, 0.01));
        // Pythagoras on the cone dimensions.
        let lhs = r.h_cone_m * r.h_cone_m + r.r_base_m * r.r_base_m;
        assert!((lhs / (r.d_max_m * r.d_max_m) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn region_descriptor_limits() {
        // Near-hemisphere beam: cone collapses, base approaches d_max.
        let r = region_descriptor(500.0, 179.99, Point3::default());
        assert!(r.h_cone_m < 0.1);
        assert!(close(r.r_base_m, 500.0, 0.1));
        // Pencil beam: cone is the whole region.
        let r = region_descriptor(500.0, 0.01, Point3::default());
        assert!(close(r.h_cone_m, 500.0, 0.1));
        assert!(r.r_base_m < 0.1);
    }

    #[test]
    fn admissible_radius_cone_and_sphere_limited() {
        // Δz = 400: cone 400·tan30° = 230.94 < √(10⁶ − 16·10⁴) = 916.5.
        let r = admissible_radius_m(700.0, 300.0, 1000.0, 60.0).unwrap();
        assert!(close(r, 230.94, 0.01));
        // Δz = 900: sphere √(10⁶ − 81·10⁴) = 435.89 < 900·tan30° = 519.6.
        let r = admissible_radius_m(1200.0, 300.0, 1000.0, 60.0).unwrap();
        assert!(close(r, 435.89, 0.01));
    }

    #[test]
    fn admissible_radius_boundaries() {
        // Δz = d_max: degenerate radius-0 disk.
        assert_eq!(admissible_radius_m(1300.0, 300.0, 1000.0, 60.0), Some(0.0));
        // Δz = 0 and Δz < 0: uncoverable.
        assert_eq!(admissible_radius_m(300.0, 300.0, 1000.0, 60.0), None);
        assert_eq!(admissible_radius_m(200.0, 300.0, 1000.0, 60.0), None);
        // Δz just above d_max: uncoverable.
        assert_eq!(admissible_radius_m(1300.1, 300.0, 1000.0, 60.0), None);
    }

    #[test]
    fn admissible_radius_peaks_at_cone_height() {
        let d = 1000.0;
        let theta = 60.0f64;
        let h_cone = d * (theta / 2.0).to_radians().cos();
        let r_base = d * (theta / 2.0).to_radians().sin();
        let at_peak = admissible_radius_m(h_cone + 300.0, 300.0, d, theta).unwrap();
        assert!(close(at_peak, r_base, 1e-9));
        for k in 1..200 {
            let dz = d * k as f64 / 200.0;
            let r = admissible_radius_m(dz + 300.0, 300.0, d, theta).unwrap();
            assert!(
                r <= r_base + 1e-9,
                "radius {r} exceeds R_base {r_base} at dz {dz}"
            );
        }
    }

    #[test]
    fn ellipsoid_dominates_exact_cap_between_hcone_and_dmax() {
        // The half ellipsoid agrees with the spherical cap at Δz = h_cone
        // (radius R_base) and Δz = d_max (radius 0) and over-estimates it
        // strictly in between.
        let d = 1193.66;
        let r = region_descriptor(d, 60.0, Point3::new(0.0, 0.0, 1500.0));
        let ellipse_radius = |dz: f64| {
            let t = (dz - r.h_cone_m) / r.cap_semi_axis_m;
            r.r_base_m * (1.0 - t * t).max(0.0).sqrt()
        };
        let cap_radius = |dz: f64| (d * d - dz * dz).max(0.0).sqrt();
        assert!(close(
            ellipse_radius(r.h_cone_m),
            cap_radius(r.h_cone_m),
            1e-9
        ));
        assert!(close(ellipse_radius(d), cap_radius(d), 1e-9));
        for k in 1..100 {
            let dz = r.h_cone_m + (d - r.h_cone_m) * k as f64 / 100.0;
            assert!(
                ellipse_radius(dz) >= cap_radius(dz) - 1e-9,
                "ellipsoid radius below cap radius at dz {dz}"
            );
        }
    }

    #[test]
    fn disks_at_altitude_examples() {
        let none: Vec<Point3<f64>> = vec![];
        assert!(disks_at_altitude(&none, 700.0, 1000.0, 60.0).is_empty());

        let users = vec![Point3::new(5.0, 5.0, 300.0)];
        let disks = disks_at_altitude(&users, 700.0, 1000.0, 60.0);
        assert_eq!(disks.len(), 1);
        assert_eq!(disks[0].user_index, 0);
        assert_eq!(disks[0].center_xy, Point2::new(5.0, 5.0));
        assert!(close(disks[0].radius_m, 230.94, 0.01));

        // User level with the base station is omitted.
        let users = vec![Point3::new(0.0, 0.0, 700.0)];
        assert!(disks_at_altitude(&users, 700.0, 1000.0, 60.0).is_empty());
    }

    #[test]
    fn generic_scalar_f32() {
        let r = admissible_radius_m(700.0f32, 300.0, 1000.0, 60.0).unwrap();
        assert!((r - 230.94).abs() < 0.05);
    }
}
