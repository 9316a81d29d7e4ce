//! Exact maximum-depth point in an arrangement of closed disks.
//!
//! [`max_coverage_2d`] finds a point contained in the largest number of
//! disks with the classic angular sweep: for each disk, the boundary arcs
//! covered by every other disk are accumulated and swept, O(n² log n)
//! overall. The sweep only proposes candidate points; the returned count and
//! covered set come from re-evaluating plain closed-disk membership at the
//! winning candidate, so the result is always self-consistent with
//! [`UserDisk::contains`].
//!
//! [`brute_force_2d`] is the independent oracle: it evaluates disk centers,
//! all pairwise circle intersection points, and a grid, with the same
//! membership predicate.

use crate::geom::{Point2, UserDisk};
use crate::real::Real;

/// Relative tolerance on squared distances for circle-circle intersection
/// classification; tangent circles count as intersecting at one point.
const INTERSECT_REL_TOL: f64 = 1e-9;

/// Relative inward nudge applied to boundary candidates so the winning point
/// sits robustly inside the disks whose boundaries define it.
const INWARD_NUDGE: f64 = 1e-12;

/// Max per-circle sweep stretches turned into candidates; ties beyond this
/// add no depth, only duplicate candidates.
const MAX_STRETCHES_PER_CIRCLE: usize = 4;

/// Deterministic preference among equal-coverage optima: lowest altitude,
/// then lowest EIRP, then lexicographically smallest (x, y). At the 2D level
/// only the (x, y) part applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    LowAltitudeLowPowerLexXy,
}

fn lex_less<F: Real>(a: &Point2<F>, b: &Point2<F>) -> bool {
    a.x < b.x || (a.x == b.x && a.y < b.y)
}

/// Number of disks containing `p`, plus the membership bitmap consumer.
fn depth_at<F: Real>(disks: &[UserDisk<F>], p: &Point2<F>) -> usize {
    disks.iter().filter(|d| d.contains(p)).count()
}

fn covered_set<F: Real>(disks: &[UserDisk<F>], p: &Point2<F>) -> Vec<usize> {
    disks
        .iter()
        .enumerate()
        .filter_map(|(i, d)| d.contains(p).then_some(i))
        .collect()
}

fn point_on_circle<F: Real>(center: &Point2<F>, radius: F, angle: F, inward: bool) -> Point2<F> {
    let r = if inward {
        radius * F::lit(1.0 - INWARD_NUDGE)
    } else {
        radius
    };
    Point2::new(center.x + r * angle.cos(), center.y + r * angle.sin())
}

/// Boundary arcs of circle `i` covered by every other disk, encoded as
/// (+1/−1) events over [0, 2π]. Disks covering the whole circle shift the
/// depth uniformly and cannot move the argmax, so they contribute nothing.
fn collect_events<F: Real>(disks: &[UserDisk<F>], i: usize) -> Vec<(F, i32)> {
    let two_pi = F::lit(std::f64::consts::TAU);
    let ci = disks[i].center_xy;
    let ri = disks[i].radius_m;
    let mut events: Vec<(F, i32)> = Vec::new();
    let mut push_interval = |a: F, b: F| {
        // Interval normalized into [0, 2π]; wrap-around splits in two.
        if a <= b {
            events.push((a, 1));
            events.push((b, -1));
        } else {
            events.push((F::zero(), 1));
            events.push((b, -1));
            events.push((a, 1));
            events.push((two_pi, -1));
        }
    };
    for (j, dj) in disks.iter().enumerate() {
        if j == i {
            continue;
        }
        let rj = dj.radius_m;
        let d = ci.dist(&dj.center_xy);
        if d + ri <= rj {
            continue; // disk j contains the whole circle
        }
        if (d - ri).abs() > rj {
            // Nearest point of circle i to c_j is already outside disk j.
            continue;
        }
        // Proper arc; d > 0 here (d == 0 lands in the branches above).
        let cos_half = ((d * d + ri * ri - rj * rj) / (F::lit(2.0) * d * ri))
            .max(-F::one())
            .min(F::one());
        let half = cos_half.acos();
        let alpha = (dj.center_xy.y - ci.y).atan2(dj.center_xy.x - ci.x);
        let norm = |x: F| {
            let mut x = x % two_pi;
            if x < F::zero() {
                x = x + two_pi;
            }
            x
        };
        push_interval(norm(alpha - half), norm(alpha + half));
    }
    // Starts before ends at equal angles: closed arcs, tangencies count.
    events.sort_by(|a, b| {
        a.0.partial_cmp(&b.0)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(b.1.cmp(&a.1))
    });
    events
}

/// Candidate points on circle `i` where the arc overlap is maximal.
fn circle_candidates<F: Real>(disks: &[UserDisk<F>], i: usize, out: &mut Vec<Point2<F>>) {
    let ci = disks[i].center_xy;
    let ri = disks[i].radius_m;
    if !(ri > F::zero()) {
        return; // degenerate disk: its center is already a candidate
    }
    let events = collect_events(disks, i);
    if events.is_empty() {
        return; // no arcs: the center candidate dominates the whole circle
    }
    let two_pi = F::lit(std::f64::consts::TAU);
    let mut depth = 0i64;
    let mut best = i64::MIN;
    let mut stretches: Vec<(F, F)> = Vec::new();
    for (k, (angle, delta)) in events.iter().enumerate() {
        depth += i64::from(*delta);
        if *delta > 0 {
            let next = events.get(k + 1).map(|e| e.0).unwrap_or(two_pi);
            if depth > best {
                best = depth;
                stretches.clear();
                stretches.push((*angle, next));
            } else if depth == best && stretches.len() < MAX_STRETCHES_PER_CIRCLE {
                stretches.push((*angle, next));
            }
        }
    }
    for (a, b) in stretches {
        let mid = (a + b) / F::lit(2.0);
        out.push(point_on_circle(&ci, ri, a, false));
        out.push(point_on_circle(&ci, ri, a, true));
        out.push(point_on_circle(&ci, ri, mid, false));
        out.push(point_on_circle(&ci, ri, mid, true));
    }
}

/// A point contained in the maximal number of disks, the indices of the
/// disks containing it, and their count. Empty input yields the origin with
/// count 0. The returned set is exactly the disks whose closed membership
/// test accepts the returned point.
pub fn max_coverage_2d<F: Real>(
    disks: &[UserDisk<F>],
    tie_break: TieBreak,
) -> (Point2<F>, Vec<usize>, usize) {
    let TieBreak::LowAltitudeLowPowerLexXy = tie_break;
    if disks.is_empty() {
        return (Point2::new(F::zero(), F::zero()), Vec::new(), 0);
    }
    let mut candidates: Vec<Point2<F>> = disks.iter().map(|d| d.center_xy).collect();
    for i in 0..disks.len() {
        circle_candidates(disks, i, &mut candidates);
    }
    let mut best_point = candidates[0];
    let mut best_count = depth_at(disks, &best_point);
    for p in candidates.iter().skip(1) {
        let count = depth_at(disks, p);
        if count > best_count || (count == best_count && lex_less(p, &best_point)) {
            best_count = count;
            best_point = *p;
        }
    }
    let set = covered_set(disks, &best_point);
    debug_assert_eq!(set.len(), best_count);
    (best_point, set, best_count)
}

/// Intersection points of the boundary circles of two disks, with tangent
/// circles (within the relative tolerance on squared distances) meeting at
/// one point. Concentric or non-touching circles yield none.
pub fn circle_intersections<F: Real>(a: &UserDisk<F>, b: &UserDisk<F>) -> Vec<Point2<F>> {
    let d_sq = a.center_xy.dist_sq(&b.center_xy);
    if !(d_sq > F::zero()) {
        return Vec::new();
    }
    let d = d_sq.sqrt();
    let along = (d_sq + a.radius_m * a.radius_m - b.radius_m * b.radius_m) / (F::lit(2.0) * d);
    let h_sq = a.radius_m * a.radius_m - along * along;
    let tol = F::lit(INTERSECT_REL_TOL) * a.radius_m * a.radius_m;
    if h_sq < -tol {
        return Vec::new();
    }
    let h = h_sq.max(F::zero()).sqrt();
    let ux = (b.center_xy.x - a.center_xy.x) / d;
    let uy = (b.center_xy.y - a.center_xy.y) / d;
    let base = Point2::new(a.center_xy.x + along * ux, a.center_xy.y + along * uy);
    if h == F::zero() {
        return vec![base];
    }
    vec![
        Point2::new(base.x - h * uy, base.y + h * ux),
        Point2::new(base.x + h * uy, base.y - h * ux),
    ]
}

/// Nudges an intersection point of two circles slightly toward both
/// centers, off the razor boundary into the lens interior.
fn nudge_inward<F: Real>(p: &Point2<F>, a: &UserDisk<F>, b: &UserDisk<F>) -> Option<Point2<F>> {
    let mut vx = F::zero();
    let mut vy = F::zero();
    for disk in [a, b] {
        let dx = disk.center_xy.x - p.x;
        let dy = disk.center_xy.y - p.y;
        let norm = (dx * dx + dy * dy).sqrt();
        if norm > F::zero() {
            vx = vx + dx / norm;
            vy = vy + dy / norm;
        }
    }
    let norm = (vx * vx + vy * vy).sqrt();
    if norm < F::lit(1e-6) {
        return None;
    }
    let delta = F::lit(1e-9) * a.radius_m.max(b.radius_m);
    Some(Point2::new(
        p.x + delta * vx / norm,
        p.y + delta * vy / norm,
    ))
}

/// Exhaustive candidate evaluation: grid points ∪ circle intersections ∪
/// centers. The count is a certified lower bound on the true maximum depth
/// and equals it when the intersection candidates are exact.
pub fn brute_force_2d<F: Real>(disks: &[UserDisk<F>], resolution_m: F) -> (Point2<F>, usize) {
    assert!(resolution_m > F::zero(), "resolution must be positive");
    if disks.is_empty() {
        return (Point2::new(F::zero(), F::zero()), 0);
    }
    let mut candidates: Vec<Point2<F>> = disks.iter().map(|d| d.center_xy).collect();
    for i in 0..disks.len() {
        for j in (i + 1)..disks.len() {
            for p in circle_intersections(&disks[i], &disks[j]) {
                if let Some(q) = nudge_inward(&p, &disks[i], &disks[j]) {
                    candidates.push(q);
                }
                candidates.push(p);
            }
        }
    }
    let mut x_min = disks[0].center_xy.x - disks[0].radius_m;
    let mut x_max = disks[0].center_xy.x + disks[0].radius_m;
    let mut y_min = disks[0].center_xy.y - disks[0].radius_m;
    let mut y_max = disks[0].center_xy.y + disks[0].radius_m;
    for d in disks {
        x_min = x_min.min(d.center_xy.x - d.radius_m);
        x_max = x_max.max(d.center_xy.x + d.radius_m);
        y_min = y_min.min(d.center_xy.y - d.radius_m);
        y_max = y_max.max(d.center_xy.y + d.radius_m);
    }
    let nx = ((x_max - x_min) / resolution_m)
        .ceil()
        .to_usize()
        .unwrap_or(0);
    let ny = ((y_max - y_min) / resolution_m)
        .ceil()
        .to_usize()
        .unwrap_or(0);
    for kx in 0..=nx {
        for ky in 0..=ny {
            candidates.push(Point2::new(
                x_min + F::from_usize(kx).unwrap() * resolution_m,
                y_min + F::from_usize(ky).unwrap() * resolution_m,
            ));
        }
    }
    let mut best_point = candidates[0];
    let mut best_count = depth_at(disks, &best_point);
    for p in candidates.iter().skip(1) {
        let count = depth_at(disks, p);
        if count > best_count || (count == best_count && lex_less(p, &best_point)) {
            best_count = count;
            best_point = *p;
        }
    }
    (best_point, best_count)
}
