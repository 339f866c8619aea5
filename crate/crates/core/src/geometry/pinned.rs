//! Pinned circles: leftmost smallest axis-centered circles through one or two clients.

use super::{Disk, Metric, Point};
use crate::scalar::{cmp, Scalar};

/// Reflects clients into the upper half-plane, sorts them by x and drops every
/// client lying directly below another (any axis-centered disk enclosing the
/// higher one encloses the lower one). Equal heights keep the earlier index.
pub fn normalize_clients<S: Scalar>(clients: &[Point<S>]) -> Vec<Point<S>> {
    let mut pts: Vec<(usize, Point<S>)> = clients
        .iter()
        .enumerate()
        .map(|(i, p)| (i, Point::new(p.x, p.y.abs())))
        .collect();
    pts.sort_by(|a, b| {
        cmp(&a.1.x, &b.1.x)
            .then_with(|| cmp(&b.1.y, &a.1.y))
            .then_with(|| a.0.cmp(&b.0))
    });
    let mut out: Vec<Point<S>> = Vec::with_capacity(pts.len());
    for (_, p) in pts {
        match out.last() {
            Some(q) if q.x == p.x => {}
            _ => out.push(p),
        }
    }
    out
}

/// Single-client pinned circle.
pub(crate) fn single_pinned<S: Scalar>(p: &Point<S>, metric: Metric<S>) -> Disk<S> {
    match metric {
        // the square with p in its upper right corner
        Metric::Inf => Disk::new(Point::new(p.x - p.y, S::zero()), p.y, metric),
        Metric::Lp(_) => Disk::new(Point::new(p.x, S::zero()), p.y, metric),
    }
}

/// Pair pinned circle for `a.x < b.x`, or `None` when the leftmost smallest
/// circle enclosing both is already a single-client pinned circle.
pub(crate) fn pair_pinned<S: Scalar>(a: &Point<S>, b: &Point<S>, metric: Metric<S>) -> Option<Disk<S>> {
    debug_assert!(a.x < b.x);
    match metric {
        Metric::Inf => {
            let r = a.y.max(b.y).max((b.x - a.x) * S::half());
            let c = b.x - r;
            if r == b.y {
                // p_b in the upper right corner: its own single square
                return None;
            }
            Some(Disk::new(Point::new(c, S::zero()), r, metric))
        }
        Metric::Lp(p) => {
            let sa = single_pinned(a, metric);
            let sb = single_pinned(b, metric);
            if sa.contains(b) || sb.contains(a) {
                return None;
            }
            let cx = if p == S::two() {
                (b.x * b.x + b.y * b.y - a.x * a.x - a.y * a.y) / (S::two() * (b.x - a.x))
            } else {
                equidistant_axis_point(a, b, metric)
            };
            let center = Point::new(cx, S::zero());
            let r = metric.distance(&center, a).max(metric.distance(&center, b));
            Some(Disk::new(center, r, metric))
        }
    }
}

/// Bisection on the center's x-coordinate over `[a.x, b.x]`, where the
/// distance difference is strictly increasing.
fn equidistant_axis_point<S: Scalar>(a: &Point<S>, b: &Point<S>, metric: Metric<S>) -> S {
    let (mut lo, mut hi) = (a.x, b.x);
    let tol = S::lit(1e-12).max(S::epsilon() * S::lit(4.0) * (a.x.abs() + b.x.abs()));
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = (lo + hi) * S::half();
        let c = Point::new(mid, S::zero());
        if metric.distance(&c, a) < metric.distance(&c, b) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo + hi) * S::half()
}

/// All pinned circles of normalized clients (on or above the axis, distinct
/// x-coordinates, sorted by x). At most `n + n(n-1)/2` disks, duplicates removed.
pub fn pinned_circles<S: Scalar>(clients: &[Point<S>], metric: Metric<S>) -> Vec<Disk<S>> {
    let n = clients.len();
    let mut out = Vec::with_capacity(n + n * n.saturating_sub(1) / 2);
    for p in clients {
        out.push(single_pinned(p, metric));
    }
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = if clients[i].x < clients[j].x {
                (&clients[i], &clients[j])
            } else if clients[j].x < clients[i].x {
                (&clients[j], &clients[i])
            } else {
                continue;
            };
            if let Some(d) = pair_pinned(a, b, metric) {
                out.push(d);
            }
        }
    }
    out.sort_by(|a, b| cmp(&a.center.x, &b.center.x).then_with(|| cmp(&a.radius, &b.radius)));
    out.dedup_by(|a, b| a.center.x == b.center.x && a.radius == b.radius);
    out
}
