use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Disk, Metric, Point};
use crate::scalar::Scalar;

/// Minimal-radius disk of `metric` containing every point; the center is free.
///
/// Euclidean: randomized incremental construction with a fixed shuffle seed.
/// L∞: the bounding-box square. Other `p`: nested ternary search on the
/// convex max-distance function.
///
/// Panics on an empty slice.
pub fn smallest_enclosing_disk<S: Scalar>(points: &[Point<S>], metric: Metric<S>) -> Disk<S> {
    assert!(!points.is_empty(), "smallest_enclosing_disk of no points");
    match metric {
        Metric::Lp(p) if p == S::two() => smallest_enclosing_disk_euclidean(points),
        Metric::Inf => {
            let (lo, hi) = bbox(points);
            let center = lo.midpoint(&hi);
            let r = ((hi.x - lo.x).max(hi.y - lo.y)) * S::half();
            Disk::new(center, r, metric)
        }
        Metric::Lp(_) => convex_minimax(points, metric),
    }
}

fn bbox<S: Scalar>(points: &[Point<S>]) -> (Point<S>, Point<S>) {
    let mut lo = points[0];
    let mut hi = points[0];
    for p in points {
        lo.x = lo.x.min(p.x);
        lo.y = lo.y.min(p.y);
        hi.x = hi.x.max(p.x);
        hi.y = hi.y.max(p.y);
    }
    (lo, hi)
}

pub fn smallest_enclosing_disk_euclidean<S: Scalar>(points: &[Point<S>]) -> Disk<S> {
    let metric = Metric::euclidean();
    let mut pts = points.to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    pts.shuffle(&mut rng);

    let (lo, hi) = bbox(&pts);
    let scale = (hi.x - lo.x).abs().max((hi.y - lo.y).abs()).max(S::one());
    let eps = S::epsilon() * S::lit(64.0) * scale;
    let inside = |c: &(Point<S>, S), p: &Point<S>| c.0.euclidean(p) <= c.1 + eps;

    let mut c = (pts[0], S::zero());
    for i in 1..pts.len() {
        if inside(&c, &pts[i]) {
            continue;
        }
        c = (pts[i], S::zero());
        for j in 0..i {
            if inside(&c, &pts[j]) {
                continue;
            }
            c = diametral(&pts[i], &pts[j]);
            for k in 0..j {
                if !inside(&c, &pts[k]) {
                    c = circumcircle(&pts[i], &pts[j], &pts[k])
                        .unwrap_or_else(|| widest_pair(&pts[i], &pts[j], &pts[k]));
                }
            }
        }
    }
    Disk::new(c.0, c.1, metric)
}

fn diametral<S: Scalar>(a: &Point<S>, b: &Point<S>) -> (Point<S>, S) {
    let m = a.midpoint(b);
    (m, m.euclidean(a).max(m.euclidean(b)))
}

fn widest_pair<S: Scalar>(a: &Point<S>, b: &Point<S>, c: &Point<S>) -> (Point<S>, S) {
    [diametral(a, b), diametral(a, c), diametral(b, c)]
        .into_iter()
        .fold(diametral(a, b), |best, d| if d.1 > best.1 { d } else { best })
}

/// Circumcenter and circumradius; `None` for collinear points.
pub(crate) fn circumcircle<S: Scalar>(a: &Point<S>, b: &Point<S>, c: &Point<S>) -> Option<(Point<S>, S)> {
    let (bx, by) = (b.x - a.x, b.y - a.y);
    let (cx, cy) = (c.x - a.x, c.y - a.y);
    let d = S::two() * (bx * cy - by * cx);
    let scale = (bx * bx + by * by).max(cx * cx + cy * cy);
    if d.abs() <= S::epsilon() * S::lit(16.0) * scale {
        return None;
    }
    let b2 = bx * bx + by * by;
    let c2 = cx * cx + cy * cy;
    let ux = (cy * b2 - by * c2) / d;
    let uy = (bx * c2 - cx * b2) / d;
    let center = Point::new(a.x + ux, a.y + uy);
    let r = center.euclidean(a).max(center.euclidean(b)).max(center.euclidean(c));
    Some((center, r))
}

fn convex_minimax<S: Scalar>(points: &[Point<S>], metric: Metric<S>) -> Disk<S> {
    let (lo, hi) = bbox(points);
    let radius_at = |c: Point<S>| points.iter().fold(S::zero(), |acc, p| acc.max(metric.distance(&c, p)));
    let best_y = |x: S| -> (S, S) {
        let (mut a, mut b) = (lo.y, hi.y);
        for _ in 0..100 {
            let m1 = a + (b - a) / S::lit(3.0);
            let m2 = b - (b - a) / S::lit(3.0);
            if radius_at(Point::new(x, m1)) <= radius_at(Point::new(x, m2)) {
                b = m2;
            } else {
                a = m1;
            }
        }
        let y = (a + b) * S::half();
        (y, radius_at(Point::new(x, y)))
    };
    let (mut a, mut b) = (lo.x, hi.x);
    for _ in 0..100 {
        let m1 = a + (b - a) / S::lit(3.0);
        let m2 = b - (b - a) / S::lit(3.0);
        if best_y(m1).1 <= best_y(m2).1 {
            b = m2;
        } else {
            a = m1;
        }
    }
    let x = (a + b) * S::half();
    let (y, r) = best_y(x);
    Disk::new(Point::new(x, y), r, metric)
}
