use super::{any_line_constant, degenerate_result, farthest_client, solve_on_line, LineSearchResult, PerLine};
use crate::error::{invalid, Result};
use crate::geometry::{CostModel, Line, Metric, Point};
use crate::scalar::{cmp, Scalar};

/// Narrowest strip containing the clients: its center line and width.
///
/// The strip is flush with an edge of the convex hull. Collinear input gives
/// width 0 along the common line.
pub fn min_width_strip<S: Scalar>(clients: &[Point<S>]) -> (Line<S>, S) {
    let hull = convex_hull(clients);
    match hull.len() {
        0 => return (Line::horizontal(S::zero()), S::zero()),
        1 => return (Line::horizontal(hull[0].y), S::zero()),
        2 => {
            let line = Line::through(hull[0], hull[1]).expect("distinct hull points");
            return (line, S::zero());
        }
        _ => {}
    }
    let k = hull.len();
    let mut best: Option<(Line<S>, S)> = None;
    for i in 0..k {
        let Some(edge) = Line::through(hull[i], hull[(i + 1) % k]) else {
            continue;
        };
        let width = hull.iter().fold(S::zero(), |a, p| a.max(edge.to_local(p).y.abs()));
        if best.is_none_or(|(_, w)| width < w) {
            best = Some((edge, width));
        }
    }
    let (edge, width) = best.expect("hull has an edge");
    // counterclockwise hull: the interior is to the left of every edge
    let center = Line {
        anchor: edge.from_local(&Point::new(S::zero(), width * S::half())),
        direction: edge.direction,
    };
    (center, width)
}

/// Andrew's monotone chain, counterclockwise, collinear points dropped.
fn convex_hull<S: Scalar>(points: &[Point<S>]) -> Vec<Point<S>> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| cmp(&a.x, &b.x).then_with(|| cmp(&a.y, &b.y)));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let cross = |o: &Point<S>, a: &Point<S>, b: &Point<S>| (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    let mut hull: Vec<Point<S>> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &Point<S>>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for p in iter {
            while hull.len() >= start + 2 && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], p) <= S::zero() {
                hull.pop();
            }
            hull.push(*p);
        }
        hull.pop();
    }
    hull
}

/// `(1 + epsilon)`-approximate best line of any orientation, linear cost,
/// Euclidean disks.
///
/// With `h` the narrowest strip width and `w` the clients' extent along it,
/// candidate lines join grid points spaced `epsilon * L / n`: on the two
/// extreme normals within `4U` of the strip's center line when `w >= 2h`,
/// otherwise on the boundary of the concentric square of side `w + h`. `U` is
/// the pair-line cover cost and `L = max(h / 2, U / 4)` a lower bound on the
/// optimum. Lines whose farthest client already costs more than the incumbent
/// are skipped.
pub fn any_line_ptas<S: Scalar>(
    clients: &[Point<S>],
    cost_model: &CostModel<S>,
    epsilon: S,
) -> Result<LineSearchResult<S>> {
    if !(epsilon > S::zero()) || !epsilon.is_finite() {
        return Err(invalid("epsilon", format!("{epsilon} is not positive")));
    }
    if !cost_model.is_linear() {
        return Err(invalid("alpha", "the any-orientation scheme needs linear cost"));
    }
    let metric = Metric::euclidean();
    let (center, h) = min_width_strip(clients);
    let extent = clients.iter().fold(S::zero(), |a, p| a.max(p.x.abs()).max(p.y.abs()));
    if h <= S::tolerance() * S::one().max(extent) {
        let mut r = degenerate_result(clients, center, metric, cost_model);
        r.epsilon = epsilon;
        return Ok(r);
    }

    let mut best = any_line_constant(clients, metric, cost_model, false);
    best.epsilon = epsilon;
    let upper = best.cover.cost;
    let n = S::from_usize(clients.len()).expect("count representable");
    let lower = (h * S::half()).max(upper / S::lit(4.0));
    let delta = epsilon * lower / n;

    let local: Vec<Point<S>> = clients.iter().map(|p| center.to_local(p)).collect();
    let tmin = local.iter().fold(S::infinity(), |a, q| a.min(q.x));
    let tmax = local.iter().fold(S::neg_infinity(), |a, q| a.max(q.x));
    let w = tmax - tmin;

    let mut consider = |a: Point<S>, b: Point<S>| {
        let Some(line) = Line::through(center.from_local(&a), center.from_local(&b)) else {
            return;
        };
        if farthest_client(clients, &line) >= best.cover.cost {
            return;
        }
        let cover = solve_on_line(clients, &line, metric, cost_model, PerLine::Exact);
        if cover.cost < best.cover.cost {
            best.line = line;
            best.cover = cover;
        }
    };

    if w >= S::two() * h {
        let reach = S::lit(4.0) * upper;
        let steps = grid_steps(S::two() * reach / delta);
        let at = |k: usize| -reach + S::two() * reach * S::from_usize(k).unwrap() / S::from_usize(steps).unwrap();
        for i in 0..=steps {
            for j in 0..=steps {
                consider(Point::new(tmin, at(i)), Point::new(tmax, at(j)));
            }
        }
    } else {
        let side = w + h;
        let mid = Point::new((tmin + tmax) * S::half(), S::zero());
        let per_side = grid_steps(side / delta);
        let boundary = square_boundary(mid, side, per_side);
        for i in 0..boundary.len() {
            for j in i + 1..boundary.len() {
                if boundary[i].0 != boundary[j].0 {
                    consider(boundary[i].1, boundary[j].1);
                }
            }
        }
    }
    Ok(best)
}

fn grid_steps<S: Scalar>(x: S) -> usize {
    let steps = x.ceil().to_f64().unwrap_or(f64::MAX).max(1.0);
    assert!(steps <= 1e7, "grid of {steps} steps per side is out of range");
    steps as usize
}

/// Points every `side / per_side` along the square's boundary, tagged by side.
fn square_boundary<S: Scalar>(mid: Point<S>, side: S, per_side: usize) -> Vec<(u8, Point<S>)> {
    let half = side * S::half();
    let corners = [
        Point::new(mid.x - half, mid.y - half),
        Point::new(mid.x + half, mid.y - half),
        Point::new(mid.x + half, mid.y + half),
        Point::new(mid.x - half, mid.y + half),
    ];
    let mut out = Vec::with_capacity(4 * per_side);
    for s in 0..4 {
        let (a, b) = (corners[s], corners[(s + 1) % 4]);
        for k in 0..per_side {
            let t = S::from_usize(k).unwrap() / S::from_usize(per_side).unwrap();
            out.push((s as u8, Point::new(a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::line_search::sweep_oracle;
    use crate::line_search::test_support::{rotate_all, unit_square};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn strip_of_a_rectangle() {
        let pts = [
            Point::<f64>::new(0.0, 0.0),
            Point::new(4.0, 0.0),
            Point::new(4.0, 1.0),
            Point::new(0.0, 1.0),
        ];
        let (line, h) = min_width_strip(&pts);
        assert!((h - 1.0).abs() < 1e-12);
        assert!(line.direction.y.abs() < 1e-12);
        assert!((line.anchor.y - 0.5).abs() < 1e-12);
    }

    #[test]
    fn strip_is_rotation_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(70);
        for _ in 0..50 {
            let pts: Vec<_> = (0..rng.gen_range(3..12))
                .map(|_| Point::new(rng.gen_range(-3.0..3.0), rng.gen_range(-1.0..1.0)))
                .collect();
            let (line, h) = min_width_strip(&pts);
            assert!(pts.iter().all(|p| line.distance_to(p) <= h / 2.0 + 1e-9));
            let (_, h2) = min_width_strip(&rotate_all(&pts, 0.7));
            assert!((h - h2).abs() < 1e-9);
        }
    }

    #[test]
    fn collinear_is_free() {
        let pts = [Point::new(0.0, 1.0), Point::new(1.0, 3.0), Point::new(2.0, 5.0)];
        let r = any_line_ptas(&pts, &CostModel::linear(), 0.25).unwrap();
        assert!(r.cover.cost < 1e-9);
        assert!(r.covers_all(&pts));
    }

    #[test]
    fn rejects_superlinear_and_bad_epsilon() {
        let pts = unit_square();
        assert!(any_line_ptas(&pts, &CostModel::new(2.0).unwrap(), 0.5).is_err());
        assert!(any_line_ptas(&pts, &CostModel::linear(), 0.0).is_err());
    }

    #[test]
    fn unit_square_against_sweep() {
        let pts = unit_square();
        let r = any_line_ptas(&pts, &CostModel::linear(), 0.25).unwrap();
        let oracle = sweep_oracle(&pts, Metric::euclidean(), &CostModel::linear(), 1e-3).unwrap();
        assert!(r.cover.cost <= 1.25 * oracle.cover.cost + 1e-9);
        assert!(r.covers_all(&pts) && r.disks_on_line());
    }

    #[test]
    fn never_worse_than_constant_pass() {
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        for _ in 0..10 {
            let pts: Vec<_> = (0..rng.gen_range(3..7))
                .map(|_| Point::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)))
                .collect();
            let r = any_line_ptas(&pts, &CostModel::linear(), 0.5).unwrap();
            let c = any_line_constant(&pts, Metric::euclidean(), &CostModel::linear(), false);
            assert!(r.cover.cost <= c.cover.cost + 1e-12);
            assert!(r.covers_all(&pts));
        }
    }

    #[test]
    fn hull_drops_interior_and_collinear() {
        let pts = [
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(1.0, 0.3),
        ];
        assert_eq!(convex_hull(&pts).len(), 3);
    }
}
