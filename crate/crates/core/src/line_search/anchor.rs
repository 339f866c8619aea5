use super::{degenerate_result, solve_on_line, LineSearchResult, PerLine};
use crate::geometry::{CostModel, Cover, Disk, Line, Metric, Point};
use crate::scalar::Scalar;

/// Moves a cover centered on `line` onto a line through `pivot` and a client.
///
/// In the frame where `line` is the x-axis and `pivot` the origin, the client
/// `p1` of least `|y / x|` fixes the angle `atan(y1 / x1)`; every center is
/// rotated about the pivot by that angle and every radius doubled. Clients on
/// the pivot's normal are skipped unless no other client exists, in which case
/// the new line is that normal.
pub fn reanchor_cover<S: Scalar>(
    cover: &Cover<S>,
    line: &Line<S>,
    pivot: Point<S>,
    clients: &[Point<S>],
    cost_model: &CostModel<S>,
) -> (Line<S>, Cover<S>) {
    let frame = Line {
        anchor: pivot,
        direction: line.direction,
    };
    let tol = S::tolerance();
    let mut best: Option<(S, S)> = None;
    let mut off_axis = false;
    for p in clients {
        let q = frame.to_local(p);
        let scale = S::one().max(q.x.abs()).max(q.y.abs());
        if q.x.abs() <= tol * scale {
            off_axis |= q.y.abs() > tol * scale;
            continue;
        }
        let slope = q.y / q.x;
        if best.is_none_or(|(s, _)| slope.abs() < s.abs()) {
            best = Some((slope, q.x));
        }
    }
    let angle = match best {
        Some((slope, _)) => slope.atan(),
        None if off_axis => S::FRAC_PI_2(),
        None => S::zero(),
    };

    let direction = line.direction.rotated(angle);
    let new_line = Line {
        anchor: pivot,
        direction,
    };
    let disks = cover
        .disks
        .iter()
        .map(|d| Disk::new(d.center.rotated_about(&pivot, angle), S::two() * d.radius, d.metric))
        .collect();
    (new_line, Cover::from_disks(disks, cost_model))
}

/// Best exact (or, with `fast`, greedy-square) cover over all lines through
/// two distinct clients.
///
/// Exact per-line covers are within `4^alpha` of the best line. The fast
/// variant covers each line by squares and encloses each in a disk.
pub fn any_line_constant<S: Scalar>(
    clients: &[Point<S>],
    metric: Metric<S>,
    cost_model: &CostModel<S>,
    fast: bool,
) -> LineSearchResult<S> {
    let mode = if fast { PerLine::Fast } else { PerLine::Exact };
    let mut best: Option<LineSearchResult<S>> = None;
    for (i, a) in clients.iter().enumerate() {
        for b in &clients[i + 1..] {
            let Some(line) = Line::through(*a, *b) else {
                continue;
            };
            let cover = solve_on_line(clients, &line, metric, cost_model, mode);
            if best.as_ref().is_none_or(|r| cover.cost < r.cover.cost) {
                best = Some(LineSearchResult {
                    line,
                    cover,
                    epsilon: S::zero(),
                });
            }
        }
    }
    best.unwrap_or_else(|| {
        let y = clients.first().map_or(S::zero(), |p| p.y);
        degenerate_result(clients, Line::horizontal(y), metric, cost_model)
    })
}
