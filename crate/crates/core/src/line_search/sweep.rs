use super::{degenerate_result, solve_on_line, LineSearchResult, PerLine};
use crate::error::{invalid, Result};
use crate::geometry::{CostModel, Line, Metric, Point};
use crate::scalar::{cmp, Scalar};

const COARSE_ANGLES: usize = 90;
const COARSE_OFFSETS: usize = 48;
const REFINED: usize = 12;

/// Numerical search over line orientation and offset, for cross-checking the
/// line-search schemes.
///
/// A coarse grid over `[0, pi)` and the clients' projected extent seeds a
/// pattern search from each of the best cells; steps halve until they drop
/// below `resolution` radians and `resolution` times the client diameter.
/// Each evaluated line gets its exact cover, so the result is an upper bound
/// on the optimum.
pub fn sweep_oracle<S: Scalar>(
    clients: &[Point<S>],
    metric: Metric<S>,
    cost_model: &CostModel<S>,
    resolution: S,
) -> Result<LineSearchResult<S>> {
    if !(resolution > S::zero()) || !resolution.is_finite() {
        return Err(invalid("resolution", format!("{resolution} is not positive")));
    }
    let diameter = clients.iter().enumerate().fold(S::zero(), |a, (i, p)| {
        clients[i + 1..].iter().fold(a, |a, q| a.max(p.euclidean(q)))
    });
    if diameter == S::zero() {
        let y = clients.first().map_or(S::zero(), |p| p.y);
        return Ok(degenerate_result(clients, Line::horizontal(y), metric, cost_model));
    }

    let line_at = |theta: S, offset: S| {
        let (s, c) = theta.sin_cos();
        Line {
            anchor: Point::new(-s * offset, c * offset),
            direction: Point::new(c, s),
        }
    };
    let eval =
        |theta: S, offset: S| solve_on_line(clients, &line_at(theta, offset), metric, cost_model, PerLine::Exact).cost;
    let offsets = |theta: S| {
        let (s, c) = theta.sin_cos();
        clients.iter().fold((S::infinity(), S::neg_infinity()), |(lo, hi), p| {
            let o = c * p.y - s * p.x;
            (lo.min(o), hi.max(o))
        })
    };

    let pi = S::PI();
    let angle_step = pi / S::from_usize(COARSE_ANGLES).unwrap();
    let mut cells: Vec<(S, S, S)> = Vec::with_capacity(COARSE_ANGLES * (COARSE_OFFSETS + 1));
    for a in 0..COARSE_ANGLES {
        let theta = angle_step * S::from_usize(a).unwrap();
        let (lo, hi) = offsets(theta);
        for k in 0..=COARSE_OFFSETS {
            let o = lo + (hi - lo) * S::from_usize(k).unwrap() / S::from_usize(COARSE_OFFSETS).unwrap();
            cells.push((eval(theta, o), theta, o));
        }
    }
    cells.sort_by(|a, b| cmp(&a.0, &b.0));

    let offset_step = diameter / S::from_usize(COARSE_OFFSETS).unwrap();
    let min_offset_step = resolution * diameter;
    let mut best = cells[0];
    for &(cost, theta, offset) in cells.iter().take(REFINED) {
        let mut cur = (cost, theta, offset);
        let (mut da, mut dof) = (angle_step, offset_step);
        while da >= resolution || dof >= min_offset_step {
            let mut moved = false;
            for (sa, so) in [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let t = cur.1 + da * S::from_i32(sa).unwrap();
                let o = cur.2 + dof * S::from_i32(so).unwrap();
                let c = eval(t, o);
                if c < cur.0 {
                    cur = (c, t, o);
                    moved = true;
                }
            }
            if !moved {
                da = da * S::half();
                dof = dof * S::half();
            }
        }
        if cur.0 < best.0 {
            best = cur;
        }
    }

    let line = line_at(best.1, best.2);
    let cover = solve_on_line(clients, &line, metric, cost_model, PerLine::Exact);
    Ok(LineSearchResult {
        line,
        cover,
        epsilon: S::zero(),
    })
}
