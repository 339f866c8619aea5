//! Choosing the placement line as well as the cover.
//!
//! Every candidate line is solved in its own frame: clients are mapped to
//! `(t, h)` coordinates, covered by axis-centered disks there and mapped back.
//! For non-Euclidean metrics the disks are therefore balls aligned with their
//! line; [`LineSearchResult::covers_all`] checks coverage in that frame.

mod anchor;
mod fptas;
mod ptas;
mod sweep;

pub use anchor::{any_line_constant, reanchor_cover};
pub use fptas::fptas_horizontal;
pub use ptas::{any_line_ptas, min_width_strip};
pub use sweep::sweep_oracle;

use crate::geometry::{CostModel, Cover, Disk, Line, Metric, Point};
use crate::line_cover::{dp_linear, dp_superlinear, sg_cover, sgg_cover};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct LineSearchResult<S> {
    pub line: Line<S>,
    pub cover: Cover<S>,
    /// Guarantee parameter; 0 when the cover is exact for the returned line.
    pub epsilon: S,
}

impl<S: Scalar> LineSearchResult<S> {
    /// Every center within tolerance of the line, relative to its magnitude.
    pub fn disks_on_line(&self) -> bool {
        self.cover.disks.iter().all(|d| {
            let scale = S::one().max(d.center.x.abs()).max(d.center.y.abs());
            self.line.distance_to(&d.center) <= S::tolerance() * scale
        })
    }

    /// Coverage measured in the line's frame.
    pub fn covers_all(&self, clients: &[Point<S>]) -> bool {
        clients.iter().all(|p| {
            let q = self.line.to_local(p);
            self.cover.disks.iter().any(|d| {
                let c = self.line.to_local(&d.center);
                d.metric.distance(&c, &q) <= d.radius + S::tolerance()
            })
        })
    }
}

/// Per-line solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum PerLine {
    Exact,
    Fast,
}

pub(crate) fn to_frame<S: Scalar>(line: &Line<S>, clients: &[Point<S>]) -> Vec<Point<S>> {
    clients.iter().map(|p| line.to_local(p)).collect()
}

/// Best cover centered on `line`, in global coordinates.
pub(crate) fn solve_on_line<S: Scalar>(
    clients: &[Point<S>],
    line: &Line<S>,
    metric: Metric<S>,
    cost_model: &CostModel<S>,
    mode: PerLine,
) -> Cover<S> {
    let local = to_frame(line, clients);
    let cover = match mode {
        PerLine::Exact if cost_model.is_linear() => dp_linear(&local, metric),
        PerLine::Exact => dp_superlinear(&local, metric, cost_model),
        PerLine::Fast => {
            let squares = if cost_model.is_linear() {
                sgg_cover(&local)
            } else {
                sg_cover(&local, cost_model)
            };
            let grow = metric.square_enclosing_factor();
            let disks = squares
                .disks
                .iter()
                .map(|d| Disk::new(d.center, d.radius * grow, metric))
                .collect();
            Cover::from_disks(disks, cost_model)
        }
    };
    to_global(line, cover)
}

pub(crate) fn to_global<S: Scalar>(line: &Line<S>, cover: Cover<S>) -> Cover<S> {
    let disks = cover
        .disks
        .into_iter()
        .map(|d| Disk::new(line.from_local(&d.center), d.radius, d.metric))
        .collect();
    Cover {
        disks,
        cost: cover.cost,
    }
}

/// Lower bound on any cover centered on `line` under linear cost: the
/// farthest client must sit in some disk.
pub(crate) fn farthest_client<S: Scalar>(clients: &[Point<S>], line: &Line<S>) -> S {
    clients.iter().fold(S::zero(), |a, p| a.max(line.distance_to(p)))
}

/// Zero-cost result for clients that are collinear up to tolerance.
pub(crate) fn degenerate_result<S: Scalar>(
    clients: &[Point<S>],
    line: Line<S>,
    metric: Metric<S>,
    cost_model: &CostModel<S>,
) -> LineSearchResult<S> {
    let local = to_frame(&line, clients);
    let disks = local
        .iter()
        .map(|q| Disk::new(Point::new(q.x, S::zero()), q.y.abs(), metric))
        .collect();
    LineSearchResult {
        line,
        cover: to_global(&line, Cover::from_disks(disks, cost_model)),
        epsilon: S::zero(),
    }
}
