//! Emptiness queries over x-sorted clients.

use super::{Disk, Point};
use crate::scalar::{cmp, Scalar};

/// Clients sorted by x-coordinate.
#[derive(Debug, Clone)]
pub struct ClientIndex<S> {
    points: Vec<Point<S>>,
}

impl<S: Scalar> ClientIndex<S> {
    pub fn new(clients: &[Point<S>]) -> Self {
        let mut points = clients.to_vec();
        points.sort_by(|a, b| cmp(&a.x, &b.x));
        Self { points }
    }

    pub fn points(&self) -> &[Point<S>] {
        &self.points
    }

    /// Clients with `lo <= x <= hi`.
    pub fn x_range(&self, lo: S, hi: S) -> &[Point<S>] {
        let start = self.points.partition_point(|p| p.x < lo);
        let end = self.points.partition_point(|p| p.x <= hi);
        &self.points[start..end.max(start)]
    }
}

/// True iff no client lies within the disk's x-extent and outside the disk.
/// Clients are on or above the axis, so such a client lies above the arc.
pub fn points_above_circle_empty<S: Scalar>(index: &ClientIndex<S>, disk: &Disk<S>) -> bool {
    let (lo, hi) = disk.x_extent();
    let tol = S::tolerance();
    index.x_range(lo - tol, hi + tol).iter().all(|p| disk.contains(p))
}

/// True iff no client lies in `B(a, c)`: between the vertical lines through the
/// apices of `a` (inclusive) and `c` (exclusive), outside both disks.
pub fn region_b_empty<S: Scalar>(index: &ClientIndex<S>, a: &Disk<S>, c: &Disk<S>) -> bool {
    let lo = a.apex().x;
    let hi = c.apex().x;
    if hi <= lo {
        return true;
    }
    index
        .x_range(lo, hi)
        .iter()
        .filter(|p| p.x < hi)
        .all(|p| a.contains(p) || c.contains(p))
}

#[cfg(test)]
pub(crate) mod naive {
    use super::*;

    pub fn points_above_circle_empty<S: Scalar>(clients: &[Point<S>], d: &Disk<S>) -> bool {
        let (lo, hi) = d.x_extent();
        let tol = S::tolerance();
        !clients
            .iter()
            .any(|p| p.x >= lo - tol && p.x <= hi + tol && !d.contains(p))
    }

    pub fn region_b_empty<S: Scalar>(clients: &[Point<S>], a: &Disk<S>, c: &Disk<S>) -> bool {
        let (lo, hi) = (a.apex().x, c.apex().x);
        !clients
            .iter()
            .any(|p| p.x >= lo && p.x < hi && !a.contains(p) && !c.contains(p))
    }
}
