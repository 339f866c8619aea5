use super::{check_clients, check_weight, tsp, CoveringTour, GridSpec};
use crate::error::{invalid, CoverError, Result};
use crate::geometry::Point;
use crate::scalar::Scalar;

pub const MAX_GRID_CANDIDATES: usize = 40;
pub const MAX_TOUR_DISKS: usize = 5;
const MAX_CLIENTS: usize = 12;

/// Optimal covering tour with at most `max_disks` centers drawn from the
/// points of `grid` inside the clients' bounding box (rounded outward).
///
/// Centers are enumerated as subsets, each toured exactly, and radii come
/// from a branch and bound over client assignments. The box suffices because
/// projecting centers onto it shortens both the tour and every reach.
pub fn exact_small_mcct<S: Scalar>(
    clients: &[Point<S>],
    tour_weight: S,
    grid: GridSpec<S>,
    max_disks: usize,
) -> Result<CoveringTour<S>> {
    check_weight(tour_weight)?;
    check_clients(clients)?;
    if !(grid.spacing > S::zero()) {
        return Err(invalid("spacing", format!("{} is not positive", grid.spacing)));
    }
    if max_disks == 0 {
        return Err(invalid("max_disks", "must be at least 1"));
    }
    if max_disks > MAX_TOUR_DISKS {
        return Err(CoverError::TooLarge {
            what: "disk count",
            size: max_disks,
            limit: MAX_TOUR_DISKS,
        });
    }
    if clients.len() > MAX_CLIENTS {
        return Err(CoverError::TooLarge {
            what: "client count",
            size: clients.len(),
            limit: MAX_CLIENTS,
        });
    }
    let cands = candidates(clients, &grid)?;
    let dist: Vec<Vec<S>> = cands
        .iter()
        .map(|c| clients.iter().map(|p| c.euclidean(p)).collect())
        .collect();

    let mut search = Search {
        cands: &cands,
        dist: &dist,
        weight: tour_weight,
        max_disks,
        best: S::infinity(),
        best_set: Vec::new(),
        best_radii: Vec::new(),
        chosen: Vec::new(),
    };
    search.subsets(0);

    let points: Vec<Point<S>> = search.best_set.iter().map(|&c| cands[c]).collect();
    let (order, _) = tsp::solve(&points);
    let centers = order.iter().map(|&j| points[j]).collect();
    let radii: Vec<S> = order.iter().map(|&j| search.best_radii[j]).collect();
    Ok(CoveringTour::new(centers, &radii, tour_weight))
}

fn candidates<S: Scalar>(clients: &[Point<S>], grid: &GridSpec<S>) -> Result<Vec<Point<S>>> {
    let tol = S::tolerance();
    let range = |lo: S, hi: S, o: S| {
        let a = ((lo - o) / grid.spacing + tol).floor();
        let b = ((hi - o) / grid.spacing - tol).ceil();
        (a, b)
    };
    let lo_x = clients.iter().fold(S::infinity(), |a, p| a.min(p.x));
    let hi_x = clients.iter().fold(S::neg_infinity(), |a, p| a.max(p.x));
    let lo_y = clients.iter().fold(S::infinity(), |a, p| a.min(p.y));
    let hi_y = clients.iter().fold(S::neg_infinity(), |a, p| a.max(p.y));
    let (ax, bx) = range(lo_x, hi_x, grid.origin.x);
    let (ay, by) = range(lo_y, hi_y, grid.origin.y);
    let nx = (bx - ax).to_f64().unwrap_or(f64::MAX) + 1.0;
    let ny = (by - ay).to_f64().unwrap_or(f64::MAX) + 1.0;
    let total = nx * ny;
    if !(total <= MAX_GRID_CANDIDATES as f64) {
        return Err(CoverError::TooLarge {
            what: "grid candidate count",
            size: if total.is_finite() { total as usize } else { usize::MAX },
            limit: MAX_GRID_CANDIDATES,
        });
    }
    let mut out = Vec::with_capacity(total as usize);
    for i in 0..nx as usize {
        for j in 0..ny as usize {
            let gx = grid.origin.x + (ax + S::from_usize(i).unwrap()) * grid.spacing;
            let gy = grid.origin.y + (ay + S::from_usize(j).unwrap()) * grid.spacing;
            out.push(Point::new(gx, gy));
        }
    }
    Ok(out)
}

struct Search<'a, S> {
    cands: &'a [Point<S>],
    dist: &'a [Vec<S>],
    weight: S,
    max_disks: usize,
    best: S,
    best_set: Vec<usize>,
    best_radii: Vec<S>,
    chosen: Vec<usize>,
}

impl<S: Scalar> Search<'_, S> {
    fn subsets(&mut self, from: usize) {
        for c in from..self.cands.len() {
            self.chosen.push(c);
            let pts: Vec<Point<S>> = self.chosen.iter().map(|&i| self.cands[i]).collect();
            let length = tsp::solve(&pts).1;
            // adding centers never shortens a tour
            if length < self.best {
                self.evaluate(length);
                if self.chosen.len() < self.max_disks {
                    self.subsets(c + 1);
                }
            }
            self.chosen.pop();
        }
    }

    fn evaluate(&mut self, length: S) {
        let n = self.dist[0].len();
        let floor = (0..n).fold(S::zero(), |a, p| {
            a.max(self.chosen.iter().fold(S::infinity(), |m, &c| m.min(self.dist[c][p])))
        });
        if length + self.weight * floor >= self.best {
            return;
        }
        let mut radii = vec![S::zero(); self.chosen.len()];
        self.assign(0, &mut radii, S::zero(), length);
    }

    fn assign(&mut self, p: usize, radii: &mut [S], sum: S, length: S) {
        let total = length + self.weight * sum;
        if total >= self.best {
            return;
        }
        let n = self.dist[0].len();
        if p == n {
            self.best = total;
            self.best_set = self.chosen.clone();
            self.best_radii = radii.to_vec();
            return;
        }
        let d: Vec<S> = self.chosen.iter().map(|&c| self.dist[c][p]).collect();
        if d.iter().zip(radii.iter()).any(|(d, r)| d <= r) {
            self.assign(p + 1, radii, sum, length);
            return;
        }
        for j in 0..radii.len() {
            let old = radii[j];
            radii[j] = d[j];
            self.assign(p + 1, radii, sum + d[j] - old, length);
            radii[j] = old;
        }
    }
}
