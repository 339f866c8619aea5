use super::{check_clients, check_weight, circumcenter_solution, reach, tsp, CoveringTour};
use crate::error::{invalid, Result};
use crate::geometry::{smallest_enclosing_disk_euclidean, Point};
use crate::scalar::{cmp, Scalar};

/// Candidate layout before pricing: centers with the clients each must reach.
struct Layout<S> {
    centers: Vec<Point<S>>,
    clusters: Vec<Vec<usize>>,
    order: Vec<usize>,
}

impl<S: Scalar> Layout<S> {
    fn new(clusters: Vec<Vec<usize>>, clients: &[Point<S>]) -> Self {
        let centers: Vec<Point<S>> = clusters.iter().map(|c| sed_center(c, clients)).collect();
        let (order, _) = tsp::solve(&centers);
        Self {
            centers,
            clusters,
            order,
        }
    }

    /// Centers pulled toward `pivot` by `shrink`: same visiting order, tour
    /// scaled by `1 - shrink`, radii re-measured.
    fn price(&self, clients: &[Point<S>], pivot: Point<S>, shrink: S, weight: S) -> CoveringTour<S> {
        let keep = S::one() - shrink;
        let mut centers = Vec::with_capacity(self.order.len());
        let mut radii = Vec::with_capacity(self.order.len());
        for &j in &self.order {
            let c = self.centers[j];
            let moved = Point::new(pivot.x + (c.x - pivot.x) * keep, pivot.y + (c.y - pivot.y) * keep);
            let members: Vec<Point<S>> = self.clusters[j].iter().map(|&i| clients[i]).collect();
            radii.push(reach(&moved, &members));
            centers.push(moved);
        }
        CoveringTour::new(centers, &radii, weight)
    }
}

fn sed_center<S: Scalar>(members: &[usize], clients: &[Point<S>]) -> Point<S> {
    let pts: Vec<Point<S>> = members.iter().map(|&i| clients[i]).collect();
    smallest_enclosing_disk_euclidean(&pts).center
}

fn sed_radius<S: Scalar>(members: &[usize], clients: &[Point<S>]) -> S {
    let pts: Vec<Point<S>> = members.iter().map(|&i| clients[i]).collect();
    let center = smallest_enclosing_disk_euclidean(&pts).center;
    reach(&center, &pts)
}

/// Each distinct location as its own cluster, in first-seen order.
fn singletons<S: Scalar>(clients: &[Point<S>]) -> Vec<Vec<usize>> {
    let mut idx: Vec<usize> = (0..clients.len()).collect();
    idx.sort_by(|&a, &b| {
        cmp(&clients[a].x, &clients[b].x)
            .then(cmp(&clients[a].y, &clients[b].y))
            .then(a.cmp(&b))
    });
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for i in idx {
        match groups.last_mut() {
            Some(g) if clients[g[0]] == clients[i] => g.push(i),
            _ => groups.push(vec![i]),
        }
    }
    groups.sort_by_key(|g| g[0]);
    groups
}

/// Cluster sets for every count from the distinct-location count down to
/// one, merging the pair whose union's enclosing radius grows the radius sum
/// least; ties go to the lowest index pair.
fn agglomerate<S: Scalar>(clients: &[Point<S>]) -> Vec<Vec<Vec<usize>>> {
    let mut clusters = singletons(clients);
    let mut radius: Vec<S> = vec![S::zero(); clusters.len()];
    let k = clusters.len();
    let mut gain = vec![S::infinity(); k * k];
    let union = |a: &[usize], b: &[usize]| a.iter().chain(b).copied().collect::<Vec<_>>();
    for i in 0..k {
        for j in i + 1..k {
            gain[i * k + j] = sed_radius(&union(&clusters[i], &clusters[j]), clients);
        }
    }
    let mut alive = vec![true; k];
    let mut out = vec![clusters.clone()];
    for _ in 1..k {
        let mut best = (S::infinity(), 0, 0);
        for i in 0..k {
            if !alive[i] {
                continue;
            }
            for j in i + 1..k {
                if alive[j] && gain[i * k + j] < best.0 {
                    best = (gain[i * k + j], i, j);
                }
            }
        }
        let (_, i, j) = best;
        let moved = std::mem::take(&mut clusters[j]);
        clusters[i].extend(moved);
        clusters[i].sort_unstable();
        alive[j] = false;
        radius[i] = sed_radius(&clusters[i], clients);
        for o in (0..k).filter(|&o| alive[o] && o != i) {
            let (lo, hi) = if o < i { (o, i) } else { (i, o) };
            let merged = sed_radius(&union(&clusters[lo], &clusters[hi]), clients);
            gain[lo * k + hi] = merged - radius[lo] - radius[hi];
        }
        out.push((0..k).filter(|&o| alive[o]).map(|o| clusters[o].clone()).collect());
    }
    out
}

/// Heuristic covering tour for general `C`.
///
/// The cheapest of: the single enclosing disk, a zero-radius tour through
/// every client, and for each `k` the agglomerative `k`-clustering toured
/// through its enclosing-disk centers. Every multi-disk layout is also tried
/// with its centers pulled toward the overall enclosing center by fractions
/// `epsilon, 2 epsilon, ...` below one (at most 64 of them), radii grown to
/// keep coverage. No candidate depends on `C`, so the result is monotone in
/// `C`.
pub fn cluster_and_tour<S: Scalar>(clients: &[Point<S>], tour_weight: S, epsilon: S) -> Result<CoveringTour<S>> {
    check_weight(tour_weight)?;
    check_clients(clients)?;
    if !(epsilon > S::zero()) || !epsilon.is_finite() {
        return Err(invalid("epsilon", format!("{epsilon} is not positive")));
    }
    let mut best = circumcenter_solution(clients, tour_weight)?;
    let pivot = best.tour[0];
    let mut shrinks = Vec::new();
    let mut k = 1usize;
    while shrinks.len() < 64 {
        let s = epsilon * S::from_usize(k).expect("count representable");
        if s >= S::one() {
            break;
        }
        shrinks.push(s);
        k += 1;
    }

    for clusters in agglomerate(clients) {
        if clusters.len() < 2 {
            continue;
        }
        let layout = Layout::new(clusters, clients);
        for shrink in std::iter::once(S::zero()).chain(shrinks.iter().copied()) {
            let t = layout.price(clients, pivot, shrink, tour_weight);
            if t.total_cost < best.total_cost {
                best = t;
            }
        }
    }
    Ok(best)
}
