use crate::geometry::{
    normalize_clients, pinned_circles, points_above_circle_empty, region_b_empty, ClientIndex, CostModel, Cover, Disk,
    Metric, Point,
};
use crate::scalar::Scalar;

/// Minimum sum of radii over axis-centered disks of `metric`.
///
/// Optimal covers under linear cost have interior-disjoint disks, so each disk
/// covers a contiguous run of x-sorted clients with nothing above it.
/// Brute-force extreme-point and emptiness scans, `O(n^3)`.
pub fn dp_linear<S: Scalar>(clients: &[Point<S>], metric: Metric<S>) -> Cover<S> {
    let pts = normalize_clients(clients);
    let n = pts.len();
    if n == 0 {
        return Cover::empty();
    }
    let index = ClientIndex::new(&pts);
    let tol = S::tolerance();

    // (leftmost enclosed, disk) grouped by owner
    let mut owned: Vec<Vec<(usize, Disk<S>)>> = vec![Vec::new(); n];
    for disk in pinned_circles(&pts, metric) {
        if !points_above_circle_empty(&index, &disk) {
            continue;
        }
        let (lo, hi) = disk.x_extent();
        let first = pts.partition_point(|p| p.x < lo - tol);
        let end = pts.partition_point(|p| p.x <= hi + tol);
        if end > first {
            owned[end - 1].push((first, disk));
        }
    }

    // cost[i] covers the first i clients
    let mut cost = vec![S::infinity(); n + 1];
    let mut pick: Vec<Option<(usize, Disk<S>)>> = vec![None; n + 1];
    cost[0] = S::zero();
    for i in 1..=n {
        for &(j, disk) in &owned[i - 1] {
            let c = cost[j] + disk.radius;
            if c < cost[i] {
                cost[i] = c;
                pick[i] = Some((j, disk));
            }
        }
    }

    let mut disks = Vec::new();
    let mut i = n;
    while i > 0 {
        let (j, disk) = pick[i].expect("every client owns its single pinned circle");
        disks.push(disk);
        i = j;
    }
    disks.reverse();
    Cover::from_disks(disks, &CostModel::linear())
}

/// Minimum total `f(r)` over axis-centered disks of `metric`, for any
/// non-decreasing power cost.
///
/// Pinned circles are ordered by center; `cost[j]` covers the clients left of
/// the apex of `C_j` and outside it. A transition `i -> j` requires that
/// neither circle holds the other's apex in its interior and that no client is
/// stranded between them. Brute force, `O(n^5)`.
pub fn dp_superlinear<S: Scalar>(clients: &[Point<S>], metric: Metric<S>, cost_model: &CostModel<S>) -> Cover<S> {
    let pts = normalize_clients(clients);
    let n = pts.len();
    if n == 0 {
        return Cover::empty();
    }
    let index = ClientIndex::new(&pts);

    let span = pts[n - 1].x - pts[0].x + pts.iter().fold(S::zero(), |a, p| a.max(p.y));
    let far = span + S::one();
    let left = Disk::new(Point::new(pts[0].x - far * S::two(), S::zero()), S::zero(), metric);
    let right = Disk::new(Point::new(pts[n - 1].x + far * S::two(), S::zero()), S::zero(), metric);

    let mut circles = Vec::with_capacity(n * (n + 1) / 2 + 2);
    circles.push(left);
    circles.extend(pinned_circles(&pts, metric));
    circles.push(right);
    let last = circles.len() - 1;
    let weight = |k: usize| {
        if k == 0 || k == last {
            S::zero()
        } else {
            cost_model.cost(circles[k].radius)
        }
    };

    let mut cost = vec![S::infinity(); circles.len()];
    let mut pred = vec![usize::MAX; circles.len()];
    cost[0] = S::zero();
    for j in 1..circles.len() {
        let cj = &circles[j];
        let apex_j = cj.apex();
        for i in 0..j {
            if !cost[i].is_finite() {
                continue;
            }
            let ci = &circles[i];
            if ci.contains_strictly(&apex_j) || cj.contains_strictly(&ci.apex()) {
                continue;
            }
            if !region_b_empty(&index, ci, cj) {
                continue;
            }
            let c = cost[i] + weight(i);
            if c < cost[j] {
                cost[j] = c;
                pred[j] = i;
            }
        }
    }

    let mut disks = Vec::new();
    let mut k = pred[last];
    while k != 0 && k != usize::MAX {
        disks.push(circles[k]);
        k = pred[k];
    }
    disks.reverse();
    Cover::from_disks(disks, cost_model)
}

/// [`dp_superlinear`] under L∞: axis-centered squares with the upper-right
/// corner as apex.
pub fn dp_squares<S: Scalar>(clients: &[Point<S>], cost_model: &CostModel<S>) -> Cover<S> {
    dp_superlinear(clients, Metric::Inf, cost_model)
}
