//! Closed tours over small point sets.

use crate::geometry::Point;
use crate::scalar::Scalar;

/// Largest instance solved exactly by the subset DP.
pub const EXACT_TSP_MAX: usize = 12;

pub fn tour_length<S: Scalar>(points: &[Point<S>], order: &[usize]) -> S {
    if order.len() < 2 {
        return S::zero();
    }
    let mut total = S::zero();
    for k in 0..order.len() {
        total = total + points[order[k]].euclidean(&points[order[(k + 1) % order.len()]]);
    }
    total
}

/// Visiting order and length of a short closed tour: exact up to
/// [`EXACT_TSP_MAX`] points, nearest neighbor from index 0 plus 2-opt above.
pub fn solve<S: Scalar>(points: &[Point<S>]) -> (Vec<usize>, S) {
    let order = if points.len() <= EXACT_TSP_MAX {
        held_karp(points)
    } else {
        let mut order = nearest_neighbor(points);
        two_opt(points, &mut order);
        order
    };
    let len = tour_length(points, &order);
    (order, len)
}

fn held_karp<S: Scalar>(points: &[Point<S>]) -> Vec<usize> {
    let n = points.len();
    if n <= 3 {
        return (0..n).collect();
    }
    // tours start at 0; states over the other n - 1 points
    let m = n - 1;
    let full = 1usize << m;
    let d = |a: usize, b: usize| points[a].euclidean(&points[b]);
    let mut cost = vec![S::infinity(); full * m];
    let mut parent = vec![usize::MAX; full * m];
    for j in 0..m {
        cost[(1 << j) * m + j] = d(0, j + 1);
    }
    for mask in 1..full {
        for j in 0..m {
            if mask & (1 << j) == 0 {
                continue;
            }
            let here = cost[mask * m + j];
            if !here.is_finite() {
                continue;
            }
            for k in 0..m {
                if mask & (1 << k) != 0 {
                    continue;
                }
                let next = mask | (1 << k);
                let c = here + d(j + 1, k + 1);
                if c < cost[next * m + k] {
                    cost[next * m + k] = c;
                    parent[next * m + k] = j;
                }
            }
        }
    }
    let last_mask = full - 1;
    let mut end = 0;
    let mut best = S::infinity();
    for j in 0..m {
        let c = cost[last_mask * m + j] + d(j + 1, 0);
        if c < best {
            best = c;
            end = j;
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut mask = last_mask;
    let mut j = end;
    while j != usize::MAX {
        order.push(j + 1);
        let p = parent[mask * m + j];
        mask &= !(1 << j);
        j = p;
    }
    order.push(0);
    order.reverse();
    order
}

fn nearest_neighbor<S: Scalar>(points: &[Point<S>]) -> Vec<usize> {
    let n = points.len();
    let mut used = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut cur = 0;
    used[0] = true;
    order.push(0);
    for _ in 1..n {
        let mut best = (S::infinity(), usize::MAX);
        for (k, p) in points.iter().enumerate() {
            if !used[k] {
                let d = points[cur].euclidean(p);
                if d < best.0 {
                    best = (d, k);
                }
            }
        }
        cur = best.1;
        used[cur] = true;
        order.push(cur);
    }
    order
}

/// First-improvement 2-opt until no reversal shortens the tour.
pub fn two_opt<S: Scalar>(points: &[Point<S>], order: &mut [usize]) {
    let n = order.len();
    if n < 4 {
        return;
    }
    let d = |a: usize, b: usize| points[a].euclidean(&points[b]);
    let eps = S::epsilon() * S::lit(16.0);
    let mut improved = true;
    while improved {
        improved = false;
        'scan: for i in 0..n - 1 {
            for j in i + 2..n {
                if i == 0 && j == n - 1 {
                    continue;
                }
                let (a, b) = (order[i], order[i + 1]);
                let (c, e) = (order[j], order[(j + 1) % n]);
                let delta = d(a, c) + d(b, e) - d(a, b) - d(c, e);
                if delta < -eps * (d(a, b) + d(c, e)) {
                    order[i + 1..=j].reverse();
                    improved = true;
                    break 'scan;
                }
            }
        }
    }
}
