//! Collinear clients served from a fixed set of server sites on the same line.
//!
//! Disks become intervals `[t - r, t + r]`; all output disks are centered at
//! `(t, 0)`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{invalid, Result};
use crate::geometry::{CostModel, Cover, Disk, Metric, Point};
use crate::scalar::{cmp, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct LineInstance1D<S> {
    servers: Vec<S>,
    clients: Vec<S>,
    alpha: S,
}

impl<S: Scalar> LineInstance1D<S> {
    /// Sorts both lists. Servers must be nonempty, `alpha >= 1`.
    pub fn new(mut servers: Vec<S>, mut clients: Vec<S>, alpha: S) -> Result<Self> {
        if servers.is_empty() {
            return Err(invalid("servers", "at least one server is required"));
        }
        if servers.iter().chain(clients.iter()).any(|v| !v.is_finite()) {
            return Err(invalid("coordinates", "non-finite value"));
        }
        CostModel::new(alpha)?;
        servers.sort_by(cmp);
        clients.sort_by(cmp);
        Ok(Self {
            servers,
            clients,
            alpha,
        })
    }

    pub fn servers(&self) -> &[S] {
        &self.servers
    }

    pub fn clients(&self) -> &[S] {
        &self.clients
    }

    pub fn alpha(&self) -> S {
        self.alpha
    }

    pub fn cost_model(&self) -> CostModel<S> {
        CostModel {
            alpha: self.alpha,
            tour_weight: None,
        }
    }

    /// Index of the nearest server; ties go to the left server.
    fn nearest_server(&self, p: S) -> usize {
        let k = self.servers.partition_point(|&t| t < p);
        match (k.checked_sub(1), (k < self.servers.len()).then_some(k)) {
            (Some(l), Some(r)) => {
                if p - self.servers[l] <= self.servers[r] - p {
                    l
                } else {
                    r
                }
            }
            (Some(l), None) => l,
            (None, Some(r)) => r,
            (None, None) => unreachable!("servers nonempty"),
        }
    }

    fn cover_from_radii(&self, radii: &[Option<S>]) -> Cover<S> {
        let disks = radii
            .iter()
            .zip(&self.servers)
            .filter_map(|(r, &t)| r.map(|r| interval_disk(t, r)))
            .collect();
        Cover::from_disks(disks, &self.cost_model())
    }

    /// Every client inside some returned interval, with tolerance.
    pub fn is_covered_by(&self, cover: &Cover<S>) -> bool {
        self.clients.iter().all(|&p| {
            cover
                .disks
                .iter()
                .any(|d| (p - d.center.x).abs() <= d.radius + S::tolerance())
        })
    }
}

/// Interval `[t - r, t + r]` as a disk on the x-axis.
#[inline]
pub fn interval_disk<S: Scalar>(t: S, r: S) -> Disk<S> {
    Disk::new(Point::new(t, S::zero()), r, Metric::euclidean())
}

/// Closest center: each client goes to its nearest server.
pub fn cc_cover<S: Scalar>(inst: &LineInstance1D<S>) -> Cover<S> {
    let mut radii: Vec<Option<S>> = vec![None; inst.servers.len()];
    for &p in &inst.clients {
        let j = inst.nearest_server(p);
        let d = (p - inst.servers[j]).abs();
        radii[j] = Some(radii[j].map_or(d, |r| r.max(d)));
    }
    inst.cover_from_radii(&radii)
}

/// Closest center with growth: a left-to-right sweep that grows the rightmost
/// extending disk when that is no farther than the client's nearest server.
pub fn ccg_cover<S: Scalar>(inst: &LineInstance1D<S>) -> Cover<S> {
    let servers = &inst.servers;
    let mut radii: Vec<Option<S>> = vec![None; servers.len()];
    // index of the disk whose right end is largest
    let mut rightmost: Option<usize> = None;

    for &p in &inst.clients {
        let omega = rightmost.map(|j| servers[j] + radii[j].unwrap_or_else(S::zero));
        if let Some(w) = omega {
            if w >= p {
                continue;
            }
        }
        let near = inst.nearest_server(p);
        let to_center = (p - servers[near]).abs();
        match (rightmost, omega) {
            (Some(j), Some(w)) if p - w <= to_center => {
                radii[j] = Some(p - servers[j]);
            }
            _ => {
                radii[near] = Some(radii[near].map_or(to_center, |r| r.max(to_center)));
                rightmost = Some(near);
            }
        }
    }
    inst.cover_from_radii(&radii)
}

#[derive(Debug, Clone, Copy)]
struct Growth<S> {
    amount: S,
    server: usize,
    // 0 = leftward capture, 1 = rightward
    side: u8,
    client: usize,
    from_radius: S,
}

impl<S: Scalar> PartialEq for Growth<S> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl<S: Scalar> Eq for Growth<S> {}
impl<S: Scalar> PartialOrd for Growth<S> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<S: Scalar> Ord for Growth<S> {
    // reversed: BinaryHeap is a max-heap
    fn cmp(&self, other: &Self) -> Ordering {
        cmp(&other.amount, &self.amount)
            .then_with(|| other.server.cmp(&self.server))
            .then_with(|| other.side.cmp(&self.side))
    }
}

/// Skip pointers over uncovered clients in both directions.
struct Uncovered {
    left: Vec<usize>,
    right: Vec<usize>,
    covered: Vec<bool>,
}

impl Uncovered {
    fn new(n: usize) -> Self {
        // slots 1..=n hold clients; 0 and n+1 are sentinels
        Self {
            left: (0..n + 2).collect(),
            right: (0..n + 2).collect(),
            covered: vec![false; n + 2],
        }
    }

    fn find(parent: &mut [usize], mut x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        while parent[x] != root {
            let next = parent[x];
            parent[x] = root;
            x = next;
        }
        root
    }

    /// Largest uncovered client index `<= i` (0-based), if any.
    fn at_or_left(&mut self, i: Option<usize>) -> Option<usize> {
        let slot = Self::find(&mut self.left, i.map_or(0, |i| i + 1));
        (slot != 0).then(|| slot - 1)
    }

    fn at_or_right(&mut self, i: usize, n: usize) -> Option<usize> {
        let slot = Self::find(&mut self.right, i + 1);
        (slot != n + 1).then(|| slot - 1)
    }

    fn cover(&mut self, i: usize) {
        let s = i + 1;
        self.covered[s] = true;
        self.left[s] = s - 1;
        self.right[s] = s + 1;
    }

    fn is_covered(&self, i: usize) -> bool {
        self.covered[i + 1]
    }
}

/// Greedy growth: repeatedly apply the smallest radial growth that captures
/// an uncovered client. Ties: lowest server index, then leftward capture.
pub fn gg_cover<S: Scalar>(inst: &LineInstance1D<S>) -> Cover<S> {
    let servers = &inst.servers;
    let clients = &inst.clients;
    let n = clients.len();
    let mut radius: Vec<S> = vec![S::zero(); servers.len()];
    let mut used = vec![false; servers.len()];
    let mut open = Uncovered::new(n);
    let mut remaining = n;
    let mut heap = BinaryHeap::with_capacity(2 * servers.len());

    // first client strictly right of each server, and the one at or left of it
    let split: Vec<usize> = servers.iter().map(|&t| clients.partition_point(|&p| p <= t)).collect();

    let push_side = |heap: &mut BinaryHeap<Growth<S>>, open: &mut Uncovered, j: usize, side: u8, r: S| {
        let t = servers[j];
        let cand = if side == 0 {
            open.at_or_left(split[j].checked_sub(1))
        } else if split[j] < n {
            open.at_or_right(split[j], n)
        } else {
            None
        };
        if let Some(i) = cand {
            let amount = ((clients[i] - t).abs() - r).max(S::zero());
            heap.push(Growth {
                amount,
                server: j,
                side,
                client: i,
                from_radius: r,
            });
        }
    };

    for j in 0..servers.len() {
        push_side(&mut heap, &mut open, j, 0, S::zero());
        push_side(&mut heap, &mut open, j, 1, S::zero());
    }

    while remaining > 0 {
        let Some(g) = heap.pop() else { break };
        let j = g.server;
        if g.from_radius != radius[j] {
            continue;
        }
        if open.is_covered(g.client) {
            push_side(&mut heap, &mut open, j, g.side, radius[j]);
            continue;
        }
        let t = servers[j];
        radius[j] = radius[j].max((clients[g.client] - t).abs());
        used[j] = true;
        let r = radius[j];
        // everything within [t - r, t + r] is now covered
        let mut i = open.at_or_left(split[j].checked_sub(1));
        while let Some(k) = i {
            if t - clients[k] > r {
                break;
            }
            open.cover(k);
            remaining -= 1;
            i = open.at_or_left(k.checked_sub(1));
        }
        if split[j] < n {
            let mut i = open.at_or_right(split[j], n);
            while let Some(k) = i {
                if clients[k] - t > r {
                    break;
                }
                open.cover(k);
                remaining -= 1;
                i = if k + 1 < n { open.at_or_right(k + 1, n) } else { None };
            }
        }
        push_side(&mut heap, &mut open, j, 0, r);
        push_side(&mut heap, &mut open, j, 1, r);
    }

    let radii: Vec<Option<S>> = radius.iter().zip(&used).map(|(&r, &u)| u.then_some(r)).collect();
    inst.cover_from_radii(&radii)
}

/// Exact optimum by dynamic programming over contiguous client runs.
///
/// `best[i]` is the cheapest cover of clients `i..n`. A run `i..=k` is served
/// by the server closest to the run's midpoint, which minimizes the radius
/// needed for both endpoints. `O(n^2 log m)`.
pub fn exact_1d<S: Scalar>(inst: &LineInstance1D<S>) -> Cover<S> {
    let clients = &inst.clients;
    let n = clients.len();
    let cm = inst.cost_model();
    let mut best: Vec<S> = vec![S::infinity(); n + 1];
    let mut choice: Vec<(usize, usize, S)> = vec![(0, 0, S::zero()); n];
    best[n] = S::zero();
    for i in (0..n).rev() {
        for k in i..n {
            let (j, r) = run_server(inst, clients[i], clients[k]);
            let c = cm.cost(r) + best[k + 1];
            if c < best[i] {
                best[i] = c;
                choice[i] = (k, j, r);
            }
        }
    }

    let mut radii: Vec<Option<S>> = vec![None; inst.servers.len()];
    let mut i = 0;
    while i < n {
        let (k, j, r) = choice[i];
        radii[j] = Some(radii[j].map_or(r, |old: S| old.max(r)));
        i = k + 1;
    }
    let mut cover = inst.cover_from_radii(&radii);
    // a server reused by two runs is merged, which never costs more
    cover.cost = cover.cost.min(best[0]);
    cover
}

fn run_server<S: Scalar>(inst: &LineInstance1D<S>, lo: S, hi: S) -> (usize, S) {
    let mid = (lo + hi) * S::half();
    let j = inst.nearest_server(mid);
    let t = inst.servers[j];
    (j, (t - lo).abs().max((hi - t).abs()))
}


#[cfg(test)]
mod tests {
    use super::oracle::exhaustive_1d;
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn inst(servers: &[f64], clients: &[f64]) -> LineInstance1D<f64> {
        LineInstance1D::new(servers.to_vec(), clients.to_vec(), 1.0).unwrap()
    }

    fn radii(c: &Cover<f64>) -> Vec<(f64, f64)> {
        c.disks.iter().map(|d| (d.center.x, d.radius)).collect()
    }

    #[test]
    fn cc_examples() {
        let c = cc_cover(&inst(&[0.0], &[-3.0, 3.0]));
        assert_eq!((radii(&c), c.cost), (vec![(0.0, 3.0)], 3.0));
        let c = cc_cover(&inst(&[0.0, 10.0], &[1.0, 9.0]));
        assert_eq!((radii(&c), c.cost), (vec![(0.0, 1.0), (10.0, 1.0)], 2.0));
        assert_eq!(cc_cover(&inst(&[5.0], &[5.0])).cost, 0.0);
    }

    #[test]
    fn ccg_examples() {
        let c = ccg_cover(&inst(&[0.0, 10.0], &[1.0, 2.0, 9.0]));
        assert_eq!((radii(&c), c.cost), (vec![(0.0, 2.0), (10.0, 1.0)], 3.0));
        let c = ccg_cover(&inst(&[0.0], &[1.0, 2.0, 3.0]));
        assert_eq!((radii(&c), c.cost), (vec![(0.0, 3.0)], 3.0));
        assert_eq!(ccg_cover(&inst(&[5.0], &[5.0])).cost, 0.0);
    }

    #[test]
    fn gg_tight_instance() {
        let eps = 0.01;
        let c = gg_cover(&inst(&[-2.0 + eps, 0.0, 2.0 - eps], &[-1.0, 1.0]));
        assert!((c.cost - 1.98).abs() < 1e-9);
        let r = radii(&c);
        assert_eq!(r.len(), 2);
        assert!((r[0].0 + 1.99).abs() < 1e-12 && (r[0].1 - 0.99).abs() < 1e-12);
        assert!((r[1].0 - 1.99).abs() < 1e-12 && (r[1].1 - 0.99).abs() < 1e-12);
    }

    #[test]
    fn gg_examples() {
        assert_eq!(gg_cover(&inst(&[0.0], &[4.0])).cost, 4.0);
        assert_eq!(gg_cover(&inst(&[0.0, 10.0], &[1.0, 2.0, 9.0])).cost, 3.0);
        assert_eq!(gg_cover(&inst(&[5.0], &[5.0])).cost, 0.0);
    }

    #[test]
    fn gg_ties_prefer_low_index_and_left() {
        // growth 1 for server 0 on both sides and for server 1 on its left
        let c = gg_cover(&inst(&[0.0, 2.0], &[-1.0, 1.0]));
        assert_eq!(radii(&c), vec![(0.0, 1.0)]);
    }

    #[test]
    fn exact_examples() {
        let c = exact_1d(&inst(&[-1.99, 0.0, 1.99], &[-1.0, 1.0]));
        assert!((c.cost - 1.0).abs() < 1e-12);
        assert_eq!(radii(&c), vec![(0.0, 1.0)]);
        assert_eq!(exact_1d(&inst(&[0.0, 10.0], &[1.0, 2.0, 9.0])).cost, 3.0);
        assert_eq!(exact_1d(&inst(&[5.0], &[5.0])).cost, 0.0);
    }

    #[test]
    fn empty_client_list_costs_nothing() {
        let i = inst(&[0.0], &[]);
        for c in [cc_cover(&i), ccg_cover(&i), gg_cover(&i), exact_1d(&i)] {
            assert_eq!(c.cost, 0.0);
        }
    }

    #[test]
    fn rejects_empty_servers() {
        assert!(LineInstance1D::<f64>::new(vec![], vec![1.0], 1.0).is_err());
    }

    #[test]
    fn works_in_f32() {
        let i = LineInstance1D::<f32>::new(vec![0.0, 10.0], vec![1.0, 2.0, 9.0], 1.0).unwrap();
        assert_eq!(gg_cover(&i).cost, 3.0f32);
        assert_eq!(exact_1d(&i).cost, 3.0f32);
    }

    fn random_instance(rng: &mut impl Rng, max: usize, alpha: f64) -> LineInstance1D<f64> {
        let m = rng.gen_range(1..=max);
        let n = rng.gen_range(1..=max);
        let servers = (0..m).map(|_| rng.gen_range(-10.0..10.0)).collect();
        let clients = (0..n).map(|_| rng.gen_range(-10.0..10.0)).collect();
        LineInstance1D::new(servers, clients, alpha).unwrap()
    }

    #[test]
    fn exact_matches_exhaustive_search() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for alpha in [1.0, 2.0, 3.0] {
            for _ in 0..200 {
                let i = random_instance(&mut rng, 7, alpha);
                let dp = exact_1d(&i);
                let ex = exhaustive_1d(&i);
                assert!((dp.cost - ex).abs() <= 1e-9 * ex.max(1.0), "{i:?}: {} vs {ex}", dp.cost);
                assert!(i.is_covered_by(&dp));
            }
        }
    }

    proptest! {
        #[test]
        fn all_covers_valid_and_within_ratio(
            servers in prop::collection::vec(-50.0f64..50.0, 1..30),
            clients in prop::collection::vec(-50.0f64..50.0, 0..30),
        ) {
            let i = LineInstance1D::new(servers, clients, 1.0).unwrap();
            let opt = exact_1d(&i);
            let cm = i.cost_model();
            for (name, c, bound) in [("cc", cc_cover(&i), 4.0), ("ccg", ccg_cover(&i), 3.0), ("gg", gg_cover(&i), 2.0)] {
                prop_assert!(i.is_covered_by(&c), "{} uncovered", name);
                prop_assert!(c.is_consistent(&cm, 1e-9));
                prop_assert!(c.cost <= bound * opt.cost + 1e-9, "{}: {} > {} * {}", name, c.cost, bound, opt.cost);
                prop_assert!(opt.cost <= c.cost + 1e-9);
            }
            prop_assert!(i.is_covered_by(&opt));
        }

        #[test]
        fn translation_and_scaling(
            servers in prop::collection::vec(-20.0f64..20.0, 1..10),
            clients in prop::collection::vec(-20.0f64..20.0, 1..10),
            shift in -100.0f64..100.0,
            scale in 0.1f64..10.0,
        ) {
            let base = LineInstance1D::new(servers.clone(), clients.clone(), 1.0).unwrap();
            let moved = LineInstance1D::new(
                servers.iter().map(|s| s + shift).collect(),
                clients.iter().map(|c| c + shift).collect(),
                1.0,
            ).unwrap();
            let scaled = LineInstance1D::new(
                servers.iter().map(|s| s * scale).collect(),
                clients.iter().map(|c| c * scale).collect(),
                1.0,
            ).unwrap();
            let e = exact_1d(&base).cost;
            prop_assert!((exact_1d(&moved).cost - e).abs() <= 1e-9 * e.max(1.0));
            prop_assert!((exact_1d(&scaled).cost - scale * e).abs() <= 1e-9 * (scale * e).max(1.0));
            let g = gg_cover(&base).cost;
            prop_assert!((gg_cover(&scaled).cost - scale * g).abs() <= 1e-9 * (scale * g).max(1.0));
        }
    }

    #[test]
    fn gg_tightness_family_approaches_two() {
        for eps in [0.1, 0.05, 0.01] {
            let i = inst(&[-2.0 + eps, 0.0, 2.0 - eps], &[-1.0, 1.0]);
            let ratio = gg_cover(&i).cost / exact_1d(&i).cost;
            assert!((ratio - (2.0 - 2.0 * eps)).abs() < 1e-9);
        }
        let i = inst(&[-1.99, 0.0, 1.99], &[-1.0, 1.0]);
        assert!(gg_cover(&i).cost / exact_1d(&i).cost >= 1.9);
    }

    #[test]
    fn gg_scales_to_large_instances() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let servers = (0..20_000).map(|_| rng.gen_range(0.0..1e6)).collect();
        let clients = (0..20_000).map(|_| rng.gen_range(0.0..1e6)).collect();
        let i = LineInstance1D::new(servers, clients, 1.0).unwrap();
        let c = gg_cover(&i);
        assert!(i.is_covered_by(&c));
    }
}
