use crate::geometry::{CostModel, Cover, Disk, Metric, Point};
use crate::scalar::{cmp, Scalar};

/// Clients by decreasing distance to the axis, ties by lower x.
fn processing_order<S: Scalar>(clients: &[Point<S>]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..clients.len()).collect();
    order.sort_by(|&a, &b| {
        cmp(&clients[b].y.abs(), &clients[a].y.abs())
            .then_with(|| cmp(&clients[a].x, &clients[b].x))
            .then_with(|| a.cmp(&b))
    });
    order
}

fn square<S: Scalar>(cx: S, r: S) -> Disk<S> {
    Disk::new(Point::new(cx, S::zero()), r, Metric::Inf)
}

/// Square greedy: each unvisited client, farthest from the axis first, seeds a
/// square of half-side `|y|` at its projection and discards every client in
/// that square's x-range.
pub fn sg_cover<S: Scalar>(clients: &[Point<S>], cost_model: &CostModel<S>) -> Cover<S> {
    let n = clients.len();
    let mut by_x: Vec<usize> = (0..n).collect();
    by_x.sort_by(|&a, &b| cmp(&clients[a].x, &clients[b].x).then_with(|| a.cmp(&b)));
    let mut rank = vec![0usize; n];
    for (k, &i) in by_x.iter().enumerate() {
        rank[i] = k;
    }
    let xs: Vec<S> = by_x.iter().map(|&i| clients[i].x).collect();

    // next alive slot in x order, path-compressed
    let mut next: Vec<usize> = (0..=n).collect();
    let mut alive = vec![true; n];
    fn find(next: &mut [usize], mut k: usize) -> usize {
        let mut root = k;
        while next[root] != root {
            root = next[root];
        }
        while next[k] != root {
            let up = next[k];
            next[k] = root;
            k = up;
        }
        root
    }

    let mut disks = Vec::new();
    for i in processing_order(clients) {
        if !alive[rank[i]] {
            continue;
        }
        let p = clients[i];
        let r = p.y.abs();
        disks.push(square(p.x, r));
        let start = xs.partition_point(|&x| x < p.x - r);
        let mut k = find(&mut next, start);
        while k < n && xs[k] <= p.x + r {
            alive[k] = false;
            next[k] = k + 1;
            k = find(&mut next, k + 1);
        }
    }
    Cover::from_disks(disks, cost_model)
}

/// Square greedy with growth, for linear cost.
///
/// Like [`sg_cover`], but a new square that would overlap existing squares is
/// not placed. Instead the overlapped square needing the smallest extension
/// grows toward the client, its far edge fixed. Ties grow the left square.
pub fn sgg_cover<S: Scalar>(clients: &[Point<S>]) -> Cover<S> {
    // x-intervals [lo, hi]; the square's half-side is (hi - lo) / 2
    let mut squares: Vec<(S, S)> = Vec::new();
    let tol = S::tolerance();
    for i in processing_order(clients) {
        let p = clients[i];
        let d = p.y.abs();
        let covered = squares
            .iter()
            .any(|&(lo, hi)| p.x >= lo - tol && p.x <= hi + tol && d <= (hi - lo) * S::half() + tol);
        if covered {
            continue;
        }
        let (lo, hi) = (p.x - d, p.x + d);
        let mut best: Option<(usize, S)> = None;
        for (k, &(a, b)) in squares.iter().enumerate() {
            if a < hi && lo < b {
                // squares are never lower than d, so p lies beside this one
                let ext = if p.x > b { p.x - b } else { a - p.x };
                let better = match best {
                    None => true,
                    Some((j, e)) => ext < e || (ext == e && a < squares[j].0),
                };
                if better {
                    best = Some((k, ext));
                }
            }
        }
        match best {
            None => squares.push((lo, hi)),
            Some((k, _)) => {
                let (a, b) = squares[k];
                squares[k] = if p.x > b { (a, p.x) } else { (p.x, b) };
            }
        }
    }
    let disks = squares
        .into_iter()
        .map(|(lo, hi)| square((lo + hi) * S::half(), (hi - lo) * S::half()))
        .collect();
    Cover::from_disks(disks, &CostModel::linear())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::line_cover::dp_squares;
    use crate::line_cover::test_support::random_clients;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pts(v: &[(f64, f64)]) -> Vec<Point<f64>> {
        v.iter().map(|&(x, y)| Point::new(x, y)).collect()
    }

    fn lin() -> CostModel<f64> {
        CostModel::linear()
    }

    #[test]
    fn sg_examples() {
        let c = sg_cover(&pts(&[(0.0, 2.0), (1.0, 1.0)]), &lin());
        assert_eq!((c.disks.len(), c.cost), (1, 2.0));
        let c = sg_cover(&pts(&[(0.0, 1.0), (10.0, 1.0)]), &lin());
        assert_eq!((c.disks.len(), c.cost), (2, 2.0));
        // SG places (0,0;2) and (3,0;1); one radius-2 square at x in [1,2] is optimal
        let two = pts(&[(0.0, 2.0), (3.0, 1.0)]);
        assert_eq!(sg_cover(&two, &lin()).cost, 3.0);
        assert_eq!(dp_squares(&two, &lin()).cost, 2.0);
    }

    #[test]
    fn sgg_examples() {
        let c = sgg_cover(&pts(&[(0.0, 1.0), (10.0, 1.0)]));
        assert_eq!((c.disks.len(), c.edge_length()), (2, 4.0));
        let c = sgg_cover(&pts(&[(0.0, 2.0)]));
        assert_eq!(c.edge_length(), 4.0);
    }

    #[test]
    fn sgg_grows_instead_of_overlapping() {
        // spacing below 1 so each new square would overlap the chain
        let c = sgg_cover(&pts(&[(0.0, 1.0), (0.9, 1.0), (1.8, 1.0)]));
        assert_eq!(c.disks.len(), 1);
        assert!((c.edge_length() - 2.8).abs() < 1e-12);
        assert!(c.covers_all(&pts(&[(0.0, 1.0), (0.9, 1.0), (1.8, 1.0)])));
    }

    #[test]
    fn sgg_unit_and_a_tenth_spacing_does_not_chain() {
        // the third square [1.2, 3.2] clears the grown [-1, 1.1]
        let clients = pts(&[(0.0, 1.0), (1.1, 1.0), (2.2, 1.0)]);
        let c = sgg_cover(&clients);
        assert_eq!(c.disks.len(), 2);
        assert!((c.edge_length() - 4.1).abs() < 1e-12);
    }

    #[test]
    fn sgg_area_grows_superlinearly() {
        // one growing square, area quadratic in n against 4n for the unit squares
        let area_ratio = |n: usize| {
            let clients: Vec<_> = (0..n).map(|i| Point::new(i as f64 * 0.99, 1.0)).collect();
            let c = sgg_cover(&clients);
            let area: f64 = c.disks.iter().map(|d| 4.0 * d.radius * d.radius).sum();
            area / (4.0 * n as f64)
        };
        let ratios: Vec<f64> = [3, 5, 10, 20].iter().map(|&n| area_ratio(n)).collect();
        assert!(ratios.windows(2).all(|w| w[1] > w[0]), "{ratios:?}");
        assert!(ratios[3] > 4.0);
    }

    #[test]
    fn sg_never_triple_covers() {
        let mut rng = ChaCha8Rng::seed_from_u64(30);
        for _ in 0..50 {
            let n = rng.gen_range(1..30);
            let clients = random_clients(&mut rng, n, 10.0);
            let c = sg_cover(&clients, &lin());
            for _ in 0..2000 {
                let q = Point::new(rng.gen_range(-20.0..20.0), rng.gen_range(-10.0..10.0));
                let k = c.disks.iter().filter(|d| d.contains(&q)).count();
                assert!(k <= 2);
            }
        }
    }

    #[test]
    fn greedy_ratios_against_dp() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..200 {
            let n = rng.gen_range(1..=10);
            let clients = random_clients(&mut rng, n, 5.0);
            for alpha in [1.0, 2.0] {
                let f = CostModel::new(alpha).unwrap();
                let opt = dp_squares(&clients, &f).cost;
                let sg = sg_cover(&clients, &f);
                assert!(sg.covers_all(&clients));
                assert!(sg.cost <= 3.0 * opt + 1e-9);
            }
            let sgg = sgg_cover(&clients);
            assert!(sgg.covers_all(&clients));
            assert!(sgg.cost <= 2.0 * dp_squares(&clients, &lin()).cost + 1e-9);
        }
    }

    #[test]
    fn sg_scales() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        let clients = random_clients(&mut rng, 50_000, 1000.0);
        let c = sg_cover(&clients, &lin());
        assert!(c.disks.len() < clients.len());
    }
}
