use crate::error::{CoverError, Result};
use crate::geometry::{CostModel, Cover, Disk, Metric, Point};
use crate::scalar::Scalar;

pub const ORACLE_MAX_CLIENTS: usize = 12;

/// Exact axis-centered cover by exhaustive search, for at most
/// [`ORACLE_MAX_CLIENTS`] clients.
///
/// Candidate disks are the minimax disks of every client and client pair,
/// found numerically rather than from the pinned-circle formulas. Under L∞
/// both ends of the flat optimum are kept. The search branches on the lowest
/// uncovered client over the candidates containing it, memoized on the
/// covered set.
pub fn oracle_line_exact<S: Scalar>(
    clients: &[Point<S>],
    metric: Metric<S>,
    cost_model: &CostModel<S>,
) -> Result<Cover<S>> {
    let n = clients.len();
    if n > ORACLE_MAX_CLIENTS {
        return Err(CoverError::TooLarge {
            what: "line oracle clients",
            size: n,
            limit: ORACLE_MAX_CLIENTS,
        });
    }
    if n == 0 {
        return Ok(Cover::empty());
    }
    let pts: Vec<Point<S>> = clients.iter().map(|p| Point::new(p.x, p.y.abs())).collect();

    let mut candidates: Vec<(u32, Disk<S>)> = Vec::new();
    let mut add = |group: &[Point<S>]| {
        for disk in minimax_disks(group, metric) {
            let mask = pts
                .iter()
                .enumerate()
                .filter(|(_, p)| disk.contains(p))
                .fold(0u32, |m, (i, _)| m | (1 << i));
            candidates.push((mask, disk));
        }
    };
    for i in 0..n {
        add(&[pts[i]]);
        for j in i + 1..n {
            add(&[pts[i], pts[j]]);
        }
    }

    let full = (1u32 << n) - 1;
    let mut memo: Vec<Option<(S, usize)>> = vec![None; 1 << n];
    fn solve<S: Scalar>(
        mask: u32,
        full: u32,
        cands: &[(u32, Disk<S>)],
        cm: &CostModel<S>,
        memo: &mut [Option<(S, usize)>],
    ) -> S {
        if mask == full {
            return S::zero();
        }
        if let Some((c, _)) = memo[mask as usize] {
            return c;
        }
        let low = (!mask).trailing_zeros();
        let mut best = (S::infinity(), usize::MAX);
        for (k, &(m, d)) in cands.iter().enumerate() {
            if m & (1 << low) == 0 {
                continue;
            }
            let c = cm.cost(d.radius) + solve(mask | m, full, cands, cm, memo);
            if c < best.0 {
                best = (c, k);
            }
        }
        memo[mask as usize] = Some(best);
        best.0
    }
    solve(0, full, &candidates, cost_model, &mut memo);

    let mut disks = Vec::new();
    let mut mask = 0u32;
    while mask != full {
        let (_, k) = memo[mask as usize].expect("solved state");
        disks.push(candidates[k].1);
        mask |= candidates[k].0;
    }
    Ok(Cover::from_disks(disks, cost_model))
}

/// Axis-centered disks of least radius containing `group`.
fn minimax_disks<S: Scalar>(group: &[Point<S>], metric: Metric<S>) -> Vec<Disk<S>> {
    let radius_at = |x: S| {
        let c = Point::new(x, S::zero());
        group.iter().fold(S::zero(), |a, p| a.max(metric.distance(&c, p)))
    };
    let lo = group.iter().fold(S::infinity(), |a, p| a.min(p.x));
    let hi = group.iter().fold(S::neg_infinity(), |a, p| a.max(p.x));
    let reach = group.iter().fold(S::zero(), |a, p| a.max(p.y));
    let (mut a, mut b) = (lo - reach, hi + reach);
    let third = S::lit(3.0);
    for _ in 0..200 {
        let m1 = a + (b - a) / third;
        let m2 = b - (b - a) / third;
        if radius_at(m1) <= radius_at(m2) {
            b = m2;
        } else {
            a = m1;
        }
    }
    let x = (a + b) * S::half();
    let disk_at = |x: S| Disk::new(Point::new(x, S::zero()), radius_at(x), metric);
    let mut out = vec![disk_at(x)];
    if metric == Metric::Inf {
        let r = radius_at(x);
        let slack = S::epsilon() * S::lit(64.0) * (r + lo.abs().max(hi.abs()));
        let flat = |t: S| radius_at(t) <= r + slack;
        // plateau ends by bisection from the interior minimizer
        let edge = |mut inside: S, mut outside: S| {
            for _ in 0..200 {
                let mid = (inside + outside) * S::half();
                if flat(mid) {
                    inside = mid;
                } else {
                    outside = mid;
                }
            }
            inside
        };
        out.push(disk_at(edge(x, lo - reach - S::one())));
        out.push(disk_at(edge(x, hi + reach + S::one())));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::line_cover::test_support::random_clients;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pts(v: &[(f64, f64)]) -> Vec<Point<f64>> {
        v.iter().map(|&(x, y)| Point::new(x, y)).collect()
    }

    #[test]
    fn examples() {
        let lin = CostModel::linear();
        let c = oracle_line_exact(&pts(&[(0.0, 1.0)]), Metric::euclidean(), &lin).unwrap();
        assert!((c.cost - 1.0).abs() < 1e-12);
        let c = oracle_line_exact(&pts(&[(0.0, 1.0), (4.0, 1.0)]), Metric::euclidean(), &lin).unwrap();
        assert!((c.cost - 2.0).abs() < 1e-12);
        let sq = CostModel::new(2.0).unwrap();
        let c = oracle_line_exact(&pts(&[(0.0, 1.0), (1.0, 1.0)]), Metric::euclidean(), &sq).unwrap();
        assert!((c.cost - 1.25).abs() < 1e-9);
    }

    #[test]
    fn rejects_large_instances() {
        let clients = vec![Point::new(0.0, 1.0); ORACLE_MAX_CLIENTS + 1];
        let err = oracle_line_exact(&clients, Metric::euclidean(), &CostModel::linear()).unwrap_err();
        assert!(matches!(err, CoverError::TooLarge { .. }));
    }

    #[test]
    fn adding_a_client_never_helps() {
        let mut rng = ChaCha8Rng::seed_from_u64(40);
        for metric in [Metric::manhattan(), Metric::euclidean(), Metric::Inf] {
            for _ in 0..50 {
                let n = rng.gen_range(2..=8);
                let clients = random_clients(&mut rng, n, 5.0);
                let f = CostModel::new(2.0).unwrap();
                let all = oracle_line_exact(&clients, metric, &f).unwrap();
                let fewer = oracle_line_exact(&clients[..n - 1], metric, &f).unwrap();
                assert!(fewer.cost <= all.cost + 1e-9);
                assert!(all.covers_all(&clients));
            }
        }
    }

    #[test]
    fn pinned_circles_suffice() {
        // every optimal disk is matched by a pinned circle of no larger radius
        // covering the same clients
        use crate::geometry::{normalize_clients, pinned_circles};
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for metric in [Metric::manhattan(), Metric::euclidean(), Metric::Inf] {
            for _ in 0..50 {
                let n = rng.gen_range(1..=8);
                let clients = normalize_clients(&random_clients(&mut rng, n, 5.0));
                let pinned = pinned_circles(&clients, metric);
                let opt = oracle_line_exact(&clients, metric, &CostModel::linear()).unwrap();
                for d in &opt.disks {
                    let inside: Vec<_> = clients.iter().filter(|p| d.contains(p)).collect();
                    assert!(pinned.iter().any(|q| q.radius <= d.radius + 1e-7
                        && inside
                            .iter()
                            .all(|p| q.metric.distance(&q.center, p) <= q.radius + 1e-7)));
                }
            }
        }
    }
}
