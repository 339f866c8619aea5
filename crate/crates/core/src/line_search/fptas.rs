use super::{solve_on_line, LineSearchResult, PerLine};
use crate::error::{invalid, Result};
use crate::geometry::{CostModel, Cover, Line, Metric, Point};
use crate::scalar::Scalar;

/// Best horizontal line to within `1 + epsilon`, by exact covers on a
/// regular family of lines spanning the clients' vertical extent `d`.
///
/// The strip height is `d * eps / 2n` for linear cost and
/// `eps * d / (alpha * 2^(2 alpha - 1) * n)` otherwise. The strip count is
/// rounded up to a power of two so that smaller `epsilon` refines the family.
pub fn fptas_horizontal<S: Scalar>(
    clients: &[Point<S>],
    metric: Metric<S>,
    cost_model: &CostModel<S>,
    epsilon: S,
) -> Result<LineSearchResult<S>> {
    if !(epsilon > S::zero()) || !epsilon.is_finite() {
        return Err(invalid("epsilon", format!("{epsilon} is not positive")));
    }
    if clients.is_empty() {
        return Ok(LineSearchResult {
            line: Line::horizontal(S::zero()),
            cover: Cover::empty(),
            epsilon,
        });
    }
    let lo = clients.iter().fold(S::infinity(), |a, p| a.min(p.y));
    let hi = clients.iter().fold(S::neg_infinity(), |a, p| a.max(p.y));
    let d = hi - lo;
    if d == S::zero() {
        let line = Line::horizontal(lo);
        let cover = solve_on_line(clients, &line, metric, cost_model, PerLine::Exact);
        return Ok(LineSearchResult {
            line,
            cover,
            epsilon: S::zero(),
        });
    }

    let n = S::from_usize(clients.len()).expect("count representable");
    let alpha = cost_model.alpha;
    let strips = if cost_model.is_linear() {
        S::two() * n / epsilon
    } else {
        alpha * S::two().powf(S::two() * alpha - S::one()) * n / epsilon
    };
    let strips = strip_count(strips);
    let delta = d / S::from_usize(strips).expect("count representable");

    let mut best: Option<LineSearchResult<S>> = None;
    for k in 0..=strips {
        let y = if k == strips {
            hi
        } else {
            lo + delta * S::from_usize(k).expect("count representable")
        };
        let line = Line::horizontal(y);
        let cover = solve_on_line(clients, &line, metric, cost_model, PerLine::Exact);
        if best.as_ref().is_none_or(|b| cover.cost < b.cover.cost) {
            best = Some(LineSearchResult { line, cover, epsilon });
        }
    }
    Ok(best.expect("at least two candidate lines"))
}

/// Smallest power of two at or above `x`, at least 1.
fn strip_count<S: Scalar>(x: S) -> usize {
    let want = x.ceil().to_f64().unwrap_or(f64::MAX).max(1.0);
    assert!(want <= (1u64 << 40) as f64, "strip count {want} out of range");
    (want as u64).next_power_of_two() as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::line_search::test_support::{radicals, radicals_mirrored_last};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ternary(f: impl Fn(f64) -> f64) -> f64 {
        let (mut a, mut b) = (-2.0f64, 2.0f64);
        for _ in 0..200 {
            let m1 = a + (b - a) / 3.0;
            let m2 = b - (b - a) / 3.0;
            if f(m1) < f(m2) {
                b = m2
            } else {
                a = m1
            }
        }
        a
    }

    // three forced circles: one through each client pair, one for the last client
    fn pair_terms(y: f64) -> f64 {
        (2.0 * (y - 1.0).powi(2) + 18.0).sqrt() + (2.0 * y * y + 8.0).sqrt()
    }

    #[test]
    fn radicals_instance_as_listed() {
        // (200, -2) sits 2 + y below the line
        let c = |y: f64| pair_terms(y) + (2.0 + y);
        let y0 = ternary(c);
        let r = fptas_horizontal(&radicals(), Metric::euclidean(), &CostModel::linear(), 1e-3).unwrap();
        assert!((r.cover.cost - c(y0)).abs() < 1e-6, "{} vs {}", r.cover.cost, c(y0));
        assert!((r.line.anchor.y - y0).abs() < 1e-2);
        assert!(r.covers_all(&radicals()));
        assert!(r.disks_on_line());
    }

    #[test]
    fn radicals_closed_form_values() {
        let pts = radicals_mirrored_last();
        let c = |y: f64| pair_terms(y) + (2.0 - y);
        let y0 = ternary(c);
        assert!((c(y0) - 8.3327196).abs() < 1e-7);
        assert!((y0 - 1.4024709).abs() < 1e-6);
        let on = solve_on_line(
            &pts,
            &Line::horizontal(y0),
            Metric::euclidean(),
            &CostModel::linear(),
            PerLine::Exact,
        );
        assert!((on.cost - c(y0)).abs() < 1e-9);
        let r = fptas_horizontal(&pts, Metric::euclidean(), &CostModel::linear(), 1e-3).unwrap();
        assert!((r.cover.cost - 8.3327196).abs() < 1e-2, "{}", r.cover.cost);
        assert!((r.line.anchor.y - 1.4024709).abs() < 1e-2, "{}", r.line.anchor.y);
    }

    #[test]
    fn flat_instance() {
        let pts = [Point::<f64>::new(0.0, 5.0), Point::new(7.0, 5.0)];
        let r = fptas_horizontal(&pts, Metric::euclidean(), &CostModel::linear(), 0.5).unwrap();
        assert_eq!((r.line.anchor.y, r.cover.cost), (5.0, 0.0));
    }

    #[test]
    fn symmetric_pair() {
        let pts = [Point::<f64>::new(0.0, 0.0), Point::new(0.0, 2.0)];
        let r = fptas_horizontal(&pts, Metric::euclidean(), &CostModel::linear(), 0.1).unwrap();
        assert!(r.cover.cost <= 1.1);
        assert!((r.cover.cost - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_epsilon() {
        let pts = [Point::<f64>::new(0.0, 0.0)];
        for e in [0.0, -1.0, f64::NAN] {
            assert!(fptas_horizontal(&pts, Metric::euclidean(), &CostModel::linear(), e).is_err());
        }
    }

    fn sweep_best(pts: &[Point<f64>], m: Metric<f64>, f: &CostModel<f64>, steps: usize) -> f64 {
        let lo = pts.iter().fold(f64::INFINITY, |a, p| a.min(p.y));
        let hi = pts.iter().fold(f64::NEG_INFINITY, |a, p| a.max(p.y));
        (0..=steps)
            .map(|k| {
                let y = lo + (hi - lo) * k as f64 / steps as f64;
                solve_on_line(pts, &Line::horizontal(y), m, f, PerLine::Exact).cost
            })
            .fold(f64::INFINITY, f64::min)
    }

    #[test]
    fn within_bound_of_finer_sweep_and_monotone() {
        let mut rng = ChaCha8Rng::seed_from_u64(50);
        for alpha in [1.0, 2.0] {
            let f = CostModel::new(alpha).unwrap();
            for _ in 0..10 {
                let n = rng.gen_range(2..=6);
                let pts: Vec<_> = (0..n)
                    .map(|_| Point::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)))
                    .collect();
                let mut last = f64::INFINITY;
                for eps in [1.0, 0.5, 0.25] {
                    let r = fptas_horizontal(&pts, Metric::euclidean(), &f, eps).unwrap();
                    assert!(r.covers_all(&pts));
                    assert!(r.cover.cost <= last + 1e-12);
                    last = r.cover.cost;
                    if alpha == 1.0 {
                        let fine = sweep_best(&pts, Metric::euclidean(), &f, 10 * strip_count(2.0 * n as f64 / eps));
                        assert!(r.cover.cost <= (1.0 + eps) * fine + 1e-9);
                    }
                }
            }
        }
    }

    #[test]
    fn strip_counts_are_powers_of_two() {
        assert_eq!(strip_count(1e4f64), 16384);
        assert_eq!(strip_count(0.3f64), 1);
        assert_eq!(strip_count(8.0f64), 8);
    }
}
