//! Seeded instance generators.

use diskcover::{CostModel, Instance, Metric, Point};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::error::{HarnessError, Result};

pub const KINDS: &[&str] = &[
    "uniform-square",
    "gaussian-clusters",
    "gg-tight",
    "sgg-area",
    "collinear",
    "circle",
];

/// Generator knobs; each kind reads the ones it needs and has defaults.
#[derive(Debug, Clone, PartialEq)]
pub struct GenParams {
    /// Client count.
    pub n: usize,
    /// Server count for `collinear`.
    pub m: usize,
    pub epsilon: f64,
    /// Circle radius, or square side for the random kinds.
    pub radius: f64,
    pub metric: Metric,
    pub alpha: f64,
    pub tour_weight: Option<f64>,
}

impl Default for GenParams {
    fn default() -> Self {
        Self {
            n: 8,
            m: 4,
            epsilon: 0.1,
            radius: 1.0,
            metric: Metric::euclidean(),
            alpha: 1.0,
            tour_weight: None,
        }
    }
}

/// Builds an instance of `kind`; the same seed always gives the same one.
///
/// * `uniform-square`: `n` clients uniform in `[0, 10 radius]^2`.
/// * `gaussian-clusters`: `ceil(n / 10)` centers uniform in that square,
///   clients normal around them with deviation `radius / 2`.
/// * `gg-tight`: servers `-2 + eps, 0, 2 - eps`, clients `-1, 1`.
/// * `sgg-area`: `n` clients at height 1 spaced `1 + eps`.
/// * `collinear`: `n` clients and `m` servers uniform on `[0, 10 radius]`.
/// * `circle`: `n` clients at uniform random angles on a circle of `radius`.
pub fn generate(kind: &str, params: &GenParams, seed: u64) -> Result<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let side = 10.0 * params.radius;
    let eps = params.epsilon;
    let mut servers = None;
    let clients: Vec<Point> = match kind {
        "uniform-square" => (0..params.n)
            .map(|_| Point::new(rng.gen_range(0.0..side), rng.gen_range(0.0..side)))
            .collect(),
        "gaussian-clusters" => {
            let k = params.n.div_ceil(10).max(1);
            let centers: Vec<Point> = (0..k)
                .map(|_| Point::new(rng.gen_range(0.0..side), rng.gen_range(0.0..side)))
                .collect();
            let spread =
                Normal::new(0.0, params.radius * 0.5).map_err(|e| HarnessError::value("radius", e.to_string()))?;
            (0..params.n)
                .map(|i| {
                    let c = centers[i % k];
                    Point::new(c.x + spread.sample(&mut rng), c.y + spread.sample(&mut rng))
                })
                .collect()
        }
        "gg-tight" => {
            if !(eps > 0.0 && eps < 1.0) {
                return Err(HarnessError::value("epsilon", "gg-tight needs 0 < eps < 1"));
            }
            servers = Some(vec![
                Point::new(-2.0 + eps, 0.0),
                Point::new(0.0, 0.0),
                Point::new(2.0 - eps, 0.0),
            ]);
            vec![Point::new(-1.0, 0.0), Point::new(1.0, 0.0)]
        }
        "sgg-area" => (0..params.n).map(|k| Point::new(k as f64 * (1.0 + eps), 1.0)).collect(),
        "collinear" => {
            servers = Some(
                (0..params.m.max(1))
                    .map(|_| Point::new(rng.gen_range(0.0..side), 0.0))
                    .collect(),
            );
            (0..params.n)
                .map(|_| Point::new(rng.gen_range(0.0..side), 0.0))
                .collect()
        }
        "circle" => {
            let mut angles: Vec<f64> = (0..params.n)
                .map(|_| rng.gen_range(0.0..std::f64::consts::TAU))
                .collect();
            angles.sort_by(f64::total_cmp);
            angles
                .iter()
                .map(|a| Point::new(params.radius * a.cos(), params.radius * a.sin()))
                .collect()
        }
        other => {
            return Err(HarnessError::Usage(format!(
                "unknown generator `{other}`; expected one of {}",
                KINDS.join(", ")
            )))
        }
    };
    if clients.is_empty() {
        return Err(HarnessError::value("n", "must be at least 1"));
    }
    let mut cost_model = CostModel::new(params.alpha).map_err(|e| HarnessError::value("alpha", e.to_string()))?;
    if let Some(c) = params.tour_weight {
        cost_model = cost_model
            .with_tour_weight(c)
            .map_err(|e| HarnessError::value("tour_weight", e.to_string()))?;
    }
    Ok(Instance::new(clients, servers, params.metric, cost_model, None)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gg_tight_layout() {
        let p = GenParams {
            epsilon: 0.01,
            ..GenParams::default()
        };
        let i = generate("gg-tight", &p, 0).unwrap();
        let s: Vec<f64> = i.servers.unwrap().iter().map(|p| p.x).collect();
        assert_eq!(s, vec![-1.99, 0.0, 1.99]);
        assert_eq!(i.clients, vec![Point::new(-1.0, 0.0), Point::new(1.0, 0.0)]);
    }

    #[test]
    fn sgg_area_layout() {
        let p = GenParams {
            n: 3,
            epsilon: 0.1,
            ..GenParams::default()
        };
        let i = generate("sgg-area", &p, 0).unwrap();
        assert_eq!(
            i.clients,
            vec![Point::new(0.0, 1.0), Point::new(1.1, 1.0), Point::new(2.2, 1.0)]
        );
    }

    #[test]
    fn circle_points_lie_on_the_circle() {
        let i = generate("circle", &GenParams::default(), 7).unwrap();
        assert_eq!(i.clients.len(), 8);
        assert!(i.clients.iter().all(|p| (p.x.hypot(p.y) - 1.0).abs() < 1e-12));
    }

    #[test]
    fn deterministic_per_seed() {
        for kind in KINDS {
            let p = GenParams::default();
            assert_eq!(generate(kind, &p, 3).unwrap(), generate(kind, &p, 3).unwrap(), "{kind}");
        }
        let p = GenParams::default();
        assert_ne!(
            generate("uniform-square", &p, 1).unwrap(),
            generate("uniform-square", &p, 2).unwrap()
        );
    }

    #[test]
    fn collinear_has_servers_on_the_axis() {
        let i = generate("collinear", &GenParams::default(), 5).unwrap();
        assert_eq!(i.servers.as_ref().unwrap().len(), 4);
        assert!(i.clients.iter().chain(i.servers.as_ref().unwrap()).all(|p| p.y == 0.0));
    }

    #[test]
    fn unknown_kind_is_a_usage_error() {
        let e = generate("spiral", &GenParams::default(), 0).unwrap_err();
        assert_eq!(e.exit_code(), 2);
    }
}
