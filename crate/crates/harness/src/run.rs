//! Algorithm dispatch by id.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use diskcover::discrete_1d::{cc_cover, ccg_cover, exact_1d, gg_cover};
use diskcover::line_cover::{
    dp_linear, dp_squares, dp_superlinear, oracle_line_exact, sg_cover, sgg_cover, ORACLE_MAX_CLIENTS,
};
use diskcover::line_search::{any_line_constant, any_line_ptas, fptas_horizontal, sweep_oracle};
use diskcover::mcct::{circumcenter_solution, cluster_and_tour, exact_small_mcct, MAX_GRID_CANDIDATES, MAX_TOUR_DISKS};
use diskcover::{Cover, GridSpec, Instance, Line, LineInstance1D, Metric, Point};

use crate::error::{HarnessError, Result};
use crate::io::Solution;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algorithm {
    Cc,
    Ccg,
    Gg,
    Exact1d,
    DpLinear,
    DpSuper,
    DpSquares,
    Sg,
    Sgg,
    FptasH,
    LineConst,
    LinePtas,
    McctCircum,
    McctHeur,
    McctExact,
    OracleLine,
    SweepOracle,
}

impl Algorithm {
    pub const ALL: [Algorithm; 17] = [
        Algorithm::Cc,
        Algorithm::Ccg,
        Algorithm::Gg,
        Algorithm::Exact1d,
        Algorithm::DpLinear,
        Algorithm::DpSuper,
        Algorithm::DpSquares,
        Algorithm::Sg,
        Algorithm::Sgg,
        Algorithm::FptasH,
        Algorithm::LineConst,
        Algorithm::LinePtas,
        Algorithm::McctCircum,
        Algorithm::McctHeur,
        Algorithm::McctExact,
        Algorithm::OracleLine,
        Algorithm::SweepOracle,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Algorithm::Cc => "cc",
            Algorithm::Ccg => "ccg",
            Algorithm::Gg => "gg",
            Algorithm::Exact1d => "exact1d",
            Algorithm::DpLinear => "dp-linear",
            Algorithm::DpSuper => "dp-super",
            Algorithm::DpSquares => "dp-squares",
            Algorithm::Sg => "sg",
            Algorithm::Sgg => "sgg",
            Algorithm::FptasH => "fptas-h",
            Algorithm::LineConst => "line-const",
            Algorithm::LinePtas => "line-ptas",
            Algorithm::McctCircum => "mcct-circum",
            Algorithm::McctHeur => "mcct-heur",
            Algorithm::McctExact => "mcct-exact",
            Algorithm::OracleLine => "oracle-line",
            Algorithm::SweepOracle => "sweep-oracle",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Algorithm {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL.into_iter().find(|a| a.id() == s).ok_or_else(|| {
            let ids: Vec<&str> = Algorithm::ALL.iter().map(|a| a.id()).collect();
            HarnessError::Usage(format!("unknown algorithm `{s}`; expected one of {}", ids.join(", ")))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RunOptions {
    /// Approximation parameter, or the sweep resolution for `sweep-oracle`.
    /// Each algorithm has its own default.
    pub epsilon: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub solution: Solution,
    pub runtime_ms: f64,
}

fn usage(alg: Algorithm, why: &str) -> HarnessError {
    HarnessError::Usage(format!("{alg}: {why}"))
}

fn line_instance(alg: Algorithm, inst: &Instance) -> Result<LineInstance1D> {
    let servers = inst
        .servers
        .as_ref()
        .ok_or_else(|| usage(alg, "the instance has no servers"))?;
    if inst.clients.iter().chain(servers).any(|p| p.y != 0.0) {
        return Err(usage(alg, "one-dimensional instances need every point on the x-axis"));
    }
    let xs = |v: &[Point]| v.iter().map(|p| p.x).collect::<Vec<_>>();
    Ok(LineInstance1D::new(
        xs(servers),
        xs(&inst.clients),
        inst.cost_model.alpha,
    )?)
}

fn need_linear(alg: Algorithm, inst: &Instance) -> Result<()> {
    if inst.cost_model.is_linear() {
        Ok(())
    } else {
        Err(usage(alg, "needs alpha = 1"))
    }
}

fn need_euclidean(alg: Algorithm, inst: &Instance) -> Result<()> {
    if inst.metric.is_euclidean() {
        Ok(())
    } else {
        Err(usage(alg, "needs the Euclidean metric (p = 2)"))
    }
}

fn tour_weight(alg: Algorithm, inst: &Instance) -> Result<f64> {
    need_linear(alg, inst)?;
    need_euclidean(alg, inst)?;
    inst.cost_model
        .tour_weight
        .ok_or_else(|| usage(alg, "the instance has no tour_weight"))
}

fn on_axis(cover: &Cover, alpha: f64, metric: Metric) -> Solution {
    Solution {
        line: Some(Line::horizontal(0.0)),
        ..Solution::from_cover(cover, alpha, metric)
    }
}

/// Grid over the clients' bounding box with as many points as the exact
/// covering-tour search accepts.
pub fn auto_grid(clients: &[Point]) -> GridSpec {
    let lo = clients.iter().fold(Point::new(f64::INFINITY, f64::INFINITY), |a, p| {
        Point::new(a.x.min(p.x), a.y.min(p.y))
    });
    let hi = clients
        .iter()
        .fold(Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY), |a, p| {
            Point::new(a.x.max(p.x), a.y.max(p.y))
        });
    let (w, h) = (hi.x - lo.x, hi.y - lo.y);
    let span = w.max(h);
    if span == 0.0 {
        return GridSpec::new(1.0, lo).expect("positive spacing");
    }
    let count = |s: f64| ((w / s - 1e-9).ceil().max(0.0) + 1.0) * ((h / s - 1e-9).ceil().max(0.0) + 1.0);
    let mut steps = MAX_GRID_CANDIDATES;
    while steps > 1 && count(span / steps as f64) > MAX_GRID_CANDIDATES as f64 {
        steps -= 1;
    }
    GridSpec::new(span / steps as f64, lo).expect("positive spacing")
}

fn solve(alg: Algorithm, inst: &Instance, opts: &RunOptions) -> Result<Solution> {
    let clients = &inst.clients;
    let model = &inst.cost_model;
    let alpha = model.alpha;
    let metric = inst.metric;
    let eps = |default: f64| opts.epsilon.unwrap_or(default);
    Ok(match alg {
        Algorithm::Cc | Algorithm::Ccg | Algorithm::Gg | Algorithm::Exact1d => {
            let li = line_instance(alg, inst)?;
            let cover = match alg {
                Algorithm::Cc => cc_cover(&li),
                Algorithm::Ccg => ccg_cover(&li),
                Algorithm::Gg => gg_cover(&li),
                _ => exact_1d(&li),
            };
            Solution::from_cover(&cover, alpha, metric)
        }
        Algorithm::DpLinear => {
            need_linear(alg, inst)?;
            on_axis(&dp_linear(clients, metric), alpha, metric)
        }
        Algorithm::DpSuper => on_axis(&dp_superlinear(clients, metric, model), alpha, metric),
        Algorithm::DpSquares => on_axis(&dp_squares(clients, model), alpha, Metric::Inf),
        Algorithm::Sg => on_axis(&sg_cover(clients, model), alpha, Metric::Inf),
        Algorithm::Sgg => {
            need_linear(alg, inst)?;
            on_axis(&sgg_cover(clients), alpha, Metric::Inf)
        }
        Algorithm::OracleLine => on_axis(&oracle_line_exact(clients, metric, model)?, alpha, metric),
        Algorithm::FptasH => {
            Solution::from_line_search(&fptas_horizontal(clients, metric, model, eps(0.1))?, alpha, metric)
        }
        Algorithm::LineConst => {
            Solution::from_line_search(&any_line_constant(clients, metric, model, false), alpha, metric)
        }
        Algorithm::LinePtas => {
            need_euclidean(alg, inst)?;
            Solution::from_line_search(&any_line_ptas(clients, model, eps(0.25))?, alpha, metric)
        }
        Algorithm::SweepOracle => {
            Solution::from_line_search(&sweep_oracle(clients, metric, model, eps(1e-3))?, alpha, metric)
        }
        Algorithm::McctCircum => Solution::from_tour(&circumcenter_solution(clients, tour_weight(alg, inst)?)?),
        Algorithm::McctHeur => Solution::from_tour(&cluster_and_tour(clients, tour_weight(alg, inst)?, eps(0.1))?),
        Algorithm::McctExact => {
            let c = tour_weight(alg, inst)?;
            let k = inst.max_disks.unwrap_or(clients.len().min(MAX_TOUR_DISKS));
            Solution::from_tour(&exact_small_mcct(clients, c, auto_grid(clients), k)?)
        }
    })
}

/// Runs `alg` and checks the result before handing it back.
pub fn run(alg: Algorithm, inst: &Instance, opts: &RunOptions) -> Result<Outcome> {
    let start = Instant::now();
    let solution = solve(alg, inst, opts)?;
    let runtime_ms = start.elapsed().as_secs_f64() * 1e3;
    solution.validate(&inst.clients)?;
    Ok(Outcome { solution, runtime_ms })
}

/// Cost the reference solver gives for `alg`'s problem on `inst`, when one
/// applies and fits its size limit.
pub fn oracle_cost(alg: Algorithm, inst: &Instance) -> Option<f64> {
    let clients = &inst.clients;
    let model = &inst.cost_model;
    let line = |metric: Metric| {
        (clients.len() <= ORACLE_MAX_CLIENTS)
            .then(|| oracle_line_exact(clients, metric, model).ok().map(|c| c.cost))
            .flatten()
    };
    match alg {
        Algorithm::Cc | Algorithm::Ccg | Algorithm::Gg => line_instance(alg, inst).ok().map(|li| exact_1d(&li).cost),
        Algorithm::DpLinear | Algorithm::DpSuper => line(inst.metric),
        Algorithm::DpSquares | Algorithm::Sg | Algorithm::Sgg => line(Metric::Inf),
        Algorithm::LineConst | Algorithm::LinePtas => sweep_oracle(clients, inst.metric, model, 1e-3)
            .ok()
            .map(|r| r.cover.cost),
        Algorithm::McctCircum | Algorithm::McctHeur => {
            let c = model.tour_weight?;
            let k = inst.max_disks.unwrap_or(clients.len().min(MAX_TOUR_DISKS));
            exact_small_mcct(clients, c, auto_grid(clients), k)
                .ok()
                .map(|t| t.total_cost)
        }
        Algorithm::Exact1d
        | Algorithm::FptasH
        | Algorithm::McctExact
        | Algorithm::OracleLine
        | Algorithm::SweepOracle => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, GenParams};

    #[test]
    fn ids_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.id().parse::<Algorithm>().unwrap(), a);
        }
        assert_eq!("nope".parse::<Algorithm>().unwrap_err().exit_code(), 2);
    }

    #[test]
    fn gg_on_tight_instance() {
        let inst = generate(
            "gg-tight",
            &GenParams {
                epsilon: 0.01,
                ..GenParams::default()
            },
            0,
        )
        .unwrap();
        let out = run(Algorithm::Gg, &inst, &RunOptions::default()).unwrap();
        assert!((out.solution.cost - 1.98).abs() < 1e-9);
        assert!((oracle_cost(Algorithm::Gg, &inst).unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn single_client_on_axis_is_free() {
        let inst = Instance::with_clients(vec![Point::new(3.0, 0.0)]).unwrap();
        assert_eq!(
            run(Algorithm::DpLinear, &inst, &RunOptions::default())
                .unwrap()
                .solution
                .cost,
            0.0
        );
    }

    #[test]
    fn mismatches_are_usage_errors() {
        let plain = Instance::with_clients(vec![Point::new(0.0, 1.0), Point::new(2.0, 1.0)]).unwrap();
        for a in [Algorithm::Gg, Algorithm::McctHeur] {
            assert_eq!(run(a, &plain, &RunOptions::default()).unwrap_err().exit_code(), 2);
        }
        let mut sq = plain.clone();
        sq.cost_model = diskcover::CostModel::new(2.0).unwrap();
        assert_eq!(
            run(Algorithm::Sgg, &sq, &RunOptions::default())
                .unwrap_err()
                .exit_code(),
            2
        );
    }

    #[test]
    fn oracle_size_limit_exit_code() {
        let inst = generate(
            "uniform-square",
            &GenParams {
                n: 13,
                ..GenParams::default()
            },
            1,
        )
        .unwrap();
        assert_eq!(
            run(Algorithm::OracleLine, &inst, &RunOptions::default())
                .unwrap_err()
                .exit_code(),
            4
        );
        assert_eq!(oracle_cost(Algorithm::DpLinear, &inst), None);
    }

    #[test]
    fn auto_grid_respects_candidate_limit() {
        let inst = generate(
            "uniform-square",
            &GenParams {
                n: 6,
                ..GenParams::default()
            },
            2,
        )
        .unwrap();
        let g = auto_grid(&inst.clients);
        let mut t = inst.clone();
        t.cost_model = t.cost_model.with_tour_weight(8.0).unwrap();
        assert!(g.spacing > 0.0);
        let out = run(Algorithm::McctExact, &t, &RunOptions::default()).unwrap();
        let heur = run(Algorithm::McctHeur, &t, &RunOptions::default()).unwrap();
        assert!(out.solution.cost > 0.0 && heur.solution.cost > 0.0);
    }

    #[test]
    fn every_algorithm_runs_somewhere() {
        let params = GenParams {
            n: 6,
            tour_weight: Some(6.0),
            ..GenParams::default()
        };
        let plane = generate("uniform-square", &params, 4).unwrap();
        let axis = generate("collinear", &params, 4).unwrap();
        for a in Algorithm::ALL {
            let inst = if matches!(a, Algorithm::Cc | Algorithm::Ccg | Algorithm::Gg | Algorithm::Exact1d) {
                &axis
            } else {
                &plane
            };
            let out = run(a, inst, &RunOptions { epsilon: Some(0.5) }).unwrap_or_else(|e| panic!("{a}: {e}"));
            if let Some(o) = oracle_cost(a, inst) {
                assert!(
                    out.solution.cost >= o * (1.0 - 1e-6) - 1e-9
                        || matches!(
                            a,
                            // upper-bound references: the sweep and the gridded tour search
                            Algorithm::LineConst | Algorithm::LinePtas | Algorithm::McctCircum | Algorithm::McctHeur
                        ),
                    "{a}"
                );
            }
        }
    }
}
