//! Experiment rows and their CSV form.

use std::fs::OpenOptions;
use std::path::Path;

use diskcover::Instance;
use serde::Serialize;

use crate::error::{HarnessError, Result};
use crate::run::{oracle_cost, run, Algorithm, Outcome, RunOptions};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRow {
    pub instance: String,
    pub algorithm: String,
    pub cost: f64,
    pub oracle: Option<f64>,
    pub ratio: Option<f64>,
    pub runtime_ms: f64,
    pub seed: u64,
}

impl ReportRow {
    pub fn new(instance: &str, alg: Algorithm, outcome: &Outcome, oracle: Option<f64>, seed: u64) -> Self {
        let cost = outcome.solution.cost;
        Self {
            instance: instance.to_string(),
            algorithm: alg.id().to_string(),
            cost,
            oracle,
            ratio: oracle.filter(|&o| o > 0.0).map(|o| cost / o),
            runtime_ms: outcome.runtime_ms,
            seed,
        }
    }
}

/// Appends rows, writing the header first when the file is new or empty.
pub fn append_rows(path: impl AsRef<Path>, rows: &[ReportRow]) -> Result<()> {
    let path = path.as_ref();
    let fresh = std::fs::metadata(path).map(|m| m.len() == 0).unwrap_or(true);
    let file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(|e| HarnessError::io(path, e))?;
    let mut w = csv::WriterBuilder::new().has_headers(fresh).from_writer(file);
    for r in rows {
        w.serialize(r).map_err(|e| HarnessError::io(path, e.into()))?;
    }
    w.flush().map_err(|e| HarnessError::io(path, e))
}

/// A cell skipped because the algorithm does not apply to the instance.
#[derive(Debug)]
pub struct Skipped {
    pub instance: String,
    pub algorithm: Algorithm,
    pub reason: HarnessError,
}

/// Every algorithm on every instance, rows sorted by instance then
/// algorithm. Mismatched or oversized cells are skipped, other errors abort.
pub fn bench(
    instances: &[(String, Instance)],
    algorithms: &[Algorithm],
    opts: &RunOptions,
    seed: u64,
) -> Result<(Vec<ReportRow>, Vec<Skipped>)> {
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for (name, inst) in instances {
        for &alg in algorithms {
            match run(alg, inst, opts) {
                Ok(out) => rows.push(ReportRow::new(name, alg, &out, oracle_cost(alg, inst), seed)),
                Err(e @ (HarnessError::Usage(_) | HarnessError::SizeLimit(_))) => skipped.push(Skipped {
                    instance: name.clone(),
                    algorithm: alg,
                    reason: e,
                }),
                Err(e) => return Err(e),
            }
        }
    }
    rows.sort_by(|a, b| a.instance.cmp(&b.instance).then_with(|| a.algorithm.cmp(&b.algorithm)));
    Ok((rows, skipped))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, GenParams};

    #[test]
    fn ratio_is_cost_over_oracle() {
        let inst = generate(
            "gg-tight",
            &GenParams {
                epsilon: 0.01,
                ..GenParams::default()
            },
            0,
        )
        .unwrap();
        let (rows, skipped) = bench(
            &[("tight".into(), inst)],
            &[Algorithm::Gg, Algorithm::Cc, Algorithm::Sgg],
            &RunOptions::default(),
            9,
        )
        .unwrap();
        assert_eq!(
            rows.iter().map(|r| r.algorithm.as_str()).collect::<Vec<_>>(),
            vec!["cc", "gg", "sgg"]
        );
        let gg = &rows[1];
        assert!((gg.ratio.unwrap() - gg.cost / gg.oracle.unwrap()).abs() < 1e-12);
        assert!((gg.ratio.unwrap() - 1.98).abs() < 1e-9);
        assert!(skipped.is_empty());
    }

    #[test]
    fn csv_has_exact_header_once() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("r.csv");
        let row = ReportRow {
            instance: "a".into(),
            algorithm: "gg".into(),
            cost: 1.5,
            oracle: None,
            ratio: None,
            runtime_ms: 0.25,
            seed: 3,
        };
        append_rows(&path, std::slice::from_ref(&row)).unwrap();
        append_rows(&path, &[row]).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "instance,algorithm,cost,oracle,ratio,runtime_ms,seed");
        assert_eq!(lines[1], "a,gg,1.5,,,0.25,3");
        assert_eq!(lines.len(), 3);
    }
}
