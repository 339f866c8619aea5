//! JSON instance and solution files.
//!
//! Instances:
//! `{"metric": {"p": 2 | "inf"}, "alpha": 1, "tour_weight": 5, "max_disks": 3,
//!   "clients": [[x, y], ...], "servers": [[x], [x, y], ...]}`; only `clients`
//! is required. A one-element point `[x]` means `(x, 0)`.
//!
//! Solutions: `{"cost", "alpha", "metric", "tour_weight"?, "disks":
//! [{"center": [x, y], "radius"}], "tour"?: [[x, y]], "line"?: {"anchor",
//! "direction"}}`. Loading a solution re-checks coverage and cost.

use std::path::Path;

use diskcover::{CostModel, Cover, CoveringTour, Disk, Instance, Line, LineSearchResult, Metric, Point};
use serde_json::{json, Map, Value};

use crate::error::{HarnessError, Result};

const INSTANCE_FIELDS: &[&str] = &["metric", "alpha", "tour_weight", "max_disks", "clients", "servers"];
const SOLUTION_FIELDS: &[&str] = &["cost", "alpha", "metric", "tour_weight", "disks", "tour", "line"];

/// Relative slack for re-validating stored numbers.
const CHECK_TOL: f64 = 1e-9;

fn object<'a>(v: &'a Value, field: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| HarnessError::schema(field, "expected an object"))
}

fn reject_unknown(obj: &Map<String, Value>, allowed: &[&str]) -> Result<()> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(HarnessError::schema(k.as_str(), "unknown field")),
        None => Ok(()),
    }
}

fn number(v: &Value, field: &str) -> Result<f64> {
    let x = v
        .as_f64()
        .ok_or_else(|| HarnessError::schema(field, "expected a number"))?;
    if !x.is_finite() {
        return Err(HarnessError::value(field, "not finite"));
    }
    Ok(x)
}

fn point(v: &Value, field: &str) -> Result<Point> {
    let arr = v
        .as_array()
        .ok_or_else(|| HarnessError::schema(field, "expected [x] or [x, y]"))?;
    match arr.len() {
        1 => Ok(Point::new(number(&arr[0], &format!("{field}[0]"))?, 0.0)),
        2 => Ok(Point::new(
            number(&arr[0], &format!("{field}[0]"))?,
            number(&arr[1], &format!("{field}[1]"))?,
        )),
        n => Err(HarnessError::schema(
            field,
            format!("expected 1 or 2 coordinates, got {n}"),
        )),
    }
}

fn points(v: &Value, field: &str) -> Result<Vec<Point>> {
    let arr = v
        .as_array()
        .ok_or_else(|| HarnessError::schema(field, "expected a list of points"))?;
    arr.iter()
        .enumerate()
        .map(|(i, p)| point(p, &format!("{field}[{i}]")))
        .collect()
}

fn metric(v: &Value, field: &str) -> Result<Metric> {
    let obj = object(v, field)?;
    reject_unknown(obj, &["p"]).map_err(|e| match e {
        HarnessError::Schema { field: f, reason } => HarnessError::schema(format!("{field}.{f}"), reason),
        other => other,
    })?;
    let pf = format!("{field}.p");
    match obj.get("p") {
        None => Ok(Metric::euclidean()),
        Some(Value::String(s)) if s.eq_ignore_ascii_case("inf") => Ok(Metric::Inf),
        Some(Value::String(_)) => Err(HarnessError::schema(pf, "expected a number or \"inf\"")),
        Some(p) => {
            let p = number(p, &pf)?;
            Metric::lp(p).map_err(|e| HarnessError::value(pf, e.to_string()))
        }
    }
}

pub fn metric_json(m: &Metric) -> Value {
    match m {
        Metric::Inf => json!({ "p": "inf" }),
        Metric::Lp(p) => json!({ "p": p }),
    }
}

fn point_json(p: &Point) -> Value {
    json!([p.x, p.y])
}

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| {
        let reason = e.to_string();
        if reason.contains("out of range") {
            HarnessError::value("document", reason)
        } else {
            HarnessError::schema("document", reason)
        }
    })
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| HarnessError::io(path, e))
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| HarnessError::io(path, e))
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let doc = parse_json(text)?;
    let obj = object(&doc, "document")?;
    reject_unknown(obj, INSTANCE_FIELDS)?;
    let metric = match obj.get("metric") {
        Some(m) => metric(m, "metric")?,
        None => Metric::euclidean(),
    };
    let alpha = match obj.get("alpha") {
        Some(a) => number(a, "alpha")?,
        None => 1.0,
    };
    let mut cost_model = CostModel::new(alpha).map_err(|e| HarnessError::value("alpha", e.to_string()))?;
    if let Some(c) = obj.get("tour_weight") {
        let c = number(c, "tour_weight")?;
        cost_model = cost_model
            .with_tour_weight(c)
            .map_err(|e| HarnessError::value("tour_weight", e.to_string()))?;
    }
    let max_disks = match obj.get("max_disks") {
        Some(v) => {
            let k = v
                .as_u64()
                .ok_or_else(|| HarnessError::schema("max_disks", "expected a positive integer"))?;
            if k == 0 {
                return Err(HarnessError::value("max_disks", "must be at least 1"));
            }
            Some(k as usize)
        }
        None => None,
    };
    let clients = points(
        obj.get("clients")
            .ok_or_else(|| HarnessError::schema("clients", "missing"))?,
        "clients",
    )?;
    if clients.is_empty() {
        return Err(HarnessError::value("clients", "at least one client is required"));
    }
    let servers = match obj.get("servers") {
        Some(s) => {
            let s = points(s, "servers")?;
            if s.is_empty() {
                return Err(HarnessError::value("servers", "empty list"));
            }
            Some(s)
        }
        None => None,
    };
    Instance::new(clients, servers, metric, cost_model, max_disks)
        .map_err(|e| HarnessError::value("document", e.to_string()))
}

pub fn load_instance(path: impl AsRef<Path>) -> Result<Instance> {
    parse_instance(&read(path.as_ref())?)
}

pub fn instance_json(inst: &Instance) -> Value {
    let mut obj = Map::new();
    obj.insert("metric".into(), metric_json(&inst.metric));
    obj.insert("alpha".into(), json!(inst.cost_model.alpha));
    if let Some(c) = inst.cost_model.tour_weight {
        obj.insert("tour_weight".into(), json!(c));
    }
    if let Some(k) = inst.max_disks {
        obj.insert("max_disks".into(), json!(k));
    }
    obj.insert(
        "clients".into(),
        Value::Array(inst.clients.iter().map(point_json).collect()),
    );
    if let Some(s) = &inst.servers {
        obj.insert("servers".into(), Value::Array(s.iter().map(point_json).collect()));
    }
    Value::Object(obj)
}

pub fn instance_to_string(inst: &Instance) -> String {
    let mut s = serde_json::to_string_pretty(&instance_json(inst)).expect("finite values serialize");
    s.push('\n');
    s
}

pub fn save_instance(path: impl AsRef<Path>, inst: &Instance) -> Result<()> {
    write(path.as_ref(), &instance_to_string(inst))
}

/// Any algorithm's output in file form.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub cost: f64,
    pub alpha: f64,
    pub metric: Metric,
    pub tour_weight: Option<f64>,
    pub disks: Vec<Disk>,
    pub tour: Option<Vec<Point>>,
    pub line: Option<Line>,
}

impl Solution {
    pub fn from_cover(cover: &Cover, alpha: f64, metric: Metric) -> Self {
        Self {
            cost: cover.cost,
            alpha,
            metric,
            tour_weight: None,
            disks: cover.disks.clone(),
            tour: None,
            line: None,
        }
    }

    pub fn from_line_search(r: &LineSearchResult, alpha: f64, metric: Metric) -> Self {
        Self {
            line: Some(r.line),
            ..Self::from_cover(&r.cover, alpha, metric)
        }
    }

    pub fn from_tour(t: &CoveringTour) -> Self {
        Self {
            cost: t.total_cost,
            alpha: 1.0,
            metric: Metric::euclidean(),
            tour_weight: Some(t.tour_weight),
            disks: t.disks.clone(),
            tour: Some(t.tour.clone()),
            line: None,
        }
    }

    fn recomputed_cost(&self) -> f64 {
        let model = CostModel {
            alpha: self.alpha,
            tour_weight: None,
        };
        let cover: f64 = self.disks.iter().map(|d| model.cost(d.radius)).sum();
        match &self.tour {
            Some(t) => {
                let mut length = 0.0;
                if t.len() > 1 {
                    for k in 0..t.len() {
                        length += t[k].euclidean(&t[(k + 1) % t.len()]);
                    }
                }
                length + self.tour_weight.unwrap_or(0.0) * cover
            }
            None => cover,
        }
    }

    /// Coverage of `clients`, cost recomputation, and tour structure.
    pub fn validate(&self, clients: &[Point]) -> Result<()> {
        if let Some((i, _)) = self
            .disks
            .iter()
            .enumerate()
            .find(|(_, d)| !(d.radius >= 0.0) || !d.center.is_finite())
        {
            return Err(HarnessError::Invalid(format!("disk {i} has a bad center or radius")));
        }
        let scale = clients
            .iter()
            .chain(self.disks.iter().map(|d| &d.center))
            .fold(1.0f64, |a, p| a.max(p.x.abs()).max(p.y.abs()));
        let slack = CHECK_TOL * scale;
        for (i, p) in clients.iter().enumerate() {
            let covered = self.disks.iter().any(|d| match &self.line {
                Some(l) => d.metric.distance(&l.to_local(&d.center), &l.to_local(p)) <= d.radius + slack,
                None => d.metric.distance(&d.center, p) <= d.radius + slack,
            });
            if !covered {
                return Err(HarnessError::Invalid(format!(
                    "client {i} ({}, {}) is not covered",
                    p.x, p.y
                )));
            }
        }
        if let Some(t) = &self.tour {
            if self.tour_weight.is_none() {
                return Err(HarnessError::Invalid("tour without tour_weight".into()));
            }
            if t.len() != self.disks.len() || t.iter().zip(&self.disks).any(|(p, d)| *p != d.center) {
                return Err(HarnessError::Invalid(
                    "disk centers do not match the tour vertices".into(),
                ));
            }
        }
        let cost = self.recomputed_cost();
        if (cost - self.cost).abs() > CHECK_TOL * cost.abs().max(1.0) {
            return Err(HarnessError::Invalid(format!(
                "stored cost {} but disks give {cost}",
                self.cost
            )));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("cost".into(), json!(self.cost));
        obj.insert("alpha".into(), json!(self.alpha));
        obj.insert("metric".into(), metric_json(&self.metric));
        if let Some(c) = self.tour_weight {
            obj.insert("tour_weight".into(), json!(c));
        }
        let disks = self
            .disks
            .iter()
            .map(|d| json!({ "center": point_json(&d.center), "radius": d.radius }))
            .collect();
        obj.insert("disks".into(), Value::Array(disks));
        if let Some(t) = &self.tour {
            obj.insert("tour".into(), Value::Array(t.iter().map(point_json).collect()));
        }
        if let Some(l) = &self.line {
            obj.insert(
                "line".into(),
                json!({ "anchor": point_json(&l.anchor), "direction": point_json(&l.direction) }),
            );
        }
        Value::Object(obj)
    }
}

pub fn solution_to_string(sol: &Solution) -> String {
    let mut s = serde_json::to_string_pretty(&sol.to_json()).expect("finite values serialize");
    s.push('\n');
    s
}

/// Parses without checking it against any instance.
pub fn parse_solution_unchecked(text: &str) -> Result<Solution> {
    let doc = parse_json(text)?;
    let obj = object(&doc, "document")?;
    reject_unknown(obj, SOLUTION_FIELDS)?;
    let cost = number(
        obj.get("cost").ok_or_else(|| HarnessError::schema("cost", "missing"))?,
        "cost",
    )?;
    let alpha = match obj.get("alpha") {
        Some(a) => number(a, "alpha")?,
        None => 1.0,
    };
    if alpha < 1.0 {
        return Err(HarnessError::value("alpha", format!("{alpha} is below 1")));
    }
    let metric = match obj.get("metric") {
        Some(m) => metric(m, "metric")?,
        None => Metric::euclidean(),
    };
    let tour_weight = obj.get("tour_weight").map(|c| number(c, "tour_weight")).transpose()?;
    let disk_list = obj
        .get("disks")
        .ok_or_else(|| HarnessError::schema("disks", "missing"))?
        .as_array()
        .ok_or_else(|| HarnessError::schema("disks", "expected a list"))?;
    let mut disks = Vec::with_capacity(disk_list.len());
    for (i, d) in disk_list.iter().enumerate() {
        let f = format!("disks[{i}]");
        let o = object(d, &f)?;
        let center = point(
            o.get("center")
                .ok_or_else(|| HarnessError::schema(format!("{f}.center"), "missing"))?,
            &format!("{f}.center"),
        )?;
        let radius = number(
            o.get("radius")
                .ok_or_else(|| HarnessError::schema(format!("{f}.radius"), "missing"))?,
            &format!("{f}.radius"),
        )?;
        if radius < 0.0 {
            return Err(HarnessError::value(format!("{f}.radius"), "negative"));
        }
        disks.push(Disk::new(center, radius, metric));
    }
    let tour = obj.get("tour").map(|t| points(t, "tour")).transpose()?;
    let line = match obj.get("line") {
        Some(l) => {
            let o = object(l, "line")?;
            let anchor = point(
                o.get("anchor")
                    .ok_or_else(|| HarnessError::schema("line.anchor", "missing"))?,
                "line.anchor",
            )?;
            let dir = point(
                o.get("direction")
                    .ok_or_else(|| HarnessError::schema("line.direction", "missing"))?,
                "line.direction",
            )?;
            let line = Line::new(anchor, dir).map_err(|e| HarnessError::value("line.direction", e.to_string()))?;
            // a stored unit direction is kept bit for bit
            if (dir.x.hypot(dir.y) - 1.0).abs() <= 1e-12 {
                Some(Line { anchor, direction: dir })
            } else {
                Some(line)
            }
        }
        None => None,
    };
    Ok(Solution {
        cost,
        alpha,
        metric,
        tour_weight,
        disks,
        tour,
        line,
    })
}

/// Parses and re-validates against the instance's clients.
pub fn parse_solution(text: &str, inst: &Instance) -> Result<Solution> {
    let sol = parse_solution_unchecked(text)?;
    sol.validate(&inst.clients)?;
    Ok(sol)
}

pub fn load_solution(path: impl AsRef<Path>, inst: &Instance) -> Result<Solution> {
    parse_solution(&read(path.as_ref())?, inst)
}

pub fn save_solution(path: impl AsRef<Path>, sol: &Solution) -> Result<()> {
    write(path.as_ref(), &solution_to_string(sol))
}
