//! The `diskcover` command line.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use diskcover::{CostModel, Instance, Metric};

use crate::error::{HarnessError, Result};
use crate::generate::{generate, GenParams};
use crate::io::{instance_to_string, load_instance, load_solution, save_solution};
use crate::render::render_svg;
use crate::report::{append_rows, bench, ReportRow};
use crate::run::{oracle_cost, run, Algorithm, RunOptions};

#[derive(Debug, Parser)]
#[command(name = "diskcover", version, about = "Disk cover and covering tour solvers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a generated instance.
    Gen(GenArgs),
    /// Solve one instance with one algorithm.
    Run(RunArgs),
    /// Run several algorithms over several instances into a CSV report.
    Bench(BenchArgs),
    /// Draw an instance and optionally a solution as SVG.
    Render(RenderArgs),
}

#[derive(Debug, Args)]
struct Overrides {
    /// Metric exponent p, or `inf`.
    #[arg(long)]
    metric: Option<String>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long = "tour-weight")]
    tour_weight: Option<f64>,
}

#[derive(Debug, Args)]
struct GenShape {
    /// Client count.
    #[arg(long, default_value_t = 8)]
    n: usize,
    /// Server count (collinear).
    #[arg(long, default_value_t = 4)]
    m: usize,
    /// Circle radius, or a tenth of the square side.
    #[arg(long, default_value_t = 1.0)]
    radius: f64,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long)]
    kind: String,
    #[command(flatten)]
    shape: GenShape,
    /// Family parameter for gg-tight and sgg-area.
    #[arg(long, default_value_t = 0.1)]
    epsilon: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    overrides: Overrides,
    /// Destination; standard output when absent.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct RunArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    alg: String,
    #[arg(long)]
    epsilon: Option<f64>,
    /// Recorded in the report row.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    overrides: Overrides,
    /// Solution file.
    #[arg(long)]
    output: Option<PathBuf>,
    /// CSV file to append a row to, with the oracle cost when one applies.
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BenchArgs {
    /// Comma-separated algorithm ids.
    #[arg(long, value_delimiter = ',', required = true)]
    alg: Vec<String>,
    /// Instance files; may repeat.
    #[arg(long)]
    input: Vec<PathBuf>,
    /// Generator kind for extra instances, seeded `seed .. seed + count`.
    #[arg(long)]
    gen: Option<String>,
    #[arg(long, default_value_t = 10)]
    count: u64,
    #[command(flatten)]
    shape: GenShape,
    /// Family parameter for generated gg-tight and sgg-area instances.
    #[arg(long = "gen-epsilon", default_value_t = 0.1)]
    gen_epsilon: f64,
    #[arg(long)]
    epsilon: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    overrides: Overrides,
    #[arg(long)]
    report: PathBuf,
}

#[derive(Debug, Args)]
struct RenderArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    solution: Option<PathBuf>,
    #[arg(long)]
    svg: PathBuf,
}

fn parse_metric(s: &str) -> Result<Metric> {
    if s.eq_ignore_ascii_case("inf") {
        return Ok(Metric::Inf);
    }
    let p: f64 = s
        .parse()
        .map_err(|_| HarnessError::Usage(format!("--metric: `{s}` is not a number or `inf`")))?;
    Metric::lp(p).map_err(|e| HarnessError::Usage(format!("--metric: {e}")))
}

impl Overrides {
    fn apply(&self, inst: Instance) -> Result<Instance> {
        let metric = match &self.metric {
            Some(m) => parse_metric(m)?,
            None => inst.metric,
        };
        let alpha = self.alpha.unwrap_or(inst.cost_model.alpha);
        let mut model = CostModel::new(alpha).map_err(|e| HarnessError::Usage(format!("--alpha: {e}")))?;
        if let Some(c) = self.tour_weight.or(inst.cost_model.tour_weight) {
            model = model
                .with_tour_weight(c)
                .map_err(|e| HarnessError::Usage(format!("--tour-weight: {e}")))?;
        }
        Ok(Instance::new(
            inst.clients,
            inst.servers,
            metric,
            model,
            inst.max_disks,
        )?)
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| HarnessError::io(path, e))
}

fn instance_name(path: &Path) -> String {
    path.file_stem()
        .map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned())
}

fn params(shape: &GenShape, epsilon: f64) -> GenParams {
    GenParams {
        n: shape.n,
        m: shape.m,
        epsilon,
        radius: shape.radius,
        ..GenParams::default()
    }
}

fn cmd_gen(a: GenArgs) -> Result<()> {
    let inst = generate(&a.kind, &params(&a.shape, a.epsilon), a.seed)?;
    let inst = a.overrides.apply(inst)?;
    let text = instance_to_string(&inst);
    match a.output {
        Some(p) => write_file(&p, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_run(a: RunArgs) -> Result<()> {
    let alg: Algorithm = a.alg.parse()?;
    let inst = a.overrides.apply(load_instance(&a.input)?)?;
    let out = run(alg, &inst, &RunOptions { epsilon: a.epsilon })?;
    println!(
        "{alg}: cost {} ({} disks, {:.3} ms)",
        out.solution.cost,
        out.solution.disks.len(),
        out.runtime_ms
    );
    if let Some(p) = &a.output {
        save_solution(p, &out.solution)?;
        // what was written must load back clean
        load_solution(p, &inst)?;
    }
    if let Some(p) = &a.report {
        let row = ReportRow::new(&instance_name(&a.input), alg, &out, oracle_cost(alg, &inst), a.seed);
        append_rows(p, &[row])?;
    }
    if let Some(p) = &a.svg {
        write_file(p, &render_svg(&inst, Some(&out.solution)))?;
    }
    Ok(())
}

fn cmd_bench(a: BenchArgs) -> Result<()> {
    let algs = a.alg.iter().map(|s| s.parse()).collect::<Result<Vec<Algorithm>>>()?;
    let mut instances = Vec::new();
    for p in &a.input {
        instances.push((instance_name(p), a.overrides.apply(load_instance(p)?)?));
    }
    if let Some(kind) = &a.gen {
        let p = params(&a.shape, a.gen_epsilon);
        for s in a.seed..a.seed + a.count {
            let inst = a.overrides.apply(generate(kind, &p, s)?)?;
            instances.push((format!("{kind}-{s:04}"), inst));
        }
    }
    if instances.is_empty() {
        return Err(HarnessError::Usage("bench needs --input or --gen".into()));
    }
    let (rows, skipped) = bench(&instances, &algs, &RunOptions { epsilon: a.epsilon }, a.seed)?;
    for s in &skipped {
        eprintln!("skipped {} on {}: {}", s.algorithm, s.instance, s.reason);
    }
    append_rows(&a.report, &rows)?;
    println!("{} rows written to {}", rows.len(), a.report.display());
    Ok(())
}

fn cmd_render(a: RenderArgs) -> Result<()> {
    let inst = load_instance(&a.input)?;
    let sol = a.solution.as_ref().map(|p| load_solution(p, &inst)).transpose()?;
    write_file(&a.svg, &render_svg(&inst, sol.as_ref()))
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code: 0 ok, 2 usage, 3 schema or value, 4 size limit.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Run(a) => cmd_run(a),
        Command::Bench(a) => cmd_bench(a),
        Command::Render(a) => cmd_render(a),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
