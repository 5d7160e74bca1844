//! Subcommands behind the `metric-committee` binary. Each returns a
//! rendered [`Outcome`]; the binary decides where the text goes and maps
//! results to exit codes.

mod args;
mod table;

use std::fmt::Write as _;
use std::fs;
use std::io::{BufWriter, Write as _};
use std::path::{Path, PathBuf};

use metric_committee::generators::uniform_euclidean;
use metric_committee::io::{read_committee, read_instance, InstanceFile};
use metric_committee::{
    audit_all, oracle_best_committee, select_general, Algorithm, AuditOptions, AuditReport, Axiom,
    Committee, EngineOptions, Error, GeneratorSpec, MetricInstance, Norm, NorpReading, Result,
    SelectionResult,
};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

pub use args::{
    AuditArgs, BenchArgs, Cli, Command, Format, GenerateArgs, GlobalArgs, OptArgs, SelectArgs,
};

/// Exit code for a run that completed and found everything in order.
pub const EXIT_OK: u8 = 0;
/// A requested axiom or guarantee does not hold; the report is still written.
pub const EXIT_FAILED_CHECK: u8 = 1;
/// Bad input, unreadable or unwritable files.
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

/// Rendered command output.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub text: String,
    /// False when an audited axiom or a guarantee check failed.
    pub passed: bool,
}

impl Outcome {
    fn new<T: Serialize>(
        format: Format,
        value: &T,
        table: impl FnOnce() -> String,
        passed: bool,
    ) -> Result<Self> {
        let text = match format {
            Format::Json => serde_json::to_string_pretty(value)? + "\n",
            Format::Table => table(),
        };
        Ok(Outcome { text, passed })
    }

    pub fn exit_code(&self) -> u8 {
        if self.passed {
            EXIT_OK
        } else {
            EXIT_FAILED_CHECK
        }
    }
}

pub fn error_exit_code(err: &Error) -> u8 {
    if err.is_budget() {
        EXIT_BUDGET
    } else {
        EXIT_INPUT
    }
}

/// Settings shared by every subcommand.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub instance: Option<PathBuf>,
    pub format: Format,
    pub budget: u64,
    pub seed: u64,
    pub allow_indivisible: bool,
    pub engine: EngineOptions,
}

impl RunConfig {
    pub fn from_args(global: &GlobalArgs) -> Self {
        RunConfig {
            instance: global.instance.clone(),
            format: global.format,
            budget: global.budget,
            seed: global.seed,
            allow_indivisible: !global.strict_divisible,
            engine: EngineOptions {
                policy: global.policy(),
                relocate: true,
                budget: global.budget,
            },
        }
    }

    fn load_instance(&self) -> Result<MetricInstance> {
        let path = self
            .instance
            .as_ref()
            .ok_or_else(|| Error::Format("--instance is required".into()))?;
        read_instance(path).map_err(|e| with_path(e, path))
    }

    fn check_divisible(&self, inst: &MetricInstance) -> Result<()> {
        if self.allow_indivisible || inst.divides() {
            Ok(())
        } else {
            Err(Error::Indivisible {
                n: inst.n(),
                k: inst.k(),
            })
        }
    }

    fn audit_options(&self) -> AuditOptions {
        AuditOptions {
            budget: self.budget,
            seed: self.seed,
            ..AuditOptions::default()
        }
    }
}

/// Names the file in I/O errors, which otherwise only carry the OS message.
fn with_path(err: Error, path: &Path) -> Error {
    match err {
        Error::Io(e) => Error::Format(format!("{}: {e}", path.display())),
        other => other,
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let config = RunConfig::from_args(&cli.global);
    match &cli.command {
        Command::Select(a) => cmd_select(&config, a),
        Command::Audit(a) => cmd_audit(&config, a),
        Command::Opt(a) => cmd_opt(&config, a),
        Command::Generate(a) => cmd_generate(&config, a),
        Command::Bench(a) => cmd_bench(&config, a),
    }
}

#[derive(Serialize)]
struct SelectReport<'a> {
    #[serde(flatten)]
    result: &'a SelectionResult,
    /// Worst-case cost ratio the algorithm guarantees.
    bound: f64,
    within_bound: bool,
}

pub fn cmd_select(config: &RunConfig, args: &SelectArgs) -> Result<Outcome> {
    let inst = config.load_instance()?;
    config.check_divisible(&inst)?;
    let algorithm = Algorithm::parse(&args.algorithm, args.alpha)?;
    let options = EngineOptions {
        relocate: !args.no_relocate,
        ..config.engine
    };
    let result = select_general(&inst, algorithm, &options)?;
    if let Some(path) = &args.trace {
        write_trace(path, &result)?;
    }
    let report = SelectReport {
        result: &result,
        bound: algorithm.cost_bound(),
        within_bound: result.within_cost_bound(),
    };
    Outcome::new(
        config.format,
        &report,
        || table::selection(&result, report.bound, report.within_bound),
        report.within_bound,
    )
}

fn write_trace(path: &Path, result: &SelectionResult) -> Result<()> {
    let mut out = BufWriter::new(fs::File::create(path)?);
    for event in &result.trace {
        serde_json::to_writer(&mut out, event)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

pub fn cmd_audit(config: &RunConfig, args: &AuditArgs) -> Result<Outcome> {
    let inst = config.load_instance()?;
    let committee =
        read_committee(&args.committee, &inst).map_err(|e| with_path(e, &args.committee))?;
    let axioms = Axiom::parse_list(&args.axioms)?;
    let options = AuditOptions {
        norp_reading: if args.lax_norp {
            NorpReading::Lax
        } else {
            NorpReading::Strict
        },
        prf_samples: args.sample,
        ..config.audit_options()
    };
    let report: AuditReport = audit_all(&inst, &committee, &axioms, &options)?;
    Outcome::new(
        config.format,
        &report,
        || table::audit(&committee, &report),
        report.all_hold(),
    )
}

#[derive(Serialize)]
struct OptReport<'a> {
    committee: &'a Committee,
    cost: f64,
    constraints: Vec<Axiom>,
}

pub fn cmd_opt(config: &RunConfig, args: &OptArgs) -> Result<Outcome> {
    let inst = config.load_instance()?;
    let constraints = match &args.axioms {
        Some(list) => Axiom::parse_list(list)?,
        None => Vec::new(),
    };
    let (committee, cost) = if constraints.is_empty() {
        inst.opt_committee()
    } else {
        oracle_best_committee(&inst, &constraints, config.budget)?
    };
    let report = OptReport {
        committee: &committee,
        cost,
        constraints,
    };
    Outcome::new(
        config.format,
        &report,
        || table::opt(&committee, cost),
        true,
    )
}

/// Builds the generator spec from the flags that were given; serde fills in
/// family defaults and rejects missing parameters.
fn generator_spec(config: &RunConfig, args: &GenerateArgs) -> Result<GeneratorSpec> {
    let mut spec = Map::new();
    spec.insert("family".into(), json!(args.family));
    let numbers = [
        ("n", args.n.map(|v| json!(v))),
        ("k", args.k.map(|v| json!(v))),
        ("m", args.m.map(|v| json!(v))),
        ("eps", args.eps.map(|v| json!(v))),
        ("group_size", args.group_size.map(|v| json!(v))),
        ("spacing", args.spacing.map(|v| json!(v))),
        ("dim", args.dim.map(|v| json!(v))),
        ("norm", args.norm.as_ref().map(|v| json!(v))),
    ];
    for (key, value) in numbers {
        if let Some(value) = value {
            spec.insert(key.into(), value);
        }
    }
    spec.insert("seed".into(), json!(config.seed));
    serde_json::from_value(Value::Object(spec)).map_err(|e| Error::BadParams(e.to_string()))
}

pub fn cmd_generate(config: &RunConfig, args: &GenerateArgs) -> Result<Outcome> {
    let spec = generator_spec(config, args)?;
    let inst = spec.generate()?;
    let mut file = serde_json::to_value(InstanceFile::from_instance(&inst))?;
    if let Value::Object(map) = &mut file {
        map.insert("_meta".into(), serde_json::to_value(&spec)?);
    }
    let text = match config.format {
        Format::Json => serde_json::to_string(&file)? + "\n",
        Format::Table => table::generated(&spec, &inst),
    };
    Ok(Outcome { text, passed: true })
}

/// Worst observed value per guarantee for one algorithm.
#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub algorithm: String,
    pub ratio: f64,
    pub ratio_bound: f64,
    #[serde(with = "metric_committee::float")]
    pub prf: f64,
    #[serde(with = "metric_committee::float")]
    pub prf_bound: f64,
    #[serde(with = "metric_committee::float")]
    pub mjr: f64,
    #[serde(with = "metric_committee::float")]
    pub mjr_bound: f64,
    #[serde(with = "metric_committee::float")]
    pub norp: f64,
    #[serde(with = "metric_committee::float")]
    pub norp_bound: f64,
    pub within_bounds: bool,
}

#[derive(Serialize)]
struct BenchReport {
    trials: usize,
    n: usize,
    k: usize,
    dim: usize,
    seed: u64,
    rows: Vec<BenchRow>,
}

fn bench_algorithms(args: &BenchArgs) -> Result<Vec<Algorithm>> {
    let names: Vec<&str> = if args.algorithms == "all" {
        Algorithm::NAMES.to_vec()
    } else {
        args.algorithms.split(',').map(str::trim).collect()
    };
    let mut out = Vec::new();
    for name in names {
        if name == "alpha-scaled" {
            for &alpha in &args.alphas {
                out.push(Algorithm::parse(name, alpha)?);
            }
        } else {
            out.push(name.parse()?);
        }
    }
    Ok(out)
}

const AXIOMS: [Axiom; 3] = [Axiom::Prf, Axiom::Mjr, Axiom::Norp];

/// Cost ratio and measured PRF, mJR and NORP factors of every algorithm on
/// one instance.
fn bench_trial(
    config: &RunConfig,
    algorithms: &[Algorithm],
    inst: &MetricInstance,
) -> Result<Vec<[f64; 4]>> {
    let engine = EngineOptions {
        relocate: true,
        ..config.engine
    };
    algorithms
        .iter()
        .map(|&algorithm| {
            let run = select_general(inst, algorithm, &engine)?;
            let report = audit_all(inst, &run.committee, &AXIOMS, &config.audit_options())?;
            let mut row = [run.ratio, 0.0, 0.0, 0.0];
            for (slot, v) in row[1..].iter_mut().zip(&report.verdicts) {
                *slot = v.measured_alpha;
            }
            Ok(row)
        })
        .collect()
}

/// Runs every algorithm on `trials` random instances, trial `t` drawn with
/// seed `seed + t`, and keeps the worst value of each measure. Relocation is
/// always on here.
pub fn cmd_bench(config: &RunConfig, args: &BenchArgs) -> Result<Outcome> {
    let algorithms = bench_algorithms(args)?;
    if args.trials == 0 {
        return Err(Error::Format("--trials must be positive".into()));
    }
    // Validate the shape once up front so bad parameters fail fast.
    let probe = uniform_euclidean(args.n, args.k, args.dim, Norm::L2, config.seed)?;
    config.check_divisible(&probe)?;

    let zero = vec![[0.0f64; 4]; algorithms.len()];
    let worst = (0..args.trials as u64)
        .into_par_iter()
        .map(|t| {
            let inst = uniform_euclidean(
                args.n,
                args.k,
                args.dim,
                Norm::L2,
                config.seed.wrapping_add(t),
            )?;
            bench_trial(config, &algorithms, &inst)
        })
        .try_reduce(
            || zero.clone(),
            |a, b| {
                Ok(a.iter()
                    .zip(&b)
                    .map(|(x, y)| std::array::from_fn(|i| x[i].max(y[i])))
                    .collect())
            },
        )?;

    let rows: Vec<BenchRow> = algorithms
        .iter()
        .zip(&worst)
        .map(|(alg, m)| {
            let bounds = [
                alg.cost_bound(),
                alg.prf_bound(),
                alg.mjr_bound(),
                alg.norp_bound(),
            ];
            let tol = 1.0 + 1e-9;
            BenchRow {
                algorithm: alg.to_string(),
                ratio: m[0],
                ratio_bound: bounds[0],
                prf: m[1],
                prf_bound: bounds[1],
                mjr: m[2],
                mjr_bound: bounds[2],
                norp: m[3],
                norp_bound: bounds[3],
                within_bounds: m
                    .iter()
                    .zip(&bounds)
                    .all(|(v, b)| !b.is_finite() || *v <= b * tol),
            }
        })
        .collect();
    let passed = rows.iter().all(|r| r.within_bounds);
    let report = BenchReport {
        trials: args.trials,
        n: args.n,
        k: args.k,
        dim: args.dim,
        seed: config.seed,
        rows,
    };
    Outcome::new(
        config.format,
        &report,
        || table::bench(&report.rows),
        passed,
    )
}

/// Shortest round-trip form, with `inf` for unbounded values.
fn num(x: f64) -> String {
    let mut s = String::new();
    if x.is_infinite() {
        s.push_str(if x > 0.0 { "inf" } else { "-inf" });
    } else {
        let _ = write!(s, "{x}");
    }
    s
}
