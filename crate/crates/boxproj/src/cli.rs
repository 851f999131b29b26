//! Command-line front end.

use std::io::Write;
use std::path::{Path, PathBuf};

use boxproj_core::cluster::{
    analytic_min_error, empirical_min_error, empirical_scatter, BinaryPartition, ScatterReport, ThresholdReport,
};
use boxproj_core::models::{
    enumerate_box_vertices, sample_box, sample_gaussian_mixture, BoxSpec, ModelSpec, PointSet, RatioRange,
};
use boxproj_core::montecarlo::{
    brute_force_cluster_search, default_d_grid, default_r_grid, error_distribution_diagnostic, ks_critical_value,
    lemma1_diagnostic, SweepPlan, DEFAULT_MASTER_SEED, DEFAULT_TRIALS,
};
use boxproj_core::projection::{project, random_unit_vector, ProjectionVector};
use boxproj_core::rng::SeedSpec;
use boxproj_core::special::normal_cdf;
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::formats::{self, ModelKind, ModelSpecJson};
use crate::manifest::RunManifest;
use crate::{par, svg};

/// Environment variable capping the worker count.
pub const THREADS_ENV: &str = "BOXPROJ_THREADS";

const HALF_NORMAL_MEDIAN: f64 = 0.674_489_750_196_081_7;

#[derive(Debug, Parser)]
#[command(
    name = "boxproj",
    version,
    about = "Random projections of the Gaussian mixture, hypercube and geometric box models"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample or enumerate a point set.
    Generate(GenerateArgs),
    /// Project a point set and report scatter and thresholding error per latent label.
    Analyze(AnalyzeArgs),
    /// Estimate separation probability over a grid of ratios and dimensions.
    Sweep(SweepArgs),
    /// Distributional diagnostics.
    Diagnose {
        #[command(subcommand)]
        which: Diagnose,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Box,
    Mixture,
}

#[derive(Debug, Args)]
pub struct ModelFlags {
    /// Model family.
    #[arg(long, value_enum)]
    pub model: Option<ModelArg>,
    /// Model spec JSON file (alternative to the flags below).
    #[arg(long, conflicts_with_all = ["model", "ratio", "a", "e"])]
    pub spec: Option<PathBuf>,
    #[arg(long)]
    pub dim: Option<usize>,
    /// Box ratio r; squared edges are r^(k-2).
    #[arg(long)]
    pub ratio: Option<f64>,
    /// Accept box ratios outside [1, 2].
    #[arg(long)]
    pub allow_any_ratio: bool,
    /// Mixture separation a.
    #[arg(long)]
    pub a: Option<f64>,
    /// Mixture direction, comma separated (rescaled to unit length).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub e: Option<Vec<f64>>,
}

impl ModelFlags {
    fn range(&self) -> RatioRange {
        if self.allow_any_ratio {
            RatioRange::Unrestricted
        } else {
            RatioRange::Restricted
        }
    }

    fn to_json(&self) -> Result<ModelSpecJson> {
        if let Some(path) = &self.spec {
            let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
            return formats::parse_model_spec(&text, &path.display().to_string());
        }
        let model = match self.model {
            Some(ModelArg::Box) => ModelKind::Box,
            Some(ModelArg::Mixture) => ModelKind::Mixture,
            None => return Err(Error::usage("either --model or --spec is required")),
        };
        let dim = self.dim.ok_or_else(|| Error::usage("--dim is required"))?;
        Ok(ModelSpecJson {
            model,
            dim,
            a: self.a,
            r: self.ratio,
            e: self.e.clone(),
        })
    }

    fn to_model(&self) -> Result<(ModelSpecJson, ModelSpec)> {
        let json = self.to_json()?;
        let model = json.to_model(self.range())?;
        Ok((json, model))
    }
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("size").required(true).args(["n", "enumerate"])))]
pub struct GenerateArgs {
    #[command(flatten)]
    pub model: ModelFlags,
    /// Number of sampled points.
    #[arg(long)]
    pub n: Option<usize>,
    /// Emit every box vertex instead of sampling.
    #[arg(long)]
    pub enumerate: bool,
    #[arg(long, default_value_t = DEFAULT_MASTER_SEED)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("direction_source").required(true).args(["axis", "direction", "random"])))]
pub struct AnalyzeArgs {
    /// Point-set CSV with latent label columns.
    #[arg(long)]
    pub input: PathBuf,
    /// Project onto this coordinate axis (1-based).
    #[arg(long)]
    pub axis: Option<usize>,
    /// Explicit projection direction, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub direction: Option<Vec<f64>>,
    /// Project onto a uniformly random direction drawn from --seed.
    #[arg(long)]
    pub random: bool,
    #[arg(long, default_value_t = DEFAULT_MASTER_SEED)]
    pub seed: u64,
    /// Model spec JSON; a mixture spec adds the analytic error.
    #[arg(long)]
    pub model_spec: Option<PathBuf>,
    /// Also write the projected values (column `t`) here.
    #[arg(long)]
    pub projected_out: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Ratios: comma list or start:stop:step [default: 1.00:2.00:0.05].
    #[arg(long)]
    pub grid_r: Option<String>,
    /// Dimensions: comma list [default: 3,10,30,100,300].
    #[arg(long, value_delimiter = ',')]
    pub grid_d: Option<Vec<usize>>,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    pub trials: u64,
    #[arg(long, default_value_t = DEFAULT_MASTER_SEED)]
    pub seed: u64,
    /// Accept ratios outside [1, 2].
    #[arg(long)]
    pub allow_any_ratio: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Also write an SVG line chart here.
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Diagnose {
    /// KS distance of sqrt(D) (v . e) to the standard normal.
    Lemma1 {
        #[arg(long, default_value_t = 1000)]
        dim: usize,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_MASTER_SEED)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Distribution of the mixture's minimum thresholding error over random directions.
    Errdist {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        a: f64,
        #[arg(long, default_value_t = 50_000)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_MASTER_SEED)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Separation probability of a box and of its whitened version.
    Whiten {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        ratio: f64,
        #[arg(long)]
        allow_any_ratio: bool,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: u64,
        #[arg(long, default_value_t = DEFAULT_MASTER_SEED)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive search for a clustering bipartition (at most 16 points).
    Brute {
        #[command(flatten)]
        model: ModelFlags,
        /// Point-set CSV to search instead of a box model.
        #[arg(long, conflicts_with_all = ["model", "spec"])]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Reads the worker cap from [`THREADS_ENV`].
pub fn threads_from_env() -> Result<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .map(Some)
            .ok_or_else(|| Error::usage(format!("{THREADS_ENV} must be a positive integer, got `{v}`"))),
    }
}

/// Parses and runs `args` (including the program name).
pub fn run(cli: Cli, args: &[String]) -> Result<()> {
    let pool = par::thread_pool(threads_from_env()?);
    let args = args.iter().skip(1).cloned().collect();
    pool.install(|| match cli.command {
        Command::Generate(a) => generate(a, args),
        Command::Analyze(a) => analyze(a, args),
        Command::Sweep(a) => sweep(a, args),
        Command::Diagnose { which } => diagnose(which, args),
    })
}

struct Emit<'a> {
    path: Option<&'a Path>,
    format: &'a str,
    bytes: Vec<u8>,
}

fn write_bytes(path: &Path, bytes: &[u8]) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    std::fs::write(path, bytes).map_err(|e| Error::io(path, e))
}

/// Writes each output to its file (or stdout) and, when the first one goes
/// to a file, a manifest next to it.
fn finish(mut manifest: RunManifest, outputs: Vec<Emit<'_>>) -> Result<()> {
    let mut manifest_path = None;
    for out in &outputs {
        match out.path {
            Some(path) => {
                write_bytes(path, &out.bytes)?;
                manifest.record(path, out.format, &out.bytes);
                manifest_path.get_or_insert_with(|| RunManifest::path_for(path));
            }
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout
                    .write_all(&out.bytes)
                    .and_then(|_| stdout.flush())
                    .map_err(|e| Error::io("<stdout>", e))?;
            }
        }
    }
    match manifest_path {
        Some(path) => manifest.write(&path),
        None => Ok(()),
    }
}

fn json_bytes(value: &impl Serialize) -> Vec<u8> {
    let mut bytes = serde_json::to_vec_pretty(value).expect("report serializes");
    bytes.push(b'\n');
    bytes
}

#[derive(Serialize)]
struct PointsJson<'a> {
    model: Option<ModelSpecJson>,
    dim: usize,
    points: Vec<&'a [f64]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<&'a [u8]>>,
}

fn generate(a: GenerateArgs, args: Vec<String>) -> Result<()> {
    let (spec_json, model) = a.model.to_model()?;
    let seed = SeedSpec::new(a.seed, 0);
    let points = match (&model, a.enumerate, a.n) {
        (ModelSpec::Box(b), true, _) => enumerate_box_vertices(b)?,
        (ModelSpec::Mixture(_), true, _) => return Err(Error::usage("--enumerate only applies to the box model")),
        (ModelSpec::Box(b), false, Some(n)) => sample_box(b, n, seed)?,
        (ModelSpec::Mixture(m), false, Some(n)) => sample_gaussian_mixture(m, n, seed)?,
        (_, false, None) => return Err(Error::usage("--n is required unless --enumerate is given")),
    };
    let (bytes, format) = match a.format {
        Format::Csv => {
            let mut buf = Vec::new();
            formats::write_points_csv(&points, &mut buf)?;
            (buf, "csv")
        }
        Format::Json => {
            let body = PointsJson {
                model: Some(spec_json.clone()),
                dim: points.dim(),
                points: points.rows().collect(),
                labels: points
                    .has_labels()
                    .then(|| (0..points.len()).map(|j| points.label_row(j).unwrap()).collect()),
            };
            (json_bytes(&body), "json")
        }
    };
    let manifest = RunManifest::new(
        "generate",
        args,
        json!({
            "model": spec_json,
            "n": a.n,
            "enumerate": a.enumerate,
            "allow_any_ratio": a.model.allow_any_ratio,
            "seed": a.seed,
            "format": format,
        }),
        (!a.enumerate).then_some(a.seed),
    );
    finish(
        manifest,
        vec![Emit {
            path: a.out.as_deref(),
            format,
            bytes,
        }],
    )
}

#[derive(Debug, Serialize)]
pub struct AxisReport {
    /// 1-based latent label index.
    pub axis: usize,
    pub counts: (usize, usize),
    /// Split of the original points on this label.
    pub scatter: ScatterReport,
    /// Same split of the projected values.
    pub projected_scatter: ScatterReport,
    pub threshold: ThresholdReport,
}

#[derive(Debug, Serialize)]
pub struct ProjectionSummary {
    pub n: usize,
    pub mean: f64,
    pub variance: f64,
    pub min: f64,
    pub max: f64,
}

#[derive(Debug, Serialize)]
pub struct AnalyzeReport {
    pub schema: &'static str,
    pub input: String,
    pub dim: usize,
    pub n: usize,
    pub direction_source: String,
    pub direction: Vec<f64>,
    pub projection: ProjectionSummary,
    pub axes: Vec<AxisReport>,
    /// Axis with the smallest thresholding error (1-based).
    pub best_axis: usize,
}

fn read_input_points(path: &Path) -> Result<PointSet> {
    let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    formats::read_points_csv(std::io::BufReader::new(file), &path.display().to_string())
}

fn analyze(a: AnalyzeArgs, args: Vec<String>) -> Result<()> {
    let points = read_input_points(&a.input)?;
    if !points.has_labels() {
        return Err(Error::Input {
            path: a.input.clone(),
            message: "no latent label columns (y1..); per-label reports need them".into(),
        });
    }
    let dim = points.dim();
    let (v, source) = if let Some(axis) = a.axis {
        if axis == 0 || axis > dim {
            return Err(Error::usage(format!("--axis must be between 1 and {dim}")));
        }
        (ProjectionVector::basis(dim, axis - 1)?, format!("axis {axis}"))
    } else if let Some(coords) = a.direction.clone() {
        if coords.len() != dim {
            return Err(Error::usage(format!(
                "--direction has {} components but the input has {dim}",
                coords.len()
            )));
        }
        (ProjectionVector::from_coords(coords)?, "explicit".to_string())
    } else {
        (
            random_unit_vector(dim, SeedSpec::new(a.seed, 0))?,
            format!("random (seed {})", a.seed),
        )
    };

    let mixture = match &a.model_spec {
        None => None,
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
            match formats::parse_model_spec(&text, &path.display().to_string())?.to_model(RatioRange::Unrestricted)? {
                ModelSpec::Mixture(m) if m.dim() == dim => Some(m),
                ModelSpec::Mixture(_) => return Err(Error::usage("model spec dimension does not match the input")),
                ModelSpec::Box(_) => None,
            }
        }
    };
    let analytic = match &mixture {
        Some(m) => {
            let unit = v
                .normalized()
                .ok_or_else(|| Error::usage("the analytic error needs a non-zero direction"))?;
            Some(analytic_min_error(m.separation(), unit.dot(m.direction())?))
        }
        None => None,
    };

    let values = project(&points, &v)?;
    let projected = PointSet::from_rows(1, values.clone(), None)?;
    let mut axes = Vec::with_capacity(points.label_dim());
    for k in 0..points.label_dim() {
        let labels = points.label_column(k)?;
        let part = BinaryPartition::new(labels.clone());
        let (n0, n1) = part.counts();
        if n0 == 0 || n1 == 0 {
            return Err(Error::Input {
                path: a.input.clone(),
                message: format!("label y{} takes a single value; cannot split on it", k + 1),
            });
        }
        let mut threshold = empirical_min_error(&values, &labels)?;
        threshold.analytic = analytic;
        axes.push(AxisReport {
            axis: k + 1,
            counts: (n0, n1),
            scatter: empirical_scatter(&points, &part)?,
            projected_scatter: empirical_scatter(&projected, &part)?,
            threshold,
        });
    }
    let best_axis = axes
        .iter()
        .min_by(|x, y| x.threshold.error.total_cmp(&y.threshold.error))
        .map(|r| r.axis)
        .unwrap_or(1);
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let report = AnalyzeReport {
        schema: crate::manifest::REPORT_SCHEMA,
        input: a.input.display().to_string(),
        dim,
        n: values.len(),
        direction_source: source,
        direction: v.coords().to_vec(),
        projection: ProjectionSummary {
            n: values.len(),
            mean,
            variance: values.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / n,
            min: values.iter().copied().fold(f64::INFINITY, f64::min),
            max: values.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        },
        axes,
        best_axis,
    };
    let mut outputs = vec![Emit {
        path: a.out.as_deref(),
        format: "json",
        bytes: json_bytes(&report),
    }];
    if let Some(path) = a.projected_out.as_deref() {
        let mut buf = Vec::new();
        formats::write_projection_csv(&values, &mut buf)?;
        outputs.push(Emit {
            path: Some(path),
            format: "csv",
            bytes: buf,
        });
    }
    let manifest = RunManifest::new(
        "analyze",
        args,
        json!({
            "input": a.input.display().to_string(),
            "direction_source": report.direction_source,
            "direction": report.direction,
            "model_spec": a.model_spec.as_ref().map(|p| p.display().to_string()),
        }),
        a.random.then_some(a.seed),
    );
    finish(manifest, outputs)
}

/// Comma list, or `start:stop:step` (values rounded to 9 decimals).
pub fn parse_ratio_grid(text: &str) -> Result<Vec<f64>> {
    let bad = || Error::usage(format!("cannot parse ratio grid `{text}`"));
    let parts: Vec<&str> = text.split(':').collect();
    match parts.as_slice() {
        [list] => list
            .split(',')
            .map(|s| s.trim().parse::<f64>().map_err(|_| bad()))
            .collect(),
        [start, stop, step] => {
            let start: f64 = start.trim().parse().map_err(|_| bad())?;
            let stop: f64 = stop.trim().parse().map_err(|_| bad())?;
            let step: f64 = step.trim().parse().map_err(|_| bad())?;
            if !(step > 0.0 && stop >= start && start.is_finite() && stop.is_finite()) {
                return Err(bad());
            }
            let count = ((stop - start) / step + 1e-9).floor() as usize;
            Ok((0..=count)
                .map(|i| ((start + i as f64 * step) * 1e9).round() / 1e9)
                .collect())
        }
        _ => Err(bad()),
    }
}

fn sweep(a: SweepArgs, args: Vec<String>) -> Result<()> {
    let r_values = match &a.grid_r {
        Some(text) => parse_ratio_grid(text)?,
        None => default_r_grid(),
    };
    let d_values = a.grid_d.clone().unwrap_or_else(default_d_grid);
    let plan = SweepPlan {
        r_values,
        d_values,
        trials: a.trials,
        master_seed: a.seed,
        ratio_range: if a.allow_any_ratio {
            RatioRange::Unrestricted
        } else {
            RatioRange::Restricted
        },
    };
    let table = par::sweep(&plan)?;
    let mut bytes = Vec::new();
    let format = match a.format {
        Format::Csv => {
            formats::write_sweep_csv(&table, &mut bytes)?;
            "csv"
        }
        Format::Json => {
            formats::write_sweep_json(&table, &mut bytes)?;
            "json"
        }
    };
    let mut outputs = vec![Emit {
        path: a.out.as_deref(),
        format,
        bytes,
    }];
    if let Some(path) = a.svg.as_deref() {
        outputs.push(Emit {
            path: Some(path),
            format: "svg",
            bytes: svg::sweep_chart(&table).into_bytes(),
        });
    }
    let manifest = RunManifest::new(
        "sweep",
        args,
        json!({
            "r_values": plan.r_values,
            "d_values": plan.d_values,
            "trials": plan.trials,
            "allow_any_ratio": a.allow_any_ratio,
            "format": format,
        }),
        Some(a.seed),
    );
    finish(manifest, outputs)
}

fn diagnose(which: Diagnose, args: Vec<String>) -> Result<()> {
    let (name, report, seed, out) = match which {
        Diagnose::Lemma1 {
            dim,
            samples,
            seed,
            out,
        } => {
            let ks = lemma1_diagnostic(dim, samples, SeedSpec::new(seed, 0))?;
            let report = json!({
                "diagnostic": "lemma1",
                "dim": dim,
                "samples": samples,
                "ks": ks,
                "critical_value_0_05": ks_critical_value(0.05, samples),
                "critical_value_0_01": ks_critical_value(0.01, samples),
            });
            ("lemma1", report, Some(seed), out)
        }
        Diagnose::Errdist {
            dim,
            a,
            trials,
            seed,
            out,
        } => {
            let summary = error_distribution_diagnostic(dim, a, trials, SeedSpec::new(seed, 0))?;
            let scale = a / (2.0 * (dim as f64).sqrt());
            let report = json!({
                "diagnostic": "errdist",
                "dim": dim,
                "a": a,
                "a_over_2_sqrt_d": scale,
                "summary": summary,
                "limit_median": normal_cdf(-scale * HALF_NORMAL_MEDIAN)?,
            });
            ("errdist", report, Some(seed), out)
        }
        Diagnose::Whiten {
            dim,
            ratio,
            allow_any_ratio,
            trials,
            seed,
            out,
        } => {
            let range = if allow_any_ratio {
                RatioRange::Unrestricted
            } else {
                RatioRange::Restricted
            };
            let spec = BoxSpec::with_range(dim, ratio, range)?;
            let cmp = par::whitening_comparison(&spec, trials, SeedSpec::new(seed, 0))?;
            let report = json!({
                "diagnostic": "whiten",
                "dim": dim,
                "ratio": ratio,
                "trials": trials,
                "original": cmp.original,
                "whitened": cmp.whitened,
                "whitened_lower": cmp.whitened.p_hat < cmp.original.p_hat,
            });
            ("whiten", report, Some(seed), out)
        }
        Diagnose::Brute { model, input, out } => {
            let (points, source) = match &input {
                Some(path) => (read_input_points(path)?, json!({ "input": path.display().to_string() })),
                None => {
                    let (spec_json, spec) = model.to_model()?;
                    match spec {
                        ModelSpec::Box(b) => (enumerate_box_vertices(&b)?, json!({ "model": spec_json })),
                        ModelSpec::Mixture(_) => {
                            return Err(Error::usage(
                                "brute search enumerates box vertices; use --input for other point sets",
                            ))
                        }
                    }
                }
            };
            let found = brute_force_cluster_search(&points)?;
            let n = points.len();
            let report = json!({
                "diagnostic": "brute",
                "source": source,
                "points": n,
                "bipartitions": (1u64 << (n - 1)) - 1,
                "found": found.is_some(),
                "verdict": if found.is_some() { "cluster found" } else { "no cluster found" },
                "class_1": found.as_ref().map(|w| w.partition.members(true).iter().map(|j| j + 1).collect::<Vec<_>>()),
                "scatter": found.as_ref().map(|w| w.report),
            });
            ("brute", report, None, out)
        }
    };
    let manifest = RunManifest::new(name, args, report.clone(), seed);
    finish(
        manifest,
        vec![Emit {
            path: out.as_deref(),
            format: "json",
            bytes: json_bytes(&report),
        }],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_grids() {
        assert_eq!(parse_ratio_grid("1.0,1.5,2").unwrap(), vec![1.0, 1.5, 2.0]);
        let g = parse_ratio_grid("1.0:2.0:0.1").unwrap();
        assert_eq!(g.len(), 11);
        assert_eq!(g[3], 1.3);
        assert_eq!(g[10], 2.0);
        assert_eq!(parse_ratio_grid("1:2:0.05").unwrap(), default_r_grid());
        assert!(parse_ratio_grid("1:2").is_err());
        assert!(parse_ratio_grid("2:1:0.1").is_err());
        assert!(parse_ratio_grid("a,b").is_err());
    }

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
