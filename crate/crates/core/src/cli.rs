//! Command-line driver: generation, ingestion, per-snapshot analysis,
//! multi-setting comparison and star-emergence aggregation.
//!
//! Every command that writes to `--out` also writes `<out>.manifest.json`,
//! which `temponet replay` turns back into the same run. Seeds for repeat `r`
//! of a comparison are `seed + r`. `TEMPONET_THREADS` caps the worker pool.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::edgelist;
use crate::error::{invalid, Error, Result};
use crate::evolution::{
    aggregate_horizons, classify_vibrancy, jrc, stars_aggregate, vibrancy, GrowthClass, NetworkCollection,
    StarsAggregate, DEFAULT_VIBRANCY_THRESHOLD,
};
use crate::generators::{GeneratorConfig, GrowthSchedule, TimeDiffFn};
use crate::graph::{horizons, TemporalGraph, TimeStamp};
use crate::ingest::{normalize_times, read_edge_stream, IngestConfig};
use crate::metrics::{k_stars_vector, FeatureVector};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(name = "temponet", version, about = "Temporal network generation and evolution analysis")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a network and write it as an edge list.
    Generate(GenerateArgs),
    /// Convert a raw timestamped edge stream into an edge list.
    Ingest(IngestArgs),
    /// Per-horizon features of one network.
    Analyze(AnalyzeArgs),
    /// Mean final-snapshot features of several generator settings over seeded repeats.
    Compare(CompareArgs),
    /// Star-emergence vectors of a directory of networks, split by vibrancy.
    Stars(StarsArgs),
    /// Re-run the command recorded in a manifest.
    Replay(ReplayArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Clone, Debug, Args, Serialize, Deserialize)]
pub struct GenerateArgs {
    /// JSON generator config; flags given on the command line take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// tpa, ba, ws, nw, hk or ff.
    #[arg(long)]
    pub model: Option<String>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Group sizes: `100,200,400`, `linear:STEPxITERS`, `poly:C,X` or `sigmoid:C,X`.
    #[arg(long)]
    pub schedule: Option<GrowthSchedule>,
    /// Time-difference weight: `exp2`, `exp:B`, `geo:A,R` or `table:W0,W1,...`.
    #[arg(long)]
    pub f: Option<TimeDiffFn>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub retry_limit: Option<usize>,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Clone, Debug, Args, Serialize, Deserialize)]
pub struct IngestArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// JSON ingest config; flags given on the command line take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub directed: bool,
    #[arg(long)]
    pub allow_self_loops: bool,
    #[arg(long)]
    pub min_edges: Option<usize>,
    #[arg(long)]
    pub max_degree: Option<usize>,
    /// Shift time stamps so the earliest event is at time 0.
    #[arg(long)]
    pub normalize: bool,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Clone, Debug, Args, Serialize, Deserialize)]
pub struct AnalyzeArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value_t = 1)]
    pub interval: TimeStamp,
    /// Star sizes to report, e.g. `1,5`.
    #[arg(long, value_delimiter = ',')]
    pub k: Vec<usize>,
    /// Power-law cutoff; defaults to the smallest positive final degree.
    #[arg(long)]
    pub xmin: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Debug, Args, Serialize, Deserialize)]
pub struct CompareArgs {
    /// JSON array of generator configs, one per output row.
    #[arg(long)]
    pub settings: PathBuf,
    #[arg(long, default_value_t = 10)]
    pub repeats: usize,
    /// Base seed; repeat `r` runs with `seed + r`.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Horizon spacing for the star counts.
    #[arg(long, default_value_t = 1)]
    pub interval: TimeStamp,
    #[arg(long, value_delimiter = ',', default_value = "1,5")]
    pub k: Vec<usize>,
    #[arg(long)]
    pub xmin: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Debug, Args, Serialize, Deserialize)]
pub struct StarsArgs {
    /// Directory of `.csv` edge lists.
    #[arg(long)]
    pub dir: PathBuf,
    #[arg(long, default_value_t = 5)]
    pub k: usize,
    #[arg(long)]
    pub w: usize,
    #[arg(long, default_value_t = 1)]
    pub interval: TimeStamp,
    #[arg(long, default_value_t = DEFAULT_VIBRANCY_THRESHOLD)]
    pub threshold: f64,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Debug, Args)]
pub struct ReplayArgs {
    pub manifest: PathBuf,
    /// Write the primary output here instead of the recorded path.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub params: serde_json::Value,
    pub seed: u64,
    pub tool_version: String,
    pub outputs: Vec<PathBuf>,
}

impl RunManifest {
    pub fn path_for(out: &Path) -> PathBuf {
        let mut name = out.as_os_str().to_owned();
        name.push(".manifest.json");
        PathBuf::from(name)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
    }
}

fn write_manifest<P: Serialize>(command: &str, params: &P, seed: u64, outputs: Vec<PathBuf>) -> Result<()> {
    let manifest = RunManifest {
        command: command.to_owned(),
        params: serde_json::to_value(params)?,
        seed,
        tool_version: TOOL_VERSION.to_owned(),
        outputs,
    };
    let path = RunManifest::path_for(&manifest.outputs[0]);
    fs::write(path, serde_json::to_string_pretty(&manifest)? + "\n")?;
    Ok(())
}

fn emit<P: Serialize>(command: &str, params: &P, seed: u64, out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, text)?;
            write_manifest(command, params, seed, vec![path.to_owned()])
        }
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

/// Runs a parsed command line, honouring `TEMPONET_THREADS`.
pub fn run(cli: Cli) -> Result<()> {
    let threads = std::env::var("TEMPONET_THREADS").ok().and_then(|s| s.parse::<usize>().ok());
    match threads {
        Some(n) if n > 0 => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::InvalidArgument(e.to_string()))?;
            pool.install(|| dispatch(cli.command))
        }
        _ => dispatch(cli.command),
    }
}

fn dispatch(command: Command) -> Result<()> {
    match command {
        Command::Generate(a) => cmd_generate(&a),
        Command::Ingest(a) => cmd_ingest(&a),
        Command::Analyze(a) => cmd_analyze(&a),
        Command::Compare(a) => cmd_compare(&a),
        Command::Stars(a) => cmd_stars(&a),
        Command::Replay(a) => cmd_replay(&a),
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
}

impl GenerateArgs {
    /// The config file (if any) overlaid with the flags.
    pub fn generator_config(&self) -> Result<GeneratorConfig> {
        let mut cfg = match &self.config {
            Some(path) => read_json(path)?,
            None => match &self.model {
                Some(model) => GeneratorConfig {
                    model: model.clone(),
                    m: None,
                    n: None,
                    schedule: None,
                    f: None,
                    k: None,
                    p: None,
                    seed: 0,
                    retry_limit: None,
                },
                None => return invalid("--model or --config is required"),
            },
        };
        if let Some(model) = &self.model {
            cfg.model = model.clone();
        }
        cfg.m = self.m.or(cfg.m);
        cfg.n = self.n.or(cfg.n);
        cfg.schedule = self.schedule.clone().or(cfg.schedule);
        cfg.f = self.f.clone().or(cfg.f);
        cfg.k = self.k.or(cfg.k);
        cfg.p = self.p.or(cfg.p);
        cfg.seed = self.seed.unwrap_or(cfg.seed);
        cfg.retry_limit = self.retry_limit.or(cfg.retry_limit);
        Ok(cfg)
    }
}

pub fn cmd_generate(args: &GenerateArgs) -> Result<()> {
    let cfg = args.generator_config()?;
    let generated = cfg.resolve()?.generate()?;
    let g = &generated.graph;
    edgelist::save(g, &args.out)?;
    write_manifest("generate", args, cfg.seed, vec![args.out.clone(), edgelist::sidecar_path(&args.out)])?;
    println!("vertices={} edges={} skipped={}", g.vertex_count(), g.edge_count(), generated.skipped_edges);
    Ok(())
}

pub fn cmd_ingest(args: &IngestArgs) -> Result<()> {
    let mut cfg: IngestConfig = match &args.config {
        Some(path) => read_json(path)?,
        None => IngestConfig::default(),
    };
    cfg.directed |= args.directed;
    cfg.allow_self_loops |= args.allow_self_loops;
    cfg.min_edges = args.min_edges.unwrap_or(cfg.min_edges);
    cfg.max_degree = args.max_degree.or(cfg.max_degree);
    let mut g = read_edge_stream(BufReader::new(fs::File::open(&args.input)?), &cfg)?;
    if args.normalize {
        g = normalize_times(&g);
    }
    edgelist::save(&g, &args.out)?;
    write_manifest("ingest", args, 0, vec![args.out.clone(), edgelist::sidecar_path(&args.out)])?;
    println!("vertices={} edges={}", g.vertex_count(), g.edge_count());
    Ok(())
}

/// Smallest positive degree of the final snapshot; equals `m` for graphs
/// grown by attaching `m` edges per newcomer.
pub fn default_xmin(g: &TemporalGraph) -> usize {
    g.snapshot_at(g.t_max()).degrees().into_iter().filter(|&d| d > 0).min().unwrap_or(1)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalysisRow {
    pub horizon: TimeStamp,
    #[serde(flatten)]
    pub features: FeatureVector,
    pub jrc: f64,
    /// New stars per requested `k`, in flag order.
    pub stars: Vec<(usize, usize)>,
}

pub fn analyze(g: &TemporalGraph, interval: TimeStamp, ks: &[usize], xmin: usize) -> Result<Vec<AnalysisRow>> {
    if g.is_empty() {
        return invalid("cannot analyze an empty graph");
    }
    let hs = horizons(g.t_max(), interval)?;
    let curve = jrc(g, interval)?;
    let star_vectors = ks.iter().map(|&k| k_stars_vector(g, &hs, k)).collect::<Result<Vec<_>>>()?;
    let features: Vec<FeatureVector> =
        hs.par_iter().map(|&t| FeatureVector::compute(&g.snapshot_at(t), xmin)).collect();
    Ok(hs
        .iter()
        .zip(features)
        .enumerate()
        .map(|(i, (&horizon, features))| AnalysisRow {
            horizon,
            features,
            jrc: curve.samples[i + 1].1,
            stars: ks.iter().zip(&star_vectors).map(|(&k, v)| (k, v.counts()[i])).collect(),
        })
        .collect())
}

fn opt(x: Option<f64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn analysis_csv(rows: &[AnalysisRow], ks: &[usize]) -> String {
    let mut s = String::from("horizon,vertices,edges,density,avg_clustering,avg_shortest_path,max_degree,gamma,jrc");
    for k in ks {
        let _ = write!(s, ",stars_{k}");
    }
    s.push('\n');
    for r in rows {
        let f = &r.features;
        let _ = write!(
            s,
            "{},{},{},{},{},{},{},{},{}",
            r.horizon,
            f.vertices,
            f.edges,
            opt(f.density),
            f.avg_clustering,
            opt(f.avg_shortest_path),
            f.max_degree,
            opt(f.gamma),
            r.jrc
        );
        for (_, c) in &r.stars {
            let _ = write!(s, ",{c}");
        }
        s.push('\n');
    }
    s
}

fn analysis_json(rows: &[AnalysisRow]) -> Result<String> {
    let values: Vec<serde_json::Value> = rows
        .iter()
        .map(|r| {
            let mut v = serde_json::to_value(r)?;
            let obj = v.as_object_mut().expect("row serializes to an object");
            obj.remove("stars");
            for (k, c) in &r.stars {
                obj.insert(format!("stars_{k}"), (*c).into());
            }
            Ok(v)
        })
        .collect::<Result<_>>()?;
    Ok(serde_json::to_string_pretty(&values)? + "\n")
}

pub fn cmd_analyze(args: &AnalyzeArgs) -> Result<()> {
    let g = edgelist::load(&args.input)?;
    let xmin = args.xmin.unwrap_or_else(|| default_xmin(&g));
    let rows = analyze(&g, args.interval, &args.k, xmin)?;
    let text = match args.format {
        Format::Csv => analysis_csv(&rows, &args.k),
        Format::Json => analysis_json(&rows)?,
    };
    emit("analyze", args, 0, args.out.as_deref(), &text)
}

/// Final-snapshot features of one generated network, as averaged by `compare`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunSummary {
    pub features: FeatureVector,
    pub skipped_edges: usize,
    pub stars_numbers: Vec<usize>,
}

pub fn summarize_run(
    cfg: &GeneratorConfig,
    interval: TimeStamp,
    ks: &[usize],
    xmin: Option<usize>,
) -> Result<RunSummary> {
    let generated = cfg.resolve()?.generate()?;
    let g = &generated.graph;
    let xmin = xmin.or(cfg.m).unwrap_or_else(|| default_xmin(g));
    let hs = horizons(g.t_max(), interval)?;
    Ok(RunSummary {
        features: FeatureVector::compute(&g.snapshot_at(g.t_max()), xmin),
        skipped_edges: generated.skipped_edges,
        stars_numbers: ks.iter().map(|&k| k_stars_vector(g, &hs, k).map(|v| v.number())).collect::<Result<_>>()?,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CompareRow {
    pub setting: usize,
    pub model: String,
    pub repeats: usize,
    pub vertices: Option<f64>,
    pub edges: Option<f64>,
    pub skipped_edges: Option<f64>,
    pub density: Option<f64>,
    pub avg_clustering: Option<f64>,
    pub avg_shortest_path: Option<f64>,
    pub max_degree: Option<f64>,
    pub gamma: Option<f64>,
    pub stars: Vec<(usize, Option<f64>)>,
    pub error: Option<String>,
}

/// Mean over the defined values; undefined when there are none.
fn mean_of(values: impl Iterator<Item = Option<f64>>) -> Option<f64> {
    let (sum, n) = values.flatten().fold((0.0, 0usize), |(s, n), x| (s + x, n + 1));
    (n > 0).then(|| sum / n as f64)
}

pub fn compare(settings: &[GeneratorConfig], args: &CompareArgs) -> Vec<CompareRow> {
    let jobs: Vec<(usize, u64)> =
        (0..settings.len()).flat_map(|s| (0..args.repeats as u64).map(move |r| (s, r))).collect();
    let results: Vec<Result<RunSummary>> = jobs
        .par_iter()
        .map(|&(s, r)| summarize_run(&settings[s].with_seed(args.seed + r), args.interval, &args.k, args.xmin))
        .collect();
    let mut results = results.into_iter();
    settings
        .iter()
        .enumerate()
        .map(|(i, cfg)| {
            let chunk: Vec<Result<RunSummary>> = results.by_ref().take(args.repeats).collect();
            let runs: Result<Vec<RunSummary>> = chunk.into_iter().collect();
            let mut row = CompareRow {
                setting: i,
                model: cfg.model.clone(),
                repeats: args.repeats,
                vertices: None,
                edges: None,
                skipped_edges: None,
                density: None,
                avg_clustering: None,
                avg_shortest_path: None,
                max_degree: None,
                gamma: None,
                stars: args.k.iter().map(|&k| (k, None)).collect(),
                error: None,
            };
            match runs {
                Ok(runs) => {
                    let m = |f: &dyn Fn(&RunSummary) -> Option<f64>| mean_of(runs.iter().map(f));
                    row.vertices = m(&|r| Some(r.features.vertices as f64));
                    row.edges = m(&|r| Some(r.features.edges as f64));
                    row.skipped_edges = m(&|r| Some(r.skipped_edges as f64));
                    row.density = m(&|r| r.features.density);
                    row.avg_clustering = m(&|r| Some(r.features.avg_clustering));
                    row.avg_shortest_path = m(&|r| r.features.avg_shortest_path);
                    row.max_degree = m(&|r| Some(r.features.max_degree as f64));
                    row.gamma = m(&|r| r.features.gamma);
                    for (j, entry) in row.stars.iter_mut().enumerate() {
                        entry.1 = m(&|r| Some(r.stars_numbers[j] as f64));
                    }
                }
                Err(e) => row.error = Some(e.to_string()),
            }
            row
        })
        .collect()
}

fn compare_csv(rows: &[CompareRow], ks: &[usize]) -> String {
    let mut s = String::from(
        "setting,model,repeats,vertices,edges,skipped_edges,density,avg_clustering,avg_shortest_path,max_degree,gamma",
    );
    for k in ks {
        let _ = write!(s, ",stars_number_{k}");
    }
    s.push_str(",error\n");
    for r in rows {
        let _ = write!(
            s,
            "{},{},{},{},{},{},{},{},{},{},{}",
            r.setting,
            r.model,
            r.repeats,
            opt(r.vertices),
            opt(r.edges),
            opt(r.skipped_edges),
            opt(r.density),
            opt(r.avg_clustering),
            opt(r.avg_shortest_path),
            opt(r.max_degree),
            opt(r.gamma)
        );
        for (_, v) in &r.stars {
            let _ = write!(s, ",{}", opt(*v));
        }
        let error = r.error.as_deref().unwrap_or("").replace(['"', ','], " ");
        let _ = writeln!(s, ",{error}");
    }
    s
}

pub fn cmd_compare(args: &CompareArgs) -> Result<()> {
    let settings: Vec<GeneratorConfig> = read_json(&args.settings)?;
    if args.repeats == 0 {
        return invalid("--repeats must be positive");
    }
    let rows = compare(&settings, args);
    let text = match args.format {
        Format::Csv => compare_csv(&rows, &args.k),
        Format::Json => serde_json::to_string_pretty(&rows)? + "\n",
    };
    emit("compare", args, args.seed, args.out.as_deref(), &text)
}

/// Edge lists in `dir` (files ending in `.csv`), sorted by file name.
pub fn load_directory(dir: &Path) -> Result<Vec<TemporalGraph>> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)?.map(|e| e.map(|e| e.path())).collect::<io::Result<_>>()?;
    paths.retain(|p| p.extension().is_some_and(|e| e == "csv"));
    paths.sort();
    paths.iter().map(|p| edgelist::load(p)).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassStars {
    pub class: &'static str,
    pub networks: usize,
    pub aggregate: Option<StarsAggregate>,
}

/// Splits `networks` at the vibrancy threshold and aggregates each class.
/// A class with fewer than `w` members uses all of them.
pub fn stars_by_class(networks: Vec<TemporalGraph>, args: &StarsArgs) -> Result<Vec<ClassStars>> {
    if args.w == 0 || args.w > networks.len() {
        return invalid(format!("w must lie in 1..={}, got {}", networks.len(), args.w));
    }
    let classes: Vec<GrowthClass> = networks
        .par_iter()
        .map(|g| Ok(classify_vibrancy(vibrancy(&jrc(g, args.interval)?), args.threshold)))
        .collect::<Result<_>>()?;
    let (mut fast, mut slow) = (Vec::new(), Vec::new());
    for (g, class) in networks.into_iter().zip(classes) {
        match class {
            GrowthClass::Fast => fast.push(g),
            GrowthClass::Slow => slow.push(g),
        }
    }
    [("fast", fast), ("slow", slow)]
        .into_iter()
        .map(|(class, members)| {
            let c = NetworkCollection::new(members);
            let aggregate = if c.is_empty() {
                None
            } else {
                let w = args.w.min(c.len());
                let hs = aggregate_horizons(&c, w, args.interval)?;
                Some(stars_aggregate(&c, args.k, w, &hs)?)
            };
            Ok(ClassStars { class, networks: c.len(), aggregate })
        })
        .collect()
}

fn stars_csv(classes: &[ClassStars]) -> String {
    let mut s = String::from("class,networks,index,horizon,total,avg,norm_avg\n");
    for c in classes {
        let Some(a) = &c.aggregate else { continue };
        for i in 0..a.horizons.len() {
            let _ = writeln!(
                s,
                "{},{},{},{},{},{},{}",
                c.class,
                c.networks,
                i + 1,
                a.horizons[i],
                a.total[i],
                a.avg[i],
                a.norm_avg[i]
            );
        }
    }
    s
}

pub fn cmd_stars(args: &StarsArgs) -> Result<()> {
    let networks = load_directory(&args.dir)?;
    if networks.is_empty() {
        return invalid(format!("no .csv edge lists in {}", args.dir.display()));
    }
    let classes = stars_by_class(networks, args)?;
    let text = match args.format {
        Format::Csv => stars_csv(&classes),
        Format::Json => serde_json::to_string_pretty(&classes)? + "\n",
    };
    emit("stars", args, 0, args.out.as_deref(), &text)
}

fn params<T: for<'de> Deserialize<'de>>(m: &RunManifest) -> Result<T> {
    Ok(serde_json::from_value(m.params.clone())?)
}

pub fn cmd_replay(args: &ReplayArgs) -> Result<()> {
    let manifest = RunManifest::load(&args.manifest)?;
    let out = args.out.clone();
    let command = match manifest.command.as_str() {
        "generate" => {
            let mut a: GenerateArgs = params(&manifest)?;
            if let Some(out) = out {
                a.out = out;
            }
            Command::Generate(a)
        }
        "ingest" => {
            let mut a: IngestArgs = params(&manifest)?;
            if let Some(out) = out {
                a.out = out;
            }
            Command::Ingest(a)
        }
        "analyze" => {
            let mut a: AnalyzeArgs = params(&manifest)?;
            a.out = out.or(a.out);
            Command::Analyze(a)
        }
        "compare" => {
            let mut a: CompareArgs = params(&manifest)?;
            a.out = out.or(a.out);
            Command::Compare(a)
        }
        "stars" => {
            let mut a: StarsArgs = params(&manifest)?;
            a.out = out.or(a.out);
            Command::Stars(a)
        }
        other => return invalid(format!("unknown command {other:?} in manifest")),
    };
    dispatch(command)
}

/// Process exit code for an error: 2 for invalid arguments, 1 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidArgument(_) => 2,
        _ => 1,
    }
}
