//! Command-line front end. JSON results go to stdout, diagnostics to stderr.
//!
//! Exit codes: 0 success, 1 I/O failure or failed verification, 2 usage or
//! validation error, 3 empty region.

use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::error::Error;
use crate::glossa::{Description, ElementSet, Glossa};
use crate::imaging::{self, ExperimentParams, RegionSpec, DEFAULT_ETA, DEFAULT_TARGETS};
use crate::nerve::{
    check_convexity_theorem, check_d_convex_union_representable, descriptive_nerve, Collection,
    SimplicialComplex, UnionMode,
};
use crate::setops::{
    descriptive_intersection, descriptive_union, DescriptiveResult, UnionConfig, Variant,
};
use crate::verify::{self, Suite, VerifyOptions};

/// Largest collection the `nerve` subcommand accepts.
pub const CLI_MAX_NERVE_MEMBERS: usize = 16;

pub const EXIT_IO: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_EMPTY: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "desops",
    version,
    about = "Descriptive set operations, nerves, image experiments and theorem checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Descriptive intersection or union of two element sets.
    Ops(OpsArgs),
    /// Descriptive union of two image regions, written as a mask or overlay PNG.
    Image(ImageArgs),
    /// Descriptive nerve of a collection.
    Nerve(NerveArgs),
    /// Convexity theorem report, or union representability of a complex.
    CheckConvex(CheckConvexArgs),
    /// Randomized verification of the descriptive set invariants.
    Verify(VerifyArgs),
}

/// `intersection` or one of the four union variants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Intersection,
    Union(Variant),
}

fn parse_op(s: &str) -> Result<Op, String> {
    if s == "intersection" {
        return Ok(Op::Intersection);
    }
    s.parse::<Variant>().map(Op::Union).map_err(|_| {
        let names: Vec<&str> = Variant::ALL.iter().map(|v| v.name()).collect();
        format!(
            "unknown operation `{s}`; expected intersection, {}",
            names.join(", ")
        )
    })
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    s.parse::<Variant>()
        .map_err(|_| format!("unknown variant `{s}`"))
}

/// Target descriptions given as JSON on the command line, e.g. `[[1.0],[2.0]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Targets(pub Vec<Description>);

fn parse_targets(s: &str) -> Result<Targets, String> {
    serde_json::from_str(s)
        .map(Targets)
        .map_err(|e| format!("targets must be a JSON list of vectors: {e}"))
}

/// Suites chosen with `--suite`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteSelection(pub Vec<Suite>);

fn parse_suites(s: &str) -> Result<SuiteSelection, String> {
    Suite::parse_selection(s).map(SuiteSelection)
}

#[derive(Debug, Args)]
pub struct OpsArgs {
    /// Glossa JSON file.
    #[arg(long)]
    pub glossa: PathBuf,
    /// Element set JSON file for A.
    #[arg(long)]
    pub a: PathBuf,
    /// Element set JSON file for B.
    #[arg(long)]
    pub b: PathBuf,
    /// `intersection` or a union variant such as `restrictive-discriminatory`.
    #[arg(long, value_parser = parse_op, conflicts_with = "config", required_unless_present = "config")]
    pub op: Option<Op>,
    /// Union configuration JSON file, instead of `--op`.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, default_value_t = 0.0)]
    pub eta: f64,
    /// Target descriptions as JSON, e.g. `[[1.0],[2.0]]`.
    #[arg(long, value_parser = parse_targets)]
    pub targets: Option<Targets>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum ImageMode {
    #[default]
    Mask,
    Overlay,
}

#[derive(Debug, Args)]
pub struct ImageArgs {
    /// Input PNG.
    #[arg(long)]
    pub input: PathBuf,
    /// Region JSON file for A.
    #[arg(long)]
    pub region_a: PathBuf,
    /// Region JSON file for B.
    #[arg(long)]
    pub region_b: PathBuf,
    #[arg(long, value_parser = parse_variant)]
    pub variant: Variant,
    #[arg(long, default_value_t = DEFAULT_ETA)]
    pub eta: f64,
    /// Target RGB triples as JSON; defaults to the two reference colours.
    #[arg(long, value_parser = parse_targets)]
    pub targets: Option<Targets>,
    /// Output PNG.
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value_t = ImageMode::Mask)]
    pub mode: ImageMode,
}

#[derive(Debug, Args)]
pub struct NerveArgs {
    #[arg(long)]
    pub glossa: PathBuf,
    /// Collection JSON file: `{"members":[{"ids":[..]},..]}`.
    #[arg(long)]
    pub collection: PathBuf,
    #[arg(long, default_value_t = 0.0)]
    pub eta: f64,
}

#[derive(Debug, Args)]
pub struct CheckConvexArgs {
    /// Glossa JSON file; every element needs coordinates.
    #[arg(long)]
    pub glossa: PathBuf,
    #[arg(long, requires_all = ["b", "targets"], conflicts_with = "complex")]
    pub a: Option<PathBuf>,
    #[arg(long, requires = "a")]
    pub b: Option<PathBuf>,
    #[arg(long, value_parser = parse_targets)]
    pub targets: Option<Targets>,
    #[arg(long, default_value_t = 0.0)]
    pub eta: f64,
    /// Simplicial complex JSON file, checked for union representability.
    #[arg(long, requires_all = ["collection", "config"], required_unless_present = "a")]
    pub complex: Option<PathBuf>,
    #[arg(long)]
    pub collection: Option<PathBuf>,
    /// Union configuration JSON file.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = CliUnionMode::Pairwise)]
    pub union_mode: CliUnionMode,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CliUnionMode {
    Pairwise,
    Total,
}

impl From<CliUnionMode> for UnionMode {
    fn from(m: CliUnionMode) -> Self {
        match m {
            CliUnionMode::Pairwise => UnionMode::Pairwise,
            CliUnionMode::Total => UnionMode::Total,
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,
    /// `all`, a suite name, or a comma-separated list of suite names.
    #[arg(long, default_value = "all", value_parser = parse_suites)]
    pub suite: SuiteSelection,
}

/// A failed command: exit code plus message.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn new(code: u8, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        CliError::new(EXIT_USAGE, message)
    }

    fn from_lib(context: &str, e: Error) -> Self {
        let code = match e {
            Error::Image(_) => EXIT_IO,
            Error::EmptyRegion => EXIT_EMPTY,
            _ => EXIT_USAGE,
        };
        CliError::new(code, format!("{context}: {e}"))
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

type CliResult<T> = Result<T, CliError>;

fn read_json<T: DeserializeOwned>(path: &Path, what: &str) -> CliResult<T> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        CliError::new(
            EXIT_IO,
            format!("cannot read {what} file {}: {e}", path.display()),
        )
    })?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::usage(format!("invalid {what} file {}: {e}", path.display())))
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T, pretty: bool) -> CliResult<()> {
    let text = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    }
    .map_err(|e| CliError::new(EXIT_IO, format!("cannot serialize output: {e}")))?;
    writeln!(out, "{text}").map_err(|e| CliError::new(EXIT_IO, format!("cannot write output: {e}")))
}

/// Worker thread count from `DESOPS_THREADS`; unset or `0` means automatic.
pub fn threads_from_env() -> CliResult<usize> {
    match std::env::var("DESOPS_THREADS") {
        Err(_) => Ok(0),
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::usage(format!(
                "DESOPS_THREADS must be a non-negative integer, got `{v}`"
            ))
        }),
    }
}

fn cmd_ops(args: &OpsArgs, out: &mut dyn Write) -> CliResult<()> {
    let g: Glossa = read_json(&args.glossa, "glossa")?;
    let a: ElementSet = read_json(&args.a, "element set A")?;
    let b: ElementSet = read_json(&args.b, "element set B")?;
    let result = match (&args.config, args.op) {
        (Some(path), _) => {
            let cfg: UnionConfig = read_json(path, "union config")?;
            descriptive_union(&g, &a, &b, &cfg).map_err(|e| CliError::from_lib("union", e))?
        }
        (None, Some(Op::Intersection)) => DescriptiveResult {
            elements: descriptive_intersection(&g, &a, &b, args.eta)
                .map_err(|e| CliError::from_lib("intersection", e))?,
            includes_empty_set: false,
        },
        (None, Some(Op::Union(v))) => {
            let targets = match (&args.targets, v.is_discriminatory()) {
                (Some(t), _) => t.0.clone(),
                (None, false) => Vec::new(),
                (None, true) => {
                    return Err(CliError::usage(format!("--targets is required for {v}")))
                }
            };
            descriptive_union(&g, &a, &b, &v.config(&targets, args.eta))
                .map_err(|e| CliError::from_lib(v.name(), e))?
        }
        (None, None) => return Err(CliError::usage("either --op or --config is required")),
    };
    emit(out, &result, false)
}

#[derive(Serialize)]
struct ImageSummary {
    width: u32,
    height: u32,
    region_a: usize,
    region_b: usize,
    selected: usize,
    includes_empty_set: bool,
}

fn cmd_image(args: &ImageArgs, out: &mut dyn Write) -> CliResult<()> {
    let region_a: RegionSpec = read_json(&args.region_a, "region A")?;
    let region_b: RegionSpec = read_json(&args.region_b, "region B")?;
    let img = imaging::load_rgb(&args.input).map_err(|e| {
        CliError::new(
            EXIT_IO,
            format!("cannot read image {}: {e}", args.input.display()),
        )
    })?;
    for (spec, path) in [(&region_a, &args.region_a), (&region_b, &args.region_b)] {
        if imaging::region_pixels(img.width(), img.height(), spec).is_empty() {
            return Err(CliError::new(
                EXIT_EMPTY,
                format!(
                    "region {} selects no pixels of the {}x{} image",
                    path.display(),
                    img.width(),
                    img.height()
                ),
            ));
        }
    }
    let params = ExperimentParams {
        variant: args.variant,
        eta: args.eta,
        targets: args.targets.clone().map(|t| t.0).unwrap_or_else(|| {
            DEFAULT_TARGETS
                .iter()
                .map(|&t| Description::from(t))
                .collect()
        }),
    };
    let exp = imaging::run_experiment(&img, &region_a, &region_b, &params)
        .map_err(|e| CliError::from_lib("image experiment", e))?;
    let rendered = match args.mode {
        ImageMode::Mask => exp.mask.clone(),
        ImageMode::Overlay => {
            imaging::render_overlay(&img, &exp.region_a, &exp.region_b, &exp.selected)
        }
    };
    imaging::save_png(&rendered, &args.out)
        .map_err(|e| CliError::new(EXIT_IO, format!("cannot write {}: {e}", args.out.display())))?;
    eprintln!("wrote {}", args.out.display());
    emit(
        out,
        &ImageSummary {
            width: img.width(),
            height: img.height(),
            region_a: exp.region_a.len(),
            region_b: exp.region_b.len(),
            selected: exp.selected.len(),
            includes_empty_set: exp.result.includes_empty_set,
        },
        false,
    )
}

fn cmd_nerve(args: &NerveArgs, out: &mut dyn Write) -> CliResult<()> {
    let g: Glossa = read_json(&args.glossa, "glossa")?;
    let coll: Collection = read_json(&args.collection, "collection")?;
    if coll.len() > CLI_MAX_NERVE_MEMBERS {
        return Err(CliError::usage(format!(
            "collection {} has {} members, at most {CLI_MAX_NERVE_MEMBERS} are supported",
            args.collection.display(),
            coll.len()
        )));
    }
    let k = descriptive_nerve(&g, &coll, args.eta).map_err(|e| CliError::from_lib("nerve", e))?;
    emit(out, &k, false)
}

fn cmd_check_convex(args: &CheckConvexArgs, out: &mut dyn Write) -> CliResult<()> {
    let g: Glossa = read_json(&args.glossa, "glossa")?;
    if let (Some(a), Some(b)) = (&args.a, &args.b) {
        let a: ElementSet = read_json(a, "element set A")?;
        let b: ElementSet = read_json(b, "element set B")?;
        let targets = args.targets.clone().map(|t| t.0).unwrap_or_default();
        let report = check_convexity_theorem(&g, &a, &b, &targets, args.eta)
            .map_err(|e| CliError::from_lib("check-convex", e))?;
        return emit(out, &report, true);
    }
    let (Some(k), Some(coll), Some(cfg)) = (&args.complex, &args.collection, &args.config) else {
        return Err(CliError::usage(
            "give either --a/--b/--targets or --complex/--collection/--config",
        ));
    };
    let k: SimplicialComplex = read_json(k, "complex")?;
    let coll: Collection = read_json(coll, "collection")?;
    let cfg: UnionConfig = read_json(cfg, "union config")?;
    let report = check_d_convex_union_representable(&k, &g, &coll, &cfg, args.union_mode.into())
        .map_err(|e| CliError::from_lib("check-convex", e))?;
    emit(out, &report, true)
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> CliResult<()> {
    let mut opts = VerifyOptions::new(args.seed, args.trials as usize);
    opts.suites = args.suite.0.clone();
    opts.threads = threads_from_env()?;
    let report = verify::run(&opts);
    emit(out, &report, true)?;
    if report.passed {
        Ok(())
    } else {
        Err(CliError::new(
            EXIT_IO,
            format!(
                "verification failed: {} failing checks",
                report.total_failures
            ),
        ))
    }
}

/// Runs a parsed command, writing its JSON result to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> CliResult<()> {
    match &cli.command {
        Command::Ops(a) => cmd_ops(a, out),
        Command::Image(a) => cmd_image(a, out),
        Command::Nerve(a) => cmd_nerve(a, out),
        Command::CheckConvex(a) => cmd_check_convex(a, out),
        Command::Verify(a) => cmd_verify(a, out),
    }
}

/// Parses `std::env::args`, runs, and maps the outcome to an exit code.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(&cli, &mut lock) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = lock.flush();
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}
