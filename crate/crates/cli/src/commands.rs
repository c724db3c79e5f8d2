//! Argument definitions and command implementations.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use spherewidth::measure::{pair_kind, sampled_diameter, PairKind};
use spherewidth::{
    diameter, is_constant_width, reducedness_check, run_suite, thickness, BodySpec, BoundaryPoint, Frame,
    GeometryError, UnitPoint, VerificationReport, VerifyOptions,
};
use thiserror::Error;

use crate::document::{BodyDocument, DocumentError};
use crate::format::{to_json, DOCUMENT_DIGITS, MEASURE_DIGITS};
use crate::render::{render_svg, View};

#[derive(Debug, Parser)]
#[command(name = "spherewidth", version, about = "Thickness, diameter and reduced bodies on the sphere")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a body document to standard output.
    Generate {
        #[command(subcommand)]
        shape: Shape,
    },
    /// Measure thickness, diameter and related quantities of a document
    /// (`-` reads standard input).
    Measure {
        input: PathBuf,
        /// Cross-check the diameter against a dense boundary grid.
        #[arg(long)]
        paranoid: bool,
    },
    /// Run a verification suite and print its reports.
    Verify(VerifyArgs),
    /// Draw a body as an SVG file.
    Render(RenderArgs),
}

#[derive(Debug, Clone, Args)]
pub struct Placement {
    /// Image of the north pole, as x,y,z.
    #[arg(long, value_parser = parse_triple)]
    pub center: Option<[f64; 3]>,
    /// Image of the x direction at the north pole, as x,y,z.
    #[arg(long, value_parser = parse_triple, requires = "center")]
    pub tangent: Option<[f64; 3]>,
    #[arg(long)]
    pub label: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Shape {
    /// Spherical disk of the given radius.
    Disk {
        #[arg(long)]
        radius: f64,
        #[command(flatten)]
        place: Placement,
    },
    /// Quarter of a disk: two radii and the arc between them.
    QuarterDisk {
        #[arg(long)]
        radius: f64,
        #[command(flatten)]
        place: Placement,
    },
    /// Regular odd-gon with the given thickness.
    RegularOddGon {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        thickness: f64,
        #[command(flatten)]
        place: Placement,
    },
    /// Reuleaux odd-gon of constant width.
    Reuleaux {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        width: f64,
        #[command(flatten)]
        place: Placement,
    },
    /// Isosceles triangle with two arms and a base.
    Isosceles {
        #[arg(long)]
        arm: f64,
        #[arg(long)]
        base: f64,
        #[command(flatten)]
        place: Placement,
    },
    /// Hull of uniform samples in a randomly placed cap.
    Random {
        #[arg(long)]
        cap: f64,
        #[arg(long)]
        points: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        label: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Lemma1,
    Lemma2,
    Theorem,
    Proposition,
    Bounds,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Lemma1 => "lemma1",
            Suite::Lemma2 => "lemma2",
            Suite::Theorem => "theorem",
            Suite::Proposition => "proposition",
            Suite::Bounds => "bounds",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Tolerance override, as key=value; repeatable.
    #[arg(long = "tol", value_parser = parse_tol)]
    pub tol: Vec<(String, f64)>,
    /// Worker threads; the reports do not depend on it.
    #[arg(long)]
    pub threads: Option<usize>,
    #[arg(long, hide = true, default_value_t = 0.0)]
    pub bound_shift: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Overlay {
    MinimalLunes,
}

#[derive(Debug, Clone, Args)]
pub struct RenderArgs {
    pub input: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
    /// Viewing axis: x, y, z or a,b,c.
    #[arg(long, default_value = "z")]
    pub view: String,
    #[arg(long, value_enum)]
    pub overlay: Option<Overlay>,
}

fn parse_triple(s: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err("expected three comma-separated numbers".into());
    }
    let mut out = [0.0; 3];
    for (o, p) in out.iter_mut().zip(parts) {
        *o = p.trim().parse().map_err(|e| format!("{p:?}: {e}"))?;
    }
    Ok(out)
}

fn parse_tol(s: &str) -> Result<(String, f64), String> {
    let (k, v) = s.split_once('=').ok_or("expected key=value")?;
    let v: f64 = v.trim().parse().map_err(|e| format!("{v:?}: {e}"))?;
    Ok((k.trim().to_string(), v))
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid parameters: {0}")]
    Parameters(GeometryError),
    #[error("cannot read {path}: {source}")]
    Input { path: String, source: std::io::Error },
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error("invalid body: {0}")]
    Geometry(GeometryError),
    #[error("cannot write {path}: {source}")]
    Output { path: String, source: std::io::Error },
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Parameters(_) | CliError::Input { .. } | CliError::Document(_) => 2,
            CliError::Geometry(_) => 3,
            CliError::Output { .. } => 4,
        }
    }
}

/// What a successful command prints, and its exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub stdout: String,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, code: 0 }
    }
}

pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Generate { shape } => generate(shape).map(Output::ok),
        Command::Measure { input, paranoid } => measure(&read_document(input)?, *paranoid),
        Command::Verify(args) => verify(args),
        Command::Render(args) => render(args).map(Output::ok),
    }
}

fn frame(place: &Placement) -> Result<Option<Frame>, CliError> {
    let Some(center) = place.center else { return Ok(None) };
    let c = UnitPoint::try_from(center).map_err(CliError::Parameters)?;
    let tangent = match place.tangent {
        Some(t) => t,
        None => {
            let (e1, _) = c.tangent_frame();
            [e1.x, e1.y, e1.z]
        }
    };
    Ok(Some(Frame { center: c.to_array(), tangent }))
}

pub fn generate(shape: &Shape) -> Result<String, CliError> {
    let (spec, label) = match shape {
        Shape::Disk { radius, place } => (BodySpec::Disk { radius: *radius, frame: frame(place)? }, &place.label),
        Shape::QuarterDisk { radius, place } => {
            (BodySpec::QuarterDisk { radius: *radius, frame: frame(place)? }, &place.label)
        }
        Shape::RegularOddGon { n, thickness, place } => {
            (BodySpec::RegularOddGon { n: *n, thickness: *thickness, frame: frame(place)? }, &place.label)
        }
        Shape::Reuleaux { n, width, place } => {
            (BodySpec::ReuleauxOddGon { n: *n, width: *width, frame: frame(place)? }, &place.label)
        }
        Shape::Isosceles { arm, base, place } => {
            (BodySpec::IsoscelesTriangle { arm: *arm, base: *base, frame: frame(place)? }, &place.label)
        }
        Shape::Random { cap, points, seed, label } => {
            let body = spherewidth::random_convex_body(*cap, *points, *seed).map_err(CliError::Parameters)?;
            let mut doc = BodyDocument::from_body(&body);
            doc.metadata.seed = Some(*seed);
            doc.metadata.label = label.clone();
            return Ok(doc.to_json());
        }
    };
    spec.build().map_err(CliError::Parameters)?;
    let mut doc = BodyDocument::from_spec(spec);
    doc.metadata.label = label.clone();
    Ok(doc.to_json())
}

pub fn read_document(path: &Path) -> Result<BodyDocument, CliError> {
    let text =
        if path == Path::new("-") { std::io::read_to_string(std::io::stdin()) } else { std::fs::read_to_string(path) }
            .map_err(|source| CliError::Input { path: path.display().to_string(), source })?;
    Ok(BodyDocument::parse(&text)?)
}

#[derive(Serialize)]
struct RealizingPair {
    kind: PairKind,
    a: BoundaryPoint,
    b: BoundaryPoint,
}

#[derive(Serialize)]
struct Reducedness {
    pass: bool,
    tol: f64,
    checked_points: usize,
    failing_points: usize,
}

#[derive(Serialize)]
struct Measurement {
    thickness: f64,
    diameter: f64,
    realizing_pairs: Vec<RealizingPair>,
    minimal_lunes: usize,
    constant_width: bool,
    reducedness: Reducedness,
    #[serde(skip_serializing_if = "Option::is_none")]
    grid_check: Option<GridCheck>,
}

#[derive(Serialize)]
struct GridCheck {
    samples: usize,
    sampled_diameter: f64,
    consistent: bool,
}

/// Boundary samples used by `measure --paranoid`.
pub const GRID_SAMPLES: usize = 1000;
/// Slack allowed when the grid diameter exceeds the exact one.
pub const GRID_TOL: f64 = 1e-9;

/// Exit code 3 if the grid finds a pair farther apart than the diameter.
pub fn measure(doc: &BodyDocument, paranoid: bool) -> Result<Output, CliError> {
    let body = doc.build().map_err(CliError::Geometry)?;
    let t = thickness(&body).map_err(CliError::Geometry)?;
    let d = diameter(&body);
    let red = reducedness_check(&body, spherewidth::reduced::DEFAULT_TOL).map_err(CliError::Geometry)?;
    let m = Measurement {
        thickness: t.value,
        diameter: d.value,
        realizing_pairs: d.pairs.iter().map(|(a, b)| RealizingPair { kind: pair_kind(a, b), a: *a, b: *b }).collect(),
        minimal_lunes: t.minimal_lunes.len(),
        constant_width: is_constant_width(&body, 1e-9).map_err(CliError::Geometry)?,
        reducedness: Reducedness {
            pass: red.pass,
            tol: red.tol,
            checked_points: red.candidates.len(),
            failing_points: red.failures().count(),
        },
        grid_check: paranoid.then(|| {
            let per_edge = GRID_SAMPLES.div_ceil(body.arcs().len());
            let sampled = sampled_diameter(&body, per_edge);
            GridCheck {
                samples: per_edge * body.arcs().len(),
                sampled_diameter: sampled,
                consistent: sampled <= d.value + GRID_TOL,
            }
        }),
    };
    let code = if m.grid_check.as_ref().is_some_and(|g| !g.consistent) { 3 } else { 0 };
    Ok(Output { stdout: to_json(&m, MEASURE_DIGITS), code })
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    suite: &'a str,
    trials: u64,
    seed: u64,
    passed: bool,
    reports: &'a [VerificationReport],
}

pub fn verify(args: &VerifyArgs) -> Result<Output, CliError> {
    if args.trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let mut opts = VerifyOptions::new(args.trials, args.seed);
    opts.bound_shift = args.bound_shift;
    for (k, v) in &args.tol {
        opts.tolerances.set(k, *v).map_err(|e| CliError::Usage(format!("--tol {k}={v}: {e}")))?;
    }
    let run = || run_suite(args.suite.name(), &opts);
    let reports = match args.threads {
        Some(0) => return Err(CliError::Usage("--threads must be at least 1".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Usage(e.to_string()))?
            .install(run),
        None => run(),
    }
    .map_err(|e| CliError::Usage(e.to_string()))?;
    let passed = reports.iter().all(VerificationReport::passed);
    let out =
        VerifyOutput { suite: args.suite.name(), trials: args.trials, seed: args.seed, passed, reports: &reports };
    Ok(Output { stdout: to_json(&out, DOCUMENT_DIGITS), code: if passed { 0 } else { 1 } })
}

pub fn render(args: &RenderArgs) -> Result<String, CliError> {
    let view = View::parse(&args.view).ok_or_else(|| CliError::Usage(format!("bad view {:?}", args.view)))?;
    let body = read_document(&args.input)?.build().map_err(CliError::Geometry)?;
    let lunes = match args.overlay {
        Some(Overlay::MinimalLunes) => {
            thickness(&body).map_err(CliError::Geometry)?.minimal_lunes.iter().map(|w| w.lune).collect()
        }
        None => Vec::new(),
    };
    let svg = render_svg(&body, &view, &lunes);
    std::fs::write(&args.out, svg)
        .map_err(|source| CliError::Output { path: args.out.display().to_string(), source })?;
    Ok(String::new())
}
