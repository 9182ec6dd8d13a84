//! Command dispatch and exit-code policy.
//!
//! Exit codes: 0 success, 2 refusal of an out-of-scope computation,
//! 64 usage errors, 65 unreadable or malformed input, 1 any other
//! domain error.

use crate::schema::{InputError, SystemDescription};
use crate::svg::render_svg;
use bsq_core::cech::CechError;
use bsq_core::polytope::ViolationKind;
use bsq_core::quantize::{quantize_new, quantize_old, quantize_toric, QuantizationReport, QuantizeError};
use bsq_core::verify::{block_checks, connection_form_checks, lift_generator_checks, Check};
use clap::{Parser, Subcommand, ValueEnum};
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_REFUSAL: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_INPUT: i32 = 65;

#[derive(Parser)]
#[command(name = "bsq", version, about = "Exact Bohr-Sommerfeld quantization toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a quantization model on a system description.
    Quantize {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long)]
        input: PathBuf,
        /// Emit the report as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Inspect a polytope: smoothness, lattice counts, plots.
    Polytope {
        #[arg(long)]
        input: PathBuf,
        /// Check the vertex smoothness condition.
        #[arg(long)]
        check_delzant: bool,
        /// Count interior lattice points.
        #[arg(long)]
        count_interior: bool,
        /// Write an SVG plot to this path.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Compute band cohomology and Bohr-Sommerfeld heights.
    Cech {
        #[arg(long)]
        input: PathBuf,
    },
    /// Run a named suite of exact identity checks.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Toric,
    Old,
    New,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Lifts,
    Connection,
    Blocks,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure { code: EXIT_INPUT, message: e.to_string() }
    }
}

impl From<QuantizeError> for Failure {
    fn from(e: QuantizeError) -> Self {
        let code = match e {
            QuantizeError::UnsupportedHyperbolicMultiplicity { .. } => EXIT_REFUSAL,
            _ => EXIT_DOMAIN,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<CechError> for Failure {
    fn from(e: CechError) -> Self {
        Failure { code: EXIT_DOMAIN, message: e.to_string() }
    }
}

/// Parse arguments, run one command, print its report, and return the
/// process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match cli.cmd {
        Cmd::Quantize { model, input, json } => cmd_quantize(model, &input, json),
        Cmd::Polytope { input, check_delzant, count_interior, svg } => {
            cmd_polytope(&input, check_delzant, count_interior, svg.as_deref())
        }
        Cmd::Cech { input } => cmd_cech(&input),
        Cmd::Verify { suite } => cmd_verify(suite),
    };
    match outcome {
        Ok((report, code)) => {
            print!("{}", report);
            code
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn report_text(report: &QuantizationReport, json: bool) -> Result<String, Failure> {
    if json {
        let line = serde_json::to_string(report)
            .map_err(|e| Failure { code: EXIT_DOMAIN, message: e.to_string() })?;
        return Ok(format!("{}\n", line));
    }
    let mut out = format!("Q = {}\n", report);
    if report.infinite.is_empty() {
        let _ = writeln!(out, "dim = {}", report.finite_dim);
    }
    Ok(out)
}

fn cmd_quantize(model: ModelArg, input: &std::path::Path, json: bool) -> Result<(String, i32), Failure> {
    let desc = SystemDescription::load(input)?;
    let report = match model {
        ModelArg::Toric => quantize_toric(&desc.as_polytope()?)?,
        ModelArg::Old => quantize_old(&desc.as_inventory()?)?,
        ModelArg::New => quantize_new(&desc.as_inventory()?)?,
    };
    Ok((report_text(&report, json)?, EXIT_OK))
}

fn cmd_polytope(
    input: &std::path::Path,
    check_delzant: bool,
    count_interior: bool,
    svg: Option<&std::path::Path>,
) -> Result<(String, i32), Failure> {
    let desc = SystemDescription::load(input)?;
    let p = desc.as_polytope()?;
    let mut out = String::new();
    let _ = writeln!(out, "dim = {}", p.dim());
    let _ = writeln!(out, "vertices = {}", p.vertices().len());
    let _ = writeln!(out, "facets = {}", p.facets().len());
    if check_delzant {
        let verdict = p.validate_delzant();
        if verdict.is_ok() {
            let _ = writeln!(out, "delzant = ok");
        } else {
            let _ = writeln!(out, "delzant = {} violations", verdict.violations.len());
            for v in &verdict.violations {
                let coords: Vec<String> = v.vertex.iter().map(|c| c.to_string()).collect();
                let kind = match &v.kind {
                    ViolationKind::NonSimple { active_facets } => {
                        format!("non-simple ({} active facets)", active_facets)
                    }
                    ViolationKind::NonUnimodular { det } => format!("non-unimodular (det = {})", det),
                };
                let _ = writeln!(out, "violation at ({}): {}", coords.join(", "), kind);
            }
        }
    }
    if count_interior || svg.is_some() {
        let points = p.interior_lattice_points();
        if count_interior {
            let _ = writeln!(out, "interior = {}", points.len());
        }
        if let Some(path) = svg {
            let doc = render_svg(&p, &points)
                .map_err(|e| Failure { code: EXIT_DOMAIN, message: e.to_string() })?;
            std::fs::write(path, doc).map_err(|e| Failure {
                code: EXIT_DOMAIN,
                message: format!("cannot write {}: {}", path.display(), e),
            })?;
            let _ = writeln!(out, "svg = {}", path.display());
        }
    }
    Ok((out, EXIT_OK))
}

fn cmd_cech(input: &std::path::Path) -> Result<(String, i32), Failure> {
    let desc = SystemDescription::load(input)?;
    let cx = desc.as_band_complex()?;
    let summary = cx.cohomology_dimensions()?;
    Ok((format!("{}\n", summary), EXIT_OK))
}

fn cmd_verify(suite: SuiteArg) -> Result<(String, i32), Failure> {
    let checks: Vec<Check> = match suite {
        SuiteArg::Lifts => lift_generator_checks(),
        SuiteArg::Connection => connection_form_checks(),
        SuiteArg::Blocks => block_checks(),
    };
    let mut out = String::new();
    let mut passed = 0usize;
    for c in &checks {
        if c.passed {
            passed += 1;
            let _ = writeln!(out, "ok {}", c.name);
        } else {
            let _ = writeln!(out, "FAIL {}: {}", c.name, c.detail);
        }
    }
    let _ = writeln!(out, "passed {}/{}", passed, checks.len());
    let code = if passed == checks.len() { EXIT_OK } else { EXIT_DOMAIN };
    Ok((out, code))
}
