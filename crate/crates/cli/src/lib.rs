//! Command line front end for the Hagge circle verifier.
//!
//! Exit codes: 0 when every check passes, 2 when a check fails, 1 for
//! usage and validation errors.

pub mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use hagge::verify::{catalogue, CheckLine, VerificationReport};
use hagge::{make_config, run_all, sample_configs, QuadConfig, Rational};

use crate::render::{render_svg, Figure, RenderSpec, DEFAULT_SIZE, MIN_SIZE};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CHECK_FAILED: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "hagge",
    version,
    about = "Exact verification of the four Hagge circles of a cyclic quadrilateral"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Verify the full check catalogue for one configuration
    Verify(VerifyArgs),
    /// Write an SVG figure of a configuration
    Render(RenderArgs),
    /// Verify seeded random configurations
    Sample(SampleArgs),
}

/// Vertex parameters on xy = 1 (d is derived as 1/(abc)) and the point P.
#[derive(Debug, Args)]
struct ParamArgs {
    #[arg(short = 'a', allow_hyphen_values = true, value_name = "RATIONAL")]
    a: Rational,
    #[arg(short = 'b', allow_hyphen_values = true, value_name = "RATIONAL")]
    b: Rational,
    #[arg(short = 'c', allow_hyphen_values = true, value_name = "RATIONAL")]
    c: Rational,
    #[arg(short = 'p', allow_hyphen_values = true, value_name = "RATIONAL")]
    p: Rational,
}

impl ParamArgs {
    fn config(&self) -> Result<QuadConfig, String> {
        make_config(
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.p.clone(),
        )
        .map_err(|e| e.to_string())
    }
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// Emit the JSON report
    #[arg(long)]
    json: bool,
    /// Report only this catalogue entry
    #[arg(long, value_name = "ID")]
    check: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FigureArg {
    Config,
    Hagge,
}

#[derive(Debug, Args)]
struct RenderArgs {
    #[arg(long, value_enum)]
    figure: FigureArg,
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, value_name = "PATH")]
    out: PathBuf,
    /// Larger image dimension in pixels
    #[arg(long, default_value_t = DEFAULT_SIZE)]
    size: u32,
}

#[derive(Debug, Args)]
struct SampleArgs {
    #[arg(long)]
    count: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = 9)]
    max_mag: u64,
    /// Emit a JSON array of reports
    #[arg(long)]
    json: bool,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::Verify(args) => cmd_verify(&args, out),
        Command::Render(args) => cmd_render(&args, out),
        Command::Sample(args) => cmd_sample(&args, out),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "{msg}");
            EXIT_USAGE
        }
    }
}

fn io_err(e: std::io::Error) -> String {
    format!("write failed: {e}")
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, String> {
    let cfg = args.params.config()?;
    let mut report = run_all(&cfg);
    if let Some(id) = &args.check {
        if !catalogue().iter().any(|c| c == id) {
            return Err(format!("--check: unknown check id `{id}`"));
        }
        report.results.retain(|r| &r.id == id);
    }
    if args.json {
        writeln!(out, "{}", report.to_json()).map_err(io_err)?;
    } else {
        writeln!(out, "{report}").map_err(io_err)?;
    }
    Ok(exit_code(&report))
}

fn exit_code(report: &VerificationReport) -> i32 {
    if report.pass() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn cmd_render(args: &RenderArgs, out: &mut dyn Write) -> Result<i32, String> {
    let figure = match args.figure {
        FigureArg::Config => Figure::Config,
        FigureArg::Hagge => Figure::Hagge,
    };
    let spec = RenderSpec::new(figure, args.size)
        .ok_or_else(|| format!("--size: {} is below the minimum of {MIN_SIZE}", args.size))?;
    let cfg = args.params.config()?;
    let svg = render_svg(&cfg, &spec).map_err(|e| e.to_string())?;
    std::fs::write(&args.out, svg)
        .map_err(|e| format!("--out: cannot write {}: {e}", args.out.display()))?;
    writeln!(out, "wrote {}", args.out.display()).map_err(io_err)?;
    Ok(EXIT_OK)
}

fn cmd_sample(args: &SampleArgs, out: &mut dyn Write) -> Result<i32, String> {
    let configs = sample_configs(args.seed, args.count, args.max_mag).map_err(|e| {
        let flag = match e {
            hagge::verify::SampleError::ZeroCount => "--count",
            hagge::verify::SampleError::MagnitudeTooSmall(_) => "--max-mag",
        };
        format!("{flag}: {e}")
    })?;
    // par_iter keeps seed order in the collected vector
    let reports: Vec<VerificationReport> = configs.par_iter().map(run_all).collect();
    let passed = reports.iter().filter(|r| r.pass()).count();
    if args.json {
        let json = serde_json::to_string(&reports).map_err(|e| e.to_string())?;
        writeln!(out, "{json}").map_err(io_err)?;
    } else {
        for (i, r) in reports.iter().enumerate() {
            let p = &r.params;
            writeln!(
                out,
                "#{:<4} a={} b={} c={} p={}: {}",
                i + 1,
                p.a,
                p.b,
                p.c,
                p.p,
                if r.pass() { "PASS" } else { "FAIL" }
            )
            .map_err(io_err)?;
            for f in r.failures() {
                writeln!(out, "      {}", CheckLine(f)).map_err(io_err)?;
            }
        }
        writeln!(out, "{passed}/{} pass", reports.len()).map_err(io_err)?;
    }
    Ok(if passed == reports.len() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}
