//! `eulerint`: evaluate closed forms, run the quadrature oracle, compare the
//! two over parameter grids, and export Euler spiral geometry.

mod compare;
mod format;
mod svg;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use eulerint_core::{
    beta_reciprocal, fresnel_general, integrate_beta_reciprocal, integrate_log_sine, integrate_spec,
    pole, sample_polyline, theorem1_cos, theorem2_sin, theorem3_log_sine, BetaSpec, ClothoidParams,
    IntegralSpec, QuadratureResult,
};
use serde_json::json;

pub const EXIT_COMPARISON_FAILURE: u8 = 1;
pub const EXIT_DOMAIN: u8 = 2;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_IO: u8 = 74;

#[derive(Debug, Parser)]
#[command(name = "eulerint", version, about = "Closed-form improper integrals on [0, inf) and their quadrature oracle")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Oracle tolerance.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,

    /// Fractional digits for printed scalars.
    #[arg(long, global = true, default_value_t = 10)]
    digits: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Svg,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the closed-form value of an integral.
    Eval(TheoremArgs),
    /// Integrate numerically with the quadrature oracle.
    Oracle(TheoremArgs),
    /// Compare closed forms against the oracle over a parameter grid.
    Compare(compare::CompareArgs),
    /// Sample the Euler spiral as CSV, SVG or JSON.
    Clothoid(ClothoidArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "verbatim")]
enum Theorem {
    /// x^(n-1) e^(-px) cos(qx)
    #[value(alias = "t1")]
    T1,
    /// x^(n-1) e^(-px) sin(qx)
    #[value(alias = "t2")]
    T2,
    /// e^(-px) sin(qx) / x
    #[value(alias = "t3")]
    T3,
    /// x^(-1/2) e^(-px) sin(qx) and cos(qx)
    #[value(alias = "fresnel")]
    Fresnel,
    /// x^(m-1) / (1 + x^nexp)
    #[value(alias = "beta")]
    Beta,
}

#[derive(Debug, Args)]
struct TheoremArgs {
    #[arg(long, value_enum)]
    theorem: Theorem,
    #[arg(long, allow_negative_numbers = true)]
    n: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    p: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    q: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    m: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    nexp: Option<f64>,
}

#[derive(Debug, Args)]
struct ClothoidArgs {
    #[arg(long, allow_negative_numbers = true)]
    c: f64,
    #[arg(long = "phi-max", allow_negative_numbers = true)]
    phi_max: f64,
    #[arg(long)]
    count: usize,
    /// Write to this file instead of standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(String),
    Comparison(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Domain(_) => EXIT_DOMAIN,
            Failure::Comparison(_) => EXIT_COMPARISON_FAILURE,
            Failure::Io(_) => EXIT_IO,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Domain(m) | Failure::Comparison(m) | Failure::Io(m) => m,
        }
    }
}

impl From<eulerint_core::Error> for Failure {
    fn from(e: eulerint_core::Error) -> Self {
        if e.is_domain() {
            Failure::Domain(e.to_string())
        } else {
            Failure::Comparison(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

pub type CmdResult = Result<(), Failure>;

struct Params<'a> {
    args: &'a TheoremArgs,
}

impl Params<'_> {
    fn get(&self, name: &str) -> Result<f64, Failure> {
        let value = match name {
            "n" => self.args.n,
            "p" => self.args.p,
            "q" => self.args.q,
            "m" => self.args.m,
            "nexp" => self.args.nexp,
            _ => unreachable!("unknown parameter {name}"),
        };
        value.ok_or_else(|| {
            Failure::Usage(format!(
                "--{name} is required for --theorem {:?}",
                self.args.theorem
            ))
        })
    }

    fn all(&self, names: &[&'static str]) -> Result<Vec<(&'static str, f64)>, Failure> {
        names.iter().map(|&n| Ok((n, self.get(n)?))).collect()
    }
}

fn param_names(theorem: Theorem) -> &'static [&'static str] {
    match theorem {
        Theorem::T1 | Theorem::T2 => &["n", "p", "q"],
        Theorem::T3 | Theorem::Fresnel => &["p", "q"],
        Theorem::Beta => &["m", "nexp"],
    }
}

fn emit_named_values(
    out: &mut dyn Write,
    format: Format,
    digits: usize,
    theorem: Theorem,
    params: &[(&'static str, f64)],
    values: &[(&str, f64)],
) -> CmdResult {
    match format {
        Format::Text => {
            if values.len() == 1 {
                writeln!(out, "{}", format::scalar(values[0].1, digits))?;
            } else {
                for (name, v) in values {
                    writeln!(out, "{name} {}", format::scalar(*v, digits))?;
                }
            }
        }
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("theorem".into(), json!(format!("{theorem:?}")));
            let p: serde_json::Map<String, serde_json::Value> =
                params.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
            obj.insert("params".into(), p.into());
            for (name, v) in values {
                obj.insert(name.to_string(), json!(v));
            }
            writeln!(out, "{}", serde_json::Value::Object(obj))?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let header: Vec<&str> = std::iter::once("theorem")
                .chain(params.iter().map(|(k, _)| *k))
                .chain(values.iter().map(|(k, _)| *k))
                .collect();
            w.write_record(&header).map_err(csv_error)?;
            let row: Vec<String> = std::iter::once(format!("{theorem:?}"))
                .chain(params.iter().map(|(_, v)| format::exact(*v)))
                .chain(values.iter().map(|(_, v)| format::exact(*v)))
                .collect();
            w.write_record(&row).map_err(csv_error)?;
            w.flush()?;
        }
        Format::Svg => return Err(Failure::Usage("--format svg is only valid for `clothoid`".into())),
    }
    Ok(())
}

pub fn csv_error(e: csv::Error) -> Failure {
    Failure::Io(e.to_string())
}

fn cmd_eval(cli: &Cli, args: &TheoremArgs, out: &mut dyn Write) -> CmdResult {
    let params = Params { args }.all(param_names(args.theorem))?;
    let v = |name: &str| params.iter().find(|(k, _)| *k == name).map(|(_, v)| *v).unwrap();
    let values: Vec<(&str, f64)> = match args.theorem {
        Theorem::T1 => vec![("value", theorem1_cos(&IntegralSpec::cosine(v("n"), v("p"), v("q")))?)],
        Theorem::T2 => vec![("value", theorem2_sin(&IntegralSpec::sine(v("n"), v("p"), v("q")))?)],
        Theorem::T3 => vec![("value", theorem3_log_sine(v("p"), v("q"))?)],
        Theorem::Fresnel => {
            let (s, c) = fresnel_general(v("p"), v("q"))?;
            vec![("sine", s), ("cosine", c)]
        }
        Theorem::Beta => vec![("value", beta_reciprocal(&BetaSpec::new(v("m"), v("nexp")))?)],
    };
    emit_named_values(out, cli.format, cli.digits, args.theorem, &params, &values)
}

fn cmd_oracle(cli: &Cli, args: &TheoremArgs, out: &mut dyn Write) -> CmdResult {
    let params = Params { args }.all(param_names(args.theorem))?;
    let v = |name: &str| params.iter().find(|(k, _)| *k == name).map(|(_, v)| *v).unwrap();
    let tol = cli.tol;
    let results: Vec<(&str, QuadratureResult)> = match args.theorem {
        Theorem::T1 => vec![("value", integrate_spec(&IntegralSpec::cosine(v("n"), v("p"), v("q")), tol)?)],
        Theorem::T2 => vec![("value", integrate_spec(&IntegralSpec::sine(v("n"), v("p"), v("q")), tol)?)],
        Theorem::T3 => vec![("value", integrate_log_sine(v("p"), v("q"), tol)?)],
        Theorem::Fresnel => vec![
            ("sine", integrate_spec(&IntegralSpec::sine(0.5, v("p"), v("q")), tol)?),
            ("cosine", integrate_spec(&IntegralSpec::cosine(0.5, v("p"), v("q")), tol)?),
        ],
        Theorem::Beta => vec![(
            "value",
            integrate_beta_reciprocal(&BetaSpec::new(v("m"), v("nexp")), tol)?,
        )],
    };
    match cli.format {
        Format::Text => {
            for (name, r) in &results {
                let prefix = if results.len() > 1 { format!("{name} ") } else { String::new() };
                writeln!(
                    out,
                    "{prefix}{} (error estimate {}, {} evaluations, {} segments)",
                    format::scalar(r.value, cli.digits),
                    format::scalar(r.abs_error_estimate, 3),
                    r.function_evals,
                    r.segments
                )?;
            }
        }
        Format::Json => {
            let p: serde_json::Map<String, serde_json::Value> =
                params.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
            let mut obj = serde_json::Map::new();
            obj.insert("theorem".into(), json!(format!("{:?}", args.theorem)));
            obj.insert("params".into(), p.into());
            obj.insert("tol".into(), json!(tol));
            for (name, r) in &results {
                obj.insert(name.to_string(), serde_json::to_value(r).expect("serializable"));
            }
            writeln!(out, "{}", serde_json::Value::Object(obj))?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["theorem", "part", "value", "abs_error_estimate", "function_evals", "segments"])
                .map_err(csv_error)?;
            for (name, r) in &results {
                w.write_record([
                    format!("{:?}", args.theorem),
                    name.to_string(),
                    format::exact(r.value),
                    format::exact(r.abs_error_estimate),
                    r.function_evals.to_string(),
                    r.segments.to_string(),
                ])
                .map_err(csv_error)?;
            }
            w.flush()?;
        }
        Format::Svg => return Err(Failure::Usage("--format svg is only valid for `clothoid`".into())),
    }
    Ok(())
}

fn cmd_clothoid(cli: &Cli, args: &ClothoidArgs, stdout: &mut dyn Write) -> CmdResult {
    let params = ClothoidParams::new(args.c)?;
    let points = sample_polyline(&params, args.phi_max, args.count)?;
    let mut file;
    let out: &mut dyn Write = match &args.output {
        Some(path) => {
            file = BufWriter::new(
                File::create(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?,
            );
            &mut file
        }
        None => stdout,
    };
    match cli.format {
        Format::Text | Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["phi", "s", "x", "y", "r"]).map_err(csv_error)?;
            for p in &points {
                w.write_record([p.phi, p.s, p.x, p.y, p.r].map(format::exact))
                    .map_err(csv_error)?;
            }
            w.flush()?;
        }
        Format::Json => {
            serde_json::to_writer(&mut *out, &points).map_err(|e| Failure::Io(e.to_string()))?;
            writeln!(out)?;
        }
        Format::Svg => out.write_all(svg::render(&points, pole(&params)).as_bytes())?,
    }
    out.flush()?;
    Ok(())
}

fn run(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    if !(cli.tol.is_finite() && cli.tol > 0.0) {
        return Err(Failure::Usage(format!("--tol must be positive, got {}", cli.tol)));
    }
    match &cli.command {
        Command::Eval(args) => cmd_eval(cli, args, out),
        Command::Oracle(args) => cmd_oracle(cli, args, out),
        Command::Compare(args) => compare::run(args, cli.format, cli.tol, out),
        Command::Clothoid(args) => cmd_clothoid(cli, args, out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            let _ = out.flush();
            eprintln!("eulerint: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
