use std::io::Write;

use clap::{Args, ValueEnum};
use eulerint_core::{closed_form, integrate_spec, IntegralSpec, Oscillator};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::{csv_error, format, CmdResult, Failure, Format};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OscillatorChoice {
    Cos,
    Sin,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    /// n ∈ {0.25, 0.5, 1, 1.5, 2, 3, 5}, p ∈ {0.5, 1, 2}, q ∈ {0, 0.5, 1, 3}.
    Acceptance,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Orders: `a,b,c` or `start:stop:count`.
    #[arg(long, allow_hyphen_values = true)]
    n: Option<String>,
    /// Decay rates, same syntax as --n.
    #[arg(long, allow_hyphen_values = true)]
    p: Option<String>,
    /// Oscillation rates, same syntax as --n.
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    #[arg(long, value_enum, default_value_t = OscillatorChoice::Both)]
    oscillator: OscillatorChoice,
    /// Use a predefined grid instead of --n/--p/--q.
    #[arg(long, value_enum)]
    preset: Option<Preset>,
}

/// Closed form and oracle side by side for one grid point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRecord {
    pub spec: IntegralSpec,
    pub closed_form: f64,
    pub oracle_value: f64,
    pub abs_diff: f64,
    pub oracle_error_estimate: f64,
    pub function_evals: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Row {
    Pass(ComparisonRecord),
    Fail(ComparisonRecord),
    Skipped { spec: IntegralSpec, reason: String },
    Error { spec: IntegralSpec, reason: String },
}

impl Row {
    fn is_failure(&self) -> bool {
        matches!(self, Row::Fail(_) | Row::Error { .. })
    }
}

pub fn parse_axis(name: &str, text: &str) -> Result<Vec<f64>, Failure> {
    let bad = |detail: &str| Failure::Usage(format!("invalid --{name} `{text}`: {detail}"));
    let number = |s: &str| s.trim().parse::<f64>().map_err(|e| bad(&e.to_string()));
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    if text.contains(':') {
        let parts: Vec<&str> = text.split(':').collect();
        let [start, stop, count] = parts[..] else {
            return Err(bad("ranges are start:stop:count"));
        };
        let (start, stop) = (number(start)?, number(stop)?);
        let count: usize = count.trim().parse().map_err(|_| bad("count must be an integer"))?;
        return Ok(match count {
            0 => Vec::new(),
            1 => vec![start],
            _ => (0..count)
                .map(|i| start + (stop - start) * i as f64 / (count - 1) as f64)
                .collect(),
        });
    }
    text.split(',').map(number).collect()
}

fn grid(args: &CompareArgs) -> Result<Vec<IntegralSpec>, Failure> {
    let (ns, ps, qs) = match args.preset {
        Some(Preset::Acceptance) => (
            vec![0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 5.0],
            vec![0.5, 1.0, 2.0],
            vec![0.0, 0.5, 1.0, 3.0],
        ),
        None => {
            let axis = |name: &str, v: &Option<String>| match v {
                Some(text) => parse_axis(name, text),
                None => Err(Failure::Usage(format!("--{name} is required without --preset"))),
            };
            (axis("n", &args.n)?, axis("p", &args.p)?, axis("q", &args.q)?)
        }
    };
    let oscillators: &[Oscillator] = match args.oscillator {
        OscillatorChoice::Cos => &[Oscillator::Cosine],
        OscillatorChoice::Sin => &[Oscillator::Sine],
        OscillatorChoice::Both => &[Oscillator::Cosine, Oscillator::Sine],
    };
    let mut specs = Vec::new();
    for &n in &ns {
        for &p in &ps {
            for &q in &qs {
                for &osc in oscillators {
                    specs.push(IntegralSpec::new(n, p, q, osc));
                }
            }
        }
    }
    if specs.is_empty() {
        return Err(Failure::Usage("empty grid".into()));
    }
    Ok(specs)
}

/// Agreement bound between oracle and closed form.
pub fn agreement_bound(tol: f64, closed: f64) -> f64 {
    (10.0 * tol).max(10.0 * tol * closed.abs())
}

fn compare_one(spec: IntegralSpec, tol: f64) -> Row {
    let closed = match closed_form(&spec) {
        Ok(v) => v,
        Err(e) => return Row::Skipped { spec, reason: e.to_string() },
    };
    match integrate_spec(&spec, tol) {
        Ok(r) => {
            let record = ComparisonRecord {
                spec,
                closed_form: closed,
                oracle_value: r.value,
                abs_diff: (closed - r.value).abs(),
                oracle_error_estimate: r.abs_error_estimate,
                function_evals: r.function_evals,
            };
            if record.abs_diff <= agreement_bound(tol, closed) {
                Row::Pass(record)
            } else {
                Row::Fail(record)
            }
        }
        Err(e) => Row::Error { spec, reason: e.to_string() },
    }
}

const CSV_HEADER: [&str; 10] = [
    "n",
    "p",
    "q",
    "oscillator",
    "closed_form",
    "oracle",
    "abs_diff",
    "error_estimate",
    "function_evals",
    "status",
];

fn csv_row(row: &Row) -> [String; 10] {
    let spec_cells = |s: &IntegralSpec| {
        [format::exact(s.n), format::exact(s.p), format::exact(s.q), s.oscillator.to_string()]
    };
    match row {
        Row::Pass(r) | Row::Fail(r) => {
            let [n, p, q, osc] = spec_cells(&r.spec);
            let status = if matches!(row, Row::Pass(_)) { "pass" } else { "fail" };
            [
                n,
                p,
                q,
                osc,
                format::exact(r.closed_form),
                format::exact(r.oracle_value),
                format::exact(r.abs_diff),
                format::exact(r.oracle_error_estimate),
                r.function_evals.to_string(),
                status.into(),
            ]
        }
        Row::Skipped { spec, reason } | Row::Error { spec, reason } => {
            let [n, p, q, osc] = spec_cells(spec);
            let kind = if matches!(row, Row::Skipped { .. }) { "skipped" } else { "error" };
            [n, p, q, osc, String::new(), String::new(), String::new(), String::new(), String::new(), format!("{kind}: {reason}")]
        }
    }
}

pub fn run(args: &CompareArgs, format: Format, tol: f64, out: &mut dyn Write) -> CmdResult {
    let specs = grid(args)?;
    let rows: Vec<Row> = specs.into_par_iter().map(|s| compare_one(s, tol)).collect();
    for row in &rows {
        if let Row::Skipped { spec, reason } = row {
            eprintln!("eulerint: warning: skipping {spec:?}: {reason}");
        }
    }
    match format {
        Format::Text | Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(CSV_HEADER).map_err(csv_error)?;
            for row in &rows {
                w.write_record(csv_row(row)).map_err(csv_error)?;
            }
            w.flush()?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &rows).map_err(|e| Failure::Io(e.to_string()))?;
            writeln!(out)?;
        }
        Format::Svg => return Err(Failure::Usage("--format svg is only valid for `clothoid`".into())),
    }
    let failed = rows.iter().filter(|r| r.is_failure()).count();
    if failed > 0 {
        return Err(Failure::Comparison(format!("{failed} of {} rows failed", rows.len())));
    }
    Ok(())
}
