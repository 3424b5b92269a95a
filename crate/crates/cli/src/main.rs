//! `askey`: evaluate families and chart points, tabulate coefficients, run
//! the verification suites and identify recurrences.
//!
//! Every subcommand writes to stdout; diagnostics go to stderr. `verify`
//! exits with status 0 iff the suite passes, every other subcommand iff it
//! completed. The scalar backend defaults to `binary64`, is overridden by the
//! `ASKEY_BACKEND` environment variable, and the `--backend` flag overrides
//! both.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use askey_core::charts::{chart_recurrence, ChartId, ChartPoint};
use askey_core::families::{recurrence_coeffs, FamilyId, FamilyInstance};
use askey_core::harness::{emit_table, identify, run_suite, Sample, SuiteConfig, TableFormat};
use askey_core::polyrec::{evaluate_by_recurrence, RecurrenceCoeffs};
use askey_core::scalar::{Backend, Complex, HighPrec, Real};
use askey_core::{AskeyError, Result};
use clap::{Parser, Subcommand};
use serde_json::json;

#[derive(Debug, Parser)]
#[command(
    name = "askey",
    version,
    about = "The Askey scheme as charted four-manifolds with corners"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate the monic polynomial p_n(x) of a family.
    Eval {
        /// Family tag (`racah`, `wilson`, `hahn`, …).
        #[arg(long)]
        family: FamilyId,
        /// Parameters as `name=value,…`; imaginary parts as `name_im=value`.
        #[arg(long, default_value = "")]
        params: String,
        /// Degree.
        #[arg(long)]
        n: usize,
        /// Evaluation point.
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        /// Scalar backend.
        #[arg(long, env = "ASKEY_BACKEND", default_value = "binary64")]
        backend: Backend,
    },
    /// Evaluate the monic polynomial p_n(x) of a chart point.
    EvalChart {
        /// Chart tag (`racah1`, …, `jacobi2d`).
        #[arg(long)]
        chart: ChartId,
        /// Coordinates, comma separated.
        #[arg(long, value_delimiter = ',')]
        coords: Vec<f64>,
        /// Degree.
        #[arg(long)]
        n: usize,
        /// Evaluation point.
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        /// Scalar backend.
        #[arg(long, env = "ASKEY_BACKEND", default_value = "binary64")]
        backend: Backend,
    },
    /// Tabulate (B_n, C_n) of a chart point.
    Table {
        /// Chart tag.
        #[arg(long)]
        chart: ChartId,
        /// Coordinates, comma separated.
        #[arg(long, value_delimiter = ',')]
        coords: Vec<f64>,
        /// Largest degree index.
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        /// `csv` or `json`.
        #[arg(long, default_value = "csv")]
        format: TableFormat,
        /// Scalar backend.
        #[arg(long, env = "ASKEY_BACKEND", default_value = "binary64")]
        backend: Backend,
    },
    /// Run a verification suite and print its JSON report.
    Verify {
        /// Suite name (`chart-consistency`, `limits`, …).
        suite: String,
        /// Seed of all sampled points.
        #[arg(long)]
        seed: Option<u64>,
        /// Samples per case (suite default if omitted).
        #[arg(long)]
        samples: Option<usize>,
        /// Largest degree index (suite default if omitted).
        #[arg(long)]
        nmax: Option<usize>,
        /// Tolerance (suite and backend default if omitted).
        #[arg(long)]
        tol: Option<f64>,
        /// Scalar backend.
        #[arg(long, env = "ASKEY_BACKEND", default_value = "binary64")]
        backend: Backend,
    },
    /// Fit charts and families to (n, B, C) samples and rank them.
    Identify {
        /// JSON file holding an array of `{"n": int, "B": real, "C": real}`.
        #[arg(long)]
        input: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> std::result::Result<ExitCode, Box<dyn std::error::Error>> {
    match command {
        Command::Eval {
            family,
            params,
            n,
            x,
            backend,
        } => {
            let p = parse_params(family, &params)?;
            let out = match backend {
                Backend::Binary64 => eval_family::<f64>(family, &p, n, x)?,
                Backend::HighPrec => eval_family::<HighPrec>(family, &p, n, x)?,
            };
            emit(&serde_json::to_string_pretty(&out)?)?;
        }
        Command::EvalChart {
            chart,
            coords,
            n,
            x,
            backend,
        } => {
            let out = match backend {
                Backend::Binary64 => eval_chart::<f64>(chart, &coords, n, x)?,
                Backend::HighPrec => eval_chart::<HighPrec>(chart, &coords, n, x)?,
            };
            emit(&serde_json::to_string_pretty(&out)?)?;
        }
        Command::Table {
            chart,
            coords,
            nmax,
            format,
            backend,
        } => {
            let text = match backend {
                Backend::Binary64 => table::<f64>(chart, &coords, nmax, format)?,
                Backend::HighPrec => table::<HighPrec>(chart, &coords, nmax, format)?,
            };
            emit(text.trim_end_matches('\n'))?;
        }
        Command::Verify {
            suite,
            seed,
            samples,
            nmax,
            tol,
            backend,
        } => {
            let mut config = SuiteConfig::new(backend);
            if let Some(seed) = seed {
                config = config.with_seed(seed);
            }
            config.samples = samples;
            config.n_max = nmax;
            config.tol = tol;
            let report = run_suite(&suite, &config)?;
            emit(&serde_json::to_string_pretty(&report)?)?;
            return Ok(if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            });
        }
        Command::Identify { input } => {
            let text = std::fs::read_to_string(&input)
                .map_err(|e| format!("cannot read {}: {e}", input.display()))?;
            let samples: Vec<Sample> = serde_json::from_str(&text)?;
            let result = identify(&samples)?;
            emit(&serde_json::to_string_pretty(&result)?)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Write `text` and a newline to stdout; a closed pipe (`askey … | head`)
/// is not an error.
fn emit(text: &str) -> std::io::Result<()> {
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{text}").and_then(|()| out.flush()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        other => other,
    }
}

/// `f64` nearest to `v`, with `−0` mapped to `0`.
fn plain<T: Real>(v: T) -> f64 {
    let x = v.to_f64();
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

/// Parse `name=value,…` into the family's parameter list; `name_im=value`
/// sets an imaginary part. Every parameter must be given.
fn parse_params(family: FamilyId, text: &str) -> Result<Vec<Complex<f64>>> {
    let names = family.param_names();
    let mut re: Vec<Option<f64>> = vec![None; names.len()];
    let mut im = vec![0.0; names.len()];
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = item.split_once('=').ok_or_else(|| {
            AskeyError::InvalidInput(format!("expected name=value, got `{item}`"))
        })?;
        let value: f64 = value
            .trim()
            .parse()
            .map_err(|_| AskeyError::InvalidInput(format!("`{value}` is not a number")))?;
        let key = key.trim();
        let (base, imag) = match key.strip_suffix("_im") {
            Some(base) => (base, true),
            None => (key, false),
        };
        let i = names.iter().position(|&n| n == base).ok_or_else(|| {
            AskeyError::InvalidInput(format!(
                "{family} has no parameter `{base}` (expected {})",
                names.join(", ")
            ))
        })?;
        if imag {
            im[i] = value;
        } else {
            re[i] = Some(value);
        }
    }
    names
        .iter()
        .zip(re)
        .zip(im)
        .map(|((name, re), im)| {
            re.map(|re| Complex::new(re, im))
                .ok_or_else(|| AskeyError::InvalidInput(format!("missing parameter `{name}`")))
        })
        .collect()
}

fn evaluation<T: Real>(rc: &RecurrenceCoeffs<T>, n: usize, x: f64) -> Result<(T, Vec<(T, T)>)> {
    let values = evaluate_by_recurrence(rc, T::from_f64(x), n)?;
    Ok((values[n], rc.table(n)))
}

fn eval_family<T: Real>(
    family: FamilyId,
    params: &[Complex<f64>],
    n: usize,
    x: f64,
) -> Result<serde_json::Value> {
    let p: Vec<Complex<T>> = params
        .iter()
        .map(|v| Complex::new(T::from_f64(v.re), T::from_f64(v.im)))
        .collect();
    let inst = FamilyInstance::from_params(family, &p)?;
    let (value, rows) = evaluation(&recurrence_coeffs(&inst)?, n, x)?;
    Ok(json!({
        "family": family.name(),
        "n": n,
        "x": x,
        "value": plain(value),
        "value_full": value.to_string(),
        "B": rows.iter().map(|r| plain(r.0)).collect::<Vec<_>>(),
        "C": rows.iter().map(|r| plain(r.1)).collect::<Vec<_>>(),
    }))
}

fn eval_chart<T: Real>(
    chart: ChartId,
    coords: &[f64],
    n: usize,
    x: f64,
) -> Result<serde_json::Value> {
    let p = ChartPoint::new(chart, coords.iter().map(|&v| T::from_f64(v)).collect())?;
    let (value, rows) = evaluation(&chart_recurrence(&p)?, n, x)?;
    Ok(json!({
        "chart": chart.name(),
        "coords": coords,
        "n": n,
        "x": x,
        "value": plain(value),
        "value_full": value.to_string(),
        "B": rows.iter().map(|r| plain(r.0)).collect::<Vec<_>>(),
        "C": rows.iter().map(|r| plain(r.1)).collect::<Vec<_>>(),
    }))
}

fn table<T: Real>(
    chart: ChartId,
    coords: &[f64],
    n_max: usize,
    format: TableFormat,
) -> Result<String> {
    let p = ChartPoint::new(chart, coords.iter().map(|&v| T::from_f64(v)).collect())?;
    emit_table(chart, &p, n_max, format)
}
