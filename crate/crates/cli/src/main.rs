//! `qpart`: compute p(n) by several exact methods, dump named q-series, run
//! the identity verification suite, and compare methods.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use qpart_core::{catalog, suite, Error, PartitionMethod, DEFAULT_ORACLE_CAP};
use serde_json::json;

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "qpart", version, about = "Exact partition numbers via determinant formulas")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print p(n).
    P {
        n: usize,
        /// euler, brute, det-full, det-mod7 or det-general:N
        #[arg(long, default_value = "euler")]
        method: PartitionMethod,
        #[arg(long)]
        json: bool,
    },
    /// Print coefficients 0..=order of a named series.
    Series {
        name: String,
        #[arg(long, default_value_t = 20)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Shorthand for --format json.
        #[arg(long)]
        json: bool,
    },
    /// Check the q-series identities and cross-method agreement.
    Verify {
        #[arg(long, default_value_t = 50)]
        order: usize,
        /// Comma-separated check names or families (e.g. 6a,14,general).
        #[arg(long)]
        only: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Time each method on p(nmax) after checking they agree.
    Bench {
        #[arg(long, default_value_t = 500)]
        nmax: usize,
        #[arg(long, value_delimiter = ',', default_value = "euler,brute,det-full,det-mod7")]
        methods: Vec<PartitionMethod>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn oracle_cap() -> usize {
    std::env::var("QPART_ORACLE_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_ORACLE_CAP)
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn failure(err: Error) -> ExitCode {
    match err {
        Error::CapExceeded { .. } | Error::InvalidModulus(_) | Error::InvalidResidue { .. } => {
            usage_error(err)
        }
        _ => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_FAILURE)
        }
    }
}

fn cmd_p(n: usize, method: PartitionMethod, as_json: bool) -> ExitCode {
    match method.compute(n, oracle_cap()) {
        Ok(v) if as_json => {
            println!("{}", json!({"n": n, "method": method.to_string(), "value": v.to_string()}));
            ExitCode::SUCCESS
        }
        Ok(v) => {
            println!("{v}");
            ExitCode::SUCCESS
        }
        Err(e) => failure(e),
    }
}

fn cmd_series(name: &str, order: usize, format: Format) -> ExitCode {
    match catalog::series_by_name(name, order) {
        Ok(s) if format == Format::Json => {
            println!("{}", serde_json::to_string(&s).expect("series serialises"));
            ExitCode::SUCCESS
        }
        Ok(s) => {
            let line: Vec<String> = s.coeffs().iter().map(ToString::to_string).collect();
            println!("{}", line.join(" "));
            ExitCode::SUCCESS
        }
        Err(Error::UnknownSeries(n)) => {
            usage_error(format!("unknown series {n:?}; catalog: {}", catalog::describe()))
        }
        Err(e) => failure(e),
    }
}

fn cmd_verify(order: usize, only: Option<&str>, as_json: bool) -> ExitCode {
    let report = suite::verify_all(order, only, oracle_cap());
    if report.entries.is_empty() {
        return usage_error(format!("--only {:?} selects no checks", only.unwrap_or("")));
    }
    if as_json {
        println!("{}", report.to_json());
    } else {
        println!("{report}");
    }
    if report.overall() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILURE)
    }
}

fn cmd_bench(nmax: usize, methods: &[PartitionMethod], as_json: bool) -> ExitCode {
    let cap = oracle_cap();
    if nmax > cap {
        return usage_error(format!("--nmax {nmax} exceeds oracle cap {cap}"));
    }
    let mut rows: Vec<(PartitionMethod, BigInt, f64)> = Vec::new();
    for &m in methods {
        let start = Instant::now();
        match m.compute(nmax, cap) {
            Ok(v) => rows.push((m, v, start.elapsed().as_secs_f64())),
            Err(e) => return failure(e),
        }
    }
    let oracle = match PartitionMethod::Euler.compute(nmax, cap) {
        Ok(v) => v,
        Err(e) => return failure(e),
    };
    let agree = rows.iter().all(|(_, v, _)| *v == oracle);

    if as_json {
        let rows: Vec<_> = rows
            .iter()
            .map(|(m, v, t)| json!({"method": m.to_string(), "value": v.to_string(), "seconds": t}))
            .collect();
        println!("{}", json!({"nmax": nmax, "agree": agree, "rows": rows}));
    } else {
        let width = rows.iter().map(|(m, _, _)| m.to_string().len()).max().unwrap_or(6).max(6);
        println!("{:<width$}  {:>12}  value of p({nmax})", "method", "seconds");
        for (m, v, t) in &rows {
            println!("{:<width$}  {t:>12.6}  {v}", m.to_string());
        }
    }
    if agree {
        ExitCode::SUCCESS
    } else {
        eprintln!("error: methods disagree on p({nmax}); oracle value {oracle}");
        ExitCode::from(EXIT_FAILURE)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::P { n, method, json } => cmd_p(n, method, json),
        Command::Series { name, order, format, json } => {
            cmd_series(&name, order, if json { Format::Json } else { format })
        }
        Command::Verify { order, only, json } => cmd_verify(order, only.as_deref(), json),
        Command::Bench { nmax, methods, json } => cmd_bench(nmax, &methods, json),
    }
}
