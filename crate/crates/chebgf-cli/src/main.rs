//! Command-line front end: computes the generating functions, prints family
//! members, expands series, runs the verification suite, and times the
//! pipeline. Results go to stdout, diagnostics to stderr; exit code 0 means
//! success, 1 a failed verification, 2 a usage error.

use chebgf::verify::{all_passed, run_named_check, CheckReport, CHECK_NAMES};
use chebgf::{expand_ratfun, generating_function, h_family, h_poly};
use chebgf_cli::{render_json, render_pretty};
use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "chebgf",
    version,
    about = "Exact generating functions for a Chebyshev-like polynomial hierarchy"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Pretty,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute F_s(x,t) = sum_m H_m(x) t^m in canonical reduced form
    Fs {
        /// Level of the hierarchy (1-based)
        #[arg(long)]
        s: usize,
        /// Output format
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Largest level accepted without complaint
        #[arg(long, default_value_t = 8)]
        cap: usize,
    },
    /// Print the family member H_m at level s, descending powers of x
    Hpoly {
        /// Level of the hierarchy (1-based)
        #[arg(long)]
        s: usize,
        /// Index within the family
        #[arg(long)]
        m: usize,
    },
    /// Expand F_s to the first `terms` coefficients, cross-checked against
    /// the direct per-member construction
    Expand {
        /// Level of the hierarchy (1-based)
        #[arg(long)]
        s: usize,
        /// Number of series coefficients to print
        #[arg(long)]
        terms: usize,
        /// Largest level accepted without complaint
        #[arg(long, default_value_t = 8)]
        cap: usize,
    },
    /// Run verification checks; exit code 1 if any fail
    Verify {
        /// Check family to run (repeatable); omit to run all of them
        #[arg(long)]
        check: Vec<String>,
        /// Override the level bound where the check has one
        #[arg(long)]
        s_max: Option<usize>,
        /// Override the index bound where the check has one
        #[arg(long)]
        m_max: Option<usize>,
        /// Output format
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Time the pipeline for s = 1..=s_max
    Bench {
        /// Largest level to time
        #[arg(long, default_value_t = 5)]
        s_max: usize,
        /// Emit machine-readable CSV instead of aligned text
        #[arg(long)]
        csv: bool,
    },
}

fn check_level(s: usize, cap: usize) -> Result<(), ExitCode> {
    if s < 1 || s > cap {
        eprintln!("error: level s={s} out of range (expected 1 <= s <= {cap})");
        return Err(ExitCode::from(2));
    }
    Ok(())
}

fn cmd_fs(s: usize, format: Format, cap: usize) -> ExitCode {
    if let Err(code) = check_level(s, cap) {
        return code;
    }
    let f = generating_function(s);
    match format {
        Format::Pretty => println!("{}", render_pretty(&f)),
        Format::Json => println!("{}", render_json(s, &f)),
    }
    ExitCode::SUCCESS
}

fn cmd_hpoly(s: usize, m: usize) -> ExitCode {
    if s < 1 {
        eprintln!("error: level s={s} out of range (expected s >= 1)");
        return ExitCode::from(2);
    }
    println!("{}", h_poly(s, m));
    ExitCode::SUCCESS
}

fn cmd_expand(s: usize, terms: usize, cap: usize) -> ExitCode {
    if let Err(code) = check_level(s, cap) {
        return code;
    }
    let f = generating_function(s);
    let from_series = expand_ratfun(&f, terms);
    let direct = h_family(s, terms);
    for (m, (a, b)) in from_series.iter().zip(&direct).enumerate() {
        if a != b {
            eprintln!("error: series coefficient t^{m} is {a}, direct construction gives {b}");
            return ExitCode::FAILURE;
        }
        println!("H_{m} = {a}");
    }
    ExitCode::SUCCESS
}

fn cmd_verify(
    checks: &[String],
    s_max: Option<usize>,
    m_max: Option<usize>,
    format: Format,
) -> ExitCode {
    let selected: Vec<String> = if checks.is_empty() {
        CHECK_NAMES.iter().map(|s| s.to_string()).collect()
    } else {
        checks.to_vec()
    };

    let mut reports: Vec<CheckReport> = Vec::new();
    for name in &selected {
        match run_named_check(name, s_max, m_max) {
            Some(batch) => reports.extend(batch),
            None => {
                eprintln!(
                    "error: unknown check {name:?} (expected one of: {})",
                    CHECK_NAMES.join(", ")
                );
                return ExitCode::from(2);
            }
        }
    }

    match format {
        Format::Pretty => {
            for r in &reports {
                println!("{r}");
            }
            let failed = reports.iter().filter(|r| !r.passed).count();
            println!("{} checks, {} failed", reports.len(), failed);
        }
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&reports).expect("serialization succeeds")
            );
        }
    }

    if all_passed(&reports) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn cmd_bench(s_max: usize, csv: bool) -> ExitCode {
    if csv {
        println!("s,millis,deg_t_den,deg_x_den");
    }
    for s in 1..=s_max {
        let t0 = Instant::now();
        let f = generating_function(s);
        let millis = t0.elapsed().as_secs_f64() * 1e3;
        let dt = f.den().deg_t().unwrap_or(0);
        let dx = f.den().deg_x().unwrap_or(0);
        if csv {
            println!("{s},{millis:.3},{dt},{dx}");
        } else {
            println!("s={s}  {millis:>12.3} ms  deg_t(den)={dt}  deg_x(den)={dx}");
        }
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    match Cli::parse().cmd {
        Cmd::Fs { s, format, cap } => cmd_fs(s, format, cap),
        Cmd::Hpoly { s, m } => cmd_hpoly(s, m),
        Cmd::Expand { s, terms, cap } => cmd_expand(s, terms, cap),
        Cmd::Verify {
            check,
            s_max,
            m_max,
            format,
        } => cmd_verify(&check, s_max, m_max, format),
        Cmd::Bench { s_max, csv } => cmd_bench(s_max, csv),
    }
}
