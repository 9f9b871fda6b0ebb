//! Command-line front end. Results go to `out`, diagnostics to `err`.
//!
//! Exit codes: `0` success, `2` validation error, `3` failed cross-check.

use std::collections::BTreeMap;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{brute_force_count, DEFAULT_ORACLE_CAP};
use crate::error::{Error, Result};
use crate::growth::{growth_constants, pole_report, GrowthReport, PoleReport, DEFAULT_TOL};
use crate::solver::{dp_counts, generating_function, GfReport, Recurrence};
use crate::system::{build_system, output_accessible, to_dot};
use crate::threshold::Threshold;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;

/// Environment variable fixing the worker count of `table`.
pub const THREADS_ENV: &str = "BOUNDED_CATALAN_THREADS";

/// Largest `m` for which `growth` also solves for the exact dominant pole.
pub const POLE_MAX_M: u32 = 12;

/// Extra terms checked when replaying a recurrence against the DP.
pub const REPLAY_TERMS: usize = 50;

#[derive(Parser, Debug)]
#[command(name = "bounded-catalan", version, about = "132-avoiding permutations with adjacent differences at most m")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a_0..a_n by brute force, the DP and/or the series of A^(m).
    Enumerate {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Dp)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
    },
    /// Print the reduced generating function A^(m)(x).
    Gf {
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Print the linear recurrence read off the reduced denominator.
    Recurrence {
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Print component radii, growth constants and dominant-pole data.
    Growth {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Print the state dependency graph.
    Graph {
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Print growth constants for a list of m such as 2-10,20,50,100.
    Table {
        #[arg(long = "m-list")]
        m_list: String,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Oracle,
    Dp,
    Series,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
    Dot,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Plain => "plain",
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Dot => "dot",
        }
    }
}

/// Parses `2-10,20,50,100` into an ordered list (duplicates kept).
pub fn parse_m_list(s: &str) -> Result<Vec<u32>> {
    let bad = || Error::InvalidMList(s.to_string());
    let parse = |t: &str| t.trim().parse::<u32>().ok().filter(|&m| m >= 1).ok_or_else(bad);
    let mut out = Vec::new();
    for part in s.split(',') {
        match part.split_once('-') {
            Some((a, b)) => {
                let (a, b) = (parse(a)?, parse(b)?);
                if a > b {
                    return Err(bad());
                }
                out.extend(a..=b);
            }
            None => out.push(parse(part)?),
        }
    }
    Ok(out)
}

/// Sequences per method, as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateReport {
    pub m: u32,
    pub n: usize,
    pub methods: BTreeMap<String, Vec<String>>,
    pub verdict: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrowthJson {
    pub growth: GrowthReport,
    pub asymptotics: Option<PoleReport>,
    pub rho_cross_check: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrenceReport {
    pub m: u32,
    pub order: usize,
    pub coeffs: Vec<String>,
    pub valid_from: usize,
    pub bound_d_m: u64,
    pub replay_terms: usize,
    pub replay_ok: bool,
}

/// Result of a command: printed text plus an exit code.
struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Outcome {
        Outcome { text, code: EXIT_OK }
    }
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data serialises") + "\n"
}

fn check_format(cmd: &str, f: Format, allowed: &[Format]) -> Result<()> {
    if allowed.contains(&f) {
        Ok(())
    } else {
        Err(Error::Usage(format!("format {} is not available for {cmd}", f.name())))
    }
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// `a_0..a_n` by brute force.
pub fn oracle_sequence(m: u32, n: usize, cap: usize) -> Result<Vec<BigUint>> {
    let mut out = vec![BigUint::one()];
    for k in 1..=n {
        out.push(brute_force_count(m, k, Threshold::Infinite, Threshold::Infinite, cap)?);
    }
    Ok(out)
}

/// `a_0..a_n` from the series of the reduced generating function.
pub fn series_sequence(m: u32, n: usize) -> Result<Vec<BigUint>> {
    let s = generating_function(m)?.series_integers(n)?;
    Ok(s.into_iter().map(|c| c.to_biguint().expect("counting series is nonnegative")).collect())
}

fn cmd_enumerate(m: u32, n: usize, method: Method, format: Format, cap: usize, err: &mut dyn Write) -> Result<Outcome> {
    check_format("enumerate", format, &[Format::Plain, Format::Json, Format::Csv])?;
    if m == 0 {
        return Err(Error::InvalidBound);
    }
    let mut cols: Vec<(&str, Vec<BigUint>)> = Vec::new();
    let want = |x: Method| method == x || method == Method::All;
    if method == Method::Oracle && n > cap {
        return Err(Error::OracleCapExceeded { n, cap });
    }
    if want(Method::Oracle) {
        if n <= cap {
            cols.push(("oracle", oracle_sequence(m, n, cap)?));
        } else {
            writeln!(err, "oracle skipped: n={n} exceeds the cap {cap}").ok();
        }
    }
    if want(Method::Dp) {
        cols.push(("dp", dp_counts(m, n.max(1))?.unrestricted()[..=n].to_vec()));
    }
    if want(Method::Series) {
        cols.push(("series", series_sequence(m, n)?));
    }
    let agree = cols.windows(2).all(|w| w[0].1 == w[1].1);
    let verdict = (method == Method::All).then_some(if agree { "AGREE" } else { "DISAGREE" });
    let code = if agree { EXIT_OK } else { EXIT_CHECK_FAILED };

    let text = match format {
        Format::Json => json(&EnumerateReport {
            m,
            n,
            methods: cols.iter().map(|(k, v)| (k.to_string(), strings(v))).collect(),
            verdict: verdict.map(str::to_string),
        }),
        Format::Csv => {
            let mut t = String::from("n");
            for (name, _) in &cols {
                t.push(',');
                t.push_str(name);
            }
            t.push('\n');
            for i in 0..=n {
                t.push_str(&i.to_string());
                for (_, v) in &cols {
                    t.push(',');
                    t.push_str(&v[i].to_string());
                }
                t.push('\n');
            }
            t
        }
        _ => {
            let line = |v: &[BigUint]| strings(v).join(",");
            match verdict {
                None => format!("{}\n", line(&cols[0].1)),
                Some(v) if agree => format!("{} {v}\n", line(&cols[0].1)),
                Some(v) => {
                    let mut t = String::new();
                    for (name, seq) in &cols {
                        t.push_str(&format!("{name}: {}\n", line(seq)));
                    }
                    t + v + "\n"
                }
            }
        }
    };
    if method == Method::All {
        let names: Vec<&str> = cols.iter().map(|c| c.0).collect();
        writeln!(err, "compared: {}", names.join(", ")).ok();
    }
    Ok(Outcome { text, code })
}

fn cmd_gf(m: u32, format: Format) -> Result<Outcome> {
    check_format("gf", format, &[Format::Plain, Format::Json])?;
    let gf = generating_function(m)?;
    Ok(Outcome::ok(match format {
        Format::Json => json(&GfReport::new(m, &gf)),
        _ => format!("{gf}\n"),
    }))
}

fn cmd_recurrence(m: u32, format: Format) -> Result<Outcome> {
    check_format("recurrence", format, &[Format::Plain, Format::Json])?;
    let gf = generating_function(m)?;
    let rec = Recurrence::from_rational(&gf);
    let len = rec.valid_from + REPLAY_TERMS;
    let dp: Vec<BigInt> = dp_counts(m, len)?.unrestricted().into_iter().map(BigInt::from).collect();
    let replay = rec.extend(&dp[..rec.valid_from], dp.len());
    let replay_ok = replay.iter().zip(&dp).all(|(r, d)| r.is_integer() && &r.to_integer() == d);
    let coeffs: Vec<String> = rec.lag_coeffs.iter().map(crate::poly::rational_string).collect();
    let report = RecurrenceReport {
        m,
        order: rec.order,
        coeffs,
        valid_from: rec.valid_from,
        bound_d_m: crate::solver::recurrence_order_bound(m),
        replay_terms: REPLAY_TERMS,
        replay_ok,
    };
    let text = match format {
        Format::Json => json(&report),
        _ => {
            let terms: Vec<String> = report
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| c.as_str() != "0")
                .map(|(j, c)| format!("({c})*a[n-{}]", j + 1))
                .collect();
            format!(
                "a[n] = {} for n >= {}\norder {} (bound d_m = {})\nreplay of {} terms against the DP: {}\n",
                if terms.is_empty() { "0".to_string() } else { terms.join(" + ") },
                report.valid_from,
                report.order,
                report.bound_d_m,
                REPLAY_TERMS,
                if replay_ok { "ok" } else { "FAILED" }
            )
        }
    };
    Ok(Outcome {
        text,
        code: if replay_ok { EXIT_OK } else { EXIT_CHECK_FAILED },
    })
}

fn fmt_opt(x: Option<f64>, digits: usize) -> String {
    x.map_or("-".to_string(), |x| format!("{x:.digits$}"))
}

fn cmd_growth(m: u32, tol: f64, format: Format, err: &mut dyn Write) -> Result<Outcome> {
    check_format("growth", format, &[Format::Plain, Format::Json])?;
    let growth = growth_constants(m, tol)?;
    let asymptotics = if (2..=POLE_MAX_M).contains(&m) {
        Some(pole_report(m, &generating_function(m)?, tol)?)
    } else {
        if m > POLE_MAX_M {
            writeln!(err, "dominant-pole data skipped for m > {POLE_MAX_M}").ok();
        }
        None
    };
    let rho_cross_check = asymptotics.as_ref().map(|p| (p.rho.mid() - growth.rho).abs() <= 2.0 * tol + p.rho.width());
    let code = if rho_cross_check == Some(false) { EXIT_CHECK_FAILED } else { EXIT_OK };
    let report = GrowthJson {
        growth,
        asymptotics,
        rho_cross_check,
    };
    let text = match format {
        Format::Json => json(&report),
        _ => {
            let g = &report.growth;
            let mut t = format!(
                "m = {}\nr_U = {}\nr_V = {}\nlambda_U = {}\nlambda_V = {}\nalpha = {:.12}\ndominant = {}\nrho = {:.12}\nlower bound C_(m-1)^(1/(m+1)) = {:.12}\n",
                g.m,
                fmt_opt(g.r_u.map(|b| b.mid()), 12),
                fmt_opt(g.r_v.map(|b| b.mid()), 12),
                fmt_opt(g.lambda_u, 12),
                fmt_opt(g.lambda_v, 12),
                g.alpha,
                g.dominant.map_or("-".to_string(), |d| d.to_string()),
                g.rho,
                g.lower_bound
            );
            if let Some(p) = &report.asymptotics {
                t += &format!(
                    "dominant pole = {:.12}\npole simple = {}\nkappa = {}\nnext real positive pole = {}\n",
                    p.rho.mid(),
                    match p.pole_simple {
                        Some(true) => "yes",
                        _ => "unknown",
                    },
                    fmt_opt(p.kappa, 12),
                    fmt_opt(p.next_pole_modulus, 12)
                );
            }
            if rho_cross_check == Some(false) {
                t += "dominant pole DISAGREES with min(r_U, r_V)\n";
            }
            t
        }
    };
    Ok(Outcome { text, code })
}

fn cmd_graph(m: u32, format: Format) -> Result<Outcome> {
    check_format("graph", format, &[Format::Dot, Format::Plain])?;
    let sys = build_system(m)?;
    if format == Format::Dot {
        return Ok(Outcome::ok(to_dot(&sys)));
    }
    let mut t = format!("m = {m}: {} states, {} edges\n", sys.states().len(), sys.edges().len());
    for c in sys.cyclic_components() {
        let names: Vec<String> = c.members.iter().map(|&s| sys.states()[s].to_string()).collect();
        t += &format!(
            "{} size {} period {} output-accessible {}: {}\n",
            c.tag,
            c.len(),
            c.weighted_period.unwrap_or(0),
            output_accessible(&sys, c),
            names.join(" ")
        );
    }
    Ok(Outcome::ok(t))
}

fn thread_pool() -> Result<rayon::ThreadPool> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let n: usize = v
            .trim()
            .parse()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| Error::Usage(format!("{THREADS_ENV} must be a positive integer, got {v:?}")))?;
        b = b.num_threads(n);
    }
    b.build().map_err(|e| Error::Usage(e.to_string()))
}

fn cmd_table(m_list: &str, tol: f64, format: Format) -> Result<Outcome> {
    check_format("table", format, &[Format::Csv, Format::Plain, Format::Json])?;
    let ms = parse_m_list(m_list)?;
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidTolerance(tol));
    }
    let rows: Vec<GrowthReport> = thread_pool()?.install(|| ms.par_iter().map(|&m| growth_constants(m, tol)).collect::<Result<_>>())?;
    let text = match format {
        Format::Json => json(&rows),
        Format::Plain => {
            let mut t = format!("{:>5}  {:>9}  {:>9}  {:>9}  {:>13}\n", "m", "lambda_U", "lambda_V", "alpha", "C^(1/(m+1))");
            for r in &rows {
                t += &format!(
                    "{:>5}  {:>9}  {:>9}  {:>9.3}  {:>13.3}\n",
                    r.m,
                    fmt_opt(r.lambda_u, 3),
                    fmt_opt(r.lambda_v, 3),
                    r.alpha,
                    r.lower_bound
                );
            }
            t
        }
        _ => {
            let mut t = format!("{}\n", GrowthReport::CSV_HEADER);
            for r in &rows {
                t += &r.csv_row();
                t.push('\n');
            }
            t
        }
    };
    Ok(Outcome::ok(text))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                write!(err, "{text}").ok();
            } else {
                write!(out, "{text}").ok();
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::Enumerate {
            m,
            n,
            method,
            format,
            oracle_cap,
        } => cmd_enumerate(m, n, method, format, oracle_cap, err),
        Command::Gf { m, format } => cmd_gf(m, format),
        Command::Recurrence { m, format } => cmd_recurrence(m, format),
        Command::Growth { m, tol, format } => cmd_growth(m, tol, format, err),
        Command::Graph { m, format } => cmd_graph(m, format),
        Command::Table { m_list, tol, format } => cmd_table(&m_list, tol, format),
    };
    match result {
        Ok(o) => {
            if out.write_all(o.text.as_bytes()).is_err() {
                return EXIT_INVALID;
            }
            o.code
        }
        Err(e) => {
            writeln!(err, "error: {e}").ok();
            EXIT_INVALID
        }
    }
}
