//! Command-line front end: exact peak-set counts, polynomials, generating
//! functions, brute-force checks and conjecture scans, with machine-readable
//! output (JSON by default, CSV on request).
//!
//! Exit codes: 0 success, 1 usage or input error, 2 computational refusal
//! (an enumeration request beyond the brute-force cap). `ORACLE_MAX_N`
//! overrides the cap. Output is byte-deterministic for fixed inputs: JSON
//! keys are sorted and big integers are decimal strings.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use peaks::coeffs;
use peaks::counting::{self, count_permutations, difference_triangle, fit_polynomial};
use peaks::equidist;
use peaks::genfunc;
use peaks::oracle;
use peaks::peakcount;
use peaks::peakvalley;
use peaks::{BigInt, Error, PeakSet, SymbolicPeakSet};

#[derive(Parser)]
#[command(name = "peaks", version, about = "Exact enumeration of permutations by peak set")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Also write the rendered output to a file
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for enumeration and scans (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FirstExtremum {
    Peak,
    Valley,
}

#[derive(Subcommand)]
enum Command {
    /// Exact #P(S;n) with its polynomial and power-of-two factors
    Count {
        /// Peak set, e.g. 2,5 or 2,5,n-1 (empty for the peakless class)
        #[arg(long, default_value = "")]
        set: String,
        #[arg(long)]
        n: usize,
    },
    /// Peak polynomial coefficients in a shifted binomial basis
    Poly {
        #[arg(long)]
        set: String,
        /// Basis shift m (coefficients of C(n-m, k))
        #[arg(long, default_value_t = 0)]
        shift: i64,
    },
    /// Coefficients of p(S;n) in the basis shifted by max S
    Coeffs {
        #[arg(long)]
        set: String,
    },
    /// Rational generating function numerator over (1-2x)^m
    Gf {
        #[arg(long)]
        set: String,
    },
    /// Series expansion of the generating function
    Series {
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 30)]
        terms: usize,
    },
    /// Verify the linear recurrence on the exact counts
    RecurrenceCheck {
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 30)]
        max_n: usize,
    },
    /// Brute-force enumeration: one count, or the whole distribution
    Oracle {
        #[arg(long)]
        set: Option<String>,
        #[arg(long)]
        n: usize,
        /// List the matching permutations (small n)
        #[arg(long)]
        list: bool,
    },
    /// Counts over all admissible sets of a given size (or every size)
    Dist {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: Option<usize>,
    },
    /// Peak-and-valley signature count, with an optional polynomial fit
    Pv {
        #[arg(long)]
        set: String,
        #[arg(long, value_enum, default_value_t = FirstExtremum::Peak)]
        first: FirstExtremum,
        #[arg(long)]
        n: Option<usize>,
        /// Fit #PV(S;n) as a polynomial in n and report its degree
        #[arg(long)]
        fit: bool,
    },
    /// Permutations by number of peaks (recurrence table)
    Fpeaks {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: Option<usize>,
    },
    /// Finite-difference fit of p(S;n); n-dependent sets get a degree report
    Fit {
        #[arg(long)]
        set: String,
        #[arg(long)]
        shift: Option<i64>,
        /// Number of consecutive values to sample (constant sets)
        #[arg(long)]
        terms: Option<usize>,
        /// Include the full forward-difference triangle
        #[arg(long)]
        show_table: bool,
    },
    /// Exhaustive conjecture scans
    Scan {
        #[command(subcommand)]
        what: ScanCommand,
    },
    /// Mean part size of peak-set compositions, exact rationals
    MeanPart {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum ScanCommand {
    /// Coefficient nonnegativity over all admissible sets up to a maximum peak
    Positivity {
        #[arg(long, default_value_t = 11)]
        max_peak: usize,
    },
    /// Turán maximizer-pattern checks for every n up to a bound
    Equidist {
        #[arg(long, default_value_t = 13)]
        max_n: usize,
    },
}

struct CliError {
    message: String,
    code: u8,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError { message: message.into(), code: 1 }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => 2,
            _ => 1,
        };
        CliError { message: e.to_string(), code }
    }
}

struct Payload {
    json: Value,
    csv: String,
}

enum SetArg {
    Constant(PeakSet),
    Symbolic(SymbolicPeakSet),
}

fn parse_set(text: &str) -> Result<SetArg, CliError> {
    let mut low = Vec::new();
    let mut high = Vec::new();
    for token in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        if let Some(rest) = token.strip_prefix("n-") {
            let offset: usize = rest
                .parse()
                .map_err(|_| CliError::usage(format!("bad set token '{token}'")))?;
            high.push(offset);
        } else {
            let position: usize = token
                .parse()
                .map_err(|_| CliError::usage(format!("bad set token '{token}'")))?;
            low.push(position);
        }
    }
    low.sort_unstable();
    if high.is_empty() {
        Ok(SetArg::Constant(PeakSet::new(low).map_err(CliError::from)?))
    } else {
        Ok(SetArg::Symbolic(
            SymbolicPeakSet::new(low, high).map_err(CliError::from)?,
        ))
    }
}

fn constant_set(text: &str, n: Option<usize>) -> Result<PeakSet, CliError> {
    match parse_set(text)? {
        SetArg::Constant(s) => Ok(s),
        SetArg::Symbolic(sym) => match n {
            Some(n) => Ok(sym.instantiate(n)?),
            None => Err(CliError::usage(
                "an n-dependent set needs --n here (or use `fit` for the symbolic report)",
            )),
        },
    }
}

fn oracle_cap() -> usize {
    std::env::var("ORACLE_MAX_N")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(oracle::DEFAULT_MAX_N)
}

fn jset(s: &PeakSet) -> Value {
    Value::Array(s.positions().iter().map(|&p| json!(p)).collect())
}

fn jbig(b: &BigInt) -> Value {
    Value::String(b.to_string())
}

fn jbigs(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(jbig).collect())
}

fn csv_field(text: &str) -> String {
    if text.contains(',') || text.contains('"') || text.contains('\n') {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}

fn csv_set(s: &PeakSet) -> String {
    csv_field(
        &s.positions()
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(","),
    )
}

fn run(command: &Command) -> Result<Payload, CliError> {
    match command {
        Command::Count { set, n } => cmd_count(set, *n),
        Command::Poly { set, shift } => cmd_poly(set, *shift),
        Command::Coeffs { set } => cmd_coeffs(set),
        Command::Gf { set } => cmd_gf(set),
        Command::Series { set, terms } => cmd_series(set, *terms),
        Command::RecurrenceCheck { set, max_n } => cmd_recurrence(set, *max_n),
        Command::Oracle { set, n, list } => cmd_oracle(set.as_deref(), *n, *list),
        Command::Dist { n, s } => cmd_dist(*n, *s),
        Command::Pv { set, first, n, fit } => cmd_pv(set, *first, *n, *fit),
        Command::Fpeaks { n, s } => cmd_fpeaks(*n, *s),
        Command::Fit { set, shift, terms, show_table } => {
            cmd_fit(set, *shift, *terms, *show_table)
        }
        Command::Scan { what } => match what {
            ScanCommand::Positivity { max_peak } => cmd_scan_positivity(*max_peak),
            ScanCommand::Equidist { max_n } => cmd_scan_equidist(*max_n),
        },
        Command::MeanPart { n } => cmd_mean_part(*n),
    }
}

fn cmd_count(set: &str, n: usize) -> Result<Payload, CliError> {
    if n == 0 {
        return Err(CliError::usage("--n must be at least 1"));
    }
    let s = constant_set(set, Some(n))?;
    let admissible = counting::is_admissible(&s);
    let count = count_permutations(&s, n);
    let poly_value = counting::peak_polynomial(&s).evaluate(n as i64);
    let power = (n + 1).checked_sub(s.len() + 2).map(|e| BigInt::from(1) << e);
    let json = json!({
        "admissible": admissible,
        "count": jbig(&count),
        "n": n,
        "polynomial_value": jbig(&poly_value),
        "power": power.as_ref().map(jbig).unwrap_or(Value::Null),
        "set": jset(&s),
    });
    let csv = format!(
        "set,n,admissible,polynomial_value,power,count\n{},{},{},{},{},{}\n",
        csv_set(&s),
        n,
        admissible,
        poly_value,
        power.map(|p| p.to_string()).unwrap_or_default(),
        count,
    );
    Ok(Payload { json, csv })
}

fn cmd_poly(set: &str, shift: i64) -> Result<Payload, CliError> {
    let s = constant_set(set, None)?;
    let p = counting::peak_polynomial(&s).rebase(shift);
    let json = json!({
        "coeffs": jbigs(p.coeffs()),
        "degree": p.degree(),
        "set": jset(&s),
        "shift": shift,
    });
    let mut csv = String::from("shift,k,coefficient\n");
    for (k, c) in p.coeffs().iter().enumerate() {
        csv.push_str(&format!("{shift},{k},{c}\n"));
    }
    Ok(Payload { json, csv })
}

fn cmd_coeffs(set: &str) -> Result<Payload, CliError> {
    let s = constant_set(set, None)?;
    let coeffs = coeffs::coefficients(&s)?;
    let json = json!({
        "coeffs": jbigs(&coeffs),
        "m": s.max_position().unwrap_or(0),
        "set": jset(&s),
    });
    let mut csv = String::from("k,coefficient\n");
    for (k, c) in coeffs.iter().enumerate() {
        csv.push_str(&format!("{k},{c}\n"));
    }
    Ok(Payload { json, csv })
}

fn cmd_gf(set: &str) -> Result<Payload, CliError> {
    let s = constant_set(set, None)?;
    let gf = genfunc::generating_function(&s)?;
    let numerator: Vec<Value> = gf
        .numerator()
        .iter()
        .map(|(&k, c)| json!([k, jbig(c)]))
        .collect();
    let json = json!({
        "denominator_exponent": gf.denom_exponent(),
        "numerator": numerator,
        "set": jset(&s),
    });
    let mut csv = String::from("exponent,coefficient,denominator_exponent\n");
    for (k, c) in gf.numerator() {
        csv.push_str(&format!("{k},{c},{}\n", gf.denom_exponent()));
    }
    Ok(Payload { json, csv })
}

fn cmd_series(set: &str, terms: usize) -> Result<Payload, CliError> {
    if terms == 0 {
        return Err(CliError::usage("--terms must be at least 1"));
    }
    let s = constant_set(set, None)?;
    let gf = genfunc::generating_function(&s)?;
    let series = genfunc::series_expand(&gf, terms);
    let json = json!({
        "coefficients": jbigs(&series),
        "set": jset(&s),
        "terms": terms,
    });
    let mut csv = String::from("n,coefficient\n");
    for (i, c) in series.iter().enumerate() {
        csv.push_str(&format!("{},{}\n", i + 1, c));
    }
    Ok(Payload { json, csv })
}

fn cmd_recurrence(set: &str, max_n: usize) -> Result<Payload, CliError> {
    let s = constant_set(set, None)?;
    let m = s
        .max_position()
        .ok_or_else(|| CliError::usage("need a nonempty admissible set"))?;
    let holds = genfunc::recurrence_check(&s, max_n)?;
    let coefficients = genfunc::recurrence_coefficients(m);
    let json = json!({
        "coefficients": jbigs(&coefficients),
        "holds": holds,
        "max_n": max_n,
        "min_n": 2 * m,
        "set": jset(&s),
    });
    let joined = coefficients
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    let csv = format!(
        "set,min_n,max_n,holds,coefficients\n{},{},{},{},{}\n",
        csv_set(&s),
        2 * m,
        max_n,
        holds,
        csv_field(&joined),
    );
    Ok(Payload { json, csv })
}

fn cmd_oracle(set: Option<&str>, n: usize, list: bool) -> Result<Payload, CliError> {
    let cap = oracle_cap();
    match set {
        Some(text) => {
            let s = constant_set(text, Some(n))?;
            let count = oracle::brute_count_capped(&s, n, cap)?;
            let mut json = json!({
                "count": jbig(&count),
                "n": n,
                "set": jset(&s),
            });
            let mut csv = format!("set,n,count\n{},{},{}\n", csv_set(&s), n, count);
            if list {
                let words: Vec<String> = oracle::permutations_with_peak_set_capped(&s, n, cap)?
                    .iter()
                    .map(|p| p.to_string())
                    .collect();
                csv.push_str("permutation\n");
                for w in &words {
                    csv.push_str(&format!("{}\n", csv_field(w)));
                }
                json["permutations"] = json!(words);
            }
            Ok(Payload { json, csv })
        }
        None => {
            let table = oracle::brute_distribution_capped(n, cap)?;
            let entries: Vec<Value> = table
                .iter()
                .map(|(s, c)| json!({"count": jbig(c), "set": jset(s)}))
                .collect();
            let json = json!({
                "distribution": entries,
                "n": n,
                "total": jbig(&table.total()),
            });
            let mut csv = String::from("set,count\n");
            for (s, c) in table.iter() {
                csv.push_str(&format!("{},{}\n", csv_set(s), c));
            }
            Ok(Payload { json, csv })
        }
    }
}

fn cmd_dist(n: usize, s: Option<usize>) -> Result<Payload, CliError> {
    if n == 0 {
        return Err(CliError::usage("--n must be at least 1"));
    }
    let sizes: Vec<usize> = match s {
        Some(s) => vec![s],
        None => (0..=n.saturating_sub(1) / 2).collect(),
    };
    let mut entries = Vec::new();
    let mut csv = String::from("set,s,count\n");
    for size in sizes {
        for (set, count) in equidist::distribution(n, size) {
            csv.push_str(&format!("{},{},{}\n", csv_set(&set), size, count));
            entries.push(json!({"count": jbig(&count), "s": size, "set": jset(&set)}));
        }
    }
    let json = json!({"entries": entries, "n": n});
    Ok(Payload { json, csv })
}

fn cmd_pv(
    set: &str,
    first: FirstExtremum,
    n: Option<usize>,
    fit: bool,
) -> Result<Payload, CliError> {
    let s = constant_set(set, None)?;
    let positions = s.positions();
    let first_is_peak = first == FirstExtremum::Peak;
    let first_name = if first_is_peak { "peak" } else { "valley" };
    if n.is_none() && !fit {
        return Err(CliError::usage("pv needs --n, --fit, or both"));
    }
    let mut json = json!({
        "first": first_name,
        "set": jset(&s),
    });
    let mut count_text = String::new();
    if let Some(n) = n {
        let count = peakvalley::pv_count_capped(positions, first_is_peak, n, oracle_cap())?;
        count_text = count.to_string();
        json["n"] = json!(n);
        json["count"] = jbig(&count);
    }
    let mut fit_cells = (String::new(), String::new(), String::new());
    if fit {
        let report = peakvalley::pv_polynomial_fit(positions, first_is_peak)?;
        json["fit"] = json!({
            "coeffs": jbigs(report.polynomial.coeffs()),
            "degree_matches": report.degree_matches(),
            "expected_degree": report.expected_degree,
            "fitted_degree": report.fitted_degree,
            "n_start": report.n_start,
            "shift": 0,
        });
        fit_cells = (
            report.expected_degree.to_string(),
            report.fitted_degree.map(|d| d.to_string()).unwrap_or_default(),
            report.degree_matches().to_string(),
        );
    }
    let csv = format!(
        "set,first,n,count,expected_degree,fitted_degree,degree_matches\n{},{},{},{},{},{},{}\n",
        csv_set(&s),
        first_name,
        n.map(|v| v.to_string()).unwrap_or_default(),
        count_text,
        fit_cells.0,
        fit_cells.1,
        fit_cells.2,
    );
    Ok(Payload { json, csv })
}

fn cmd_fpeaks(n: usize, s: Option<usize>) -> Result<Payload, CliError> {
    if n == 0 {
        return Err(CliError::usage("--n must be at least 1"));
    }
    let s_max = (n - 1) / 2;
    let table = peakcount::table(s_max, n);
    match s {
        Some(s) => {
            if s > s_max {
                // Above the ceiling every count is zero.
                let json = json!({"f": "0", "from_peak_sets": "0", "n": n, "s": s});
                let csv = format!("n,s,f,from_peak_sets\n{n},{s},0,0\n");
                return Ok(Payload { json, csv });
            }
            let f = table.value(s, n);
            let from_sets = peakcount::from_peak_sets(n, s)?;
            let mut json = json!({
                "f": jbig(f),
                "from_peak_sets": jbig(&from_sets),
                "n": n,
                "s": s,
            });
            if s == 1 {
                json["closed_form"] = jbig(&peakcount::one_peak(n));
            }
            let csv = format!("n,s,f,from_peak_sets\n{n},{s},{f},{from_sets}\n");
            Ok(Payload { json, csv })
        }
        None => {
            let counts: Vec<BigInt> = (0..=s_max).map(|s| table.value(s, n).clone()).collect();
            let total: BigInt = counts.iter().sum();
            let json = json!({
                "counts": jbigs(&counts),
                "n": n,
                "total": jbig(&total),
            });
            let mut csv = String::from("s,count\n");
            for (s, c) in counts.iter().enumerate() {
                csv.push_str(&format!("{s},{c}\n"));
            }
            Ok(Payload { json, csv })
        }
    }
}

fn triangle_json(rows: &[Vec<BigInt>]) -> Value {
    Value::Array(rows.iter().map(|row| jbigs(row)).collect())
}

fn triangle_csv(rows: &[Vec<BigInt>]) -> String {
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

fn cmd_fit(
    set: &str,
    shift: Option<i64>,
    terms: Option<usize>,
    show_table: bool,
) -> Result<Payload, CliError> {
    match parse_set(set)? {
        SetArg::Symbolic(sym) => {
            let report = counting::fit_symbolic(&sym)?;
            let shift = shift.unwrap_or(0);
            let p = report.polynomial.rebase(shift);
            let mut json = json!({
                "coeffs": jbigs(p.coeffs()),
                "degree_matches": report.degree_matches(),
                "expected_degree": report.expected_degree,
                "fitted_degree": report.fitted_degree,
                "high_offsets": sym.high_offsets(),
                "low": sym.low(),
                "n_start": report.n_start,
                "shift": shift,
            });
            let mut csv = format!(
                "n_start,shift,expected_degree,fitted_degree,degree_matches\n{},{},{},{},{}\n",
                report.n_start,
                shift,
                report.expected_degree,
                report
                    .fitted_degree
                    .map(|d| d.to_string())
                    .unwrap_or_default(),
                report.degree_matches(),
            );
            csv.push_str("k,coefficient\n");
            for (k, c) in p.coeffs().iter().enumerate() {
                csv.push_str(&format!("{k},{c}\n"));
            }
            if show_table {
                let degree = report.expected_degree;
                let values: Vec<BigInt> = (report.n_start..report.n_start + degree + 3)
                    .map(|n| report.polynomial.evaluate(n as i64))
                    .collect();
                let rows = difference_triangle(&values);
                json["table"] = triangle_json(&rows);
                csv.push_str(&triangle_csv(&rows));
            }
            Ok(Payload { json, csv })
        }
        SetArg::Constant(s) => {
            let p = counting::peak_polynomial(&s);
            let degree = p.degree().map_or(0, |d| d);
            let n_start = counting::min_n(&s);
            let terms = terms.unwrap_or(9).max(degree + 2);
            let shift = shift.unwrap_or(n_start as i64);
            let values: Vec<BigInt> = (n_start..n_start + terms)
                .map(|n| p.evaluate(n as i64))
                .collect();
            let fitted = fit_polynomial(&values, n_start as i64, shift)?;
            let rows = difference_triangle(&values);
            let mut json = json!({
                "coeffs": jbigs(fitted.coeffs()),
                "degree": fitted.degree(),
                "n_start": n_start,
                "set": jset(&s),
                "shift": shift,
                "values": jbigs(&values),
            });
            let mut csv = format!(
                "set,n_start,shift,degree\n{},{},{},{}\n",
                csv_set(&s),
                n_start,
                shift,
                fitted.degree().map(|d| d.to_string()).unwrap_or_default(),
            );
            csv.push_str("k,coefficient\n");
            for (k, c) in fitted.coeffs().iter().enumerate() {
                csv.push_str(&format!("{k},{c}\n"));
            }
            if show_table {
                json["table"] = triangle_json(&rows);
                csv.push_str(&triangle_csv(&rows));
            }
            Ok(Payload { json, csv })
        }
    }
}

fn cmd_scan_positivity(max_peak: usize) -> Result<Payload, CliError> {
    if max_peak < 2 {
        return Err(CliError::usage("--max-peak must be at least 2"));
    }
    let sets_scanned = counting::admissible_sets_up_to(max_peak).len();
    let violations = coeffs::positivity_scan(max_peak);
    let entries: Vec<Value> = violations
        .iter()
        .map(|v| json!({"k": v.k, "set": jset(&v.set), "value": jbig(&v.value)}))
        .collect();
    let json = json!({
        "max_peak": max_peak,
        "sets_scanned": sets_scanned,
        "violations": entries,
    });
    let mut csv = String::from("set,k,value\n");
    for v in &violations {
        csv.push_str(&format!("{},{},{}\n", csv_set(&v.set), v.k, v.value));
    }
    Ok(Payload { json, csv })
}

fn cmd_scan_equidist(max_n: usize) -> Result<Payload, CliError> {
    if max_n < 2 {
        return Err(CliError::usage("--max-n must be at least 2"));
    }
    let mut results = Vec::new();
    let mut csv = String::from("n,s,max_count,maximizers,all_turan,matches_pattern\n");
    let mut anomaly_count = 0usize;
    for n in 2..=max_n {
        let report = equidist::check_equidistribution(n)?;
        anomaly_count += report.anomalies.len();
        let levels: Vec<Value> = report
            .levels
            .iter()
            .map(|level| {
                let sets: Vec<String> =
                    level.maximizers.iter().map(|m| m.to_string()).collect();
                csv.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    n,
                    level.s,
                    level.max_count,
                    csv_field(&sets.join(" ")),
                    level.all_turan,
                    level.matches_pattern,
                ));
                json!({
                    "all_turan": level.all_turan,
                    "matches_pattern": level.matches_pattern,
                    "max_count": jbig(&level.max_count),
                    "maximizers": level.maximizers.iter().map(jset).collect::<Vec<_>>(),
                    "s": level.s,
                })
            })
            .collect();
        results.push(json!({
            "anomalies": report.anomalies,
            "global_max": jbig(&report.global_max),
            "global_maximizers": report.global_maximizers.iter().map(jset).collect::<Vec<_>>(),
            "global_threes": report.global_threes,
            "levels": levels,
            "n": n,
        }));
    }
    let json = json!({
        "anomaly_count": anomaly_count,
        "max_n": max_n,
        "results": results,
    });
    Ok(Payload { json, csv })
}

fn cmd_mean_part(n: usize) -> Result<Payload, CliError> {
    let stats = equidist::mean_part_size(n)?;
    let json = json!({
        "n": n,
        "permutation_weighted": stats.permutation_weighted.to_string(),
        "unweighted": stats.unweighted.to_string(),
    });
    let csv = format!(
        "n,unweighted,permutation_weighted\n{},{},{}\n",
        n, stats.unweighted, stats.permutation_weighted,
    );
    Ok(Payload { json, csv })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };

    let outcome = match cli.threads {
        Some(threads) => {
            let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
                Ok(pool) => pool,
                Err(e) => {
                    eprintln!("error: cannot build thread pool: {e}");
                    return ExitCode::from(1);
                }
            };
            pool.install(|| run(&cli.command))
        }
        None => run(&cli.command),
    };

    match outcome {
        Ok(payload) => {
            let rendered = match cli.format {
                Format::Json => {
                    let mut text = payload.json.to_string();
                    text.push('\n');
                    text
                }
                Format::Csv => payload.csv,
            };
            print!("{rendered}");
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &rendered) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
