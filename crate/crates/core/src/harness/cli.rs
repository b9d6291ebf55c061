//! Command line front end. [`run`] takes the arguments and two sinks and
//! returns the exit code, so it can be driven from tests.

use std::ffi::OsString;
use std::io::Write;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use super::{run_suite, summary, Limits, Suite};
use crate::closed::family_closed;
use crate::error::Error;
use crate::groups::{Budget, Class, CycleType};
use crate::oracle::{Family, FamilySpec, Oracle};
use crate::poly::{gamma_decompose, gamma_decompose_q, Poly, Var, VarMode};

#[derive(Parser, Debug)]
#[command(name = "excgamma", version, about = "Excedance Eulerian polynomials and their gamma expansions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the polynomial of a family.
    Compute {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the gamma expansion of a family.
    Gamma {
        #[command(flatten)]
        target: Target,
        /// Defaults to `biv` for `(s,t)` families, `uni` for `t` families
        /// and `q` for q-refined ones.
        #[arg(long, value_enum)]
        mode: Option<Mode>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Largest n for every group kind.
        #[arg(long)]
        max_n: Option<usize>,
        /// Override for the hyperoctahedral group.
        #[arg(long)]
        max_n_b: Option<usize>,
        /// Override for the even-signed group.
        #[arg(long)]
        max_n_d: Option<usize>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Append wall-clock time to every line.
        #[arg(long)]
        timings: bool,
    },
    /// One family over a range of n, as CSV or JSON.
    Table {
        #[arg(long)]
        family: String,
        /// Inclusive, written `a..b`.
        #[arg(long)]
        n_range: String,
        #[arg(long, default_value = "all")]
        class: String,
        #[arg(long, value_enum, default_value_t = Out::Csv)]
        out: Out,
        #[arg(long, value_enum, default_value_t = Engine::Auto)]
        engine: Engine,
        #[arg(long)]
        budget: Option<u128>,
    },
    /// Excedance polynomial of a conjugacy class.
    Conjugacy {
        /// Cycle type, e.g. `3,2,2`.
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Engine::Auto)]
        engine: Engine,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        budget: Option<u128>,
    },
}

#[derive(clap::Args, Debug)]
struct Target {
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "all")]
    class: String,
    #[arg(long, value_enum, default_value_t = Engine::Auto)]
    engine: Engine,
    /// Largest number of elements the oracle may visit.
    #[arg(long)]
    budget: Option<u128>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Engine {
    /// Closed form where one exists, enumeration otherwise.
    Auto,
    Oracle,
    Closed,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Out {
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Uni,
    Biv,
    Q,
}

/// How a command ended, short of an I/O error.
enum Exit {
    Ok,
    /// The command ran and found a failure.
    Failed,
}

type CmdResult = Result<Exit, CliError>;

enum CliError {
    /// Bad input from the user; exit code 2.
    Usage(String),
    /// Anything else; exit code 1.
    Runtime(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        match e {
            Error::InvalidSpec(_)
            | Error::UnsupportedClass { .. }
            | Error::UndefinedStatistic { .. }
            | Error::InvalidWindow { .. }
            | Error::DuplicateEntries(_)
            | Error::NonIncreasingLetters => CliError::Usage(e.to_string()),
            _ => CliError::Runtime(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError::Runtime(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> CliError {
        CliError::Runtime(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> CliError {
        CliError::Runtime(e.to_string())
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code: 0 on success, 1 on a failed check or runtime error, 2 on a
/// usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Compute { target, format } => compute(&target, format, out),
        Command::Gamma { target, mode, format } => gamma(&target, mode, format, out),
        Command::Verify {
            suite,
            max_n,
            max_n_b,
            max_n_d,
            jobs,
            timings,
        } => verify(&suite, max_n, max_n_b, max_n_d, jobs, timings, out),
        Command::Table {
            family,
            n_range,
            class,
            out: fmt,
            engine,
            budget,
        } => table(&family, &n_range, &class, fmt, engine, budget, out),
        Command::Conjugacy {
            lambda,
            engine,
            format,
            budget,
        } => conjugacy(&lambda, engine, format, budget, out),
    };
    match result {
        Ok(Exit::Ok) => 0,
        Ok(Exit::Failed) => 1,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(CliError::Runtime(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn oracle(budget: Option<u128>) -> Oracle {
    Oracle {
        budget: budget.map(Budget).unwrap_or(Budget::DEFAULT),
        parallel: true,
    }
}

fn evaluate(spec: &FamilySpec, engine: Engine, budget: Option<u128>) -> Result<Poly, Error> {
    match engine {
        Engine::Oracle => oracle(budget).family_poly(spec),
        Engine::Closed => family_closed(spec),
        Engine::Auto => match spec.family {
            Family::QRefined(_) => oracle(budget).family_poly(spec),
            _ => family_closed(spec),
        },
    }
}

fn parse_spec(family: &str, n: usize, class: &str) -> Result<FamilySpec, Error> {
    let spec = FamilySpec::new(Family::from_str(family)?, n, Class::from_str(class)?);
    spec.pairing()?;
    Ok(spec)
}

fn print_poly(p: &Poly, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    match format {
        Format::Text => writeln!(out, "{p}")?,
        Format::Json => writeln!(out, "{}", serde_json::to_string(p)?)?,
    }
    Ok(())
}

fn compute(target: &Target, format: Format, out: &mut dyn Write) -> CmdResult {
    let spec = parse_spec(&target.family, target.n, &target.class)?;
    let p = evaluate(&spec, target.engine, target.budget)?;
    print_poly(&p, format, out)?;
    Ok(Exit::Ok)
}

fn default_mode(family: &Family, p: &Poly) -> Mode {
    if matches!(family, Family::QRefined(_)) {
        Mode::Q
    } else if p.index_of(Var::S).is_some() {
        Mode::Biv
    } else {
        Mode::Uni
    }
}

/// A gamma expansion in its printable forms.
struct Expanded {
    json: Value,
    text: String,
    cos: String,
    positive: bool,
}

macro_rules! expanded {
    ($g:expr) => {{
        let g = $g;
        Expanded {
            json: g.to_json(),
            text: g.to_string(),
            cos: g.center_of_symmetry().to_string(),
            positive: g.all_gammas_nonnegative(),
        }
    }};
}

fn expansion(p: &Poly, mode: Mode) -> Result<Expanded, Error> {
    Ok(match mode {
        Mode::Q => expanded!(gamma_decompose_q(p)?),
        Mode::Biv => expanded!(gamma_decompose(p, VarMode::Bivariate)?),
        Mode::Uni => {
            let p = if p.index_of(Var::S).is_some() {
                p.substitute_one(Var::S)?
            } else {
                p.clone()
            };
            expanded!(gamma_decompose(&p, VarMode::Univariate)?)
        }
    })
}

fn gamma(target: &Target, mode: Option<Mode>, format: Format, out: &mut dyn Write) -> CmdResult {
    let spec = parse_spec(&target.family, target.n, &target.class)?;
    let p = evaluate(&spec, target.engine, target.budget)?;
    let mode = mode.unwrap_or_else(|| default_mode(&spec.family, &p));
    match expansion(&p, mode) {
        Ok(g) => {
            match format {
                Format::Text => writeln!(out, "{}", g.text)?,
                Format::Json => writeln!(out, "{}", g.json)?,
            }
            Ok(Exit::Ok)
        }
        Err(e @ (Error::NotPalindromic { .. } | Error::NotHomogeneous { .. } | Error::ZeroPolynomial)) => {
            match format {
                Format::Text => writeln!(out, "{e}")?,
                Format::Json => writeln!(out, "{}", json!({ "error": e.to_string() }))?,
            }
            Ok(Exit::Failed)
        }
        Err(e) => Err(e.into()),
    }
}

fn verify(
    suite: &str,
    max_n: Option<usize>,
    max_n_b: Option<usize>,
    max_n_d: Option<usize>,
    jobs: usize,
    timings: bool,
    out: &mut dyn Write,
) -> CmdResult {
    let suite = Suite::from_str(suite)?;
    let mut limits = max_n.map(Limits::uniform).unwrap_or_default();
    if let Some(b) = max_n_b {
        limits.b = b;
    }
    if let Some(d) = max_n_d {
        limits.d = d;
    }
    let results = run_suite(suite, limits, jobs.max(1));
    for r in &results {
        writeln!(out, "{}", r.render(timings))?;
    }
    writeln!(out, "{}", summary(&results))?;
    Ok(if results.iter().any(|r| r.failed()) {
        Exit::Failed
    } else {
        Exit::Ok
    })
}

fn parse_range(s: &str) -> Result<(usize, usize), Error> {
    let bad = || Error::InvalidSpec(format!("n-range must look like `a..b`, got `{s}`"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let (a, b) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn table(
    family: &str,
    n_range: &str,
    class: &str,
    fmt: Out,
    engine: Engine,
    budget: Option<u128>,
    out: &mut dyn Write,
) -> CmdResult {
    let (lo, hi) = parse_range(n_range)?;
    let mut rows = Vec::new();
    for n in lo..=hi {
        let spec = parse_spec(family, n, class)?;
        let p = evaluate(&spec, engine, budget)?;
        let mode = default_mode(&spec.family, &p);
        rows.push((spec, p.clone(), expansion(&p, mode).ok()));
    }
    match fmt {
        Out::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|(spec, p, g)| {
                    json!({
                        "family": spec.family.name(),
                        "class": spec.class.name(),
                        "n": spec.n,
                        "poly": p,
                        "coefficients": p.t_coefficients().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                        "gamma": g.as_ref().map(|g| g.json.clone()),
                        "cos": g.as_ref().map(|g| g.cos.clone()),
                        "gamma_positive": g.as_ref().is_some_and(|g| g.positive),
                    })
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&items)?)?;
        }
        Out::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "family",
                "class",
                "n",
                "k",
                "coeff",
                "gamma_index",
                "gamma_value",
                "cos",
                "gamma_positive",
            ])?;
            for (spec, p, g) in &rows {
                let coeffs = p.t_coefficients();
                let gammas: Vec<String> = g
                    .as_ref()
                    .and_then(|g| g.json["gammas"].as_array().cloned())
                    .unwrap_or_default()
                    .iter()
                    .map(|x| match x {
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    })
                    .collect();
                let cos = g.as_ref().map(|g| g.cos.clone()).unwrap_or_default();
                let positive = g.as_ref().is_some_and(|g| g.positive).to_string();
                let name = spec.family.name();
                let n = spec.n.to_string();
                for k in 0..coeffs.len().max(gammas.len()).max(1) {
                    let coeff = coeffs.get(k).map(|c| c.to_string()).unwrap_or_default();
                    let (gi, gv) = match gammas.get(k) {
                        Some(v) => (k.to_string(), v.clone()),
                        None => (String::new(), String::new()),
                    };
                    let k = if k < coeffs.len() { k.to_string() } else { String::new() };
                    w.write_record([
                        name.as_str(),
                        spec.class.name(),
                        &n,
                        &k,
                        &coeff,
                        &gi,
                        &gv,
                        &cos,
                        &positive,
                    ])?;
                }
            }
            let bytes = w.into_inner().map_err(|e| CliError::Runtime(e.to_string()))?;
            out.write_all(&bytes)?;
        }
    }
    Ok(Exit::Ok)
}

fn conjugacy(lambda: &str, engine: Engine, format: Format, budget: Option<u128>, out: &mut dyn Write) -> CmdResult {
    let lambda = CycleType::from_str(lambda)?;
    let n = lambda.n();
    let spec = FamilySpec::new(Family::ConjExc(lambda), n, Class::All);
    let p = evaluate(&spec, engine, budget)?;
    print_poly(&p, format, out)?;
    Ok(Exit::Ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut argv = vec!["excgamma"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn compute_dexc6_plus() {
        let (code, out, _) = call(&["compute", "--family", "dexc", "--n", "6", "--class", "plus"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("s^6 + 176*s^5*t + 2647*s^4*t^2 + 5872*s^3*t^3"), "{out}");
    }

    #[test]
    fn gamma_aexc7_minus() {
        let (code, out, _) = call(&["gamma", "--family", "aexc", "--n", "7", "--class", "minus"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "r=1 n=6 cos=3 gammas=(63, 336, 168)");
    }

    #[test]
    fn gamma_reports_non_palindromic() {
        let (code, out, _) = call(&["gamma", "--family", "aexc", "--n", "4", "--class", "plus"]);
        assert_eq!(code, 1);
        assert!(out.contains("palindromic"), "{out}");
    }

    #[test]
    fn conjugacy_two_two() {
        for engine in ["oracle", "closed"] {
            let (code, out, _) = call(&["conjugacy", "--lambda", "2,2", "--engine", engine]);
            assert_eq!(code, 0);
            assert_eq!(out.trim(), "3*t^2");
        }
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call(&["compute", "--family", "nope", "--n", "3"]).0, 2);
        assert_eq!(call(&["compute", "--n", "3"]).0, 2);
        assert_eq!(call(&["verify", "--suite", "typeZ"]).0, 2);
        assert_eq!(call(&["table", "--family", "aexc", "--n-range", "5..2"]).0, 2);
    }

    #[test]
    fn table_csv_header_and_rows() {
        let (code, out, _) = call(&["table", "--family", "aexc", "--n-range", "3..3", "--class", "minus"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "family,class,n,k,coeff,gamma_index,gamma_value,cos,gamma_positive");
        assert_eq!(lines[1], "aexc,minus,3,0,0,0,3,1,true");
        assert_eq!(lines[2], "aexc,minus,3,1,3,,,1,true");
    }

    #[test]
    fn range_parsing() {
        assert_eq!(parse_range("2..5").unwrap(), (2, 5));
        assert_eq!(parse_range("2..=5").unwrap(), (2, 5));
        assert!(parse_range("5").is_err());
    }
}
