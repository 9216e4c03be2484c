//! `meandiv` command-line front end.
//!
//! Exit codes: 0 success, 1 I/O or parse error, 2 domain or shape error,
//! 3 a chain link failed, 64 usage error.

mod measure;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use meandiv::distribution::SUM_TOL;
use meandiv::format::{format_sig, to_json_string, CSV_DIGITS};
use meandiv::lab::DEFAULT_TOL;
use meandiv::{
    check_alzer, check_lin_wong, check_lp_chain, check_pittenger_sandwich, check_power_chain,
    parse_distribution, scan_family, smooth, validate, ChainReport, Distribution, ExtendedOrder,
    Family, Format, LogBase,
};
use serde_json::{Map, Value};

use crate::measure::Measure;

const EXIT_IO: u8 = 1;
const EXIT_DOMAIN: u8 = 2;
const EXIT_CHAIN: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "meandiv",
    version,
    about = "Mean-based divergences and inequality checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate divergence measures between two distributions.
    Compute {
        #[command(flatten)]
        input: Input,
        /// Comma-separated measures, e.g. `kl,lp(-2),alpha(0.5),mean(ag)`.
        #[arg(
            long,
            required = true,
            value_delimiter = ',',
            allow_hyphen_values = true
        )]
        measure: Vec<Measure>,
        /// Logarithm base for kl, linwong and jeffreys (default: per measure).
        #[arg(long, value_enum)]
        log_base: Option<BaseArg>,
        #[command(flatten)]
        output: Output,
    },
    /// Check an inequality chain: t1 (lp family), t2 (power family),
    /// t4 (Pittenger sandwich), t6 (Alzer), lw (Lin–Wong bounds).
    Chain {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        theorem: String,
        /// Ascending comma-separated orders for t1 and t2; `inf`/`-inf` allowed.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        orders: Vec<ExtendedOrder>,
        /// Order of the logarithmic mean for t4.
        #[arg(long, allow_hyphen_values = true)]
        r: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Tabulate a family divergence over an evenly spaced order grid.
    Scan {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, allow_hyphen_values = true)]
        from: f64,
        #[arg(long, allow_hyphen_values = true)]
        to: f64,
        #[arg(long)]
        steps: usize,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args)]
struct Input {
    /// First distribution (CSV `index,probability` lines or JSON `{"probs": [...]}`).
    #[arg(long)]
    p: PathBuf,
    /// Second distribution, same support size as `--p`.
    #[arg(long)]
    q: PathBuf,
    /// Rescale inputs to sum to 1 instead of rejecting them.
    #[arg(long)]
    renormalize: bool,
    /// Additive smoothing `(x + eps) / (1 + n eps)` applied after loading.
    #[arg(long)]
    epsilon: Option<f64>,
}

#[derive(Args)]
struct Output {
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum BaseArg {
    #[value(name = "2")]
    Two,
    #[value(name = "e")]
    E,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Lp,
    Power,
}

#[derive(Debug)]
enum Failure {
    Core(Option<PathBuf>, meandiv::Error),
    Usage(String),
    Io(PathBuf, io::Error),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(_, meandiv::Error::Domain { .. } | meandiv::Error::Shape { .. }) => {
                EXIT_DOMAIN
            }
            Failure::Core(_, meandiv::Error::Usage(_)) | Failure::Usage(_) => EXIT_USAGE,
            Failure::Core(_, _) | Failure::Io(..) => EXIT_IO,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Core(Some(path), e) => write!(f, "{}: {e}", path.display()),
            Failure::Core(None, e) => write!(f, "{e}"),
            Failure::Usage(msg) => f.write_str(msg),
            Failure::Io(path, e) => write!(f, "{}: {e}", path.display()),
        }
    }
}

impl From<meandiv::Error> for Failure {
    fn from(e: meandiv::Error) -> Self {
        Failure::Core(None, e)
    }
}

fn load(path: &Path, input: &Input) -> Result<Distribution, Failure> {
    let at = |e| Failure::Core(Some(path.to_path_buf()), e);
    let bytes = fs::read(path).map_err(|e| Failure::Io(path.to_path_buf(), e))?;
    let mut d = parse_distribution(bytes.as_slice(), Format::sniff(&bytes)).map_err(at)?;
    if input.renormalize {
        d = d.renormalized().map_err(at)?;
    }
    let report = validate(&d, SUM_TOL);
    if !report.ok {
        return Err(at(meandiv::Error::Domain {
            context: "distribution".into(),
            index: None,
            message: format!(
                "{}; pass --renormalize to rescale",
                report.messages.join("; ")
            ),
        }));
    }
    if let Some(eps) = input.epsilon {
        d = smooth(&d, eps).map_err(at)?;
    }
    Ok(d)
}

fn load_pair(input: &Input) -> Result<(Distribution, Distribution), Failure> {
    if let Some(eps) = input.epsilon {
        if !(eps > 0.0 && eps.is_finite()) {
            return Err(Failure::Usage(format!(
                "--epsilon must be positive, got {eps}"
            )));
        }
    }
    let p = load(&input.p, input)?;
    let q = load(&input.q, input)?;
    if p.len() != q.len() {
        return Err(meandiv::Error::Shape {
            left: p.len(),
            right: q.len(),
        }
        .into());
    }
    Ok((p, q))
}

fn emit(output: &Output, text: &str) -> Result<(), Failure> {
    match &output.out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(path.clone(), e)),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| Failure::Io(PathBuf::from("<stdout>"), e))
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn compute(
    input: &Input,
    measures: &[Measure],
    base: Option<BaseArg>,
    output: &Output,
) -> Result<(), Failure> {
    let (p, q) = load_pair(input)?;
    let base = base.map(|b| match b {
        BaseArg::Two => LogBase::Two,
        BaseArg::E => LogBase::Natural,
    });
    let mut values = Vec::with_capacity(measures.len());
    for m in measures {
        values.push((m.to_string(), m.evaluate(&p, &q, base)?));
    }
    let text = match output.format {
        OutputFormat::Json => {
            let map: Map<String, Value> = values
                .into_iter()
                .map(|(k, v)| (k, Value::from(v)))
                .collect();
            to_json_string(&map).expect("measure map serializes")
        }
        OutputFormat::Csv => {
            let mut out = String::from("measure,value\n");
            for (k, v) in values {
                out.push_str(&format!(
                    "{},{}\n",
                    csv_field(&k),
                    format_sig(v, CSV_DIGITS)
                ));
            }
            out
        }
    };
    emit(output, &text)
}

fn chain_csv(report: &ChainReport) -> String {
    let mut out = String::from("lhs_name,rhs_name,lhs,rhs,slack,strict_expected,ok\n");
    for l in &report.links {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            csv_field(&l.lhs_name),
            csv_field(&l.rhs_name),
            format_sig(l.lhs, CSV_DIGITS),
            format_sig(l.rhs, CSV_DIGITS),
            format_sig(l.slack, CSV_DIGITS),
            l.strict_expected,
            l.ok
        ));
    }
    out
}

fn chain(
    input: &Input,
    theorem: &str,
    orders: &[ExtendedOrder],
    r: Option<f64>,
    tol: f64,
    output: &Output,
) -> Result<bool, Failure> {
    let needs_orders = || {
        if orders.is_empty() {
            Err(Failure::Usage(format!(
                "--orders is required for {theorem}"
            )))
        } else {
            Ok(())
        }
    };
    match theorem {
        "t1" | "t2" => needs_orders()?,
        "t4" if r.is_none() => return Err(Failure::Usage("--r is required for t4".into())),
        "t4" | "t6" | "lw" => {}
        _ => {
            return Err(Failure::Usage(format!(
                "unknown theorem `{theorem}`; expected one of t1, t2, t4, t6, lw"
            )))
        }
    }
    if !(tol.is_finite() && tol >= 0.0) {
        return Err(Failure::Usage(format!(
            "--tol must be non-negative, got {tol}"
        )));
    }
    let (p, q) = load_pair(input)?;
    let report = match theorem {
        "t1" => check_lp_chain(&p, &q, orders, tol)?,
        "t2" => check_power_chain(&p, &q, orders, tol)?,
        "t4" => check_pittenger_sandwich(&p, &q, r.expect("checked above"), tol)?,
        "t6" => check_alzer(&p, &q, tol)?,
        _ => check_lin_wong(&p, &q, tol)?,
    };
    let text = match output.format {
        OutputFormat::Json => report.to_json(),
        OutputFormat::Csv => chain_csv(&report),
    };
    emit(output, &text)?;
    Ok(report.all_ok)
}

fn scan(
    input: &Input,
    family: FamilyArg,
    from: f64,
    to: f64,
    steps: usize,
    output: &Output,
) -> Result<(), Failure> {
    if steps < 2 {
        return Err(Failure::Usage(format!(
            "--steps must be at least 2, got {steps}"
        )));
    }
    let (p, q) = load_pair(input)?;
    let family = match family {
        FamilyArg::Lp => Family::Lp,
        FamilyArg::Power => Family::Power,
    };
    let table = scan_family(family, &p, &q, from, to, steps)?;
    let text = match output.format {
        OutputFormat::Json => table.to_json(),
        OutputFormat::Csv => table.to_csv(),
    };
    emit(output, &text)
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Compute {
            input,
            measure,
            log_base,
            output,
        } => compute(&input, &measure, log_base, &output).map(|()| true),
        Command::Chain {
            input,
            theorem,
            orders,
            r,
            tol,
            output,
        } => chain(&input, &theorem, &orders, r, tol, &output),
        Command::Scan {
            input,
            family,
            from,
            to,
            steps,
            output,
        } => scan(&input, family, from, to, steps, &output).map(|()| true),
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
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("meandiv: chain check failed");
            ExitCode::from(EXIT_CHAIN)
        }
        Err(failure) => {
            eprintln!("meandiv: error: {failure}");
            ExitCode::from(failure.exit_code())
        }
    }
}
