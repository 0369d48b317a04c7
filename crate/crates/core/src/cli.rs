//! The `cobordism` command-line interface.
//!
//! Every failure prints one line `ErrorClass: message` to stderr. Exit code 1
//! means a domain error (non-integral class, missing generator, invalid fan,
//! failed verification) and 2 a usage or parse error.

use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::chern::{Basis, ChernError, ChernVector};
use crate::expr::{parse_class_expr, ExprError};
use crate::numbertheory::{
    choose_torus_rank, eta, gcd_generator_check, kummer_carries, scan_gcd_exceptions, NumberTheoryError, Parity,
};
use crate::realization::{realize, verify_realization, Realization, RealizationError};
use crate::ring::{
    build_generator_system, compose, decompose, survey_generators, ClassCoordinates, RingError, DEFAULT_MAX_DIM,
};
use crate::toric::{blow_up, toric_chern_vector, validate_fan, Fan, ToricError};
use crate::variety::{required_torus_rank, Mode, VarietyError};

#[derive(Parser, Debug)]
#[command(
    name = "cobordism",
    version,
    about = "Complex cobordism classes, Chern numbers and good-variety realizations"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// η(n): p if n+1 is a power of the prime p, else 1
    Eta { n: u64 },
    /// Carries when adding i and j in base p
    Kummer { i: u64, j: u64, p: u64 },
    /// Compare the gcd of generator Milnor numbers in dimension n with η(n)
    GcdCheck {
        n: u64,
        #[arg(long = "min-i", default_value_t = 4)]
        min_i: u64,
    },
    /// List the dimensions up to --max where the gcd check fails
    GcdScan {
        #[arg(long)]
        max: u64,
        #[arg(long = "min-i", default_value_t = 4)]
        min_i: u64,
        #[arg(long, default_value = "even")]
        parity: Parity,
        #[arg(long)]
        json: bool,
    },
    /// Chern numbers of a class expression
    Chern {
        expr: String,
        #[arg(long, default_value = "c")]
        basis: Basis,
    },
    /// Milnor number s_n of a class expression
    Milnor { expr: String },
    /// Toric varieties given by fan files
    #[command(subcommand)]
    Toric(ToricCommand),
    /// Coordinates of a class over products of generators
    Decompose {
        #[command(flatten)]
        class: ClassInput,
        #[arg(long, default_value = "relaxed")]
        mode: Mode,
        #[arg(long = "max-dim", default_value_t = DEFAULT_MAX_DIM)]
        max_dim: u32,
    },
    /// Class with the given generator coordinates
    Compose {
        #[arg(long)]
        coords: PathBuf,
        #[arg(long, default_value = "relaxed")]
        mode: Mode,
        #[arg(long = "max-dim", default_value_t = DEFAULT_MAX_DIM)]
        max_dim: u32,
    },
    /// Generator chosen in each dimension, gaps included
    Generators {
        #[arg(long = "max-dim", default_value_t = DEFAULT_MAX_DIM)]
        max_dim: u32,
        #[arg(long, default_value = "strict")]
        mode: Mode,
    },
    /// Disjoint union of good-variety products representing a class
    Realize {
        #[command(flatten)]
        class: ClassInput,
        #[arg(long, default_value = "strict")]
        mode: Mode,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Check a realization file against a class file
    Verify {
        #[arg(long)]
        realization: PathBuf,
        #[arg(long)]
        class: PathBuf,
    },
    /// Gluing torus rank k for dimension n and the obstruction group
    Obstruction { n: u64 },
    /// Torus rank of a product such as "H(4,5) * Sigma(2)"
    TorusRank { product: String },
}

#[derive(Subcommand, Debug)]
enum ToricCommand {
    /// Chern numbers by fixed-point localization
    Chern {
        #[arg(long)]
        fan: PathBuf,
        #[arg(long, default_value = "c")]
        basis: Basis,
    },
    /// Blow up the fixed point of a maximal cone
    Blowup {
        #[arg(long)]
        fan: PathBuf,
        #[arg(long)]
        cone: usize,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Check that a fan is smooth and complete
    Validate {
        #[arg(long)]
        fan: PathBuf,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct ClassInput {
    /// Class expression such as "0 - CP(2)"
    expr: Option<String>,
    /// Class file in the Chern-number text format
    #[arg(long = "class")]
    file: Option<PathBuf>,
}

/// A failure with its error class and exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub class: &'static str,
    pub message: String,
    pub code: i32,
}

impl CliError {
    fn domain(class: &'static str, message: impl fmt::Display) -> Self {
        CliError { class, message: message.to_string(), code: 1 }
    }

    fn usage(class: &'static str, message: impl fmt::Display) -> Self {
        CliError { class, message: message.to_string(), code: 2 }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.class, self.message)
    }
}

impl From<ExprError> for CliError {
    fn from(e: ExprError) -> Self {
        match e {
            ExprError::Syntax { .. } => CliError::usage("ParseError", e),
            ExprError::UnknownAtom { .. } => CliError::usage("UnknownAtom", e),
            ExprError::DimensionMismatch { .. } => CliError::domain("DimensionMismatch", e),
            ExprError::NotAProduct => CliError::usage("ParseError", e),
            ExprError::Variety(v) => v.into(),
            ExprError::Chern(c) => c.into(),
        }
    }
}

impl From<ChernError> for CliError {
    fn from(e: ChernError) -> Self {
        match e {
            ChernError::Parse { .. } | ChernError::Partition(_) => CliError::usage("ParseError", e),
            ChernError::DimensionMismatch { .. } => CliError::domain("DimensionMismatch", e),
            _ => CliError::domain("ChernError", e),
        }
    }
}

impl From<VarietyError> for CliError {
    fn from(e: VarietyError) -> Self {
        match e {
            VarietyError::Atom(_) => CliError::usage("ParseError", e),
            VarietyError::Toric { source, .. } => source.into(),
            VarietyError::Chern(c) => c.into(),
            _ => CliError::domain("InvalidVariety", e),
        }
    }
}

impl From<ToricError> for CliError {
    fn from(e: ToricError) -> Self {
        match e {
            ToricError::Json(_) => CliError::usage("ParseError", e),
            ToricError::NonIntegral { .. } => CliError::domain("NonIntegral", e),
            _ => CliError::domain("InvalidFan", e),
        }
    }
}

impl From<RingError> for CliError {
    fn from(e: RingError) -> Self {
        match e {
            RingError::StrictModeGap { .. } => CliError::domain("StrictModeGap", e),
            RingError::NonIntegral { .. } => CliError::domain("NonIntegral", e),
            RingError::Chern(c) => c.into(),
            RingError::Variety(v) => v.into(),
            RingError::EmptyBound => CliError::usage("UsageError", e),
            _ => CliError::domain("RingError", e),
        }
    }
}

impl From<RealizationError> for CliError {
    fn from(e: RealizationError) -> Self {
        match e {
            RealizationError::NonIntegral(_) => CliError::domain("NonIntegral", e),
            RealizationError::StrictModeGap(_) => CliError::domain("StrictModeGap", e),
            RealizationError::Parse { .. } => CliError::usage("ParseError", e),
            RealizationError::Ring(r) => r.into(),
            RealizationError::Variety(v) => v.into(),
            RealizationError::Chern(c) => c.into(),
            _ => CliError::domain("RealizationError", e),
        }
    }
}

impl From<NumberTheoryError> for CliError {
    fn from(e: NumberTheoryError) -> Self {
        CliError::usage("UsageError", e)
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::usage("IoError", format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::usage("IoError", format!("{}: {e}", path.display())))
}

fn read_fan(path: &Path) -> Result<Fan, CliError> {
    Ok(Fan::from_json(&read(path)?)?)
}

fn expr_class(text: &str) -> Result<ChernVector, CliError> {
    Ok(parse_class_expr(text)?.evaluate()?)
}

fn load_class(input: &ClassInput) -> Result<ChernVector, CliError> {
    match (&input.expr, &input.file) {
        (Some(e), _) => expr_class(e),
        (None, Some(path)) => Ok(ChernVector::parse(&read(path)?)?),
        (None, None) => Err(CliError::usage("UsageError", "give a class expression or --class <file>")),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    let mut text = String::new();
    let mut line = |s: String| {
        text.push_str(&s);
        text.push('\n');
    };
    match command {
        Command::Eta { n } => line(eta(n).to_string()),
        Command::Kummer { i, j, p } => line(kummer_carries(i, j, p)?.to_string()),
        Command::GcdCheck { n, min_i } => {
            let r = gcd_generator_check(n, min_i)?;
            line(format!("n: {}", r.n));
            line(format!("min-i: {}", r.i_min));
            line(format!("gcd: {}", r.gcd));
            line(format!("eta: {}", r.eta));
            line(format!("pass: {}", yes_no(r.pass)));
            let w: Vec<String> = r.witnesses.iter().map(u64::to_string).collect();
            line(format!("witnesses: {}", w.join(",")));
        }
        Command::GcdScan { max, min_i, parity, json } => {
            let failures = scan_gcd_exceptions(max, min_i, parity)?;
            if json {
                line(serde_json::to_string(&failures).expect("reports serialize"));
            } else {
                for r in failures {
                    line(format!("{} gcd={} eta={}", r.n, r.gcd, r.eta));
                }
            }
        }
        Command::Chern { expr, basis } => text.push_str(&expr_class(&expr)?.to_text(basis)),
        Command::Milnor { expr } => line(expr_class(&expr)?.milnor_number()?.to_string()),
        Command::Toric(ToricCommand::Chern { fan, basis }) => {
            text.push_str(&toric_chern_vector(&read_fan(&fan)?)?.to_text(basis))
        }
        Command::Toric(ToricCommand::Blowup { fan, cone, output }) => {
            let blown = blow_up(&read_fan(&fan)?, cone)?;
            let json = blown.to_json() + "\n";
            match output {
                Some(path) => write_file(&path, &json)?,
                None => text.push_str(&json),
            }
        }
        Command::Toric(ToricCommand::Validate { fan }) => {
            let f = read_fan(&fan)?;
            let violations = validate_fan(&f);
            if !violations.is_empty() {
                let all: Vec<String> = violations.iter().map(ToString::to_string).collect();
                return Err(CliError::domain("InvalidFan", all.join("; ")));
            }
            line(format!("valid: rank {}, {} rays, {} maximal cones", f.rank, f.rays.len(), f.max_cones.len()));
        }
        Command::Decompose { class, mode, max_dim } => {
            let v = load_class(&class)?;
            let gs = build_generator_system(max_dim, mode)?;
            text.push_str(&decompose(&v, &gs)?.to_string());
        }
        Command::Compose { coords, mode, max_dim } => {
            let c = ClassCoordinates::parse(&read(&coords)?)?;
            let gs = build_generator_system(max_dim.max(c.dim()), mode)?;
            text.push_str(&compose(&c, &gs)?.to_text(Basis::Chern));
        }
        Command::Generators { max_dim, mode } => text.push_str(&survey_generators(max_dim, mode)?.to_string()),
        Command::Realize { class, mode, output } => {
            let v = load_class(&class)?;
            let r = realize(&v, mode)?;
            let report = verify_realization(&r, &v);
            let rendered = r.to_text(report.passed());
            match output {
                Some(path) => write_file(&path, &rendered)?,
                None => text.push_str(&rendered),
            }
            if !report.passed() {
                out.write_all(text.as_bytes()).ok();
                return Err(CliError::domain("VerificationFailed", "realization does not pass verification"));
            }
        }
        Command::Verify { realization, class } => {
            let r = Realization::parse(&read(&realization)?)?;
            let v = ChernVector::parse(&read(&class)?)?;
            let report = verify_realization(&r, &v);
            text.push_str(&report.to_string());
            if !report.passed() {
                out.write_all(text.as_bytes()).ok();
                return Err(CliError::domain("VerificationFailed", "see report"));
            }
        }
        Command::Obstruction { n } => {
            let c = choose_torus_rank(n)?;
            line(format!("n: {}", c.n));
            line(format!("k: {}", c.k));
            line(format!("obstruction: pi_{}(O)", c.obstruction_dimension));
            line(format!("trivial: {}", yes_no(c.trivial)));
        }
        Command::TorusRank { product } => {
            let p = parse_class_expr(&product)?.as_product()?;
            line(format!("{}", p.torus_rank()));
            line(format!("required: {}", required_torus_rank(p.dim())));
        }
    }
    out.write_all(text.as_bytes()).map_err(|e| CliError::usage("IoError", e))
}

/// Parses `args` (program name first) and runs the command, writing results
/// to `out`.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> Result<(), CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| match e.kind() {
        clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
            CliError { class: "", message: e.to_string(), code: 0 }
        }
        _ => {
            let rendered = e.to_string();
            // clap's first error line plus any indented continuation lines
            let mut lines = rendered.lines().skip_while(|l| !l.starts_with("error: "));
            let msg = match lines.next() {
                Some(first) => std::iter::once(first.trim_start_matches("error: "))
                    .chain(lines.take_while(|l| l.starts_with(' ')).map(str::trim))
                    .collect::<Vec<_>>()
                    .join(" "),
                None => "missing or invalid subcommand; see --help".to_string(),
            };
            CliError::usage("UsageError", msg)
        }
    })?;
    execute(cli.command, out)
}

/// Entry point for the binary: runs and returns the process exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(args, &mut out) {
        Ok(()) => 0,
        Err(e) if e.code == 0 => {
            print!("{}", e.message);
            0
        }
        Err(e) => {
            eprintln!("{e}");
            e.code
        }
    }
}
