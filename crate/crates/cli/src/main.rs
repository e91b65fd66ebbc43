use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use skewcodes::catalogue::{build_catalogue, CatalogueMode};
use skewcodes::classify::{classify_pair, count_constacyclic_classes};
use skewcodes::codes::LinearCode;
use skewcodes::job::{parse_monic, JobConfig, Mode, RingSpec, DEFAULT_CAP};
use skewcodes::petit::PetitAlgebra;
use skewcodes::verify::{run_verify, VerifyPlan};
use skewcodes::{Error, TwistContext};

const EXIT_INVALID: u8 = 1;
const EXIT_CAP: u8 = 2;
const EXIT_VERIFY: u8 = 3;

#[derive(Parser)]
#[command(name = "skewcodes", version, about = "Skew polycyclic codes over small finite rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Finite field as p,r or p,r,<modulus coefficients>.
    #[arg(long, conflicts_with = "ring")]
    field: Option<String>,
    /// Residue ring Z_n.
    #[arg(long)]
    ring: Option<u32>,
    /// Frobenius exponent s of sigma = x -> x^(p^s).
    #[arg(long, default_value_t = 0)]
    sigma: u32,
    /// Largest enumeration any single step may perform.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u64,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Associativity, nuclei and two-sidedness of S_f.
    AlgebraInfo {
        #[command(flatten)]
        common: Common,
        /// Lower coefficients of the monic f.
        #[arg(long, allow_hyphen_values = true)]
        f: String,
    },
    /// Parameters of the code generated by g in S_f.
    Mindist {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
    },
    /// Classify the pair of code classes C_f, C_h.
    CheckEquiv {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        h: String,
        /// Only consider tau = id.
        #[arg(long)]
        chen: bool,
        /// Restrict the isometry search to this monomial degree.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Count Chen classes of constacyclic families by associativity.
    CountClasses {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        m: usize,
    },
    /// Emit the JSON-lines catalogue of classes and codes.
    Catalogue {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        m: usize,
        /// Only t^m - a with a a unit.
        #[arg(long)]
        constacyclic: bool,
    },
    /// Run the built-in cross-check suites.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Restrict to this degree.
        #[arg(long)]
        m: Option<usize>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::EnumerationCapExceeded { .. } | Error::RingTooLarge { .. } => EXIT_CAP,
            _ => EXIT_INVALID,
        };
        Failure { code, message: e.to_string() }
    }
}

fn config(mode: Mode, common: &Common, m: Option<usize>) -> Result<JobConfig, Failure> {
    let ring = match (&common.field, common.ring) {
        (Some(text), _) => RingSpec::parse_field(text)?,
        (None, Some(n)) => RingSpec::Residue { n },
        (None, None) => {
            return Err(Failure { code: EXIT_INVALID, message: "one of --field or --ring is required".into() })
        }
    };
    let mut cfg = JobConfig::new(mode, ring);
    cfg.sigma_exp = common.sigma;
    cfg.m = m;
    cfg.cap = common.cap;
    cfg.out = common.out.clone();
    Ok(cfg)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    let io_err = |e: std::io::Error| Failure { code: EXIT_INVALID, message: e.to_string() };
    match out {
        Some(path) => fs::write(path, text).map_err(io_err),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(io_err),
    }
}

fn emit_json(out: &Option<PathBuf>, value: &Value) -> Result<(), Failure> {
    emit(out, &format!("{value}\n"))
}

fn twist_and_f(cfg: &JobConfig, f: &str) -> Result<(Arc<TwistContext>, skewcodes::SkewPoly), Failure> {
    let tw = cfg.twist()?;
    let f = parse_monic(&tw, f)?;
    Ok((tw, f))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::AlgebraInfo { common, f } => {
            let cfg = config(Mode::AlgebraInfo, &common, None)?;
            let (_, f) = twist_and_f(&cfg, &f)?;
            let report = PetitAlgebra::new(f)?.probe_structure_with_cap(cfg.cap)?;
            emit_json(&cfg.out, &report.to_json())
        }
        Command::Mindist { common, f, g } => {
            let cfg = config(Mode::MinDist, &common, None)?;
            let (tw, f) = twist_and_f(&cfg, &f)?;
            let g = parse_monic(&tw, &g)?;
            let code = LinearCode::build(Arc::new(PetitAlgebra::new(f)?), &g)?;
            emit_json(&cfg.out, &code.mindist_json(cfg.cap)?)
        }
        Command::CheckEquiv { common, f, h, chen, k } => {
            let cfg = config(Mode::CheckEquiv, &common, None)?;
            let (tw, f) = twist_and_f(&cfg, &f)?;
            let h = parse_monic(&tw, &h)?;
            let ks = k.map(|k| vec![k]);
            let mut result = classify_pair(&f, &h, ks.as_deref(), cfg.cap)?;
            if chen {
                result = result.chen_only();
            }
            emit_json(&cfg.out, &result.to_json(tw.ring()))
        }
        Command::CountClasses { common, m } => {
            let cfg = config(Mode::CountClasses, &common, Some(m))?;
            let tw = cfg.twist()?;
            let counts = count_constacyclic_classes(tw.ring(), tw.sigma(), cfg.require_m()?, cfg.cap)?;
            emit_json(&cfg.out, &counts.to_json())
        }
        Command::Catalogue { common, m, constacyclic } => {
            let cfg = config(Mode::Catalogue, &common, Some(m))?;
            let tw = cfg.twist()?;
            let mode = if constacyclic { CatalogueMode::Constacyclic } else { CatalogueMode::All };
            let cat = build_catalogue(&tw, cfg.require_m()?, mode, cfg.cap)?;
            emit(&cfg.out, &cat.to_json_lines())
        }
        Command::Verify { common, m } => {
            let mut plan = VerifyPlan::default();
            if let Some(text) = &common.field {
                match RingSpec::parse_field(text)? {
                    RingSpec::Field { p, r, .. } => plan.fields = vec![(p, r)],
                    RingSpec::Residue { .. } => unreachable!("parse_field yields fields"),
                }
            }
            if let Some(m) = m {
                plan.m_values = vec![m];
            }
            if common.cap != DEFAULT_CAP {
                plan.cap = common.cap;
            }
            let report = run_verify(&plan)?;
            emit_json(&common.out, &report.to_json())?;
            if report.success() {
                Ok(())
            } else {
                Err(Failure { code: EXIT_VERIFY, message: "verification failed".into() })
            }
        }
    }
}

fn threads(cli: &Cli) -> Option<usize> {
    match &cli.command {
        Command::AlgebraInfo { common, .. }
        | Command::Mindist { common, .. }
        | Command::CheckEquiv { common, .. }
        | Command::CountClasses { common, .. }
        | Command::Catalogue { common, .. }
        | Command::Verify { common, .. } => common.threads,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = threads(&cli) {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INVALID);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
