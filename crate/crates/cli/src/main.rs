use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use disclab_core::harness::{self, parse_n_range, render_text, HarnessError, RunRequest, Selection};
use disclab_core::polyring::{MultiPoly, VarId};
use disclab_core::resultant::{self, ResultantError};

#[derive(Parser)]
#[command(name = "disclab", version, about = "Exact discriminant computations and claim verification")]
struct Cli {
    /// Largest polynomial degree any command accepts.
    #[arg(long, env = "DISCLAB_MAX_N", default_value_t = harness::DEFAULT_MAX_N, global = true)]
    max_n: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Run checks and write a verification report.
    Verify {
        /// Degrees: `N`, `A..B` or a comma list. Defaults to each check's range.
        #[arg(long)]
        n: Option<String>,
        /// Comma-separated check names, or `all`.
        #[arg(long, default_value = "all")]
        check: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include opt-in instances (divisibility n = 5, n = 6 specialization).
        #[arg(long)]
        extended: bool,
        /// Record per-unit wall-clock timings (breaks byte-identical output).
        #[arg(long)]
        timings: bool,
    },
    /// Resultant of two polynomials read from JSON files.
    Resultant {
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        g: PathBuf,
        #[arg(long, default_value = "x")]
        var: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// `R(n) = Res(P, P', x)` for the generic monic polynomial of degree n.
    Discriminant {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// `Res(R, dR/da_k, a_k)`.
    Dtilde {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// `V_k`, the discriminant of `P_k`.
    Vk {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(anyhow::Error),
    Claims(usize),
    Runtime(anyhow::Error),
}

impl From<HarnessError> for Failure {
    fn from(e: HarnessError) -> Self {
        Failure::Usage(e.into())
    }
}

impl From<ResultantError> for Failure {
    fn from(e: ResultantError) -> Self {
        match e {
            ResultantError::BadDegree(_) | ResultantError::BadIndex { .. } => Failure::Usage(e.into()),
            _ => Failure::Runtime(e.into()),
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)
            .with_context(|| format!("writing {}", path.display()))
            .map_err(Failure::Runtime),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_poly(p: &MultiPoly, out: Option<&Path>) -> Result<(), Failure> {
    let mut s = serde_json::to_string_pretty(p).map_err(|e| Failure::Runtime(e.into()))?;
    s.push('\n');
    emit(&s, out)
}

fn read_poly(path: &Path) -> Result<MultiPoly, Failure> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(Failure::Usage)?;
    MultiPoly::from_json_str(&text)
        .with_context(|| format!("parsing {}", path.display()))
        .map_err(Failure::Usage)
}

fn check_n(n: usize, max: usize) -> Result<(), Failure> {
    if n > max {
        return Err(HarnessError::AboveMax { n, max }.into());
    }
    Ok(())
}

fn execute(cli: Cli) -> Result<(), Failure> {
    let max_n = cli.max_n;
    match cli.command {
        Command::Verify {
            n,
            check,
            seed,
            samples,
            format,
            out,
            extended,
            timings,
        } => {
            let selection: Selection = check.parse()?;
            let mut req = RunRequest::new(selection, seed, samples);
            if let Some(n) = n {
                req = req.with_ns(parse_n_range(&n)?);
            }
            req.extended = extended;
            req.timings = timings;
            req.max_n = max_n;
            let report = harness::run(&req)?;
            let text = match format {
                Format::Json => report.to_json(),
                Format::Text => render_text(&report),
            };
            emit(&text, out.as_deref())?;
            if report.summary.fail > 0 {
                return Err(Failure::Claims(report.summary.fail));
            }
            Ok(())
        }
        Command::Resultant { f, g, var, out } => {
            let (f, g) = (read_poly(&f)?, read_poly(&g)?);
            if var.is_empty() {
                return Err(Failure::Usage(anyhow!("empty variable name")));
            }
            let v = VarId::named(&var);
            let r = resultant::resultant_in(&f, &g, v)?;
            emit_poly(&r, out.as_deref())
        }
        Command::Discriminant { n, out } => {
            check_n(n, max_n)?;
            emit_poly(&resultant::discriminant_r(n)?, out.as_deref())
        }
        Command::Dtilde { n, k, out } => {
            check_n(n, max_n)?;
            emit_poly(&resultant::d_tilde(n, k)?, out.as_deref())
        }
        Command::Vk { n, k, out } => {
            check_n(n, max_n)?;
            emit_poly(&resultant::v_k(n, k)?, out.as_deref())
        }
    }
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Claims(count)) => {
            eprintln!("{count} claim(s) failed");
            ExitCode::from(1)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
