use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;
use trivalent::diagram::{DiagramError, DiagramRecord, Morphism};
use trivalent::rewrite::{EvalResult, Evaluator, Mode, RewriteError, RuleSet};
use trivalent::scalar::{parse_rational, RatFunc, Rational, ScalarError};
use trivalent::verify::{self, Target};

#[derive(Parser)]
#[command(
    name = "trivalent",
    version,
    about = "Trivalent diagram calculus: evaluation and verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = parse_target)]
        target: Target,
    },
    /// Evaluate a closed diagram.
    Eval {
        file: PathBuf,
        #[command(flatten)]
        rules: RuleArgs,
        /// Specialize the loop value at this rational.
        #[arg(long, value_parser = parse_rat)]
        at: Option<Rational>,
    },
    /// Pair two diagrams with the same profile.
    Pair {
        file_f: PathBuf,
        file_g: PathBuf,
        #[command(flatten)]
        rules: RuleArgs,
        #[arg(long, value_parser = parse_rat)]
        at: Option<Rational>,
    },
}

#[derive(clap::Args)]
struct RuleArgs {
    #[arg(long, value_enum, default_value_t = ModeArg::F)]
    mode: ModeArg,
    #[arg(long, value_parser = parse_rat, default_value = "1")]
    alpha: Rational,
    #[arg(long, default_value_t = 6)]
    ihx_depth: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    #[value(name = "T")]
    T,
    #[value(name = "F")]
    F,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Record { path: String, source: DiagramError },
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

fn parse_target(s: &str) -> Result<Target, String> {
    s.parse().map_err(|e: verify::UnknownTarget| e.to_string())
}

fn parse_rat(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

impl RuleArgs {
    fn evaluator(&self) -> Result<Evaluator, CliError> {
        let mode = match self.mode {
            ModeArg::T => Mode::T,
            ModeArg::F => Mode::F,
        };
        Ok(Evaluator::new(RuleSet::new(mode, self.alpha.clone(), self.ihx_depth)?))
    }
}

fn load(path: &Path) -> Result<Morphism, CliError> {
    let name = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: name.clone(),
        source,
    })?;
    DiagramRecord::parse(&text)
        .and_then(|r| r.to_morphism())
        .map_err(|source| CliError::Record { path: name, source })
}

/// Printed value plus its optional specialization.
struct Value {
    symbolic: RatFunc,
    at: Option<(Rational, Rational)>,
}

impl Value {
    fn new(symbolic: RatFunc, at: &Option<Rational>) -> Result<Self, CliError> {
        let at = match at {
            Some(x) => Some((x.clone(), symbolic.eval_at(x)?)),
            None => None,
        };
        Ok(Value { symbolic, at })
    }

    fn emit(&self, command: &str, format: Format) {
        match format {
            Format::Text => {
                println!("{}", self.symbolic);
                if let Some((x, v)) = &self.at {
                    println!("at d = {x}: {v}");
                }
            }
            Format::Structured => {
                let at = self
                    .at
                    .as_ref()
                    .map(|(x, v)| json!({ "d": x.to_string(), "value": v.to_string() }));
                println!(
                    "{}",
                    json!({ "command": command, "value": self.symbolic.to_string(), "at": at })
                );
            }
        }
    }
}

fn emit_residual(command: &str, partial: &RatFunc, residual: &Morphism, format: Format) {
    match format {
        Format::Text => {
            println!("unevaluated");
            println!("partial: {partial}");
            println!("residual:\n{residual}");
        }
        Format::Structured => println!(
            "{}",
            json!({
                "command": command,
                "unevaluated": true,
                "partial": partial.to_string(),
                "residual": residual.to_string(),
            })
        ),
    }
}

fn execute(cli: &Cli) -> Result<ExitCode, CliError> {
    match &cli.command {
        Command::Verify { target } => {
            let report = verify::run(*target);
            match cli.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Structured => {
                    println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"))
                }
            }
            Ok(if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Eval { file, rules, at } => {
            let m = load(file)?;
            match rules.evaluator()?.evaluate_closed(&m)? {
                EvalResult::Value(v) => {
                    Value::new(v, at)?.emit("eval", cli.format);
                    Ok(ExitCode::SUCCESS)
                }
                EvalResult::Unevaluated { partial, residual } => {
                    emit_residual("eval", &partial, &residual, cli.format);
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Pair {
            file_f,
            file_g,
            rules,
            at,
        } => {
            let (f, g) = (load(file_f)?, load(file_g)?);
            let v = rules.evaluator()?.pairing_value(&f, &g)?;
            Value::new(v, at)?.emit("pair", cli.format);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(code) => code,
        Err(CliError::Rewrite(RewriteError::Unevaluated(residual))) => {
            eprintln!("error: evaluation did not terminate in a scalar");
            eprintln!("residual:\n{residual}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
