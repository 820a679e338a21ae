use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use braidmon::format::{self, ParseError};
use braidmon::{corpus, report, scramble};
use braidmon_core::chisini::{morphism_report, ChisiniCertificate, EnumerationLimits};
use braidmon_core::hurwitz::{self, EquivalenceVerdict, SearchConfig};
use braidmon_core::vankampen::{presentation_with, simplify, RelationMode};
use braidmon_core::{BraidWord, CuspidalFactorization};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

const EXIT_DOMAIN: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_UNKNOWN: u8 = 3;

#[derive(Parser)]
#[command(
    name = "braidmon",
    version,
    about = "Cuspidal braid factorizations of the full twist"
)]
struct Cli {
    /// Output style.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

/// Factorization arguments are file paths, or `corpus:<name>` for a bundled
/// example.
#[derive(Subcommand)]
enum Command {
    /// Check that the factors multiply to the full twist and report invariants.
    Verify { file: String },
    /// Decide Hurwitz-and-conjugation equivalence of two factorizations.
    Hurwitz {
        first: String,
        second: String,
        /// Maximum number of stored search states.
        #[arg(long, default_value_t = 1_000_000)]
        budget: usize,
        /// Word length of the simultaneous conjugators tried.
        #[arg(long, default_value_t = 3)]
        radius: usize,
        /// Write the witness here when one is found.
        #[arg(long)]
        emit: Option<PathBuf>,
        /// Check this witness instead of searching.
        #[arg(long, conflicts_with = "emit")]
        replay: Option<PathBuf>,
    },
    /// Presentation of the complement group and its abelianization.
    Vk {
        file: String,
        /// Add every braid-monodromy relation, not just the local one per factor.
        #[arg(long)]
        full: bool,
        /// Write the simplified presentation here.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Enumerate transposition representations into S_N up to conjugation.
    Enumerate {
        file: String,
        #[arg(long)]
        degree: usize,
        /// Lift the default bounds on N and on the strand count.
        #[arg(long)]
        allow_large: bool,
    },
    /// Evaluate the uniqueness threshold for a curve of degree 2d.
    Chisini {
        /// Half the curve degree; half-integers allowed (`3/2`, `1.5`).
        #[arg(long)]
        d: String,
        #[arg(long)]
        g: u64,
        #[arg(long)]
        c: u64,
        /// Covering degree to test against the threshold.
        #[arg(long = "N")]
        n: Option<u64>,
    },
    /// Apply seeded random Hurwitz moves and a conjugation.
    Scramble {
        file: String,
        #[arg(long, default_value_t = 50)]
        moves: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Braid word for the final simultaneous conjugation, e.g. "1 -2".
        #[arg(long, allow_hyphen_values = true)]
        conj: Option<String>,
        /// Write the witness from the input to the output here.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// List bundled examples, or print one.
    Corpus { name: Option<String> },
}

enum Failure {
    Usage(String),
    Parse { source: String, error: ParseError },
    Domain(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) | Failure::Parse { .. } => EXIT_USAGE,
            Failure::Domain(_) => EXIT_DOMAIN,
        }
    }

    fn value(&self) -> Value {
        match self {
            Failure::Usage(m) => report::error("usage", m, None, None),
            Failure::Parse { source, error } => report::error(
                "parse",
                &format!("{source}:{error}"),
                Some(error.line),
                Some(error.column),
            ),
            Failure::Domain(m) => report::error("domain", m, None, None),
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) | Failure::Domain(m) => m.clone(),
            Failure::Parse { source, error } => format!("{source}:{error}"),
        }
    }
}

/// What a command prints, and its exit status.
struct Outcome {
    value: Value,
    code: u8,
    /// Printed instead of the rendered value in text mode.
    text: Option<String>,
}

impl Outcome {
    fn new(value: Value, code: u8) -> Self {
        Outcome {
            value,
            code,
            text: None,
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load(arg: &str) -> Result<CuspidalFactorization, Failure> {
    let text = match arg.strip_prefix("corpus:") {
        Some(name) => corpus::source(name)
            .ok_or_else(|| Failure::Usage(format!("no bundled example named `{name}`")))?
            .to_string(),
        None => read(Path::new(arg))?,
    };
    format::parse_factorization(&text).map_err(|error| Failure::Parse {
        source: arg.to_string(),
        error,
    })
}

fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn run(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Verify { file } => {
            let f = load(&file)?;
            let value = report::verify(&f);
            Ok(Outcome::new(
                value,
                if f.verify_full_twist() {
                    0
                } else {
                    EXIT_DOMAIN
                },
            ))
        }
        Command::Hurwitz {
            first,
            second,
            budget,
            radius,
            emit,
            replay,
        } => {
            let (a, b) = (load(&first)?, load(&second)?);
            if let Some(path) = replay {
                let w = format::parse_witness(&read(&path)?, a.strands()).map_err(|error| {
                    Failure::Parse {
                        source: path.display().to_string(),
                        error,
                    }
                })?;
                let ok = w.verifies(&a, &b);
                return Ok(Outcome::new(
                    report::replay(ok, w.moves.len()),
                    if ok { 0 } else { EXIT_DOMAIN },
                ));
            }
            if budget == 0 {
                return Err(Failure::Usage("--budget must be positive".into()));
            }
            let verdict = if a.strands() != b.strands() {
                EquivalenceVerdict::Distinguished(hurwitz::Invariant::Strands)
            } else {
                hurwitz::equivalent(
                    &a,
                    &b,
                    SearchConfig {
                        budget,
                        conjugation_radius: radius,
                    },
                )
                .map_err(|e| Failure::Domain(e.to_string()))?
            };
            let code = match &verdict {
                EquivalenceVerdict::Equivalent(w) => {
                    if let Some(path) = emit {
                        write(&path, &format::serialize_witness(w))?;
                    }
                    0
                }
                EquivalenceVerdict::Distinguished(_) => EXIT_DOMAIN,
                EquivalenceVerdict::Unknown(_) => EXIT_UNKNOWN,
            };
            Ok(Outcome::new(report::hurwitz(&verdict), code))
        }
        Command::Vk { file, full, emit } => {
            let f = load(&file)?;
            let mode = if full {
                RelationMode::Full
            } else {
                RelationMode::Economical
            };
            let p = presentation_with(&f, mode).map_err(|e| Failure::Domain(e.to_string()))?;
            if let Some(path) = emit {
                write(&path, &format::serialize_presentation(&simplify(&p)))?;
            }
            Ok(Outcome::new(report::van_kampen(&f, &p, mode), 0))
        }
        Command::Enumerate {
            file,
            degree,
            allow_large,
        } => {
            let f = load(&file)?;
            let limits = if allow_large {
                EnumerationLimits::unlimited()
            } else {
                EnumerationLimits::default()
            };
            let r =
                morphism_report(&f, degree, limits).map_err(|e| Failure::Domain(e.to_string()))?;
            Ok(Outcome::new(report::enumeration(&r), 0))
        }
        Command::Chisini { d, g, c, n } => {
            let degree = format::parse_half_integer(&d).ok_or_else(|| {
                Failure::Usage(format!(
                    "--d must be a positive integer or half-integer, got `{d}`"
                ))
            })?;
            if n == Some(0) {
                return Err(Failure::Usage("--N must be positive".into()));
            }
            let cert = ChisiniCertificate::new(degree, g, c);
            Ok(Outcome::new(report::chisini(&d, &cert, n), 0))
        }
        Command::Scramble {
            file,
            moves,
            seed,
            conj,
            witness,
        } => {
            let f = load(&file)?;
            let z = match conj {
                Some(text) => format::parse_braid_word(f.strands(), &text).map_err(|error| {
                    Failure::Parse {
                        source: "--conj".into(),
                        error,
                    }
                })?,
                None => BraidWord::identity(f.strands()).expect("strands already checked"),
            };
            let (out, w) = scramble::scramble(&f, moves, seed, &z)
                .map_err(|e| Failure::Domain(e.to_string()))?;
            let text = format::serialize_factorization(&out);
            let wit = format::serialize_witness(&w);
            if let Some(path) = witness {
                write(&path, &wit)?;
            }
            let value = serde_json::json!({ "factorization": text, "witness": wit });
            Ok(Outcome {
                value,
                code: 0,
                text: Some(text),
            })
        }
        Command::Corpus { name } => match name {
            None => {
                let names: Vec<&str> = corpus::ENTRIES.iter().map(|(n, _)| *n).collect();
                let text = names.iter().map(|n| format!("{n}\n")).collect();
                Ok(Outcome {
                    value: serde_json::json!({ "examples": names }),
                    code: 0,
                    text: Some(text),
                })
            }
            Some(name) => {
                let src = corpus::source(&name)
                    .ok_or_else(|| Failure::Usage(format!("no bundled example named `{name}`")))?;
                Ok(Outcome {
                    value: serde_json::json!({ "name": name, "source": src }),
                    code: 0,
                    text: Some(src.into()),
                })
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let structured = cli.format == Format::Structured;
    match run(cli.command) {
        Ok(out) => {
            if structured {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out.value).expect("serializable")
                );
            } else {
                print!(
                    "{}",
                    out.text.unwrap_or_else(|| report::to_text(&out.value))
                );
            }
            ExitCode::from(out.code)
        }
        Err(failure) => {
            if structured {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&failure.value()).expect("serializable")
                );
            }
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
