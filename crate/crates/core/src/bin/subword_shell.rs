use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use subword_shell::cli::{self, AnalyzeOptions, Corpus, InstanceSpec, PiSpec, VerifyOptions};
use subword_shell::words::{self, DEFAULT_CENSUS_LIMIT};
use subword_shell::{special, Error, HilbertNumerator, Word};

#[derive(Parser)]
#[command(
    name = "subword-shell",
    version,
    about = "Subword complexes, linear quotients and shellings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one instance.
    Analyze(InstanceArgs),
    /// Run every invariant suite over a seeded or constructed corpus.
    Verify(VerifyArgs),
    /// Demazure census of one instance.
    Census(InstanceArgs),
    /// Special-class report for one instance.
    Special(InstanceArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum CorpusArg {
    Random,
    Constructed,
}

#[derive(Args)]
struct FamilyArgs {
    /// Coxeter family: A, B or I2.
    #[arg(long)]
    family: String,
    #[arg(long)]
    rank: Option<usize>,
    /// Dihedral order for family I2.
    #[arg(long)]
    m: Option<usize>,
}

#[derive(Args)]
struct InstanceArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Comma-separated letters of Q.
    #[arg(long, allow_hyphen_values = true)]
    word: String,
    /// One-line notation of π; for I2 use `rotation,reflection`.
    #[arg(long, conflicts_with = "pi_word", allow_hyphen_values = true)]
    pi: Option<String>,
    /// A reduced word for π.
    #[arg(long)]
    pi_word: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, default_value_t = DEFAULT_CENSUS_LIMIT)]
    census_limit: usize,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, value_enum, default_value = "random")]
    corpus: CorpusArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 500)]
    count: usize,
    #[arg(long, default_value_t = 8)]
    max_word: usize,
    /// Largest repetition count in the constructed corpus.
    #[arg(long, default_value_t = 4)]
    max_reps: usize,
    #[arg(long, default_value_t = DEFAULT_CENSUS_LIMIT)]
    census_limit: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn instance(args: &InstanceArgs) -> subword_shell::Result<InstanceSpec> {
    let family = cli::parse_family(&args.family.family, args.family.rank, args.family.m)?;
    let word: Word = args.word.parse()?;
    let pi = match (&args.pi, &args.pi_word) {
        (Some(p), None) => PiSpec::OneLine(cli::parse_integer_list(p)?),
        (None, Some(w)) => PiSpec::Word(w.parse()?),
        _ => {
            return Err(Error::Parse(
                "exactly one of --pi and --pi-word is required".into(),
            ))
        }
    };
    Ok(InstanceSpec::new(family, word, pi))
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serializes") + "\n"
}

fn run(cli: Cli) -> subword_shell::Result<i32> {
    match cli.command {
        Command::Analyze(args) => {
            let spec = instance(&args)?;
            let report = cli::run_analyze(
                &spec,
                &AnalyzeOptions {
                    census_limit: args.census_limit,
                },
            )?;
            match args.format {
                Format::Text => emit(&cli::render_report_text(&report)),
                Format::Json => emit(&json(&report)),
            }
            Ok(if report.violations.is_empty() {
                0
            } else {
                cli::EXIT_VIOLATION
            })
        }
        Command::Verify(args) => {
            let family = cli::parse_family(&args.family.family, args.family.rank, args.family.m)?;
            let options = VerifyOptions {
                family,
                corpus: match args.corpus {
                    CorpusArg::Random => Corpus::Random,
                    CorpusArg::Constructed => Corpus::Constructed,
                },
                max_word: args.max_word,
                count: args.count,
                seed: args.seed,
                max_reps: args.max_reps,
                census_limit: args.census_limit,
                threads: cli::threads_from_env(),
            };
            if args.max_word == 0 {
                return Err(Error::Parse("--max-word must be positive".into()));
            }
            let summary = cli::run_verify(&options)?;
            match args.format {
                Format::Text => emit(&cli::render_summary_text(&summary)),
                Format::Json => emit(&json(&summary)),
            }
            Ok(if summary.passed() {
                0
            } else {
                cli::EXIT_VIOLATION
            })
        }
        Command::Census(args) => {
            let spec = instance(&args)?;
            let (sys, q, pi) = spec.resolve()?;
            let census = words::demazure_census(&sys, &q, &pi, args.census_limit)?;
            let subwords = words::demazure_subwords(&sys, &q, &pi, args.census_limit)?;
            let numerator = HilbertNumerator::from_subwords(&subwords, pi.length());
            match args.format {
                Format::Text => {
                    let mut text = String::from("size  count\n");
                    for (size, count) in &census {
                        text.push_str(&format!("{size:<5} {count}\n"));
                    }
                    text.push_str(&format!("K(t) = {numerator}\n"));
                    emit(&text);
                }
                Format::Json => {
                    let value = serde_json::json!({
                        "census": census.iter().map(|(k, v)| (k.to_string(), serde_json::Value::from(*v))).collect::<serde_json::Map<_, _>>(),
                        "numerator": numerator.to_string(),
                    });
                    emit(&json(&value));
                }
            }
            Ok(0)
        }
        Command::Special(args) => {
            let spec = instance(&args)?;
            let (sys, q, pi) = spec.resolve()?;
            let report = special::analyze_special(&sys, &q, &pi, args.census_limit)?;
            match args.format {
                Format::Text => {
                    let analysis = cli::run_analyze(
                        &spec,
                        &AnalyzeOptions {
                            census_limit: args.census_limit,
                        },
                    )?;
                    emit(&cli::render_report_text(&analysis));
                }
                Format::Json => emit(&json(&report)),
            }
            Ok(if !report.is_special || report.all_checks_pass() {
                0
            } else {
                cli::EXIT_VIOLATION
            })
        }
    }
}

fn main() -> ExitCode {
    let parsed = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                cli::EXIT_INVALID_INPUT
            } else {
                0
            };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(parsed) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
