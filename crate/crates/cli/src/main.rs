//! `fb` — scriptable front end for the fauxbonacci library.
//!
//! Exit codes: 0 on success (and passing checks), 1 when `check` finds a
//! violation or `verify` finds a failing property, 2 for usage and input
//! errors.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fauxbonacci::extremal::{extremal_prefix, ExtremalKind};
use fauxbonacci::fife::{parse, FifeAutomaton, Operator, OperatorWord, Seed, State};
use fauxbonacci::morphism::fibonacci_prefix;
use fauxbonacci::oracle;
use fauxbonacci::verify;
use fauxbonacci::word::BinaryWord;

#[derive(Parser)]
#[command(
    name = "fb",
    version,
    about = "faux-bonacci words: check, generate, parse, verify"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test a word for fb-ness; prints "fb" or a violation as JSON.
    Check {
        /// Word over {0,1}.
        word: String,
    },
    /// Generate words.
    Gen {
        #[command(subcommand)]
        what: GenCommand,
    },
    /// Factor an fb word into seed and operator sequence (JSON).
    Parse {
        /// Word over {0,1}; must be fb and contain 010.
        word: String,
    },
    /// Print a prefix of the lexicographically least/greatest fb ω-word.
    Extremal {
        #[command(flatten)]
        kind: KindFlags,
        /// Prefix length.
        #[arg(short)]
        n: usize,
    },
    /// List all fb words of a length, one per line (or as a JSON array).
    Enumerate {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Count the fb words of a length.
    Count {
        #[arg(short)]
        n: usize,
    },
    /// Show a seed automaton (plain table, or DOT with --dot).
    Automaton {
        /// One of 010, 0010, 1010, 10010.
        #[arg(long)]
        seed: String,
        /// Emit Graphviz DOT instead of the plain table.
        #[arg(long)]
        dot: bool,
    },
    /// Run the exhaustive property suites; exit 0 iff everything passes.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// Scale of the exhaustive sweeps (word/operator lengths).
        #[arg(long, default_value_t = 12)]
        max_len: usize,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    /// Prefix of the infinite Fibonacci word.
    Fib {
        #[arg(short)]
        n: usize,
    },
    /// Image of a seed under a sequence of Fife operators.
    Fife {
        /// One of 010, 0010, 1010, 10010.
        #[arg(long)]
        seed: String,
        /// Operator word over a/b (α/β accepted).
        #[arg(long, conflicts_with_all = ["random", "rng_seed"])]
        ops: Option<String>,
        /// Generate this many random operators avoiding the sink.
        #[arg(long, requires = "rng_seed")]
        random: Option<usize>,
        /// RNG seed for --random; same seed, same output.
        #[arg(long)]
        rng_seed: Option<u64>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct KindFlags {
    /// The lexicographically least fb ω-word.
    #[arg(long)]
    least: bool,
    /// The lexicographically greatest fb ω-word.
    #[arg(long)]
    greatest: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Words,
    Morphism,
    Fife,
    Extremal,
    All,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, fauxbonacci::Error> {
    match command {
        Command::Check { word } => {
            let word = BinaryWord::from_str(&word)?;
            match word.find_violation() {
                None => {
                    println!("fb");
                    Ok(ExitCode::SUCCESS)
                }
                Some(violation) => {
                    println!(
                        "{}",
                        serde_json::to_string(&violation).expect("violation serializes")
                    );
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Gen { what } => {
            match what {
                GenCommand::Fib { n } => println!("{}", fibonacci_prefix(n)),
                GenCommand::Fife {
                    seed,
                    ops,
                    random,
                    rng_seed,
                } => {
                    let seed = Seed::from_str(&seed)?;
                    let ops = match (ops, random) {
                        (Some(ops), None) => OperatorWord::from_str(&ops)?,
                        (None, Some(count)) => {
                            random_ops(seed, count, rng_seed.expect("clap requires rng-seed"))
                        }
                        _ => {
                            eprintln!("error: pass exactly one of --ops and --random");
                            return Ok(ExitCode::from(2));
                        }
                    };
                    println!("{}", seed.staged().bullet(&ops).word());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Parse { word } => {
            let word = BinaryWord::from_str(&word)?;
            let parsed = parse(&word)?;
            println!(
                "{}",
                serde_json::json!({
                    "seed": parsed.seed.as_str(),
                    "ops": parsed.ops.to_string(),
                    "consumed": parsed.consumed,
                })
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Extremal { kind, n } => {
            let kind = if kind.least {
                ExtremalKind::Least
            } else {
                ExtremalKind::Greatest
            };
            println!("{}", extremal_prefix(kind, n));
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { n, json } => {
            let words = oracle::enumerate_fb(n)?;
            if json {
                let strings: Vec<String> = words.iter().map(|w| w.to_string()).collect();
                println!(
                    "{}",
                    serde_json::to_string(&strings).expect("strings serialize")
                );
            } else {
                for word in words {
                    println!("{word}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Count { n } => {
            println!("{}", oracle::count_fb(n)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Automaton { seed, dot } => {
            let automaton = FifeAutomaton::for_seed(Seed::from_str(&seed)?);
            if dot {
                print!("{}", automaton.dot());
            } else {
                println!("A_{} over {{a, b}}; start a; sink e", automaton.seed());
                for state in State::ORDER {
                    println!(
                        "{}: a -> {}, b -> {}",
                        state.name(),
                        automaton.step(state, Operator::Alpha).name(),
                        automaton.step(state, Operator::Beta).name()
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, max_len } => {
            let outcomes = match suite {
                SuiteArg::Words => verify::run_suite(verify::Suite::Words, max_len),
                SuiteArg::Morphism => verify::run_suite(verify::Suite::Morphism, max_len),
                SuiteArg::Fife => verify::run_suite(verify::Suite::Fife, max_len),
                SuiteArg::Extremal => verify::run_suite(verify::Suite::Extremal, max_len),
                SuiteArg::All => verify::run_all(max_len),
            };
            let mut failed = 0usize;
            for outcome in &outcomes {
                if outcome.pass {
                    println!("ok   {}", outcome.name);
                } else {
                    failed += 1;
                    println!("FAIL {}: {}", outcome.name, outcome.detail);
                }
            }
            println!(
                "{} checks, {} failed (max-len {})",
                outcomes.len(),
                failed,
                max_len
            );
            Ok(if failed == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

/// A sink-avoiding random walk on the seed's automaton: when both operators
/// keep the walk alive a coin decides, otherwise the single live operator is
/// taken. ChaCha keyed by `rng_seed` keeps runs byte-reproducible.
fn random_ops(seed: Seed, count: usize, rng_seed: u64) -> OperatorWord {
    let automaton = FifeAutomaton::for_seed(seed);
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut state = FifeAutomaton::START;
    let mut ops = Vec::with_capacity(count);
    for _ in 0..count {
        let live: Vec<Operator> = Operator::ALL
            .into_iter()
            .filter(|&op| automaton.step(state, op) != State::Sink)
            .collect();
        let choice = match live.len() {
            1 => live[0],
            2 => live[(rng.next_u32() & 1) as usize],
            _ => unreachable!("every live state has a live successor"),
        };
        state = automaton.step(state, choice);
        ops.push(choice);
    }
    OperatorWord::new(ops)
}
