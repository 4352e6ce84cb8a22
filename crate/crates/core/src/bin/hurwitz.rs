//! Command-line front end: verification runs, move application, matrix
//! dumps, certificate search, constant evaluation and the hyperbolic
//! Monte-Carlo check.
//!
//! Exit codes: 0 all checks passed, 1 a verification failed, 2 usage or
//! I/O error. The last stdout line is always `RESULT <name> <PASS|FAIL>`.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hurwitz::error::Error;
use hurwitz::files::{
    format_matrix, format_moves, format_tuple, parse_matrix, parse_moves_file, parse_tuple_file,
};
use hurwitz::hurwitz::matrix_of_tuple;
use hurwitz::search::{search_nonzero, SearchConfig, Strategy};
use hurwitz::verify::{
    check_relation, example1_check, example2_check, verify_lemma_case, RelationName,
    VerificationReport,
};
use hurwitz::{bounds, hplane};

#[derive(Parser)]
#[command(name = "hurwitz", version, about = "Hurwitz moves on Dehn-twist tuples: verification, search and bound calculators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Re-run one of the built-in verifications
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Apply a moves file to a tuple file at the chosen level
    Apply(ApplyArgs),
    /// Print the intersection matrix of a tuple
    Matrix(MatrixArgs),
    /// Search for a move sequence making all pairwise intersections nonzero
    Search(SearchArgs),
    /// Evaluate a named constant
    #[command(subcommand)]
    Bounds(BoundsCommand),
    /// Upper half-plane checks
    #[command(subcommand)]
    Hplane(HplaneCommand),
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Certificate for a standard tuple: apply the shipped q-sequence and
    /// check all off-diagonal intersections are nonzero
    Lemma {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        case: u8,
    },
    /// A genus-2 chain relation on homology
    Relation {
        #[arg(long)]
        name: String,
    },
    /// One of the worked monodromy families
    Example {
        /// `ex41` or `ex42`
        #[arg(long)]
        name: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Level {
    Sharp,
    Flat,
}

#[derive(Args)]
struct ApplyArgs {
    #[arg(long)]
    tuple: PathBuf,
    #[arg(long)]
    moves: PathBuf,
    #[arg(long, value_enum)]
    level: Level,
    /// Output file (tuple format for sharp, matrix format for flat);
    /// stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct MatrixArgs {
    #[arg(long)]
    tuple: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    tuple: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long = "max-moves", default_value_t = 200)]
    max_moves: usize,
    #[arg(long = "time-limit", default_value_t = 60.0)]
    time_limit: f64,
    #[arg(long, default_value_t = 50)]
    restarts: usize,
    #[arg(long, default_value = "greedy-random")]
    strategy: String,
    /// Where to write the found sequence in moves-file format
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum BoundsCommand {
    /// Length distortion factor e^{2d}
    Wolpert {
        #[arg(long)]
        d: f64,
    },
    /// Pseudo-Anosov translation distance bound log2/(12h-12)
    Penner {
        #[arg(long)]
        h: u32,
    },
    /// Systole bound 2 log2/(12h-12)
    EppaSystole {
        #[arg(long)]
        h: u32,
    },
    /// Twisting-curve length bound 63(h-1)(1+e^{16mu})
    Lmax {
        #[arg(long)]
        h: u32,
        #[arg(long)]
        mu: u32,
    },
    /// Minimal crossing-partner length: solves sinh(l/2)sinh(L/2)=1
    CollarPartner {
        #[arg(long)]
        l: f64,
    },
    /// The two cusp-comparison constants
    K5 {
        #[arg(long)]
        k1: f64,
        #[arg(long)]
        mu: u32,
        #[arg(long)]
        mu2: u32,
    },
    /// Distance bracket between horocycles of lengths eps1, eps2
    CuspBracket {
        #[arg(long)]
        eps1: f64,
        #[arg(long)]
        eps2: f64,
    },
}

#[derive(Subcommand)]
enum HplaneCommand {
    /// Monte-Carlo check of the geodesic separation bound
    CheckLemma {
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn result_line(name: &str, pass: bool) -> ExitCode {
    println!("RESULT {name} {}", if pass { "PASS" } else { "FAIL" });
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn report_and_exit(report: &VerificationReport) -> ExitCode {
    print!("{report}");
    result_line(&report.name, report.passed)
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(Error::from),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// 12 significant digits, positional for moderate magnitudes.
fn fmt_value(v: f64) -> String {
    if v == 0.0 {
        return "0.00000000000".into();
    }
    let exp = v.abs().log10().floor() as i32;
    if (-4..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        format!("{v:.decimals$}")
    } else {
        format!("{v:.11e}")
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Verify(what) => {
            let report = match what {
                VerifyCommand::Lemma { case } => verify_lemma_case(case)?,
                VerifyCommand::Relation { name } => {
                    let name: RelationName = name.parse()?;
                    check_relation(name)
                }
                VerifyCommand::Example { name } => match name.as_str() {
                    "ex41" => example1_check()?,
                    "ex42" => example2_check()?,
                    other => {
                        return Err(Error::Domain(format!(
                            "unknown example `{other}` (expected ex41 or ex42)"
                        )))
                    }
                },
            };
            Ok(report_and_exit(&report))
        }
        Command::Apply(args) => {
            let tuple = parse_tuple_file(&std::fs::read_to_string(&args.tuple)?)?;
            let moves = parse_moves_file(&std::fs::read_to_string(&args.moves)?)?;
            match args.level {
                Level::Sharp => {
                    let result = tuple.apply_moves(&moves)?;
                    write_or_print(args.out.as_deref(), &format_tuple(&result))?;
                }
                Level::Flat => {
                    let result = matrix_of_tuple(&tuple).apply_moves(&moves)?;
                    write_or_print(args.out.as_deref(), &format_matrix(&result))?;
                }
            }
            Ok(result_line("apply", true))
        }
        Command::Matrix(args) => {
            let tuple = parse_tuple_file(&std::fs::read_to_string(&args.tuple)?)?;
            let text = format_matrix(&matrix_of_tuple(&tuple));
            // Round-trip guard: the writer and parser must agree.
            debug_assert!(parse_matrix(&text).is_ok());
            write_or_print(args.out.as_deref(), &text)?;
            Ok(result_line("matrix", true))
        }
        Command::Search(args) => {
            let tuple = parse_tuple_file(&std::fs::read_to_string(&args.tuple)?)?;
            let strategy: Strategy = args.strategy.parse()?;
            let cfg = SearchConfig {
                seed: args.seed,
                max_moves: args.max_moves,
                time_limit_seconds: args.time_limit,
                restarts: args.restarts,
                strategy,
            };
            let outcome = search_nonzero(&tuple, &cfg)?;
            println!("found: {}", outcome.found);
            println!("explored: {}", outcome.explored);
            println!("{}", outcome.detail);
            for (step, score) in &outcome.score_trace {
                println!("score step={step} zero-pairs={score}");
            }
            if let Some(seq) = &outcome.sequence {
                let text = format_moves(seq);
                match &args.out {
                    Some(path) => std::fs::write(path, &text)?,
                    None => print!("{text}"),
                }
            }
            Ok(result_line("search", outcome.found))
        }
        Command::Bounds(which) => {
            let name = match &which {
                BoundsCommand::Wolpert { d } => {
                    println!("wolpert={}", fmt_value(bounds::wolpert_factor(*d)?));
                    "wolpert"
                }
                BoundsCommand::Penner { h } => {
                    println!("penner={}", fmt_value(bounds::penner_bound(*h)?));
                    "penner"
                }
                BoundsCommand::EppaSystole { h } => {
                    println!("eppa-systole={}", fmt_value(bounds::eppa_systole_bound(*h)?));
                    "eppa-systole"
                }
                BoundsCommand::Lmax { h, mu } => {
                    println!("lmax={}", fmt_value(bounds::lmax(*h, *mu)?));
                    "lmax"
                }
                BoundsCommand::CollarPartner { l } => {
                    println!("collar-partner={}", fmt_value(bounds::collar_partner(*l)?));
                    "collar-partner"
                }
                BoundsCommand::K5 { k1, mu, mu2 } => {
                    let (a, b) = bounds::k5_constants(*k1, *mu, *mu2)?;
                    println!("k5_12={}", fmt_value(a));
                    println!("k5_21={}", fmt_value(b));
                    "k5"
                }
                BoundsCommand::CuspBracket { eps1, eps2 } => {
                    let (lo, hi) = bounds::cusp_distance_bracket(*eps1, *eps2)?;
                    println!("lower={}", fmt_value(lo));
                    println!("upper={}", fmt_value(hi));
                    "cusp-bracket"
                }
            };
            Ok(result_line(&format!("bounds-{name}"), true))
        }
        Command::Hplane(which) => match which {
            HplaneCommand::CheckLemma { samples, seed } => {
                if samples == 0 {
                    return Err(Error::Domain("samples must be positive".into()));
                }
                let report = hplane::mc_check_separation_lemma(samples, seed);
                Ok(report_and_exit(&report))
            }
        },
    }
}
