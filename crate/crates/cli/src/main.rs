//! `plactic`: command-line access to the insertion algorithms,
//! representations, identity checks and exhaustive scans.

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use plactic::family::{class_counts, faithfulness_scan, MonoidFamily};
use plactic::identities::{Identity, Verdict};
use plactic::presentations::{presentation_matches_canonical, RelationFamily};
use plactic::{rps, Error, Natural, Semiring, SemiringKind, Tropical, Word};

#[derive(Parser, Debug)]
#[command(
    name = "plactic",
    version,
    about = "Plactic-like monoids and their representations"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Mode {
    Exact,
    Bounded,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the canonical form of a word.
    Tableau {
        #[arg(long, value_parser = parse_family)]
        monoid: MonoidFamily,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        rank: u32,
        /// Comma-separated symbols; empty for the empty word.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        word: String,
    },
    /// Decide whether two words are congruent.
    Equiv {
        #[arg(long, value_parser = parse_family)]
        monoid: MonoidFamily,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        rank: u32,
        /// Pass exactly twice.
        #[arg(long = "word", required = true)]
        words: Vec<String>,
    },
    /// Print the upper-triangular representation of a word.
    Repmatrix {
        #[arg(long, value_parser = parse_family)]
        monoid: MonoidFamily,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        rank: u32,
        #[arg(long, value_parser = parse_semiring, default_value = "tropical")]
        semiring: SemiringKind,
        #[arg(long, default_value = "")]
        word: String,
    },
    /// Check an identity exactly or by bounded substitution search.
    CheckIdentity {
        #[arg(long, value_parser = parse_family)]
        monoid: MonoidFamily,
        /// Identity such as "xyx=yxx".
        #[arg(long, value_parser = parse_identity)]
        id: Identity,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        /// Alphabet size for bounded search.
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        rank: u32,
        /// Maximum substituted word length for bounded search.
        #[arg(long, default_value_t = 3)]
        len: usize,
    },
    /// Compare congruence and representation equality on all short words.
    Faithfulness {
        #[arg(long, value_parser = parse_family)]
        monoid: MonoidFamily,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        rank: u32,
        #[arg(long)]
        len: usize,
        #[arg(long, value_parser = parse_semiring, default_value = "tropical")]
        semiring: SemiringKind,
    },
    /// Longest chain in the bottom-row action graph of the right patience
    /// sorting monoid.
    ChainLength {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        rank: u32,
    },
    /// Compare the relation-generated congruence with canonical forms.
    PresentationCheck {
        #[arg(long, value_parser = parse_relations)]
        monoid: RelationFamily,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        rank: u32,
        #[arg(long)]
        len: usize,
    },
    /// Count congruence classes per word length.
    Classes {
        #[arg(long, value_parser = parse_family)]
        monoid: MonoidFamily,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        rank: u32,
        #[arg(long)]
        len: usize,
    },
}

fn parse_family(s: &str) -> Result<MonoidFamily, Error> {
    s.parse()
}

fn parse_relations(s: &str) -> Result<RelationFamily, Error> {
    s.parse()
}

fn parse_semiring(s: &str) -> Result<SemiringKind, Error> {
    s.parse()
}

fn parse_identity(s: &str) -> Result<Identity, Error> {
    s.parse()
}

/// What a successful run printed, and whether it found a violation.
struct Output {
    json: Value,
    text: String,
    violation: bool,
}

impl Output {
    fn new(json: Value, text: impl Into<String>) -> Self {
        Output {
            json,
            text: text.into(),
            violation: false,
        }
    }
}

fn word(s: &str, rank: u32) -> Result<Word, Error> {
    let w: Word = s.parse()?;
    w.check_rank(rank)?;
    Ok(w)
}

fn repmatrix<S: Semiring>(family: MonoidFamily, w: &Word, n: u32) -> Result<Output, Error> {
    let rep = family.representation::<S>(w, n)?;
    let mut out = json!({
        "monoid": family.name(),
        "rank": n,
        "semiring": S::NAME,
        "word": w.to_string(),
        "dim": rep.dim(),
        "block_dims": rep.block_dims(),
        "blocks": rep.to_json()["blocks"],
    });
    if family == MonoidFamily::Rps {
        out["index"] = rps::index_json(n)?;
    }
    let text = format!("dim {} blocks {:?}", rep.dim(), rep.block_dims());
    Ok(Output::new(out, text))
}

fn faithfulness<S: Semiring>(family: MonoidFamily, n: u32, len: usize) -> Result<Output, Error> {
    let report = faithfulness_scan::<S>(family, n, len)?;
    let text = match &report.violation {
        None => format!(
            "ok: {} words, {} pairs, {} classes",
            report.words, report.pairs, report.classes
        ),
        Some(c) => format!("violation: {} vs {}", c.first, c.second),
    };
    Ok(Output {
        violation: !report.ok(),
        json: report.to_json(),
        text,
    })
}

fn run(command: Command) -> Result<Output, Error> {
    match command {
        Command::Tableau {
            monoid,
            rank,
            word: w,
        } => {
            let w = word(&w, rank)?;
            let form = monoid.canonical(&w);
            let text = match form.reading() {
                Some(r) => format!("{} reading {r}", monoid.name()),
                None => format!("{} {:?}", monoid.name(), form),
            };
            Ok(Output::new(form.to_json(), text))
        }
        Command::Equiv {
            monoid,
            rank,
            words,
        } => {
            let (u, v) = (word(&words[0], rank)?, word(&words[1], rank)?);
            let eq = monoid.equiv(&u, &v);
            Ok(Output::new(json!(eq), eq.to_string()))
        }
        Command::Repmatrix {
            monoid,
            rank,
            semiring,
            word: w,
        } => {
            let w = word(&w, rank)?;
            match semiring {
                SemiringKind::Tropical => repmatrix::<Tropical>(monoid, &w, rank),
                SemiringKind::Natural => repmatrix::<Natural>(monoid, &w, rank),
            }
        }
        Command::CheckIdentity {
            monoid,
            id,
            mode,
            rank,
            len,
        } => {
            let verdict = match mode {
                Mode::Exact => Verdict::exact(monoid, &id)?,
                Mode::Bounded => Verdict::bounded(monoid, &id, rank, len)?,
            };
            let text = match &verdict.counterexample {
                Some(sub) => format!("fails: {}", sub.to_json()),
                None if verdict.holds => "holds".to_string(),
                None => "fails".to_string(),
            };
            Ok(Output::new(verdict.to_json(), text))
        }
        Command::Faithfulness {
            monoid,
            rank,
            len,
            semiring,
        } => match semiring {
            SemiringKind::Tropical => faithfulness::<Tropical>(monoid, rank, len),
            SemiringKind::Natural => faithfulness::<Natural>(monoid, rank, len),
        },
        Command::ChainLength { rank } => {
            let length = rps::chain_length(rank)?;
            let witness = rps::chain_witness(rank)?;
            Ok(Output::new(
                json!({ "rank": rank, "chain_length": length, "witness": witness.to_string() }),
                length.to_string(),
            ))
        }
        Command::PresentationCheck { monoid, rank, len } => {
            let report = presentation_matches_canonical(monoid, rank, len)?;
            let text = match &report.discrepancy {
                None => format!("match: {} words, {} classes", report.words, report.classes),
                Some((u, v)) => format!("mismatch: {u} vs {v}"),
            };
            Ok(Output {
                violation: !report.matches(),
                json: report.to_json(),
                text,
            })
        }
        Command::Classes { monoid, rank, len } => {
            let counts = class_counts(monoid, rank, len)?;
            let text = counts
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(" ");
            Ok(Output::new(
                json!({ "monoid": monoid.name(), "rank": rank, "counts": counts }),
                text,
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Equiv { words, .. } = &cli.command {
        if words.len() != 2 {
            Cli::command()
                .error(
                    ErrorKind::WrongNumberOfValues,
                    "--word must be given exactly twice",
                )
                .exit();
        }
    }
    match run(cli.command) {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", out.json),
                Format::Text => println!("{}", out.text),
            }
            if out.violation {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Error::NoExactDecider(msg)) => {
            eprintln!("error: unsupported: {msg}");
            ExitCode::from(3)
        }
        Err(e) => {
            let mut cmd = Cli::command();
            eprintln!("{}", cmd.render_usage());
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
