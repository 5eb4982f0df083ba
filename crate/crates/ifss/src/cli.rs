//! The `ifss` command line: soft-set operations, relation calculus,
//! predicate checks, law verification and a small decision-scoring demo.
//!
//! Exit codes: 0 on success, 1 on domain errors, 2 on usage errors.
//! Diagnostics go to stderr.

use std::ffi::OsString;
use std::io::Write;
use std::num::NonZeroU32;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::NormPair;
use crate::error::Error;
use crate::io::{
    format_scalar, parse_relation, parse_soft_set, round_sig, serialize_relation,
    serialize_soft_set,
};
use crate::laws::{self, CheckOutcome, LawId, SearchConfig};
use crate::softset::IFSoftSet;

#[derive(Parser)]
#[command(
    name = "ifss",
    version,
    about = "Intuitionistic fuzzy soft set toolkit: set algebra, relations and law checking"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Dual norm pair, selected by a single flag so non-dual mixes cannot be
/// expressed at the interface.
#[derive(Debug, Clone, Copy, ValueEnum)]
enum Norms {
    Minmax,
    Prodsum,
    Lukasiewicz,
}

impl Norms {
    fn pair(self) -> NormPair {
        match self {
            Norms::Minmax => NormPair::MIN_MAX,
            Norms::Prodsum => NormPair::PRODUCT_PROB_SUM,
            Norms::Lukasiewicz => NormPair::LUKASIEWICZ_BOUNDED_SUM,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OpKind {
    Intersect,
    Union,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CheckKind {
    Symmetric,
    Transitive,
    Reflexive,
    Equivalence,
}

#[derive(Subcommand)]
enum Command {
    /// Pointwise intersection or union of two soft sets.
    Op {
        #[arg(value_enum)]
        kind: OpKind,
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long, value_enum)]
        norms: Norms,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Cartesian product of two soft sets, written as a relation document.
    Product {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long, value_enum)]
        norms: Norms,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Relation calculus: inverse, composition and powers.
    Relate {
        #[command(subcommand)]
        command: RelateCommand,
    },
    /// Check a relation predicate; prints the verdict and any witness.
    Check {
        #[arg(value_enum)]
        kind: CheckKind,
        #[arg(long)]
        relation: PathBuf,
        #[arg(long, value_enum)]
        norms: Norms,
    },
    /// Verify one algebraic law; prints the verdict as JSON.
    Laws {
        #[arg(long, value_parser = LawId::from_str)]
        law: LawId,
        #[arg(long, value_enum)]
        norms: Norms,
        #[arg(long)]
        grid_step: Option<f64>,
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Rank universe elements by the total membership margin (mu - nu)
    /// across all parameters, descending; ties break on element id.
    Score {
        #[arg(long)]
        softset: PathBuf,
    },
}

#[derive(Subcommand)]
enum RelateCommand {
    /// Swap every pair of the relation.
    Inverse {
        #[arg(long)]
        relation: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Compose two relations through their shared middle parameters.
    Compose {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long, value_enum)]
        norms: Norms,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// n-fold composition of a square relation with itself.
    Power {
        #[arg(long)]
        relation: PathBuf,
        #[arg(short = 'n', long, value_parser = clap::value_parser!(u32).range(1..))]
        exponent: u32,
        #[arg(long, value_enum)]
        norms: Norms,
        #[arg(short, long)]
        output: PathBuf,
    },
}

/// Runs the CLI against explicit arguments and output streams.
/// Returns the process exit code.
pub fn run_cli<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{err}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{err}");
                    2
                }
            };
        }
    };
    match execute(cli.command, stdout) {
        Ok(()) => 0,
        Err(err) => {
            let _ = writeln!(stderr, "error: {err}");
            1
        }
    }
}

fn read_file(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write_file(path: &Path, contents: &str) -> Result<(), Error> {
    std::fs::write(path, contents).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

fn execute(command: Command, stdout: &mut dyn Write) -> Result<(), Error> {
    match command {
        Command::Op {
            kind,
            left,
            right,
            norms,
            output,
        } => {
            let left_set = parse_soft_set(&read_file(&left)?)?;
            let right_set = parse_soft_set(&read_file(&right)?)?;
            let result = match kind {
                OpKind::Intersect => left_set.intersection(&right_set, norms.pair())?,
                OpKind::Union => left_set.union(&right_set, norms.pair())?,
            };
            write_file(&output, &serialize_soft_set(&result))
        }
        Command::Product {
            left,
            right,
            norms,
            output,
        } => {
            let left_set = parse_soft_set(&read_file(&left)?)?;
            let right_set = parse_soft_set(&read_file(&right)?)?;
            let product = left_set.cartesian_product(&right_set, norms.pair())?;
            write_file(&output, &serialize_relation(&product))
        }
        Command::Relate { command } => execute_relate(command),
        Command::Check {
            kind,
            relation,
            norms,
        } => {
            let relation = parse_relation(&read_file(&relation)?)?;
            let outcome = match kind {
                CheckKind::Symmetric => laws::is_symmetric(&relation)?,
                CheckKind::Transitive => laws::is_transitive(norms.pair(), &relation)?,
                CheckKind::Reflexive => laws::is_reflexive(&relation)?,
                CheckKind::Equivalence => laws::is_equivalence(norms.pair(), &relation)?,
            };
            print_outcome(&outcome, stdout);
            Ok(())
        }
        Command::Laws {
            law,
            norms,
            grid_step,
            trials,
            seed,
        } => {
            let defaults = SearchConfig::default();
            let config = SearchConfig {
                grid_step: grid_step.unwrap_or(defaults.grid_step),
                trials: trials.unwrap_or(defaults.trials),
                seed: seed.unwrap_or(defaults.seed),
                ..defaults
            };
            let verdict = laws::check_law(law, norms.pair(), &config);
            let _ = writeln!(stdout, "{}", verdict.to_json());
            Ok(())
        }
        Command::Score { softset } => {
            let soft_set = parse_soft_set(&read_file(&softset)?)?;
            for (element, score) in score_ranking(&soft_set) {
                let _ = writeln!(stdout, "{element} {}", format_scalar(score));
            }
            Ok(())
        }
    }
}

fn execute_relate(command: RelateCommand) -> Result<(), Error> {
    match command {
        RelateCommand::Inverse { relation, output } => {
            let relation = parse_relation(&read_file(&relation)?)?;
            write_file(&output, &serialize_relation(&relation.inverse()))
        }
        RelateCommand::Compose {
            left,
            right,
            norms,
            output,
        } => {
            let left_rel = parse_relation(&read_file(&left)?)?;
            let right_rel = parse_relation(&read_file(&right)?)?;
            let composed = left_rel.compose(&right_rel, norms.pair())?;
            write_file(&output, &serialize_relation(&composed))
        }
        RelateCommand::Power {
            relation,
            exponent,
            norms,
            output,
        } => {
            let relation = parse_relation(&read_file(&relation)?)?;
            let n = NonZeroU32::new(exponent).expect("range-checked by clap");
            let powered = relation.power(norms.pair(), n)?;
            write_file(&output, &serialize_relation(&powered))
        }
    }
}

fn print_outcome(outcome: &CheckOutcome, stdout: &mut dyn Write) {
    let _ = writeln!(stdout, "{}", outcome.holds);
    if let Some(witness) = &outcome.witness {
        let _ = writeln!(stdout, "witness: {witness}");
    }
}

/// Scores every universe element by the sum of (mu - nu) over all
/// parameters. Scores are compared after canonical rounding so arithmetic
/// dust cannot break a genuine tie; ties fall back to element-id order.
pub fn score_ranking(soft_set: &IFSoftSet) -> Vec<(String, f64)> {
    let mut totals: Vec<(String, f64)> = soft_set
        .universe()
        .elements()
        .iter()
        .map(|element| {
            let total = soft_set
                .iter()
                .map(|(_, set)| {
                    let v = set.value(element).expect("sets are total");
                    v.mu() - v.nu()
                })
                .sum();
            (element.clone(), total)
        })
        .collect();
    totals.sort_by(|a, b| {
        round_sig(b.1)
            .partial_cmp(&round_sig(a.1))
            .expect("scores are finite")
            .then_with(|| a.0.cmp(&b.0))
    });
    totals
}
