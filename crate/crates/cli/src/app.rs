use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use octachar_core::characters::{w0_class, CharacterTable};
use octachar_core::hyperoctahedral::{basechange, bipartitions_of, bn_dimension, norm};
use octachar_core::symfunc::schur_eval;
use octachar_core::verify::{
    self, DimensionMatch, MainTheoremReport, OddFactorizationReport, Report, SignCensus,
};
use octachar_core::{BiPartition, ConjClass, MnEvaluator, Partition, PointSpec, Target};

use crate::notation::{parse_bipartition, parse_partition, parse_rationals, ParseError};
use crate::output::{
    emit, emit_char_table, table_records, CensusRecord, DimsRecord, Format, ReportRecord,
    TextRecord, ValueRecord,
};

pub const DEFAULT_SEED: u64 = 1;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(#[from] clap::Error),
    #[error("cannot parse {what} {text:?}: {source}")]
    Parse {
        what: &'static str,
        text: String,
        source: ParseError,
    },
    #[error(transparent)]
    Math(#[from] octachar_core::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("cannot start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

/// Exact character computations for S_2n, S_2n+1 and the hyperoctahedral group B_n.
#[derive(Debug, Parser)]
#[command(name = "octachar", version)]
pub struct Cli {
    /// Worker threads for sweeps (0 = one per core).
    #[arg(long, global = true, env = "OCTACHAR_JOBS", default_value_t = 0)]
    pub jobs: usize,

    /// One JSON object per line.
    #[arg(long, global = true, conflicts_with = "tsv")]
    pub json: bool,

    /// Tab-separated values with a header line.
    #[arg(long, global = true)]
    pub tsv: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TargetArg {
    Even,
    Odd,
}

impl From<TargetArg> for Target {
    fn from(t: TargetArg) -> Target {
        match t {
            TargetArg::Even => Target::Even,
            TargetArg::Odd => Target::Odd,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    Frobenius,
    EvenFact,
    OddFact,
}

#[derive(Debug, Args)]
pub struct SeedArg {
    /// Seed for the rational sample points.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Character value of the irreducible LAMBDA at the class of cycle type RHO.
    Char { lambda: String, rho: String },
    /// Character table of S_M: rows are irreducibles, columns are classes.
    Chartable { m: usize },
    /// Basechange of a B_n irreducible "(p0|p1)" to S_2n or S_2n+1.
    Basechange {
        bipartition: String,
        #[arg(long, value_enum, default_value = "even")]
        target: TargetArg,
    },
    /// Norm of a class of S_2n or S_2n+1 with even cycles (plus one fixed point).
    Norm {
        class: String,
        /// Defaults to the parity of the class degree.
        #[arg(long, value_enum)]
        target: Option<TargetArg>,
    },
    /// Schur polynomial of LAMBDA at a rational point.
    Schur {
        lambda: String,
        /// Comma-separated rationals, e.g. 1,2/3,-4.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Check a symmetric-function identity exhaustively over small partitions.
    Verify {
        #[arg(value_enum)]
        identity: Identity,
        /// Largest partition size checked.
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        /// Sample points per partition (Frobenius only).
        #[arg(long, default_value_t = 5)]
        points: usize,
        #[command(flatten)]
        seed: SeedArg,
    },
    /// Correspondence between S_2n and S_2n+1 irreducibles through B_n.
    Table {
        #[arg(long)]
        n: usize,
    },
    /// Signs of the character values at the fixed-point-free involution class.
    Census {
        #[arg(long)]
        m: usize,
    },
    /// Main theorem, vanishing and factorization, and sign sweeps up to B_MAX.
    Sweep {
        #[arg(long, default_value_t = 5)]
        max: usize,
        #[command(flatten)]
        seed: SeedArg,
    },
    /// Compare dimensions of B_n irreducibles with |theta(w0)| on the basechange image.
    Dims {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "even")]
        target: TargetArg,
    },
}

fn partition_arg(text: &str) -> Result<Partition, CliError> {
    parse_partition(text).map_err(|source| CliError::Parse {
        what: "partition",
        text: text.to_string(),
        source,
    })
}

/// Parses `args` (without the program name handling; pass it first as usual)
/// and runs the command. `Ok(false)` means a check ran and failed.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> Result<bool, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()?;
    let mut buffer = Vec::new();
    let outcome = pool.install(|| execute(&cli, &mut buffer));
    out.write_all(&buffer)?;
    outcome
}

fn format_of(cli: &Cli) -> Format {
    if cli.json {
        Format::Json
    } else if cli.tsv {
        Format::Tsv
    } else {
        Format::Plain
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<bool, CliError> {
    let format = format_of(cli);
    match &cli.command {
        Command::Char { lambda, rho } => {
            let l = partition_arg(lambda)?;
            let r = partition_arg(rho)?;
            let value = MnEvaluator::new().character(&l, &ConjClass::new(r.clone()))?;
            let record = ValueRecord {
                lambda: l.to_string(),
                rho: r.to_string(),
                value,
            };
            emit(out, format, &[record])?;
        }
        Command::Chartable { m } => {
            let table = CharacterTable::compute(*m, &mut MnEvaluator::new());
            emit_char_table(out, format, &table)?;
        }
        Command::Basechange {
            bipartition,
            target,
        } => {
            let pi = parse_bipartition(bipartition).map_err(|source| CliError::Parse {
                what: "bipartition",
                text: bipartition.clone(),
                source,
            })?;
            let lambda = basechange(&pi, (*target).into());
            emit(
                out,
                format,
                &[TextRecord {
                    input: pi.to_string(),
                    output: lambda.to_string(),
                }],
            )?;
        }
        Command::Norm { class, target } => {
            let c = partition_arg(class)?;
            let target = target.map_or_else(|| Target::of_degree(c.size()), Target::from);
            let nm = norm(&ConjClass::new(c.clone()), target)?;
            emit(
                out,
                format,
                &[TextRecord {
                    input: c.to_string(),
                    output: nm.to_string(),
                }],
            )?;
        }
        Command::Schur { lambda, at } => {
            let l = partition_arg(lambda)?;
            let values = parse_rationals(at).map_err(|source| CliError::Parse {
                what: "point",
                text: at.clone(),
                source,
            })?;
            let at_text = values
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",");
            let value = schur_eval(&l, &PointSpec::plain(values))?;
            emit(
                out,
                format,
                &[TextRecord {
                    input: format!("{l} at {at_text}"),
                    output: value.to_string(),
                }],
            )?;
        }
        Command::Verify {
            identity,
            max_size,
            points,
            seed,
        } => {
            let seed = seed.seed;
            let records = match identity {
                Identity::Frobenius => vec![ReportRecord::new(
                    "frobenius",
                    Some(seed),
                    par_frobenius(*max_size, *points, seed),
                )],
                Identity::EvenFact => vec![ReportRecord::new(
                    "even-factorization",
                    Some(seed),
                    par_even_factorization(*max_size / 2, seed),
                )],
                Identity::OddFact => odd_records(
                    par_odd_factorization(max_size.saturating_sub(1) / 2, seed),
                    seed,
                ),
            };
            return report(out, format, seed, &records);
        }
        Command::Table { n } => {
            let table = verify::build_table(*n, &mut MnEvaluator::new());
            emit(out, format, &table_records(&table))?;
        }
        Command::Census { m } => {
            emit(out, format, &[CensusRecord::from(par_census(*m))])?;
        }
        Command::Sweep { max, seed } => {
            let seed = seed.seed;
            let main = par_main_theorem(*max);
            let top = 2 * max + 1;
            let mut records = vec![
                ReportRecord::new("main-theorem", None, main.identities),
                ReportRecord::new("bruteforce-oracle", None, main.oracle),
                ReportRecord::new("basechange-injective", None, main.injectivity),
                ReportRecord::new("littlewood", None, par_littlewood(top)),
                ReportRecord::new(
                    "sign-agreement",
                    None,
                    par_items(verify::partitions_up_to(top), |l, _| {
                        verify::sign_agreement_check(l)
                    }),
                ),
                ReportRecord::new(
                    "even-factorization",
                    Some(seed),
                    par_even_factorization(*max, seed),
                ),
            ];
            records.extend(odd_records(par_odd_factorization(*max, seed), seed));
            return report(out, format, seed, &records);
        }
        Command::Dims { n, target } => {
            let d = par_dimension_match(*n, (*target).into());
            emit(out, format, &[DimsRecord::from(&d)])?;
            return Ok(d.holds());
        }
    }
    Ok(true)
}

fn report(
    out: &mut dyn Write,
    format: Format,
    seed: u64,
    records: &[ReportRecord],
) -> Result<bool, CliError> {
    if format == Format::Plain {
        writeln!(out, "seed {seed}")?;
    }
    emit(out, format, records)?;
    Ok(records.iter().all(ReportRecord::passed))
}

fn odd_records(odd: OddFactorizationReport, seed: u64) -> Vec<ReportRecord> {
    let mut coverage = Report::new();
    coverage.check(odd.covers_all_cases(), || {
        format!(
            "cases reached: core (1) {}, empty core {}, vanishing {}",
            odd.core_one, odd.empty_core, odd.vanishing
        )
    });
    vec![
        ReportRecord::new("odd-factorization", Some(seed), odd.report),
        ReportRecord::new("odd-factorization-cases", Some(seed), coverage),
    ]
}

/// Parallel map over `items` with one evaluator per worker, merged in
/// item order.
fn par_items<T, F>(items: Vec<T>, f: F) -> Report
where
    T: Sync,
    F: Fn(&T, &mut MnEvaluator) -> Report + Sync,
{
    items
        .par_iter()
        .map_init(MnEvaluator::new, |eval, item| f(item, eval))
        .reduce(Report::new, Report::merge)
}

pub fn par_frobenius(max_m: usize, points: usize, seed: u64) -> Report {
    let items: Vec<(usize, Partition)> = verify::frobenius_items(max_m)
        .into_iter()
        .enumerate()
        .collect();
    par_items(items, |(i, l), eval| {
        verify::frobenius_check(l, points, seed, *i as u64, eval)
    })
}

pub fn par_even_factorization(max_n: usize, seed: u64) -> Report {
    let items: Vec<(usize, Partition)> = verify::even_factorization_items(max_n)
        .into_iter()
        .enumerate()
        .collect();
    par_items(items, |(i, l), _| {
        verify::even_factorization_check(l, seed, *i as u64)
    })
}

pub fn par_odd_factorization(max_n: usize, seed: u64) -> OddFactorizationReport {
    verify::odd_factorization_items(max_n)
        .into_par_iter()
        .enumerate()
        .map(|(i, l)| verify::odd_factorization_check(&l, seed, i as u64))
        .reduce(
            OddFactorizationReport::default,
            OddFactorizationReport::merge,
        )
}

pub fn par_littlewood(max_size: usize) -> Report {
    par_items(verify::partitions_up_to(max_size), |l, eval| {
        verify::littlewood_check(l, eval)
    })
}

pub fn par_main_theorem(n_max: usize) -> MainTheoremReport {
    let init = MainTheoremReport {
        injectivity: verify::main_theorem_injectivity(n_max),
        ..Default::default()
    };
    let rest = verify::main_theorem_items(n_max)
        .par_iter()
        .map_init(MnEvaluator::new, |eval, pi| {
            verify::main_theorem_check(pi, eval)
        })
        .reduce(MainTheoremReport::default, MainTheoremReport::merge);
    init.merge(rest)
}

pub fn par_census(m: usize) -> SignCensus {
    let w0 = w0_class(m);
    let values: Vec<i128> = octachar_core::partitions::partitions_of(m)
        .par_iter()
        .map_init(MnEvaluator::new, |eval, l| {
            eval.character(l, &w0).expect("degree m")
        })
        .collect();
    let mut census = SignCensus {
        m,
        num_positive: 0,
        num_negative: 0,
        num_zero: 0,
    };
    for v in values {
        census.record(v);
    }
    census
}

pub fn par_dimension_match(n: usize, target: Target) -> DimensionMatch {
    let w0 = w0_class(target.degree(n));
    let pairs: Vec<(i128, i128)> = bipartitions_of(n)
        .par_iter()
        .map_init(MnEvaluator::new, |eval, pi: &BiPartition| {
            let theta = eval
                .character(&basechange(pi, target), &w0)
                .expect("degree matches");
            (bn_dimension(pi, eval), theta.abs())
        })
        .collect();
    let (mut bn_dimensions, mut w0_magnitudes): (Vec<i128>, Vec<i128>) = pairs.into_iter().unzip();
    bn_dimensions.sort_unstable();
    w0_magnitudes.sort_unstable();
    DimensionMatch {
        n,
        target,
        bn_dimensions,
        w0_magnitudes,
    }
}
