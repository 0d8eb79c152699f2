//! The `circnut` command line: argument parsing, dispatch and JSON output.

pub mod render;

use std::io::Write;

use clap::{Parser, Subcommand};
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use circnut::circulant::{q_remainder_table, pstar_remainder_table, zero_multiplicity};
use circnut::oracle::{circulant_kernel, enumerate_balanced};
use circnut::search::{scan_range_with, DEFAULT_SCAN_MAX_T};
use circnut::theory;
use circnut::{cyclotomic, BigInt, find_pt, find_qt_rt, is_nut, is_universal, Error, GeneratorSet, PairMode};

use render::TableFormat;

#[derive(Debug, Parser)]
#[command(name = "circnut", version, about = "Exact certification of circulant nut graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether Circ(n, S) is a nut graph via cyclotomic divisibility.
    NutCheck {
        #[arg(long)]
        order: u64,
        #[arg(long)]
        set: GeneratorSet,
    },
    /// Exact kernel of the adjacency matrix of Circ(n, S).
    Oracle {
        #[arg(long)]
        order: u64,
        #[arg(long)]
        set: GeneratorSet,
    },
    /// Kernel oracle over every balanced 2t-element generator set of order n.
    Exhaust {
        #[arg(long)]
        order: u64,
        #[arg(long)]
        t: u64,
        #[arg(long, default_value_t = default_jobs())]
        jobs: usize,
    },
    /// Certify a generator set as universal.
    Universal {
        #[arg(long)]
        set: GeneratorSet,
    },
    /// Print the b-th cyclotomic polynomial.
    Cyclotomic { b: u64 },
    /// Remainders of P*(y) modulo every cyclotomic polynomial in the scan.
    PstarTable {
        #[arg(long)]
        set: GeneratorSet,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Remainders of the eight-term polynomial of S_t for every t mod b.
    #[command(name = "q-remainder-table", alias = "appendix-table")]
    QRemainderTable {
        #[arg(long)]
        b: u64,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Evaluate a closed-form nut criterion.
    Predicate {
        #[command(subcommand)]
        which: PredicateCommand,
    },
    /// Smallest exponent with a unique residue mod p in the S_t polynomial.
    #[command(name = "unique-residue", alias = "claim1")]
    UniqueResidue {
        #[arg(long)]
        t: u64,
        #[arg(long)]
        p: u64,
    },
    /// Exhaustive check that order 4t+4 admits no 4t-regular circulant nut graph.
    #[command(name = "tight-order", alias = "lemma7")]
    TightOrder {
        #[arg(long)]
        t: u64,
        /// Lift the default guard on t.
        #[arg(long)]
        allow_large: bool,
    },
    /// Smallest odd p with {1,...,2t+1} minus {p} universal.
    FindPt {
        #[arg(long)]
        t: u64,
    },
    /// Pairs (q, r) with {1,...,2t+2} minus {q, r} universal.
    FindQr {
        #[arg(long)]
        t: u64,
        #[arg(long)]
        all: bool,
    },
    /// Scan a range of t, one record per t in ascending order.
    Scan {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        #[arg(long, default_value_t = default_jobs())]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = ScanFormat::Json)]
        format: ScanFormat,
        /// Skip every t below this value.
        #[arg(long)]
        resume_from: Option<u64>,
        /// Allow ranges beyond the default cap (hours of work near t = 1300).
        #[arg(long)]
        allow_long: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum PredicateCommand {
    /// Necessary order/degree conditions for vertex-transitive nut graphs.
    #[command(name = "feasible", alias = "thm1")]
    Feasible {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
    },
    /// Nut criterion for {1, ..., d/2}.
    #[command(name = "initial-segment", alias = "thm2")]
    InitialSegment {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
    },
    /// Nut criterion for {x, ..., x+2t-1}.
    #[command(name = "consecutive", alias = "thm3")]
    Consecutive {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        x: u64,
        #[arg(long)]
        t: u64,
    },
    /// Known non-nut orders for S_t.
    #[command(name = "known-failure", alias = "lemma5")]
    KnownFailure {
        #[arg(long)]
        t: u64,
        #[arg(long)]
        n: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ScanFormat {
    Json,
    Latex,
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

#[derive(Debug, Serialize)]
pub struct NutCheckOutput {
    pub order: u64,
    pub set: Vec<u64>,
    pub is_nut: bool,
    pub reason: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_b: Option<u64>,
    /// Absent when some generator exceeds half the order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zero_multiplicity: Option<u64>,
}

fn big_to_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

/// Parses `args` and runs the command, writing to `out`. Returns the exit
/// code: 0 on success, 1 on a violated precondition, 2 on a usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Core(e)) => {
            let doc = json!({ "error": e.code(), "message": e.to_string() });
            let _ = writeln!(out, "{doc}");
            1
        }
        Err(Failure::Io(e)) => {
            eprintln!("circnut: {e}");
            1
        }
    }
}

enum Failure {
    Core(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn emit(out: &mut dyn Write, v: &impl Serialize) -> Result<(), Failure> {
    let s = serde_json::to_string(v).map_err(|e| Failure::Io(e.into()))?;
    writeln!(out, "{s}")?;
    Ok(())
}

pub fn nut_check(order: u64, set: &GeneratorSet) -> Result<NutCheckOutput, Error> {
    let verdict = is_nut(set, order)?;
    let zero_multiplicity = match zero_multiplicity(set, order) {
        Ok(m) => Some(m),
        Err(Error::GeneratorTooLarge { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(NutCheckOutput {
        order,
        set: render::set_elements(set),
        is_nut: verdict.is_nut(),
        reason: verdict.reason.name(),
        witness_b: verdict.reason.witness(),
        zero_multiplicity,
    })
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match cmd {
        Command::NutCheck { order, set } => emit(out, &nut_check(order, &set)?),
        Command::Oracle { order, set } => {
            let k = circulant_kernel(order, &set)?;
            let basis: Vec<Vec<Value>> =
                k.basis.iter().map(|v| v.iter().map(big_to_json).collect()).collect();
            emit(
                out,
                &json!({
                    "order": order,
                    "set": render::set_elements(&set),
                    "nullity": k.nullity,
                    "rank": k.rank,
                    "kernel_basis": basis,
                    "is_nut": k.full_support,
                }),
            )
        }
        Command::Exhaust { order, t, jobs } => {
            let sets = enumerate_balanced(order, t)?;
            let pool = pool(jobs)?;
            let rows = pool.install(|| {
                sets.par_iter()
                    .map(|s| {
                        let k = circulant_kernel(order, s)?;
                        Ok(json!({
                            "set": render::set_elements(s),
                            "nullity": k.nullity,
                            "is_nut": k.full_support,
                        }))
                    })
                    .collect::<Result<Vec<Value>, Error>>()
            })?;
            emit(out, &rows)
        }
        Command::Universal { set } => emit(out, &is_universal(&set)?),
        Command::Cyclotomic { b } => {
            writeln!(out, "{}", cyclotomic(b)?)?;
            Ok(())
        }
        Command::PstarTable { set, format } => {
            let rows = pstar_remainder_table(&set)?;
            let (k, v) = render::pstar_headers();
            write!(out, "{}", render::remainder_table(&rows, format, k, v))?;
            Ok(())
        }
        Command::QRemainderTable { b, format } => {
            let rows = q_remainder_table(b)?;
            let (k, v) = render::q_remainder_headers(b);
            write!(out, "{}", render::remainder_table(&rows, format, &k, &v))?;
            Ok(())
        }
        Command::Predicate { which } => {
            let doc = match which {
                PredicateCommand::Feasible { n, d } => json!({
                    "predicate": "feasible", "n": n, "d": d,
                    "holds": theory::nut_order_degree_feasible(n, d),
                }),
                PredicateCommand::InitialSegment { n, d } => json!({
                    "predicate": "initial-segment", "n": n, "d": d,
                    "holds": theory::initial_segment_is_nut(n, d)?,
                }),
                PredicateCommand::Consecutive { n, x, t } => json!({
                    "predicate": "consecutive", "n": n, "x": x, "t": t,
                    "holds": theory::consecutive_block_is_nut(n, x, t)?,
                }),
                PredicateCommand::KnownFailure { t, n } => json!({
                    "predicate": "known-failure", "t": t, "n": n,
                    "holds": theory::almost_consecutive_known_failure(t, n)?,
                }),
            };
            emit(out, &doc)
        }
        Command::UniqueResidue { t, p } => emit(
            out,
            &json!({ "t": t, "p": p, "unique_exponent": theory::unique_residue_exponent(t, p)? }),
        ),
        Command::TightOrder { t, allow_large } => {
            let holds = theory::tight_order_has_no_nut(t, allow_large)?;
            emit(out, &json!({ "t": t, "order": 4 * t + 4, "no_nut": holds }))
        }
        Command::FindPt { t } => emit(out, &find_pt(t)?),
        Command::FindQr { t, all } => {
            let mode = if all { PairMode::All } else { PairMode::First };
            emit(out, &find_qt_rt(t, mode)?)
        }
        Command::Scan { from, to, jobs, format, resume_from, allow_long } => {
            if to > DEFAULT_SCAN_MAX_T && !allow_long {
                return Err(Error::Precondition(format!(
                    "t up to {to} exceeds the default cap {DEFAULT_SCAN_MAX_T}; pass --allow-long"
                ))
                .into());
            }
            let lo = resume_from.map_or(from, |r| r.max(from));
            if lo > to {
                return Ok(());
            }
            let mut io_error = None;
            scan_range_with(lo, to, jobs, |rec| {
                let line = match format {
                    ScanFormat::Json => serde_json::to_string(rec).expect("records serialize"),
                    ScanFormat::Latex => render::scan_row_latex(rec),
                };
                if let Err(e) = writeln!(out, "{line}").and_then(|_| out.flush()) {
                    io_error = Some(e);
                    return Err(Error::Precondition("output closed".into()));
                }
                Ok(())
            })
            .map_err(|e| io_error.take().map_or(Failure::Core(e), Failure::Io))?;
            Ok(())
        }
    }
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool, Error> {
    if jobs == 0 {
        return Err(Error::Precondition("jobs must be positive".into()));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Precondition(e.to_string()))
}
