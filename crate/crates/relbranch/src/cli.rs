use clap::{Args, Parser, Subcommand, ValueEnum};

use relbranch_core::HalfInt;

use crate::commands::{self, BranchRequest, CommandError, Family, PeriodGrid, Pq};
use crate::range::Range;
use crate::record::OutputRecord;

/// Relative branching laws for discrete series of U(p,q)/U(1)U(p-1,q) and
/// U(p,q)/U(1)U(p,q-1).
///
/// Half-integers are written as exact fractions (`7/2`), never decimals.
/// Every command prints one JSON record per line; `--csv` prints a CSV
/// projection instead. Exit codes: 0 success, 2 invalid input, 3 quadrature
/// did not converge.
#[derive(Parser, Debug)]
#[command(name = "relbranch", version, about, long_about)]
pub struct Cli {
    /// Print CSV instead of JSON lines.
    #[arg(long, global = true)]
    pub csv: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate parameters and compute dim Hom between a G and a G' parameter.
    Branch(BranchArgs),
    /// Period integral of two Flensted-Jensen functions, closed form and quadrature.
    Period(PeriodArgs),
    /// Grid sweeps, one record per grid point.
    #[command(subcommand)]
    Table(TableCommand),
    /// Compare both Beta-argument candidates with quadrature.
    Adjudicate(AdjudicateArgs),
}

#[derive(Args, Debug)]
pub struct BranchArgs {
    /// Signature of G = U(p,q).
    #[arg(long, value_name = "P,Q")]
    pub pq: Pq,
    /// Allow p or q below 3.
    #[arg(long)]
    pub relaxed: bool,
    #[arg(long, value_name = "A", allow_hyphen_values = true)]
    pub plus_a: Option<HalfInt>,
    #[arg(long, value_name = "A", allow_hyphen_values = true)]
    pub minus_a: Option<HalfInt>,
    #[arg(long, value_name = "B", allow_hyphen_values = true)]
    pub plus_b: Option<HalfInt>,
    #[arg(long, value_name = "B", allow_hyphen_values = true)]
    pub minus_b: Option<HalfInt>,
    /// Sum dim Hom over the four side pairs for a on G and b on G'.
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    pub gp: Option<Vec<HalfInt>>,
    /// With --minus-a: list the summands b = a + k + 1/2 for k = 0..=K.
    #[arg(long, value_name = "K")]
    pub max_k: Option<u32>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FamilyArg {
    Complex,
    Quaternionic,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Complex => Family::Complex,
            FamilyArg::Quaternionic => Family::Quaternionic,
        }
    }
}

#[derive(Args, Debug)]
pub struct PeriodArgs {
    /// Needs q > p > 0.
    #[arg(long, value_name = "P,Q")]
    pub pq: Pq,
    /// Even label on the big group.
    #[arg(long)]
    pub n: u32,
    /// Even label on the subgroup.
    #[arg(long)]
    pub k: u32,
    #[arg(long, value_enum, default_value = "complex")]
    pub family: FamilyArg,
    /// Quadrature tolerance.
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
}

#[derive(Subcommand, Debug)]
pub enum TableCommand {
    /// dim Hom for all four side pairs over an (a, b) grid.
    Branch {
        #[arg(long, value_name = "P,Q")]
        pq: Pq,
        #[arg(long)]
        relaxed: bool,
        /// Defaults to nine values from (p+q-1)/2.
        #[arg(long, default_value = "..", allow_hyphen_values = true)]
        a_range: Range<HalfInt>,
        /// Defaults to nine values from (p+q-2)/2.
        #[arg(long, default_value = "..", allow_hyphen_values = true)]
        b_range: Range<HalfInt>,
    },
    /// Period integrals for 1 <= p < q <= Q-MAX and even n, k.
    Period {
        #[arg(long, default_value_t = 4)]
        q_max: u32,
        #[arg(long, default_value_t = 8)]
        n_max: u32,
        #[arg(long, default_value_t = 8)]
        k_max: u32,
        #[arg(long, value_enum, default_value = "complex")]
        family: FamilyArg,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Compare the two stage pipelines with the period prediction.
    Exhaustion {
        #[arg(long, value_name = "P,Q")]
        pq: Pq,
        #[arg(long)]
        relaxed: bool,
        /// Labels, e.g. 8..16. Defaults to p+q..p+q+8.
        #[arg(long, default_value = "..")]
        ell: Range<i64>,
    },
    /// Sign-pattern alignments for U(2,n) against the two U(1,n) candidates.
    /// Sequences print with + and - for plain signs, P and M for circled ones.
    He {
        #[arg(long, default_value = "4..10")]
        n: Range<i64>,
    },
}

#[derive(Args, Debug)]
pub struct AdjudicateArgs {
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    /// Print the Markdown evidence table instead of a record.
    #[arg(long)]
    pub markdown: bool,
}

/// What a command produced.
#[derive(Debug)]
pub enum Output {
    Records(Vec<OutputRecord>),
    Text(String),
}

pub fn run(cli: &Cli) -> Result<Output, CommandError> {
    let one = |r: OutputRecord| Output::Records(vec![r]);
    Ok(match &cli.command {
        Command::Branch(b) => {
            let gp = b.gp.as_ref().map(|v| (v[0], v[1]));
            one(commands::branch(&BranchRequest {
                pq: b.pq,
                relaxed: b.relaxed,
                plus_a: b.plus_a,
                minus_a: b.minus_a,
                plus_b: b.plus_b,
                minus_b: b.minus_b,
                gp,
                max_k: b.max_k,
            })?)
        }
        Command::Period(p) => one(commands::period(p.family.into(), p.pq, p.n, p.k, p.tol)?),
        Command::Table(t) => Output::Records(match t {
            TableCommand::Branch {
                pq,
                relaxed,
                a_range,
                b_range,
            } => commands::table_branch(*pq, *relaxed, *a_range, *b_range)?,
            TableCommand::Period {
                q_max,
                n_max,
                k_max,
                family,
                tol,
            } => commands::table_period(&PeriodGrid {
                family: (*family).into(),
                q_max: *q_max,
                n_max: *n_max,
                k_max: *k_max,
                tol: *tol,
            })?,
            TableCommand::Exhaustion { pq, relaxed, ell } => commands::table_exhaustion(*pq, *relaxed, *ell)?,
            TableCommand::He { n } => commands::table_he(*n)?,
        }),
        Command::Adjudicate(a) => {
            if a.markdown {
                let (rows, chosen) = commands::adjudication_rows(a.tol)?;
                Output::Text(commands::adjudication_markdown(&rows, chosen, a.tol))
            } else {
                one(commands::adjudicate(a.tol)?)
            }
        }
    })
}

/// Renders the output as it goes to stdout.
pub fn render(output: &Output, csv: bool) -> Result<String, CommandError> {
    match output {
        Output::Text(s) => Ok(s.clone()),
        Output::Records(records) if csv => {
            let mut buf = Vec::new();
            crate::record::write_csv(records, &mut buf).map_err(|e| CommandError::Validation(e.to_string()))?;
            Ok(String::from_utf8(buf).expect("csv output is utf-8"))
        }
        Output::Records(records) => Ok(records.iter().map(|r| r.to_json() + "\n").collect()),
    }
}
