//! Command-line grammar. Every flag is global so it may appear before or
//! after the subcommand.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::{One, Zero};
use quantum_hurwitz::verify::CLAIM_LABELS;
use quantum_hurwitz::{parse_rational, Partition, Rational, Var, WeightModel};

#[derive(Parser, Debug)]
#[command(name = "qhurwitz", version, about = "Exact quantum weighted Hurwitz numbers and expansion checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub opts: Options,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Partitions of --n with their statistics
    Partitions,
    /// Character chi_lambda(mu), or the full table of degree --n
    Character,
    /// Pure Hurwitz number of --profiles
    Hurwitz,
    /// Weight w_G(lambda) at --q, or its series in --var
    Weight,
    /// Partition function of degree --d
    PartitionFunction,
    /// Measure xi_d on partitions, or theta on configurations when --n is given
    Measure,
    /// Weighted double Hurwitz number H^d_G(mu, nu)
    WeightedHurwitz,
    /// Check a registered expansion claim against the series engine
    Verify,
    /// Tau-function coefficients of degree --n up to beta^d
    Tau,
    /// Quantum dilogarithm identities at --q
    DilogCheck,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Partitions => "partitions",
            Command::Character => "character",
            Command::Hurwitz => "hurwitz",
            Command::Weight => "weight",
            Command::PartitionFunction => "partition-function",
            Command::Measure => "measure",
            Command::WeightedHurwitz => "weighted-hurwitz",
            Command::Verify => "verify",
            Command::Tau => "tau",
            Command::DilogCheck => "dilog-check",
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Options {
    /// Weight model: eprime, e, h, exp, belyi, finite:c1,c2,...
    #[arg(long, global = true, value_parser = parse_model)]
    pub model: Option<WeightModel>,

    /// Rational parameter strictly between 0 and 1, e.g. 1/2
    #[arg(long, global = true, value_parser = parse_q)]
    pub q: Option<Rational>,

    /// Total colength (number of weighted branch points, counted with colength)
    #[arg(long, global = true)]
    pub d: Option<u32>,

    /// Covering degree
    #[arg(long, global = true)]
    pub n: Option<u32>,

    /// Partition, parts separated by commas
    #[arg(long, global = true, value_parser = parse_partition)]
    pub mu: Option<Partition>,

    #[arg(long, global = true, value_parser = parse_partition)]
    pub nu: Option<Partition>,

    #[arg(long, global = true, value_parser = parse_partition)]
    pub lambda: Option<Partition>,

    /// Partitions separated by ';', parts by ',', e.g. "2,1,1;2,1,1"
    #[arg(long, global = true, value_parser = parse_profiles)]
    pub profiles: Option<Profiles>,

    /// Series variable: q or eps
    #[arg(long, global = true, value_parser = parse_var)]
    pub var: Option<Var>,

    /// Truncation order (series) or highest compared degree (verify)
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub order: Option<i64>,

    /// Claim label for verify, or "all"
    #[arg(long, global = true, value_parser = parse_claim)]
    pub claim: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Exit with code 3 when a verification mismatches
    #[arg(long, global = true)]
    pub strict: bool,

    /// Worker threads; output does not depend on this
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..=1024))]
    pub jobs: Option<u32>,

    /// Write the document here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

fn parse_model(s: &str) -> Result<WeightModel, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_q(s: &str) -> Result<Rational, String> {
    let q = parse_rational(s).map_err(|e| format!("{e}"))?;
    if q <= Rational::zero() || q >= Rational::one() {
        return Err(format!("q = {s} is outside (0, 1)"));
    }
    Ok(q)
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e| format!("{e}"))
}

/// A `;`-separated list of partitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profiles(pub Vec<Partition>);

fn parse_profiles(s: &str) -> Result<Profiles, String> {
    s.split(';').map(parse_partition).collect::<Result<_, _>>().map(Profiles)
}

fn parse_var(s: &str) -> Result<Var, String> {
    match s {
        "q" => Ok(Var::Q),
        "eps" => Ok(Var::Eps),
        other => Err(format!("series variable must be q or eps, not {other:?}")),
    }
}

fn parse_claim(s: &str) -> Result<String, String> {
    if s == "all" || CLAIM_LABELS.iter().any(|(label, _)| *label == s) {
        Ok(s.to_string())
    } else {
        let known: Vec<&str> = CLAIM_LABELS.iter().map(|(l, _)| *l).collect();
        Err(format!("unknown claim {s:?}; known claims: all, {}", known.join(", ")))
    }
}
