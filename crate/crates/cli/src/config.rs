use std::f64::consts::PI;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tripartite::evolution::{DEFAULT_NODES, MIN_NODES};
use tripartite::sampling::Ensemble;
use tripartite::statistics::{DEFAULT_BINS, DEFAULT_SAMPLES, MIN_BINS, MIN_SAMPLES};
use tripartite::PureState3Q;

use crate::error::CliError;
use crate::output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "tripartite",
    version,
    about = "Three-qubit entanglement along brachistochrone evolutions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CommandArgs,
}

#[derive(Debug, Subcommand)]
pub enum CommandArgs {
    /// Time-averaged three-tangle of W̃ → cos α GHZ + sin α W on a uniform α grid over [0, π/2].
    ScanAlpha {
        /// Number of α values.
        #[arg(long, default_value_t = 101)]
        points: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Histogram densities of time-averaged τ and C²_A(BC) over random evolutions.
    Pdf {
        /// Half-separation angles θ/2 in multiples of π, e.g. `1/8,0.25`.
        #[arg(long, value_delimiter = ',', default_value = "1/8,1/4,3/8,1/2", value_parser = parse_theta_half)]
        theta_half: Vec<f64>,
        #[arg(long, value_enum, default_value_t = EnsembleArg::Symmetric)]
        ensemble: EnsembleArg,
        /// Number of sampled evolutions per angle.
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_BINS)]
        bins: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Entanglement along the geodesic between two states.
    Evolve {
        /// `ghz`, `w`, `wtilde`, or eight whitespace-separated `re,im` amplitudes.
        #[arg(long)]
        initial: String,
        #[arg(long = "final")]
        final_state: String,
        /// Number of ξ grid points, both ends included.
        #[arg(long, default_value_t = 101)]
        points: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Runs the numerical invariant suites and reports the worst residual of each.
    Verify {
        /// Random states for the monogamy suite.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Gauss–Legendre nodes per quadrature panel.
    #[arg(long, default_value_t = DEFAULT_NODES)]
    pub nodes: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// First RNG stream id; shard k uses stream-base + k.
    #[arg(long, default_value_t = 0)]
    pub stream_base: u64,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    /// Output file (stdout if omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnsembleArg {
    Symmetric,
    General,
}

impl From<EnsembleArg> for Ensemble {
    fn from(e: EnsembleArg) -> Self {
        match e {
            EnsembleArg::Symmetric => Ensemble::Symmetric,
            EnsembleArg::General => Ensemble::General,
        }
    }
}

/// Parses `p/q` or a decimal, as a multiple of π in `(0, 1/2]`.
pub fn parse_theta_half(s: &str) -> Result<f64, String> {
    let bad = || format!("expected a number or fraction in (0, 1/2], found {s:?}");
    let value = match s.trim().split_once('/') {
        Some((p, q)) => {
            let p: f64 = p.trim().parse().map_err(|_| bad())?;
            let q: f64 = q.trim().parse().map_err(|_| bad())?;
            p / q
        }
        None => s.trim().parse().map_err(|_| bad())?,
    };
    if value.is_finite() && value > 0.0 && value <= 0.5 {
        Ok(value)
    } else {
        Err(bad())
    }
}

#[derive(Debug, Clone, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum Command {
    ScanAlpha {
        points: usize,
    },
    Pdf,
    Evolve {
        initial: PureState3Q,
        final_state: PureState3Q,
        points: usize,
    },
    Verify,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::ScanAlpha { .. } => "scan-alpha",
            Command::Pdf => "pdf",
            Command::Evolve { .. } => "evolve",
            Command::Verify => "verify",
        }
    }
}

/// Validated settings of one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    /// Half-angles θ/2 as multiples of π, in the order given.
    pub theta_half: Vec<f64>,
    pub ensemble: Ensemble,
    pub n_samples: usize,
    pub bins: usize,
    pub nodes: usize,
    pub seed: u64,
    pub stream_base: u64,
    pub workers: usize,
    pub output: Option<PathBuf>,
    pub format: Format,
}

impl RunConfig {
    /// Separation angles θ in radians.
    pub fn thetas(&self) -> impl Iterator<Item = f64> + '_ {
        self.theta_half.iter().map(|h| 2.0 * PI * h)
    }

    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let (command, common, theta_half, ensemble, n_samples, bins) = match cli.command {
            CommandArgs::ScanAlpha { points, common } => {
                at_least("--points", points, 2)?;
                (
                    Command::ScanAlpha { points },
                    common,
                    vec![],
                    EnsembleArg::Symmetric,
                    points,
                    DEFAULT_BINS,
                )
            }
            CommandArgs::Pdf {
                theta_half,
                ensemble,
                samples,
                bins,
                common,
            } => {
                at_least("--samples", samples, MIN_SAMPLES)?;
                at_least("--bins", bins, MIN_BINS)?;
                (Command::Pdf, common, theta_half, ensemble, samples, bins)
            }
            CommandArgs::Evolve {
                initial,
                final_state,
                points,
                common,
            } => {
                at_least("--points", points, 2)?;
                let parse = |flag: &str, text: &str| {
                    text.parse::<PureState3Q>().map_err(|e| CliError::Parse {
                        field: format!("{flag} {}", e.field),
                        reason: e.reason,
                    })
                };
                let command = Command::Evolve {
                    initial: parse("--initial", &initial)?,
                    final_state: parse("--final", &final_state)?,
                    points,
                };
                (
                    command,
                    common,
                    vec![],
                    EnsembleArg::Symmetric,
                    points,
                    DEFAULT_BINS,
                )
            }
            CommandArgs::Verify { samples, common } => {
                at_least("--samples", samples, 1)?;
                (
                    Command::Verify,
                    common,
                    vec![],
                    EnsembleArg::General,
                    samples,
                    DEFAULT_BINS,
                )
            }
        };
        at_least("--nodes", common.nodes, MIN_NODES)?;
        at_least("--workers", common.workers, 1)?;
        Ok(RunConfig {
            command,
            theta_half,
            ensemble: ensemble.into(),
            n_samples,
            bins,
            nodes: common.nodes,
            seed: common.seed,
            stream_base: common.stream_base,
            workers: common.workers,
            output: common.out,
            format: common.format,
        })
    }
}

fn at_least(flag: &str, value: usize, min: usize) -> Result<(), CliError> {
    if value < min {
        return Err(CliError::Usage(format!(
            "{flag} must be at least {min}, got {value}"
        )));
    }
    Ok(())
}
