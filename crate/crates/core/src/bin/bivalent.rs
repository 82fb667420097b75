//! Command-line front end: sequence file operators and experiment reports.
//!
//! Exit status is 0 on success, 2 on a usage error, 3 on a data error.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use bivalent::experiment::{self, Experiment, OutputFormat, RunConfig};
use bivalent::{bsq, apply_j, BitSequence, DyadicExponent, ThresholdSpec};

#[derive(Parser)]
#[command(name = "bivalent", version, about = "Bivalent-sequence operators and Monte-Carlo experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply one operator to a BSQ1 file.
    Op(OpArgs),
    /// Write a generic (seeded random) sequence as a BSQ1 file.
    Generate(GenerateArgs),
    /// Run an experiment and print its report.
    #[command(subcommand)]
    Experiment(ExperimentCmd),
}

#[derive(Args)]
struct OpArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    output: PathBuf,
    /// Dyadic exponent q as `k/2^n`, `k/m` or `k`.
    #[arg(long, group = "operator", allow_hyphen_values = true)]
    i_power: Option<String>,
    /// Latitude in radians.
    #[arg(long, group = "operator", allow_hyphen_values = true)]
    j_theta: Option<f64>,
    #[arg(long, group = "operator")]
    negate: bool,
    #[arg(long, default_value_t = bivalent::latitude::DEFAULT_WINDOW_BITS)]
    window_bits: usize,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long)]
    output: PathBuf,
    #[arg(long, default_value_t = experiment::DEFAULT_SEQUENCE_LENGTH)]
    sequence_length: usize,
    #[arg(long, default_value_t = experiment::DEFAULT_SEED)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Clone)]
struct RunArgs {
    #[arg(long, default_value_t = experiment::DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = experiment::DEFAULT_TRIALS)]
    trials: u64,
    #[arg(long, default_value_t = bivalent::latitude::DEFAULT_WINDOW_BITS)]
    window_bits: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Worker threads; the report does not depend on it.
    #[arg(long, default_value_t = 1)]
    parallel: usize,
}

#[derive(Subcommand)]
enum ExperimentCmd {
    /// Born probability of +1 at each latitude.
    Born {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        theta: Vec<f64>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Entangled-pair correlation at each relative orientation.
    Epr {
        #[arg(long, value_delimiter = ',')]
        delta_theta: Vec<f64>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// CHSH combination for settings a,b,a',b'.
    Chsh {
        #[arg(long, value_delimiter = ',', num_args = 1, allow_hyphen_values = true)]
        angles: Vec<f64>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Positional spread product against the rotated mean.
    Uncertainty {
        #[arg(long)]
        colat: f64,
        #[arg(long)]
        lon: f64,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Octave-by-octave predictability sum.
    Cascade {
        #[arg(long, default_value_t = bivalent::cascade::KOLMOGOROV_SLOPE, allow_hyphen_values = true)]
        slope: f64,
        #[arg(long, default_value_t = 1.0)]
        k_l: f64,
        #[arg(long, default_value_t = 30)]
        levels: u32,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Outcome flip fraction under i^(1/2^n) for n = 0..=max-n.
    Noncomputability {
        #[arg(long, default_value_t = 10)]
        max_n: u32,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Grid points that stay on a latitude circle after tilting the pole.
    GridOverlap {
        #[arg(long, value_delimiter = ',', default_values_t = [4u32, 8, 16])]
        meridians: Vec<u32>,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        tilt: f64,
        #[command(flatten)]
        run: RunArgs,
    },
}

impl ExperimentCmd {
    fn resolve(self) -> anyhow::Result<(Experiment, RunArgs)> {
        Ok(match self {
            ExperimentCmd::Born { theta, run } => {
                let thetas = if theta.is_empty() { experiment::default_born_thetas() } else { theta };
                (Experiment::Born { thetas }, run)
            }
            ExperimentCmd::Epr { delta_theta, run } => {
                let delta_thetas = if delta_theta.is_empty() { experiment::default_epr_grid() } else { delta_theta };
                (Experiment::Epr { delta_thetas }, run)
            }
            ExperimentCmd::Chsh { angles, run } => {
                let settings = match angles.len() {
                    0 => experiment::DEFAULT_CHSH_SETTINGS,
                    4 => [angles[0], angles[1], angles[2], angles[3]],
                    n => bail!("--angles expects 4 values, got {n}"),
                };
                (Experiment::Chsh { settings }, run)
            }
            ExperimentCmd::Uncertainty { colat, lon, run } => (Experiment::Uncertainty { colat, lon }, run),
            ExperimentCmd::Cascade { slope, k_l, levels, run } => (Experiment::Cascade { slope, k_l, levels }, run),
            ExperimentCmd::Noncomputability { max_n, run } => (Experiment::Noncomputability { max_n }, run),
            ExperimentCmd::GridOverlap { meridians, tilt, run } => (Experiment::GridOverlap { meridians, tilt }, run),
        })
    }
}

enum Failure {
    Usage(anyhow::Error),
    Data(anyhow::Error),
}

fn run_op(args: OpArgs) -> Result<(), Failure> {
    let input = bsq::read_file(&args.input)
        .with_context(|| format!("reading {}", args.input.display()))
        .map_err(Failure::Data)?;
    let output = if let Some(q) = &args.i_power {
        let q: DyadicExponent = q.parse().map_err(|e| Failure::Usage(anyhow::Error::new(e)))?;
        input.apply_i_power(q).map_err(|e| Failure::Data(e.into()))?
    } else if let Some(theta) = args.j_theta {
        let spec = ThresholdSpec::new(theta, args.window_bits).map_err(|e| Failure::Usage(e.into()))?;
        apply_j(&spec, &input).map_err(|e| Failure::Data(e.into()))?.output
    } else if args.negate {
        input.negate()
    } else {
        return Err(Failure::Usage(anyhow::anyhow!(
            "one of --i-power, --j-theta or --negate is required"
        )));
    };
    bsq::write_file(&args.output, &output)
        .with_context(|| format!("writing {}", args.output.display()))
        .map_err(Failure::Data)
}

fn run_generate(args: GenerateArgs) -> Result<(), Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let seq = BitSequence::random(args.sequence_length, &mut rng).map_err(|e| Failure::Usage(e.into()))?;
    bsq::write_file(&args.output, &seq)
        .with_context(|| format!("writing {}", args.output.display()))
        .map_err(Failure::Data)
}

fn run_experiment(cmd: ExperimentCmd) -> Result<(), Failure> {
    let (exp, run) = cmd.resolve().map_err(Failure::Usage)?;
    let config = RunConfig {
        seed: run.seed,
        trials: run.trials,
        window_bits: run.window_bits,
        output_format: match run.format {
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
        },
        ..RunConfig::default()
    };
    let report = experiment::run_parallel(&exp, &config, run.parallel)
        .with_context(|| format!("experiment {}", exp.name()))
        .map_err(Failure::Usage)?;
    print!("{report}");
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Op(args) => run_op(args),
        Command::Generate(args) => run_generate(args),
        Command::Experiment(cmd) => run_experiment(cmd),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Data(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(3)
        }
    }
}
