//! Command-line front end: encode signals to spike trains, evaluate norms
//! and sparsity bounds, enumerate admissible trains, and run the batch
//! experiments.
//!
//! Signals are read as JSON from a file or stdin (`-`). Exit codes: 0 on
//! success, 1 on validation or I/O errors, 2 when an exhaustive search is
//! infeasible or capped out.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use spike_quant::error::{ExperimentError, SearchError, ValidationError};
use spike_quant::experiments::{
    run_counterexample_experiment, run_gap_experiment, run_ratio_experiment, ConstraintFamily,
    ExperimentConfig,
};
use spike_quant::{
    alexiewicz_norm_continuous, alexiewicz_norm_discrete, enumerate_admissible, lif_continuous,
    lif_discrete, min_l1_admissible, sod_encode, sparsity_bounds, ContinuousSignal, DiscreteSignal,
    EncoderParams, L1Norm, SpikeTrain,
};
use std::fs;
use std::io::{Read, Write};

#[derive(Parser)]
#[command(
    name = "spike-quant",
    version,
    about = "Threshold-based spike encoding, Alexiewicz norms, sparsity bounds and admissible-train search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Lif,
    If,
    Sod,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Constraint {
    Amplitude,
    FirstDiff,
    SecondDiff,
}

impl From<Constraint> for ConstraintFamily {
    fn from(c: Constraint) -> Self {
        match c {
            Constraint::Amplitude => ConstraintFamily::Amplitude,
            Constraint::FirstDiff => ConstraintFamily::FirstDiff,
            Constraint::SecondDiff => ConstraintFamily::SecondDiff,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Encode a JSON signal into a JSON spike train
    Encode {
        /// Input file, or `-` for stdin
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, default_value_t = 1.0)]
        theta: f64,
        #[arg(long, default_value_t = 1.0)]
        beta: f64,
        /// lif / if on sampled signals, sod on piecewise-linear nodes
        #[arg(long, value_enum, default_value_t = Mode::Lif)]
        mode: Mode,
        /// Treat the input as a continuous signal (segments + impulses)
        #[arg(long)]
        continuous: bool,
    },
    /// Weighted Alexiewicz norm of a JSON signal
    Norm {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, default_value_t = 1.0)]
        beta: f64,
        #[arg(long)]
        continuous: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Sparsity bounds and ratio for a discrete JSON signal
    Bounds {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, default_value_t = 1.0)]
        theta: f64,
        #[arg(long, default_value_t = 1.0)]
        beta: f64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Enumerate every admissible spike train around a discrete JSON signal
    Enumerate {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, default_value_t = 1.0)]
        theta: f64,
        #[arg(long, default_value_t = 1.0)]
        beta: f64,
        /// Abort with exit code 2 once more trains would be produced
        #[arg(long, default_value_t = 4096)]
        cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Minimal-l1 admissible spike train for a discrete JSON signal
    Oracle {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, default_value_t = 1.0)]
        theta: f64,
        #[arg(long, default_value_t = 1.0)]
        beta: f64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Generate constrained random signals
    Gen {
        #[arg(long, value_enum)]
        constraint: Constraint,
        #[arg(short = 'K', long, default_value_t = 1.0)]
        k: f64,
        #[arg(short = 'N', long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 1.0)]
        theta: f64,
        #[arg(long, default_value_t = 1)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Sparsity-ratio experiment (CSV rows and per-beta mean summaries)
    Ratio {
        #[arg(long, value_enum)]
        constraint: Constraint,
        #[arg(short = 'K', long, default_value_t = 1.0)]
        k: f64,
        #[arg(short = 'N', long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 1.0)]
        theta: f64,
        /// Comma-separated leak factors
        #[arg(long, value_delimiter = ',', default_values_t = vec![0.2, 0.5, 0.8, 1.0])]
        betas: Vec<f64>,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file (stdout when omitted)
        #[arg(long)]
        out: Option<String>,
    },
    /// Sparsity-gap experiment over all admissible quantizer outputs
    Gap {
        #[arg(long, value_enum)]
        constraint: Constraint,
        #[arg(short = 'K', long, default_value_t = 1.0)]
        k: f64,
        #[arg(short = 'N', long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 1.0)]
        theta: f64,
        #[arg(long, value_delimiter = ',', default_values_t = vec![0.2, 0.5, 0.8])]
        betas: Vec<f64>,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<String>,
    },
    /// Alternating resonance signal: encoder output vs the single-spike
    /// alternative, optionally with additive Gaussian noise
    Counterexample {
        #[arg(long, default_value_t = 0.8)]
        beta: f64,
        #[arg(short = 'n', long, default_value_t = 20)]
        n: usize,
        /// Noise standard deviation (omit for the noiseless run)
        #[arg(long)]
        noise: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Experiment(#[from] ExperimentError),
    #[error("invalid JSON input: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        let infeasible = |e: &SearchError| {
            matches!(
                e,
                SearchError::CapExceeded { .. } | SearchError::InfeasibleLength { .. }
            )
        };
        match self {
            CliError::Search(e) if infeasible(e) => 2,
            CliError::Experiment(ExperimentError::Search(e)) if infeasible(e) => 2,
            _ => 1,
        }
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

#[derive(Deserialize)]
struct NodeList {
    nodes: Vec<Node>,
}

#[derive(Deserialize)]
struct Node {
    t: f64,
    v: f64,
}

fn fmt_f(v: f64) -> String {
    format!("{v}")
}

fn join_amplitudes(train: &SpikeTrain) -> String {
    train
        .events()
        .iter()
        .map(|e| format!("{}@{}", fmt_f(e.amplitude), fmt_f(e.t)))
        .collect::<Vec<_>>()
        .join(";")
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Encode {
            input,
            theta,
            beta,
            mode,
            continuous,
        } => {
            let text = read_input(&input)?;
            let train = match mode {
                Mode::Sod => {
                    let nodes: NodeList = serde_json::from_str(&text)?;
                    let pairs: Vec<(f64, f64)> = nodes.nodes.iter().map(|n| (n.t, n.v)).collect();
                    sod_encode(&pairs, theta)?
                }
                Mode::Lif | Mode::If => {
                    let b = match mode {
                        Mode::If => 1.0,
                        _ => beta,
                    };
                    let params = EncoderParams::new(theta, b)?;
                    if continuous {
                        let f: ContinuousSignal = serde_json::from_str(&text)?;
                        lif_continuous(&f, &params)?
                    } else {
                        let f: DiscreteSignal = serde_json::from_str(&text)?;
                        lif_discrete(&f, &params)
                    }
                }
            };
            println!("{}", serde_json::to_string(&train)?);
        }
        Command::Norm {
            input,
            beta,
            continuous,
            format,
        } => {
            let text = read_input(&input)?;
            let value = if continuous {
                let f: ContinuousSignal = serde_json::from_str(&text)?;
                if beta == 0.0 {
                    return Err(ValidationError::InvalidBeta(beta).into());
                }
                alexiewicz_norm_continuous(&f, -beta.ln())?
            } else {
                let f: DiscreteSignal = serde_json::from_str(&text)?;
                alexiewicz_norm_discrete(&f, beta)?
            };
            match format {
                Format::Csv => {
                    println!("norm");
                    println!("{}", fmt_f(value));
                }
                Format::Json => println!("{}", serde_json::json!({ "norm": value })),
            }
        }
        Command::Bounds {
            input,
            theta,
            beta,
            format,
        } => {
            let text = read_input(&input)?;
            let f: DiscreteSignal = serde_json::from_str(&text)?;
            let report = sparsity_bounds(&f, &EncoderParams::new(theta, beta)?);
            match format {
                Format::Csv => {
                    println!("lower,lif_l1,upper,lambda,interior");
                    println!(
                        "{},{},{},{},{}",
                        fmt_f(report.lower),
                        fmt_f(report.lif_l1),
                        fmt_f(report.upper),
                        report
                            .lambda
                            .map(fmt_f)
                            .unwrap_or_else(|| "undefined".into()),
                        report.interior
                    );
                }
                Format::Json => println!("{}", serde_json::to_string(&report)?),
            }
        }
        Command::Enumerate {
            input,
            theta,
            beta,
            cap,
            format,
        } => {
            let text = read_input(&input)?;
            let f: DiscreteSignal = serde_json::from_str(&text)?;
            let trains = enumerate_admissible(&f, &EncoderParams::new(theta, beta)?, cap)?;
            match format {
                Format::Csv => {
                    println!("index,l1,events");
                    for (i, t) in trains.iter().enumerate() {
                        println!("{},{},{}", i, fmt_f(t.l1_norm()), join_amplitudes(t));
                    }
                }
                Format::Json => {
                    let items: Vec<serde_json::Value> = trains
                        .iter()
                        .map(|t| serde_json::json!({ "l1": t.l1_norm(), "train": t }))
                        .collect();
                    println!("{}", serde_json::Value::Array(items));
                }
            }
        }
        Command::Oracle {
            input,
            theta,
            beta,
            format,
        } => {
            let text = read_input(&input)?;
            let f: DiscreteSignal = serde_json::from_str(&text)?;
            let (train, value) = min_l1_admissible(&f, &EncoderParams::new(theta, beta)?)?;
            match format {
                Format::Csv => {
                    println!("value,events");
                    println!("{},{}", fmt_f(value), join_amplitudes(&train));
                }
                Format::Json => {
                    println!("{}", serde_json::json!({ "value": value, "train": train }));
                }
            }
        }
        Command::Gen {
            constraint,
            k,
            n,
            theta,
            trials,
            seed,
            format,
        } => {
            let config = ExperimentConfig {
                constraint: constraint.into(),
                k,
                n,
                theta,
                beta_grid: vec![1.0],
                trials,
                seed,
            };
            config.validate()?;
            match format {
                Format::Csv => {
                    println!("# spike-quant v1; seed={seed}; config=gen {config}");
                    let header: Vec<String> = (1..=n).map(|i| format!("f{i}")).collect();
                    println!("trial,{}", header.join(","));
                    for trial in 0..trials {
                        let f = spike_quant::experiments::generate_signal(&config, trial);
                        let row: Vec<String> = f.samples().iter().map(|v| fmt_f(*v)).collect();
                        println!("{},{}", trial, row.join(","));
                    }
                }
                Format::Json => {
                    for trial in 0..trials {
                        let f = spike_quant::experiments::generate_signal(&config, trial);
                        println!("{}", serde_json::json!({ "trial": trial, "signal": f }));
                    }
                }
            }
        }
        Command::Ratio {
            constraint,
            k,
            n,
            theta,
            betas,
            trials,
            seed,
            out,
        } => {
            let config = ExperimentConfig {
                constraint: constraint.into(),
                k,
                n,
                theta,
                beta_grid: betas,
                trials,
                seed,
            };
            with_output(out.as_deref(), |w| {
                run_ratio_experiment(&config, w).map(|_| ())
            })?;
        }
        Command::Gap {
            constraint,
            k,
            n,
            theta,
            betas,
            trials,
            seed,
            out,
        } => {
            let config = ExperimentConfig {
                constraint: constraint.into(),
                k,
                n,
                theta,
                beta_grid: betas,
                trials,
                seed,
            };
            with_output(out.as_deref(), |w| {
                run_gap_experiment(&config, w).map(|_| ())
            })?;
        }
        Command::Counterexample {
            beta,
            n,
            noise,
            seed,
            format,
        } => {
            let report = run_counterexample_experiment(beta, n, noise, seed)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
                Format::Csv => {
                    println!("key,value");
                    println!("beta,{}", fmt_f(report.beta));
                    println!("n,{}", report.n);
                    println!("theta,{}", fmt_f(report.theta));
                    println!("step_amplitude,{}", fmt_f(report.step_amplitude));
                    println!("lif_l1,{}", fmt_f(report.lif_l1));
                    println!("lif_events,{}", report.lif_events);
                    println!("single_spike_l1,{}", fmt_f(report.single_spike_l1));
                    println!(
                        "single_spike_distance,{}",
                        fmt_f(report.single_spike_distance)
                    );
                    println!("single_spike_admissible,{}", report.single_spike_admissible);
                    println!("best_admissible_l1,{}", fmt_f(report.best_admissible_l1));
                    if let Some(noise) = &report.noise {
                        println!("noise_sigma,{}", fmt_f(noise.sigma));
                        println!("noisy_lif_l1,{}", fmt_f(noise.lif_l1));
                        println!("noisy_lif_events,{}", noise.lif_events);
                    }
                }
            }
        }
    }
    Ok(())
}

fn with_output(
    path: Option<&str>,
    f: impl FnOnce(&mut dyn Write) -> Result<(), ExperimentError>,
) -> Result<(), CliError> {
    match path {
        Some(p) => {
            let mut file = fs::File::create(p)?;
            f(&mut file)?;
            Ok(())
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            f(&mut lock)?;
            Ok(())
        }
    }
}

fn main() {
    let cli = Cli::try_parse().unwrap_or_else(|e| {
        // clap prints its own message; fold usage errors into the
        // validation exit code
        let _ = e.print();
        std::process::exit(if e.use_stderr() { 1 } else { 0 });
    });
    if let Err(err) = run(cli) {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}
