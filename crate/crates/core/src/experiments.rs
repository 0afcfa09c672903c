//! Batch experiment harness: constrained random-signal generators, the
//! alternating resonance signal and its noisy variant, and CSV-emitting
//! runners for the sparsity-ratio and sparsity-gap distributions.
//!
//! Every random draw is derived from a counter-based generator keyed by
//! `(seed, trial_index)` (one ChaCha8 stream per trial), so trials can run
//! in any order or in parallel and still produce byte-identical output.

use crate::encoder::{lif_continuous, lif_continuous_traced};
use crate::error::{ExperimentError, ValidationError};
use crate::search::{is_admissible_continuous, sparsity_gap_distribution};
use crate::signal::{
    ContinuousSignal, DiscreteSignal, EncoderParams, L1Norm, Segment, SpikeEvent, SpikeTrain,
};
use crate::sparsity::sparsity_bounds;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::Serialize;
use std::fmt;
use std::io::Write;

/// The constraint family a generated signal satisfies exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstraintFamily {
    /// `|f_i| <= K theta`
    Amplitude,
    /// `|f_(i+1) - f_i| <= K theta`
    FirstDiff,
    /// `|f_(k+2) - 2 f_(k+1) + f_k| <= K theta`
    SecondDiff,
}

impl fmt::Display for ConstraintFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ConstraintFamily::Amplitude => "amplitude",
            ConstraintFamily::FirstDiff => "first-diff",
            ConstraintFamily::SecondDiff => "second-diff",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for ConstraintFamily {
    type Err = ValidationError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "amplitude" => Ok(ConstraintFamily::Amplitude),
            "first-diff" => Ok(ConstraintFamily::FirstDiff),
            "second-diff" => Ok(ConstraintFamily::SecondDiff),
            other => Err(ValidationError::InvalidConfig(format!(
                "unknown constraint family '{other}' (expected amplitude, first-diff or second-diff)"
            ))),
        }
    }
}

/// Configuration of a batch experiment.
#[derive(Debug, Clone, Serialize)]
pub struct ExperimentConfig {
    pub constraint: ConstraintFamily,
    pub k: f64,
    pub n: usize,
    pub theta: f64,
    pub beta_grid: Vec<f64>,
    pub trials: u64,
    pub seed: u64,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<(), ValidationError> {
        if !(self.k >= 0.0 && self.k.is_finite()) {
            return Err(ValidationError::InvalidConfig(format!(
                "K must be nonnegative, got {}",
                self.k
            )));
        }
        if self.n == 0 {
            return Err(ValidationError::InvalidConfig("N must be >= 1".into()));
        }
        if self.trials == 0 {
            return Err(ValidationError::InvalidConfig("trials must be >= 1".into()));
        }
        if !(self.theta > 0.0 && self.theta.is_finite()) {
            return Err(ValidationError::InvalidTheta(self.theta));
        }
        if self.beta_grid.is_empty() {
            return Err(ValidationError::InvalidConfig(
                "beta grid must not be empty".into(),
            ));
        }
        for &b in &self.beta_grid {
            if !(0.0..=1.0).contains(&b) {
                return Err(ValidationError::InvalidBeta(b));
            }
        }
        Ok(())
    }
}

impl fmt::Display for ExperimentConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let betas: Vec<String> = self.beta_grid.iter().map(|b| format!("{b}")).collect();
        write!(
            f,
            "constraint={} K={} N={} theta={} betas={} trials={}",
            self.constraint,
            self.k,
            self.n,
            self.theta,
            betas.join(","),
            self.trials
        )
    }
}

/// One independent random stream per `(seed, trial)` pair.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn uniform(rng: &mut ChaCha8Rng, bound: f64) -> f64 {
    if bound == 0.0 {
        0.0
    } else {
        rng.random_range(-bound..=bound)
    }
}

/// Draws the signal for `trial` under the configured constraint family.
///
/// Amplitude constraints sample i.i.d. uniformly from `[-K theta, K theta]`;
/// difference constraints integrate uniform increments (once or twice)
/// starting from zero, so the stated bound holds exactly by construction.
pub fn generate_signal(config: &ExperimentConfig, trial: u64) -> DiscreteSignal {
    let mut rng = trial_rng(config.seed, trial);
    let bound = config.k * config.theta;
    let n = config.n;
    let samples: Vec<f64> = match config.constraint {
        ConstraintFamily::Amplitude => (0..n).map(|_| uniform(&mut rng, bound)).collect(),
        ConstraintFamily::FirstDiff => {
            let mut f = 0.0f64;
            (0..n)
                .map(|i| {
                    if i > 0 {
                        f += uniform(&mut rng, bound);
                    }
                    f
                })
                .collect()
        }
        ConstraintFamily::SecondDiff => {
            let mut f = 0.0f64;
            let mut d = 0.0f64;
            (0..n)
                .map(|i| {
                    if i > 0 {
                        f += d;
                        d += uniform(&mut rng, bound);
                    }
                    f
                })
                .collect()
        }
    };
    debug_assert!(satisfies_constraint(&samples, config.constraint, bound));
    DiscreteSignal::new(samples).expect("generated signals are nonempty and finite")
}

fn satisfies_constraint(samples: &[f64], family: ConstraintFamily, bound: f64) -> bool {
    let slack = 1e-12 * (1.0 + bound);
    match family {
        ConstraintFamily::Amplitude => samples.iter().all(|v| v.abs() <= bound + slack),
        ConstraintFamily::FirstDiff => samples
            .windows(2)
            .all(|w| (w[1] - w[0]).abs() <= bound + slack),
        ConstraintFamily::SecondDiff => samples
            .windows(3)
            .all(|w| (w[2] - 2.0 * w[1] + w[0]).abs() <= bound + slack),
    }
}

/// The step amplitude for which the unit-interval leaky integral reaches
/// exactly one: `alpha / (1 - e^(-alpha))` with `alpha = -ln(beta)`.
pub fn resonant_step_amplitude(beta: f64) -> Result<f64, ValidationError> {
    if !(0.0 < beta && beta < 1.0) {
        return Err(ValidationError::InvalidBeta(beta));
    }
    let alpha = -beta.ln();
    Ok(alpha / (1.0 - beta))
}

/// Alternating step signal of `n` unit intervals whose amplitude drives the
/// leaky potential to the threshold exactly at every integer time, for the
/// canonical threshold 1.
pub fn counterexample_signal(beta: f64, n: usize) -> Result<ContinuousSignal, ValidationError> {
    if n == 0 {
        return Err(ValidationError::EmptySignal);
    }
    let a = resonant_step_amplitude(beta)?;
    let segments = (0..n)
        .map(|k| Segment {
            start: k as f64,
            end: (k + 1) as f64,
            value: if k % 2 == 0 { a } else { -a },
        })
        .collect();
    ContinuousSignal::new(segments, Vec::new())
}

/// Discrete variant: alternating `+1, -1, ...` samples.
pub fn counterexample_discrete(n: usize) -> Result<DiscreteSignal, ValidationError> {
    if n == 0 {
        return Err(ValidationError::EmptySignal);
    }
    DiscreteSignal::new(
        (0..n)
            .map(|k| if k % 2 == 0 { 1.0 } else { -1.0 })
            .collect(),
    )
}

/// Adds i.i.d. zero-mean Gaussian noise of standard deviation `sigma` to
/// every sample.
pub fn add_noise_discrete(
    f: &DiscreteSignal,
    sigma: f64,
    seed: u64,
) -> Result<DiscreteSignal, ValidationError> {
    if !(sigma >= 0.0 && sigma.is_finite()) {
        return Err(ValidationError::InvalidConfig(format!(
            "noise sigma must be nonnegative, got {sigma}"
        )));
    }
    if sigma == 0.0 {
        return Ok(f.clone());
    }
    let normal = Normal::new(0.0, sigma).expect("sigma validated above");
    let mut rng = trial_rng(seed, 0);
    DiscreteSignal::new(
        f.samples()
            .iter()
            .map(|v| v + normal.sample(&mut rng))
            .collect(),
    )
}

/// Adds i.i.d. zero-mean Gaussian noise to every segment value; impulses are
/// untouched.
pub fn add_noise_continuous(
    f: &ContinuousSignal,
    sigma: f64,
    seed: u64,
) -> Result<ContinuousSignal, ValidationError> {
    if !(sigma >= 0.0 && sigma.is_finite()) {
        return Err(ValidationError::InvalidConfig(format!(
            "noise sigma must be nonnegative, got {sigma}"
        )));
    }
    if sigma == 0.0 {
        return Ok(f.clone());
    }
    let normal = Normal::new(0.0, sigma).expect("sigma validated above");
    let mut rng = trial_rng(seed, 0);
    let segments = f
        .segments()
        .iter()
        .map(|s| Segment {
            value: s.value + normal.sample(&mut rng),
            ..*s
        })
        .collect();
    ContinuousSignal::new(segments, f.impulses().to_vec())
}

fn fmt_f(v: f64) -> String {
    format!("{v}")
}

/// Mean sparsity ratio per leak factor, over the trials where the ratio is
/// defined.
#[derive(Debug, Clone, Serialize)]
pub struct RatioSummary {
    pub per_beta: Vec<BetaLambda>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BetaLambda {
    pub beta: f64,
    pub mean_lambda: f64,
    pub defined: u64,
}

/// Runs the sparsity-ratio experiment, writing one CSV row per
/// `(trial, beta)` pair followed by per-beta summary comments.
pub fn run_ratio_experiment(
    config: &ExperimentConfig,
    out: &mut dyn Write,
) -> Result<RatioSummary, ExperimentError> {
    config.validate()?;
    writeln!(
        out,
        "# spike-quant v1; seed={}; config=ratio {config}",
        config.seed
    )?;
    writeln!(
        out,
        "# lambda is undefined when |f|_1 equals the lower bound"
    )?;
    writeln!(out, "trial,beta,c,lif_l1,upper,lambda")?;
    let mut sums = vec![(0.0f64, 0u64); config.beta_grid.len()];
    for trial in 0..config.trials {
        let f = generate_signal(config, trial);
        for (bi, &beta) in config.beta_grid.iter().enumerate() {
            let params = EncoderParams::new(config.theta, beta)?;
            let report = sparsity_bounds(&f, &params);
            let lambda_str = match report.lambda {
                Some(l) => {
                    sums[bi].0 += l;
                    sums[bi].1 += 1;
                    fmt_f(l)
                }
                None => "undefined".to_string(),
            };
            writeln!(
                out,
                "{},{},{},{},{},{}",
                trial,
                fmt_f(beta),
                fmt_f(report.lower),
                fmt_f(report.lif_l1),
                fmt_f(report.upper),
                lambda_str
            )?;
        }
    }
    let per_beta: Vec<BetaLambda> = config
        .beta_grid
        .iter()
        .zip(&sums)
        .map(|(&beta, &(sum, defined))| BetaLambda {
            beta,
            mean_lambda: if defined > 0 {
                sum / defined as f64
            } else {
                f64::NAN
            },
            defined,
        })
        .collect();
    for s in &per_beta {
        writeln!(
            out,
            "# mean_lambda beta={} value={} defined={}",
            fmt_f(s.beta),
            fmt_f(s.mean_lambda),
            s.defined
        )?;
    }
    Ok(RatioSummary { per_beta })
}

/// Fraction of trials per leak factor in which the encoder attains the
/// minimal l1 norm among all admissible outputs.
#[derive(Debug, Clone, Serialize)]
pub struct GapSummary {
    pub per_beta: Vec<BetaGapStats>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BetaGapStats {
    pub beta: f64,
    pub frac_all_nonneg: f64,
    pub trials: u64,
}

/// Runs the sparsity-gap experiment: per trial and leak factor the full gap
/// multiset over admissible quantizer outputs, with per-beta summaries of
/// how often the encoder is minimal.
pub fn run_gap_experiment(
    config: &ExperimentConfig,
    out: &mut dyn Write,
) -> Result<GapSummary, ExperimentError> {
    config.validate()?;
    writeln!(
        out,
        "# spike-quant v1; seed={}; config=gap {config}",
        config.seed
    )?;
    writeln!(
        out,
        "# gaps column holds the full multiset, semicolon-separated"
    )?;
    writeln!(
        out,
        "trial,beta,lif_l1,n_admissible,min_gap,frac_nonneg,gaps"
    )?;
    let cap = 1usize << 20;
    let mut all_nonneg = vec![0u64; config.beta_grid.len()];
    for trial in 0..config.trials {
        let f = generate_signal(config, trial);
        for (bi, &beta) in config.beta_grid.iter().enumerate() {
            let params = EncoderParams::new(config.theta, beta)?;
            let dist = sparsity_gap_distribution(&f, &params, cap)?;
            if dist.gaps.iter().all(|g| *g >= 0.0) {
                all_nonneg[bi] += 1;
            }
            let gaps: Vec<String> = dist.gaps.iter().map(|g| fmt_f(*g)).collect();
            writeln!(
                out,
                "{},{},{},{},{},{},{}",
                trial,
                fmt_f(beta),
                fmt_f(dist.lif_l1),
                dist.gaps.len(),
                fmt_f(dist.min_gap()),
                fmt_f(dist.frac_nonneg),
                gaps.join(";")
            )?;
        }
    }
    let per_beta: Vec<BetaGapStats> = config
        .beta_grid
        .iter()
        .zip(&all_nonneg)
        .map(|(&beta, &count)| BetaGapStats {
            beta,
            frac_all_nonneg: count as f64 / config.trials as f64,
            trials: config.trials,
        })
        .collect();
    for s in &per_beta {
        writeln!(
            out,
            "# frac_all_nonneg beta={} value={} trials={}",
            fmt_f(s.beta),
            fmt_f(s.frac_all_nonneg),
            s.trials
        )?;
    }
    Ok(GapSummary { per_beta })
}

/// Outcome of encoding the resonance signal, with and without noise.
#[derive(Debug, Clone, Serialize)]
pub struct CounterexampleReport {
    pub beta: f64,
    pub n: usize,
    pub theta: f64,
    pub step_amplitude: f64,
    pub lif_l1: f64,
    pub lif_events: usize,
    /// Single spike placed inside the first interval; strictly admissible
    /// for every leak factor in (0, 1).
    pub single_spike: SpikeTrain,
    pub single_spike_l1: f64,
    pub single_spike_distance: f64,
    pub single_spike_admissible: bool,
    /// Best admissible l1 norm exhibited: the single spike when admissible,
    /// otherwise the encoder output.
    pub best_admissible_l1: f64,
    pub noise: Option<NoiseOutcome>,
    pub trace: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct NoiseOutcome {
    pub sigma: f64,
    pub seed: u64,
    pub lif_l1: f64,
    pub lif_events: usize,
}

/// Encodes the alternating resonance signal and verifies the single-spike
/// alternative explicitly instead of trusting the construction.
pub fn run_counterexample_experiment(
    beta: f64,
    n: usize,
    noise_sigma: Option<f64>,
    seed: u64,
) -> Result<CounterexampleReport, ValidationError> {
    let theta = 1.0;
    let h = counterexample_signal(beta, n)?;
    let params = EncoderParams::new(theta, beta)?;
    let (lif, trace) = lif_continuous_traced(&h, &params)?;

    // one threshold-sized spike halfway through the first interval; at the
    // interval ends the residual integral only touches the threshold in the
    // limit, so membership in the open ball is strict
    let single_spike = SpikeTrain::new(
        theta,
        vec![SpikeEvent {
            t: 0.5,
            amplitude: theta,
        }],
    )?;
    let verdict = is_admissible_continuous(&h, &single_spike, &params)?;

    let lif_l1 = lif.l1_norm();
    let best_admissible_l1 = if verdict.admissible() {
        single_spike.l1_norm()
    } else {
        lif_l1
    };

    let noise = match noise_sigma {
        Some(sigma) if sigma > 0.0 => {
            let noisy = add_noise_continuous(&h, sigma, seed)?;
            let noisy_lif = lif_continuous(&noisy, &params)?;
            Some(NoiseOutcome {
                sigma,
                seed,
                lif_l1: noisy_lif.l1_norm(),
                lif_events: noisy_lif.events().len(),
            })
        }
        _ => None,
    };

    Ok(CounterexampleReport {
        beta,
        n,
        theta,
        step_amplitude: resonant_step_amplitude(beta)?,
        lif_l1,
        lif_events: lif.events().len(),
        single_spike_l1: single_spike.l1_norm(),
        single_spike_distance: verdict.distance,
        single_spike_admissible: verdict.admissible(),
        single_spike,
        best_admissible_l1,
        noise,
        trace,
    })
}
