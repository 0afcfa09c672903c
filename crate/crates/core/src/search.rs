//! Exhaustive machinery over admissible spike trains: the per-step
//! two-choice scheme, depth-first enumeration of every train inside the open
//! Alexiewicz ball, a branch-and-bound minimal-l1 oracle, and admissibility
//! verdicts for the sparsity and accuracy conditions.

use crate::alexiewicz::alexiewicz_distance;
use crate::encoder::{lif_discrete, quantize_trunc};
use crate::error::{SearchError, ValidationError};
use crate::signal::{
    ContinuousSignal, DiscreteSignal, EncoderParams, L1Norm, SpikeEvent, SpikeTrain, INT_TOL,
};

/// Longest signal accepted by the exhaustive searches.
pub const MAX_EXHAUSTIVE_LEN: usize = 24;

/// Fills `out` with the threshold multiples a causal quantizer may emit for
/// the effective pre-quantization value `x` while keeping the step residual
/// strictly below `theta`; returns how many there are.
///
/// Off the grid the choices are the truncation and the next multiple away
/// from zero; on the grid (within the integer tolerance) the choice is
/// unique.
fn step_options(x: f64, theta: f64, out: &mut [f64; 2]) -> usize {
    let ratio = x / theta;
    let nearest = ratio.round();
    if (ratio - nearest).abs() <= INT_TOL {
        out[0] = nearest * theta;
        1
    } else {
        let q = quantize_trunc(x, theta);
        out[0] = q;
        out[1] = q + x.signum() * theta;
        2
    }
}

/// The admissible spike amplitudes at one step, in enumeration order.
pub fn admissible_options(x: f64, theta: f64) -> Vec<f64> {
    let mut buf = [0.0f64; 2];
    let n = step_options(x, theta, &mut buf);
    buf[..n].to_vec()
}

fn check_len(len: usize) -> Result<(), SearchError> {
    if len > MAX_EXHAUSTIVE_LEN {
        return Err(SearchError::InfeasibleLength {
            len,
            max: MAX_EXHAUSTIVE_LEN,
        });
    }
    Ok(())
}

fn train_from_dense(theta: f64, dense: &[f64]) -> SpikeTrain {
    let events = dense
        .iter()
        .enumerate()
        .filter(|(_, a)| **a != 0.0)
        .map(|(k, a)| SpikeEvent {
            t: (k + 1) as f64,
            amplitude: *a,
        })
        .collect();
    SpikeTrain::new_unchecked(theta, events)
}

/// Enumerates every spike train on the `theta` grid inside the open
/// Alexiewicz ball around `f`, in depth-first order with the truncation
/// branch explored first. Fails with [`SearchError::CapExceeded`] once more
/// than `cap` trains would be produced.
pub fn enumerate_admissible(
    f: &DiscreteSignal,
    params: &EncoderParams,
    cap: usize,
) -> Result<Vec<SpikeTrain>, SearchError> {
    check_len(f.len())?;
    let mut out = Vec::new();
    let mut dense = vec![0.0f64; f.len()];
    enumerate_rec(f.samples(), params, 0, 0.0, &mut dense, &mut |dense| {
        if out.len() == cap {
            return Err(SearchError::CapExceeded { cap });
        }
        out.push(train_from_dense(params.theta(), dense));
        Ok(())
    })?;
    Ok(out)
}

fn enumerate_rec(
    samples: &[f64],
    params: &EncoderParams,
    k: usize,
    residual: f64,
    dense: &mut Vec<f64>,
    sink: &mut impl FnMut(&[f64]) -> Result<(), SearchError>,
) -> Result<(), SearchError> {
    if k == samples.len() {
        return sink(dense);
    }
    let x = samples[k] + params.beta() * residual;
    let mut buf = [0.0f64; 2];
    let n = step_options(x, params.theta(), &mut buf);
    for &option in &buf[..n] {
        dense[k] = option;
        enumerate_rec(samples, params, k + 1, x - option, dense, sink)?;
    }
    dense[k] = 0.0;
    Ok(())
}

/// Minimal-l1 admissible spike train and its l1 norm.
///
/// Depth-first branch and bound: the encoder output (always admissible)
/// seeds the incumbent, and a branch is cut as soon as its partial l1 norm
/// reaches the incumbent. Ties keep the first train in enumeration order.
pub fn min_l1_admissible(
    f: &DiscreteSignal,
    params: &EncoderParams,
) -> Result<(SpikeTrain, f64), SearchError> {
    check_len(f.len())?;
    let lif = lif_discrete(f, params);
    let mut best_value = lif.l1_norm();
    let mut best_dense = lif
        .amplitude_sequence(f.len())
        .expect("encoder output lives on the unit grid");
    let mut dense = vec![0.0f64; f.len()];
    min_rec(
        f.samples(),
        params,
        0,
        0.0,
        0.0,
        &mut dense,
        &mut best_value,
        &mut best_dense,
    );
    Ok((train_from_dense(params.theta(), &best_dense), best_value))
}

#[allow(clippy::too_many_arguments)]
fn min_rec(
    samples: &[f64],
    params: &EncoderParams,
    k: usize,
    residual: f64,
    partial: f64,
    dense: &mut Vec<f64>,
    best_value: &mut f64,
    best_dense: &mut Vec<f64>,
) {
    if partial >= *best_value {
        return;
    }
    if k == samples.len() {
        *best_value = partial;
        best_dense.copy_from_slice(dense);
        return;
    }
    let x = samples[k] + params.beta() * residual;
    let mut buf = [0.0f64; 2];
    let n = step_options(x, params.theta(), &mut buf);
    for &option in &buf[..n] {
        dense[k] = option;
        min_rec(
            samples,
            params,
            k + 1,
            x - option,
            partial + option.abs(),
            dense,
            best_value,
            best_dense,
        );
    }
    dense[k] = 0.0;
}

/// Verdicts of the two pointwise admissibility conditions for a candidate
/// train: at most as large as the signal in l1, and strictly inside the
/// Alexiewicz ball. (Causality is structural: the enumerator builds trains
/// step by step, so its outputs satisfy it by construction.)
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct AdmissibilityReport {
    pub sparsity_ok: bool,
    pub accuracy_ok: bool,
    pub train_l1: f64,
    pub signal_l1: f64,
    pub distance: f64,
}

impl AdmissibilityReport {
    pub fn admissible(&self) -> bool {
        self.sparsity_ok && self.accuracy_ok
    }
}

fn admissibility(train_l1: f64, signal_l1: f64, distance: f64, theta: f64) -> AdmissibilityReport {
    AdmissibilityReport {
        sparsity_ok: train_l1 <= signal_l1,
        accuracy_ok: distance < theta,
        train_l1,
        signal_l1,
        distance,
    }
}

/// Checks the sparsity and accuracy conditions of `s` against a discrete
/// signal.
pub fn is_admissible(
    f: &DiscreteSignal,
    s: &SpikeTrain,
    params: &EncoderParams,
) -> Result<AdmissibilityReport, ValidationError> {
    let distance = alexiewicz_distance(f, s, params)?;
    Ok(admissibility(
        s.l1_norm(),
        f.l1_norm(),
        distance,
        params.theta(),
    ))
}

/// Checks the sparsity and accuracy conditions of `s` against a continuous
/// signal.
pub fn is_admissible_continuous(
    f: &ContinuousSignal,
    s: &SpikeTrain,
    params: &EncoderParams,
) -> Result<AdmissibilityReport, ValidationError> {
    let distance = alexiewicz_distance(f, s, params)?;
    Ok(admissibility(
        s.l1_norm(),
        f.l1_norm(),
        distance,
        params.theta(),
    ))
}

/// The multiset of l1 gaps `|Q(f)|_1 - |LIF(f)|_1` over all admissible
/// quantizer outputs.
#[derive(Debug, Clone)]
pub struct GapDistribution {
    pub gaps: Vec<f64>,
    pub lif_l1: f64,
    /// Fraction of the gaps that are nonnegative, i.e. of admissible outputs
    /// the encoder is at least as sparse as.
    pub frac_nonneg: f64,
}

impl GapDistribution {
    pub fn min_gap(&self) -> f64 {
        self.gaps.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

/// Enumerates the trains inside the open ball that additionally satisfy the
/// sparsity condition and returns their l1 gaps relative to the encoder
/// output.
pub fn sparsity_gap_distribution(
    f: &DiscreteSignal,
    params: &EncoderParams,
    cap: usize,
) -> Result<GapDistribution, SearchError> {
    check_len(f.len())?;
    let lif_l1 = lif_discrete(f, params).l1_norm();
    let signal_l1 = f.l1_norm();
    let mut gaps = Vec::new();
    let mut dense = vec![0.0f64; f.len()];
    enumerate_rec(f.samples(), params, 0, 0.0, &mut dense, &mut |dense| {
        let l1: f64 = dense.iter().map(|a| a.abs()).sum();
        if l1 <= signal_l1 {
            if gaps.len() == cap {
                return Err(SearchError::CapExceeded { cap });
            }
            gaps.push(l1 - lif_l1);
        }
        Ok(())
    })?;
    let nonneg = gaps.iter().filter(|g| **g >= 0.0).count();
    let frac_nonneg = if gaps.is_empty() {
        1.0
    } else {
        nonneg as f64 / gaps.len() as f64
    };
    Ok(GapDistribution {
        gaps,
        lif_l1,
        frac_nonneg,
    })
}
