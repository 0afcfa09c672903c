//! Signal and spike-train data model shared by all other modules.
//!
//! Three signal classes are supported: finite real-valued sample sequences at
//! unit time steps ([`DiscreteSignal`]), piecewise-constant functions with
//! finitely many weighted Dirac impulses ([`ContinuousSignal`]), and spike
//! trains whose amplitudes are integer multiples of a threshold
//! ([`SpikeTrain`]). All types validate their invariants on construction and
//! are immutable afterwards, so every downstream operation is a pure function.

use crate::error::ValidationError;
use serde::{Deserialize, Serialize};

/// Relative tolerance for deciding whether a value is an integer multiple of
/// the threshold. Amplitudes are produced by exact arithmetic on threshold
/// multiples; the tolerance only absorbs float roundoff.
pub const INT_TOL: f64 = 1e-9;

fn ensure_finite<I: IntoIterator<Item = f64>>(values: I) -> Result<(), ValidationError> {
    for (i, v) in values.into_iter().enumerate() {
        if !v.is_finite() {
            return Err(ValidationError::NonFinite(i));
        }
    }
    Ok(())
}

/// A finite sequence of real samples at implicit unit time steps, indexed
/// from 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawDiscreteSignal")]
pub struct DiscreteSignal {
    samples: Vec<f64>,
}

#[derive(Deserialize)]
struct RawDiscreteSignal {
    samples: Vec<f64>,
}

impl TryFrom<RawDiscreteSignal> for DiscreteSignal {
    type Error = ValidationError;
    fn try_from(raw: RawDiscreteSignal) -> Result<Self, Self::Error> {
        DiscreteSignal::new(raw.samples)
    }
}

impl DiscreteSignal {
    /// Validates that the sequence is nonempty and finite.
    pub fn new(samples: Vec<f64>) -> Result<Self, ValidationError> {
        if samples.is_empty() {
            return Err(ValidationError::EmptySignal);
        }
        ensure_finite(samples.iter().copied())?;
        Ok(Self { samples })
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty sequences
    }

    /// Subtracts the first sample from every sample.
    pub fn offset(&self) -> DiscreteSignal {
        let f0 = self.samples[0];
        DiscreteSignal {
            samples: self.samples.iter().map(|v| v - f0).collect(),
        }
    }

    /// Embeds the sequence as an impulse train at times 1, 2, ..., N on a
    /// zero background over [0, N]. Zero samples carry no impulse.
    pub fn to_impulse_signal(&self) -> ContinuousSignal {
        let horizon = self.samples.len() as f64;
        let impulses = self
            .samples
            .iter()
            .enumerate()
            .filter(|(_, v)| **v != 0.0)
            .map(|(i, v)| Impulse {
                t: (i + 1) as f64,
                weight: *v,
            })
            .collect();
        ContinuousSignal::new(
            vec![Segment {
                start: 0.0,
                end: horizon,
                value: 0.0,
            }],
            impulses,
        )
        .expect("unit-grid impulse embedding is always valid")
    }
}

/// One constant piece of a [`ContinuousSignal`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    #[serde(rename = "t0")]
    pub start: f64,
    #[serde(rename = "t1")]
    pub end: f64,
    #[serde(rename = "v")]
    pub value: f64,
}

/// A weighted Dirac impulse.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Impulse {
    pub t: f64,
    #[serde(rename = "w")]
    pub weight: f64,
}

/// A piecewise-constant function on a finite interval, superimposed with
/// finitely many weighted Dirac impulses. The function is implicitly zero
/// outside its domain.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawContinuousSignal")]
pub struct ContinuousSignal {
    segments: Vec<Segment>,
    impulses: Vec<Impulse>,
}

#[derive(Deserialize)]
struct RawContinuousSignal {
    segments: Vec<Segment>,
    #[serde(default)]
    impulses: Vec<Impulse>,
}

impl TryFrom<RawContinuousSignal> for ContinuousSignal {
    type Error = ValidationError;
    fn try_from(raw: RawContinuousSignal) -> Result<Self, Self::Error> {
        ContinuousSignal::new(raw.segments, raw.impulses)
    }
}

impl ContinuousSignal {
    /// Validates contiguity of the segments and ordering of the impulses.
    ///
    /// Segments must be nonempty, have positive length, start at a
    /// nonnegative time and tile the domain without gaps. Impulse times must
    /// be strictly increasing and lie inside the domain (boundaries
    /// included).
    pub fn new(segments: Vec<Segment>, impulses: Vec<Impulse>) -> Result<Self, ValidationError> {
        if segments.is_empty() {
            return Err(ValidationError::EmptySignal);
        }
        ensure_finite(segments.iter().flat_map(|s| [s.start, s.end, s.value]))?;
        ensure_finite(impulses.iter().flat_map(|i| [i.t, i.weight]))?;
        if segments[0].start < 0.0 {
            return Err(ValidationError::TimeOutOfDomain(segments[0].start));
        }
        for (i, seg) in segments.iter().enumerate() {
            if seg.end <= seg.start {
                return Err(ValidationError::EmptySegment(i));
            }
            if i > 0 && seg.start != segments[i - 1].end {
                return Err(ValidationError::SegmentsNotContiguous {
                    index: i,
                    expected: segments[i - 1].end,
                    found: seg.start,
                });
            }
        }
        let (start, end) = (segments[0].start, segments[segments.len() - 1].end);
        for (i, imp) in impulses.iter().enumerate() {
            if imp.t < start || imp.t > end {
                return Err(ValidationError::TimeOutOfDomain(imp.t));
            }
            if i > 0 && imp.t <= impulses[i - 1].t {
                return Err(ValidationError::NonIncreasingTimes(i));
            }
        }
        Ok(Self { segments, impulses })
    }

    /// A zero-valued signal on [0, horizon] carrying the given impulses.
    pub fn from_impulses(impulses: Vec<Impulse>, horizon: f64) -> Result<Self, ValidationError> {
        let end = impulses
            .iter()
            .map(|i| i.t)
            .fold(horizon, f64::max)
            .max(horizon);
        // non-finite ends are rejected by the constructor below
        if end <= 0.0 {
            return Err(ValidationError::EmptySignal);
        }
        Self::new(
            vec![Segment {
                start: 0.0,
                end,
                value: 0.0,
            }],
            impulses,
        )
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn impulses(&self) -> &[Impulse] {
        &self.impulses
    }

    pub fn start(&self) -> f64 {
        self.segments[0].start
    }

    pub fn end(&self) -> f64 {
        self.segments[self.segments.len() - 1].end
    }

    /// Subtracts the first segment value from every segment value. Impulses
    /// are left untouched; the offset acts on the sampled-function part.
    pub fn offset(&self) -> ContinuousSignal {
        let v0 = self.segments[0].value;
        ContinuousSignal {
            segments: self
                .segments
                .iter()
                .map(|s| Segment {
                    value: s.value - v0,
                    ..*s
                })
                .collect(),
            impulses: self.impulses.clone(),
        }
    }

    /// Pointwise difference `self - other` on the union of both domains,
    /// treating each signal as zero outside its own domain.
    pub fn difference(&self, other: &ContinuousSignal) -> ContinuousSignal {
        let mut cuts: Vec<f64> = self
            .segments
            .iter()
            .chain(other.segments.iter())
            .flat_map(|s| [s.start, s.end])
            .collect();
        cuts.sort_by(f64::total_cmp);
        cuts.dedup();
        let mut segments = Vec::with_capacity(cuts.len().saturating_sub(1));
        for w in cuts.windows(2) {
            let (a, b) = (w[0], w[1]);
            let value = self.value_on(a, b) - other.value_on(a, b);
            segments.push(Segment {
                start: a,
                end: b,
                value,
            });
        }

        let mut impulses: Vec<Impulse> = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.impulses.len() || j < other.impulses.len() {
            let ta = self.impulses.get(i).map(|p| p.t);
            let tb = other.impulses.get(j).map(|p| p.t);
            let (t, weight) = match (ta, tb) {
                (Some(a), Some(b)) if a == b => {
                    let w = self.impulses[i].weight - other.impulses[j].weight;
                    i += 1;
                    j += 1;
                    (a, w)
                }
                (Some(a), Some(b)) if a < b => {
                    i += 1;
                    (a, self.impulses[i - 1].weight)
                }
                (Some(_), Some(b)) => {
                    j += 1;
                    (b, -other.impulses[j - 1].weight)
                }
                (Some(a), None) => {
                    i += 1;
                    (a, self.impulses[i - 1].weight)
                }
                (None, Some(b)) => {
                    j += 1;
                    (b, -other.impulses[j - 1].weight)
                }
                (None, None) => unreachable!(),
            };
            if weight != 0.0 {
                impulses.push(Impulse { t, weight });
            }
        }
        ContinuousSignal { segments, impulses }
    }

    /// Value of the piecewise-constant part on the open interval (a, b),
    /// which must not straddle a breakpoint of `self`.
    fn value_on(&self, a: f64, b: f64) -> f64 {
        let mid = 0.5 * (a + b);
        self.segments
            .iter()
            .find(|s| s.start <= mid && mid < s.end)
            .map(|s| s.value)
            .unwrap_or(0.0)
    }
}

/// A single spike: a time point and an amplitude in `theta * Z`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpikeEvent {
    pub t: f64,
    #[serde(rename = "a")]
    pub amplitude: f64,
}

/// A finite spike train with strictly increasing event times and amplitudes
/// that are nonzero integer multiples of the threshold.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSpikeTrain")]
pub struct SpikeTrain {
    theta: f64,
    events: Vec<SpikeEvent>,
}

#[derive(Deserialize)]
struct RawSpikeTrain {
    theta: f64,
    events: Vec<SpikeEvent>,
}

impl TryFrom<RawSpikeTrain> for SpikeTrain {
    type Error = ValidationError;
    fn try_from(raw: RawSpikeTrain) -> Result<Self, Self::Error> {
        SpikeTrain::new(raw.theta, raw.events)
    }
}

impl SpikeTrain {
    pub fn new(theta: f64, events: Vec<SpikeEvent>) -> Result<Self, ValidationError> {
        if !(theta > 0.0 && theta.is_finite()) {
            return Err(ValidationError::InvalidTheta(theta));
        }
        ensure_finite(events.iter().flat_map(|e| [e.t, e.amplitude]))?;
        for (i, ev) in events.iter().enumerate() {
            if i > 0 && ev.t <= events[i - 1].t {
                return Err(ValidationError::NonIncreasingTimes(i));
            }
            let ratio = ev.amplitude / theta;
            let nearest = ratio.round();
            if nearest == 0.0 || (ratio - nearest).abs() > INT_TOL {
                return Err(ValidationError::AmplitudeOffGrid {
                    index: i,
                    amplitude: ev.amplitude,
                    theta,
                });
            }
        }
        Ok(Self { theta, events })
    }

    /// Constructor for encoder-produced trains whose invariants hold by
    /// construction.
    pub(crate) fn new_unchecked(theta: f64, events: Vec<SpikeEvent>) -> Self {
        debug_assert!(Self::new(theta, events.clone()).is_ok());
        Self { theta, events }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn events(&self) -> &[SpikeEvent] {
        &self.events
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// Embeds the train as an impulse-only signal on [0, horizon] (extended
    /// to the last event time if that is later).
    pub fn to_impulse_signal(&self, horizon: f64) -> Result<ContinuousSignal, ValidationError> {
        let impulses = self
            .events
            .iter()
            .map(|e| Impulse {
                t: e.t,
                weight: e.amplitude,
            })
            .collect();
        ContinuousSignal::from_impulses(impulses, horizon)
    }

    /// Dense amplitude sequence on the unit grid 1..=len, provided every
    /// event time sits on that grid. `len` is extended to cover the last
    /// event.
    pub fn amplitude_sequence(&self, len: usize) -> Result<Vec<f64>, ValidationError> {
        let mut out_len = len;
        for ev in &self.events {
            let k = ev.t.round();
            if (ev.t - k).abs() > INT_TOL || k < 1.0 {
                return Err(ValidationError::IncompatibleSupports(format!(
                    "event time {} is not on the unit grid",
                    ev.t
                )));
            }
            out_len = out_len.max(k as usize);
        }
        let mut dense = vec![0.0; out_len];
        for ev in &self.events {
            dense[ev.t.round() as usize - 1] = ev.amplitude;
        }
        Ok(dense)
    }
}

/// Threshold and leak parameters of the threshold-based encoders. The
/// refractory time is fixed at zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawEncoderParams")]
pub struct EncoderParams {
    theta: f64,
    beta: f64,
}

#[derive(Deserialize)]
struct RawEncoderParams {
    theta: f64,
    beta: f64,
}

impl TryFrom<RawEncoderParams> for EncoderParams {
    type Error = ValidationError;
    fn try_from(raw: RawEncoderParams) -> Result<Self, Self::Error> {
        EncoderParams::new(raw.theta, raw.beta)
    }
}

impl EncoderParams {
    /// `theta > 0`, `beta = e^{-alpha}` in [0, 1].
    pub fn new(theta: f64, beta: f64) -> Result<Self, ValidationError> {
        if !(theta > 0.0 && theta.is_finite()) {
            return Err(ValidationError::InvalidTheta(theta));
        }
        if !(0.0..=1.0).contains(&beta) {
            return Err(ValidationError::InvalidBeta(beta));
        }
        Ok(Self { theta, beta })
    }

    /// Builds parameters from the leak rate `alpha >= 0`.
    pub fn from_alpha(theta: f64, alpha: f64) -> Result<Self, ValidationError> {
        if alpha < 0.0 || alpha.is_nan() {
            return Err(ValidationError::InvalidAlpha(alpha));
        }
        Self::new(theta, (-alpha).exp())
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// The leak rate `alpha = -ln(beta)`; infinite for `beta = 0`.
    pub fn alpha(&self) -> f64 {
        if self.beta == 0.0 {
            f64::INFINITY
        } else {
            -self.beta.ln()
        }
    }
}

/// The l1 norm: sum of absolute sample values, integral of the absolute
/// function plus absolute impulse weights, or sum of absolute spike
/// amplitudes.
pub trait L1Norm {
    fn l1_norm(&self) -> f64;
}

impl L1Norm for DiscreteSignal {
    fn l1_norm(&self) -> f64 {
        self.samples.iter().map(|v| v.abs()).sum()
    }
}

impl L1Norm for ContinuousSignal {
    fn l1_norm(&self) -> f64 {
        let segs: f64 = self
            .segments
            .iter()
            .map(|s| s.value.abs() * (s.end - s.start))
            .sum();
        let imps: f64 = self.impulses.iter().map(|i| i.weight.abs()).sum();
        segs + imps
    }
}

impl L1Norm for SpikeTrain {
    fn l1_norm(&self) -> f64 {
        // fold from +0.0: summing an empty event list must not yield -0.0
        self.events
            .iter()
            .fold(0.0, |acc, e| acc + e.amplitude.abs())
    }
}

/// Derivative of the piecewise-linear interpolant through `nodes`, returned
/// as a piecewise-constant signal without impulses.
pub fn piecewise_linear_derivative(
    nodes: &[(f64, f64)],
) -> Result<ContinuousSignal, ValidationError> {
    if nodes.len() < 2 {
        return Err(ValidationError::TooFewNodes);
    }
    ensure_finite(nodes.iter().flat_map(|(t, v)| [*t, *v]))?;
    let mut segments = Vec::with_capacity(nodes.len() - 1);
    for (i, w) in nodes.windows(2).enumerate() {
        let ((t0, v0), (t1, v1)) = (w[0], w[1]);
        if t1 <= t0 {
            return Err(ValidationError::NonIncreasingTimes(i + 1));
        }
        segments.push(Segment {
            start: t0,
            end: t1,
            value: (v1 - v0) / (t1 - t0),
        });
    }
    ContinuousSignal::new(segments, Vec::new())
}
