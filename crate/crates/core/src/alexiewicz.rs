//! Weighted Alexiewicz norm, the shear transform behind its ball geometry,
//! and ball-membership tests.
//!
//! The norm of a discrete signal is the maximum absolute value of its
//! leak-weighted prefix sums; for a piecewise-constant signal with impulses
//! it is the supremum of the leaky running integral. Both are evaluated in
//! closed form, never by time-gridding, so strict-inequality decisions are
//! exact up to float roundoff.

use crate::error::ValidationError;
use crate::signal::{ContinuousSignal, DiscreteSignal, EncoderParams, SpikeTrain};

fn check_beta(beta: f64) -> Result<(), ValidationError> {
    if !(0.0..=1.0).contains(&beta) {
        return Err(ValidationError::InvalidBeta(beta));
    }
    Ok(())
}

fn check_alpha(alpha: f64) -> Result<(), ValidationError> {
    if !(alpha >= 0.0 && alpha.is_finite()) {
        return Err(ValidationError::InvalidAlpha(alpha));
    }
    Ok(())
}

/// Max absolute value of the leak-weighted prefix sums of `samples`.
pub(crate) fn weighted_sup_norm(samples: &[f64], beta: f64) -> f64 {
    let mut w = 0.0f64;
    let mut best = 0.0f64;
    for &x in samples {
        w = beta * w + x;
        best = best.max(w.abs());
    }
    best
}

/// Advances the leaky integral `u' = c - alpha * u` from `u` over a span of
/// `dt` with constant input `c`. The trajectory is monotone, so its extrema
/// over the span sit at the endpoints.
pub(crate) fn leaky_advance(u: f64, c: f64, alpha: f64, dt: f64) -> f64 {
    if dt <= 0.0 {
        return u;
    }
    if alpha == 0.0 {
        u + c * dt
    } else {
        let decay = (-alpha * dt).exp();
        u * decay + c * (1.0 - decay) / alpha
    }
}

/// Weighted Alexiewicz norm of a discrete signal:
/// `max_n | sum_{k<=n} beta^(n-k) f_k |`.
pub fn alexiewicz_norm_discrete(f: &DiscreteSignal, beta: f64) -> Result<f64, ValidationError> {
    check_beta(beta)?;
    Ok(weighted_sup_norm(f.samples(), beta))
}

/// Weighted Alexiewicz norm of a piecewise-constant signal with impulses:
/// `sup_T | int_0^T e^(-alpha (T-t)) f(t) dt |`.
///
/// The running integral is monotone between events, so the supremum is
/// attained at a segment endpoint or at an impulse instant; the value is
/// checked both before and after each jump.
pub fn alexiewicz_norm_continuous(
    f: &ContinuousSignal,
    alpha: f64,
) -> Result<f64, ValidationError> {
    check_alpha(alpha)?;
    let mut u = 0.0f64;
    let mut best = 0.0f64;
    let impulses = f.impulses();
    let mut idx = 0;
    for seg in f.segments() {
        while idx < impulses.len() && impulses[idx].t <= seg.start {
            u += impulses[idx].weight;
            best = best.max(u.abs());
            idx += 1;
        }
        let mut cur = seg.start;
        while idx < impulses.len() && impulses[idx].t < seg.end {
            let ti = impulses[idx].t;
            u = leaky_advance(u, seg.value, alpha, ti - cur);
            best = best.max(u.abs());
            u += impulses[idx].weight;
            best = best.max(u.abs());
            cur = ti;
            idx += 1;
        }
        u = leaky_advance(u, seg.value, alpha, seg.end - cur);
        best = best.max(u.abs());
    }
    while idx < impulses.len() {
        u += impulses[idx].weight;
        best = best.max(u.abs());
        idx += 1;
    }
    Ok(best)
}

/// Leak-weighted running sums of a discrete signal. Its sup norm equals the
/// weighted Alexiewicz norm of the source.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformedSignal {
    values: Vec<f64>,
}

impl TransformedSignal {
    pub fn new(values: Vec<f64>) -> Result<Self, ValidationError> {
        if values.is_empty() {
            return Err(ValidationError::EmptySignal);
        }
        for (i, v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(ValidationError::NonFinite(i));
            }
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }
}

/// The shear transform: running sums with leak factor `beta`,
/// `w_k = beta * w_(k-1) + f_k` starting from zero.
pub fn shear_transform(
    f: &DiscreteSignal,
    beta: f64,
) -> Result<TransformedSignal, ValidationError> {
    check_beta(beta)?;
    let mut w = 0.0f64;
    let values = f
        .samples()
        .iter()
        .map(|&x| {
            w = beta * w + x;
            w
        })
        .collect();
    TransformedSignal::new(values)
}

/// Inverse of the shear transform: `f_k = w_k - beta * w_(k-1)`.
pub fn shear_inverse(h: &TransformedSignal, beta: f64) -> Result<DiscreteSignal, ValidationError> {
    check_beta(beta)?;
    let mut prev = 0.0f64;
    let samples = h
        .values()
        .iter()
        .map(|&w| {
            let x = w - beta * prev;
            prev = w;
            x
        })
        .collect();
    DiscreteSignal::new(samples)
}

/// A borrowed signal of any of the three supported classes, used where an
/// operation accepts mixed signal kinds.
#[derive(Debug, Clone, Copy)]
pub enum SignalRef<'a> {
    Discrete(&'a DiscreteSignal),
    Continuous(&'a ContinuousSignal),
    Train(&'a SpikeTrain),
}

impl<'a> From<&'a DiscreteSignal> for SignalRef<'a> {
    fn from(f: &'a DiscreteSignal) -> Self {
        SignalRef::Discrete(f)
    }
}

impl<'a> From<&'a ContinuousSignal> for SignalRef<'a> {
    fn from(f: &'a ContinuousSignal) -> Self {
        SignalRef::Continuous(f)
    }
}

impl<'a> From<&'a SpikeTrain> for SignalRef<'a> {
    fn from(s: &'a SpikeTrain) -> Self {
        SignalRef::Train(s)
    }
}

impl SignalRef<'_> {
    /// Dense unit-grid samples when the signal lives on that grid.
    fn dense(&self) -> Option<Vec<f64>> {
        match self {
            SignalRef::Discrete(f) => Some(f.samples().to_vec()),
            SignalRef::Train(s) => s.amplitude_sequence(0).ok(),
            SignalRef::Continuous(_) => None,
        }
    }

    fn natural_end(&self) -> f64 {
        match self {
            SignalRef::Discrete(f) => f.len() as f64,
            SignalRef::Continuous(f) => f.end(),
            SignalRef::Train(s) => s.events().last().map(|e| e.t).unwrap_or(0.0),
        }
    }

    fn to_continuous(self, horizon: f64) -> Result<ContinuousSignal, ValidationError> {
        match self {
            SignalRef::Discrete(f) => Ok(f.to_impulse_signal()),
            SignalRef::Continuous(f) => Ok(f.clone()),
            SignalRef::Train(s) => s.to_impulse_signal(horizon),
        }
    }
}

/// Weighted Alexiewicz distance between two signals, spike trains included.
///
/// When both operands live on the unit grid the exact discrete recursion is
/// used; otherwise both are embedded as impulse signals and the continuous
/// norm is applied with `alpha = -ln(beta)`, which requires `beta > 0`.
pub fn alexiewicz_distance<'a, 'b>(
    a: impl Into<SignalRef<'a>>,
    b: impl Into<SignalRef<'b>>,
    params: &EncoderParams,
) -> Result<f64, ValidationError> {
    let (a, b) = (a.into(), b.into());
    if let (Some(mut x), Some(y)) = (a.dense(), b.dense()) {
        if x.len() < y.len() {
            x.resize(y.len(), 0.0);
        }
        for (i, v) in y.iter().enumerate() {
            x[i] -= v;
        }
        return Ok(weighted_sup_norm(&x, params.beta()));
    }
    if params.beta() == 0.0 {
        return Err(ValidationError::IncompatibleSupports(
            "beta = 0 admits no continuous-time embedding".into(),
        ));
    }
    let horizon = a.natural_end().max(b.natural_end()).max(1.0);
    let fa = a.to_continuous(horizon)?;
    let fb = b.to_continuous(horizon)?;
    alexiewicz_norm_continuous(&fa.difference(&fb), params.alpha())
}

/// Whether `g` lies in the Alexiewicz ball of radius `theta` around
/// `center`; `strict` selects the open ball, otherwise the closed one.
pub fn ball_contains<'a, 'b>(
    center: impl Into<SignalRef<'a>>,
    g: impl Into<SignalRef<'b>>,
    params: &EncoderParams,
    strict: bool,
) -> Result<bool, ValidationError> {
    let dist = alexiewicz_distance(center, g, params)?;
    Ok(if strict {
        dist < params.theta()
    } else {
        dist <= params.theta()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signal::{Impulse, Segment, SpikeEvent};
    use proptest::prelude::*;

    fn sig(samples: &[f64]) -> DiscreteSignal {
        DiscreteSignal::new(samples.to_vec()).unwrap()
    }

    #[test]
    fn discrete_norm_examples() {
        assert_eq!(
            alexiewicz_norm_discrete(&sig(&[1.0, -1.0, 1.0]), 0.5).unwrap(),
            1.0
        );
        assert_eq!(
            alexiewicz_norm_discrete(&sig(&[-1.0, 1.0, 1.0]), 0.5).unwrap(),
            1.25
        );
        assert_eq!(
            alexiewicz_norm_discrete(&sig(&[0.0, 0.0, 0.0]), 0.7).unwrap(),
            0.0
        );
        assert!(alexiewicz_norm_discrete(&sig(&[1.0]), 1.5).is_err());
    }

    #[test]
    fn time_ordering_matters() {
        // the unit ball is sheared: reordering samples changes the norm
        let beta = 0.5;
        let a = alexiewicz_norm_discrete(&sig(&[1.0, -1.0, 1.0]), beta).unwrap();
        let b = alexiewicz_norm_discrete(&sig(&[-1.0, 1.0, 1.0]), beta).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn continuous_norm_examples() {
        let ramp = ContinuousSignal::new(
            vec![Segment {
                start: 0.0,
                end: 1.0,
                value: 1.0,
            }],
            vec![],
        )
        .unwrap();
        assert_eq!(alexiewicz_norm_continuous(&ramp, 0.0).unwrap(), 1.0);

        let imp = ContinuousSignal::from_impulses(
            vec![Impulse {
                t: 0.0,
                weight: -2.5,
            }],
            1.0,
        )
        .unwrap();
        for alpha in [0.0, 0.3, 2.0] {
            assert_eq!(alexiewicz_norm_continuous(&imp, alpha).unwrap(), 2.5);
        }
    }

    #[test]
    fn impulse_embedding_matches_discrete_norm() {
        let f = sig(&[1.0, -1.0, 1.0]);
        let embedded = f.to_impulse_signal();
        let alpha = f64::ln(2.0);
        let cont = alexiewicz_norm_continuous(&embedded, alpha).unwrap();
        let disc = alexiewicz_norm_discrete(&f, 0.5).unwrap();
        assert_eq!(disc, 1.0);
        assert!((cont - disc).abs() <= 1e-9, "{cont} vs {disc}");
    }

    #[test]
    fn transform_examples() {
        let t = shear_transform(&sig(&[0.6, 0.6, 0.6]), 1.0).unwrap();
        assert_eq!(t.values(), &[0.6, 1.2, 1.7999999999999998]);

        let t = shear_transform(&sig(&[1.0, -1.0, 1.0]), 0.5).unwrap();
        assert_eq!(t.values(), &[1.0, -0.5, 0.75]);

        let t = shear_transform(&sig(&[1.0, 0.0, 0.0]), 0.5).unwrap();
        assert_eq!(t.values(), &[1.0, 0.5, 0.25]);
    }

    #[test]
    fn inverse_examples() {
        let h = TransformedSignal::new(vec![0.6, 1.2, 1.8]).unwrap();
        let f = shear_inverse(&h, 1.0).unwrap();
        for (got, want) in f.samples().iter().zip([0.6, 0.6, 0.6]) {
            assert!((got - want).abs() < 1e-15);
        }

        let h = TransformedSignal::new(vec![1.0, 0.5, 0.25]).unwrap();
        let f = shear_inverse(&h, 0.5).unwrap();
        assert_eq!(f.samples(), &[1.0, 0.0, 0.0]);
    }

    #[test]
    fn ball_examples() {
        let params = EncoderParams::new(1.0, 1.0).unwrap();
        let f = sig(&[0.5, 0.5]);
        assert!(ball_contains(&f, &f, &params, true).unwrap());

        // prefix sums of f - empty reach exactly 1.0: closed yes, open no
        let empty = SpikeTrain::new(1.0, vec![]).unwrap();
        assert!(ball_contains(&f, &empty, &params, false).unwrap());
        assert!(!ball_contains(&f, &empty, &params, true).unwrap());

        let g = sig(&[1.5]);
        let s = SpikeTrain::new(
            1.0,
            vec![SpikeEvent {
                t: 1.0,
                amplitude: 1.0,
            }],
        )
        .unwrap();
        assert!(ball_contains(&g, &s, &params, true).unwrap());
    }

    #[test]
    fn distance_falls_back_to_continuous_embedding() {
        // train off the unit grid against a discrete center
        let f = sig(&[1.0, 0.0]);
        let s = SpikeTrain::new(
            1.0,
            vec![SpikeEvent {
                t: 0.5,
                amplitude: 1.0,
            }],
        )
        .unwrap();
        let params = EncoderParams::new(1.0, 0.5).unwrap();
        let d = alexiewicz_distance(&f, &s, &params).unwrap();
        // right after the early spike the running integral sits at -1; by
        // t=1 it has decayed to -sqrt(beta) before the +1 impulse arrives
        assert!((d - 1.0).abs() < 1e-12, "{d}");

        let p0 = EncoderParams::new(1.0, 0.0).unwrap();
        assert!(matches!(
            alexiewicz_distance(&f, &s, &p0),
            Err(ValidationError::IncompatibleSupports(_))
        ));
    }

    proptest! {
        // the norm equals the sup norm of the shear transform, bit for bit
        #[test]
        fn shear_identity(
            samples in proptest::collection::vec(-10.0f64..10.0, 1..64),
            beta in prop_oneof![Just(0.0), Just(0.2), Just(0.5), Just(0.8), Just(1.0)],
        ) {
            let f = sig(&samples);
            let norm = alexiewicz_norm_discrete(&f, beta).unwrap();
            let sup = shear_transform(&f, beta).unwrap().sup_norm();
            prop_assert_eq!(norm, sup);
        }

        #[test]
        fn roundtrip_inverse_of_transform(
            samples in proptest::collection::vec(-10.0f64..10.0, 1..512),
            beta in 0.0f64..=1.0,
        ) {
            let f = sig(&samples);
            let back = shear_inverse(&shear_transform(&f, beta).unwrap(), beta).unwrap();
            for (x, y) in f.samples().iter().zip(back.samples()) {
                prop_assert!((x - y).abs() <= 1e-10);
            }
        }

        #[test]
        fn embedding_consistency(
            samples in proptest::collection::vec(-5.0f64..5.0, 1..40),
            beta in prop_oneof![Just(0.3), Just(0.5), Just(0.8), Just(1.0)],
        ) {
            let f = sig(&samples);
            let disc = alexiewicz_norm_discrete(&f, beta).unwrap();
            let alpha = -f64::ln(beta);
            let cont = alexiewicz_norm_continuous(&f.to_impulse_signal(), alpha).unwrap();
            prop_assert!((disc - cont).abs() <= 1e-9, "{} vs {}", disc, cont);
        }
    }
}
