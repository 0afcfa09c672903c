//! Threshold-based encoders: truncation quantizer, discrete and continuous
//! leaky integrate-and-fire with reset-to-mod, integrate-and-fire as the
//! zero-leak special case, and send-on-delta for piecewise-linear inputs.
//!
//! The continuous encoder is event-driven: within each constant segment the
//! membrane potential follows the closed-form leaky integral and the first
//! threshold crossing is solved exactly (logarithm or linear solve). A
//! bounded signal hits the threshold level exactly, so such crossings emit
//! `+/-theta` and reset the potential to zero; Dirac impulses add their
//! weight and emit the truncation quantization of the resulting potential,
//! keeping the sub-threshold remainder.

use crate::alexiewicz::leaky_advance;
use crate::error::ValidationError;
use crate::signal::{ContinuousSignal, DiscreteSignal, EncoderParams, SpikeEvent, SpikeTrain};

/// Relative slack when deciding whether a crossing time falls inside the
/// current span. Absorbs roundoff for signals engineered to reach the
/// threshold exactly at a span boundary.
const CROSSING_SLACK: f64 = 1e-12;

/// Truncation toward zero onto the `theta` grid:
/// `sgn(z) * theta * max{ n >= 0 : theta * n <= |z| }`.
///
/// The integer factor is corrected against the defining inequality so that
/// grid points map to themselves bit-exactly, which makes re-encoding a
/// spike train reproduce it without drift.
pub fn quantize_trunc(z: f64, theta: f64) -> f64 {
    assert!(theta > 0.0 && theta.is_finite(), "theta must be positive");
    let a = z.abs();
    let mut n = (a / theta).floor();
    while (n + 1.0) * theta <= a {
        n += 1.0;
    }
    while n > 0.0 && n * theta > a {
        n -= 1.0;
    }
    if z < 0.0 {
        -(n * theta)
    } else {
        n * theta
    }
}

/// Discrete leaky integrate-and-fire:
/// `z_(k+1) = f_(k+1) + beta (z_k - s_k)`, `s_k = q_theta(z_k)`.
///
/// Events are reported at integer times `k = 1..N`; only nonzero amplitudes
/// become events. After every step the residual satisfies `|z_k - s_k| <
/// theta`.
pub fn lif_discrete(f: &DiscreteSignal, params: &EncoderParams) -> SpikeTrain {
    let (theta, beta) = (params.theta(), params.beta());
    let mut residual = 0.0f64;
    let mut events = Vec::new();
    for (k, &x) in f.samples().iter().enumerate() {
        let z = x + beta * residual;
        let s = quantize_trunc(z, theta);
        if s != 0.0 {
            events.push(SpikeEvent {
                t: (k + 1) as f64,
                amplitude: s,
            });
        }
        residual = z - s;
    }
    SpikeTrain::new_unchecked(theta, events)
}

/// Integrate-and-fire: leaky integrate-and-fire with zero leak (`beta = 1`).
pub fn if_encode(f: &DiscreteSignal, theta: f64) -> Result<SpikeTrain, ValidationError> {
    Ok(lif_discrete(f, &EncoderParams::new(theta, 1.0)?))
}

/// Continuous-time integrate-and-fire (`alpha = 0`).
pub fn if_encode_continuous(
    f: &ContinuousSignal,
    theta: f64,
) -> Result<SpikeTrain, ValidationError> {
    lif_continuous(f, &EncoderParams::new(theta, 1.0)?)
}

/// Membrane potential trajectory of the discrete encoder: the
/// pre-quantization potential `z_k` at each step.
pub fn membrane_trace_discrete(f: &DiscreteSignal, params: &EncoderParams) -> Vec<(f64, f64)> {
    let (theta, beta) = (params.theta(), params.beta());
    let mut residual = 0.0f64;
    let mut trace = Vec::with_capacity(f.len());
    for (k, &x) in f.samples().iter().enumerate() {
        let z = x + beta * residual;
        trace.push(((k + 1) as f64, z));
        residual = z - quantize_trunc(z, theta);
    }
    trace
}

/// First time in `(0, dt]` at which the leaky integral starting at `u0`
/// with constant input `c` reaches `+theta` or `-theta`, together with the
/// crossing sign. Uses the closed form; a guarded bisection covers the
/// degenerate corner where the logarithm argument collapses.
fn first_crossing(u0: f64, c: f64, alpha: f64, dt: f64, theta: f64) -> Option<(f64, f64)> {
    if dt <= 0.0 {
        return None;
    }
    let within = |tc: f64| tc <= dt * (1.0 + CROSSING_SLACK);
    if alpha == 0.0 {
        if c == 0.0 {
            return None;
        }
        let (level, sign) = if c > 0.0 {
            (theta, 1.0)
        } else {
            (-theta, -1.0)
        };
        let tc = (level - u0) / c;
        return within(tc).then(|| (tc.clamp(0.0, dt), sign));
    }
    let target = c / alpha;
    let (level, sign) = if target > theta {
        (theta, 1.0)
    } else if target < -theta {
        (-theta, -1.0)
    } else {
        // the potential converges monotonically to `target` inside the
        // sub-threshold band and never escapes it
        return None;
    };
    let ratio = (level - target) / (u0 - target);
    if !(ratio > 1e-14 && ratio <= 1.0) {
        return bisect_crossing(u0, c, alpha, dt, level).map(|tc| (tc, sign));
    }
    let tc = -ratio.ln() / alpha;
    if tc.is_finite() && within(tc) {
        Some((tc.clamp(0.0, dt), sign))
    } else {
        None
    }
}

/// Bisection fallback for the crossing time, tolerance 1e-12 in time.
fn bisect_crossing(u0: f64, c: f64, alpha: f64, dt: f64, level: f64) -> Option<f64> {
    let g = |t: f64| leaky_advance(u0, c, alpha, t) - level;
    let (g0, g1) = (g(0.0), g(dt));
    if g0 == 0.0 {
        return Some(0.0);
    }
    if g0.signum() == g1.signum() && g1 != 0.0 {
        return None;
    }
    let (mut lo, mut hi) = (0.0f64, dt);
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if g(mid).signum() == g0.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(hi)
}

struct ContinuousRun {
    theta: f64,
    alpha: f64,
    potential: f64,
    events: Vec<SpikeEvent>,
    trace: Vec<(f64, f64)>,
}

impl ContinuousRun {
    fn push_event(&mut self, t: f64, amplitude: f64) {
        if let Some(last) = self.events.last_mut() {
            if last.t == t {
                // a crossing coinciding with an impulse merges into one event
                last.amplitude += amplitude;
                if last.amplitude == 0.0 {
                    self.events.pop();
                }
                return;
            }
        }
        self.events.push(SpikeEvent { t, amplitude });
    }

    /// Integrates a constant-value span, emitting a `+/-theta` spike and
    /// resetting to zero at every exact threshold attainment.
    fn advance(&mut self, c: f64, from: f64, to: f64) {
        let mut cur = from;
        while cur < to {
            match first_crossing(self.potential, c, self.alpha, to - cur, self.theta) {
                Some((tc, sign)) => {
                    let t = cur + tc;
                    self.trace.push((t, sign * self.theta));
                    self.push_event(t, sign * self.theta);
                    self.potential = 0.0;
                    if t <= cur {
                        // degenerate zero-length step; avoid spinning
                        break;
                    }
                    cur = t;
                }
                None => {
                    self.potential = leaky_advance(self.potential, c, self.alpha, to - cur);
                    break;
                }
            }
        }
        self.trace.push((to, self.potential));
    }

    /// Applies an impulse: the potential jumps by `weight` and the encoder
    /// emits the truncation quantization of the result (reset-to-mod), which
    /// may span several threshold multiples at once.
    fn jump(&mut self, t: f64, weight: f64) {
        self.potential += weight;
        self.trace.push((t, self.potential));
        let s = quantize_trunc(self.potential, self.theta);
        if s != 0.0 {
            self.push_event(t, s);
            self.potential -= s;
            self.trace.push((t, self.potential));
        }
    }
}

fn lif_continuous_impl(
    f: &ContinuousSignal,
    params: &EncoderParams,
) -> Result<ContinuousRun, ValidationError> {
    let alpha = params.alpha();
    if !alpha.is_finite() {
        return Err(ValidationError::InvalidAlpha(alpha));
    }
    let mut run = ContinuousRun {
        theta: params.theta(),
        alpha,
        potential: 0.0,
        events: Vec::new(),
        trace: vec![(f.start(), 0.0)],
    };
    let impulses = f.impulses();
    let mut idx = 0;
    for seg in f.segments() {
        while idx < impulses.len() && impulses[idx].t <= seg.start {
            run.jump(impulses[idx].t, impulses[idx].weight);
            idx += 1;
        }
        let mut cur = seg.start;
        while idx < impulses.len() && impulses[idx].t < seg.end {
            let ti = impulses[idx].t;
            run.advance(seg.value, cur, ti);
            run.jump(ti, impulses[idx].weight);
            cur = ti;
            idx += 1;
        }
        run.advance(seg.value, cur, seg.end);
    }
    while idx < impulses.len() {
        run.jump(impulses[idx].t, impulses[idx].weight);
        idx += 1;
    }
    Ok(run)
}

/// Continuous-time leaky integrate-and-fire with exact crossing times.
pub fn lif_continuous(
    f: &ContinuousSignal,
    params: &EncoderParams,
) -> Result<SpikeTrain, ValidationError> {
    let run = lif_continuous_impl(f, params)?;
    Ok(SpikeTrain::new_unchecked(params.theta(), run.events))
}

/// Like [`lif_continuous`], additionally returning the membrane potential
/// sampled at every event-relevant instant (segment ends, impulses,
/// crossings).
pub fn lif_continuous_traced(
    f: &ContinuousSignal,
    params: &EncoderParams,
) -> Result<(SpikeTrain, Vec<(f64, f64)>), ValidationError> {
    let run = lif_continuous_impl(f, params)?;
    Ok((
        SpikeTrain::new_unchecked(params.theta(), run.events),
        run.trace,
    ))
}

/// Membrane potential trajectory of the continuous encoder.
pub fn membrane_trace_continuous(
    f: &ContinuousSignal,
    params: &EncoderParams,
) -> Result<Vec<(f64, f64)>, ValidationError> {
    Ok(lif_continuous_impl(f, params)?.trace)
}

/// Send-on-delta encoding of the piecewise-linear interpolant through
/// `nodes`: an event fires at the earliest time where the value departs by
/// `theta` from its value at the previous event, emitting `+/-theta` with
/// the sign of the change.
pub fn sod_encode(nodes: &[(f64, f64)], theta: f64) -> Result<SpikeTrain, ValidationError> {
    if !(theta > 0.0 && theta.is_finite()) {
        return Err(ValidationError::InvalidTheta(theta));
    }
    if nodes.len() < 2 {
        return Err(ValidationError::TooFewNodes);
    }
    for (i, (t, v)) in nodes.iter().enumerate() {
        if !t.is_finite() || !v.is_finite() {
            return Err(ValidationError::NonFinite(i));
        }
        if i > 0 && *t <= nodes[i - 1].0 {
            return Err(ValidationError::NonIncreasingTimes(i));
        }
    }

    let mut reference = nodes[0].1;
    let mut events = Vec::new();
    for w in nodes.windows(2) {
        let ((t0, y0), (t1, y1)) = (w[0], w[1]);
        let slope = (y1 - y0) / (t1 - t0);
        if slope == 0.0 {
            continue;
        }
        loop {
            // Lipschitz continuity guarantees the level is attained exactly,
            // so each event carries a single +/-theta
            let (target, sign) = if slope > 0.0 {
                (reference + theta, 1.0)
            } else {
                (reference - theta, -1.0)
            };
            let reachable = if slope > 0.0 {
                y1 >= target
            } else {
                y1 <= target
            };
            if !reachable {
                break;
            }
            let tc = (t0 + (target - y0) / slope).clamp(t0, t1);
            events.push(SpikeEvent {
                t: tc,
                amplitude: sign * theta,
            });
            reference = target;
            if tc >= t1 {
                break;
            }
        }
    }
    SpikeTrain::new(theta, events)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alexiewicz::{alexiewicz_distance, alexiewicz_norm_discrete};
    use crate::signal::{Impulse, L1Norm, Segment};
    use proptest::prelude::*;

    fn sig(samples: &[f64]) -> DiscreteSignal {
        DiscreteSignal::new(samples.to_vec()).unwrap()
    }

    fn params(theta: f64, beta: f64) -> EncoderParams {
        EncoderParams::new(theta, beta).unwrap()
    }

    fn amplitudes(s: &SpikeTrain, len: usize) -> Vec<f64> {
        s.amplitude_sequence(len).unwrap()
    }

    #[test]
    fn quantize_examples() {
        assert_eq!(quantize_trunc(1.7, 1.0), 1.0);
        assert_eq!(quantize_trunc(-0.3, 1.0), 0.0);
        assert_eq!(quantize_trunc(2.0, 1.0), 2.0);
        assert_eq!(quantize_trunc(-2.5, 0.5), -2.5);
        assert_eq!(quantize_trunc(0.0, 1.0), 0.0);
    }

    #[test]
    fn quantize_grid_points_are_fixed() {
        // products theta * m must map to themselves despite division roundoff
        for theta in [0.3, 0.5, 0.7, 1.0, 1.3] {
            for m in -25i32..=25 {
                let z = theta * m as f64;
                assert_eq!(quantize_trunc(z, theta), z, "theta={theta} m={m}");
            }
        }
    }

    #[test]
    fn lif_discrete_examples() {
        let s = lif_discrete(&sig(&[1.5, 0.4, 0.8]), &params(1.0, 0.5));
        assert_eq!(amplitudes(&s, 3), vec![1.0, 0.0, 1.0]);

        let s = lif_discrete(&sig(&[0.0, 0.0, 0.0]), &params(1.0, 0.5));
        assert!(s.is_empty());

        let s = lif_discrete(&sig(&[0.6, 0.6, 0.6]), &params(1.0, 1.0));
        assert_eq!(amplitudes(&s, 3), vec![0.0, 1.0, 0.0]);
    }

    #[test]
    fn if_examples() {
        let s = if_encode(&sig(&[0.6, 0.6, 0.6]), 1.0).unwrap();
        assert_eq!(amplitudes(&s, 3), vec![0.0, 1.0, 0.0]);

        let s = if_encode(&sig(&[2.5]), 1.0).unwrap();
        assert_eq!(amplitudes(&s, 1), vec![2.0]);

        let s = if_encode(&sig(&[-0.4, -0.7]), 1.0).unwrap();
        assert_eq!(amplitudes(&s, 2), vec![0.0, -1.0]);
    }

    #[test]
    fn lif_continuous_unit_ramp() {
        let f = ContinuousSignal::new(
            vec![Segment {
                start: 0.0,
                end: 3.0,
                value: 1.0,
            }],
            vec![],
        )
        .unwrap();
        let s = lif_continuous(&f, &params(1.0, 1.0)).unwrap();
        let evs = s.events();
        assert_eq!(evs.len(), 3);
        for (k, ev) in evs.iter().enumerate() {
            assert!((ev.t - (k + 1) as f64).abs() < 1e-12);
            assert_eq!(ev.amplitude, 1.0);
        }
    }

    #[test]
    fn lif_continuous_matches_discrete_on_impulse_embedding() {
        let f = sig(&[1.0, -1.0, 1.0]);
        let s = lif_continuous(&f.to_impulse_signal(), &params(1.0, 1.0)).unwrap();
        assert_eq!(amplitudes(&s, 3), vec![1.0, -1.0, 1.0]);
    }

    #[test]
    fn lif_continuous_multi_theta_impulse() {
        let f = ContinuousSignal::from_impulses(
            vec![Impulse {
                t: 0.5,
                weight: 2.6,
            }],
            1.0,
        )
        .unwrap();
        let s = lif_continuous(&f, &params(1.0, 0.5)).unwrap();
        assert_eq!(s.events().len(), 1);
        assert_eq!(s.events()[0].amplitude, 2.0);
    }

    #[test]
    fn lif_continuous_idempotent_on_reencoded_trains() {
        // a spike train embedded as impulses reproduces itself exactly: each
        // impulse carries a full threshold multiple, so the residual stays
        // zero throughout
        let f = ContinuousSignal::new(
            vec![Segment {
                start: 0.0,
                end: 4.0,
                value: 0.9,
            }],
            vec![Impulse {
                t: 2.5,
                weight: 1.7,
            }],
        )
        .unwrap();
        let p = params(1.0, 0.6);
        let s = lif_continuous(&f, &p).unwrap();
        assert!(!s.is_empty());
        let again = lif_continuous(&s.to_impulse_signal(f.end()).unwrap(), &p).unwrap();
        assert_eq!(s.events(), again.events());
    }

    #[test]
    fn sod_examples() {
        let s = sod_encode(&[(0.0, 0.0), (3.0, 3.0)], 1.0).unwrap();
        let evs = s.events();
        assert_eq!(evs.len(), 3);
        for (k, ev) in evs.iter().enumerate() {
            assert!((ev.t - (k + 1) as f64).abs() < 1e-12);
            assert_eq!(ev.amplitude, 1.0);
        }

        let s = sod_encode(&[(0.0, 5.0), (2.0, 5.0)], 1.0).unwrap();
        assert!(s.is_empty());
    }

    #[test]
    fn sod_triangle() {
        // rises to 1.5 by t=1 and returns to 0 by t=2: the +1 change is
        // reached at t=2/3 and the -1 change from the event value 1.0 is
        // reached exactly at the endpoint t=2
        let nodes = [(0.0, 0.0), (1.0, 1.5), (2.0, 0.0)];
        let s = sod_encode(&nodes, 1.0).unwrap();
        let evs = s.events();
        assert_eq!(evs.len(), 2);
        assert!((evs[0].t - 2.0 / 3.0).abs() < 1e-12);
        assert_eq!(evs[0].amplitude, 1.0);
        assert!((evs[1].t - 2.0).abs() < 1e-12);
        assert_eq!(evs[1].amplitude, -1.0);

        // cross-check: integrate-and-fire on the derivative gives the same
        // events
        let d = crate::signal::piecewise_linear_derivative(&nodes).unwrap();
        let via_if = if_encode_continuous(&d, 1.0).unwrap();
        assert_eq!(via_if.events().len(), 2);
        for (a, b) in evs.iter().zip(via_if.events()) {
            assert!((a.t - b.t).abs() < 1e-9);
            assert_eq!(a.amplitude, b.amplitude);
        }
    }

    #[test]
    fn membrane_traces() {
        let t = membrane_trace_discrete(&sig(&[0.0, 0.0]), &params(1.0, 0.5));
        assert_eq!(t, vec![(1.0, 0.0), (2.0, 0.0)]);

        let t = membrane_trace_discrete(&sig(&[1.5]), &params(1.0, 1.0));
        assert_eq!(t, vec![(1.0, 1.5)]);

        let zero = ContinuousSignal::new(
            vec![Segment {
                start: 0.0,
                end: 2.0,
                value: 0.0,
            }],
            vec![],
        )
        .unwrap();
        let t = membrane_trace_continuous(&zero, &params(1.0, 0.5)).unwrap();
        assert!(!t.is_empty());
        assert!(t.iter().all(|(_, z)| *z == 0.0));
    }

    #[test]
    fn residual_invariant_and_bound() {
        let f = sig(&[1.5, -2.3, 0.9, 4.1, -0.2]);
        for beta in [0.0, 0.2, 0.5, 0.8, 1.0] {
            let p = params(1.0, beta);
            let trace = membrane_trace_discrete(&f, &p);
            for (_, z) in trace {
                let s = quantize_trunc(z, 1.0);
                assert!((z - s).abs() < 1.0);
            }
            let s = lif_discrete(&f, &p);
            let d = alexiewicz_distance(&f, &s, &p).unwrap();
            assert!(d < 1.0, "beta={beta} dist={d}");
        }
    }

    proptest! {
        // quantization error bound: the encoder output stays strictly inside
        // the Alexiewicz ball around the input
        #[test]
        fn quantization_bound(
            samples in proptest::collection::vec(-8.0f64..8.0, 1..64),
            beta in prop_oneof![Just(0.0), Just(0.2), Just(0.5), Just(0.8), Just(1.0)],
            theta in prop_oneof![Just(0.5), Just(1.0), Just(2.0)],
        ) {
            let f = sig(&samples);
            let p = params(theta, beta);
            let s = lif_discrete(&f, &p);
            let d = alexiewicz_distance(&f, &s, &p).unwrap();
            prop_assert!(d < theta + 1e-9 * theta);
        }

        // re-encoding the spike train reproduces it exactly
        #[test]
        fn idempotence(
            samples in proptest::collection::vec(-8.0f64..8.0, 1..48),
            beta in prop_oneof![Just(0.0), Just(0.3), Just(0.7), Just(1.0)],
            theta in prop_oneof![Just(0.5), Just(1.0), Just(1.3)],
        ) {
            let f = sig(&samples);
            let p = params(theta, beta);
            let s = lif_discrete(&f, &p);
            let dense = s.amplitude_sequence(f.len()).unwrap();
            let again = lif_discrete(&DiscreteSignal::new(dense.clone()).unwrap(), &p);
            prop_assert_eq!(again.amplitude_sequence(f.len()).unwrap(), dense);
        }

        // scaling the threshold rescales the train event for event
        #[test]
        fn threshold_homogeneity(
            samples in proptest::collection::vec(-8.0f64..8.0, 1..48),
            beta in prop_oneof![Just(0.0), Just(0.5), Just(1.0)],
            theta in prop_oneof![Just(0.5), Just(2.0)],
        ) {
            let f = sig(&samples);
            let scaled = DiscreteSignal::new(f.samples().iter().map(|x| x / theta).collect()).unwrap();
            let a = lif_discrete(&f, &params(theta, beta));
            let b = lif_discrete(&scaled, &params(1.0, beta));
            prop_assert_eq!(a.events().len(), b.events().len());
            for (x, y) in a.events().iter().zip(b.events()) {
                prop_assert_eq!(x.t, y.t);
                prop_assert_eq!(x.amplitude, theta * y.amplitude);
            }
        }

        // discrete recursion agrees with the continuous encoder on the
        // unit-grid impulse embedding
        #[test]
        fn discrete_continuous_consistency(
            samples in proptest::collection::vec(-5.0f64..5.0, 1..32),
            beta in prop_oneof![Just(0.3), Just(0.6), Just(1.0)],
        ) {
            let f = sig(&samples);
            let p = params(1.0, beta);
            let disc = lif_discrete(&f, &p);
            let cont = lif_continuous(&f.to_impulse_signal(), &p).unwrap();
            prop_assert_eq!(disc.events().len(), cont.events().len());
            for (a, b) in disc.events().iter().zip(cont.events()) {
                prop_assert!((a.t - b.t).abs() <= 1e-9);
                prop_assert!((a.amplitude - b.amplitude).abs() <= 1e-9);
            }
        }

        // send-on-delta equals integrate-and-fire applied to the derivative
        #[test]
        fn sod_if_bridge(
            values in proptest::collection::vec(-4.0f64..4.0, 2..12),
            theta in prop_oneof![Just(0.5), Just(1.0)],
        ) {
            let nodes: Vec<(f64, f64)> =
                values.iter().enumerate().map(|(i, v)| (i as f64, *v)).collect();
            let s = sod_encode(&nodes, theta).unwrap();
            let d = crate::signal::piecewise_linear_derivative(&nodes).unwrap();
            let via_if = if_encode_continuous(&d, theta).unwrap();
            prop_assert_eq!(s.events().len(), via_if.events().len());
            for (a, b) in s.events().iter().zip(via_if.events()) {
                prop_assert!((a.t - b.t).abs() <= 1e-9, "{} vs {}", a.t, b.t);
                prop_assert_eq!(a.amplitude, b.amplitude);
            }
            // each consecutive change is exactly +/-theta, so the summed
            // absolute change equals the event count times theta
            prop_assert_eq!(s.l1_norm(), s.events().len() as f64 * theta);
        }

        // the norm of the quantization error never exceeds the norm of the
        // input (sanity bound shared with the sparsity module)
        #[test]
        fn encoder_l1_never_exceeds_input(
            samples in proptest::collection::vec(-8.0f64..8.0, 1..48),
            beta in prop_oneof![Just(0.0), Just(0.4), Just(0.9), Just(1.0)],
        ) {
            let f = sig(&samples);
            let s = lif_discrete(&f, &params(1.0, beta));
            prop_assert!(s.l1_norm() <= f.l1_norm() + 1e-9);
        }
    }

    #[test]
    fn norm_cross_check_with_transform_example() {
        // the encoder examples and the norm examples are mutually consistent
        let f = sig(&[1.0, -1.0, 1.0]);
        assert_eq!(alexiewicz_norm_discrete(&f, 0.5).unwrap(), 1.0);
    }
}
