//! Threshold-based analog-to-spike encoding and its quantization geometry.
//!
//! The crate provides:
//!
//! - a validated data model for discrete signals, piecewise-constant signals
//!   with Dirac impulses, and threshold-grid spike trains ([`signal`]);
//! - the weighted Alexiewicz norm, the shear transform realizing its ball as
//!   a sheared max-norm ball, and ball-membership tests ([`alexiewicz`]);
//! - leaky integrate-and-fire encoders in discrete and continuous time with
//!   exact crossing times, integrate-and-fire, and send-on-delta
//!   ([`encoder`]);
//! - closed-form sparsity bounds via the recursive closest-l1 point of the
//!   ball ([`sparsity`]);
//! - exhaustive enumeration of all admissible spike trains and a minimal-l1
//!   oracle ([`search`]);
//! - reproducible batch experiments emitting CSV ([`experiments`]).

pub mod alexiewicz;
pub mod encoder;
pub mod error;
pub mod experiments;
pub mod search;
pub mod signal;
pub mod sparsity;

pub use alexiewicz::{
    alexiewicz_distance, alexiewicz_norm_continuous, alexiewicz_norm_discrete, ball_contains,
    shear_inverse, shear_transform, SignalRef, TransformedSignal,
};
pub use encoder::{
    if_encode, if_encode_continuous, lif_continuous, lif_continuous_traced, lif_discrete,
    membrane_trace_continuous, membrane_trace_discrete, quantize_trunc, sod_encode,
};
pub use error::{ExperimentError, SearchError, ValidationError};
pub use search::{
    admissible_options, enumerate_admissible, is_admissible, is_admissible_continuous,
    min_l1_admissible, sparsity_gap_distribution, AdmissibilityReport, GapDistribution,
};
pub use signal::{
    piecewise_linear_derivative, ContinuousSignal, DiscreteSignal, EncoderParams, Impulse, L1Norm,
    Segment, SpikeEvent, SpikeTrain,
};
pub use sparsity::{closest_l1_coefficients, closest_l1_point, sparsity_bounds, SparsityReport};
