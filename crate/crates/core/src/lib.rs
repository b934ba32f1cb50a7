//! Polar-code toolkit: code construction, successive-cancellation (SC) and
//! SC-list decoding, posterior-sampling decoders (SCS and its importance-sampling
//! generalization SCIS), and the closed-form error analysis that accompanies them.
//!
//! The crate is `no_std`-compatible (it requires `alloc`); everything touching
//! IO, serialization, or threads lives in the companion CLI crate.
//!
//! Bit positions are 0-based throughout this crate. The transform uses the
//! natural (non-bit-reversed) ordering of the 2x2 kernel's Kronecker powers.
#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod analysis;
pub mod bits;
pub mod channel;
pub mod code;
pub mod decode;
pub mod error;
pub mod posterior;

pub use bits::BitVector;
pub use channel::{likelihood_pair, transmit, ChannelModel, Observation, RawSymbol};
pub use code::{
    bhattacharyya_profile, construct_code, encode, polar_transform, BhattacharyyaProfile, CodeSpec,
};
pub use decode::{
    brute_force_posterior, sc_decode, scis_decode, scl_decode, scs_decode, AgentConfig,
    DecodeReport, MessageDistribution, MAX_ENUMERATED_INFO_BITS,
};
pub use error::{Error, Result};
pub use posterior::{sc_posterior, PosteriorPair};
