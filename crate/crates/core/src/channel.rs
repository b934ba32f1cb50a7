//! Memoryless binary-input channels and their likelihood observations.

use alloc::vec::Vec;

use rand::Rng;
use rand_distr::StandardNormal;

use crate::bits::BitVector;
use crate::error::{Error, Result};

#[cfg(not(feature = "std"))]
use num_traits::Float;

/// The three supported binary-input channels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChannelModel {
    /// Binary erasure channel with erasure probability eps.
    Bec { eps: f64 },
    /// Binary symmetric channel with crossover probability p.
    Bsc { p: f64 },
    /// Binary-input AWGN: bit b maps to the symbol 1-2b, noise is N(0, sigma^2).
    BiAwgn { sigma: f64 },
}

impl ChannelModel {
    pub fn bec(eps: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&eps) || !eps.is_finite() {
            return Err(Error::Domain { name: "eps", value: eps });
        }
        Ok(ChannelModel::Bec { eps })
    }

    pub fn bsc(p: f64) -> Result<Self> {
        if !(0.0..=0.5).contains(&p) || !p.is_finite() {
            return Err(Error::Domain { name: "p", value: p });
        }
        Ok(ChannelModel::Bsc { p })
    }

    pub fn bi_awgn(sigma: f64) -> Result<Self> {
        if !(sigma > 0.0) || !sigma.is_finite() {
            return Err(Error::Domain { name: "sigma", value: sigma });
        }
        Ok(ChannelModel::BiAwgn { sigma })
    }
}

/// What the channel actually emitted, kept around for logging and replay.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RawSymbol {
    Bit(u8),
    Erasure,
    Real(f64),
}

/// One channel use: the likelihood pair (W(y|0), W(y|1)) plus the raw symbol.
/// The pair is meaningful up to a common positive scale; both entries are
/// finite and non-negative and at least one is positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Observation {
    pub w0: f64,
    pub w1: f64,
    pub raw: RawSymbol,
}

impl Observation {
    pub fn new(w0: f64, w1: f64, raw: RawSymbol) -> Result<Self> {
        let ok = w0.is_finite() && w1.is_finite() && w0 >= 0.0 && w1 >= 0.0 && w0 + w1 > 0.0;
        if !ok {
            return Err(Error::Observation { index: 0 });
        }
        Ok(Observation { w0, w1, raw })
    }
}

/// The likelihood pair a given channel assigns to a raw symbol. Rejects
/// symbols the channel can never emit. For BiAWGN the densities are evaluated
/// in log space and shifted so the larger entry is exactly 1, which keeps tiny
/// likelihoods well away from underflow.
pub fn likelihood_pair(raw: RawSymbol, channel: &ChannelModel) -> Result<(f64, f64)> {
    match (channel, raw) {
        (ChannelModel::Bec { eps }, RawSymbol::Erasure) => {
            if *eps == 0.0 {
                return Err(Error::Symbol { reason: "erasure from a BEC with eps = 0" });
            }
            Ok((*eps, *eps))
        }
        (ChannelModel::Bec { eps }, RawSymbol::Bit(b)) => {
            if b > 1 {
                return Err(Error::Symbol { reason: "bit symbol out of alphabet" });
            }
            if *eps == 1.0 {
                return Err(Error::Symbol { reason: "unerased symbol from a BEC with eps = 1" });
            }
            Ok(if b == 0 { (1.0 - eps, 0.0) } else { (0.0, 1.0 - eps) })
        }
        (ChannelModel::Bsc { p }, RawSymbol::Bit(b)) => {
            if b > 1 {
                return Err(Error::Symbol { reason: "bit symbol out of alphabet" });
            }
            Ok(if b == 0 { (1.0 - p, *p) } else { (*p, 1.0 - p) })
        }
        (ChannelModel::BiAwgn { sigma }, RawSymbol::Real(y)) => {
            if !y.is_finite() {
                return Err(Error::Symbol { reason: "non-finite AWGN symbol" });
            }
            // log W(y|b) = -(y - s_b)^2 / (2 sigma^2) up to a common constant,
            // with s_0 = +1 and s_1 = -1.
            let l0 = -(y - 1.0) * (y - 1.0) / (2.0 * sigma * sigma);
            let l1 = -(y + 1.0) * (y + 1.0) / (2.0 * sigma * sigma);
            let m = l0.max(l1);
            Ok(((l0 - m).exp(), (l1 - m).exp()))
        }
        (ChannelModel::Bec { .. }, RawSymbol::Real(_)) => {
            Err(Error::Symbol { reason: "real symbol from a BEC" })
        }
        (ChannelModel::Bsc { .. }, _) => {
            Err(Error::Symbol { reason: "BSC emits only bit symbols" })
        }
        (ChannelModel::BiAwgn { .. }, _) => {
            Err(Error::Symbol { reason: "BiAWGN emits only real symbols" })
        }
    }
}

/// Sends a codeword through the channel, one independent use per bit.
pub fn transmit<R: Rng + ?Sized>(
    x: &BitVector,
    channel: &ChannelModel,
    rng: &mut R,
) -> Vec<Observation> {
    x.iter()
        .map(|&bit| {
            let raw = match channel {
                ChannelModel::Bec { eps } => {
                    if rng.random::<f64>() < *eps {
                        RawSymbol::Erasure
                    } else {
                        RawSymbol::Bit(bit)
                    }
                }
                ChannelModel::Bsc { p } => {
                    let flip = rng.random::<f64>() < *p;
                    RawSymbol::Bit(bit ^ u8::from(flip))
                }
                ChannelModel::BiAwgn { sigma } => {
                    let noise: f64 = rng.sample(StandardNormal);
                    RawSymbol::Real(1.0 - 2.0 * f64::from(bit) + sigma * noise)
                }
            };
            let (w0, w1) = likelihood_pair(raw, channel)
                .expect("transmit only produces symbols in the channel's alphabet");
            Observation { w0, w1, raw }
        })
        .collect()
}
