//! Exact successive-cancellation posteriors.
//!
//! The engine runs the probability-domain two-branch recursion over the
//! length-halving decomposition of the transform: combining evidence for
//! positions i and i+L/2 gives the check-node pair feeding the first half of
//! the message bits, and once those are fixed the variable-node pair feeds the
//! second half. Everything is computed in log space and renormalized at every
//! level, so blocks of any practical size stay away from underflow.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::BitVector;
use crate::channel::Observation;
use crate::code::CodeSpec;
use crate::error::{Error, Result};

#[cfg(not(feature = "std"))]
use num_traits::Float;

/// Posterior of one message bit under the SC law: P(bit = 0) and P(bit = 1).
/// The entries are non-negative and sum to 1 up to float rounding.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PosteriorPair {
    pub p0: f64,
    pub p1: f64,
}

impl PosteriorPair {
    pub fn prob(&self, bit: u8) -> f64 {
        if bit == 0 {
            self.p0
        } else {
            self.p1
        }
    }

    /// The more likely bit, ties going to 0.
    pub fn hard_bit(&self) -> u8 {
        u8::from(self.p1 > self.p0)
    }

    /// The tilted pair (p0^beta, p1^beta) / Z.
    ///
    /// beta = 1 returns the pair unchanged (bit-exact). beta = 0 flattens to a
    /// fair coin. beta = +inf is the point mass on `hard_bit`. A zero entry
    /// stays zero for every beta: tilting never resurrects an impossible branch.
    pub fn tilted(&self, beta: f64) -> PosteriorPair {
        if self.p0 == 0.0 {
            return PosteriorPair { p0: 0.0, p1: 1.0 };
        }
        if self.p1 == 0.0 {
            return PosteriorPair { p0: 1.0, p1: 0.0 };
        }
        if beta == 1.0 {
            return *self;
        }
        if beta.is_infinite() {
            return if self.p1 > self.p0 {
                PosteriorPair { p0: 0.0, p1: 1.0 }
            } else {
                PosteriorPair { p0: 1.0, p1: 0.0 }
            };
        }
        let r = beta * (self.p1.ln() - self.p0.ln());
        if r <= 0.0 {
            let e = r.exp();
            PosteriorPair { p0: 1.0 / (1.0 + e), p1: e / (1.0 + e) }
        } else {
            let e = (-r).exp();
            PosteriorPair { p0: e / (1.0 + e), p1: 1.0 / (1.0 + e) }
        }
    }
}

/// A log-domain likelihood pair normalized so that max(l0, l1) = 0.
#[derive(Debug, Clone, Copy)]
pub(crate) struct LogPair {
    l0: f64,
    l1: f64,
}

const LN_HALF: f64 = -core::f64::consts::LN_2;

fn log_sum_exp(x: f64, y: f64) -> f64 {
    let (hi, lo) = if x >= y { (x, y) } else { (y, x) };
    if lo == f64::NEG_INFINITY {
        hi
    } else {
        hi + (lo - hi).exp().ln_1p()
    }
}

impl LogPair {
    fn normalized(l0: f64, l1: f64) -> LogPair {
        let m = l0.max(l1);
        if m == f64::NEG_INFINITY {
            // Zero-probability prefix (reachable only through list exploration):
            // define the conditional as fair so downstream stays finite.
            LogPair { l0: LN_HALF, l1: LN_HALF }
        } else {
            LogPair { l0: l0 - m, l1: l1 - m }
        }
    }

    fn from_linear(w0: f64, w1: f64) -> LogPair {
        LogPair::normalized(w0.ln(), w1.ln())
    }

    /// Check node: the pair for s when the evidence sees s^t and t with t unknown.
    fn check(a: LogPair, b: LogPair) -> LogPair {
        LogPair::normalized(
            log_sum_exp(a.l0 + b.l0, a.l1 + b.l1),
            log_sum_exp(a.l0 + b.l1, a.l1 + b.l0),
        )
    }

    /// Variable node: the pair for t once s is fixed.
    fn var(a: LogPair, b: LogPair, s: u8) -> LogPair {
        if s == 0 {
            LogPair::normalized(a.l0 + b.l0, a.l1 + b.l1)
        } else {
            LogPair::normalized(a.l1 + b.l0, a.l0 + b.l1)
        }
    }

    fn posterior(&self) -> PosteriorPair {
        let e0 = self.l0.exp();
        let e1 = self.l1.exp();
        let z = e0 + e1;
        PosteriorPair { p0: e0 / z, p1: e1 / z }
    }
}

/// Why a walk stopped before decoding every bit.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Halt {
    /// A posterior query captured its target bit.
    Capture(PosteriorPair),
    /// A sampling agent hit an incompatible frozen bit and must restart.
    Reject,
}

/// A full path through the SC recursion: the message and its codeword.
pub(crate) struct Walk {
    pub u: BitVector,
    #[allow(dead_code)]
    pub x: BitVector,
}

/// One prepared decoding instance: validated channel evidence for a block.
pub(crate) struct Walker {
    evidence: Vec<LogPair>,
}

impl Walker {
    pub fn new(obs: &[Observation]) -> Result<Self> {
        if !obs.len().is_power_of_two() {
            return Err(Error::NotPowerOfTwo { len: obs.len() });
        }
        let evidence = obs
            .iter()
            .enumerate()
            .map(|(index, o)| {
                let ok = o.w0.is_finite() && o.w1.is_finite() && o.w0 >= 0.0 && o.w1 >= 0.0
                    && o.w0 + o.w1 > 0.0;
                if ok {
                    Ok(LogPair::from_linear(o.w0, o.w1))
                } else {
                    Err(Error::Observation { index })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Walker { evidence })
    }

    /// Walks all bits in natural order. `choose` sees each bit's exact SC
    /// posterior (later bits uniform) and returns the bit to commit, or halts.
    pub fn walk<F>(&self, choose: &mut F) -> core::result::Result<Walk, Halt>
    where
        F: FnMut(usize, PosteriorPair) -> core::result::Result<u8, Halt>,
    {
        let mut u = vec![0u8; self.evidence.len()];
        let x = node(&self.evidence, 0, &mut u, choose)?;
        Ok(Walk { u: BitVector::from_raw(u), x: BitVector::from_raw(x) })
    }
}

/// Decodes the sub-block backed by `seg`, committing bits u_off.. in order.
/// Returns the sub-codeword implied by the committed bits.
fn node<F>(
    seg: &[LogPair],
    u_off: usize,
    u: &mut [u8],
    choose: &mut F,
) -> core::result::Result<Vec<u8>, Halt>
where
    F: FnMut(usize, PosteriorPair) -> core::result::Result<u8, Halt>,
{
    let len = seg.len();
    if len == 1 {
        let bit = choose(u_off, seg[0].posterior())?;
        u[u_off] = bit;
        return Ok(vec![bit]);
    }
    let half = len / 2;
    let left: Vec<LogPair> = (0..half).map(|i| LogPair::check(seg[i], seg[i + half])).collect();
    let xl = node(&left, u_off, u, choose)?;
    let right: Vec<LogPair> =
        (0..half).map(|i| LogPair::var(seg[i], seg[i + half], xl[i])).collect();
    let xr = node(&right, u_off + half, u, choose)?;
    let mut x = Vec::with_capacity(len);
    for i in 0..half {
        x.push(xl[i] ^ xr[i]);
    }
    x.extend_from_slice(&xr);
    Ok(x)
}

/// The exact SC posterior of the next bit: P(u_m | y, u_0..u_{m-1}) where
/// m = prefix.len() and every later bit — frozen and information alike — is
/// treated as an unknown fair coin. The code spec fixes the block length only;
/// frozen values do not enter this conditional.
pub fn sc_posterior(
    obs: &[Observation],
    prefix: &BitVector,
    spec: &CodeSpec,
) -> Result<PosteriorPair> {
    if obs.len() != spec.block_len() {
        return Err(Error::BlockLength { expected: spec.block_len(), got: obs.len() });
    }
    if prefix.len() >= spec.block_len() {
        return Err(Error::Prefix { len: prefix.len(), block: spec.block_len() });
    }
    let walker = Walker::new(obs)?;
    let target = prefix.len();
    match walker.walk(&mut |i, post| {
        if i < target {
            Ok(prefix.get(i))
        } else {
            Err(Halt::Capture(post))
        }
    }) {
        Err(Halt::Capture(p)) => Ok(p),
        _ => unreachable!("the walk always reaches the first undecoded position"),
    }
}
