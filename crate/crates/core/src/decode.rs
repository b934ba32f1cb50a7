//! The four decoders — SC, SC list, SC sampling, SC importance sampling —
//! plus an exhaustive posterior oracle for small codes.
//!
//! All of them drive the same recursive walk from [`crate::posterior`]; they
//! differ only in how each bit is chosen. SC takes the argmax, the list
//! decoder forks and keeps the best ℓ paths by replaying prefixes, and the
//! sampling decoders draw each bit with probability proportional to the
//! (optionally tilted) posterior and restart from the beginning whenever a
//! draw contradicts a frozen bit or lands in the leftover mass that tilting
//! leaves behind.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::BitVector;
use crate::channel::Observation;
use crate::code::{polar_transform, CodeSpec};
use crate::error::{Error, Result};
use crate::posterior::{Halt, PosteriorPair, Walker};

#[cfg(not(feature = "std"))]
use num_traits::Float;

/// Exhaustive enumeration refuses codes with more information bits than this.
pub const MAX_ENUMERATED_INFO_BITS: usize = 20;

/// Default per-agent restart budget before the agent gives up.
pub const DEFAULT_MAX_RESTARTS: u64 = 10_000;

/// One sampling agent: inverse temperature, restart budget, and the optional
/// near-uniform shortcut at frozen bits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AgentConfig {
    /// Tilt exponent applied to both posterior branches before sampling.
    /// 1 reproduces plain posterior sampling; +inf degenerates to the
    /// deterministic argmax walk (frozen bits forced, so it never restarts);
    /// 0 samples fair coins.
    pub beta: f64,
    /// How many times the agent may restart before reporting nothing.
    pub max_restarts: u64,
    /// If positive, a frozen bit whose tilted probability of 0 lies within
    /// this tolerance of 1/2 is taken as its frozen value instead of being
    /// sampled. This is an approximation: any positive tolerance alters the
    /// reported-message distribution. Default 0 (off, exact behavior).
    pub near_uniform_tol: f64,
}

impl AgentConfig {
    pub fn new(beta: f64) -> Result<Self> {
        let cfg = AgentConfig { beta, ..AgentConfig::default() };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.beta.is_nan() || self.beta < 0.0 {
            return Err(Error::Domain { name: "beta", value: self.beta });
        }
        if self.max_restarts == 0 {
            return Err(Error::Positive { name: "max_restarts" });
        }
        if !(0.0..=0.5).contains(&self.near_uniform_tol) {
            return Err(Error::Domain { name: "near_uniform_tol", value: self.near_uniform_tol });
        }
        Ok(())
    }
}

impl Default for AgentConfig {
    fn default() -> Self {
        AgentConfig { beta: 1.0, max_restarts: DEFAULT_MAX_RESTARTS, near_uniform_tol: 0.0 }
    }
}

/// What a decoding run produced: every reported message (one per surviving
/// agent, or the ℓ list paths), the same set deduplicated, and the sampling
/// bookkeeping.
#[derive(Debug, Clone, PartialEq)]
pub struct DecodeReport {
    /// Reported messages in production order; duplicates retained.
    pub candidates: Vec<BitVector>,
    /// The candidates, sorted and deduplicated.
    pub unique_candidates: Vec<BitVector>,
    /// Total number of restarts performed across all agents.
    pub restarts: u64,
    /// Agents that used up their restart budget and reported nothing.
    pub exhausted_agents: usize,
}

impl DecodeReport {
    fn new(candidates: Vec<BitVector>, restarts: u64, exhausted_agents: usize) -> Self {
        let mut unique_candidates = candidates.clone();
        unique_candidates.sort_unstable();
        unique_candidates.dedup();
        DecodeReport { candidates, unique_candidates, restarts, exhausted_agents }
    }

    /// Whether the message appears among the (deduplicated) candidates.
    pub fn contains(&self, message: &BitVector) -> bool {
        self.unique_candidates.binary_search(message).is_ok()
    }
}

/// A probability distribution over full message vectors, kept in sorted
/// message order with masses summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct MessageDistribution {
    entries: Vec<(BitVector, f64)>,
}

impl MessageDistribution {
    /// Normalizes non-negative weights into a distribution. Duplicate
    /// messages have their weights merged.
    pub fn from_weights(pairs: Vec<(BitVector, f64)>) -> Result<Self> {
        let mut entries = pairs;
        for (_, w) in &entries {
            if !w.is_finite() || *w < 0.0 {
                return Err(Error::Domain { name: "weight", value: *w });
            }
        }
        entries.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(BitVector, f64)> = Vec::with_capacity(entries.len());
        for (msg, w) in entries {
            match merged.last_mut() {
                Some((last, lw)) if *last == msg => *lw += w,
                _ => merged.push((msg, w)),
            }
        }
        let total: f64 = merged.iter().map(|(_, w)| *w).sum();
        if !(total > 0.0) || !total.is_finite() {
            return Err(Error::Domain { name: "total weight", value: total });
        }
        for (_, w) in &mut merged {
            *w /= total;
        }
        Ok(MessageDistribution { entries: merged })
    }

    /// The empirical distribution of a batch of messages.
    pub fn from_samples<I>(messages: I) -> Result<Self>
    where
        I: IntoIterator<Item = BitVector>,
    {
        MessageDistribution::from_weights(messages.into_iter().map(|m| (m, 1.0)).collect())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BitVector, f64)> {
        self.entries.iter().map(|(m, w)| (m, *w))
    }

    /// The probability of a message; zero if it is outside the support.
    pub fn prob(&self, message: &BitVector) -> f64 {
        match self.entries.binary_search_by(|(m, _)| m.cmp(message)) {
            Ok(i) => self.entries[i].1,
            Err(_) => 0.0,
        }
    }

    /// Total-variation distance to another distribution over the same space.
    pub fn total_variation(&self, other: &MessageDistribution) -> f64 {
        let mut acc = 0.0;
        let (mut i, mut j) = (0, 0);
        while i < self.entries.len() || j < other.entries.len() {
            let order = match (self.entries.get(i), other.entries.get(j)) {
                (Some(a), Some(b)) => a.0.cmp(&b.0),
                (Some(_), None) => core::cmp::Ordering::Less,
                (None, _) => core::cmp::Ordering::Greater,
            };
            match order {
                core::cmp::Ordering::Less => {
                    acc += self.entries[i].1;
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    acc += other.entries[j].1;
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    acc += (self.entries[i].1 - other.entries[j].1).abs();
                    i += 1;
                    j += 1;
                }
            }
        }
        acc / 2.0
    }

    /// The normalized beta-th power of this distribution. Zero masses stay
    /// zero; beta = 0 flattens the support to uniform; beta must be finite
    /// and non-negative.
    pub fn tilted(&self, beta: f64) -> Result<MessageDistribution> {
        if !beta.is_finite() || beta < 0.0 {
            return Err(Error::Domain { name: "beta", value: beta });
        }
        MessageDistribution::from_weights(
            self.entries
                .iter()
                .map(|(m, w)| (m.clone(), if *w == 0.0 { 0.0 } else { w.powf(beta) }))
                .collect(),
        )
    }
}

fn check_observations(obs: &[Observation], spec: &CodeSpec) -> Result<()> {
    if obs.len() != spec.block_len() {
        return Err(Error::BlockLength { expected: spec.block_len(), got: obs.len() });
    }
    for (index, o) in obs.iter().enumerate() {
        let ok = o.w0.is_finite() && o.w1.is_finite() && o.w0 >= 0.0 && o.w1 >= 0.0
            && o.w0 + o.w1 > 0.0;
        if !ok {
            return Err(Error::Observation { index });
        }
    }
    Ok(())
}

/// The posterior of bit `prefix.len()` given a committed prefix, on an
/// already validated walker.
fn replay(walker: &Walker, prefix: &[u8]) -> PosteriorPair {
    let target = prefix.len();
    match walker.walk(&mut |i, post| {
        if i < target {
            Ok(prefix[i])
        } else {
            Err(Halt::Capture(post))
        }
    }) {
        Err(Halt::Capture(p)) => p,
        _ => unreachable!("the walk always reaches the first undecoded position"),
    }
}

/// Hard-decision successive cancellation: frozen bits forced, information
/// bits set to the more likely branch (ties to 0). Returns the full message.
pub fn sc_decode(obs: &[Observation], spec: &CodeSpec) -> Result<BitVector> {
    check_observations(obs, spec)?;
    let walker = Walker::new(obs)?;
    let walk = walker
        .walk(&mut |i, post| {
            Ok(match spec.frozen_value_at(i) {
                Some(v) => v,
                None => post.hard_bit(),
            })
        })
        .unwrap_or_else(|_| unreachable!("the SC chooser never halts"));
    Ok(walk.u)
}

/// Successive-cancellation list decoding with list size `ell`.
///
/// Every surviving prefix forks at each information bit; children are ranked
/// by path metric (the sum of log posteriors of the chosen branches, frozen
/// branches included) and the best `ell` survive, ties broken toward the
/// lexicographically smaller prefix. The report carries the final paths in
/// rank order; with `ell` = 1 this is exactly [`sc_decode`].
pub fn scl_decode(obs: &[Observation], spec: &CodeSpec, ell: usize) -> Result<DecodeReport> {
    if ell == 0 {
        return Err(Error::Positive { name: "ell" });
    }
    check_observations(obs, spec)?;
    let walker = Walker::new(obs)?;

    struct Path {
        prefix: Vec<u8>,
        metric: f64,
    }

    let n = spec.block_len();
    let mut paths = vec![Path { prefix: Vec::with_capacity(n), metric: 0.0 }];
    for i in 0..n {
        let mut children: Vec<Path> = Vec::with_capacity(2 * paths.len());
        for path in &paths {
            let post = replay(&walker, &path.prefix);
            match spec.frozen_value_at(i) {
                Some(v) => {
                    let mut prefix = path.prefix.clone();
                    prefix.push(v);
                    children.push(Path { prefix, metric: path.metric + post.prob(v).ln() });
                }
                None => {
                    for bit in [0u8, 1u8] {
                        let mut prefix = path.prefix.clone();
                        prefix.push(bit);
                        children.push(Path { prefix, metric: path.metric + post.prob(bit).ln() });
                    }
                }
            }
        }
        children.sort_by(|a, b| b.metric.total_cmp(&a.metric).then_with(|| a.prefix.cmp(&b.prefix)));
        children.truncate(ell);
        paths = children;
    }

    let candidates = paths.into_iter().map(|p| BitVector::from_raw(p.prefix)).collect();
    Ok(DecodeReport::new(candidates, 0, 0))
}

/// A posterior branch probability raised to the tilt exponent, with zero
/// preserved (an impossible branch stays impossible at every tilt, and in
/// particular does not become possible at beta = 0).
fn tilt_weight(p: f64, beta: f64) -> f64 {
    if p <= 0.0 {
        0.0
    } else if beta == 1.0 {
        p
    } else {
        p.powf(beta)
    }
}

/// One full sampling pass for a single agent. At every bit — frozen and
/// information alike — the two branch posteriors are raised to the agent's
/// beta and scaled by c = min(1, 2^(beta-1)), which keeps their sum at most
/// one; the agent picks branch b with probability c·p_b^beta and restarts
/// (`Err`) with the leftover mass. Sampling the complement of a frozen bit
/// also restarts. The branch weights are deliberately *not* renormalized per
/// bit: the chosen-branch weights then multiply along a path into c^N times
/// the beta-th power of the path's full posterior mass, so conditioned on
/// finishing, the reported message is distributed proportionally to that
/// power. Per-bit renormalization would break this product form because the
/// normalizers differ from prefix to prefix.
///
/// At beta = 1 the weights already sum to one, so information bits never
/// restart and a frozen bit restarts exactly when the sampled value is
/// incompatible — plain posterior sampling.
fn agent_attempt<R: Rng + ?Sized>(
    walker: &Walker,
    spec: &CodeSpec,
    cfg: &AgentConfig,
    rng: &mut R,
) -> core::result::Result<BitVector, Halt> {
    // For beta >= 1 the two powers already sum to at most 1; for beta < 1
    // the sum can reach 2^(1-beta), so scale by its reciprocal.
    let scale = if cfg.beta >= 1.0 { 1.0 } else { 2.0f64.powf(cfg.beta - 1.0) };
    let walk = walker.walk(&mut |i, post| {
        if cfg.beta.is_infinite() {
            // Degenerate tilt: the deterministic SC walk, frozen bits forced.
            return Ok(match spec.frozen_value_at(i) {
                Some(v) => v,
                None => post.hard_bit(),
            });
        }
        let frozen = spec.frozen_value_at(i);
        if let Some(v) = frozen {
            if cfg.near_uniform_tol > 0.0 {
                let tilted = post.tilted(cfg.beta);
                if (tilted.p0 - 0.5).abs() <= cfg.near_uniform_tol {
                    return Ok(v);
                }
            }
        }
        let w0 = scale * tilt_weight(post.p0, cfg.beta);
        let w1 = scale * tilt_weight(post.p1, cfg.beta);
        let draw = rng.random::<f64>();
        let bit = if draw < w0 {
            0
        } else if draw < w0 + w1 {
            1
        } else {
            return Err(Halt::Reject);
        };
        match frozen {
            Some(v) if bit != v => Err(Halt::Reject),
            _ => Ok(bit),
        }
    })?;
    Ok(walk.u)
}

/// Importance-sampling decoding: one independent agent per entry of
/// `agents`, each choosing every bit with probability proportional to the
/// beta-th powers of the two posterior branches and restarting from bit 0
/// whenever a frozen bit comes out wrong or the draw falls in the
/// unnormalized weights' leftover mass. Conditioned on finishing, an
/// agent's reported message is therefore distributed proportionally to the
/// beta-th power of the full-message posterior; at beta = 1 this is exact
/// posterior sampling, and beta = +inf walks the deterministic argmax path.
///
/// Each agent runs on its own deterministic stream derived from `rng`
/// up front, so the output is independent of any execution interleaving.
/// An agent that exceeds its restart budget is counted in
/// `exhausted_agents` and reports nothing; the others contribute one
/// candidate each.
pub fn scis_decode<R: RngCore + ?Sized>(
    obs: &[Observation],
    spec: &CodeSpec,
    agents: &[AgentConfig],
    rng: &mut R,
) -> Result<DecodeReport> {
    if agents.is_empty() {
        return Err(Error::Positive { name: "agents" });
    }
    for cfg in agents {
        cfg.validate()?;
    }
    check_observations(obs, spec)?;
    let walker = Walker::new(obs)?;

    let seeds: Vec<u64> = (0..agents.len()).map(|_| rng.next_u64()).collect();
    let mut candidates = Vec::with_capacity(agents.len());
    let mut restarts: u64 = 0;
    let mut exhausted_agents = 0;
    for (cfg, seed) in agents.iter().zip(seeds) {
        let mut agent_rng = ChaCha8Rng::seed_from_u64(seed);
        let mut used: u64 = 0;
        loop {
            match agent_attempt(&walker, spec, cfg, &mut agent_rng) {
                Ok(message) => {
                    candidates.push(message);
                    break;
                }
                Err(Halt::Reject) => {
                    if used == cfg.max_restarts {
                        exhausted_agents += 1;
                        break;
                    }
                    used += 1;
                    restarts += 1;
                }
                Err(Halt::Capture(_)) => unreachable!("agents never capture"),
            }
        }
    }
    Ok(DecodeReport::new(candidates, restarts, exhausted_agents))
}

/// Posterior-sampling decoding: `a` independent agents, each sampling every
/// bit from the exact SC posterior (tilt fixed at 1). Equivalent to
/// [`scis_decode`] with `a` copies of `cfg`; the shared implementation makes
/// the two bit-identical under the same seed.
pub fn scs_decode<R: RngCore + ?Sized>(
    obs: &[Observation],
    spec: &CodeSpec,
    a: usize,
    cfg: AgentConfig,
    rng: &mut R,
) -> Result<DecodeReport> {
    if a == 0 {
        return Err(Error::Positive { name: "agents" });
    }
    if cfg.beta != 1.0 {
        return Err(Error::Domain { name: "beta", value: cfg.beta });
    }
    scis_decode(obs, spec, &vec![cfg; a], rng)
}

/// The exact posterior over all messages compatible with the frozen bits,
/// by enumerating every information-bit assignment and scoring its codeword
/// against the evidence. Refuses more than [`MAX_ENUMERATED_INFO_BITS`]
/// information bits.
pub fn brute_force_posterior(obs: &[Observation], spec: &CodeSpec) -> Result<MessageDistribution> {
    check_observations(obs, spec)?;
    let k = spec.dimension();
    if k > MAX_ENUMERATED_INFO_BITS {
        return Err(Error::Enumeration { info_bits: k, max: MAX_ENUMERATED_INFO_BITS });
    }
    let n = spec.block_len();
    let log_w: Vec<(f64, f64)> = obs.iter().map(|o| (o.w0.ln(), o.w1.ln())).collect();

    let mut scored: Vec<(BitVector, f64)> = Vec::with_capacity(1usize << k);
    let mut best = f64::NEG_INFINITY;
    for index in 0..(1u64 << k) {
        let info =
            BitVector::from_bits(&(0..k).map(|j| ((index >> j) & 1) as u8).collect::<Vec<u8>>())
                .expect("bits by construction");
        let u = spec.assemble(&info)?;
        let x = polar_transform(&u)?;
        let mut ll = 0.0;
        for i in 0..n {
            ll += if x.get(i) == 0 { log_w[i].0 } else { log_w[i].1 };
        }
        best = best.max(ll);
        scored.push((u, ll));
    }
    if best == f64::NEG_INFINITY {
        return Err(Error::Contradiction);
    }
    MessageDistribution::from_weights(
        scored.into_iter().map(|(u, ll)| (u, (ll - best).exp())).collect(),
    )
}
