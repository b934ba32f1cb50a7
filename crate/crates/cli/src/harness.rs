//! Reproducible parallel Monte-Carlo estimation of list-error rates.
//!
//! Determinism contract: trial `i` derives its own 64-bit seed from the
//! master seed through a fixed avalanche mixer ([`derive_trial_seed`], a
//! splitmix64 finalizer — stable across releases). The trial's message and
//! channel noise come from stream 0 of a counter-based generator seeded
//! with that trial seed; decoder `d` of the invocation's decoder list draws
//! from stream `1 + d`, so every decoder sees the same channel realization
//! (common random numbers) but has private sampling randomness. Aggregation
//! sums integer counters, so estimates are bit-identical under any worker
//! count or scheduling order.

use polar_scs::{
    polar_transform, sc_decode, scis_decode, scl_decode, transmit, AgentConfig, BitVector,
    ChannelModel, CodeSpec,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::config::{MessageMode, ResolvedDecoder, SimConfigDto};
use crate::CliError;

/// Two-sided 97.5% standard-normal quantile for 95% Wilson intervals.
pub const WILSON_Z: f64 = 1.959963984540054;

/// Mixes a master seed and a trial index into an independent 64-bit seed:
/// the splitmix64 finalizer applied to `master ^ (index+1)·phi64`. Fixed
/// forever; results are only comparable across runs because this is.
pub fn derive_trial_seed(master_seed: u64, trial_index: u64) -> u64 {
    let mut z = master_seed ^ trial_index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// 95% Wilson score interval for `errors` successes in `trials` draws.
/// Always contains the point estimate errors/trials.
pub fn wilson_interval(errors: u64, trials: u64) -> (f64, f64) {
    assert!(trials >= 1 && errors <= trials);
    let n = trials as f64;
    let p = errors as f64 / n;
    let z2 = WILSON_Z * WILSON_Z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = WILSON_Z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    (((center - half).max(0.0)).min(p), ((center + half).min(1.0)).max(p))
}

/// A Monte-Carlo list-error estimate with its sampling bookkeeping.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorEstimate {
    pub errors: u64,
    pub trials: u64,
    /// errors / trials.
    pub p_hat: f64,
    /// 95% Wilson interval bounds; ci_low <= p_hat <= ci_high.
    pub ci_low: f64,
    pub ci_high: f64,
    /// Restarts per trial, summed over the decoder's agents (0 for sc/scl).
    pub mean_restarts: f64,
    /// Fraction of agent slots that exhausted their restart budget.
    pub exhausted_fraction: f64,
}

impl ErrorEstimate {
    fn from_counts(agg: &Agg, trials: u64, agent_slots: usize) -> Self {
        let (ci_low, ci_high) = wilson_interval(agg.errors, trials);
        let slots = trials * agent_slots as u64;
        ErrorEstimate {
            errors: agg.errors,
            trials,
            p_hat: agg.errors as f64 / trials as f64,
            ci_low,
            ci_high,
            mean_restarts: agg.restarts as f64 / trials as f64,
            exhausted_fraction: if slots == 0 {
                0.0
            } else {
                agg.exhausted as f64 / slots as f64
            },
        }
    }

    /// Half the interval width — the `sigma` of paired-comparison slack.
    pub fn half_width(&self) -> f64 {
        (self.ci_high - self.ci_low) / 2.0
    }

    /// The external results shape, stamped with the configuration digest.
    pub fn to_json(&self, config_digest: &str) -> ErrorEstimateJson {
        ErrorEstimateJson {
            p_hat: self.p_hat,
            ci: [self.ci_low, self.ci_high],
            errors: self.errors,
            trials: self.trials,
            mean_restarts: self.mean_restarts,
            exhausted_fraction: self.exhausted_fraction,
            config_digest: config_digest.to_string(),
        }
    }
}

/// Results JSON: field order is part of the format.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct ErrorEstimateJson {
    pub p_hat: f64,
    pub ci: [f64; 2],
    pub errors: u64,
    pub trials: u64,
    pub mean_restarts: f64,
    pub exhausted_fraction: f64,
    pub config_digest: String,
}

#[derive(Debug, Clone, Copy, Default)]
struct Agg {
    errors: u64,
    restarts: u64,
    exhausted: u64,
}

impl Agg {
    fn merge(mut acc: Vec<Agg>, other: Vec<Agg>) -> Vec<Agg> {
        for (a, b) in acc.iter_mut().zip(other) {
            a.errors += b.errors;
            a.restarts += b.restarts;
            a.exhausted += b.exhausted;
        }
        acc
    }
}

/// A validated simulation: code, channel, message mode, and the decoder
/// list sharing each trial's channel realization.
pub struct Simulation {
    spec: CodeSpec,
    channel: ChannelModel,
    decoders: Vec<ResolvedDecoder>,
    trials: u64,
    master_seed: u64,
    mode: MessageMode,
}

impl Simulation {
    pub fn from_config(cfg: &SimConfigDto) -> Result<Self, CliError> {
        let decoder = cfg
            .decoder
            .as_ref()
            .ok_or_else(|| CliError::Config("config has no \"decoder\"".into()))?;
        Simulation::with_decoders(cfg, std::slice::from_ref(decoder))
    }

    pub fn with_decoders(
        cfg: &SimConfigDto,
        decoders: &[crate::config::DecoderDto],
    ) -> Result<Self, CliError> {
        if cfg.trials == 0 {
            return Err(CliError::Config("\"trials\" must be at least 1".into()));
        }
        if decoders.is_empty() {
            return Err(CliError::Config("the decoder list is empty".into()));
        }
        Ok(Simulation {
            spec: cfg.code.to_core()?,
            channel: cfg.channel.to_core()?,
            decoders: decoders.iter().map(|d| d.resolve()).collect::<Result<_, _>>()?,
            trials: cfg.trials,
            master_seed: cfg.master_seed,
            mode: cfg.message_mode,
        })
    }

    pub fn labels(&self) -> Vec<String> {
        self.decoders.iter().map(|d| d.label()).collect()
    }

    /// Runs all trials on `workers` threads (0 = one per core) and returns
    /// one estimate per decoder, in decoder-list order.
    pub fn run(&self, workers: usize) -> Result<Vec<ErrorEstimate>, CliError> {
        let aggs = in_pool(workers, || {
            (0..self.trials)
                .into_par_iter()
                .try_fold(
                    || vec![Agg::default(); self.decoders.len()],
                    |mut acc, index| -> Result<Vec<Agg>, CliError> {
                        self.one_trial(index, &mut acc)?;
                        Ok(acc)
                    },
                )
                .try_reduce(
                    || vec![Agg::default(); self.decoders.len()],
                    |a, b| Ok(Agg::merge(a, b)),
                )
        })??;
        Ok(self
            .decoders
            .iter()
            .zip(&aggs)
            .map(|(dec, agg)| ErrorEstimate::from_counts(agg, self.trials, dec.agent_slots()))
            .collect())
    }

    fn one_trial(&self, index: u64, acc: &mut [Agg]) -> Result<(), CliError> {
        let seed = derive_trial_seed(self.master_seed, index);
        let mut source = ChaCha8Rng::seed_from_u64(seed);
        source.set_stream(0);

        let k = self.spec.dimension();
        let mut info = BitVector::zeros(k);
        if self.mode == MessageMode::Uniform {
            for i in 0..k {
                info.set(i, u8::from(source.random::<bool>()));
            }
        }
        let message = self.spec.assemble(&info)?;
        let codeword = polar_transform(&message)?;
        let obs = transmit(&codeword, &self.channel, &mut source);

        for (d, decoder) in self.decoders.iter().enumerate() {
            match decoder {
                ResolvedDecoder::Sc => {
                    let decoded = sc_decode(&obs, &self.spec)?;
                    acc[d].errors += u64::from(decoded != message);
                }
                ResolvedDecoder::Scl { ell } => {
                    let report = scl_decode(&obs, &self.spec, *ell)?;
                    acc[d].errors += u64::from(!report.contains(&message));
                }
                ResolvedDecoder::Sampling { agents } => {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    rng.set_stream(1 + d as u64);
                    let report = scis_decode(&obs, &self.spec, agents, &mut rng)?;
                    acc[d].errors += u64::from(!report.contains(&message));
                    acc[d].restarts += report.restarts;
                    acc[d].exhausted += report.exhausted_agents as u64;
                }
            }
        }
        Ok(())
    }
}

/// Estimates the error rate of `cfg.decoder`.
pub fn run_trials(cfg: &SimConfigDto, workers: usize) -> Result<ErrorEstimate, CliError> {
    let mut estimates = Simulation::from_config(cfg)?.run(workers)?;
    Ok(estimates.pop().expect("one decoder"))
}

/// Estimates every decoder in `decoders` on shared channel realizations
/// (common random numbers), for paired comparisons. `cfg.decoder` is
/// ignored; the list is authoritative.
pub fn compare_decoders(
    cfg: &SimConfigDto,
    decoders: &[crate::config::DecoderDto],
    workers: usize,
) -> Result<Vec<(String, ErrorEstimate)>, CliError> {
    let sim = Simulation::with_decoders(cfg, decoders)?;
    let estimates = sim.run(workers)?;
    Ok(sim.labels().into_iter().zip(estimates).collect())
}

/// Outcome of an empirical check of the sampling law.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TvReport {
    /// Total-variation distance between the completed samples' empirical
    /// distribution and the tilted brute-force posterior.
    pub tv: f64,
    /// Samples whose agent completed within its restart budget.
    pub completed: u64,
    pub samples: u64,
}

/// Draws a message and a channel realization from `seed` (stream 0), then
/// runs `samples` independent single-agent tilted samplers against the
/// received word and measures the total-variation distance between the
/// empirical report distribution and the brute-force posterior tilted by
/// `beta`. Deterministic in all arguments; sample `i` seeds its sampler
/// with `derive_trial_seed(seed, i)` on stream 1.
pub fn sampled_posterior_tv(
    spec: &CodeSpec,
    channel: &ChannelModel,
    samples: u64,
    beta: f64,
    seed: u64,
    workers: usize,
) -> Result<TvReport, CliError> {
    if samples == 0 {
        return Err(CliError::Config("\"samples\" must be at least 1".into()));
    }
    let agent = [AgentConfig::new(beta)?];

    let mut source = ChaCha8Rng::seed_from_u64(seed);
    source.set_stream(0);
    let k = spec.dimension();
    let mut info = BitVector::zeros(k);
    for i in 0..k {
        info.set(i, u8::from(source.random::<bool>()));
    }
    let message = spec.assemble(&info)?;
    let codeword = polar_transform(&message)?;
    let obs = transmit(&codeword, channel, &mut source);

    let target = polar_scs::brute_force_posterior(&obs, spec)?.tilted(beta)?;

    let reports = in_pool(workers, || {
        (0..samples)
            .into_par_iter()
            .map(|i| {
                let mut rng = ChaCha8Rng::seed_from_u64(derive_trial_seed(seed, i));
                rng.set_stream(1);
                let report = scis_decode(&obs, spec, &agent, &mut rng)?;
                Ok(report.candidates.into_iter().next())
            })
            .collect::<Result<Vec<Option<BitVector>>, CliError>>()
    })??;

    let completed: Vec<BitVector> = reports.into_iter().flatten().collect();
    if completed.is_empty() {
        return Err(CliError::Config(
            "every sample exhausted its restart budget; nothing to compare".into(),
        ));
    }
    let done = completed.len() as u64;
    let empirical = polar_scs::MessageDistribution::from_samples(completed)?;
    Ok(TvReport { tv: empirical.total_variation(&target), completed: done, samples })
}

fn in_pool<T: Send>(
    workers: usize,
    f: impl FnOnce() -> T + Send,
) -> Result<T, CliError> {
    if workers == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| CliError::Config(format!("cannot build a {workers}-thread pool: {e}")))?;
    Ok(pool.install(f))
}
