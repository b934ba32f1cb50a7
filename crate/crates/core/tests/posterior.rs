//! Decoder-level checks against the exhaustive posterior oracle: the chain
//! rule of the bitwise posteriors, the sampling decoders' report
//! distributions (plain and tilted), list/greedy agreement, and the restart
//! bookkeeping.

use polar_scs::{
    brute_force_posterior, construct_code, encode, likelihood_pair, sc_decode, sc_posterior,
    scis_decode, scl_decode, scs_decode, transmit, AgentConfig, BitVector, ChannelModel,
    CodeSpec, Error, MessageDistribution, Observation, RawSymbol,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn observe(symbols: &[RawSymbol], channel: &ChannelModel) -> Vec<Observation> {
    symbols
        .iter()
        .map(|&raw| {
            let (w0, w1) = likelihood_pair(raw, channel).unwrap();
            Observation { w0, w1, raw }
        })
        .collect()
}

fn all_info(levels: u32) -> CodeSpec {
    CodeSpec::new(levels, vec![], vec![]).unwrap()
}

fn bits_of(word: u32, len: usize) -> BitVector {
    BitVector::from_bits(&(0..len).map(|i| ((word >> i) & 1) as u8).collect::<Vec<_>>()).unwrap()
}

/// The product of the chosen-branch bitwise posteriors along a full path
/// must reproduce the exhaustive posterior mass of that path.
#[test]
fn bitwise_posteriors_chain_into_the_full_posterior() {
    let bsc = ChannelModel::bsc(0.1).unwrap();
    let noisy_bsc = ChannelModel::bsc(0.3).unwrap();
    let bec = ChannelModel::bec(0.4).unwrap();
    let awgn = ChannelModel::bi_awgn(0.8).unwrap();

    let mut cases: Vec<(u32, Vec<Observation>)> = vec![
        (0, observe(&[RawSymbol::Bit(0)], &bsc)),
        (1, observe(&[RawSymbol::Bit(0), RawSymbol::Bit(0)], &bsc)),
        (1, observe(&[RawSymbol::Bit(1), RawSymbol::Bit(0)], &noisy_bsc)),
        (
            2,
            observe(
                &[RawSymbol::Bit(0), RawSymbol::Erasure, RawSymbol::Bit(1), RawSymbol::Erasure],
                &bec,
            ),
        ),
        (
            2,
            observe(
                &[
                    RawSymbol::Real(1.2),
                    RawSymbol::Real(-0.4),
                    RawSymbol::Real(0.05),
                    RawSymbol::Real(-2.0),
                ],
                &awgn,
            ),
        ),
    ];
    // One length-8 case per channel family, transmitted with a fixed seed.
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for channel in [&bsc, &bec, &awgn] {
        let x = encode(&all_info(3), &bits_of(0b1011_0010, 8)).unwrap();
        cases.push((3, transmit(&x, channel, &mut rng)));
    }

    for (levels, obs) in cases {
        let spec = all_info(levels);
        let n = spec.block_len();
        let oracle = brute_force_posterior(&obs, &spec).unwrap();
        for word in 0u32..(1 << n) {
            let u = bits_of(word, n);
            let mut product = 1.0;
            for m in 0..n {
                let prefix = BitVector::from_bits(&u.as_slice()[..m]).unwrap();
                let pair = sc_posterior(&obs, &prefix, &spec).unwrap();
                product *= pair.prob(u.get(m));
            }
            let expected = oracle.prob(&u);
            assert!(
                (product - expected).abs() <= 1e-9,
                "N={n}: chained {product} vs exhaustive {expected} for {u}"
            );
        }
    }
}

/// The shared statistical instance: an 8-bit code with 5 information bits
/// on a crossover-0.1 channel, receiving the all-zero codeword with a single
/// flip. The posterior then spreads over sixteen messages (top mass 0.46)
/// while every tilt keeps the per-sample restart count manageable.
fn statistical_instance() -> (CodeSpec, Vec<Observation>) {
    let spec = construct_code(3, 0.5, 5).unwrap();
    let channel = ChannelModel::bsc(0.1).unwrap();
    let received = [0u8, 0, 0, 0, 0, 0, 1, 0].map(RawSymbol::Bit);
    (spec, observe(&received, &channel))
}

fn sampled_report_distribution(
    spec: &CodeSpec,
    obs: &[Observation],
    beta: f64,
    samples: usize,
    seed: u64,
) -> MessageDistribution {
    let cfg = AgentConfig { beta, ..AgentConfig::default() };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reports = Vec::with_capacity(samples);
    let mut exhausted = 0usize;
    for _ in 0..samples {
        let run = scis_decode(obs, spec, &[cfg], &mut rng).unwrap();
        assert!(run.candidates.len() + run.exhausted_agents == 1);
        match run.candidates.into_iter().next() {
            Some(message) => reports.push(message),
            None => exhausted += 1,
        }
    }
    assert!(
        exhausted * 1000 < samples,
        "exhaustion should be rare on this instance, saw {exhausted}"
    );
    MessageDistribution::from_samples(reports).unwrap()
}

/// Accepted reports of a unit-tilt agent follow the exact posterior.
#[test]
fn report_frequencies_follow_the_posterior() {
    let (spec, obs) = statistical_instance();
    let oracle = brute_force_posterior(&obs, &spec).unwrap();
    let empirical = sampled_report_distribution(&spec, &obs, 1.0, 100_000, 31);
    let tv = empirical.total_variation(&oracle);
    assert!(tv < 0.02, "total variation {tv} too large for posterior sampling");
}

/// Accepted reports of a tilted agent follow the normalized beta-th power
/// of the posterior.
#[test]
fn tilted_report_frequencies_follow_the_tilted_posterior() {
    let (spec, obs) = statistical_instance();
    let oracle = brute_force_posterior(&obs, &spec).unwrap();
    for (beta, seed) in [(2.0, 32u64), (0.5, 33u64)] {
        let target = oracle.tilted(beta).unwrap();
        let empirical = sampled_report_distribution(&spec, &obs, beta, 100_000, seed);
        let tv = empirical.total_variation(&target);
        assert!(tv < 0.02, "total variation {tv} too large at tilt {beta}");
    }
}

/// On a fully erased block the report distribution is uniform over the
/// compatible messages and every agent eventually lands.
#[test]
fn erased_block_reports_are_uniform_over_the_codebook() {
    let spec = construct_code(2, 0.5, 2).unwrap();
    let channel = ChannelModel::bec(1.0).unwrap();
    let obs = observe(&[RawSymbol::Erasure; 4], &channel);
    let oracle = brute_force_posterior(&obs, &spec).unwrap();
    assert_eq!(oracle.len(), 4);
    for (_, mass) in oracle.iter() {
        assert!((mass - 0.25).abs() < 1e-12);
    }
    let empirical = sampled_report_distribution(&spec, &obs, 1.0, 20_000, 34);
    let tv = empirical.total_variation(&oracle);
    assert!(tv < 0.02, "total variation {tv} too large on the erased block");
}

/// A list of one must retrace the greedy decoder exactly, across code
/// sizes, channels, and noise realizations.
#[test]
fn list_of_one_is_the_greedy_decoder_everywhere() {
    let channels = [
        ChannelModel::bsc(0.1).unwrap(),
        ChannelModel::bec(0.3).unwrap(),
        ChannelModel::bi_awgn(1.0).unwrap(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for trial in 0..1000 {
        let levels = rng.random_range(0..=4u32);
        let n = 1usize << levels;
        let k = rng.random_range(0..=n);
        let spec = construct_code(levels, 0.5, k).unwrap();
        let channel = &channels[trial % channels.len()];
        let info: Vec<u8> = (0..k).map(|_| rng.random_range(0..2u8)).collect();
        let x = encode(&spec, &BitVector::from_bits(&info).unwrap()).unwrap();
        let obs = transmit(&x, channel, &mut rng);
        let greedy = sc_decode(&obs, &spec).unwrap();
        let list = scl_decode(&obs, &spec, 1).unwrap();
        assert_eq!(list.candidates.len(), 1);
        assert_eq!(list.candidates[0], greedy, "trial {trial} diverged");
    }
}

/// A big enough list holds the whole codebook and its top entry is the
/// posterior argmax.
#[test]
fn full_list_contains_every_compatible_message() {
    let spec = construct_code(3, 0.5, 3).unwrap();
    let channel = ChannelModel::bsc(0.2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let x = encode(&spec, &bits_of(0b101, 3)).unwrap();
    let obs = transmit(&x, &channel, &mut rng);
    let report = scl_decode(&obs, &spec, 8).unwrap();
    assert_eq!(report.unique_candidates.len(), 8);
    let oracle = brute_force_posterior(&obs, &spec).unwrap();
    let (argmax, _) = oracle
        .iter()
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .map(|(m, w)| (m.clone(), w))
        .unwrap();
    assert_eq!(report.candidates[0], argmax);
    for (message, _) in oracle.iter() {
        assert!(report.contains(message));
    }
}

/// The instance of the restart discussion: an information bit followed by a
/// frozen bit. An agent that lands must do so with the product-form
/// probability (here 9:1 between the two compatible messages), not with the
/// first branch's marginal ratio (here roughly 0.22:1) that a
/// default-to-the-compatible-branch walker would exhibit.
#[test]
fn restarting_reproduces_the_product_form_ratio() {
    let spec = CodeSpec::new(1, vec![1], vec![0]).unwrap();
    let channel = ChannelModel::bsc(0.1).unwrap();
    let obs = observe(&[RawSymbol::Bit(0), RawSymbol::Bit(1)], &channel);

    let oracle = brute_force_posterior(&obs, &spec).unwrap();
    let msg_a = BitVector::from_bits(&[0, 0]).unwrap();
    let msg_b = BitVector::from_bits(&[1, 0]).unwrap();
    assert!((oracle.prob(&msg_a) - 0.9).abs() < 1e-12);
    assert!((oracle.prob(&msg_b) - 0.1).abs() < 1e-12);

    // The first branch alone prefers the OTHER message: with the later bit
    // still uniform, u0 = 1 carries posterior 0.82.
    let first = sc_posterior(&obs, &BitVector::zeros(0), &spec).unwrap();
    assert!((first.p0 - 0.18).abs() < 1e-12);

    let samples = 20_000usize;
    let mut rng = ChaCha8Rng::seed_from_u64(51);
    let mut hits_a = 0usize;
    let mut restarts_seen = 0u64;
    for _ in 0..samples {
        let run = scs_decode(&obs, &spec, 1, AgentConfig::default(), &mut rng).unwrap();
        restarts_seen += run.restarts;
        assert_eq!(run.candidates.len(), 1, "this instance cannot exhaust an agent");
        if run.candidates[0] == msg_a {
            hits_a += 1;
        } else {
            assert_eq!(run.candidates[0], msg_b);
        }
    }
    let p_hat = hits_a as f64 / samples as f64;
    let se = (0.9f64 * 0.1 / samples as f64).sqrt();
    assert!(
        (p_hat - 0.9).abs() <= 4.0 * se,
        "acceptance-conditioned frequency {p_hat} should sit at the product form 0.9"
    );
    // Far from the no-restart law, and restarts actually happened.
    assert!((p_hat - 0.18).abs() > 30.0 * se);
    assert!(restarts_seen > 0, "the incompatible branch must force restarts");
}

/// Contradictory evidence at a frozen bit exhausts every agent; the report
/// stays empty but the bookkeeping adds up.
#[test]
fn impossible_evidence_exhausts_all_agents() {
    let spec = CodeSpec::new(1, vec![1], vec![0]).unwrap();
    let channel = ChannelModel::bsc(0.0).unwrap();
    let obs = observe(&[RawSymbol::Bit(0), RawSymbol::Bit(1)], &channel);

    assert!(matches!(brute_force_posterior(&obs, &spec), Err(Error::Contradiction)));

    let cfg = AgentConfig { max_restarts: 7, ..AgentConfig::default() };
    let a = 3usize;
    let mut rng = ChaCha8Rng::seed_from_u64(61);
    let report = scs_decode(&obs, &spec, a, cfg, &mut rng).unwrap();
    assert!(report.candidates.is_empty());
    assert!(report.unique_candidates.is_empty());
    assert_eq!(report.exhausted_agents, a);
    assert_eq!(report.candidates.len() + report.exhausted_agents, a);
    assert_eq!(report.restarts, 7 * a as u64);
}

/// Mixed temperatures: an infinite-tilt agent walks the greedy path while
/// its finite-tilt peers stay random; the candidate multiset keeps one slot
/// per landing agent in configuration order.
#[test]
fn mixed_tilts_keep_per_agent_semantics() {
    let (spec, obs) = statistical_instance();
    let greedy = sc_decode(&obs, &spec).unwrap();
    let agents = [
        AgentConfig { beta: f64::INFINITY, ..AgentConfig::default() },
        AgentConfig::default(),
        AgentConfig { beta: 0.5, ..AgentConfig::default() },
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(71);
    let report = scis_decode(&obs, &spec, &agents, &mut rng).unwrap();
    assert_eq!(report.candidates.len() + report.exhausted_agents, agents.len());
    assert_eq!(report.candidates[0], greedy);
    for message in &report.unique_candidates {
        assert!(spec.is_compatible(message));
    }
}
