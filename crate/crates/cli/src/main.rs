//! `polar-scs`: construct polar codes, encode, run Monte-Carlo decoder
//! simulations, and tabulate closed-form error bounds.
//!
//! Exit status: 0 on success, 2 on usage errors (bad flags/grammar), 1 on
//! runtime errors (unreadable files, invalid configuration, failed jobs).
//! Diagnostics go to standard error; results go to stdout or `--out`.

use std::fs;
use std::path::Path;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;

use polar_scs::analysis::{beta_sweep, gap_delta, scis_error_from_pmf, scs_error_from_pmf};
use polar_scs::{construct_code, encode, BitVector};
use polar_scs_cli::config::{ChannelDto, CodeSpecDto, DecoderDto, SimConfigDto};
use polar_scs_cli::files::{
    compare_csv, fmt_sig10, parse_agent_list, parse_beta_grid, parse_pmf_text, sweep_csv,
};
use polar_scs_cli::harness::{compare_decoders, run_trials, sampled_posterior_tv};
use polar_scs_cli::CliError;

#[derive(Parser)]
#[command(name = "polar-scs", version, about)]
struct Cli {
    /// Worker threads for simulation subcommands (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a code by erasure-reliability ranking and write its JSON spec.
    Construct {
        /// Number of polarization levels (block length 2^n).
        #[arg(long)]
        n: u32,
        /// Design erasure parameter in [0, 1].
        #[arg(long)]
        z0: f64,
        /// Number of information bits.
        #[arg(long)]
        k: usize,
        /// Where to write the code JSON.
        #[arg(long)]
        out: PathBuf,
    },
    /// Encode an information word and print the codeword bits to stdout.
    Encode {
        /// Path to a code JSON file.
        #[arg(long)]
        code: PathBuf,
        /// Information bits as a 0/1 string, one per information position.
        #[arg(long)]
        info: String,
    },
    /// Estimate a decoder's list-error rate and write results JSON.
    Simulate {
        /// Path to a simulation config JSON.
        #[arg(long)]
        config: PathBuf,
        /// Where to write the results JSON.
        #[arg(long)]
        out: PathBuf,
    },
    /// Estimate several decoders on shared channel noise and write a CSV table.
    Compare {
        /// Path to a simulation config JSON (its "decoder" field is ignored).
        #[arg(long)]
        config: PathBuf,
        /// Path to a JSON array of decoder objects.
        #[arg(long)]
        decoders: PathBuf,
        /// Where to write the CSV table.
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the sampling-vs-list gap and its coarse upper bound.
    Bounds {
        /// Number of sampling agents.
        #[arg(long)]
        a: usize,
        /// List size.
        #[arg(long)]
        ell: usize,
    },
    /// Exact sampling error of a pmf file under a agents (tilted if --beta).
    PmfError {
        /// Path to a pmf text file: one mass per line, non-increasing.
        #[arg(long)]
        pmf: PathBuf,
        /// Number of sampling agents.
        #[arg(long)]
        a: usize,
        /// Tilt exponent (a non-negative real, or "inf" for argmax).
        #[arg(long)]
        beta: Option<f64>,
    },
    /// Tabulate tilted sampling error over a (beta, agents) grid as CSV.
    BetaSweep {
        /// Geometric ratio of the underlying pmf.
        #[arg(long)]
        q: f64,
        /// Support truncation: number of listed masses before renormalizing.
        #[arg(long = "K")]
        big_k: usize,
        /// Grid: "paper", "lin:start:stop:count", or a comma list.
        #[arg(long)]
        betas: String,
        /// Comma list of agent counts.
        #[arg(long)]
        agents: String,
        /// Where to write the CSV.
        #[arg(long)]
        out: PathBuf,
    },
    /// Compare empirical tilted-sampler reports against the exact posterior.
    LemmaCheck {
        /// Path to a code JSON file.
        #[arg(long)]
        code: PathBuf,
        /// Inline channel JSON, e.g. '{"type":"bsc","param":0.1}'.
        #[arg(long)]
        channel: String,
        /// Number of single-agent samples.
        #[arg(long)]
        samples: u64,
        /// Tilt exponent (finite, non-negative).
        #[arg(long)]
        beta: f64,
        /// Seed fixing the message, the noise, and every sampler.
        #[arg(long)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let workers = cli.workers;
    match cli.command {
        Command::Construct { n, z0, k, out } => {
            let spec = construct_code(n, z0, k)?;
            let dto = CodeSpecDto::from_core(&spec);
            let json =
                serde_json::to_string_pretty(&dto).expect("code serialization cannot fail");
            write_text(&out, &(json + "\n"))
        }
        Command::Encode { code, info } => {
            let spec = read_json::<CodeSpecDto>(&code)?.to_core()?;
            let info = parse_bitstring(&info)?;
            let codeword = encode(&spec, &info)?;
            let rendered: String =
                codeword.iter().map(|&b| char::from(b'0' + b)).collect();
            println!("{rendered}");
            Ok(())
        }
        Command::Simulate { config, out } => {
            let cfg = read_json::<SimConfigDto>(&config)?;
            let estimate = run_trials(&cfg, workers)?;
            let json = serde_json::to_string(&estimate.to_json(&cfg.digest()))
                .expect("results serialization cannot fail");
            write_text(&out, &(json + "\n"))
        }
        Command::Compare { config, decoders, out } => {
            let cfg = read_json::<SimConfigDto>(&config)?;
            let specs = read_json::<Vec<DecoderDto>>(&decoders)?;
            let rows = compare_decoders(&cfg, &specs, workers)?;
            write_text(&out, &compare_csv(&rows))
        }
        Command::Bounds { a, ell } => {
            let delta = gap_delta(a, ell)?;
            println!("delta = {delta}");
            println!("ell/(a*e) = {}", ell as f64 / (a as f64 * std::f64::consts::E));
            Ok(())
        }
        Command::PmfError { pmf, a, beta } => {
            let text = read_text(&pmf)?;
            let f = parse_pmf_text(&text)?;
            let error = match beta {
                None => scs_error_from_pmf(&f, a)?,
                Some(b) => scis_error_from_pmf(&f, a, b)?,
            };
            println!("{}", fmt_sig10(error));
            Ok(())
        }
        Command::BetaSweep { q, big_k, betas, agents, out } => {
            let grid = parse_beta_grid(&betas)?;
            let counts = parse_agent_list(&agents)?;
            let points = beta_sweep(q, big_k, &grid, &counts)?;
            write_text(&out, &sweep_csv(&points))
        }
        Command::LemmaCheck { code, channel, samples, beta, seed } => {
            let spec = read_json::<CodeSpecDto>(&code)?.to_core()?;
            let channel = serde_json::from_str::<ChannelDto>(&channel)
                .map_err(|e| CliError::Config(format!("--channel: {e}")))?
                .to_core()?;
            let report = sampled_posterior_tv(&spec, &channel, samples, beta, seed, workers)?;
            eprintln!("{} of {} samples completed", report.completed, report.samples);
            println!("tv = {}", fmt_sig10(report.tv));
            Ok(())
        }
    }
}

fn parse_bitstring(s: &str) -> Result<BitVector, CliError> {
    let bits: Vec<u8> = s
        .chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            other => Err(CliError::Config(format!(
                "--info must be a string of 0s and 1s, found '{other}'"
            ))),
        })
        .collect::<Result<_, _>>()?;
    BitVector::from_bits(&bits).map_err(CliError::Core)
}

fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::File {
        line: None,
        message: format!("{}: {e}", path.display()),
    })
}

fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::File {
        line: None,
        message: format!("{}: {e}", path.display()),
    })
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = read_text(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::File {
        line: Some(e.line()),
        message: format!("{}: {e}", path.display()),
    })
}
