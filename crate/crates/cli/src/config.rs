//! JSON-facing configuration schemas and their conversions into core values.
//!
//! The JSON layer uses 1-based bit positions (hand-written specs count from
//! 1); the library is 0-based throughout, so the conversions here shift
//! indices in both directions.

use polar_scs::decode::DEFAULT_MAX_RESTARTS;
use polar_scs::{AgentConfig, ChannelModel, CodeSpec};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use sha2::{Digest, Sha256};

use crate::CliError;

fn config_err(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

/// On-disk code description: `{"n": int, "frozen": [int...],
/// "frozen_values": [0/1...]}` with 1-based positions in `frozen`. The
/// information set is always derived, never stored.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CodeSpecDto {
    pub n: u32,
    pub frozen: Vec<u64>,
    pub frozen_values: Vec<u8>,
}

impl CodeSpecDto {
    pub fn to_core(&self) -> Result<CodeSpec, CliError> {
        if self.n > polar_scs::code::MAX_LEVELS {
            return Err(config_err(format!(
                "n = {} exceeds the supported maximum of {}",
                self.n,
                polar_scs::code::MAX_LEVELS
            )));
        }
        let block = 1u64 << self.n;
        let mut frozen = Vec::with_capacity(self.frozen.len());
        for &pos in &self.frozen {
            if pos == 0 || pos > block {
                return Err(config_err(format!(
                    "frozen position {pos} outside 1..={block} (positions are 1-based)"
                )));
            }
            frozen.push((pos - 1) as usize);
        }
        CodeSpec::new(self.n, frozen, self.frozen_values.clone()).map_err(CliError::Core)
    }

    pub fn from_core(spec: &CodeSpec) -> Self {
        CodeSpecDto {
            n: spec.levels(),
            frozen: spec.frozen_positions().iter().map(|&i| i as u64 + 1).collect(),
            frozen_values: spec.frozen_values().to_vec(),
        }
    }
}

/// Channel selector: `{"type": "bec"|"bsc"|"biawgn", "param": real}`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ChannelDto {
    #[serde(rename = "type")]
    pub kind: ChannelKind,
    pub param: f64,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum ChannelKind {
    Bec,
    Bsc,
    Biawgn,
}

impl ChannelDto {
    pub fn to_core(&self) -> Result<ChannelModel, CliError> {
        let model = match self.kind {
            ChannelKind::Bec => ChannelModel::bec(self.param),
            ChannelKind::Bsc => ChannelModel::bsc(self.param),
            ChannelKind::Biawgn => ChannelModel::bi_awgn(self.param),
        };
        model.map_err(CliError::Core)
    }
}

/// A tilt exponent in JSON: a non-negative real, or the string `"inf"` for
/// the argmax limit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Beta(pub f64);

impl Serialize for Beta {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        if self.0.is_infinite() && self.0 > 0.0 {
            ser.serialize_str("inf")
        } else {
            ser.serialize_f64(self.0)
        }
    }
}

impl<'de> Deserialize<'de> for Beta {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Word(String),
        }
        match Raw::deserialize(de)? {
            Raw::Num(x) => Ok(Beta(x)),
            Raw::Word(w) if w == "inf" => Ok(Beta(f64::INFINITY)),
            Raw::Word(w) => Err(D::Error::custom(format!(
                "beta must be a non-negative number or \"inf\", got \"{w}\""
            ))),
        }
    }
}

/// Decoder selector: `{"decoder": "sc"|"scl"|"scs"|"scis", ...}` with the
/// parameters each kind needs (`ell` for scl; `agents` and optionally
/// `max_restarts` for scs; `betas`, optionally `agents`/`max_restarts` for
/// scis). Parameters foreign to the selected kind are rejected.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct DecoderDto {
    pub decoder: DecoderKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ell: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agents: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub betas: Option<Vec<Beta>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_restarts: Option<u64>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum DecoderKind {
    Sc,
    Scl,
    Scs,
    Scis,
}

/// A decoder description resolved against core types and ready to run.
#[derive(Debug, Clone, PartialEq)]
pub enum ResolvedDecoder {
    Sc,
    Scl { ell: usize },
    /// scs and scis both resolve here: one agent configuration per agent.
    Sampling { agents: Vec<AgentConfig> },
}

impl ResolvedDecoder {
    /// Number of sampling-agent slots this decoder occupies per trial.
    pub fn agent_slots(&self) -> usize {
        match self {
            ResolvedDecoder::Sampling { agents } => agents.len(),
            _ => 0,
        }
    }

    /// A short comma-free label for CSV rows and logs.
    pub fn label(&self) -> String {
        match self {
            ResolvedDecoder::Sc => "sc".to_string(),
            ResolvedDecoder::Scl { ell } => format!("scl({ell})"),
            ResolvedDecoder::Sampling { agents } => {
                if agents.iter().all(|a| a.beta == 1.0) {
                    format!("scs({})", agents.len())
                } else {
                    let betas: Vec<String> =
                        agents.iter().map(|a| fmt_beta(a.beta)).collect();
                    format!("scis({};b={})", agents.len(), betas.join("|"))
                }
            }
        }
    }
}

fn fmt_beta(beta: f64) -> String {
    if beta.is_infinite() {
        "inf".to_string()
    } else {
        format!("{beta}")
    }
}

impl DecoderDto {
    pub fn resolve(&self) -> Result<ResolvedDecoder, CliError> {
        let reject = |field: &str, kind: &str| -> Result<(), CliError> {
            Err(config_err(format!("decoder \"{kind}\" does not take \"{field}\"")))
        };
        match self.decoder {
            DecoderKind::Sc => {
                if self.ell.is_some() {
                    reject("ell", "sc")?;
                }
                if self.agents.is_some() {
                    reject("agents", "sc")?;
                }
                if self.betas.is_some() {
                    reject("betas", "sc")?;
                }
                if self.max_restarts.is_some() {
                    reject("max_restarts", "sc")?;
                }
                Ok(ResolvedDecoder::Sc)
            }
            DecoderKind::Scl => {
                if self.agents.is_some() {
                    reject("agents", "scl")?;
                }
                if self.betas.is_some() {
                    reject("betas", "scl")?;
                }
                if self.max_restarts.is_some() {
                    reject("max_restarts", "scl")?;
                }
                let ell = self.ell.ok_or_else(|| config_err("decoder \"scl\" needs \"ell\""))?;
                if ell == 0 {
                    return Err(config_err("\"ell\" must be at least 1"));
                }
                Ok(ResolvedDecoder::Scl { ell })
            }
            DecoderKind::Scs => {
                if self.ell.is_some() {
                    reject("ell", "scs")?;
                }
                if self.betas.is_some() {
                    reject("betas", "scs")?;
                }
                let agents =
                    self.agents.ok_or_else(|| config_err("decoder \"scs\" needs \"agents\""))?;
                if agents == 0 {
                    return Err(config_err("\"agents\" must be at least 1"));
                }
                let cfg = self.agent_config(1.0)?;
                Ok(ResolvedDecoder::Sampling { agents: vec![cfg; agents] })
            }
            DecoderKind::Scis => {
                if self.ell.is_some() {
                    reject("ell", "scis")?;
                }
                let betas = self
                    .betas
                    .as_ref()
                    .ok_or_else(|| config_err("decoder \"scis\" needs \"betas\""))?;
                if betas.is_empty() {
                    return Err(config_err("\"betas\" must list at least one exponent"));
                }
                let expanded: Vec<f64> = match self.agents {
                    // One exponent may be broadcast to any agent count;
                    // otherwise the list length must equal the agent count.
                    Some(a) if a == 0 => {
                        return Err(config_err("\"agents\" must be at least 1"));
                    }
                    Some(a) if betas.len() == 1 => vec![betas[0].0; a],
                    Some(a) if betas.len() == a => betas.iter().map(|b| b.0).collect(),
                    Some(a) => {
                        return Err(config_err(format!(
                            "\"betas\" lists {} exponents but \"agents\" is {a}",
                            betas.len()
                        )));
                    }
                    None => betas.iter().map(|b| b.0).collect(),
                };
                let agents = expanded
                    .into_iter()
                    .map(|b| self.agent_config(b))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(ResolvedDecoder::Sampling { agents })
            }
        }
    }

    fn agent_config(&self, beta: f64) -> Result<AgentConfig, CliError> {
        let cfg = AgentConfig {
            beta,
            max_restarts: self.max_restarts.unwrap_or(DEFAULT_MAX_RESTARTS),
            near_uniform_tol: 0.0,
        };
        cfg.validate().map_err(CliError::Core)?;
        Ok(cfg)
    }
}

/// How the information bits of each trial are chosen.
#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq, Default)]
#[serde(rename_all = "snake_case")]
pub enum MessageMode {
    /// Fresh uniform random information bits per trial (the default).
    #[default]
    Uniform,
    /// The fixed all-zero information word.
    AllZero,
}

/// A full simulation request.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SimConfigDto {
    pub code: CodeSpecDto,
    pub channel: ChannelDto,
    /// The decoder to estimate. Optional so that comparison configs, which
    /// carry their decoder list in a separate file, can omit it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decoder: Option<DecoderDto>,
    pub trials: u64,
    pub master_seed: u64,
    #[serde(default)]
    pub message_mode: MessageMode,
}

impl SimConfigDto {
    /// The parsed config re-emitted with this schema's fixed field order.
    pub fn canonical_json(&self) -> String {
        serde_json::to_string(self).expect("config serialization cannot fail")
    }

    /// Hex SHA-256 of the canonical serialization; stamped into results so
    /// an estimate can be traced back to the exact configuration.
    pub fn digest(&self) -> String {
        let hash = Sha256::digest(self.canonical_json().as_bytes());
        let mut hex = String::with_capacity(64);
        for byte in hash {
            hex.push_str(&format!("{byte:02x}"));
        }
        hex
    }
}
