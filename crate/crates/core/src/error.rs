//! Error type shared by every fallible operation in the crate.

use core::fmt;

/// Why an operation refused its inputs.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A vector length disagrees with the block length implied by the code.
    BlockLength { expected: usize, got: usize },
    /// A length that must be a power of two is not.
    NotPowerOfTwo { len: usize },
    /// A real-valued parameter lies outside its admissible domain.
    Domain { name: &'static str, value: f64 },
    /// An integer parameter lies outside its admissible range.
    Range { name: &'static str, value: usize, max: usize },
    /// An integer parameter that must be at least one is zero.
    Positive { name: &'static str },
    /// A character or byte that should encode a bit does not.
    BadBit { index: usize },
    /// The frozen set is structurally invalid.
    FrozenSet { reason: &'static str },
    /// A raw channel symbol that the given channel can never emit.
    Symbol { reason: &'static str },
    /// An observation with non-finite, negative, or all-zero likelihoods.
    Observation { index: usize },
    /// A decoding prefix at least as long as the block itself.
    Prefix { len: usize, block: usize },
    /// Exhaustive enumeration refused: too many information bits.
    Enumeration { info_bits: usize, max: usize },
    /// A probability mass function violating its structural invariants.
    Pmf { reason: &'static str, index: usize },
    /// The operation needs a fully supported pmf but tail mass remains.
    TailMass { deficit: f64 },
    /// Observations that assign zero likelihood to every compatible message.
    Contradiction,
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BlockLength { expected, got } => {
                write!(f, "length {got} does not match block length {expected}")
            }
            Error::NotPowerOfTwo { len } => write!(f, "length {len} is not a power of two"),
            Error::Domain { name, value } => {
                write!(f, "parameter `{name}` = {value} is outside its domain")
            }
            Error::Range { name, value, max } => {
                write!(f, "parameter `{name}` = {value} is out of range (max {max})")
            }
            Error::Positive { name } => {
                write!(f, "parameter `{name}` must be a positive integer")
            }
            Error::BadBit { index } => write!(f, "entry {index} is not a bit"),
            Error::FrozenSet { reason } => write!(f, "invalid frozen set: {reason}"),
            Error::Symbol { reason } => write!(f, "invalid channel symbol: {reason}"),
            Error::Observation { index } => {
                write!(f, "observation {index} has invalid likelihoods")
            }
            Error::Prefix { len, block } => {
                write!(f, "prefix of length {len} leaves no undecoded bit in block of {block}")
            }
            Error::Enumeration { info_bits, max } => {
                write!(f, "refusing to enumerate 2^{info_bits} messages (max 2^{max})")
            }
            Error::Pmf { reason, index } => write!(f, "invalid pmf at mass {index}: {reason}"),
            Error::Contradiction => {
                write!(f, "the evidence assigns zero likelihood to every compatible message")
            }
            Error::TailMass { deficit } => {
                write!(f, "operation undefined for pmfs with tail mass (deficit {deficit:e})")
            }
        }
    }
}

impl core::error::Error for Error {}
