//! Dense bit vectors over GF(2), one byte per bit.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A fixed-length vector of bits. Every stored byte is 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BitVector(Vec<u8>);

impl BitVector {
    /// The all-zero vector of the given length.
    pub fn zeros(len: usize) -> Self {
        BitVector(vec![0; len])
    }

    /// Builds from explicit bit values, rejecting anything but 0 and 1.
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        if let Some(index) = bits.iter().position(|&b| b > 1) {
            return Err(Error::BadBit { index });
        }
        Ok(BitVector(bits.to_vec()))
    }

    /// Internal constructor for values already known to be bits.
    pub(crate) fn from_raw(bits: Vec<u8>) -> Self {
        debug_assert!(bits.iter().all(|&b| b <= 1));
        BitVector(bits)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> u8 {
        self.0[i]
    }

    pub fn set(&mut self, i: usize, bit: u8) {
        debug_assert!(bit <= 1);
        self.0[i] = bit;
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    pub fn iter(&self) -> core::slice::Iter<'_, u8> {
        self.0.iter()
    }

    /// Elementwise XOR; the lengths must agree.
    pub fn xor(&self, other: &BitVector) -> Result<BitVector> {
        if self.len() != other.len() {
            return Err(Error::BlockLength { expected: self.len(), got: other.len() });
        }
        Ok(BitVector(self.0.iter().zip(&other.0).map(|(a, b)| a ^ b).collect()))
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&b| b == 1).count()
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            write!(f, "{}", b)?;
        }
        Ok(())
    }
}

impl FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.bytes()
            .enumerate()
            .map(|(index, c)| match c {
                b'0' => Ok(0),
                b'1' => Ok(1),
                _ => Err(Error::BadBit { index }),
            })
            .collect::<Result<Vec<u8>>>()
            .map(BitVector)
    }
}
