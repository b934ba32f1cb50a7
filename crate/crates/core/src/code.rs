//! Polar transform, code construction, and encoding.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::BitVector;
use crate::error::{Error, Result};

/// Largest supported number of polarization levels (block length 2^24).
pub const MAX_LEVELS: u32 = 24;

/// Applies the Kronecker power of the [[1,0],[1,1]] kernel in natural order:
/// for every stage h = 1, 2, 4, ... the butterfly is x[i] ^= x[i+h].
/// The transform is an involution, so this both encodes and inverts.
pub fn polar_transform(u: &BitVector) -> Result<BitVector> {
    let n = u.len();
    if !n.is_power_of_two() {
        return Err(Error::NotPowerOfTwo { len: n });
    }
    let mut x = u.as_slice().to_vec();
    let mut half = 1;
    while half < n {
        let step = half * 2;
        for block in (0..n).step_by(step) {
            for i in block..block + half {
                x[i] ^= x[i + half];
            }
        }
        half = step;
    }
    Ok(BitVector::from_raw(x))
}

/// Per-position Bhattacharyya parameters after `levels` polarization steps,
/// starting from `z0` and applying the erasure recursion
/// z- = 2z - z^2, z+ = z^2 exactly. For a BEC these are the exact
/// erasure probabilities of the synthetic bit channels; for other channels
/// they are the usual construction heuristic.
#[derive(Debug, Clone, PartialEq)]
pub struct BhattacharyyaProfile {
    z: Vec<f64>,
}

impl BhattacharyyaProfile {
    pub fn values(&self) -> &[f64] {
        &self.z
    }

    pub fn block_len(&self) -> usize {
        self.z.len()
    }
}

pub fn bhattacharyya_profile(levels: u32, z0: f64) -> Result<BhattacharyyaProfile> {
    if levels > MAX_LEVELS {
        return Err(Error::Range { name: "levels", value: levels as usize, max: MAX_LEVELS as usize });
    }
    if !(z0 > 0.0 && z0 < 1.0) {
        return Err(Error::Domain { name: "z0", value: z0 });
    }
    let mut z = vec![z0];
    for _ in 0..levels {
        let mut next = Vec::with_capacity(z.len() * 2);
        for &v in &z {
            // Clamp against float spill; both maps keep [0,1] invariant in exact arithmetic.
            next.push((v * (2.0 - v)).clamp(0.0, 1.0));
            next.push(v * v);
        }
        z = next;
    }
    Ok(BhattacharyyaProfile { z })
}

/// A polar code: block length 2^levels, a frozen set with pinned values, and
/// the complementary information set. Positions are 0-based and sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSpec {
    levels: u32,
    frozen: Vec<usize>,
    frozen_values: Vec<u8>,
    info: Vec<usize>,
    // Per-position lookup: Some(value) at frozen positions, None at info positions.
    lookup: Vec<Option<u8>>,
}

impl CodeSpec {
    pub fn new(levels: u32, frozen: Vec<usize>, frozen_values: Vec<u8>) -> Result<Self> {
        if levels > MAX_LEVELS {
            return Err(Error::Range { name: "levels", value: levels as usize, max: MAX_LEVELS as usize });
        }
        let n = 1usize << levels;
        if frozen.len() != frozen_values.len() {
            return Err(Error::FrozenSet { reason: "one value required per frozen position" });
        }
        if let Some(index) = frozen_values.iter().position(|&v| v > 1) {
            return Err(Error::BadBit { index });
        }
        let mut lookup: Vec<Option<u8>> = vec![None; n];
        for (&pos, &val) in frozen.iter().zip(&frozen_values) {
            if pos >= n {
                return Err(Error::Range { name: "frozen position", value: pos, max: n - 1 });
            }
            if lookup[pos].is_some() {
                return Err(Error::FrozenSet { reason: "duplicate frozen position" });
            }
            lookup[pos] = Some(val);
        }
        if !frozen.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::FrozenSet { reason: "frozen positions must be strictly increasing" });
        }
        let info = (0..n).filter(|&i| lookup[i].is_none()).collect();
        Ok(CodeSpec { levels, frozen, frozen_values, info, lookup })
    }

    pub fn levels(&self) -> u32 {
        self.levels
    }

    pub fn block_len(&self) -> usize {
        1 << self.levels
    }

    /// Number of information bits (the code dimension k).
    pub fn dimension(&self) -> usize {
        self.info.len()
    }

    pub fn frozen_positions(&self) -> &[usize] {
        &self.frozen
    }

    pub fn frozen_values(&self) -> &[u8] {
        &self.frozen_values
    }

    pub fn info_positions(&self) -> &[usize] {
        &self.info
    }

    /// The pinned value at a frozen position, or None at an info position.
    pub fn frozen_value_at(&self, pos: usize) -> Option<u8> {
        self.lookup[pos]
    }

    /// Lays out a message vector u: frozen values at frozen positions and the
    /// given information bits, in order, at info positions.
    pub fn assemble(&self, info_bits: &BitVector) -> Result<BitVector> {
        if info_bits.len() != self.info.len() {
            return Err(Error::BlockLength { expected: self.info.len(), got: info_bits.len() });
        }
        let mut u = vec![0u8; self.block_len()];
        for (&pos, &val) in self.frozen.iter().zip(&self.frozen_values) {
            u[pos] = val;
        }
        for (&pos, &bit) in self.info.iter().zip(info_bits.iter()) {
            u[pos] = bit;
        }
        Ok(BitVector::from_raw(u))
    }

    /// True message compatibility: every frozen position carries its value.
    pub fn is_compatible(&self, u: &BitVector) -> bool {
        u.len() == self.block_len()
            && self.frozen.iter().zip(&self.frozen_values).all(|(&p, &v)| u.get(p) == v)
    }
}

/// Builds the code with the k most reliable synthetic channels as the
/// information set: the k smallest Bhattacharyya values, ties going to the
/// smaller index. Frozen values are all zero.
pub fn construct_code(levels: u32, z0: f64, k: usize) -> Result<CodeSpec> {
    let profile = bhattacharyya_profile(levels, z0)?;
    let n = profile.block_len();
    if k > n {
        return Err(Error::Range { name: "k", value: k, max: n });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        profile.z[a].total_cmp(&profile.z[b]).then_with(|| a.cmp(&b))
    });
    let mut frozen: Vec<usize> = order[k..].to_vec();
    frozen.sort_unstable();
    let values = vec![0u8; frozen.len()];
    CodeSpec::new(levels, frozen, values)
}

/// Assembles the message vector and applies the polar transform.
pub fn encode(spec: &CodeSpec, info_bits: &BitVector) -> Result<BitVector> {
    polar_transform(&spec.assemble(info_bits)?)
}
