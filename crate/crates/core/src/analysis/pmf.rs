//! Sorted probability mass functions and the named families used by the
//! closed-form analysis.

use alloc::vec::Vec;

use crate::analysis::Neumaier;
use crate::error::{Error, Result};

#[cfg(not(feature = "std"))]
use num_traits::Float;

/// Tolerance for "sums to one": listed masses may exceed 1 by at most this,
/// and an explicit tail deficit must agree with `1 - sum` to within it.
pub const MASS_TOLERANCE: f64 = 1e-12;

/// A probability mass function over an abstract message index, relabeled so
/// the masses are non-increasing. `tail_deficit` is whatever probability the
/// listed masses leave uncovered — the mass of an implicit tail of unlisted,
/// individually vanishing messages.
#[derive(Debug, Clone, PartialEq)]
pub struct Pmf {
    masses: Vec<f64>,
    tail_deficit: f64,
}

fn validate_masses(masses: &[f64]) -> Result<Neumaier> {
    let mut acc = Neumaier::new();
    for (index, &m) in masses.iter().enumerate() {
        if !m.is_finite() || m < 0.0 {
            return Err(Error::Pmf { reason: "mass must be a finite non-negative real", index });
        }
        if index > 0 && m > masses[index - 1] {
            return Err(Error::Pmf { reason: "masses must be non-increasing", index });
        }
        acc.add(m);
    }
    if acc.total() > 1.0 + MASS_TOLERANCE {
        return Err(Error::Pmf { reason: "masses sum beyond one", index: masses.len() });
    }
    Ok(acc)
}

impl Pmf {
    /// Builds a pmf from masses already sorted non-increasing; whatever the
    /// masses leave short of 1 becomes the tail deficit.
    pub fn new(masses: Vec<f64>) -> Result<Self> {
        let acc = validate_masses(&masses)?;
        let tail_deficit = acc.deficit_from_one().max(0.0);
        Ok(Pmf { masses, tail_deficit })
    }

    /// Like [`Pmf::new`] but with the tail deficit stated explicitly; it must
    /// agree with `1 - sum(masses)` to within [`MASS_TOLERANCE`].
    pub fn with_tail(masses: Vec<f64>, tail_deficit: f64) -> Result<Self> {
        if !tail_deficit.is_finite() || tail_deficit < 0.0 {
            return Err(Error::TailMass { deficit: tail_deficit });
        }
        let acc = validate_masses(&masses)?;
        if (acc.deficit_from_one() - tail_deficit).abs() > MASS_TOLERANCE {
            return Err(Error::TailMass { deficit: tail_deficit });
        }
        Ok(Pmf { masses, tail_deficit })
    }

    /// Sorts the masses non-increasing, then builds the pmf.
    pub fn from_unsorted(mut masses: Vec<f64>) -> Result<Self> {
        for (index, m) in masses.iter().enumerate() {
            if !m.is_finite() {
                return Err(Error::Pmf { reason: "mass must be a finite non-negative real", index });
            }
        }
        masses.sort_unstable_by(|a, b| b.total_cmp(a));
        Pmf::new(masses)
    }

    pub fn masses(&self) -> &[f64] {
        &self.masses
    }

    pub fn tail_deficit(&self) -> f64 {
        self.tail_deficit
    }

    pub fn len(&self) -> usize {
        self.masses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masses.is_empty()
    }

    /// The same masses scaled to sum to 1 exactly (up to rounding), with no
    /// tail deficit. Fails if every mass is zero.
    pub fn renormalized(&self) -> Result<Pmf> {
        let mut acc = Neumaier::new();
        for &m in &self.masses {
            acc.add(m);
        }
        let total = acc.total();
        if !(total > 0.0) {
            return Err(Error::Pmf { reason: "all masses are zero", index: 0 });
        }
        Pmf::new(self.masses.iter().map(|m| m / total).collect())
    }
}

/// The flat witness: `ell` messages of mass 1/ell each. A list of size `ell`
/// captures it perfectly, while sampling agents miss each message with the
/// largest probability a flat pmf allows — this family saturates the gap
/// bound whenever `a + 1 <= ell`.
pub fn uniform_witness_pmf(ell: usize) -> Result<Pmf> {
    if ell == 0 {
        return Err(Error::Positive { name: "ell" });
    }
    let mass = 1.0 / ell as f64;
    Pmf::new(alloc::vec![mass; ell])
}

/// The spread witness: `ell` head messages of mass 1/(a+1) followed by a
/// long shelf of masses 1/M, the last one trimmed so the total is exactly 1.
/// As M grows this drives the gap between sampling error and optimal list
/// error toward its supremum.
///
/// Requires `ell <= a`, `M >= a + 1`, and `M * (a + 1 - ell) >= a + 1`
/// (the shelf must hold at least one mass no larger than the head).
pub fn spread_witness_pmf(a: usize, ell: usize, m: usize) -> Result<Pmf> {
    if a == 0 {
        return Err(Error::Positive { name: "a" });
    }
    if ell == 0 {
        return Err(Error::Positive { name: "ell" });
    }
    if ell > a + 1 {
        return Err(Error::Range { name: "ell", value: ell, max: a + 1 });
    }
    if m < a + 1 {
        return Err(Error::Domain { name: "M", value: m as f64 });
    }
    let residual_num = (m as u128) * ((a + 1 - ell) as u128);
    if residual_num < (a + 1) as u128 {
        return Err(Error::Domain { name: "M", value: m as f64 });
    }
    // Number of shelf masses: ceil(M (a + 1 - ell) / (a + 1)), in exact
    // integer arithmetic. Rounding the count down instead can force the
    // trimmed final mass above 1/M, which would break the sorted invariant.
    let count = residual_num.div_ceil((a + 1) as u128) as usize;

    let head = 1.0 / (a as f64 + 1.0);
    let shelf = 1.0 / m as f64;
    let mut masses = Vec::with_capacity(ell + count);
    let mut acc = Neumaier::new();
    for _ in 0..ell {
        masses.push(head);
        acc.add(head);
    }
    for _ in 0..count.saturating_sub(1) {
        masses.push(shelf);
        acc.add(shelf);
    }
    masses.push(acc.deficit_from_one().clamp(0.0, shelf));
    Pmf::new(masses)
}

/// The first `K` masses of the geometric pmf `(1-q) q^{k-1}`; the remaining
/// probability `q^K` becomes the tail deficit.
pub fn geometric_pmf(q: f64, big_k: usize) -> Result<Pmf> {
    if !q.is_finite() || !(0.0..1.0).contains(&q) {
        return Err(Error::Domain { name: "q", value: q });
    }
    if big_k == 0 {
        return Err(Error::Positive { name: "K" });
    }
    let mut masses = Vec::with_capacity(big_k);
    let mut mass = 1.0 - q;
    for _ in 0..big_k {
        masses.push(mass);
        mass *= q;
    }
    let tail = q.powi(big_k.min(i32::MAX as usize) as i32);
    Pmf::with_tail(masses, tail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn construction_and_validation() {
        let p = Pmf::new(vec![0.5, 0.3, 0.2]).unwrap();
        assert_eq!(p.tail_deficit(), 0.0);
        let p = Pmf::new(vec![0.5, 0.25]).unwrap();
        assert!((p.tail_deficit() - 0.25).abs() < 1e-15);
        assert!(matches!(
            Pmf::new(vec![0.3, 0.5]),
            Err(Error::Pmf { reason: "masses must be non-increasing", index: 1 })
        ));
        assert!(Pmf::new(vec![0.8, 0.8]).is_err());
        assert!(Pmf::new(vec![-0.1]).is_err());
        assert!(Pmf::new(vec![f64::NAN]).is_err());
        let p = Pmf::from_unsorted(vec![0.2, 0.5, 0.3]).unwrap();
        assert_eq!(p.masses(), &[0.5, 0.3, 0.2]);
        assert!(Pmf::with_tail(vec![0.5], 0.4).is_err());
        assert!(Pmf::with_tail(vec![0.5], 0.5).is_ok());
    }

    #[test]
    fn renormalization() {
        let p = Pmf::new(vec![0.5, 0.25]).unwrap();
        let r = p.renormalized().unwrap();
        assert!((r.masses()[0] - 2.0 / 3.0).abs() < 1e-15);
        assert!(r.tail_deficit() <= MASS_TOLERANCE);
        assert!(Pmf::new(vec![0.0, 0.0]).unwrap().renormalized().is_err());
    }

    #[test]
    fn uniform_witness() {
        let p = uniform_witness_pmf(4).unwrap();
        assert_eq!(p.masses(), &[0.25, 0.25, 0.25, 0.25]);
        assert_eq!(p.tail_deficit(), 0.0);
        assert!(uniform_witness_pmf(0).is_err());
    }

    #[test]
    fn spread_witness_matches_hand_example() {
        // a=3, ell=2, M=8: (1/4, 1/4) then 4 masses of 1/8, total exactly 1.
        let p = spread_witness_pmf(3, 2, 8).unwrap();
        assert_eq!(p.masses(), &[0.25, 0.25, 0.125, 0.125, 0.125, 0.125]);
        assert_eq!(p.tail_deficit(), 0.0);
    }

    #[test]
    fn spread_witness_rounding_repair_keeps_order() {
        // M(a+1-ell)/(a+1) = 100/3: the ceiling count keeps the trimmed mass
        // at or below the shelf value.
        let p = spread_witness_pmf(2, 2, 100).unwrap();
        let m = p.masses();
        assert_eq!(m.len(), 2 + 34);
        for w in m.windows(2) {
            assert!(w[1] <= w[0]);
        }
        assert!(p.tail_deficit() <= MASS_TOLERANCE);
        let last = *m.last().unwrap();
        assert!(last <= 0.01 && last > 0.0);
    }

    #[test]
    fn spread_witness_rejects_bad_parameters() {
        assert!(spread_witness_pmf(0, 1, 10).is_err());
        assert!(spread_witness_pmf(3, 0, 10).is_err());
        assert!(spread_witness_pmf(3, 5, 100).is_err()); // ell > a+1
        assert!(spread_witness_pmf(3, 2, 3).is_err()); // M < a+1
        assert!(spread_witness_pmf(3, 4, 100).is_err()); // empty shelf
    }

    #[test]
    fn geometric_family() {
        let p = geometric_pmf(0.5, 2).unwrap();
        assert_eq!(p.masses(), &[0.5, 0.25]);
        assert_eq!(p.tail_deficit(), 0.25);
        let p = geometric_pmf(0.5, 1).unwrap();
        assert_eq!(p.masses(), &[0.5]);
        assert_eq!(p.tail_deficit(), 0.5);
        let p = geometric_pmf(0.9, 1000).unwrap();
        assert!(p.tail_deficit() < 1e-45);
        assert!(p.tail_deficit() > 0.0);
        assert!(geometric_pmf(1.0, 5).is_err());
        assert!(geometric_pmf(-0.1, 5).is_err());
        assert!(geometric_pmf(0.5, 0).is_err());
    }
}
