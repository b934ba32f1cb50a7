//! Closed-form error analysis for posterior-sampling decoders.
//!
//! Everything here is deterministic arithmetic on sorted probability mass
//! functions: the list-vs-sampling gap bound, the exact per-pmf error of
//! sampling agents (optionally tilted), the witness pmfs that saturate the
//! gap, Taylor sandwich truncations, closed forms for geometric and zeta
//! shaped pmfs, and the inverse-temperature sweep behind the published
//! error-vs-beta table.

mod bounds;
mod dd;
mod pmf;
mod series;
mod sweep;

pub use bounds::{
    g_envelope, gap_delta, optimal_list_error, scis_error_from_pmf, scs_error_from_pmf,
    taylor_truncation_error, tilt_pmf,
};
pub use pmf::{geometric_pmf, spread_witness_pmf, uniform_witness_pmf, Pmf, MASS_TOLERANCE};
pub use series::{geometric_error_series, riemann_zeta, zeta_error_series};
pub use sweep::{beta_sweep, SweepPoint, BETA_GRID_PUBLISHED};

/// Exact binomial coefficient. Callers keep `a` small enough that the result
/// fits 128 bits (true for every a <= 130).
pub(crate) fn binomial_u128(a: usize, j: usize) -> u128 {
    debug_assert!(j <= a && a <= 130);
    let j = j.min(a - j);
    let mut c: u128 = 1;
    for i in 0..j {
        // c * (a - i) is always divisible by i + 1: the partial products are
        // themselves binomial coefficients.
        c = c * (a - i) as u128 / (i + 1) as u128;
    }
    c
}

/// Neumaier-compensated summation: one rounding error per added term is
/// carried in a correction register, so long sums of small masses keep full
/// precision and deficits far below the epsilon of the running sum survive.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    pub fn new() -> Self {
        Neumaier::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn total(&self) -> f64 {
        self.sum + self.comp
    }

    /// `1 - total()`, evaluated so that deficits far smaller than the
    /// epsilon of the sum itself are not rounded away.
    pub fn deficit_from_one(&self) -> f64 {
        (1.0 - self.sum) - self.comp
    }
}
