//! Closed-form error series for geometric and zeta shaped posteriors.

use crate::analysis::dd::Dd;
use crate::analysis::{binomial_u128, Neumaier};
use crate::error::{Error, Result};

#[cfg(not(feature = "std"))]
use num_traits::Float;

/// The Riemann zeta function for real `s > 1`, to absolute accuracy well
/// below 1e-12: 100 direct terms plus an Euler–Maclaurin tail through the
/// third Bernoulli correction.
pub fn riemann_zeta(s: f64) -> Result<f64> {
    if !s.is_finite() || s <= 1.0 {
        return Err(Error::Domain { name: "s", value: s });
    }
    const CUT: usize = 100;
    let mut acc = Neumaier::new();
    for k in 1..=CUT {
        acc.add((k as f64).powf(-s));
    }
    let kf = CUT as f64;
    acc.add(kf.powf(1.0 - s) / (s - 1.0));
    acc.add(-0.5 * kf.powf(-s));
    acc.add(s * kf.powf(-s - 1.0) / 12.0);
    acc.add(-s * (s + 1.0) * (s + 2.0) * kf.powf(-s - 3.0) / 720.0);
    acc.add(s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * kf.powf(-s - 5.0) / 30240.0);
    Ok(acc.total())
}

/// Exact `a`-agent sampling error for the full (untruncated) geometric pmf
/// `f_k = (1-q) q^{k-1}`, as the finite alternating sum
/// `sum_{t=0}^{a} (-1)^t C(a,t) (1-q)^{t+1} / (1 - q^{t+1})`.
///
/// For `a <= 64` the sum is evaluated in double-double arithmetic: the
/// alternating terms cancel to the point where plain f64 loses ~7 digits by
/// `a = 64`. Beyond 64 the binomial route is abandoned for direct adaptive
/// summation of `sum_k f_k (1-f_k)^a`, stopped once the bracket around the
/// remaining tail is below 1e-15.
pub fn geometric_error_series(q: f64, a: usize) -> Result<f64> {
    if !q.is_finite() || !(0.0..1.0).contains(&q) {
        return Err(Error::Domain { name: "q", value: q });
    }
    if a == 0 {
        return Err(Error::Positive { name: "a" });
    }
    if a <= 64 {
        let qd = Dd::from_f64(q);
        let pd = Dd::ONE.sub(qd);
        let mut acc = Dd::ZERO;
        for t in 0..=a {
            let c = Dd::from_u128(binomial_u128(a, t));
            let num = pd.powi(t as u32 + 1);
            let den = Dd::ONE.sub(qd.powi(t as u32 + 1));
            let term = c.mul(num).div(den);
            acc = if t % 2 == 0 { acc.add(term) } else { acc.sub(term) };
        }
        return Ok(acc.hi().clamp(0.0, 1.0));
    }

    let af = a as f64;
    let mut acc = Neumaier::new();
    let mut mass = 1.0 - q; // f_k
    let mut tail = 1.0; // sum of masses beyond k - 1
    for _ in 0..50_000_000usize {
        acc.add(mass * (af * (-mass).ln_1p()).exp());
        tail *= q;
        mass *= q;
        // The rest of the series lies between tail * (1 - mass)^a and tail.
        let lower = tail * (af * (-mass).ln_1p()).exp();
        if tail - lower <= 1e-15 || tail <= 1e-18 {
            acc.add(0.5 * (tail + lower));
            break;
        }
    }
    Ok(acc.total().clamp(0.0, 1.0))
}

/// Exact `a`-agent sampling error for the zeta-shaped pmf
/// `f_k = 1 / (zeta(s) k^s)`:
/// `sum_{t=0}^{a} (-1)^t C(a,t) zeta((t+1)s) / zeta(s)^{t+1}`.
///
/// Capped at `a <= 100`: beyond that the alternating binomial terms amplify
/// the (1e-12-accurate) zeta evaluations past useful precision.
pub fn zeta_error_series(s: f64, a: usize) -> Result<f64> {
    if !s.is_finite() || s <= 1.0 {
        return Err(Error::Domain { name: "s", value: s });
    }
    if a == 0 {
        return Err(Error::Positive { name: "a" });
    }
    if a > 100 {
        return Err(Error::Range { name: "a", value: a, max: 100 });
    }
    let zs = riemann_zeta(s)?;
    let mut acc = Neumaier::new();
    let mut zs_pow = 1.0;
    for t in 0..=a {
        zs_pow *= zs;
        let term = binomial_u128(a, t) as f64 * riemann_zeta((t as f64 + 1.0) * s)? / zs_pow;
        acc.add(if t % 2 == 0 { term } else { -term });
    }
    Ok(acc.total().clamp(0.0, 1.0))
}
