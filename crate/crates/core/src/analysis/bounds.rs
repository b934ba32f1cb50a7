//! Closed forms tying sampling decoders to optimal list decoding: the gap
//! bound, the exact per-pmf error of tilted sampling agents, the concave
//! envelope behind the Jensen step, and the Taylor truncation bounds.

use alloc::vec::Vec;

use crate::analysis::pmf::{Pmf, MASS_TOLERANCE};
use crate::analysis::{binomial_u128, Neumaier};
use crate::error::{Error, Result};

#[cfg(not(feature = "std"))]
use num_traits::Float;

fn positive_exponent(a: usize, name: &'static str) -> Result<i32> {
    if a == 0 {
        return Err(Error::Positive { name });
    }
    i32::try_from(a).map_err(|_| Error::Range { name, value: a, max: i32::MAX as usize })
}

/// The worst-case excess of `a`-agent sampling error over optimal list-of-ℓ
/// error:
///
/// - `((ell-1)/ell)^a` when `a + 1 <= ell`,
/// - `(ell/(a+1)) (a/(a+1))^a` when `ell <= a + 1`.
///
/// Both branches agree (bit-for-bit) at `ell = a + 1`.
pub fn gap_delta(a: usize, ell: usize) -> Result<f64> {
    let exp = positive_exponent(a, "a")?;
    if ell == 0 {
        return Err(Error::Positive { name: "ell" });
    }
    let af = a as f64;
    let elf = ell as f64;
    if a + 1 <= ell {
        Ok(((elf - 1.0) / elf).powi(exp))
    } else {
        Ok((elf / (af + 1.0)) * (af / (af + 1.0)).powi(exp))
    }
}

/// The concave nondecreasing envelope of `z (1-z)^a` on [0,1]: the function
/// itself up to the knee at `1/(a+1)`, its maximum value beyond.
pub fn g_envelope(z: f64, a: usize) -> Result<f64> {
    let exp = positive_exponent(a, "a")?;
    if !z.is_finite() || !(0.0..=1.0).contains(&z) {
        return Err(Error::Domain { name: "z", value: z });
    }
    let af = a as f64;
    let knee = 1.0 / (af + 1.0);
    if z <= knee {
        Ok(z * (1.0 - z).powi(exp))
    } else {
        Ok(knee * (af / (af + 1.0)).powi(exp))
    }
}

/// Shared kernel of the sampling-error sums: `sum_k f_k (1 - g_k)^a` plus
/// the tail deficit of `f` at full weight (an unlisted message has vanishing
/// mass, so all `a` agents miss it almost surely). The power is evaluated as
/// `exp(a log1p(-g))` to stay accurate for tiny `g` and large `a`.
fn error_sum(f: &Pmf, g_masses: &[f64], a: usize) -> f64 {
    let af = a as f64;
    let mut acc = Neumaier::new();
    for (&fk, &gk) in f.masses().iter().zip(g_masses) {
        acc.add(fk * (af * (-gk).ln_1p()).exp());
    }
    acc.add(f.tail_deficit());
    acc.total().clamp(0.0, 1.0)
}

/// Probability that none of `a` posterior-sampling agents reports the
/// correct message, when the message posterior is `f`:
/// `sum_k f_k (1 - f_k)^a + tail_deficit`.
pub fn scs_error_from_pmf(f: &Pmf, a: usize) -> Result<f64> {
    if a == 0 {
        return Err(Error::Positive { name: "a" });
    }
    Ok(error_sum(f, f.masses(), a))
}

/// The tilted pmf `f_k^beta / Z(beta)`.
///
/// `beta = 1` returns a bit-exact copy, `beta = 0` flattens the support to
/// uniform, `beta = +inf` puts a point mass on the first (largest) entry.
/// Zero masses stay zero for every `beta`. A pmf with meaningful tail
/// deficit is refused: tilting an implicit tail is undefined.
pub fn tilt_pmf(f: &Pmf, beta: f64) -> Result<Pmf> {
    if f.tail_deficit() > MASS_TOLERANCE {
        return Err(Error::TailMass { deficit: f.tail_deficit() });
    }
    if beta.is_nan() || beta < 0.0 {
        return Err(Error::Domain { name: "beta", value: beta });
    }
    let top = f.masses().first().copied().unwrap_or(0.0);
    if top <= 0.0 {
        return Err(Error::Pmf { reason: "all masses are zero", index: 0 });
    }
    if beta == 1.0 {
        return Ok(f.clone());
    }
    if beta.is_infinite() {
        let mut masses = alloc::vec![0.0; f.len()];
        masses[0] = 1.0;
        return Pmf::new(masses);
    }
    let ln_top = top.ln();
    let mut weights: Vec<f64> = Vec::with_capacity(f.len());
    let mut acc = Neumaier::new();
    for &m in f.masses() {
        let w = if m == 0.0 { 0.0 } else { (beta * (m.ln() - ln_top)).exp() };
        acc.add(w);
        weights.push(w);
    }
    let z = acc.total();
    Pmf::new(weights.into_iter().map(|w| w / z).collect())
}

/// Error of `a` agents sampling from the `beta`-tilted posterior while the
/// true message still follows `f`: `sum_k f_k (1 - tilt(f,beta)_k)^a`.
/// With `beta = 1` this reduces, bit for bit, to [`scs_error_from_pmf`].
pub fn scis_error_from_pmf(f: &Pmf, a: usize, beta: f64) -> Result<f64> {
    if a == 0 {
        return Err(Error::Positive { name: "a" });
    }
    let g = tilt_pmf(f, beta)?;
    Ok(error_sum(f, g.masses(), a))
}

/// Error of the optimal list decoder of size `ell`: everything outside the
/// `ell` largest masses, `1 - sum_{k <= ell} f_k`.
pub fn optimal_list_error(f: &Pmf, ell: usize) -> Result<f64> {
    if ell == 0 {
        return Err(Error::Positive { name: "ell" });
    }
    if ell >= f.len() {
        return Ok(f.tail_deficit());
    }
    let mut acc = Neumaier::new();
    for &m in &f.masses()[..ell] {
        acc.add(m);
    }
    Ok(acc.deficit_from_one().clamp(0.0, 1.0))
}

/// Order-`t` Taylor truncation of the sampling error at `z = 0`, applied
/// mass-wise: `sum_k sum_{j<t} (-1)^j C(a,j) f_k^{j+1}`, plus the tail
/// deficit. Odd `t` upper-bounds [`scs_error_from_pmf`], even `t` lower-
/// bounds it, and `t >= a + 1` recovers it exactly (the binomial expansion
/// terminates). Requires `a <= 64` so the coefficients stay exact integers.
pub fn taylor_truncation_error(f: &Pmf, a: usize, t: usize) -> Result<f64> {
    if a == 0 {
        return Err(Error::Positive { name: "a" });
    }
    if a > 64 {
        return Err(Error::Range { name: "a", value: a, max: 64 });
    }
    if t == 0 {
        return Err(Error::Positive { name: "t" });
    }
    let order = t.min(a + 1);
    let coeffs: Vec<f64> = (0..order)
        .map(|j| {
            let c = binomial_u128(a, j) as f64;
            if j % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect();
    let mut acc = Neumaier::new();
    for &m in f.masses() {
        // Horner evaluation of f * sum_j coeffs[j] f^j.
        let mut p = 0.0;
        for &c in coeffs.iter().rev() {
            p = p * m + c;
        }
        acc.add(m * p);
    }
    acc.add(f.tail_deficit());
    Ok(acc.total())
}
