//! Double-double arithmetic: an unevaluated sum of two `f64`s giving roughly
//! 106 bits of significand.
//!
//! The alternating binomial sums in this module cancel up to ~10 decimal
//! digits at the largest supported orders, which pushes plain `f64`
//! evaluation outside the accuracy the closed forms are tested to. All
//! operations here are the classical error-free-transformation kernels; the
//! product kernel relies on a fused multiply-add.

#[cfg(not(feature = "std"))]
use num_traits::Float;

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd {
    hi: f64,
    lo: f64,
}

/// Error-free sum: returns (fl(a+b), exact residual).
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

/// Error-free sum assuming |a| >= |b|.
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

/// Error-free product via fused multiply-add.
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact conversion of a 128-bit integer (used for binomial
    /// coefficients, whose magnitude can exceed the 53-bit significand).
    pub fn from_u128(c: u128) -> Dd {
        let hi = c as f64;
        let lo = if hi as u128 >= c { -(((hi as u128) - c) as f64) } else { (c - hi as u128) as f64 };
        let (hi, lo) = quick_two_sum(hi, lo);
        Dd { hi, lo }
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    pub fn add(self, o: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, o.hi);
        let (t1, t2) = two_sum(self.lo, o.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Dd { hi, lo }
    }

    pub fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    pub fn mul(self, o: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, o.hi);
        let p2 = p2 + self.hi * o.lo + self.lo * o.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    pub fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self.sub(o.mul(Dd::from_f64(q1)));
        let q2 = r.hi / o.hi;
        let r = r.sub(o.mul(Dd::from_f64(q2)));
        let q3 = r.hi / o.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd { hi: s, lo: e }.add(Dd::from_f64(q3))
    }

    pub fn powi(self, mut n: u32) -> Dd {
        let mut base = self;
        let mut acc = Dd::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            n >>= 1;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn representation_is_exact_for_integers() {
        let c: u128 = (1 << 90) + 12345; // needs more than 53 bits
        let d = Dd::from_u128(c);
        // Round-trip through the two components recovers the integer.
        let back = (d.hi as i128) + (d.lo as i128);
        assert_eq!(back, c as i128);
    }

    #[test]
    fn arithmetic_keeps_sub_ulp_residuals() {
        // (1 + 2^-80) - 1 vanishes in f64 but not in double-double.
        let tiny = (2.0f64).powi(-80);
        let x = Dd::ONE.add(Dd::from_f64(tiny));
        let diff = x.sub(Dd::ONE);
        assert_eq!(diff.hi, tiny);
        // 10 / 3 * 3 returns to 10 with residual below 1e-31.
        let ten = Dd::from_f64(10.0);
        let r = ten.div(Dd::from_f64(3.0)).mul(Dd::from_f64(3.0)).sub(ten);
        assert!(r.hi.abs() < 1e-30);
    }

    #[test]
    fn powers_match_exact_integers() {
        let d = Dd::from_f64(3.0).powi(33); // 3^33 = 5559060566555523 < 2^53
        assert_eq!(d.hi, 5559060566555523.0);
        assert_eq!(d.lo, 0.0);
    }
}
