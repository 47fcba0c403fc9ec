//! Double-double arithmetic for node refinement.
//!
//! Only what the Newton polish of quadrature nodes needs: the four basic
//! operations and a binary-exponent scaled form for long products.

use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    /// Multiplication by `2^k`, exact barring over/underflow.
    pub fn scale_pow2(self, k: i32) -> Dd {
        let f = pow2(k);
        Dd {
            hi: self.hi * f,
            lo: self.lo * f,
        }
    }
}

impl From<f64> for Dd {
    fn from(hi: f64) -> Dd {
        Dd { hi, lo: 0.0 }
    }
}

impl Add for Dd {
    type Output = Dd;

    fn add(self, rhs: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, rhs.hi);
        let (t, f) = two_sum(self.lo, rhs.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;

    fn sub(self, rhs: Dd) -> Dd {
        self + (-rhs)
    }
}

impl Neg for Dd {
    type Output = Dd;

    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Mul for Dd {
    type Output = Dd;

    fn mul(self, rhs: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let e = e + (self.hi * rhs.lo + self.lo * rhs.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;

    fn div(self, rhs: Dd) -> Dd {
        let q1 = self.hi / rhs.hi;
        let r = self - rhs * Dd::from(q1);
        let q2 = r.hi / rhs.hi;
        let r = r - rhs * Dd::from(q2);
        let q3 = r.hi / rhs.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + Dd::from(q3)
    }
}

/// `2^k` for any `k`, saturating to 0 or infinity.
pub(crate) fn pow2(k: i32) -> f64 {
    if k > 1023 {
        f64::INFINITY
    } else if k >= -1022 {
        f64::from_bits(((k + 1023) as u64) << 52)
    } else if k >= -1074 {
        f64::from_bits(1u64 << (k + 1074))
    } else {
        0.0
    }
}

/// `x * 2^k` without intermediate overflow.
pub(crate) fn ldexp(mut x: f64, mut k: i64) -> f64 {
    while k > 1000 {
        x *= pow2(1000);
        k -= 1000;
        if x.is_infinite() {
            return x;
        }
    }
    while k < -1000 {
        x *= pow2(-1000);
        k += 1000;
        if x == 0.0 {
            return x;
        }
    }
    x * pow2(k as i32)
}

/// Binary exponent `e` such that `2^e <= |x| < 2^(e+1)`, for finite nonzero `x`.
pub(crate) fn exponent(x: f64) -> i32 {
    let bits = (x.to_bits() >> 52) & 0x7ff;
    if bits == 0 {
        // subnormal
        exponent(x * pow2(64)) - 64
    } else {
        bits as i32 - 1023
    }
}

/// A double-double mantissa with a separate binary exponent: `m * 2^e`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Scaled {
    pub m: Dd,
    pub e: i64,
}

impl Scaled {
    pub fn new(m: Dd) -> Scaled {
        Scaled { m, e: 0 }.normalized()
    }

    pub fn normalized(self) -> Scaled {
        if self.m.hi == 0.0 || !self.m.hi.is_finite() {
            return self;
        }
        let k = exponent(self.m.hi);
        Scaled {
            m: self.m.scale_pow2(-k),
            e: self.e + k as i64,
        }
    }

    pub fn mul(self, rhs: Scaled) -> Scaled {
        Scaled {
            m: self.m * rhs.m,
            e: self.e + rhs.e,
        }
        .normalized()
    }

    pub fn div(self, rhs: Scaled) -> Scaled {
        Scaled {
            m: self.m / rhs.m,
            e: self.e - rhs.e,
        }
        .normalized()
    }

    pub fn to_f64(self) -> f64 {
        ldexp(self.m.to_f64(), self.e)
    }
}
