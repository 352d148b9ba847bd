//! Double-double arithmetic: an unevaluated sum `hi + lo` of two binary64
//! values with `|lo| <= ulp(hi) / 2`, giving roughly 106 significand bits.
//!
//! The elementary functions follow the usual reduce / series / reconstruct
//! pattern. Arguments to `sin_cos` are reduced with a double-double `pi/2`, so
//! accuracy degrades by about `log2(|x|)` bits for very large arguments.

use std::cmp::Ordering;
use std::fmt;
use std::num::FpCategory;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Rem, RemAssign, Sub, SubAssign};

use num_traits::{Num, One, Zero};

#[derive(Clone, Copy, Default)]
pub struct DoubleDouble {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

const HALF_PI: DoubleDouble = DoubleDouble {
    hi: 1.5707963267948966,
    lo: 6.123233995736766e-17,
};
const LN_2: DoubleDouble = DoubleDouble {
    hi: 0.6931471805599453,
    lo: 2.3190468138462996e-17,
};

impl DoubleDouble {
    pub const EPSILON: f64 = 4.93038065763132e-32;

    /// Builds a value from an already-normalized pair.
    pub const fn from_parts(hi: f64, lo: f64) -> Self {
        Self { hi, lo }
    }

    pub fn new(hi: f64, lo: f64) -> Self {
        let (hi, lo) = two_sum(hi, lo);
        Self { hi, lo }
    }

    pub const fn from_f64(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn is_finite(self) -> bool {
        self.hi.is_finite()
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    /// Exact multiplication by a power of two.
    pub fn ldexp(self, e: i32) -> Self {
        let scale = 2f64.powi(e);
        Self {
            hi: self.hi * scale,
            lo: self.lo * scale,
        }
    }

    pub fn floor(self) -> Self {
        let hi = self.hi.floor();
        if hi == self.hi {
            let lo = self.lo.floor();
            let (hi, lo) = quick_two_sum(hi, lo);
            Self { hi, lo }
        } else {
            Self { hi, lo: 0.0 }
        }
    }

    pub fn round(self) -> Self {
        (self + Self::from_f64(0.5)).floor()
    }

    pub fn sqr(self) -> Self {
        let (p, e) = two_prod(self.hi, self.hi);
        let e = e + 2.0 * self.hi * self.lo + self.lo * self.lo;
        let (hi, lo) = quick_two_sum(p, e);
        Self { hi, lo }
    }

    pub fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        let e = e + self.lo * b;
        let (hi, lo) = quick_two_sum(p, e);
        Self { hi, lo }
    }

    pub fn powi(self, mut n: i32) -> Self {
        if n == 0 {
            return Self::one();
        }
        let invert = n < 0;
        n = n.abs();
        let mut base = self;
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc *= base;
            }
            base = base.sqr();
            n >>= 1;
        }
        if invert {
            Self::one() / acc
        } else {
            acc
        }
    }

    pub fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return if self.hi == 0.0 { Self::zero() } else { Self::from_f64(f64::NAN) };
        }
        let y = self.hi.sqrt();
        let y2 = Self::from_f64(y).sqr();
        let corr = (self - y2).hi / (2.0 * y);
        Self::new(y, corr)
    }

    pub fn exp(self) -> Self {
        if self.hi > 709.7 {
            return Self::from_f64(f64::INFINITY);
        }
        if self.hi < -745.0 {
            return Self::zero();
        }
        if self.hi == 0.0 && self.lo == 0.0 {
            return Self::one();
        }
        let k = (self.hi / LN_2.hi).round();
        let r = (self - LN_2.mul_f64(k)).ldexp(-10);
        // expm1(r) by Taylor series, |r| < 3.4e-4
        let mut term = r;
        let mut sum = r;
        let mut i = 2.0;
        while term.hi.abs() > 1e-36 {
            term = term * r / Self::from_f64(i);
            sum += term;
            i += 1.0;
        }
        // (1 + e)^2 - 1 = e (2 + e), repeated ten times
        for _ in 0..10 {
            sum = sum * (sum + Self::from_f64(2.0));
        }
        (sum + Self::one()).ldexp(k as i32)
    }

    pub fn ln(self) -> Self {
        if self.hi <= 0.0 {
            return Self::from_f64(if self.hi == 0.0 { f64::NEG_INFINITY } else { f64::NAN });
        }
        if self.hi.is_infinite() {
            return self;
        }
        // one Newton step doubles the ~53 correct bits of the f64 start
        let y = Self::from_f64(self.hi.ln());
        y + self * (-y).exp() - Self::one()
    }

    /// The angle reduced into `[-pi, pi]` and rounded to `f64`.
    pub fn reduce_angle(self) -> f64 {
        let two_pi = HALF_PI.ldexp(2);
        let k = (self / two_pi).round();
        (self - two_pi * k).to_f64()
    }

    fn sin_cos_taylor(r: Self) -> (Self, Self) {
        let r2 = r.sqr();
        let mut term = r;
        let mut s = r;
        let mut k = 1.0;
        while term.hi.abs() > 1e-36 {
            term = -(term * r2) / Self::from_f64((k + 1.0) * (k + 2.0));
            s += term;
            k += 2.0;
        }
        let mut term = Self::one();
        let mut c = Self::one();
        let mut k = 0.0;
        while term.hi.abs() > 1e-36 {
            term = -(term * r2) / Self::from_f64((k + 1.0) * (k + 2.0));
            c += term;
            k += 2.0;
        }
        (s, c)
    }

    pub fn sin_cos(self) -> (Self, Self) {
        if !self.hi.is_finite() {
            return (Self::from_f64(f64::NAN), Self::from_f64(f64::NAN));
        }
        let k = (self / HALF_PI).round();
        let r = self - HALF_PI * k;
        let (s, c) = Self::sin_cos_taylor(r);
        let quadrant = (k.hi + k.lo).rem_euclid(4.0) as i64;
        match quadrant {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    pub fn atan2(self, x: Self) -> Self {
        let y = self;
        if x.hi == 0.0 && y.hi == 0.0 {
            return Self::zero();
        }
        let t = Self::from_f64(y.hi.atan2(x.hi));
        let (s, c) = t.sin_cos();
        t + (y * c - x * s) / (x * c + y * s)
    }
}

impl PartialEq for DoubleDouble {
    fn eq(&self, other: &Self) -> bool {
        self.hi == other.hi && self.lo == other.lo
    }
}

impl PartialOrd for DoubleDouble {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}

impl Neg for DoubleDouble {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for DoubleDouble {
    type Output = Self;
    fn add(self, b: Self) -> Self {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let s2 = s2 + t1;
        let (s1, s2) = quick_two_sum(s1, s2);
        let s2 = s2 + t2;
        let (hi, lo) = quick_two_sum(s1, s2);
        Self { hi, lo }
    }
}

impl Sub for DoubleDouble {
    type Output = Self;
    fn sub(self, b: Self) -> Self {
        self + (-b)
    }
}

impl Mul for DoubleDouble {
    type Output = Self;
    fn mul(self, b: Self) -> Self {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Self { hi, lo }
    }
}

impl Div for DoubleDouble {
    type Output = Self;
    fn div(self, b: Self) -> Self {
        let q1 = self.hi / b.hi;
        if !q1.is_finite() {
            return Self::from_f64(q1);
        }
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Self { hi, lo } + Self::from_f64(q3)
    }
}

impl Rem for DoubleDouble {
    type Output = Self;
    fn rem(self, b: Self) -> Self {
        let q = self / b;
        let q = if q.hi < 0.0 { -(-q).floor() } else { q.floor() };
        self - b * q
    }
}

macro_rules! assign_ops {
    ($($tr:ident $m:ident $op:tt),*) => {
        $(impl $tr for DoubleDouble {
            fn $m(&mut self, rhs: Self) {
                *self = *self $op rhs;
            }
        })*
    };
}

assign_ops!(AddAssign add_assign +, SubAssign sub_assign -, MulAssign mul_assign *, DivAssign div_assign /, RemAssign rem_assign %);

impl Zero for DoubleDouble {
    fn zero() -> Self {
        Self::from_f64(0.0)
    }
    fn is_zero(&self) -> bool {
        self.hi == 0.0
    }
}

impl One for DoubleDouble {
    fn one() -> Self {
        Self::from_f64(1.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDoubleDoubleError;

impl fmt::Display for ParseDoubleDoubleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("invalid double-double literal")
    }
}

impl std::error::Error for ParseDoubleDoubleError {}

impl std::str::FromStr for DoubleDouble {
    type Err = ParseDoubleDoubleError;

    /// Parses a decimal literal `[-]digits[.digits][e[-]digits]` to full
    /// double-double precision.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let (mantissa, exponent) = match body.find(['e', 'E']) {
            Some(i) => (
                &body[..i],
                body[i + 1..].parse::<i32>().map_err(|_| ParseDoubleDoubleError)?,
            ),
            None => (body, 0),
        };
        let mut value = Self::zero();
        let mut scale = exponent;
        let mut seen_digit = false;
        let mut after_point = false;
        for ch in mantissa.chars() {
            match ch {
                '0'..='9' => {
                    seen_digit = true;
                    value = value.mul_f64(10.0) + Self::from_f64(f64::from(ch as u8 - b'0'));
                    if after_point {
                        scale -= 1;
                    }
                }
                '.' if !after_point => after_point = true,
                _ => return Err(ParseDoubleDoubleError),
            }
        }
        if !seen_digit {
            return Err(ParseDoubleDoubleError);
        }
        let ten = Self::from_f64(10.0);
        let value = value * ten.powi(scale);
        Ok(if neg { -value } else { value })
    }
}

impl Num for DoubleDouble {
    type FromStrRadixErr = ParseDoubleDoubleError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        if radix != 10 {
            return Err(ParseDoubleDoubleError);
        }
        s.parse()
    }
}

impl fmt::Debug for DoubleDouble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DoubleDouble({:e} + {:e})", self.hi, self.lo)
    }
}

impl fmt::Display for DoubleDouble {
    /// Scientific notation with 32 significant digits (or the requested
    /// precision).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.hi.classify() {
            FpCategory::Nan | FpCategory::Infinite => return write!(f, "{}", self.hi),
            FpCategory::Zero => return f.write_str("0"),
            _ => {}
        }
        let digits = f.precision().unwrap_or(31) + 1;
        let mut x = self.abs();
        let mut exp10 = x.hi.log10().floor() as i32;
        x = x / Self::from_f64(10.0).powi(exp10);
        if x.hi >= 10.0 {
            x = x / Self::from_f64(10.0);
            exp10 += 1;
        } else if x.hi < 1.0 {
            x = x.mul_f64(10.0);
            exp10 -= 1;
        }
        let mut out: Vec<u8> = Vec::with_capacity(digits);
        for _ in 0..digits {
            let d = x.hi.floor().clamp(0.0, 9.0);
            out.push(d as u8);
            x = (x - Self::from_f64(d)).mul_f64(10.0);
        }
        // round half up on the next digit
        if x.hi >= 5.0 {
            let mut i = out.len();
            loop {
                if i == 0 {
                    out.insert(0, 1);
                    out.pop();
                    exp10 += 1;
                    break;
                }
                i -= 1;
                if out[i] == 9 {
                    out[i] = 0;
                } else {
                    out[i] += 1;
                    break;
                }
            }
        }
        let sign = if self.hi < 0.0 { "-" } else { "" };
        let mut s = String::with_capacity(digits + 8);
        s.push_str(sign);
        s.push((b'0' + out[0]) as char);
        if out.len() > 1 {
            s.push('.');
            for d in &out[1..] {
                s.push((b'0' + d) as char);
            }
        }
        write!(f, "{s}e{exp10}")
    }
}
