//! Working-precision policy and the scalar types every analytic routine is
//! generic over.
//!
//! Two scalars are provided: `f64` (15 significant digits) and
//! [`DoubleDouble`] (about 31). A [`PrecisionContext`] asking for more digits
//! than a scalar carries is rejected with `PrecisionExhausted`.

mod double_double;

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_complex::Complex;
use num_traits::NumAssign;

pub use double_double::{DoubleDouble, ParseDoubleDoubleError};

use crate::error::{Result, ZetaError};
use crate::special::tables;

/// Real scalar used by the generic special functions.
pub trait Real:
    NumAssign
    + Copy
    + PartialOrd
    + Neg<Output = Self>
    + Send
    + Sync
    + Debug
    + Display
    + 'static
{
    /// Significant decimal digits carried by the type.
    const DIGITS: u32;
    /// Unit roundoff.
    const EPSILON: f64;

    fn from_f64(x: f64) -> Self;
    fn to_f64(self) -> f64;
    fn exp(self) -> Self;
    fn ln(self) -> Self;
    fn sqrt(self) -> Self;
    fn sin_cos(self) -> (Self, Self);
    fn atan2(self, x: Self) -> Self;
    fn abs(self) -> Self;
    fn floor(self) -> Self;
    fn pi() -> Self;
    fn ln_2() -> Self;
    fn ln_pi() -> Self;
    fn ln_2pi() -> Self;
    fn euler_gamma() -> Self;
    /// `B_{2k} / (2k)!` for `k >= 1`.
    fn em_bernoulli(k: usize) -> Self;
    /// `B_{2k} / (2k (2k - 1))` for `k >= 1`, the Stirling series coefficients.
    fn stirling(k: usize) -> Self;

    fn from_i64(n: i64) -> Self {
        let hi = n as f64;
        let lo = (n - hi as i64) as f64;
        Self::from_f64(hi) + Self::from_f64(lo)
    }
    fn sin(self) -> Self {
        self.sin_cos().0
    }
    fn cos(self) -> Self {
        self.sin_cos().1
    }
    fn powf(self, e: Self) -> Self {
        (self.ln() * e).exp()
    }
    fn powi(self, n: i32) -> Self {
        let mut acc = Self::one();
        let mut base = if n < 0 { Self::one() / self } else { self };
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc *= base;
            }
            base = base * base;
            k >>= 1;
        }
        acc
    }
    fn is_finite(self) -> bool {
        self.to_f64().is_finite()
    }
    fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }
    fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }
}

impl Real for f64 {
    const DIGITS: u32 = 15;
    const EPSILON: f64 = f64::EPSILON / 2.0;

    fn from_f64(x: f64) -> Self {
        x
    }
    fn to_f64(self) -> f64 {
        self
    }
    fn exp(self) -> Self {
        f64::exp(self)
    }
    fn ln(self) -> Self {
        f64::ln(self)
    }
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
    fn sin_cos(self) -> (Self, Self) {
        f64::sin_cos(self)
    }
    fn atan2(self, x: Self) -> Self {
        f64::atan2(self, x)
    }
    fn abs(self) -> Self {
        f64::abs(self)
    }
    fn floor(self) -> Self {
        f64::floor(self)
    }
    fn pi() -> Self {
        std::f64::consts::PI
    }
    fn ln_2() -> Self {
        std::f64::consts::LN_2
    }
    fn ln_pi() -> Self {
        tables::DD_LN_PI.hi()
    }
    fn ln_2pi() -> Self {
        tables::DD_LN_2PI.hi()
    }
    fn euler_gamma() -> Self {
        tables::DD_EULER_GAMMA.hi()
    }
    fn em_bernoulli(k: usize) -> Self {
        tables::EM_BERNOULLI[k - 1].hi()
    }
    fn stirling(k: usize) -> Self {
        tables::STIRLING[k - 1].hi()
    }
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn powf(self, e: Self) -> Self {
        f64::powf(self, e)
    }
    fn powi(self, n: i32) -> Self {
        f64::powi(self, n)
    }
}

impl Real for DoubleDouble {
    const DIGITS: u32 = 31;
    const EPSILON: f64 = DoubleDouble::EPSILON;

    fn from_f64(x: f64) -> Self {
        DoubleDouble::from_f64(x)
    }
    fn to_f64(self) -> f64 {
        DoubleDouble::to_f64(self)
    }
    fn exp(self) -> Self {
        DoubleDouble::exp(self)
    }
    fn ln(self) -> Self {
        DoubleDouble::ln(self)
    }
    fn sqrt(self) -> Self {
        DoubleDouble::sqrt(self)
    }
    fn sin_cos(self) -> (Self, Self) {
        DoubleDouble::sin_cos(self)
    }
    fn atan2(self, x: Self) -> Self {
        DoubleDouble::atan2(self, x)
    }
    fn abs(self) -> Self {
        DoubleDouble::abs(self)
    }
    fn floor(self) -> Self {
        DoubleDouble::floor(self)
    }
    fn pi() -> Self {
        tables::DD_PI
    }
    fn ln_2() -> Self {
        tables::DD_LN_2
    }
    fn ln_pi() -> Self {
        tables::DD_LN_PI
    }
    fn ln_2pi() -> Self {
        tables::DD_LN_2PI
    }
    fn euler_gamma() -> Self {
        tables::DD_EULER_GAMMA
    }
    fn em_bernoulli(k: usize) -> Self {
        tables::EM_BERNOULLI[k - 1]
    }
    fn stirling(k: usize) -> Self {
        tables::STIRLING[k - 1]
    }
    fn powi(self, n: i32) -> Self {
        DoubleDouble::powi(self, n)
    }
}

/// Elementary functions on `Complex<T>` for any [`Real`] scalar.
pub trait ComplexExt<T: Real>: Sized {
    fn cexp(self) -> Self;
    /// Principal logarithm.
    fn cln(self) -> Self;
    fn cabs(self) -> T;
    fn carg(self) -> T;
    fn csqrt(self) -> Self;
    fn csin(self) -> Self;
    fn ccos(self) -> Self;
    fn cscale(self, k: T) -> Self;
    fn is_finite_point(self) -> bool;
    fn to_c64(self) -> Complex<f64>;
    fn from_c64(z: Complex<f64>) -> Self;
}

impl<T: Real> ComplexExt<T> for Complex<T> {
    fn cexp(self) -> Self {
        let m = self.re.exp();
        let (s, c) = self.im.sin_cos();
        Complex::new(m * c, m * s)
    }
    fn cln(self) -> Self {
        Complex::new(self.cabs().ln(), self.carg())
    }
    fn cabs(self) -> T {
        let a = self.re.abs();
        let b = self.im.abs();
        let (big, small) = if a >= b { (a, b) } else { (b, a) };
        if big == T::zero() {
            return T::zero();
        }
        let r = small / big;
        big * (T::one() + r * r).sqrt()
    }
    fn carg(self) -> T {
        self.im.atan2(self.re)
    }
    fn csqrt(self) -> Self {
        let half = T::from_f64(0.5);
        if self.re == T::zero() && self.im == T::zero() {
            return self;
        }
        (self.cln().cscale(half)).cexp()
    }
    fn csin(self) -> Self {
        let (s, c) = self.re.sin_cos();
        let ep = self.im.exp();
        let em = T::one() / ep;
        let half = T::from_f64(0.5);
        Complex::new(s * (ep + em) * half, c * (ep - em) * half)
    }
    fn ccos(self) -> Self {
        let (s, c) = self.re.sin_cos();
        let ep = self.im.exp();
        let em = T::one() / ep;
        let half = T::from_f64(0.5);
        Complex::new(c * (ep + em) * half, -(s * (ep - em) * half))
    }
    fn cscale(self, k: T) -> Self {
        Complex::new(self.re * k, self.im * k)
    }
    fn is_finite_point(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
    fn to_c64(self) -> Complex<f64> {
        Complex::new(self.re.to_f64(), self.im.to_f64())
    }
    fn from_c64(z: Complex<f64>) -> Self {
        Complex::new(T::from_f64(z.re), T::from_f64(z.im))
    }
}

/// A point of the complex plane at working precision, `s = sigma + i t`.
pub type ComplexPoint<T = f64> = Complex<T>;

/// A value together with a rigorous-in-intent bound on its absolute error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult<T: Real = f64> {
    pub value: Complex<T>,
    pub abs_error_bound: f64,
}

impl<T: Real> EvalResult<T> {
    pub fn new(value: Complex<T>, abs_error_bound: f64) -> Self {
        debug_assert!(abs_error_bound.is_finite() && abs_error_bound >= 0.0);
        Self {
            value,
            abs_error_bound,
        }
    }

    pub fn exact(value: Complex<T>) -> Self {
        Self::new(value, 0.0)
    }

    pub fn to_c64(self) -> Complex<f64> {
        self.value.to_c64()
    }
}

/// Working precision policy threaded through the analytic evaluations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrecisionContext {
    digits: u32,
    max_series_terms: u64,
    quadrature_abs_tol: f64,
    rs_switchover: f64,
}

impl PrecisionContext {
    pub fn new(digits: u32, max_series_terms: u64, quadrature_abs_tol: f64) -> Result<Self> {
        if digits < 15 {
            return Err(ZetaError::DomainError(format!(
                "precision must be at least 15 digits, got {digits}"
            )));
        }
        if max_series_terms < 50 {
            return Err(ZetaError::DomainError(format!(
                "max_series_terms must be at least 50, got {max_series_terms}"
            )));
        }
        if !(quadrature_abs_tol > 0.0 && quadrature_abs_tol.is_finite()) {
            return Err(ZetaError::DomainError(format!(
                "quadrature tolerance must be positive, got {quadrature_abs_tol}"
            )));
        }
        Ok(Self {
            digits,
            max_series_terms,
            quadrature_abs_tol,
            rs_switchover: 1e4,
        })
    }

    /// 15 digits: statistics, fractals and anything driven by `f64`.
    pub fn double() -> Self {
        Self::new(15, 1_000_000, 1e-12).expect("valid defaults")
    }

    /// 30 digits: zero finding and explicit-formula work.
    pub fn extended() -> Self {
        Self::new(30, 1_000_000, 1e-12).expect("valid defaults")
    }

    /// Digits as requested, clamped to what the scalar `T` can carry.
    pub fn for_digits(digits: u32) -> Result<Self> {
        Self::new(digits, 1_000_000, 1e-12)
    }

    pub fn with_rs_switchover(mut self, height: f64) -> Self {
        self.rs_switchover = height;
        self
    }

    pub fn with_quadrature_tol(mut self, tol: f64) -> Self {
        if tol > 0.0 && tol.is_finite() {
            self.quadrature_abs_tol = tol;
        }
        self
    }

    pub fn with_max_series_terms(mut self, n: u64) -> Self {
        self.max_series_terms = n.max(50);
        self
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn max_series_terms(&self) -> u64 {
        self.max_series_terms
    }

    pub fn quadrature_abs_tol(&self) -> f64 {
        self.quadrature_abs_tol
    }

    /// Height above which `f64` evaluations on the critical line switch to
    /// the Riemann-Siegel formula.
    pub fn rs_switchover(&self) -> f64 {
        self.rs_switchover
    }

    /// Relative tolerance `10^-digits`.
    pub fn rel_tol(&self) -> f64 {
        10f64.powi(-(self.digits as i32))
    }

    /// Checks that `T` carries at least the requested digits.
    pub fn require<T: Real>(&self) -> Result<()> {
        if self.digits > T::DIGITS {
            Err(ZetaError::PrecisionExhausted(format!(
                "{} digits requested but the scalar type carries {}",
                self.digits,
                T::DIGITS
            )))
        } else {
            Ok(())
        }
    }

    /// Same policy at 15 digits, for the `f64` paths of a computation.
    pub fn as_double(&self) -> Self {
        Self {
            digits: 15,
            ..*self
        }
    }
}

impl Default for PrecisionContext {
    fn default() -> Self {
        Self::double()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn context_invariants() {
        assert!(PrecisionContext::new(14, 100, 1e-10).is_err());
        assert!(PrecisionContext::new(15, 49, 1e-10).is_err());
        assert!(PrecisionContext::new(15, 50, 0.0).is_err());
        let ctx = PrecisionContext::extended();
        assert!(ctx.require::<f64>().is_err());
        assert!(ctx.require::<DoubleDouble>().is_ok());
        assert!(PrecisionContext::double().require::<f64>().is_ok());
    }

    #[test]
    fn complex_helpers_agree_with_num_complex() {
        let z = Complex::new(0.7, -2.3);
        let close = |a: Complex<f64>, b: Complex<f64>| (a - b).norm() < 1e-14 * b.norm().max(1.0);
        assert!(close(z.cexp(), z.exp()));
        assert!(close(z.cln(), z.ln()));
        assert!(close(z.csin(), z.sin()));
        assert!(close(z.ccos(), z.cos()));
        assert!(close(z.csqrt(), z.sqrt()));
        assert!((z.cabs() - z.norm()).abs() < 1e-15);
    }

    #[test]
    fn double_double_complex_exp_log() {
        let z: Complex<DoubleDouble> = Complex::new(DoubleDouble::from_f64(0.25), DoubleDouble::from_f64(2.5));
        let back = z.cexp().cln();
        assert!((back - z).cabs().to_f64() < 1e-30, "{:e}", (back - z).cabs().to_f64());
    }
}
