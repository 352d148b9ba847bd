//! Complex gamma function via the Stirling series.

use num_complex::Complex;

use crate::error::{Result, ZetaError};
use crate::precision::{ComplexExt, EvalResult, PrecisionContext, Real};

/// Radius beyond which the Stirling series is summed directly.
fn stirling_radius(digits: u32) -> f64 {
    if digits <= 16 {
        9.0
    } else {
        12.5
    }
}

fn nonpositive_integer<T: Real>(z: Complex<T>) -> Option<i64> {
    if z.im != T::zero() || z.re > T::zero() {
        return None;
    }
    let r = z.re.to_f64();
    if r == r.round() && z.re == z.re.floor() {
        Some(r as i64)
    } else {
        None
    }
}

/// `ln sin(w)` evaluated without overflow for large `|Im w|`.
///
/// The imaginary part is only determined modulo `2 pi`.
pub(crate) fn ln_sin<T: Real>(w: Complex<T>) -> Complex<T> {
    let b = w.im.to_f64();
    let i = Complex::new(T::zero(), T::one());
    let half_pi = T::pi() * T::from_f64(0.5);
    let ln2 = Complex::new(T::ln_2(), T::zero());
    let one = Complex::new(T::one(), T::zero());
    if b > 20.0 {
        // sin w = (i/2) e^{-iw} (1 - e^{2iw})
        let e = (i * w).cscale(T::from_f64(2.0)).cexp();
        -(i * w) + (one - e).cln() + Complex::new(T::zero(), half_pi) - ln2
    } else if b < -20.0 {
        // sin w = (-i/2) e^{iw} (1 - e^{-2iw})
        let e = (-(i * w)).cscale(T::from_f64(2.0)).cexp();
        i * w + (one - e).cln() - Complex::new(T::zero(), half_pi) - ln2
    } else {
        w.csin().cln()
    }
}

/// `ln Gamma(z)`.
///
/// For `Re z >= 0` this is the branch continuous in the right half plane
/// (real on the positive axis), which is what the Riemann-Siegel theta
/// function needs. For `Re z < 0` the reflection formula is used and the
/// imaginary part is only meaningful modulo `2 pi`.
pub fn ln_gamma<T: Real>(z: Complex<T>, ctx: &PrecisionContext) -> Result<EvalResult<T>> {
    ctx.require::<T>()?;
    if !z.is_finite_point() {
        return Err(ZetaError::DomainError("gamma argument must be finite".into()));
    }
    if let Some(n) = nonpositive_integer(z) {
        return Err(ZetaError::PoleAtNonpositiveInteger(n));
    }
    if z.re < T::zero() {
        let one = Complex::new(T::one(), T::zero());
        let pi = T::pi();
        let refl = ln_gamma(one - z, ctx)?;
        let ls = ln_sin(z.cscale(pi));
        let value = Complex::new(T::ln_pi(), T::zero()) - ls - refl.value;
        let bound = refl.abs_error_bound + 8.0 * T::EPSILON * (value.cabs().to_f64() + 4.0);
        return Ok(EvalResult::new(value, bound));
    }
    Ok(ln_gamma_right(z, ctx))
}

fn ln_gamma_right<T: Real>(z: Complex<T>, ctx: &PrecisionContext) -> EvalResult<T> {
    let radius = stirling_radius(ctx.digits());
    let mut shifted = z;
    let mut log_shift = Complex::new(T::zero(), T::zero());
    let mut shifts = 0u32;
    while shifted.cabs().to_f64() < radius {
        log_shift += shifted.cln();
        shifted.re += T::one();
        shifts += 1;
    }
    let w = shifted;
    let half = T::from_f64(0.5);
    let lnw = w.cln();
    let mut value = (w - Complex::new(half, T::zero())) * lnw - w + Complex::new(T::ln_2pi() * half, T::zero());
    let inv = Complex::new(T::one(), T::zero()) / w;
    let inv2 = inv * inv;
    let mut power = inv;
    let tol = 10f64.powi(-(ctx.digits() as i32) - 2) * value.cabs().to_f64().max(1.0);
    let mut last = f64::INFINITY;
    let mut tail_bound = 0.0;
    for k in 1..=40 {
        let term = power.cscale(T::stirling(k));
        let mag = term.cabs().to_f64();
        if mag > last {
            tail_bound = last;
            break;
        }
        value += term;
        last = mag;
        if mag < tol {
            tail_bound = mag;
            break;
        }
        power *= inv2;
    }
    // in the right half plane the Stirling remainder is at most about twice
    // the first omitted term; `last` over-estimates that term
    let magnitude = value.cabs().to_f64() + log_shift.cabs().to_f64();
    let bound = 2.0 * tail_bound + 16.0 * T::EPSILON * (magnitude + f64::from(shifts) + 4.0);
    EvalResult::new(value - log_shift, bound)
}

/// `Gamma(z)`; reflection is used for `Re z < 1/2`.
pub fn gamma<T: Real>(z: Complex<T>, ctx: &PrecisionContext) -> Result<EvalResult<T>> {
    ctx.require::<T>()?;
    if let Some(n) = nonpositive_integer(z) {
        return Err(ZetaError::PoleAtNonpositiveInteger(n));
    }
    let half = T::from_f64(0.5);
    if z.re < half {
        let one = Complex::new(T::one(), T::zero());
        let g = gamma_right(one - z, ctx)?;
        let s = z.cscale(T::pi()).csin();
        let pi = Complex::new(T::pi(), T::zero());
        let value = pi / (s * g.value);
        let rel = g.abs_error_bound / g.value.cabs().to_f64() + 16.0 * T::EPSILON * (1.0 + z.cabs().to_f64());
        return Ok(EvalResult::new(value, rel * value.cabs().to_f64()));
    }
    gamma_right(z, ctx)
}

fn gamma_right<T: Real>(z: Complex<T>, ctx: &PrecisionContext) -> Result<EvalResult<T>> {
    let lg = ln_gamma_right(z, ctx);
    if lg.value.re.to_f64() > 709.0 {
        return Err(ZetaError::DomainError("gamma overflows the exponent range".into()));
    }
    let value = lg.value.cexp();
    let rel = lg.abs_error_bound + 4.0 * T::EPSILON;
    Ok(EvalResult::new(value, rel * value.cabs().to_f64()))
}
