//! The completed zeta function on the critical-line scale, its Fourier
//! kernel and the de Bruijn-Newman deformation.
//!
//! `xi(z)` here is `Xi(z) = xi(1/2 + iz)` with
//! `xi(s) = (1/2) s (s-1) pi^{-s/2} Gamma(s/2) zeta(s)`, so real `z` gives
//! real values and the zeros of `Xi` are the ordinates `gamma_n`. With the
//! kernel `Phi(t) = sum_n (2 pi^2 n^4 e^{9t} - 3 pi n^2 e^{5t}) e^{-pi n^2 e^{4t}}`
//! one has `H(z, lambda) = int_0^inf Phi(t) e^{lambda t^2} cos(zt) dt` and
//! `H(z, 0) = Xi(z/2) / 8`.

use num_complex::Complex;

use crate::error::{Result, ZetaError};
use crate::precision::{ComplexExt, EvalResult, PrecisionContext, Real};
use crate::quadrature::integrate_adaptive;
use crate::special::gamma::ln_gamma;
use crate::special::zeta::zeta;

/// Upper limit of the `H` integral; `Phi(5) < 1e-300`.
pub const H_CUTOFF: f64 = 5.0;

/// `Xi(z) = xi(1/2 + i z)`.
pub fn xi<T: Real>(z: Complex<T>, ctx: &PrecisionContext) -> Result<EvalResult<T>> {
    ctx.require::<T>()?;
    let half = T::from_f64(0.5);
    let i = Complex::new(T::zero(), T::one());
    let one = Complex::new(T::one(), T::zero());
    let mut s = Complex::new(half, T::zero()) + i * z;
    // xi(s) = xi(1 - s): stay in the half plane where ln Gamma(s/2) is direct
    if s.re < half {
        s = one - s;
    }
    if s == one {
        return Ok(EvalResult::exact(Complex::new(half, T::zero())));
    }
    let zv = zeta(s, ctx)?;
    let lg = ln_gamma(s.cscale(half), ctx)?;
    let prefactor_log = (s * (s - one)).cscale(half).cln() - s.cscale(half * T::ln_pi()) + lg.value;
    let prefactor = prefactor_log.cexp();
    let value = prefactor * zv.value;
    let pm = prefactor.cabs().to_f64();
    let bound = pm * zv.abs_error_bound
        + value.cabs().to_f64() * (lg.abs_error_bound + 8.0 * T::EPSILON * (prefactor_log.cabs().to_f64() + 4.0));
    Ok(EvalResult::new(value, bound))
}

/// `Phi(t)` for `t >= 0`. Underflows to zero in `f64` beyond `t ~ 1.6`; use
/// [`ln_phi_kernel`] there.
pub fn phi_kernel<T: Real>(t: T, ctx: &PrecisionContext) -> Result<T> {
    if !(t.to_f64() >= 0.0) {
        return Err(ZetaError::DomainError("Phi is evaluated for t >= 0".into()));
    }
    let pi = T::pi();
    let e4 = (t * T::from_f64(4.0)).exp();
    let e5 = (t * T::from_f64(5.0)).exp();
    let e9 = (t * T::from_f64(9.0)).exp();
    let tol = T::from_f64(10f64.powi(-(ctx.digits() as i32)));
    let mut sum = T::zero();
    for n in 1..1000u32 {
        let n2 = T::from_f64(f64::from(n * n));
        let poly = T::from_f64(2.0) * pi * pi * n2 * n2 * e9 - T::from_f64(3.0) * pi * n2 * e5;
        let term = poly * (-(pi * n2 * e4)).exp();
        sum += term;
        if term.abs() <= tol * sum.abs() || term == T::zero() {
            break;
        }
    }
    Ok(sum)
}

/// `ln Phi(t)`, finite for all `t >= 0` in `f64`.
pub fn ln_phi_kernel(t: f64) -> Result<f64> {
    if !(t >= 0.0) {
        return Err(ZetaError::DomainError("Phi is evaluated for t >= 0".into()));
    }
    let pi = std::f64::consts::PI;
    let e4 = (4.0 * t).exp();
    // factor out e^{-pi e^{4t}} carried by the n = 1 term
    let mut sum = 0.0;
    for n in 1..1000u32 {
        let n2 = f64::from(n * n);
        let poly = 2.0 * pi * pi * n2 * n2 * (9.0 * t).exp() - 3.0 * pi * n2 * (5.0 * t).exp();
        let term = poly * (-pi * (n2 - 1.0) * e4).exp();
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            break;
        }
    }
    Ok(sum.ln() - pi * e4)
}

/// `H(z, lambda)` by adaptive quadrature on `[0, 5]`.
pub fn h_family(z: Complex<f64>, lambda: f64, ctx: &PrecisionContext) -> Result<EvalResult<f64>> {
    if lambda > 1.0 {
        return Err(ZetaError::DomainError(format!("H(z, lambda) is supported for lambda <= 1, got {lambda}")));
    }
    if !z.is_finite_point() {
        return Err(ZetaError::DomainError("H needs a finite argument".into()));
    }
    let dctx = ctx.as_double();
    let integrand = |t: f64| -> Complex<f64> {
        let phi: f64 = phi_kernel(t, &dctx).unwrap_or(0.0);
        if phi == 0.0 {
            return Complex::new(0.0, 0.0);
        }
        (z * t).cos() * (phi * (lambda * t * t).exp())
    };
    let tol = ctx.quadrature_abs_tol();
    // Phi is negligible past t = 1.5 in double precision; split there
    let head = integrate_adaptive(integrand, 0.0, 1.5, tol * 0.5, 1e-15, 4000)?;
    let tail = integrate_adaptive(integrand, 1.5, H_CUTOFF, tol * 0.5, 1e-15, 400)?;
    let value = head.value + tail.value;
    // relative rounding in Phi and cos about 32 ulps of the integral of |f|
    let rounding = 32.0 * f64::EPSILON * (head.abs_integral + tail.abs_integral);
    Ok(EvalResult::new(value, head.error + tail.error + rounding))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::DoubleDouble;
    use proptest::prelude::*;

    #[test]
    fn xi_is_real_and_vanishes_at_first_ordinate() {
        let ctx = PrecisionContext::double();
        let v = xi(Complex::new(3.7, 0.0), &ctx).unwrap();
        assert!(v.value.im.abs() <= v.abs_error_bound.max(1e-16));
        let g = xi(Complex::new(14.134725142, 0.0), &ctx).unwrap();
        assert!(g.value.norm() < 1e-7);
    }

    #[test]
    fn xi_at_origin_matches_oracle() {
        // -1/8 pi^{-1/4} Gamma(1/4) zeta(1/2), evaluated with 40-digit arithmetic
        let want: DoubleDouble = "0.4971207781883141099127737396853977198".parse().unwrap();
        let ctx = PrecisionContext::extended();
        let zero = DoubleDouble::from_f64(0.0);
        let v = xi(Complex::new(zero, zero), &ctx).unwrap();
        assert!((v.value.re - want).abs().to_f64() < 1e-29);
        let v64 = xi(Complex::new(0.0, 0.0), &PrecisionContext::double()).unwrap();
        assert!((v64.value.re - 0.4971207781883141).abs() <= v64.abs_error_bound.max(1e-16));
    }

    #[test]
    fn phi_values_and_decay() {
        let ctx = PrecisionContext::double();
        let p0: f64 = phi_kernel(0.0, &ctx).unwrap();
        // direct sum of the first ten terms
        let pi = std::f64::consts::PI;
        let direct: f64 = (1..=10).map(|n| {
            let n2 = (n * n) as f64;
            (2.0 * pi * pi * n2 * n2 - 3.0 * pi * n2) * (-pi * n2).exp()
        }).sum();
        assert!((p0 - direct).abs() < 1e-15);
        assert!((p0 - 0.4466969004671234).abs() < 1e-15);
        assert!(ln_phi_kernel(2.0).unwrap() < -100.0 * 10f64.ln());
        let mut prev = f64::INFINITY;
        for k in 0..=200 {
            let t = k as f64 * 0.05;
            let lp = ln_phi_kernel(t).unwrap();
            assert!(lp.is_finite());
            assert!(lp < prev, "not decreasing at {t}");
            prev = lp;
        }
        assert!(ln_phi_kernel(5.0).unwrap() < -300.0 * 10f64.ln());
    }

    #[test]
    fn h_matches_xi() {
        let ctx = PrecisionContext::double();
        for z in [1.0, 10.0, 28.269450284] {
            let h = h_family(Complex::new(z, 0.0), 0.0, &ctx).unwrap();
            let x = xi(Complex::new(z / 2.0, 0.0), &ctx).unwrap();
            let diff = (h.value - x.value / 8.0).norm();
            assert!(diff <= 10.0 * (h.abs_error_bound + x.abs_error_bound / 8.0), "z={z}: diff {diff:e}");
        }
        let h = h_family(Complex::new(28.269450284, 0.0), 0.0, &ctx).unwrap();
        assert!(h.value.norm() < 1e-7);
        assert!(h_family(Complex::new(1.0, 0.0), 1.5, &ctx).is_err());
    }

    #[test]
    fn h_matches_xi_on_twenty_points() {
        let ctx = PrecisionContext::double();
        for k in 0..20 {
            let z = 0.5 + 2.5 * k as f64;
            let h = h_family(Complex::new(z, 0.0), 0.0, &ctx).unwrap();
            let x = xi(Complex::new(z / 2.0, 0.0), &ctx).unwrap();
            let diff = (h.value - x.value / 8.0).norm();
            assert!(diff <= 10.0 * (h.abs_error_bound + x.abs_error_bound / 8.0), "z={z}: diff {diff:e} bounds {:e} {:e}", h.abs_error_bound, x.abs_error_bound);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]
        #[test]
        fn h_is_even(re in 0.0f64..30.0, im in -2.0f64..2.0, lambda in -1.0f64..1.0) {
            let ctx = PrecisionContext::double();
            let z = Complex::new(re, im);
            let a = h_family(z, lambda, &ctx).unwrap();
            let b = h_family(-z, lambda, &ctx).unwrap();
            prop_assert!((a.value - b.value).norm() <= a.abs_error_bound + b.abs_error_bound + 1e-15);
        }
    }
}
