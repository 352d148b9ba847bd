//! Riemann zeta function.
//!
//! For `Re s >= 1/2` the Dirichlet series is summed with Euler-Maclaurin
//! correction:
//!
//! `zeta(s) = sum_{n<N} n^-s + N^{1-s}/(s-1) + N^-s/2 + sum_k B_2k/(2k)! s(s+1)..(s+2k-2) N^{-s-2k+1}`
//!
//! and the remainder after `M` correction terms is bounded by the first
//! omitted term times `|s+2M+1| / (Re s + 2M + 1)`. For `Re s < 1/2` the
//! functional equation `zeta(s) = chi(s) zeta(1-s)` is applied in logarithmic
//! form so that large `|Im s|` neither overflows nor underflows. On the
//! critical line above the configured switchover height, `f64` evaluations use
//! the Riemann-Siegel formula.

use num_complex::Complex;

use crate::error::{Result, ZetaError};
use crate::precision::{ComplexExt, DoubleDouble, EvalResult, PrecisionContext, Real};
use crate::special::gamma::{ln_gamma, ln_sin};
use crate::special::{hardy, riemann_siegel};

const MAX_CORRECTION_TERMS: usize = 90;

/// `zeta(s)` with an absolute error bound.
pub fn zeta<T: Real>(s: Complex<T>, ctx: &PrecisionContext) -> Result<EvalResult<T>> {
    ctx.require::<T>()?;
    if !s.is_finite_point() {
        return Err(ZetaError::DomainError("zeta argument must be finite".into()));
    }
    let one = Complex::new(T::one(), T::zero());
    if (s - one).cabs().to_f64() <= 4.0 * T::EPSILON {
        return Err(ZetaError::PoleAtOne);
    }
    if s.im == T::zero() {
        let r = s.re.to_f64();
        if s.re == T::zero() {
            return Ok(EvalResult::exact(Complex::new(T::from_f64(-0.5), T::zero())));
        }
        if r < 0.0 && s.re == s.re.floor() && (r as i64) % 2 == 0 {
            return Ok(EvalResult::exact(Complex::new(T::zero(), T::zero())));
        }
    }
    let half = T::from_f64(0.5);
    let t = s.im.to_f64();
    if T::DIGITS <= 15 && s.re == half && t.abs() > ctx.rs_switchover() {
        return zeta_critical_rs(t, ctx);
    }
    if s.re >= half {
        euler_maclaurin(s, ctx)
    } else {
        reflected(s, ctx)
    }
}

fn zeta_critical_rs<T: Real>(t: f64, ctx: &PrecisionContext) -> Result<EvalResult<T>> {
    let (z, zb) = riemann_siegel::hardy_z_rs(t.abs(), ctx)?;
    let th = hardy::theta_reduced_f64(t.abs());
    let (s, c) = th.sin_cos();
    // zeta(1/2 + it) = Z(t) e^{-i theta(t)}, conjugated for t < 0
    let im = if t > 0.0 { -z * s } else { z * s };
    let theta_err = 8.0 * f64::EPSILON;
    let value = Complex::new(T::from_f64(z * c), T::from_f64(im));
    Ok(EvalResult::new(value, zb + z.abs() * theta_err))
}

/// `n^{-s}`. In `f64` the phase `t ln n` is formed in double-double and
/// reduced, so the result carries a few ulps instead of `|t| ln n` ulps.
fn neg_power<T: Real>(n: u64, ln_n: T, s: Complex<T>) -> Complex<T> {
    if T::DIGITS <= 15 {
        let l = crate::special::ln_int_dd(n);
        let phase = (l * DoubleDouble::from_f64(s.im.to_f64())).reduce_angle();
        let mag = (-s.re.to_f64() * l.hi()).exp();
        let (sn, cs) = phase.sin_cos();
        Complex::new(T::from_f64(mag * cs), T::from_f64(-mag * sn))
    } else {
        (-(s.cscale(ln_n))).cexp()
    }
}

/// Ulps of error in `n^{-s}` per the evaluation in [`neg_power`].
fn neg_power_ulps<T: Real>(ln_n: f64, s: Complex<T>) -> f64 {
    if T::DIGITS <= 15 {
        6.0 + s.re.to_f64().abs() * ln_n
    } else {
        3.0 + s.cabs().to_f64() * ln_n
    }
}

fn euler_maclaurin<T: Real>(s: Complex<T>, ctx: &PrecisionContext) -> Result<EvalResult<T>> {
    let sigma = s.re.to_f64();
    let abs_s = s.cabs().to_f64();
    let target = 10f64.powi(-(ctx.digits() as i32) - 1);
    let one = Complex::new(T::one(), T::zero());
    let mut n_terms = (0.5 * ctx.digits() as f64 + abs_s / std::f64::consts::PI).ceil().max(10.0) as u64;
    loop {
        if n_terms > ctx.max_series_terms() {
            return Err(ZetaError::PrecisionExhausted(format!(
                "Euler-Maclaurin needs more than {} terms at s = {:e}{:+e}i",
                ctx.max_series_terms(),
                sigma,
                s.im.to_f64()
            )));
        }
        // direct part
        let mut direct = Complex::new(T::zero(), T::zero());
        let mut round_acc = 0.0;
        for n in (1..n_terms).rev() {
            let ln_n = T::from_f64(n as f64).ln();
            let term = neg_power(n, ln_n, s);
            direct += term;
            round_acc += term.cabs().to_f64() * neg_power_ulps(ln_n.to_f64(), s);
        }
        let big_n = T::from_f64(n_terms as f64);
        let ln_big = big_n.ln();
        let n_pow = neg_power(n_terms, ln_big, s);
        let inv_n = T::one() / big_n;
        let mut sum = direct + n_pow.cscale(big_n) / (s - one) + n_pow.cscale(T::from_f64(0.5));
        let n2 = inv_n * inv_n;
        // F_1 = s N^{-s-1}
        let mut factor = s * n_pow.cscale(inv_n);
        let mut prev_mag = f64::INFINITY;
        let mut converged = None;
        for k in 1..=MAX_CORRECTION_TERMS {
            let term = factor.cscale(T::em_bernoulli(k));
            let mag = term.cabs().to_f64();
            let scale = sum.cabs().to_f64().max(f64::MIN_POSITIVE);
            if mag <= target * scale {
                // this term is the first one left out
                let kk = (2 * k - 1) as f64;
                let growth = (s + Complex::new(T::from_f64(kk), T::zero())).cabs().to_f64() / (sigma + kk);
                converged = Some(mag * growth.max(1.0));
                break;
            }
            if mag > prev_mag {
                break;
            }
            prev_mag = mag;
            sum += term;
            let a = T::from_f64((2 * k - 1) as f64);
            let b = T::from_f64((2 * k) as f64);
            factor = factor * (s + Complex::new(a, T::zero())) * (s + Complex::new(b, T::zero()));
            factor = factor.cscale(n2);
        }
        if let Some(trunc) = converged {
            let tail_mag = n_pow.cabs().to_f64() * (n_terms as f64 / (s - one).cabs().to_f64() + 1.0);
            let round = 2.0 * T::EPSILON * (round_acc + tail_mag * (2.0 + neg_power_ulps(ln_big.to_f64(), s)) + prev_mag.min(1e300));
            if !(trunc + round).is_finite() {
                return Err(ZetaError::PrecisionExhausted(format!("zeta error bound overflows at s = {}", s.to_c64())));
            }
            return Ok(EvalResult::new(sum, trunc + round));
        }
        n_terms *= 2;
    }
}

fn reflected<T: Real>(s: Complex<T>, ctx: &PrecisionContext) -> Result<EvalResult<T>> {
    let one = Complex::new(T::one(), T::zero());
    let w = one - s;
    let z1 = zeta(w, ctx)?;
    let lg = ln_gamma(w, ctx)?;
    let half_pi = T::pi() * T::from_f64(0.5);
    let ls = ln_sin(s.cscale(half_pi));
    let ln_chi = s.cscale(T::ln_2()) + (s - one).cscale(T::ln_pi()) + ls + lg.value;
    let chi = ln_chi.cexp();
    let value = chi * z1.value;
    let chi_abs = chi.cabs().to_f64();
    let rel = lg.abs_error_bound + 8.0 * T::EPSILON * (ln_chi.cabs().to_f64() + 8.0);
    let bound = chi_abs * z1.abs_error_bound + rel * value.cabs().to_f64();
    if !(bound.is_finite() && value.re.is_finite() && value.im.is_finite()) {
        return Err(ZetaError::PrecisionExhausted(format!("zeta overflows the scalar range at s = {}", s.to_c64())));
    }
    Ok(EvalResult::new(value, bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::DoubleDouble;
    use crate::special::gamma::gamma;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn z64(re: f64, im: f64) -> EvalResult<f64> {
        zeta(Complex::new(re, im), &PrecisionContext::double()).unwrap()
    }

    fn dd(x: f64) -> DoubleDouble {
        DoubleDouble::from_f64(x)
    }

    #[test]
    fn even_integer_values() {
        let z2 = z64(2.0, 0.0);
        assert!((z2.value.re - PI * PI / 6.0).abs() < 1e-15);
        assert!(z2.abs_error_bound <= 1e-13 * z2.value.norm());
        let z4 = z64(4.0, 0.0);
        assert!((z4.value.re - PI.powi(4) / 90.0).abs() < 1e-15);
        let zm2 = z64(-2.0, 0.0);
        assert_eq!(zm2.value, Complex::new(0.0, 0.0));
        assert_eq!(z64(0.0, 0.0).value.re, -0.5);
    }

    #[test]
    fn first_zero_is_a_zero() {
        let z = z64(0.5, 14.134725142);
        assert!(z.value.norm() < 1e-8, "{}", z.value);
        // with more digits of the zero the modulus drops accordingly
        let ctx = PrecisionContext::extended();
        let g: DoubleDouble = "14.13472514173469379045725198356247".parse().unwrap();
        let z = zeta(Complex::new(dd(0.5), g), &ctx).unwrap();
        assert!(z.value.cabs().to_f64() < 1e-28);
    }

    #[test]
    fn pole_and_negative_values() {
        assert!(matches!(zeta(Complex::new(1.0, 0.0), &PrecisionContext::double()), Err(ZetaError::PoleAtOne)));
        // zeta(-1) = -1/12, zeta(-3) = 1/120
        assert!((z64(-1.0, 0.0).value.re + 1.0 / 12.0).abs() < 1e-14);
        assert!((z64(-3.0, 0.0).value.re - 1.0 / 120.0).abs() < 1e-15);
        // zeta(1/2) oracle digits
        assert!((z64(0.5, 0.0).value.re + 1.4603545088095868).abs() < 1e-14);
    }

    #[test]
    fn double_double_matches_reference_digits() {
        let ctx = PrecisionContext::extended();
        // zeta(3) to 40 digits
        let z3 = zeta(Complex::new(dd(3.0), dd(0.0)), &ctx).unwrap();
        let apery: DoubleDouble = "1.202056903159594285399738161511449990765".parse().unwrap();
        assert!((z3.value.re - apery).abs().to_f64() < 1e-30);
        assert!(z3.abs_error_bound < 1e-28);
        // zeta(1/2)
        let zh = zeta(Complex::new(dd(0.5), dd(0.0)), &ctx).unwrap();
        let want: DoubleDouble = "-1.460354508809586812889499152515298012467".parse().unwrap();
        assert!((zh.value.re - want).abs().to_f64() < 1e-29);
        // reflected: zeta(-1/2) = -0.2078862250773545...
        let zm = zeta(Complex::new(dd(-0.5), dd(0.0)), &ctx).unwrap();
        let want: DoubleDouble = "-0.2078862249773545660173067253970493".parse().unwrap();
        assert!((zm.value.re - want).abs().to_f64() < 1e-29);
    }

    #[test]
    fn error_bound_meets_relative_target_away_from_zeros() {
        for (re, im) in [(0.5, 3.0), (0.7, 55.0), (2.0, 1000.0), (1.5, 9000.0), (-3.0, 4.0), (0.8, 2e4), (0.5, 5e5), (0.5, 999_999.5)] {
            let z = z64(re, im);
            assert!(z.abs_error_bound <= 1e-13 * z.value.norm(), "{re}+{im}i bound {} value {}", z.abs_error_bound, z.value);
        }
    }

    #[test]
    fn riemann_siegel_agrees_with_euler_maclaurin() {
        for t in [10_500.0, 12_345.678, 20_000.0] {
            let rs = zeta(Complex::new(0.5, t), &PrecisionContext::double()).unwrap();
            let em = zeta(Complex::new(0.5, t), &PrecisionContext::double().with_rs_switchover(1e9)).unwrap();
            let diff = (rs.value - em.value).norm();
            assert!(diff <= rs.abs_error_bound + em.abs_error_bound, "t={t}: diff {diff:e} bounds {:e} {:e}", rs.abs_error_bound, em.abs_error_bound);
        }
    }

    #[test]
    fn euler_product_cross_check() {
        let primes: Vec<u64> = crate::arithmetic::small_primes(100_000);
        for s in [Complex::new(2.0, 0.0), Complex::new(2.5, 3.0), Complex::new(3.0, -10.0)] {
            let mut prod = Complex::new(1.0, 0.0);
            for &p in &primes {
                prod /= 1.0 - (-s * (p as f64).ln()).exp();
            }
            let z = zeta(s, &PrecisionContext::double()).unwrap().value;
            let sigma = s.re;
            // tail of sum n^{-sigma} beyond 1e5
            let tail = 1e5f64.powf(1.0 - sigma) / (sigma - 1.0);
            assert!((prod - z).norm() <= tail * z.norm() + 1e-12, "{s}");
        }
    }

    fn completed(s: Complex<f64>) -> Complex<f64> {
        let ctx = PrecisionContext::double();
        let g = gamma(s * 0.5, &ctx).unwrap().value;
        let z = zeta(s, &ctx).unwrap().value;
        (-(s * 0.5) * PI.ln()).exp() * g * z
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn functional_equation_residual(re in 0.01f64..0.99, im in -50.0f64..50.0) {
            let s = Complex::new(re, im);
            let lhs = completed(s);
            let rhs = completed(Complex::new(1.0, 0.0) - s);
            let scale = lhs.norm().max(rhs.norm()).max(1e-300);
            // relative residual at 15 digits, tolerance 10^(-15+4)
            prop_assert!((lhs - rhs).norm() / scale < 1e-11, "s={} lhs={} rhs={}", s, lhs, rhs);
        }

        #[test]
        fn conjugate_symmetry(re in -5.0f64..5.0, im in 0.1f64..80.0) {
            let a = z64(re, im).value;
            let b = z64(re, -im).value;
            prop_assert!((a - b.conj()).norm() <= 1e-12 * a.norm().max(1e-10));
        }
    }
}
