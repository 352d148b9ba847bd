//! Riemann-Siegel theta function, Hardy's Z function and Gram points.
//!
//! `theta(t) = Im ln Gamma(1/4 + it/2) - (t/2) ln pi` on the branch continuous
//! from `theta(0) = 0`, and `Z(t) = e^{i theta(t)} zeta(1/2 + it)`, which is
//! real for real `t` with `|Z(t)| = |zeta(1/2 + it)|`. Sign changes of `Z`
//! bracket zeros on the critical line.

use num_complex::Complex;

use crate::error::{Result, ZetaError};
use crate::precision::{DoubleDouble, EvalResult, PrecisionContext, Real};
use crate::special::gamma::ln_gamma;
use crate::special::{riemann_siegel, zeta::zeta};

/// Largest height accepted by [`hardy_z`].
pub const MAX_HARDY_HEIGHT: f64 = 1e7;

/// `theta(t)` at the precision of `T`.
pub fn theta<T: Real>(t: T, ctx: &PrecisionContext) -> Result<EvalResult<T>> {
    if T::DIGITS <= 15 && t.to_f64().abs() >= 30.0 {
        let v = theta_f64(t.to_f64());
        return Ok(EvalResult::new(Complex::new(T::from_f64(v), T::zero()), 4.0 * f64::EPSILON * v.abs()));
    }
    let z = Complex::new(T::from_f64(0.25), t * T::from_f64(0.5));
    let lg = ln_gamma(z, ctx)?;
    let value = lg.value.im - t * T::ln_pi() * T::from_f64(0.5);
    let bound = lg.abs_error_bound + 4.0 * T::EPSILON * (t.to_f64().abs() + 1.0);
    Ok(EvalResult::new(Complex::new(value, T::zero()), bound))
}

/// `theta(t)` in `f64`; asymptotic series for `|t| >= 30`.
pub fn theta_f64(t: f64) -> f64 {
    if t < 0.0 {
        return -theta_f64(-t);
    }
    if t < 30.0 {
        let ctx = PrecisionContext::double();
        let lg = ln_gamma(Complex::new(0.25, 0.5 * t), &ctx).expect("no poles on the line");
        return lg.value.im - 0.5 * t * std::f64::consts::PI.ln();
    }
    let inv = 1.0 / t;
    let inv2 = inv * inv;
    let series = inv * (1.0 / 48.0 + inv2 * (7.0 / 5760.0 + inv2 * (31.0 / 80640.0 + inv2 * (127.0 / 430080.0 + inv2 * 511.0 / 1216512.0))));
    0.5 * t * (t / std::f64::consts::TAU).ln() - 0.5 * t - std::f64::consts::PI / 8.0 + series
}

/// `theta(t) mod 2 pi` in `f64`, with the large phase carried in
/// double-double so that the reduced angle is accurate to a few ulps.
pub fn theta_reduced_f64(t: f64) -> f64 {
    if t.abs() < 30.0 {
        return theta_f64(t);
    }
    if t < 0.0 {
        return -theta_reduced_f64(-t);
    }
    let td = DoubleDouble::from_f64(t);
    let main = (td * (td.ln() - DoubleDouble::ln_2pi()) - td).mul_f64(0.5) - DoubleDouble::pi().mul_f64(0.125);
    // the tail series is small, so f64 is enough for it
    let inv = 1.0 / t;
    let inv2 = inv * inv;
    let tail = inv * (1.0 / 48.0 + inv2 * (7.0 / 5760.0 + inv2 * (31.0 / 80640.0 + inv2 * (127.0 / 430080.0 + inv2 * 511.0 / 1216512.0))));
    (main + DoubleDouble::from_f64(tail)).reduce_angle()
}

/// `theta'(t)` in `f64`.
pub fn theta_prime_f64(t: f64) -> f64 {
    let inv2 = 1.0 / (t * t);
    0.5 * (t / std::f64::consts::TAU).ln() - inv2 / 48.0 - inv2 * inv2 * 7.0 / 1920.0
}

/// Hardy's `Z(t)` for `t >= 0`.
pub fn hardy_z<T: Real>(t: T, ctx: &PrecisionContext) -> Result<T> {
    Ok(hardy_z_eval(t, ctx)?.0)
}

/// `Z(t)` together with an absolute error bound.
pub fn hardy_z_eval<T: Real>(t: T, ctx: &PrecisionContext) -> Result<(T, f64)> {
    let tf = t.to_f64();
    if !(tf >= 0.0) {
        return Err(ZetaError::DomainError(format!("Hardy Z needs t >= 0, got {tf}")));
    }
    if tf > MAX_HARDY_HEIGHT {
        return Err(ZetaError::PrecisionExhausted(format!(
            "height {tf:e} beyond the supported range {MAX_HARDY_HEIGHT:e}"
        )));
    }
    ctx.require::<T>()?;
    if T::DIGITS <= 15 && tf > ctx.rs_switchover() {
        let (z, b) = riemann_siegel::hardy_z_rs(tf, ctx)?;
        return Ok((T::from_f64(z), b));
    }
    let s = Complex::new(T::from_f64(0.5), t);
    let zv = zeta(s, ctx)?;
    let (th_value, th_bound) = if T::DIGITS <= 15 {
        (T::from_f64(theta_reduced_f64(tf)), 4.0 * f64::EPSILON)
    } else {
        let th = theta(t, ctx)?;
        (th.value.re, th.abs_error_bound)
    };
    let (sn, cs) = th_value.sin_cos();
    let z = cs * zv.value.re - sn * zv.value.im;
    let modulus = (zv.value.re * zv.value.re + zv.value.im * zv.value.im).sqrt().to_f64();
    let bound = zv.abs_error_bound + modulus * (th_bound + 2.0 * T::EPSILON);
    Ok((z, bound))
}

/// The Gram point `g_n`, the solution of `theta(g_n) = n pi` with `g_n > 2 pi`.
///
/// Defined for `n >= -1`; `g_{-1} = 9.6669...` and `g_0 = 17.8455...`.
pub fn gram_point(n: i64) -> f64 {
    assert!(n >= -1, "Gram points are indexed from -1");
    let target = n as f64 * std::f64::consts::PI;
    // asymptotic starting guess: theta(t) ~ (t/2) ln(t / (2 pi e))
    let mut t = if n < 10 { 20.0 + 2.0 * n as f64 } else {
        let x = (n as f64 + 0.125) / std::f64::consts::E;
        // t/(2 pi e) = x / W(x) with W the Lambert function, estimated by two Newton steps
        let mut w = x.ln() - x.ln().ln().max(0.0);
        for _ in 0..4 {
            let ew = w.exp();
            w -= (w * ew - x) / (ew * (w + 1.0));
        }
        std::f64::consts::TAU * std::f64::consts::E * x / w
    };
    refine_gram(&mut t, target);
    t
}

fn refine_gram(t: &mut f64, target: f64) {
    for _ in 0..60 {
        let f = theta_f64(*t) - target;
        let step = f / theta_prime_f64(*t).max(0.05);
        *t -= step;
        if *t < 7.0 {
            *t = 7.0;
        }
        if step.abs() < 1e-13 * t.abs() {
            break;
        }
    }
}

/// Gram points `g_from ..= g_to`, computed by continuation.
pub fn gram_points(from: i64, to: i64) -> Vec<f64> {
    if to < from {
        return Vec::new();
    }
    let mut out = Vec::with_capacity((to - from + 1) as usize);
    let mut t = gram_point(from);
    out.push(t);
    for n in from + 1..=to {
        t += std::f64::consts::PI / theta_prime_f64(t);
        refine_gram(&mut t, n as f64 * std::f64::consts::PI);
        out.push(t);
    }
    out
}

/// Index of the last Gram point not above `t` (at least -1 for `t > 9.67`).
pub fn gram_index_below(t: f64) -> i64 {
    (theta_f64(t) / std::f64::consts::PI).floor() as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_branches_agree() {
        let ctx = PrecisionContext::double();
        for t in [30.0, 45.5, 100.0, 1000.0] {
            let lg = ln_gamma(Complex::new(0.25, 0.5 * t), &ctx).unwrap().value.im - 0.5 * t * std::f64::consts::PI.ln();
            assert!((lg - theta_f64(t)).abs() < 1e-11 * t, "{t}");
        }
        let ctx = PrecisionContext::extended();
        let th = theta(DoubleDouble::from_f64(100.0), &ctx).unwrap();
        assert!((th.value.re.to_f64() - theta_f64(100.0)).abs() < 1e-12);
    }

    #[test]
    fn reduced_theta_matches_double_double() {
        let ctx = PrecisionContext::extended();
        for t in [31.0, 1234.5, 98765.4321] {
            let full = theta(DoubleDouble::from_f64(t), &ctx).unwrap().value.re;
            assert!((full.reduce_angle() - theta_reduced_f64(t)).abs() < 1e-14, "{t}");
        }
    }

    #[test]
    fn gram_points_known_values() {
        assert!((gram_point(-1) - 9.666908056).abs() < 1e-8);
        assert!((gram_point(0) - 17.845599540).abs() < 1e-8);
        assert!((gram_point(1) - 23.170282701246309).abs() < 1e-8);
        let pts = gram_points(-1, 200);
        for (i, &g) in pts.iter().enumerate() {
            let n = i as i64 - 1;
            assert!((theta_f64(g) - n as f64 * std::f64::consts::PI).abs() < 1e-9);
        }
        let far = gram_point(100_000);
        assert!((theta_f64(far) / std::f64::consts::PI - 100_000.0).abs() < 1e-9);
    }

    #[test]
    fn z_changes_sign_at_first_zero() {
        let ctx = PrecisionContext::double();
        let a: f64 = hardy_z(14.0, &ctx).unwrap();
        let b: f64 = hardy_z(14.2, &ctx).unwrap();
        assert!(a * b < 0.0);
    }

    #[test]
    fn modulus_matches_zeta() {
        let ctx = PrecisionContext::double();
        let (z, b) = hardy_z_eval(20.0f64, &ctx).unwrap();
        let zv = zeta(Complex::new(0.5, 20.0), &ctx).unwrap();
        assert!((z.abs() - zv.value.norm()).abs() <= b + zv.abs_error_bound);
    }

    #[test]
    fn twenty_nine_sign_changes_below_one_hundred() {
        let ctx = PrecisionContext::double();
        let mut changes = 0;
        let mut prev: f64 = hardy_z(0.0, &ctx).unwrap();
        let mut t = 0.0;
        while t < 100.0 {
            t += 0.01;
            let cur: f64 = hardy_z(t, &ctx).unwrap();
            if cur * prev < 0.0 {
                changes += 1;
            }
            prev = cur;
        }
        assert_eq!(changes, 29);
    }

    #[test]
    fn rejects_out_of_range() {
        let ctx = PrecisionContext::double();
        assert!(matches!(hardy_z(-1.0, &ctx), Err(ZetaError::DomainError(_))));
        assert!(matches!(hardy_z(2e7, &ctx), Err(ZetaError::PrecisionExhausted(_))));
    }
}
