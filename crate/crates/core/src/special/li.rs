//! Logarithmic integral on the real axis and at complex powers `x^rho`.

use num_complex::Complex;

use crate::error::{Result, ZetaError};
use crate::precision::{ComplexExt, EvalResult, PrecisionContext, Real};

/// `li(x)` for `x > 1` from `gamma + ln ln x + sum_n (ln x)^n / (n n!)`.
pub fn li_real<T: Real>(x: T, ctx: &PrecisionContext) -> Result<T> {
    ctx.require::<T>()?;
    if !(x > T::one()) {
        return Err(ZetaError::DomainError(format!("li needs x > 1, got {}", x.to_f64())));
    }
    let l = x.ln();
    let tol = T::from_f64(10f64.powi(-(ctx.digits() as i32)));
    let mut power = T::one();
    let mut series = T::zero();
    let mut n = 1u64;
    loop {
        let nf = T::from_f64(n as f64);
        power = power * l / nf;
        let term = power / nf;
        series += term;
        if term <= tol * series.abs() && T::from_f64(n as f64) > l {
            break;
        }
        n += 1;
        if n > ctx.max_series_terms() {
            return Err(ZetaError::PrecisionExhausted("li series did not converge".into()));
        }
    }
    Ok(T::euler_gamma() + l.ln() + series)
}

/// Exponential integral `E1(w)` on its principal branch (cut along the
/// negative real axis), with an absolute error bound.
pub fn expint_e1<T: Real>(w: Complex<T>, ctx: &PrecisionContext) -> Result<EvalResult<T>> {
    let r = w.cabs().to_f64();
    if r == 0.0 {
        return Err(ZetaError::DomainError("E1 has a logarithmic pole at 0".into()));
    }
    let eps = 10f64.powi(-(ctx.digits() as i32) - 1).max(T::EPSILON);
    if r < 4.0 || (w.re.to_f64() < 0.0 && w.im.to_f64().abs() < 1.0 && r < 40.0) {
        // E1(w) = -gamma - ln w - sum_{n>=1} (-w)^n / (n n!)
        let mut term = Complex::new(T::one(), T::zero());
        let mut sum = Complex::new(T::zero(), T::zero());
        let mut abs_sum = 0.0;
        for n in 1..(ctx.max_series_terms().min(10_000) as usize) {
            let nf = T::from_f64(n as f64);
            term = -(term * w).cscale(T::one() / nf);
            let contrib = term.cscale(T::one() / nf);
            sum += contrib;
            let m = contrib.cabs().to_f64();
            abs_sum += m;
            if m <= eps * sum.cabs().to_f64().max(1e-300) && n as f64 > r {
                let value = -(Complex::new(T::euler_gamma(), T::zero()) + w.cln() + sum);
                let bound = 8.0 * T::EPSILON * (abs_sum + r + 2.0) + m;
                return Ok(EvalResult::new(value, bound));
            }
        }
        return Err(ZetaError::PrecisionExhausted("E1 series did not converge".into()));
    }
    // modified Lentz evaluation of E1(w) = e^{-w} / (w + 1 - 1/(w + 3 - 4/(w + 5 - ...)))
    let one = Complex::new(T::one(), T::zero());
    let tiny = T::from_f64(1e-300);
    let two = T::from_f64(2.0);
    let mut b = w + one;
    let mut c = Complex::new(T::one() / tiny, T::zero());
    let mut d = one / b;
    let mut h = d;
    let mut converged = false;
    let mut iterations = 0usize;
    for i in 1..(ctx.max_series_terms().min(200_000) as usize) {
        let an = -T::from_f64((i * i) as f64);
        b.re += two;
        d = one / (d.cscale(an) + b);
        c = b + Complex::new(an, T::zero()) / c;
        let del = c * d;
        h *= del;
        iterations = i;
        if (del - one).cabs().to_f64() < eps {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(ZetaError::PrecisionExhausted(format!(
            "E1 continued fraction did not converge at w = {}{:+}i",
            w.re.to_f64(),
            w.im.to_f64()
        )));
    }
    let value = h * (-w).cexp();
    let mag = value.cabs().to_f64();
    let bound = mag * (4.0 * eps + 4.0 * T::EPSILON * (iterations as f64 + r));
    Ok(EvalResult::new(value, bound))
}

/// `Li(x^rho)` on the branch fixed by integrating `e^w / w` along the
/// horizontal line `Im w = Im(rho) ln x` from `-infinity`.
///
/// That branch equals `-E1(-rho ln x)` with the principal `E1`. It differs
/// from the principal-branch `Ei` by `i pi sgn(Im rho)`, an offset that
/// cancels between `rho` and its conjugate.
pub fn li_complex_power<T: Real>(x: T, rho: Complex<T>, ctx: &PrecisionContext) -> Result<EvalResult<T>> {
    ctx.require::<T>()?;
    if !(x > T::one()) {
        return Err(ZetaError::DomainError(format!("Li(x^rho) needs x > 1, got {}", x.to_f64())));
    }
    if rho.im == T::zero() {
        return Err(ZetaError::BranchError);
    }
    let z = rho.cscale(x.ln());
    let e1 = expint_e1(-z, ctx)?;
    Ok(EvalResult::new(-e1.value, e1.abs_error_bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::DoubleDouble;
    use crate::quadrature::integrate_adaptive;
    use rand::{Rng, SeedableRng};

    #[test]
    fn li_reference_values() {
        let ctx = PrecisionContext::double();
        // e: gamma + sum 1/(n n!) by direct partial summation
        let mut direct = 0.5772156649015329;
        let mut fact = 1.0;
        for n in 1..30 {
            fact *= n as f64;
            direct += 1.0 / (n as f64 * fact);
        }
        let at_e: f64 = li_real(std::f64::consts::E, &ctx).unwrap();
        assert!((at_e - direct).abs() < 1e-14);
        assert!((at_e - 1.89511781635594).abs() < 1e-13);
        // li(100) = li(2) + int_2^100 du / ln u
        let li2: f64 = li_real(2.0, &ctx).unwrap();
        assert!((li2 - 1.045163780117493).abs() < 1e-14);
        let quad = integrate_adaptive(|u: f64| 1.0 / u.ln(), 2.0, 100.0, 1e-13, 1e-14, 200).unwrap();
        let li100: f64 = li_real(100.0, &ctx).unwrap();
        assert!((li100 - (li2 + quad.value)).abs() < 1e-11);
        assert!((li100 - 30.12614158407963).abs() < 1e-12);
        // near 1 the ln ln x term dominates
        let near: f64 = li_real(1.0 + 1e-12, &ctx).unwrap();
        assert!(near < -25.0);
        assert!(li_real(1.0, &ctx).is_err());
    }

    #[test]
    fn li_series_matches_integral_on_wide_range() {
        let ctx = PrecisionContext::double();
        let li2: f64 = li_real(2.0, &ctx).unwrap();
        for x in [10.0, 1e3, 1e6] {
            let quad = integrate_adaptive(|u: f64| 1.0 / u.ln(), 2.0, x, 1e-12, 1e-15, 2000).unwrap();
            let series: f64 = li_real(x, &ctx).unwrap();
            assert!((series - li2 - quad.value).abs() < 1e-10, "{x}");
        }
    }

    const LI_100: &str = "30.12614158407962992590174133903218";

    #[test]
    fn li_double_double() {
        let ctx = PrecisionContext::extended();
        let v = li_real(DoubleDouble::from_f64(100.0), &ctx).unwrap();
        let want: DoubleDouble = LI_100.parse().unwrap();
        assert!((v - want).abs().to_f64() < 1e-19);
    }

    /// `int_{-inf}^{0} e^{z+s} / (z+s) ds`, the defining horizontal contour.
    fn contour_oracle(z: Complex<f64>) -> Complex<f64> {
        let f = |u: f64| {
            // s = -u/(1-u) maps [0, 1) onto (-inf, 0]
            let s = -u / (1.0 - u);
            let w = z + s;
            w.exp() / w / ((1.0 - u) * (1.0 - u))
        };
        integrate_adaptive(f, 0.0, 1.0 - 1e-12, 1e-13, 1e-13, 20_000).unwrap().value
    }

    #[test]
    fn matches_numeric_contour_integration() {
        let ctx = PrecisionContext::double();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..3 {
            let x: f64 = rng.gen_range(3.0..200.0);
            let rho = Complex::new(0.5, rng.gen_range(5.0..40.0));
            let got = li_complex_power(x, rho, &ctx).unwrap().value;
            let want = contour_oracle(rho * x.ln());
            assert!((got - want).norm() < 1e-9 * want.norm().max(1.0), "x={x} rho={rho}: {got} vs {want}");
        }
        let x = 100.0;
        let rho = Complex::new(0.5, 14.134725);
        let v = li_complex_power(x, rho, &ctx).unwrap().value;
        let li_sqrt: f64 = li_real(10.0, &ctx).unwrap();
        assert!(v.norm() <= li_sqrt);
    }

    #[test]
    fn offset_from_principal_ei_is_i_pi() {
        // principal Ei(rho_1 ln 100) = 0.1164367363545261 + 3.2417081406024004i
        let ctx = PrecisionContext::double();
        let rho = Complex::new(0.5, 14.134725141734693790);
        let v = li_complex_power(100.0, rho, &ctx).unwrap().value;
        let ei = Complex::new(0.116436736354526117724, 3.241708140602400392029);
        assert!((v + Complex::new(0.0, std::f64::consts::PI) - ei).norm() < 1e-12);
    }

    #[test]
    fn conjugate_symmetry_and_branch_error() {
        let ctx = PrecisionContext::double();
        let rho = Complex::new(0.5, 21.022039639);
        let a = li_complex_power(50.0, rho, &ctx).unwrap().value;
        let b = li_complex_power(50.0, rho.conj(), &ctx).unwrap().value;
        assert!((a - b.conj()).norm() < 1e-15);
        assert!(matches!(li_complex_power(50.0, Complex::new(0.5, 0.0), &ctx), Err(ZetaError::BranchError)));
    }

    #[test]
    fn grows_like_leading_asymptotic() {
        let ctx = PrecisionContext::double();
        let rho = Complex::new(0.5, 14.134725142);
        let mut prev_err = f64::INFINITY;
        for x in [1e3, 1e4, 1e5] {
            let z = rho * f64::ln(x);
            let lead = z.exp() / z;
            let v = li_complex_power(x, rho, &ctx).unwrap().value;
            let rel = (v / lead - 1.0).norm();
            // next term of the asymptotic series is 1/z
            assert!(rel < 2.0 / z.norm());
            assert!(rel < prev_err);
            prev_err = rel;
        }
    }

    #[test]
    fn e1_series_and_fraction_agree() {
        let ctx = PrecisionContext::double();
        for w in [Complex::new(3.9, 0.5), Complex::new(-2.0, 3.2), Complex::new(0.5, -3.9)] {
            let series = expint_e1(w, &ctx).unwrap().value;
            // push through the continued fraction by scaling the radius test
            let cf = {
                let big = PrecisionContext::double();
                let mut v = Complex::new(0.0, 0.0);
                // E1(w) = E1(w + d) + int_w^{w+d} e^{-u}/u du; use d along the real axis
                let d = 6.0;
                let tail = expint_e1(w + d, &big).unwrap().value;
                let seg = integrate_adaptive(|s: f64| { let u = w + s; (-u).exp() / u }, 0.0, d, 1e-15, 1e-15, 200).unwrap().value;
                v += tail + seg;
                v
            };
            assert!((series - cf).norm() < 1e-12 * series.norm().max(1.0), "{w}: {series} vs {cf}");
        }
    }
}
