//! Prime counting from zeros.
//!
//! The full expansion is
//!
//! `pi(x) = sum_{n} mu(n)/n [ li(x^{1/n}) - sum_rho Li(x^{rho/n}) - ln 2 + int_{x^{1/n}}^inf dt / (t (t^2-1) ln t) ]`
//!
//! with zeros taken in ascending order and each paired with its conjugate.
//! The wave form replaces `Li(y)` by `y/ln y + y/ln^2 y` and `li` terms by
//! `R(x)`, which turns every conjugate pair into a cosine/sine wave of
//! frequency `gamma/n` in `ln x`.

use std::path::Path;

use num_complex::Complex;
use rayon::prelude::*;

use crate::arithmetic::{prime_pi_exact, JumpMode, SieveTable};
use crate::error::{Result, ZetaError};
use crate::precision::{PrecisionContext, Real};
use crate::special::{expint_e1, li_complex_power, li_real, zeta};
use crate::zeros::ZeroStore;

/// Wave-form sums are limited to this Moebius cutoff.
pub const WAVE_MAX_MOBIUS: usize = 20;
const ZERO_BLOCK: usize = 256;

/// Which expansion [`pi_explicit`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExpansionMode {
    /// Exact terms through `Li(x^{rho/n})`.
    #[default]
    Full,
    /// Two-term asymptotic for `Li`, written as waves.
    Wave,
}

/// Truncation of the explicit formula.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveSumConfig {
    pub num_zeros: usize,
    pub mobius_cutoff: usize,
    pub mode: ExpansionMode,
    /// Compare against `pi` valued at the midpoint of each jump.
    pub half_jump: bool,
}

impl WaveSumConfig {
    pub fn new(num_zeros: usize, mobius_cutoff: usize, mode: ExpansionMode) -> Result<Self> {
        let cfg = Self { num_zeros, mobius_cutoff, mode, half_jump: true };
        cfg.check()?;
        Ok(cfg)
    }

    /// Full mode with the cutoff `floor(log2 x)` where `x^{1/N} >= 2`.
    pub fn for_height(num_zeros: usize, x: f64) -> Self {
        Self { num_zeros, mobius_cutoff: default_mobius_cutoff(x), mode: ExpansionMode::Full, half_jump: true }
    }

    fn check(&self) -> Result<()> {
        if self.mobius_cutoff == 0 {
            return Err(ZetaError::DomainError("the Moebius cutoff must be at least 1".into()));
        }
        if self.mode == ExpansionMode::Wave && self.mobius_cutoff > WAVE_MAX_MOBIUS {
            return Err(ZetaError::DomainError(format!(
                "wave form is limited to a Moebius cutoff of {WAVE_MAX_MOBIUS}, got {}",
                self.mobius_cutoff
            )));
        }
        Ok(())
    }

    fn check_store(&self, store: &ZeroStore) -> Result<()> {
        self.check()?;
        if self.num_zeros > store.len() {
            return Err(ZetaError::InsufficientZeros(format!(
                "{} zeros requested, {} stored",
                self.num_zeros,
                store.len()
            )));
        }
        Ok(())
    }
}

/// `floor(log2 x)`, at least 1.
pub fn default_mobius_cutoff(x: f64) -> usize {
    (x.log2().floor() as usize).max(1)
}

/// One evaluation of the explicit formula.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReconstructionSample {
    pub x: f64,
    pub smooth_part: f64,
    pub zero_correction: f64,
    pub trivial_correction: f64,
    /// `smooth_part - zero_correction + trivial_correction`.
    pub total: f64,
}

/// Moebius values for `n <= n_max` by trial factorisation (`n_max` is small here).
pub fn mobius_small(n_max: usize) -> Vec<i8> {
    let mut mu = vec![1i8; n_max + 1];
    if n_max >= 1 {
        mu[0] = 0;
    }
    for n in 2..=n_max {
        let mut m = n;
        let mut sign = 1i8;
        let mut p = 2;
        let mut square = false;
        while p * p <= m {
            if m % p == 0 {
                m /= p;
                if m % p == 0 {
                    square = true;
                    break;
                }
                sign = -sign;
            }
            p += 1;
        }
        mu[n] = if square { 0 } else if m > 1 { -sign } else { sign };
    }
    mu
}

/// Gram's series `R(x) = 1 + sum_n (ln x)^n / (n n! zeta(n+1))`.
pub fn r_gram<T: Real>(x: T, ctx: &PrecisionContext) -> Result<T> {
    ctx.require::<T>()?;
    if !(x > T::one()) {
        return Err(ZetaError::DomainError(format!("R(x) is evaluated for x > 1, got {}", x.to_f64())));
    }
    let l = x.ln();
    let tol = T::from_f64(10f64.powi(-(ctx.digits() as i32)));
    let mut power = T::one(); // l^n / n!
    let mut sum = T::one();
    let mut n = 1u64;
    loop {
        power = power * l / T::from_f64(n as f64);
        let z = zeta(Complex::new(T::from_f64((n + 1) as f64), T::zero()), ctx)?.value.re;
        let term = power / (T::from_f64(n as f64) * z);
        sum += term;
        if term <= tol * sum && T::from_f64(n as f64) > l {
            return Ok(sum);
        }
        n += 1;
        if n > ctx.max_series_terms() {
            return Err(ZetaError::PrecisionExhausted("Gram series did not converge".into()));
        }
    }
}

/// `R'(x) = (1/x) sum_{n >= 1} (ln x)^{n-1} / (n! zeta(n+1))`.
pub fn r_gram_derivative(x: f64, ctx: &PrecisionContext) -> Result<f64> {
    if !(x > 1.0) {
        return Err(ZetaError::DomainError(format!("R'(x) is evaluated for x > 1, got {x}")));
    }
    let l = x.ln();
    let mut power = 1.0; // l^{n-1} / n!
    let mut sum = 0.0;
    for n in 1..10_000u64 {
        power /= n as f64;
        if n > 1 {
            power *= l;
        }
        let z = zeta(Complex::new((n + 1) as f64, 0.0), &ctx.as_double())?.value.re;
        let term = power / z;
        sum += term;
        if term <= 1e-17 * sum && n as f64 > l {
            break;
        }
    }
    Ok(sum / x)
}

/// `(1/(2 ln x)) sum_{n<=N} mu(n) + (1/pi) arctan(pi / ln x)`, the closed form
/// for the truncated trivial-zero terms.
pub fn riesel_gohl(x: f64, n_cut: usize) -> f64 {
    let l = x.ln();
    let mu = mobius_small(n_cut);
    let m: i64 = mu[1..].iter().map(|&v| i64::from(v)).sum();
    m as f64 / (2.0 * l) + (std::f64::consts::PI / l).atan() / std::f64::consts::PI
}

/// `int_y^inf dt / (t (t^2 - 1) ln t) = sum_{m >= 1} E1(2 m ln y)` for `y > 1`.
pub fn trivial_zero_integral(y: f64, ctx: &PrecisionContext) -> Result<f64> {
    if !(y > 1.0) {
        return Err(ZetaError::DomainError(format!("trivial-zero integral needs y > 1, got {y}")));
    }
    let a = y.ln();
    let dctx = ctx.as_double();
    let mut sum = 0.0;
    for m in 1..1_000_000u64 {
        let term = expint_e1(Complex::new(2.0 * m as f64 * a, 0.0), &dctx)?.value.re;
        sum += term;
        if term < 1e-17 * sum {
            return Ok(sum);
        }
    }
    Err(ZetaError::PrecisionExhausted(format!("trivial-zero integral converges too slowly at y = {y}")))
}

/// Sum over blocks of zeros in fixed order, so that results do not depend on
/// the number of worker threads.
fn blocked_sum(gammas: &[f64], f: impl Fn(f64) -> Result<f64> + Sync) -> Result<f64> {
    let partial: Vec<Result<f64>> =
        gammas.par_chunks(ZERO_BLOCK).map(|chunk| chunk.iter().map(|&g| f(g)).sum()).collect();
    let mut total = 0.0;
    for p in partial {
        total += p?;
    }
    Ok(total)
}

/// Evaluates the explicit formula at `x`.
pub fn pi_explicit(x: f64, store: &ZeroStore, cfg: &WaveSumConfig, ctx: &PrecisionContext) -> Result<ReconstructionSample> {
    if !(x > 2.0) {
        return Err(ZetaError::DomainError(format!("the explicit formula is evaluated for x > 2, got {x}")));
    }
    cfg.check_store(store)?;
    let gammas = &store.gammas()[..cfg.num_zeros];
    let mu = mobius_small(cfg.mobius_cutoff);
    let dctx = ctx.as_double();
    let l = x.ln();
    let (smooth, zero_corr, trivial) = match cfg.mode {
        ExpansionMode::Full => {
            let mut smooth = 0.0;
            let mut zero = 0.0;
            let mut trivial = 0.0;
            for n in 1..=cfg.mobius_cutoff {
                if mu[n] == 0 {
                    continue;
                }
                let w = f64::from(mu[n]) / n as f64;
                let y = (l / n as f64).exp();
                if y <= 1.0 + 1e-12 {
                    continue;
                }
                smooth += w * li_real(y, &dctx)?;
                trivial += w * (trivial_zero_integral(y, &dctx)? - std::f64::consts::LN_2);
                let pair = blocked_sum(gammas, |g| {
                    Ok(2.0 * li_complex_power(y, Complex::new(0.5, g), &dctx)?.value.re)
                })?;
                zero += w * pair;
            }
            (smooth, zero, trivial)
        }
        ExpansionMode::Wave => {
            let smooth = r_gram(x, &dctx)?;
            let mut zero = 0.0;
            for n in 1..=cfg.mobius_cutoff {
                if mu[n] == 0 {
                    continue;
                }
                let nf = n as f64;
                let amp = (l / (2.0 * nf)).exp() / l;
                let waves = blocked_sum(gammas, |g| {
                    let (s, c) = (g * l / nf).sin_cos();
                    let g2 = g * g;
                    let first = (c + 2.0 * g * s) / (0.25 + g2);
                    let second = (nf / l) * (2.0 * (0.25 - g2) * c + 2.0 * g * s) / (0.0625 + 0.5 * g2 + g2 * g2);
                    Ok(first + second)
                })?;
                zero += f64::from(mu[n]) * amp * waves;
            }
            (smooth, zero, riesel_gohl(x, cfg.mobius_cutoff))
        }
    };
    Ok(ReconstructionSample {
        x,
        smooth_part: smooth,
        zero_correction: zero_corr,
        trivial_correction: trivial,
        total: smooth - zero_corr + trivial,
    })
}

/// Derivative in `x` of `R(x)` minus the first wave sum: a sum that
/// approaches a comb of spikes at primes and prime powers as zeros are added.
pub fn spike_derivative(x_grid: &[f64], store: &ZeroStore, cfg: &WaveSumConfig, ctx: &PrecisionContext) -> Result<Vec<f64>> {
    cfg.check_store(store)?;
    if let Some(&bad) = x_grid.iter().find(|&&x| !(x > 2.0)) {
        return Err(ZetaError::DomainError(format!("spike grid must lie above 2, got {bad}")));
    }
    let gammas = &store.gammas()[..cfg.num_zeros];
    let mu = mobius_small(cfg.mobius_cutoff);
    x_grid
        .iter()
        .map(|&x| {
            let l = x.ln();
            let mut value = r_gram_derivative(x, ctx)?;
            for n in 1..=cfg.mobius_cutoff {
                if mu[n] == 0 {
                    continue;
                }
                let nf = n as f64;
                let a = 0.5 / nf;
                let e = (a * l).exp();
                let waves = blocked_sum(gammas, |g| {
                    let (s, c) = (g * l / nf).sin_cos();
                    let den = 0.25 + g * g;
                    let gv = (c + 2.0 * g * s) / den;
                    let gd = (g / nf) * (2.0 * g * c - s) / den;
                    Ok(e * ((a / l - 1.0 / (l * l)) * gv + gd / l) / x)
                })?;
                value -= f64::from(mu[n]) * waves;
            }
            Ok(value)
        })
        .collect()
}

/// Writes `x, smooth, zero_corr, trivial_corr, total, pi_exact`.
pub fn write_samples_csv(path: &Path, samples: &[ReconstructionSample], table: &SieveTable, half_jump: bool) -> Result<()> {
    let mode = if half_jump { JumpMode::Half } else { JumpMode::Step };
    let mut w = csv::Writer::from_path(path).map_err(csv_error)?;
    w.write_record(["x", "smooth", "zero_corr", "trivial_corr", "total", "pi_exact"]).map_err(csv_error)?;
    for s in samples {
        let exact = prime_pi_exact(s.x, table, mode)?;
        w.write_record([
            format!("{:.6}", s.x),
            format!("{:.12}", s.smooth_part),
            format!("{:.12}", s.zero_correction),
            format!("{:.12}", s.trivial_correction),
            format!("{:.12}", s.total),
            format!("{exact:.1}"),
        ])
        .map_err(csv_error)?;
    }
    w.flush()?;
    Ok(())
}

pub(crate) fn csv_error(e: csv::Error) -> ZetaError {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => ZetaError::Io(io),
        other => ZetaError::FormatError(format!("{other:?}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arithmetic::build_sieve;
    use crate::precision::DoubleDouble;
    use crate::zeros::find_zeros_up_to;
    use std::sync::OnceLock;

    fn zeros() -> &'static ZeroStore {
        static Z: OnceLock<ZeroStore> = OnceLock::new();
        Z.get_or_init(|| find_zeros_up_to(1500.0, &PrecisionContext::double()).unwrap())
    }

    #[test]
    fn gram_series_reference_values() {
        let ctx = PrecisionContext::double();
        // 30-digit values of R(x)
        for (x, want) in [(10.0, 4.564583141005090240), (100.0, 25.66163326692418259), (1e4, 1226.931218343433109)] {
            let r: f64 = r_gram(x, &ctx).unwrap();
            assert!((r - want).abs() < 1e-12 * want, "{x}: {r}");
        }
        let r: f64 = r_gram(1.0 + 1e-15, &ctx).unwrap();
        assert!((r - 1.0).abs() < 1e-14);
        let rd = r_gram(DoubleDouble::from_f64(100.0), &PrecisionContext::extended()).unwrap();
        let want: DoubleDouble = "25.6616332669241825932267979404".parse().unwrap();
        assert!((rd - want).abs().to_f64() < 1e-26);
        assert!(r_gram(1.0, &ctx).is_err());
    }

    #[test]
    fn gram_derivative_matches_difference_quotient() {
        let ctx = PrecisionContext::double();
        for x in [5.0, 50.0, 5000.0] {
            let h = 1e-4 * x;
            let fd = (r_gram(x + h, &ctx).unwrap() - r_gram(x - h, &ctx).unwrap()) / (2.0 * h);
            assert!((r_gram_derivative(x, &ctx).unwrap() - fd).abs() < 1e-8 * fd.abs().max(1.0));
        }
    }

    #[test]
    fn closed_form_trivial_terms() {
        let x = 1e6;
        let v = riesel_gohl(x, 5);
        let third = (std::f64::consts::PI / x.ln()).powi(3) / 3.0;
        assert!(v.abs() < 3.6e-3);
        assert!((v.abs() - third / std::f64::consts::PI).abs() < 0.2 * third);
        let e_pi = std::f64::consts::PI.exp();
        assert!((riesel_gohl(e_pi, 1) - (0.5 / std::f64::consts::PI + 0.25)).abs() < 1e-15);
        assert!(riesel_gohl(1e300, 7).abs() < 1e-2);
    }

    #[test]
    fn closed_form_tracks_the_integral() {
        // sum_n mu(n)/n (integral - ln 2) approaches the closed form for large x
        let ctx = PrecisionContext::double();
        let x: f64 = 1e8;
        let n_cut = default_mobius_cutoff(x);
        let mu = mobius_small(n_cut);
        let direct: f64 = (1..=n_cut)
            .map(|n| {
                let y = x.powf(1.0 / n as f64);
                f64::from(mu[n]) / n as f64 * (trivial_zero_integral(y, &ctx).unwrap() - std::f64::consts::LN_2)
            })
            .sum();
        assert!((direct - riesel_gohl(x, n_cut)).abs() < 0.05, "{direct} vs {}", riesel_gohl(x, n_cut));
    }

    #[test]
    fn trivial_integral_matches_quadrature() {
        let ctx = PrecisionContext::double();
        for y in [2.0, 10.0] {
            let a = f64::ln(y);
            let q = crate::quadrature::integrate_adaptive(
                |u: f64| {
                    // v = a + u/(1-u)
                    let v = a + u / (1.0 - u);
                    let jac = 1.0 / ((1.0 - u) * (1.0 - u));
                    jac / (v * (2.0 * v).exp_m1())
                },
                0.0,
                1.0 - 1e-9,
                1e-14,
                1e-13,
                2000,
            )
            .unwrap();
            let v = trivial_zero_integral(y, &ctx).unwrap();
            assert!((v - q.value).abs() < 1e-11, "{y}: {v} vs {}", q.value);
        }
    }

    #[test]
    fn no_zeros_gives_smooth_plus_trivial() {
        let ctx = PrecisionContext::double();
        let store = zeros();
        let cfg = WaveSumConfig::for_height(0, 100.0);
        let s = pi_explicit(100.0, store, &cfg, &ctx).unwrap();
        assert_eq!(s.zero_correction, 0.0);
        assert_eq!(s.total, s.smooth_part + s.trivial_correction);
        let mu = mobius_small(cfg.mobius_cutoff);
        let direct: f64 = (1..=cfg.mobius_cutoff)
            .map(|n| f64::from(mu[n]) / n as f64 * li_real(100f64.powf(1.0 / n as f64), &ctx).unwrap())
            .sum();
        assert!((s.smooth_part - direct).abs() < 1e-12);
    }

    #[test]
    fn full_expansion_converges_to_prime_counts() {
        let ctx = PrecisionContext::double();
        let store = zeros();
        let table = build_sieve(1000).unwrap();
        for x in [30.5, 100.0, 113.0, 500.5] {
            let cfg = WaveSumConfig::for_height(store.len(), x);
            let s = pi_explicit(x, store, &cfg, &ctx).unwrap();
            let exact = prime_pi_exact(x, &table, JumpMode::Half).unwrap();
            assert!((s.total - exact).abs() < 0.15, "x={x}: {} vs {exact}", s.total);
        }
    }

    #[test]
    fn zero_order_does_not_matter() {
        let ctx = PrecisionContext::double();
        let store = zeros().truncated(600);
        let mut rev: Vec<f64> = store.gammas().to_vec();
        rev.reverse();
        let cfg = WaveSumConfig::for_height(600, 77.0);
        let a = pi_explicit(77.0, &store, &cfg, &ctx).unwrap();
        let mu = mobius_small(cfg.mobius_cutoff);
        let mut zero = 0.0;
        for n in 1..=cfg.mobius_cutoff {
            let y = 77f64.powf(1.0 / n as f64);
            let s: f64 = rev.iter().map(|&g| 2.0 * li_complex_power(y, Complex::new(0.5, g), &ctx).unwrap().value.re).sum();
            zero += f64::from(mu[n]) / n as f64 * s;
        }
        assert!((a.zero_correction - zero).abs() < 1e-10);
    }

    #[test]
    fn spikes_at_primes() {
        let ctx = PrecisionContext::double();
        let store = zeros();
        let grid: Vec<f64> = (0..=300).map(|k| 10.5 + 0.01 * k as f64).collect();
        let cfg = WaveSumConfig::new(store.len(), 3, ExpansionMode::Wave).unwrap();
        let d = spike_derivative(&grid, store, &cfg, &ctx).unwrap();
        let near = |c: f64| {
            grid.iter().zip(&d).filter(|(x, _)| (*x - c).abs() < 0.1).map(|(_, v)| *v).fold(f64::MIN, f64::max)
        };
        let p11 = near(11.0);
        let p13 = near(13.0);
        let p12 = near(12.0);
        assert!(p11 > 3.0 * p12 && p13 > 3.0 * p12, "{p11} {p12} {p13}");
        let composite = spike_derivative(&(0..=100).map(|k| 8.5 + 0.01 * k as f64).collect::<Vec<_>>(), store, &cfg, &ctx)
            .unwrap()
            .into_iter()
            .fold(f64::MIN, f64::max);
        assert!(composite < 0.5 * p11, "{composite} vs {p11}");
        let smooth = spike_derivative(&[12.0], store, &WaveSumConfig::new(0, 3, ExpansionMode::Wave).unwrap(), &ctx).unwrap()[0];
        assert!(smooth > 0.3 && smooth < 1.0 / 12f64.ln());
    }

    #[test]
    fn config_validation() {
        let store = zeros();
        assert!(WaveSumConfig::new(10, 21, ExpansionMode::Wave).is_err());
        assert!(WaveSumConfig::new(10, 0, ExpansionMode::Full).is_err());
        let cfg = WaveSumConfig::new(store.len() + 1, 3, ExpansionMode::Full).unwrap();
        assert!(matches!(pi_explicit(50.0, store, &cfg, &PrecisionContext::double()), Err(ZetaError::InsufficientZeros(_))));
    }
}
