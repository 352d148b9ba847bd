//! Zero statistics: unfolded spacings, pair correlation and moments of
//! `|zeta|` on the critical line.

use std::path::Path;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::arithmetic::small_primes;
use crate::error::{Result, ZetaError};
use crate::precision::PrecisionContext;
use crate::quadrature::GaussLegendre;
use crate::special::{barnes_g_integer, hardy_z, theta_f64};
use crate::zeros::{search_context, ZeroStore};

/// Default lower height for statistics, to skip the sparse low zeros.
pub const DEFAULT_MIN_HEIGHT: f64 = 100.0;
/// Largest height for [`moment_empirical`].
pub const MAX_MOMENT_HEIGHT: f64 = 1e5;

/// Local mean spacing used to rescale gaps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum UnfoldRule {
    /// Density `ln(gamma / 2 pi) / 2 pi` from the zero-counting formula.
    #[default]
    CountingDensity,
    /// `ln(gamma) / 2 pi`, the coarser rule that drops the `2 pi`.
    LogHeight,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Histogram {
    pub bin_edges: Vec<f64>,
    pub counts: Vec<u64>,
    /// Counts divided by `total * width`, so the densities integrate to 1.
    pub normalized_density: Vec<f64>,
}

impl Histogram {
    /// Equal-width bins from 0 covering every sample.
    pub fn from_samples(samples: &[f64], width: f64) -> Result<Self> {
        if !(width > 0.0) {
            return Err(ZetaError::DomainError(format!("bin width must be positive, got {width}")));
        }
        if samples.is_empty() {
            return Err(ZetaError::InsufficientData("histogram needs at least one sample".into()));
        }
        let max = samples.iter().copied().fold(0.0, f64::max);
        let bins = ((max / width).floor() as usize + 1).max(1);
        let mut counts = vec![0u64; bins];
        for &s in samples {
            let b = ((s / width).floor() as usize).min(bins - 1);
            counts[b] += 1;
        }
        let total = samples.len() as f64;
        let bin_edges = (0..=bins).map(|k| k as f64 * width).collect();
        let normalized_density = counts.iter().map(|&c| c as f64 / (total * width)).collect();
        Ok(Self { bin_edges, counts, normalized_density })
    }

    pub fn midpoints(&self) -> Vec<f64> {
        self.bin_edges.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect()
    }

    pub fn total_mass(&self) -> f64 {
        self.normalized_density.iter().zip(self.bin_edges.windows(2)).map(|(d, w)| d * (w[1] - w[0])).sum()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationCurve {
    pub u_grid: Vec<f64>,
    pub empirical: Vec<f64>,
    pub predicted: Vec<f64>,
}

impl CorrelationCurve {
    /// Largest `|empirical - predicted|` over `u_lo <= u <= u_hi`.
    pub fn sup_distance(&self, u_lo: f64, u_hi: f64) -> f64 {
        self.u_grid
            .iter()
            .zip(self.empirical.iter().zip(&self.predicted))
            .filter(|(u, _)| **u >= u_lo && **u <= u_hi)
            .map(|(_, (e, p))| (e - p).abs())
            .fold(0.0, f64::max)
    }
}

fn local_density(g: f64, rule: UnfoldRule) -> f64 {
    match rule {
        UnfoldRule::CountingDensity => (g / std::f64::consts::TAU).ln() / std::f64::consts::TAU,
        UnfoldRule::LogHeight => g.ln() / std::f64::consts::TAU,
    }
}

/// Gaps `(gamma_{n+1} - gamma_n)` times the local density at `gamma_n`.
pub fn unfold(store: &ZeroStore, rule: UnfoldRule) -> Result<Vec<f64>> {
    unfold_slice(store.gammas(), rule)
}

fn unfold_slice(g: &[f64], rule: UnfoldRule) -> Result<Vec<f64>> {
    if g.len() < 2 {
        return Err(ZetaError::InsufficientData(format!("unfolding needs two zeros, got {}", g.len())));
    }
    Ok(g.windows(2).map(|w| (w[1] - w[0]) * local_density(w[0], rule)).collect())
}

/// `(32 / pi^2) s^2 exp(-4 s^2 / pi)`.
pub fn gue_surmise(s: f64) -> f64 {
    let pi = std::f64::consts::PI;
    32.0 / (pi * pi) * s * s * (-4.0 * s * s / pi).exp()
}

/// Spacing histogram and its largest distance from the surmise.
#[derive(Debug, Clone, PartialEq)]
pub struct SpacingReport {
    pub histogram: Histogram,
    pub sup_distance: f64,
    pub spacings_used: usize,
}

/// Histogram of unfolded spacings for zeros above `min_height`.
pub fn spacing_histogram(store: &ZeroStore, bin_width: f64, min_height: f64, rule: UnfoldRule) -> Result<SpacingReport> {
    let start = store.gammas().partition_point(|&g| g < min_height);
    let g = &store.gammas()[start..];
    if g.len() < 1000 {
        return Err(ZetaError::InsufficientData(format!("spacing statistics need 1000 zeros, got {}", g.len())));
    }
    let s = unfold_slice(g, rule)?;
    let histogram = Histogram::from_samples(&s, bin_width)?;
    let sup_distance = histogram
        .midpoints()
        .iter()
        .zip(&histogram.normalized_density)
        .map(|(m, d)| (d - gue_surmise(*m)).abs())
        .fold(0.0, f64::max);
    Ok(SpacingReport { histogram, sup_distance, spacings_used: s.len() })
}

/// `1 - (sin pi u / pi u)^2`.
pub fn montgomery_density(u: f64) -> f64 {
    if u == 0.0 {
        return 0.0;
    }
    let x = std::f64::consts::PI * u;
    let s = x.sin() / x;
    1.0 - s * s
}

/// Pair-correlation density of zeros in `[min_height, t_max]`.
///
/// Each zero is mapped to its smooth count `theta(gamma)/pi + 1`, which has
/// unit mean spacing. Pairs with unfolded difference in a bin of width
/// `du` are counted and divided by `n du`, the expected count for
/// uncorrelated points. To leading order this is the `(T ln T)/2 pi`
/// pair normalisation with the local density in place of `ln T`.
pub fn pair_correlation(store: &ZeroStore, t_max: f64, min_height: f64, du: f64, u_max: f64) -> Result<CorrelationCurve> {
    if let Some(&last) = store.gammas().last() {
        if last > t_max {
            return Err(ZetaError::DomainError(format!("store has zeros above T = {t_max}; truncate it first")));
        }
    }
    if !(du > 0.0 && u_max > du) {
        return Err(ZetaError::DomainError("need 0 < du < u_max".into()));
    }
    let start = store.gammas().partition_point(|&g| g < min_height);
    let g = &store.gammas()[start..];
    if g.len() < 10_000 {
        return Err(ZetaError::InsufficientData(format!("pair correlation needs 10^4 zeros, got {}", g.len())));
    }
    let w: Vec<f64> = g.iter().map(|&t| theta_f64(t) / std::f64::consts::PI + 1.0).collect();
    let bins = (u_max / du).round() as usize;
    let counts = w
        .par_chunks(4096)
        .enumerate()
        .map(|(c, chunk)| {
            let mut local = vec![0u64; bins];
            for (k, &wi) in chunk.iter().enumerate() {
                let i = c * 4096 + k;
                for &wj in &w[i + 1..] {
                    let d = wj - wi;
                    if d >= u_max {
                        break;
                    }
                    local[((d / du) as usize).min(bins - 1)] += 1;
                }
            }
            local
        })
        .reduce(|| vec![0u64; bins], |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        });
    // zeros within u_max of the top lack partners; weight by the usable span
    let span = w[w.len() - 1] - w[0];
    let u_grid: Vec<f64> = (0..bins).map(|k| (k as f64 + 0.5) * du).collect();
    let empirical = counts
        .iter()
        .zip(&u_grid)
        .map(|(&c, &u)| c as f64 / ((span - u).max(du) * du))
        .collect();
    let predicted = u_grid.iter().map(|&u| montgomery_density(u)).collect();
    Ok(CorrelationCurve { u_grid, empirical, predicted })
}

/// `(1/T) int_0^T |zeta(1/2+it)|^{2k} dt`.
///
/// `|zeta|` equals `|Z|`, an entire function of `t`, so fixed Gauss-Legendre
/// panels a fraction of a mean zero gap wide are enough.
pub fn moment_empirical(k: u32, t_max: f64, ctx: &PrecisionContext) -> Result<f64> {
    if !(1..=4).contains(&k) {
        return Err(ZetaError::DomainError(format!("moments are computed for 1 <= k <= 4, got {k}")));
    }
    if !(t_max > 0.0 && t_max <= MAX_MOMENT_HEIGHT) {
        return Err(ZetaError::DomainError(format!("moment height must lie in (0, {MAX_MOMENT_HEIGHT}], got {t_max}")));
    }
    let zctx = search_context(ctx);
    let width = 0.5 / f64::from(k);
    let panels = (t_max / width).ceil() as usize;
    let h = t_max / panels as f64;
    let rule = GaussLegendre::new(12);
    let parts: Vec<Result<f64>> = (0..panels)
        .collect::<Vec<_>>()
        .par_chunks(1024)
        .map(|chunk| {
            let mut acc = 0.0;
            for &p in chunk {
                let a = p as f64 * h;
                let mut fail = None;
                acc += rule.integrate(a, a + h, |t| match hardy_z(t, &zctx) {
                    Ok(z) => z.powi(2 * k as i32),
                    Err(e) => {
                        fail.get_or_insert(e);
                        0.0
                    }
                });
                if let Some(e) = fail {
                    return Err(e);
                }
            }
            Ok(acc)
        })
        .collect();
    let mut total = 0.0;
    for p in parts {
        total += p?;
    }
    Ok(total / t_max)
}

/// `G(k+1)^2 / G(2k+1)` from exact Barnes G values.
pub fn moment_leading_factor(k: u32) -> f64 {
    let num: BigUint = barnes_g_integer(k + 1).pow(2);
    let den = barnes_g_integer(2 * k + 1);
    let g = num_integer::Integer::gcd(&num, &den);
    (num / &g).to_f64().unwrap_or(f64::NAN) / (den / g).to_f64().unwrap_or(f64::NAN)
}

/// `sum_m binom(m+k-1, m)^2 x^m`.
fn inner_series(k: u32, x: f64) -> f64 {
    let mut c = 1.0;
    let mut p = 1.0;
    let mut sum = 1.0;
    for m in 1..10_000u32 {
        c *= f64::from(m + k - 1) / f64::from(m);
        p *= x;
        let term = c * c * p;
        sum += term;
        if term < 1e-18 * sum {
            break;
        }
    }
    sum
}

/// Arithmetic factor `prod_p (1 - 1/p)^{k^2} sum_m binom(m+k-1, m)^2 p^{-m}`
/// over primes up to `prime_cutoff`, accumulated in logarithms.
pub fn arithmetic_factor(k: u32, prime_cutoff: u64) -> f64 {
    let kk = f64::from(k * k);
    small_primes(prime_cutoff)
        .iter()
        .map(|&p| {
            let x = 1.0 / p as f64;
            kk * (-x).ln_1p() + inner_series(k, x).ln()
        })
        .sum::<f64>()
        .exp()
}

/// Random-matrix prediction `f_k a(k) (ln T)^{k^2}` for the `2k`-th moment.
pub fn moment_predicted(k: u32, t: f64, prime_cutoff: u64) -> Result<f64> {
    if k == 0 {
        return Err(ZetaError::DomainError("moment order starts at k = 1".into()));
    }
    if prime_cutoff < 1000 {
        return Err(ZetaError::DomainError(format!("prime cutoff must be at least 1000, got {prime_cutoff}")));
    }
    if !(t > 1.0) {
        return Err(ZetaError::DomainError(format!("moment height must exceed 1, got {t}")));
    }
    Ok(moment_leading_factor(k) * arithmetic_factor(k, prime_cutoff) * t.ln().powi((k * k) as i32))
}

pub fn write_histogram_csv(path: &Path, h: &Histogram) -> Result<()> {
    let mut w = csv::Writer::from_path(path).map_err(crate::explicit::csv_error)?;
    w.write_record(["s_lo", "s_hi", "count", "density", "gue"]).map_err(crate::explicit::csv_error)?;
    for (i, (&c, &d)) in h.counts.iter().zip(&h.normalized_density).enumerate() {
        let (a, b) = (h.bin_edges[i], h.bin_edges[i + 1]);
        w.write_record([
            format!("{a:.4}"),
            format!("{b:.4}"),
            c.to_string(),
            format!("{d:.10}"),
            format!("{:.10}", gue_surmise(0.5 * (a + b))),
        ])
        .map_err(crate::explicit::csv_error)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_curve_csv(path: &Path, c: &CorrelationCurve) -> Result<()> {
    let mut w = csv::Writer::from_path(path).map_err(crate::explicit::csv_error)?;
    w.write_record(["u", "empirical", "predicted"]).map_err(crate::explicit::csv_error)?;
    for ((u, e), p) in c.u_grid.iter().zip(&c.empirical).zip(&c.predicted) {
        w.write_record([format!("{u:.4}"), format!("{e:.10}"), format!("{p:.10}")]).map_err(crate::explicit::csv_error)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::integrate_adaptive;
    use crate::zeros::{find_zeros_up_to, Provenance};
    use std::sync::OnceLock;

    fn zeros() -> &'static ZeroStore {
        static Z: OnceLock<ZeroStore> = OnceLock::new();
        Z.get_or_init(|| find_zeros_up_to(12_000.0, &PrecisionContext::double()).unwrap())
    }

    #[test]
    fn surmise_is_a_unit_mean_density() {
        assert_eq!(gue_surmise(0.0), 0.0);
        let mass = integrate_adaptive(gue_surmise, 0.0, 12.0, 1e-15, 1e-14, 200).unwrap().value;
        let mean = integrate_adaptive(|s: f64| s * gue_surmise(s), 0.0, 12.0, 1e-15, 1e-14, 200).unwrap().value;
        assert!((mass - 1.0).abs() < 1e-10);
        assert!((mean - 1.0).abs() < 1e-10);
    }

    #[test]
    fn first_unfolded_gap() {
        let p = Provenance::Imported { source: "inline".into(), sha256: String::new() };
        let s = ZeroStore::new(vec![14.134725142, 21.022039639], vec![5e-10; 2], p).unwrap();
        let loose = unfold(&s, UnfoldRule::LogHeight).unwrap();
        assert!((loose[0] - 2.903).abs() < 1e-3);
        let dense = unfold(&s, UnfoldRule::CountingDensity).unwrap();
        assert!((dense[0] - 6.887314497 * (14.134725142f64 / std::f64::consts::TAU).ln() / std::f64::consts::TAU).abs() < 1e-8);
        assert!(unfold(&s.truncated(1), UnfoldRule::default()).is_err());
    }

    #[test]
    fn unfolded_spacings_have_unit_mean() {
        let s = unfold(zeros(), UnfoldRule::CountingDensity).unwrap();
        assert!(s.iter().all(|&v| v > 0.0));
        let upper = &s[5000..];
        let mean = upper.iter().sum::<f64>() / upper.len() as f64;
        assert!((mean - 1.0).abs() < 0.02, "{mean}");
    }

    #[test]
    fn histogram_mass_and_repulsion() {
        let r = spacing_histogram(zeros(), 0.05, DEFAULT_MIN_HEIGHT, UnfoldRule::default()).unwrap();
        assert!((r.histogram.total_mass() - 1.0).abs() < 1e-12);
        assert!(r.histogram.bin_edges.windows(2).all(|w| w[1] > w[0]));
        assert!(r.histogram.normalized_density[0] < 0.02);
        assert!(r.sup_distance < 0.2, "{}", r.sup_distance);
        // uncorrelated levels would sit far from the histogram
        let poisson = r.histogram.midpoints().iter().zip(&r.histogram.normalized_density).map(|(m, d)| (d - (-m).exp()).abs()).fold(0.0, f64::max);
        assert!(poisson > 3.0 * r.sup_distance);
        let fine = spacing_histogram(zeros(), 0.025, DEFAULT_MIN_HEIGHT, UnfoldRule::default()).unwrap();
        assert!(fine.spacings_used == r.spacings_used);
        assert!(spacing_histogram(&zeros().truncated(500), 0.05, 0.0, UnfoldRule::default()).is_err());
    }

    #[test]
    fn histogram_from_known_samples() {
        let h = Histogram::from_samples(&[0.01, 0.06, 0.07, 0.2], 0.05).unwrap();
        assert_eq!(h.counts, vec![1, 2, 0, 0, 1]);
        assert!((h.total_mass() - 1.0).abs() < 1e-15);
        assert!(Histogram::from_samples(&[], 0.05).is_err());
    }

    #[test]
    fn montgomery_curve_shape() {
        assert_eq!(montgomery_density(0.0), 0.0);
        for n in 1..6 {
            assert!((montgomery_density(n as f64) - 1.0).abs() < 1e-15);
        }
        assert!(montgomery_density(1e-4) < 1e-7);
        let c = pair_correlation(zeros(), 12_000.0, DEFAULT_MIN_HEIGHT, 0.05, 3.0).unwrap();
        assert!(c.empirical.iter().all(|&e| e >= 0.0));
        assert!(c.empirical[0] < 0.05);
        assert!(c.sup_distance(0.05, 3.0) < 0.2, "{}", c.sup_distance(0.05, 3.0));
        assert!(pair_correlation(zeros(), 5000.0, 0.0, 0.05, 3.0).is_err());
    }

    #[test]
    fn chunked_import_gives_same_statistics() {
        let all = zeros();
        let g = all.gammas();
        let (a, b) = g.split_at(g.len() / 2);
        let mut joined = a.to_vec();
        joined.extend_from_slice(b);
        let p = Provenance::Imported { source: "chunks".into(), sha256: String::new() };
        let again = ZeroStore::new(joined, all.error_bounds().to_vec(), p).unwrap();
        assert_eq!(unfold(all, UnfoldRule::default()).unwrap(), unfold(&again, UnfoldRule::default()).unwrap());
    }

    #[test]
    fn leading_factors() {
        assert_eq!(moment_leading_factor(1), 1.0);
        assert!((moment_leading_factor(2) - 1.0 / 12.0).abs() < 1e-17);
        let fact = |n: u32| (1..=n).map(f64::from).product::<f64>();
        assert!((moment_leading_factor(3) / (42.0 / fact(9)) - 1.0).abs() < 1e-14);
        assert!((moment_leading_factor(4) / (24024.0 / fact(16)) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn arithmetic_factor_closed_forms() {
        let p = 100_000;
        assert!((arithmetic_factor(1, p) - 1.0).abs() < 1e-12);
        // a(2) = prod (1 - p^-2) -> 6 / pi^2
        let a2 = arithmetic_factor(2, 1_000_000);
        let ingham = 1.0 / (2.0 * std::f64::consts::PI.powi(2));
        assert!((moment_leading_factor(2) * a2 / ingham - 1.0).abs() < 1e-6);
        let primes = small_primes(p);
        let closed3: f64 = primes.iter().map(|&q| { let x = 1.0 / q as f64; 4.0 * (-x).ln_1p() + (1.0 + 4.0 * x + x * x).ln() }).sum::<f64>().exp();
        assert!((arithmetic_factor(3, p) / closed3 - 1.0).abs() < 1e-12);
        let closed4: f64 = primes.iter().map(|&q| { let x = 1.0 / q as f64; 9.0 * (-x).ln_1p() + (1.0 + 9.0 * x + 9.0 * x * x + x * x * x).ln() }).sum::<f64>().exp();
        assert!((arithmetic_factor(4, p) / closed4 - 1.0).abs() < 1e-12);
        assert!(moment_predicted(2, 1e3, 999).is_err());
    }

    #[test]
    fn second_moment_small_height() {
        let ctx = PrecisionContext::double();
        let m = moment_empirical(1, 2000.0, &ctx).unwrap();
        // mean value of |zeta|^2 is ln(T/2 pi) + 2 gamma - 1 to leading order
        let hl = (2000f64 / std::f64::consts::TAU).ln() + 2.0 * 0.5772156649015329 - 1.0;
        assert!((m / hl - 1.0).abs() < 0.02, "{m} vs {hl}");
        assert!(moment_empirical(5, 100.0, &ctx).is_err());
        assert!(moment_empirical(1, 2e5, &ctx).is_err());
    }
}
