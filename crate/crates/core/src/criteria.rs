//! Numerical checks of statements equivalent to, or implied by, the Riemann
//! hypothesis.
//!
//! Integer inputs (divisor sums, Moebius sums, prime counts) come from exact
//! tables; only the comparison functions are floating point.

use std::path::Path;

use num_complex::Complex;
use rayon::prelude::*;

use crate::arithmetic::{prime_pi, SieveTable};
use crate::error::{Result, ZetaError};
use crate::precision::{DoubleDouble, PrecisionContext, Real};
use crate::quadrature::{integrate_adaptive, integrate_tanh_sinh, GaussLegendre};
use crate::special::{hardy_z, li_real, zeta};
use crate::zeros::{find_zeros_up_to, search_context};

/// Robin's inequality is claimed only above this `n`.
pub const ROBIN_START: u64 = 5040;
/// Lower end of the explicit prime-counting error bound.
pub const SCHOENFELD_START: f64 = 2657.0;
/// Relative margin below which a Robin point counts as a near miss.
pub const DEFAULT_NEAR_MISS: f64 = 0.10;

const CHUNK: usize = 1 << 14;

/// Worst case of a scanned inequality. Margins are signed, positive when the
/// inequality holds.
#[derive(Debug, Clone, PartialEq)]
pub struct CriterionReport {
    pub name: String,
    /// Closed range of `n` or `x` that decides `passed`.
    pub domain: (f64, f64),
    pub points_checked: u64,
    pub worst_margin: f64,
    pub worst_location: f64,
    pub passed: bool,
    /// Points outside `domain` where the inequality holds with equality.
    pub boundary_equalities: Vec<f64>,
}

/// One line of a per-point criterion table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriterionRow {
    pub at: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
}

/// Robin scan together with the points that come within the near-miss ratio.
#[derive(Debug, Clone, PartialEq)]
pub struct RobinScan {
    pub report: CriterionReport,
    pub near_miss_ratio: f64,
    pub near_misses: Vec<u64>,
}

/// Mertens scan with the largest normalised excursion.
#[derive(Debug, Clone, PartialEq)]
pub struct MertensScan {
    pub report: CriterionReport,
    pub max_ratio: f64,
    pub max_ratio_at: u64,
}

/// Truncated integral criterion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralCriterion {
    pub value: f64,
    pub target: f64,
    pub quadrature_error: f64,
    /// Rough size of the neglected part of the domain.
    pub tail_estimate: f64,
    pub t_max: f64,
}

impl IntegralCriterion {
    pub fn deviation(&self) -> f64 {
        self.value - self.target
    }
}

fn check_limit(n: u64, limit: u64) -> Result<()> {
    if n > limit {
        Err(ZetaError::OutOfRange { value: n as f64, limit })
    } else {
        Ok(())
    }
}

/// Folds `(margin, location)` pairs keeping the smallest margin and, on ties,
/// the smallest location.
fn worst(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    if b.0 < a.0 || (b.0 == a.0 && b.1 < a.1) {
        b
    } else {
        a
    }
}

fn chunked_min(lo: u64, hi: u64, margin: impl Fn(u64) -> f64 + Sync) -> (f64, f64) {
    if hi < lo {
        return (f64::INFINITY, f64::NAN);
    }
    let starts: Vec<u64> = (lo..=hi).step_by(CHUNK).collect();
    let parts: Vec<(f64, f64)> = starts
        .par_iter()
        .map(|&s| {
            let e = (s + CHUNK as u64 - 1).min(hi);
            (s..=e).fold((f64::INFINITY, f64::NAN), |acc, n| worst(acc, (margin(n), n as f64)))
        })
        .collect();
    parts.into_iter().fold((f64::INFINITY, f64::NAN), worst)
}

fn report(name: &str, domain: (f64, f64), points: u64, (m, at): (f64, f64), boundary: Vec<f64>) -> CriterionReport {
    CriterionReport {
        name: name.into(),
        domain,
        points_checked: points,
        worst_margin: m,
        worst_location: at,
        passed: points > 0 && m > 0.0,
        boundary_equalities: boundary,
    }
}

/// `H_n` for `n = 0..=n_max` as double-double running sums.
pub fn harmonic_prefix(n_max: u64) -> Vec<DoubleDouble> {
    let mut h = Vec::with_capacity(n_max as usize + 1);
    let mut acc = DoubleDouble::from_f64(0.0);
    h.push(acc);
    for j in 1..=n_max {
        acc += DoubleDouble::from_f64(1.0) / DoubleDouble::from_f64(j as f64);
        h.push(acc);
    }
    h
}

fn lagarias_row(n: u64, h: DoubleDouble, sigma: &[u64]) -> CriterionRow {
    let rhs = h + h.exp() * h.ln();
    let lhs = sigma[n as usize] as f64;
    CriterionRow { at: n as f64, lhs, rhs: rhs.to_f64(), margin: (rhs - DoubleDouble::from_f64(lhs)).to_f64() }
}

/// `sigma(n) <= H_n + exp(H_n) ln H_n` for `1 <= n <= n_max`.
///
/// `sigma` is a divisor-sum table. `n = 1` is an exact equality and is
/// recorded as a boundary point; the report covers `2..=n_max`.
pub fn lagarias_scan(n_max: u64, sigma: &[u64]) -> Result<CriterionReport> {
    check_limit(n_max, sigma.len().saturating_sub(1) as u64)?;
    let h = harmonic_prefix(n_max);
    let w = chunked_min(2, n_max, |n| lagarias_row(n, h[n as usize], sigma).margin);
    let boundary = if n_max >= 1 && lagarias_row(1, h[1], sigma).margin == 0.0 { vec![1.0] } else { vec![] };
    Ok(report("lagarias", (2.0, n_max as f64), n_max.saturating_sub(1), w, boundary))
}

fn robin_rhs(n: u64) -> f64 {
    let nf = n as f64;
    f64::euler_gamma().exp() * nf * nf.ln().ln()
}

/// `sigma(n) < e^gamma n ln ln n` for `5040 < n <= n_max`, with the list of
/// `n` whose relative margin is below `near_miss_ratio`.
pub fn robin_scan(n_max: u64, sigma: &[u64], near_miss_ratio: f64) -> Result<RobinScan> {
    check_limit(n_max, sigma.len().saturating_sub(1) as u64)?;
    let lo = ROBIN_START + 1;
    let margin = |n: u64| robin_rhs(n) - sigma[n as usize] as f64;
    let w = chunked_min(lo, n_max, margin);
    let near_misses = if n_max >= lo {
        (lo..=n_max).filter(|&n| margin(n) < near_miss_ratio * robin_rhs(n)).collect()
    } else {
        Vec::new()
    };
    Ok(RobinScan {
        report: report("robin", (lo as f64, n_max as f64), n_max.saturating_sub(ROBIN_START), w, vec![]),
        near_miss_ratio,
        near_misses,
    })
}

/// `n` geometrically spaced points from `lo` to `hi`.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n < 2 {
        return vec![lo];
    }
    let (a, b) = (lo.ln(), hi.ln());
    (0..n).map(|k| if k + 1 == n { hi } else { (a + (b - a) * k as f64 / (n - 1) as f64).exp() }).collect()
}

fn schoenfeld_row(x: f64, table: &SieveTable, ctx: &PrecisionContext) -> Result<CriterionRow> {
    let pi = prime_pi(x, table)? as f64;
    let lhs = (pi - li_real(x, ctx)?).abs();
    let rhs = x.sqrt() * x.ln() / (8.0 * std::f64::consts::PI);
    Ok(CriterionRow { at: x, lhs, rhs, margin: rhs - lhs })
}

/// `|pi(x) - li(x)| <= sqrt(x) ln x / (8 pi)` on the grid points `x >= 2657`.
pub fn schoenfeld_gap(x_grid: &[f64], table: &SieveTable, ctx: &PrecisionContext) -> Result<CriterionReport> {
    let dctx = ctx.as_double();
    if let Some(&x) = x_grid.iter().find(|&&x| x > table.limit() as f64) {
        return Err(ZetaError::OutOfRange { value: x, limit: table.limit() });
    }
    let pts: Vec<f64> = x_grid.iter().copied().filter(|&x| x >= SCHOENFELD_START).collect();
    let mut w = (f64::INFINITY, f64::NAN);
    for &x in &pts {
        w = worst(w, (schoenfeld_row(x, table, &dctx)?.margin, x));
    }
    let domain = (pts.first().copied().unwrap_or(SCHOENFELD_START), pts.last().copied().unwrap_or(SCHOENFELD_START));
    Ok(report("schoenfeld", domain, pts.len() as u64, w, vec![]))
}

/// `|M(n)| < sqrt(n)` for `2 <= n <= n_max`; `n = 1` is the equality `1 = 1`.
pub fn mertens_bound(n_max: u64, table: &SieveTable) -> Result<MertensScan> {
    check_limit(n_max, table.limit())?;
    let mut m = 0i64;
    let mut w = (f64::INFINITY, f64::NAN);
    let mut max_ratio = 0.0;
    let mut max_ratio_at = 1;
    let mut boundary = Vec::new();
    for n in 1..=n_max {
        m += i64::from(table.mobius(n));
        let root = (n as f64).sqrt();
        let margin = root - m.abs() as f64;
        if n == 1 {
            if margin == 0.0 {
                boundary.push(1.0);
            }
            continue;
        }
        w = worst(w, (margin, n as f64));
        let ratio = m.abs() as f64 / root;
        if ratio > max_ratio {
            max_ratio = ratio;
            max_ratio_at = n;
        }
    }
    Ok(MertensScan {
        report: report("mertens", (2.0, n_max as f64), n_max.saturating_sub(1), w, boundary),
        max_ratio,
        max_ratio_at,
    })
}

/// `M(n) / sqrt(n)` sampled every `stride` steps.
pub fn mertens_trajectory(n_max: u64, stride: u64, table: &SieveTable) -> Result<Vec<(u64, f64)>> {
    check_limit(n_max, table.limit())?;
    let stride = stride.max(1);
    let mut m = 0i64;
    let mut out = Vec::with_capacity((n_max / stride) as usize + 1);
    for n in 1..=n_max {
        m += i64::from(table.mobius(n));
        if n % stride == 0 || n == n_max {
            out.push((n, m as f64 / (n as f64).sqrt()));
        }
    }
    Ok(out)
}

/// Per-point rows for a criterion, every `stride`-th point of its domain.
pub fn lagarias_rows(n_max: u64, sigma: &[u64], stride: u64) -> Result<Vec<CriterionRow>> {
    check_limit(n_max, sigma.len().saturating_sub(1) as u64)?;
    let h = harmonic_prefix(n_max);
    Ok((1..=n_max).step_by(stride.max(1) as usize).map(|n| lagarias_row(n, h[n as usize], sigma)).collect())
}

pub fn robin_rows(n_max: u64, sigma: &[u64], stride: u64) -> Result<Vec<CriterionRow>> {
    check_limit(n_max, sigma.len().saturating_sub(1) as u64)?;
    Ok((ROBIN_START + 1..=n_max)
        .step_by(stride.max(1) as usize)
        .map(|n| {
            let rhs = robin_rhs(n);
            let lhs = sigma[n as usize] as f64;
            CriterionRow { at: n as f64, lhs, rhs, margin: rhs - lhs }
        })
        .collect())
}

pub fn schoenfeld_rows(x_grid: &[f64], table: &SieveTable, ctx: &PrecisionContext) -> Result<Vec<CriterionRow>> {
    x_grid.iter().map(|&x| schoenfeld_row(x, table, &ctx.as_double())).collect()
}

pub fn mertens_rows(n_max: u64, table: &SieveTable, stride: u64) -> Result<Vec<CriterionRow>> {
    check_limit(n_max, table.limit())?;
    let stride = stride.max(1);
    let mut m = 0i64;
    let mut out = Vec::new();
    for n in 1..=n_max {
        m += i64::from(table.mobius(n));
        if (n - 1) % stride == 0 {
            let rhs = (n as f64).sqrt();
            out.push(CriterionRow { at: n as f64, lhs: m.abs() as f64, rhs, margin: rhs - m.abs() as f64 });
        }
    }
    Ok(out)
}

/// Writes `label, lhs, rhs, margin` rows.
pub fn write_rows_csv(path: &Path, label: &str, rows: &[CriterionRow]) -> Result<()> {
    let mut w = csv::Writer::from_path(path).map_err(crate::explicit::csv_error)?;
    w.write_record([label, "lhs", "rhs", "margin"]).map_err(crate::explicit::csv_error)?;
    for r in rows {
        let at = if r.at.fract() == 0.0 { format!("{}", r.at as u64) } else { format!("{:.6}", r.at) };
        w.write_record([at, format!("{:.12e}", r.lhs), format!("{:.12e}", r.rhs), format!("{:.12e}", r.margin)])
            .map_err(crate::explicit::csv_error)?;
    }
    w.flush()?;
    Ok(())
}

/// Plain-text summary, one `key: value` block per report.
pub fn format_report(r: &CriterionReport) -> String {
    let mut s = format!(
        "criterion: {}\ndomain: {} .. {}\npoints: {}\nworst_margin: {:.12e}\nworst_location: {}\npassed: {}\n",
        r.name, r.domain.0, r.domain.1, r.points_checked, r.worst_margin, r.worst_location, r.passed
    );
    if !r.boundary_equalities.is_empty() {
        let pts: Vec<String> = r.boundary_equalities.iter().map(|v| v.to_string()).collect();
        s.push_str(&format!("boundary_equalities: {}\n", pts.join(",")));
    }
    s
}

fn ln_abs_z(t: f64, ctx: &PrecisionContext) -> Result<f64> {
    Ok(hardy_z(t, ctx)?.abs().max(f64::MIN_POSITIVE).ln())
}

/// `int_{-T}^{T} ln|zeta(1/2+it)| / (1/4 + t^2) dt`, which tends to 0 as
/// `T -> infinity` exactly when RH holds.
///
/// The range is split at every zero below `T` so each logarithmic
/// singularity sits at a panel end, where tanh-sinh handles it.
pub fn balazard_integral(t_max: f64, ctx: &PrecisionContext) -> Result<IntegralCriterion> {
    if !(t_max >= 100.0) {
        return Err(ZetaError::DomainError(format!("the truncated integral needs t_max >= 100, got {t_max}")));
    }
    let zctx = search_context(ctx);
    let zeros = find_zeros_up_to(t_max, ctx)?;
    let mut cuts = vec![0.0];
    cuts.extend(zeros.gammas().iter().copied().filter(|&g| g < t_max));
    cuts.push(t_max);
    let panels: Vec<(f64, f64)> = cuts.windows(2).map(|w| (w[0], w[1])).collect();
    let parts: Vec<Result<(f64, f64, f64)>> = panels
        .par_iter()
        .map(|&(a, b)| {
            let mut fail = None;
            let r = integrate_tanh_sinh(
                |t, _| match ln_abs_z(t, &zctx) {
                    Ok(v) => v / (0.25 + t * t),
                    Err(e) => {
                        fail.get_or_insert(e);
                        0.0
                    }
                },
                a,
                b,
                1e-11,
                12,
            )?;
            if let Some(e) = fail {
                return Err(e);
            }
            // mean of |ln|zeta|| over the upper half feeds the tail estimate
            let mut abs_part = 0.0;
            if a >= 0.5 * t_max {
                abs_part = GaussLegendre::new(24).integrate(a, b, |t| ln_abs_z(t, &zctx).map(f64::abs).unwrap_or(0.0));
            }
            Ok((r.value, r.error, abs_part))
        })
        .collect();
    let (mut value, mut err, mut upper_abs) = (0.0, 0.0, 0.0);
    for p in parts {
        let (v, e, u) = p?;
        value += v;
        err += e;
        upper_abs += u;
    }
    // integrand is even in t
    let mean_abs = upper_abs / (t_max - cuts.iter().copied().find(|&c| c >= 0.5 * t_max).unwrap_or(t_max)).max(1.0);
    Ok(IntegralCriterion {
        value: 2.0 * value,
        target: 0.0,
        quadrature_error: 2.0 * err,
        tail_estimate: 2.0 * mean_abs / t_max,
        t_max,
    })
}

/// `pi (3 - gamma) / 32`.
pub fn volchkov_target() -> f64 {
    std::f64::consts::PI * (3.0 - f64::euler_gamma()) / 32.0
}

fn volchkov_weight(t: f64) -> f64 {
    let d = 1.0 + 4.0 * t * t;
    (1.0 - 12.0 * t * t) / (d * d * d)
}

/// `int_{1/2}^{sigma_max} ln|zeta(sigma + it)| d sigma`, split at `sigma = 1`
/// so the pole at `t = 0` and zeros on the line sit at panel ends.
fn volchkov_inner(t: f64, sigma_max: f64, ctx: &PrecisionContext) -> Result<(f64, f64)> {
    let mut fail = None;
    let mut f = |s: f64, _d: f64| match zeta(Complex::new(s, t), ctx) {
        Ok(z) => z.value.norm().max(f64::MIN_POSITIVE).ln(),
        Err(e) => {
            fail.get_or_insert(e);
            0.0
        }
    };
    let a = integrate_tanh_sinh(&mut f, 0.5, 1.0, 1e-12, 10)?;
    let b = integrate_tanh_sinh(&mut f, 1.0, 3.0, 1e-12, 10)?;
    let c = integrate_tanh_sinh(&mut f, 3.0, sigma_max, 1e-12, 10)?;
    if let Some(e) = fail {
        return Err(e);
    }
    Ok((a.value + b.value + c.value, a.error + b.error + c.error))
}

/// The double integral `int_0^T w(t) int_{1/2}^{S} ln|zeta(sigma+it)| d sigma dt`
/// with `w(t) = (1 - 12 t^2)/(1 + 4 t^2)^3`; RH holds exactly when the
/// untruncated value is `pi (3 - gamma)/32`.
pub fn volchkov_integral(t_max: f64, sigma_max: f64, ctx: &PrecisionContext) -> Result<IntegralCriterion> {
    if !(t_max >= 50.0 && sigma_max >= 10.0) {
        return Err(ZetaError::DomainError(format!(
            "the truncated double integral needs t_max >= 50 and sigma_max >= 10, got {t_max}, {sigma_max}"
        )));
    }
    let zctx = ctx.as_double();
    let zeros = find_zeros_up_to(t_max, ctx)?;
    let mut cuts = vec![0.0];
    cuts.extend(zeros.gammas().iter().copied().filter(|&g| g < t_max));
    cuts.push(t_max);
    let panels: Vec<(f64, f64)> = cuts.windows(2).map(|w| (w[0], w[1])).collect();
    let parts: Vec<Result<(f64, f64)>> = panels
        .par_iter()
        .map(|&(a, b)| {
            let mut fail = None;
            let q = integrate_adaptive(
                |t: f64| match volchkov_inner(t, sigma_max, &zctx) {
                    Ok((v, _)) => volchkov_weight(t) * v,
                    Err(e) => {
                        fail.get_or_insert(e);
                        0.0
                    }
                },
                a,
                b,
                1e-13,
                1e-10,
                200,
            )?;
            if let Some(e) = fail {
                return Err(e);
            }
            Ok((q.value, q.error))
        })
        .collect();
    let (mut value, mut err) = (0.0, 0.0);
    for p in parts {
        let (v, e) = p?;
        value += v;
        err += e;
    }
    // sigma tail: ln|zeta| <= -ln(1 - 2^{1-sigma}) ~ 2^{1-sigma}; weight integrates to at most 1/2
    let sigma_tail = 0.5 * 2f64.powf(1.0 - sigma_max) / std::f64::consts::LN_2;
    // t tail: |w| < 3/(16 t^4) and the inner integral grows at most like ln t
    let inner_end = volchkov_inner(t_max, sigma_max, &zctx)?.0.abs().max(t_max.ln());
    let t_tail = inner_end / (16.0 * t_max.powi(3));
    Ok(IntegralCriterion {
        value,
        target: volchkov_target(),
        quadrature_error: err,
        tail_estimate: sigma_tail + t_tail,
        t_max,
    })
}
