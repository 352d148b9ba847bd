//! Zero search by sign changes of Hardy's Z between Gram points, with a
//! Turing-style certificate that no zero was missed.
//!
//! Gram points with `(-1)^n Z(g_n) > 0` are "good". A block between two
//! consecutive good points `g_a < g_b` normally holds `b - a` zeros; the mesh
//! inside a block is bisected until that many sign changes appear or the
//! refinement cap is hit. Completeness below `t1` then follows from
//! `|int_{t1}^{t2} S(t) dt| <= 2.067 + 0.059 ln t2` (valid for
//! `t2 > t1 > 168 pi`) with `S(t) = N(t) - theta(t)/pi - 1`: if `E` zeros
//! below `t1` were missed then `E (t2 - t1) <= 2.067 + 0.059 ln t2 - int S_found`,
//! so a right-hand side below `t2 - t1` forces `E = 0`.

use rayon::prelude::*;

use crate::error::{Result, ZetaError};
use crate::precision::{DoubleDouble, PrecisionContext};
use crate::quadrature::GaussLegendre;
use crate::roots::brent;
use crate::special::{gram_index_below, gram_points, hardy_z_eval, theta_f64};
use crate::zeros::{Provenance, ZeroStore, MAX_SEARCH_HEIGHT};

/// Smallest lower limit for the integral bound on `S(t)`, just above `168 pi`.
pub const TURING_MIN_HEIGHT: f64 = 530.0;
/// Gram intervals used beyond `t1` for the certificate.
const TURING_INTERVALS: i64 = 30;
/// Extra Gram points computed so the certificate interval can end on a good point.
const TURING_SLACK: i64 = 60;
/// Each Gram interval is split at most `2^MAX_REFINEMENT` times.
const MAX_REFINEMENT: u32 = 10;
/// Riemann-Siegel is accurate to `< 5e-11` from here on, ample for locating zeros.
const SEARCH_RS_SWITCHOVER: f64 = 2000.0;
/// Zeros up to this height are re-polished in double-double when more than
/// 15 digits are requested.
const POLISH_MAX_HEIGHT: f64 = 1e3;

/// Search diagnostics alongside the store.
#[derive(Debug, Clone)]
pub struct SearchReport {
    pub store: ZeroStore,
    /// All zeros found up to `turing_t2`, before trimming to the requested height.
    pub found_to_t2: Vec<f64>,
    pub gram_intervals: usize,
    pub evaluations: usize,
    /// Blocks that needed mesh refinement past the Gram points.
    pub refined_blocks: usize,
    pub turing_t1: f64,
    pub turing_t2: f64,
    /// Upper bound on the number of missed zeros below `turing_t1`; below 1
    /// certifies completeness.
    pub turing_bound: f64,
}

/// The context used for Z evaluations during the search.
pub fn search_context(ctx: &PrecisionContext) -> PrecisionContext {
    ctx.as_double().with_rs_switchover(ctx.rs_switchover().min(SEARCH_RS_SWITCHOVER))
}

#[derive(Clone, Copy)]
struct Sample {
    t: f64,
    z: f64,
    bound: f64,
}

#[derive(Clone, Copy)]
struct Located {
    gamma: f64,
    bound: f64,
    lo: f64,
    hi: f64,
}

fn sample(t: f64, ctx: &PrecisionContext) -> Result<Sample> {
    let (z, bound) = hardy_z_eval(t, ctx)?;
    Ok(Sample { t, z, bound })
}

/// All zeros `1/2 + i gamma` with `0 < gamma <= t_max`, certified complete.
pub fn find_zeros_up_to(t_max: f64, ctx: &PrecisionContext) -> Result<ZeroStore> {
    Ok(search(t_max, ctx)?.store)
}

/// [`find_zeros_up_to`] with diagnostics.
pub fn search(t_max: f64, ctx: &PrecisionContext) -> Result<SearchReport> {
    if !(t_max.is_finite() && t_max >= 0.0) {
        return Err(ZetaError::DomainError(format!("search height must be finite and >= 0, got {t_max}")));
    }
    if t_max > MAX_SEARCH_HEIGHT {
        return Err(ZetaError::DomainError(format!(
            "in-process search is capped at height {MAX_SEARCH_HEIGHT:e}; import a zero table for {t_max:e}"
        )));
    }
    let sctx = search_context(ctx);
    let t1 = t_max.max(TURING_MIN_HEIGHT);
    let first_after = gram_index_below(t1) + 1;
    let last = first_after + TURING_INTERVALS + TURING_SLACK;
    let grams = gram_points(-1, last);
    let samples: Vec<Sample> = grams.par_iter().map(|&g| sample(g, &sctx)).collect::<Result<_>>()?;
    let mut evaluations = samples.len();

    let is_good = |i: usize| {
        let n = i as i64 - 1;
        let s = if n.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        s * samples[i].z > samples[i].bound
    };
    let good: Vec<usize> = (0..samples.len()).filter(|&i| is_good(i)).collect();
    if good.first() != Some(&0) {
        return Err(ZetaError::MissedZeroSuspected {
            height: grams[0],
            detail: "the first Gram point does not have the expected sign".into(),
        });
    }
    // the certificate runs from t1 to the first good Gram point past t1 + TURING_INTERVALS
    let target = (first_after + TURING_INTERVALS + 1) as usize;
    let end = *good.iter().find(|&&i| i >= target).ok_or_else(|| ZetaError::MissedZeroSuspected {
        height: grams[grams.len() - 1],
        detail: "no good Gram point found to close the certificate interval".into(),
    })?;
    let blocks: Vec<(usize, usize)> =
        good.windows(2).map(|w| (w[0], w[1])).take_while(|&(a, _)| a < end).collect();

    let results: Vec<Result<(Vec<Located>, usize, bool)>> =
        blocks.par_iter().map(|&(a, b)| process_block(&samples[a..=b], &sctx)).collect();
    let mut located = Vec::new();
    let mut refined_blocks = 0;
    for r in results {
        let (zeros, evals, refined) = r?;
        evaluations += evals;
        refined_blocks += usize::from(refined);
        located.extend(zeros);
    }
    let t2 = grams[end];
    let found: Vec<f64> = located.iter().map(|z| z.gamma).collect();
    let turing_bound = turing_certificate(&found, t1, t2);
    if !(turing_bound < 1.0) {
        return Err(ZetaError::MissedZeroSuspected {
            height: t1,
            detail: format!("missed-zero bound {turing_bound:.3} is not below 1 on [{t1:.3}, {t2:.3}]"),
        });
    }

    let mut keep: Vec<Located> = located.into_iter().filter(|z| z.gamma <= t_max).collect();
    let mut digits = 0u32;
    if ctx.digits() > 15 {
        let dctx = PrecisionContext::for_digits(ctx.digits())?;
        dctx.require::<DoubleDouble>()?;
        let polished: Vec<Result<Located>> = keep
            .par_iter()
            .map(|z| if z.gamma <= POLISH_MAX_HEIGHT { polish(z, &dctx) } else { Ok(*z) })
            .collect();
        keep = polished.into_iter().collect::<Result<_>>()?;
        evaluations += 6 * keep.iter().filter(|z| z.gamma <= POLISH_MAX_HEIGHT).count();
    }
    if let Some(worst) = keep.iter().map(|z| z.bound).reduce(f64::max) {
        digits = (-worst.log10()).floor().clamp(0.0, 30.0) as u32;
    }
    let gammas: Vec<f64> = keep.iter().map(|z| z.gamma).collect();
    let bounds: Vec<f64> = keep.iter().map(|z| z.bound).collect();
    let store = ZeroStore::new(gammas, bounds, Provenance::Computed { certified_height: t_max, digits })?;
    Ok(SearchReport {
        store,
        found_to_t2: found,
        gram_intervals: end,
        evaluations,
        refined_blocks,
        turing_t1: t1,
        turing_t2: t2,
        turing_bound,
    })
}

fn sign_changes(mesh: &[Sample]) -> usize {
    mesh.windows(2).filter(|w| w[0].z * w[1].z < 0.0).count()
}

fn process_block(points: &[Sample], ctx: &PrecisionContext) -> Result<(Vec<Located>, usize, bool)> {
    let expected = points.len() - 1;
    let mut mesh = points.to_vec();
    let mut evaluations = 0;
    let mut level = 0;
    while sign_changes(&mesh) < expected && level < MAX_REFINEMENT {
        let mut next = Vec::with_capacity(2 * mesh.len());
        for w in mesh.windows(2) {
            next.push(w[0]);
            next.push(sample(0.5 * (w[0].t + w[1].t), ctx)?);
            evaluations += 1;
        }
        next.push(mesh[mesh.len() - 1]);
        mesh = next;
        level += 1;
    }
    let mut zeros = Vec::with_capacity(expected);
    for w in mesh.windows(2) {
        if w[0].z * w[1].z < 0.0 {
            let (z, evals) = locate(w[0], w[1], ctx)?;
            evaluations += evals;
            zeros.push(z);
        }
    }
    Ok((zeros, evaluations, level > 0))
}

fn locate(a: Sample, b: Sample, ctx: &PrecisionContext) -> Result<(Located, usize)> {
    let mut evals = 0usize;
    let mut failure = None;
    let (lo, hi) = brent(
        |t| {
            evals += 1;
            match hardy_z_eval(t, ctx) {
                Ok((z, _)) => z,
                Err(e) => {
                    failure.get_or_insert(e);
                    0.0
                }
            }
        },
        a.t,
        b.t,
        a.z,
        b.z,
        4.0 * f64::EPSILON * b.t,
        200,
    );
    if let Some(e) = failure {
        return Err(e);
    }
    let gamma = 0.5 * (lo + hi);
    // local slope from a symmetric difference converts the Z error into a t error
    let h = 1e-6 * (b.t - a.t).max(1e-3);
    let (zp, bp) = hardy_z_eval(gamma + h, ctx)?;
    let (zm, bm) = hardy_z_eval(gamma - h, ctx)?;
    evals += 2;
    let slope = ((zp - zm) / (2.0 * h)).abs();
    let z_bound = bp.max(bm);
    let bound = 0.5 * (hi - lo) + if slope > 0.0 { 2.0 * z_bound / slope } else { hi - lo };
    Ok((Located { gamma, bound: bound.max(f64::EPSILON * gamma), lo: a.t, hi: b.t }, evals))
}

/// Regula falsi in double-double started from the `f64` zero.
fn polish(z: &Located, ctx: &PrecisionContext) -> Result<Located> {
    let zdd = |t: DoubleDouble| -> Result<(DoubleDouble, f64)> { hardy_z_eval(t, ctx) };
    let step = (z.bound * 4.0).max(1e-12 * z.gamma).min(0.25 * (z.hi - z.lo));
    let mut a = DoubleDouble::from_f64(z.gamma - step);
    let mut b = DoubleDouble::from_f64(z.gamma + step);
    let (mut fa, _) = zdd(a)?;
    let (mut fb, _) = zdd(b)?;
    if (fa * fb).to_f64() > 0.0 {
        // the f64 bracket was too tight to straddle in higher precision; keep the f64 value
        return Ok(*z);
    }
    let mut best = (a, fa, 0.0);
    for _ in 0..8 {
        let c = b - fb * (b - a) / (fb - fa);
        let (fc, bc) = zdd(c)?;
        best = (c, fc, bc);
        if (fc * fb).to_f64() < 0.0 {
            a = b;
            fa = fb;
        } else {
            // Illinois down-weighting keeps the bracket shrinking from both sides
            fa = fa * DoubleDouble::from_f64(0.5);
        }
        b = c;
        fb = fc;
        if (b - a).abs().to_f64() < 1e-24 * z.gamma {
            break;
        }
    }
    let (c, fc, bc) = best;
    let slope = ((fb - fa) / (b - a)).abs().to_f64().max(1e-300);
    let gamma = c.to_f64();
    let rounding = (c - DoubleDouble::from_f64(gamma)).abs().to_f64();
    let bound = rounding + (fc.abs().to_f64() + bc) / slope + (b - a).abs().to_f64();
    Ok(Located { gamma, bound: bound.max(0.5 * f64::EPSILON * gamma), lo: z.lo, hi: z.hi })
}

/// Upper bound on the number of zeros missed below `t1`, given all zeros
/// found up to `t2` (sorted). A value below 1 certifies the count.
pub fn turing_certificate(found: &[f64], t1: f64, t2: f64) -> f64 {
    let h = t2 - t1;
    let below = found.partition_point(|&g| g <= t1) as f64;
    let stair: f64 = below * h + found.iter().filter(|&&g| g > t1 && g <= t2).map(|&g| t2 - g).sum::<f64>();
    let gl = GaussLegendre::new(20);
    let pieces = h.ceil().max(1.0) as usize;
    let dt = h / pieces as f64;
    let theta_int: f64 =
        (0..pieces).map(|k| gl.integrate(t1 + k as f64 * dt, t1 + (k + 1) as f64 * dt, theta_f64)).sum();
    let s_found = stair - theta_int / std::f64::consts::PI - h;
    let b = 2.067 + 0.059 * t2.ln();
    (b - s_found) / h
}

#[cfg(test)]
mod tests {
    use super::*;

    const TABLE: [f64; 10] = [
        14.134725142,
        21.022039639,
        25.010857580,
        30.424876126,
        32.935061588,
        37.586178159,
        40.918719012,
        43.327073281,
        48.005150881,
        49.773832478,
    ];

    #[test]
    fn first_ten_match_reference_table() {
        let store = find_zeros_up_to(50.0, &PrecisionContext::double()).unwrap();
        assert_eq!(store.len(), 10);
        for (g, want) in store.gammas().iter().zip(TABLE) {
            assert!((g - want).abs() < 5e-10, "{g} vs {want}");
        }
        assert!(find_zeros_up_to(14.0, &PrecisionContext::double()).unwrap().is_empty());
    }

    #[test]
    fn extended_polish_tightens_bounds() {
        let ctx = PrecisionContext::for_digits(20).unwrap();
        let store = find_zeros_up_to(50.0, &ctx).unwrap();
        assert_eq!(store.len(), 10);
        // gamma_1 to 40 digits: 14.13472514173469379045725198356247027078
        assert!((store.gammas()[0] - 14.134725141734694).abs() <= 2e-15);
        assert!(store.error_bounds().iter().all(|&b| b < 1e-14));
    }

    #[test]
    fn stored_zeros_make_z_small() {
        let ctx = PrecisionContext::double();
        let store = find_zeros_up_to(600.0, &ctx).unwrap();
        let sctx = search_context(&ctx);
        for (&g, &b) in store.gammas().iter().zip(store.error_bounds()) {
            let (z, zb) = hardy_z_eval(g, &sctx).unwrap();
            let (zp, _) = hardy_z_eval(g + 1e-6, &sctx).unwrap();
            let (zm, _) = hardy_z_eval(g - 1e-6, &sctx).unwrap();
            let slope = ((zp - zm) / 2e-6).abs();
            assert!(z.abs() < 10.0 * b * slope + zb, "{g}");
        }
    }

    #[test]
    fn count_matches_fine_mesh_audit() {
        let ctx = PrecisionContext::double();
        let store = find_zeros_up_to(1000.0, &ctx).unwrap();
        let sctx = search_context(&ctx);
        let mut changes = 0;
        let mut t = 1.0;
        let mut prev = hardy_z_eval(t, &sctx).unwrap().0;
        while t < 1000.0 {
            t += 0.02;
            let cur = hardy_z_eval(t.min(1000.0), &sctx).unwrap().0;
            if cur * prev < 0.0 {
                changes += 1;
            }
            prev = cur;
        }
        assert_eq!(store.len(), 649);
        assert_eq!(changes, store.len());
    }

    #[test]
    fn ordering_anomaly_near_nine_thousand() {
        let store = find_zeros_up_to(9140.0, &PrecisionContext::double()).unwrap();
        let g = store.gammas();
        assert!((g[9135] - 9136.1396).abs() < 1e-3, "{}", g[9135]);
        assert!((g[9136] - 9136.6792).abs() < 1e-3, "{}", g[9136]);
        for (i, &v) in g.iter().enumerate().take(9136) {
            assert!(v > (i + 1) as f64, "gamma_{} = {v}", i + 1);
        }
        assert!(g[9136] < 9137.0);
        let min_gap = g.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
        assert!(min_gap > 1e-6);
    }

    #[test]
    fn certificate_detects_a_removed_zero() {
        let ctx = PrecisionContext::double();
        let report = search(100.0, &ctx).unwrap();
        assert!(report.turing_bound < 1.0);
        let mut missing = report.found_to_t2.clone();
        missing.remove(5);
        assert!(turing_certificate(&missing, report.turing_t1, report.turing_t2) >= 1.0);
    }

    #[test]
    fn rejects_heights_past_the_cap() {
        assert!(find_zeros_up_to(2e6, &PrecisionContext::double()).is_err());
    }
}
