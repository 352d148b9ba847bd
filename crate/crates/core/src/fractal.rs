//! Newton-basin escape counts for zeta and the Fourier-integral profile of
//! `zeta(1/2+it)/(1/2+it)`.

use std::io::Write;
use std::path::Path;

use num_complex::Complex;
use rayon::prelude::*;

use crate::error::{Result, ZetaError};
use crate::precision::{ComplexPoint, PrecisionContext, Real};
use crate::special::zeta;

/// Iterates leaving this disk are abandoned.
const ESCAPE_RADIUS: f64 = 1e3;

/// Pixel grid and stopping rule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
    pub width: usize,
    pub height: usize,
    pub max_iter: u32,
    /// Convergence threshold on `|zeta(z_n)|`.
    pub eps: f64,
}

impl GridSpec {
    /// The window `-9 < Re z < 9`, `-25 < Im z < 25` at a given resolution.
    pub fn figure_window(width: usize, height: usize, max_iter: u32) -> Self {
        Self { re_min: -9.0, re_max: 9.0, im_min: -25.0, im_max: 25.0, width, height, max_iter, eps: 1e-6 }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = self.re_min < self.re_max
            && self.im_min < self.im_max
            && self.width > 0
            && self.height > 0
            && self.max_iter > 0
            && self.eps > 0.0
            && [self.re_min, self.re_max, self.im_min, self.im_max].iter().all(|v| v.is_finite());
        if ok {
            Ok(())
        } else {
            Err(ZetaError::DomainError(format!("invalid grid {self:?}")))
        }
    }

    /// Centre of pixel `(col, row)`; row 0 is the top edge.
    pub fn pixel(&self, col: usize, row: usize) -> ComplexPoint {
        let dx = (self.re_max - self.re_min) / self.width as f64;
        let dy = (self.im_max - self.im_min) / self.height as f64;
        Complex::new(self.re_min + (col as f64 + 0.5) * dx, self.im_max - (row as f64 + 0.5) * dy)
    }

    pub fn sentinel(&self) -> u32 {
        self.max_iter + 1
    }
}

/// Iteration counts, row-major; `max_iter + 1` marks non-convergence.
#[derive(Debug, Clone, PartialEq)]
pub struct EscapeField {
    pub grid: GridSpec,
    pub iterations: Vec<u32>,
}

impl EscapeField {
    pub fn get(&self, col: usize, row: usize) -> u32 {
        self.iterations[row * self.grid.width + col]
    }

    pub fn converged_count(&self) -> usize {
        self.iterations.iter().filter(|&&n| n <= self.grid.max_iter).count()
    }
}

/// `zeta` evaluated in the upper half-plane and conjugated back, so results
/// are exactly symmetric under conjugation.
fn zeta_sym(z: ComplexPoint, ctx: &PrecisionContext) -> Result<ComplexPoint> {
    if z.im < 0.0 {
        Ok(zeta(z.conj(), ctx)?.value.conj())
    } else {
        Ok(zeta(z, ctx)?.value)
    }
}

fn derivative_step(ctx: &PrecisionContext) -> f64 {
    10f64.powf(-(ctx.digits() as f64) / 2.0)
}

fn step_with(z: ComplexPoint, fz: ComplexPoint, ctx: &PrecisionContext) -> Result<ComplexPoint> {
    if z == Complex::new(1.0, 0.0) {
        return Err(ZetaError::PoleEncountered);
    }
    let h = derivative_step(ctx);
    let d = (zeta_sym(z + h, ctx)? - zeta_sym(z - h, ctx)?) / (2.0 * h);
    if !(d.norm() > 1e3 * f64::EPSILON * fz.norm().max(1.0)) || !d.re.is_finite() {
        return Err(ZetaError::DerivativeVanishes(format!("{z}")));
    }
    Ok(z - fz / d)
}

/// One Newton iterate `z - zeta(z)/zeta'(z)`, the derivative by a central
/// difference with step `10^(-digits/2)`.
pub fn newton_step(z: ComplexPoint, ctx: &PrecisionContext) -> Result<ComplexPoint> {
    if z == Complex::new(1.0, 0.0) {
        return Err(ZetaError::PoleEncountered);
    }
    let fz = zeta_sym(z, ctx)?;
    step_with(z, fz, ctx)
}

/// Iterations until `|zeta| < eps` and the final iterate, or `None` if the
/// orbit fails to converge within `max_iter` steps.
pub fn escape_point(z0: ComplexPoint, spec: &GridSpec, ctx: &PrecisionContext) -> Option<(u32, ComplexPoint)> {
    let mut z = z0;
    for n in 0..=spec.max_iter {
        if z.norm() > ESCAPE_RADIUS || !z.re.is_finite() || !z.im.is_finite() {
            return None;
        }
        let fz = zeta_sym(z, ctx).ok()?;
        if fz.norm() < spec.eps {
            return Some((n, z));
        }
        if n == spec.max_iter {
            break;
        }
        z = step_with(z, fz, ctx).ok()?;
    }
    None
}

/// Escape counts for every pixel; rows are computed in parallel and
/// assembled in order.
pub fn escape_field(spec: &GridSpec, ctx: &PrecisionContext) -> Result<EscapeField> {
    spec.validate()?;
    let dctx = ctx.as_double();
    let rows: Vec<Vec<u32>> = (0..spec.height)
        .into_par_iter()
        .map(|row| {
            (0..spec.width)
                .map(|col| escape_point(spec.pixel(col, row), spec, &dctx).map_or(spec.sentinel(), |(n, _)| n))
                .collect()
        })
        .collect();
    Ok(EscapeField { grid: *spec, iterations: rows.concat() })
}

/// Mapping from iteration counts to pixels.
///
/// `Gray`: a count `n <= max_iter` becomes `round(254 n / max_iter)`, so fast
/// convergence is black. Non-converged pixels are 255.
/// `Color`: converged counts run along a ramp from deep blue through yellow
/// to white, `c = n / max_iter`, `(255 c^0.5, 255 c, 128 + 127 c)` rounded.
/// Non-converged pixels are black (0, 0, 0), distinct from the ramp, which
/// never reaches pure black.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Palette {
    #[default]
    Gray,
    Color,
}

fn gray(n: u32, max_iter: u32) -> u8 {
    if n > max_iter {
        255
    } else {
        (254.0 * f64::from(n) / f64::from(max_iter)).round() as u8
    }
}

fn color(n: u32, max_iter: u32) -> [u8; 3] {
    if n > max_iter {
        return [0, 0, 0];
    }
    let c = f64::from(n) / f64::from(max_iter);
    [(255.0 * c.sqrt()).round() as u8, (255.0 * c).round() as u8, (128.0 + 127.0 * c).round() as u8]
}

/// Binary PGM (`P5`) or PPM (`P6`) bytes, rows top to bottom.
pub fn encode_image(field: &EscapeField, palette: Palette) -> Vec<u8> {
    let (w, h, m) = (field.grid.width, field.grid.height, field.grid.max_iter);
    let mut out = Vec::new();
    match palette {
        Palette::Gray => {
            out.extend_from_slice(format!("P5\n{w} {h}\n255\n").as_bytes());
            out.extend(field.iterations.iter().map(|&n| gray(n, m)));
        }
        Palette::Color => {
            out.extend_from_slice(format!("P6\n{w} {h}\n255\n").as_bytes());
            out.extend(field.iterations.iter().flat_map(|&n| color(n, m)));
        }
    }
    out
}

pub fn render_pgm(field: &EscapeField, palette: Palette, path: &Path) -> Result<()> {
    let mut f = std::io::BufWriter::new(std::fs::File::create(path)?);
    f.write_all(&encode_image(field, palette))?;
    f.flush()?;
    Ok(())
}

/// `(magic, width, height, maxval, header_len)` of a binary PNM image.
pub fn parse_pnm_header(bytes: &[u8]) -> Result<(String, usize, usize, u32, usize)> {
    let bad = || ZetaError::FormatError("not a binary PNM image".into());
    let mut fields = Vec::new();
    let mut pos = 0;
    while fields.len() < 4 {
        while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        let start = pos;
        while pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        if start == pos {
            return Err(bad());
        }
        fields.push(std::str::from_utf8(&bytes[start..pos]).map_err(|_| bad())?.to_string());
    }
    let magic = fields[0].clone();
    if magic != "P5" && magic != "P6" {
        return Err(bad());
    }
    let w = fields[1].parse().map_err(|_| bad())?;
    let h = fields[2].parse().map_err(|_| bad())?;
    let m = fields[3].parse().map_err(|_| bad())?;
    Ok((magic, w, h, m, pos + 1))
}

/// `e^{-x/2} floor(e^x) - e^{x/2}`, never positive.
pub fn vanderpol_integrand(x: f64) -> f64 {
    let e = x.exp();
    (-0.5 * x).exp() * e.floor() - (0.5 * x).exp()
}

/// `sum_{m > M} m^{-s}` by Euler-Maclaurin from `M`.
fn tail_sum(m: f64, s: Complex<f64>) -> Complex<f64> {
    let ln_m = m.ln();
    let pow = |e: Complex<f64>| (e * ln_m).exp();
    // sum_{k >= M} = M^{1-s}/(s-1) + M^{-s}/2 + sum_j B_2j/(2j)! (s)_{2j-1} M^{-s-2j+1}
    let mut acc = pow(1.0 - s) / (s - 1.0) + 0.5 * pow(-s);
    let mut rising = s;
    for j in 1..=6usize {
        let term = rising * f64::em_bernoulli(j) * pow(-s - (2 * j - 1) as f64);
        acc += term;
        rising *= (s + (2 * j - 1) as f64) * (s + (2 * j) as f64);
    }
    acc - pow(-s)
}

/// `|int_{-inf}^{X} (e^{-x/2} floor(e^x) - e^{x/2}) e^{-ixt} dx|` on `t_grid`.
///
/// Integrating exactly between the jumps `x = ln m` gives, with
/// `s = 1/2 + it` and `M = floor(e^X)`,
/// `(1/s) sum_{m <= M} m^{-s} - e^{-sX} (M/s + e^X/(1-s))`.
/// For `M` beyond `direct_limit` the partial sum is `zeta(s)` minus its
/// Euler-Maclaurin tail.
pub fn vanderpol_profile(t_grid: &[f64], x_cut: f64, ctx: &PrecisionContext) -> Result<Vec<f64>> {
    if !(x_cut >= 20.0) {
        return Err(ZetaError::DomainError(format!("the integral is cut at x >= 20, got {x_cut}")));
    }
    if let Some(&t) = t_grid.iter().find(|&&t| !(0.0..=100.0).contains(&t)) {
        return Err(ZetaError::DomainError(format!("profile heights lie in [0, 100], got {t}")));
    }
    vanderpol_profile_unchecked(t_grid, x_cut, ctx, 0)
}

fn vanderpol_profile_unchecked(t_grid: &[f64], x_cut: f64, ctx: &PrecisionContext, direct_limit: u64) -> Result<Vec<f64>> {
    let dctx = ctx.as_double();
    let big_m = x_cut.exp().floor();
    t_grid
        .par_iter()
        .map(|&t| {
            let s = Complex::new(0.5, t);
            let partial = if big_m as u64 <= direct_limit {
                (1..=big_m as u64).map(|m| (-s * (m as f64).ln()).exp()).sum::<Complex<f64>>()
            } else {
                zeta(s, &dctx)?.value - tail_sum(big_m, s)
            };
            let e_sx = (-s * x_cut).exp();
            let v = partial / s - e_sx * (big_m / s + x_cut.exp() / (1.0 - s));
            Ok(v.norm())
        })
        .collect()
}

/// Local minima of a sampled curve, as grid positions.
pub fn local_minima(t_grid: &[f64], values: &[f64]) -> Vec<f64> {
    (1..values.len().saturating_sub(1))
        .filter(|&i| values[i] < values[i - 1] && values[i] <= values[i + 1])
        .map(|i| t_grid[i])
        .collect()
}

/// Local minima whose value is below `depth`; at a zero the truncated
/// integral drops to about `e^{-X/2}`.
pub fn profile_dips(t_grid: &[f64], values: &[f64], depth: f64) -> Vec<f64> {
    (1..values.len().saturating_sub(1))
        .filter(|&i| values[i] < values[i - 1] && values[i] <= values[i + 1] && values[i] < depth)
        .map(|i| t_grid[i])
        .collect()
}

pub fn write_profile_csv(path: &Path, t_grid: &[f64], values: &[f64]) -> Result<()> {
    let mut w = csv::Writer::from_path(path).map_err(crate::explicit::csv_error)?;
    w.write_record(["t", "profile"]).map_err(crate::explicit::csv_error)?;
    for (t, v) in t_grid.iter().zip(values) {
        w.write_record([format!("{t:.6}"), format!("{v:.12}")]).map_err(crate::explicit::csv_error)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::double()
    }

    #[test]
    fn newton_finds_trivial_and_first_zeros() {
        let spec = GridSpec::figure_window(1, 1, 64);
        let (_, z) = escape_point(Complex::new(-2.0 + 1e-9, 0.0), &spec, &ctx()).unwrap();
        assert!((z - Complex::new(-2.0, 0.0)).norm() < 1e-6);
        let mut seed = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        use rand::{Rng, SeedableRng};
        for _ in 0..10 {
            let r: f64 = 0.5 * seed.gen::<f64>().sqrt();
            let a: f64 = seed.gen::<f64>() * std::f64::consts::TAU;
            let z0 = Complex::new(0.5 + r * a.cos(), 14.134725 + r * a.sin());
            let (n, z) = escape_point(z0, &spec, &ctx()).unwrap();
            assert!(n < 20);
            assert!((z - Complex::new(0.5, 14.134725141734694)).norm() < 1e-5, "{z}");
        }
        let fixed = newton_step(Complex::new(-4.0, 0.0), &ctx()).unwrap();
        assert!((fixed - Complex::new(-4.0, 0.0)).norm() < 1e-12);
        assert!(matches!(newton_step(Complex::new(1.0, 0.0), &ctx()), Err(ZetaError::PoleEncountered)));
    }

    fn small_field(max_iter: u32) -> EscapeField {
        let spec = GridSpec { re_min: -9.0, re_max: 9.0, im_min: -25.0, im_max: 25.0, width: 18, height: 40, max_iter, eps: 1e-6 };
        escape_field(&spec, &ctx()).unwrap()
    }

    #[test]
    fn field_symmetry_and_monotone_stopping() {
        let f = small_field(16);
        for row in 0..f.grid.height {
            for col in 0..f.grid.width {
                assert_eq!(f.get(col, row), f.get(col, f.grid.height - 1 - row));
            }
        }
        assert!(f.iterations.iter().all(|&n| n <= f.grid.sentinel()));
        let g = small_field(32);
        assert!(g.converged_count() >= f.converged_count());
        assert!(GridSpec { eps: 0.0, ..f.grid }.validate().is_err());
    }

    #[test]
    fn palette_mapping() {
        let spec = GridSpec { width: 2, height: 2, max_iter: 64, ..GridSpec::figure_window(2, 2, 64) };
        let field = EscapeField { grid: spec, iterations: vec![0, 32, 64, 65] };
        let bytes = encode_image(&field, Palette::Gray);
        let (magic, w, h, m, off) = parse_pnm_header(&bytes).unwrap();
        assert_eq!((magic.as_str(), w, h, m), ("P5", 2, 2, 255));
        assert_eq!(&bytes[off..], &[0, 127, 254, 255]);
        let rgb = encode_image(&field, Palette::Color);
        let (_, _, _, _, off) = parse_pnm_header(&rgb).unwrap();
        assert_eq!(&rgb[off..off + 3], &[0, 0, 128]);
        assert_eq!(&rgb[off + 9..], &[0, 0, 0]);
        assert_eq!(encode_image(&field, Palette::Gray), bytes);
        assert!(parse_pnm_header(b"P3\n1 1\n255\n").is_err());
    }

    #[test]
    fn integrand_is_never_positive() {
        for k in 0..5000 {
            let x = -3.0 + k as f64 * 0.007;
            assert!(vanderpol_integrand(x) <= 0.0);
        }
    }

    #[test]
    fn profile_at_zero_and_closed_form_paths_agree() {
        let ctx = ctx();
        let z_half = zeta(Complex::new(0.5, 0.0), &ctx).unwrap().value.re;
        let p0 = vanderpol_profile(&[0.0], 30.0, &ctx).unwrap()[0];
        assert!((p0 - 2.0 * z_half.abs()).abs() < 1e-5, "{p0}");
        assert!((p0 - 2.920709).abs() < 1e-5);
        // direct partial sum against zeta minus its tail at a moderate cut
        let grid = [3.0, 14.1, 40.0, 77.7];
        let direct = vanderpol_profile_unchecked(&grid, 12.0, &ctx, u64::MAX).unwrap();
        let fast = vanderpol_profile_unchecked(&grid, 12.0, &ctx, 0).unwrap();
        for (a, b) in direct.iter().zip(&fast) {
            assert!((a - b).abs() < 1e-9, "{a} vs {b}");
        }
        assert!(vanderpol_profile(&[120.0], 30.0, &ctx).is_err());
        assert!(vanderpol_profile(&[1.0], 10.0, &ctx).is_err());
    }

    #[test]
    fn dips_sit_at_zeros() {
        let grid: Vec<f64> = (0..=5000).map(|k| k as f64 * 0.01).collect();
        let p = vanderpol_profile(&grid, 20.0, &ctx()).unwrap();
        let dips = profile_dips(&grid, &p, 1e-2);
        let table = [14.134725142, 21.022039639, 25.010857580, 30.424876126, 32.935061588, 37.586178159, 40.918719012, 43.327073281, 48.005150881, 49.773832478];
        assert_eq!(dips.len(), 10);
        for (d, g) in dips.iter().zip(table) {
            assert!((d - g).abs() / g < 1e-3);
        }
        // a shallow minimum near t = 5 is not a zero
        assert!(local_minima(&grid, &p).iter().any(|&t| (t - 5.0).abs() < 0.1));
    }

    #[test]
    fn profile_tracks_zeta_over_s() {
        let ctx = ctx();
        for t in [5.0, 30.0, 90.0] {
            let s = Complex::new(0.5, t);
            let want = (zeta(s, &ctx).unwrap().value / s).norm();
            let got = vanderpol_profile(&[t], 25.0, &ctx).unwrap()[0];
            assert!((got - want).abs() < 1e-4);
        }
    }
}
