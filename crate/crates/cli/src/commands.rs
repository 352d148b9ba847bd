//! Subcommand bodies. Each one writes its artifacts into the output
//! directory and finishes with a manifest.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{bail, ensure, Context, Result};
use zetalab::arithmetic::{build_sieve, prime_pi_exact, sigma_table, JumpMode};
use zetalab::criteria::{self, CriterionReport, IntegralCriterion};
use zetalab::explicit::{self, default_mobius_cutoff, ExpansionMode, WaveSumConfig};
use zetalab::fractal::{self, GridSpec, Palette};
use zetalab::statistics::{self, UnfoldRule};
use zetalab::zeros::{self, ZeroFormat, ZeroStore};
use zetalab::PrecisionContext;

use crate::manifest::{describe_provenance, Manifest};
use crate::*;

struct Run<'a> {
    global: &'a GlobalArgs,
    ctx: PrecisionContext,
    manifest: Manifest,
}

impl Run<'_> {
    fn out(&mut self, name: impl AsRef<Path>) -> PathBuf {
        let p = self.global.output_dir.join(name);
        self.manifest.outputs.push(p.clone());
        p
    }

    /// Decimals for printed floats, tied to the working precision.
    fn prec(&self) -> usize {
        (self.global.digits as usize).saturating_sub(5).max(6)
    }

    fn zeros_for(&mut self, need: Need) -> Result<ZeroStore> {
        let store = acquire_zeros(self.global, &self.ctx, need)?;
        self.manifest.zeros = Some(describe_provenance(store.provenance()));
        Ok(store)
    }

    fn finish(self) -> Result<()> {
        let path = self.manifest.write(&self.global.output_dir)?;
        eprintln!("manifest: {}", path.display());
        Ok(())
    }
}

#[derive(Debug, Clone, Copy)]
enum Need {
    Count(usize),
    Height(f64),
}

fn satisfies(store: &ZeroStore, need: Need) -> bool {
    match need {
        Need::Count(k) => store.len() >= k,
        Need::Height(t) => store.complete_height() >= t,
    }
}

/// Height whose smooth zero count exceeds `k` with some headroom.
fn height_for_count(k: usize) -> Result<f64> {
    let want = k as f64 * 1.002 + 10.0;
    let (mut lo, mut hi) = (20.0f64, 40.0f64);
    while zeros::zero_count_riemann(hi)? < want {
        lo = hi;
        hi *= 2.0;
    }
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if zeros::zero_count_riemann(mid)? < want {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(hi)
}

fn compute_zeros(ctx: &PrecisionContext, need: Need) -> Result<ZeroStore> {
    match need {
        // overshoot so an imported copy, complete only to its last ordinate, still covers t
        Need::Height(t) => Ok(zeros::find_zeros_up_to(t * 1.01 + 10.0, ctx)?),
        Need::Count(k) => {
            let mut t = height_for_count(k)?;
            loop {
                let store = zeros::find_zeros_up_to(t, ctx)?;
                if store.len() >= k {
                    return Ok(store.truncated(k));
                }
                t *= 1.05;
            }
        }
    }
}

/// Zeros from `--zeros`: `compute`, `cache` (the `--zero-cache` file, filled
/// on first use) or a table path.
fn acquire_zeros(g: &GlobalArgs, ctx: &PrecisionContext, need: Need) -> Result<ZeroStore> {
    let cache = match g.zeros.as_str() {
        "compute" => g.zero_cache.clone(),
        "cache" => Some(g.zero_cache.clone().unwrap_or_else(|| g.output_dir.join("zeros.bin"))),
        path => {
            let store = ZeroStore::import(Path::new(path)).with_context(|| format!("importing zeros from {path}"))?;
            ensure!(satisfies(&store, need), "zero table {path} is too short: {need:?} needed, {} zeros to {}", store.len(), store.complete_height());
            return Ok(store);
        }
    };
    if g.zeros == "cache" {
        let path = cache.as_ref().expect("set above");
        if path.exists() {
            let store = ZeroStore::import(path).with_context(|| format!("reading zero cache {}", path.display()))?;
            if satisfies(&store, need) {
                return Ok(store);
            }
            eprintln!("zero cache {} is too short; recomputing", path.display());
        }
    }
    let store = compute_zeros(ctx, need)?;
    if let Some(path) = cache {
        zeros::export_zeros(&store, &path, ZeroFormat::from_path(&path))?;
    }
    Ok(store)
}

pub fn run(cli: Cli) -> Result<()> {
    let g = &cli.global;
    if let Some(n) = g.threads {
        ensure!(n > 0, "--threads must be positive");
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().context("configuring the worker pool")?;
    }
    std::fs::create_dir_all(&g.output_dir).with_context(|| format!("creating {}", g.output_dir.display()))?;
    let ctx = PrecisionContext::for_digits(g.digits)?;
    let (name, params) = match &cli.command {
        Command::ZerosFind(a) => ("zeros-find", format!("{a:?}")),
        Command::ZerosImport(a) => ("zeros-import", format!("{a:?}")),
        Command::PiExplicit(a) => ("pi-explicit", format!("{a:?}")),
        Command::CriteriaScan(a) => ("criteria-scan", format!("{a:?}")),
        Command::StatsSpacings(a) => ("stats-spacings", format!("{a:?}")),
        Command::StatsPaircorr(a) => ("stats-paircorr", format!("{a:?}")),
        Command::StatsMoments(a) => ("stats-moments", format!("{a:?}")),
        Command::FractalRender(a) => ("fractal-render", format!("{a:?}")),
        Command::Vanderpol(a) => ("vanderpol", format!("{a:?}")),
        Command::Report(a) => ("report", format!("{a:?}")),
    };
    let params = format!("digits={} zeros={} {params}", g.digits, g.zeros);
    let mut r = Run { global: g, ctx, manifest: Manifest::new(name, params) };
    match &cli.command {
        Command::ZerosFind(a) => zeros_find(&mut r, a)?,
        Command::ZerosImport(a) => zeros_import(&mut r, a)?,
        Command::PiExplicit(a) => pi_explicit(&mut r, a)?,
        Command::CriteriaScan(a) => criteria_scan(&mut r, a)?,
        Command::StatsSpacings(a) => stats_spacings(&mut r, a)?,
        Command::StatsPaircorr(a) => stats_paircorr(&mut r, a)?,
        Command::StatsMoments(a) => stats_moments(&mut r, a)?,
        Command::FractalRender(a) => fractal_render(&mut r, a)?,
        Command::Vanderpol(a) => vanderpol(&mut r, a)?,
        Command::Report(a) => report(&mut r, a)?,
    }
    r.finish()
}

fn zeros_find(r: &mut Run, a: &ZerosFindArgs) -> Result<()> {
    let rep = zeros::search(a.t_max, &r.ctx)?;
    let format = match a.format {
        Some(TableFormat::Text) => ZeroFormat::Text,
        Some(TableFormat::Binary) => ZeroFormat::Binary,
        None => ZeroFormat::from_path(&a.out),
    };
    let path = r.out(&a.out);
    zeros::export_zeros(&rep.store, &path, format)?;
    r.manifest.zeros = Some(describe_provenance(rep.store.provenance()));
    let p = r.prec().max(9);
    println!("zeros below {}: {}", a.t_max, rep.store.len());
    println!("turing window: [{:.3}, {:.3}] missed-zero bound {:.3}", rep.turing_t1, rep.turing_t2, rep.turing_bound);
    for (i, g) in rep.store.gammas().iter().take(a.show).enumerate() {
        println!("{:>6} {g:.p$}", i + 1);
    }
    Ok(())
}

fn zeros_import(r: &mut Run, a: &ZerosImportArgs) -> Result<()> {
    let store = ZeroStore::import(&a.input).with_context(|| format!("importing {}", a.input.display()))?;
    let path = r.out(&a.out);
    zeros::export_zeros(&store, &path, ZeroFormat::from_path(&path))?;
    r.manifest.zeros = Some(describe_provenance(store.provenance()));
    println!("zeros: {}", store.len());
    println!("last ordinate: {:.*}", r.prec(), store.complete_height());
    println!("digits: {}", store.digits());
    Ok(())
}

fn x_grid(lo: f64, hi: f64, step: f64) -> Result<Vec<f64>> {
    ensure!(step > 0.0 && hi >= lo, "need x-min <= x-max and a positive step");
    let n = ((hi - lo) / step + 1e-9).floor() as usize;
    Ok((0..=n).map(|i| lo + i as f64 * step).collect())
}

fn pi_explicit(r: &mut Run, a: &PiExplicitArgs) -> Result<()> {
    let mode = match a.mode {
        ModeArg::Full => ExpansionMode::Full,
        ModeArg::Wave => ExpansionMode::Wave,
    };
    let xs = match (a.x, a.x_min, a.x_max) {
        (Some(x), _, _) => vec![x],
        (None, Some(lo), Some(hi)) => x_grid(lo, hi, a.x_step)?,
        _ => bail!("give --x or both --x-min and --x-max"),
    };
    let store = r.zeros_for(Need::Count(a.num_zeros))?;
    let x_top = xs.iter().copied().fold(2.0, f64::max);
    let cfg_at = |x: f64| -> Result<WaveSumConfig> {
        let n = a.mobius_n.unwrap_or_else(|| default_mobius_cutoff(x));
        let mut cfg = WaveSumConfig::new(a.num_zeros, n, mode)?;
        cfg.half_jump = !a.right_continuous;
        Ok(cfg)
    };
    let p = r.prec();
    if a.spike {
        let cfg = cfg_at(x_top)?;
        let d = explicit::spike_derivative(&xs, &store, &cfg, &r.ctx)?;
        let mut s = String::from("x,derivative\n");
        for (x, v) in xs.iter().zip(&d) {
            writeln!(s, "{x:.6},{v:.p$}")?;
        }
        let path = r.out("spikes.csv");
        std::fs::write(&path, s)?;
        let (xm, vm) = xs.iter().zip(&d).fold((0.0, f64::NEG_INFINITY), |b, (&x, &v)| if v > b.1 { (x, v) } else { b });
        println!("samples: {}  largest spike {vm:.p$} at x = {xm:.6}", xs.len());
        return Ok(());
    }
    let samples = xs
        .iter()
        .map(|&x| explicit::pi_explicit(x, &store, &cfg_at(x)?, &r.ctx).map_err(Into::into))
        .collect::<Result<Vec<_>>>()?;
    let table = build_sieve(x_top.ceil() as u64)?;
    let path = r.out("pi_explicit.csv");
    explicit::write_samples_csv(&path, &samples, &table, !a.right_continuous)?;
    if let [s] = samples.as_slice() {
        let jump = if a.right_continuous { JumpMode::Step } else { JumpMode::Half };
        println!("x: {}", s.x);
        println!("smooth: {:.p$}", s.smooth_part);
        println!("zero_correction: {:.p$}", s.zero_correction);
        println!("trivial_correction: {:.p$}", s.trivial_correction);
        println!("pi_explicit: {:.p$}", s.total);
        println!("pi_exact: {:.1}", prime_pi_exact(s.x, &table, jump)?);
    } else {
        println!("samples: {} written to {}", samples.len(), path.display());
    }
    Ok(())
}

fn write_report(s: &mut String, r: &CriterionReport) {
    s.push_str(&criteria::format_report(r));
    s.push('\n');
}

fn write_integral(s: &mut String, name: &str, v: &IntegralCriterion, p: usize) -> Result<()> {
    writeln!(s, "criterion: {name}")?;
    writeln!(s, "t_max: {}", v.t_max)?;
    writeln!(s, "value: {:.p$e}", v.value)?;
    writeln!(s, "target: {:.p$e}", v.target)?;
    writeln!(s, "deviation: {:.p$e}", v.deviation())?;
    writeln!(s, "quadrature_error: {:.3e}", v.quadrature_error)?;
    writeln!(s, "tail_estimate: {:.3e}\n", v.tail_estimate)?;
    Ok(())
}

fn criteria_scan(r: &mut Run, a: &CriteriaArgs) -> Result<()> {
    const KNOWN: [&str; 6] = ["lagarias", "robin", "schoenfeld", "mertens", "balazard", "volchkov"];
    for w in &a.which {
        ensure!(KNOWN.contains(&w.as_str()), "unknown criterion {w:?}; expected one of {}", KNOWN.join(","));
    }
    let has = |k: &str| a.which.iter().any(|w| w == k);
    let stride = a.csv_stride.max(1);
    let p = r.prec();
    let mut summary = String::new();
    let mut failed = Vec::new();

    if has("lagarias") || has("robin") {
        let sigma = sigma_table(a.n_max);
        if has("lagarias") {
            let rep = criteria::lagarias_scan(a.n_max, &sigma)?;
            let path = r.out("lagarias.csv");
            criteria::write_rows_csv(&path, "n", &criteria::lagarias_rows(a.n_max, &sigma, stride)?)?;
            println!("lagarias: passed={} worst margin {:.3e} at n={}", rep.passed, rep.worst_margin, rep.worst_location);
            if !rep.passed {
                failed.push("lagarias");
            }
            write_report(&mut summary, &rep);
        }
        if has("robin") {
            let scan = criteria::robin_scan(a.n_max, &sigma, a.near_miss)?;
            let rep = &scan.report;
            let path = r.out("robin.csv");
            criteria::write_rows_csv(&path, "n", &criteria::robin_rows(a.n_max, &sigma, stride)?)?;
            let mut s = String::from("n\n");
            for n in &scan.near_misses {
                writeln!(s, "{n}")?;
            }
            std::fs::write(r.out("robin_near_misses.csv"), s)?;
            println!(
                "robin: passed={} worst margin {:.3e} at n={} near misses {}",
                rep.passed,
                rep.worst_margin,
                rep.worst_location,
                scan.near_misses.len()
            );
            if !rep.passed {
                failed.push("robin");
            }
            write_report(&mut summary, rep);
            writeln!(summary, "near_miss_ratio: {}\nnear_misses: {}\n", scan.near_miss_ratio, scan.near_misses.len())?;
        }
    }

    if has("schoenfeld") || has("mertens") {
        let s_max = a.schoenfeld_max.unwrap_or(a.n_max as f64);
        let mut limit = 2u64;
        if has("schoenfeld") {
            limit = limit.max(s_max.ceil() as u64);
        }
        if has("mertens") {
            limit = limit.max(a.mertens_max);
        }
        let table = build_sieve(limit)?;
        if has("schoenfeld") {
            let grid = criteria::log_grid(criteria::SCHOENFELD_START, s_max, a.schoenfeld_points);
            let rep = criteria::schoenfeld_gap(&grid, &table, &r.ctx)?;
            let path = r.out("schoenfeld.csv");
            criteria::write_rows_csv(&path, "x", &criteria::schoenfeld_rows(&grid, &table, &r.ctx)?)?;
            println!("schoenfeld: passed={} worst margin {:.3e} at x={}", rep.passed, rep.worst_margin, rep.worst_location);
            if !rep.passed {
                failed.push("schoenfeld");
            }
            write_report(&mut summary, &rep);
        }
        if has("mertens") {
            let scan = criteria::mertens_bound(a.mertens_max, &table)?;
            let path = r.out("mertens.csv");
            criteria::write_rows_csv(&path, "n", &criteria::mertens_rows(a.mertens_max, &table, stride)?)?;
            let mut s = String::from("n,ratio\n");
            for (n, v) in criteria::mertens_trajectory(a.mertens_max, stride, &table)? {
                writeln!(s, "{n},{v:.p$}")?;
            }
            std::fs::write(r.out("mertens_trajectory.csv"), s)?;
            println!(
                "mertens: passed={} worst margin {:.3e} at n={} max |M(n)|/sqrt(n) {:.p$} at n={}",
                scan.report.passed, scan.report.worst_margin, scan.report.worst_location, scan.max_ratio, scan.max_ratio_at
            );
            if !scan.report.passed {
                failed.push("mertens");
            }
            write_report(&mut summary, &scan.report);
            writeln!(summary, "max_ratio: {:.p$}\nmax_ratio_at: {}\n", scan.max_ratio, scan.max_ratio_at)?;
        }
    }

    if has("balazard") {
        let v = criteria::balazard_integral(a.balazard_t, &r.ctx)?;
        println!("balazard: T={} value {:.p$e}", v.t_max, v.value);
        write_integral(&mut summary, "balazard", &v, p)?;
    }
    if has("volchkov") {
        let v = criteria::volchkov_integral(a.volchkov_t, a.volchkov_sigma, &r.ctx)?;
        println!("volchkov: T={} value {:.p$} target {:.p$}", v.t_max, v.value, v.target);
        write_integral(&mut summary, "volchkov", &v, p)?;
    }
    std::fs::write(r.out("criteria_summary.txt"), summary)?;
    // a violated inequality is a result, not a failure of the run
    if !failed.is_empty() {
        println!("violated: {}", failed.join(","));
    }
    Ok(())
}

fn stats_spacings(r: &mut Run, a: &SpacingArgs) -> Result<()> {
    let store = r.zeros_for(Need::Count(a.num_zeros))?.truncated(a.num_zeros);
    let rule = match a.unfold {
        UnfoldArg::Density => UnfoldRule::CountingDensity,
        UnfoldArg::Log => UnfoldRule::LogHeight,
    };
    let rep = statistics::spacing_histogram(&store, a.bin_width, a.min_height, rule)?;
    statistics::write_histogram_csv(&r.out("spacings.csv"), &rep.histogram)?;
    println!("spacings: {}", rep.spacings_used);
    println!("sup distance to GUE surmise: {:.*}", r.prec(), rep.sup_distance);
    Ok(())
}

fn stats_paircorr(r: &mut Run, a: &PairArgs) -> Result<()> {
    let store = r.zeros_for(Need::Count(a.num_zeros))?.truncated(a.num_zeros);
    let t_max = store.gammas().last().copied().unwrap_or(0.0);
    let curve = statistics::pair_correlation(&store, t_max, a.min_height, a.du, a.u_max)?;
    statistics::write_curve_csv(&r.out("paircorr.csv"), &curve)?;
    println!("zeros: {} to T = {t_max:.3}", store.len());
    println!("sup distance on [{}, {}]: {:.*}", a.du, a.u_max, r.prec(), curve.sup_distance(a.du, a.u_max));
    Ok(())
}

fn stats_moments(r: &mut Run, a: &MomentArgs) -> Result<()> {
    let p = r.prec();
    let mut s = String::from("k,t_max,empirical,predicted,ratio\n");
    for &k in &a.k {
        let emp = statistics::moment_empirical(k, a.t_max, &r.ctx)?;
        let pred = statistics::moment_predicted(k, a.t_max, a.prime_cutoff)?;
        writeln!(s, "{k},{},{emp:.p$e},{pred:.p$e},{:.p$}", a.t_max, emp / pred)?;
        println!("k={k}: empirical {emp:.p$e} predicted {pred:.p$e} ratio {:.6}", emp / pred);
    }
    std::fs::write(r.out("moments.csv"), s)?;
    Ok(())
}

fn fractal_render(r: &mut Run, a: &FractalArgs) -> Result<()> {
    let [re_min, re_max, im_min, im_max] = a.window[..] else {
        bail!("--window takes four numbers");
    };
    let spec = GridSpec { re_min, re_max, im_min, im_max, width: a.width, height: a.height, max_iter: a.max_iter, eps: a.eps };
    let (palette, default) = match a.palette {
        PaletteArg::Gray => (Palette::Gray, "fractal.pgm"),
        PaletteArg::Color => (Palette::Color, "fractal.ppm"),
    };
    let field = fractal::escape_field(&spec, &r.ctx)?;
    let path = r.out(a.out.clone().unwrap_or_else(|| default.into()));
    fractal::render_pgm(&field, palette, &path)?;
    println!("pixels: {}x{} converged {}", a.width, a.height, field.converged_count());
    Ok(())
}

fn vanderpol(r: &mut Run, a: &VanderpolArgs) -> Result<()> {
    let t = x_grid(0.0, a.t_max, a.t_step)?;
    let v = fractal::vanderpol_profile(&t, a.x_cut, &r.ctx)?;
    fractal::write_profile_csv(&r.out("vanderpol.csv"), &t, &v)?;
    let dips = fractal::profile_dips(&t, &v, a.depth);
    let list: Vec<String> = dips.iter().map(|d| format!("{d:.2}")).collect();
    println!("dips: {}", list.join(" "));
    Ok(())
}

fn report(r: &mut Run, a: &ReportArgs) -> Result<()> {
    const T_START: f64 = 20.0;
    ensure!(a.t_max > T_START && a.samples >= 2, "need t-max > {T_START} and at least two samples");
    let store = r.zeros_for(Need::Height(a.t_max))?;
    let p = r.prec();
    let mut s = String::from("t,exact,riemann,residual,log_constant\n");
    let mut worst = 0.0f64;
    for i in 0..a.samples {
        let t = T_START + (a.t_max - T_START) * i as f64 / (a.samples - 1) as f64;
        let c = zeros::count_report(&store, t)?;
        worst = worst.max(c.log_constant);
        writeln!(s, "{t:.6},{},{:.p$},{:.p$},{:.p$}", c.exact_count, c.riemann_estimate, c.residual, c.log_constant)?;
    }
    std::fs::write(r.out("count_residuals.csv"), s)?;
    println!("samples: {} largest |residual|/ln T {worst:.6}", a.samples);
    Ok(())
}
