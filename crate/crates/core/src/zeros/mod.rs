//! Nontrivial zeros on the critical line: search, certification, storage
//! and counting.

mod io;
mod search;

use std::path::Path;

use crate::error::{Result, ZetaError};

pub use io::{export_zeros, import_zeros, ZeroFormat};
pub use search::{find_zeros_up_to, search, search_context, turing_certificate, SearchReport, TURING_MIN_HEIGHT};

/// Largest height accepted by the in-process search.
pub const MAX_SEARCH_HEIGHT: f64 = 1e6;

/// Where a zero table came from.
#[derive(Debug, Clone, PartialEq)]
pub enum Provenance {
    /// Found in process; every zero below `certified_height` is present.
    Computed { certified_height: f64, digits: u32 },
    /// Read from a file.
    Imported { source: String, sha256: String },
}

/// Ordered imaginary parts `gamma_n` of zeros `1/2 + i gamma_n`, with an
/// absolute error bound per entry.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroStore {
    gammas: Vec<f64>,
    error_bounds: Vec<f64>,
    provenance: Provenance,
}

impl ZeroStore {
    /// Validates ordering and bounds.
    pub fn new(gammas: Vec<f64>, error_bounds: Vec<f64>, provenance: Provenance) -> Result<Self> {
        if gammas.len() != error_bounds.len() {
            return Err(ZetaError::FormatError(format!(
                "{} ordinates but {} error bounds",
                gammas.len(),
                error_bounds.len()
            )));
        }
        for (i, &g) in gammas.iter().enumerate() {
            if !(g.is_finite() && g > 0.0) {
                return Err(ZetaError::FormatError(format!("entry {i} is not a positive finite ordinate: {g}")));
            }
            if i > 0 && g <= gammas[i - 1] {
                return Err(ZetaError::NonMonotonicInput { index: i });
            }
        }
        if let Some(i) = error_bounds.iter().position(|b| !(b.is_finite() && *b >= 0.0)) {
            return Err(ZetaError::FormatError(format!("entry {i} has an invalid error bound")));
        }
        Ok(Self { gammas, error_bounds, provenance })
    }

    pub fn empty(provenance: Provenance) -> Self {
        Self { gammas: Vec::new(), error_bounds: Vec::new(), provenance }
    }

    pub fn len(&self) -> usize {
        self.gammas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gammas.is_empty()
    }

    pub fn gammas(&self) -> &[f64] {
        &self.gammas
    }

    pub fn error_bounds(&self) -> &[f64] {
        &self.error_bounds
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// Decimal digits the entries are trusted to (0 for unknown).
    pub fn digits(&self) -> u32 {
        match self.provenance {
            Provenance::Computed { digits, .. } => digits,
            Provenance::Imported { .. } => {
                let worst = self.error_bounds.iter().copied().fold(0.0, f64::max);
                if worst > 0.0 { (-worst.log10() + 1e-9).floor().max(0.0) as u32 } else { 0 }
            }
        }
    }

    /// Height below which the table is complete: the certified height for
    /// computed tables, the last ordinate for imported ones.
    pub fn complete_height(&self) -> f64 {
        match self.provenance {
            Provenance::Computed { certified_height, .. } => certified_height,
            Provenance::Imported { .. } => self.gammas.last().copied().unwrap_or(0.0),
        }
    }

    /// Number of stored zeros with `gamma <= t`.
    pub fn count_below(&self, t: f64) -> usize {
        self.gammas.partition_point(|&g| g <= t)
    }

    /// The first `k` zeros (all of them if fewer are stored).
    pub fn truncated(&self, k: usize) -> ZeroStore {
        let k = k.min(self.len());
        ZeroStore {
            gammas: self.gammas[..k].to_vec(),
            error_bounds: self.error_bounds[..k].to_vec(),
            provenance: self.provenance.clone(),
        }
    }

    /// Zeros with `gamma <= t`.
    pub fn below(&self, t: f64) -> ZeroStore {
        let mut out = self.truncated(self.count_below(t));
        if let Provenance::Computed { certified_height, digits } = out.provenance {
            out.provenance = Provenance::Computed { certified_height: certified_height.min(t), digits };
        }
        out
    }

    pub fn import(path: &Path) -> Result<Self> {
        import_zeros(path)
    }
}

/// Exact count of zeros up to `t` against the smooth counting formula.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CountReport {
    pub t: f64,
    pub exact_count: usize,
    pub riemann_estimate: f64,
    /// `exact_count - riemann_estimate`.
    pub residual: f64,
    /// `|residual| / ln t`, the constant in the `O(log t)` error term.
    pub log_constant: f64,
}

/// `(t/2 pi) ln(t / 2 pi e) + 7/8`.
pub fn zero_count_riemann(t: f64) -> Result<f64> {
    let lower = std::f64::consts::TAU * std::f64::consts::E;
    if !(t > lower) || !t.is_finite() {
        return Err(ZetaError::DomainError(format!("the counting formula is used for t > 2 pi e, got {t}")));
    }
    let u = t / std::f64::consts::TAU;
    Ok(u * (u.ln() - 1.0) + 0.875)
}

/// Counts zeros up to `t` in a complete store and compares with the formula.
pub fn count_report(store: &ZeroStore, t: f64) -> Result<CountReport> {
    if t > store.complete_height() {
        return Err(ZetaError::InsufficientZeros(format!(
            "store is complete only to {}, asked for {t}",
            store.complete_height()
        )));
    }
    let exact_count = store.count_below(t);
    let riemann_estimate = zero_count_riemann(t)?;
    let residual = exact_count as f64 - riemann_estimate;
    Ok(CountReport { t, exact_count, riemann_estimate, residual, log_constant: residual.abs() / t.ln() })
}
