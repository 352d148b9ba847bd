//! Special functions: zeta, gamma, logarithmic integrals, the completed zeta
//! function and its kernel, Hardy's Z and Barnes G.

mod barnes;
mod gamma;
pub mod hardy;
mod li;
pub mod riemann_siegel;
pub(crate) mod tables;
mod xi;
mod zeta;

pub use barnes::barnes_g_integer;
pub use gamma::{gamma, ln_gamma};
pub use hardy::{gram_index_below, gram_point, gram_points, hardy_z, hardy_z_eval, theta, theta_f64, theta_prime_f64, theta_reduced_f64};
pub use li::{expint_e1, li_complex_power, li_real};
pub use xi::{h_family, ln_phi_kernel, phi_kernel, xi, H_CUTOFF};
pub use zeta::zeta;

use std::sync::OnceLock;

use crate::precision::DoubleDouble;

const LN_TABLE_SIZE: usize = 1 << 16;

/// `ln n` in double-double, tabulated for small `n`.
pub(crate) fn ln_int_dd(n: u64) -> DoubleDouble {
    static TABLE: OnceLock<Vec<DoubleDouble>> = OnceLock::new();
    if (n as usize) < LN_TABLE_SIZE {
        let table = TABLE.get_or_init(|| {
            (0..LN_TABLE_SIZE).map(|k| DoubleDouble::from_f64(k.max(1) as f64).ln()).collect()
        });
        table[n as usize]
    } else {
        DoubleDouble::from_f64(n as f64).ln()
    }
}
