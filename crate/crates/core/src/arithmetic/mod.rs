//! Exact integer-side quantities: primes, Moebius, Mertens, divisor sums,
//! harmonic numbers and prime-power counting.

mod sieve;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Result, ZetaError};
use crate::precision::{PrecisionContext, Real};

pub use sieve::{small_primes, MertensSeries, SieveTable, LINEAR_SIEVE_MAX, MAX_SIEVE_LIMIT};

/// Exact harmonic numbers are used up to this index.
pub const EXACT_HARMONIC_MAX: u64 = 10_000;

/// How a counting function is valued exactly at a jump.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum JumpMode {
    /// Right-continuous integer counts.
    #[default]
    Step,
    /// Midpoint of the left and right limits.
    Half,
}

/// Builds a sieve table on `[0, n]`.
pub fn build_sieve(n: u64) -> Result<SieveTable> {
    SieveTable::build(n)
}

/// `M(x) = sum_{n <= x} mu(n)`.
pub fn mertens(x: u64, table: &SieveTable) -> Result<i64> {
    table.mertens(x)
}

fn floor_index(x: f64, table: &SieveTable) -> Result<Option<u64>> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(ZetaError::DomainError(format!("counting functions need finite x >= 0, got {x}")));
    }
    let n = x.floor();
    if n > table.limit() as f64 {
        return Err(ZetaError::OutOfRange { value: x, limit: table.limit() });
    }
    Ok(if n < 2.0 { None } else { Some(n as u64) })
}

/// Number of primes `<= x`.
pub fn prime_pi(x: f64, table: &SieveTable) -> Result<u64> {
    match floor_index(x, table)? {
        None => Ok(0),
        Some(n) => table.prime_count(n),
    }
}

/// `pi(x)` under the chosen jump convention.
pub fn prime_pi_exact(x: f64, table: &SieveTable, mode: JumpMode) -> Result<f64> {
    let count = prime_pi(x, table)? as f64;
    if mode == JumpMode::Half && x.fract() == 0.0 && table.is_prime(x as u64) {
        return Ok(count - 0.5);
    }
    Ok(count)
}

/// `pi(x)` with the half-jump convention at primes.
pub fn prime_pi_half(x: f64, table: &SieveTable) -> Result<f64> {
    prime_pi_exact(x, table, JumpMode::Half)
}

/// `sigma(n)`, the sum of divisors, by trial division.
pub fn divisor_sigma(n: u64) -> u64 {
    assert!(n >= 1, "sigma is defined for n >= 1");
    let mut m = n;
    let mut total = 1u64;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            let mut pk = 1u64;
            let mut acc = 1u64;
            while m % p == 0 {
                m /= p;
                pk *= p;
                acc += pk;
            }
            total *= acc;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        total *= m + 1;
    }
    total
}

/// `sigma(n)` for `n = 0..=limit` (entry 0 is 0).
pub fn sigma_table(limit: u64) -> Vec<u64> {
    let n = limit as usize;
    let mut s = vec![0u64; n + 1];
    for d in 1..=n {
        let mut m = d;
        while m <= n {
            s[m] += d as u64;
            m += d;
        }
    }
    s
}

/// `H_n` as an exact rational, by binary splitting.
pub fn harmonic_exact(n: u64) -> BigRational {
    fn split(a: u64, b: u64) -> (BigInt, BigInt) {
        // sum_{j=a}^{b-1} 1/j as p/q
        if b - a == 1 {
            return (BigInt::one(), BigInt::from(a));
        }
        let m = a + (b - a) / 2;
        let (p1, q1) = split(a, m);
        let (p2, q2) = split(m, b);
        (p1 * &q2 + p2 * &q1, q1 * q2)
    }
    if n == 0 {
        return BigRational::zero();
    }
    let (p, q) = split(1, n + 1);
    BigRational::new(p, q)
}

/// Rounds a positive big integer to the nearest `T`.
fn big_to_real<T: Real>(b: &BigUint) -> T {
    let bits = b.bits();
    if bits <= 53 {
        return T::from_f64(b.to_f64().unwrap_or(0.0));
    }
    let shift = bits - 53;
    let head = b >> shift;
    let hi = head.to_f64().unwrap_or(0.0);
    let rest = b - (&head << shift);
    let lo = rest.to_f64().unwrap_or(0.0);
    let scale = 2f64.powi(shift as i32);
    T::from_f64(hi * scale) + T::from_f64(lo)
}

/// Converts an exact rational to `T` with about 110 correct bits.
pub fn rational_to_real<T: Real>(r: &BigRational) -> T {
    let negative = r.numer().sign() == Sign::Minus;
    let num = r.numer().magnitude();
    let den = r.denom().magnitude();
    // scale so the integer quotient carries ~120 bits
    let shift = (den.bits() as i64 - num.bits() as i64 + 120).max(0) as u64;
    let q = (num << shift) / den;
    let mut v: T = big_to_real(&q);
    let mut s = shift;
    while s > 0 {
        let step = s.min(1000);
        v *= T::from_f64(2f64.powi(-(step as i32)));
        s -= step;
    }
    if negative {
        -v
    } else {
        v
    }
}

/// `H_n` at the precision of `T`: exact rational for `n <= 10^4`, the
/// asymptotic expansion beyond.
pub fn harmonic<T: Real>(n: u64, ctx: &PrecisionContext) -> Result<T> {
    ctx.require::<T>()?;
    if n == 0 {
        return Err(ZetaError::DomainError("harmonic numbers start at n = 1".into()));
    }
    if n <= EXACT_HARMONIC_MAX {
        return Ok(rational_to_real(&harmonic_exact(n)));
    }
    Ok(harmonic_asymptotic(n))
}

/// `ln n + gamma + 1/(2n) - sum_k B_{2k} / (2k n^{2k})`; at `n > 10^4` ten
/// terms are far below double-double resolution.
pub fn harmonic_asymptotic<T: Real>(n: u64) -> T {
    let nn = T::from_f64(n as f64);
    let inv2 = T::one() / (nn * nn);
    let mut p = inv2;
    let mut corr = T::zero();
    for k in 1..=10usize {
        // stirling(k) = B_{2k} / (2k (2k-1))
        corr += T::stirling(k) * T::from_f64((2 * k - 1) as f64) * p;
        p *= inv2;
    }
    nn.ln() + T::euler_gamma() + T::one() / (nn + nn) - corr
}

/// `J(x) = sum_k pi(x^{1/k}) / k` as an exact rational.
///
/// With [`JumpMode::Half`] each prime-power jump is valued at its midpoint.
pub fn j_function_exact(x: f64, table: &SieveTable, mode: JumpMode) -> Result<Ratio<i64>> {
    floor_index(x, table)?;
    let mut total = Ratio::<i64>::zero();
    if x < 2.0 {
        return Ok(total);
    }
    let mut k = 1i64;
    loop {
        let root = kth_root_floor(x, k as u32);
        if root < 2 {
            break;
        }
        let count = table.prime_count(root)? as i64;
        let mut term = Ratio::new(2 * count, 2 * k);
        if mode == JumpMode::Half && table.is_prime(root) && is_exact_power(x, root, k as u32) {
            term -= Ratio::new(1, 2 * k);
        }
        total += term;
        k += 1;
    }
    Ok(total)
}

/// `J(x)` as a float.
pub fn j_function(x: f64, table: &SieveTable, mode: JumpMode) -> Result<f64> {
    let r = j_function_exact(x, table, mode)?;
    Ok(*r.numer() as f64 / *r.denom() as f64)
}

fn is_exact_power(x: f64, root: u64, k: u32) -> bool {
    x.fract() == 0.0 && root.checked_pow(k).is_some_and(|v| v == x as u64)
}

/// `floor(x^{1/k})`, exact for integer parts up to `2^53`.
pub fn kth_root_floor(x: f64, k: u32) -> u64 {
    if k == 1 {
        return x.floor() as u64;
    }
    let n = x.floor() as u64;
    let mut r = x.powf(1.0 / f64::from(k)).floor() as u64;
    let pow_le = |r: u64| r.checked_pow(k).is_some_and(|v| v <= n);
    while r > 0 && !pow_le(r) {
        r -= 1;
    }
    while pow_le(r + 1) {
        r += 1;
    }
    r
}

/// `gcd` helper kept public for the criteria scans.
pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::DoubleDouble;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn table() -> &'static SieveTable {
        use std::sync::OnceLock;
        static T: OnceLock<SieveTable> = OnceLock::new();
        T.get_or_init(|| build_sieve(1_000_000).unwrap())
    }

    #[test]
    fn small_values() {
        let t = build_sieve(30).unwrap();
        assert_eq!(t.mobius(14), 1);
        assert_eq!(t.mobius(25), 0);
        assert_eq!(t.mobius(30), -1);
        assert_eq!(t.mobius(1), 1);
        let primes: Vec<u64> = (2..=30).filter(|&n| t.is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(primes, t.primes().collect::<Vec<_>>());
        assert_eq!(primes, small_primes(30));
    }

    #[test]
    fn mobius_invariants() {
        let t = table();
        for p in t.primes().take(2000) {
            assert_eq!(t.mobius(p), -1);
            let mut k = p * p;
            while k <= 20_000 {
                assert_eq!(t.mobius(k), 0);
                k += p * p;
            }
        }
        let plus = (1..=100_000u64).filter(|&n| t.mobius(n) == 1).count() as f64 / 1e5;
        let minus = (1..=100_000u64).filter(|&n| t.mobius(n) == -1).count() as f64 / 1e5;
        let target = 3.0 / std::f64::consts::PI.powi(2);
        assert!((plus - target).abs() < 0.01);
        assert!((minus - target).abs() < 0.01);
    }

    #[test]
    fn mobius_divisor_sum_vanishes() {
        let t = table();
        let n = 100_000usize;
        let mut acc = vec![0i32; n + 1];
        for d in 1..=n {
            let m = i32::from(t.mobius(d as u64));
            if m != 0 {
                let mut k = d;
                while k <= n {
                    acc[k] += m;
                    k += d;
                }
            }
        }
        assert_eq!(acc[1], 1);
        assert!(acc[2..].iter().all(|&v| v == 0));
    }

    #[test]
    fn reciprocal_zeta_series() {
        let t = table();
        let s: f64 = (1..=1_000_000u64).map(|n| f64::from(t.mobius(n)) / (n as f64 * n as f64)).sum();
        assert!((s - 6.0 / std::f64::consts::PI.powi(2)).abs() < 1e-5);
    }

    #[test]
    fn mertens_values() {
        let t = table();
        assert_eq!(mertens(1, t).unwrap(), 1);
        let brute: i64 = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1].iter().sum();
        assert_eq!(mertens(10, t).unwrap(), brute);
        assert!(mertens(1_000_000, t).unwrap().abs() < 1000);
        assert!(matches!(mertens(1_000_001, t), Err(ZetaError::OutOfRange { .. })));
        let series = MertensSeries::new(t, 10_000).unwrap();
        assert_eq!(series.get(1), 1);
        for x in 2..=10_000u64 {
            assert!((series.get(x) - series.get(x - 1)).abs() <= 1);
            assert_eq!(series.get(x), mertens(x, t).unwrap());
        }
    }

    #[test]
    fn prime_counts() {
        let t = table();
        assert_eq!(prime_pi(100.0, t).unwrap(), 25);
        assert_eq!(prime_pi(1.9, t).unwrap(), 0);
        assert_eq!(prime_pi_half(13.0, t).unwrap(), 5.5);
        assert_eq!(prime_pi_exact(13.0, t, JumpMode::Step).unwrap(), 6.0);
        assert_eq!(prime_pi_half(13.5, t).unwrap(), 6.0);
        assert_eq!(prime_pi(1e6, t).unwrap(), 78_498);
        assert!(prime_pi(1e6 + 1.0, t).is_err());
    }

    #[test]
    fn sigma_values() {
        assert_eq!(divisor_sigma(1), 1);
        assert_eq!(divisor_sigma(12), 28);
        assert_eq!(divisor_sigma(97), 98);
        let table = sigma_table(5000);
        for n in 1..=5000u64 {
            assert_eq!(table[n as usize], divisor_sigma(n));
        }
    }

    #[test]
    fn harmonic_values() {
        let ctx = PrecisionContext::double();
        assert_eq!(harmonic::<f64>(1, &ctx).unwrap(), 1.0);
        assert_eq!(harmonic_exact(4), BigRational::new(25.into(), 12.into()));
        let h: f64 = harmonic(1_000_000, &ctx).unwrap();
        assert!((h - (1e6f64.ln() + 0.5772156649015329)).abs() < 1e-6);
        // both branches agree at the switch point
        let exact: DoubleDouble = harmonic(EXACT_HARMONIC_MAX, &PrecisionContext::extended()).unwrap();
        let asym: DoubleDouble = harmonic_asymptotic(EXACT_HARMONIC_MAX);
        assert!((exact - asym).abs().to_f64() < 1e-28);
    }

    #[test]
    fn j_function_values() {
        let t = table();
        assert_eq!(j_function(1.5, t, JumpMode::Step).unwrap(), 0.0);
        let j20 = j_function_exact(20.0, t, JumpMode::Step).unwrap();
        assert_eq!(j20, Ratio::new(8, 1) + Ratio::new(1, 1) + Ratio::new(1, 3) + Ratio::new(1, 4));
        // 16 = 2^4 is a jump of 1/4
        let step = j_function_exact(16.0, t, JumpMode::Step).unwrap();
        let half = j_function_exact(16.0, t, JumpMode::Half).unwrap();
        assert_eq!(step - half, Ratio::new(1, 8));
    }

    fn inversion(x: f64, t: &SieveTable) -> Ratio<i64> {
        let mut acc = Ratio::<i64>::zero();
        let mut n = 1u32;
        while x.powf(1.0 / f64::from(n)) >= 2.0 || kth_root_floor(x, n) >= 2 {
            let m = i64::from(t.mobius(u64::from(n)));
            if m != 0 {
                let xr = x.powf(1.0 / f64::from(n));
                // evaluate J at the real root, keeping integer roots exact
                let root = kth_root_floor(x, n);
                let arg = if root.checked_pow(n).is_some_and(|v| v as f64 == x) { root as f64 } else { xr };
                acc += j_function_exact(arg, t, JumpMode::Step).unwrap() * Ratio::new(m, i64::from(n));
            }
            n += 1;
        }
        acc
    }

    #[test]
    fn mobius_inversion_closure() {
        let t = table();
        for x in [10.0, 100.0, 1000.0] {
            assert_eq!(inversion(x, t), Ratio::from_integer(prime_pi(x, t).unwrap() as i64));
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let x: f64 = rng.gen_range(2.0..1e5);
            assert_eq!(inversion(x, t), Ratio::from_integer(prime_pi(x, t).unwrap() as i64), "x={x}");
        }
    }

    #[test]
    fn mertens_below_root_to_ten_million() {
        let t = build_sieve(10_000_000).unwrap();
        let mut m = 0i64;
        for x in 1..=10_000_000u64 {
            m += i64::from(t.mobius(x));
            assert!((m as f64).abs() < (x as f64).sqrt() || x == 1);
        }
    }

    proptest! {
        #[test]
        fn sigma_is_multiplicative(a in 1u64..5000, b in 1u64..5000) {
            prop_assume!(gcd(a, b) == 1);
            prop_assert_eq!(divisor_sigma(a * b), divisor_sigma(a) * divisor_sigma(b));
        }

        #[test]
        fn kth_root_is_floor(x in 2.0f64..1e12, k in 1u32..8) {
            let r = kth_root_floor(x, k);
            let n = x.floor() as u64;
            prop_assert!(r.pow(k) <= n);
            prop_assert!((r + 1).checked_pow(k).map_or(true, |v| v > n));
        }
    }
}
