//! Packed prime and Moebius tables with O(1) prefix queries.

use std::io::{Read, Write};
use std::path::Path;

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::error::{Result, ZetaError};

/// Largest supported sieve bound.
pub const MAX_SIEVE_LIMIT: u64 = 1_000_000_000;
/// Bounds up to this value use the in-memory linear sieve.
pub const LINEAR_SIEVE_MAX: u64 = 100_000_000;

const SEGMENT: u64 = 1 << 18;
const CACHE_MAGIC: &[u8; 4] = b"ZSVT";
const CACHE_VERSION: u32 = 1;

/// Primality and Moebius values on `[0, limit]`.
///
/// Primality is one bit per integer. The Moebius function is two bits per
/// integer (`00` for 0, `01` for +1, `11` for -1). Per-word prefix counts make
/// `pi(x)` and `M(x)` constant-time lookups.
#[derive(Clone, PartialEq, Eq)]
pub struct SieveTable {
    limit: u64,
    is_prime: Vec<u64>,
    mobius: Vec<u64>,
    prime_prefix: Vec<u32>,
    mertens_prefix: Vec<i32>,
}

impl std::fmt::Debug for SieveTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SieveTable").field("limit", &self.limit).finish_non_exhaustive()
    }
}

#[inline]
fn mu_code(m: i8) -> u64 {
    match m {
        1 => 0b01,
        -1 => 0b11,
        _ => 0,
    }
}

#[inline]
fn mu_decode(bits: u64) -> i8 {
    match bits & 0b11 {
        0b01 => 1,
        0b11 => -1,
        _ => 0,
    }
}

/// Primes up to `n` by a plain sieve of Eratosthenes.
pub fn small_primes(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

impl SieveTable {
    /// Builds the table for `[0, limit]`.
    pub fn build(limit: u64) -> Result<Self> {
        if limit < 2 {
            return Err(ZetaError::DomainError(format!("sieve limit must be at least 2, got {limit}")));
        }
        if limit > MAX_SIEVE_LIMIT {
            return Err(ZetaError::CapacityExceeded { requested: limit, max: MAX_SIEVE_LIMIT });
        }
        if limit <= LINEAR_SIEVE_MAX {
            Ok(Self::build_linear(limit))
        } else {
            Ok(Self::build_segmented(limit))
        }
    }

    pub(crate) fn build_linear(limit: u64) -> Self {
        let n = limit as usize;
        // 2 marks "not reached yet", which after the sweep means prime
        let mut mu = vec![2i8; n + 1];
        mu[0] = 0;
        mu[1] = 1;
        let mut primes: Vec<u32> = Vec::new();
        for i in 2..=n {
            if mu[i] == 2 {
                mu[i] = -1;
                primes.push(i as u32);
            }
            let mi = mu[i];
            for &p in &primes {
                let ip = i * p as usize;
                if ip > n {
                    break;
                }
                if i % p as usize == 0 {
                    mu[ip] = 0;
                    break;
                }
                mu[ip] = -mi;
            }
        }
        let mut is_prime = vec![0u64; n / 64 + 1];
        for &p in &primes {
            is_prime[p as usize / 64] |= 1 << (p % 64);
        }
        let mut mobius = vec![0u64; n / 32 + 1];
        for (k, &m) in mu.iter().enumerate() {
            mobius[k / 32] |= mu_code(m) << (2 * (k % 32));
        }
        Self::finish(limit, is_prime, mobius)
    }

    pub(crate) fn build_segmented(limit: u64) -> Self {
        let root = (limit as f64).sqrt() as u64 + 2;
        let base = small_primes(root);
        let mut small_flag = vec![false; root as usize + 1];
        for &p in &base {
            small_flag[p as usize] = true;
        }
        let prime_words = (limit / 64 + 1) as usize;
        let mu_words = (limit / 32 + 1) as usize;
        let mut is_prime = vec![0u64; prime_words];
        let mut mobius = vec![0u64; mu_words];
        let seg_prime_words = (SEGMENT / 64) as usize;
        let seg_mu_words = (SEGMENT / 32) as usize;
        is_prime
            .par_chunks_mut(seg_prime_words)
            .zip(mobius.par_chunks_mut(seg_mu_words))
            .enumerate()
            .for_each(|(seg, (pw, mw))| {
                let lo = seg as u64 * SEGMENT;
                let hi = (lo + SEGMENT).min(limit + 1);
                if lo > limit {
                    return;
                }
                let len = (hi - lo) as usize;
                let mut mu = vec![1i8; len];
                let mut prod = vec![1u32; len];
                for &p in &base {
                    if p * p > hi {
                        // still need p | n for n < hi when p <= sqrt(limit): only if p < hi
                        if p >= hi {
                            break;
                        }
                    }
                    let start = lo.div_ceil(p) * p;
                    let mut m = start.max(p);
                    while m < hi {
                        let k = (m - lo) as usize;
                        mu[k] = -mu[k];
                        prod[k] = prod[k].wrapping_mul(p as u32);
                        m += p;
                    }
                    let p2 = p * p;
                    if p2 < hi {
                        let mut m = lo.div_ceil(p2) * p2;
                        while m < hi {
                            mu[(m - lo) as usize] = 0;
                            m += p2;
                        }
                    }
                }
                for k in 0..len {
                    let n = lo + k as u64;
                    let m = if n == 0 {
                        0
                    } else if mu[k] != 0 && u64::from(prod[k]) != n {
                        -mu[k]
                    } else {
                        mu[k]
                    };
                    let prime = n >= 2 && (prod[k] == 1 || (n <= root && small_flag[n as usize]));
                    if prime {
                        pw[k / 64] |= 1 << (k % 64);
                    }
                    mw[k / 32] |= mu_code(m) << (2 * (k % 32));
                }
            });
        Self::finish(limit, is_prime, mobius)
    }

    fn finish(limit: u64, mut is_prime: Vec<u64>, mut mobius: Vec<u64>) -> Self {
        // clear bits beyond the limit so popcounts stay exact
        let extra_p = (limit % 64) + 1;
        if extra_p < 64 {
            let last = is_prime.len() - 1;
            is_prime[last] &= (1u64 << extra_p) - 1;
        }
        let extra_m = (limit % 32) + 1;
        if extra_m < 32 {
            let last = mobius.len() - 1;
            mobius[last] &= (1u64 << (2 * extra_m)) - 1;
        }
        let mut prime_prefix = Vec::with_capacity(is_prime.len());
        let mut acc = 0u32;
        for w in &is_prime {
            prime_prefix.push(acc);
            acc += w.count_ones();
        }
        let mut mertens_prefix = Vec::with_capacity(mobius.len());
        let mut acc = 0i32;
        for w in &mobius {
            mertens_prefix.push(acc);
            acc += word_mu_sum(*w);
        }
        Self { limit, is_prime, mobius, prime_prefix, mertens_prefix }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    fn check(&self, n: u64) -> Result<()> {
        if n > self.limit {
            Err(ZetaError::OutOfRange { value: n as f64, limit: self.limit })
        } else {
            Ok(())
        }
    }

    pub fn is_prime(&self, n: u64) -> bool {
        n <= self.limit && (self.is_prime[(n / 64) as usize] >> (n % 64)) & 1 == 1
    }

    /// `mu(n)` for `1 <= n <= limit` (0 outside).
    pub fn mobius(&self, n: u64) -> i8 {
        if n > self.limit {
            return 0;
        }
        mu_decode(self.mobius[(n / 32) as usize] >> (2 * (n % 32)))
    }

    /// Number of primes `<= n`.
    pub fn prime_count(&self, n: u64) -> Result<u64> {
        self.check(n)?;
        let w = (n / 64) as usize;
        let bits = n % 64;
        let mask = if bits == 63 { u64::MAX } else { (1u64 << (bits + 1)) - 1 };
        Ok(u64::from(self.prime_prefix[w]) + u64::from((self.is_prime[w] & mask).count_ones()))
    }

    /// `M(n) = sum_{k <= n} mu(k)`.
    pub fn mertens(&self, n: u64) -> Result<i64> {
        self.check(n)?;
        let w = (n / 32) as usize;
        let slots = n % 32 + 1;
        let mask = if slots == 32 { u64::MAX } else { (1u64 << (2 * slots)) - 1 };
        Ok(i64::from(self.mertens_prefix[w]) + i64::from(word_mu_sum(self.mobius[w] & mask)))
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.is_prime.iter().enumerate().flat_map(|(w, &bits)| {
            let mut b = bits;
            std::iter::from_fn(move || {
                if b == 0 {
                    return None;
                }
                let tz = b.trailing_zeros();
                b &= b - 1;
                Some(w as u64 * 64 + u64::from(tz))
            })
        })
    }

    /// Writes the binary cache: magic `ZSVT`, version, limit, word counts,
    /// the SHA-256 of each payload, then both payloads little-endian.
    pub fn export(&self, path: &Path) -> Result<()> {
        let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
        let prime_bytes = words_to_bytes(&self.is_prime);
        let mu_bytes = words_to_bytes(&self.mobius);
        out.write_all(CACHE_MAGIC)?;
        out.write_all(&CACHE_VERSION.to_le_bytes())?;
        out.write_all(&self.limit.to_le_bytes())?;
        out.write_all(&(self.is_prime.len() as u64).to_le_bytes())?;
        out.write_all(&(self.mobius.len() as u64).to_le_bytes())?;
        out.write_all(&Sha256::digest(&prime_bytes))?;
        out.write_all(&Sha256::digest(&mu_bytes))?;
        out.write_all(&prime_bytes)?;
        out.write_all(&mu_bytes)?;
        out.flush()?;
        Ok(())
    }

    pub fn import(path: &Path) -> Result<Self> {
        let mut data = Vec::new();
        std::fs::File::open(path)?.read_to_end(&mut data)?;
        let header = 4 + 4 + 8 * 3 + 64;
        if data.len() < header || &data[..4] != CACHE_MAGIC {
            return Err(ZetaError::FormatError("not a sieve cache (bad magic)".into()));
        }
        let u32_at = |o: usize| u32::from_le_bytes(data[o..o + 4].try_into().expect("4 bytes"));
        let u64_at = |o: usize| u64::from_le_bytes(data[o..o + 8].try_into().expect("8 bytes"));
        if u32_at(4) != CACHE_VERSION {
            return Err(ZetaError::FormatError(format!("unsupported sieve cache version {}", u32_at(4))));
        }
        let limit = u64_at(8);
        let np = u64_at(16) as usize;
        let nm = u64_at(24) as usize;
        if limit < 2 || limit > MAX_SIEVE_LIMIT || np != (limit / 64 + 1) as usize || nm != (limit / 32 + 1) as usize {
            return Err(ZetaError::FormatError("inconsistent sieve cache header".into()));
        }
        if data.len() != header + 8 * (np + nm) {
            return Err(ZetaError::FormatError("sieve cache payload has the wrong length".into()));
        }
        let prime_bytes = &data[header..header + 8 * np];
        let mu_bytes = &data[header + 8 * np..];
        if Sha256::digest(prime_bytes).as_slice() != &data[32..64] || Sha256::digest(mu_bytes).as_slice() != &data[64..96] {
            return Err(ZetaError::FormatError("sieve cache checksum mismatch".into()));
        }
        Ok(Self::finish(limit, bytes_to_words(prime_bytes), bytes_to_words(mu_bytes)))
    }
}

fn word_mu_sum(w: u64) -> i32 {
    // low bit of each pair marks a nonzero value, high bit marks -1
    let low = w & 0x5555_5555_5555_5555;
    let high = (w >> 1) & 0x5555_5555_5555_5555;
    low.count_ones() as i32 - 2 * high.count_ones() as i32
}

fn words_to_bytes(words: &[u64]) -> Vec<u8> {
    words.iter().flat_map(|w| w.to_le_bytes()).collect()
}

fn bytes_to_words(bytes: &[u8]) -> Vec<u64> {
    bytes.chunks_exact(8).map(|c| u64::from_le_bytes(c.try_into().expect("8 bytes"))).collect()
}

/// Partial sums `M(x)` for `x = 0..=limit`.
#[derive(Debug, Clone)]
pub struct MertensSeries {
    partial: Vec<i32>,
}

impl MertensSeries {
    pub fn new(table: &SieveTable, limit: u64) -> Result<Self> {
        table.check(limit)?;
        let mut partial = Vec::with_capacity(limit as usize + 1);
        let mut acc = 0i32;
        partial.push(0);
        for n in 1..=limit {
            acc += i32::from(table.mobius(n));
            partial.push(acc);
        }
        Ok(Self { partial })
    }

    pub fn limit(&self) -> u64 {
        self.partial.len() as u64 - 1
    }

    pub fn get(&self, x: u64) -> i64 {
        i64::from(self.partial[x as usize])
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.partial
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builders_agree() {
        let a = SieveTable::build_linear(1_000_003);
        let b = SieveTable::build_segmented(1_000_003);
        assert_eq!(a.is_prime, b.is_prime);
        assert_eq!(a.mobius, b.mobius);
        assert_eq!(a, b);
    }

    #[test]
    fn prefix_queries_match_brute_force() {
        let t = SieveTable::build(5000).unwrap();
        let mut pi = 0;
        let mut m = 0i64;
        for n in 1..=5000u64 {
            if t.is_prime(n) {
                pi += 1;
            }
            m += i64::from(t.mobius(n));
            assert_eq!(t.prime_count(n).unwrap(), pi);
            assert_eq!(t.mertens(n).unwrap(), m);
        }
        assert_eq!(t.primes().count() as u64, pi);
        assert!(t.prime_count(5001).is_err());
    }

    #[test]
    fn limits_enforced() {
        assert!(matches!(SieveTable::build(MAX_SIEVE_LIMIT + 1), Err(ZetaError::CapacityExceeded { .. })));
        assert!(SieveTable::build(1).is_err());
    }

    #[test]
    fn cache_round_trip_and_corruption() {
        let t = SieveTable::build(100_000).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("sieve.bin");
        t.export(&path).unwrap();
        let back = SieveTable::import(&path).unwrap();
        assert_eq!(t, back);
        let mut bytes = std::fs::read(&path).unwrap();
        let last = bytes.len() - 3;
        bytes[last] ^= 0x10;
        std::fs::write(&path, &bytes).unwrap();
        assert!(matches!(SieveTable::import(&path), Err(ZetaError::FormatError(_))));
    }
}
