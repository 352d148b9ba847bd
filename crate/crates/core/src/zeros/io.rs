//! Zero tables on disk.
//!
//! Text: ASCII, one ordinate per line in ascending order, `#` starts a
//! comment. Values are written in shortest round-trip form, so export then
//! import reproduces every `f64` exactly. On import each entry's error bound
//! is half a unit in its last written decimal place.
//!
//! Binary (little-endian): magic `ZETZ`, version `u32`, count `u64`, digits
//! `u32`, then `count` pairs `(gamma: f64, bound: f64)`, then the SHA-256 of
//! the pair payload.

use std::io::Write;
use std::path::Path;

use sha2::{Digest, Sha256};

use crate::error::{Result, ZetaError};
use crate::zeros::{Provenance, ZeroStore};

const MAGIC: &[u8; 4] = b"ZETZ";
const VERSION: u32 = 1;
const HEADER_LEN: usize = 4 + 4 + 8 + 4;

/// On-disk layout of a zero table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroFormat {
    Text,
    Binary,
}

impl ZeroFormat {
    /// Binary for `.bin`/`.zetz` extensions, text otherwise.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some("bin") | Some("zetz") => ZeroFormat::Binary,
            _ => ZeroFormat::Text,
        }
    }
}

pub(crate) fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn export_zeros(store: &ZeroStore, path: &Path, format: ZeroFormat) -> Result<()> {
    let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
    match format {
        ZeroFormat::Text => {
            writeln!(out, "# zero ordinates gamma_n of 1/2 + i gamma_n, ascending")?;
            writeln!(out, "# count {}", store.len())?;
            for g in store.gammas() {
                writeln!(out, "{g}")?;
            }
        }
        ZeroFormat::Binary => {
            let mut payload = Vec::with_capacity(16 * store.len());
            for (g, b) in store.gammas().iter().zip(store.error_bounds()) {
                payload.extend_from_slice(&g.to_le_bytes());
                payload.extend_from_slice(&b.to_le_bytes());
            }
            out.write_all(MAGIC)?;
            out.write_all(&VERSION.to_le_bytes())?;
            out.write_all(&(store.len() as u64).to_le_bytes())?;
            out.write_all(&store.digits().to_le_bytes())?;
            out.write_all(&payload)?;
            out.write_all(&Sha256::digest(&payload))?;
        }
    }
    out.flush()?;
    Ok(())
}

/// Reads either format, recognising binary tables by their magic.
pub fn import_zeros(path: &Path) -> Result<ZeroStore> {
    let data = std::fs::read(path)?;
    let sha256 = hex(&Sha256::digest(&data));
    let provenance = Provenance::Imported { source: path.display().to_string(), sha256 };
    if data.starts_with(MAGIC) {
        parse_binary(&data, provenance)
    } else {
        let text = std::str::from_utf8(&data).map_err(|_| ZetaError::FormatError("zero table is not UTF-8 text".into()))?;
        parse_text(text, provenance)
    }
}

fn parse_binary(data: &[u8], provenance: Provenance) -> Result<ZeroStore> {
    if data.len() < HEADER_LEN + 32 {
        return Err(ZetaError::FormatError("binary zero table truncated".into()));
    }
    let version = u32::from_le_bytes(data[4..8].try_into().expect("4 bytes"));
    if version != VERSION {
        return Err(ZetaError::FormatError(format!("unsupported zero table version {version}")));
    }
    let count = u64::from_le_bytes(data[8..16].try_into().expect("8 bytes")) as usize;
    let expected = count.checked_mul(16).and_then(|p| p.checked_add(HEADER_LEN + 32));
    if expected != Some(data.len()) {
        return Err(ZetaError::FormatError("binary zero table length does not match its count".into()));
    }
    let payload = &data[HEADER_LEN..HEADER_LEN + 16 * count];
    if Sha256::digest(payload).as_slice() != &data[HEADER_LEN + 16 * count..] {
        return Err(ZetaError::FormatError("binary zero table checksum mismatch".into()));
    }
    let mut gammas = Vec::with_capacity(count);
    let mut bounds = Vec::with_capacity(count);
    for pair in payload.chunks_exact(16) {
        gammas.push(f64::from_le_bytes(pair[..8].try_into().expect("8 bytes")));
        bounds.push(f64::from_le_bytes(pair[8..].try_into().expect("8 bytes")));
    }
    ZeroStore::new(gammas, bounds, provenance)
}

fn parse_text(text: &str, provenance: Provenance) -> Result<ZeroStore> {
    let mut gammas = Vec::new();
    let mut bounds = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let g: f64 = line
            .parse()
            .map_err(|_| ZetaError::FormatError(format!("line {}: not a number: {line:?}", lineno + 1)))?;
        let decimals = line.split_once('.').map_or(0, |(_, frac)| frac.chars().take_while(char::is_ascii_digit).count());
        let half_unit = 0.5 * 10f64.powi(-(decimals as i32));
        bounds.push(half_unit.max(0.5 * f64::EPSILON * g.abs()));
        gammas.push(g);
    }
    ZeroStore::new(gammas, bounds, provenance)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TABLE: [f64; 10] = [
        14.134725142, 21.022039639, 25.010857580, 30.424876126, 32.935061588,
        37.586178159, 40.918719012, 43.327073281, 48.005150881, 49.773832478,
    ];

    fn table_store() -> ZeroStore {
        let p = Provenance::Imported { source: "inline".into(), sha256: String::new() };
        ZeroStore::new(TABLE.to_vec(), vec![5e-10; 10], p).unwrap()
    }

    #[test]
    fn text_and_binary_round_trip_bit_exact() {
        let dir = tempfile::tempdir().unwrap();
        let store = table_store();
        for (name, fmt) in [("z.txt", ZeroFormat::Text), ("z.bin", ZeroFormat::Binary)] {
            let path = dir.path().join(name);
            export_zeros(&store, &path, fmt).unwrap();
            let back = import_zeros(&path).unwrap();
            assert_eq!(back.len(), 10);
            for (a, b) in store.gammas().iter().zip(back.gammas()) {
                assert_eq!(a.to_bits(), b.to_bits());
            }
            assert_eq!(ZeroFormat::from_path(&path), fmt);
        }
    }

    #[test]
    fn empty_and_shuffled_inputs() {
        let dir = tempfile::tempdir().unwrap();
        let empty = dir.path().join("empty.txt");
        std::fs::write(&empty, "").unwrap();
        assert!(import_zeros(&empty).unwrap().is_empty());
        let shuffled = dir.path().join("shuffled.txt");
        std::fs::write(&shuffled, "# comment\n21.022039639\n14.134725142\n").unwrap();
        assert!(matches!(import_zeros(&shuffled), Err(ZetaError::NonMonotonicInput { index: 1 })));
        let junk = dir.path().join("junk.txt");
        std::fs::write(&junk, "14.1\nabc\n").unwrap();
        assert!(matches!(import_zeros(&junk), Err(ZetaError::FormatError(_))));
    }

    #[test]
    fn text_bounds_follow_written_decimals() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.txt");
        std::fs::write(&path, "14.134725142  # first\n21.02\n").unwrap();
        let s = import_zeros(&path).unwrap();
        assert!((s.error_bounds()[0] - 5e-10).abs() < 1e-22);
        assert!((s.error_bounds()[1] - 5e-3).abs() < 1e-15);
    }

    #[test]
    fn binary_corruption_detected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("z.bin");
        export_zeros(&table_store(), &path, ZeroFormat::Binary).unwrap();
        let mut bytes = std::fs::read(&path).unwrap();
        bytes[HEADER_LEN + 3] ^= 1;
        std::fs::write(&path, &bytes).unwrap();
        assert!(matches!(import_zeros(&path), Err(ZetaError::FormatError(_))));
    }
}
