//! Run manifests: parameters, zero provenance and a checksum per output.
//!
//! Format, one `key: value` per line:
//!
//! ```text
//! tool: zetalab 0.1.0
//! subcommand: pi-explicit
//! timestamp: 1700000000
//! parameters: <debug rendering of the parsed arguments>
//! zeros: computed certified_height=... digits=...
//! output: pi_explicit.csv sha256=<hex> bytes=<n>
//! ```
//!
//! Only the `timestamp` line differs between identical runs.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use sha2::{Digest, Sha256};
use zetalab::zeros::Provenance;

pub struct Manifest {
    pub subcommand: String,
    pub parameters: String,
    pub zeros: Option<String>,
    pub outputs: Vec<PathBuf>,
}

pub fn describe_provenance(p: &Provenance) -> String {
    match p {
        Provenance::Computed { certified_height, digits } => {
            format!("computed certified_height={certified_height} digits={digits}")
        }
        Provenance::Imported { source, sha256 } => format!("imported source={source} sha256={sha256}"),
    }
}

pub fn sha256_file(path: &Path) -> Result<String> {
    let data = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(Sha256::digest(&data).iter().map(|b| format!("{b:02x}")).collect())
}

impl Manifest {
    pub fn new(subcommand: &str, parameters: String) -> Self {
        Self { subcommand: subcommand.into(), parameters, zeros: None, outputs: Vec::new() }
    }

    pub fn render(&self) -> Result<String> {
        let stamp = std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        let mut s = String::new();
        writeln!(s, "tool: zetalab {}", env!("CARGO_PKG_VERSION"))?;
        writeln!(s, "subcommand: {}", self.subcommand)?;
        writeln!(s, "timestamp: {stamp}")?;
        writeln!(s, "parameters: {}", self.parameters)?;
        if let Some(z) = &self.zeros {
            writeln!(s, "zeros: {z}")?;
        }
        for out in &self.outputs {
            let bytes = std::fs::metadata(out)?.len();
            let name = out.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
            writeln!(s, "output: {name} sha256={} bytes={bytes}", sha256_file(out)?)?;
        }
        Ok(s)
    }

    /// Writes `<subcommand>.manifest` into `dir` and returns its path.
    pub fn write(&self, dir: &Path) -> Result<PathBuf> {
        let path = dir.join(format!("{}.manifest", self.subcommand));
        std::fs::write(&path, self.render()?).with_context(|| format!("writing {}", path.display()))?;
        Ok(path)
    }
}

/// Recomputes every `output:` checksum and returns the names that differ.
#[cfg(test)]
pub fn verify(manifest_path: &Path) -> Result<Vec<String>> {
    let dir = manifest_path.parent().unwrap_or(Path::new("."));
    let text = std::fs::read_to_string(manifest_path)?;
    let mut bad = Vec::new();
    for line in text.lines() {
        let Some(rest) = line.strip_prefix("output: ") else { continue };
        let mut parts = rest.split(' ');
        let name = parts.next().unwrap_or_default();
        let want = parts.find_map(|p| p.strip_prefix("sha256=")).unwrap_or_default();
        let path = dir.join(name);
        if !path.exists() || sha256_file(&path)? != want {
            bad.push(name.to_string());
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_corrupted_output() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("a.csv");
        std::fs::write(&out, "x\n1\n").unwrap();
        let mut m = Manifest::new("demo", "Args { n: 1 }".into());
        m.outputs.push(out.clone());
        let p = m.write(dir.path()).unwrap();
        assert!(verify(&p).unwrap().is_empty());
        std::fs::write(&out, "x\n2\n").unwrap();
        assert_eq!(verify(&p).unwrap(), vec!["a.csv".to_string()]);
    }

    #[test]
    fn identical_runs_differ_only_in_timestamp() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("a.csv");
        std::fs::write(&out, "x\n1\n").unwrap();
        let mut m = Manifest::new("demo", "p".into());
        m.outputs.push(out);
        let strip = |s: String| s.lines().filter(|l| !l.starts_with("timestamp:")).collect::<Vec<_>>().join("\n");
        assert_eq!(strip(m.render().unwrap()), strip(m.render().unwrap()));
    }
}
