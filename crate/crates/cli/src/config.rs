//! `key=value` configuration files.
//!
//! Each key is the long name of a flag, global or belonging to the chosen
//! subcommand. Config values are spliced into the argument list right after
//! the subcommand, so flags given on the command line win.

use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::CommandFactory;

use crate::Cli;

/// Reads `key=value` lines; `#` starts a comment.
pub fn parse(text: &str) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            bail!("config line {}: expected key=value, got {line:?}", i + 1);
        };
        let k = k.trim();
        if k.is_empty() {
            bail!("config line {}: empty key", i + 1);
        }
        out.push((k.to_string(), v.trim().to_string()));
    }
    Ok(out)
}

fn config_path(argv: &[String]) -> Option<String> {
    let mut it = argv.iter();
    while let Some(a) = it.next() {
        if a == "--config" {
            return it.next().cloned();
        }
        if let Some(p) = a.strip_prefix("--config=") {
            return Some(p.to_string());
        }
    }
    None
}

/// Expands `--config FILE` into explicit flags. Unknown keys are errors.
pub fn merge(argv: Vec<String>) -> Result<Vec<String>> {
    let Some(path) = config_path(&argv) else {
        return Ok(argv);
    };
    let text = std::fs::read_to_string(Path::new(&path)).with_context(|| format!("reading config file {path}"))?;
    let pairs = parse(&text)?;
    let cmd = Cli::command();
    let sub_pos = argv.iter().position(|a| cmd.get_subcommands().any(|s| s.get_name() == a));
    let Some(sub_pos) = sub_pos else {
        bail!("a config file needs a subcommand on the command line");
    };
    let sub = cmd.find_subcommand(&argv[sub_pos]).expect("matched above");
    let mut injected = Vec::new();
    for (k, v) in pairs {
        if k == "config" {
            bail!("config files cannot include other config files");
        }
        let arg = cmd
            .get_arguments()
            .chain(sub.get_arguments())
            .find(|a| a.get_long() == Some(k.as_str()))
            .ok_or_else(|| anyhow::anyhow!("unknown config key {k:?} for {}", sub.get_name()))?;
        let flag = format!("--{k}");
        if argv.iter().any(|a| *a == flag || a.starts_with(&format!("{flag}="))) {
            continue;
        }
        if arg.get_action().takes_values() {
            injected.push(format!("--{k}={v}"));
        } else {
            match v.as_str() {
                "true" => injected.push(format!("--{k}")),
                "false" => {}
                _ => bail!("config key {k:?} is a switch; use true or false"),
            }
        }
    }
    let mut out = argv[..=sub_pos].to_vec();
    out.extend(injected);
    out.extend_from_slice(&argv[sub_pos + 1..]);
    Ok(out)
}
