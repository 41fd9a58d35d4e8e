//! `key=value` config files. Each key is a long flag name (`d` also
//! accepted for `degree`); `command` names the subcommand. Lines starting
//! with `#` are comments. Values are appended to the argument list only
//! when the flag is absent, so flags given on the command line win.

use std::fs;
use std::path::Path;

const SUBCOMMANDS: [&str; 9] =
    ["classify", "curve", "whittaker", "reconstruct", "verify", "ezero", "case1", "laguerre", "kovacic"];

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

pub fn parse(text: &str) -> Result<Vec<(String, String)>, String> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| format!("config line {}: expected key=value", i + 1))?;
        let k = k.trim();
        let k = if k == "d" { "degree" } else { k };
        if k.is_empty() || k.starts_with('-') {
            return Err(format!("config line {}: bad key {k:?}", i + 1));
        }
        out.push((k.replace('_', "-"), v.trim().to_string()));
    }
    Ok(out)
}

fn present(argv: &[String], key: &str) -> bool {
    let long = format!("--{key}");
    let eq = format!("--{key}=");
    argv.iter()
        .any(|a| a == &long || a.starts_with(&eq) || (key == "degree" && (a == "-d" || a.starts_with("-d"))))
}

/// Merge the config file named by `--config`, if any, into `argv`.
pub fn inject(mut argv: Vec<String>) -> Result<Vec<String>, String> {
    let Some(path) = config_path(&argv) else {
        return Ok(argv);
    };
    let text = fs::read_to_string(Path::new(&path)).map_err(|e| format!("cannot read config {path}: {e}"))?;
    let pairs = parse(&text)?;
    let has_command = argv.iter().skip(1).any(|a| SUBCOMMANDS.contains(&a.as_str()));
    for (k, v) in pairs {
        if k == "command" {
            if !has_command {
                argv.insert(1, v);
            }
            continue;
        }
        if present(&argv, &k) {
            continue;
        }
        match v.as_str() {
            "true" => argv.push(format!("--{k}")),
            "false" => {}
            _ => argv.push(format!("--{k}={v}")),
        }
    }
    Ok(argv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn keys_and_comments() {
        let p = parse("# x\nsubcase = 1\nd=7\nalpha_window=0:1\n").unwrap();
        assert_eq!(p[1], ("degree".to_string(), "7".to_string()));
        assert_eq!(p[2].0, "alpha-window");
        assert!(parse("nonsense").is_err());
    }

    #[test]
    fn flags_win() {
        let argv = args(&["rdirac", "classify", "-d", "3", "--alpha=1/2"]);
        assert!(present(&argv, "degree"));
        assert!(present(&argv, "alpha"));
        assert!(!present(&argv, "lambda"));
    }
}
