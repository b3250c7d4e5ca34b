//! Flat `key=value` experiment manifests.
//!
//! A manifest supplies defaults for any long flag of the subcommand being
//! run; values given on the command line win. Lines that are blank or start
//! with `#` are skipped.

use std::collections::HashMap;
use std::path::{Path, PathBuf};

const KNOWN_KEYS: &[&str] = &[
    "theta",
    "xi",
    "zeta",
    "delta",
    "eta",
    "eps-rec",
    "out",
    "steps",
    "n",
    "horizon-cycles",
    "theta-list",
];

#[derive(Debug, Default)]
pub struct FileConfig {
    values: HashMap<String, String>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        let mut values = HashMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("{}:{}: expected key=value", path.display(), lineno + 1))?;
            let key = key.trim();
            if !KNOWN_KEYS.contains(&key) {
                return Err(format!(
                    "{}:{}: unknown key `{key}`",
                    path.display(),
                    lineno + 1
                ));
            }
            values.insert(key.to_string(), value.trim().to_string());
        }
        Ok(Self { values })
    }

    pub fn f64(&self, key: &str) -> Result<Option<f64>, String> {
        self.values
            .get(key)
            .map(|v| {
                v.parse::<f64>()
                    .map_err(|_| format!("config key `{key}`: `{v}` is not a number"))
            })
            .transpose()
    }

    pub fn usize(&self, key: &str) -> Result<Option<usize>, String> {
        self.values
            .get(key)
            .map(|v| {
                v.parse::<usize>()
                    .map_err(|_| format!("config key `{key}`: `{v}` is not a non-negative integer"))
            })
            .transpose()
    }

    pub fn path(&self, key: &str) -> Option<PathBuf> {
        self.values.get(key).map(PathBuf::from)
    }

    pub fn f64_list(&self, key: &str) -> Result<Option<Vec<f64>>, String> {
        self.values
            .get(key)
            .map(|v| {
                v.split(',')
                    .map(|item| {
                        item.trim()
                            .parse::<f64>()
                            .map_err(|_| format!("config key `{key}`: `{item}` is not a number"))
                    })
                    .collect()
            })
            .transpose()
    }
}

/// Command line beats config file beats built-in default.
pub fn pick<T>(flag: Option<T>, file: Option<T>, default: T) -> T {
    flag.or(file).unwrap_or(default)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write_config(content: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f
    }

    #[test]
    fn parses_keys_and_skips_comments() {
        let f = write_config("# experiment\ntheta = 45\nsteps=100\n\nn = 8\n");
        let cfg = FileConfig::load(f.path()).unwrap();
        assert_eq!(cfg.f64("theta").unwrap(), Some(45.0));
        assert_eq!(cfg.usize("steps").unwrap(), Some(100));
        assert_eq!(cfg.usize("n").unwrap(), Some(8));
        assert_eq!(cfg.f64("xi").unwrap(), None);
    }

    #[test]
    fn rejects_unknown_keys_and_bad_lines() {
        let f = write_config("thta = 45\n");
        assert!(FileConfig::load(f.path())
            .unwrap_err()
            .contains("unknown key"));
        let f = write_config("just a line\n");
        assert!(FileConfig::load(f.path())
            .unwrap_err()
            .contains("key=value"));
    }

    #[test]
    fn flags_beat_file_values() {
        assert_eq!(pick(Some(1.0), Some(2.0), 3.0), 1.0);
        assert_eq!(pick(None, Some(2.0), 3.0), 2.0);
        assert_eq!(pick::<f64>(None, None, 3.0), 3.0);
    }

    #[test]
    fn theta_list_parses_comma_separated() {
        let f = write_config("theta-list = 15, 45, 75\n");
        let cfg = FileConfig::load(f.path()).unwrap();
        assert_eq!(
            cfg.f64_list("theta-list").unwrap(),
            Some(vec![15.0, 45.0, 75.0])
        );
    }
}
