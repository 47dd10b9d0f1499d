//! Optional `key = value` configuration for caps, worker count and the
//! OEIS cache directory.

use std::path::{Path, PathBuf};

use permstat_core::Caps;

pub const CACHE_DIR_ENV: &str = "PERMSTAT_CACHE_DIR";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub caps: Caps,
    pub cache_dir: Option<PathBuf>,
    pub workers: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            caps: Caps::default(),
            cache_dir: None,
            workers: 1,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("config line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("cannot read config {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl Config {
    /// Parses `key = value` lines. Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Config, ConfigError> {
        let mut cfg = Config::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| ConfigError::Syntax {
                line: i + 1,
                message,
            };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| err(format!("expected key = value, got {line:?}")))?;
            let (key, value) = (key.trim(), value.trim());
            let number = || {
                value
                    .parse::<usize>()
                    .map_err(|_| err(format!("{key} needs a non-negative integer, got {value:?}")))
            };
            match key {
                "perm_cap" => cfg.caps.perm = number()?,
                "dyck_cap" => cfg.caps.dyck = number()?,
                "bits_cap" => cfg.caps.bits = number()?,
                "series_cap" => cfg.caps.series = number()?,
                "workers" => cfg.workers = number()?.max(1),
                "cache_dir" => cfg.cache_dir = Some(PathBuf::from(value)),
                _ => return Err(err(format!("unknown key {key:?}"))),
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Config, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.to_owned(),
            source,
        })?;
        Config::parse(&text)
    }

    /// Flag, then environment, then config file, then the platform cache dir.
    pub fn resolve_cache_dir(&self, flag: Option<&Path>) -> PathBuf {
        if let Some(p) = flag {
            return p.to_owned();
        }
        if let Some(p) = std::env::var_os(CACHE_DIR_ENV).filter(|v| !v.is_empty()) {
            return PathBuf::from(p);
        }
        if let Some(p) = &self.cache_dir {
            return p.clone();
        }
        dirs::cache_dir()
            .unwrap_or_else(std::env::temp_dir)
            .join("permstat")
            .join("oeis")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys_and_comments() {
        let cfg = Config::parse(
            "# caps\nperm_cap = 9\nseries_cap=30 # deeper\n\ncache_dir = /tmp/x\nworkers = 4\n",
        )
        .unwrap();
        assert_eq!(cfg.caps.perm, 9);
        assert_eq!(cfg.caps.series, 30);
        assert_eq!(cfg.caps.dyck, 14);
        assert_eq!(cfg.workers, 4);
        assert_eq!(cfg.cache_dir, Some(PathBuf::from("/tmp/x")));
    }

    #[test]
    fn reports_line_numbers() {
        let err = Config::parse("perm_cap = 9\nbogus\n").unwrap_err();
        assert!(matches!(err, ConfigError::Syntax { line: 2, .. }));
        let err = Config::parse("perm_cap = -1").unwrap_err();
        assert!(matches!(err, ConfigError::Syntax { line: 1, .. }));
        assert!(Config::parse("colour = red").is_err());
    }

    #[test]
    fn flag_wins_for_cache_dir() {
        let cfg = Config {
            cache_dir: Some("/from/config".into()),
            ..Config::default()
        };
        assert_eq!(
            cfg.resolve_cache_dir(Some(Path::new("/flag"))),
            PathBuf::from("/flag")
        );
    }
}
