//! Run configuration: built-in defaults, then a key = value file, then
//! environment variables, each overriding the previous.

use std::path::{Path, PathBuf};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_order: usize,
    pub max_degree: usize,
    /// LLL runs are skipped for cells with more unknowns than this.
    pub lll_max_unknowns: usize,
    /// Overrides each registry entry's report length when set.
    pub report_terms: Option<u64>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_order: 16, max_degree: 24, lll_max_unknowns: 100, report_terms: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub cache_dir: PathBuf,
    pub network: bool,
    pub budget: Budget,
}

impl Default for Config {
    fn default() -> Self {
        Config { cache_dir: PathBuf::from(".holorec-cache"), network: false, budget: Budget::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("line {0}: expected key = value")]
    Syntax(usize),
    #[error("unknown key {0:?}")]
    UnknownKey(String),
    #[error("bad value {value:?} for {key}")]
    BadValue { key: String, value: String },
    #[error("cannot read {0}")]
    Unreadable(String),
}

/// Environment variables and the keys they set.
pub const ENV_KEYS: [(&str, &str); 6] = [
    ("HOLOREC_CACHE_DIR", "cache_dir"),
    ("HOLOREC_NETWORK", "network"),
    ("HOLOREC_MAX_ORDER", "max_order"),
    ("HOLOREC_MAX_DEGREE", "max_degree"),
    ("HOLOREC_LLL_MAX_UNKNOWNS", "lll_max_unknowns"),
    ("HOLOREC_REPORT_TERMS", "report_terms"),
];

fn parse_bool(v: &str) -> Option<bool> {
    match v.to_ascii_lowercase().as_str() {
        "1" | "true" | "on" | "yes" => Some(true),
        "0" | "false" | "off" | "no" => Some(false),
        _ => None,
    }
}

impl Config {
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        let bad = || ConfigError::BadValue { key: key.to_string(), value: value.to_string() };
        let num = || value.parse::<usize>().map_err(|_| bad());
        match key {
            "cache_dir" => self.cache_dir = PathBuf::from(value),
            "network" => self.network = parse_bool(value).ok_or_else(bad)?,
            "max_order" => self.budget.max_order = num()?,
            "max_degree" => self.budget.max_degree = num()?,
            "lll_max_unknowns" => self.budget.lll_max_unknowns = num()?,
            "report_terms" => self.budget.report_terms = Some(num()? as u64),
            _ => return Err(ConfigError::UnknownKey(key.to_string())),
        }
        Ok(())
    }

    /// Applies a key = value text on top of `self`.
    pub fn apply_text(&mut self, text: &str) -> Result<(), ConfigError> {
        for (k, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or(ConfigError::Syntax(k + 1))?;
            self.set(key.trim(), value.trim())?;
        }
        Ok(())
    }

    pub fn apply_env(&mut self, env: impl Fn(&str) -> Option<String>) -> Result<(), ConfigError> {
        for (var, key) in ENV_KEYS {
            if let Some(v) = env(var) {
                self.set(key, &v)?;
            }
        }
        Ok(())
    }

    /// Defaults, then `file` if given, then the environment.
    pub fn load(file: Option<&Path>, env: impl Fn(&str) -> Option<String>) -> Result<Config, ConfigError> {
        let mut c = Config::default();
        if let Some(p) = file {
            let text = std::fs::read_to_string(p).map_err(|_| ConfigError::Unreadable(p.display().to_string()))?;
            c.apply_text(&text)?;
        }
        c.apply_env(env)?;
        Ok(c)
    }
}
