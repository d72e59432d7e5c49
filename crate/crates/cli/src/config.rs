//! Parameter grid configuration for the `all` runner.

use std::path::Path;

use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("config parse error: {0}")]
    Parse(String),
}

/// Grid defaults: `dim` in 5..8, `l` in {2,3}, `k` in {1,2}, `n` in {2,3},
/// 20 samples. The Kuga-Satake sweep stays at Clifford dimension <= 64.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GridConfig {
    pub dims: Vec<usize>,
    pub ks_dims: Vec<usize>,
    pub ls: Vec<usize>,
    pub ks: Vec<i64>,
    pub ns: Vec<usize>,
    pub types: Vec<String>,
    pub bound: i64,
    pub samples: usize,
    pub seed: u64,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig {
            dims: vec![5, 6, 7, 8],
            ks_dims: vec![5, 6, 7],
            ls: vec![2, 3],
            ks: vec![1, 2],
            ns: vec![2, 3],
            types: vec!["B".into(), "D".into()],
            bound: 10,
            samples: 20,
            seed: 1,
        }
    }
}

impl GridConfig {
    pub fn from_file(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.display().to_string(),
            source,
        })?;
        serde_json::from_str(&text).map_err(|e| ConfigError::Parse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_and_partial_overrides() {
        let c = GridConfig::default();
        assert_eq!(c.dims, vec![5, 6, 7, 8]);
        let parsed: GridConfig =
            serde_json::from_str(r#"{"dims": [5], "samples": 3}"#).unwrap();
        assert_eq!(parsed.dims, vec![5]);
        assert_eq!(parsed.samples, 3);
        assert_eq!(parsed.seed, 1);
        assert!(serde_json::from_str::<GridConfig>(r#"{"bogus": 1}"#).is_err());
    }
}
