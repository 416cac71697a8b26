//! Flat key-value configuration files.
//!
//! The format is deliberately plain: `[section]` headers, `key = value`
//! pairs, `#` comments, nothing nested. Each value remembers the line it
//! came from so validation errors can point at it. CLI flags override file
//! values by rewriting the pair before anything is read, which also makes
//! the provenance hash cover the effective configuration rather than the
//! file as typed.

use crate::error::AppError;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;

/// Parsed configuration: `(section, key) -> (value, line)`.
#[derive(Debug, Clone, Default)]
pub struct RawConfig {
    origin: String,
    values: BTreeMap<(String, String), (String, usize)>,
}

impl RawConfig {
    /// Empty configuration (commands fall back to their defaults).
    pub fn empty() -> Self {
        Self {
            origin: "<defaults>".into(),
            values: BTreeMap::new(),
        }
    }

    pub fn parse(text: &str, origin: &str) -> Result<Self, AppError> {
        let mut values = BTreeMap::new();
        let mut section = String::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = match raw.find('#') {
                Some(i) => raw[..i].trim(),
                None => raw.trim(),
            };
            if line.is_empty() {
                continue;
            }
            if let Some(stripped) = line.strip_prefix('[') {
                let Some(name) = stripped.strip_suffix(']') else {
                    return Err(AppError::validation(format!(
                        "{origin} line {line_no}: unterminated section header"
                    )));
                };
                section = name.trim().to_string();
                if section.is_empty() {
                    return Err(AppError::validation(format!(
                        "{origin} line {line_no}: empty section name"
                    )));
                }
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(AppError::validation(format!(
                    "{origin} line {line_no}: expected `key = value`"
                )));
            };
            let key = key.trim().to_string();
            let value = value.trim().to_string();
            if key.is_empty() {
                return Err(AppError::validation(format!(
                    "{origin} line {line_no}: empty key"
                )));
            }
            if section.is_empty() {
                return Err(AppError::validation(format!(
                    "{origin} line {line_no}: key `{key}` appears before any [section]"
                )));
            }
            if values
                .insert((section.clone(), key.clone()), (value, line_no))
                .is_some()
            {
                return Err(AppError::validation(format!(
                    "{origin} line {line_no}: duplicate key `{section}.{key}`"
                )));
            }
        }
        Ok(Self {
            origin: origin.to_string(),
            values,
        })
    }

    /// Inserts or overwrites a value (used for CLI overrides; line 0).
    pub fn set(&mut self, section: &str, key: &str, value: String) {
        self.values
            .insert((section.to_string(), key.to_string()), (value, 0));
    }

    fn entry(&self, section: &str, key: &str) -> Option<&(String, usize)> {
        self.values.get(&(section.to_string(), key.to_string()))
    }

    fn where_is(&self, line: usize) -> String {
        if line == 0 {
            "command line".to_string()
        } else {
            format!("{} line {line}", self.origin)
        }
    }

    pub fn str_or<'a>(&'a self, section: &str, key: &str, default: &'a str) -> &'a str {
        self.entry(section, key).map_or(default, |(v, _)| v.as_str())
    }

    pub fn f64(&self, section: &str, key: &str) -> Result<Option<f64>, AppError> {
        match self.entry(section, key) {
            None => Ok(None),
            Some((v, line)) => v.parse::<f64>().map(Some).map_err(|_| {
                AppError::validation(format!(
                    "{}: {section}.{key} must be a number, got `{v}`",
                    self.where_is(*line)
                ))
            }),
        }
    }

    pub fn f64_or(&self, section: &str, key: &str, default: f64) -> Result<f64, AppError> {
        Ok(self.f64(section, key)?.unwrap_or(default))
    }

    pub fn require_f64(&self, section: &str, key: &str) -> Result<f64, AppError> {
        self.f64(section, key)?.ok_or_else(|| {
            AppError::validation(format!("{}: missing {section}.{key}", self.origin))
        })
    }

    /// Counts accept either integer or scientific notation (`1e6`).
    pub fn count(&self, section: &str, key: &str) -> Result<Option<u64>, AppError> {
        match self.entry(section, key) {
            None => Ok(None),
            Some((v, line)) => {
                if let Ok(n) = v.parse::<u64>() {
                    return Ok(Some(n));
                }
                let parsed: f64 = v.parse().map_err(|_| {
                    AppError::validation(format!(
                        "{}: {section}.{key} must be a count, got `{v}`",
                        self.where_is(*line)
                    ))
                })?;
                if parsed >= 0.0 && parsed.fract() == 0.0 && parsed <= u64::MAX as f64 {
                    Ok(Some(parsed as u64))
                } else {
                    Err(AppError::validation(format!(
                        "{}: {section}.{key} must be a non-negative integer, got `{v}`",
                        self.where_is(*line)
                    )))
                }
            }
        }
    }

    pub fn count_or(&self, section: &str, key: &str, default: u64) -> Result<u64, AppError> {
        Ok(self.count(section, key)?.unwrap_or(default))
    }

    pub fn require_count(&self, section: &str, key: &str) -> Result<u64, AppError> {
        self.count(section, key)?.ok_or_else(|| {
            AppError::validation(format!("{}: missing {section}.{key}", self.origin))
        })
    }

    /// Rejects keys in `section` that are not in the `known` list; catches
    /// typos in the sections a command actually consumes.
    pub fn check_known_keys(&self, section: &str, known: &[&str]) -> Result<(), AppError> {
        for ((s, key), (_, line)) in &self.values {
            if s == section && !known.contains(&key.as_str()) {
                return Err(AppError::validation(format!(
                    "{}: unknown key `{section}.{key}` (expected one of: {})",
                    self.where_is(*line),
                    known.join(", ")
                )));
            }
        }
        Ok(())
    }

    /// Canonical flat rendering of the effective configuration, sorted by
    /// section and key; the provenance hash is taken over this text.
    pub fn canonical(&self) -> String {
        let mut out = String::new();
        for ((section, key), (value, _)) in &self.values {
            out.push_str(section);
            out.push('.');
            out.push_str(key);
            out.push_str(" = ");
            out.push_str(value);
            out.push('\n');
        }
        out
    }

    /// First 16 hex characters of the SHA-256 of the canonical text.
    pub fn hash(&self) -> String {
        let digest = Sha256::digest(self.canonical().as_bytes());
        digest
            .iter()
            .take(8)
            .map(|b| format!("{b:02x}"))
            .collect()
    }

    /// Validation error pointing at a specific key's file location.
    pub fn invalid(&self, section: &str, key: &str, reason: &str) -> AppError {
        let place = self
            .entry(section, key)
            .map_or_else(|| self.origin.clone(), |(_, line)| self.where_is(*line));
        AppError::validation(format!("{place}: {section}.{key} {reason}"))
    }
}
