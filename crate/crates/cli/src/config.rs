//! Run configuration: flags override a `key=value` file, which overrides
//! defaults.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use clap::{Args, ValueEnum};
use serde_json::{json, Value};

use crate::output::num;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "text",
        })
    }
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        <Format as ValueEnum>::from_str(s, true)
    }
}

/// Flags shared by every subcommand.
#[derive(Args, Clone, Debug, Default)]
pub struct ConfigFlags {
    /// Target absolute error.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Floating-point precision; only binary64 is available.
    #[arg(long, global = true)]
    pub precision: Option<String>,
    /// Override the series/contour split point M.
    #[arg(long = "mb-M", global = true)]
    pub mb_m: Option<usize>,
    /// Contour offset in (0, 1).
    #[arg(long, global = true)]
    pub eta: Option<f64>,
    /// Largest contour height.
    #[arg(long = "tail-T", global = true)]
    pub tail_t: Option<f64>,
    /// Series truncation degree.
    #[arg(long, global = true)]
    pub degree: Option<u32>,
    /// Largest prime for residue sweeps.
    #[arg(long, global = true)]
    pub primes_up_to: Option<u64>,
    /// Limit direction as three comma-separated reals.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub direction: Option<String>,
    /// Comma-separated positive deltas.
    #[arg(long, global = true)]
    pub deltas: Option<String>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// File of `key=value` lines.
    #[arg(long, global = true)]
    pub config: Option<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub precision: String,
    pub tol: f64,
    pub mb_m: Option<usize>,
    pub eta: f64,
    pub tail_t: Option<f64>,
    pub degree: u32,
    pub primes_up_to: u64,
    pub direction: [f64; 3],
    pub deltas: Vec<f64>,
    pub format: Format,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            precision: "binary64".into(),
            tol: 1e-10,
            mb_m: None,
            eta: 0.5,
            tail_t: None,
            degree: 12,
            primes_up_to: 100,
            direction: [1.0, 2.0, 4.0],
            deltas: vec![1e-2, 1e-3, 1e-4],
            format: Format::Json,
        }
    }
}

fn parse_list(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| format!("not a number: {t:?}"))
        })
        .collect()
}

fn parse_direction(s: &str) -> Result<[f64; 3], String> {
    let v = parse_list(s)?;
    v.try_into()
        .map_err(|_| format!("direction needs three components: {s:?}"))
}

fn parse<T: FromStr>(key: &str, v: &str) -> Result<T, String> {
    v.trim()
        .parse()
        .map_err(|_| format!("bad value for {key}: {v:?}"))
}

impl RunConfig {
    fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        match key {
            "precision" => self.precision = value.trim().to_string(),
            "tol" => self.tol = parse(key, value)?,
            "mb_M" | "mb-M" => self.mb_m = Some(parse(key, value)?),
            "eta" => self.eta = parse(key, value)?,
            "tail_T" | "tail-T" => self.tail_t = Some(parse(key, value)?),
            "degree" => self.degree = parse(key, value)?,
            "primes_up_to" | "primes-up-to" => self.primes_up_to = parse(key, value)?,
            "direction" | "path_direction" => self.direction = parse_direction(value)?,
            "deltas" => self.deltas = parse_list(value)?,
            "format" => self.format = parse(key, value)?,
            _ => return Err(format!("unknown config key {key:?}")),
        }
        Ok(())
    }

    fn apply_file(&mut self, path: &Path) -> Result<(), String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        let mut seen = BTreeMap::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| format!("{}:{}: expected key=value", path.display(), i + 1))?;
            seen.insert(k.trim().to_string(), v.trim().to_string());
        }
        for (k, v) in seen {
            self.set(&k, &v)?;
        }
        Ok(())
    }

    pub fn resolve(flags: &ConfigFlags) -> Result<Self, String> {
        let mut cfg = Self::default();
        if let Some(path) = &flags.config {
            cfg.apply_file(Path::new(path))?;
        }
        if let Some(v) = &flags.precision {
            cfg.precision = v.clone();
        }
        if let Some(v) = flags.tol {
            cfg.tol = v;
        }
        if flags.mb_m.is_some() {
            cfg.mb_m = flags.mb_m;
        }
        if let Some(v) = flags.eta {
            cfg.eta = v;
        }
        if flags.tail_t.is_some() {
            cfg.tail_t = flags.tail_t;
        }
        if let Some(v) = flags.degree {
            cfg.degree = v;
        }
        if let Some(v) = flags.primes_up_to {
            cfg.primes_up_to = v;
        }
        if let Some(v) = &flags.direction {
            cfg.direction = parse_direction(v)?;
        }
        if let Some(v) = &flags.deltas {
            cfg.deltas = parse_list(v)?;
        }
        if let Some(v) = flags.format {
            cfg.format = v;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), String> {
        if self.precision != "binary64" {
            return Err(format!(
                "precision {:?} is not available; only binary64 is supported",
                self.precision
            ));
        }
        if !(self.tol > 0.0 && self.tol < 1.0) {
            return Err("tol must lie in (0, 1)".into());
        }
        if !(self.eta > 0.0 && self.eta < 1.0) {
            return Err("eta must lie in (0, 1)".into());
        }
        if let Some(t) = self.tail_t {
            if !(10.0..=200.0).contains(&t) {
                return Err("tail-T must lie in [10, 200]".into());
            }
        }
        if let Some(m) = self.mb_m {
            if !(1..=64).contains(&m) {
                return Err("mb-M must lie in [1, 64]".into());
            }
        }
        if self.degree > 40 {
            return Err("degree must be at most 40".into());
        }
        if !(5..=1_000_000).contains(&self.primes_up_to) {
            return Err("primes-up-to must lie in [5, 1000000]".into());
        }
        if self.deltas.is_empty() || self.deltas.iter().any(|d| !(d.is_finite() && *d > 0.0)) {
            return Err("deltas must be positive".into());
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "precision": self.precision,
            "tol": num(self.tol),
            "mb_M": self.mb_m,
            "eta": num(self.eta),
            "tail_T": self.tail_t.map(num),
            "degree": self.degree,
            "primes_up_to": self.primes_up_to,
            "direction": self.direction.iter().map(|&d| num(d)).collect::<Vec<_>>(),
            "deltas": self.deltas.iter().map(|&d| num(d)).collect::<Vec<_>>(),
            "format": self.format.to_string(),
        })
    }
}
