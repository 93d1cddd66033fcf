//! Layered run configuration: built-in defaults, then the `WARPSPEC_TOL`
//! environment override, then a flat `key=value` config file, then command
//! line flags. Every resolved value is echoed into the report so a run can
//! be reproduced from its own output.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{bail, Context, Result};

/// Everything the commands consume, after precedence resolution.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub d: u32,
    pub k: Option<u32>,
    pub eps: Option<String>,
    pub grid_n: usize,
    pub curvature_grid: usize,
    pub rmax: Option<f64>,
    pub count: u64,
    pub lambda_max: Option<f64>,
    pub lipschitz: f64,
    pub tolerance: f64,
    pub seed: u64,
    pub full_spectrum: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            d: 4,
            k: None,
            eps: None,
            grid_n: 2_000,
            curvature_grid: 10_000,
            rmax: None,
            count: 20,
            lambda_max: None,
            lipschitz: 1.0,
            tolerance: 1e-12,
            seed: 0,
            full_spectrum: false,
        }
    }
}

impl RunConfig {
    /// Applies the environment override for the default tolerance.
    pub fn apply_env(&mut self) -> Result<()> {
        if let Ok(v) = std::env::var("WARPSPEC_TOL") {
            self.tolerance = v
                .parse::<f64>()
                .with_context(|| format!("WARPSPEC_TOL is not a number: {v}"))?;
            if !(self.tolerance > 0.0) {
                bail!("WARPSPEC_TOL must be positive");
            }
        }
        Ok(())
    }

    /// Applies a flat `key=value` config file (one pair per line; `#` starts
    /// a comment).
    pub fn apply_file(&mut self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read config file {}", path.display()))?;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                bail!("config line {} is not key=value: {raw}", lineno + 1);
            };
            let (key, value) = (key.trim(), value.trim());
            match key {
                "d" => self.d = value.parse()?,
                "k" => self.k = Some(value.parse()?),
                "eps" => self.eps = Some(value.to_string()),
                "grid_n" => self.grid_n = value.parse()?,
                "curvature_grid" => self.curvature_grid = value.parse()?,
                "rmax" => self.rmax = Some(value.parse()?),
                "count" => self.count = value.parse()?,
                "lambda_max" => self.lambda_max = Some(value.parse()?),
                "lipschitz" => self.lipschitz = value.parse()?,
                "tolerance" => self.tolerance = value.parse()?,
                "seed" => self.seed = value.parse()?,
                "full_spectrum" => self.full_spectrum = value.parse()?,
                other => bail!("unknown config key: {other}"),
            }
        }
        Ok(())
    }

    /// All resolved values, for echoing into the report envelope.
    pub fn echo(&self) -> BTreeMap<String, String> {
        let mut m = BTreeMap::new();
        m.insert("d".into(), self.d.to_string());
        m.insert("k".into(), self.k.map(|v| v.to_string()).unwrap_or_else(|| "auto".into()));
        m.insert("eps".into(), self.eps.clone().unwrap_or_else(|| "auto".into()));
        m.insert("grid_n".into(), self.grid_n.to_string());
        m.insert("curvature_grid".into(), self.curvature_grid.to_string());
        m.insert(
            "rmax".into(),
            self.rmax.map(|v| v.to_string()).unwrap_or_else(|| "auto".into()),
        );
        m.insert("count".into(), self.count.to_string());
        m.insert(
            "lambda_max".into(),
            self.lambda_max.map(|v| v.to_string()).unwrap_or_else(|| "auto".into()),
        );
        m.insert("lipschitz".into(), self.lipschitz.to_string());
        m.insert("tolerance".into(), format!("{:e}", self.tolerance));
        m.insert("seed".into(), self.seed.to_string());
        m.insert("full_spectrum".into(), self.full_spectrum.to_string());
        m
    }
}
