//! Run configuration: parameters plus numerical effort.

use crate::error::{Error, Result};
use crate::graph::ParamSet;
use serde::{Deserialize, Serialize};
use std::path::Path;

pub const DEFAULT_PRECISION_BITS: u32 = 53;

/// How hard the numerics try. None of these change what is proved, only how
/// tight the enclosures are and how long the searches may run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Effort {
    /// Target width of quadrature enclosures.
    pub quad_tol: f64,
    /// Bisection depth limit per dimension for branch-and-bound.
    pub bnb_depth: u32,
    /// Target width of the `𝒢₀` enclosure.
    pub g0_tol: f64,
    /// Requested working precision; see [`Effort::with_precision`].
    pub precision_bits: u32,
}

impl Default for Effort {
    fn default() -> Self {
        Effort { quad_tol: 1e-9, bnb_depth: 60, g0_tol: 1e-9, precision_bits: DEFAULT_PRECISION_BITS }
    }
}

impl Effort {
    /// Endpoints stay in double precision; extra bits tighten the quadrature
    /// tolerance by a factor of ten per ten bits, down to `1e-12`.
    pub fn with_precision(mut self, bits: u32) -> Result<Self> {
        if bits < 24 {
            return Err(Error::InvalidParams(format!("precision {bits} bits is below the 24-bit minimum")));
        }
        let extra = bits.saturating_sub(DEFAULT_PRECISION_BITS) as i32;
        self.quad_tol = (1e-9 * 10f64.powf(-(extra as f64) / 10.0)).max(1e-12);
        self.precision_bits = bits;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.quad_tol > 0.0 && self.quad_tol < 1.0) {
            return Err(Error::InvalidParams(format!("quad_tol = {} must lie in (0, 1)", self.quad_tol)));
        }
        if !(self.g0_tol > 0.0 && self.g0_tol <= 1e-8) {
            return Err(Error::InvalidParams(format!("g0_tol = {} must lie in (0, 1e-8]", self.g0_tol)));
        }
        if self.bnb_depth == 0 || self.bnb_depth > 200 {
            return Err(Error::InvalidParams(format!("bnb_depth = {} must lie in 1..=200", self.bnb_depth)));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub params: ParamSet,
    pub effort: Effort,
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        let c: RunConfig = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        c.validate()?;
        Ok(c)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        RunConfig::from_toml(&text)
    }

    pub fn validate(&self) -> Result<()> {
        self.params.validate()?;
        self.effort.validate()
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("configuration serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_document_is_the_published_run() {
        let c = RunConfig::from_toml("").unwrap();
        assert_eq!(c, RunConfig::default());
        assert_eq!(RunConfig::from_toml(&c.to_toml()).unwrap(), c);
    }

    #[test]
    fn overrides_and_invariants() {
        let c = RunConfig::from_toml("[effort]\nbnb_depth = 40\n[params]\nb_zfr = 9.0\n").unwrap();
        assert_eq!(c.effort.bnb_depth, 40);
        assert_eq!(c.params.b_zfr, 9.0);
        assert!(matches!(RunConfig::from_toml("[params]\nb_zfr = 3.0\n"), Err(Error::InvalidParams(_))));
        assert!(matches!(RunConfig::from_toml("[params\n"), Err(Error::Parse(_))));
    }

    #[test]
    fn precision_tightens_quadrature() {
        let e = Effort::default().with_precision(73).unwrap();
        assert!(e.quad_tol < 1e-10 && e.quad_tol >= 1e-12);
        assert!(Effort::default().with_precision(8).is_err());
        assert_eq!(Effort::default().with_precision(53).unwrap().quad_tol, 1e-9);
    }
}
