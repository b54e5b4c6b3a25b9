//! The free parameters of the constant chain.

use crate::error::{Error, Result};
use crate::interval::Interval;
use serde::{Deserialize, Serialize};

/// Power-sum parameters for one use of the repulsion bound.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DhVariant {
    /// The power-sum constant `č`; must exceed 12.
    pub c_check: f64,
    pub sigma0: f64,
    pub delta: f64,
    pub eta: f64,
}

impl DhVariant {
    pub const fn new(c_check: f64, sigma0: f64) -> Self {
        DhVariant { c_check, sigma0, delta: 1.0, eta: 1.0 }
    }

    fn validate(&self, name: &str) -> Result<()> {
        if !(self.c_check > 12.0) || !self.c_check.is_finite() {
            return Err(invalid(format!("{name}.c_check = {} must exceed 12", self.c_check)));
        }
        if !(self.sigma0 > 1.0) || !self.sigma0.is_finite() {
            return Err(invalid(format!("{name}.sigma0 = {} must exceed 1", self.sigma0)));
        }
        unit_range(&format!("{name}.delta"), self.delta)?;
        unit_range(&format!("{name}.eta"), self.eta)
    }
}

/// Which zero the repulsion bound is applied to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DhKind {
    /// Any zero, field not imaginary quadratic (`ζ_L` vanishes at 0).
    Real,
    /// Any zero, imaginary quadratic field (trivial zero at −1).
    Imag,
    /// Nontrivial zeros only.
    Nontrivial,
    /// The parameters used for the lower bound on `1 − β₀`.
    Cor,
}

impl DhKind {
    pub const ALL: [DhKind; 4] = [DhKind::Real, DhKind::Imag, DhKind::Nontrivial, DhKind::Cor];

    pub fn suffix(self) -> &'static str {
        match self {
            DhKind::Real => "real",
            DhKind::Imag => "imag",
            DhKind::Nontrivial => "nontrivial",
            DhKind::Cor => "cor",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ParamSet {
    /// σ for the long-form zero-count coefficients.
    pub sigma_density_long: f64,
    /// σ for the short-form zero-count constant.
    pub sigma_density_short: f64,
    /// `a` in `Q(φ) = 4(1 + cos φ)(a + cos φ)²`.
    pub q_shape_a: f64,
    pub b_zfr: f64,
    pub delta_zfr: f64,
    pub eta_zfr: f64,
    pub dh_real: DhVariant,
    pub dh_imag: DhVariant,
    pub dh_nontrivial: DhVariant,
    pub dh_cor: DhVariant,
    pub c16: f64,
    pub c23: f64,
}

impl Default for ParamSet {
    fn default() -> Self {
        ParamSet::published()
    }
}

impl ParamSet {
    /// The values chosen in the published argument.
    pub fn published() -> Self {
        ParamSet {
            sigma_density_long: (3.0 + 17f64.sqrt()) / 4.0,
            sigma_density_short: 2.45,
            q_shape_a: 0.51,
            b_zfr: 8.7,
            delta_zfr: 0.66,
            eta_zfr: 0.26,
            dh_real: DhVariant::new(24.0, 7.79),
            dh_imag: DhVariant::new(24.0, 12.21),
            dh_nontrivial: DhVariant::new(24.0, 5.42),
            dh_cor: DhVariant::new(12.1, 7.79),
            c16: 3144.25,
            c23: 179.0,
        }
    }

    pub fn dh(&self, kind: DhKind) -> &DhVariant {
        match kind {
            DhKind::Real => &self.dh_real,
            DhKind::Imag => &self.dh_imag,
            DhKind::Nontrivial => &self.dh_nontrivial,
            DhKind::Cor => &self.dh_cor,
        }
    }

    pub fn dh_mut(&mut self, kind: DhKind) -> &mut DhVariant {
        match kind {
            DhKind::Real => &mut self.dh_real,
            DhKind::Imag => &mut self.dh_imag,
            DhKind::Nontrivial => &mut self.dh_nontrivial,
            DhKind::Cor => &mut self.dh_cor,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, s) in
            [("sigma_density_long", self.sigma_density_long), ("sigma_density_short", self.sigma_density_short)]
        {
            if !(s > 1.0) || !s.is_finite() {
                return Err(invalid(format!("{name} = {s} must exceed 1")));
            }
        }
        if !(self.q_shape_a > 0.0) || !self.q_shape_a.is_finite() {
            return Err(invalid(format!("q_shape_a = {} must be positive", self.q_shape_a)));
        }
        if !(self.b_zfr >= 4.0) || !self.b_zfr.is_finite() {
            return Err(invalid(format!("b_zfr = {} must be at least 4", self.b_zfr)));
        }
        unit_range("delta_zfr", self.delta_zfr)?;
        unit_range("eta_zfr", self.eta_zfr)?;
        for kind in DhKind::ALL {
            self.dh(kind).validate(&format!("dh_{}", kind.suffix()))?;
        }
        for (name, c) in [("c16", self.c16), ("c23", self.c23)] {
            if !(c > 0.0) || !c.is_finite() {
                return Err(invalid(format!("{name} = {c} must be positive")));
            }
        }
        Ok(())
    }

    /// Parses a TOML document; absent keys keep their published values.
    pub fn from_toml(text: &str) -> Result<Self> {
        let p: ParamSet = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        p.validate()?;
        Ok(p)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("parameter set serializes")
    }

    /// Named scalar parameters, as enclosures of their decimal values.
    pub fn scalars(&self) -> Vec<(String, Interval)> {
        let mut out = vec![
            ("sigma_density_long".to_string(), Interval::decimal(self.sigma_density_long)),
            ("sigma_density_short".to_string(), Interval::decimal(self.sigma_density_short)),
            ("q_shape_a".to_string(), Interval::decimal(self.q_shape_a)),
            ("b_zfr".to_string(), Interval::decimal(self.b_zfr)),
            ("delta_zfr".to_string(), Interval::decimal(self.delta_zfr)),
            ("eta_zfr".to_string(), Interval::decimal(self.eta_zfr)),
        ];
        for kind in DhKind::ALL {
            let v = self.dh(kind);
            let s = kind.suffix();
            out.push((format!("c_check_{s}"), Interval::decimal(v.c_check)));
            out.push((format!("sigma0_dh_{s}"), Interval::decimal(v.sigma0)));
            out.push((format!("delta_dh_{s}"), Interval::decimal(v.delta)));
            out.push((format!("eta_dh_{s}"), Interval::decimal(v.eta)));
        }
        out.push(("c16".to_string(), Interval::decimal(self.c16)));
        out.push(("c23".to_string(), Interval::decimal(self.c23)));
        out
    }

    /// Sets a scalar parameter by the name used in [`ParamSet::scalars`].
    pub fn set(&mut self, name: &str, value: f64) -> Result<()> {
        let slot = match name {
            "sigma_density_long" => &mut self.sigma_density_long,
            "sigma_density_short" => &mut self.sigma_density_short,
            "q_shape_a" => &mut self.q_shape_a,
            "b_zfr" => &mut self.b_zfr,
            "delta_zfr" => &mut self.delta_zfr,
            "eta_zfr" => &mut self.eta_zfr,
            "c16" => &mut self.c16,
            "c23" => &mut self.c23,
            _ => {
                let kind = DhKind::ALL
                    .into_iter()
                    .find(|k| name.ends_with(&format!("_{}", k.suffix())))
                    .ok_or_else(|| invalid(format!("unknown parameter {name:?}")))?;
                let v = self.dh_mut(kind);
                match name.rsplit_once('_').map(|(head, _)| head) {
                    Some("c_check") => &mut v.c_check,
                    Some("sigma0_dh") => &mut v.sigma0,
                    Some("delta_dh") => &mut v.delta,
                    Some("eta_dh") => &mut v.eta,
                    _ => return Err(invalid(format!("unknown parameter {name:?}"))),
                }
            }
        };
        *slot = value;
        Ok(())
    }

    pub fn get(&self, name: &str) -> Result<f64> {
        if self.scalars().iter().any(|(n, _)| n == name) {
            Ok(self.raw(name))
        } else {
            Err(invalid(format!("unknown parameter {name:?}")))
        }
    }

    /// Enclosure of the decimal value of a named parameter.
    pub fn scalar(&self, name: &str) -> Result<Interval> {
        self.get(name).map(Interval::decimal)
    }

    fn raw(&self, name: &str) -> f64 {
        match name {
            "sigma_density_long" => self.sigma_density_long,
            "sigma_density_short" => self.sigma_density_short,
            "q_shape_a" => self.q_shape_a,
            "b_zfr" => self.b_zfr,
            "delta_zfr" => self.delta_zfr,
            "eta_zfr" => self.eta_zfr,
            "c16" => self.c16,
            "c23" => self.c23,
            _ => {
                let kind = DhKind::ALL.into_iter().find(|k| name.ends_with(&format!("_{}", k.suffix())));
                let Some(kind) = kind else { return f64::NAN };
                let v = self.dh(kind);
                match name.rsplit_once('_').map(|(head, _)| head) {
                    Some("c_check") => v.c_check,
                    Some("sigma0_dh") => v.sigma0,
                    Some("delta_dh") => v.delta,
                    Some("eta_dh") => v.eta,
                    _ => f64::NAN,
                }
            }
        }
    }
}

fn unit_range(name: &str, x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(invalid(format!("{name} = {x} must lie in [0, 1]")))
    }
}

fn invalid(msg: String) -> Error {
    Error::InvalidParams(msg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_values_are_valid() {
        ParamSet::published().validate().unwrap();
    }

    #[test]
    fn rejects_small_b() {
        let p = ParamSet { b_zfr: 3.0, ..ParamSet::published() };
        assert!(matches!(p.validate(), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn rejects_small_c_check() {
        let mut p = ParamSet::published();
        p.dh_real.c_check = 12.0;
        assert!(p.validate().is_err());
    }

    #[test]
    fn toml_round_trip_and_partial_documents() {
        let p = ParamSet::published();
        assert_eq!(ParamSet::from_toml(&p.to_toml()).unwrap(), p);
        let q = ParamSet::from_toml("c23 = 231.0\n[dh_real]\nc_check = 30.0\nsigma0 = 8.0\ndelta = 1.0\neta = 1.0\n")
            .unwrap();
        assert_eq!(q.c23, 231.0);
        assert_eq!(q.dh_real.sigma0, 8.0);
        assert_eq!(q.b_zfr, 8.7);
        assert!(ParamSet::from_toml("nonsense = 1").is_err());
    }

    #[test]
    fn named_access() {
        let mut p = ParamSet::published();
        p.set("sigma0_dh_nontrivial", 5.5).unwrap();
        assert_eq!(p.dh_nontrivial.sigma0, 5.5);
        assert_eq!(p.get("c_check_cor").unwrap(), 12.1);
        assert!(p.set("sigma0_dh_other", 1.0).is_err());
        assert_eq!(p.scalars().len(), 24);
    }
}
