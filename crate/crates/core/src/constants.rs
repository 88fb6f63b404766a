//! Physical constants and the two field/rate scales every observable is built on.
//!
//! Everything is stored in Gaussian-CGS (erg, cm, s, statC, g). The critical
//! field leaves this module in V/cm and the rate scale in cm⁻³·s⁻¹.

use crate::error::{positive_finite, Error, Result};
use std::f64::consts::PI;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

/// V/cm per statvolt/cm.
pub const VOLT_PER_CM_PER_STATVOLT_PER_CM: f64 = 299.792458;

/// Allowed relative mismatch between the stored α and e²/(ħc).
const ALPHA_CONSISTENCY: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// erg·s
    pub hbar: f64,
    /// cm/s
    pub c: f64,
    /// elementary charge, statC
    pub e_charge: f64,
    pub alpha: f64,
    /// g
    pub electron_mass: f64,
}

impl PhysicalConstants {
    /// CODATA 2018 recommended values.
    pub const CODATA_2018: PhysicalConstants = PhysicalConstants {
        hbar: 1.054_571_817e-27,
        c: 2.997_924_58e10,
        // 1.602176634e-19 C × (c / 10) statC per C
        e_charge: 4.803_204_712_570_263e-10,
        alpha: 7.297_352_569_3e-3,
        electron_mass: 9.109_383_701_5e-28,
    };

    pub const CONFIG_KEYS: [&'static str; 5] = ["hbar", "c", "e_charge", "alpha", "electron_mass"];

    pub fn new(hbar: f64, c: f64, e_charge: f64, alpha: f64, electron_mass: f64) -> Result<Self> {
        let k = Self {
            hbar: positive_finite("hbar", hbar)?,
            c: positive_finite("c", c)?,
            e_charge: positive_finite("e_charge", e_charge)?,
            alpha: positive_finite("alpha", alpha)?,
            electron_mass: positive_finite("electron_mass", electron_mass)?,
        };
        let derived = k.alpha_from_charge();
        if ((derived - k.alpha) / k.alpha).abs() > ALPHA_CONSISTENCY {
            return Err(Error::InconsistentConstants {
                alpha: k.alpha,
                derived,
            });
        }
        Ok(k)
    }

    /// e²/(ħc), the Gaussian form of the fine-structure constant.
    pub fn alpha_from_charge(&self) -> f64 {
        self.e_charge * self.e_charge / (self.hbar * self.c)
    }

    /// Applies `key = value` overrides on top of CODATA 2018.
    ///
    /// Blank lines and lines starting with `#` are ignored. Keys are listed in
    /// [`Self::CONFIG_KEYS`]; anything else is an error.
    pub fn from_config_str(text: &str) -> Result<Self> {
        let mut k = Self::CODATA_2018;
        for (index, raw) in text.lines().enumerate() {
            let line_no = index + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| Error::Config {
                line: line_no,
                message: format!("expected `key = value`, got `{line}`"),
            })?;
            let key = key.trim();
            let value: f64 = value.trim().parse().map_err(|_| Error::Config {
                line: line_no,
                message: format!("`{}` is not a number", value.trim()),
            })?;
            let slot = match key {
                "hbar" => &mut k.hbar,
                "c" => &mut k.c,
                "e_charge" => &mut k.e_charge,
                "alpha" => &mut k.alpha,
                "electron_mass" => &mut k.electron_mass,
                other => {
                    return Err(Error::Config {
                        line: line_no,
                        message: format!("unknown key `{other}`"),
                    })
                }
            };
            *slot = value;
        }
        Self::new(k.hbar, k.c, k.e_charge, k.alpha, k.electron_mass)
    }

    pub fn from_config_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::from_config_str(&text)
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::CODATA_2018
    }
}

/// Spin of the created particles. Only the two statistics with a known
/// closed-form rate are representable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Spin {
    /// Scalar bosons.
    Zero,
    /// Dirac fermions.
    Half,
}

impl Spin {
    pub fn value(self) -> f64 {
        match self {
            Spin::Zero => 0.0,
            Spin::Half => 0.5,
        }
    }

    /// 2s + 1
    pub fn multiplicity(self) -> f64 {
        2.0 * self.value() + 1.0
    }
}

impl FromStr for Spin {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim() {
            "0" | "0.0" | "zero" => Ok(Spin::Zero),
            "1/2" | "0.5" | ".5" | "half" => Ok(Spin::Half),
            other => Err(format!("spin must be 0 or 1/2, got `{other}`")),
        }
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Spin::Zero => f.write_str("0"),
            Spin::Half => f.write_str("1/2"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Particle {
    /// g
    pub mass: f64,
    /// statC
    pub charge_magnitude: f64,
    pub spin: Spin,
    pub label: String,
}

/// Named particles as (label, mass in electron masses, charge in e, spin).
const PRESETS: [(&str, f64, f64, Spin); 3] = [
    ("electron", 1.0, 1.0, Spin::Half),
    ("muon", 206.768_283_0, 1.0, Spin::Half),
    ("pion", 273.132_44, 1.0, Spin::Zero),
];

impl Particle {
    pub fn new(
        label: impl Into<String>,
        mass: f64,
        charge_magnitude: f64,
        spin: Spin,
    ) -> Result<Self> {
        Ok(Self {
            mass: positive_finite("mass", mass)?,
            charge_magnitude: positive_finite("charge_magnitude", charge_magnitude)?,
            spin,
            label: label.into(),
        })
    }

    pub fn electron(k: &PhysicalConstants) -> Self {
        Self {
            mass: k.electron_mass,
            charge_magnitude: k.e_charge,
            spin: Spin::Half,
            label: "electron".into(),
        }
    }

    /// Looks up `electron`, `muon` or `pion`.
    pub fn preset(name: &str, k: &PhysicalConstants) -> Result<Self> {
        let (label, mass_ratio, charge, spin) = PRESETS
            .iter()
            .find(|(label, ..)| label.eq_ignore_ascii_case(name))
            .ok_or_else(|| Error::UnknownParticle(name.to_string()))?;
        Self::new(
            *label,
            mass_ratio * k.electron_mass,
            charge * k.e_charge,
            *spin,
        )
    }

    pub fn preset_names() -> impl Iterator<Item = &'static str> {
        PRESETS.iter().map(|p| p.0)
    }
}

/// Critical field and rate-density scale of one particle species.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedScales {
    /// V/cm
    pub e_cr: f64,
    /// cm⁻³·s⁻¹, fermion normalization
    pub w0: f64,
}

impl DerivedScales {
    pub fn new(e_cr: f64, w0: f64) -> Result<Self> {
        Ok(Self {
            e_cr: positive_finite("e_cr", e_cr)?,
            w0: positive_finite("w0", w0)?,
        })
    }

    /// Electron scales from CODATA 2018.
    pub fn electron() -> Self {
        let k = PhysicalConstants::CODATA_2018;
        derive_scales(&Particle::electron(&k), &k)
    }
}

/// E_cr = m²c³/(qħ) converted to V/cm, and w₀ = m⁴c⁵/(4π³ħ⁴).
pub fn derive_scales(p: &Particle, k: &PhysicalConstants) -> DerivedScales {
    let e_cr_gaussian = p.mass * p.mass * k.c.powi(3) / (p.charge_magnitude * k.hbar);
    // grouped to stay far from overflow: (mc²/ħ)⁴ / c³
    let inv_time = p.mass * k.c * k.c / k.hbar;
    let w0 = inv_time.powi(4) / k.c.powi(3) / (4.0 * PI.powi(3));
    DerivedScales {
        e_cr: e_cr_gaussian * VOLT_PER_CM_PER_STATVOLT_PER_CM,
        w0,
    }
}

/// w₀ by the second route, α·E_cr²/(π²ħ), evaluated in Heaviside–Lorentz
/// units where α = q²/(4πħc) for a unit-charge particle.
///
/// Uses the stored α rather than the charge, so it is independent of the
/// m⁴c⁵/(4π³ħ⁴) form up to the consistency of the constant set.
pub fn w0_via_alpha(p: &Particle, k: &PhysicalConstants) -> f64 {
    let charge_ratio = p.charge_magnitude / k.e_charge;
    let alpha = k.alpha * charge_ratio * charge_ratio;
    let q_hl = p.charge_magnitude * (4.0 * PI).sqrt();
    let e_cr_hl = p.mass * p.mass * k.c.powi(3) / (q_hl * k.hbar);
    // E²/ħ carries erg/(cm³·s)·(1/erg) once multiplied by α
    alpha * e_cr_hl * e_cr_hl / (PI * PI * k.hbar)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codata_set_is_consistent() {
        let k = PhysicalConstants::CODATA_2018;
        assert!(((k.alpha_from_charge() - k.alpha) / k.alpha).abs() < 1e-6);
        assert!(PhysicalConstants::new(k.hbar, k.c, k.e_charge, k.alpha, k.electron_mass).is_ok());
    }

    #[test]
    fn electron_scales() {
        let s = DerivedScales::electron();
        assert!((s.e_cr / 1.32e16 - 1.0).abs() < 5e-3);
        assert!((s.w0 / 1.087036e50 - 1.0).abs() < 1e-4);
    }

    #[test]
    fn doubled_mass_scaling() {
        let k = PhysicalConstants::CODATA_2018;
        let e = Particle::electron(&k);
        let heavy = Particle::new("heavy", 2.0 * e.mass, e.charge_magnitude, Spin::Half).unwrap();
        let (s1, s2) = (derive_scales(&e, &k), derive_scales(&heavy, &k));
        assert!((s2.e_cr / s1.e_cr - 4.0).abs() < 1e-14);
        assert!((s2.w0 / s1.w0 - 16.0).abs() < 1e-13);
    }

    #[test]
    fn two_routes_to_w0_agree() {
        let k = PhysicalConstants::CODATA_2018;
        for name in Particle::preset_names() {
            let p = Particle::preset(name, &k).unwrap();
            let a = derive_scales(&p, &k).w0;
            let b = w0_via_alpha(&p, &k);
            assert!(((a - b) / a).abs() < 1e-10, "{name}: {a} vs {b}");
        }
    }

    #[test]
    fn config_overrides() {
        let k =
            PhysicalConstants::from_config_str("# heavier electron\n\nelectron_mass = 1.8e-27\n")
                .unwrap();
        assert_eq!(k.electron_mass, 1.8e-27);
        assert_eq!(k.hbar, PhysicalConstants::CODATA_2018.hbar);
    }

    #[test]
    fn config_errors() {
        assert!(matches!(
            PhysicalConstants::from_config_str("planck = 1"),
            Err(Error::Config { line: 1, .. })
        ));
        assert!(matches!(
            PhysicalConstants::from_config_str("\nhbar: 1"),
            Err(Error::Config { line: 2, .. })
        ));
        assert!(matches!(
            PhysicalConstants::from_config_str("c = fast"),
            Err(Error::Config { .. })
        ));
        // changing e alone breaks alpha = e²/ħc
        assert!(matches!(
            PhysicalConstants::from_config_str("e_charge = 5e-10"),
            Err(Error::InconsistentConstants { .. })
        ));
        assert!(PhysicalConstants::from_config_str("hbar = -1").is_err());
    }

    #[test]
    fn particle_invariants() {
        assert!(Particle::new("x", 0.0, 1.0, Spin::Half).is_err());
        assert!(Particle::new("x", 1.0, -1.0, Spin::Zero).is_err());
        assert!(matches!(
            Particle::preset("tau", &PhysicalConstants::CODATA_2018),
            Err(Error::UnknownParticle(_))
        ));
        assert_eq!(
            Particle::preset("Pion", &PhysicalConstants::CODATA_2018)
                .unwrap()
                .spin,
            Spin::Zero
        );
    }

    #[test]
    fn spin_parsing() {
        assert_eq!("0.5".parse::<Spin>().unwrap(), Spin::Half);
        assert_eq!("1/2".parse::<Spin>().unwrap(), Spin::Half);
        assert_eq!("0".parse::<Spin>().unwrap(), Spin::Zero);
        assert!("1".parse::<Spin>().is_err());
        assert_eq!(Spin::Half.multiplicity(), 2.0);
    }
}
