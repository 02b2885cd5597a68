//! Named plasma-wavelength presets and material selection strings.
//!
//! Preset files hold one `name = <plasma wavelength in nm>` per line. Blank
//! lines and `#` comments are ignored. Names are case-sensitive.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::mirror::MirrorModel;

/// Built-in preset file.
pub const DEFAULT_PRESETS: &str = "\
# plasma wavelengths in nm
gold = 136
copper = 136
";

#[derive(Debug, Clone, PartialEq)]
pub struct MaterialPresets {
    wavelengths_nm: BTreeMap<String, f64>,
}

impl Default for MaterialPresets {
    fn default() -> Self {
        Self::parse(DEFAULT_PRESETS).expect("built-in presets parse")
    }
}

impl MaterialPresets {
    pub fn parse(text: &str) -> Result<Self> {
        let mut wavelengths_nm = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: idx + 1,
                message,
            };
            let (name, value) = line
                .split_once('=')
                .ok_or_else(|| err(format!("expected `name = wavelength_nm`, got {line:?}")))?;
            let name = name.trim();
            if name.is_empty() || name.contains(char::is_whitespace) || name.contains(':') {
                return Err(err(format!("invalid preset name {name:?}")));
            }
            let nm: f64 = value
                .trim()
                .parse()
                .map_err(|e| err(format!("{:?}: {e}", value.trim())))?;
            if !(nm.is_finite() && nm > 0.0) {
                return Err(err(format!("plasma wavelength must be > 0, got {nm}")));
            }
            wavelengths_nm.insert(name.to_string(), nm);
        }
        Ok(Self { wavelengths_nm })
    }

    /// Plasma wavelength of preset `name`, in nm.
    pub fn wavelength_nm(&self, name: &str) -> Option<f64> {
        self.wavelengths_nm.get(name).copied()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.wavelengths_nm.keys().map(String::as_str)
    }
}

/// A material selection: `perfect`, `plasma:<λ_p in nm>` or a preset name.
#[derive(Debug, Clone, PartialEq)]
pub enum Material {
    Perfect,
    PlasmaNm(f64),
    Preset { name: String, wavelength_nm: f64 },
}

impl Material {
    pub fn parse(text: &str, presets: &MaterialPresets) -> Result<Self> {
        let spec = text.trim();
        if spec == "perfect" {
            return Ok(Material::Perfect);
        }
        if let Some(nm) = spec.strip_prefix("plasma:") {
            let nm: f64 = nm
                .trim()
                .parse()
                .map_err(|e| Error::domain(format!("plasma wavelength {nm:?}: {e}")))?;
            if !(nm.is_finite() && nm > 0.0) {
                return Err(Error::domain(format!(
                    "plasma wavelength must be > 0 nm, got {nm}"
                )));
            }
            return Ok(Material::PlasmaNm(nm));
        }
        match presets.wavelength_nm(spec) {
            Some(wavelength_nm) => Ok(Material::Preset {
                name: spec.to_string(),
                wavelength_nm,
            }),
            None => Err(Error::domain(format!(
                "unknown material {spec:?}; expected `perfect`, `plasma:<nm>` or one of: {}",
                presets.names().collect::<Vec<_>>().join(", ")
            ))),
        }
    }

    pub fn mirror(&self) -> MirrorModel {
        match self {
            Material::Perfect => MirrorModel::Perfect,
            Material::PlasmaNm(nm)
            | Material::Preset {
                wavelength_nm: nm, ..
            } => MirrorModel::from_plasma_wavelength(nm * 1e-9).expect("validated on parse"),
        }
    }
}

impl fmt::Display for Material {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Material::Perfect => f.write_str("perfect"),
            Material::PlasmaNm(nm) => write!(f, "plasma:{nm}"),
            Material::Preset { name, .. } => f.write_str(name),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_presets() {
        let p = MaterialPresets::default();
        assert_eq!(p.wavelength_nm("gold"), Some(136.0));
        assert_eq!(p.wavelength_nm("copper"), Some(136.0));
        assert_eq!(p.wavelength_nm("silver"), None);
    }

    #[test]
    fn parse_file() {
        let p =
            MaterialPresets::parse("# comment\n\nsilver = 138.5  # trailing\nal=100\n").unwrap();
        assert_eq!(p.wavelength_nm("silver"), Some(138.5));
        assert_eq!(p.wavelength_nm("al"), Some(100.0));
        assert!(matches!(
            MaterialPresets::parse("gold 136"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            MaterialPresets::parse("\ngold = -3"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(MaterialPresets::parse("two words = 3").is_err());
    }

    #[test]
    fn material_strings() {
        let p = MaterialPresets::default();
        assert_eq!(
            Material::parse("perfect", &p).unwrap().mirror(),
            MirrorModel::Perfect
        );
        let m = Material::parse("plasma:136", &p).unwrap();
        assert_eq!(m.mirror(), MirrorModel::gold_copper());
        assert_eq!(m.to_string(), "plasma:136");
        let g = Material::parse("gold", &p).unwrap();
        assert_eq!(g.mirror(), MirrorModel::gold_copper());
        assert!(Material::parse("plasma:0", &p).is_err());
        assert!(Material::parse("plasma:abc", &p).is_err());
        assert!(Material::parse("unobtainium", &p).is_err());
    }
}
