//! JSON assembly files.
//!
//! Every numeric key carries its unit in the name:
//!
//! ```json
//! {
//!   "layers": [
//!     { "kind": "sheet", "name": "Al", "sheet_resistance_ohm_per_sq": 0.043, "cube_count": 1103.28 },
//!     { "kind": "acf", "name": "ACF",
//!       "particle": { "radius_um": 1.5, "shell_thickness_um": 0.2, "shell_resistivity_uohm_cm": 2.2 },
//!       "contact_count": 21.6 }
//!   ],
//!   "measured_resistance_ohm": 0.5
//! }
//! ```
//!
//! A sheet layer may give `geometry` (`width_um`, `length_um`,
//! `thickness_um`) instead of, or as well as, `cube_count`. An ACF layer
//! gives either `contact_count` or `density_per_um2` with `area_um2`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{AcfContactSpec, ContactCount, Geometry, LayerSpec, ParticleSpec, StackAssembly, StackLayer};
use crate::stats::SweepParameter;
use crate::units::Resistivity;

/// The bundled five-layer joint, as shipped in `fixtures/paper_default.json`.
pub const PAPER_DEFAULT_JSON: &str = include_str!("../fixtures/paper_default.json");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AssemblyConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub layers: Vec<LayerConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub measured_resistance_ohm: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub montecarlo: Option<MonteCarloConfig>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LayerConfig {
    Sheet(SheetLayerConfig),
    Acf(AcfLayerConfig),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SheetLayerConfig {
    pub name: String,
    pub sheet_resistance_ohm_per_sq: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub geometry: Option<GeometryConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cube_count: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeometryConfig {
    pub width_um: f64,
    pub length_um: f64,
    pub thickness_um: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AcfLayerConfig {
    pub name: String,
    pub particle: ParticleConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub contact_count: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub density_per_um2: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub area_um2: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParticleConfig {
    pub radius_um: f64,
    pub shell_thickness_um: f64,
    pub shell_resistivity_uohm_cm: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub param: SweepParameter,
    pub from: f64,
    pub to: f64,
    pub steps: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonteCarloConfig {
    pub density_per_um2: f64,
    pub area_um2: f64,
    #[serde(default = "default_trials")]
    pub trials: usize,
    #[serde(default)]
    pub seed: u64,
}

fn default_trials() -> usize {
    10_000
}

impl LayerConfig {
    pub fn name(&self) -> &str {
        match self {
            LayerConfig::Sheet(s) => &s.name,
            LayerConfig::Acf(a) => &a.name,
        }
    }

    fn to_layer(&self) -> Result<StackLayer> {
        match self {
            LayerConfig::Sheet(s) => {
                let geometry = s.geometry.map(|g| Geometry {
                    width_um: g.width_um,
                    length_um: g.length_um,
                    thickness_um: g.thickness_um,
                });
                Ok(LayerSpec::new(&s.name, s.sheet_resistance_ohm_per_sq, geometry, s.cube_count)?.into())
            }
            LayerConfig::Acf(a) => {
                let p = &a.particle;
                let rho = Resistivity::from_micro_ohm_cm(p.shell_resistivity_uohm_cm)?;
                let particle = ParticleSpec::new(p.radius_um, p.shell_thickness_um, rho)?;
                let contacts = match (a.contact_count, a.density_per_um2, a.area_um2) {
                    (Some(n), None, None) => ContactCount::Count(n),
                    (None, Some(per_um2), Some(area_um2)) => ContactCount::Density { per_um2, area_um2 },
                    (None, Some(_), None) => {
                        return Err(Error::invalid("area_um2", "required together with density_per_um2"))
                    }
                    (None, None, Some(_)) => {
                        return Err(Error::invalid("density_per_um2", "required together with area_um2"))
                    }
                    (None, None, None) => {
                        return Err(Error::invalid(
                            "contact_count",
                            "give contact_count or density_per_um2 with area_um2",
                        ))
                    }
                    (Some(_), _, _) => {
                        return Err(Error::invalid(
                            "contact_count",
                            "give contact_count or density_per_um2/area_um2, not both",
                        ))
                    }
                };
                Ok(AcfContactSpec::new(&a.name, particle, contacts)?.into())
            }
        }
    }

    fn from_layer(layer: &StackLayer) -> Self {
        match layer {
            StackLayer::Sheet(s) => LayerConfig::Sheet(SheetLayerConfig {
                name: s.name().to_string(),
                sheet_resistance_ohm_per_sq: s.sheet_resistance(),
                geometry: s.geometry().map(|g| GeometryConfig {
                    width_um: g.width_um,
                    length_um: g.length_um,
                    thickness_um: g.thickness_um,
                }),
                cube_count: s.given_cube_count(),
            }),
            StackLayer::Acf(a) => {
                let p = a.particle();
                let (contact_count, density_per_um2, area_um2) = match a.contacts() {
                    ContactCount::Count(n) => (Some(n), None, None),
                    ContactCount::Density { per_um2, area_um2 } => (None, Some(per_um2), Some(area_um2)),
                };
                LayerConfig::Acf(AcfLayerConfig {
                    name: a.name().to_string(),
                    particle: ParticleConfig {
                        radius_um: p.radius_um(),
                        shell_thickness_um: p.shell_thickness_um(),
                        shell_resistivity_uohm_cm: p.shell_resistivity().micro_ohm_cm(),
                    },
                    contact_count,
                    density_per_um2,
                    area_um2,
                })
            }
        }
    }
}

impl AssemblyConfig {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn paper_default() -> Self {
        Self::parse(PAPER_DEFAULT_JSON).expect("bundled fixture parses")
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Validates every layer, naming the layer (index and name) of the
    /// first violation.
    pub fn to_stack(&self) -> Result<StackAssembly> {
        let layers = self
            .layers
            .iter()
            .enumerate()
            .map(|(i, l)| l.to_layer().map_err(|e| e.in_layer(&format!("layers[{i}] {}", l.name()))))
            .collect::<Result<Vec<_>>>()?;
        let stack = StackAssembly::new(layers)?;
        match self.measured_resistance_ohm {
            Some(m) => stack.with_measured_resistance(m),
            None => Ok(stack),
        }
    }

    pub fn from_stack(stack: &StackAssembly) -> Self {
        Self {
            name: None,
            layers: stack.layers().iter().map(LayerConfig::from_layer).collect(),
            measured_resistance_ohm: stack.measured_resistance(),
            sweep: None,
            montecarlo: None,
        }
    }
}

pub fn load_config(path: impl AsRef<Path>) -> Result<AssemblyConfig> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    AssemblyConfig::parse(&text)
}

/// Reads and validates an assembly file.
pub fn load_assembly(path: impl AsRef<Path>) -> Result<StackAssembly> {
    load_config(path)?.to_stack()
}
