//! Closed-form contact resistance of a chip-on-glass joint.
//!
//! Each conductive film is cut into `t × t × t` cubes whose z-resistance
//! equals the film's sheet resistance, so a film conducts vertically like
//! `n = W·L/t²` identical resistors in parallel: `R_layer = R_sheet / n`.
//! The ACF layer is `count` identical particles in parallel, each one a
//! hollow metal cylinder of length `2r` and annular cross-section
//! `π(r² − (r − t)²)`. The layers of the stack are then summed in series.

use crate::error::{require_non_negative, require_positive, Error, Result};
use crate::units::{unit_cube_count, Resistivity};

/// Relative tolerance allowed between a given cube count and the one
/// implied by the layer geometry.
pub const CUBE_COUNT_AGREEMENT: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geometry {
    pub width_um: f64,
    pub length_um: f64,
    pub thickness_um: f64,
}

impl Geometry {
    pub fn cube_count(&self) -> Result<f64> {
        unit_cube_count(self.width_um, self.length_um, self.thickness_um)
    }
}

/// A conductive sheet layer characterised by its sheet resistance.
#[derive(Debug, Clone, PartialEq)]
pub struct LayerSpec {
    name: String,
    sheet_resistance: f64,
    geometry: Option<Geometry>,
    cube_count: Option<f64>,
}

impl LayerSpec {
    /// Builds a layer from a sheet resistance (Ω/□) and either a geometry,
    /// a cube count, or both. When both are given they must agree.
    pub fn new(
        name: impl Into<String>,
        sheet_resistance: f64,
        geometry: Option<Geometry>,
        cube_count: Option<f64>,
    ) -> Result<Self> {
        require_positive("sheet_resistance_ohm_per_sq", sheet_resistance)?;
        let implied = geometry.as_ref().map(Geometry::cube_count).transpose()?;
        if let Some(n) = cube_count {
            require_positive("cube_count", n)?;
        }
        match (implied, cube_count) {
            (None, None) => {
                return Err(Error::invalid(
                    "cube_count",
                    "layer needs a geometry or a cube_count",
                ))
            }
            (Some(from_geometry), Some(given)) => {
                let rel = (given - from_geometry).abs() / from_geometry;
                if rel > CUBE_COUNT_AGREEMENT {
                    return Err(Error::invalid(
                        "cube_count",
                        format!(
                            "inconsistent with geometry: given {given}, W·L/t² = {from_geometry} \
                             (relative difference {rel:.3e})"
                        ),
                    ));
                }
            }
            _ => {}
        }
        Ok(Self {
            name: name.into(),
            sheet_resistance,
            geometry,
            cube_count,
        })
    }

    pub fn with_cube_count(
        name: impl Into<String>,
        sheet_resistance: f64,
        cube_count: f64,
    ) -> Result<Self> {
        Self::new(name, sheet_resistance, None, Some(cube_count))
    }

    pub fn with_geometry(
        name: impl Into<String>,
        sheet_resistance: f64,
        geometry: Geometry,
    ) -> Result<Self> {
        Self::new(name, sheet_resistance, Some(geometry), None)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Sheet resistance in Ω/□.
    pub fn sheet_resistance(&self) -> f64 {
        self.sheet_resistance
    }

    pub fn geometry(&self) -> Option<&Geometry> {
        self.geometry.as_ref()
    }

    /// The cube count as entered, if any.
    pub fn given_cube_count(&self) -> Option<f64> {
        self.cube_count
    }

    /// Resolved cube count; an explicit count takes precedence.
    pub fn cube_count(&self) -> f64 {
        match (self.cube_count, &self.geometry) {
            (Some(n), _) => n,
            (None, Some(g)) => g
                .cube_count()
                .expect("geometry validated at construction"),
            (None, None) => unreachable!("validated at construction"),
        }
    }
}

/// z-axis resistance of a sheet layer, `R_sheet / n`.
pub fn layer_resistance(layer: &LayerSpec) -> f64 {
    layer.sheet_resistance / layer.cube_count()
}

/// One metal-coated conductive particle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParticleSpec {
    radius_um: f64,
    shell_thickness_um: f64,
    shell_resistivity: Resistivity,
}

impl ParticleSpec {
    pub fn new(radius_um: f64, shell_thickness_um: f64, shell_resistivity: Resistivity) -> Result<Self> {
        require_positive("radius_um", radius_um)?;
        if shell_thickness_um == 0.0 {
            return Err(Error::ZeroCrossSection);
        }
        require_positive("shell_thickness_um", shell_thickness_um)?;
        if shell_thickness_um > radius_um {
            return Err(Error::invalid(
                "shell_thickness_um",
                format!("must not exceed radius_um {radius_um} (got {shell_thickness_um})"),
            ));
        }
        Ok(Self {
            radius_um,
            shell_thickness_um,
            shell_resistivity,
        })
    }

    pub fn radius_um(&self) -> f64 {
        self.radius_um
    }

    pub fn shell_thickness_um(&self) -> f64 {
        self.shell_thickness_um
    }

    pub fn shell_resistivity(&self) -> Resistivity {
        self.shell_resistivity
    }

    pub fn with_shell_thickness(&self, shell_thickness_um: f64) -> Result<Self> {
        Self::new(self.radius_um, shell_thickness_um, self.shell_resistivity)
    }

    /// Annular cross-section of the shell, μm².
    pub fn shell_area_um2(&self) -> f64 {
        let (r, t) = (self.radius_um, self.shell_thickness_um);
        // r² − (r − t)², factored to avoid cancellation for thin shells.
        std::f64::consts::PI * t * (2.0 * r - t)
    }
}

/// Resistance of one particle as a hollow cylinder of length `2r`.
pub fn particle_resistance(particle: &ParticleSpec) -> f64 {
    particle.shell_resistivity.ohm_um() * 2.0 * particle.radius_um / particle.shell_area_um2()
}

/// How many particles bridge the bump and the pad.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ContactCount {
    Count(f64),
    Density { per_um2: f64, area_um2: f64 },
}

impl ContactCount {
    pub fn effective(&self) -> f64 {
        match *self {
            ContactCount::Count(n) => n,
            ContactCount::Density { per_um2, area_um2 } => per_um2 * area_um2,
        }
    }
}

/// The ACF layer: identical particles conducting in parallel.
#[derive(Debug, Clone, PartialEq)]
pub struct AcfContactSpec {
    name: String,
    particle: ParticleSpec,
    contacts: ContactCount,
}

impl AcfContactSpec {
    /// A count of zero is accepted here; it marks an open joint and is
    /// rejected when the layer resistance is evaluated.
    pub fn new(name: impl Into<String>, particle: ParticleSpec, contacts: ContactCount) -> Result<Self> {
        match contacts {
            ContactCount::Count(n) => {
                require_non_negative("contact_count", n)?;
            }
            ContactCount::Density { per_um2, area_um2 } => {
                require_non_negative("density_per_um2", per_um2)?;
                require_non_negative("area_um2", area_um2)?;
            }
        }
        Ok(Self {
            name: name.into(),
            particle,
            contacts,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn particle(&self) -> &ParticleSpec {
        &self.particle
    }

    pub fn contacts(&self) -> ContactCount {
        self.contacts
    }

    pub fn effective_count(&self) -> f64 {
        self.contacts.effective()
    }
}

/// `particle_resistance / effective_count`.
pub fn acf_layer_resistance(contact: &AcfContactSpec) -> Result<f64> {
    let count = contact.effective_count();
    if count == 0.0 {
        return Err(Error::OpenJoint);
    }
    Ok(particle_resistance(&contact.particle) / count)
}

#[derive(Debug, Clone, PartialEq)]
pub enum StackLayer {
    Sheet(LayerSpec),
    Acf(AcfContactSpec),
}

impl StackLayer {
    pub fn name(&self) -> &str {
        match self {
            StackLayer::Sheet(l) => l.name(),
            StackLayer::Acf(a) => a.name(),
        }
    }

    pub fn resistance(&self) -> Result<f64> {
        match self {
            StackLayer::Sheet(l) => Ok(layer_resistance(l)),
            StackLayer::Acf(a) => acf_layer_resistance(a),
        }
    }
}

impl From<LayerSpec> for StackLayer {
    fn from(layer: LayerSpec) -> Self {
        StackLayer::Sheet(layer)
    }
}

impl From<AcfContactSpec> for StackLayer {
    fn from(acf: AcfContactSpec) -> Self {
        StackLayer::Acf(acf)
    }
}

/// Ordered layers of a joint, conducting in series.
#[derive(Debug, Clone, PartialEq)]
pub struct StackAssembly {
    layers: Vec<StackLayer>,
    measured_resistance: Option<f64>,
}

impl StackAssembly {
    pub fn new(layers: Vec<StackLayer>) -> Result<Self> {
        if layers.is_empty() {
            return Err(Error::invalid("layers", "stack must contain at least one layer"));
        }
        let acf = layers.iter().filter(|l| matches!(l, StackLayer::Acf(_))).count();
        if acf > 1 {
            return Err(Error::invalid(
                "layers",
                format!("at most one ACF layer is allowed (found {acf})"),
            ));
        }
        Ok(Self {
            layers,
            measured_resistance: None,
        })
    }

    pub fn with_measured_resistance(mut self, ohms: f64) -> Result<Self> {
        require_positive("measured_resistance_ohm", ohms)?;
        self.measured_resistance = Some(ohms);
        Ok(self)
    }

    /// The five-layer joint: Al pad, barrier (UBM), Au bump, ACF with
    /// 3 μm particles, ITO pad, using the published sheet resistances
    /// and cube counts.
    pub fn paper_default() -> Self {
        let sheet = |name: &str, r: f64, n: f64| {
            StackLayer::Sheet(LayerSpec::with_cube_count(name, r, n).expect("valid constant"))
        };
        let particle = ParticleSpec::new(
            1.5,
            0.2,
            Resistivity::from_micro_ohm_cm(2.2).expect("valid constant"),
        )
        .expect("valid constant");
        let acf = AcfContactSpec::new("ACF", particle, ContactCount::Count(21.6)).expect("valid constant");
        Self::new(vec![
            sheet("Al", 0.043, 1103.28),
            sheet("UBM", 2.5, 6247.5),
            sheet("Au_bump", 0.5, 3.085),
            StackLayer::Acf(acf),
            sheet("ITO", 4.5, 11106.67),
        ])
        .expect("valid constant")
        .with_measured_resistance(0.5)
        .expect("valid constant")
    }

    pub fn layers(&self) -> &[StackLayer] {
        &self.layers
    }

    pub fn measured_resistance(&self) -> Option<f64> {
        self.measured_resistance
    }

    pub fn acf(&self) -> Option<&AcfContactSpec> {
        self.layers.iter().find_map(|l| match l {
            StackLayer::Acf(a) => Some(a),
            _ => None,
        })
    }

    fn map_acf(&self, f: impl FnOnce(&AcfContactSpec) -> Result<AcfContactSpec>) -> Result<Self> {
        let idx = self
            .layers
            .iter()
            .position(|l| matches!(l, StackLayer::Acf(_)))
            .ok_or_else(|| Error::invalid("layers", "stack has no ACF layer"))?;
        let mut out = self.clone();
        if let StackLayer::Acf(a) = &self.layers[idx] {
            out.layers[idx] = StackLayer::Acf(f(a)?);
        }
        Ok(out)
    }

    /// Copy of the stack with the ACF contact count replaced.
    pub fn with_acf_count(&self, count: f64) -> Result<Self> {
        self.map_acf(|a| AcfContactSpec::new(a.name(), *a.particle(), ContactCount::Count(count)))
    }

    /// Copy of the stack with the ACF particle shell thickness replaced.
    pub fn with_shell_thickness(&self, shell_thickness_um: f64) -> Result<Self> {
        self.map_acf(|a| {
            let particle = a.particle().with_shell_thickness(shell_thickness_um)?;
            AcfContactSpec::new(a.name(), particle, a.contacts())
        })
    }

    /// Sum of all sheet layers: the limit of the total as the ACF count grows.
    pub fn sheet_resistance_sum(&self) -> f64 {
        self.layers
            .iter()
            .filter_map(|l| match l {
                StackLayer::Sheet(s) => Some(layer_resistance(s)),
                _ => None,
            })
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct LayerResistance {
    pub name: String,
    pub resistance: f64,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct ResistanceBreakdown {
    pub per_layer: Vec<LayerResistance>,
    pub total: f64,
}

impl ResistanceBreakdown {
    pub fn get(&self, name: &str) -> Option<f64> {
        self.per_layer
            .iter()
            .find(|l| l.name == name)
            .map(|l| l.resistance)
    }

    /// The entry contributing most to the total.
    pub fn dominant(&self) -> &LayerResistance {
        self.per_layer
            .iter()
            .max_by(|a, b| a.resistance.total_cmp(&b.resistance))
            .expect("breakdown is never empty")
    }
}

/// Series sum of every layer in stack order.
pub fn equivalent_resistance(stack: &StackAssembly) -> Result<ResistanceBreakdown> {
    let per_layer = stack
        .layers
        .iter()
        .map(|layer| {
            let resistance = layer.resistance().map_err(|e| e.in_layer(layer.name()))?;
            Ok(LayerResistance {
                name: layer.name().to_string(),
                resistance,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let total = per_layer.iter().map(|l| l.resistance).sum();
    Ok(ResistanceBreakdown { per_layer, total })
}
