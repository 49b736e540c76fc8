//! Unit conventions.
//!
//! Internally every length is in micrometres, every resistance in ohms and
//! every resistivity in Ω·μm. Values arrive in the units printed on data
//! sheets (μΩ·cm for metal resistivity) and are converted here.

use crate::error::{require_non_negative, require_positive, Result};

/// Ω·μm per μΩ·cm.
pub const OHM_UM_PER_MICRO_OHM_CM: f64 = 1e-2;

/// Converts a resistivity in μΩ·cm to Ω·μm.
pub fn convert_resistivity(micro_ohm_cm: f64) -> Result<f64> {
    require_non_negative("shell_resistivity_uohm_cm", micro_ohm_cm)?;
    Ok(micro_ohm_cm * OHM_UM_PER_MICRO_OHM_CM)
}

/// Bulk resistivity of a conductor.
///
/// Keeps the value exactly as entered (μΩ·cm) so that a model written back
/// to a config file reproduces its input bit for bit; arithmetic goes
/// through [`Resistivity::ohm_um`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Resistivity {
    micro_ohm_cm: f64,
}

impl Resistivity {
    pub fn from_micro_ohm_cm(value: f64) -> Result<Self> {
        require_positive("shell_resistivity_uohm_cm", value)?;
        Ok(Self {
            micro_ohm_cm: value,
        })
    }

    pub fn from_ohm_um(value: f64) -> Result<Self> {
        Self::from_micro_ohm_cm(value / OHM_UM_PER_MICRO_OHM_CM)
    }

    pub fn micro_ohm_cm(self) -> f64 {
        self.micro_ohm_cm
    }

    pub fn ohm_um(self) -> f64 {
        self.micro_ohm_cm * OHM_UM_PER_MICRO_OHM_CM
    }
}

/// Number of `thickness`-sized cubes tiling a `width` × `length` film,
/// `W·L/t²`. The result is an area ratio and is generally not an integer.
pub fn unit_cube_count(width_um: f64, length_um: f64, thickness_um: f64) -> Result<f64> {
    require_positive("width_um", width_um)?;
    require_positive("length_um", length_um)?;
    require_positive("thickness_um", thickness_um)?;
    Ok(width_um * length_um / (thickness_um * thickness_um))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    #[test]
    fn cube_count_forced_values() {
        assert_eq!(unit_cube_count(1.0, 1.0, 1.0).unwrap(), 1.0);
        assert_eq!(unit_cube_count(10.0, 10.0, 1.0).unwrap(), 100.0);
        assert_eq!(unit_cube_count(2.0, 8.0, 2.0).unwrap(), 4.0);
    }

    #[test]
    fn cube_count_rejects_non_positive() {
        for args in [(0.0, 1.0, 1.0), (1.0, -1.0, 1.0), (1.0, 1.0, 0.0)] {
            let err = unit_cube_count(args.0, args.1, args.2).unwrap_err();
            assert!(matches!(err, Error::Invalid { .. }), "{err}");
        }
    }

    #[test]
    fn resistivity_conversion() {
        assert!((convert_resistivity(2.2).unwrap() - 2.2e-2).abs() < 1e-15 * 2.2e-2);
        assert_eq!(convert_resistivity(0.0).unwrap(), 0.0);
        assert_eq!(convert_resistivity(100.0).unwrap(), 1.0);
        assert!(convert_resistivity(-1.0).is_err());
    }

    #[test]
    fn resistivity_keeps_input_value() {
        let r = Resistivity::from_micro_ohm_cm(2.2).unwrap();
        assert_eq!(r.micro_ohm_cm(), 2.2);
        assert_eq!(r.ohm_um(), convert_resistivity(2.2).unwrap());
        assert!(Resistivity::from_micro_ohm_cm(0.0).is_err());
    }
}
