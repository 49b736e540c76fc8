use serde::Serialize;

use super::{node_potentials, ResistorNetwork};
use crate::error::{Error, Result};
use crate::model::{equivalent_resistance, particle_resistance, LayerSpec, StackAssembly, StackLayer};

/// Adds `cubes` identical cube resistors between the plates `top` and
/// `bottom`. With `lateral` set each cube is split at its midpoint and
/// neighbouring midpoints on a near-square grid are tied together with the
/// same per-cube resistance (a cube conducts equally along x, y and z).
fn stamp_cubes(
    net: &mut ResistorNetwork,
    top: usize,
    bottom: usize,
    cube_ohms: f64,
    cubes: usize,
    lateral: bool,
) -> Result<()> {
    if !lateral {
        for _ in 0..cubes {
            net.add_resistor(top, bottom, cube_ohms)?;
        }
        return Ok(());
    }
    let cols = (cubes as f64).sqrt().ceil() as usize;
    let first = net.node_count();
    for _ in 0..cubes {
        let mid = net.add_node();
        net.add_resistor(top, mid, cube_ohms / 2.0)?;
        net.add_resistor(mid, bottom, cube_ohms / 2.0)?;
    }
    for i in 0..cubes {
        let right = i + 1;
        if right % cols != 0 && right < cubes {
            net.add_resistor(first + i, first + right, cube_ohms)?;
        }
        let below = i + cols;
        if below < cubes {
            net.add_resistor(first + i, first + below, cube_ohms)?;
        }
    }
    Ok(())
}

/// Unit-cube network of one layer: `cubes` resistors of `R_sheet` each,
/// between a source plate (node 0) and a sink plate (node 1).
pub fn discretize_layer(layer: &LayerSpec, cubes: usize, lateral_coupling: bool) -> Result<ResistorNetwork> {
    if cubes == 0 {
        return Err(Error::invalid("cubes", "must be >= 1"));
    }
    let mut net = ResistorNetwork::new(2, 0, 1)?;
    stamp_cubes(&mut net, 0, 1, layer.sheet_resistance(), cubes, lateral_coupling)?;
    Ok(net)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidationOptions {
    /// Cube resistors per sheet layer. Each is scaled so the bundle keeps
    /// the layer's true `R_sheet / n`.
    pub cubes_per_layer: usize,
    /// Relative error allowed between the two routes.
    pub tolerance: f64,
    pub lateral_coupling: bool,
}

impl Default for ValidationOptions {
    fn default() -> Self {
        Self {
            cubes_per_layer: 32,
            tolerance: 1e-6,
            lateral_coupling: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LayerValidation {
    pub name: String,
    pub closed_form: f64,
    /// Potential drop across the layer's plates at one ampere.
    pub network_solve: f64,
    pub relative_error: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub closed_form: f64,
    pub network_solve: f64,
    pub relative_error: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub per_layer_detail: Vec<LayerValidation>,
}

fn relative_error(reference: f64, value: f64) -> f64 {
    if reference > 0.0 {
        (reference - value).abs() / reference
    } else {
        (reference - value).abs()
    }
}

/// Builds the whole stack as a resistor network and compares its solve
/// against [`equivalent_resistance`].
///
/// Layer `i` sits between plate nodes `i` and `i + 1`. Sheet layers become
/// `cubes_per_layer` cube resistors of `R_sheet · cubes_per_layer / n`.
/// The ACF layer becomes one edge per whole contacting particle plus one
/// edge of proportionally reduced conductance for any fractional remainder.
pub fn validate_stack(stack: &StackAssembly, options: &ValidationOptions) -> Result<ValidationReport> {
    if options.cubes_per_layer == 0 {
        return Err(Error::invalid("cubes", "must be >= 1"));
    }
    if !(options.tolerance.is_finite() && options.tolerance >= 0.0) {
        return Err(Error::invalid("tolerance", "must be finite and >= 0"));
    }
    let layers = stack.layers();
    let mut net = ResistorNetwork::new(layers.len() + 1, 0, layers.len())?;
    for (i, layer) in layers.iter().enumerate() {
        let stamped = match layer {
            StackLayer::Sheet(s) => {
                let k = options.cubes_per_layer;
                let cube_ohms = s.sheet_resistance() * k as f64 / s.cube_count();
                stamp_cubes(&mut net, i, i + 1, cube_ohms, k, options.lateral_coupling)
            }
            StackLayer::Acf(a) => {
                let per_particle = 1.0 / particle_resistance(a.particle());
                let count = a.effective_count();
                let whole = count.floor();
                let mut res = Ok(());
                for _ in 0..whole as usize {
                    res = res.and_then(|_| net.add_conductance(i, i + 1, per_particle));
                }
                let fraction = count - whole;
                if fraction > 0.0 {
                    res = res.and_then(|_| net.add_conductance(i, i + 1, per_particle * fraction));
                }
                res
            }
        };
        stamped.map_err(|e| e.in_layer(layer.name()))?;
    }

    let potentials = node_potentials(&net)?;
    let closed = equivalent_resistance(stack)?;
    let plate = |i: usize| potentials[i].expect("plates lie on the conduction path");

    let per_layer_detail = closed
        .per_layer
        .iter()
        .enumerate()
        .map(|(i, l)| {
            let drop = plate(i) - plate(i + 1);
            LayerValidation {
                name: l.name.clone(),
                closed_form: l.resistance,
                network_solve: drop,
                relative_error: relative_error(l.resistance, drop),
            }
        })
        .collect();
    let network_solve = plate(0);
    let rel = relative_error(closed.total, network_solve);
    Ok(ValidationReport {
        closed_form: closed.total,
        network_solve,
        relative_error: rel,
        tolerance: options.tolerance,
        passed: rel <= options.tolerance,
        per_layer_detail,
    })
}
