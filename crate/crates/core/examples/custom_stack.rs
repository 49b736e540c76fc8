//! Describing a joint in JSON, with explicit film geometry and an ACF
//! particle density instead of a contact count.
//!
//! ```bash
//! cargo run -p acf-contact --example custom_stack
//! ```

use acf_contact::config::AssemblyConfig;
use acf_contact::model::{equivalent_resistance, StackLayer};
use acf_contact::report::breakdown_table;

const JOINT: &str = r#"{
  "name": "wide bump, 4 um particles",
  "layers": [
    { "kind": "sheet", "name": "Al", "sheet_resistance_ohm_per_sq": 0.043,
      "geometry": { "width_um": 30, "length_um": 90, "thickness_um": 0.8 } },
    { "kind": "sheet", "name": "Au_bump", "sheet_resistance_ohm_per_sq": 0.5,
      "geometry": { "width_um": 30, "length_um": 90, "thickness_um": 15 } },
    { "kind": "acf", "name": "ACF",
      "particle": { "radius_um": 2.0, "shell_thickness_um": 0.25, "shell_resistivity_uohm_cm": 2.2 },
      "density_per_um2": 0.01, "area_um2": 2700 },
    { "kind": "sheet", "name": "ITO", "sheet_resistance_ohm_per_sq": 4.5,
      "geometry": { "width_um": 30, "length_um": 90, "thickness_um": 0.045 } }
  ]
}"#;

fn main() -> acf_contact::Result<()> {
    let config = AssemblyConfig::parse(JOINT)?;
    let stack = config.to_stack()?;
    for layer in stack.layers() {
        if let StackLayer::Sheet(s) = layer {
            println!("{:<8} n = W·L/t² = {:.2}", s.name(), s.cube_count());
        }
    }
    println!();
    print!("{}", breakdown_table(&equivalent_resistance(&stack)?));

    // A bad value is reported with the layer and key it came from.
    let broken = JOINT.replace("\"sheet_resistance_ohm_per_sq\": 4.5", "\"sheet_resistance_ohm_per_sq\": -4.5");
    if let Err(e) = AssemblyConfig::parse(&broken)?.to_stack() {
        println!("\nrejected: {e}");
    }
    Ok(())
}
