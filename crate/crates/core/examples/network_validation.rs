//! Cross-checking the closed form with resistor networks.
//!
//! A single layer is cut into cubes and solved by nodal analysis, with and
//! without lateral coupling between neighbouring cubes; then the whole
//! stack is rebuilt as a chain of cube bundles and compared.
//!
//! ```bash
//! cargo run -p acf-contact --example network_validation
//! ```

use acf_contact::model::{layer_resistance, LayerSpec, StackAssembly};
use acf_contact::network::{
    discretize_layer, reduce_series_parallel, solve_network, validate_stack, ResistorNetwork, ValidationOptions,
};
use acf_contact::report::validation_table;

fn main() -> acf_contact::Result<()> {
    let layer = LayerSpec::with_cube_count("ITO", 4.5, 64.0)?;
    for lateral in [false, true] {
        let net = discretize_layer(&layer, 64, lateral)?;
        println!(
            "64 cubes, lateral={lateral:<5}: {} nodes, {} edges, R = {:.6e} (closed form {:.6e})",
            net.node_count(),
            net.edges().len(),
            solve_network(&net)?,
            layer_resistance(&layer)
        );
    }

    // An unbalanced bridge has no series/parallel reduction, nodal analysis
    // still solves it.
    let mut bridge = ResistorNetwork::new(4, 0, 3)?;
    for (a, b, r) in [(0, 1, 1.0), (0, 2, 2.0), (1, 3, 3.0), (2, 3, 4.0), (1, 2, 5.0)] {
        bridge.add_resistor(a, b, r)?;
    }
    println!(
        "\nbridge: reduction {:?}, nodal solve {:.6} ohm\n",
        reduce_series_parallel(&bridge)?,
        solve_network(&bridge)?
    );

    let report = validate_stack(&StackAssembly::paper_default(), &ValidationOptions::default())?;
    print!("{}", validation_table(&report));
    Ok(())
}
