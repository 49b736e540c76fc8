//! Per-layer breakdown of the bundled five-layer joint.
//!
//! ```bash
//! cargo run -p acf-contact --example compute_breakdown
//! ```

use acf_contact::model::{equivalent_resistance, StackAssembly};
use acf_contact::report::breakdown_table;

fn main() -> acf_contact::Result<()> {
    let stack = StackAssembly::paper_default();
    let breakdown = equivalent_resistance(&stack)?;
    print!("{}", breakdown_table(&breakdown));

    let dominant = breakdown.dominant();
    println!(
        "\n{} carries {:.1}% of the joint resistance",
        dominant.name,
        100.0 * dominant.resistance / breakdown.total
    );
    println!("limit with unlimited particles: {:.5} ohm", stack.sheet_resistance_sum());
    Ok(())
}
