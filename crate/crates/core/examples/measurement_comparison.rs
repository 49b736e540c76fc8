//! Measured against predicted joint resistance.
//!
//! ```bash
//! cargo run -p acf-contact --example measurement_comparison
//! ```

use acf_contact::model::{equivalent_resistance, StackAssembly};
use acf_contact::report::{compare_measurement, comparison_table};

fn main() -> acf_contact::Result<()> {
    let stack = StackAssembly::paper_default();
    let predicted = equivalent_resistance(&stack)?.total;
    let measured = stack.measured_resistance().unwrap_or(0.5);
    print!("{}", comparison_table(&compare_measurement(predicted, measured)?));

    // A model that ignores the gold bump, for contrast.
    let without_bump = predicted - equivalent_resistance(&stack)?.get("Au_bump").unwrap_or(0.0);
    let other = compare_measurement(without_bump, measured)?;
    println!("\nwithout the bump term the ratio would be {:.0}", other.ratio);
    Ok(())
}
