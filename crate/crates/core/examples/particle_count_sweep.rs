//! Total resistance against the number of contacting particles, printed as
//! CSV, followed by the count from which one more particle changes the
//! total by less than 1%.
//!
//! ```bash
//! cargo run -p acf-contact --example particle_count_sweep > count.csv
//! ```

use acf_contact::model::StackAssembly;
use acf_contact::report::sweep_csv;
use acf_contact::stats::{linear_grid, sweep_particle_count};

fn main() -> acf_contact::Result<()> {
    let stack = StackAssembly::paper_default();
    let sweep = sweep_particle_count(&stack, &linear_grid(1.0, 30.0, 30)?)?;
    print!("{}", sweep_csv(&sweep, Some("ACF"))?);

    if let Some(onset) = sweep.stability_onset(0.01) {
        eprintln!("stable (<1% per extra particle) from {onset} particles");
    }
    eprintln!("floor: {:.5} ohm", stack.sheet_resistance_sum());
    Ok(())
}
