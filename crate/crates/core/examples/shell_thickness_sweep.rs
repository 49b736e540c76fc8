//! Total resistance against the metal shell thickness of the particles.
//!
//! ```bash
//! cargo run -p acf-contact --example shell_thickness_sweep
//! ```

use acf_contact::model::StackAssembly;
use acf_contact::report::sweep_table;
use acf_contact::stats::{linear_grid, sweep_shell_thickness};

fn main() -> acf_contact::Result<()> {
    let stack = StackAssembly::paper_default();
    let sweep = sweep_shell_thickness(&stack, &linear_grid(0.05, 1.5, 30)?)?;
    print!("{}", sweep_table(&sweep, Some("ACF")));

    // The ACF term alone goes as 1 / (t (2r - t)).
    let first = &sweep.points[0];
    let last = sweep.points.last().unwrap();
    let acf = |p: &acf_contact::stats::SweepPoint| p.breakdown.get("ACF").unwrap();
    println!(
        "\nACF term falls {:.1}x from t = {} to t = {} um",
        acf(first) / acf(last),
        first.value,
        last.value
    );
    Ok(())
}
