//! Sampling how many particles land on a bump and what that does to the
//! joint resistance.
//!
//! ```bash
//! cargo run -p acf-contact --example monte_carlo_contacts
//! ```

use std::collections::BTreeMap;

use acf_contact::model::{equivalent_resistance, StackAssembly};
use acf_contact::report::distribution_table;
use acf_contact::stats::monte_carlo_contacts;

fn main() -> acf_contact::Result<()> {
    let dist = monte_carlo_contacts(0.0144, 1500.0, 10_000, 2024)?;
    print!("{}", distribution_table(&dist));

    let mut histogram: BTreeMap<u64, usize> = BTreeMap::new();
    for &c in &dist.counts {
        *histogram.entry(c).or_default() += 1;
    }
    println!();
    for (count, hits) in &histogram {
        println!("{count:>3} {}", "#".repeat(hits / 20));
    }

    // Resistance spread across realisations.
    let stack = StackAssembly::paper_default();
    let mut totals = Vec::with_capacity(dist.trials);
    for &c in &dist.counts {
        // A trial where no particle landed is an open joint and has no total.
        if let Ok(b) = stack.with_acf_count(c as f64).and_then(|s| equivalent_resistance(&s)) {
            totals.push(b.total);
        }
    }
    totals.sort_by(f64::total_cmp);
    let pct = |q: f64| totals[((totals.len() - 1) as f64 * q) as usize];
    println!(
        "\ntotal resistance: p5 {:.5}  median {:.5}  p95 {:.5} ohm ({} open joints)",
        pct(0.05),
        pct(0.5),
        pct(0.95),
        dist.trials - totals.len()
    );
    Ok(())
}
