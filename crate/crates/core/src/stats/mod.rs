//! Contact-count statistics and parameter sweeps.

mod montecarlo;
mod sweep;

pub use montecarlo::{expected_particle_count, monte_carlo_contacts, ContactDistribution};
pub use sweep::{
    linear_grid, sweep, sweep_particle_count, sweep_shell_thickness, SweepParameter, SweepPoint,
    SweepResult,
};
