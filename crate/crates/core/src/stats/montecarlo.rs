use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Poisson};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{require_non_negative, Error, Result};

/// Mean number of particles whose centres land on a footprint of
/// `area_um2` at a areal density of `density_per_um2`.
pub fn expected_particle_count(density_per_um2: f64, area_um2: f64) -> Result<f64> {
    require_non_negative("density_per_um2", density_per_um2)?;
    require_non_negative("area_um2", area_um2)?;
    Ok(density_per_um2 * area_um2)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ContactDistribution {
    pub trials: usize,
    pub counts: Vec<u64>,
    pub mean: f64,
    pub expected: f64,
}

impl ContactDistribution {
    /// Unbiased sample variance.
    pub fn variance(&self) -> f64 {
        if self.trials < 2 {
            return 0.0;
        }
        let ss: f64 = self.counts.iter().map(|&c| (c as f64 - self.mean).powi(2)).sum();
        ss / (self.trials - 1) as f64
    }

    /// Standard error of the mean under the Poisson model, `sqrt(λ / trials)`.
    pub fn poisson_standard_error(&self) -> f64 {
        (self.expected / self.trials as f64).sqrt()
    }

    pub fn min(&self) -> u64 {
        self.counts.iter().copied().min().unwrap_or(0)
    }

    pub fn max(&self) -> u64 {
        self.counts.iter().copied().max().unwrap_or(0)
    }
}

/// Square footprint centred in a square window of twice the side.
const WINDOW_SCALE: f64 = 2.0;

fn one_trial(rate: f64, side: f64, seed: u64, trial: usize) -> u64 {
    if rate == 0.0 {
        return 0;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);

    let half_window = WINDOW_SCALE * side / 2.0;
    let window_mean = rate * WINDOW_SCALE * WINDOW_SCALE;
    let placed = Poisson::new(window_mean)
        .expect("positive finite mean")
        .sample(&mut rng) as u64;
    let half_footprint = side / 2.0;
    (0..placed)
        .filter(|_| {
            let x: f64 = rng.random_range(-half_window..half_window);
            let y: f64 = rng.random_range(-half_window..half_window);
            x.abs() <= half_footprint && y.abs() <= half_footprint
        })
        .count() as u64
}

/// Draws `trials` independent particle placements and counts contacts.
///
/// Each trial scatters a homogeneous Poisson point process over a window
/// four times the footprint area; a particle contacts iff its centre falls
/// inside the (square) footprint. Trial `i` draws from stream `i` of a
/// generator seeded with `seed`, so results do not depend on scheduling.
pub fn monte_carlo_contacts(
    density_per_um2: f64,
    area_um2: f64,
    trials: usize,
    seed: u64,
) -> Result<ContactDistribution> {
    let expected = expected_particle_count(density_per_um2, area_um2)?;
    if trials == 0 {
        return Err(Error::invalid("trials", "must be >= 1"));
    }
    let side = area_um2.sqrt();
    let counts: Vec<u64> = (0..trials)
        .into_par_iter()
        .map(|t| one_trial(expected, side, seed, t))
        .collect();
    let mean = counts.iter().sum::<u64>() as f64 / trials as f64;
    Ok(ContactDistribution {
        trials,
        counts,
        mean,
        expected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expected_count() {
        assert!((expected_particle_count(0.0144, 1500.0).unwrap() - 21.6).abs() < 1e-12);
        assert_eq!(expected_particle_count(0.0, 1500.0).unwrap(), 0.0);
        assert_eq!(expected_particle_count(0.0144, 0.0).unwrap(), 0.0);
        assert!(expected_particle_count(-1.0, 1.0).is_err());
        assert!(expected_particle_count(1.0, -1.0).is_err());
    }

    #[test]
    fn zero_density() {
        let d = monte_carlo_contacts(0.0, 1500.0, 1000, 7).unwrap();
        assert!(d.counts.iter().all(|&c| c == 0));
        assert_eq!(d.mean, 0.0);
    }

    #[test]
    fn zero_trials() {
        assert!(monte_carlo_contacts(0.01, 100.0, 0, 1).is_err());
    }

    #[test]
    fn deterministic_per_seed() {
        let a = monte_carlo_contacts(0.0144, 1500.0, 500, 42).unwrap();
        let b = monte_carlo_contacts(0.0144, 1500.0, 500, 42).unwrap();
        assert_eq!(a, b);
        let c = monte_carlo_contacts(0.0144, 1500.0, 500, 43).unwrap();
        assert_ne!(a.counts, c.counts);
    }

    #[test]
    fn trial_prefix_is_stable() {
        // Per-trial streams: a longer run extends a shorter one.
        let short = monte_carlo_contacts(0.0144, 1500.0, 100, 9).unwrap();
        let long = monte_carlo_contacts(0.0144, 1500.0, 300, 9).unwrap();
        assert_eq!(short.counts[..], long.counts[..100]);
    }

    #[test]
    fn poisson_moments() {
        let d = monte_carlo_contacts(0.0144, 1500.0, 10_000, 2024).unwrap();
        let se = d.poisson_standard_error();
        assert!((d.mean - 21.6).abs() <= 3.0 * se, "mean {}", d.mean);
        // Poisson: variance ≈ mean.
        assert!((d.variance() / 21.6 - 1.0).abs() < 0.1, "variance {}", d.variance());
    }
}
