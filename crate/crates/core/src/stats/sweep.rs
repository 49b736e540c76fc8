use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{require_positive, Error, Result};
use crate::model::{equivalent_resistance, ResistanceBreakdown, StackAssembly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepParameter {
    ParticleCount,
    ShellThickness,
}

impl SweepParameter {
    pub fn as_str(self) -> &'static str {
        match self {
            SweepParameter::ParticleCount => "particle-count",
            SweepParameter::ShellThickness => "shell-thickness",
        }
    }

    /// Default grid: counts 1 to 30, or shell thicknesses 0.05 to 1.5 μm,
    /// 30 points each.
    pub fn default_range(self) -> (f64, f64, usize) {
        match self {
            SweepParameter::ParticleCount => (1.0, 30.0, 30),
            SweepParameter::ShellThickness => (0.05, 1.5, 30),
        }
    }
}

impl fmt::Display for SweepParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SweepParameter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "particle-count" => Ok(SweepParameter::ParticleCount),
            "shell-thickness" => Ok(SweepParameter::ShellThickness),
            other => Err(Error::invalid(
                "param",
                format!("unknown sweep parameter `{other}` (expected particle-count or shell-thickness)"),
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepPoint {
    pub value: f64,
    pub total: f64,
    pub breakdown: ResistanceBreakdown,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepResult {
    pub parameter: SweepParameter,
    pub points: Vec<SweepPoint>,
}

impl SweepResult {
    pub fn totals(&self) -> Vec<f64> {
        self.points.iter().map(|p| p.total).collect()
    }

    /// Relative change of the total from each point to the next.
    pub fn successive_changes(&self) -> Vec<f64> {
        self.points
            .windows(2)
            .map(|w| (w[1].total - w[0].total).abs() / w[0].total)
            .collect()
    }

    /// First parameter value from which the next step changes the total by
    /// less than `threshold` (relative).
    pub fn stability_onset(&self, threshold: f64) -> Option<f64> {
        self.successive_changes()
            .iter()
            .position(|&c| c < threshold)
            .map(|i| self.points[i].value)
    }
}

/// `steps` evenly spaced values from `from` to `to` inclusive.
pub fn linear_grid(from: f64, to: f64, steps: usize) -> Result<Vec<f64>> {
    if !(from.is_finite() && to.is_finite()) {
        return Err(Error::invalid("from/to", "must be finite"));
    }
    match steps {
        0 => Err(Error::invalid("steps", "must be >= 1")),
        1 => Ok(vec![from]),
        _ => {
            let span = to - from;
            let last = (steps - 1) as f64;
            Ok((0..steps)
                .map(|i| if i == steps - 1 { to } else { from + span * i as f64 / last })
                .collect())
        }
    }
}

fn run_sweep(
    parameter: SweepParameter,
    values: &[f64],
    build: impl Fn(f64) -> Result<StackAssembly> + Sync,
) -> Result<SweepResult> {
    if values.is_empty() {
        return Err(Error::invalid("values", "sweep needs at least one point"));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let points = sorted
        .par_iter()
        .map(|&value| {
            let breakdown = equivalent_resistance(&build(value)?)?;
            Ok(SweepPoint {
                value,
                total: breakdown.total,
                breakdown,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepResult { parameter, points })
}

/// Totals with the ACF contact count set to each of `counts`.
pub fn sweep_particle_count(stack: &StackAssembly, counts: &[f64]) -> Result<SweepResult> {
    if stack.acf().is_none() {
        return Err(Error::invalid("layers", "sweep requires an ACF layer"));
    }
    for &c in counts {
        require_positive("particle count", c)?;
    }
    run_sweep(SweepParameter::ParticleCount, counts, |c| stack.with_acf_count(c))
}

/// Totals with the particle shell thickness set to each of `thicknesses` (μm).
pub fn sweep_shell_thickness(stack: &StackAssembly, thicknesses: &[f64]) -> Result<SweepResult> {
    let Some(acf) = stack.acf() else {
        return Err(Error::invalid("layers", "sweep requires an ACF layer"));
    };
    let radius = acf.particle().radius_um();
    for &t in thicknesses {
        if !(t > 0.0 && t <= radius) {
            return Err(Error::invalid(
                "shell_thickness_um",
                format!("sweep value {t} outside (0, {radius}]"),
            ));
        }
    }
    run_sweep(SweepParameter::ShellThickness, thicknesses, |t| stack.with_shell_thickness(t))
}

pub fn sweep(stack: &StackAssembly, parameter: SweepParameter, values: &[f64]) -> Result<SweepResult> {
    match parameter {
        SweepParameter::ParticleCount => sweep_particle_count(stack, values),
        SweepParameter::ShellThickness => sweep_shell_thickness(stack, values),
    }
}
