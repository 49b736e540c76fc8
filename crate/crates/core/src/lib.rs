//! Contact resistance of anisotropic conductive film (ACF) chip-on-glass
//! joints.
//!
//! A joint is modelled as layers in series (Al pad, barrier metal, Au bump,
//! ACF particles, ITO pad). Within each sheet layer current flows through
//! `n = W·L/t²` unit cubes in parallel, each with the film's sheet
//! resistance; within the ACF layer it flows through identical hollow
//! particles in parallel.
//!
//! ```
//! use acf_contact::model::{equivalent_resistance, StackAssembly};
//!
//! let breakdown = equivalent_resistance(&StackAssembly::paper_default()).unwrap();
//! assert!((breakdown.total - 0.1645).abs() < 5e-4);
//! assert_eq!(breakdown.dominant().name, "Au_bump");
//! ```
//!
//! - [`model`]: layer, particle and stack types with the closed form.
//! - [`network`]: nodal-analysis solver and the unit-cube network check.
//! - [`stats`]: Monte Carlo contact counts and parameter sweeps.
//! - [`config`], [`report`], [`cli`]: file format, output, command line.

pub mod cli;
pub mod config;
mod error;
pub mod model;
pub mod network;
pub mod report;
pub mod stats;
pub mod units;

pub use error::{Error, ErrorClass, Result};
