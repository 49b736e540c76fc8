use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An input value is outside the domain of the model.
    #[error("{field}: {reason}")]
    Invalid { field: &'static str, reason: String },

    /// Particle shell of zero thickness: no conductive cross-section.
    #[error("shell_thickness_um is 0: particle has zero conductive cross-section (open circuit)")]
    ZeroCrossSection,

    /// ACF layer with no effectively contacting particles.
    #[error("effective contact count is 0: ACF joint is open")]
    OpenJoint,

    #[error("source and sink are not connected: open circuit")]
    OpenCircuit,

    #[error("network is malformed: reduced nodal system is singular")]
    SingularNetwork,

    /// An error raised while evaluating one named layer of a stack.
    #[error("layer `{layer}`: {source}")]
    Layer {
        layer: String,
        #[source]
        source: Box<Error>,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("config parse error: {0}")]
    Parse(#[from] serde_json::Error),

    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),
}

/// Coarse classification used to pick a process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Bad input, parse or schema failure.
    Input,
    /// Open circuit or singular system.
    Numerical,
}

impl Error {
    pub(crate) fn invalid(field: &'static str, reason: impl Into<String>) -> Self {
        Error::Invalid {
            field,
            reason: reason.into(),
        }
    }

    pub(crate) fn in_layer(self, layer: &str) -> Self {
        Error::Layer {
            layer: layer.to_string(),
            source: Box::new(self),
        }
    }

    /// The innermost error, looking through layer context.
    pub fn root(&self) -> &Error {
        match self {
            Error::Layer { source, .. } => source.root(),
            other => other,
        }
    }

    pub fn class(&self) -> ErrorClass {
        match self.root() {
            Error::ZeroCrossSection
            | Error::OpenJoint
            | Error::OpenCircuit
            | Error::SingularNetwork => ErrorClass::Numerical,
            _ => ErrorClass::Input,
        }
    }
}

/// Fails unless `value` is finite and strictly positive.
pub(crate) fn require_positive(field: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::invalid(field, format!("must be > 0 (got {value})")))
    }
}

/// Fails unless `value` is finite and non-negative.
pub(crate) fn require_non_negative(field: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value >= 0.0 {
        Ok(value)
    } else {
        Err(Error::invalid(field, format!("must be >= 0 (got {value})")))
    }
}
