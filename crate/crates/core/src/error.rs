use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum Error {
    #[error("non-finite component")]
    NonFinite,
    #[error("frame basis is not orthonormal and right-handed")]
    InvalidFrame,
    #[error("rotation matrix is not orthonormal with determinant +1")]
    InvalidRotation,
    #[error("motion chain has no twists")]
    EmptyChain,
    #[error("mass distribution has no particles")]
    EmptyDistribution,
    #[error("particle {index} has non-positive or non-finite mass")]
    NonPositiveMass { index: usize },
    #[error("particle velocities are required")]
    MissingVelocities,
    #[error("the zero screw cannot be reduced to applied vectors")]
    ZeroScrew,
    #[error("inertia map is not invertible")]
    SingularInertia,
    #[error("invalid simulation config: {0}")]
    InvalidConfig(&'static str),
}

impl Error {
    /// Stable identifier used in reports and exit diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NonFinite => "NonFinite",
            Error::InvalidFrame => "InvalidFrame",
            Error::InvalidRotation => "InvalidRotation",
            Error::EmptyChain => "EmptyChain",
            Error::EmptyDistribution => "EmptyDistribution",
            Error::NonPositiveMass { .. } => "NonPositiveMass",
            Error::MissingVelocities => "MissingVelocities",
            Error::ZeroScrew => "ZeroScrew",
            Error::SingularInertia => "SingularInertia",
            Error::InvalidConfig(_) => "InvalidConfig",
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
