//! Exact computations for rank-2 co-Higgs bundles on P¹×P¹.
//!
//! Everything is over ℚ. Sections of `O(a,b)` are polynomials in the affine chart
//! coordinates `(z1, z2)`; Higgs fields are pairs of trace-free 2×2 polynomial matrices,
//! one per summand of `T = O(2,0) ⊕ O(0,2)`.

use std::fmt;

use serde::{Deserialize, Serialize};

pub mod chern;
pub mod cohomology;
pub mod exactalg;
pub mod extension;
pub mod higgs;
pub mod json;
pub mod spectral;

pub use exactalg::{BiPoly, Mat2, PolyMat2, Rat, RatFn, RatMat2};

/// One of the two `P¹` factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Axis {
    One,
    Two,
}

impl Axis {
    pub fn from_index(k: u8) -> Option<Self> {
        match k {
            1 => Some(Axis::One),
            2 => Some(Axis::Two),
            _ => None,
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Axis::One => 1,
            Axis::Two => 2,
        }
    }

    pub fn other(self) -> Self {
        match self {
            Axis::One => Axis::Two,
            Axis::Two => Axis::One,
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("automorphism has identically zero determinant")]
    SingularAutomorphism,
    #[error("degree bound violated: {0}")]
    DegreeBoundViolation(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial is not univariate in the requested variable")]
    NotUnivariate,
    #[error("fields live on different bundles")]
    BundleMismatch,
    #[error("Higgs field is not integrable")]
    NotIntegrable,
    #[error("invalid Higgs field: {0}")]
    InvalidField(String),
    #[error("field is not strictly semistable")]
    NotStrictlySemistable,
    #[error("leading coefficient is zero")]
    LeadingCoefficientZero,
    #[error("field is outside the normal-form domain: {0}")]
    NotInNormalFormDomain(String),
    #[error("C1 vanishes")]
    ZeroC1,
    #[error("section does not fit slot {0}")]
    SlotViolation(String),
    #[error("C vanishes identically")]
    ZeroC,
    #[error("extension class is trivial")]
    TrivialExtension,
    #[error("inconsistent moduli point: {0}")]
    InconsistentPoint(String),
    #[error("spectral data violates rho12^2 = 4 rho1 rho2")]
    InconsistentRho,
    #[error("common eigenvectors are irrational")]
    IrrationalEigenvalues,
}

impl Error {
    /// Stable identifier used in CLI error JSON.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::SingularAutomorphism => "SingularAutomorphism",
            Error::DegreeBoundViolation(_) => "DegreeBoundViolation",
            Error::DivisionByZero => "DivisionByZero",
            Error::NotUnivariate => "NotUnivariate",
            Error::BundleMismatch => "BundleMismatch",
            Error::NotIntegrable => "NotIntegrable",
            Error::InvalidField(_) => "InvalidField",
            Error::NotStrictlySemistable => "NotStrictlySemistable",
            Error::LeadingCoefficientZero => "LeadingCoefficientZero",
            Error::NotInNormalFormDomain(_) => "NotInNormalFormDomain",
            Error::ZeroC1 => "ZeroC1",
            Error::SlotViolation(_) => "SlotViolation",
            Error::ZeroC => "ZeroC",
            Error::TrivialExtension => "TrivialExtension",
            Error::InconsistentPoint(_) => "InconsistentPoint",
            Error::InconsistentRho => "InconsistentRho",
            Error::IrrationalEigenvalues => "IrrationalEigenvalues",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
