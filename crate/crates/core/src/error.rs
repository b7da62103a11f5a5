use thiserror::Error;

/// Errors raised by the engine.
///
/// Most of these indicate inconsistent input or an internal bug; the
/// arithmetic itself never rounds, so a failed exactness check is reported
/// instead of being papered over.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inexact division")]
    InexactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("zero denominator in rational function")]
    ZeroDenominator,
    #[error("pole at origin: denominator has zero constant term")]
    PoleAtOrigin,
    #[error("size mismatch: |lambda| = {lambda} but |mu| = {mu}")]
    SizeMismatch { lambda: usize, mu: usize },
    #[error("length mismatch: expected {expected} class values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("not a character: multiplicity of {label} in degree {degree} is {value}")]
    NotACharacter {
        label: String,
        degree: u32,
        value: String,
    },
    #[error("unsupported family {0}: only type A has named irreducibles")]
    UnsupportedFamily(char),
    #[error("invalid Cartan type {input:?}: {reason}; expected A<r> (r>=1), B<r>/C<r> (r>=2), D<r> (r>=3), SU(m) (m>=2) or Sp(m) (m>=2)")]
    InvalidCartan { input: String, reason: String },
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),
    #[error("class descriptor {descriptor} is not valid for {cartan}")]
    InvalidDescriptor { descriptor: String, cartan: String },
    #[error("{what} = {value} exceeds the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("negative coefficient {value} in degree {degree}")]
    NegativeCoefficient { degree: u32, value: String },
    #[error("non-integral coefficient {value} in degree {degree}")]
    NonIntegral { degree: u32, value: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
