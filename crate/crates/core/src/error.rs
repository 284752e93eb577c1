use alloc::string::String;

use crate::algebra::Basis;
use crate::tableaux::TableauKind;

pub type Result<T> = core::result::Result<T, QsymError>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QsymError {
    #[error("composition part {index} is zero; parts must be positive")]
    ZeroPart { index: usize },

    #[error("parts are not weakly decreasing at position {index}")]
    NotAPartition { index: usize },

    #[error("subset element {element} lies outside [1, {max}]")]
    SubsetOutOfRange { element: usize, max: usize },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("basis mismatch: expected {expected}, found {found}")]
    BasisMismatch { expected: Basis, found: Basis },

    #[error("row {row} has an empty or non-positive entry")]
    MalformedRow { row: usize },

    #[error("filling is not a valid {kind} tableau")]
    InvalidFilling { kind: TableauKind },

    #[error("expected a {expected} tableau, found {found}")]
    WrongKind { expected: TableauKind, found: TableauKind },

    #[error("filling is not standard (entries must be exactly 1..{cells})")]
    NotStandard { cells: usize },

    #[error("target basis {basis} is singular in degree {degree}")]
    SingularBasis { basis: Basis, degree: usize },

    #[error("expansion into {basis} has a non-integral coefficient")]
    NonIntegral { basis: Basis },

    #[error("ordering of length {found} does not list the {expected} compositions of the degree")]
    BadOrdering { expected: usize, found: usize },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
