//! Exact quasisymmetric functions indexed by compositions.
//!
//! The crate covers row-strict and column-strict composition tableaux, the
//! row-strict quasisymmetric Schur functions `RS_α` together with the
//! quasisymmetric Schur functions `QS_α`, the bijections that relate them to
//! reverse tableaux, an RSCT analogue of dual Schensted insertion, and exact
//! basis transition matrices between `M`, `F`, `QS` and `RS`.
//!
//! Everything here is pure and allocation-only; IO, file formats and the
//! command line live in the companion `qsym` crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod algebra;
pub mod bijections;
pub mod compositions;
pub mod error;
pub mod expansions;
pub mod insertion;
pub mod tableaux;

pub use algebra::{Basis, QSymElement, TransitionMatrix};
pub use compositions::{Composition, Partition, WeakComposition};
pub use error::{QsymError, Result};
pub use expansions::{Expander, ExpansionReport, Family, VerificationReport};
pub use tableaux::{Cell, DescentFlavor, DescentSet, Filling, TableauKind};

/// Coefficient ring of every quasisymmetric element.
pub type Coeff = num_bigint::BigInt;
