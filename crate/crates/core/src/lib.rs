//! Exact computations with Lie algebras and the 3-Lie algebras induced by
//! a trace: brackets from structure constants, trace spaces, induced
//! brackets, structural series, low-degree cohomology, central extensions
//! and a catalog of low-dimensional algebras.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod cohomology;
pub mod error;
pub mod exactlin;
pub mod extensions;
pub mod induce;
pub mod structure;

#[cfg(test)]
mod testutil;

pub use algebra::StructureConstants;
pub use error::{Error, LiftCondition, Result};
pub use exactlin::{Matrix, Rational, Subspace};
pub use induce::{LinearForm, TraceSpace};
