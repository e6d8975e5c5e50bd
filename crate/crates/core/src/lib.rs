//! Weight multiplicities of simple Lie algebras with exact arithmetic, the
//! Berenstein–Zelevinsky multiplicity-one criteria, and a bounded survey of
//! nonprimitive multiplicity-one pairs above the highest roots.

pub mod bz;
pub mod cli;
pub mod error;
pub mod oracle;
pub mod rootsystem;
pub mod survey;

pub use error::{Error, Result};
pub use rootsystem::{LieType, OmegaWeight, RootWeight};
