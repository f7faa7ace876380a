//! Sectional pseudocomplementation on finite posets.
//!
//! The crate computes the star operation `x * y` (the pseudocomplement of
//! `x` in the section `[y)`), every extension rule to a total arrow
//! operation, the axiom systems characterizing them, and exhaustive
//! verification sweeps over small posets.

pub mod axioms;
pub mod catalog;
pub mod elemset;
pub mod enumerate;
pub mod error;
pub mod extend;
pub mod poset;
pub mod pseudo;
pub mod selection;
pub mod solve;
pub mod table;
pub mod verify;

pub use elemset::{Elem, ElemSet};
pub use error::{Error, Result};
pub use poset::{Decl, Poset, StructureReport};
pub use selection::LocalSelection;
pub use table::{PartialTable, TotalTable};
