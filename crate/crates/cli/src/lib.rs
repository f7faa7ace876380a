//! Command-line front end for `espkit`: a text format for posets, tables
//! and selections, and the commands built on it.

pub mod commands;
pub mod document;

pub use commands::run;
pub use document::{emit, parse, Document, ParseError};
