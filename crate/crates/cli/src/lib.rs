//! Library half of the `artin` binary: fixture parsing, assembly into
//! core objects, command implementations, and report formatting.

pub mod assemble;
pub mod commands;
pub mod fixture;
pub mod report;
