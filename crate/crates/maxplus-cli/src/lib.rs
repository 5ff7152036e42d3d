//! Library surface of the `maxplus` CLI: file formats and command
//! implementations, kept out of `main` so integration tests can call them
//! directly.

pub mod commands;
pub mod format;
