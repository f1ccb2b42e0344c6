//! Library surface of the comather command line tool: session and label
//! parsing, table computation, emitters, golden fixtures, and conjecture
//! scanners. The binary in `main.rs` is a thin dispatcher over these.

pub mod emit;
pub mod fixtures;
pub mod klcache;
pub mod scan;
pub mod session;
pub mod tables;
