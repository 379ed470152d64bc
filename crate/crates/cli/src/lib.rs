//! Library side of the `grlb` command: output records, table generation and
//! verification suites.

pub mod record;
pub mod tables;
pub mod verify;

pub use record::{compute, OutputRecord, Source, SCHEMA_VERSION};
