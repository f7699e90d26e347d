//! Verification campaigns, the result cache, input file formats and output
//! documents for [`svo_core`].

pub mod cache;
pub mod classify;
pub mod document;
pub mod input;
pub mod report;
pub mod verify;

pub use report::{Mismatch, Status, VerificationReport};

/// Written into cache entries and output documents.
pub const LIBRARY_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Version of the JSON document layout.
pub const SCHEMA_VERSION: u32 = 1;
