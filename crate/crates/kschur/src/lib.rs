//! The std side of [`kschur_core`]: command line, file formats, the
//! expansion cache and the verification suites.

pub mod cache;
pub mod cli;
mod error;
pub mod json;
pub mod memo;
pub mod verify;

pub use error::{Error, Result};
