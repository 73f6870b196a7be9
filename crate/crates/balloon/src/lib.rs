//! File formats, SVG output, instance generators and benchmarks around
//! [`balloon_core`].

pub mod bench;
mod error;
pub mod gen;
pub mod json;
pub mod svg;
pub mod treefile;

pub use error::{CliError, Result};
