//! Std companion to `boxproj-core`: multi-threaded Monte Carlo runners, file
//! formats, run manifests, SVG charts and the `boxproj` command line.

pub mod cli;
pub mod error;
pub mod formats;
pub mod manifest;
pub mod par;
pub mod svg;

pub use error::{Error, Result};
