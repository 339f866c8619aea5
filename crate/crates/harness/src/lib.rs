//! Command-line plumbing around `diskcover`: instance files, generators,
//! solver dispatch, CSV reports and SVG pictures.

// `!(x > 0)` style checks are deliberate: they also reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod generate;
pub mod io;
pub mod render;
pub mod report;
pub mod run;

pub use error::{HarnessError, Result};
