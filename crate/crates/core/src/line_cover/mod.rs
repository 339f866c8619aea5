//! Covers with disks centered on the x-axis.
//!
//! Clients may lie anywhere in the plane. Results are disks centered at
//! `(x, 0)`; callers with a different line transform into its local frame
//! first (see [`crate::line_search`]).

mod dp;
mod greedy;
mod oracle;

pub use dp::{dp_linear, dp_squares, dp_superlinear};
pub use greedy::{sg_cover, sgg_cover};
pub use oracle::{oracle_line_exact, ORACLE_MAX_CLIENTS};
