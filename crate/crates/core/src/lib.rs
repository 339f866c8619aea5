//! Minimum-cost coverage of point sets by disks.
//!
//! Clients must each lie in some disk; a disk of radius `r` costs `r^alpha`.
//! Modules cover servers on a line with a discrete site set ([`discrete_1d`]),
//! servers on a given line ([`line_cover`]), servers on a line chosen by the
//! algorithm ([`line_search`]) and covering tours ([`mcct`]).
//!
//! Everything is generic over [`Scalar`] (`f32` or `f64`); the aliases at the
//! crate root fix `f64`.

// `!(x > 0)` style checks are deliberate: they also reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod discrete_1d;
pub mod error;
pub mod geometry;
pub mod line_cover;
pub mod line_search;
pub mod mcct;
mod scalar;

pub use error::{CoverError, Result};
pub use scalar::Scalar;

pub type Point = geometry::Point<f64>;
pub type Metric = geometry::Metric<f64>;
pub type CostModel = geometry::CostModel<f64>;
pub type Disk = geometry::Disk<f64>;
pub type Cover = geometry::Cover<f64>;
pub type Line = geometry::Line<f64>;
pub type Instance = geometry::Instance<f64>;
pub type LineInstance1D = discrete_1d::LineInstance1D<f64>;
pub type LineSearchResult = line_search::LineSearchResult<f64>;
pub type CoveringTour = mcct::CoveringTour<f64>;
pub type GridSpec = mcct::GridSpec<f64>;

pub type PointF32 = geometry::Point<f32>;
pub type CoverF32 = geometry::Cover<f32>;
