//! Toolkit for distance-set geometry: classification of (locally)
//! k-distance point configurations, exact Gegenbauer polynomial machinery,
//! cardinality bound certificates, weighted spherical design verification
//! and canonical weight construction, a verified catalog of extremal
//! configurations, and grid searches supporting small nonexistence claims.

// index-heavy matrix loops read better with explicit indices
#![allow(clippy::needless_range_loop)]

pub mod bounds;
pub mod catalog;
pub mod designs;
pub mod error;
pub mod exact;
pub mod gegenbauer;
pub mod geometry;
pub mod io;
pub mod poly;
pub mod report;
pub mod search;

pub use error::Error;
