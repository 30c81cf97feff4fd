//! Representations of two-bridge knot groups induced from finite-index subgroups.

pub mod analysis;
pub mod cohomology;
pub mod coset;
pub mod error;
pub mod figure8;
pub mod io;
pub mod linalg;
pub mod presentation;
pub mod rep;
pub mod schreier;
pub mod words;

pub use error::{Error, Result};
