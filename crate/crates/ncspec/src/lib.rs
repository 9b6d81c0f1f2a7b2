//! Exact and numeric spectral analysis of non-commuting graphs of finite
//! groups.
//!
//! Pipeline: group construction ([`groups`]) feeds graph construction
//! ([`ncgraph`]), whose matrices are analyzed by exact and numeric spectral
//! routines ([`spectra`]) built on exact quadratic-surd arithmetic
//! ([`surd`]) and rational polynomials ([`poly`]). Energies and
//! classification flags derive from spectra ([`energies`]); catalogued
//! closed forms ([`closed_forms`]) and perfect-square integrality scans
//! ([`integrality`]) are cross-validated against the computational routes
//! by [`verify`], with the command-line surface in [`cli`].

pub mod closed_forms;
pub mod energies;
pub mod gf;
pub mod groups;
pub mod integrality;
pub mod ncgraph;
pub mod poly;
pub mod report;
pub mod spectra;
pub mod surd;
pub mod verify;

pub use groups::{Group, GroupError};
pub use ncgraph::{NcGraph, NcGraphError};
pub use surd::{Rat, Surd, SurdSum};
