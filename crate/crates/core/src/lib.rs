//! Exact computations with quiver representations over F1.
//!
//! Representations are encoded by their colored quivers, which gives
//! canonical keys for isomorphism classes. On top of that sit exhaustive
//! enumeration of (nilpotent) indecomposables, explicit families and
//! functors, the Hall algebra with exact rational coefficients, and the
//! correspondence with skew shapes for loop quivers.

pub mod cli;
pub mod colored;
pub mod corr;
pub mod enumerate;
pub mod error;
pub mod f1lin;
pub mod hall;
pub mod quiver;
pub mod rep;
pub mod verify;

pub use colored::{canonical_key, gamma_of, rep_key, CanonicalKey, ColoredQuiver};
pub use error::{Error, Result};
pub use f1lin::{F1Map, F1Vec};
pub use quiver::{Quiver, QuiverShape, ShapeTag};
pub use rep::Representation;
