//! Determinantal ideals of (specialized) Ferrers tableaux, their initial
//! ideals and Stanley–Reisner complexes, fiber-ring Hilbert series and
//! diagonal minimal reductions, all in exact arithmetic.

pub mod complex;
pub mod error;
pub mod hilbert;
pub mod ideals;
pub mod linalg;
pub mod polyring;
pub mod reductions;
pub mod shapes;

pub use error::{Error, Result};
