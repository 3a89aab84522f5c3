//! Diagonal quivers of regular polygons, translation quivers and their powers,
//! the m-divisible dissection complex, colored almost positive roots of type
//! `A`, and the Auslander-Reiten quiver model of the m-cluster category of type
//! `A_{n-1}`.
//!
//! The central check is that the quiver of m-diagonals of the `(nm+2)`-gon,
//! with rotation by `m` steps as translation, is isomorphic as a translation
//! quiver to `ZA_{n-1}` modulo `τ^{-1} S^m`.

pub mod cli;
pub mod derived;
pub mod dissection;
pub mod error;
pub mod gamma;
pub mod io;
pub mod mesh;
pub mod polygon;
pub mod power;
pub mod quiver;
pub mod roots;

pub use error::{Error, Result};
