//! Numerical core for spectral geometry on graded nilpotent groups.
//!
//! The crate provides exact arithmetic on graded Lie algebras and their
//! groups ([`algebra`], [`levi`]), complex Clifford representations
//! ([`clifford`]), closed-form horizontal Dirac spectra on compact
//! nilmanifolds with an independent oscillator-basis oracle ([`spectra`]),
//! a hypoellipticity decision engine for horizontal Laplacians ([`hypo`]),
//! and a trajectory-optimization solver for the associated path metric
//! ([`ccmetric`]).

pub mod algebra;
pub mod clifford;
pub mod error;
pub mod levi;
pub mod linalg;
pub mod poly;

pub use error::{CoreError, Result};
