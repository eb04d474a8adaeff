//! Exact factorization of monic separable integer polynomials over the p-adic
//! numbers with higher-order Newton polygons.
//!
//! The pipeline is layered: [`exactmath`] (integers and polynomials over Z),
//! [`gftower`] (residue field towers), [`polygons`] (principal polygons),
//! [`omtypes`] (types, valuations, residual polynomials, representatives),
//! [`montes`] (the factorization driver, indices and resultants) and [`cli`].

pub mod error;
pub mod exactmath;
pub mod gftower;
pub mod polygons;
pub mod omtypes;
pub mod montes;
pub mod cli;

pub use error::{OmError, Result};
