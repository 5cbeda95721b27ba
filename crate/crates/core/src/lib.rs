//! Exact Laurent expansions of cluster variables in rank-2 cluster algebras,
//! reflection functors on generalized Kronecker-quiver representations, and
//! Euler characteristics of the associated quiver Grassmannians.

#![allow(clippy::needless_range_loop)]

pub mod canonical;
pub mod chebyshev;
pub mod cluster;
pub mod error;
pub mod explore;
pub mod finite_field;
pub mod grassmannian;
pub mod laurent;
pub mod matrix;
pub mod quiver;
pub mod verify;

pub use error::{Error, Result};
pub use laurent::{DimVector, LaurentPoly, Monomial};
