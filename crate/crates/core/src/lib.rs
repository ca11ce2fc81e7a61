//! Weight modules for the Lie algebra of polynomial vector fields `W_n`.
//!
//! Modules are built as tensor modules `T(P, V) = P (x) V`, where `P` is a simple
//! weight module over the Weyl algebra `D_n` and `V` is a `gl(n)`-module.
//! Everything is exact: scalars are arbitrary precision rationals.

pub mod cli;
pub mod descriptor;
pub mod dmod;
pub mod duality;
pub mod error;
pub mod glmod;
pub mod lattice;
pub mod levi;
pub mod linalg;
pub mod localize;
pub mod tensormod;

pub use error::{Error, Result};
pub use lattice::Scalar;
