//! Branching of affine Lie algebra modules along order-two involutions.
//!
//! Exact rational arithmetic throughout. The modules build the affine datum
//! of an involution, enumerate Weyl group coset representatives, decompose
//! the basic, vector and spin modules, and verify decompositions against
//! truncated characters.

pub mod error;
pub mod branching;
pub mod charoracle;
pub mod linalg;
pub mod rootdata;
pub mod system;
pub mod tables;
pub mod weylcomb;

pub use branching::{Component, Decomposition, Label, ModuleId, Rep};
pub use error::{Error, Result};
pub use linalg::Q;
pub use rootdata::{build_affine_datum, AffineDatum, InvolutionSpec};
pub use system::{RootSystem, Weight};
pub use tables::{LieType, Simple};
pub use weylcomb::WeylElement;
