//! Construction, classification and brute-force verification of the solution
//! families of sine/cosine-type functional equations on finitely generated
//! abelian groups, generalized by convolution against a finitely supported
//! complex measure.
//!
//! The central equation is
//!
//! ```text
//! ∫ [f₁(x+y−t) + f₂(x−y+t)] dμ(t) = g(x)·h(y)
//! ```
//!
//! together with its measure-free form `F₁(x+y)+F₂(x−y) = g(x)h(y)`, its
//! even/odd reductions, and the cosine- and sine-type specializations in
//! which the right-hand side couples the unknown with itself.
//!
//! - [`group`]: finitely generated abelian groups `Z^r ⊕ Z_{n₁} ⊕ …`.
//! - [`functions`]: exponentials, additive functions, `2G`-periodic
//!   functions, exponential polynomials and dense tables.
//! - [`measure`]: finitely supported complex measures, convolution and the
//!   Fourier–Stieltjes transform.
//! - [`families`]: the case-by-case solution constructors and the
//!   even × odd pairing table.
//! - [`solvers`]: complete family enumeration for the cosine- and sine-type
//!   equations, necessity checks, and the classical reductions.
//! - [`verify`]: the independent brute-force residual oracle.
//! - [`rank1`]: rank-1 factorization of the right-hand side.
//! - [`config`]: JSON configuration ingestion and report emission.

pub mod config;
pub mod error;
pub mod families;
pub mod functions;
pub mod group;
pub mod measure;
pub mod rank1;
pub mod solvers;
pub mod verify;

pub use error::{FeqError, Result};
pub use group::{GroupElement, GroupSpec};
pub use measure::Measure;
