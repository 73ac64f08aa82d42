//! Exact verification toolkit for algebras with a twisting map.
//!
//! The crate works with finite-dimensional algebras over the rationals given
//! by structure constants, together with a linear map `alpha` that twists the
//! defining identities: twisted associativity, twisted Leibniz and Jacobi
//! identities, their signed generalizations over permutation subgroups, and
//! flexibility. Everything is computed in arbitrary-precision rational
//! arithmetic; every check either passes exactly or reports the failing basis
//! tuples with exact residual vectors.
//!
//! The best starting point is the `examples/` directory, one runnable program
//! per capability:
//!
//! * `cargo run --example verify_identities` - the identity checker on a few
//!   concrete algebras
//! * `cargo run --example sl2_twistings` - the space of twisting maps
//!   compatible with the classical three-dimensional simple bracket
//! * `cargo run --example three_dim_catalog` - the catalog of twenty
//!   three-dimensional bracket families and its verification report
//! * `cargo run --example variety_equations` - polynomial systems cutting out
//!   the structure varieties, with exports
//! * `cargo run --example transport_action` - base-change transport and orbit
//!   search
//! * `cargo run --example equivalent_routes` - independent decision procedures
//!   for the same law agreeing defect by defect
//! * `cargo run --example santilli_isotopy` - isotopy word algebras, star
//!   products, and mutation algebras
//! * `cargo run --example algebra_files` - the on-disk algebra format
//!
//! The same functionality is scriptable through the thin `homalg` binary.

#![forbid(unsafe_code)]

pub mod algebra;
pub mod classify3d;
pub mod cli;
pub mod error;
pub mod files;
pub mod identities;
pub mod transport;
pub mod variety;
pub mod linalg;
pub mod rational;
pub mod sample;
pub mod santilli;

pub use algebra::{HomAlgebra, Subgroup};
pub use error::Error;
pub use identities::{check_identity, Defect, IdentityKind, Report};
pub use linalg::{Matrix, Vector};
pub use rational::Rational;
