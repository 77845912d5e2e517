//! Exact growth functions and growth series.
//!
//! The crate counts word-metric spheres and balls in Cayley graphs of marked
//! groups, recognizes rational closed forms of the resulting series, counts
//! lattice points in discs and in dilates of lattice polytopes, and computes
//! theta coefficients of integral lattices. Every count is an exact integer;
//! real-valued diagnostics use fixed-point decimals with a stated precision.
//!
//! | module       | what it covers                                              |
//! |--------------|-------------------------------------------------------------|
//! | [`group`]    | group families, elements, generating sets                   |
//! | [`growth`]   | breadth-first sphere/ball enumeration, word length          |
//! | [`series`]   | power series, rational recognition, closed forms, Catalan   |
//! | [`analysis`] | exponential rate, polynomial degree, Dye quantity, verdicts |
//! | [`gauss`]    | lattice points in discs, error bound, exponent fit          |
//! | [`ehrhart`]  | dilates of lattice polytopes, Legendre polynomials          |
//! | [`theta`]    | theta coefficients of integral lattices                     |
//! | [`cli`]      | job configuration and the command-line runner               |
//!
//! Runnable programs for each capability live in the crate's `examples/`
//! directory.

pub mod analysis;
pub mod cli;
pub mod decimal;
pub mod ehrhart;
mod error;
mod serde_dec;
pub mod gauss;
pub mod group;
pub mod growth;
pub mod poly;
pub mod series;
mod simplex;
pub mod theta;
pub mod verify;

pub use error::{Error, Result};
