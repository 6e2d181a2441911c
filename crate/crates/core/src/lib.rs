//! Exact combinatorics and characters of finite-dimensional simple modules of the
//! queer Lie superalgebra q(n).
//!
//! - [`weight`]: integral weights, statistics, atypical roots and frames
//! - [`diagram`]: weight diagrams, distance/length, reduction
//! - [`paths`]: right/left moves and paths, generalized raising operators
//! - [`multiplicity`]: c-relation, `a_λμ`, `b_λμ`, inversion blocks, cones, `b^λ_μ`
//! - [`laurent`]: exact Laurent polynomials over the integers
//! - [`character`]: Schur P-functions, Euler and simple characters, dimensions
//! - [`verify`]: sweep checks shared by the CLI and the test suites

#![no_std]

extern crate alloc;

pub mod character;
pub mod diagram;
pub mod laurent;
pub mod multiplicity;
pub mod paths;
pub mod verify;
pub mod weight;

pub use character::{CharacterCache, Route};
pub use diagram::{reduce, Symbol, WeightDiagram};
pub use laurent::Laurent;
pub use weight::{compare_lex, dominant_weights, Frame, Weight};
