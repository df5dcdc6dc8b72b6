//! Commutation of upper triangular morphisms of the free monoid `{a, b}*`.
//!
//! A morphism `g` is upper triangular when `g(a) = a^s`. [`classifier::classify`]
//! decides `g1 g2 = g2 g1` for such pairs from their shape alone and reports
//! which structural condition is responsible; [`classifier::direct_commute`]
//! answers the same question by composition and serves as its oracle.
//!
//! Module map:
//! - [`words`]: run-length words over `{a, b}`
//! - [`morphisms`]: morphisms, matrices, triangular form, composition
//! - [`omega`]: the infinite word `ω(h)` and its gap sequence
//! - [`numtheory`]: perfect powers and multiplicative dependence
//! - [`classifier`]: case analysis and the composition oracle
//! - [`freeness`]: bounded relation search between two generators
//! - [`sweep`]: exhaustive pairwise comparison over small morphisms
//! - [`cli`]: the `tricomm` command line

pub mod classifier;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod freeness;
pub mod morphisms;
pub mod numtheory;
pub mod omega;
pub mod sweep;
pub mod words;

pub use classifier::{a_conjugates, classify, direct_commute, Case, CommutationReport, Witness};
pub use error::{Error, ParseError, Result};
pub use morphisms::{compose, power, BinaryMorphism, BPart, MorphMatrix, TriangularForm};
pub use numtheory::{mult_dependence, primitive_root, val_and_digit, MultDependence};
pub use words::{Letter, Word};
