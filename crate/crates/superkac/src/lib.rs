//! Exact combinatorics of Kac-Moody superalgebras: Cartan supermatrices and
//! odd reflections, principal roots and Weyl groups, integral root
//! subsystems, weight classification (typical / critical / snowflake /
//! admissible), Kac-Kazhdan linkage, and truncated formal characters over
//! `Z[eps]/(eps^2 - 1)` including character-level Enright transforms.
//!
//! All arithmetic is exact (arbitrary-precision rationals); every bounded
//! computation reports whether it closed or was truncated.
//!
//! Entry points:
//! - [`cartan`]: supermatrix axioms, odd reflections, the base set, and the
//!   FIN/AFF/IND trichotomy.
//! - [`algebra`]: assembled algebra data (principal roots, matrix B, Gram
//!   form, affine structure) plus a zoo of standard examples.
//! - [`roots`]: bounded root generation, reflections, Weyl words and orbits.
//! - [`subsystems`]: integral root subsystems, their bases, friendly words.
//! - [`weights`]: levels, criticality, typicality, snowflake and admissible
//!   weights, Kac-Kazhdan linkage.
//! - [`characters`]: truncated character ring, Weyl denominators, Verma and
//!   snowflake characters, Enright transforms.
//! - [`reproduce`]: the bundled reproduction suite (also exposed by the
//!   `superkac reproduce` subcommand).

pub mod algebra;
pub mod cartan;
pub mod characters;
pub mod error;
pub mod io;
pub mod rat;
pub mod reproduce;
pub mod roots;
pub mod series;
pub mod subsystems;
pub mod weights;

pub use crate::error::{Error, Result};
pub use crate::rat::Rat;
