//! Exact seminormal models of Iwahori–Hecke algebras of symmetric groups,
//! deformed KLR generators, alternating subalgebras and their graded bases.

pub mod combinat;
pub mod error;
pub mod exactfield;
pub mod gradedbasis;
pub mod klrgen;
pub mod linalg;
pub mod registry;
pub mod seminormal;
pub mod specialize;

pub use error::{Error, Result};
