//! Exact coefficient tower: Gaussian-rational functions in `u = √t` with
//! formal square roots of quantum integers adjoined.

mod base;
mod ext;
mod gauss;
mod poly;

pub use base::{degree_cap, ensure_degree_cap, poincare, quantum_int, set_degree_cap, BaseScalar, RawBase};
pub use ext::{sqrt_bracket, Component, ExtScalar, MAX_ROOT};
pub use gauss::GaussRat;
pub use poly::UPoly;
