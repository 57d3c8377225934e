//! Distance mean-regular graph analysis.
//!
//! A connected graph is distance mean-regular when the averages
//! `p̄_ij^h(u) = (1/|Γ_h(u)|) Σ_{v∈Γ_h(u)} |Γ_i(u) ∩ Γ_j(v)|` do not depend on
//! `u`. This crate decides that property exactly, builds the intersection
//! mean-matrix and related objects, and checks the surrounding identities.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod analysis;
pub mod cli;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod meanpoly;
pub mod partition;
pub mod report;

pub use error::{Error, Result};
