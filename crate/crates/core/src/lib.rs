//! Ampleness of the normal bundle of the base cycle in a flag domain.
//!
//! A flag domain is picked by a simple Lie algebra type, a marking of
//! noncompact simple roots (an inner real form) and a set of Levi nodes (the
//! parabolic). The crate computes the neutral fiber of the normal bundle of
//! the base cycle, its ampleness `a(E)` as a maximal Weyl group length, and
//! decides whether the domain is a product over a Hermitian symmetric space
//! or pseudoconcave of degree `dim C − a(E)`.
//!
//! All arithmetic is exact over the integers.

pub mod classify;
pub mod cycle;
pub mod error;
mod linalg;
pub mod par;
pub mod pipeline;
pub mod realform;
pub mod rootsys;
pub mod snow;

pub use error::{Error, Result};
pub use par::Parallelism;
pub use pipeline::{run_compute, run_table, CaseSpec, Report};
