//! Simplicial complexes of hypergraphs and their collapsibility.
//!
//! The crate has five parts:
//!
//! * [`complex`]: simplicial complexes stored as facet antichains, with
//!   deletion, link, Euler characteristic, and recognizers for boundaries of
//!   simplices and cross-polytopes.
//! * [`hypergraph`]: hypergraphs and the complexes they induce. `Cov(H, p, t)`
//!   collects the subfamilies whose `t`-transversal number is at most `p`;
//!   `Int(H, t)` collects the pairwise `t`-intersecting subfamilies.
//! * [`mes`]: minimal exclusion sequences. An ordering of the maximal faces
//!   turns every face into a short vertex sequence; the largest support over
//!   all faces bounds the collapsibility of the complex from above.
//! * [`collapse`]: elementary `d`-collapses, a greedy collapser, and an exact
//!   backtracking decision procedure with certificates.
//! * [`setpair`]: cross-intersecting set-pair systems, the closed-form bounds
//!   on their length, and an exhaustive search that confirms those bounds on
//!   small ground sets.
//!
//! Everything is deterministic: identical inputs give identical outputs, with
//! no randomness and no dependence on hash iteration order. The intended scale
//! is small instances (complexes up to roughly 2^20 faces, searches on at most
//! 128 vertices); the exact searches degrade gracefully by reporting
//! "undecided" when a node budget runs out.
//!
//! The crate is `no_std` (it needs `alloc` only).

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod collapse;
pub mod complex;
pub mod hypergraph;
pub mod mes;
pub mod setpair;

mod dense;
mod util;

use core::fmt;

pub use complex::{Simplex, SimplicialComplex, Vertex};

/// Errors shared by the whole crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vertex id that the complex does not contain.
    UnknownVertex(Vertex),
    /// The operation is undefined on the void complex.
    VoidComplex,
    /// The given simplex is not a face of the complex.
    FaceNotInComplex,
    /// A facet ordering that does not belong to the complex at hand.
    InvalidOrdering(&'static str),
    /// No t-transversal exists (some edge has fewer than t vertices).
    NoTransversal,
    /// Parameters outside the supported range.
    InvalidParams(&'static str),
    /// The collapse step is not free in the current complex.
    StepNotFree,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnknownVertex(v) => write!(f, "vertex {v} is not in the complex"),
            Error::VoidComplex => write!(f, "operation undefined on the void complex"),
            Error::FaceNotInComplex => write!(f, "simplex is not a face of the complex"),
            Error::InvalidOrdering(why) => write!(f, "invalid facet ordering: {why}"),
            Error::NoTransversal => write!(f, "no t-transversal exists"),
            Error::InvalidParams(why) => write!(f, "invalid parameters: {why}"),
            Error::StepNotFree => write!(f, "collapse step is not free in the current complex"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
