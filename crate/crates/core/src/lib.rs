//! Exact computation of inversion distances and diameters of graph
//! orientations.
//!
//! Distances reduce to F₂ vector assignments: two orientations are within `t`
//! inversions iff the label marking the edges where they differ admits a map
//! `f: V → F₂^t` with `f(u)·f(v) = π(uv)` on every edge. The crate provides
//!
//! - [`gf2`]: one-word F₂ vectors, rank, and affine solution sets;
//! - [`graph`]: graphs with a canonical edge order, labels and orientations;
//! - [`inversion`]: the inversion operation and a BFS oracle on the inversion graph;
//! - [`assignment`]: the assignment solver, minimum dimensions, diameters and
//!   hard-label search;
//! - [`family`]: leveled k-tree families whose diameter reaches `2k`, and
//!   checks of clique-vector properties on their assignments;
//! - [`reducibility`]: exhaustive verification of reducible configurations for
//!   subcubic graphs;
//! - [`generate`]: seeded random graph corpora.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod assignment;
pub mod family;
pub mod generate;
pub mod gf2;
pub mod graph;
pub mod inversion;
pub mod reducibility;

pub use assignment::{Assignment, MinDim, Solver};
pub use gf2::{Gf2Matrix, Gf2Vector};
pub use graph::{Graph, Label, Orientation};
