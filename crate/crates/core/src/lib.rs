//! Structural checks for perfect divisibility of fork-free graphs.
//!
//! A *perfect division* of `G` splits `V(G)` into `A` and `B` with `G[A]`
//! perfect and `ω(G[B]) < ω(G)`; `G` is *perfectly divisible* when every
//! induced subgraph has one. This crate provides, for graphs of desk-scale
//! size:
//!
//! - [`graph`]: bitset graphs, graph6 and edge-list I/O, exact `ω` and `χ`,
//!   canonical forms;
//! - [`patterns`]: the named forbidden configurations, induced-subgraph
//!   detection, odd hole and antihole search, two perfection tests;
//! - [`decomp`]: the sets `M(C)`, `U`, `U'`, `U_i`, `Y`, `Y'`, `Z`, `Z'`
//!   around an odd hole, homogeneous sets, and a ledger of gated structural
//!   checks;
//! - [`divisibility`]: perfect-division search, hereditary certification,
//!   minimal counterexample detection and the `C(ω+1, 2)` colouring;
//! - [`harness`]: corpus scans, the persistent status cache and reports
//!   behind the `forkdiv` binary.

#![forbid(unsafe_code)]

pub mod decomp;
pub mod divisibility;
mod error;
pub mod graph;
pub mod harness;
pub mod patterns;

pub use error::{Error, Result};
pub use graph::{CanonicalForm, Graph, VertexSet};
