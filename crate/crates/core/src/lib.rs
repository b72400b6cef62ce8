//! Signed graphs and their Mycielskians.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`]: the canonical [`SignedGraph`] model, switching, degrees,
//!   instance generators and the text edge-list format.
//! - [`balance`]: balance/antibalance certificates (Harary bipartitions,
//!   switching functions, negative-cycle witnesses).
//! - [`mycielskian`]: `M(Σ)`, root re-signing, the balanced Mycielskian
//!   `M_B(Σ)` and iterated towers.
//! - [`coloring`]: proper colorings over the `M_n` color sets and an exact
//!   chromatic-number solver.
//! - [`exactla`]: exact rational matrices, rank, determinant and inertia.
//! - [`matrices`]: adjacency, incidence, degree and Laplacian matrices of a
//!   signed graph and of its Mycielskian in block layout.

pub mod balance;
pub mod coloring;
mod error;
pub mod exactla;
pub mod graph;
pub mod matrices;
pub mod mycielskian;

pub use balance::{BalanceCertificate, Bipartition};
pub use coloring::{ColorSet, SignedColoring};
pub use error::{Error, Result};
pub use exactla::{Inertia, RationalMatrix};
pub use graph::{DegreeReport, Edge, Sign, SignedGraph, SwitchingFunction};
pub use mycielskian::{MycielskianLabeling, RootSignature};
