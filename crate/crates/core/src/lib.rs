//! Exact construction and certification of minimum generating sets for
//! modules of generalized splines on edge-labeled graphs.
//!
//! A generalized spline on an edge-labeled graph assigns a polynomial to each
//! vertex so that across every edge the difference of endpoint values lies in
//! the ideal labeling that edge (the GKM condition). This crate builds
//! minimum generating sets for the module of all such splines:
//!
//! * for arbitrary connected graphs with one or two distinct edge-labels,
//! * for cycles whose labels are squares of linear forms in `x`, `y`,
//!
//! and certifies every construction against an independent brute-force
//! linear-algebra oracle. A classical front end computes dimensions of
//! bivariate spline spaces on pinwheel triangulations through their dual
//! cycles.
//!
//! All arithmetic is exact rational; there is no floating point anywhere.

pub mod algebra;
pub mod classical;
pub mod error;
pub mod graph;
pub mod io;
pub mod linsolve;
pub mod mgs_cycle;
pub mod mgs_general;
pub mod oracle;
pub mod spline;

pub use algebra::{parse_poly, FactoredGen, HomDegree, LinForm, Monomial, Poly, Rat};
pub use error::Error;
pub use graph::{CycleGraph, EdgeLabeledGraph, ReductionLog, ReductionStep};
pub use spline::{verify_gkm, GeneratingSet, Spline};
