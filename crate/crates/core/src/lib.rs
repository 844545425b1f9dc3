//! Tumbling-block graphs and exact domination-type parameters.
//!
//! The crate builds finite members of the tumbling-block families and
//! toroidal quotients of the infinite graph, solves seven domination-type
//! parameters exactly, computes shares in exact rational arithmetic, and
//! searches periodic patterns for extremal densities.

pub mod addr;
pub mod density;
pub mod family;
pub mod graph;
pub mod hamilton;
pub mod quotient;
pub mod share;
pub mod solve;

mod bits;

pub use addr::{tb_neighbors, Class, VertexAddr};
pub use bits::MAX_SEARCH_VERTICES;
pub use density::{DensityError, DensityRecord};
pub use family::{block_graph, build_family, closed_form_counts, FamilyKind, FamilySpec};
pub use graph::{FiniteGraph, GraphError};
pub use hamilton::{CutCertificate, HamiltonError};
pub use quotient::{build_quotient, validate_quotient, LatticeQuotient, QuotientError};
pub use share::{format_ratio, Rational};
pub use solve::{solve, ParamKind, SolveError, SolveOptions, SolveResult};
