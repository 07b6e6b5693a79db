//! Exact topological indices of divisor function graphs.
//!
//! Γ_k is the graph on the divisors of a product of `k` distinct primes,
//! with an edge between two divisors whenever one divides the other. This
//! crate builds Γ_k and general divisor graphs G_D(n), evaluates fourteen
//! distance- and degree-based indices in exact arithmetic, provides the
//! closed forms known for Γ_k, and checks a registry of published values for
//! k = 3, 4, 5 against the definition-level computation.

pub mod claims;
pub mod closed_forms;
pub mod exact;
pub mod export;
pub mod graph;
pub mod indices;
pub mod metric;

pub use claims::{Claim, ClaimReport, ClaimsDocument, Verdict};
pub use exact::{inv_sqrt, sqf_decompose, ArithError, IndexValue, RadicalSum};
pub use graph::{
    build_gamma, build_general, Divisor, DprimeGraph, GeneralDivisorGraph, Graph, GraphError,
    PrimeBasis, SimpleGraph,
};
pub use indices::{GraphDescriptor, IndexContext, IndexId, IndexReport};
pub use metric::{DistanceMatrix, EdgeCloserCounts, MetricError};
