//! Association schemes and the connectivity of their basis-relation graphs.
//!
//! Exact layers ([`scheme`], [`graph`], [`diagram`], [`connectivity`]) work
//! over integers and bitsets. The floating-point layer ([`spectral`]) only
//! feeds audits with explicit tolerances.

pub mod bitset;
pub mod catalog;
pub mod config;
pub mod connectivity;
pub mod diagram;
pub mod error;
pub mod graph;
pub mod report;
pub mod scheme;
pub mod spectral;
pub mod survey;

pub use bitset::VertexSet;
pub use error::{Error, Hypothesis, Pair, Result};
pub use graph::Graph;
pub use scheme::{relation_graph, symmetrize, validate_scheme, IntersectionTensor, RelationTable, SchemeDescriptor};
