//! Friends-and-strangers graphs `FS(X, Y)` against complete multipartite
//! targets: exhaustive component analysis of the bijection space,
//! structural classification of `X`, and closed-form connectivity
//! predictions to check against the brute force.
//!
//! Vertex ids are 0-based everywhere.

pub mod canon;
pub mod explorer;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod oracle;
pub mod partition;
pub mod perm;
pub mod special;
pub mod structure;

pub use explorer::{
    Bijection, ComponentMap, ComponentSummary, ExchangeVerdict, FsError, FsGraph, SwapSequence,
};
pub use graph::{Graph, GraphError};
pub use graph6::{encode_graph6, parse_graph6, Graph6Error};
pub use oracle::{
    kappa, parity_class, predict, predict_two_components, CaseTag, Kappa, Prediction, Verdict,
};
pub use partition::Partition;
pub use special::{ExceptionSpider, SpecialGraph};
pub use structure::{classify, max_bridge_length, vertex_connectivity, StructuralProfile};
