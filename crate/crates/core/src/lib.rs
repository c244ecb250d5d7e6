//! Strong geodetic numbers of graphs: exact search with certificates,
//! closed forms for complete bipartite graphs, bounds, and graph families.

pub mod bipartite;
pub mod bounds;
pub mod edge_list;
pub mod generators;
pub mod geodesics;
pub mod graph;
pub mod solver;
pub mod verify;
pub mod vertex_set;

pub use graph::{DistanceMatrix, Graph, GraphError};
pub use solver::{is_strong_geodetic_set, sg_exact, sg_oracle, SgCertificate, SgResult, SolveError, SolverConfig};
pub use vertex_set::VertexSet;
