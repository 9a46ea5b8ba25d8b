//! Distance-balanced and strongly distance-balanced graphs.
//!
//! The crate constructs generalized Petersen graphs `GP(n, k)`,
//! tetracirculants and quadratic-residue Folkman graphs, decides the
//! distance-balance predicates by all-source BFS, and checks closed-form
//! classifications of several `GP` families against that oracle.
//!
//! ```
//! use distbal::{FamilySpec, partition::is_strongly_distance_balanced};
//!
//! let spec: FamilySpec = "gp:10,2".parse().unwrap();
//! let g = spec.build().unwrap();
//! assert!(is_strongly_distance_balanced(&g).unwrap().holds());
//! ```

pub mod arith;
pub mod claims;
pub mod classify;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod partition;
pub mod report;
pub mod symmetry;

pub use error::{Error, Result};
pub use families::{FamilySpec, GpSpec, TetraSpec};
pub use graph::{Distance, DistanceMatrix, Graph, Vertex};
pub use partition::{BalanceTriple, DistancePartition, SdbWitness, Verdict};
pub use symmetry::Permutation;

