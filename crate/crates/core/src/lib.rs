//! Construction and fault-tolerance analysis of (n,k)-star interconnection
//! graphs.
//!
//! The crate builds `S(n,k)` on the set of k-permutations of `1..=n`, splits
//! it into copies of `S(n-1,k-1)`, constructs explicit h-super edge-cuts,
//! evaluates the closed-form value of the h-super edge-connectivity and
//! checks that value against an exact search.
//!
//! ```
//! use nkstar::{formula, GraphSpec, StarGraph};
//!
//! let g = StarGraph::build(GraphSpec::new(4, 2).unwrap()).unwrap();
//! assert_eq!(g.vertex_count(), 12);
//! assert_eq!(formula::evaluate(4, 2, 1).unwrap().theorem_value, 3);
//! ```

pub mod cut;
pub mod decomposition;
pub mod error;
pub mod formula;
pub mod graph;
pub mod harness;
pub mod io;
pub mod perm;
pub mod solver;

pub use cut::{CutReport, CutWitness, CliqueCutMode};
pub use decomposition::{CliqueHandle, DecompositionView};
pub use error::{Error, Result};
pub use formula::{Branch, FormulaResult};
pub use graph::{EdgeTag, GraphSpec, SimpleGraph, StarGraph};
pub use perm::PermLabel;
pub use solver::{SearchBudget, SolverResult};
