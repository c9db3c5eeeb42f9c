//! Irregular and modular irregular edge labelings of simple graphs.
//!
//! The crate is organised around a small pipeline:
//!
//! * [`graph`] builds canonical simple graphs (triangular books, paths, cycles,
//!   stars) and reads/writes the plain edge-list format.
//! * [`labeling`] computes vertex weights and checks the two labeling
//!   properties, and carries the JSON [`Certificate`] format.
//! * [`bounds`] gives the degree-count lower bound and the order criterion
//!   that rules out modular labelings.
//! * [`book`] holds the closed-form labelings of triangular book graphs.
//! * [`solver`] is an exhaustive branch-and-bound search that computes both
//!   strengths exactly on small graphs, independent of the closed forms.
//! * [`dot`] renders a certificate as Graphviz DOT.

pub mod book;
pub mod bounds;
pub mod dot;
pub mod error;
pub mod graph;
pub mod labeling;
pub mod solver;

pub use book::{BookCase, CaseTag, Theorem};
pub use bounds::{BoundReport, Strength};
pub use error::{Error, Result};
pub use graph::{BookParams, DegreeHistogram, Family, Graph, MAX_ORDER};
pub use labeling::{Certificate, EdgeLabeling, Mode, Verdict, WeightProfile, MAX_LABEL};
pub use solver::{InfiniteReason, LabelingCount, Outcome, SearchStats, SolverConfig, StrengthResult};
