//! Boolean function decomposition and signed interaction graphs of Boolean
//! networks.
//!
//! A rule's dependence on each variable is read off its 2-bit fragments:
//! fix every other variable and compare the outputs at `x_i = 0` and
//! `x_i = 1`. A rising fragment `01` gives a positive arc, a falling one
//! `10` a negative arc. On top of that the crate classifies rules by the
//! arcs they induce, enumerates those classes for small arity, and analyzes
//! feedback loops, signed paths and synchronous dynamics.
//!
//! ```
//! use boolnet_core::{build_graph, parse_network, Sign};
//!
//! let net = parse_network("n=3\nd:168@3\nd:128@3\nd:17@3\n").unwrap();
//! let graph = build_graph(&net);
//! assert!(graph.has_arc(2, 3, Sign::Negative));
//! assert_eq!(graph.arc_count(), 8);
//! ```

pub mod analysis;
pub mod classify;
pub mod decompose;
pub mod dynamics;
pub mod error;
pub mod expr;
pub mod function;
pub mod graph;
pub mod literal;

pub use analysis::{enumerate_cycles, shortest_signed_path, SignedCycle, SignedPath};
pub use classify::{
    classify, enumerate_class, is_nested_canalizing, nested_canalizing_witness,
    ClassificationReport, FunctionClass, NcfWitness, CENSUS_MAX_ARITY,
};
pub use decompose::{decompose, influence, influences, DecompositionTable, Fragment, InfluenceSign};
pub use dynamics::{fixed_points, state_graph, step, NetworkState, StateTransitionSystem};
pub use error::{Error, Result};
pub use function::{BooleanFunction, MAX_ARITY};
pub use graph::{build_graph, BooleanNetwork, Sign, SignedAdjacencyMatrices, SignedArc, SignedDigraph};
pub use literal::{parse_function_literal, parse_network, render_network};
