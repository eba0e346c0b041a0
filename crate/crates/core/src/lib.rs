//! Constructions and verifiers for regular saturated graphs.
//!
//! A graph `G` is `F`-saturated when it contains no copy of `F` but adding any
//! missing edge creates one. This crate builds the explicit regular families
//! known to be saturated, oversaturated or rrsat witnesses for cliques and a
//! few other patterns, and checks every such claim independently:
//!
//! - [`graph`] and [`io`]: bit-row graphs, degrees, distances, graph6 and edge lists.
//! - [`patterns`]: the forbidden graphs `F` (cliques, 3-sun, `F'_t`, matchings, ...).
//! - [`subgraph`]: clique and non-induced subgraph search, optionally through a pair.
//! - [`checkers`]: free / saturated / oversaturated / rrsat-witness reports.
//! - [`constructions`]: circulants, blow-ups, joins and witness graphs.
//! - [`amalgam`]: oriented 2-factors, the amalgamation `H[s,t,G]` and its iteration plan.
//! - [`polarity`]: `GF(2^p)` arithmetic and the twin-augmented polarity graphs.
//! - [`search`]: exhaustive search over small regular graphs with a JSON-lines store.
//! - [`cli`]: the `regsat` command-line front end.

pub mod amalgam;
pub mod bits;
pub mod checkers;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod io;
pub mod patterns;
pub mod polarity;
pub mod search;
pub mod subgraph;

pub use error::{Error, Result};
pub use graph::{Adjacency, DegreeSummary, Graph, GraphBuilder};
pub use patterns::PatternGraph;
