//! Exact counting of successive vertex orderings of fully regular graphs.
//!
//! A vertex ordering of a graph is *successive* when every prefix induces a
//! connected subgraph. For a *fully regular* graph (the number of vertices
//! outside an independent set `I` and not adjacent to it depends only on
//! `|I|`) that count is a short alternating sum over the parameter sequence
//! `a_0 > a_1 > ... > a_alpha = 0`.
//!
//! The crate is organised as:
//!
//! * [`numerics`]: big integers, rationals, factorials and binomials.
//! * [`families`]: complete multipartite uniform hypergraph families, their
//!   parameter sequences, explicit hypergraphs and line graphs.
//! * [`formulas`]: every closed form (the summation formula, the shelling
//!   product formulas, the tripartite product and the two conjectured
//!   products) together with the two supporting identities.
//! * [`oracle`]: brute-force ground truth by subset dynamic programming.
//! * [`evaluate`]: dispatches a family to whichever methods apply to it.
//!
//! Everything here is `no_std` + `alloc`; IO, sweeps and the CLI live in the
//! `svo` crate.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
pub mod evaluate;
pub mod families;
pub mod formulas;
pub mod numerics;
pub mod oracle;

pub use error::{Error, Result};
pub use evaluate::{evaluate, FormulaResult, Method};
pub use families::{
    b_sequence, build_hypergraph, derive_params, line_graph, FamilySpec, FullyRegularParams,
    Hypergraph, Part, SimpleGraph,
};
pub use numerics::{ExactInteger, ExactRational};

/// Default bound on the number of line-graph vertices handed to the
/// subset-DP oracles (2^20 table entries).
pub const DEFAULT_ORACLE_CAP: usize = 20;
