//! Minimum connected (s,t)-vertex separators.
//!
//! A connected (s,t)-vertex separator of a graph G with nonadjacent
//! terminals s and t is a vertex set S, disjoint from {s,t}, whose removal
//! leaves s and t in different components and which induces a connected
//! subgraph of G. This crate computes minimum such separators exactly on
//! chordal and chordal bipartite graphs, approximates them on graphs of
//! bounded chordality, solves them exactly by dynamic programming over tree
//! decompositions, and provides the Steiner-tree reductions that explain why
//! the general problem is hard.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the CLI live
//! in the companion `stcvs-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod connectivity;
pub mod generate;
pub mod graph;
pub mod recognizers;
pub mod reductions;
pub mod solvers;
pub mod suite;

pub use graph::{Graph, Vertex, VertexSet};

use alloc::string::String;
use core::fmt;

/// Errors shared across the crate. Every refused precondition names the
/// offending object so callers can report it without re-deriving context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Vertex id outside `0..n`.
    InvalidVertex { vertex: Vertex, n: usize },
    /// Self-loops are rejected everywhere.
    SelfLoop { vertex: Vertex },
    /// Parallel edges are rejected at construction.
    DuplicateEdge { u: Vertex, v: Vertex },
    /// Terminals must be two distinct vertices.
    IdenticalTerminals { vertex: Vertex },
    /// Terminals must be nonadjacent; a separator between adjacent
    /// terminals cannot exist.
    AdjacentTerminals { s: Vertex, t: Vertex },
    /// The operation needs terminals but the graph has none.
    MissingTerminals,
    /// Edge contraction was asked for a non-edge.
    NotAnEdge { u: Vertex, v: Vertex },
    /// Edges incident to a terminal must never be contracted.
    ContractsTerminal { vertex: Vertex },
    /// The operation rejects the empty set.
    EmptySet,
    /// A candidate separator contained a terminal.
    TerminalInSet { vertex: Vertex },
    /// Minimality was asked of a set that is not a separator at all.
    NotASeparator,
    /// No connecting path between two separator vertices avoids the
    /// terminals.
    UnconnectablePair { u: Vertex, v: Vertex },
    /// Instance size exceeds the configured exhaustive-search cap.
    CapExceeded { size: usize, cap: usize },
    /// A solver's class precondition did not verify and `force` was not set.
    ClassMismatch { expected: &'static str },
    /// The recognizer could not verify the class within its cap.
    ClassUnverified { class: &'static str },
    /// A supplied tree decomposition failed validation.
    InvalidDecomposition(String),
    /// The graph is not split (clique + independent set).
    NotSplit,
    /// Group or terminal lists failed validation.
    BadInstance(String),
    /// The instance admits no solution at all (for example, Steiner
    /// terminals spread over several components).
    Infeasible,
    /// A generator exhausted its retry budget without a verified instance.
    GenerationFailed { class: &'static str, attempts: usize },
    /// An internal consistency check failed; indicates a bug, not bad input.
    Internal(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidVertex { vertex, n } => {
                write!(f, "vertex {vertex} out of range (n = {n})")
            }
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::DuplicateEdge { u, v } => write!(f, "duplicate edge {{{u}, {v}}}"),
            Error::IdenticalTerminals { vertex } => {
                write!(f, "terminals coincide at vertex {vertex}")
            }
            Error::AdjacentTerminals { s, t } => {
                write!(f, "terminals {s} and {t} are adjacent")
            }
            Error::MissingTerminals => write!(f, "graph has no terminals set"),
            Error::NotAnEdge { u, v } => write!(f, "{{{u}, {v}}} is not an edge"),
            Error::ContractsTerminal { vertex } => {
                write!(f, "refusing to contract an edge incident to terminal {vertex}")
            }
            Error::EmptySet => write!(f, "empty vertex set"),
            Error::TerminalInSet { vertex } => {
                write!(f, "set contains terminal {vertex}")
            }
            Error::NotASeparator => write!(f, "set is not an (s,t)-separator"),
            Error::UnconnectablePair { u, v } => {
                write!(f, "no terminal-free path connects separator vertices {u} and {v}")
            }
            Error::CapExceeded { size, cap } => {
                write!(f, "size {size} exceeds exhaustive-search cap {cap}")
            }
            Error::ClassMismatch { expected } => {
                write!(f, "graph is not {expected} (pass force to override)")
            }
            Error::ClassUnverified { class } => {
                write!(f, "could not verify membership in class {class} within cap")
            }
            Error::InvalidDecomposition(msg) => write!(f, "invalid tree decomposition: {msg}"),
            Error::NotSplit => write!(f, "graph is not split"),
            Error::BadInstance(msg) => write!(f, "bad instance: {msg}"),
            Error::Infeasible => write!(f, "instance has no feasible solution"),
            Error::GenerationFailed { class, attempts } => {
                write!(f, "failed to generate a {class} instance after {attempts} attempts")
            }
            Error::Internal(msg) => write!(f, "internal invariant violated: {msg}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
