//! Solvers for the minimum connected (s,t)-vertex separator problem.
//!
//! A connected (s,t)-vertex separator (CVS) of a graph `G` with nonadjacent
//! terminals `s`, `t` is a set `S ⊆ V(G) \ {s, t}` such that removing `S`
//! leaves `s` and `t` in different components and `G[S]` is connected. The
//! empty set is never a CVS; when `s` and `t` already lie in different
//! components, any single non-terminal vertex is one.
//!
//! Four solving strategies live here:
//!
//! * [`cvs_oracle`] — exhaustive search, exact on small graphs;
//! * [`cvs_chordal`] — exact on chordal graphs via minimum-separator duality;
//! * [`cvs_chordal_bipartite`] — exact on chordal bipartite graphs, where the
//!   optimum is pinned to the (s,t)-connectivity `k` or `k + 1`;
//! * [`cvs_approx_chordality`] — an upper-bound heuristic on graphs of
//!   bounded chordality, stitching a minimum separator together with short
//!   connecting paths;
//! * [`cvs_treewidth_dp`] — exact on any graph given a tree decomposition,
//!   with running time exponential only in the decomposition width.

mod approx;
mod chordal;
mod chordal_bipartite;
mod oracle;
mod treewidth;

pub use approx::{connecting_path_for_pair, cvs_approx_chordality, PairPath};
pub use chordal::cvs_chordal;
pub use chordal_bipartite::{cvs_chordal_bipartite, find_dominator_vertex};
pub use oracle::{cvs_oracle, cvs_oracle_with_cap, DEFAULT_ORACLE_CAP};
pub use treewidth::{compute_tree_decomposition, cvs_treewidth_dp, TreeDecomposition};

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::graph::{Graph, Vertex, VertexSet};
use crate::Result;

/// Which algorithm produced a [`SeparatorResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Oracle,
    Chordal,
    ChordalBipartite,
    Approx,
    TreewidthDp,
}

/// What a solver claims about its answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Optimality {
    /// The returned separator has minimum size among all connected
    /// (s,t)-vertex separators.
    Exact,
    /// The returned separator is valid but possibly larger than optimal.
    UpperBound,
    /// No connected (s,t)-vertex separator exists in this graph.
    NoneExists,
    /// The method could not produce a separator, but one may still exist.
    NoneFound,
    /// The method declined to answer (for example, an exhaustive fallback
    /// was out of reach); existence is left open.
    Unresolved,
}

/// Side information accumulated while solving, for reporting and tests.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Diagnostics {
    /// Vertex connectivity between the terminals (minimum plain separator).
    pub connectivity: Option<usize>,
    /// Chordality bound the approximation ran with.
    pub chordality: Option<usize>,
    /// A-priori size bound `k + (k-1)(⌈c/2⌉ - 1)` for the approximation.
    pub ratio_bound: Option<usize>,
    /// Whether every connecting path stayed within `⌈c/2⌉` edges.
    pub paths_within_bound: Option<bool>,
    /// Dominating vertex adjoined to an independent minimum separator.
    pub dominator: Option<Vertex>,
    /// Method an inconclusive solver handed the instance to.
    pub fallback: Option<Method>,
    /// Width of the tree decomposition the dynamic program ran on.
    pub width: Option<usize>,
}

/// Outcome of a solve: the separator (if any), the claim made about it, and
/// diagnostics describing how the solver got there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatorResult {
    pub method: Method,
    pub separator: Option<VertexSet>,
    pub optimality: Optimality,
    pub diagnostics: Diagnostics,
}

impl SeparatorResult {
    /// Size of the returned separator, if one was returned.
    pub fn size(&self) -> Option<usize> {
        self.separator.as_ref().map(|s| s.len())
    }

    pub(crate) fn found(
        method: Method,
        separator: VertexSet,
        optimality: Optimality,
        diagnostics: Diagnostics,
    ) -> Self {
        SeparatorResult {
            method,
            separator: Some(separator),
            optimality,
            diagnostics,
        }
    }

    pub(crate) fn empty(method: Method, optimality: Optimality, diagnostics: Diagnostics) -> Self {
        SeparatorResult {
            method,
            separator: None,
            optimality,
            diagnostics,
        }
    }
}

/// Checks whether `set` is a connected (s,t)-vertex separator: it must be a
/// nonempty set of non-terminal vertices whose removal disconnects `s` from
/// `t`, and it must induce a connected subgraph.
///
/// Membership of a terminal or failure of any property yields `Ok(false)`;
/// only malformed input (missing terminals, out-of-range vertices) errors.
pub fn verify_cvs(g: &Graph, set: &VertexSet) -> Result<bool> {
    let (s, t) = g.require_terminals()?;
    for &v in set {
        if v >= g.n() {
            return Err(crate::Error::InvalidVertex { vertex: v, n: g.n() });
        }
        if v == s || v == t {
            return Ok(false);
        }
    }
    if set.is_empty() {
        return Ok(false);
    }
    if g.component_of(s, set).contains(&t) {
        return Ok(false);
    }
    g.is_connected_subset(set)
}

/// Degenerate instances where the terminals are already in different
/// components: every singleton over a non-terminal vertex is a CVS, so the
/// optimum is 1 whenever such a vertex exists.
pub(crate) fn solve_disconnected_terminals(
    g: &Graph,
    method: Method,
    mut diagnostics: Diagnostics,
) -> SeparatorResult {
    diagnostics.connectivity = Some(0);
    let (s, t) = g.terminals().expect("terminals checked by caller");
    match g.vertices().find(|&v| v != s && v != t) {
        Some(v) => {
            let mut set = VertexSet::new();
            set.insert(v);
            SeparatorResult::found(method, set, Optimality::Exact, diagnostics)
        }
        None => SeparatorResult::empty(method, Optimality::NoneExists, diagnostics),
    }
}

/// Visits the `k`-subsets of `items` in lexicographic order of index vector
/// and returns the first one accepted by `test`.
pub(crate) fn first_accepted_subset<F>(items: &[Vertex], k: usize, mut test: F) -> Option<VertexSet>
where
    F: FnMut(&VertexSet) -> bool,
{
    let n = items.len();
    if k == 0 || k > n {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let set: BTreeSet<Vertex> = idx.iter().map(|&i| items[i]).collect();
        if test(&set) {
            return Some(set);
        }
        // Advance to the next index combination, rightmost position first.
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] != i + n - k {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}
