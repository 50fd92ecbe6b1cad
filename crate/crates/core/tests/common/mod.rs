//! Exhaustive reference oracles for the integration tests.
//!
//! Everything here is recomputed from first principles on top of the plain
//! graph accessors — own breadth-first searches, own subset sweeps — so a
//! defect in the library's flow network, enumeration, or solvers cannot
//! hide by agreeing with itself.

#![allow(dead_code)] // each test binary uses its own slice of the helpers

use std::collections::{BTreeSet, VecDeque};

use stcvs_core::{Graph, Vertex, VertexSet};

pub fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}

pub fn tg(n: usize, edges: &[(usize, usize)], s: usize, t: usize) -> Graph {
    Graph::new(n, edges).unwrap().with_terminals(s, t).unwrap()
}

/// Vertices reachable from `start` without stepping on `removed`.
pub fn reachable(g: &Graph, start: Vertex, removed: &VertexSet) -> VertexSet {
    let mut seen = VertexSet::new();
    if removed.contains(&start) {
        return seen;
    }
    seen.insert(start);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if !removed.contains(&w) && seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    seen
}

pub fn connected_set(g: &Graph, vs: &VertexSet) -> bool {
    let Some(&start) = vs.iter().next() else {
        return false;
    };
    let complement: VertexSet = g.vertices().filter(|v| !vs.contains(v)).collect();
    reachable(g, start, &complement).len() == vs.len()
}

pub fn separates(g: &Graph, cut: &VertexSet) -> bool {
    let (s, t) = g.terminals().expect("oracle needs terminals");
    !reachable(g, s, cut).contains(&t)
}

/// Definitional connected-separator predicate.
pub fn is_cvs(g: &Graph, cut: &VertexSet) -> bool {
    let (s, t) = g.terminals().expect("oracle needs terminals");
    !cut.is_empty()
        && !cut.contains(&s)
        && !cut.contains(&t)
        && separates(g, cut)
        && connected_set(g, cut)
}

fn nonterminal_candidates(g: &Graph) -> Vec<Vertex> {
    let (s, t) = g.terminals().expect("oracle needs terminals");
    g.vertices().filter(|&v| v != s && v != t).collect()
}

fn pick(candidates: &[Vertex], mask: u32) -> VertexSet {
    candidates
        .iter()
        .enumerate()
        .filter(|&(i, _)| mask >> i & 1 == 1)
        .map(|(_, &v)| v)
        .collect()
}

/// The (size, lexicographic)-least accepted subset. Mask order is not lex
/// order on sets, so equal-size candidates are compared explicitly.
fn sweep_minimum<F: FnMut(&VertexSet) -> bool>(
    candidates: &[Vertex],
    mut accept: F,
) -> Option<VertexSet> {
    assert!(candidates.len() <= 22, "oracle sweep capped at 22 candidates");
    let mut best: Option<VertexSet> = None;
    for mask in 1u32..1 << candidates.len() {
        let size = mask.count_ones() as usize;
        if best.as_ref().is_some_and(|b| size > b.len()) {
            continue;
        }
        let subset = pick(candidates, mask);
        let improves = best
            .as_ref()
            .is_none_or(|b| (subset.len(), &subset) < (b.len(), b));
        if improves && accept(&subset) {
            best = Some(subset);
        }
    }
    best
}

/// Smallest connected separator, or None when no subset qualifies.
pub fn brute_cvs(g: &Graph) -> Option<VertexSet> {
    sweep_minimum(&nonterminal_candidates(g), |subset| is_cvs(g, subset))
}

/// Minimum separator size over all subsets, connected or not; 0 when the
/// terminals are already apart.
pub fn brute_separator_minimum(g: &Graph) -> Option<usize> {
    if separates(g, &VertexSet::new()) {
        return Some(0);
    }
    sweep_minimum(&nonterminal_candidates(g), |subset| separates(g, subset)).map(|s| s.len())
}

/// Every inclusion-minimal separator, straight from the definition.
pub fn brute_minimal_separators(g: &Graph) -> BTreeSet<VertexSet> {
    if separates(g, &VertexSet::new()) {
        return BTreeSet::from([VertexSet::new()]);
    }
    let candidates = nonterminal_candidates(g);
    assert!(candidates.len() <= 18, "minimal-separator sweep capped at 18");
    let mut out = BTreeSet::new();
    for mask in 1u32..1 << candidates.len() {
        let subset = pick(&candidates, mask);
        if !separates(g, &subset) {
            continue;
        }
        let minimal = subset.iter().all(|&v| {
            let mut smaller = subset.clone();
            smaller.remove(&v);
            !separates(g, &smaller)
        });
        if minimal {
            out.insert(subset);
        }
    }
    out
}

/// Minimum number of original-graph vertices W with `gadget ∪ W` inducing a
/// connected subgraph of `reduced` — the independent reference for the
/// group-construction optimum (`OPT = |gadget| + this`).
pub fn brute_connector_minimum(reduced: &Graph, gadget: &VertexSet, original_n: usize) -> usize {
    assert!(original_n <= 22);
    let originals: Vec<Vertex> = (0..original_n).collect();
    // Ascending mask order is not ascending size order, so scan everything.
    let mut best: Option<usize> = None;
    for mask in 0u32..1 << original_n {
        let size = mask.count_ones() as usize;
        if best.is_some_and(|b| size >= b) {
            continue;
        }
        let mut joined = pick(&originals, mask);
        joined.extend(gadget.iter().copied());
        if connected_set(reduced, &joined) {
            best = Some(size);
        }
    }
    best.expect("gadget cannot be connected at all")
}

/// Minimum group Steiner tree cost in edges: smallest connected subset
/// hitting every group, minus one. None when infeasible.
pub fn brute_group_tree_edges(g: &Graph, groups: &[VertexSet]) -> Option<usize> {
    let all: Vec<Vertex> = g.vertices().collect();
    assert!(all.len() <= 22);
    let mut best: Option<usize> = None;
    for mask in 1u32..1 << all.len() {
        let size = mask.count_ones() as usize;
        if best.is_some_and(|b| size > b) {
            continue;
        }
        let subset = pick(&all, mask);
        if groups.iter().all(|grp| grp.iter().any(|v| subset.contains(v)))
            && connected_set(g, &subset)
        {
            best = Some(size - 1);
        }
    }
    best
}

/// Minimum Steiner-vertex count connecting `terminals`, with the matching
/// tree edge count `|R| + p − 1`. None when infeasible.
pub fn brute_steiner(g: &Graph, terminals: &VertexSet) -> Option<(usize, usize)> {
    if connected_set(g, terminals) {
        return Some((0, terminals.len() - 1));
    }
    let candidates: Vec<Vertex> = g.vertices().filter(|v| !terminals.contains(v)).collect();
    assert!(candidates.len() <= 22);
    let mut best: Option<usize> = None;
    for mask in 1u32..1 << candidates.len() {
        let size = mask.count_ones() as usize;
        if best.is_some_and(|b| size >= b) {
            continue;
        }
        let mut joined = pick(&candidates, mask);
        joined.extend(terminals.iter().copied());
        if connected_set(g, &joined) {
            best = Some(size);
        }
    }
    best.map(|p| (p, terminals.len() + p - 1))
}
