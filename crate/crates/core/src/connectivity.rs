//! (s,t)-vertex connectivity, minimum separators and minimal-separator
//! enumeration.
//!
//! Connectivity is computed as max flow on the vertex-split network:
//! every non-terminal vertex becomes an in/out pair joined by a unit arc,
//! undirected edges become high-capacity arcs, so any min cut consists of
//! split arcs only and reads off directly as a vertex separator. Augmenting
//! paths are shortest-first with neighbors scanned in ascending order, which
//! pins down the certificate deterministically.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::graph::{Graph, Path, Vertex, VertexSet};
use crate::{Error, Result};

/// A minimum separator together with the terminal-side components that
/// witness the separation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatorCertificate {
    pub separator: VertexSet,
    /// Component of `s` in `G - separator`.
    pub side_s: VertexSet,
    /// Component of `t` in `G - separator`.
    pub side_t: VertexSet,
}

impl SeparatorCertificate {
    pub fn k(&self) -> usize {
        self.separator.len()
    }
}

/// Result of minimal-separator enumeration, sorted by (size, lexicographic).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalSeparators {
    pub separators: Vec<VertexSet>,
    /// True when enumeration stopped at the configured limit; the list is
    /// then a prefix of the sorted full family.
    pub truncated: bool,
}

const INF: i64 = i64::MAX / 2;

struct Arc {
    to: usize,
    cap: i64,
    // Reverse arcs carry the negated flow of their partner, so residual
    // capacity is uniformly cap - flow.
    flow: i64,
}

/// Unit-capacity vertex-split flow network. Node `2v` is the in-copy and
/// `2v + 1` the out-copy of vertex `v`; the source is `s`'s out-copy and the
/// sink is `t`'s in-copy. Reverse arcs sit at `index ^ 1`.
struct FlowNet {
    arcs: Vec<Arc>,
    adj: Vec<Vec<usize>>,
    source: usize,
    sink: usize,
}

impl FlowNet {
    fn build(g: &Graph, s: Vertex, t: Vertex) -> FlowNet {
        let mut net = FlowNet {
            arcs: Vec::new(),
            adj: alloc::vec![Vec::new(); 2 * g.n()],
            source: 2 * s + 1,
            sink: 2 * t,
        };
        for v in g.vertices() {
            if v != s && v != t {
                net.add_arc(2 * v, 2 * v + 1, 1);
            }
        }
        for (u, v) in g.edges() {
            // Arcs enter a vertex at its in-copy and leave from its
            // out-copy; s has no in-copy in use and t no out-copy.
            if u != t && v != s {
                net.add_arc(2 * u + 1, 2 * v, INF);
            }
            if v != t && u != s {
                net.add_arc(2 * v + 1, 2 * u, INF);
            }
        }
        net
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: i64) {
        let idx = self.arcs.len();
        self.arcs.push(Arc { to, cap, flow: 0 });
        self.arcs.push(Arc { to: from, cap: 0, flow: 0 });
        self.adj[from].push(idx);
        self.adj[to].push(idx + 1);
    }

    fn residual(&self, idx: usize) -> i64 {
        self.arcs[idx].cap - self.arcs[idx].flow
    }

    /// One shortest augmenting path; returns false when none exists.
    fn augment(&mut self) -> bool {
        let mut pred: Vec<Option<usize>> = alloc::vec![None; self.adj.len()];
        let mut queue = alloc::collections::VecDeque::new();
        queue.push_back(self.source);
        let mut seen = alloc::vec![false; self.adj.len()];
        seen[self.source] = true;
        'bfs: while let Some(node) = queue.pop_front() {
            for &idx in &self.adj[node] {
                let to = self.arcs[idx].to;
                if !seen[to] && self.residual(idx) > 0 {
                    seen[to] = true;
                    pred[to] = Some(idx);
                    if to == self.sink {
                        break 'bfs;
                    }
                    queue.push_back(to);
                }
            }
        }
        if !seen[self.sink] {
            return false;
        }
        let mut node = self.sink;
        while node != self.source {
            let idx = pred[node].unwrap();
            self.arcs[idx].flow += 1;
            self.arcs[idx ^ 1].flow -= 1;
            node = self.arcs[idx ^ 1].to;
        }
        true
    }

    fn max_flow(&mut self) -> usize {
        let mut k = 0;
        while self.augment() {
            k += 1;
        }
        k
    }

    /// Nodes reachable from the source in the residual network.
    fn residual_reachable(&self) -> Vec<bool> {
        let mut seen = alloc::vec![false; self.adj.len()];
        seen[self.source] = true;
        let mut stack = alloc::vec![self.source];
        while let Some(node) = stack.pop() {
            for &idx in &self.adj[node] {
                let to = self.arcs[idx].to;
                if !seen[to] && self.residual(idx) > 0 {
                    seen[to] = true;
                    stack.push(to);
                }
            }
        }
        seen
    }
}

/// (s,t)-vertex connectivity: the maximum number of internally disjoint
/// s-t paths, equivalently the minimum separator size. Zero when the
/// terminals are already disconnected.
pub fn st_vertex_connectivity(g: &Graph) -> Result<usize> {
    let (s, t) = g.require_terminals()?;
    let mut net = FlowNet::build(g, s, t);
    Ok(net.max_flow())
}

/// A minimum (s,t)-separator with its side components, or `None` when the
/// terminals are already disconnected and no separator is needed. The
/// certificate is the source-side min cut, so it is unique given the
/// deterministic augmenting order.
pub fn min_st_separator(g: &Graph) -> Result<Option<SeparatorCertificate>> {
    let (s, t) = g.require_terminals()?;
    let mut net = FlowNet::build(g, s, t);
    let k = net.max_flow();
    if k == 0 {
        return Ok(None);
    }
    let reach = net.residual_reachable();
    let mut separator = VertexSet::new();
    for v in g.vertices() {
        if v != s && v != t && reach[2 * v] && !reach[2 * v + 1] {
            separator.insert(v);
        }
    }
    debug_assert_eq!(separator.len(), k);
    Ok(Some(certificate_for(g, &separator)?))
}

/// Builds the certificate for an arbitrary separator: the set plus the
/// components of `s` and `t` after its removal.
pub fn certificate_for(g: &Graph, separator: &VertexSet) -> Result<SeparatorCertificate> {
    if !is_st_separator(g, separator)? {
        return Err(Error::NotASeparator);
    }
    let (s, t) = g.require_terminals()?;
    Ok(SeparatorCertificate {
        separator: separator.clone(),
        side_s: g.component_of(s, separator),
        side_t: g.component_of(t, separator),
    })
}

/// Whether removing `set` leaves `s` and `t` in different components.
/// The set must avoid the terminals and stay in range.
pub fn is_st_separator(g: &Graph, set: &VertexSet) -> Result<bool> {
    let (s, t) = g.require_terminals()?;
    for &v in set {
        if v >= g.n() {
            return Err(Error::InvalidVertex { vertex: v, n: g.n() });
        }
        if v == s || v == t {
            return Err(Error::TerminalInSet { vertex: v });
        }
    }
    Ok(!g.component_of(s, set).contains(&t))
}

/// Whether `set` is a minimal separator: a separator all of whose members
/// have neighbors in both terminal components. Errors when `set` is not a
/// separator at all.
pub fn is_minimal_st_separator(g: &Graph, set: &VertexSet) -> Result<bool> {
    if !is_st_separator(g, set)? {
        return Err(Error::NotASeparator);
    }
    let (s, t) = g.require_terminals()?;
    let side_s = g.component_of(s, set);
    let side_t = g.component_of(t, set);
    for &v in set {
        let mut in_s = false;
        let mut in_t = false;
        for &w in g.neighbors(v) {
            in_s |= side_s.contains(&w);
            in_t |= side_t.contains(&w);
        }
        if !in_s || !in_t {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The two-step minimalization of a separator `x`: close onto the `s`-side
/// neighborhood, then onto the `t`-side neighborhood of what remains. The
/// result is a minimal separator contained in `x`.
fn minimalize_toward_t(g: &Graph, x: &VertexSet, s: Vertex, t: Vertex) -> VertexSet {
    let side_s = g.component_of(s, x);
    let s1 = g.neighborhood_of_set(&side_s);
    let side_t = g.component_of(t, &s1);
    g.neighborhood_of_set(&side_t)
}

fn minimalize_toward_s(g: &Graph, x: &VertexSet, s: Vertex, t: Vertex) -> VertexSet {
    let side_t = g.component_of(t, x);
    let s1 = g.neighborhood_of_set(&side_t);
    let side_s = g.component_of(s, &s1);
    g.neighborhood_of_set(&side_s)
}

/// Enumerates all minimal (s,t)-separators by close-neighborhood expansion:
/// seed with the minimal separators inside N(s) and N(t), then for each
/// known separator S and member x, re-minimalize (S - x) + N(x) and collect
/// the component neighborhoods that are themselves minimal separators.
/// Output is sorted by (size, lexicographic) and truncated at `limit`.
pub fn enumerate_minimal_st_separators(g: &Graph, limit: usize) -> Result<MinimalSeparators> {
    let (s, t) = g.require_terminals()?;
    if g.component_of(s, &VertexSet::new()).contains(&t) {
        // connected case below
    } else {
        // Already separated: the empty set is the unique minimal separator.
        return Ok(MinimalSeparators {
            separators: alloc::vec![VertexSet::new()],
            truncated: false,
        });
    }

    let mut found: BTreeSet<VertexSet> = BTreeSet::new();
    let mut queue: Vec<VertexSet> = Vec::new();
    let mut truncated = false;

    let push = |cand: VertexSet,
                found: &mut BTreeSet<VertexSet>,
                queue: &mut Vec<VertexSet>| {
        if found.insert(cand.clone()) {
            queue.push(cand);
        }
    };

    for seed_base in [s, t] {
        let nb: VertexSet = g
            .neighbors(seed_base)
            .iter()
            .copied()
            .filter(|&v| v != s && v != t)
            .collect();
        if is_st_separator(g, &nb)? {
            let seed = minimalize_toward_t(g, &nb, s, t);
            push(seed, &mut found, &mut queue);
        }
    }

    while let Some(sep) = queue.pop() {
        if found.len() > limit {
            truncated = true;
            break;
        }
        for &x in sep.iter() {
            let mut expanded: VertexSet = sep.clone();
            expanded.remove(&x);
            for &w in g.neighbors(x) {
                if w != s && w != t {
                    expanded.insert(w);
                }
            }
            if !is_st_separator(g, &expanded)? {
                continue;
            }
            let mut candidates: Vec<VertexSet> = Vec::new();
            candidates.push(minimalize_toward_t(g, &expanded, s, t));
            candidates.push(minimalize_toward_s(g, &expanded, s, t));
            let removed = &expanded;
            let sub = g.remove_set(removed)?;
            for comp in sub.graph.connected_components() {
                let original: VertexSet =
                    comp.iter().map(|&v| sub.to_original[v]).collect();
                candidates.push(g.neighborhood_of_set(&original));
            }
            for cand in candidates {
                if cand.is_empty() || found.contains(&cand) {
                    continue;
                }
                if cand.contains(&s) || cand.contains(&t) {
                    continue;
                }
                if is_st_separator(g, &cand)? && is_minimal_st_separator(g, &cand)? {
                    push(cand, &mut found, &mut queue);
                }
            }
        }
    }

    let mut separators: Vec<VertexSet> = found.into_iter().collect();
    separators.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    if separators.len() > limit {
        separators.truncate(limit);
        truncated = true;
    }
    Ok(MinimalSeparators { separators, truncated })
}

/// A maximum family of internally vertex-disjoint s-t paths, extracted from
/// the max-flow decomposition. Its size equals the connectivity.
pub fn menger_witness(g: &Graph) -> Result<Vec<Path>> {
    let (s, t) = g.require_terminals()?;
    let mut net = FlowNet::build(g, s, t);
    let k = net.max_flow();
    let mut used = alloc::vec![false; net.arcs.len()];
    let mut paths = Vec::with_capacity(k);
    for _ in 0..k {
        let mut vertices = alloc::vec![s];
        let mut node = net.source;
        while node != net.sink {
            let mut advanced = false;
            for &idx in &net.adj[node] {
                if used[idx] || idx % 2 == 1 {
                    continue;
                }
                if net.arcs[idx].flow > 0 {
                    used[idx] = true;
                    node = net.arcs[idx].to;
                    let v = node / 2;
                    if *vertices.last().unwrap() != v {
                        vertices.push(v);
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                return Err(Error::Internal("flow decomposition stalled"));
            }
        }
        paths.push(Path::new(g, vertices)?);
    }
    Ok(paths)
}
