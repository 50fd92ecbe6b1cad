//! Immutable simple graphs with optional (s,t) terminals.
//!
//! Vertices are dense ids `0..n`. Adjacency lists are kept sorted so every
//! traversal visits neighbors in ascending order; all algorithms in this
//! crate inherit their determinism from that ordering.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::{Error, Result};

pub type Vertex = usize;
pub type VertexSet = BTreeSet<Vertex>;

/// Simple undirected graph. No self-loops, no parallel edges. Terminals,
/// when present, are distinct and nonadjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    terminals: Option<(Vertex, Vertex)>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Rejects out-of-range
    /// endpoints, self-loops and duplicate edges.
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut adj: Vec<Vec<Vertex>> = alloc::vec![Vec::new(); n];
        let mut seen: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::InvalidVertex { vertex: u, n });
            }
            if v >= n {
                return Err(Error::InvalidVertex { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge { u: key.0, v: key.1 });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, terminals: None })
    }

    /// Attaches terminals `s` and `t`. They must be distinct, in range and
    /// nonadjacent.
    pub fn with_terminals(mut self, s: Vertex, t: Vertex) -> Result<Graph> {
        let n = self.n();
        if s >= n {
            return Err(Error::InvalidVertex { vertex: s, n });
        }
        if t >= n {
            return Err(Error::InvalidVertex { vertex: t, n });
        }
        if s == t {
            return Err(Error::IdenticalTerminals { vertex: s });
        }
        if self.has_edge(s, t) {
            return Err(Error::AdjacentTerminals { s, t });
        }
        self.terminals = Some((s, t));
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn terminals(&self) -> Option<(Vertex, Vertex)> {
        self.terminals
    }

    /// Terminals or an error; for operations that require them.
    pub fn require_terminals(&self) -> Result<(Vertex, Vertex)> {
        self.terminals.ok_or(Error::MissingTerminals)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        0..self.n()
    }

    pub fn is_terminal(&self, v: Vertex) -> bool {
        matches!(self.terminals, Some((s, t)) if s == v || t == v)
    }

    /// Neighborhood of a set: all vertices outside `x` adjacent to it.
    pub fn neighborhood_of_set(&self, x: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for &v in x {
            for &w in &self.adj[v] {
                if !x.contains(&w) {
                    out.insert(w);
                }
            }
        }
        out
    }

    /// Induced subgraph on `x` with ids remapped to `0..x.len()` in ascending
    /// order of the original ids. The mapping is recorded; terminals survive
    /// only if both lie in `x`.
    pub fn induced_subgraph(&self, x: &VertexSet) -> Result<InducedSubgraph> {
        let n = self.n();
        for &v in x {
            if v >= n {
                return Err(Error::InvalidVertex { vertex: v, n });
            }
        }
        let to_original: Vec<Vertex> = x.iter().copied().collect();
        let mut adj: Vec<Vec<Vertex>> = alloc::vec![Vec::new(); to_original.len()];
        for (new_u, &old_u) in to_original.iter().enumerate() {
            for &old_v in &self.adj[old_u] {
                if let Ok(new_v) = to_original.binary_search(&old_v) {
                    adj[new_u].push(new_v);
                }
            }
        }
        let terminals = match self.terminals {
            Some((s, t)) => {
                let ns = to_original.binary_search(&s).ok();
                let nt = to_original.binary_search(&t).ok();
                match (ns, nt) {
                    (Some(a), Some(b)) => Some((a, b)),
                    _ => None,
                }
            }
            None => None,
        };
        Ok(InducedSubgraph {
            graph: Graph { adj, terminals },
            to_original,
        })
    }

    /// Graph with the vertices of `x` removed; shorthand for the induced
    /// subgraph on the complement of `x`.
    pub fn remove_set(&self, x: &VertexSet) -> Result<InducedSubgraph> {
        let keep: VertexSet = self.vertices().filter(|v| !x.contains(v)).collect();
        for &v in x {
            if v >= self.n() {
                return Err(Error::InvalidVertex { vertex: v, n: self.n() });
            }
        }
        self.induced_subgraph(&keep)
    }

    /// Contracts the edge `{u, v}` into a fresh vertex. Remaining vertices
    /// keep their relative order in `0..n-2`; the merged vertex gets the
    /// last id `n-2`. Parallel edges collapse. Contracting an edge incident
    /// to a terminal is refused.
    pub fn contract_edge(&self, u: Vertex, v: Vertex) -> Result<Contraction> {
        let n = self.n();
        if u >= n {
            return Err(Error::InvalidVertex { vertex: u, n });
        }
        if v >= n {
            return Err(Error::InvalidVertex { vertex: v, n });
        }
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge { u, v });
        }
        if self.is_terminal(u) {
            return Err(Error::ContractsTerminal { vertex: u });
        }
        if self.is_terminal(v) {
            return Err(Error::ContractsTerminal { vertex: v });
        }
        let merged = n - 2;
        let mut to_new: Vec<Option<Vertex>> = alloc::vec![None; n];
        let mut next = 0;
        for (w, slot) in to_new.iter_mut().enumerate() {
            if w != u && w != v {
                *slot = Some(next);
                next += 1;
            }
        }
        to_new[u] = Some(merged);
        to_new[v] = Some(merged);

        let mut edge_set: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
        for (a, b) in self.edges() {
            let (na, nb) = (to_new[a].unwrap(), to_new[b].unwrap());
            if na != nb {
                edge_set.insert((na.min(nb), na.max(nb)));
            }
        }
        let mut adj: Vec<Vec<Vertex>> = alloc::vec![Vec::new(); n - 1];
        for &(a, b) in &edge_set {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let terminals = self
            .terminals
            .map(|(s, t)| (to_new[s].unwrap(), to_new[t].unwrap()));
        Ok(Contraction {
            graph: Graph { adj, terminals },
            merged,
            to_new,
        })
    }

    /// Connected components, each a sorted set, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = alloc::vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut comp = VertexSet::new();
            let mut stack = alloc::vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.connected_components().len() == 1
    }

    /// Whether the nonempty set `s` induces a connected subgraph.
    pub fn is_connected_subset(&self, s: &VertexSet) -> Result<bool> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        for &v in s {
            if v >= self.n() {
                return Err(Error::InvalidVertex { vertex: v, n: self.n() });
            }
        }
        let start = *s.iter().next().unwrap();
        let mut seen: VertexSet = VertexSet::new();
        let mut stack = alloc::vec![start];
        seen.insert(start);
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if s.contains(&w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        Ok(seen.len() == s.len())
    }

    /// Component of `start` in the graph with `removed` deleted. Empty if
    /// `start` itself is removed.
    pub fn component_of(&self, start: Vertex, removed: &VertexSet) -> VertexSet {
        let mut comp = VertexSet::new();
        if removed.contains(&start) || start >= self.n() {
            return comp;
        }
        let mut stack = alloc::vec![start];
        comp.insert(start);
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !removed.contains(&w) && comp.insert(w) {
                    stack.push(w);
                }
            }
        }
        comp
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let members: Vec<Vertex> = s.iter().copied().collect();
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                if !self.has_edge(members[i], members[j]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_independent_set(&self, s: &VertexSet) -> bool {
        let members: Vec<Vertex> = s.iter().copied().collect();
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                if self.has_edge(members[i], members[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Result of taking an induced subgraph: the graph plus the id mapping.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `to_original[new] = old`, ascending in the original ids.
    pub to_original: Vec<Vertex>,
}

impl InducedSubgraph {
    /// Maps an original vertex id into the subgraph, if it survived.
    pub fn map_to_sub(&self, original: Vertex) -> Option<Vertex> {
        self.to_original.binary_search(&original).ok()
    }
}

/// Result of contracting an edge.
#[derive(Debug, Clone)]
pub struct Contraction {
    pub graph: Graph,
    /// Id of the merged vertex in the new graph (always `n - 2`).
    pub merged: Vertex,
    /// `to_new[old] = new`; both contracted endpoints map to `merged`.
    pub to_new: Vec<Option<Vertex>>,
}

/// A walk with distinct vertices and consecutive adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    vertices: Vec<Vertex>,
}

impl Path {
    /// Validates distinctness and consecutive adjacency in `g`.
    pub fn new(g: &Graph, vertices: Vec<Vertex>) -> Result<Path> {
        if vertices.is_empty() {
            return Err(Error::EmptySet);
        }
        let distinct: VertexSet = vertices.iter().copied().collect();
        if distinct.len() != vertices.len() {
            return Err(Error::BadInstance(alloc::string::String::from(
                "path repeats a vertex",
            )));
        }
        for w in vertices.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(Error::NotAnEdge { u: w[0], v: w[1] });
            }
        }
        Ok(Path { vertices })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Vertices strictly between the endpoints.
    pub fn interior(&self) -> &[Vertex] {
        &self.vertices[1..self.vertices.len() - 1]
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }
}

#[cfg(test)]
pub(crate) fn set_of(items: &[Vertex]) -> VertexSet {
    items.iter().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn c4() -> Graph {
        // s = 0, a = 1, t = 2, b = 3 around the cycle
        Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)])
            .unwrap()
            .with_terminals(0, 2)
            .unwrap()
    }

    #[test]
    fn rejects_self_loops_and_duplicates() {
        assert!(matches!(
            Graph::new(2, &[(0, 0)]),
            Err(Error::SelfLoop { vertex: 0 })
        ));
        assert!(matches!(
            Graph::new(2, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge { u: 0, v: 1 })
        ));
        assert!(matches!(
            Graph::new(2, &[(0, 5)]),
            Err(Error::InvalidVertex { vertex: 5, n: 2 })
        ));
    }

    #[test]
    fn rejects_bad_terminals() {
        let g = triangle();
        assert!(matches!(
            g.clone().with_terminals(0, 0),
            Err(Error::IdenticalTerminals { vertex: 0 })
        ));
        assert!(matches!(
            g.with_terminals(0, 1),
            Err(Error::AdjacentTerminals { s: 0, t: 1 })
        ));
    }

    #[test]
    fn induced_on_triangle_edge() {
        let g = triangle();
        let sub = g.induced_subgraph(&set_of(&[0, 1])).unwrap();
        assert_eq!(sub.graph.n(), 2);
        assert_eq!(sub.graph.edges(), alloc::vec![(0, 1)]);
        assert_eq!(sub.to_original, alloc::vec![0, 1]);
    }

    #[test]
    fn induced_on_all_vertices_is_identity() {
        let g = c4();
        let all: VertexSet = g.vertices().collect();
        let sub = g.induced_subgraph(&all).unwrap();
        assert_eq!(sub.graph, g);
        assert_eq!(sub.map_to_sub(3), Some(3));
    }

    #[test]
    fn induced_on_nonadjacent_pair_is_edgeless() {
        let g = c4();
        let sub = g.induced_subgraph(&set_of(&[1, 3])).unwrap();
        assert_eq!(sub.graph.n(), 2);
        assert_eq!(sub.graph.edge_count(), 0);
    }

    #[test]
    fn remove_middle_of_path() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let sub = g.remove_set(&set_of(&[1])).unwrap();
        assert_eq!(sub.graph.n(), 2);
        assert_eq!(sub.graph.edge_count(), 0);
        assert_eq!(sub.graph.connected_components().len(), 2);
    }

    #[test]
    fn remove_empty_set_is_identity() {
        let g = c4();
        let sub = g.remove_set(&VertexSet::new()).unwrap();
        assert_eq!(sub.graph, g);
    }

    #[test]
    fn remove_separator_from_c4_disconnects_terminals() {
        let g = c4();
        let sub = g.remove_set(&set_of(&[1, 3])).unwrap();
        assert_eq!(sub.graph.n(), 2);
        assert_eq!(sub.graph.connected_components().len(), 2);
        // terminals survived the removal and are still tracked
        assert_eq!(sub.graph.terminals(), Some((0, 1)));
    }

    #[test]
    fn contract_middle_edge_of_p4() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let c = g.contract_edge(1, 2).unwrap();
        assert_eq!(c.graph.n(), 3);
        assert_eq!(c.merged, 2);
        // old 0 -> 0, old 3 -> 1, merged vertex adjacent to both
        assert_eq!(c.graph.edges(), alloc::vec![(0, 2), (1, 2)]);
        assert_eq!(c.to_new[1], Some(2));
        assert_eq!(c.to_new[2], Some(2));
    }

    #[test]
    fn contract_triangle_edge_collapses_parallels() {
        let g = triangle();
        let c = g.contract_edge(0, 1).unwrap();
        assert_eq!(c.graph.n(), 2);
        assert_eq!(c.graph.edges(), alloc::vec![(0, 1)]);
    }

    #[test]
    fn contract_terminal_edge_refused() {
        let g = c4();
        assert!(matches!(
            g.contract_edge(0, 1),
            Err(Error::ContractsTerminal { vertex: 0 })
        ));
        assert!(matches!(
            g.contract_edge(5, 1),
            Err(Error::InvalidVertex { vertex: 5, n: 4 })
        ));
        let h = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(h.contract_edge(0, 2), Err(Error::NotAnEdge { u: 0, v: 2 })));
    }

    #[test]
    fn components_of_two_triangles() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let comps = g.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0], set_of(&[0, 1, 2]));
        assert_eq!(comps[1], set_of(&[3, 4, 5]));
    }

    #[test]
    fn single_vertex_is_one_component() {
        let g = Graph::new(1, &[]).unwrap();
        assert_eq!(g.connected_components().len(), 1);
        assert!(g.is_connected());
    }

    #[test]
    fn connected_subset_checks() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(g.is_connected_subset(&set_of(&[0, 1, 2])).unwrap());
        assert!(!g.is_connected_subset(&set_of(&[0, 2])).unwrap());
        assert!(g.is_connected_subset(&set_of(&[3])).unwrap());
        assert!(matches!(
            g.is_connected_subset(&VertexSet::new()),
            Err(Error::EmptySet)
        ));
    }

    #[test]
    fn path_validation() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let p = Path::new(&g, alloc::vec![0, 1, 2]).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.interior(), &[1]);
        assert_eq!(p.endpoints(), (0, 2));
        assert!(Path::new(&g, alloc::vec![0, 2]).is_err());
        assert!(Path::new(&g, alloc::vec![0, 1, 0]).is_err());
    }
}
