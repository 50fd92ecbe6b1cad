//! Gadget constructions tying Steiner-type problems to connected
//! (s,t)-vertex separators, plus exhaustive Steiner oracles used to
//! cross-check them.
//!
//! Three constructions are provided:
//!
//! * [`reduce_group_steiner`] — a group Steiner instance becomes a CVS
//!   instance whose (s,t)-connectivity equals the number of groups;
//! * [`reduce_split_steiner`] — a Steiner tree instance on a split graph
//!   becomes a CVS instance with no induced cycle of length six or more;
//! * [`reduce_steiner_above_guarantee`] — the same terminal gadget on an
//!   arbitrary connected graph, with (s,t)-connectivity pinned to `|R|`.
//!
//! Each output records where the fresh vertices landed and which optimum
//! shift the construction predicts, so tests can validate the arithmetic
//! instead of trusting it.

use alloc::vec::Vec;

use crate::graph::{Graph, Vertex, VertexSet};
use crate::solvers::{first_accepted_subset, DEFAULT_ORACLE_CAP};
use crate::{Error, Result};

/// A group Steiner problem: find a minimum-edge subtree touching at least
/// one vertex of every group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSteinerInstance {
    pub graph: Graph,
    pub groups: Vec<VertexSet>,
    /// Edge budget of the decision form.
    pub budget_edges: usize,
}

impl GroupSteinerInstance {
    pub fn new(graph: Graph, groups: Vec<VertexSet>, budget_edges: usize) -> Result<Self> {
        if graph.terminals().is_some() {
            return Err(Error::BadInstance(
                "group Steiner graphs carry no (s,t) terminals".into(),
            ));
        }
        if groups.is_empty() {
            return Err(Error::BadInstance("no groups given".into()));
        }
        for group in &groups {
            if group.is_empty() {
                return Err(Error::BadInstance("empty group".into()));
            }
            for &v in group {
                if v >= graph.n() {
                    return Err(Error::InvalidVertex { vertex: v, n: graph.n() });
                }
            }
        }
        Ok(GroupSteinerInstance { graph, groups, budget_edges })
    }

    pub fn group_count(&self) -> usize {
        self.groups.len()
    }
}

/// Budget of a Steiner tree instance: total tree edges, or the number of
/// non-terminal (Steiner) vertices for the parameterized form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SteinerBudget {
    Edges(usize),
    SteinerVertices(usize),
}

/// A Steiner tree problem: connect the terminal set `R` by a subtree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinerInstance {
    pub graph: Graph,
    pub terminals: VertexSet,
    pub budget: SteinerBudget,
}

impl SteinerInstance {
    pub fn new(graph: Graph, terminals: VertexSet, budget: SteinerBudget) -> Result<Self> {
        if graph.terminals().is_some() {
            return Err(Error::BadInstance(
                "Steiner graphs carry no (s,t) terminals".into(),
            ));
        }
        if terminals.len() < 2 {
            return Err(Error::BadInstance(
                "a Steiner instance needs at least two terminals".into(),
            ));
        }
        for &v in &terminals {
            if v >= graph.n() {
                return Err(Error::InvalidVertex { vertex: v, n: graph.n() });
            }
        }
        Ok(SteinerInstance { graph, terminals, budget })
    }
}

/// Where the construction placed its fresh vertices and what it predicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParameterMap {
    pub s: Vertex,
    pub t: Vertex,
    /// Per-group gadget vertices, in group order; empty for the two
    /// Steiner-tree constructions.
    pub x_vertices: Vec<Vertex>,
    /// Number of groups, for the group construction.
    pub groups: Option<usize>,
    /// The source instance's budget as given.
    pub source_budget: usize,
    /// Predicted (s,t)-vertex connectivity of the output.
    pub expected_connectivity: usize,
}

/// A CVS instance produced by a reduction, with its budget translated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutput {
    pub instance: Graph,
    pub target_budget: usize,
    pub map: ParameterMap,
}

/// Builds the CVS instance for a group Steiner problem: fresh vertices `s`,
/// `t` and one `x_i` per group, with `x_i` adjacent to `s`, `t` and all of
/// group `i`. Every s–t path crosses some `x_i`, so the output's
/// (s,t)-connectivity is exactly the number of groups `l`, and a group
/// Steiner tree with at most `r` edges yields a connected separator of size
/// at most `r + 1 + l` (the tree's vertices plus all gadget vertices). The
/// translated budget is therefore `r + 1 + l`.
///
/// Fresh ids follow the original ids: `s = n`, `t = n + 1`, `x_i = n + 2 + i`.
pub fn reduce_group_steiner(inst: &GroupSteinerInstance) -> Result<ReductionOutput> {
    let g = &inst.graph;
    let n = g.n();
    let l = inst.group_count();
    let (s, t) = (n, n + 1);
    let x_vertices: Vec<Vertex> = (0..l).map(|i| n + 2 + i).collect();
    let mut edges = g.edges();
    for (i, group) in inst.groups.iter().enumerate() {
        let x = x_vertices[i];
        edges.push((s, x));
        edges.push((t, x));
        for &y in group {
            edges.push((x, y));
        }
    }
    let instance = Graph::new(n + 2 + l, &edges)?.with_terminals(s, t)?;
    Ok(ReductionOutput {
        instance,
        target_budget: inst.budget_edges + 1 + l,
        map: ParameterMap {
            s,
            t,
            x_vertices,
            groups: Some(l),
            source_budget: inst.budget_edges,
            expected_connectivity: l,
        },
    })
}

/// Adds `s` and `t` adjacent to every vertex of `r_set`.
fn attach_terminal_gadget(g: &Graph, r_set: &VertexSet) -> Result<Graph> {
    let n = g.n();
    let (s, t) = (n, n + 1);
    let mut edges = g.edges();
    for &v in r_set {
        edges.push((s, v));
        edges.push((t, v));
    }
    Graph::new(n + 2, &edges)?.with_terminals(s, t)
}

/// Builds the CVS instance for a Steiner tree problem on a split graph:
/// fresh terminals `s`, `t` are joined to every Steiner terminal. Any
/// connected separator must contain all of `R` (each member carries a
/// two-edge s–t path) plus enough connectors, so a Steiner tree with at most
/// `r` edges corresponds to a connected separator of size at most `r + 1`.
/// The output stays free of induced cycles of length six and longer.
///
/// The input graph must be split — a clique plus an independent set — and
/// the budget must count edges.
pub fn reduce_split_steiner(inst: &SteinerInstance) -> Result<ReductionOutput> {
    if !is_split(&inst.graph) {
        return Err(Error::NotSplit);
    }
    let SteinerBudget::Edges(r) = inst.budget else {
        return Err(Error::BadInstance(
            "the split construction takes an edge budget".into(),
        ));
    };
    let n = inst.graph.n();
    let instance = attach_terminal_gadget(&inst.graph, &inst.terminals)?;
    Ok(ReductionOutput {
        instance,
        target_budget: r + 1,
        map: ParameterMap {
            s: n,
            t: n + 1,
            x_vertices: Vec::new(),
            groups: None,
            source_budget: r,
            expected_connectivity: inst.terminals.len(),
        },
    })
}

/// The terminal gadget of [`reduce_split_steiner`] on an arbitrary connected
/// graph, for the above-guarantee parameterization: the output's
/// (s,t)-connectivity is `k = |R|`, and a Steiner tree with at most `p`
/// Steiner vertices corresponds to a connected separator of size at most
/// `k + p`. The budget must count Steiner vertices.
pub fn reduce_steiner_above_guarantee(inst: &SteinerInstance) -> Result<ReductionOutput> {
    if !inst.graph.is_connected() {
        return Err(Error::BadInstance(
            "the above-guarantee construction expects a connected graph".into(),
        ));
    }
    let SteinerBudget::SteinerVertices(p) = inst.budget else {
        return Err(Error::BadInstance(
            "the above-guarantee construction takes a Steiner-vertex budget".into(),
        ));
    };
    let n = inst.graph.n();
    let k = inst.terminals.len();
    let instance = attach_terminal_gadget(&inst.graph, &inst.terminals)?;
    Ok(ReductionOutput {
        instance,
        target_budget: k + p,
        map: ParameterMap {
            s: n,
            t: n + 1,
            x_vertices: Vec::new(),
            groups: None,
            source_budget: p,
            expected_connectivity: k,
        },
    })
}

/// An optimal group Steiner tree found by exhaustion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSteinerSolution {
    /// Vertices of the tree, the size-then-lex minimal optimum.
    pub vertices: VertexSet,
    /// A spanning tree of the induced subgraph.
    pub tree_edges: Vec<(Vertex, Vertex)>,
}

impl GroupSteinerSolution {
    /// The optimum cost in edges: one less than the vertex count.
    pub fn edge_count(&self) -> usize {
        self.tree_edges.len()
    }
}

/// Exhaustive group Steiner solver: smallest connected vertex subset meeting
/// every group, by increasing size and lexicographic order within a size.
/// Refuses graphs over [`DEFAULT_ORACLE_CAP`] vertices; errs
/// [`Error::Infeasible`] when no connected subset hits all groups (possible
/// only in disconnected graphs).
pub fn group_steiner_oracle(inst: &GroupSteinerInstance) -> Result<GroupSteinerSolution> {
    let g = &inst.graph;
    if g.n() > DEFAULT_ORACLE_CAP {
        return Err(Error::CapExceeded { size: g.n(), cap: DEFAULT_ORACLE_CAP });
    }
    let all: Vec<Vertex> = g.vertices().collect();
    for size in 1..=g.n() {
        let hit = first_accepted_subset(&all, size, |set| {
            inst.groups
                .iter()
                .all(|group| group.iter().any(|v| set.contains(v)))
                && g.is_connected_subset(set).expect("subsets are nonempty")
        });
        if let Some(vertices) = hit {
            let tree_edges = spanning_tree_edges(g, &vertices);
            return Ok(GroupSteinerSolution { vertices, tree_edges });
        }
    }
    Err(Error::Infeasible)
}

/// An optimal Steiner tree found by exhaustion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinerSolution {
    /// The chosen non-terminal connectors, size-then-lex minimal.
    pub steiner_vertices: VertexSet,
    /// Terminals plus connectors.
    pub tree_vertices: VertexSet,
    /// A spanning tree of the induced subgraph.
    pub tree_edges: Vec<(Vertex, Vertex)>,
}

impl SteinerSolution {
    pub fn steiner_count(&self) -> usize {
        self.steiner_vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.tree_edges.len()
    }
}

/// Exhaustive Steiner tree solver: smallest set `T` of non-terminals such
/// that terminals plus `T` induce a connected subgraph, by increasing size
/// and lexicographic order. Errs [`Error::Infeasible`] when the terminals
/// span several components.
pub fn steiner_oracle(inst: &SteinerInstance) -> Result<SteinerSolution> {
    let g = &inst.graph;
    if g.n() > DEFAULT_ORACLE_CAP {
        return Err(Error::CapExceeded { size: g.n(), cap: DEFAULT_ORACLE_CAP });
    }
    let solution = |steiner: VertexSet| {
        let tree_vertices: VertexSet = inst.terminals.union(&steiner).copied().collect();
        let tree_edges = spanning_tree_edges(g, &tree_vertices);
        SteinerSolution { steiner_vertices: steiner, tree_vertices, tree_edges }
    };
    if g.is_connected_subset(&inst.terminals)? {
        return Ok(solution(VertexSet::new()));
    }
    let candidates: Vec<Vertex> = g
        .vertices()
        .filter(|v| !inst.terminals.contains(v))
        .collect();
    for size in 1..=candidates.len() {
        let hit = first_accepted_subset(&candidates, size, |set| {
            let joined: VertexSet = inst.terminals.union(set).copied().collect();
            g.is_connected_subset(&joined).expect("joined set is nonempty")
        });
        if let Some(steiner) = hit {
            return Ok(solution(steiner));
        }
    }
    Err(Error::Infeasible)
}

/// Breadth-first spanning tree of the subgraph induced by `set`, as edges
/// `(min, max)`; `set` must induce a connected subgraph.
fn spanning_tree_edges(g: &Graph, set: &VertexSet) -> Vec<(Vertex, Vertex)> {
    let mut edges = Vec::with_capacity(set.len().saturating_sub(1));
    let Some(&start) = set.iter().next() else {
        return edges;
    };
    let mut seen = VertexSet::new();
    seen.insert(start);
    let mut queue = alloc::vec![start];
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        for &w in g.neighbors(v) {
            if set.contains(&w) && seen.insert(w) {
                edges.push((v.min(w), v.max(w)));
                queue.push(w);
            }
        }
    }
    debug_assert_eq!(seen.len(), set.len());
    edges
}

/// Splits the vertices into a clique and an independent set, when possible.
/// Uses the degree-sequence characterization: with degrees sorted
/// descending, the graph is split iff the first `m` degrees (where `m` is
/// the largest index with `d_m ≥ m − 1`) sum to `m(m−1)` plus the remaining
/// degrees — and then those `m` vertices are the clique. The partition is
/// re-verified before returning.
pub fn split_partition(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let n = g.n();
    let mut by_degree: Vec<Vertex> = (0..n).collect();
    by_degree.sort_by_key(|&v| (core::cmp::Reverse(g.degree(v)), v));
    let degrees: Vec<usize> = by_degree.iter().map(|&v| g.degree(v)).collect();
    let m = (0..n).filter(|&i| degrees[i] >= i).map(|i| i + 1).max().unwrap_or(0);
    let top: usize = degrees[..m].iter().sum();
    let rest: usize = degrees[m..].iter().sum();
    if top != m * (m.saturating_sub(1)) + rest {
        return None;
    }
    let clique: VertexSet = by_degree[..m].iter().copied().collect();
    let independent: VertexSet = by_degree[m..].iter().copied().collect();
    (g.is_clique(&clique) && g.is_independent_set(&independent))
        .then_some((clique, independent))
}

/// Whether the vertex set partitions into a clique plus an independent set.
pub fn is_split(g: &Graph) -> bool {
    split_partition(g).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::st_vertex_connectivity;
    use crate::recognizers::find_induced_cycle_at_least;
    use crate::solvers::cvs_oracle;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn group_inst(
        n: usize,
        edges: &[(usize, usize)],
        groups: &[&[usize]],
        r: usize,
    ) -> GroupSteinerInstance {
        let g = Graph::new(n, edges).unwrap();
        let groups = groups.iter().map(|vs| vs.iter().copied().collect()).collect();
        GroupSteinerInstance::new(g, groups, r).unwrap()
    }

    fn steiner_inst(
        n: usize,
        edges: &[(usize, usize)],
        r_set: &[usize],
        budget: SteinerBudget,
    ) -> SteinerInstance {
        let g = Graph::new(n, edges).unwrap();
        SteinerInstance::new(g, set(r_set), budget).unwrap()
    }

    #[test]
    fn group_reduction_on_a_triangle() {
        let inst = group_inst(3, &[(0, 1), (0, 2), (1, 2)], &[&[0], &[1]], 1);
        let out = reduce_group_steiner(&inst).unwrap();
        assert_eq!(out.instance.n(), 7);
        assert_eq!(out.target_budget, 4);
        assert_eq!(out.map.x_vertices, alloc::vec![5, 6]);
        assert_eq!(st_vertex_connectivity(&out.instance).unwrap(), 2);

        // The best group tree is the single edge {0,1}; the best connected
        // separator is that edge's ends plus both gadget vertices.
        let tree = group_steiner_oracle(&inst).unwrap();
        assert_eq!(tree.edge_count(), 1);
        assert_eq!(tree.vertices, set(&[0, 1]));
        let cvs = cvs_oracle(&out.instance).unwrap();
        assert_eq!(cvs.size(), Some(4));
        assert_eq!(cvs.size(), Some(tree.edge_count() + 1 + inst.group_count()));
    }

    #[test]
    fn group_reduction_single_group() {
        // With one group the lone gadget vertex is itself a connected
        // separator, whatever the group contents.
        let inst = group_inst(1, &[], &[&[0]], 0);
        let out = reduce_group_steiner(&inst).unwrap();
        assert_eq!(out.instance.n(), 4);
        assert_eq!(st_vertex_connectivity(&out.instance).unwrap(), 1);
        let cvs = cvs_oracle(&out.instance).unwrap();
        assert_eq!(cvs.separator, Some(set(&[3])));
    }

    #[test]
    fn group_instance_validation() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert!(matches!(
            GroupSteinerInstance::new(g.clone(), alloc::vec![], 0),
            Err(Error::BadInstance(_))
        ));
        assert!(matches!(
            GroupSteinerInstance::new(g.clone(), alloc::vec![set(&[])], 0),
            Err(Error::BadInstance(_))
        ));
        assert!(matches!(
            GroupSteinerInstance::new(g, alloc::vec![set(&[5])], 0),
            Err(Error::InvalidVertex { vertex: 5, n: 3 })
        ));
    }

    #[test]
    fn split_reduction_shifts_the_optimum_by_one() {
        // Clique {0,1}, independent {2}, R = {1,2}: the tree needs vertex 0,
        // so two edges; the separator needs R plus the same connector.
        let inst = steiner_inst(3, &[(0, 1), (0, 2)], &[1, 2], SteinerBudget::Edges(2));
        let out = reduce_split_steiner(&inst).unwrap();
        assert_eq!(out.target_budget, 3);
        let tree = steiner_oracle(&inst).unwrap();
        assert_eq!(tree.edge_count(), 2);
        assert_eq!(tree.steiner_count(), 1);
        let cvs = cvs_oracle(&out.instance).unwrap();
        assert_eq!(cvs.size(), Some(3));
        assert_eq!(cvs.size(), Some(tree.edge_count() + 1));

        // R inside one clique: a single tree edge, a two-vertex separator.
        let inst = steiner_inst(2, &[(0, 1)], &[0, 1], SteinerBudget::Edges(1));
        let out = reduce_split_steiner(&inst).unwrap();
        let cvs = cvs_oracle(&out.instance).unwrap();
        assert_eq!(cvs.size(), Some(2));
    }

    #[test]
    fn split_reduction_output_has_no_long_hole() {
        let inst = steiner_inst(
            5,
            &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)],
            &[3, 4],
            SteinerBudget::Edges(4),
        );
        let out = reduce_split_steiner(&inst).unwrap();
        assert!(find_induced_cycle_at_least(&out.instance, 6)
            .unwrap()
            .is_none());
    }

    #[test]
    fn split_reduction_rejects_non_split_graphs() {
        let inst = steiner_inst(
            4,
            &[(0, 1), (1, 2), (2, 3), (3, 0)],
            &[0, 2],
            SteinerBudget::Edges(1),
        );
        assert!(matches!(reduce_split_steiner(&inst), Err(Error::NotSplit)));

        let inst = steiner_inst(2, &[(0, 1)], &[0, 1], SteinerBudget::SteinerVertices(0));
        assert!(matches!(reduce_split_steiner(&inst), Err(Error::BadInstance(_))));
    }

    #[test]
    fn above_guarantee_reduction() {
        // Star: R = two leaves, center is the one Steiner vertex.
        let inst = steiner_inst(
            3,
            &[(0, 1), (0, 2)],
            &[1, 2],
            SteinerBudget::SteinerVertices(1),
        );
        let out = reduce_steiner_above_guarantee(&inst).unwrap();
        assert_eq!(out.target_budget, 3);
        assert_eq!(out.map.expected_connectivity, 2);
        assert_eq!(st_vertex_connectivity(&out.instance).unwrap(), 2);
        let tree = steiner_oracle(&inst).unwrap();
        assert_eq!(tree.steiner_count(), 1);
        let cvs = cvs_oracle(&out.instance).unwrap();
        assert_eq!(cvs.size(), Some(2 + tree.steiner_count()));

        // R spanning an edge: no Steiner vertices, separator is R itself.
        let inst = steiner_inst(
            3,
            &[(0, 1), (1, 2)],
            &[0, 1],
            SteinerBudget::SteinerVertices(0),
        );
        let out = reduce_steiner_above_guarantee(&inst).unwrap();
        let cvs = cvs_oracle(&out.instance).unwrap();
        assert_eq!(cvs.separator, Some(set(&[0, 1])));

        let disconnected = steiner_inst(
            4,
            &[(0, 1), (2, 3)],
            &[0, 2],
            SteinerBudget::SteinerVertices(0),
        );
        assert!(matches!(
            reduce_steiner_above_guarantee(&disconnected),
            Err(Error::BadInstance(_))
        ));
    }

    #[test]
    fn group_oracle_examples() {
        let triangle = group_inst(3, &[(0, 1), (0, 2), (1, 2)], &[&[0], &[1]], 1);
        assert_eq!(group_steiner_oracle(&triangle).unwrap().edge_count(), 1);

        let degenerate = group_inst(2, &[(0, 1)], &[&[0], &[0]], 0);
        let sol = group_steiner_oracle(&degenerate).unwrap();
        assert_eq!(sol.edge_count(), 0);
        assert_eq!(sol.vertices, set(&[0]));

        let path = group_inst(3, &[(0, 1), (1, 2)], &[&[0], &[2]], 2);
        assert_eq!(group_steiner_oracle(&path).unwrap().edge_count(), 2);

        let split_groups = group_inst(4, &[(0, 1), (2, 3)], &[&[0], &[2]], 0);
        assert!(matches!(
            group_steiner_oracle(&split_groups),
            Err(Error::Infeasible)
        ));
    }

    #[test]
    fn steiner_oracle_examples() {
        let grid = steiner_inst(
            6,
            &[(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)],
            &[0, 5],
            SteinerBudget::SteinerVertices(9),
        );
        let sol = steiner_oracle(&grid).unwrap();
        assert_eq!(sol.steiner_count(), 2);
        assert_eq!(sol.steiner_vertices, set(&[1, 2]));

        let infeasible = steiner_inst(4, &[(0, 1), (2, 3)], &[0, 3], SteinerBudget::Edges(5));
        assert!(matches!(steiner_oracle(&infeasible), Err(Error::Infeasible)));
    }

    #[test]
    fn split_recognition() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let (clique, independent) = split_partition(&p3).unwrap();
        assert_eq!(clique.len() + independent.len(), 3);
        assert!(p3.is_clique(&clique));
        assert!(p3.is_independent_set(&independent));

        assert!(is_split(&Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()));
        assert!(is_split(&Graph::new(1, &[]).unwrap()));
        assert!(is_split(&Graph::new(3, &[]).unwrap()));

        // C4, C5 and the two-edge matching are the classic non-split graphs.
        assert!(!is_split(&Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()));
        assert!(!is_split(
            &Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
        ));
        assert!(!is_split(&Graph::new(4, &[(0, 1), (2, 3)]).unwrap()));
    }
}
