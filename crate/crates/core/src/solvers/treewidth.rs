//! Tree decompositions and the width-parameterized exact solver.
//!
//! The dynamic program tags every bag vertex as s-side, t-side, or a member
//! of the separator under construction; separator members carry a block
//! label tracking connectivity of the part of `G[S]` seen so far. Edges
//! between the two sides are forbidden, blocks merge along edges inside `S`,
//! and a block may only disappear (its last vertex forgotten) once — closing
//! the separator. Accepting root states are exactly the connected
//! (s,t)-vertex separators, so the minimum over them is exact.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::connectivity::st_vertex_connectivity;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::solvers::{verify_cvs, Diagnostics, Method, Optimality, SeparatorResult};
use crate::{Error, Result};

/// A tree decomposition: `edges` connect indices into `bags`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bags: Vec<VertexSet>,
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// Largest bag size minus one.
    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(|b| b.len())
            .max()
            .unwrap_or(1)
            .saturating_sub(1)
    }

    /// Checks the three decomposition axioms against `g`, plus that the bag
    /// graph is in fact a tree.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidDecomposition(msg));
        if self.bags.is_empty() {
            return fail("no bags".into());
        }
        for &(a, b) in &self.edges {
            if a >= self.bags.len() || b >= self.bags.len() {
                return fail(alloc::format!("edge ({a},{b}) out of range"));
            }
        }
        if self.edges.len() + 1 != self.bags.len() {
            return fail(alloc::format!(
                "{} edges cannot form a tree over {} bags",
                self.edges.len(),
                self.bags.len()
            ));
        }
        let nb = self.bag_adjacency();
        if reachable_from(&nb, 0, |_| true) != self.bags.len() {
            return fail("bag graph is disconnected".into());
        }
        for v in g.vertices() {
            let holding: Vec<usize> = (0..self.bags.len())
                .filter(|&i| self.bags[i].contains(&v))
                .collect();
            let Some(&first) = holding.first() else {
                return fail(alloc::format!("vertex {v} is in no bag"));
            };
            let within = reachable_from(&nb, first, |i| self.bags[i].contains(&v));
            if within != holding.len() {
                return fail(alloc::format!("bags holding vertex {v} are not a subtree"));
            }
        }
        for (u, v) in g.edges() {
            if !self
                .bags
                .iter()
                .any(|b| b.contains(&u) && b.contains(&v))
            {
                return fail(alloc::format!("edge ({u},{v}) is covered by no bag"));
            }
        }
        Ok(())
    }

    fn bag_adjacency(&self) -> Vec<Vec<usize>> {
        let mut nb = alloc::vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            nb[a].push(b);
            nb[b].push(a);
        }
        nb
    }
}

/// Counts bag-graph nodes reachable from `start` while `keep` admits them.
fn reachable_from(nb: &[Vec<usize>], start: usize, keep: impl Fn(usize) -> bool) -> usize {
    if !keep(start) {
        return 0;
    }
    let mut seen = alloc::vec![false; nb.len()];
    seen[start] = true;
    let mut stack = alloc::vec![start];
    let mut count = 0;
    while let Some(i) = stack.pop() {
        count += 1;
        for &j in &nb[i] {
            if !seen[j] && keep(j) {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    count
}

/// Builds a valid (not necessarily optimal-width) tree decomposition with
/// the min-fill elimination heuristic: repeatedly eliminate the vertex whose
/// neighborhood needs fewest fill edges to become a clique, ties to the
/// least id. Each elimination contributes the bag `{v} ∪ N(v)` over the
/// yet-uneliminated neighbors.
pub fn compute_tree_decomposition(g: &Graph) -> TreeDecomposition {
    let n = g.n();
    if n == 0 {
        return TreeDecomposition {
            bags: alloc::vec![VertexSet::new()],
            edges: Vec::new(),
        };
    }
    let mut adj: Vec<BTreeSet<Vertex>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut alive: BTreeSet<Vertex> = (0..n).collect();
    let mut order: Vec<Vertex> = Vec::with_capacity(n);
    let mut pos = alloc::vec![usize::MAX; n];
    let mut bags: Vec<VertexSet> = Vec::with_capacity(n);
    for step in 0..n {
        let v = alive
            .iter()
            .copied()
            .min_by_key(|&v| {
                let nb: Vec<Vertex> = adj[v].iter().copied().collect();
                let mut fill = 0usize;
                for (i, &a) in nb.iter().enumerate() {
                    fill += nb[i + 1..].iter().filter(|&&b| !adj[a].contains(&b)).count();
                }
                (fill, v)
            })
            .expect("alive set is nonempty");
        let mut bag = adj[v].clone();
        bag.insert(v);
        bags.push(bag);
        order.push(v);
        pos[v] = step;
        let nb: Vec<Vertex> = adj[v].iter().copied().collect();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        for &u in &nb {
            adj[u].remove(&v);
        }
        alive.remove(&v);
    }
    // Bag i hangs off the bag of its earliest-eliminated other member; bags
    // of vertices eliminated with no remaining neighbors start new subtrees,
    // chained together at the end to keep a single tree.
    let mut edges = Vec::new();
    let mut roots = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        match bags[i].iter().filter(|&&u| u != v).map(|&u| pos[u]).min() {
            Some(p) => edges.push((i, p)),
            None => roots.push(i),
        }
    }
    for pair in roots.windows(2) {
        edges.push((pair[0], pair[1]));
    }
    let td = TreeDecomposition { bags, edges };
    debug_assert!(td.validate(g).is_ok());
    td
}

const SIDE_A: u8 = 0;
const SIDE_B: u8 = 1;
/// Placeholder block label, rewritten by canonicalization.
const FRESH: u8 = u8::MAX;

type Tags = Vec<u8>;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct State {
    /// One tag per bag vertex, in bag order: `SIDE_A`, `SIDE_B`, or a block
    /// label ≥ 2 for separator members, canonically numbered by first
    /// occurrence.
    tags: Tags,
    /// Whether the separator has already been completed (its single block
    /// fully forgotten). No separator tags may appear afterwards.
    done: bool,
}

#[derive(Debug, Clone)]
enum Pred {
    Leaf,
    FromChild { child: State, added: Option<Vertex> },
    Merge { left: State, right: State },
}

struct Entry {
    size: usize,
    pred: Pred,
}

type Table = BTreeMap<State, Entry>;

enum NiceKind {
    Leaf,
    Introduce(Vertex),
    Forget(Vertex),
    Join,
}

struct NiceNode {
    bag: Vec<Vertex>,
    kind: NiceKind,
    children: Vec<usize>,
}

/// Exact solver by dynamic programming over a nice form of `td`. Runtime is
/// exponential in the decomposition width only.
pub fn cvs_treewidth_dp(g: &Graph, td: &TreeDecomposition) -> Result<SeparatorResult> {
    let (s, t) = g.require_terminals()?;
    td.validate(g)?;
    let diagnostics = Diagnostics {
        width: Some(td.width()),
        connectivity: Some(st_vertex_connectivity(g)?),
        ..Diagnostics::default()
    };

    let nodes = build_nice(td);
    let root = nodes.len() - 1;
    let mut tables: Vec<Table> = Vec::with_capacity(nodes.len());
    for node in &nodes {
        let table = match node.kind {
            NiceKind::Leaf => {
                let mut table = Table::new();
                table.insert(
                    State { tags: Vec::new(), done: false },
                    Entry { size: 0, pred: Pred::Leaf },
                );
                table
            }
            NiceKind::Introduce(v) => {
                introduce(g, s, t, v, &node.bag, &tables[node.children[0]])
            }
            NiceKind::Forget(v) => forget(v, &nodes[node.children[0]].bag, &tables[node.children[0]]),
            NiceKind::Join => join(
                &node.bag,
                &tables[node.children[0]],
                &tables[node.children[1]],
            ),
        };
        tables.push(table);
    }

    let accept = State { tags: Vec::new(), done: true };
    match tables[root].get(&accept) {
        None => Ok(SeparatorResult::empty(
            Method::TreewidthDp,
            Optimality::NoneExists,
            diagnostics,
        )),
        Some(entry) => {
            let expected = entry.size;
            let mut separator = VertexSet::new();
            collect_witness(&nodes, &tables, root, &accept, &mut separator);
            if separator.len() != expected || !verify_cvs(g, &separator)? {
                return Err(Error::Internal("dp witness failed verification"));
            }
            Ok(SeparatorResult::found(
                Method::TreewidthDp,
                separator,
                Optimality::Exact,
                diagnostics,
            ))
        }
    }
}

/// Renumbers block labels to 2, 3, … by first occurrence.
fn canonicalize(tags: &mut Tags) {
    let mut map: BTreeMap<u8, u8> = BTreeMap::new();
    let mut next = 2u8;
    for tag in tags.iter_mut() {
        if *tag >= 2 {
            *tag = *map.entry(*tag).or_insert_with(|| {
                let id = next;
                next += 1;
                id
            });
        }
    }
}

fn upsert(table: &mut Table, state: State, size: usize, pred: Pred) {
    match table.get_mut(&state) {
        Some(entry) if entry.size <= size => {}
        Some(entry) => {
            entry.size = size;
            entry.pred = pred;
        }
        None => {
            table.insert(state, Entry { size, pred });
        }
    }
}

fn introduce(g: &Graph, s: Vertex, t: Vertex, v: Vertex, bag: &[Vertex], child: &Table) -> Table {
    let p = bag.binary_search(&v).expect("introduced vertex is in the bag");
    let mut table = Table::new();
    for (cs, ce) in child {
        for side in [SIDE_A, SIDE_B] {
            if (v == s && side != SIDE_A) || (v == t && side != SIDE_B) {
                continue;
            }
            let mut tags = cs.tags.clone();
            tags.insert(p, side);
            let clash = bag.iter().enumerate().any(|(j, &w)| {
                j != p && tags[j] == (1 - side) && g.has_edge(v, w)
            });
            if clash {
                continue;
            }
            upsert(
                &mut table,
                State { tags, done: cs.done },
                ce.size,
                Pred::FromChild { child: cs.clone(), added: None },
            );
        }
        if v == s || v == t || cs.done {
            continue;
        }
        let mut tags = cs.tags.clone();
        tags.insert(p, FRESH);
        // Absorb the blocks of all separator neighbors into the new one.
        let absorbed: BTreeSet<u8> = bag
            .iter()
            .enumerate()
            .filter(|&(j, &w)| {
                j != p && tags[j] >= 2 && tags[j] != FRESH && g.has_edge(v, w)
            })
            .map(|(j, _)| tags[j])
            .collect();
        for tag in tags.iter_mut() {
            if absorbed.contains(tag) {
                *tag = FRESH;
            }
        }
        canonicalize(&mut tags);
        upsert(
            &mut table,
            State { tags, done: false },
            ce.size + 1,
            Pred::FromChild { child: cs.clone(), added: Some(v) },
        );
    }
    table
}

fn forget(v: Vertex, child_bag: &[Vertex], child: &Table) -> Table {
    let p = child_bag
        .binary_search(&v)
        .expect("forgotten vertex is in the child bag");
    let mut table = Table::new();
    for (cs, ce) in child {
        let tag = cs.tags[p];
        let mut done = cs.done;
        if tag >= 2 {
            let lone = !cs
                .tags
                .iter()
                .enumerate()
                .any(|(j, &other)| j != p && other == tag);
            if lone {
                let others_open = cs.tags.iter().enumerate().any(|(j, &o)| j != p && o >= 2);
                if others_open {
                    // The block leaves the bag while another is still open:
                    // G[S] could never become connected.
                    continue;
                }
                done = true;
            }
        }
        let mut tags = cs.tags.clone();
        tags.remove(p);
        canonicalize(&mut tags);
        upsert(
            &mut table,
            State { tags, done },
            ce.size,
            Pred::FromChild { child: cs.clone(), added: None },
        );
    }
    table
}

fn join(bag: &[Vertex], left: &Table, right: &Table) -> Table {
    let m = bag.len();
    let pattern = |tags: &Tags| -> Tags {
        tags.iter().map(|&t| if t >= 2 { 2 } else { t }).collect()
    };
    let mut by_pattern: BTreeMap<Tags, Vec<(&State, &Entry)>> = BTreeMap::new();
    for (rs, re) in right {
        by_pattern.entry(pattern(&rs.tags)).or_default().push((rs, re));
    }
    let mut table = Table::new();
    for (ls, le) in left {
        let Some(matches) = by_pattern.get(&pattern(&ls.tags)) else {
            continue;
        };
        let shared: usize = ls.tags.iter().filter(|&&t| t >= 2).count();
        for &(rs, re) in matches {
            if ls.done && rs.done {
                continue;
            }
            // Union the two block partitions position-wise.
            let mut parent: Vec<usize> = (0..m).collect();
            for side in [&ls.tags, &rs.tags] {
                let mut first: BTreeMap<u8, usize> = BTreeMap::new();
                for (j, &tag) in side.iter().enumerate() {
                    if tag >= 2 {
                        match first.get(&tag) {
                            Some(&f) => union(&mut parent, f, j),
                            None => {
                                first.insert(tag, j);
                            }
                        }
                    }
                }
            }
            let mut tags: Tags = (0..m)
                .map(|j| {
                    if ls.tags[j] >= 2 {
                        2 + find(&mut parent, j) as u8
                    } else {
                        ls.tags[j]
                    }
                })
                .collect();
            canonicalize(&mut tags);
            upsert(
                &mut table,
                State { tags, done: ls.done || rs.done },
                le.size + re.size - shared,
                Pred::Merge { left: ls.clone(), right: rs.clone() },
            );
        }
    }
    table
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        parent[hi] = lo;
    }
}

fn collect_witness(
    nodes: &[NiceNode],
    tables: &[Table],
    node: usize,
    state: &State,
    out: &mut VertexSet,
) {
    match &tables[node]
        .get(state)
        .expect("witness follows recorded predecessors")
        .pred
    {
        Pred::Leaf => {}
        Pred::FromChild { child, added } => {
            if let Some(v) = added {
                out.insert(*v);
            }
            collect_witness(nodes, tables, nodes[node].children[0], child, out);
        }
        Pred::Merge { left, right } => {
            collect_witness(nodes, tables, nodes[node].children[0], left, out);
            collect_witness(nodes, tables, nodes[node].children[1], right, out);
        }
    }
}

/// Rewrites `td` into nice form: empty leaves and root, unary introduce and
/// forget steps, binary joins of equal bags. Children precede parents in the
/// returned vector; the root is last.
fn build_nice(td: &TreeDecomposition) -> Vec<NiceNode> {
    let nb = td.bag_adjacency();
    let mut nodes: Vec<NiceNode> = Vec::new();
    let root_bag: Vec<Vertex> = td.bags[0].iter().copied().collect();
    let top = build_subtree(td, &nb, 0, usize::MAX, &mut nodes);
    let empty: Vec<Vertex> = Vec::new();
    let root = morph(&mut nodes, top, &root_bag, &empty);
    debug_assert_eq!(root, nodes.len() - 1);
    nodes
}

fn build_subtree(
    td: &TreeDecomposition,
    nb: &[Vec<usize>],
    bag_idx: usize,
    parent: usize,
    nodes: &mut Vec<NiceNode>,
) -> usize {
    let bag: Vec<Vertex> = td.bags[bag_idx].iter().copied().collect();
    let children: Vec<usize> = nb[bag_idx].iter().copied().filter(|&c| c != parent).collect();
    if children.is_empty() {
        return grow_from_empty(nodes, &bag);
    }
    let mut acc = usize::MAX;
    for &c in &children {
        let sub = build_subtree(td, nb, c, bag_idx, nodes);
        let child_bag: Vec<Vertex> = td.bags[c].iter().copied().collect();
        let lifted = morph(nodes, sub, &child_bag, &bag);
        acc = if acc == usize::MAX {
            lifted
        } else {
            nodes.push(NiceNode {
                bag: bag.clone(),
                kind: NiceKind::Join,
                children: alloc::vec![acc, lifted],
            });
            nodes.len() - 1
        };
    }
    acc
}

/// Empty leaf followed by introductions of `bag` in ascending order.
fn grow_from_empty(nodes: &mut Vec<NiceNode>, bag: &[Vertex]) -> usize {
    nodes.push(NiceNode {
        bag: Vec::new(),
        kind: NiceKind::Leaf,
        children: Vec::new(),
    });
    let mut cur = nodes.len() - 1;
    let mut have: Vec<Vertex> = Vec::new();
    for &v in bag {
        have.push(v);
        nodes.push(NiceNode {
            bag: have.clone(),
            kind: NiceKind::Introduce(v),
            children: alloc::vec![cur],
        });
        cur = nodes.len() - 1;
    }
    cur
}

/// Chains forgets then introduces to turn the node `from_idx` (with bag
/// `from`) into a node with bag `to`.
fn morph(nodes: &mut Vec<NiceNode>, from_idx: usize, from: &[Vertex], to: &[Vertex]) -> usize {
    let to_set: BTreeSet<Vertex> = to.iter().copied().collect();
    let mut cur = from_idx;
    let mut have: Vec<Vertex> = from.to_vec();
    for &v in from.iter().filter(|v| !to_set.contains(v)) {
        have.retain(|&w| w != v);
        nodes.push(NiceNode {
            bag: have.clone(),
            kind: NiceKind::Forget(v),
            children: alloc::vec![cur],
        });
        cur = nodes.len() - 1;
    }
    let have_set: BTreeSet<Vertex> = have.iter().copied().collect();
    for &v in to.iter().filter(|v| !have_set.contains(v)) {
        let at = have.binary_search(&v).unwrap_err();
        have.insert(at, v);
        nodes.push(NiceNode {
            bag: have.clone(),
            kind: NiceKind::Introduce(v),
            children: alloc::vec![cur],
        });
        cur = nodes.len() - 1;
    }
    cur
}
