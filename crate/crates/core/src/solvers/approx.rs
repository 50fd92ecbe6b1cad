use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::connectivity::{min_st_separator, SeparatorCertificate};
use crate::graph::{Graph, Path, Vertex, VertexSet};
use crate::solvers::{
    solve_disconnected_terminals, verify_cvs, Diagnostics, Method, Optimality, SeparatorResult,
};
use crate::{Error, Result};

/// A connecting path found for a pair of separator vertices, and whether its
/// length stayed within the `⌈c/2⌉` budget promised by chordality `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairPath {
    pub path: Path,
    pub within_bound: bool,
}

/// Approximation for graphs of chordality at most `c`: take a minimum
/// (s,t)-separator and stitch consecutive nonadjacent members together with
/// short terminal-free paths. The result is a CVS of size at most
/// `k + (k-1)(⌈c/2⌉ - 1)` when every connecting path respects the chordality
/// budget — which shortest paths through a minimal separator's own cut sides
/// always do.
///
/// `c` is a promise about the input; it is not re-verified here. Callers
/// wanting a checked bound should classify the graph first.
pub fn cvs_approx_chordality(g: &Graph, c: usize) -> Result<SeparatorResult> {
    if c < 3 {
        return Err(Error::BadInstance(
            "chordality is at least 3 on any graph with a cycle".into(),
        ));
    }
    g.require_terminals()?;
    let mut diagnostics = Diagnostics { chordality: Some(c), ..Diagnostics::default() };
    let cert = match min_st_separator(g)? {
        None => return Ok(solve_disconnected_terminals(g, Method::Approx, diagnostics)),
        Some(cert) => cert,
    };
    let k = cert.k();
    let budget = c.div_ceil(2);
    diagnostics.connectivity = Some(k);
    diagnostics.ratio_bound = Some(k + (k - 1) * (budget - 1));

    let members: Vec<Vertex> = cert.separator.iter().copied().collect();
    let mut grown: VertexSet = cert.separator.clone();
    let mut all_within = true;
    for pair in members.windows(2) {
        let (u, v) = (pair[0], pair[1]);
        if g.has_edge(u, v) {
            continue;
        }
        match connecting_path_for_pair(g, &cert, u, v, c) {
            Ok(found) => {
                all_within &= found.within_bound;
                grown.extend(found.path.vertices().iter().copied());
            }
            Err(Error::UnconnectablePair { .. }) => {
                return Ok(SeparatorResult::empty(
                    Method::Approx,
                    Optimality::NoneFound,
                    diagnostics,
                ));
            }
            Err(e) => return Err(e),
        }
    }
    diagnostics.paths_within_bound = Some(all_within);
    if !verify_cvs(g, &grown)? {
        return Err(Error::Internal(
            "stitched separator failed verification",
        ));
    }
    Ok(SeparatorResult::found(
        Method::Approx,
        grown,
        Optimality::UpperBound,
        diagnostics,
    ))
}

/// Finds a shortest path between separator vertices `u` and `v` whose
/// interior avoids the terminals and the separator itself. Interiors are
/// drawn from the s-side of the cut, then the t-side (keeping the shorter of
/// the two, s-side on ties), and only if both sides fail from the remaining
/// vertices. The returned flag records whether the path length stayed within
/// `⌈c/2⌉` edges.
pub fn connecting_path_for_pair(
    g: &Graph,
    cert: &SeparatorCertificate,
    u: Vertex,
    v: Vertex,
    c: usize,
) -> Result<PairPath> {
    let (s, t) = g.require_terminals()?;
    let side_s: VertexSet = cert.side_s.iter().copied().filter(|&w| w != s).collect();
    let side_t: VertexSet = cert.side_t.iter().copied().filter(|&w| w != t).collect();
    let wide: VertexSet = g
        .vertices()
        .filter(|&w| w != s && w != t && !cert.separator.contains(&w))
        .collect();

    let near = bfs_within(g, u, v, &side_s);
    let far = bfs_within(g, u, v, &side_t);
    let best = match (near, far) {
        (Some(a), Some(b)) if b.len() < a.len() => Some(b),
        (Some(a), _) => Some(a),
        (None, Some(b)) => Some(b),
        (None, None) => bfs_within(g, u, v, &wide),
    };
    match best {
        Some(path) => {
            let within_bound = path.len() <= c.div_ceil(2);
            Ok(PairPath { path, within_bound })
        }
        None => Err(Error::UnconnectablePair { u, v }),
    }
}

/// Shortest u-v path whose interior vertices all lie in `allowed`.
fn bfs_within(g: &Graph, u: Vertex, v: Vertex, allowed: &VertexSet) -> Option<Path> {
    let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    let mut queue: Vec<Vertex> = alloc::vec![u];
    let mut head = 0;
    while head < queue.len() {
        let w = queue[head];
        head += 1;
        for &x in g.neighbors(w) {
            if x == u || parent.contains_key(&x) {
                continue;
            }
            if x == v {
                let mut vertices = alloc::vec![v, w];
                let mut back = w;
                while back != u {
                    back = parent[&back];
                    vertices.push(back);
                }
                vertices.reverse();
                return Some(Path::new(g, vertices).expect("bfs yields a simple path"));
            }
            if allowed.contains(&x) {
                parent.insert(x, w);
                queue.push(x);
            }
        }
    }
    None
}
