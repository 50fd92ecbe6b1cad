use alloc::vec::Vec;

use crate::graph::{Graph, Vertex};
use crate::solvers::{
    first_accepted_subset, solve_disconnected_terminals, verify_cvs, Diagnostics, Method,
    Optimality, SeparatorResult,
};
use crate::{Error, Result};

/// Largest graph [`cvs_oracle`] agrees to search exhaustively.
pub const DEFAULT_ORACLE_CAP: usize = 16;

/// Exhaustive exact solver: tries candidate sets by increasing size, and
/// within a size in lexicographic order, so the answer is the unique
/// size-then-lex minimal CVS. Refuses graphs larger than
/// [`DEFAULT_ORACLE_CAP`] vertices.
pub fn cvs_oracle(g: &Graph) -> Result<SeparatorResult> {
    cvs_oracle_with_cap(g, DEFAULT_ORACLE_CAP)
}

/// [`cvs_oracle`] with an explicit size cap.
pub fn cvs_oracle_with_cap(g: &Graph, cap: usize) -> Result<SeparatorResult> {
    let (s, t) = g.require_terminals()?;
    if g.n() > cap {
        return Err(Error::CapExceeded { size: g.n(), cap });
    }
    let diagnostics = Diagnostics {
        connectivity: Some(crate::connectivity::st_vertex_connectivity(g)?),
        ..Diagnostics::default()
    };
    if diagnostics.connectivity == Some(0) {
        return Ok(solve_disconnected_terminals(g, Method::Oracle, diagnostics));
    }
    let candidates: Vec<Vertex> = g.vertices().filter(|&v| v != s && v != t).collect();
    for size in 1..=candidates.len() {
        let hit = first_accepted_subset(&candidates, size, |set| {
            verify_cvs(g, set).expect("candidate sets are in range")
        });
        if let Some(set) = hit {
            return Ok(SeparatorResult::found(
                Method::Oracle,
                set,
                Optimality::Exact,
                diagnostics,
            ));
        }
    }
    Ok(SeparatorResult::empty(
        Method::Oracle,
        Optimality::NoneExists,
        diagnostics,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Graph, VertexSet};

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn tg(n: usize, edges: &[(usize, usize)], s: usize, t: usize) -> Graph {
        Graph::new(n, edges).unwrap().with_terminals(s, t).unwrap()
    }

    #[test]
    fn path_graph_cut_vertex() {
        let g = tg(3, &[(0, 1), (1, 2)], 0, 2);
        let r = cvs_oracle(&g).unwrap();
        assert_eq!(r.separator, Some(set(&[1])));
        assert_eq!(r.optimality, Optimality::Exact);
        assert_eq!(r.diagnostics.connectivity, Some(1));
    }

    #[test]
    fn four_cycle_has_no_connected_separator() {
        // The only (s,t)-separator of C4 is the two opposite vertices, which
        // are nonadjacent.
        let g = tg(4, &[(0, 1), (1, 2), (2, 3), (3, 0)], 0, 2);
        let r = cvs_oracle(&g).unwrap();
        assert_eq!(r.separator, None);
        assert_eq!(r.optimality, Optimality::NoneExists);
        assert_eq!(r.diagnostics.connectivity, Some(2));
    }

    #[test]
    fn k23_middle_layer_is_independent() {
        // K(2,3) with the degree-3 vertices as terminals: the only separator
        // over non-terminals is the whole middle layer {2,3,4}, which is
        // independent, so no CVS exists.
        let g = tg(
            5,
            &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
            0,
            1,
        );
        let r = cvs_oracle(&g).unwrap();
        assert_eq!(r.optimality, Optimality::NoneExists);
    }

    #[test]
    fn ties_break_lexicographically() {
        // On a path both interior vertices are optimal; the oracle settles on
        // the lexicographically first.
        let g = tg(4, &[(0, 1), (1, 2), (2, 3)], 0, 3);
        let r = cvs_oracle(&g).unwrap();
        assert_eq!(r.separator, Some(set(&[1])));

        let g = tg(5, &[(0, 1), (1, 4), (0, 2), (2, 4), (1, 2), (2, 3)], 0, 4);
        let r = cvs_oracle(&g).unwrap();
        assert_eq!(r.separator, Some(set(&[1, 2])));
    }

    #[test]
    fn disconnected_terminals_take_least_singleton() {
        let g = tg(4, &[(0, 1), (2, 3)], 0, 2);
        let r = cvs_oracle(&g).unwrap();
        assert_eq!(r.separator, Some(set(&[1])));
        assert_eq!(r.optimality, Optimality::Exact);
        assert_eq!(r.diagnostics.connectivity, Some(0));

        let g = tg(2, &[], 0, 1);
        let r = cvs_oracle(&g).unwrap();
        assert_eq!(r.optimality, Optimality::NoneExists);
    }

    #[test]
    fn cap_is_enforced() {
        let edges: Vec<(usize, usize)> = (0..16).map(|i| (i, i + 1)).collect();
        let g = tg(17, &edges, 0, 16);
        assert!(matches!(
            cvs_oracle(&g),
            Err(Error::CapExceeded { size: 17, cap: 16 })
        ));
        let r = cvs_oracle_with_cap(&g, 17).unwrap();
        assert_eq!(r.size(), Some(1));
    }

    #[test]
    fn verify_cvs_semantics() {
        let g = tg(5, &[(0, 1), (1, 2), (1, 3), (3, 4), (2, 4)], 0, 4);
        assert!(verify_cvs(&g, &set(&[1, 2, 3])).unwrap());
        // Not a separator: 0-1-2-4 survives removing {3}.
        assert!(!verify_cvs(&g, &set(&[3])).unwrap());
        // Separates but induces a disconnected graph.
        assert!(!verify_cvs(&g, &set(&[2, 3])).unwrap());
        // Empty set and terminal membership are failures, not errors.
        assert!(!verify_cvs(&g, &set(&[])).unwrap());
        assert!(!verify_cvs(&g, &set(&[0, 1, 2, 3])).unwrap());
        assert!(matches!(
            verify_cvs(&g, &set(&[9])),
            Err(Error::InvalidVertex { vertex: 9, n: 5 })
        ));
    }
}
