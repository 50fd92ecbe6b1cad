use crate::connectivity::min_st_separator;
use crate::graph::Graph;
use crate::recognizers::is_chordal;
use crate::solvers::{
    solve_disconnected_terminals, Diagnostics, Method, Optimality, SeparatorResult,
};
use crate::{Error, Result};

/// Exact solver for chordal graphs.
///
/// In a chordal graph every minimal (s,t)-separator is a clique, hence
/// connected, so a minimum separator — computable in polynomial time by
/// flow — is already a minimum *connected* separator. Unless `force` is set,
/// non-chordal inputs are rejected rather than answered incorrectly.
pub fn cvs_chordal(g: &Graph, force: bool) -> Result<SeparatorResult> {
    g.require_terminals()?;
    if !force && !is_chordal(g).is_chordal() {
        return Err(Error::ClassMismatch {
            expected: "chordal",
        });
    }
    let mut diagnostics = Diagnostics::default();
    match min_st_separator(g)? {
        None => Ok(solve_disconnected_terminals(g, Method::Chordal, diagnostics)),
        Some(cert) => {
            diagnostics.connectivity = Some(cert.k());
            if !g.is_clique(&cert.separator) {
                // Unreachable on genuinely chordal inputs; forcing past the
                // recognizer can land here.
                return Err(Error::Internal(
                    "minimum separator of a chordal graph must be a clique",
                ));
            }
            Ok(SeparatorResult::found(
                Method::Chordal,
                cert.separator,
                Optimality::Exact,
                diagnostics,
            ))
        }
    }
}
