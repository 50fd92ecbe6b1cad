//! The instance file format: DIMACS-style lines, one record per line.
//!
//! ```text
//! c optional comments
//! p cvs <n> <m>        (or: p steiner <n> <m> / p gsteiner <n> <m>)
//! s <id>               (cvs only, exactly once)
//! t <id>               (cvs only, exactly once)
//! R <id> <id> ...      (steiner only, exactly once, at least two ids)
//! g <i> <id> ...       (gsteiner only, groups numbered 1, 2, ... in order)
//! e <u> <v>            (exactly m of these)
//! ```
//!
//! Ids are 0-based and must be smaller than `n`. Parsing validates
//! everything the solvers assume — no self-loops, no duplicate edges,
//! nonadjacent distinct terminals, in-range group members — and reports
//! failures with a 1-based line and column. [`serialize`] emits the
//! canonical form; parse → serialize → parse is the identity on the
//! parsed value.

use std::fmt;

use stcvs_core::reductions::{GroupSteinerInstance, SteinerBudget, SteinerInstance};
use stcvs_core::suite::Instance;
use stcvs_core::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq)]
pub enum ParsedInstance {
    Cvs(Graph),
    Steiner(SteinerInstance),
    GroupSteiner(GroupSteinerInstance),
}

impl ParsedInstance {
    pub fn kind(&self) -> &'static str {
        match self {
            ParsedInstance::Cvs(_) => "cvs",
            ParsedInstance::Steiner(_) => "steiner",
            ParsedInstance::GroupSteiner(_) => "gsteiner",
        }
    }
}

/// A parse failure and where it happened; `line` and `column` are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Copy)]
struct Tok<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

impl Tok<'_> {
    fn fail<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            line: self.line,
            column: self.column,
            message: message.into(),
        })
    }
}

fn tokens_of(text: &str, line: usize) -> Vec<Tok<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    let mut column = 0;
    let mut chars = text.char_indices().peekable();
    while let Some((i, ch)) = chars.next() {
        column += 1;
        if !ch.is_whitespace() && start.is_none() {
            start = Some((i, column));
        }
        let next_boundary = chars.peek().is_none_or(|&(_, c)| c.is_whitespace());
        if let Some((begin, col)) = start {
            if next_boundary && !ch.is_whitespace() {
                out.push(Tok {
                    text: &text[begin..i + ch.len_utf8()],
                    line,
                    column: col,
                });
                start = None;
            } else if ch.is_whitespace() {
                start = None;
            }
        }
    }
    out
}

fn number(tok: &Tok) -> Result<usize, ParseError> {
    tok.text
        .parse()
        .map_err(|_| ParseError {
            line: tok.line,
            column: tok.column,
            message: format!("expected a number, found '{}'", tok.text),
        })
}

pub fn parse_instance(input: &str) -> Result<ParsedInstance, ParseError> {
    let mut lines = Vec::new();
    let mut line_count = 0;
    for (idx, raw) in input.lines().enumerate() {
        line_count = idx + 1;
        let toks = tokens_of(raw, idx + 1);
        match toks.first() {
            None => {}
            Some(first) if first.text == "c" => {}
            Some(_) => lines.push(toks),
        }
    }
    let eof = ParseError {
        line: line_count + 1,
        column: 1,
        message: String::new(),
    };
    let fail_eof = |message: &str| ParseError {
        message: message.into(),
        ..eof.clone()
    };

    let mut rest = lines.into_iter();
    let header = rest.next().ok_or_else(|| fail_eof("empty instance: expected a 'p' line"))?;
    if header[0].text != "p" {
        return header[0].fail("expected a 'p' header line first");
    }
    if header.len() != 4 {
        return header[0].fail("expected 'p <kind> <n> <m>'");
    }
    let kind = header[1].text;
    if !matches!(kind, "cvs" | "steiner" | "gsteiner") {
        return header[1].fail(format!(
            "unknown problem kind '{kind}' (expected cvs, steiner or gsteiner)"
        ));
    }
    let n = number(&header[2])?;
    if n == 0 {
        return header[2].fail("an instance needs at least one vertex");
    }
    let m = number(&header[3])?;
    let kind = kind.to_owned();

    let vertex = |tok: &Tok| -> Result<usize, ParseError> {
        let v = number(tok)?;
        if v >= n {
            return tok.fail(format!("vertex {v} out of range (n = {n})"));
        }
        Ok(v)
    };

    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut s_decl: Option<(usize, Tok)> = None;
    let mut t_decl: Option<(usize, Tok)> = None;
    let mut terminal_set: Option<VertexSet> = None;
    let mut groups: Vec<VertexSet> = Vec::new();

    for toks in rest {
        let first = toks[0];
        match first.text {
            "p" => return first.fail("duplicate 'p' header"),
            "e" => {
                if toks.len() != 3 {
                    return first.fail("expected 'e <u> <v>'");
                }
                let u = vertex(&toks[1])?;
                let v = vertex(&toks[2])?;
                if u == v {
                    return toks[2].fail(format!("self-loop on vertex {u}"));
                }
                let edge = (u.min(v), u.max(v));
                if edges.contains(&edge) {
                    return first.fail(format!("duplicate edge {} {}", edge.0, edge.1));
                }
                if edges.len() == m {
                    return first.fail(format!("more than the declared {m} edges"));
                }
                edges.push(edge);
            }
            "s" | "t" if kind == "cvs" => {
                if toks.len() != 2 {
                    return first.fail(format!("expected '{} <id>'", first.text));
                }
                let id = vertex(&toks[1])?;
                let slot = if first.text == "s" { &mut s_decl } else { &mut t_decl };
                if slot.is_some() {
                    return first.fail(format!("duplicate '{}' line", first.text));
                }
                *slot = Some((id, toks[1]));
            }
            "R" if kind == "steiner" => {
                if terminal_set.is_some() {
                    return first.fail("duplicate 'R' line");
                }
                if toks.len() < 3 {
                    return first.fail("expected 'R <id> <id> ...' with at least two ids");
                }
                let mut set = VertexSet::new();
                for tok in &toks[1..] {
                    let id = vertex(tok)?;
                    if !set.insert(id) {
                        return tok.fail(format!("terminal {id} listed twice"));
                    }
                }
                terminal_set = Some(set);
            }
            "g" if kind == "gsteiner" => {
                if toks.len() < 3 {
                    return first.fail("expected 'g <i> <id> ...' with at least one member");
                }
                let index = number(&toks[1])?;
                if index != groups.len() + 1 {
                    return toks[1].fail(format!(
                        "group index {index} out of order (expected {})",
                        groups.len() + 1
                    ));
                }
                let mut group = VertexSet::new();
                for tok in &toks[2..] {
                    let id = vertex(tok)?;
                    if !group.insert(id) {
                        return tok.fail(format!("group member {id} listed twice"));
                    }
                }
                groups.push(group);
            }
            "s" | "t" | "R" | "g" => {
                return first.fail(format!(
                    "unexpected '{}' line in a {kind} instance",
                    first.text
                ));
            }
            other => return first.fail(format!("unknown line kind '{other}'")),
        }
    }

    if edges.len() != m {
        return header[3].fail(format!("header declares {m} edges, found {}", edges.len()));
    }
    let graph = Graph::new(n, &edges).map_err(|e| fail_eof(&format!("invalid graph: {e}")))?;

    match kind.as_str() {
        "cvs" => {
            let (s, s_tok) = s_decl.ok_or_else(|| fail_eof("missing 's' line"))?;
            let (t, t_tok) = t_decl.ok_or_else(|| fail_eof("missing 't' line"))?;
            let later = if t_tok.line >= s_tok.line { t_tok } else { s_tok };
            if s == t {
                return later.fail("terminals coincide");
            }
            if graph.has_edge(s, t) {
                return later.fail(format!("terminals {s} and {t} are adjacent"));
            }
            let graph = graph
                .with_terminals(s, t)
                .map_err(|e| fail_eof(&format!("invalid terminals: {e}")))?;
            Ok(ParsedInstance::Cvs(graph))
        }
        "steiner" => {
            let terminals = terminal_set.ok_or_else(|| fail_eof("missing 'R' line"))?;
            // The file format carries no budget; commands derive one.
            let instance = SteinerInstance::new(graph, terminals, SteinerBudget::Edges(0))
                .map_err(|e| fail_eof(&format!("invalid instance: {e}")))?;
            Ok(ParsedInstance::Steiner(instance))
        }
        _ => {
            if groups.is_empty() {
                return Err(fail_eof("missing 'g' lines"));
            }
            let instance = GroupSteinerInstance::new(graph, groups, 0)
                .map_err(|e| fail_eof(&format!("invalid instance: {e}")))?;
            Ok(ParsedInstance::GroupSteiner(instance))
        }
    }
}

/// Emits the canonical text form: header, terminal/group lines, then edges
/// sorted ascending. Canonical output of a parse re-parses to an equal
/// value.
pub fn serialize(instance: &ParsedInstance) -> String {
    use std::fmt::Write;

    let mut out = String::new();
    let edge_lines = |g: &Graph, out: &mut String| {
        let mut edges = g.edges();
        edges.sort_unstable();
        for (u, v) in edges {
            writeln!(out, "e {u} {v}").unwrap();
        }
    };
    match instance {
        ParsedInstance::Cvs(g) => {
            let (s, t) = g.terminals().expect("cvs instances carry terminals");
            writeln!(out, "p cvs {} {}", g.n(), g.edge_count()).unwrap();
            writeln!(out, "s {s}").unwrap();
            writeln!(out, "t {t}").unwrap();
            edge_lines(g, &mut out);
        }
        ParsedInstance::Steiner(inst) => {
            writeln!(out, "p steiner {} {}", inst.graph.n(), inst.graph.edge_count()).unwrap();
            let ids: Vec<String> = inst.terminals.iter().map(|v| v.to_string()).collect();
            writeln!(out, "R {}", ids.join(" ")).unwrap();
            edge_lines(&inst.graph, &mut out);
        }
        ParsedInstance::GroupSteiner(inst) => {
            writeln!(out, "p gsteiner {} {}", inst.graph.n(), inst.graph.edge_count()).unwrap();
            for (i, group) in inst.groups.iter().enumerate() {
                let ids: Vec<String> = group.iter().map(|v| v.to_string()).collect();
                writeln!(out, "g {} {}", i + 1, ids.join(" ")).unwrap();
            }
            edge_lines(&inst.graph, &mut out);
        }
    }
    out
}

/// The property suite speaks [`Instance`]; the bridge both ways lets the
/// CLI serialize counterexamples and re-check re-parsed ones.
pub fn to_suite_instance(parsed: ParsedInstance) -> Instance {
    match parsed {
        ParsedInstance::Cvs(g) => Instance::Cvs(g),
        ParsedInstance::Steiner(inst) => Instance::Steiner(inst),
        ParsedInstance::GroupSteiner(inst) => Instance::GroupSteiner(inst),
    }
}

pub fn from_suite_instance(instance: &Instance) -> ParsedInstance {
    match instance {
        Instance::Cvs(g) => ParsedInstance::Cvs(g.clone()),
        Instance::Steiner(inst) => ParsedInstance::Steiner(inst.clone()),
        Instance::GroupSteiner(inst) => ParsedInstance::GroupSteiner(inst.clone()),
    }
}
