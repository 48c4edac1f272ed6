//! Text and JSON serialization of signed graphs.
//!
//! Text format: a header line `n m`, then `m` lines `u v s` with
//! `0 <= u < v < n` and `s` one of `+`/`-`, sorted by `(u, v)`.
//! Lines starting with `#` are comments.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};

pub fn to_text(g: &SignedGraph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v, s) in g.edges() {
        out.push_str(&format!("{} {} {}\n", u, v, if s.is_negative() { '-' } else { '+' }));
    }
    out
}

pub fn from_text(text: &str) -> Result<SignedGraph> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let parse_err = |line: usize, msg: String| Error::Parse { line, msg };

    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header".into()))?;
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.len() != 2 {
        return Err(parse_err(hline, format!("expected `n m`, found `{header}`")));
    }
    let n: usize = head[0].parse().map_err(|_| parse_err(hline, format!("bad vertex count `{}`", head[0])))?;
    let m: usize = head[1].parse().map_err(|_| parse_err(hline, format!("bad edge count `{}`", head[1])))?;

    let mut edges = Vec::with_capacity(m);
    for (ln, line) in lines {
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.len() != 3 {
            return Err(parse_err(ln, format!("expected `u v s`, found `{line}`")));
        }
        let u: usize = f[0].parse().map_err(|_| parse_err(ln, format!("bad vertex `{}`", f[0])))?;
        let v: usize = f[1].parse().map_err(|_| parse_err(ln, format!("bad vertex `{}`", f[1])))?;
        let s = match f[2] {
            "+" => Sign::Positive,
            "-" => Sign::Negative,
            other => return Err(parse_err(ln, format!("bad sign `{other}`"))),
        };
        if u >= v || v >= n {
            return Err(parse_err(ln, format!("edge ({u}, {v}) violates 0 <= u < v < {n}")));
        }
        edges.push((u, v, s));
    }
    if edges.len() != m {
        return Err(parse_err(0, format!("header declares {m} edges, found {}", edges.len())));
    }
    SignedGraph::from_edges(n, edges)
}

/// JSON mirror: `{"n": 4, "edges": [[0, 1, -1], ...]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize, i8)>,
}

impl From<&SignedGraph> for GraphJson {
    fn from(g: &SignedGraph) -> Self {
        GraphJson { n: g.order(), edges: g.edges().map(|(u, v, s)| (u, v, s.value())).collect() }
    }
}

impl TryFrom<GraphJson> for SignedGraph {
    type Error = Error;
    fn try_from(j: GraphJson) -> Result<SignedGraph> {
        let mut edges = Vec::with_capacity(j.edges.len());
        for (u, v, s) in j.edges {
            let sign = Sign::from_value(s)
                .ok_or_else(|| Error::Parse { line: 0, msg: format!("bad sign {s} on edge ({u}, {v})") })?;
            edges.push((u, v, sign));
        }
        SignedGraph::from_edges(j.n, edges)
    }
}

pub fn to_json(g: &SignedGraph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph JSON is always serializable")
}

pub fn from_json(text: &str) -> Result<SignedGraph> {
    let j: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })?;
    SignedGraph::try_from(j)
}

/// Parse either format, choosing JSON when the first non-blank character is `{`.
pub fn parse_any(text: &str) -> Result<SignedGraph> {
    if text.trim_start().starts_with('{') {
        from_json(text)
    } else {
        from_text(text)
    }
}

/// Round to 12 significant digits for stable report output.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}
