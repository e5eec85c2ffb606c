//! Text formats: 0-indexed edge lists and 1-indexed DIMACS.
//!
//! Edge list: one `u v` pair per line, `#` starts a comment. A comment of the
//! form `# vertices N` fixes the vertex count so that isolated vertices
//! survive a round trip; otherwise `n` is one more than the largest id.
//!
//! DIMACS: `c` comment lines, a `p edge <n> <m>` header, then `e <u> <v>`.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Dimacs,
}

impl Format {
    /// `.dimacs`, `.col` and `.clq` files are DIMACS; everything else is an edge list.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some("dimacs" | "col" | "clq") => Format::Dimacs,
            _ => Format::EdgeList,
        }
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge-list" | "edgelist" | "el" => Ok(Format::EdgeList),
            "dimacs" => Ok(Format::Dimacs),
            other => Err(Error::InvalidParameter(format!("unknown format `{other}`"))),
        }
    }
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_id(tok: &str, line: usize) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| parse_err(line, format!("expected a vertex id, found `{tok}`")))
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(Vertex, Vertex, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let (body, comment) = match raw.split_once('#') {
            Some((b, c)) => (b, Some(c)),
            None => (raw, None),
        };
        if let Some(c) = comment {
            let mut toks = c.split_whitespace();
            if toks.next() == Some("vertices") {
                if let Some(t) = toks.next() {
                    declared = Some(parse_id(t, lineno)?);
                }
            }
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        match toks.as_slice() {
            [] => continue,
            [u, v] => {
                let (u, v) = (parse_id(u, lineno)?, parse_id(v, lineno)?);
                if u == v {
                    return Err(parse_err(lineno, format!("self-loop on vertex {u}")));
                }
                edges.push((u, v, lineno));
            }
            _ => return Err(parse_err(lineno, "expected exactly two vertex ids")),
        }
    }
    let max_id = edges.iter().map(|&(u, v, _)| u.max(v) + 1).max().unwrap_or(0);
    let n = match declared {
        Some(d) => {
            if let Some(&(u, v, line)) = edges.iter().find(|&&(u, v, _)| u >= d || v >= d) {
                return Err(parse_err(
                    line,
                    format!("vertex id {} out of range for {d} vertices", u.max(v)),
                ));
            }
            d
        }
        None => max_id,
    };
    Graph::from_edges(n, edges.into_iter().map(|(u, v, _)| (u, v)))
}

fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        match toks.as_slice() {
            [] => continue,
            ["c", ..] => continue,
            ["p", _kind, nv, _m] => {
                if n.is_some() {
                    return Err(parse_err(lineno, "duplicate problem line"));
                }
                n = Some(parse_id(nv, lineno)?);
            }
            ["e", u, v] => {
                let Some(nv) = n else {
                    return Err(parse_err(lineno, "edge line before the problem line"));
                };
                let (u, v) = (parse_id(u, lineno)?, parse_id(v, lineno)?);
                for w in [u, v] {
                    if w == 0 || w > nv {
                        return Err(parse_err(
                            lineno,
                            format!("vertex id {w} out of range 1..={nv}"),
                        ));
                    }
                }
                if u == v {
                    return Err(parse_err(lineno, format!("self-loop on vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            _ => return Err(parse_err(lineno, format!("unrecognised line `{}`", raw.trim()))),
        }
    }
    let n = n.ok_or_else(|| parse_err(0, "missing `p edge <n> <m>` line"))?;
    Graph::from_edges(n, edges)
}

pub fn read_graph(path: &Path) -> std::result::Result<Graph, ReadError> {
    let text = std::fs::read_to_string(path)?;
    Ok(parse_graph(&text, Format::from_path(path))?)
}

#[derive(Debug, thiserror::Error)]
pub enum ReadError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Graph(#[from] Error),
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "# vertices {}", g.n()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn to_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.n(), g.m()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimacs_p3() {
        let g = parse_graph("p edge 3 2\ne 1 2\ne 2 3\n", Format::Dimacs).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn edge_list_c4() {
        let g = parse_graph("0 1\n1 2\n2 3\n3 0\n", Format::EdgeList).unwrap();
        assert_eq!((g.n(), g.m()), (4, 4));
    }

    #[test]
    fn dimacs_self_loop_is_rejected_with_line() {
        let err = parse_graph("p edge 2 1\ne 1 1\n", Format::Dimacs).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn malformed_lines() {
        assert!(matches!(
            parse_graph("0 1\n1 x\n", Format::EdgeList),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("0 1 2\n", Format::EdgeList),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_graph("p edge 2 1\ne 1 3\n", Format::Dimacs),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(parse_graph("e 1 2\n", Format::Dimacs).is_err());
    }

    #[test]
    fn comments_and_vertex_hint() {
        let g = parse_graph("# vertices 5\n0 1 # trailing\n\n# note\n", Format::EdgeList).unwrap();
        assert_eq!((g.n(), g.m()), (5, 1));
        assert!(parse_graph("# vertices 2\n0 4\n", Format::EdgeList).is_err());
    }

    #[test]
    fn serializers_round_trip() {
        let g = Graph::from_edges(6, [(0, 1), (2, 4)]).unwrap();
        assert_eq!(parse_graph(&to_edge_list(&g), Format::EdgeList).unwrap(), g);
        assert_eq!(parse_graph(&to_dimacs(&g), Format::Dimacs).unwrap(), g);
    }
}
