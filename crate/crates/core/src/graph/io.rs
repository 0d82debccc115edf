use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use super::{Graph, Vertex};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphFormat {
    /// `n m` header followed by `u v` lines, 0-indexed, `#` comments.
    Edgelist,
    /// `p edge n m` header and `e u v` lines, 1-indexed, `c` comments.
    Dimacs,
}

impl std::str::FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" => Ok(GraphFormat::Edgelist),
            "dimacs" => Ok(GraphFormat::Dimacs),
            other => Err(Error::invalid(format!("unknown graph format '{other}'"))),
        }
    }
}

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| Error::Parse { line, message: format!("expected a non-negative integer, found '{tok}'") })
}

/// Reads a graph. Duplicate and reversed edge lines are merged; the header
/// edge count must match the number of edge lines.
pub fn load_graph<R: BufRead>(source: R, format: GraphFormat) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();

    for (idx, line) in source.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| Error::Parse { line: lineno, message: e.to_string() })?;
        let content = match format {
            GraphFormat::Edgelist => line.split('#').next().unwrap_or(""),
            GraphFormat::Dimacs => line.as_str(),
        };
        let toks: Vec<&str> = content.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        match format {
            GraphFormat::Edgelist => {
                if toks.len() != 2 {
                    return Err(Error::Parse { line: lineno, message: "expected two integers".into() });
                }
                let a = parse_usize(toks[0], lineno)?;
                let b = parse_usize(toks[1], lineno)?;
                match header {
                    None => header = Some((a, b)),
                    Some((n, _)) => edges.push(check_ids(a, b, n, lineno)?),
                }
            }
            GraphFormat::Dimacs => match toks[0] {
                "c" => continue,
                "p" => {
                    if header.is_some() {
                        return Err(Error::Parse { line: lineno, message: "duplicate problem line".into() });
                    }
                    if toks.len() != 4 || !matches!(toks[1], "edge" | "col") {
                        return Err(Error::Parse { line: lineno, message: "expected 'p edge n m'".into() });
                    }
                    header = Some((parse_usize(toks[2], lineno)?, parse_usize(toks[3], lineno)?));
                }
                "e" => {
                    let (n, _) = header.ok_or_else(|| Error::Parse {
                        line: lineno,
                        message: "edge line before problem line".into(),
                    })?;
                    if toks.len() != 3 {
                        return Err(Error::Parse { line: lineno, message: "expected 'e u v'".into() });
                    }
                    let a = parse_usize(toks[1], lineno)?;
                    let b = parse_usize(toks[2], lineno)?;
                    if a == 0 || b == 0 {
                        return Err(Error::Parse { line: lineno, message: "DIMACS ids are 1-indexed".into() });
                    }
                    edges.push(check_ids(a - 1, b - 1, n, lineno)?);
                }
                other => {
                    return Err(Error::Parse { line: lineno, message: format!("unknown line type '{other}'") })
                }
            },
        }
    }

    let (n, m) = header.ok_or(Error::Parse { line: 0, message: "missing header".into() })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            message: format!("header declares {m} edges but {} edge lines were found", edges.len()),
        });
    }
    Graph::from_edges(n, edges)
}

fn check_ids(u: usize, v: usize, n: usize, line: usize) -> Result<(Vertex, Vertex)> {
    for w in [u, v] {
        if w >= n {
            return Err(Error::VertexOutOfRange { vertex: w, n });
        }
    }
    if u == v {
        return Err(Error::SelfLoop(u));
    }
    let _ = line;
    Ok((u, v))
}

/// Writes the canonical edge list: header, then each edge once with `u < v`
/// in lexicographic order.
pub fn save_edge_list<W: Write>(graph: &Graph, mut out: W) -> std::io::Result<()> {
    writeln!(out, "{} {}", graph.n(), graph.m())?;
    for (u, v) in graph.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load(s: &str) -> Result<Graph> {
        load_graph(s.as_bytes(), GraphFormat::Edgelist)
    }

    #[test]
    fn edge_list_examples() {
        let g = load("3 2\n0 1\n1 2").unwrap();
        assert_eq!((g.n(), g.m()), (3, 2));
        let g = load("3 3\n0 1\n1 0\n1 2").unwrap();
        assert_eq!((g.n(), g.m()), (3, 2));
        assert_eq!(load("2 1\n0 0"), Err(Error::SelfLoop(0)));
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(load("3 1\n0 3"), Err(Error::VertexOutOfRange { vertex: 3, n: 3 })));
        assert!(matches!(load("3 1\n0 x"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(load("3 2\n0 1"), Err(Error::Parse { .. })));
        assert!(matches!(load(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = load("# header next\n4 2 # n m\n\n0 1\n# skip\n2 3\n").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn dimacs_is_one_indexed() {
        let src = "c path\np edge 3 2\ne 1 2\ne 2 3\n";
        let g = load_graph(src.as_bytes(), GraphFormat::Dimacs).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        let bad = "p edge 3 1\ne 0 1\n";
        assert!(load_graph(bad.as_bytes(), GraphFormat::Dimacs).is_err());
    }

    #[test]
    fn save_then_load_is_identity() {
        let g = crate::graph::cycle(6);
        let mut buf = Vec::new();
        save_edge_list(&g, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf.clone()).unwrap(), "6 6\n0 1\n0 5\n1 2\n2 3\n3 4\n4 5\n");
        assert_eq!(load_graph(buf.as_slice(), GraphFormat::Edgelist).unwrap(), g);
    }
}
