//! Plain-text graph files.
//!
//! ```text
//! # comment
//! n m
//! u v        (m edge lines, 0-based ids)
//! c u R|W|B  (optional, default B)
//! k 3        (optional budget)
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Color, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    pub k: Option<usize>,
}

impl GraphFile {
    pub fn new(graph: Graph, k: Option<usize>) -> Self {
        Self { graph, k }
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse(text)
    }

    pub fn serialize(&self) -> String {
        serialize(&self.graph, self.k)
    }

    pub fn has_colors(&self) -> bool {
        self.graph
            .vertices()
            .any(|v| !self.graph.is_color(v, Color::Black))
    }
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn number(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| err(line, format!("expected {what}, found {tok:?}")))
}

pub fn parse(text: &str) -> Result<GraphFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(idx, l)| (idx + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing \"n m\" header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(err(hline, "header must be \"n m\""));
    }
    let n = number(toks[0], hline, "vertex count")?;
    let m = number(toks[1], hline, "edge count")?;

    let mut g = Graph::with_vertices(n);
    let mut k = None;
    let mut edges = 0;
    let mut colored = vec![false; n];
    let mut last_line = hline;
    let vertex = |tok: &str, line: usize| -> Result<usize> {
        let v = number(tok, line, "vertex id")?;
        if v >= n {
            return Err(err(line, format!("vertex {v} out of range (n = {n})")));
        }
        Ok(v)
    };

    for (line, l) in lines {
        last_line = line;
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks.as_slice() {
            ["c", v, c] => {
                let v = vertex(v, line)?;
                let color = Color::from_letter(c).ok_or_else(|| {
                    err(line, format!("unknown colour {c:?}, expected R, W or B"))
                })?;
                if std::mem::replace(&mut colored[v], true) {
                    return Err(err(line, format!("colour of vertex {v} given twice")));
                }
                g.set_color(v, color).expect("vertex in range");
            }
            ["k", kk] => {
                if k.is_some() {
                    return Err(err(line, "budget given twice"));
                }
                k = Some(number(kk, line, "budget")?);
            }
            [u, v] => {
                let (u, v) = (vertex(u, line)?, vertex(v, line)?);
                if u == v {
                    return Err(err(line, format!("self-loop at vertex {u}")));
                }
                if !g.add_edge(u, v).expect("vertices in range") {
                    return Err(err(line, format!("duplicate edge {u} {v}")));
                }
                edges += 1;
                if edges > m {
                    return Err(err(line, format!("more than the {m} edges declared")));
                }
            }
            _ => return Err(err(line, format!("unrecognised line {l:?}"))),
        }
    }
    if edges != m {
        return Err(err(
            last_line,
            format!("header declares {m} edges, found {edges}"),
        ));
    }
    Ok(GraphFile { graph: g, k })
}

/// Writes `g` with ids compacted, edges sorted, colour lines for non-black
/// vertices only and the budget last.
pub fn serialize(g: &Graph, k: Option<usize>) -> String {
    let compact;
    let g = if g.is_compact() {
        g
    } else {
        compact = g.compacted().0;
        &compact
    };
    let mut out = String::new();
    writeln!(out, "{} {}", g.num_vertices(), g.num_edges()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    for v in g.vertices() {
        let c = g.color(v).expect("live");
        if c != Color::Black {
            writeln!(out, "c {v} {c}").unwrap();
        }
    }
    if let Some(k) = k {
        writeln!(out, "k {k}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path() {
        let f = parse("3 2\n0 1\n1 2").unwrap();
        assert_eq!(f.graph, Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap());
        assert_eq!(f.k, None);
        assert!(!f.has_colors());
    }

    #[test]
    fn colours_comments_and_budget() {
        let f = parse("# c5\n2 1\n\n0 1\nc 0 R\n# trailing\nk 4\n").unwrap();
        assert_eq!(f.graph.color(0), Some(Color::Red));
        assert_eq!(f.k, Some(4));
        assert_eq!(f.serialize(), "2 1\n0 1\nc 0 R\nk 4\n");
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("2 1\n0 0", 2),
            ("2 1\n0 2", 2),
            ("3 2\n0 1\n1 0", 3),
            ("3 1\n0 1\nc 1 X", 3),
            ("3 2\n0 1", 2),
            ("x 1", 1),
            ("3 1\n0 1 2", 2),
            ("", 1),
        ];
        for (text, want) in cases {
            match parse(text) {
                Err(Error::Parse { line, .. }) => assert_eq!(line, want, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn self_loop_message() {
        assert_eq!(
            parse("2 1\n0 0").unwrap_err().to_string(),
            "line 2: self-loop at vertex 0"
        );
    }

    #[test]
    fn serialize_compacts() {
        let mut g = Graph::from_edges(4, &[(0, 3), (2, 3)]).unwrap();
        g.delete_vertex(1).unwrap();
        g.set_color(3, Color::White).unwrap();
        assert_eq!(serialize(&g, None), "3 2\n0 2\n1 2\nc 2 W\n");
    }
}
