//! Audit log of rule firings. Replaying a trace on the input graph
//! reproduces every intermediate graph of a kernelization run.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Color, Graph, VertexId};

/// Rule identifiers, ordered as the kernelization applies them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    One,
    Two(usize),
    Three,
    Four,
    Five,
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleId::One => write!(f, "1"),
            RuleId::Two(p) => write!(f, "2.{p}"),
            RuleId::Three => write!(f, "3"),
            RuleId::Four => write!(f, "4"),
            RuleId::Five => write!(f, "5"),
        }
    }
}

impl Serialize for RuleId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Edit {
    Recolor {
        vertex: VertexId,
        from: Color,
        to: Color,
    },
    Delete {
        vertex: VertexId,
    },
    AddVertex {
        vertex: VertexId,
        color: Color,
    },
    AddEdge {
        u: VertexId,
        v: VertexId,
    },
    RemoveEdge {
        u: VertexId,
        v: VertexId,
    },
}

/// One rule firing: the vertices that triggered it and the edits it made.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub rule: RuleId,
    pub read: Vec<VertexId>,
    pub edits: Vec<Edit>,
}

impl TraceEntry {
    pub fn apply(&self, g: &mut Graph) -> Result<()> {
        for edit in &self.edits {
            match *edit {
                Edit::Recolor { vertex, from, to } => {
                    let old = g.set_color(vertex, to)?;
                    if old != from {
                        return Err(Error::Replay(format!(
                            "vertex {vertex} was {old}, trace expects {from}"
                        )));
                    }
                }
                Edit::Delete { vertex } => g.delete_vertex(vertex)?,
                Edit::AddVertex { vertex, color } => {
                    let id = g.add_vertex(color);
                    if id != vertex {
                        return Err(Error::Replay(format!(
                            "fresh id {id}, trace expects {vertex}"
                        )));
                    }
                }
                Edit::AddEdge { u, v } => {
                    g.add_edge(u, v)?;
                }
                Edit::RemoveEdge { u, v } => {
                    if !g.remove_edge(u, v)? {
                        return Err(Error::Replay(format!("edge {u} {v} missing")));
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct RuleTrace {
    entries: Vec<TraceEntry>,
}

impl RuleTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn entries(&self) -> &[TraceEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn push(&mut self, entry: TraceEntry) {
        self.entries.push(entry);
    }

    pub fn count(&self, rule: RuleId) -> usize {
        self.entries.iter().filter(|e| e.rule == rule).count()
    }

    pub fn replay(&self, input: &Graph) -> Result<Graph> {
        let mut g = input.clone();
        for e in &self.entries {
            e.apply(&mut g)?;
        }
        Ok(g)
    }

    /// One JSON object per line.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&serde_json::to_string(e).expect("trace entries serialise"));
            out.push('\n');
        }
        out
    }
}

/// Applies edits to a graph while recording them as one trace entry.
pub(crate) struct Firing<'a> {
    g: &'a mut Graph,
    entry: TraceEntry,
}

impl<'a> Firing<'a> {
    pub fn new(g: &'a mut Graph, rule: RuleId, read: Vec<VertexId>) -> Self {
        Self {
            g,
            entry: TraceEntry {
                rule,
                read,
                edits: Vec::new(),
            },
        }
    }

    pub fn recolor(&mut self, vertex: VertexId, to: Color) {
        let from = self.g.set_color(vertex, to).expect("live vertex");
        if from != to {
            self.entry.edits.push(Edit::Recolor { vertex, from, to });
        }
    }

    pub fn delete(&mut self, vertex: VertexId) {
        self.g.delete_vertex(vertex).expect("live vertex");
        self.entry.edits.push(Edit::Delete { vertex });
    }

    pub fn add_vertex(&mut self, color: Color) -> VertexId {
        let vertex = self.g.add_vertex(color);
        self.entry.edits.push(Edit::AddVertex { vertex, color });
        vertex
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) {
        if self.g.add_edge(u, v).expect("live endpoints") {
            self.entry.edits.push(Edit::AddEdge { u, v });
        }
    }

    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) {
        if self.g.remove_edge(u, v).expect("live endpoints") {
            self.entry.edits.push(Edit::RemoveEdge { u, v });
        }
    }

    /// Colours every isolated black vertex red.
    pub fn isolated_black_to_red(&mut self) -> usize {
        let isolated: Vec<VertexId> = self
            .g
            .vertices_with(Color::Black)
            .filter(|&v| self.g.degree(v) == 0)
            .collect();
        for &v in &isolated {
            self.recolor(v, Color::Red);
        }
        isolated.len()
    }

    pub fn finish(self, trace: &mut RuleTrace) {
        trace.push(self.entry);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_order_matches_pipeline() {
        let mut ids = vec![
            RuleId::Five,
            RuleId::Two(2),
            RuleId::One,
            RuleId::Three,
            RuleId::Two(1),
            RuleId::Four,
        ];
        ids.sort();
        assert_eq!(
            ids,
            vec![
                RuleId::One,
                RuleId::Two(1),
                RuleId::Two(2),
                RuleId::Three,
                RuleId::Four,
                RuleId::Five
            ]
        );
        assert_eq!(RuleId::Two(3).to_string(), "2.3");
    }

    #[test]
    fn replay_reproduces_edits() {
        let input = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let mut g = input.clone();
        let mut trace = RuleTrace::new();
        let mut f = Firing::new(&mut g, RuleId::Two(1), vec![0]);
        let x = f.add_vertex(Color::Black);
        f.add_edge(0, x);
        f.recolor(1, Color::White);
        f.delete(2);
        f.finish(&mut trace);
        assert_eq!(trace.replay(&input).unwrap(), g);
    }

    #[test]
    fn replay_detects_mismatch() {
        let input = Graph::with_vertices(1);
        let mut trace = RuleTrace::new();
        trace.push(TraceEntry {
            rule: RuleId::One,
            read: vec![0],
            edits: vec![Edit::Recolor {
                vertex: 0,
                from: Color::White,
                to: Color::Red,
            }],
        });
        assert!(matches!(trace.replay(&input), Err(Error::Replay(_))));
    }

    #[test]
    fn json_lines_format() {
        let mut trace = RuleTrace::new();
        trace.push(TraceEntry {
            rule: RuleId::Two(1),
            read: vec![0, 1],
            edits: vec![Edit::AddEdge { u: 0, v: 2 }],
        });
        assert_eq!(
            trace.to_json_lines(),
            "{\"rule\":\"2.1\",\"read\":[0,1],\"edits\":[{\"op\":\"add_edge\",\"u\":0,\"v\":2}]}\n"
        );
    }
}
