//! Simple undirected graphs whose vertices carry a red/white/black colour.
//!
//! Vertex ids are stable: deleting a vertex leaves a hole and ids handed out
//! by [`Graph::add_vertex`] are strictly increasing, so a rule trace can refer
//! to vertices unambiguously across the whole reduction.

mod biclique;
mod degeneracy;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use biclique::{common_black_neighbors, common_neighbors, contains_kij, Biclique};
pub use degeneracy::{degeneracy_ordering, degeneracy_ordering_where, DegeneracyOrdering};

pub type VertexId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    /// Forced into the solution.
    Red,
    /// Already dominated.
    White,
    /// Still to be dominated.
    Black,
}

impl Color {
    pub fn letter(self) -> char {
        match self {
            Color::Red => 'R',
            Color::White => 'W',
            Color::Black => 'B',
        }
    }

    pub fn from_letter(c: &str) -> Option<Color> {
        match c {
            "R" => Some(Color::Red),
            "W" => Some(Color::White),
            "B" => Some(Color::Black),
            _ => None,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Slot {
    color: Color,
    adj: BTreeSet<VertexId>,
}

/// Coloured simple graph. A plain graph is one where every vertex is black.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    slots: Vec<Option<Slot>>,
    num_vertices: usize,
    num_edges: usize,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// `n` black vertices with ids `0..n` and no edges.
    pub fn with_vertices(n: usize) -> Self {
        let mut g = Self::new();
        for _ in 0..n {
            g.add_vertex(Color::Black);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut g = Self::with_vertices(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.num_edges
    }

    pub fn is_empty(&self) -> bool {
        self.num_vertices == 0
    }

    /// The id the next call to [`Graph::add_vertex`] will return.
    pub fn next_fresh_id(&self) -> VertexId {
        self.slots.len()
    }

    /// True when live ids are exactly `0..num_vertices()`.
    pub fn is_compact(&self) -> bool {
        self.slots.len() == self.num_vertices
    }

    pub fn contains(&self, v: VertexId) -> bool {
        matches!(self.slots.get(v), Some(Some(_)))
    }

    fn slot(&self, v: VertexId) -> Result<&Slot> {
        self.slots
            .get(v)
            .and_then(Option::as_ref)
            .ok_or(Error::UnknownVertex(v))
    }

    fn slot_mut(&mut self, v: VertexId) -> Result<&mut Slot> {
        self.slots
            .get_mut(v)
            .and_then(Option::as_mut)
            .ok_or(Error::UnknownVertex(v))
    }

    pub fn add_vertex(&mut self, color: Color) -> VertexId {
        let id = self.slots.len();
        self.slots.push(Some(Slot {
            color,
            adj: BTreeSet::new(),
        }));
        self.num_vertices += 1;
        id
    }

    /// Removes `v` together with its incident edges.
    pub fn delete_vertex(&mut self, v: VertexId) -> Result<()> {
        let slot = self
            .slots
            .get_mut(v)
            .and_then(Option::take)
            .ok_or(Error::UnknownVertex(v))?;
        for u in &slot.adj {
            if let Some(Some(other)) = self.slots.get_mut(*u) {
                other.adj.remove(&v);
            }
        }
        self.num_edges -= slot.adj.len();
        self.num_vertices -= 1;
        Ok(())
    }

    /// Inserts the edge `{u, v}`. Returns `false` if it was already present.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<bool> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.slot(v)?;
        let inserted = self.slot_mut(u)?.adj.insert(v);
        if inserted {
            self.slot_mut(v)?.adj.insert(u);
            self.num_edges += 1;
        }
        Ok(inserted)
    }

    /// Returns whether the edge was present.
    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) -> Result<bool> {
        self.slot(v)?;
        let removed = self.slot_mut(u)?.adj.remove(&v);
        if removed {
            self.slot_mut(v)?.adj.remove(&u);
            self.num_edges -= 1;
        }
        Ok(removed)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.slot(u).map(|s| s.adj.contains(&v)).unwrap_or(false)
    }

    /// Sets the colour of `v` and returns the previous one.
    pub fn set_color(&mut self, v: VertexId, color: Color) -> Result<Color> {
        let slot = self.slot_mut(v)?;
        Ok(std::mem::replace(&mut slot.color, color))
    }

    pub fn color(&self, v: VertexId) -> Option<Color> {
        self.slot(v).ok().map(|s| s.color)
    }

    pub fn is_color(&self, v: VertexId, color: Color) -> bool {
        self.color(v) == Some(color)
    }

    /// Live vertex ids in ascending order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.slots
            .iter()
            .enumerate()
            .filter_map(|(v, s)| s.as_ref().map(|_| v))
    }

    pub fn vertices_with(&self, color: Color) -> impl Iterator<Item = VertexId> + '_ {
        self.slots
            .iter()
            .enumerate()
            .filter_map(move |(v, s)| match s {
                Some(s) if s.color == color => Some(v),
                _ => None,
            })
    }

    pub fn count_color(&self, color: Color) -> usize {
        self.vertices_with(color).count()
    }

    /// Neighbours of `v` in ascending order; empty for unknown ids.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.slot(v)
            .ok()
            .into_iter()
            .flat_map(|s| s.adj.iter().copied())
    }

    pub fn neighbor_set(&self, v: VertexId) -> Result<&BTreeSet<VertexId>> {
        Ok(&self.slot(v)?.adj)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.slot(v).map(|s| s.adj.len()).unwrap_or(0)
    }

    pub fn black_neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.neighbors(v)
            .filter(move |&u| self.is_color(u, Color::Black))
    }

    pub fn black_degree(&self, v: VertexId) -> usize {
        self.black_neighbors(v).count()
    }

    /// Edges `(u, v)` with `u < v`, sorted ascending.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Copy of the graph with every vertex black.
    pub fn all_black(&self) -> Graph {
        let mut g = self.clone();
        for slot in g.slots.iter_mut().flatten() {
            slot.color = Color::Black;
        }
        g
    }

    /// Relabels live vertices to `0..n`, preserving their relative order.
    /// Returns the relabelled graph and, for each new id, the old id.
    pub fn compacted(&self) -> (Graph, Vec<VertexId>) {
        let old_ids: Vec<VertexId> = self.vertices().collect();
        let mut new_id = vec![usize::MAX; self.slots.len()];
        for (new, &old) in old_ids.iter().enumerate() {
            new_id[old] = new;
        }
        let slots = old_ids
            .iter()
            .map(|&old| {
                let slot = self.slots[old].as_ref().expect("live vertex");
                Some(Slot {
                    color: slot.color,
                    adj: slot.adj.iter().map(|&u| new_id[u]).collect(),
                })
            })
            .collect();
        let g = Graph {
            slots,
            num_vertices: self.num_vertices,
            num_edges: self.num_edges,
        };
        (g, old_ids)
    }

    /// True if every neighbour of every red vertex is white.
    pub fn reds_see_only_white(&self) -> bool {
        self.vertices_with(Color::Red)
            .all(|r| self.neighbors(r).all(|v| self.is_color(v, Color::White)))
    }

    pub fn first_red_black_edge(&self) -> Option<(VertexId, VertexId)> {
        self.vertices_with(Color::Red)
            .find_map(|r| self.black_neighbors(r).next().map(|b| (r, b)))
    }
}
