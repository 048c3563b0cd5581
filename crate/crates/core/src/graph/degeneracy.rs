use std::collections::BTreeSet;

use super::{Graph, VertexId};

/// A vertex ordering in which every vertex has at most `degeneracy`
/// neighbours later in the order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyOrdering {
    pub order: Vec<VertexId>,
    pub degeneracy: usize,
}

impl DegeneracyOrdering {
    /// `position[v]` for every id below `g.next_fresh_id()`; `usize::MAX`
    /// for ids outside the ordering.
    pub fn positions(&self, g: &Graph) -> Vec<usize> {
        let mut pos = vec![usize::MAX; g.next_fresh_id()];
        for (p, &v) in self.order.iter().enumerate() {
            pos[v] = p;
        }
        pos
    }

    /// Number of neighbours of each ordered vertex that come later in the order.
    pub fn forward_degrees(&self, g: &Graph) -> Vec<usize> {
        let pos = self.positions(g);
        self.order
            .iter()
            .enumerate()
            .map(|(p, &v)| {
                g.neighbors(v)
                    .filter(|&u| pos[u] != usize::MAX && pos[u] > p)
                    .count()
            })
            .collect()
    }

    /// Later neighbours of the vertex at `position`, ascending by id.
    pub fn forward_neighbors(&self, g: &Graph, pos: &[usize], position: usize) -> Vec<VertexId> {
        let v = self.order[position];
        g.neighbors(v)
            .filter(|&u| pos[u] != usize::MAX && pos[u] > position)
            .collect()
    }
}

pub fn degeneracy_ordering(g: &Graph) -> DegeneracyOrdering {
    degeneracy_ordering_where(g, |_| true)
}

/// Min-degree peeling restricted to the vertices accepted by `keep`. Ties
/// are broken by smallest id.
pub fn degeneracy_ordering_where<F>(g: &Graph, keep: F) -> DegeneracyOrdering
where
    F: Fn(VertexId) -> bool,
{
    let bound = g.next_fresh_id();
    let mut alive = vec![false; bound];
    for v in g.vertices().filter(|&v| keep(v)) {
        alive[v] = true;
    }
    let mut degree = vec![0usize; bound];
    let mut queue = BTreeSet::new();
    for v in g.vertices().filter(|&v| alive[v]) {
        degree[v] = g.neighbors(v).filter(|&u| alive[u]).count();
        queue.insert((degree[v], v));
    }

    let mut order = Vec::with_capacity(queue.len());
    let mut degeneracy = 0;
    while let Some((d, v)) = queue.pop_first() {
        degeneracy = degeneracy.max(d);
        alive[v] = false;
        order.push(v);
        for u in g.neighbors(v) {
            if alive[u] {
                queue.remove(&(degree[u], u));
                degree[u] -= 1;
                queue.insert((degree[u], u));
            }
        }
    }
    DegeneracyOrdering { order, degeneracy }
}
