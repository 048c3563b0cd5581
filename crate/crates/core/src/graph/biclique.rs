use std::collections::BTreeSet;

use super::{Color, Graph, VertexId};
use crate::error::{Error, Result};

/// A complete bipartite subgraph: every `left`–`right` pair is adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Biclique {
    pub left: Vec<VertexId>,
    pub right: Vec<VertexId>,
}

/// Vertices adjacent to every member of `set`, of any colour.
pub fn common_neighbors(g: &Graph, set: &[VertexId]) -> Result<BTreeSet<VertexId>> {
    let (first, rest) = set
        .split_first()
        .ok_or_else(|| Error::InvalidParams("empty vertex set".into()))?;
    let mut common = g.neighbor_set(*first)?.clone();
    for &u in rest {
        let adj = g.neighbor_set(u)?;
        common.retain(|v| adj.contains(v));
    }
    Ok(common)
}

/// Black vertices adjacent to every member of `set`.
pub fn common_black_neighbors(g: &Graph, set: &[VertexId]) -> Result<BTreeSet<VertexId>> {
    let mut common = common_neighbors(g, set)?;
    common.retain(|&v| g.is_color(v, Color::Black));
    debug_assert!(set.iter().all(|u| !common.contains(u)));
    Ok(common)
}

/// Searches for a `K_{i,j}` subgraph by enumerating `i`-subsets in
/// lexicographic order and testing whether they have `j` common neighbours.
pub fn contains_kij(g: &Graph, i: usize, j: usize) -> Result<Option<Biclique>> {
    if i == 0 || j < i {
        return Err(Error::InvalidParams(format!(
            "need 1 <= i <= j, got i={i}, j={j}"
        )));
    }
    if i > g.num_vertices() {
        return Ok(None);
    }
    let vertices: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) >= j).collect();
    let mut chosen = Vec::with_capacity(i);
    Ok(search(g, &vertices, 0, i, j, &mut chosen, None))
}

fn search(
    g: &Graph,
    vertices: &[VertexId],
    start: usize,
    i: usize,
    j: usize,
    chosen: &mut Vec<VertexId>,
    common: Option<&BTreeSet<VertexId>>,
) -> Option<Biclique> {
    if chosen.len() == i {
        let common = common.expect("i >= 1");
        return Some(Biclique {
            left: chosen.clone(),
            right: common.iter().copied().take(j).collect(),
        });
    }
    let remaining = i - chosen.len();
    for idx in start..vertices.len() {
        if vertices.len() - idx < remaining {
            break;
        }
        let v = vertices[idx];
        let adj = g.neighbor_set(v).expect("live vertex");
        let next: BTreeSet<VertexId> = match common {
            None => adj.clone(),
            Some(c) => c.intersection(adj).copied().collect(),
        };
        if next.len() < j {
            continue;
        }
        chosen.push(v);
        let found = search(g, vertices, idx + 1, i, j, chosen, Some(&next));
        chosen.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}
