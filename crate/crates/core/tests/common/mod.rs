//! Brute-force reference answers by bitmask enumeration. Deliberately
//! naive and independent of the library's solvers.

#![allow(dead_code)]

use domkernel::{Color, Graph};

/// Compact ids required; at most 24 vertices.
fn masks(g: &Graph) -> (usize, Vec<u32>) {
    assert!(g.is_compact() && g.num_vertices() <= 24);
    let n = g.num_vertices();
    let closed = (0..n)
        .map(|v| g.neighbors(v).fold(1u32 << v, |m, u| m | 1 << u))
        .collect();
    (n, closed)
}

fn color_mask(g: &Graph, c: Color) -> u32 {
    g.vertices_with(c).fold(0, |m, v| m | 1 << v)
}

fn search(n: usize, closed: &[u32], k: usize, accept: impl Fn(u32, u32) -> bool) -> bool {
    // `accept(set, dominated)`
    (0u32..1 << n).any(|s| {
        s.count_ones() as usize <= k && {
            let dom = (0..n)
                .filter(|v| s >> v & 1 == 1)
                .fold(0, |m, v| m | closed[v]);
            accept(s, dom)
        }
    })
}

pub fn dominating(g: &Graph, k: usize) -> bool {
    let (n, closed) = masks(g);
    let all = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    search(n, &closed, k, |_, dom| dom & all == all)
}

pub fn rwb_dominating(g: &Graph, k: usize) -> bool {
    let (n, closed) = masks(g);
    let red = color_mask(g, Color::Red);
    let black = color_mask(g, Color::Black);
    search(n, &closed, k, |s, dom| {
        s & red == red && dom & black == black
    })
}

pub fn independent_dominating(g: &Graph, k: usize) -> bool {
    let (n, closed) = masks(g);
    let all = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    search(n, &closed, k, |s, dom| {
        dom & all == all && (0..n).all(|v| s >> v & 1 == 0 || (closed[v] & s) == 1 << v)
    })
}

pub fn domination_number(g: &Graph) -> usize {
    (0..=g.num_vertices()).find(|&k| dominating(g, k)).unwrap()
}

pub fn independent_domination_number(g: &Graph) -> usize {
    (0..=g.num_vertices())
        .find(|&k| independent_dominating(g, k))
        .unwrap()
}

/// Any disjoint `A`, `B` with `|A| = i`, `|B| = j` and all `A`–`B` edges.
pub fn has_kij(g: &Graph, i: usize, j: usize) -> bool {
    let (n, _) = masks(g);
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).fold(0, |m, u| m | 1 << u))
        .collect();
    (0u32..1 << n)
        .filter(|a| a.count_ones() as usize == i)
        .any(|a| {
            let common = (0..n)
                .filter(|v| a >> v & 1 == 1)
                .fold(u32::MAX, |m, v| m & adj[v]);
            (0u32..1 << n).any(|b| b.count_ones() as usize == j && b & a == 0 && b & !common == 0)
        })
}

/// Largest minimum degree over all non-empty induced subgraphs.
pub fn degeneracy(g: &Graph) -> usize {
    let (n, _) = masks(g);
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).fold(0, |m, u| m | 1 << u))
        .collect();
    (1u32..1 << n)
        .map(|s| {
            (0..n)
                .filter(|v| s >> v & 1 == 1)
                .map(|v| (adj[v] & s).count_ones() as usize)
                .min()
                .unwrap()
        })
        .max()
        .unwrap_or(0)
}

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).unwrap()
}
