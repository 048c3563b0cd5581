//! Moving between plain Dominating Set instances and coloured ones.

use crate::error::{Error, Result};
use crate::graph::{Color, Graph, VertexId};
use crate::params::KernelParams;
use crate::rules::{kernelize_i1, kernelize_rwb_with, KernelOptions, KernelOutcome};

/// Same graph with every vertex black: a plain instance has a dominating
/// set of size `k` iff its colouring has an rwb-dominating set of size `k`.
pub fn colorize(g: &Graph) -> Graph {
    g.all_black()
}

/// Result of [`uncolor`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Uncolored {
    pub graph: Graph,
    pub budget: usize,
    /// For each white vertex of the input (ascending), its hub vertex in `graph`.
    pub hubs: Vec<VertexId>,
}

/// Turns a reduced rwb-instance `(h, k)` into a plain instance.
///
/// Red vertices are deleted (they must have no black neighbour) and their
/// budget released. Every white vertex `x` gets a hub `v_x` carrying
/// `k + |W| + 1` pendant leaves, which forces the hub into every small
/// dominating set and so makes `x` dominated for free. The new budget is
/// `k - |R| + |W|`. Output ids are compact, with surviving vertices first in
/// their original order.
pub fn uncolor(h: &Graph, k: usize) -> Result<Uncolored> {
    if let Some((red, black)) = h.first_red_black_edge() {
        return Err(Error::RedHasBlackNeighbor { red, black });
    }
    let reds: Vec<VertexId> = h.vertices_with(Color::Red).collect();
    if reds.len() > k {
        return Err(Error::InvalidParams(format!(
            "{} red vertices exceed the budget {k}",
            reds.len()
        )));
    }
    let mut g = h.clone();
    for r in &reds {
        g.delete_vertex(*r)?;
    }
    let whites: Vec<VertexId> = g.vertices_with(Color::White).collect();
    let pendants = k + whites.len() + 1;
    let mut hubs = Vec::with_capacity(whites.len());
    for &x in &whites {
        let hub = g.add_vertex(Color::Black);
        g.add_edge(x, hub)?;
        for _ in 0..pendants {
            let leaf = g.add_vertex(Color::Black);
            g.add_edge(hub, leaf)?;
        }
        hubs.push(hub);
    }
    let (graph, old_ids) = g.all_black().compacted();
    let mut new_id = vec![usize::MAX; g.next_fresh_id()];
    for (new, &old) in old_ids.iter().enumerate() {
        new_id[old] = new;
    }
    Ok(Uncolored {
        graph,
        budget: k - reds.len() + whites.len(),
        hubs: hubs.into_iter().map(|hub| new_id[hub]).collect(),
    })
}

pub fn kernelize_plain(g: &Graph, params: &KernelParams) -> Result<KernelOutcome> {
    kernelize_plain_with(g, params, &KernelOptions::default())
}

/// Colour, reduce, uncolour. `i = 1` inputs use the counting kernel.
pub fn kernelize_plain_with(
    g: &Graph,
    params: &KernelParams,
    opts: &KernelOptions,
) -> Result<KernelOutcome> {
    let colored = colorize(g);
    if params.i == 1 {
        return kernelize_i1(&colored, params.j, params.k);
    }
    match kernelize_rwb_with(&colored, params, opts)? {
        KernelOutcome::DecidedNo { trace } => Ok(KernelOutcome::DecidedNo { trace }),
        KernelOutcome::Reduced {
            graph,
            budget,
            trace,
        } => {
            let plain = uncolor(&graph, budget)?;
            Ok(KernelOutcome::Reduced {
                graph: plain.graph,
                budget: plain.budget,
                trace,
            })
        }
    }
}
