//! Kernelization for k-Independent Dominating Set on `K_{i,j}`-free graphs.
//!
//! The rules work on red/black graphs: wherever the dominating-set rules
//! would colour a vertex white, that vertex is adjacent to a vertex of every
//! small independent solution and can never be picked, so it is deleted
//! instead. Deletions can isolate black vertices, so each deleting firing
//! finishes with Rule 1, as Rules 4 and 5 do in the general pipeline.

use crate::error::{Error, Result};
use crate::graph::{Color, Graph, VertexId};
use crate::params::KernelParams;
use crate::rules::{
    ensure_kij_free, find_rule2p_set, rule1, Decision, KernelOptions, KernelOutcome,
};
use crate::trace::{Firing, RuleId, RuleTrace};

pub fn ids_rule1(g: &mut Graph, trace: &mut RuleTrace) -> usize {
    rule1(g, trace)
}

/// Rule 2.p trigger; the common black neighbourhood is deleted instead of
/// whitened.
pub fn ids_rule2p(
    g: &mut Graph,
    p: usize,
    params: &KernelParams,
    trace: &mut RuleTrace,
) -> Result<usize> {
    let mut fired = 0;
    while let Some((u, b)) = find_rule2p_set(g, p, params)? {
        let mut f = Firing::new(g, RuleId::Two(p), u.clone());
        for &v in &b {
            f.delete(v);
        }
        for _ in 0..u.len() {
            let x = f.add_vertex(Color::Black);
            for &w in &u {
                f.add_edge(w, x);
            }
        }
        f.isolated_black_to_red();
        f.finish(trace);
        fired += 1;
    }
    Ok(fired)
}

/// A non-red vertex with more than `h` black neighbours turns red and its
/// black neighbours are deleted.
pub fn ids_rule3(g: &mut Graph, params: &KernelParams, trace: &mut RuleTrace) -> usize {
    let h = params.thresholds().h;
    let ids: Vec<VertexId> = g.vertices().collect();
    let mut fired = 0;
    for u in ids {
        if !g.contains(u) || g.is_color(u, Color::Red) || g.black_degree(u) as u64 <= h {
            continue;
        }
        let blacks: Vec<VertexId> = g.black_neighbors(u).collect();
        let mut f = Firing::new(g, RuleId::Three, vec![u]);
        f.recolor(u, Color::Red);
        for b in blacks {
            f.delete(b);
        }
        f.isolated_black_to_red();
        f.finish(trace);
        fired += 1;
    }
    fired
}

/// Rule 6 for red/black graphs, plus a NO when two red vertices are
/// adjacent since both would have to be in an independent solution.
pub fn ids_rule6(g: &Graph, params: &KernelParams) -> Decision {
    let t = params.thresholds();
    let reds: Vec<VertexId> = g.vertices_with(Color::Red).collect();
    let adjacent_reds = reds
        .iter()
        .any(|&r| g.neighbors(r).any(|v| g.is_color(v, Color::Red)));
    if reds.len() > params.k || g.count_color(Color::Black) as u64 > t.black_cap || adjacent_reds {
        Decision::No
    } else {
        Decision::Pass
    }
}

pub fn apply_ids_rule(
    g: &mut Graph,
    rule: RuleId,
    params: &KernelParams,
    trace: &mut RuleTrace,
) -> Result<usize> {
    match rule {
        RuleId::One => Ok(ids_rule1(g, trace)),
        RuleId::Two(p) => ids_rule2p(g, p, params, trace),
        RuleId::Three => Ok(ids_rule3(g, params, trace)),
        RuleId::Four | RuleId::Five => Err(Error::InvalidParams(format!(
            "rule {rule} has no independent-domination counterpart"
        ))),
    }
}

pub fn ids_rule_order(params: &KernelParams) -> Vec<RuleId> {
    let mut order = vec![RuleId::One];
    if params.k > 0 {
        order.extend((1..params.i.saturating_sub(1)).map(RuleId::Two));
    }
    order.push(RuleId::Three);
    order
}

pub fn kernelize_ids(g: &Graph, params: &KernelParams) -> Result<KernelOutcome> {
    kernelize_ids_with(g, params, &KernelOptions::default())
}

/// Reduces the all-black colouring of `g`. On success the kernel is the
/// reduced graph with colours dropped and ids compacted, at the same budget:
/// red vertices end up isolated, so every dominating set must take them and
/// they never break independence.
pub fn kernelize_ids_with(
    g: &Graph,
    params: &KernelParams,
    opts: &KernelOptions,
) -> Result<KernelOutcome> {
    if params.i == 1 {
        return crate::rules::kernelize_i1(&g.all_black(), params.j, params.k);
    }
    if opts.check_kij {
        ensure_kij_free(g, params)?;
    }
    let mut h = g.all_black();
    let mut trace = RuleTrace::new();
    for rule in ids_rule_order(params) {
        apply_ids_rule(&mut h, rule, params, &mut trace)?;
    }
    if opts.verify_fixpoint {
        for rule in ids_rule_order(params) {
            let mut probe = h.clone();
            if apply_ids_rule(&mut probe, rule, params, &mut RuleTrace::new())? > 0 {
                return Err(Error::FixpointViolated { rule });
            }
        }
    }
    Ok(match ids_rule6(&h, params) {
        Decision::No => KernelOutcome::DecidedNo { trace },
        Decision::Pass => KernelOutcome::Reduced {
            graph: h.all_black().compacted().0,
            budget: params.k,
            trace,
        },
    })
}
