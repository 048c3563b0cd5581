//! Rule 2.p for `d`-degenerate graphs via a degeneracy ordering.
//!
//! If `U` qualifies for Rule 2.p with common black neighbourhood `B`, every
//! member of `U` has more than `d` neighbours, so the earliest vertex of
//! `U ∪ B` in a degeneracy ordering lies in `B` and has all of `U` among its
//! later neighbours. Searching subsets of forward neighbourhoods of black
//! vertices therefore finds every qualifying set while touching only
//! `O(2^d · n)` candidate sets per scan.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{
    common_black_neighbors, degeneracy_ordering, degeneracy_ordering_where, Color,
    DegeneracyOrdering, Graph, VertexId,
};
use crate::params::{KernelParams, Thresholds};
use crate::rules::{fire_rule2p, run_pipeline, KernelOptions, KernelOutcome};
use crate::trace::RuleTrace;

fn check_args(p: usize, d: usize, k: usize) -> Result<()> {
    if p == 0 || p >= d {
        return Err(Error::InvalidParams(format!(
            "fast rule 2.{p} needs 1 <= p <= d-1 (d = {d})"
        )));
    }
    if k == 0 {
        return Err(Error::InvalidParams("rule 2.p needs k >= 1".into()));
    }
    Ok(())
}

/// First position whose forward degree exceeds `d`.
fn first_violation(g: &Graph, ordering: &DegeneracyOrdering, d: usize) -> Error {
    let fwd = ordering.forward_degrees(g);
    let position = fwd.iter().position(|&f| f > d).unwrap_or(0);
    Error::NotDegenerate {
        d,
        position,
        vertex: ordering.order.get(position).copied().unwrap_or(0),
        forward_degree: fwd.get(position).copied().unwrap_or(0),
    }
}

/// Ordering of the non-red vertices; red vertices are masked out rather
/// than removed so ids stay put.
fn non_red_ordering(g: &Graph, d: usize) -> Result<DegeneracyOrdering> {
    let ordering = degeneracy_ordering_where(g, |v| !g.is_color(v, Color::Red));
    if ordering.degeneracy > d {
        return Err(first_violation(g, &ordering, d));
    }
    Ok(ordering)
}

fn for_each_subset<F>(items: &[VertexId], size: usize, f: &mut F) -> bool
where
    F: FnMut(&[VertexId]) -> bool,
{
    fn go<F>(
        items: &[VertexId],
        start: usize,
        size: usize,
        cur: &mut Vec<VertexId>,
        f: &mut F,
    ) -> bool
    where
        F: FnMut(&[VertexId]) -> bool,
    {
        if cur.len() == size {
            return f(cur);
        }
        for idx in start..items.len() {
            if items.len() - idx < size - cur.len() {
                break;
            }
            cur.push(items[idx]);
            let stop = go(items, idx + 1, size, cur, f);
            cur.pop();
            if stop {
                return true;
            }
        }
        false
    }
    go(items, 0, size, &mut Vec::with_capacity(size), f)
}

/// Scans the ordering and calls `visit` with each qualifying set and its
/// common black neighbourhood until `visit` returns `true`.
fn scan<F>(g: &Graph, ordering: &DegeneracyOrdering, size: usize, b: u64, visit: &mut F) -> bool
where
    F: FnMut(&[VertexId], BTreeSet<VertexId>) -> bool,
{
    let pos = ordering.positions(g);
    for (l, &v) in ordering.order.iter().enumerate() {
        if !g.is_color(v, Color::Black) {
            continue;
        }
        let forward = ordering.forward_neighbors(g, &pos, l);
        if forward.len() < size {
            continue;
        }
        let stop = for_each_subset(&forward, size, &mut |s| {
            let common = common_black_neighbors(g, s).expect("live vertices");
            common.len() as u64 > b && visit(s, common)
        });
        if stop {
            return true;
        }
    }
    false
}

/// Every set the ordering-based search would fire on in `g` right now.
pub fn fast_rule2p_candidates(
    g: &Graph,
    p: usize,
    d: usize,
    k: usize,
) -> Result<Vec<Vec<VertexId>>> {
    check_args(p, d, k)?;
    let b = Thresholds::new(d + 1, d + 1, k).b(p);
    let ordering = non_red_ordering(g, d)?;
    let mut found = BTreeSet::new();
    scan(g, &ordering, d - p + 1, b, &mut |s, _| {
        found.insert(s.to_vec());
        false
    });
    Ok(found.into_iter().collect())
}

/// Rule 2.p on a `d`-degenerate graph (with `i = j = d + 1`). The ordering
/// is recomputed after every firing.
pub fn rule2p_fast(
    g: &mut Graph,
    p: usize,
    d: usize,
    k: usize,
    trace: &mut RuleTrace,
) -> Result<usize> {
    check_args(p, d, k)?;
    let b = Thresholds::new(d + 1, d + 1, k).b(p);
    let size = d - p + 1;
    let mut fired = 0;
    loop {
        let ordering = non_red_ordering(g, d)?;
        let mut hit = None;
        scan(g, &ordering, size, b, &mut |s, common| {
            hit = Some((s.to_vec(), common));
            true
        });
        let Some((u, common)) = hit else {
            return Ok(fired);
        };
        fire_rule2p(g, p, &u, &common, trace);
        fired += 1;
    }
}

pub fn kernelize_degenerate(g: &Graph, d: usize, k: usize) -> Result<KernelOutcome> {
    kernelize_degenerate_with(g, d, k, &KernelOptions::default())
}

/// The generic pipeline with `i = j = d + 1` and Rule 2.p replaced by
/// [`rule2p_fast`]. Rejects inputs whose degeneracy exceeds `d`.
pub fn kernelize_degenerate_with(
    g: &Graph,
    d: usize,
    k: usize,
    opts: &KernelOptions,
) -> Result<KernelOutcome> {
    if d == 0 {
        return Err(Error::InvalidParams("degeneracy must be at least 1".into()));
    }
    let ordering = degeneracy_ordering(g);
    if ordering.degeneracy > d {
        return Err(first_violation(g, &ordering, d));
    }
    let params = KernelParams::degenerate(d, k);
    run_pipeline(g, &params, opts, |g, p, trace| {
        rule2p_fast(g, p, d, k, trace)
    })
}
