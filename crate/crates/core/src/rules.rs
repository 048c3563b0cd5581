//! Reduction rules for rwb-Dominating Set on `K_{i,j}`-free graphs.
//!
//! Every rule scans candidates in ascending id order (vertex subsets in
//! lexicographic order) and fires on the first match, so runs are fully
//! deterministic and replayable from their [`RuleTrace`].

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{contains_kij, Color, Graph, VertexId};
use crate::params::KernelParams;
use crate::trace::{Firing, RuleId, RuleTrace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KernelOutcome {
    DecidedNo {
        trace: RuleTrace,
    },
    Reduced {
        graph: Graph,
        budget: usize,
        trace: RuleTrace,
    },
}

impl KernelOutcome {
    pub fn trace(&self) -> &RuleTrace {
        match self {
            KernelOutcome::DecidedNo { trace } | KernelOutcome::Reduced { trace, .. } => trace,
        }
    }

    pub fn is_no(&self) -> bool {
        matches!(self, KernelOutcome::DecidedNo { .. })
    }

    pub fn kernel(&self) -> Option<(&Graph, usize)> {
        match self {
            KernelOutcome::Reduced { graph, budget, .. } => Some((graph, *budget)),
            KernelOutcome::DecidedNo { .. } => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    No,
    Pass,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KernelOptions {
    /// Reject inputs containing `K_{i,j}` before reducing (costs `O(n^i)`).
    pub check_kij: bool,
    /// Re-run every rule on the result and fail if any of them still fires.
    pub verify_fixpoint: bool,
}

impl Default for KernelOptions {
    fn default() -> Self {
        Self {
            check_kij: false,
            verify_fixpoint: cfg!(debug_assertions),
        }
    }
}

/// Colours every isolated black vertex red.
pub fn rule1(g: &mut Graph, trace: &mut RuleTrace) -> usize {
    let isolated: Vec<VertexId> = g
        .vertices_with(Color::Black)
        .filter(|&v| g.degree(v) == 0)
        .collect();
    for &v in &isolated {
        let mut f = Firing::new(g, RuleId::One, vec![v]);
        f.recolor(v, Color::Red);
        f.finish(trace);
    }
    isolated.len()
}

fn check_p(p: usize, params: &KernelParams) -> Result<()> {
    if p == 0 || p + 2 > params.i {
        return Err(Error::InvalidParams(format!(
            "rule 2.{p} needs 1 <= p <= i-2 (i = {})",
            params.i
        )));
    }
    if params.k == 0 {
        return Err(Error::InvalidParams(
            "rule 2.p needs k >= 1: with k = 0 its gadget re-triggers it forever".into(),
        ));
    }
    Ok(())
}

/// Lexicographically first set of `i - p` non-red vertices with more than
/// `b(p)` common black neighbours, together with that neighbourhood.
pub fn find_rule2p_set(
    g: &Graph,
    p: usize,
    params: &KernelParams,
) -> Result<Option<(Vec<VertexId>, BTreeSet<VertexId>)>> {
    check_p(p, params)?;
    let mut found = None;
    scan_rule2p(g, params.i - p, params.thresholds().b(p), &mut |u, b| {
        found = Some((u.to_vec(), b.clone()));
        true
    });
    Ok(found)
}

/// Every set on which Rule 2.p could fire in `g` right now.
pub fn rule2p_candidates(g: &Graph, p: usize, params: &KernelParams) -> Result<Vec<Vec<VertexId>>> {
    check_p(p, params)?;
    let mut all = Vec::new();
    scan_rule2p(g, params.i - p, params.thresholds().b(p), &mut |u, _| {
        all.push(u.to_vec());
        false
    });
    Ok(all)
}

/// Calls `visit` on each qualifying set in lexicographic order until it
/// returns `true`. Common neighbourhoods only shrink as a set grows, so any
/// prefix with at most `b` common black neighbours is pruned.
fn scan_rule2p<F>(g: &Graph, size: usize, b: u64, visit: &mut F)
where
    F: FnMut(&[VertexId], &BTreeSet<VertexId>) -> bool,
{
    let pool: Vec<VertexId> = g
        .vertices()
        .filter(|&v| !g.is_color(v, Color::Red) && g.black_degree(v) as u64 > b)
        .collect();
    let mut chosen = Vec::with_capacity(size);
    dfs(g, &pool, 0, size, b, &mut chosen, None, visit);

    #[allow(clippy::too_many_arguments)]
    fn dfs<F>(
        g: &Graph,
        pool: &[VertexId],
        start: usize,
        size: usize,
        b: u64,
        chosen: &mut Vec<VertexId>,
        common: Option<&BTreeSet<VertexId>>,
        visit: &mut F,
    ) -> bool
    where
        F: FnMut(&[VertexId], &BTreeSet<VertexId>) -> bool,
    {
        if chosen.len() == size {
            return visit(chosen, common.expect("size >= 1"));
        }
        for idx in start..pool.len() {
            if pool.len() - idx < size - chosen.len() {
                break;
            }
            let v = pool[idx];
            let next: BTreeSet<VertexId> = match common {
                None => g.black_neighbors(v).collect(),
                Some(c) => {
                    let adj = g.neighbor_set(v).expect("live vertex");
                    c.iter().copied().filter(|x| adj.contains(x)).collect()
                }
            };
            if next.len() as u64 <= b {
                continue;
            }
            chosen.push(v);
            let stop = dfs(g, pool, idx + 1, size, b, chosen, Some(&next), visit);
            chosen.pop();
            if stop {
                return true;
            }
        }
        false
    }
}

/// The three steps of Rule 2.p on a qualifying set `u` with common black
/// neighbourhood `b`: whiten `b`, then attach `|u|` fresh black gadget
/// vertices to every member of `u`.
pub(crate) fn fire_rule2p(
    g: &mut Graph,
    p: usize,
    u: &[VertexId],
    b: &BTreeSet<VertexId>,
    trace: &mut RuleTrace,
) {
    let mut f = Firing::new(g, RuleId::Two(p), u.to_vec());
    for &v in b {
        f.recolor(v, Color::White);
    }
    for _ in 0..u.len() {
        let x = f.add_vertex(Color::Black);
        for &w in u {
            f.add_edge(w, x);
        }
    }
    f.finish(trace);
}

/// Applies Rule 2.p until no `(i - p)`-set of non-red vertices has more than
/// `b(p)` common black neighbours.
pub fn rule2p(
    g: &mut Graph,
    p: usize,
    params: &KernelParams,
    trace: &mut RuleTrace,
) -> Result<usize> {
    let mut fired = 0;
    while let Some((u, b)) = find_rule2p_set(g, p, params)? {
        fire_rule2p(g, p, &u, &b, trace);
        fired += 1;
    }
    Ok(fired)
}

/// Black or white vertices with more than `h` black neighbours become red,
/// and their black neighbours white. A white `u` may already have red
/// neighbours; those edges are dropped, since an edge between two vertices
/// of every solution never matters, and so red vertices only ever see white
/// ones.
pub fn rule3(g: &mut Graph, params: &KernelParams, trace: &mut RuleTrace) -> usize {
    let h = params.thresholds().h;
    let ids: Vec<VertexId> = g.vertices().collect();
    let mut fired = 0;
    // Black degrees only decrease, so one ascending pass reaches the fixpoint.
    for u in ids {
        if g.is_color(u, Color::Red) || g.black_degree(u) as u64 <= h {
            continue;
        }
        let blacks: Vec<VertexId> = g.black_neighbors(u).collect();
        let reds: Vec<VertexId> = g
            .neighbors(u)
            .filter(|&v| g.is_color(v, Color::Red))
            .collect();
        let mut f = Firing::new(g, RuleId::Three, vec![u]);
        f.recolor(u, Color::Red);
        for b in blacks {
            f.recolor(b, Color::White);
        }
        for r in reds {
            f.remove_edge(u, r);
        }
        f.finish(trace);
        fired += 1;
    }
    fired
}

/// Deletes white vertices with at most one black neighbour.
pub fn rule4(g: &mut Graph, trace: &mut RuleTrace) -> usize {
    let whites: Vec<VertexId> = g.vertices_with(Color::White).collect();
    let mut fired = 0;
    for u in whites {
        if g.black_degree(u) > 1 {
            continue;
        }
        let mut f = Firing::new(g, RuleId::Four, vec![u]);
        f.delete(u);
        f.isolated_black_to_red();
        f.finish(trace);
        fired += 1;
    }
    fired
}

/// A white or black vertex whose black neighbourhood contains that of
/// white `u`, if any. Between two whites with identical black
/// neighbourhoods only the higher id is dominated.
pub fn rule5_witness(g: &Graph, u: VertexId) -> Option<VertexId> {
    let nu: BTreeSet<VertexId> = g.black_neighbors(u).collect();
    let covers = |v: VertexId| {
        if v == u || g.is_color(v, Color::Red) {
            return false;
        }
        let adj = g.neighbor_set(v).expect("live vertex");
        if !nu.iter().all(|b| adj.contains(b)) {
            return false;
        }
        !(g.is_color(v, Color::White) && u < v && g.black_degree(v) == nu.len())
    };
    match nu.first() {
        Some(&b0) => g.neighbors(b0).find(|&v| covers(v)),
        None => g.vertices().find(|&v| covers(v)),
    }
}

/// Deletes a white vertex whose black neighbourhood is contained in that of
/// another white or black vertex.
pub fn rule5(g: &mut Graph, trace: &mut RuleTrace) -> usize {
    let whites: Vec<VertexId> = g.vertices_with(Color::White).collect();
    let mut fired = 0;
    // Deleting a white never creates a new containment, so one pass suffices.
    for u in whites {
        if !g.contains(u) {
            continue;
        }
        let Some(v) = rule5_witness(g, u) else {
            continue;
        };
        let mut f = Firing::new(g, RuleId::Five, vec![u, v]);
        f.delete(u);
        f.isolated_black_to_red();
        f.finish(trace);
        fired += 1;
    }
    fired
}

pub fn rule6(g: &Graph, params: &KernelParams) -> Decision {
    let t = params.thresholds();
    if g.count_color(Color::Red) > params.k || g.count_color(Color::Black) as u64 > t.black_cap {
        Decision::No
    } else {
        Decision::Pass
    }
}

/// Runs a single rule of the generic pipeline; used to probe whether a
/// graph is reduced with respect to that rule.
pub fn apply_rule(
    g: &mut Graph,
    rule: RuleId,
    params: &KernelParams,
    trace: &mut RuleTrace,
) -> Result<usize> {
    Ok(match rule {
        RuleId::One => rule1(g, trace),
        RuleId::Two(p) => rule2p(g, p, params, trace)?,
        RuleId::Three => rule3(g, params, trace),
        RuleId::Four => rule4(g, trace),
        RuleId::Five => rule5(g, trace),
    })
}

/// Rules of the generic pipeline in application order. Rule 2 is skipped
/// when `i = 2` or `k = 0`.
pub fn rule_order(params: &KernelParams) -> Vec<RuleId> {
    let mut order = vec![RuleId::One];
    if params.k > 0 {
        order.extend((1..params.i.saturating_sub(1)).map(RuleId::Two));
    }
    order.extend([RuleId::Three, RuleId::Four, RuleId::Five]);
    order
}

pub fn kernelize_rwb(g: &Graph, params: &KernelParams) -> Result<KernelOutcome> {
    kernelize_rwb_with(g, params, &KernelOptions::default())
}

pub fn kernelize_rwb_with(
    g: &Graph,
    params: &KernelParams,
    opts: &KernelOptions,
) -> Result<KernelOutcome> {
    run_pipeline(g, params, opts, |g, p, trace| rule2p(g, p, params, trace))
}

/// Rules 1 through 6 in order, with `rule2` standing in for the Rule 2.p
/// implementation.
pub(crate) fn run_pipeline<F>(
    input: &Graph,
    params: &KernelParams,
    opts: &KernelOptions,
    mut rule2: F,
) -> Result<KernelOutcome>
where
    F: FnMut(&mut Graph, usize, &mut RuleTrace) -> Result<usize>,
{
    if params.i < 2 {
        return Err(Error::InvalidParams(
            "rwb kernelization needs i >= 2; use kernelize_i1 for i = 1".into(),
        ));
    }
    if opts.check_kij {
        ensure_kij_free(input, params)?;
    }
    let mut g = input.clone();
    let mut trace = RuleTrace::new();
    for rule in rule_order(params) {
        match rule {
            RuleId::Two(p) => {
                rule2(&mut g, p, &mut trace)?;
            }
            other => {
                apply_rule(&mut g, other, params, &mut trace)?;
            }
        }
    }
    if opts.verify_fixpoint {
        verify_fixpoint(&g, params)?;
    }
    Ok(match rule6(&g, params) {
        Decision::No => KernelOutcome::DecidedNo { trace },
        Decision::Pass => KernelOutcome::Reduced {
            graph: g,
            budget: params.k,
            trace,
        },
    })
}

pub(crate) fn ensure_kij_free(g: &Graph, params: &KernelParams) -> Result<()> {
    match contains_kij(g, params.i, params.j)? {
        Some(w) => Err(Error::ContainsBiclique {
            i: params.i,
            j: params.j,
            left: w.left,
            right: w.right,
        }),
        None => Ok(()),
    }
}

/// Fails if any rule of the pipeline would still change `g`.
pub fn verify_fixpoint(g: &Graph, params: &KernelParams) -> Result<()> {
    for rule in rule_order(params) {
        let mut probe = g.clone();
        if apply_rule(&mut probe, rule, params, &mut RuleTrace::new())? > 0 {
            return Err(Error::FixpointViolated { rule });
        }
    }
    Ok(())
}

/// Kernel for `K_{1,j}`-free graphs (maximum degree below `j`): `k`
/// vertices dominate at most `k·j` vertices, so larger graphs are NO
/// instances and smaller ones are their own kernel.
pub fn kernelize_i1(g: &Graph, j: usize, k: usize) -> Result<KernelOutcome> {
    if j == 0 {
        return Err(Error::InvalidParams("j must be at least 1".into()));
    }
    if let Some(v) = g.vertices().find(|&v| !g.is_color(v, Color::Black)) {
        return Err(Error::InvalidParams(format!(
            "i = 1 kernel expects an uncoloured graph, vertex {v} is {}",
            g.color(v).expect("live")
        )));
    }
    if let Some(v) = g.vertices().find(|&v| g.degree(v) >= j) {
        return Err(Error::DegreeTooLarge {
            vertex: v,
            degree: g.degree(v),
            j,
        });
    }
    let trace = RuleTrace::new();
    if g.num_vertices() > k.saturating_mul(j) {
        Ok(KernelOutcome::DecidedNo { trace })
    } else {
        Ok(KernelOutcome::Reduced {
            graph: g.clone(),
            budget: k,
            trace,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{biclique, cycle, petersen, star};

    fn params(i: usize, j: usize, k: usize) -> KernelParams {
        KernelParams::new(i, j, k).unwrap()
    }

    fn colored(n: usize, edges: &[(usize, usize)], colors: &[(usize, Color)]) -> Graph {
        let mut g = Graph::from_edges(n, edges).unwrap();
        for &(v, c) in colors {
            g.set_color(v, c).unwrap();
        }
        g
    }

    #[test]
    fn rule1_recolors_isolated_black() {
        let mut g = Graph::with_vertices(1);
        assert_eq!(rule1(&mut g, &mut RuleTrace::new()), 1);
        assert_eq!(g.color(0), Some(Color::Red));
    }

    #[test]
    fn rule1_ignores_cycle_and_whites() {
        let mut c5 = cycle(5);
        assert_eq!(rule1(&mut c5, &mut RuleTrace::new()), 0);
        assert_eq!(c5, cycle(5));

        let mut g = colored(3, &[], &[(2, Color::White)]);
        assert_eq!(rule1(&mut g, &mut RuleTrace::new()), 2);
        assert_eq!(g.color(2), Some(Color::White));
        assert_eq!(g.count_color(Color::Red), 2);
    }

    #[test]
    fn rule2p_fires_on_k24() {
        let mut g = biclique(2, 4);
        let mut trace = RuleTrace::new();
        assert_eq!(rule2p(&mut g, 1, &params(3, 3, 1), &mut trace).unwrap(), 1);
        for b in 2..6 {
            assert_eq!(g.color(b), Some(Color::White));
        }
        let gadgets: Vec<_> = (6..8).collect();
        for &x in &gadgets {
            assert_eq!(g.color(x), Some(Color::Black));
            assert_eq!(g.neighbors(x).collect::<Vec<_>>(), vec![0, 1]);
        }
        assert_eq!(trace.entries()[0].read, vec![0, 1]);
        assert_eq!(g.num_vertices(), 8);
    }

    #[test]
    fn rule2p_strict_boundary() {
        let mut g = biclique(2, 6);
        assert_eq!(
            rule2p(&mut g, 1, &params(3, 3, 2), &mut RuleTrace::new()).unwrap(),
            0
        );
        assert_eq!(g, biclique(2, 6));
    }

    #[test]
    fn rule2_2_boundary_at_b_five() {
        // b(2) = 5 for i = j = 4, k = 1; both hosts are K_{4,4}-free.
        let p = params(4, 4, 1);
        let mut six = biclique(2, 6);
        assert!(contains_kij(&six, 4, 4).unwrap().is_none());
        assert_eq!(rule2p(&mut six, 2, &p, &mut RuleTrace::new()).unwrap(), 1);
        let mut five = biclique(2, 5);
        assert_eq!(rule2p(&mut five, 2, &p, &mut RuleTrace::new()).unwrap(), 0);
    }

    #[test]
    fn rule2p_skips_red_members() {
        let mut g = biclique(2, 4);
        g.set_color(0, Color::Red).unwrap();
        assert_eq!(
            rule2p(&mut g, 1, &params(3, 3, 1), &mut RuleTrace::new()).unwrap(),
            0
        );
    }

    #[test]
    fn rule2p_range_checked() {
        let mut g = biclique(2, 4);
        let mut t = RuleTrace::new();
        assert!(rule2p(&mut g, 0, &params(3, 3, 1), &mut t).is_err());
        assert!(rule2p(&mut g, 2, &params(3, 3, 1), &mut t).is_err());
        assert!(rule2p(&mut g, 1, &params(2, 2, 1), &mut t).is_err());
        assert!(rule2p(&mut g, 1, &params(3, 3, 0), &mut t).is_err());
    }

    #[test]
    fn rule3_star() {
        let mut g = star(3);
        assert_eq!(rule3(&mut g, &params(2, 2, 1), &mut RuleTrace::new()), 1);
        assert_eq!(g.color(0), Some(Color::Red));
        assert!((1..4).all(|v| g.is_color(v, Color::White)));

        let mut small = star(2);
        assert_eq!(
            rule3(&mut small, &params(2, 2, 1), &mut RuleTrace::new()),
            0
        );
    }

    #[test]
    fn rule3_boundary_h14() {
        // i = j = 3, k = 2: h = 3·4 + 2 = 14.
        let p = params(3, 3, 2);
        let mut fires = star(15);
        assert_eq!(rule3(&mut fires, &p, &mut RuleTrace::new()), 1);
        let mut holds = star(14);
        assert_eq!(rule3(&mut holds, &p, &mut RuleTrace::new()), 0);
    }

    #[test]
    fn rule3_fires_on_white_vertices() {
        let mut g = star(3);
        g.set_color(0, Color::White).unwrap();
        assert_eq!(rule3(&mut g, &params(2, 2, 1), &mut RuleTrace::new()), 1);
        assert_eq!(g.color(0), Some(Color::Red));
    }

    #[test]
    fn rule4_deletes_pendant_white_and_reruns_rule1() {
        let mut g = colored(2, &[(0, 1)], &[(0, Color::White)]);
        let mut trace = RuleTrace::new();
        assert_eq!(rule4(&mut g, &mut trace), 1);
        assert!(!g.contains(0));
        assert_eq!(g.color(1), Some(Color::Red));
        assert_eq!(trace.entries().len(), 1);
        assert_eq!(trace.entries()[0].edits.len(), 2);
    }

    #[test]
    fn rule4_keeps_white_with_two_blacks() {
        let mut g = colored(3, &[(0, 1), (0, 2)], &[(0, Color::White)]);
        assert_eq!(rule4(&mut g, &mut RuleTrace::new()), 0);
    }

    #[test]
    fn rule4_deletes_white_without_black_neighbours() {
        let mut g = colored(2, &[(0, 1)], &[(0, Color::White), (1, Color::White)]);
        assert_eq!(rule4(&mut g, &mut RuleTrace::new()), 2);
        assert!(g.is_empty());
    }

    #[test]
    fn rule5_identical_whites_drop_higher_id() {
        // whites 0, 1 both see blacks 2, 3
        let mut g = colored(
            4,
            &[(0, 2), (0, 3), (1, 2), (1, 3)],
            &[(0, Color::White), (1, Color::White)],
        );
        assert_eq!(rule5(&mut g, &mut RuleTrace::new()), 1);
        assert!(g.contains(0));
        assert!(!g.contains(1));
    }

    #[test]
    fn rule5_black_superset() {
        // white 0 and black 1 both see blacks 2, 3
        let mut g = colored(4, &[(0, 2), (0, 3), (1, 2), (1, 3)], &[(0, Color::White)]);
        assert_eq!(rule5(&mut g, &mut RuleTrace::new()), 1);
        assert!(!g.contains(0));
    }

    #[test]
    fn rule5_incomparable() {
        // white 0 sees {2, 3}; white 1 sees {3, 4}
        let mut g = colored(
            5,
            &[(0, 2), (0, 3), (1, 3), (1, 4)],
            &[(0, Color::White), (1, Color::White)],
        );
        assert_eq!(rule5(&mut g, &mut RuleTrace::new()), 0);
    }

    #[test]
    fn rule6_decisions() {
        let p = params(2, 2, 1);
        let two_reds = colored(2, &[], &[(0, Color::Red), (1, Color::Red)]);
        assert_eq!(rule6(&two_reds, &p), Decision::No);
        assert_eq!(rule6(&Graph::new(), &params(2, 2, 0)), Decision::Pass);
        // k·(h + 1) = 3: the triangle is dominated by any one vertex
        assert_eq!(rule6(&cycle(3), &p), Decision::Pass);
        assert_eq!(rule6(&cycle(4), &p), Decision::No);
        assert_eq!(
            rule6(&Graph::from_edges(2, &[(0, 1)]).unwrap(), &p),
            Decision::Pass
        );
    }

    #[test]
    fn kernelize_c5() {
        let out = kernelize_rwb(&cycle(5), &params(2, 2, 2)).unwrap();
        let (h, k) = out.kernel().unwrap();
        assert_eq!(k, 2);
        assert_eq!(h, &cycle(5));
        assert!(kernelize_rwb(&cycle(5), &params(2, 2, 1)).unwrap().is_no());
    }

    #[test]
    fn kernelize_empty() {
        let out = kernelize_rwb(&Graph::new(), &params(2, 2, 0)).unwrap();
        assert!(out.kernel().unwrap().0.is_empty());
    }

    #[test]
    fn kernelize_rejects_i1() {
        assert!(kernelize_rwb(&cycle(5), &params(1, 3, 2)).is_err());
    }

    #[test]
    fn kernelize_can_check_kij() {
        let opts = KernelOptions {
            check_kij: true,
            ..Default::default()
        };
        let err = kernelize_rwb_with(&cycle(4), &params(2, 2, 1), &opts).unwrap_err();
        assert!(matches!(err, Error::ContainsBiclique { .. }));
    }

    #[test]
    fn k_zero_skips_rule_two() {
        let p = params(3, 3, 0);
        assert_eq!(
            rule_order(&p),
            vec![RuleId::One, RuleId::Three, RuleId::Four, RuleId::Five]
        );
        assert!(kernelize_rwb(&biclique(2, 4), &p).unwrap().is_no());
    }

    #[test]
    fn adjacent_reds_are_separated() {
        // Path 2-0-1-4 with extra leaves: 0 fires first, then the whitened 1
        // still has three black neighbours and turns red as well, dropping
        // the edge to 0.
        let g = Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (1, 6)]).unwrap();
        let mut h = g.clone();
        rule3(&mut h, &params(2, 2, 1), &mut RuleTrace::new());
        assert_eq!(h.color(0), Some(Color::Red));
        assert_eq!(h.color(1), Some(Color::Red));
        assert!(!h.has_edge(0, 1));
        assert!(h.reds_see_only_white());
    }

    #[test]
    fn i1_counting_kernel() {
        // Petersen plus a disjoint triangle: 13 vertices, max degree 3.
        let mut g = petersen();
        let a = g.add_vertex(Color::Black);
        let b = g.add_vertex(Color::Black);
        let c = g.add_vertex(Color::Black);
        g.add_edge(a, b).unwrap();
        g.add_edge(b, c).unwrap();
        g.add_edge(a, c).unwrap();
        assert!(kernelize_i1(&g, 4, 3).unwrap().is_no());

        let edge = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(
            kernelize_i1(&edge, 2, 1).unwrap().kernel(),
            Some((&edge, 1))
        );
        assert!(kernelize_i1(&Graph::new(), 3, 0)
            .unwrap()
            .kernel()
            .is_some());
        assert!(matches!(
            kernelize_i1(&star(3), 3, 5),
            Err(Error::DegreeTooLarge {
                vertex: 0,
                degree: 3,
                j: 3
            })
        ));
    }

    #[test]
    fn traces_replay() {
        let g = biclique(2, 5);
        let p = params(3, 3, 1);
        let out = kernelize_rwb(&g, &p).unwrap();
        let replayed = out.trace().replay(&g).unwrap();
        match &out {
            KernelOutcome::Reduced { graph, .. } => assert_eq!(&replayed, graph),
            KernelOutcome::DecidedNo { .. } => assert_eq!(rule6(&replayed, &p), Decision::No),
        }
    }
}
