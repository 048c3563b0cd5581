//! Exact exponential-time reference solvers. These are never used by the
//! kernelization pipelines; they exist to check them.
//!
//! All three problems are instances of one query: find a set `S` with
//! `forced ⊆ S`, `S ∩ forbidden = ∅`, `|S| <= budget` (optionally
//! independent) that dominates a target set. The search grows `S` by
//! branching on the closed neighbourhood of an undominated target with the
//! fewest candidates, and tries budgets in increasing order so the first
//! witness found is a minimum one.

mod verify;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{Color, Graph, VertexId};

pub use verify::{verify_kernel, ColorCounts, Pipeline, VerifyConfig, VerifyReport};

pub const DEFAULT_CAP: usize = 20;

#[derive(Debug, Clone)]
pub struct DominationQuery<'a> {
    pub graph: &'a Graph,
    pub targets: Vec<VertexId>,
    pub forced: Vec<VertexId>,
    pub forbidden: Vec<VertexId>,
    pub independent: bool,
    pub budget: usize,
}

impl<'a> DominationQuery<'a> {
    /// Dominate every vertex of `graph` with at most `budget` vertices.
    pub fn plain(graph: &'a Graph, budget: usize) -> Self {
        Self {
            graph,
            targets: graph.vertices().collect(),
            forced: Vec::new(),
            forbidden: Vec::new(),
            independent: false,
            budget,
        }
    }

    /// Dominate the black vertices with a set containing every red vertex.
    pub fn rwb(graph: &'a Graph, budget: usize) -> Self {
        Self {
            targets: graph.vertices_with(Color::Black).collect(),
            forced: graph.vertices_with(Color::Red).collect(),
            ..Self::plain(graph, budget)
        }
    }

    pub fn independent(graph: &'a Graph, budget: usize) -> Self {
        Self {
            independent: true,
            ..Self::plain(graph, budget)
        }
    }

    /// A minimum-size witness of size at most `budget`, if one exists.
    pub fn solve(&self) -> Option<Vec<VertexId>> {
        let solver = Solver::new(self)?;
        let witness = (solver.forced.len()..=self.budget).find_map(|size| solver.search(size))?;
        let witness: Vec<VertexId> = witness.into_iter().map(|idx| solver.ids[idx]).collect();
        assert!(
            self.is_witness(&witness),
            "solver produced invalid witness {witness:?}"
        );
        Some(witness)
    }

    /// Checks a candidate set against every constraint of the query.
    pub fn is_witness(&self, set: &[VertexId]) -> bool {
        let g = self.graph;
        if set.len() > self.budget || !set.iter().all(|&v| g.contains(v)) {
            return false;
        }
        if !self.forced.iter().all(|f| set.contains(f))
            || set.iter().any(|v| self.forbidden.contains(v))
        {
            return false;
        }
        if self.independent && set.iter().any(|&u| set.iter().any(|&v| g.has_edge(u, v))) {
            return false;
        }
        self.targets
            .iter()
            .all(|&t| set.contains(&t) || set.iter().any(|&s| g.has_edge(s, t)))
    }
}

struct Solver {
    ids: Vec<VertexId>,
    closed: Vec<FixedBitSet>,
    forced: Vec<usize>,
    /// Undominated targets after taking the forced vertices.
    undominated: FixedBitSet,
    /// Vertices that may not be added.
    blocked: FixedBitSet,
    independent: bool,
}

impl Solver {
    fn new(q: &DominationQuery<'_>) -> Option<Self> {
        let g = q.graph;
        let ids: Vec<VertexId> = g.vertices().collect();
        let n = ids.len();
        let mut index = vec![usize::MAX; g.next_fresh_id()];
        for (idx, &v) in ids.iter().enumerate() {
            index[v] = idx;
        }
        let closed: Vec<FixedBitSet> = ids
            .iter()
            .map(|&v| {
                let mut set = FixedBitSet::with_capacity(n);
                set.insert(index[v]);
                for u in g.neighbors(v) {
                    set.insert(index[u]);
                }
                set
            })
            .collect();
        let lookup = |v: VertexId| index.get(v).copied().filter(|&i| i != usize::MAX);

        let mut forced: Vec<usize> = Vec::new();
        for &v in &q.forced {
            let idx = lookup(v)?;
            if !forced.contains(&idx) {
                forced.push(idx);
            }
        }
        if forced.len() > q.budget {
            return None;
        }
        let mut blocked = FixedBitSet::with_capacity(n);
        for &v in &q.forbidden {
            if let Some(idx) = lookup(v) {
                if forced.contains(&idx) {
                    return None;
                }
                blocked.insert(idx);
            }
        }
        let mut undominated = FixedBitSet::with_capacity(n);
        for &t in &q.targets {
            undominated.insert(lookup(t)?);
        }
        for &f in &forced {
            blocked.insert(f);
            undominated.difference_with(&closed[f]);
            if q.independent {
                if forced.iter().any(|&o| o != f && closed[f].contains(o)) {
                    return None;
                }
                blocked.union_with(&closed[f]);
            }
        }
        Some(Self {
            ids,
            closed,
            forced,
            undominated,
            blocked,
            independent: q.independent,
        })
    }

    /// A witness of exactly `size` vertices (forced ones included).
    fn search(&self, size: usize) -> Option<Vec<usize>> {
        let mut chosen = self.forced.clone();
        let extra = size - self.forced.len();
        if self.branch(&self.undominated, &self.blocked, extra, &mut chosen) {
            Some(chosen)
        } else {
            None
        }
    }

    fn branch(
        &self,
        undominated: &FixedBitSet,
        blocked: &FixedBitSet,
        left: usize,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if undominated.is_clear() {
            return true;
        }
        if left == 0 {
            return false;
        }
        let n = self.ids.len();

        let mut best: Option<Vec<usize>> = None;
        let mut max_gain = 0;
        for w in undominated.ones() {
            let cands: Vec<usize> = self.closed[w]
                .ones()
                .filter(|&c| !blocked.contains(c))
                .collect();
            if cands.is_empty() {
                return false;
            }
            if best.as_ref().is_none_or(|b| cands.len() < b.len()) {
                best = Some(cands);
            }
        }
        for c in (0..n).filter(|&c| !blocked.contains(c)) {
            max_gain = max_gain.max(self.closed[c].intersection(undominated).count());
        }
        if max_gain * left < undominated.count_ones(..) {
            return false;
        }

        let mut cands = best.expect("undominated is non-empty");
        if !self.independent {
            cands = self.undominated_candidates(&cands, undominated);
        }
        let mut local_blocked = blocked.clone();
        for c in cands {
            let mut next_undominated = undominated.clone();
            next_undominated.difference_with(&self.closed[c]);
            let mut next_blocked = local_blocked.clone();
            next_blocked.insert(c);
            if self.independent {
                next_blocked.union_with(&self.closed[c]);
            }
            chosen.push(c);
            if self.branch(&next_undominated, &next_blocked, left - 1, chosen) {
                return true;
            }
            chosen.pop();
            // Solutions containing `c` were covered by this branch.
            local_blocked.insert(c);
        }
        false
    }

    /// Drops candidates whose undominated coverage is contained in another
    /// candidate's (keeping the smallest index among equals). Only valid
    /// without the independence constraint.
    fn undominated_candidates(&self, cands: &[usize], undominated: &FixedBitSet) -> Vec<usize> {
        let cover: Vec<FixedBitSet> = cands
            .iter()
            .map(|&c| {
                let mut s = self.closed[c].clone();
                s.intersect_with(undominated);
                s
            })
            .collect();
        (0..cands.len())
            .filter(|&a| {
                !(0..cands.len()).any(|b| {
                    b != a
                        && cover[a].is_subset(&cover[b])
                        && (!cover[b].is_subset(&cover[a]) || b < a)
                })
            })
            .map(|a| cands[a])
            .collect()
    }
}

/// Size-capped front end to the exact solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    pub cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Self { cap: DEFAULT_CAP }
    }
}

impl Oracle {
    pub fn with_cap(cap: usize) -> Self {
        Self { cap }
    }

    fn check(&self, g: &Graph) -> Result<()> {
        if g.num_vertices() > self.cap {
            return Err(Error::OracleCapExceeded {
                vertices: g.num_vertices(),
                cap: self.cap,
            });
        }
        Ok(())
    }

    pub fn dominating_set(&self, g: &Graph, k: usize) -> Result<Option<Vec<VertexId>>> {
        self.check(g)?;
        Ok(DominationQuery::plain(g, k).solve())
    }

    pub fn rwb_dominating_set(&self, g: &Graph, k: usize) -> Result<Option<Vec<VertexId>>> {
        self.check(g)?;
        if g.count_color(Color::Red) > k {
            return Ok(None);
        }
        Ok(DominationQuery::rwb(g, k).solve())
    }

    pub fn independent_dominating_set(&self, g: &Graph, k: usize) -> Result<Option<Vec<VertexId>>> {
        self.check(g)?;
        Ok(DominationQuery::independent(g, k).solve())
    }

    pub fn domination_number(&self, g: &Graph) -> Result<usize> {
        Ok(self
            .dominating_set(g, g.num_vertices())?
            .expect("V dominates itself")
            .len())
    }

    pub fn independent_domination_number(&self, g: &Graph) -> Result<usize> {
        Ok(self
            .independent_dominating_set(g, g.num_vertices())?
            .expect("a maximal independent set dominates")
            .len())
    }
}

pub fn has_dominating_set(g: &Graph, k: usize) -> Result<bool> {
    Ok(Oracle::default().dominating_set(g, k)?.is_some())
}

pub fn has_rwb_dominating_set(g: &Graph, k: usize) -> Result<bool> {
    Ok(Oracle::default().rwb_dominating_set(g, k)?.is_some())
}

pub fn has_independent_dominating_set(g: &Graph, k: usize) -> Result<bool> {
    Ok(Oracle::default()
        .independent_dominating_set(g, k)?
        .is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{cycle, petersen, star};

    fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn c5() {
        assert!(has_dominating_set(&cycle(5), 2).unwrap());
        assert!(!has_dominating_set(&cycle(5), 1).unwrap());
        assert!(has_independent_dominating_set(&cycle(5), 2).unwrap());
        assert!(has_rwb_dominating_set(&cycle(5), 2).unwrap());
    }

    #[test]
    fn complete_and_empty() {
        assert!(has_dominating_set(&complete(6), 1).unwrap());
        assert!(has_dominating_set(&Graph::new(), 0).unwrap());
        assert!(!has_dominating_set(&Graph::with_vertices(1), 0).unwrap());
    }

    #[test]
    fn rwb_examples() {
        // red 0 with white neighbour 1
        let mut g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        g.set_color(0, Color::Red).unwrap();
        g.set_color(1, Color::White).unwrap();
        assert!(has_rwb_dominating_set(&g, 1).unwrap());

        // red 0, isolated black 1
        let mut g = Graph::with_vertices(2);
        g.set_color(0, Color::Red).unwrap();
        assert!(!has_rwb_dominating_set(&g, 1).unwrap());
        assert!(has_rwb_dominating_set(&g, 2).unwrap());

        let mut reds = Graph::with_vertices(3);
        for v in 0..3 {
            reds.set_color(v, Color::Red).unwrap();
        }
        assert!(!has_rwb_dominating_set(&reds, 2).unwrap());
    }

    #[test]
    fn independent_examples() {
        assert!(has_independent_dominating_set(&star(3), 1).unwrap());
        let matching = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!has_independent_dominating_set(&matching, 1).unwrap());
        assert!(has_independent_dominating_set(&matching, 2).unwrap());
    }

    #[test]
    fn petersen_numbers() {
        let o = Oracle::default();
        assert_eq!(o.domination_number(&petersen()).unwrap(), 3);
        assert_eq!(o.independent_domination_number(&petersen()).unwrap(), 3);
    }

    #[test]
    fn cap_is_enforced() {
        let g = cycle(21);
        assert_eq!(
            has_dominating_set(&g, 7),
            Err(Error::OracleCapExceeded {
                vertices: 21,
                cap: 20
            })
        );
        assert!(Oracle::with_cap(30)
            .dominating_set(&g, 7)
            .unwrap()
            .is_some());
    }

    #[test]
    fn witnesses_are_minimum() {
        let o = Oracle::with_cap(64);
        let w = o.dominating_set(&cycle(9), 9).unwrap().unwrap();
        assert_eq!(w.len(), 3);
        let w = o
            .independent_dominating_set(&cycle(10), 10)
            .unwrap()
            .unwrap();
        assert_eq!(w.len(), 4);
    }

    #[test]
    fn forbidden_and_forced() {
        let g = star(4);
        let mut q = DominationQuery::plain(&g, 1);
        q.forbidden = vec![0];
        assert!(q.solve().is_none());
        q.budget = 4;
        assert_eq!(q.solve().unwrap().len(), 4);
        let mut q = DominationQuery::independent(&g, 3);
        q.forced = vec![0, 1];
        assert!(q.solve().is_none());
    }
}
