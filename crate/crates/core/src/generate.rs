//! Seeded graph generators.
//!
//! All randomness comes from [`SplitMix64`], so a generator spec maps to the
//! same graph on every platform and in any implementation that follows the
//! documented sampling order.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{contains_kij, Graph, VertexId};

/// SplitMix64 (Steele, Lea, Flood). `split` seeds a child stream from the
/// next output of the parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn split(&mut self) -> SplitMix64 {
        SplitMix64::new(self.next_u64())
    }

    /// Uniform in `0..n` by rejection of the biased tail. Panics if `n == 0`.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "empty range");
        let limit = u64::MAX - u64::MAX % n;
        loop {
            let r = self.next_u64();
            if r < limit {
                return r % n;
            }
        }
    }

    /// Uniform in `[0, 1)` from the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorSpec {
    Degenerate {
        n: usize,
        d: usize,
        seed: u64,
    },
    Cycle {
        n: usize,
    },
    Star {
        leaves: usize,
    },
    Biclique {
        a: usize,
        b: usize,
    },
    Petersen,
    ErdosRenyiKijFree {
        n: usize,
        p: f64,
        i: usize,
        j: usize,
        seed: u64,
        max_retries: usize,
    },
}

pub fn generate(spec: &GeneratorSpec) -> Result<Graph> {
    Ok(match *spec {
        GeneratorSpec::Degenerate { n, d, seed } => degenerate(n, d, seed),
        GeneratorSpec::Cycle { n } => {
            if n < 3 {
                return Err(Error::InvalidParams(format!("cycle needs n >= 3, got {n}")));
            }
            cycle(n)
        }
        GeneratorSpec::Star { leaves } => star(leaves),
        GeneratorSpec::Biclique { a, b } => biclique(a, b),
        GeneratorSpec::Petersen => petersen(),
        GeneratorSpec::ErdosRenyiKijFree {
            n,
            p,
            i,
            j,
            seed,
            max_retries,
        } => erdos_renyi_kij_free(n, p, i, j, seed, max_retries)?,
    })
}

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::from_edges(n, &edges).expect("valid cycle")
}

/// Centre `0`, leaves `1..=leaves`.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|l| (0, l)).collect();
    Graph::from_edges(leaves + 1, &edges).expect("valid star")
}

/// Sides `0..a` and `a..a+b`.
pub fn biclique(a: usize, b: usize) -> Graph {
    let edges: Vec<_> = (0..a)
        .flat_map(|u| (a..a + b).map(move |v| (u, v)))
        .collect();
    Graph::from_edges(a + b, &edges).expect("valid biclique")
}

/// Outer 5-cycle `0..5`, spokes `v – v+5`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for v in 0..5 {
        edges.push((v, (v + 1) % 5));
        edges.push((v, v + 5));
        edges.push((v + 5, (v + 2) % 5 + 5));
    }
    Graph::from_edges(10, &edges).expect("valid petersen")
}

/// Vertex `t >= 1` joins `min(d, t)` distinct earlier vertices chosen with
/// Floyd's sampling algorithm, so every vertex has at most `d` neighbours
/// earlier in id order and the graph is `d`-degenerate.
pub fn degenerate(n: usize, d: usize, seed: u64) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let mut g = Graph::with_vertices(n);
    for t in 1..n {
        let m = d.min(t);
        let mut picked: BTreeSet<VertexId> = BTreeSet::new();
        for r in (t - m)..t {
            let x = rng.below(r as u64 + 1) as VertexId;
            if !picked.insert(x) {
                picked.insert(r);
            }
        }
        for u in picked {
            g.add_edge(u, t).expect("fresh edge");
        }
    }
    g
}

/// `G(n, p)` with pairs `(u, v)`, `u < v`, visited in lexicographic order,
/// resampled from the same stream until the sample is `K_{i,j}`-free.
pub fn erdos_renyi_kij_free(
    n: usize,
    p: f64,
    i: usize,
    j: usize,
    seed: u64,
    max_retries: usize,
) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParams(format!(
            "edge probability {p} not in [0, 1]"
        )));
    }
    let mut rng = SplitMix64::new(seed);
    for _ in 0..max_retries.max(1) {
        let mut g = Graph::with_vertices(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.next_f64() < p {
                    g.add_edge(u, v).expect("fresh edge");
                }
            }
        }
        if contains_kij(&g, i, j)?.is_none() {
            return Ok(g);
        }
    }
    Err(Error::RetriesExhausted {
        i,
        j,
        retries: max_retries,
    })
}

/// Draws `G(n, p)` with `p` uniform in `[0.1, 0.6)` and halves `p` each time
/// 50 samples in a row contain `K_{i,j}`, so dense draws degrade gracefully
/// instead of failing. The empty graph is always accepted, so this
/// terminates.
pub fn random_kij_free(rng: &mut SplitMix64, n: usize, i: usize, j: usize) -> Graph {
    let mut p = 0.1 + 0.5 * rng.next_f64();
    loop {
        match erdos_renyi_kij_free(n, p, i, j, rng.next_u64(), 50) {
            Ok(g) => return g,
            Err(_) => p /= 2.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    ErdosRenyi,
    Degenerate,
}

/// One random test instance: `n` uniform in `0..=nmax`, `k` uniform in
/// `0..=kmax`, and a `K_{i,j}`-free graph from `family`. Degenerate graphs
/// use `d = i - 1`, which excludes `K_{i,i}` and hence `K_{i,j}` for `j >= i`.
pub fn random_instance(
    rng: &mut SplitMix64,
    family: Family,
    nmax: usize,
    kmax: usize,
    i: usize,
    j: usize,
) -> (Graph, usize) {
    let n = rng.below(nmax as u64 + 1) as usize;
    let k = rng.below(kmax as u64 + 1) as usize;
    let g = match family {
        Family::ErdosRenyi => random_kij_free(rng, n, i, j),
        Family::Degenerate => degenerate(n, i.saturating_sub(1), rng.next_u64()),
    };
    (g, k)
}
