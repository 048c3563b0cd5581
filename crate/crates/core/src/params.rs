//! Kernel parameters and the explicit thresholds derived from them.

use serde::Serialize;

use crate::error::{Error, Result};

/// `(i, j, k)` for `K_{i,j}`-free inputs, optionally tagged with the
/// degeneracy `d` when `i = j = d + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KernelParams {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub d: Option<usize>,
}

impl KernelParams {
    pub fn new(i: usize, j: usize, k: usize) -> Result<Self> {
        if i == 0 || j < i {
            return Err(Error::InvalidParams(format!(
                "need j >= i >= 1, got i={i}, j={j}"
            )));
        }
        Ok(Self { i, j, k, d: None })
    }

    /// Parameters for a `d`-degenerate input, which is `K_{d+1,d+1}`-free.
    pub fn degenerate(d: usize, k: usize) -> Self {
        Self {
            i: d + 1,
            j: d + 1,
            k,
            d: Some(d),
        }
    }

    pub fn with_k(self, k: usize) -> Self {
        Self { k, ..self }
    }

    pub fn thresholds(&self) -> Thresholds {
        Thresholds::new(self.i, self.j, self.k)
    }
}

/// Rule thresholds. All arithmetic saturates at `u64::MAX`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Thresholds {
    /// `b(p)` for `p = 1..=i-2`, stored at index `p - 1`.
    pub b: Vec<u64>,
    /// High-degree threshold for the forced-vertex rule.
    pub h: u64,
    /// Cap on the number of black vertices in a reduced YES instance:
    /// `k` solution vertices dominate themselves and at most `h` black
    /// neighbours each, so `k·(h + 1)`.
    pub black_cap: u64,
    /// `k·h`, the blacks `k` vertices can dominate through edges alone.
    /// Too small as a cap: the path on three vertices with `i = j = 2`,
    /// `k = 1` is reduced, has three blacks, `k·h = 2`, and is a YES instance.
    pub neighbor_cap: u64,
}

impl Thresholds {
    pub fn new(i: usize, j: usize, k: usize) -> Self {
        let b = (1..i.saturating_sub(1))
            .map(|p| degree_threshold(p + 1, j, k))
            .collect();
        let h = degree_threshold(i, j, k);
        Self {
            b,
            h,
            black_cap: (k as u64).saturating_mul(h.saturating_add(1)),
            neighbor_cap: (k as u64).saturating_mul(h),
        }
    }

    /// Threshold of Rule 2.p. Panics if `p` is outside `1..=i-2`.
    pub fn b(&self, p: usize) -> u64 {
        self.b[p - 1]
    }
}

/// `j·k^(t-1) + k^(t-2) + … + k` (just `j·k` when `t = 2`).
pub fn degree_threshold(t: usize, j: usize, k: usize) -> u64 {
    let k = k as u64;
    let mut lead = j as u64;
    for _ in 1..t {
        lead = lead.saturating_mul(k);
    }
    let mut tail = 0u64;
    let mut power = 1u64;
    for _ in 1..t.saturating_sub(1) {
        power = power.saturating_mul(k);
        tail = tail.saturating_add(power);
    }
    lead.saturating_add(tail)
}

pub fn binomial(n: u64, r: u64) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for t in 0..r {
        acc = match acc.checked_mul((n - t) as u128) {
            Some(x) => x / (t as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Upper bound on white vertices in a fully reduced instance with
/// `blacks` black vertices: distinct black neighbourhoods of size `2..i`
/// plus at most `j - 1` whites per `i`-set of blacks.
pub fn white_bound(blacks: usize, i: usize, j: usize) -> u128 {
    let b = blacks as u64;
    let small = (2..i as u64).fold(0u128, |acc, t| acc.saturating_add(binomial(b, t)));
    small.saturating_add(((j - 1) as u128).saturating_mul(binomial(b, i as u64)))
}

/// Vertex bound for the uncoloured kernel: the reduced instance without its
/// red vertices plus a hub and `k + |W| + 1` pendants per white vertex.
pub fn plain_kernel_bound(params: &KernelParams) -> u128 {
    let t = params.thresholds();
    let blacks = t.black_cap as u128;
    let whites = white_bound(
        t.black_cap.min(usize::MAX as u64) as usize,
        params.i,
        params.j,
    );
    let per_white = (params.k as u128).saturating_add(whites).saturating_add(2);
    blacks
        .saturating_add(whites)
        .saturating_add(per_white.saturating_mul(whites))
}

/// Vertex bound for the independent-domination kernel.
pub fn ids_kernel_bound(params: &KernelParams) -> u128 {
    (params.k as u128).saturating_add(params.thresholds().black_cap as u128)
}
