//! Runs a pipeline on a small instance and cross-checks its answer and
//! kernel size against the exact solvers.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::degenerate::kernelize_degenerate_with;
use crate::error::{Error, Result};
use crate::graph::{Color, Graph};
use crate::ids::kernelize_ids_with;
use crate::params::{ids_kernel_bound, plain_kernel_bound, white_bound, KernelParams};
use crate::rules::{kernelize_i1, kernelize_rwb_with, KernelOptions, KernelOutcome};
use crate::transform::{colorize, kernelize_plain_with, uncolor};

use super::Oracle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Pipeline {
    Plain,
    Rwb,
    Degenerate,
    Ids,
}

impl fmt::Display for Pipeline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pipeline::Plain => "plain",
            Pipeline::Rwb => "rwb",
            Pipeline::Degenerate => "degenerate",
            Pipeline::Ids => "ids",
        })
    }
}

impl FromStr for Pipeline {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(Pipeline::Plain),
            "rwb" => Ok(Pipeline::Rwb),
            "degenerate" => Ok(Pipeline::Degenerate),
            "ids" => Ok(Pipeline::Ids),
            other => Err(Error::InvalidParams(format!("unknown pipeline {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Cap for solving the input instance.
    pub input_cap: usize,
    /// Cap for solving kernels, which can be much larger than their input
    /// once pendant gadgets are attached.
    pub kernel_cap: usize,
    pub options: KernelOptions,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            input_cap: super::DEFAULT_CAP,
            kernel_cap: 4096,
            options: KernelOptions {
                check_kij: false,
                verify_fixpoint: true,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub pipeline: Pipeline,
    pub agree: bool,
    pub input_answer: bool,
    /// `false` when the pipeline answered NO itself.
    pub kernel_answer: bool,
    /// Second opinion where the pipeline has one: the generic pipeline's
    /// answer for the degenerate fast path, the coloured intermediate's for
    /// the plain pipeline.
    pub reference_answer: Option<bool>,
    pub decided_no: bool,
    pub kernel_size: usize,
    pub budget: Option<usize>,
    /// Colour counts of the reduced coloured instance, where there is one.
    pub reduced: Option<ColorCounts>,
    pub violations: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ColorCounts {
    pub red: usize,
    pub white: usize,
    pub black: usize,
}

impl ColorCounts {
    pub fn of(g: &Graph) -> Self {
        Self {
            red: g.count_color(Color::Red),
            white: g.count_color(Color::White),
            black: g.count_color(Color::Black),
        }
    }
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.agree && self.violations.is_empty()
    }
}

/// Kernel-size checks on a reduced coloured instance.
/// The red-neighbourhood check only applies when the input satisfied it.
fn rwb_bounds(
    h: &Graph,
    params: &KernelParams,
    check_reds: bool,
    violations: &mut Vec<String>,
) -> ColorCounts {
    let counts = ColorCounts::of(h);
    let t = params.thresholds();
    let ColorCounts {
        red: reds,
        white: whites,
        black: blacks,
    } = counts;
    if reds > params.k {
        violations.push(format!("|R| = {reds} > k = {}", params.k));
    }
    if blacks as u64 > t.black_cap {
        violations.push(format!("|B| = {blacks} > {}", t.black_cap));
    }
    let wb = white_bound(blacks, params.i, params.j);
    if whites as u128 > wb {
        violations.push(format!("|W| = {whites} > {wb}"));
    }
    if check_reds && !h.reds_see_only_white() {
        violations.push("a red vertex has a non-white neighbour".into());
    }
    counts
}

fn outcome_of(outcome: &KernelOutcome) -> (bool, usize, Option<usize>) {
    match outcome.kernel() {
        Some((g, k)) => (false, g.num_vertices(), Some(k)),
        None => (true, 0, None),
    }
}

/// Runs `pipeline` on `(g, params.k)` and compares the answer implied by the
/// kernel with the answer on the input. `g` is read as a plain graph except
/// by the rwb pipeline, which keeps its colours.
pub fn verify_kernel(
    g: &Graph,
    params: &KernelParams,
    pipeline: Pipeline,
    cfg: &VerifyConfig,
) -> Result<VerifyReport> {
    let input_oracle = Oracle::with_cap(cfg.input_cap);
    let kernel_oracle = Oracle::with_cap(cfg.kernel_cap);
    let k = params.k;
    let mut violations = Vec::new();
    let mut reference_answer = None;
    let mut reduced = None;

    let (input_answer, outcome, kernel_answer) = match pipeline {
        Pipeline::Plain | Pipeline::Rwb => {
            let (input, input_answer) = if pipeline == Pipeline::Plain {
                let plain = colorize(g);
                let ans = input_oracle.dominating_set(&plain, k)?.is_some();
                (plain, ans)
            } else {
                (g.clone(), input_oracle.rwb_dominating_set(g, k)?.is_some())
            };
            if params.i == 1 {
                let out = kernelize_i1(&input, params.j, k)?;
                let ans = match out.kernel() {
                    Some((h, kk)) => kernel_oracle.dominating_set(h, kk)?.is_some(),
                    None => false,
                };
                (input_answer, out, ans)
            } else {
                let out = kernelize_rwb_with(&input, params, &cfg.options)?;
                let ans = match out.kernel() {
                    None => false,
                    Some((h, kk)) => {
                        reduced = Some(rwb_bounds(
                            h,
                            params,
                            input.reds_see_only_white(),
                            &mut violations,
                        ));
                        let rwb_ans = kernel_oracle.rwb_dominating_set(h, kk)?.is_some();
                        if pipeline == Pipeline::Rwb {
                            rwb_ans
                        } else {
                            reference_answer = Some(rwb_ans);
                            let plain = uncolor(h, kk)?;
                            let whites = h.count_color(Color::White);
                            let expected = h.num_vertices() - h.count_color(Color::Red)
                                + (kk + whites + 2) * whites;
                            if plain.graph.num_vertices() != expected {
                                violations.push(format!(
                                    "uncoloured kernel has {} vertices, expected {expected}",
                                    plain.graph.num_vertices()
                                ));
                            }
                            let bound = plain_kernel_bound(params);
                            if plain.graph.num_vertices() as u128 > bound {
                                violations.push(format!(
                                    "uncoloured kernel has {} vertices > {bound}",
                                    plain.graph.num_vertices()
                                ));
                            }
                            let direct = kernelize_plain_with(g, params, &cfg.options)?;
                            if direct.kernel() != Some((&plain.graph, plain.budget)) {
                                violations.push(
                                    "kernelize_plain disagrees with reduce-then-uncolour".into(),
                                );
                            }
                            let ans = kernel_oracle
                                .dominating_set(&plain.graph, plain.budget)?
                                .is_some();
                            let (graph, budget, trace) =
                                (plain.graph, plain.budget, out.trace().clone());
                            let out = KernelOutcome::Reduced {
                                graph,
                                budget,
                                trace,
                            };
                            return finish(
                                pipeline,
                                input_answer,
                                out,
                                ans,
                                reference_answer,
                                reduced,
                                violations,
                            );
                        }
                    }
                };
                (input_answer, out, ans)
            }
        }
        Pipeline::Degenerate => {
            let d = params.d.unwrap_or(params.i.saturating_sub(1));
            let p = KernelParams::degenerate(d, k);
            let input_answer = input_oracle.dominating_set(g, k)?.is_some();
            let input = colorize(g);
            let out = kernelize_degenerate_with(&input, d, k, &cfg.options)?;
            let generic = kernelize_rwb_with(&input, &p, &cfg.options)?;
            let solve = |o: &KernelOutcome| -> Result<bool> {
                Ok(match o.kernel() {
                    Some((h, kk)) => kernel_oracle.rwb_dominating_set(h, kk)?.is_some(),
                    None => false,
                })
            };
            reference_answer = Some(solve(&generic)?);
            if let Some((h, _)) = out.kernel() {
                reduced = Some(rwb_bounds(h, &p, true, &mut violations));
            }
            let ans = solve(&out)?;
            (input_answer, out, ans)
        }
        Pipeline::Ids => {
            let input_answer = input_oracle.independent_dominating_set(g, k)?.is_some();
            let out = kernelize_ids_with(g, params, &cfg.options)?;
            let ans = match out.kernel() {
                Some((h, kk)) => {
                    if params.i > 1 {
                        let bound = ids_kernel_bound(params);
                        if h.num_vertices() as u128 > bound {
                            violations.push(format!(
                                "IDS kernel has {} vertices > {bound}",
                                h.num_vertices()
                            ));
                        }
                    }
                    kernel_oracle.independent_dominating_set(h, kk)?.is_some()
                }
                None => false,
            };
            (input_answer, out, ans)
        }
    };
    finish(
        pipeline,
        input_answer,
        outcome,
        kernel_answer,
        reference_answer,
        reduced,
        violations,
    )
}

fn finish(
    pipeline: Pipeline,
    input_answer: bool,
    outcome: KernelOutcome,
    kernel_answer: bool,
    reference_answer: Option<bool>,
    reduced: Option<ColorCounts>,
    violations: Vec<String>,
) -> Result<VerifyReport> {
    let (decided_no, kernel_size, budget) = outcome_of(&outcome);
    let agree = input_answer == kernel_answer && reference_answer.is_none_or(|r| r == input_answer);
    Ok(VerifyReport {
        pipeline,
        agree,
        input_answer,
        kernel_answer,
        reference_answer,
        decided_no,
        kernel_size,
        budget,
        reduced,
        violations,
    })
}
