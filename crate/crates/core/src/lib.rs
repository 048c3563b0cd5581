//! Polynomial kernels for Dominating Set and Independent Dominating Set on
//! graphs excluding a fixed complete bipartite subgraph `K_{i,j}`, with a
//! faster route for `d`-degenerate graphs and exact solvers to check them.
//!
//! ```
//! use domkernel::{generate::cycle, oracle::has_dominating_set, KernelParams, kernelize_plain};
//!
//! let g = cycle(5);
//! let out = kernelize_plain(&g, &KernelParams::new(2, 2, 2)?)?;
//! let (kernel, k) = out.kernel().expect("C5 has a dominating set of size 2");
//! assert!(has_dominating_set(kernel, k)?);
//! # Ok::<(), domkernel::Error>(())
//! ```

pub mod degenerate;
pub mod error;
pub mod generate;
pub mod graph;
pub mod ids;
pub mod io;
pub mod oracle;
pub mod params;
pub mod rules;
pub mod trace;
pub mod transform;

pub use degenerate::{kernelize_degenerate, kernelize_degenerate_with};
pub use error::{Error, Result};
pub use graph::{Color, Graph, VertexId};
pub use ids::{kernelize_ids, kernelize_ids_with};
pub use io::GraphFile;
pub use params::{KernelParams, Thresholds};
pub use rules::{kernelize_rwb, kernelize_rwb_with, KernelOptions, KernelOutcome};
pub use trace::{RuleId, RuleTrace};
pub use transform::{colorize, kernelize_plain, kernelize_plain_with, uncolor};
