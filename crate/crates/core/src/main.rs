use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use domkernel::generate::{self, Family, GeneratorSpec, SplitMix64};
use domkernel::graph::{contains_kij, degeneracy_ordering};
use domkernel::io::serialize;
use domkernel::oracle::{verify_kernel, Oracle, Pipeline, VerifyConfig, VerifyReport};
use domkernel::{
    colorize, kernelize_degenerate_with, kernelize_ids_with, kernelize_plain_with,
    kernelize_rwb_with, uncolor, Color, GraphFile, KernelOptions, KernelOutcome, KernelParams,
};

#[derive(Parser)]
#[command(
    name = "domkernel",
    version,
    about = "Dominating Set kernels for biclique-free graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce an instance; writes the kernel or prints NO.
    Kernelize(KernelizeArgs),
    /// Decide an instance exactly.
    Solve(SolveArgs),
    /// Compare kernel answers with exact answers on random instances.
    Verify(VerifyArgs),
    /// Write a generated graph.
    Gen(GenArgs),
    /// Print basic statistics about a graph.
    Inspect(InspectArgs),
}

#[derive(Args)]
struct KernelizeArgs {
    #[arg(long = "i", required_unless_present = "degenerate")]
    i: Option<usize>,
    #[arg(long = "j", required_unless_present = "degenerate")]
    j: Option<usize>,
    /// Budget; defaults to the input file's `k` line.
    #[arg(short = 'k')]
    k: Option<usize>,
    /// Use the degeneracy-ordering route with i = j = D + 1.
    #[arg(long, value_name = "D", conflicts_with = "ids")]
    degenerate: Option<usize>,
    /// Independent Dominating Set instead of Dominating Set.
    #[arg(long)]
    ids: bool,
    /// Reject inputs that contain K_{i,j}.
    #[arg(long)]
    check_kij: bool,
    /// Write the rule trace as JSON lines.
    #[arg(long, value_name = "FILE")]
    trace: Option<PathBuf>,
    #[arg(short = 'o', value_name = "OUT")]
    output: Option<PathBuf>,
    input: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, conflicts_with = "rwb")]
    ids: bool,
    /// Treat colours as red/white/black constraints.
    #[arg(long)]
    rwb: bool,
    #[arg(short = 'k')]
    k: Option<usize>,
    /// Also print a minimum witness.
    #[arg(long)]
    witness: bool,
    /// Largest instance the exact solver accepts.
    #[arg(long, default_value_t = 1000)]
    cap: usize,
    input: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long = "i")]
    i: usize,
    #[arg(long = "j")]
    j: usize,
    #[arg(long)]
    kmax: usize,
    #[arg(long)]
    count: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value = "plain")]
    pipeline: Pipeline,
    /// Largest instance size.
    #[arg(long = "n", default_value_t = 12)]
    nmax: usize,
}

#[derive(Args)]
struct GenArgs {
    #[command(subcommand)]
    model: Model,
    #[arg(short = 'o', value_name = "OUT", global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Model {
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
    /// G(n, p) resampled until K_{i,j}-free.
    #[command(name = "erdos-renyi-kij-free", alias = "er")]
    ErdosRenyi {
        n: usize,
        p: f64,
        i: usize,
        j: usize,
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        max_retries: usize,
    },
}

#[derive(Args)]
struct InspectArgs {
    input: Option<PathBuf>,
    #[arg(long = "i", requires = "j")]
    i: Option<usize>,
    #[arg(long = "j", requires = "i")]
    j: Option<usize>,
}

fn read_input(path: Option<&Path>) -> anyhow::Result<GraphFile> {
    let text = match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?
        }
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .context("reading standard input")?;
            s
        }
    };
    let name = path.map_or("<stdin>".to_string(), |p| p.display().to_string());
    GraphFile::parse(&text).with_context(|| format!("parsing {name}"))
}

fn write_output(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn budget(flag: Option<usize>, file: &GraphFile) -> anyhow::Result<usize> {
    flag.or(file.k)
        .context("no budget: pass -k or add a `k` line to the input")
}

fn kernelize(args: KernelizeArgs) -> anyhow::Result<u8> {
    let file = read_input(args.input.as_deref())?;
    let k = budget(args.k, &file)?;
    let g = &file.graph;
    let colored = file.has_colors();
    let opts = KernelOptions {
        check_kij: args.check_kij,
        ..KernelOptions::default()
    };
    let outcome = if let Some(d) = args.degenerate {
        match kernelize_degenerate_with(&colorize_if(g, colored), d, k, &opts)? {
            KernelOutcome::Reduced {
                graph,
                budget,
                trace,
            } if !colored => {
                let plain = uncolor(&graph, budget)?;
                KernelOutcome::Reduced {
                    graph: plain.graph,
                    budget: plain.budget,
                    trace,
                }
            }
            other => other,
        }
    } else {
        let params = KernelParams::new(args.i.expect("required"), args.j.expect("required"), k)?;
        if args.ids {
            if colored {
                bail!("--ids expects an uncoloured graph");
            }
            kernelize_ids_with(g, &params, &opts)?
        } else if colored {
            kernelize_rwb_with(g, &params, &opts)?
        } else {
            kernelize_plain_with(g, &params, &opts)?
        }
    };
    if let Some(path) = &args.trace {
        fs::write(path, outcome.trace().to_json_lines())
            .with_context(|| format!("writing {}", path.display()))?;
    }
    match outcome.kernel() {
        Some((h, kk)) => {
            write_output(args.output.as_deref(), &serialize(h, Some(kk)))?;
            Ok(0)
        }
        None => {
            println!("NO");
            Ok(1)
        }
    }
}

fn colorize_if(g: &domkernel::Graph, colored: bool) -> domkernel::Graph {
    if colored {
        g.clone()
    } else {
        colorize(g)
    }
}

fn solve(args: SolveArgs) -> anyhow::Result<u8> {
    let file = read_input(args.input.as_deref())?;
    let k = budget(args.k, &file)?;
    let oracle = Oracle::with_cap(args.cap);
    let g = &file.graph;
    let witness = if args.rwb {
        oracle.rwb_dominating_set(g, k)?
    } else if args.ids {
        oracle.independent_dominating_set(g, k)?
    } else {
        oracle.dominating_set(g, k)?
    };
    match witness {
        Some(w) => {
            println!("YES");
            if args.witness {
                let ids: Vec<String> = w.iter().map(|v| v.to_string()).collect();
                println!("{}", ids.join(" "));
            }
            Ok(0)
        }
        None => {
            println!("NO");
            Ok(1)
        }
    }
}

fn verify(args: VerifyArgs) -> anyhow::Result<u8> {
    let params = KernelParams::new(args.i, args.j, 0)?;
    if args.pipeline == Pipeline::Degenerate && (args.i != args.j || args.i < 2) {
        bail!("the degenerate pipeline needs i = j >= 2 (d = i - 1)");
    }
    let mut master = SplitMix64::new(args.seed);
    let instances: Vec<_> = (0..args.count)
        .map(|t| {
            let mut rng = master.split();
            let family = if args.pipeline == Pipeline::Degenerate || t % 2 == 1 {
                Family::Degenerate
            } else {
                Family::ErdosRenyi
            };
            generate::random_instance(&mut rng, family, args.nmax, args.kmax, args.i, args.j)
        })
        .collect();
    let cfg = VerifyConfig::default();
    let reports: Vec<domkernel::Result<VerifyReport>> = instances
        .par_iter()
        .map(|(g, k)| verify_kernel(g, &params.with_k(*k), args.pipeline, &cfg))
        .collect();

    let mut agree = 0;
    let mut violations = 0;
    let mut first_failure = None;
    for (t, r) in reports.iter().enumerate() {
        let ok = match r {
            Ok(r) => {
                agree += usize::from(r.agree);
                violations += r.violations.len();
                r.ok()
            }
            Err(_) => false,
        };
        if !ok && first_failure.is_none() {
            first_failure = Some(t);
        }
    }
    println!("{agree}/{} agree", args.count);
    println!("{violations} bound violations");
    if let Some(t) = first_failure {
        let (g, k) = &instances[t];
        println!("first failing instance #{t}:");
        match &reports[t] {
            Ok(r) => println!("# {}", serde_json::to_string(r)?),
            Err(e) => println!("# error: {e}"),
        }
        print!("{}", serialize(g, Some(*k)));
        return Ok(1);
    }
    Ok(0)
}

fn gen(args: GenArgs) -> anyhow::Result<u8> {
    let spec = match args.model {
        Model::Degenerate { n, d, seed } => GeneratorSpec::Degenerate { n, d, seed },
        Model::Cycle { n } => GeneratorSpec::Cycle { n },
        Model::Star { leaves } => GeneratorSpec::Star { leaves },
        Model::Biclique { a, b } => GeneratorSpec::Biclique { a, b },
        Model::Petersen => GeneratorSpec::Petersen,
        Model::ErdosRenyi {
            n,
            p,
            i,
            j,
            seed,
            max_retries,
        } => GeneratorSpec::ErdosRenyiKijFree {
            n,
            p,
            i,
            j,
            seed,
            max_retries,
        },
    };
    let g = generate::generate(&spec)?;
    write_output(args.output.as_deref(), &serialize(&g, None))?;
    Ok(0)
}

fn inspect(args: InspectArgs) -> anyhow::Result<u8> {
    let file = read_input(args.input.as_deref())?;
    let g = &file.graph;
    let mut out = String::new();
    out += &format!("n {}\nm {}\n", g.num_vertices(), g.num_edges());
    out += &format!(
        "colors R={} W={} B={}\n",
        g.count_color(Color::Red),
        g.count_color(Color::White),
        g.count_color(Color::Black)
    );
    if let Some(k) = file.k {
        out += &format!("k {k}\n");
    }
    out += &format!("degeneracy {}\n", degeneracy_ordering(g).degeneracy);
    if let (Some(i), Some(j)) = (args.i, args.j) {
        if i == 0 || j < i {
            bail!("need 1 <= i <= j");
        }
        match contains_kij(g, i, j)? {
            Some(w) => out += &format!("K_{{{i},{j}}} {:?} {:?}\n", w.left, w.right),
            None => out += &format!("K_{{{i},{j}}} none\n"),
        }
    }
    print!("{out}");
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Kernelize(a) => kernelize(a),
        Command::Solve(a) => solve(a),
        Command::Verify(a) => verify(a),
        Command::Gen(a) => gen(a),
        Command::Inspect(a) => inspect(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
