//! Command-line front end: index building, single queries, community
//! validation, and benchmark dataset/run orchestration.
//!
//! Machine-readable output goes to stdout; human-oriented notes go to
//! stderr. Exit status is nonzero only for operational errors — a query
//! that finds no community is still a successful, reason-coded run.

use anyhow::{anyhow, bail, Context, Result};
use bcc_core::bench::{
    self, parse_communities_file, per_query_csv_header, summary_csv_header, BenchConfig,
    QueryConstraints,
};
use bcc_core::engine::{self, BccQuery, Strategy};
use bcc_core::graph::LabeledGraph;
use bcc_core::index::{OfflineIndex, RwrParams};
use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fs;
use std::path::PathBuf;
use std::time::{Duration, Instant};

#[derive(Parser)]
#[command(
    name = "bcc",
    about = "Butterfly-core community search over two-label graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the offline index (coreness, butterfly degrees, scores).
    BuildIndex(BuildIndexArgs),
    /// Run one community query and print its result record.
    Query(QueryArgs),
    /// Check a community file against the BCC criteria.
    Validate(ValidateArgs),
    /// Synthesize a benchmark dataset and write its files.
    BenchGen(ConfigArgs),
    /// Run the benchmark pipeline end to end and write metrics CSVs.
    BenchRun(ConfigArgs),
}

#[derive(Args)]
struct BuildIndexArgs {
    /// Edge list: one `u w` pair per line, `#` comments allowed.
    #[arg(long)]
    graph: PathBuf,
    /// Label file: one `id label` pair per line, two label symbols.
    #[arg(long)]
    labels: PathBuf,
    /// Output index path.
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value_t = 0.5)]
    gamma1: f64,
    #[arg(long, default_value_t = 0.5)]
    gamma2: f64,
    #[arg(long, default_value_t = 0.15)]
    restart_prob: f64,
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    #[arg(long, default_value_t = 150)]
    max_iters: u32,
}

#[derive(Args)]
struct QueryArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    labels: PathBuf,
    /// Index file previously written by build-index.
    #[arg(long)]
    index: PathBuf,
    /// Left query vertex (external id).
    #[arg(long)]
    ql: u64,
    /// Right query vertex (external id); must carry the other label.
    #[arg(long)]
    qr: u64,
    /// Core threshold for ql's side; defaults to ql's coreness.
    #[arg(long)]
    k1: Option<u32>,
    /// Core threshold for qr's side; defaults to qr's coreness.
    #[arg(long)]
    k2: Option<u32>,
    /// Butterfly-degree threshold.
    #[arg(long, default_value_t = 1)]
    b: u64,
    /// Local-expansion size cap.
    #[arg(long, default_value_t = engine::DEFAULT_ETA)]
    eta: usize,
    #[arg(long, default_value = "fast")]
    strategy: Strategy,
    /// Also write the community's external ids to this file.
    #[arg(long)]
    community_out: Option<PathBuf>,
}

#[derive(Args)]
struct ValidateArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    labels: PathBuf,
    /// Community file: whitespace-separated external vertex ids.
    #[arg(long)]
    community: PathBuf,
    #[arg(long)]
    ql: u64,
    #[arg(long)]
    qr: u64,
    #[arg(long)]
    k1: u32,
    #[arg(long)]
    k2: u32,
    #[arg(long, default_value_t = 1)]
    b: u64,
}

#[derive(Args)]
struct ConfigArgs {
    /// Flat key = value configuration file.
    #[arg(long)]
    config: PathBuf,
    /// Overrides the config's rng_seed.
    #[arg(long)]
    seed: Option<u64>,
}

fn main() {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::BuildIndex(args) => cmd_build_index(args),
        Command::Query(args) => cmd_query(args),
        Command::Validate(args) => cmd_validate(args),
        Command::BenchGen(args) => cmd_bench_gen(args),
        Command::BenchRun(args) => cmd_bench_run(args),
    };
    if let Err(err) = outcome {
        eprintln!("error: {err:#}");
        std::process::exit(1);
    }
}

fn load_graph(graph: &PathBuf, labels: &PathBuf) -> Result<LabeledGraph> {
    LabeledGraph::load(graph, labels).with_context(|| {
        format!(
            "loading graph {} / labels {}",
            graph.display(),
            labels.display()
        )
    })
}

fn cmd_build_index(args: BuildIndexArgs) -> Result<()> {
    let started = Instant::now();
    let g = load_graph(&args.graph, &args.labels)?;
    let rwr = RwrParams {
        restart_prob: args.restart_prob,
        tolerance: args.tol,
        max_iters: args.max_iters,
    };
    let idx = OfflineIndex::build(&g, rwr, args.gamma1, args.gamma2)?;
    idx.save(&args.out)
        .with_context(|| format!("writing index {}", args.out.display()))?;
    println!("vertices={}", g.vertex_count());
    println!("edges={}", g.edge_count());
    println!("total_butterflies={}", idx.butterflies.total_butterflies());
    println!("build_seconds={:.6}", started.elapsed().as_secs_f64());
    eprintln!("index written to {}", args.out.display());
    Ok(())
}

fn cmd_query(args: QueryArgs) -> Result<()> {
    let g = load_graph(&args.graph, &args.labels)?;
    let idx = OfflineIndex::load(&args.index, &g)
        .with_context(|| format!("loading index {}", args.index.display()))?;
    let resolve = |ext: u64| {
        g.resolve(ext)
            .ok_or_else(|| anyhow!("vertex {ext} not present in the graph"))
    };
    let q_l = resolve(args.ql)?;
    let q_r = resolve(args.qr)?;
    // default thresholds follow the endpoint coreness, floored at 1
    let k1 = args.k1.unwrap_or_else(|| idx.delta(q_l).max(1));
    let k2 = args.k2.unwrap_or_else(|| idx.delta(q_r).max(1));
    if args.k1.is_none() || args.k2.is_none() {
        eprintln!("using k1={k1} k2={k2} (endpoint coreness)");
    }
    let query = BccQuery {
        q_l,
        q_r,
        k1,
        k2,
        b: args.b,
        eta: args.eta,
        strategy: args.strategy,
    };
    let result = engine::run_query(&g, &idx, &query)?;
    if let Some(path) = &args.community_out {
        let ids: Vec<String> = result
            .community
            .iter()
            .map(|&v| g.external_id(v).to_string())
            .collect();
        fs::write(path, ids.join("\n") + "\n")
            .with_context(|| format!("writing community {}", path.display()))?;
        eprintln!("community written to {}", path.display());
    }
    eprintln!("{}", engine::result_csv_header());
    println!("{}", engine::result_csv_row(&g, &result));
    Ok(())
}

fn cmd_validate(args: ValidateArgs) -> Result<()> {
    let g = load_graph(&args.graph, &args.labels)?;
    let text = fs::read_to_string(&args.community)
        .with_context(|| format!("reading community file {}", args.community.display()))?;
    let mut members = Vec::new();
    for token in text.split_whitespace() {
        let ext: u64 = token
            .parse()
            .with_context(|| format!("bad vertex id {token:?} in community file"))?;
        members.push(
            g.resolve(ext)
                .ok_or_else(|| anyhow!("community vertex {ext} not present in the graph"))?,
        );
    }
    let resolve = |ext: u64| {
        g.resolve(ext)
            .ok_or_else(|| anyhow!("vertex {ext} not present in the graph"))
    };
    let query = BccQuery {
        q_l: resolve(args.ql)?,
        q_r: resolve(args.qr)?,
        k1: args.k1,
        k2: args.k2,
        b: args.b,
        eta: engine::DEFAULT_ETA,
        strategy: Strategy::Fast,
    };
    query.validate(&g)?;
    let report = engine::validate_bcc(&g, &members, &query);
    println!("criterion,pass");
    for (criterion, pass) in &report.checks {
        println!("{},{}", criterion.code(), pass);
    }
    println!("overall,{}", report.ok());
    Ok(())
}

/// Dataset per config: raw files when given, synthetic otherwise.
fn load_or_generate(
    cfg: &BenchConfig,
) -> Result<(LabeledGraph, bench::GroundTruth, bench::SynthReport)> {
    let (edges, communities) = match (&cfg.graph_file, &cfg.communities_file) {
        (Some(graph_file), Some(communities_file)) => {
            let text = fs::read_to_string(graph_file)
                .with_context(|| format!("reading raw graph {}", graph_file.display()))?;
            let mut edges = Vec::new();
            for (lineno, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let mut it = line.split_whitespace();
                let (Some(a), Some(b)) = (it.next(), it.next()) else {
                    bail!("{}:{}: expected two ids", graph_file.display(), lineno + 1);
                };
                edges.push((a.parse::<u64>()?, b.parse::<u64>()?));
            }
            (edges, parse_communities_file(communities_file)?)
        }
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
            bench::generate_community_graph(
                cfg.synth_communities,
                cfg.synth_comm_size_min,
                cfg.synth_comm_size_max,
                cfg.synth_intra_degree,
                &mut rng,
            )
        }
    };
    Ok(bench::synthesize_dataset(&edges, &communities, cfg)?)
}

fn load_config(args: &ConfigArgs) -> Result<BenchConfig> {
    let mut cfg = BenchConfig::load(&args.config)?;
    if let Some(seed) = args.seed {
        cfg.rng_seed = seed;
    }
    Ok(cfg)
}

fn cmd_bench_gen(args: ConfigArgs) -> Result<()> {
    let cfg = load_config(&args)?;
    let (g, gt, report) = load_or_generate(&cfg)?;
    fs::create_dir_all(&cfg.out_dir)
        .with_context(|| format!("creating {}", cfg.out_dir.display()))?;

    let mut graph_txt = String::from("# synthesized labeled benchmark graph\n");
    for (u, v) in g.edges() {
        graph_txt.push_str(&format!("{} {}\n", g.external_id(u), g.external_id(v)));
    }
    let mut labels_txt = String::new();
    for v in g.vertices() {
        labels_txt.push_str(&format!(
            "{} {}\n",
            g.external_id(v),
            g.label_names()[g.label(v).index()]
        ));
    }
    let mut communities_txt = String::new();
    for community in &gt.communities {
        let line: Vec<String> = community
            .iter()
            .map(|&v| g.external_id(v).to_string())
            .collect();
        communities_txt.push_str(&line.join("\t"));
        communities_txt.push('\n');
    }
    for (name, contents) in [
        ("graph.txt", &graph_txt),
        ("labels.txt", &labels_txt),
        ("communities.txt", &communities_txt),
    ] {
        let path = cfg.out_dir.join(name);
        fs::write(&path, contents).with_context(|| format!("writing {}", path.display()))?;
        eprintln!("wrote {}", path.display());
    }
    println!("vertices={}", g.vertex_count());
    println!("edges={}", g.edge_count());
    println!("communities={}", gt.communities.len());
    println!(
        "cross_edges_added={}",
        report.per_community_cross.iter().sum::<usize>()
    );
    println!("noise_edges_added={}", report.noise_edges_added);
    Ok(())
}

fn cmd_bench_run(args: ConfigArgs) -> Result<()> {
    let cfg = load_config(&args)?;
    let (g, gt, _) = load_or_generate(&cfg)?;
    eprintln!(
        "dataset ready: {} vertices, {} edges, {} communities",
        g.vertex_count(),
        g.edge_count(),
        gt.communities.len()
    );
    let rwr = RwrParams {
        restart_prob: cfg.restart_prob,
        tolerance: cfg.tolerance,
        max_iters: cfg.max_iters,
    };
    let started = Instant::now();
    let idx = OfflineIndex::build(&g, rwr, cfg.gamma1, cfg.gamma2)?;
    eprintln!("index built in {:.2?}", started.elapsed());

    let timeout = Duration::from_secs_f64(cfg.timeout_secs);
    let constraints = QueryConstraints {
        eta: cfg.eta,
        ..Default::default()
    };
    let queries = if cfg.num_queries == 0 {
        Vec::new()
    } else {
        bench::generate_queries(&g, &idx, &gt, cfg.num_queries, constraints, cfg.rng_seed)?
    };
    let base = bench::run_benchmark(&g, &idx, &gt, &queries, timeout)?;

    let mut per_query = String::new();
    per_query.push_str(&per_query_csv_header());
    per_query.push('\n');
    for record in &base.records {
        per_query.push_str(&record.csv_row());
        per_query.push('\n');
    }

    let mut summary = String::new();
    summary.push_str(&summary_csv_header());
    summary.push('\n');
    for s in &base.summaries {
        summary.push_str(&s.csv_row("", ""));
        summary.push('\n');
    }
    for &k in &cfg.sweep_k {
        let constraints = QueryConstraints {
            fixed_k: Some(k),
            eta: cfg.eta,
            ..Default::default()
        };
        let queries =
            bench::generate_queries(&g, &idx, &gt, cfg.num_queries, constraints, cfg.rng_seed)?;
        let report = bench::run_benchmark(&g, &idx, &gt, &queries, timeout)?;
        for s in &report.summaries {
            summary.push_str(&s.csv_row("k", &k.to_string()));
            summary.push('\n');
        }
        eprintln!("sweep k={k} done");
    }
    for &b in &cfg.sweep_b {
        let constraints = QueryConstraints {
            b,
            eta: cfg.eta,
            ..Default::default()
        };
        let queries =
            bench::generate_queries(&g, &idx, &gt, cfg.num_queries, constraints, cfg.rng_seed)?;
        let report = bench::run_benchmark(&g, &idx, &gt, &queries, timeout)?;
        for s in &report.summaries {
            summary.push_str(&s.csv_row("b", &b.to_string()));
            summary.push('\n');
        }
        eprintln!("sweep b={b} done");
    }

    fs::create_dir_all(&cfg.out_dir)
        .with_context(|| format!("creating {}", cfg.out_dir.display()))?;
    let per_query_path = cfg.out_dir.join("per_query.csv");
    let summary_path = cfg.out_dir.join("summary.csv");
    fs::write(&per_query_path, per_query)
        .with_context(|| format!("writing {}", per_query_path.display()))?;
    fs::write(&summary_path, &summary)
        .with_context(|| format!("writing {}", summary_path.display()))?;
    eprintln!("wrote {}", per_query_path.display());
    eprintln!("wrote {}", summary_path.display());
    print!("{summary}");
    Ok(())
}
