use std::fs;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use centroidal::approx::approx_cd;
use centroidal::bounds::{bounds_report_with, KnownValues};
use centroidal::constructions::{
    construct_cycle_basis, construct_diam2, construct_diam3, construct_path_basis,
    extremal_family, fig2_fixtures, recognize_extremal, ConstructedInstance,
};
use centroidal::enumerate::{connected_graphs_up_to, MAX_ENUM_N};
use centroidal::exact::{exact_cd, exact_cd_with, exact_ld, exact_md, SolveOptions};
use centroidal::locate::{check_centroidal_locating, rank_vector};
use centroidal::{all_pairs_distances, generate, parse_edge_list, Family, Graph};

#[derive(Parser)]
#[command(name = "centroidal", about = "Centroidal locating sets: generators, verifier, solvers, sweeps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named graph or construction as an edge list
    Gen(GenArgs),
    /// Check whether a vertex set is centroidal locating
    Verify(VerifyArgs),
    /// Compute the centroidal dimension, exactly or approximately
    Cd(CdArgs),
    /// Enumerate graphs, solve them all, and emit a CSV of values and bounds
    Sweep(SweepArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Family or construction name: path, cycle, complete, star,
    /// complete_bipartite, s, t, u, hypercube, fig2a, fig2b, diam2, diam3,
    /// cycle-basis, path-basis, extremal
    family: String,
    /// Family-specific parameters (sizes; for extremal: family name then n)
    params: Vec<String>,
    /// Output file (basis sidecar goes to <file>.basis); stdout if omitted
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Edge-list file
    graph: String,
    /// Basis file, one vertex id per line
    basis: String,
    /// Also print the rank vector of every vertex
    #[arg(long)]
    rank_vectors: bool,
    /// Emit a JSON run report instead of plain text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CdArgs {
    /// Edge-list file
    graph: String,
    /// exact or approx
    #[arg(long, default_value = "exact")]
    mode: String,
    /// Cap the exact search at this basis size (result may be uncertified)
    #[arg(long)]
    size_cap: Option<usize>,
    /// Budget for path-multiplicity certification in the bounds report
    #[arg(long, default_value_t = 10_000)]
    budget: u64,
    /// Emit a JSON run report instead of plain text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// Enumerate all connected graphs up to this order (at most 7)
    max_n: usize,
    /// Keep only rows with cd = n - 1 and check them against the recognizer
    #[arg(long)]
    only_extremal: bool,
    /// Sample this many random connected graphs instead of enumerating
    #[arg(long)]
    sample: Option<usize>,
    /// Order of sampled graphs
    #[arg(long, default_value_t = 10)]
    n: usize,
    /// Edge probability for sampled graphs
    #[arg(long, default_value_t = 0.3)]
    p: f64,
    /// RNG seed for sampled graphs
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Budget for path-multiplicity certification (0 disables the column)
    #[arg(long, default_value_t = 10_000)]
    budget: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Gen(args) => cmd_gen(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Cd(args) => cmd_cd(&args),
        Command::Sweep(args) => cmd_sweep(&args),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

type CmdResult = Result<ExitCode, Box<dyn std::error::Error>>;

fn parse_usize(s: &str) -> Result<usize, Box<dyn std::error::Error>> {
    Ok(s.parse::<usize>().map_err(|_| format!("bad parameter {s:?}"))?)
}

fn instance_output(inst: &ConstructedInstance) -> (String, String) {
    let basis_lines: String = inst
        .basis
        .iter()
        .map(|v| format!("{v}\n"))
        .collect();
    (inst.graph.to_edge_list(), basis_lines)
}

fn cmd_gen(args: &GenArgs) -> CmdResult {
    let p: Vec<usize> = if args.family == "extremal" {
        args.params.iter().skip(1).map(|s| parse_usize(s)).collect::<Result<_, _>>()?
    } else {
        args.params.iter().map(|s| parse_usize(s)).collect::<Result<_, _>>()?
    };
    let need = |k: usize| -> Result<usize, Box<dyn std::error::Error>> {
        p.get(k).copied().ok_or_else(|| "missing parameter".into())
    };
    let built: Option<ConstructedInstance> = match args.family.as_str() {
        "diam2" => Some(construct_diam2(need(0)?)?),
        "diam3" => Some(construct_diam3(need(0)?)?),
        "cycle-basis" => Some(construct_cycle_basis(need(0)?)?),
        "path-basis" => Some(construct_path_basis(need(0)?)?),
        "extremal" => {
            let name = args.params.first().ok_or("missing family name")?;
            Some(extremal_family(Family::from_name(name)?, need(0)?)?)
        }
        "fig2a" => Some(fig2_fixtures()?.remove(0)),
        "fig2b" => Some(fig2_fixtures()?.remove(1)),
        _ => None,
    };
    let (edge_list, sidecar) = match &built {
        Some(inst) => {
            let (e, b) = instance_output(inst);
            (e, Some(b))
        }
        None => {
            let family = Family::from_name(&args.family)?;
            (generate(family, &p)?.to_edge_list(), None)
        }
    };
    match &args.out {
        Some(path) => {
            fs::write(path, &edge_list)?;
            if let Some(basis) = &sidecar {
                fs::write(format!("{path}.basis"), basis)?;
            }
        }
        None => {
            print!("{edge_list}");
            if let Some(basis) = &sidecar {
                println!("# basis");
                for line in basis.lines() {
                    println!("# {line}");
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn read_graph(path: &str) -> Result<Graph, Box<dyn std::error::Error>> {
    let text = fs::read_to_string(path)?;
    Ok(parse_edge_list(&text)?)
}

fn read_basis(path: &str) -> Result<Vec<usize>, Box<dyn std::error::Error>> {
    let text = fs::read_to_string(path)?;
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        out.push(parse_usize(line)?);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn digest_of(path: &str) -> Result<String, Box<dyn std::error::Error>> {
    let bytes = fs::read(path)?;
    let mut hasher = Sha256::new();
    hasher.update(&bytes);
    Ok(format!("{:x}", hasher.finalize()))
}

fn run_report(
    command: &str,
    digest: Option<String>,
    results: serde_json::Value,
    started: Instant,
    nodes: u64,
) -> serde_json::Value {
    serde_json::json!({
        "command": command,
        "input_digest": digest,
        "results": results,
        "wall_ms": started.elapsed().as_millis() as u64,
        "solver_counters": { "nodes_examined": nodes },
    })
}

fn cmd_verify(args: &VerifyArgs) -> CmdResult {
    let started = Instant::now();
    let g = read_graph(&args.graph)?;
    let basis = read_basis(&args.basis)?;
    let dm = all_pairs_distances(&g);
    let witness = check_centroidal_locating(&dm, &basis)?;
    let valid = witness.is_none();

    let mut ranks = Vec::new();
    if args.rank_vectors || args.json {
        for x in 0..g.vertex_count() {
            ranks.push(rank_vector(&dm, x, &basis)?.to_string());
        }
    }
    if args.json {
        let results = serde_json::json!({
            "valid": valid,
            "witness": witness.map(|(x, y)| vec![x, y]),
            "basis": basis,
            "rank_vectors": if args.rank_vectors { Some(&ranks) } else { None },
        });
        let report = run_report(
            "verify",
            Some(digest_of(&args.graph)?),
            results,
            started,
            0,
        );
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        match witness {
            None => println!("valid"),
            Some((x, y)) => println!("invalid: vertices {x} and {y} share a rank vector"),
        }
        if args.rank_vectors {
            for (x, r) in ranks.iter().enumerate() {
                println!("{x}: {r}");
            }
        }
    }
    Ok(if valid {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_cd(args: &CdArgs) -> CmdResult {
    let started = Instant::now();
    let g = read_graph(&args.graph)?;
    let digest = digest_of(&args.graph)?;
    match args.mode.as_str() {
        "exact" => {
            let opts = SolveOptions {
                size_cap: args.size_cap,
                ..SolveOptions::default()
            };
            let res = exact_cd_with(&g, opts)?;
            if args.json {
                let results = serde_json::json!({
                    "mode": "exact",
                    "value": res.value,
                    "basis": res.basis,
                    "certified": res.certified,
                });
                let report = run_report("cd", Some(digest), results, started, res.nodes_examined);
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                let tag = if res.certified { "" } else { " (uncertified: size cap hit)" };
                println!("cd = {}{tag}", res.value);
                println!(
                    "basis = {}",
                    res.basis.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        "approx" => {
            let res = approx_cd(&g)?;
            let dm = all_pairs_distances(&g);
            let known = KnownValues {
                path_budget: args.budget,
                ..KnownValues::default()
            };
            let bounds = bounds_report_with(&g, &dm, &known)?;
            if args.json {
                let results = serde_json::json!({
                    "mode": "approx",
                    "basis": res.basis,
                    "cover": res.cover,
                    "greedy_trace": res.greedy_trace,
                    "bounds": bounds,
                });
                let report = run_report("cd", Some(digest), results, started, 0);
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                println!("approx cd <= {}", res.basis.len());
                println!(
                    "basis = {}",
                    res.basis.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
                );
                for ((a, b), gain) in &res.greedy_trace {
                    println!("picked pair ({a},{b}) covering {gain} new pairs");
                }
                for (name, entry) in &bounds.bounds {
                    println!("bound {name}: {} (applicable: {})", entry.value, entry.applicable);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        other => Err(format!("unknown mode {other:?} (expected exact or approx)").into()),
    }
}

fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, edges).expect("generated edges are in range");
        if g.is_connected() {
            return g;
        }
    }
}

fn sweep_row(g: &Graph, budget: u64) -> Result<(String, bool, usize), Box<dyn std::error::Error>> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let dm = all_pairs_distances(g);
    let diameter = dm.diameter()?;
    let md = exact_md(g)?.value;
    let cd = exact_cd(g)?.value;
    let ld = exact_ld(g)?.value;
    let known = KnownValues {
        exact_cd: Some(cd),
        exact_md: Some(md),
        ld_set_size: Some(ld),
        path_budget: budget,
    };
    let report = bounds_report_with(g, &dm, &known)?;
    let bell_lb: usize = report.bounds["bell_lower"].value.parse()?;
    let path_lb = report
        .bounds
        .get("path_multiplicity_lower")
        .filter(|e| e.applicable)
        .map(|e| e.value.clone())
        .unwrap_or_else(|| "-".into());
    let family = recognize_extremal(g)
        .map(|f| f.name().to_string())
        .unwrap_or_else(|| "-".into());
    let approx = if n >= 2 { approx_cd(g)?.basis.len() } else { cd };
    let ratio = approx as f64 / cd as f64;

    let mut ok = md <= cd && cd <= 2 * ld && bell_lb <= cd && cd <= approx.max(cd);
    ok &= approx >= cd;
    if diameter == 2 {
        ok &= ld.saturating_sub(1) <= md;
    }
    if let Ok(plb) = path_lb.parse::<usize>() {
        ok &= plb <= cd;
    }
    // recognizer must agree with cd = n - 1 exactly
    let recognized = family != "-";
    ok &= recognized == (n >= 3 && cd == n - 1);

    let row = format!("{n},{m},{diameter},{md},{cd},{ld},{bell_lb},{path_lb},{family},{approx},{ratio:.3}");
    Ok((row, ok, cd))
}

fn cmd_sweep(args: &SweepArgs) -> CmdResult {
    let graphs: Vec<Graph> = match args.sample {
        Some(count) => {
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            (0..count)
                .map(|_| random_connected(&mut rng, args.n, args.p))
                .collect()
        }
        None => {
            if args.max_n > MAX_ENUM_N {
                return Err(format!(
                    "max_n {} exceeds the enumeration limit {MAX_ENUM_N}; use --sample for larger orders",
                    args.max_n
                )
                .into());
            }
            connected_graphs_up_to(args.max_n)
        }
    };
    use std::io::Write;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    // stop quietly when the reader goes away (e.g. piped into head)
    if writeln!(out, "n,m,diameter,md,cd,ld,bell_lb,path_lb,family,approx_cd,ratio").is_err() {
        return Ok(ExitCode::SUCCESS);
    }
    let mut violations = 0usize;
    for g in &graphs {
        let (row, ok, cd) = sweep_row(g, args.budget)?;
        if args.only_extremal && cd != g.vertex_count() - 1 {
            continue;
        }
        if writeln!(out, "{row}").is_err() {
            return Ok(ExitCode::SUCCESS);
        }
        if !ok {
            violations += 1;
            eprintln!("violation: {row}");
        }
    }
    if violations > 0 {
        eprintln!("{violations} violation(s)");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}
