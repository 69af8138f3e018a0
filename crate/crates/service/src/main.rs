use std::path::PathBuf;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use cuberig::compiler::{compile, CostModel};
use cuberig::cube::{random_state, CubieState, MoveSequence};
use cuberig::sim::{format_trace, RigState, Simulator};
use cuberig::twophase::{cache, PruneTables, SolveOptions, DEFAULT_MAX_LENGTH};
use cuberig_service::bench::{bench, BenchConfig};
use cuberig_service::engine::{facelets, parse_state, serial_hex, ScrambleMode, SolveOutcome, DEFAULT_NODE_BUDGET};
use cuberig_service::http::{router, App};
use cuberig_service::{load_tables, session, Engine, Rejection, TABLE_CACHE_ENV};

#[derive(Parser)]
#[command(name = "cuberig", version, about = "Two-phase cube solver and three-motor rig simulator")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// TOML file with flip_ms, rot90_ms, bot_cw_ms, bot_ccw_ms, bot180_ms.
    #[arg(long, global = true)]
    cost_model: Option<PathBuf>,
    /// Pruning table cache; built and written on first use.
    #[arg(long, global = true, env = TABLE_CACHE_ENV)]
    table_cache: Option<PathBuf>,
    /// Search nodes spent improving on the first solution.
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    /// Return the first solution found instead of improving it.
    #[arg(long, global = true)]
    first: bool,
    /// Longest acceptable solution.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_LENGTH)]
    max_length: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a 54-character facelet state.
    Solve {
        state: Option<String>,
        #[arg(long, conflicts_with = "state")]
        file: Option<PathBuf>,
        /// Solve the random state for --seed instead.
        #[arg(long, conflicts_with_all = ["state", "file"])]
        random: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Random state with a generating sequence (random moves with --length).
    Scramble {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        length: Option<usize>,
        /// Also emit the rig program performing the scramble.
        #[arg(long)]
        real: bool,
        #[arg(long)]
        json: bool,
    },
    /// Lower a move sequence to rig primitives.
    Compile {
        moves: String,
        /// Lower every move literally, without merging same-face neighbours.
        #[arg(long)]
        no_simplify: bool,
    },
    /// Compile and run a move sequence on the simulator, printing the trace.
    Simulate {
        moves: String,
        /// Starting state (default solved).
        #[arg(long)]
        state: Option<String>,
        #[arg(long)]
        no_simplify: bool,
        /// Fault on layer turns issued with the cover raised.
        #[arg(long)]
        strict: bool,
    },
    /// Manage the pruning table cache.
    Tables {
        #[command(subcommand)]
        action: TablesAction,
    },
    /// Solve random states; report the length histogram and mean rig time.
    Bench {
        #[arg(long, default_value_t = 1000)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 18)]
        min_len: usize,
        #[arg(long, default_value_t = 24)]
        max_len: usize,
    },
    /// Run the HTTP service.
    Serve {
        #[arg(long, default_value = "127.0.0.1")]
        host: String,
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value_t = session::DEFAULT_CAPACITY)]
        sessions: usize,
    },
}

#[derive(Subcommand)]
enum TablesAction {
    /// Build the tables and write the cache file.
    Build,
    /// Check the cache file against freshly built tables.
    Verify,
}

fn cost_model(g: &Global) -> Result<CostModel> {
    match &g.cost_model {
        Some(p) => {
            let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            CostModel::parse(&text).with_context(|| format!("parsing {}", p.display()))
        }
        None => Ok(CostModel::default()),
    }
}

fn engine(g: &Global) -> Result<Engine> {
    let (tables, status) = load_tables(g.table_cache.as_deref()).context("loading pruning tables")?;
    if let (Some(status), Some(path)) = (status, &g.table_cache) {
        eprintln!("tables: {status:?} {}", path.display());
    }
    let options = SolveOptions {
        max_length: g.max_length,
        improve: !g.first,
        node_budget: (!g.first).then_some(g.budget),
        time_budget: None,
    };
    Ok(Engine::new(tables, cost_model(g)?).with_options(options))
}

/// Prefixes pipeline errors with their verdict name.
fn named(e: Rejection) -> anyhow::Error {
    anyhow::anyhow!("{}: {e}", e.name())
}

fn print_solve(out: &SolveOutcome) {
    println!("solution: {}", out.solution);
    println!("length: {}", out.length);
    let names: Vec<&str> = out.program.iter().map(|p| p.name()).collect();
    println!("program: {}", names.join(" "));
    println!("serial_hex: {}", out.serial_hex);
    println!("total_ms: {}", out.total_ms);
}

fn run(cli: Cli) -> Result<()> {
    let g = &cli.global;
    match cli.command {
        Command::Solve { state, file, random, seed, json } => {
            let engine = engine(g)?;
            let cube = if random {
                random_state(seed)
            } else {
                let text = match (state, file) {
                    (Some(s), _) => s,
                    (None, Some(p)) => std::fs::read_to_string(&p).with_context(|| format!("reading {}", p.display()))?,
                    (None, None) => bail!("give a state, --file or --random"),
                };
                parse_state(&text).map_err(named)?
            };
            let out = engine.solve_cube(&cube).map_err(named)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&out)?);
            } else {
                println!("state: {}", out.state);
                print_solve(&out);
            }
        }
        Command::Scramble { seed, length, real, json } => {
            let engine = engine(g)?;
            let mode = if real { ScrambleMode::Real } else { ScrambleMode::Virtual };
            let out = engine.scramble(mode, seed, length).map_err(named)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&out)?);
            } else {
                println!("state: {}", out.state);
                println!("moves: {}", out.moves);
                if let (Some(prog), Some(hex), Some(ms)) = (&out.program, &out.serial_hex, out.total_ms) {
                    let names: Vec<&str> = prog.iter().map(|p| p.name()).collect();
                    println!("program: {}", names.join(" "));
                    println!("serial_hex: {hex}");
                    println!("total_ms: {ms}");
                }
            }
        }
        Command::Compile { moves, no_simplify } => {
            let cost = cost_model(g)?;
            let seq: MoveSequence = moves.parse()?;
            let prog = compile(&seq, &cost, !no_simplify);
            println!("program: {}", prog.names().join(" "));
            println!("primitives: {}", prog.len());
            println!("serial_hex: {}", serial_hex(&prog));
            println!("total_ms: {}", prog.total_ms());
        }
        Command::Simulate { moves, state, no_simplify, strict } => {
            let cost = cost_model(g)?;
            let seq: MoveSequence = moves.parse()?;
            let start = match state {
                Some(s) => parse_state(&s).map_err(named)?,
                None => CubieState::SOLVED,
            };
            let sim = if strict { Simulator::strict(cost) } else { Simulator::new(cost) };
            let prog = compile(&seq, &cost, !no_simplify);
            let (end, trace) = sim.run_program(&RigState::new(start), &prog)?;
            print!("{}", format_trace(&trace));
            println!("total_ms: {}", end.elapsed_ms);
            println!("final: {}", facelets(&end.cube));
            println!("solved: {}", end.cube.is_solved());
        }
        Command::Tables { action } => {
            let Some(path) = &g.table_cache else {
                bail!("no cache path; pass --table-cache or set {TABLE_CACHE_ENV}");
            };
            match action {
                TablesAction::Build => {
                    let tables = cuberig::twophase::Tables::build();
                    cache::save(&tables.prune, path)?;
                    println!("wrote {}", path.display());
                }
                TablesAction::Verify => {
                    let stored = cache::load(path).with_context(|| format!("loading {}", path.display()))?;
                    let fresh = PruneTables::build(&cuberig::twophase::MoveTables::build());
                    if stored != fresh {
                        bail!("{} does not match freshly built tables", path.display());
                    }
                    println!("ok {}", path.display());
                }
            }
        }
        Command::Bench { n, seed, min_len, max_len } => {
            let engine = engine(g)?;
            let cfg = BenchConfig {
                n,
                first_seed: seed,
                lengths: min_len..=max_len,
            };
            let report = bench(&engine, &cfg).map_err(named)?;
            println!("length\tcount");
            for (len, count) in &report.histogram {
                println!("{len}\t{count}");
            }
            println!("solved: {}", report.solved);
            println!("kept: {} (lengths {min_len}..={max_len})", report.kept);
            println!("mean_length: {:.2}", report.mean_length);
            println!("mean_ms: {:.1}", report.mean_ms);
            println!("min_ms: {}", report.min_ms);
            println!("max_ms: {}", report.max_ms);
        }
        Command::Serve { host, port, sessions } => {
            let engine = engine(g)?;
            let app = Arc::new(App::new(engine, sessions));
            let rt = tokio::runtime::Runtime::new()?;
            rt.block_on(async move {
                let listener = tokio::net::TcpListener::bind((host.as_str(), port)).await?;
                eprintln!("listening on {}", listener.local_addr()?);
                axum::serve(listener, router(app)).await?;
                anyhow::Ok(())
            })?;
        }
    }
    Ok(())
}

fn main() {
    if let Err(e) = run(Cli::parse()) {
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}
