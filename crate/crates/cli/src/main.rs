use std::collections::BTreeSet;
use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use stokes_core::io::{from_text, to_text, Corpus, Document};
use stokes_core::loops::{lifted_generator, LoopSystem};
use stokes_core::orbits::{canonical_contraction, classify_components, orbit_bfs};
use stokes_core::verify::{run_suite, SUITES};
use stokes_core::{enum_standard_graphs, schroeder, BraidWord, CellGraph, Contraction, SectorConfig, StandardGraph};

#[derive(Parser)]
#[command(name = "stokes", version, about = "Standard graphs, squared braid actions and their orbits")]
struct Cli {
    /// Directory for corpus files written by `enumerate`.
    #[arg(long, global = true, env = "STOKES_CORPUS_DIR")]
    corpus_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone)]
struct ConfigArgs {
    /// Number of Stokes sectors.
    #[arg(long)]
    n: usize,
    /// Subdominant sectors, comma separated.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    sub: Vec<usize>,
}

impl ConfigArgs {
    fn config(&self) -> Result<SectorConfig> {
        Ok(SectorConfig::new(self.n, self.sub.iter().copied())?)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Ivy,
    SingleJunction,
    OneY,
    /// Single junction or one-Y, whichever the configuration admits.
    Canonical,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate standard graphs with chains of at most `max_chain` edges.
    Enumerate {
        #[command(flatten)]
        config: ConfigArgs,
        #[arg(long, default_value_t = 1)]
        max_chain: usize,
        /// Output file; defaults to the corpus directory, else stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Apply a word of squared actions to a graph.
    Act {
        /// `.sgraph` file, or `-` for stdin.
        graph: PathBuf,
        /// Word such as `1^+2,4^-2`.
        word: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Contract a graph and print the certifying word and the result.
    Contract {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Target::Canonical)]
        target: Target,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Canonical strings of the orbit, chains bounded by `bound`.
    Orbit {
        graph: PathBuf,
        #[arg(long, default_value_t = 2)]
        bound: usize,
    },
    /// Classify enumerated graphs into orbit classes.
    Components {
        #[command(flatten)]
        config: ConfigArgs,
        #[arg(long, default_value_t = 1)]
        bound: usize,
        #[arg(long)]
        json: bool,
    },
    /// Small Schröder number s(k).
    Schroeder { k: usize },
    /// Act on the initial loop system of n all-dominant sectors.
    Loops {
        #[arg(long)]
        n: usize,
        /// Word in the generators B_j, e.g. `3^-1,2^+1,3^+1`.
        #[arg(long, default_value = "")]
        word: String,
        /// Also project onto these subdominant sectors.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        project: Vec<usize>,
        /// Print the lifted generator of A_j for the projection instead.
        #[arg(long)]
        lift: Option<usize>,
    },
    /// Run verification suites; exits nonzero on any failure.
    Verify {
        /// One of schroeder, oracle, contraction, components, loops,
        /// corpus, or all.
        #[arg(default_value = "all")]
        suite: String,
        #[arg(long)]
        json: bool,
    },
    /// Graphviz description of a `.sgraph` or `.cgraph` file.
    Export {
        file: PathBuf,
        /// Materialize the cell graph with this window before export.
        #[arg(long)]
        window: Option<usize>,
    },
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_doc<D: Document>(path: &Path) -> Result<D> {
    let text = read_input(path)?;
    from_text(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_graph(path: &Path) -> Result<StandardGraph> {
    let g: StandardGraph = read_doc(path)?;
    let problems = g.validate();
    if !problems.is_empty() {
        let msgs: Vec<String> = problems.iter().map(|p| p.to_string()).collect();
        bail!("{} is not a valid standard graph: {}", path.display(), msgs.join("; "));
    }
    Ok(g)
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Enumerate { config, max_chain, output } => {
            let cfg = config.config()?;
            let graphs = enum_standard_graphs(&cfg, max_chain);
            let count = graphs.len();
            let corpus = Corpus { config: cfg, max_chain: Some(max_chain), graphs };
            let output = output.or_else(|| {
                cli.corpus_dir.as_ref().map(|d| {
                    let sub: Vec<String> = config.sub.iter().map(|s| s.to_string()).collect();
                    d.join(format!("n{}_s{}_c{max_chain}.{}", config.n, sub.join("-"), Corpus::EXTENSION))
                })
            });
            emit(&to_text(&corpus), output.as_deref())?;
            if let Some(p) = output {
                eprintln!("{count} graphs written to {}", p.display());
            }
        }
        Command::Act { graph, word, output } => {
            let g = read_graph(&graph)?;
            let w: BraidWord = word.parse()?;
            emit(&to_text(&g.apply_word(&w)?), output.as_deref())?;
        }
        Command::Contract { graph, target, output } => {
            let g = read_graph(&graph)?;
            let c: Contraction = match target {
                Target::Ivy => g.to_ivy()?,
                Target::SingleJunction => g.to_single_junction()?,
                Target::OneY => g.to_one_y()?,
                Target::Canonical => canonical_contraction(&g)?,
            };
            println!("word {}", c.word);
            println!("canonical {}", c.graph.canonical_string());
            if let Some(p) = output {
                emit(&to_text(&c.graph), Some(&p))?;
            }
        }
        Command::Orbit { graph, bound } => {
            let g = read_graph(&graph)?;
            for s in orbit_bfs(&g, bound) {
                println!("{s}");
            }
        }
        Command::Components { config, bound, json } => {
            let classes = classify_components(&config.config()?, bound)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&classes)?);
            } else {
                println!("{} classes", classes.len());
                for c in &classes {
                    println!("{}", c.report_line());
                }
            }
        }
        Command::Schroeder { k } => println!("{}", schroeder(k)),
        Command::Loops { n, word, project, lift } => {
            let l: BTreeSet<usize> = project.into_iter().collect();
            if let Some(j) = lift {
                println!("{}", lifted_generator(n, &l, j));
                return Ok(ExitCode::SUCCESS);
            }
            let w: BraidWord = word.parse()?;
            let mut sys = LoopSystem::initial(SectorConfig::new(n, [])?).word_action(&w)?;
            if !l.is_empty() {
                sys = sys.project(&l)?;
            }
            println!("{sys}");
        }
        Command::Verify { suite, json } => {
            let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite.as_str()] };
            let mut reports = Vec::new();
            for name in names {
                let r = run_suite(name)?;
                if !json {
                    println!("{}", r.line());
                    for f in &r.failures {
                        println!("    {f}");
                    }
                }
                reports.push(r);
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&reports)?);
            }
            if reports.iter().any(|r| !r.passed) {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Export { file, window } => {
            let text = read_input(&file)?;
            let dot = if let Ok(g) = from_text::<StandardGraph>(&text) {
                match window {
                    Some(w) => g.to_cell_graph(w)?.to_dot(),
                    None => g.to_dot(),
                }
            } else {
                from_text::<CellGraph>(&text)
                    .with_context(|| format!("{} is neither a standard nor a cell graph", file.display()))?
                    .to_dot()
            };
            print!("{dot}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
