use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use orientkit::exact::{self, decode_model, export_cnf, parse_model};
use orientkit::generators::{self, FamilySpec};
use orientkit::t4proof::theorem4_summary;
use orientkit::{
    bipartition, k_orientation, mad_exact, proper_bipartite_orientation,
    proper_three_orientation, verify_orientation, Graph, Orientation, Side,
};

const FORMATS: &str = "\
Formats:
  graph        first line `n m [planar]` (the token `planar` asserts planarity),
               then m lines `u v` with 0 <= u, v < n. Graph input is read from
               INPUT or stdin.
  orientation  m lines `u v` meaning arc u -> v, in edge-index order. A leading
               `n m [planar]` header is accepted. Commands that produce an
               orientation print the graph header followed by the arcs on
               stdout, which is again a graph document; with -o they write the
               bare arc lines to the file instead.
  cnf          DIMACS; variable e+1 is edge e (true orients u -> v), listed in
               `c edge e : u v` comment lines.
  model        solver output: `v`-prefixed or bare signed literals.

Exit status: 0 success, 1 domain error (infeasible, precondition failed),
2 usage or parse error.

Example:
  orientkit gen q3 | orientkit proper3 | orientkit verify";

#[derive(Parser)]
#[command(name = "orientkit", version, about = "Proper orientations of graphs", after_long_help = FORMATS)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact maximum average degree with a densest induced subgraph.
    Mad { input: Option<PathBuf> },
    /// An orientation with every indegree at most K.
    Orient {
        #[arg(short)]
        k: usize,
        input: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Proper (K+1)-orientation of a bipartite graph by switching arcs out of X.
    Proper {
        #[arg(short)]
        k: usize,
        /// X class: 0 = class of vertex 0, 1 = the other, auto = first that fits.
        #[arg(long = "x-class", value_enum, default_value = "auto")]
        x_class: XClass,
        input: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Proper 3-orientation of a planar bipartite graph with minimum degree 3.
    Proper3 {
        input: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Recount an orientation and check properness.
    Verify {
        input: Option<PathBuf>,
        /// Orientation file; without it the input's own edge lines are read as arcs.
        #[arg(long)]
        orientation: Option<PathBuf>,
    },
    /// Exact proper orientation number by backtracking (small graphs).
    Exact {
        #[arg(long)]
        kmax: usize,
        input: Option<PathBuf>,
        /// Write the optimal orientation here.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// DIMACS CNF satisfiable iff a proper K-orientation exists.
    Cnf {
        #[arg(short)]
        k: usize,
        input: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Turn a SAT model of `cnf -k K` back into an orientation.
    Decode {
        #[arg(short)]
        k: usize,
        #[arg(long)]
        model: PathBuf,
        input: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Generate q3 | pdw:M | t4:EXTRA | kbip:A,B | path:N | cycle:N | star:N.
    Gen {
        family: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// For t4: write the role -> vertex id table here.
        #[arg(long = "id-table")]
        id_table: Option<PathBuf>,
    },
    /// Replay the lower-bound certificate and verify the 4-orientation witness.
    #[command(name = "check-t4")]
    CheckT4 {
        #[arg(long, default_value_t = 0)]
        extra: usize,
        #[arg(long = "emit-witness")]
        emit_witness: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum XClass {
    Auto,
    #[value(name = "0")]
    Zero,
    #[value(name = "1")]
    One,
}

enum Failure {
    Domain(String),
    Usage(String),
}

impl Failure {
    fn domain(e: impl ToString) -> Self {
        Failure::Domain(e.to_string())
    }
    fn usage(e: impl ToString) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn read_text(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| Failure::usage(format!("{}: {e}", p.display()))),
        None => {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::usage(format!("stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn read_graph(path: Option<&Path>) -> Result<Graph, Failure> {
    Graph::parse(&read_text(path)?).map_err(|e| Failure::usage(format!("parse: {e}")))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

/// Oriented document on stdout, or bare arc lines into `output`.
fn emit_orientation(graph: &Graph, o: &Orientation, output: Option<&Path>) -> Outcome {
    match output {
        Some(path) => {
            write_file(path, &o.to_arc_lines(graph))?;
            Ok(String::new())
        }
        None => Ok(o.to_oriented_document(graph)),
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Mad { input } => {
            let g = read_graph(input.as_deref())?;
            let r = mad_exact(&g).map_err(Failure::domain)?;
            let witness: Vec<String> = r.witness.iter().map(|v| v.to_string()).collect();
            Ok(format!("mad = {}\nwitness = {}\n", r.mad, witness.join(" ")))
        }
        Command::Orient { k, input, output } => {
            let g = read_graph(input.as_deref())?;
            let o = k_orientation(&g, k).map_err(|inf| {
                let w: Vec<String> = inf.witness.iter().map(|v| v.to_string()).collect();
                Failure::Domain(format!("{inf}; witness {}", w.join(" ")))
            })?;
            emit_orientation(&g, &o, output.as_deref())
        }
        Command::Proper {
            k,
            x_class,
            input,
            output,
        } => {
            let g = read_graph(input.as_deref())?;
            let part = bipartition(&g).map_err(Failure::domain)?;
            let side = match x_class {
                XClass::Zero => Side::X,
                XClass::One => Side::Y,
                XClass::Auto => [Side::X, Side::Y]
                    .into_iter()
                    .find(|&s| part.class(s).iter().all(|&x| g.degree(x) > k))
                    .unwrap_or(Side::X),
            };
            let o = proper_bipartite_orientation(&g, &part, side, k).map_err(Failure::domain)?;
            emit_orientation(&g, &o, output.as_deref())
        }
        Command::Proper3 { input, output } => {
            let g = read_graph(input.as_deref())?;
            let o = proper_three_orientation(&g).map_err(Failure::domain)?;
            emit_orientation(&g, &o, output.as_deref())
        }
        Command::Verify { input, orientation } => {
            let text = read_text(input.as_deref())?;
            let g = Graph::parse(&text).map_err(|e| Failure::usage(format!("parse: {e}")))?;
            let o = match orientation {
                Some(path) => Orientation::parse(&g, &read_text(Some(&path))?)
                    .map_err(|e| Failure::usage(format!("orientation: {e}")))?,
                None => Orientation::forward(&g),
            };
            let rep = verify_orientation(&g, &o).map_err(Failure::usage)?;
            let mut out = format!("proper={} max_indegree={}\n", rep.proper, rep.max_indegree);
            for &e in &rep.violations {
                let (u, v) = g.edge(e);
                out.push_str(&format!(
                    "violation edge {e}: {u} {v} both indegree {}\n",
                    rep.indegrees[u]
                ));
            }
            Ok(out)
        }
        Command::Exact {
            kmax,
            input,
            witness,
        } => {
            let g = read_graph(input.as_deref())?;
            let r = exact::proper_orientation_number(&g, kmax).map_err(Failure::domain)?;
            if let Some(path) = witness {
                write_file(&path, &r.witness.to_arc_lines(&g))?;
            }
            Ok(format!("chi_orient = {}\n", r.value))
        }
        Command::Cnf { k, input, output } => {
            let g = read_graph(input.as_deref())?;
            let text = export_cnf(&g, k).to_dimacs();
            match output {
                Some(path) => {
                    write_file(&path, &text)?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
        Command::Decode {
            k,
            model,
            input,
            output,
        } => {
            let g = read_graph(input.as_deref())?;
            let lits = parse_model(&read_text(Some(&model))?).map_err(Failure::usage)?;
            let o = decode_model(&g, k, &lits).map_err(Failure::domain)?;
            emit_orientation(&g, &o, output.as_deref())
        }
        Command::Gen {
            family,
            output,
            id_table,
        } => {
            let spec: FamilySpec = family.parse().map_err(Failure::usage)?;
            let (g, table) = match spec.family {
                generators::Family::Theorem4 => {
                    let (g, layout) = generators::theorem4(spec.params[0]);
                    (g, Some(layout.id_table()))
                }
                _ => (generators::generate(&spec).map_err(Failure::usage)?, None),
            };
            if let Some(path) = id_table {
                let table = table.ok_or_else(|| Failure::usage("--id-table applies to t4 only"))?;
                write_file(&path, &table)?;
            }
            match output {
                Some(path) => {
                    write_file(&path, &g.serialize())?;
                    Ok(String::new())
                }
                None => Ok(g.serialize()),
            }
        }
        Command::CheckT4 {
            extra,
            emit_witness,
        } => {
            let s = theorem4_summary(extra);
            let mut out = format!("graph: t4:{extra} n={} m={}\n", s.n, s.m);
            for (name, g) in ["step 1", "step 2a", "step 2b", "step 3"]
                .iter()
                .zip(s.certificate.gadgets())
            {
                out.push_str(&format!(
                    "{name}: {} [{} orientations, {} under hypothesis, {}]\n",
                    g.description,
                    g.enumerated_count,
                    g.hypothesis_count,
                    if g.holds() {
                        "holds".to_string()
                    } else {
                        format!("{} counterexamples", g.counterexamples.len())
                    }
                ));
            }
            for (i, fact) in s.certificate.narrative.iter().enumerate() {
                out.push_str(&format!("fact {}: {fact}\n", i + 1));
            }
            out.push_str(&format!("lower bound (chi_orient >= 4): {}\n", s.certificate.conclusion));
            out.push_str(&format!(
                "witness: proper={} max_indegree={}\n",
                s.witness_report.proper, s.witness_report.max_indegree
            ));
            if let Some(path) = emit_witness {
                let (g, _) = generators::theorem4(extra);
                write_file(&path, &s.witness.to_arc_lines(&g))?;
            }
            match s.chi {
                Some(chi) => {
                    out.push_str(&format!("chi_orient = {chi}\n"));
                    Ok(out)
                }
                None => {
                    print!("{out}");
                    Err(Failure::Domain("certificate or witness check failed".into()))
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            let mut stdout = io::stdout().lock();
            // a closed pipe downstream is not our error
            let _ = stdout.write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
