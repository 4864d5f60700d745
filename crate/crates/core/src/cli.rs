//! The `glg` command-line front end.
//!
//! Every analysis command reads a `.glg` file (`-` for standard input) and
//! prints a JSON object with a `"schema"` key, or a plain table with
//! `--format table`. Exit codes: 0 on success, 1 on a domain error, 2 on a
//! usage error.

use std::ffi::OsString;
use std::io::{self, Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{count_basis, enumerate_basis, relation_generators, RelationOptions};
use crate::graph::{
    canonical_rank, gen_chain, gen_delta, gen_random_dag, gen_random_tree, gen_sym_orbit, gen_tree, parse_digraph,
    parse_graph, parse_lengths, parse_tree_spec, Digraph, Permutation, RankedDigraph,
};
use crate::json;
use crate::moebius::{m_lower, m_series, m_upper, moebius_table};
use crate::ops::{self, check_identities, IdentityOptions, OpResult, Status};
use crate::oracle::{graded_dimensions, independence_check, minimal_relation_series, nci_check, OracleConfig};
use crate::series::{hilbert_series, hilbert_tree};

#[derive(Debug, Parser)]
#[command(name = "glg", version, about = "Algebras of generalized layered graphs")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Debug, Args)]
struct Global {
    /// Highest degree to compute (default 10 for series, 5 for oracle commands).
    #[arg(short = 'N', long = "max-degree", global = true)]
    max_degree: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Seed for random generators.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Maximum number of monomials per degree in the oracle.
    #[arg(long = "budget-monomials", default_value_t = 200_000, value_parser = clap::value_parser!(u64).range(1..), global = true)]
    budget_monomials: u64,
    /// Keep only relations of degree below K.
    #[arg(long = "truncate-relations", value_name = "K", global = true)]
    truncate_relations: Option<u32>,
    /// Cancel common factors of (1 - z) in rational forms.
    #[arg(long = "reduce-rational", global = true)]
    reduce_rational: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and validate a graph.
    Validate { file: String },
    /// Canonical ranks of a DAG (ranks in the file are optional and ignored).
    RankCan { file: String },
    /// All rank functions bounded by B.
    RankEnum {
        file: String,
        #[arg(long)]
        bound: u32,
    },
    /// Moebius function of the path order.
    Moebius { file: String },
    /// The rank generating polynomial M(G)(z).
    Mseries { file: String },
    /// Hilbert series (1 - z) / (1 - z M(G)(z)).
    Hilbert { file: String },
    /// Monomial basis counts by degree (and the words with --words).
    Basis {
        file: String,
        #[arg(long)]
        words: bool,
    },
    /// Generators of the relation ideal.
    Relations {
        file: String,
        /// Pair every two parallel paths instead of using a reference path.
        #[arg(long = "all-pairs")]
        all_pairs: bool,
    },
    /// Graded dimensions by exact linear algebra.
    Oracle {
        file: String,
        /// Also check that the monomial basis is a basis in every degree.
        #[arg(long)]
        independence: bool,
    },
    /// Noncommutative complete intersection check.
    Nci { file: String },
    /// Series identities of the graph operations.
    CheckIdentities {
        #[arg(required = true, num_args = 1..=2)]
        files: Vec<String>,
        /// Highest degree for oracle dimension comparisons (0 skips them).
        #[arg(long = "oracle-degree", default_value_t = 4)]
        oracle_degree: u32,
    },
    /// Graph operations.
    #[command(subcommand)]
    Op(OpCommand),
    /// Graph generators; output is .glg text.
    #[command(subcommand)]
    Gen(GenCommand),
}

#[derive(Debug, Subcommand)]
enum OpCommand {
    /// Place a vertex on an edge.
    AddVertex {
        file: String,
        #[arg(long)]
        edge: String,
        /// Rank of the new vertex above the head of the edge.
        #[arg(long)]
        index: u32,
        #[arg(long, default_value = "w")]
        name: String,
    },
    /// Add an edge.
    AddEdge {
        file: String,
        #[arg(long)]
        tail: String,
        #[arg(long)]
        head: String,
        #[arg(long, default_value = "e_new")]
        name: String,
    },
    /// Reverse all edges.
    Invert { file: String },
    /// Identify the minimal vertices.
    Bouquet { first: String, second: String },
    /// Identify the minimal and the maximal vertices.
    Dbouquet { first: String, second: String },
}

#[derive(Debug, Subcommand)]
enum GenCommand {
    /// One edge of length D.
    Delta { d: u32 },
    /// A chain with the given edge lengths from the top, e.g. 1,2.
    Chain { lengths: String },
    /// A rooted tree from PARENT:LENGTH entries for vertices 1, 2, ..., e.g. 0:1,0:2,1:3.
    Tree {
        spec: Option<String>,
        /// Random tree with this many vertices instead of a spec.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long = "max-length", default_value_t = 3)]
        max_length: u32,
    },
    /// Subsets of the orbits of a permutation of 1..N in cycle notation.
    Sym {
        n: usize,
        #[arg(default_value = "id")]
        permutation: String,
    },
    /// A seeded random DAG.
    Random {
        #[arg(long, default_value_t = 5)]
        vertices: usize,
        #[arg(long = "edge-prob", default_value_t = 0.4)]
        edge_prob: f64,
        /// Ranks are lifted at random up to this bound (0 keeps canonical ranks).
        #[arg(long = "rank-bound", default_value_t = 0)]
        rank_bound: u32,
        /// Join vertices without out-edges so that one sink remains.
        #[arg(long = "single-sink")]
        single_sink: bool,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
    /// A report was produced but describes failures.
    Report(String, String),
}

type Outcome = Result<String, Failure>;

fn domain(e: impl std::fmt::Display) -> Failure {
    Failure::Domain(e.to_string())
}

fn read_input(path: &str) -> Result<(String, String), Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Domain(format!("<stdin>: {e}")))?;
        Ok(("<stdin>".to_string(), s))
    } else {
        let s = std::fs::read_to_string(path).map_err(|e| Failure::Domain(format!("{path}: {e}")))?;
        Ok((path.to_string(), s))
    }
}

fn load(path: &str) -> Result<RankedDigraph, Failure> {
    let (name, text) = read_input(path)?;
    parse_graph(&text).map_err(|e| Failure::Domain(format!("{name}: {e}")))
}

fn load_dag(path: &str) -> Result<Digraph, Failure> {
    let (name, text) = read_input(path)?;
    parse_digraph(&text).map_err(|e| Failure::Domain(format!("{name}: {e}")))
}

fn render(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&json::with_schema(v)).expect("serializable");
    s.push('\n');
    s
}

fn row(cells: &[String]) -> String {
    let mut s = cells.join("\t");
    s.push('\n');
    s
}

fn seq<T: std::fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

impl Global {
    fn oracle(&self) -> OracleConfig {
        OracleConfig {
            budget_monomials: self.budget_monomials,
            truncation: self.truncate_relations,
            ..OracleConfig::default()
        }
    }

    fn series_degree(&self) -> u32 {
        self.max_degree.unwrap_or(10)
    }

    fn oracle_degree(&self) -> u32 {
        self.max_degree.unwrap_or(5)
    }
}

fn execute(cli: Cli) -> Outcome {
    let gl = &cli.global;
    let table = gl.format == Format::Table;
    match cli.command {
        Command::Validate { file } => {
            let g = load(&file)?;
            let minimal = g.unique_minimal_vertex().ok().map(|v| g.name(v).to_string());
            if table {
                let mut s = row(&["vertices".into(), g.vertex_count().to_string()]);
                s += &row(&["edges".into(), g.edge_count().to_string()]);
                s += &row(&["max_rank".into(), g.max_rank().to_string()]);
                s += &row(&["unique_minimal".into(), minimal.unwrap_or_else(|| "-".into())]);
                s += &row(&["rank_zero_sink".into(), g.has_rank_zero_sink().to_string()]);
                for e in g.edges() {
                    s += &row(&[format!("length {}", g.edge_name(e)), g.length(e).to_string()]);
                }
                return Ok(s);
            }
            let lengths: serde_json::Map<String, Value> = g
                .edges()
                .map(|e| (g.edge_name(e).to_string(), json!(g.length(e))))
                .collect();
            Ok(render(json!({
                "valid": true,
                "vertices": g.vertex_count(),
                "edges": g.edge_count(),
                "max_rank": g.max_rank(),
                "unique_minimal": minimal,
                "rank_zero_sink": g.has_rank_zero_sink(),
                "lengths": lengths,
            })))
        }
        Command::RankCan { file } => {
            let d = load_dag(&file)?;
            let r = canonical_rank(&d).map_err(domain)?;
            if table {
                return Ok(d
                    .vertex_names()
                    .iter()
                    .zip(r.iter())
                    .map(|(n, k)| row(&[n.clone(), k.to_string()]))
                    .collect());
            }
            let g = d.with_ranks(&r).map_err(domain)?;
            Ok(render(json!({
                "vertices": d.vertex_names(),
                "ranks": r,
                "graph": g.to_glg(),
            })))
        }
        Command::RankEnum { file, bound } => {
            let d = load_dag(&file)?;
            let e = crate::graph::enumerate_rank_functions(&d, bound).map_err(domain)?;
            if table {
                let mut s = row(d.vertex_names());
                for f in &e.functions {
                    s += &row(&f.iter().map(|x| x.to_string()).collect::<Vec<_>>());
                }
                return Ok(s);
            }
            Ok(render(json!({
                "vertices": d.vertex_names(),
                "bound": e.bound,
                "canonical_max": e.canonical_max,
                "below_canonical": e.below_canonical,
                "count": e.functions.len(),
                "functions": e.functions,
            })))
        }
        Command::Moebius { file } => {
            let g = load(&file)?;
            let t = moebius_table(&g);
            if table {
                return Ok(t
                    .pairs()
                    .map(|(v, w, mu)| row(&[g.name(v).into(), g.name(w).into(), mu.to_string()]))
                    .collect());
            }
            Ok(render(json!({ "pairs": json::moebius(&g, &t) })))
        }
        Command::Mseries { file } => {
            let g = load(&file)?;
            let m = m_series(&g).map_err(domain)?;
            let lower = m_lower(&g).map_err(domain)?;
            let upper = m_upper(&g).ok();
            if table {
                let mut s = row(&["M".into(), m.to_string()]);
                s += &row(&["M_lower".into(), lower.to_string()]);
                if let Some(u) = &upper {
                    s += &row(&["M_upper".into(), u.to_string()]);
                }
                return Ok(s);
            }
            Ok(render(json!({
                "m": json::poly(&m),
                "m_text": m.to_string(),
                "m_lower": json::poly(&lower),
                "m_upper": upper.as_ref().map(json::poly),
            })))
        }
        Command::Hilbert { file } => {
            let g = load(&file)?;
            let n = gl.series_degree();
            let h = hilbert_series(&g, n as usize).map_err(domain)?;
            let rational = if gl.reduce_rational {
                h.rational.reduced()
            } else {
                h.rational.clone()
            };
            let tree = hilbert_tree(&g).ok();
            if table {
                let mut s = row(&["rational".into(), rational.to_string()]);
                for (k, c) in h.expansion.coeffs().iter().enumerate() {
                    s += &row(&[k.to_string(), c.to_string()]);
                }
                return Ok(s);
            }
            let mut v = json::series(&rational, &h.expansion);
            v["rational"] = json!(rational.to_string());
            if let Some(t) = tree {
                v["tree_formula"] = json!(t.to_string());
            }
            Ok(render(v))
        }
        Command::Basis { file, words } => {
            let g = load(&file)?;
            let n = gl.series_degree();
            let counts = count_basis(&g, n).map_err(domain)?;
            let listed = if words {
                Some(enumerate_basis(&g, n).map_err(domain)?)
            } else {
                None
            };
            if table {
                let mut s = String::new();
                for (k, c) in counts.iter().enumerate() {
                    s += &row(&[k.to_string(), c.to_string()]);
                }
                if let Some(ws) = &listed {
                    for (k, group) in ws.iter().enumerate() {
                        for w in group {
                            let word = if w.0.is_empty() { "()".to_string() } else { w.render(&g) };
                            s += &row(&[k.to_string(), word]);
                        }
                    }
                }
                return Ok(s);
            }
            let mut v = json!({ "counts": counts.iter().map(json::uint).collect::<Vec<_>>(), "order": n });
            if let Some(ws) = listed {
                v["words"] = ws
                    .iter()
                    .map(|group| group.iter().map(|w| Value::from(w.render(&g))).collect::<Value>())
                    .collect();
            }
            Ok(render(v))
        }
        Command::Relations { file, all_pairs } => {
            let g = load(&file)?;
            let opts = RelationOptions {
                truncation: gl.truncate_relations,
                all_pairs,
                ..Default::default()
            };
            let rels = relation_generators(&g, opts).map_err(domain)?;
            if table {
                return Ok(rels
                    .iter()
                    .map(|r| {
                        row(&[
                            g.name(r.tail).into(),
                            g.name(r.head).into(),
                            r.degree.to_string(),
                            r.poly.render(&g),
                        ])
                    })
                    .collect());
            }
            Ok(render(
                json!({ "count": rels.len(), "relations": json::relations(&g, &rels) }),
            ))
        }
        Command::Oracle { file, independence } => {
            let g = load(&file)?;
            let n = gl.oracle_degree();
            let cfg = gl.oracle();
            let dims = graded_dimensions(&g, n, &cfg).map_err(domain)?;
            let rel = minimal_relation_series(&g, n, &cfg).map_err(domain)?;
            let hilbert = hilbert_series(&g, n as usize).ok().map(|h| h.expansion);
            let agrees = hilbert.as_ref().map(|h| {
                h.coeffs()
                    .iter()
                    .zip(&dims)
                    .all(|(a, b)| *a == num_bigint::BigInt::from(*b))
            });
            let indep = if independence {
                Some(independence_check(&g, n, &cfg).map_err(domain)?)
            } else {
                None
            };
            if table {
                let mut s = row(&["degree".into(), "dim".into(), "minimal_relations".into()]);
                for k in 0..=n as usize {
                    s += &row(&[k.to_string(), dims[k].to_string(), rel[k].to_string()]);
                }
                if let Some(a) = agrees {
                    s += &row(&["hilbert_agrees".into(), a.to_string()]);
                }
                if let Some(r) = &indep {
                    s += &row(&["independent".into(), r.ok.to_string()]);
                }
                return Ok(s);
            }
            let mut v = json!({
                "order": n,
                "dims": dims,
                "relation_series": rel,
                "hilbert": hilbert.as_ref().map(|h| json::ints(h.coeffs())),
                "hilbert_agrees": agrees,
            });
            if let Some(r) = indep {
                v["independence"] = serde_json::to_value(r).expect("serializable");
            }
            Ok(render(v))
        }
        Command::Nci { file } => {
            let g = load(&file)?;
            let v = nci_check(&g, gl.oracle_degree(), &gl.oracle()).map_err(domain)?;
            if table {
                let mut s = row(&["is_nci".into(), v.is_nci.to_string()]);
                s += &row(&["generator_series".into(), seq(&v.generator_series)]);
                s += &row(&["relation_series".into(), seq(&v.relation_series)]);
                s += &row(&["one_minus_g_plus_r".into(), seq(&v.one_minus_g_plus_r)]);
                s += &row(&[
                    "witness".into(),
                    v.witness.map(|w| w.to_string()).unwrap_or_else(|| "-".into()),
                ]);
                return Ok(s);
            }
            Ok(render(json::nci(&v)))
        }
        Command::CheckIdentities { files, oracle_degree } => {
            let graphs = files.iter().map(|f| load(f)).collect::<Result<Vec<_>, _>>()?;
            let opts = IdentityOptions {
                order: gl.series_degree() as usize,
                oracle_degree: (oracle_degree > 0).then_some(oracle_degree),
                oracle: gl.oracle(),
            };
            let checks = check_identities(&graphs, &opts).map_err(domain)?;
            let failed = checks.iter().filter(|c| c.status == Status::Fail).count();
            let out = if table {
                checks
                    .iter()
                    .map(|c| {
                        let status = serde_json::to_value(c.status).expect("serializable");
                        row(&[
                            status.as_str().unwrap_or_default().to_string(),
                            c.identity.to_string(),
                            c.instance.clone(),
                            c.detail.clone(),
                        ])
                    })
                    .collect()
            } else {
                render(json!({
                    "all_passed": failed == 0,
                    "failed": failed,
                    "checks": checks,
                }))
            };
            if failed > 0 {
                return Err(Failure::Report(out, format!("{failed} identity checks failed")));
            }
            Ok(out)
        }
        Command::Op(op) => {
            let r = run_op(op)?;
            if table {
                return Ok(r.graph.to_glg());
            }
            Ok(render(json::op_result(&r)))
        }
        Command::Gen(g) => run_gen(g, gl.seed).map(|g| g.to_glg()),
    }
}

fn run_op(op: OpCommand) -> Result<OpResult, Failure> {
    match op {
        OpCommand::AddVertex {
            file,
            edge,
            index,
            name,
        } => ops::add_vertex(&load(&file)?, &edge, index, &name).map_err(domain),
        OpCommand::AddEdge { file, tail, head, name } => {
            ops::add_edge(&load(&file)?, &tail, &head, &name).map_err(domain)
        }
        OpCommand::Invert { file } => Ok(ops::invert(&load(&file)?)),
        OpCommand::Bouquet { first, second } => ops::bouquet(&load(&first)?, &load(&second)?).map_err(domain),
        OpCommand::Dbouquet { first, second } => ops::double_bouquet(&load(&first)?, &load(&second)?).map_err(domain),
    }
}

fn run_gen(g: GenCommand, seed: u64) -> Result<RankedDigraph, Failure> {
    match g {
        GenCommand::Delta { d } => gen_delta(d).map_err(domain),
        GenCommand::Chain { lengths } => gen_chain(&parse_lengths(&lengths).map_err(domain)?).map_err(domain),
        GenCommand::Tree {
            spec,
            random,
            max_length,
        } => match (spec, random) {
            (Some(s), None) => gen_tree(&parse_tree_spec(&s).map_err(domain)?).map_err(domain),
            (None, Some(n)) => gen_random_tree(n, max_length, seed).map_err(domain),
            _ => Err(Failure::Usage("gen tree takes either a SPEC or --random N".into())),
        },
        GenCommand::Sym { n, permutation } => {
            gen_sym_orbit(&Permutation::parse(n, &permutation).map_err(domain)?).map_err(domain)
        }
        GenCommand::Random {
            vertices,
            edge_prob,
            rank_bound,
            single_sink,
        } => gen_random_dag(vertices, edge_prob, rank_bound, seed, single_sink).map_err(domain),
    }
}

/// Runs the CLI on `args` (including the program name), writing the payload
/// to `out` and diagnostics to `err`. Returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match execute(cli) {
        Ok(s) => {
            let _ = out.write_all(s.as_bytes());
            0
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Domain(m)) => {
            let _ = writeln!(err, "error: {m}");
            1
        }
        Err(Failure::Report(report, m)) => {
            let _ = out.write_all(report.as_bytes());
            let _ = writeln!(err, "error: {m}");
            1
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}
