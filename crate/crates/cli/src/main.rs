//! `equilines`: construct graphs, switch them, compute their groups and
//! spectra, and synthesise equiangular line systems.
//!
//! Graphs are read as graph6 (or JSON) from standard input unless `--input`
//! is given. Every command prints a JSON report; commands that produce a
//! graph print bare graph6 instead under `--g6`.

mod input;
mod table;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{CommandFactory, Parser, Subcommand};
use equilines::construct::{construct, Construction};
use equilines::extensible::{extend, extensible_params};
use equilines::field::{FieldCtx, QuadResidues};
use equilines::groups::{automorphism_group_capped, two_graph_group_capped, DEFAULT_SEARCH_CAP};
use equilines::lines::embed_lines;
use equilines::paley::{paley_graph_in, paley_projective, quad_residue_counts, sl2_orbit_check, Basis, SL2_ENUMERATION_LIMIT};
use equilines::spectra::{chi_polynomial, spectrum};
use equilines::{graph6, is_switching_equivalent, Eigenvalue, IntPoly, Perm, SeidelGraph};
use rayon::prelude::*;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "equilines", version, about = "Two-graphs, extensible graphs and equiangular lines")]
struct Cli {
    /// Read the input graph from this file instead of standard input.
    #[arg(long, global = true, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Print the resulting graph as bare graph6 (graph-producing commands only).
    #[arg(long, global = true, conflicts_with = "json")]
    g6: bool,
    /// Print a JSON report (the default).
    #[arg(long, global = true)]
    json: bool,
    /// Add wall-clock timing to the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named graph: pentagon, triangle, t1:S, paley:Q, paley-proj:Q.
    Construct { name: String },
    /// Switch the input graph so that the given vertex becomes isolated.
    Localize {
        #[arg(long)]
        vertex: usize,
    },
    /// Decide whether the input graph switches to another one.
    SwitchEquiv {
        /// The other graph: graph6 text or a file holding it.
        other: String,
    },
    /// Extensibility parameters (t, s, s̄) of the input graph.
    Extensible,
    /// Add an isolated vertex to an extensible graph.
    Extend,
    /// Automorphism group, or the two-graph group with --two-graph.
    Group {
        #[arg(long)]
        two_graph: bool,
    },
    /// Exact spectrum of E = S(1,1).
    Spectrum,
    /// The polynomial χ(c) = det S(1,c).
    Chi,
    /// Unit vectors realising the line system of an extreme eigenvalue.
    Lines {
        /// An integer, a/b, or 1±sqrt(d).
        #[arg(long, allow_hyphen_values = true)]
        eigenvalue: String,
    },
    /// Field, residue, self-complementarity and SL2 checks for F_q.
    PaleyVerify {
        #[arg(long)]
        q: usize,
    },
    /// Recompute every published value and report PASS/FAIL per row.
    ReproduceTable {
        /// Worker threads; 0 uses every core. Output order never changes.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Also run the exhaustive search on at most 9 vertices.
        #[arg(long)]
        uniqueness: bool,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Construct { .. } => "construct",
            Command::Localize { .. } => "localize",
            Command::SwitchEquiv { .. } => "switch-equiv",
            Command::Extensible => "extensible",
            Command::Extend => "extend",
            Command::Group { .. } => "group",
            Command::Spectrum => "spectrum",
            Command::Chi => "chi",
            Command::Lines { .. } => "lines",
            Command::PaleyVerify { .. } => "paley-verify",
            Command::ReproduceTable { .. } => "reproduce-table",
        }
    }

    fn reads_graph(&self) -> bool {
        !matches!(self, Command::Construct { .. } | Command::PaleyVerify { .. } | Command::ReproduceTable { .. })
    }

    fn outputs_graph(&self) -> bool {
        matches!(self, Command::Construct { .. } | Command::Localize { .. } | Command::Extend)
    }
}

/// What a command produced: a graph, or a results object plus a verdict.
enum Output {
    Graph(SeidelGraph),
    Results { results: Value, ok: bool },
}

fn search_cap() -> Result<usize> {
    match std::env::var("EQUILINES_SEARCH_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| anyhow!("EQUILINES_SEARCH_CAP must be a non-negative integer, got {v:?}")),
        Err(_) => Ok(DEFAULT_SEARCH_CAP),
    }
}

fn poly_json(p: &IntPoly, var: char) -> Value {
    json!({
        "coefficients": p.coeff_strings(),
        "text": p.to_string().replace('x', &var.to_string()),
    })
}

fn perm_json(p: &Perm) -> Value {
    json!(p.images())
}

fn graph_json(g: &SeidelGraph) -> Value {
    json!({
        "n": g.n(),
        "graph6": graph6::encode(g),
        "edges": g.edges().iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
    })
}

fn run(command: &Command, g: Option<SeidelGraph>) -> Result<Output> {
    let graph = || g.clone().ok_or_else(|| anyhow!("missing input graph"));
    Ok(match command {
        Command::Construct { name } => Output::Graph(construct(name.parse::<Construction>()?)?),
        Command::Localize { vertex } => Output::Graph(graph()?.localize(*vertex)?),
        Command::Extend => Output::Graph(extend(&graph()?)?),
        Command::SwitchEquiv { other } => {
            let a = graph()?;
            let b = input::parse_graph_arg(other).context("second graph")?;
            let nu = is_switching_equivalent(&a, &b)?;
            Output::Results {
                results: json!({
                    "other": graph6::encode(&b),
                    "equivalent": nu.is_some(),
                    "switching": nu.map(|v| v.signs().to_vec()),
                }),
                ok: true,
            }
        }
        Command::Extensible => {
            let p = extensible_params(&graph()?);
            Output::Results {
                results: json!({
                    "extensible": p.is_some(),
                    "parameters": p.map(|p| format!("({}, {}, {})", p.t, p.s, p.sbar)),
                    "t": p.map(|p| p.t),
                    "s": p.map(|p| p.s),
                    "sbar": p.map(|p| p.sbar),
                    "extension_order": p.map(|p| p.n),
                    "srg": p.map(|p| { let (v, k, l, m) = p.srg(); [v, k, l, m] }),
                }),
                ok: true,
            }
        }
        Command::Group { two_graph } => {
            let g = graph()?;
            let cap = search_cap()?;
            let group = if *two_graph { two_graph_group_capped(&g, cap)? } else { automorphism_group_capped(&g, cap)? };
            Output::Results {
                results: json!({
                    "kind": if *two_graph { "two-graph" } else { "automorphism" },
                    "degree": g.n(),
                    "order": group.order().to_string(),
                    "generators": group.generators().iter().map(perm_json).collect::<Vec<_>>(),
                    "orbits": group.orbits(),
                    "transitive": group.is_transitive(),
                    "doubly_transitive": group.is_doubly_transitive(),
                    "transitivity": group.transitivity(),
                }),
                ok: true,
            }
        }
        Command::Spectrum => {
            let sp = spectrum(&graph()?);
            Output::Results {
                results: json!({
                    "char_poly": poly_json(&sp.char_poly, 'x'),
                    "eigenvalues": sp.eigenvalues.iter().map(|(l, m)| json!({
                        "value": l.to_string(),
                        "multiplicity": m,
                        "cos": l.cosine().map(|c| c.to_string()),
                    })).collect::<Vec<_>>(),
                    "distinct": sp.distinct(),
                    "exact": sp.is_exact(),
                }),
                ok: true,
            }
        }
        Command::Chi => Output::Results { results: poly_json(&chi_polynomial(&graph()?), 'c'), ok: true },
        Command::Lines { eigenvalue } => {
            let lambda: Eigenvalue = eigenvalue.parse()?;
            let ls = embed_lines(&graph()?, &lambda)?;
            Output::Results { results: serde_json::to_value(&ls)?, ok: true }
        }
        Command::PaleyVerify { q } => paley_verify(*q)?,
        Command::ReproduceTable { jobs, uniqueness } => reproduce_table(*jobs, *uniqueness)?,
    })
}

fn paley_verify(q: usize) -> Result<Output> {
    let f = FieldCtx::new(q)?;
    if q % 4 != 1 {
        bail!("q = {q} is not 1 mod 4");
    }
    let r = QuadResidues::new(&f);
    let s = (q - 1) / 4;
    let counts_ok = (1..q).all(|a| {
        let want = if r.is_square(a) { (s - 1, s) } else { (s, s) };
        quad_residue_counts(&f, a).is_ok_and(|c| c == want)
    });
    let p = paley_graph_in(&f)?;
    let params = extensible_params(&p);
    let params_ok = params.is_some_and(|p| (p.t, p.s, p.sbar) == (s - 1, s, s));
    let m = r.non_squares[0];
    let sigma = Perm::from_images((0..q).map(|x| f.mul(m, x)).collect())?;
    let self_complementary = p.conjugate(&sigma)? == p.complement();
    let projective = paley_projective(&f, &Basis::standard())?;
    let factor = IntPoly::from_i64(&[-1, 0, q as i64]).pow((q + 1) / 2);
    let chi = chi_polynomial(&projective);
    let chi_ok = chi == factor || chi == factor.neg();
    let sl2 = if q <= SL2_ENUMERATION_LIMIT { Some(sl2_orbit_check(q)?) } else { None };
    let sl2_ok = sl2.as_ref().is_none_or(|r| r.passes());
    Ok(Output::Results {
        results: json!({
            "q": q,
            "characteristic": f.characteristic(),
            "degree": f.degree(),
            "field_axioms": f.axioms_hold(),
            "residue_counts": counts_ok,
            "paley_parameters": params.map(|p| format!("({}, {}, {})", p.t, p.s, p.sbar)),
            "paley_parameters_ok": params_ok,
            "self_complementary": self_complementary,
            "projective_graph6": graph6::encode(&projective),
            "projective_chi": poly_json(&chi, 'c'),
            "projective_chi_ok": chi_ok,
            "sl2": sl2,
        }),
        ok: f.axioms_hold() && counts_ok && params_ok && self_complementary && chi_ok && sl2_ok,
    })
}

fn reproduce_table(jobs: usize, uniqueness: bool) -> Result<Output> {
    let cap = search_cap()?;
    let rows = table::rows(uniqueness);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    let results: Vec<table::RowResult> = pool.install(|| rows.par_iter().map(|r| r.run(cap)).collect());
    let failed = results.iter().filter(|r| r.status != "PASS").count();
    Ok(Output::Results {
        results: json!({
            "rows": results,
            "passed": results.len() - failed,
            "failed": failed,
            "all_pass": failed == 0,
        }),
        ok: failed == 0,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.g6 && !cli.command.outputs_graph() {
        let mut cmd = Cli::command();
        cmd.error(
            clap::error::ErrorKind::ArgumentConflict,
            format!("--g6 applies only to construct, localize and extend, not {}", cli.command.name()),
        )
        .exit();
    }
    match execute(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("equilines: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn execute(cli: &Cli) -> Result<bool> {
    let start = Instant::now();
    let g = if cli.command.reads_graph() {
        Some(input::parse_graph(&input::read_source(cli.input.as_deref())?)?)
    } else {
        None
    };
    let output = run(&cli.command, g.clone())?;
    let (results, ok) = match output {
        Output::Graph(h) if cli.g6 => {
            emit(&graph6::encode(&h))?;
            return Ok(true);
        }
        Output::Graph(h) => (graph_json(&h), true),
        Output::Results { results, ok } => (results, ok),
    };
    let mut report = json!({
        "command": cli.command.name(),
        "input": g.as_ref().map(graph6::encode),
        "results": results,
    });
    if cli.timing {
        report["timing"] = json!({ "seconds": format!("{:.6}", start.elapsed().as_secs_f64()) });
    }
    emit(&serde_json::to_string_pretty(&report)?)?;
    Ok(ok)
}

/// Writes one line to standard output; a closed pipe downstream is not an error.
fn emit(line: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{line}").and_then(|_| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}
