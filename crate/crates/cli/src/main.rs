mod input;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use oldoind::classes::{
    gen_named, gen_quasi_spider, gen_spider, is_cograph, is_p4_tidy, BaseGraph, Family,
    Replacement, Side, SpiderKind,
};
use oldoind::deciders::{
    audit_prism_set, cograph_oldoind_traced, p4tidy_oldoind_traced, prism_cograph_oldoind,
};
use oldoind::graph::{encode_graph6, parse_graph_text, write_edge_list};
use oldoind::hardness::{build_gadget, cover_to_set, set_to_cover, solve_gadget, x3c_bruteforce};
use oldoind::oldoind::{
    exists_oldoind_with, min_oldoind_with, verify_oldoind, SearchOptions, SolveStatus,
};
use oldoind::selftest::{run_suites, Mutation, SelftestConfig, Suite, DEFAULT_SEED};
use oldoind::Graph;

use input::{parse_numbers, parse_set, read_graph, read_instance};
use report::{Outcome, Report};

/// Largest order for which `decide --class auto` falls back to exact search.
const FALLBACK_ORDER: usize = 24;

#[derive(Parser)]
#[command(
    name = "oldoind",
    version,
    about = "Open-independent open-locating-dominating sets"
)]
struct Cli {
    /// Print the JSON report instead of the text rendering.
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    timing: bool,
    /// Worker threads for parallel work.
    #[arg(long, global = true, env = "OLDOIND_WORKERS")]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether a vertex set is an OLD_oind set.
    Verify {
        /// Graph file, `-` for stdin, or inline graph6 / edge-list text.
        graph: String,
        /// Vertices of the set, separated by blanks or commas.
        #[arg(required = true, num_args = 1..)]
        set: Vec<String>,
    },
    /// Search for an OLD_oind set.
    Solve {
        graph: String,
        /// Find a set of minimum size.
        #[arg(long)]
        min: bool,
        /// Give up after this many search nodes.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Decide with a class-specific polynomial algorithm.
    Decide {
        graph: String,
        #[arg(long, value_enum, default_value_t = Class::Auto)]
        class: Class,
    },
    /// Generate a graph and print its graph6.
    Gen(GenArgs),
    /// Print the complementary prism of a graph.
    Prism {
        graph: String,
        /// Print an edge list instead of graph6.
        #[arg(long)]
        edges: bool,
    },
    /// Exact cover by 3-sets and its gadget.
    X3c {
        #[command(subcommand)]
        action: X3cAction,
    },
    /// Run the self-test suites.
    Selftest {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Random candidate sets per graph.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Random graphs for the codec suite.
        #[arg(long, default_value_t = 1000)]
        random_graphs: usize,
        /// Run only the named suites.
        #[arg(long = "suite")]
        suites: Vec<String>,
        /// Inject a defect: skip-distinctness or drop-size2.
        #[arg(long)]
        mutation: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    Auto,
    P4tidy,
    Cograph,
    PrismCograph,
}

#[derive(Args)]
struct GenArgs {
    /// Family and parameters, e.g. `path 5`, `r-star 2 1`, `spider thin 3`,
    /// `quasi-spider thick 2`, `base Z`.
    #[arg(required = true, num_args = 1..)]
    family: Vec<String>,
    /// Spider head: empty, K1, K2, K2bar, P3, or graph text.
    #[arg(long, default_value = "empty")]
    head: String,
    /// Quasi-spider side whose vertex is doubled.
    #[arg(long, value_enum, default_value_t = SideArg::C)]
    side: SideArg,
    /// Index of the doubled vertex within its side.
    #[arg(long, default_value_t = 0)]
    index: usize,
    /// Graph replacing the doubled vertex.
    #[arg(long, value_enum, default_value_t = ReplacementArg::K2)]
    replacement: ReplacementArg,
    /// Print an edge list instead of graph6.
    #[arg(long)]
    edges: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    C,
    X,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReplacementArg {
    K2,
    K2bar,
}

#[derive(Subcommand)]
enum X3cAction {
    /// Build the gadget graph and its vertex names.
    Build { instance: String },
    /// Turn an exact cover (1-based triple numbers) into a gadget set.
    ToSet {
        instance: String,
        #[arg(required = true, num_args = 1..)]
        cover: Vec<String>,
    },
    /// Read the cover off a gadget set.
    ToCover {
        instance: String,
        #[arg(required = true, num_args = 1..)]
        set: Vec<String>,
    },
    /// Solve by brute force and by search on the gadget.
    Solve {
        instance: String,
        #[arg(long)]
        budget: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(w) = cli.workers {
        // Fails only if a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build_global();
    }
    let start = Instant::now();
    let result = run(&cli.command);
    match result {
        Ok(mut report) => {
            if cli.timing {
                report.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
            }
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::from(report.outcome().code() as u8)
        }
        Err(e) => {
            if cli.json {
                let mut r = Report::new(command_name(&cli.command), "error", Outcome::Error);
                r.details = json!({ "error": format!("{e:#}") });
                println!("{}", r.to_json());
            } else {
                eprintln!("error: {e:#}");
            }
            ExitCode::from(Outcome::Error.code() as u8)
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Verify { .. } => "verify",
        Command::Solve { .. } => "solve",
        Command::Decide { .. } => "decide",
        Command::Gen(_) => "gen",
        Command::Prism { .. } => "prism",
        Command::X3c { .. } => "x3c",
        Command::Selftest { .. } => "selftest",
    }
}

fn run(c: &Command) -> Result<Report> {
    match c {
        Command::Verify { graph, set } => cmd_verify(&read_graph(graph)?, set),
        Command::Solve { graph, min, budget } => cmd_solve(&read_graph(graph)?, *min, *budget),
        Command::Decide { graph, class } => cmd_decide(&read_graph(graph)?, *class),
        Command::Gen(args) => cmd_gen(args),
        Command::Prism { graph, edges } => {
            let g = read_graph(graph)?;
            let p = g.complementary_prism()?;
            Ok(graph_report("prism", &g, &p, *edges))
        }
        Command::X3c { action } => cmd_x3c(action),
        Command::Selftest {
            max_n,
            seed,
            samples,
            random_graphs,
            suites,
            mutation,
        } => {
            let cfg = SelftestConfig {
                max_n: *max_n,
                samples: *samples,
                random_graphs: *random_graphs,
                seed: *seed,
                mutation: mutation
                    .as_deref()
                    .map(str::parse::<Mutation>)
                    .transpose()?,
            };
            let chosen = if suites.is_empty() {
                Suite::ALL.to_vec()
            } else {
                suites
                    .iter()
                    .map(|s| s.parse::<Suite>())
                    .collect::<Result<Vec<_>, _>>()?
            };
            cmd_selftest(&cfg, &chosen)
        }
    }
}

fn with_input(mut r: Report, g: &Graph) -> Report {
    r.input = Some(encode_graph6(g));
    r
}

fn cmd_verify(g: &Graph, words: &[String]) -> Result<Report> {
    let set = parse_set(words, g.order())?;
    let verdict = verify_oldoind(g, set)?;
    let mut r = match &verdict.violation {
        None => Report::new("verify", "valid", Outcome::Yes),
        Some(_) => Report::new("verify", "invalid", Outcome::No),
    };
    r.witness = Some(set.to_vec());
    r.details = json!({ "violation": verdict.violation });
    Ok(with_input(r, g))
}

fn cmd_solve(g: &Graph, min: bool, budget: Option<u64>) -> Result<Report> {
    let opts = SearchOptions {
        budget,
        prune: None,
    };
    let res = if min {
        min_oldoind_with(g, opts)?
    } else {
        exists_oldoind_with(g, opts)?
    };
    let (verdict, outcome) = match res.status {
        SolveStatus::Found => ("found", Outcome::Yes),
        SolveStatus::Absent => ("absent", Outcome::No),
        SolveStatus::BudgetExceeded => ("budget-exceeded", Outcome::Error),
    };
    let mut r = Report::new("solve", verdict, outcome);
    r.witness = res.set.map(|s| s.to_vec());
    r.nodes_explored = Some(res.nodes_explored);
    r.details = json!({ "minimum": min, "budget": budget, "size": res.size });
    Ok(with_input(r, g))
}

fn cmd_decide(g: &Graph, class: Class) -> Result<Report> {
    let mut warnings = Vec::new();
    let class = match class {
        Class::Auto if is_cograph(g) => Class::Cograph,
        Class::Auto if is_p4_tidy(g) => Class::P4tidy,
        Class::Auto => {
            if g.order() > FALLBACK_ORDER {
                bail!("the graph is neither a cograph nor P4-tidy and too large for the exact search fallback");
            }
            warnings.push("no polynomial class applies; answered by exact search".to_string());
            let res = exists_oldoind_with(g, SearchOptions::default())?;
            let found = res.found();
            let mut r = yes_no("decide", found);
            r.witness = res.set.map(|s| s.to_vec());
            r.nodes_explored = Some(res.nodes_explored);
            r.details = json!({ "class": "none", "method": "exact-search" });
            r.warnings = warnings;
            return Ok(with_input(r, g));
        }
        c => c,
    };
    let mut r = match class {
        Class::Cograph | Class::P4tidy => {
            let (name, d) = if matches!(class, Class::Cograph) {
                ("cograph", cograph_oldoind_traced(g)?)
            } else {
                ("p4tidy", p4tidy_oldoind_traced(g)?)
            };
            let mut r = yes_no("decide", d.witness.is_some());
            r.witness = d.witness.map(|s| s.to_vec());
            r.details = json!({ "class": name, "trace": d.trace });
            r
        }
        Class::PrismCograph => {
            let w = prism_cograph_oldoind(g)?;
            let mut r = yes_no("decide", w.is_some());
            let prism = encode_graph6(&g.complementary_prism()?);
            match w {
                Some(w) => {
                    let audit = audit_prism_set(g, &w)?;
                    r.witness = Some(w.set().to_vec());
                    r.details = json!({
                        "class": "prism-cograph",
                        "prism": prism,
                        "s0": w.s0.to_vec(),
                        "s1bar": w.s1bar.to_vec(),
                        "trace": w.trace,
                        "audit": audit,
                    });
                }
                None => r.details = json!({ "class": "prism-cograph", "prism": prism }),
            }
            r
        }
        Class::Auto => unreachable!("resolved above"),
    };
    r.warnings = warnings;
    Ok(with_input(r, g))
}

fn yes_no(command: &str, yes: bool) -> Report {
    if yes {
        Report::new(command, "yes", Outcome::Yes)
    } else {
        Report::new(command, "no", Outcome::No)
    }
}

fn graph_report(command: &str, input: &Graph, out: &Graph, edges: bool) -> Report {
    let mut r = Report::new(command, "ok", Outcome::Yes);
    let g6 = encode_graph6(out);
    r.primary = Some(if edges {
        write_edge_list(out).trim_end().to_string()
    } else {
        g6.clone()
    });
    r.details = json!({ "graph6": g6, "order": out.order(), "edges": out.edge_count() });
    with_input(r, input)
}

fn parse_head(text: &str) -> Result<Graph> {
    let g = match text.to_ascii_lowercase().as_str() {
        "empty" | "none" => Graph::empty(0)?,
        "k1" => Graph::empty(1)?,
        "k2" => Graph::complete(2)?,
        "k2bar" => Graph::empty(2)?,
        "p3" => Graph::from_edges(3, &[(0, 1), (1, 2)])?,
        _ => parse_graph_text(text).with_context(|| format!("head {text:?}"))?,
    };
    Ok(g)
}

fn cmd_gen(a: &GenArgs) -> Result<Report> {
    let words: Vec<&str> = a.family.iter().flat_map(|w| w.split_whitespace()).collect();
    let (&head, rest) = words
        .split_first()
        .ok_or_else(|| anyhow!("missing family"))?;
    let kind_and_k = || -> Result<(SpiderKind, usize)> {
        let [kind, k] = rest else {
            bail!("{head} expects a kind (thin or thick) and a weight");
        };
        let kind = match *kind {
            "thin" => SpiderKind::Thin,
            "thick" => SpiderKind::Thick,
            other => bail!("unknown spider kind {other:?}"),
        };
        Ok((kind, k.parse().context("spider weight")?))
    };
    let g = match head {
        "spider" => {
            let (kind, k) = kind_and_k()?;
            gen_spider(kind, k, &parse_head(&a.head)?)?
        }
        "quasi-spider" => {
            let (kind, k) = kind_and_k()?;
            let side = match a.side {
                SideArg::C => Side::C,
                SideArg::X => Side::X,
            };
            let rep = match a.replacement {
                ReplacementArg::K2 => Replacement::K2,
                ReplacementArg::K2bar => Replacement::K2Bar,
            };
            gen_quasi_spider(kind, k, &parse_head(&a.head)?, side, a.index, rep)?
        }
        "base" => {
            let [name] = rest else {
                bail!("base expects one name");
            };
            name.parse::<BaseGraph>()?.graph()
        }
        _ => gen_named(words.join(" ").parse::<Family>()?)?,
    };
    let mut r = graph_report("gen", &g, &g, a.edges);
    r.input = None;
    if let serde_json::Value::Object(m) = &mut r.details {
        m.insert("family".into(), json!(words.join(" ")));
    }
    Ok(r)
}

fn cmd_x3c(action: &X3cAction) -> Result<Report> {
    match action {
        X3cAction::Build { instance } => {
            let inst = read_instance(instance)?;
            let (g, map) = build_gadget(&inst)?;
            let mut r = Report::new("x3c build", "ok", Outcome::Yes);
            r.primary = Some(format!(
                "{}\n{}",
                encode_graph6(&g),
                serde_json::to_string(&map.names)?
            ));
            r.details = json!({
                "graph6": encode_graph6(&g),
                "order": g.order(),
                "edges": g.edge_count(),
                "map": map,
            });
            Ok(r)
        }
        X3cAction::ToSet { instance, cover } => {
            let inst = read_instance(instance)?;
            let (g, map) = build_gadget(&inst)?;
            let cover = to_zero_based(&parse_numbers(cover)?)?;
            let d = cover_to_set(&inst, &g, &map, &cover)?;
            let mut r = Report::new("x3c to-set", "ok", Outcome::Yes);
            r.witness = Some(d.to_vec());
            r.details = json!({
                "graph6": encode_graph6(&g),
                "size": d.len(),
                "names": d.iter().map(|v| map.names[v].clone()).collect::<Vec<_>>(),
            });
            Ok(r)
        }
        X3cAction::ToCover { instance, set } => {
            let inst = read_instance(instance)?;
            let (g, map) = build_gadget(&inst)?;
            let d = parse_set(set, g.order())?;
            let cover = set_to_cover(&inst, &g, &map, d)?;
            let mut r = Report::new("x3c to-cover", "ok", Outcome::Yes);
            r.details = json!({ "cover": cover.iter().map(|j| j + 1).collect::<Vec<_>>() });
            Ok(r)
        }
        X3cAction::Solve { instance, budget } => {
            let inst = read_instance(instance)?;
            let (g, map) = build_gadget(&inst)?;
            let cover = x3c_bruteforce(&inst)?;
            let res = solve_gadget(&g, &map, *budget)?;
            if res.status != SolveStatus::BudgetExceeded && res.found() != cover.is_some() {
                bail!("brute force and gadget search disagree");
            }
            let mut r = yes_no("x3c solve", cover.is_some());
            r.witness = res.set.map(|s| s.to_vec());
            r.nodes_explored = Some(res.nodes_explored);
            r.details = json!({
                "cover": cover.map(|c| c.iter().map(|j| j + 1).collect::<Vec<_>>()),
                "gadget_search": res.status,
                "graph6": encode_graph6(&g),
            });
            Ok(r)
        }
    }
}

fn to_zero_based(v: &[usize]) -> Result<Vec<usize>> {
    v.iter()
        .map(|&j| {
            j.checked_sub(1)
                .ok_or_else(|| anyhow!("triples are numbered from 1"))
        })
        .collect()
}

fn cmd_selftest(cfg: &SelftestConfig, suites: &[Suite]) -> Result<Report> {
    let report = run_suites(cfg, suites)?;
    let mut r = if report.passed {
        Report::new("selftest", "pass", Outcome::Yes)
    } else {
        Report::new("selftest", "fail", Outcome::No)
    };
    let mut lines = Vec::new();
    for s in &report.suites {
        let mark = if s.passed { "pass" } else { "FAIL" };
        let mut line = format!(
            "{mark} {:<20} {:>6} cases  {}",
            s.suite.name(),
            s.cases,
            s.detail
        );
        if let Some(c) = &s.counterexample {
            line.push_str(&format!("  [counterexample {c}]"));
        }
        lines.push(line);
    }
    lines.push(format!("selftest: {}", r.verdict));
    r.primary = Some(lines.join("\n"));
    r.details = serde_json::to_value(&report)?;
    Ok(r)
}
