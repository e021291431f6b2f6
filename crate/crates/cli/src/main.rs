mod input;

use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use gkit_core::complex::{independence_complex, SimplicialComplex};
use gkit_core::enumerate::{classify, probe_connected_alpha3, DegreeRule, EdgeRule, Predicate, SearchSpec};
use gkit_core::field::{parse_field_list, FieldSpec};
use gkit_core::gorenstein::{check_gorenstein_homological, check_gorenstein_theorem, FIELD_CAVEAT};
use gkit_core::homology::{is_gorenstein_homological, reduced_betti, BettiProfile};
use gkit_core::independence::{independence_number, independence_polynomial, is_w2_definition, is_well_covered};
use gkit_core::verdict::Verdict;
use gkit_core::verify::{verify, Fault, VerifyConfig};
use serde::Serialize;

use input::{Input, InputArgs};

const EXIT_INPUT: u8 = 2;
const EXIT_DISAGREEMENT: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "gkit", version, about = "Gorenstein tests for graphs and simplicial complexes")]
struct Cli {
    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RouteChoice {
    Theorem,
    Homological,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide Gorensteinness over each field, with a witness on rejection
    Check {
        #[command(flatten)]
        input: InputArgs,
        /// Comma-separated fields: q, f2, f3, f<p>
        #[arg(long, env = "GKIT_FIELDS", default_value = "q,f2,f3", value_parser = fields)]
        fields: FieldList,
        #[arg(long, value_enum, default_value_t = RouteChoice::Theorem)]
        route: RouteChoice,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, hide = true)]
        inject_fault: Option<Fault>,
    },
    /// Invariants of a graph or complex
    Report {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, env = "GKIT_FIELDS", default_value = "q,f2,f3", value_parser = fields)]
        fields: FieldList,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Stream isomorphism classes as JSON lines
    Enumerate {
        /// Orders, as "6", "6..8" or "6..=8"
        #[arg(long, value_name = "RANGE", value_parser = orders)]
        n: (usize, usize),
        #[arg(long)]
        triangle_free: bool,
        #[arg(long)]
        alpha: Option<usize>,
        #[arg(long)]
        no_isolated: bool,
        #[arg(long)]
        connected: bool,
        /// Edge count: a number, or "alpha3" for (n-3)(n-4)/2
        #[arg(long = "m", visible_alias = "edges", value_name = "M", value_parser = edge_rule)]
        m: Option<EdgeRule>,
        /// "dichotomy", "max:n-S", or a census such as "3=4,2=4"
        #[arg(long, value_parser = degree_rule)]
        degrees: Option<DegreeRule>,
        /// With --alpha 3: keep only graphs whose vertex links can close into long cycles
        #[arg(long)]
        cycle_links: bool,
        /// none, w2, gorenstein, gorenstein:<field>
        #[arg(long, default_value = "none", value_parser = predicate)]
        predicate: Predicate,
    },
    /// Search connected graphs with alpha = 3 for Gorenstein examples
    Probe {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value = "q", value_parser = field)]
        field: FieldSpec,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the full verification suite and print one row per check
    VerifyPaper {
        #[arg(long, env = "GKIT_FIELDS", default_value = "q,f2,f3", value_parser = fields)]
        fields: FieldList,
        #[arg(long, default_value_t = 8)]
        alpha2_max_n: usize,
        #[arg(long, default_value_t = 10)]
        probe_max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, hide = true)]
        inject_fault: Option<Fault>,
    },
}

#[derive(Clone, Debug)]
struct FieldList(Vec<FieldSpec>);

fn fields(s: &str) -> std::result::Result<FieldList, String> {
    parse_field_list(s).map(FieldList).map_err(|e| e.to_string())
}

fn field(s: &str) -> std::result::Result<FieldSpec, String> {
    s.parse().map_err(|e: gkit_core::Error| e.to_string())
}

fn predicate(s: &str) -> std::result::Result<Predicate, String> {
    s.parse().map_err(|e: gkit_core::Error| e.to_string())
}

fn orders(s: &str) -> std::result::Result<(usize, usize), String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad order {t:?}"));
    match s.split_once("..") {
        Some((lo, hi)) => Ok((num(lo)?, num(hi.strip_prefix('=').unwrap_or(hi))?)),
        None => num(s).map(|n| (n, n)),
    }
}

fn edge_rule(s: &str) -> std::result::Result<EdgeRule, String> {
    if s == "alpha3" {
        return Ok(EdgeRule::Alpha3Count);
    }
    s.parse().map(EdgeRule::Exact).map_err(|_| format!("expected a number or alpha3, got {s:?}"))
}

fn degree_rule(s: &str) -> std::result::Result<DegreeRule, String> {
    if s == "dichotomy" {
        return Ok(DegreeRule::Alpha3Dichotomy);
    }
    if let Some(rest) = s.strip_prefix("max:n-") {
        return rest.parse().map(DegreeRule::AtMostNMinus).map_err(|_| format!("bad degree bound {s:?}"));
    }
    let mut census = BTreeMap::new();
    for item in s.split(',') {
        let (d, c) = item.split_once('=').ok_or_else(|| format!("expected degree=count, got {item:?}"))?;
        let d = d.trim().parse().map_err(|_| format!("bad degree {d:?}"))?;
        let c = c.trim().parse().map_err(|_| format!("bad count {c:?}"))?;
        census.insert(d, c);
    }
    Ok(DegreeRule::Census(census))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Check { input, fields, route, format, inject_fault } => {
            check(input.load()?, &fields.0, route, format, inject_fault)
        }
        Command::Report { input, fields, format } => report(input.load()?, &fields.0, format),
        Command::Enumerate { n, triangle_free, alpha, no_isolated, connected, m, degrees, cycle_links, predicate } => {
            let spec = SearchSpec {
                triangle_free,
                alpha,
                no_isolated,
                connected: connected.then_some(true),
                edges: m,
                degrees,
                cycle_links,
                predicate,
                ..SearchSpec::orders(n.0, n.1)
            };
            let result = classify(&spec)?;
            for d in &result.diagnostics {
                eprintln!("note: {d}");
            }
            let mut out = std::io::stdout().lock();
            out.write_all(result.json_lines().as_bytes())?;
            eprintln!("{} classes {:?} in {:.2}s", result.entries.len(), result.counts, result.elapsed.as_secs_f64());
            Ok(ExitCode::SUCCESS)
        }
        Command::Probe { max_n, field, format } => {
            let r = probe_connected_alpha3(max_n, field)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string(&r)?),
                Format::Text => {
                    print!("{}", r.hits.json_lines());
                    println!("candidates per order: {:?}", r.candidates);
                    println!("hits per order: {:?}", r.hits.counts);
                    println!("control C5bar+K2 accepted: {}", r.control_accepted);
                    println!("hits cross-validated: {}", r.hits_cross_validated);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyPaper { fields, alpha2_max_n, probe_max_n, format, inject_fault } => {
            let cfg = VerifyConfig { fields: fields.0, alpha2_max_n, probe_max_n, fault: inject_fault, ..VerifyConfig::default() };
            let report = verify(cfg);
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
                Format::Text => println!("{report}"),
            }
            Ok(if report.all_pass() {
                ExitCode::SUCCESS
            } else if report.route_disagreement {
                ExitCode::from(EXIT_DISAGREEMENT)
            } else {
                ExitCode::FAILURE
            })
        }
    }
}

#[derive(Serialize)]
struct FieldResult {
    field: FieldSpec,
    #[serde(skip_serializing_if = "Option::is_none")]
    theorem: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    homological: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
}

impl FieldResult {
    fn accepted(&self) -> bool {
        self.theorem.as_ref().or(self.homological.as_ref()).is_some_and(|v| v.accepted)
    }
}

#[derive(Serialize)]
struct CheckOutput {
    input: String,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<usize>,
    results: Vec<FieldResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'static str>,
}

fn check(input: Input, fields: &[FieldSpec], route: RouteChoice, format: Format, fault: Option<Fault>) -> Result<ExitCode> {
    let flip = |mut v: Verdict| {
        if fault == Some(Fault::RouteFlip) {
            v.accepted = !v.accepted;
        }
        v
    };
    let (label, n, m, alpha, results) = match &input {
        Input::Graph { label, graph } => {
            let results = fields
                .iter()
                .map(|&k| {
                    let theorem = (route != RouteChoice::Homological).then(|| check_gorenstein_theorem(graph, k));
                    let homological =
                        (route != RouteChoice::Theorem).then(|| flip(check_gorenstein_homological(graph, k)));
                    let agree = match (&theorem, &homological) {
                        (Some(a), Some(b)) => Some(a.accepted == b.accepted),
                        _ => None,
                    };
                    FieldResult { field: k, theorem, homological, agree }
                })
                .collect::<Vec<_>>();
            (label, graph.order(), Some(graph.edge_count()), Some(independence_number(graph)), results)
        }
        Input::Complex { label, complex } => {
            if route == RouteChoice::Theorem {
                bail!("--route theorem needs a graph; complexes are checked homologically");
            }
            let results = fields
                .iter()
                .map(|&k| {
                    let v = is_gorenstein_homological(complex, k).map(flip)?;
                    Ok(FieldResult { field: k, theorem: None, homological: Some(v), agree: None })
                })
                .collect::<Result<Vec<_>>>()?;
            (label, complex.ambient(), None, None, results)
        }
    };
    let split = results.iter().any(|r| r.accepted()) && !results.iter().all(|r| r.accepted());
    let out = CheckOutput { input: label.clone(), n, m, alpha, results, note: split.then_some(FIELD_CAVEAT) };
    let disagreement = out.results.iter().any(|r| r.agree == Some(false));

    match format {
        Format::Json => println!("{}", serde_json::to_string(&out)?),
        Format::Text => {
            print!("{} (n={}", out.input, out.n);
            if let (Some(m), Some(a)) = (out.m, out.alpha) {
                print!(", m={m}, alpha={a}");
            }
            println!(")");
            if route == RouteChoice::Both {
                println!("{:<8} {:<10} {:<12} agree", "field", "theorem", "homological");
                for r in &out.results {
                    let word = |v: &Option<Verdict>| if v.as_ref().is_some_and(|v| v.accepted) { "accepted" } else { "rejected" };
                    let agree = if r.agree == Some(true) { "yes" } else { "NO" };
                    println!("{:<8} {:<10} {:<12} {agree}", r.field.to_string(), word(&r.theorem), word(&r.homological));
                }
            }
            for r in &out.results {
                for v in r.theorem.iter().chain(&r.homological) {
                    if route != RouteChoice::Both || v.witness.is_some() {
                        println!("{}: {v}", r.field);
                    }
                }
            }
            if let Some(note) = out.note {
                println!("note: {note}");
            }
            if disagreement {
                println!("routes disagree");
            }
        }
    }
    Ok(if disagreement { ExitCode::from(EXIT_DISAGREEMENT) } else { ExitCode::SUCCESS })
}

#[derive(Serialize)]
struct GraphInvariants {
    m: usize,
    alpha: usize,
    independence_polynomial: String,
    well_covered: bool,
    w2: bool,
}

#[derive(Serialize)]
struct ReportOutput {
    input: String,
    n: usize,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    graph: Option<GraphInvariants>,
    f_vector: Vec<String>,
    /// Absent when the complex is not pure.
    h_vector: Option<Vec<String>>,
    euler: bool,
    core_size: usize,
    betti: Vec<BettiProfile>,
}

fn report(input: Input, fields: &[FieldSpec], format: Format) -> Result<ExitCode> {
    let (label, graph, complex) = match input {
        Input::Graph { label, graph } => {
            let c = independence_complex(&graph);
            (label, Some(graph), c)
        }
        Input::Complex { label, complex } => (label, None, complex),
    };
    let graph_part = graph.as_ref().map(|g| GraphInvariants {
        m: g.edge_count(),
        alpha: independence_number(g),
        independence_polynomial: independence_polynomial(g).to_string(),
        well_covered: is_well_covered(g),
        w2: g.order() >= 2 && is_w2_definition(g),
    });
    let out = complex_report(label, &complex, graph_part, fields)?;
    match format {
        Format::Json => println!("{}", serde_json::to_string(&out)?),
        Format::Text => {
            println!("input: {}", out.input);
            println!("n={}", out.n);
            if let Some(g) = &out.graph {
                println!("m={}", g.m);
                println!("alpha={}", g.alpha);
                println!("I={}", g.independence_polynomial);
                println!("well-covered={}", g.well_covered);
                println!("W2={}", g.w2);
            }
            println!("f=({})", out.f_vector.join(", "));
            match &out.h_vector {
                Some(h) => println!("h=({})", h.join(", ")),
                None => println!("h=not pure"),
            }
            println!("euler={}", out.euler);
            println!("core-size={}", out.core_size);
            for b in &out.betti {
                let values: Vec<String> = (-1..=b.top()).map(|i| b.get(i).to_string()).collect();
                println!("betti[{}] (i=-1..{})=({})", b.field, b.top(), values.join(", "));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn complex_report(
    input: String,
    c: &SimplicialComplex,
    graph: Option<GraphInvariants>,
    fields: &[FieldSpec],
) -> Result<ReportOutput> {
    let f_vector = c.f_vector()?.entries().iter().map(ToString::to_string).collect();
    let h_vector = c.h_polynomial().ok().map(|h| {
        let d = c.dim().map_or(0, |d| (d + 1) as usize);
        (0..=d).map(|i| h.coeff(i).to_string()).collect()
    });
    let betti = fields.iter().map(|&k| reduced_betti(c, k)).collect::<gkit_core::Result<Vec<_>>>()?;
    Ok(ReportOutput {
        input,
        n: c.ambient(),
        graph,
        f_vector,
        h_vector,
        euler: c.is_euler().context("Euler test")?,
        core_size: c.core()?.vertices().len(),
        betti,
    })
}
