//! `starclusters`: build graphs and complexes, compute homology and run suites.
//!
//! Everything reads and writes JSON by default, so commands compose:
//! `starclusters family cycle 6 | starclusters indep | starclusters homology`.
//! Exit codes: 0 success, 1 a verification or bound check failed, 2 bad usage or input.

use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use starclusters::bounds::{self, Bound};
use starclusters::collapses::greedy_collapse;
use starclusters::complexes::{clique_complex, independence_complex, SimplicialComplex};
use starclusters::constructions::{self, Relation};
use starclusters::families;
use starclusters::graphs::{Graph, Labeled, Vertex, DEFAULT_CHROMATIC_CAP};
use starclusters::homology::{independence_homology, reduced_homology};
use starclusters::verify::{run_suite, SuiteParams, DEFAULT_SEED};
use starclusters::{Error, HomologyProfile};

#[derive(Parser, Debug)]
#[command(name = "starclusters", version, about = "Independence complexes, star clusters and integral homology")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for parallel work (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Largest graph handed to the exact coloring solver.
    #[arg(long, global = true, default_value_t = DEFAULT_CHROMATIC_CAP)]
    cap_chromatic: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a named graph or complex, e.g. `family kneser 2 1`.
    Family {
        name: String,
        params: Vec<usize>,
    },
    /// Independence complex of a graph.
    Indep {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Clique complex of a graph.
    Clique {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Reduced homology of a complex, or of the independence complex of a graph.
    Homology {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Apply a construction: jonsson, csorba, subdivide-four, suspension, crossing, degree3, dowker.
    Construct {
        name: String,
        #[arg(default_value = "-")]
        input: String,
        /// Edges `a b;c d` for subdivide-four, suspension and crossing.
        #[arg(long)]
        over_edges: Option<String>,
    },
    /// Run a verification suite.
    Verify {
        suite: String,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long)]
        mmax: Option<usize>,
        #[arg(long)]
        kmax: Option<usize>,
        #[arg(long)]
        vmax: Option<usize>,
        #[arg(long)]
        count: Option<usize>,
    },
    /// Greedy collapse of a complex.
    Collapse {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Evaluate a bound on a graph: clawfree, engstrom, distance3, diameter,
    /// maxdeg, extension, catloc, chromatic.
    Bounds {
        name: String,
        #[arg(default_value = "-")]
        input: String,
        /// Vertex set for distance3 and extension, e.g. `0 3 6`.
        #[arg(long)]
        set: Option<String>,
        /// Size limit for extension.
        #[arg(long)]
        r: Option<usize>,
        /// Vertex for catloc.
        #[arg(long)]
        vertex: Option<Vertex>,
    },
}

/// Failure modes mapped to exit codes.
enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<Output, Failure>;

/// What a command prints, and whether it counts as a failed check.
struct Output {
    value: Rendered,
    failed: bool,
}

enum Rendered {
    Graph(Graph),
    Complex(SimplicialComplex),
    Homology(HomologyProfile),
    Json(Value),
}

fn ok(value: Rendered) -> Outcome {
    Ok(Output { value, failed: false })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if n == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(&cli).and_then(|out| render(&out.value, cli.format).map(|text| (text, out.failed))) {
        Ok((text, failed)) => {
            println!("{text}");
            if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Family { name, params } => family(name, params),
        Command::Indep { input } => ok(Rendered::Complex(independence_complex(&read_graph(input)?))),
        Command::Clique { input } => ok(Rendered::Complex(clique_complex(&read_graph(input)?))),
        Command::Homology { input } => {
            let h = match read_input(input)? {
                Input::Graph(g) => independence_homology(&g),
                Input::Complex(k) => reduced_homology(&k),
            };
            ok(Rendered::Homology(h))
        }
        Command::Construct { name, input, over_edges } => construct(name, input, over_edges.as_deref()),
        Command::Verify {
            suite,
            seed,
            nmax,
            mmax,
            kmax,
            vmax,
            count,
        } => {
            let params = SuiteParams {
                seed: seed.unwrap_or(DEFAULT_SEED),
                nmax: *nmax,
                mmax: *mmax,
                kmax: *kmax,
                vmax: *vmax,
                count: *count,
            };
            let report = run_suite(suite, &params)?;
            if !report.passed() {
                eprintln!("suite {suite}: {} of {} cases failed", report.summary.fail, report.cases.len());
            }
            Ok(Output {
                failed: !report.passed(),
                value: Rendered::Json(serde_json::to_value(&report).expect("report serializes")),
            })
        }
        Command::Collapse { input } => {
            let k = read_complex(input)?;
            let trace = greedy_collapse(&k);
            ok(Rendered::Json(json!({
                "verdict": trace.verdict(),
                "steps": trace.steps,
                "residual": trace.residual,
            })))
        }
        Command::Bounds {
            name,
            input,
            set,
            r,
            vertex,
        } => bound(name, &read_graph(input)?, set.as_deref(), *r, *vertex, cli.cap_chromatic),
    }
}

fn need(params: &[usize], n: usize, usage: &str) -> Result<(), Failure> {
    if params.len() == n {
        Ok(())
    } else {
        Err(Failure::Usage(format!("usage: family {usage}")))
    }
}

fn family(name: &str, p: &[usize]) -> Outcome {
    let graph = |g: starclusters::Result<Graph>| -> Outcome { ok(Rendered::Graph(g?)) };
    let complex = |k: starclusters::Result<SimplicialComplex>| -> Outcome { ok(Rendered::Complex(k?)) };
    match name {
        "cycle" => need(p, 1, "cycle N").and_then(|_| graph(families::cycle(p[0]))),
        "path" => need(p, 1, "path N").and_then(|_| graph(families::path(p[0]))),
        "complete" => need(p, 1, "complete N").and_then(|_| graph(families::complete(p[0]))),
        "complete-bipartite" => {
            need(p, 2, "complete-bipartite N M").and_then(|_| graph(families::complete_bipartite(p[0], p[1])))
        }
        "kneser" => need(p, 2, "kneser N K").and_then(|_| graph(families::kneser(p[0], p[1]))),
        "stable-kneser" => need(p, 2, "stable-kneser N K").and_then(|_| graph(families::stable_kneser(p[0], p[1]))),
        "grid-g" => need(p, 2, "grid-g N M").map(|_| Output {
            value: Rendered::Graph(families::grid_g(p[0], p[1])),
            failed: false,
        }),
        "grid-h" => need(p, 2, "grid-h N M").map(|_| Output {
            value: Rendered::Graph(families::grid_h(p[0], p[1])),
            failed: false,
        }),
        "tilde-g" => need(p, 3, "tilde-g N M K").map(|_| Output {
            value: Rendered::Graph(families::tilde_g(p[0], p[1], p[2])),
            failed: false,
        }),
        "tilde-h" => need(p, 3, "tilde-h N M K").map(|_| Output {
            value: Rendered::Graph(families::tilde_h(p[0], p[1], p[2])),
            failed: false,
        }),
        "matching" => need(p, 1, "matching N").and_then(|_| complex(families::matching_complete(p[0]))),
        "chessboard" => need(p, 2, "chessboard N M").and_then(|_| complex(families::chessboard(p[0], p[1]))),
        "stirling" => need(p, 1, "stirling N").and_then(|_| complex(families::stirling(p[0]))),
        "family-a" => need(p, 1, "family-a K").and_then(|_| graph(families::family_a(p[0]))),
        "family-b" => need(p, 1, "family-b K").and_then(|_| graph(families::family_b(p[0]))),
        "pentagon-prism" => need(p, 1, "pentagon-prism N").and_then(|_| graph(families::pentagon_prism(p[0]))),
        "w" => need(p, 0, "w").and_then(|_| graph(Ok(families::graph_w()))),
        "petersen" => need(p, 0, "petersen").and_then(|_| graph(Ok(families::petersen()))),
        _ => Err(Failure::Usage(format!(
            "unknown family {name:?}; expected cycle, path, complete, complete-bipartite, kneser, \
             stable-kneser, grid-g, grid-h, tilde-g, tilde-h, matching, chessboard, stirling, \
             family-a, family-b, pentagon-prism, w or petersen"
        ))),
    }
}

fn parse_edges(spec: Option<&str>) -> Result<Vec<(Vertex, Vertex)>, Failure> {
    let spec = spec.ok_or_else(|| Failure::Usage("--over-edges is required".into()))?;
    spec.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|pair| match parse_vertices(pair)?.as_slice() {
            &[a, b] => Ok((a, b)),
            _ => Err(Failure::Usage(format!("bad edge {pair:?}; expected `a b`"))),
        })
        .collect()
}

fn parse_vertices(s: &str) -> Result<Vec<Vertex>, Failure> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Failure::Usage(format!("bad vertex {t:?}"))))
        .collect()
}

fn labeled(l: Labeled) -> Outcome {
    ok(Rendered::Graph(l.graph))
}

fn construct(name: &str, input: &str, edges: Option<&str>) -> Outcome {
    match name {
        "jonsson" => labeled(constructions::jonsson_graph(&read_complex(input)?)?),
        "csorba" => labeled(constructions::csorba_full_subdivision(&read_graph(input)?)?),
        "subdivide-four" => {
            let g = read_graph(input)?;
            match parse_edges(edges)?.as_slice() {
                &[(a, b)] => labeled(constructions::subdivide_edge_four(&g, a, b)?),
                _ => Err(Failure::Usage("subdivide-four takes exactly one edge".into())),
            }
        }
        "suspension" => {
            let g = read_graph(input)?;
            let es = parse_edges(edges)?;
            let mut vs: Vec<Vertex> = es.iter().flat_map(|&(a, b)| [a, b]).collect();
            vs.sort_unstable();
            vs.dedup();
            let h = Graph::from_edge_list(&vs, &es)?;
            labeled(constructions::graph_suspension(&g, &h)?)
        }
        "crossing" => {
            let g = read_graph(input)?;
            match parse_edges(edges)?.as_slice() {
                &[e1, e2] => labeled(constructions::crossing_resolution(&g, e1, e2)?),
                _ => Err(Failure::Usage("crossing takes exactly two edges".into())),
            }
        }
        "degree3" => {
            let (l, r) = constructions::degree3_reduction(&read_graph(input)?);
            eprintln!("suspensions: {r}");
            labeled(l)
        }
        "dowker" => {
            let rel: Relation = serde_json::from_str(&read_text(input)?).map_err(Error::from)?;
            let (kx, ky) = constructions::dowker_pair(&rel)?;
            ok(Rendered::Json(json!({ "K_X": kx, "K_Y": ky })))
        }
        _ => Err(Failure::Usage(format!(
            "unknown construction {name:?}; expected jonsson, csorba, subdivide-four, suspension, \
             crossing, degree3 or dowker"
        ))),
    }
}

fn bound(name: &str, g: &Graph, set: Option<&str>, r: Option<usize>, vertex: Option<Vertex>, cap: usize) -> Outcome {
    let set = || -> Result<Vec<Vertex>, Failure> {
        parse_vertices(set.ok_or_else(|| Failure::Usage("--set is required".into()))?)
    };
    let b = match name {
        "clawfree" => Bound::Clawfree,
        "engstrom" => Bound::EngstromClawfree,
        "distance3" => Bound::Distance3 { s: set()? },
        "diameter" => Bound::Diameter,
        "maxdeg" => Bound::Maxdeg,
        "extension" => Bound::Extension {
            sigma: set()?,
            r: r.ok_or_else(|| Failure::Usage("--r is required".into()))?,
        },
        "catloc" | "chromatic" => {
            let cover = if name == "catloc" {
                let v = vertex.ok_or_else(|| Failure::Usage("--vertex is required".into()))?;
                bounds::catloc_cover(g, v, cap)?
            } else {
                bounds::chromatic_cover(g, cap)?
            };
            let check = cover.check();
            return Ok(Output {
                failed: !check.passed(),
                value: Rendered::Json(json!({ "cover": cover.pieces, "check": check })),
            });
        }
        _ => {
            return Err(Failure::Usage(format!(
                "unknown bound {name:?}; expected clawfree, engstrom, distance3, diameter, maxdeg, \
                 extension, catloc or chromatic"
            )))
        }
    };
    let report = bounds::evaluate(g, &b)?;
    if !report.evidence.holds {
        return Err(Failure::Check(report.to_json()));
    }
    ok(Rendered::Json(serde_json::to_value(&report).expect("report serializes")))
}

fn read_text(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("reading {path}: {e}")))
    }
}

enum Input {
    Graph(Graph),
    Complex(SimplicialComplex),
}

/// A graph (`vertices`/`edges`) or a complex (`ground`/`facets`), told apart by its keys.
fn read_input(path: &str) -> Result<Input, Failure> {
    let text = read_text(path)?;
    let value: Value = serde_json::from_str(&text).map_err(Error::from)?;
    if value.get("facets").is_some() {
        Ok(Input::Complex(SimplicialComplex::from_json(&text)?))
    } else if value.get("edges").is_some() {
        Ok(Input::Graph(Graph::from_json(&text)?))
    } else {
        Err(Failure::Usage("input is neither a graph nor a complex".into()))
    }
}

fn read_graph(path: &str) -> Result<Graph, Failure> {
    match read_input(path)? {
        Input::Graph(g) => Ok(g),
        Input::Complex(_) => Err(Failure::Usage("expected a graph, got a complex".into())),
    }
}

fn read_complex(path: &str) -> Result<SimplicialComplex, Failure> {
    match read_input(path)? {
        Input::Complex(k) => Ok(k),
        Input::Graph(_) => Err(Failure::Usage("expected a complex, got a graph".into())),
    }
}

fn render(value: &Rendered, format: Format) -> Result<String, Failure> {
    Ok(match (value, format) {
        (Rendered::Graph(g), Format::Json) => g.to_json(),
        (Rendered::Graph(g), Format::Text) => g.to_edge_list_text().trim_end().to_string(),
        (Rendered::Graph(g), Format::Csv) => {
            let mut rows = vec!["u,v".to_string()];
            rows.extend(g.edges().into_iter().map(|(u, v)| format!("{u},{v}")));
            rows.join("\n")
        }
        (Rendered::Complex(k), Format::Json) => k.to_json(),
        (Rendered::Complex(k), Format::Text) => k
            .facets()
            .iter()
            .map(|f| f.vertices().iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("\n"),
        (Rendered::Complex(k), Format::Csv) => {
            let mut rows = vec!["facet,vertices".to_string()];
            rows.extend(k.facets().iter().enumerate().map(|(i, f)| {
                let vs: Vec<String> = f.vertices().iter().map(ToString::to_string).collect();
                format!("{i},{}", vs.join(" "))
            }));
            rows.join("\n")
        }
        (Rendered::Homology(h), Format::Json) => h.to_json(),
        (Rendered::Homology(h), Format::Text) => h.to_string(),
        (Rendered::Homology(h), Format::Csv) => {
            let mut rows = vec!["degree,betti,torsion".to_string()];
            rows.extend(h.groups().map(|(k, g)| {
                let t: Vec<String> = g.torsion.iter().map(ToString::to_string).collect();
                format!("{k},{},{}", g.betti, t.join(" "))
            }));
            rows.join("\n")
        }
        (Rendered::Json(v), Format::Json) => v.to_string(),
        (Rendered::Json(v), Format::Text) => serde_json::to_string_pretty(v).expect("value serializes"),
        (Rendered::Json(v), Format::Csv) => match v.get("cases").and_then(Value::as_array) {
            Some(cases) => {
                let mut rows = vec!["case,pass,params".to_string()];
                rows.extend(cases.iter().enumerate().map(|(i, c)| {
                    let params = c["params"].to_string().replace('"', "\"\"");
                    format!("{i},{},\"{params}\"", c["pass"])
                }));
                rows.join("\n")
            }
            None => return Err(Failure::Usage("csv output is not available for this command".into())),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_specs() {
        assert_eq!(parse_edges(Some("0 1;2 3")).ok(), Some(vec![(0, 1), (2, 3)]));
        assert!(parse_edges(Some("0 1 2")).is_err());
        assert!(parse_edges(None).is_err());
        assert_eq!(parse_vertices("0, 3 6").ok(), Some(vec![0, 3, 6]));
    }

    #[test]
    fn suite_names_are_listed() {
        assert!(starclusters::verify::SUITES.contains(&"cycles"));
    }
}
