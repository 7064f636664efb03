//! Homology suites over named families and seeded corpora.
//!
//! Each suite turns one statement into a list of cases, checks them in
//! parallel and returns a [`VerificationReport`]. Randomized cases draw from
//! ChaCha8 seeded with the report's seed, one stream per case, so any case can
//! be regenerated on its own. Exhaustive corpora of labeled graphs are
//! reported as one case per vertex count, with reproduction payloads for the
//! first few failures.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bounds::{catloc_cover, chromatic_cover, clawfree_bound, extension_hypothesis, Cover};
use crate::collapses::{greedy_collapse, strong_core, dominated_vertex, Verdict};
use crate::complexes::{
    alexander_dual, barycentric_subdivision, incomparability_graph, independence_complex,
    matching_complex, theorem35_pieces, Simplex, SimplicialComplex,
};
use crate::constructions::{
    crossing_resolution, csorba_full_subdivision, degree3_reduction, dowker_pair, graph_suspension,
    jonsson_graph, subdivide_edge_four, Relation,
};
use crate::error::{Error, Result};
use crate::families;
use crate::graphs::{
    all_labeled_graphs, random_claw_free_graph, random_forest, random_graph, Graph, Vertex,
    DEFAULT_CHROMATIC_CAP,
};
use crate::homology::{
    independence_homology, reduced_homology, reference_smith_diagonal, HomologyGroup, HomologyProfile,
    IntegerMatrix,
};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20_100_521;

/// Failures kept per aggregated case.
const MAX_REPROS: usize = 3;

/// Graphs with at most this many vertices get their homology from the full
/// chain complex; larger ones go through [`independence_homology`].
const DIRECT_VERTICES: usize = 16;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Case {
    pub params: Value,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
    /// Inputs that reproduce a failure.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub repro: Vec<Value>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub seed: Option<u64>,
    pub cases: Vec<Case>,
    pub summary: Summary,
}

impl VerificationReport {
    fn new(suite: &str, seed: Option<u64>, cases: Vec<Case>) -> Self {
        let pass = cases.iter().filter(|c| c.pass).count();
        VerificationReport {
            suite: suite.to_string(),
            seed,
            summary: Summary {
                pass,
                fail: cases.len() - pass,
            },
            cases,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Knobs shared by all suites; each suite reads the ones it needs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteParams {
    pub seed: u64,
    pub nmax: Option<usize>,
    pub mmax: Option<usize>,
    pub kmax: Option<usize>,
    pub vmax: Option<usize>,
    pub count: Option<usize>,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            seed: DEFAULT_SEED,
            nmax: None,
            mmax: None,
            kmax: None,
            vmax: None,
            count: None,
        }
    }
}

pub const SUITES: &[&str] = &[
    "cycles",
    "forests",
    "kneser",
    "grids",
    "constructions",
    "dowker",
    "starclusters",
    "clawfree",
    "sharpness",
    "covers",
    "maxdeg2",
    "oracle",
    "barycentric",
];

/// Runs the suite called `name`.
pub fn run_suite(name: &str, p: &SuiteParams) -> Result<VerificationReport> {
    let s = p.seed;
    match name {
        "cycles" => suite_cycles(p.nmax.unwrap_or(15)),
        "forests" => Ok(suite_forests(p.count.unwrap_or(200), p.vmax.unwrap_or(14), s)),
        "kneser" => Ok(suite_kneser(p.kmax.unwrap_or(3))),
        "grids" => Ok(suite_grids(p.nmax.unwrap_or(5), p.mmax.unwrap_or(5))),
        "constructions" => Ok(suite_constructions(p.vmax.unwrap_or(5), p.count.unwrap_or(100), s)),
        "dowker" => Ok(suite_dowker(p.count.unwrap_or(50), p.vmax.unwrap_or(6), s)),
        "starclusters" => Ok(suite_starclusters(p.vmax.unwrap_or(6), s)),
        "clawfree" => Ok(suite_clawfree(p.vmax.unwrap_or(6), p.count.unwrap_or(200), s)),
        "sharpness" => Ok(suite_sharpness(p.kmax.unwrap_or(4))),
        "covers" => Ok(suite_covers(p.vmax.unwrap_or(6), p.count.unwrap_or(50), s)),
        "maxdeg2" => Ok(suite_maxdeg2(p.nmax.unwrap_or(12))),
        "oracle" => Ok(suite_oracle(p.count.unwrap_or(1000), s)),
        "barycentric" => Ok(suite_barycentric(p.count.unwrap_or(300), s)),
        _ => Err(Error::param(format!(
            "unknown suite {name:?}; expected one of {}",
            SUITES.join(", ")
        ))),
    }
}

/// The generator for case `index` of a randomized suite.
pub fn case_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// `H̃(I_G)`, directly for small graphs and on the graph otherwise.
pub fn graph_homology(g: &Graph) -> HomologyProfile {
    if g.vertex_count() <= DIRECT_VERTICES {
        reduced_homology(&independence_complex(g))
    } else {
        independence_homology(g)
    }
}

fn profile(p: &HomologyProfile) -> Value {
    serde_json::to_value(p).expect("profile serializes")
}

fn profile_case(params: Value, expected: &HomologyProfile, computed: &HomologyProfile, input: Value) -> Case {
    let pass = expected == computed;
    Case {
        params,
        expected: profile(expected),
        computed: profile(computed),
        pass,
        repro: if pass { Vec::new() } else { vec![input] },
    }
}

/// One case for a whole corpus: `check` returns a reproduction payload for
/// every instance that fails.
fn corpus_case<T: Sync>(
    params: Value,
    expected: &str,
    items: &[T],
    check: impl Fn(&T) -> Option<Value> + Sync + Send,
) -> Case {
    let failures: Vec<Value> = items.par_iter().filter_map(check).collect();
    Case {
        params,
        expected: json!({ "statement": expected, "failures": 0 }),
        computed: json!({ "checked": items.len(), "failures": failures.len() }),
        pass: failures.is_empty(),
        repro: failures.into_iter().take(MAX_REPROS).collect(),
    }
}

fn labeled_graphs(n: usize) -> Vec<Graph> {
    all_labeled_graphs(n).collect()
}

/// `S^{k−1}` for `n = 3k ± 1` and `S^{k−1} ∨ S^{k−1}` for `n = 3k`.
pub fn cycle_profile(n: usize) -> HomologyProfile {
    let k = ((n + 1) / 3) as i32;
    if n % 3 == 0 {
        HomologyProfile::wedge_of_spheres(k - 1, 2)
    } else {
        HomologyProfile::sphere(k - 1)
    }
}

pub fn suite_cycles(n_max: usize) -> Result<VerificationReport> {
    if n_max < 3 {
        return Err(Error::param("cycles suite needs nmax >= 3"));
    }
    let cases = (3..=n_max)
        .into_par_iter()
        .map(|n| {
            let g = families::cycle(n).expect("n >= 3");
            let computed = reduced_homology(&independence_complex(&g));
            profile_case(json!({ "n": n }), &cycle_profile(n), &computed, json!({ "graph": g }))
        })
        .collect();
    Ok(VerificationReport::new("cycles", None, cases))
}

/// Random forests: `I_G` is a point or a sphere, and the strong core is a
/// single vertex or a perfect matching with the same homology.
pub fn suite_forests(count: usize, v_max: usize, seed: u64) -> VerificationReport {
    let cases = (0..count)
        .into_par_iter()
        .map(|i| {
            let g = random_forest(&mut case_rng(seed, i), v_max);
            let h = graph_homology(&g);
            let core = strong_core(&g);
            let core_h = graph_homology(&core);
            let core_shape = if core.vertex_count() == 1 {
                "point"
            } else if core.vertices().all(|v| core.degree(v) == 1) {
                "matching"
            } else {
                "other"
            };
            let pass = h.is_point_or_sphere()
                && dominated_vertex(&core).is_none()
                && core_shape != "other"
                && core_h == h;
            Case {
                params: json!({ "index": i, "vertices": g.vertex_count() }),
                expected: json!({ "point_or_sphere": true, "core": "point or matching" }),
                computed: json!({ "homology": profile(&h), "core": core_shape, "core_homology": profile(&core_h) }),
                pass,
                repro: if pass { Vec::new() } else { vec![json!({ "graph": g })] },
            }
        })
        .collect();
    VerificationReport::new("forests", Some(seed), cases)
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `I_{KG_{2,k}}` is a wedge of `C(k+3, 3)` two-spheres.
pub fn suite_kneser(k_max: usize) -> VerificationReport {
    let cases = (0..=k_max)
        .into_par_iter()
        .map(|k| {
            let g = families::kneser(2, k).expect("n = 2");
            let computed = reduced_homology(&independence_complex(&g));
            let expected = HomologyProfile::wedge_of_spheres(2, binomial(k + 3, 3));
            profile_case(json!({ "k": k }), &expected, &computed, json!({ "graph": g }))
        })
        .collect();
    VerificationReport::new("kneser", None, cases)
}

/// Point or sphere for every `G(n, m)` and `H(n, m)`; the suspension shift
/// between `k` and `k + 3` for the tilde graphs when `k < n` and `m ≠ 0`;
/// and `G̃(n, m+3, k) ≅ H(n, m)`, `H̃(n, m+3, k) ≅ G(n, m)` for `k > n`.
pub fn suite_grids(n_max: usize, m_max: usize) -> VerificationReport {
    let mut jobs: Vec<Value> = Vec::new();
    for n in 0..=n_max {
        for m in 0..=m_max {
            jobs.push(json!({ "check": "sphere", "family": "G", "n": n, "m": m }));
            jobs.push(json!({ "check": "sphere", "family": "H", "n": n, "m": m }));
            if m != 0 {
                for k in 0..n {
                    jobs.push(json!({ "check": "shift", "family": "G", "n": n, "m": m, "k": k }));
                    jobs.push(json!({ "check": "shift", "family": "H", "n": n, "m": m, "k": k }));
                }
            }
            if m >= 3 {
                for k in n + 1..=n_max.max(n + 1) {
                    jobs.push(json!({ "check": "iso", "family": "G", "n": n, "m": m, "k": k }));
                    jobs.push(json!({ "check": "iso", "family": "H", "n": n, "m": m, "k": k }));
                }
            }
        }
    }
    let cases = jobs.into_par_iter().map(grid_case).collect();
    VerificationReport::new("grids", None, cases)
}

fn grid_case(params: Value) -> Case {
    let get = |key: &str| params[key].as_u64().unwrap_or(0) as usize;
    let (n, m, k) = (get("n"), get("m"), get("k"));
    let is_g = params["family"] == "G";
    let tilde = |k: usize| {
        if is_g {
            families::tilde_g(n, m, k)
        } else {
            families::tilde_h(n, m, k)
        }
    };
    match params["check"].as_str() {
        Some("sphere") => {
            let g = tilde(0);
            let h = graph_homology(&g);
            let pass = h.is_point_or_sphere();
            Case {
                expected: json!("point or sphere"),
                computed: profile(&h),
                pass,
                repro: if pass { Vec::new() } else { vec![json!({ "graph": g })] },
                params,
            }
        }
        Some("shift") => {
            let (a, b) = (tilde(k), tilde(k + 3));
            let expected = graph_homology(&b).suspend();
            profile_case(params, &expected, &graph_homology(&a), json!({ "graph": a, "shifted": b }))
        }
        _ => {
            let a = tilde(k);
            let b = if is_g {
                families::grid_h(n, m - 3)
            } else {
                families::grid_g(n, m - 3)
            };
            let pass = crate::graphs::are_isomorphic(&a, &b);
            Case {
                expected: json!({ "isomorphic": true }),
                computed: json!({ "isomorphic": pass }),
                pass,
                repro: if pass { Vec::new() } else { vec![json!({ "graph": a, "target": b })] },
                params,
            }
        }
    }
}

/// The claimed shift for every construction, checked on one graph.
/// Returns `(construction, expected, computed, output)` for each application.
fn construction_checks(g: &Graph, rng: &mut ChaCha8Rng) -> Vec<(String, HomologyProfile, HomologyProfile, Graph)> {
    let mut out = Vec::new();
    let base = graph_homology(g);
    let mut record = |name: String, expected: HomologyProfile, result: Graph| {
        let computed = graph_homology(&result);
        out.push((name, expected, computed, result));
    };
    let complex = independence_complex(g);
    if let Ok(j) = jonsson_graph(&complex) {
        record("jonsson_graph".into(), base.suspend(), j.graph);
    }
    if let Ok(c) = csorba_full_subdivision(g) {
        let expected = match alexander_dual(&complex) {
            Ok(dual) => reduced_homology(&dual).suspend(),
            Err(_) => HomologyProfile::zero(),
        };
        record("csorba_full_subdivision".into(), expected, c.graph);
    }
    let edges = g.edges();
    for &(a, b) in &edges {
        let s = subdivide_edge_four(g, a, b).expect("edge of g");
        record(format!("subdivide_edge_four({a},{b})"), base.suspend(), s.graph);
    }
    // over the whole graph, one edge, and a random subgraph
    let mut subgraphs = vec![("all".to_string(), g.clone())];
    if let Some(&(a, b)) = edges.first() {
        subgraphs.push((format!("edge({a},{b})"), Graph::from_edge_list(&[a, b], &[(a, b)]).expect("edge")));
    }
    let vs: Vec<Vertex> = g.vertices().filter(|_| rng.gen_bool(0.6)).collect();
    if !vs.is_empty() {
        let es: Vec<(Vertex, Vertex)> = edges
            .iter()
            .copied()
            .filter(|(a, b)| vs.contains(a) && vs.contains(b) && rng.gen_bool(0.5))
            .collect();
        subgraphs.push(("random".to_string(), Graph::from_edge_list(&vs, &es).expect("subgraph")));
    }
    for (label, h) in subgraphs {
        let s = graph_suspension(g, &h).expect("h is a subgraph of g");
        record(format!("graph_suspension[{label}]"), base.suspend(), s.graph);
    }
    let disjoint = edges.iter().enumerate().find_map(|(i, &e1)| {
        edges[i + 1..]
            .iter()
            .find(|e2| ![e1.0, e1.1].contains(&e2.0) && ![e1.0, e1.1].contains(&e2.1))
            .map(|&e2| (e1, e2))
    });
    if let Some((e1, e2)) = disjoint {
        let c = crossing_resolution(g, e1, e2).expect("disjoint edges");
        record("crossing_resolution".into(), base.suspend(), c.graph);
    }
    let (d, r) = degree3_reduction(g);
    let expected = base.shift(r as i32).expect("non-negative shift");
    record(format!("degree3_reduction[r={r}]"), expected, d.graph);
    out
}

fn construction_failures(g: &Graph, rng: &mut ChaCha8Rng) -> Vec<Value> {
    construction_checks(g, rng)
        .into_iter()
        .filter(|(_, e, c, _)| e != c)
        .map(|(name, e, c, out)| {
            json!({ "construction": name, "graph": g, "output": out,
                    "expected": profile(&e), "computed": profile(&c) })
        })
        .collect()
}

/// Every construction with a suspension guarantee, exhaustively on labeled
/// graphs with up to `v_max` vertices and on `count` random graphs with 6 to 9 vertices.
pub fn suite_constructions(v_max: usize, count: usize, seed: u64) -> VerificationReport {
    let mut cases = Vec::new();
    for n in 1..=v_max {
        let graphs: Vec<(usize, Graph)> = labeled_graphs(n).into_iter().enumerate().collect();
        let stream_base = n << 32;
        let failures: Vec<Value> = graphs
            .par_iter()
            .flat_map_iter(|(i, g)| construction_failures(g, &mut case_rng(seed, stream_base + i)))
            .collect();
        cases.push(Case {
            params: json!({ "corpus": "labeled", "vertices": n }),
            expected: json!({ "statement": "output homology is the input homology shifted", "failures": 0 }),
            computed: json!({ "checked": graphs.len(), "failures": failures.len() }),
            pass: failures.is_empty(),
            repro: failures.into_iter().take(MAX_REPROS).collect(),
        });
    }
    let random: Vec<Case> = (0..count)
        .into_par_iter()
        .map(|i| {
            let mut rng = case_rng(seed, i);
            let n = rng.gen_range(6..=9);
            let g = random_graph(&mut rng, n, 0.35);
            let checks = construction_checks(&g, &mut rng);
            let failed: Vec<&String> = checks.iter().filter(|(_, e, c, _)| e != c).map(|(n, ..)| n).collect();
            Case {
                params: json!({ "corpus": "random", "index": i, "vertices": n }),
                expected: json!({ "failures": [] }),
                computed: json!({ "checked": checks.len(), "failures": failed }),
                pass: failed.is_empty(),
                repro: if failed.is_empty() { Vec::new() } else { vec![json!({ "graph": g })] },
            }
        })
        .collect();
    cases.extend(random);
    VerificationReport::new("constructions", Some(seed), cases)
}

/// `K_X` and `K_Y` of random relations with at most `side_max` elements per side.
pub fn suite_dowker(count: usize, side_max: usize, seed: u64) -> VerificationReport {
    let cases = (0..count)
        .into_par_iter()
        .map(|i| {
            let mut rng = case_rng(seed, i);
            let nx = rng.gen_range(1..=side_max.max(1)) as u32;
            let ny = rng.gen_range(1..=side_max.max(1)) as u32;
            let p = rng.gen_range(0.2..0.8);
            let r = Relation::random(&mut rng, nx, ny, p);
            let (kx, ky) = dowker_pair(&r).expect("both sides non-empty");
            let hx = reduced_homology(&kx);
            let hy = reduced_homology(&ky);
            profile_case(
                json!({ "index": i, "x": nx, "y": ny }),
                &hx,
                &hy,
                json!({ "relation": r }),
            )
        })
        .collect();
    VerificationReport::new("dowker", Some(seed), cases)
}

/// Up to 20 faces of `I_G`, all of them when there are few enough.
fn sample_faces(k: &SimplicialComplex, rng: &mut ChaCha8Rng) -> Vec<Simplex> {
    let mut faces = k.faces();
    if faces.len() > 20 {
        faces.shuffle(rng);
        faces.truncate(20);
        faces.sort();
    }
    faces
}

fn starcluster_failures(g: &Graph, rng: &mut ChaCha8Rng) -> Option<Value> {
    let k = independence_complex(g);
    for sigma in sample_faces(&k, rng) {
        let sc = k.star_cluster(&sigma).expect("face of k");
        let h = reduced_homology(&sc);
        let verdict = greedy_collapse(&sc).verdict();
        if !h.is_zero() || verdict != Verdict::Collapsible {
            return Some(json!({ "graph": g, "sigma": sigma, "homology": profile(&h), "verdict": verdict }));
        }
    }
    // I_G ≃ Σ(st(v) ∩ SC(N(v))) at vertices in no triangle
    let expected = reduced_homology(&k);
    for v in g.vertices() {
        if g.degree(v) == 0 || g.in_triangle(v) {
            continue;
        }
        let (inter, _) = theorem35_pieces(g, v).expect("hypotheses checked");
        let computed = reduced_homology(&inter).suspend();
        if computed != expected {
            return Some(json!({ "graph": g, "vertex": v,
                                "expected": profile(&expected), "computed": profile(&computed) }));
        }
    }
    None
}

/// Star clusters of faces of independence complexes are contractible and
/// collapse greedily to a vertex; `I_G` is the suspension of
/// `st(v) ∩ SC(N(v))` whenever `v` lies in no triangle.
pub fn suite_starclusters(v_max: usize, seed: u64) -> VerificationReport {
    let cases = (1..=v_max)
        .map(|n| {
            let graphs: Vec<(usize, Graph)> = labeled_graphs(n).into_iter().enumerate().collect();
            corpus_case(
                json!({ "corpus": "labeled", "vertices": n }),
                "star clusters are collapsible; suspension formula at triangle-free vertices",
                &graphs,
                |(i, g)| starcluster_failures(g, &mut case_rng(seed, (n << 32) + i)),
            )
        })
        .collect();
    VerificationReport::new("starclusters", Some(seed), cases)
}

fn clawfree_failure(g: &Graph) -> Option<Value> {
    let bound = clawfree_bound(g).ok()?;
    let h = graph_homology(g);
    let k = independence_complex(g);
    let d = i64::from(k.dim());
    // the proof: a maximum independent set absorbs every set of at most [(d−2)/2] + 1 vertices
    let sigma = k.facets().iter().find(|f| f.len() as i64 == d + 1)?.vertices().to_vec();
    let r = (bound + 1).max(0) as usize;
    let extends = extension_hypothesis(g, &sigma, r).expect("sigma is independent");
    if h.connectivity().at_least(bound) && extends {
        None
    } else {
        Some(json!({ "graph": g, "bound": bound, "homology": profile(&h), "extension": extends }))
    }
}

/// Claw-free graphs: `I_G` is `[(dim − 2)/2]`-connected in homology. Also
/// checks the Stirling complexes for `n ≤ 7` against `[(n − 4)/2]`.
pub fn suite_clawfree(v_max: usize, count: usize, seed: u64) -> VerificationReport {
    let mut cases: Vec<Case> = (1..=v_max)
        .map(|n| {
            let graphs: Vec<Graph> = labeled_graphs(n).into_iter().filter(Graph::is_claw_free).collect();
            corpus_case(
                json!({ "corpus": "labeled claw-free", "vertices": n }),
                "homological connectivity >= [(dim - 2)/2]",
                &graphs,
                clawfree_failure,
            )
        })
        .collect();
    let random: Vec<Graph> = (0..count)
        .into_par_iter()
        .map(|i| {
            let mut rng = case_rng(seed, i);
            let n = rng.gen_range(7..=9);
            random_claw_free_graph(&mut rng, n, 0.3)
        })
        .collect();
    cases.push(corpus_case(
        json!({ "corpus": "random claw-free", "count": count, "vertices": "7..=9" }),
        "homological connectivity >= [(dim - 2)/2]",
        &random,
        clawfree_failure,
    ));
    for n in 2..=7usize {
        let stir = families::stirling(n).expect("n >= 2");
        let c = reduced_homology(&stir).connectivity();
        let bound = (n as i64 - 4).div_euclid(2);
        cases.push(Case {
            params: json!({ "family": "stirling", "n": n }),
            expected: json!({ "connectivity_at_least": bound }),
            computed: json!({ "connectivity": c }),
            pass: c.at_least(bound),
            repro: Vec::new(),
        });
    }
    VerificationReport::new("clawfree", Some(seed), cases)
}

/// `M(A_k)` and `M(B_k)` are `(k−1)`-spheres of dimensions `2k − 1` and `2k − 2`.
pub fn suite_sharpness(k_max: usize) -> VerificationReport {
    let jobs: Vec<(usize, bool)> = (1..=k_max).flat_map(|k| [(k, true), (k, false)]).collect();
    let cases = jobs
        .into_par_iter()
        .map(|(k, is_a)| {
            let g = if is_a { families::family_a(k) } else { families::family_b(k) }.expect("k >= 1");
            let (m, _) = matching_complex(&g).expect("has edges");
            let dim = m.dim();
            let h = reduced_homology(&m);
            let want_dim = if is_a { 2 * k as i32 - 1 } else { 2 * k as i32 - 2 };
            let want = HomologyProfile::sphere(k as i32 - 1);
            Case {
                params: json!({ "family": if is_a { "A" } else { "B" }, "k": k }),
                expected: json!({ "dim": want_dim, "homology": profile(&want) }),
                computed: json!({ "dim": dim, "homology": profile(&h) }),
                pass: dim == want_dim && h == want,
                repro: Vec::new(),
            }
        })
        .collect();
    VerificationReport::new("sharpness", None, cases)
}

fn cover_failure(g: &Graph) -> Option<Value> {
    let mut covers: Vec<(String, Cover)> = Vec::new();
    for v in g.vertices() {
        covers.push((format!("catloc({v})"), catloc_cover(g, v, DEFAULT_CHROMATIC_CAP).ok()?));
    }
    covers.push(("chromatic".into(), chromatic_cover(g, DEFAULT_CHROMATIC_CAP).ok()?));
    covers.into_iter().find_map(|(name, c)| {
        let check = c.check();
        (!check.passed()).then(|| json!({ "graph": g, "cover": name, "check": check }))
    })
}

/// Local and chromatic covers by stars and star clusters: the union is `I_G`
/// and every piece is contractible.
pub fn suite_covers(v_max: usize, count: usize, seed: u64) -> VerificationReport {
    let named = [
        ("C5", families::cycle(5).expect("n >= 3")),
        ("petersen", families::petersen()),
    ];
    let mut cases: Vec<Case> = named
        .into_iter()
        .map(|(name, g)| {
            let failure = cover_failure(&g);
            Case {
                params: json!({ "graph": name }),
                expected: json!({ "covers_verified": true }),
                computed: json!({ "covers_verified": failure.is_none() }),
                pass: failure.is_none(),
                repro: failure.into_iter().collect(),
            }
        })
        .collect();
    for n in 1..=v_max {
        cases.push(corpus_case(
            json!({ "corpus": "labeled", "vertices": n }),
            "covers are exact and every piece is contractible",
            &labeled_graphs(n),
            cover_failure,
        ));
    }
    let random: Vec<Graph> = (0..count)
        .map(|i| {
            let mut rng = case_rng(seed, i);
            let n = rng.gen_range(7..=10);
            random_graph(&mut rng, n, 0.4)
        })
        .collect();
    cases.push(corpus_case(
        json!({ "corpus": "random", "count": count, "vertices": "7..=10" }),
        "covers are exact and every piece is contractible",
        &random,
        cover_failure,
    ));
    VerificationReport::new("covers", Some(seed), cases)
}

/// Disjoint unions of paths and cycles with at most `n_max` vertices, one per
/// multiset of components.
pub fn max_degree_two_graphs(n_max: usize) -> Vec<Graph> {
    // component kinds: paths of length 1..=n_max, then cycles 3..=n_max
    let kinds: Vec<(bool, usize)> = (1..=n_max).map(|a| (false, a)).chain((3..=n_max).map(|b| (true, b))).collect();
    let mut out = Vec::new();
    fn rec(kinds: &[(bool, usize)], from: usize, room: usize, parts: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(parts.clone());
        for i in from..kinds.len() {
            if kinds[i].1 <= room {
                parts.push(i);
                rec(kinds, i, room - kinds[i].1, parts, out);
                parts.pop();
            }
        }
    }
    let mut multisets = Vec::new();
    rec(&kinds, 0, n_max, &mut Vec::new(), &mut multisets);
    for parts in multisets {
        let mut g = Graph::new();
        for i in parts {
            let (cyclic, size) = kinds[i];
            let c = if cyclic { families::cycle(size) } else { families::path(size) }.expect("valid size");
            g = g.disjoint_union(&c).0;
        }
        out.push(g);
    }
    out
}

fn maxdeg2_failure(g: &Graph) -> Option<Value> {
    let h = graph_homology(g);
    if h.is_zero() {
        return None;
    }
    let ok = h.as_wedge().is_some_and(|(n, count)| {
        count.is_power_of_two() && i64::from(n) >= i64::from(count.trailing_zeros()) - 1
    });
    (!ok).then(|| json!({ "graph": g, "homology": profile(&h) }))
}

/// Maximum degree at most two: `I_G` is a point or a wedge of `2^r` spheres `S^n` with `n ≥ r − 1`.
pub fn suite_maxdeg2(n_max: usize) -> VerificationReport {
    let graphs = max_degree_two_graphs(n_max);
    let case = corpus_case(
        json!({ "corpus": "paths and cycles", "vertices_at_most": n_max }),
        "point, or wedge of 2^r n-spheres with n >= r - 1",
        &graphs,
        maxdeg2_failure,
    );
    VerificationReport::new("maxdeg2", None, vec![case])
}

/// A random integer matrix with at most 8 rows and columns and entries in `[−9, 9]`.
pub fn random_matrix(rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
    let rows = rng.gen_range(1..=8);
    let cols = rng.gen_range(1..=8);
    (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-9..=9)).collect()).collect()
}

/// The engine's Smith normal form against the textbook reducer on random
/// matrices, plus the torsion of the projective plane.
pub fn suite_oracle(count: usize, seed: u64) -> VerificationReport {
    let mut cases: Vec<Case> = (0..count)
        .into_par_iter()
        .map(|i| {
            let m = random_matrix(&mut case_rng(seed, i));
            let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            let reference: Vec<String> = reference_smith_diagonal(&big).iter().map(ToString::to_string).collect();
            let snf = IntegerMatrix::from_rows(&m).smith_normal_form();
            let engine: Vec<String> = snf.diagonal.iter().map(ToString::to_string).collect();
            let pass = engine == reference;
            Case {
                params: json!({ "index": i, "rows": m.len(), "cols": m[0].len() }),
                expected: json!(reference),
                computed: json!(engine),
                pass,
                repro: if pass { Vec::new() } else { vec![json!({ "matrix": m })] },
            }
        })
        .collect();
    let rp2 = projective_plane();
    let mut expected = HomologyProfile::zero();
    expected.insert(1, HomologyGroup::new(0, vec![BigInt::from(2)]));
    cases.push(profile_case(
        json!({ "complex": "RP2" }),
        &expected,
        &reduced_homology(&rp2),
        json!({ "complex": rp2 }),
    ));
    VerificationReport::new("oracle", Some(seed), cases)
}

/// The six-vertex triangulation of the real projective plane.
pub fn projective_plane() -> SimplicialComplex {
    SimplicialComplex::from_facets([
        vec![0, 1, 2],
        vec![0, 2, 3],
        vec![0, 3, 4],
        vec![0, 4, 5],
        vec![0, 1, 5],
        vec![1, 2, 4],
        vec![2, 3, 5],
        vec![1, 3, 4],
        vec![1, 3, 5],
        vec![2, 4, 5],
    ])
    .expect("valid facets")
}

/// Random complex with at most `max_simplices` faces on at most five vertices.
pub fn random_small_complex(rng: &mut ChaCha8Rng, max_simplices: usize) -> SimplicialComplex {
    loop {
        let n = rng.gen_range(1..=5u32);
        let facets: Vec<Vec<Vertex>> = (0..rng.gen_range(1..=3))
            .map(|_| {
                let mut f: Vec<Vertex> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
                if f.is_empty() {
                    f.push(rng.gen_range(0..n));
                }
                f
            })
            .collect();
        let k = SimplicialComplex::from_facets(facets).expect("non-empty facets");
        if k.num_simplices() <= max_simplices {
            return k;
        }
    }
}

/// `I` of the incomparability graph of the face poset equals the barycentric
/// subdivision, both labeled by face index.
pub fn suite_barycentric(count: usize, seed: u64) -> VerificationReport {
    let cases = (0..count)
        .into_par_iter()
        .map(|i| {
            let k = random_small_complex(&mut case_rng(seed, i), 8);
            let sd = barycentric_subdivision(&k);
            let via_graph = independence_complex(&incomparability_graph(&k).graph);
            let pass = sd.facets() == via_graph.facets();
            Case {
                params: json!({ "index": i, "simplices": k.num_simplices() }),
                expected: json!(sd.facets()),
                computed: json!(via_graph.facets()),
                pass,
                repro: if pass { Vec::new() } else { vec![json!({ "complex": k })] },
            }
        })
        .collect();
    VerificationReport::new("barycentric", Some(seed), cases)
}
