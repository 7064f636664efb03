//! Connectivity bounds for independence complexes and the covers behind them.
//!
//! Every bound is checked against homology only: a claimed `c`-connectivity
//! is witnessed by `H̃_i(I_G) = 0` for all `i ≤ c`. Brackets are floors, so
//! `[−1/2] = −1`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::collapses::{greedy_collapse, Verdict};
use crate::complexes::{independence_complex, Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graphs::{chromatic_coloring, Graph, Vertex};
use crate::homology::{independence_homology, reduced_homology, Connectivity, HomologyProfile};

/// `dim(I_G)`, which is one less than the independence number.
pub fn independence_dim(g: &Graph) -> i64 {
    i64::from(independence_complex(g).dim())
}

/// `[(dim(I_G) − 2)/2]` for a claw-free graph.
pub fn clawfree_bound(g: &Graph) -> Result<i64> {
    if let Some((center, leaves)) = g.find_claw() {
        return Err(Error::ClawPresent { center, leaves });
    }
    Ok((independence_dim(g) - 2).div_euclid(2))
}

/// `[(2n − 1)/(3m + 2) − 1]` for a claw-free graph with `n` vertices and maximum degree `m`.
pub fn engstrom_clawfree_bound(g: &Graph) -> Result<i64> {
    if let Some((center, leaves)) = g.find_claw() {
        return Err(Error::ClawPresent { center, leaves });
    }
    let n = g.vertex_count() as i64;
    let m = g.max_degree() as i64;
    Ok((2 * n - 1).div_euclid(3 * m + 2) - 1)
}

/// `#S − 2` for a set `S` whose points are pairwise at distance at least 3.
/// Vertices in different components count as infinitely far apart.
pub fn distance3_bound(g: &Graph, s: &[Vertex]) -> Result<i64> {
    for &v in s {
        g.check_vertex(v)?;
    }
    let s: Vec<Vertex> = s.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    for (i, &u) in s.iter().enumerate() {
        for &v in &s[i + 1..] {
            if let Some(d) = g.distance(u, v) {
                if d < 3 {
                    return Err(Error::TooClose(u, v, d));
                }
            }
        }
    }
    Ok(s.len() as i64 - 2)
}

/// `[n/3 − 1]` for a connected graph of diameter `n`.
pub fn diameter_bound(g: &Graph) -> Result<i64> {
    Ok((g.diameter()? as i64).div_euclid(3) - 1)
}

/// `[dim(I_G)/m − 1]` for maximum degree `m ≥ 1`.
pub fn maxdeg_bound(g: &Graph) -> Result<i64> {
    let m = g.max_degree() as i64;
    if m == 0 {
        return Err(Error::hypothesis("maximum degree must be positive"));
    }
    Ok(independence_dim(g).div_euclid(m) - 1)
}

/// An independent set of at most `r` vertices that extends to no vertex of
/// `sigma`, if one exists. A set `τ` extends to `v` when `τ ∪ {v}` is independent.
pub fn extension_failure(g: &Graph, sigma: &[Vertex], r: usize) -> Result<Option<Vec<Vertex>>> {
    for &v in sigma {
        g.check_vertex(v)?;
    }
    let sigma: Vec<Vertex> = sigma.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    if !g.is_independent(&sigma) {
        return Err(Error::NotIndependent(sigma));
    }
    // τ fails exactly when it avoids σ and every vertex of σ has a neighbour
    // in τ, so it is enough to search independent subsets of N(σ).
    let candidates: Vec<Vertex> = sigma
        .iter()
        .flat_map(|&s| g.neighbors(s).iter().copied())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut tau = Vec::new();
    Ok(search_blocker(g, &sigma, &candidates, r, &mut tau).then_some(tau))
}

fn search_blocker(
    g: &Graph,
    sigma: &[Vertex],
    candidates: &[Vertex],
    budget: usize,
    tau: &mut Vec<Vertex>,
) -> bool {
    let open = sigma
        .iter()
        .find(|&&s| !tau.iter().any(|&t| g.has_edge(s, t)));
    let Some(&s) = open else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    // Some vertex of τ must block `s`; try them in candidate order.
    for &c in candidates {
        if !g.has_edge(s, c) || tau.iter().any(|&t| g.has_edge(c, t)) || tau.contains(&c) {
            continue;
        }
        tau.push(c);
        if search_blocker(g, sigma, candidates, budget - 1, tau) {
            tau.sort_unstable();
            return true;
        }
        tau.pop();
    }
    false
}

/// Whether every independent set with at most `r` vertices extends to some
/// vertex of `sigma`. When it does, `I_G` is `(r − 1)`-connected.
pub fn extension_hypothesis(g: &Graph, sigma: &[Vertex], r: usize) -> Result<bool> {
    Ok(extension_failure(g, sigma, r)?.is_none())
}

/// The bounds that can be evaluated into a [`BoundReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "bound", rename_all = "snake_case")]
pub enum Bound {
    Clawfree,
    EngstromClawfree,
    Distance3 { s: Vec<Vertex> },
    Diameter,
    Maxdeg,
    Extension { sigma: Vec<Vertex>, r: usize },
}

impl Bound {
    pub fn name(&self) -> &'static str {
        match self {
            Bound::Clawfree => "clawfree",
            Bound::EngstromClawfree => "engstrom_clawfree",
            Bound::Distance3 { .. } => "distance3",
            Bound::Diameter => "diameter",
            Bound::Maxdeg => "maxdeg",
            Bound::Extension { .. } => "extension",
        }
    }

    /// The claimed connectivity level, or the violated hypothesis.
    pub fn claim(&self, g: &Graph) -> Result<i64> {
        match self {
            Bound::Clawfree => clawfree_bound(g),
            Bound::EngstromClawfree => engstrom_clawfree_bound(g),
            Bound::Distance3 { s } => distance3_bound(g, s),
            Bound::Diameter => diameter_bound(g),
            Bound::Maxdeg => maxdeg_bound(g),
            Bound::Extension { sigma, r } => match extension_failure(g, sigma, *r)? {
                None => Ok(*r as i64 - 1),
                Some(tau) => Err(Error::hypothesis(format!(
                    "{tau:?} extends to no vertex of {sigma:?}"
                ))),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub homology: HomologyProfile,
    pub connectivity: Connectivity,
    pub holds: bool,
}

/// A claimed connectivity level together with the homology that checks it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub bound_name: String,
    pub inputs: serde_json::Value,
    pub claimed: i64,
    pub evidence: Evidence,
}

impl BoundReport {
    /// Re-derives connectivity and the verdict from the recorded homology.
    pub fn recheck(&self) -> bool {
        let c = self.evidence.homology.connectivity();
        c == self.evidence.connectivity && self.evidence.holds == c.at_least(self.claimed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Evaluates `bound` on `g` and checks it against `H̃(I_G)`.
pub fn evaluate(g: &Graph, bound: &Bound) -> Result<BoundReport> {
    let claimed = bound.claim(g)?;
    let homology = independence_homology(g);
    let connectivity = homology.connectivity();
    Ok(BoundReport {
        bound_name: bound.name().to_string(),
        inputs: json!({ "graph": g, "params": bound }),
        claimed,
        evidence: Evidence {
            holds: connectivity.at_least(claimed),
            connectivity,
            homology,
        },
    })
}

/// Which subcomplex of `I_G` a cover piece is.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PieceKind {
    Star,
    StarCluster,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverPiece {
    pub kind: PieceKind,
    pub generator: Simplex,
    pub complex: SimplicialComplex,
}

/// A cover of `I_G` by stars and star clusters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cover {
    pub complex: SimplicialComplex,
    pub pieces: Vec<CoverPiece>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieceCheck {
    pub point_homology: bool,
    pub collapsible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverCheck {
    pub union_equals: bool,
    pub pieces: Vec<PieceCheck>,
}

impl CoverCheck {
    pub fn passed(&self) -> bool {
        self.union_equals && self.pieces.iter().all(|p| p.point_homology && p.collapsible)
    }
}

impl Cover {
    /// Compares the union of the pieces with `I_G` facet by facet and tests
    /// every piece for point homology and a greedy collapse to a vertex.
    pub fn check(&self) -> CoverCheck {
        let union: BTreeSet<Simplex> = maximal(self.pieces.iter().flat_map(|p| p.complex.facets().iter().cloned()));
        let target: BTreeSet<Simplex> = self.complex.facets().iter().cloned().collect();
        CoverCheck {
            union_equals: union == target,
            pieces: self
                .pieces
                .iter()
                .map(|p| PieceCheck {
                    point_homology: reduced_homology(&p.complex).is_zero(),
                    collapsible: greedy_collapse(&p.complex).verdict() == Verdict::Collapsible,
                })
                .collect(),
        }
    }
}

fn maximal(simplices: impl Iterator<Item = Simplex>) -> BTreeSet<Simplex> {
    let all: BTreeSet<Simplex> = simplices.collect();
    all.iter()
        .filter(|s| !all.iter().any(|t| t != *s && s.is_face_of(t)))
        .cloned()
        .collect()
}

fn star_cluster_piece(k: &SimplicialComplex, class: Vec<Vertex>) -> CoverPiece {
    let generator = Simplex::new(class).expect("color classes are non-empty");
    CoverPiece {
        complex: k.star_cluster(&generator).expect("color classes are independent"),
        kind: PieceKind::StarCluster,
        generator,
    }
}

/// `st(v)` together with `SC(σ_i)` for an optimal coloring `σ_1, …, σ_n` of
/// `N_G(v)`; it covers `I_G` because a set that does not extend to `v` meets `N(v)`.
pub fn catloc_cover(g: &Graph, v: Vertex, cap: usize) -> Result<Cover> {
    g.check_vertex(v)?;
    let complex = independence_complex(g);
    let nbhd = g.induced_subgraph(g.neighbors(v))?;
    let classes = chromatic_coloring(&nbhd, cap)?;
    let generator = Simplex::vertex(v);
    let mut pieces = vec![CoverPiece {
        complex: complex.star(&generator)?,
        kind: PieceKind::Star,
        generator,
    }];
    pieces.extend(classes.into_iter().map(|c| star_cluster_piece(&complex, c)));
    Ok(Cover { complex, pieces })
}

/// Star clusters of the color classes of an optimal coloring of `G`.
pub fn chromatic_cover(g: &Graph, cap: usize) -> Result<Cover> {
    let complex = independence_complex(g);
    let classes = chromatic_coloring(g, cap)?;
    let pieces = classes.into_iter().map(|c| star_cluster_piece(&complex, c)).collect();
    Ok(Cover { complex, pieces })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, family_a, path, petersen};
    use crate::complexes::matching_complex;
    use crate::graphs::DEFAULT_CHROMATIC_CAP;

    #[test]
    fn clawfree_examples() {
        // {0, 2, 4} is independent, so dim(I) = 2
        assert_eq!(clawfree_bound(&cycle(6).unwrap()).unwrap(), 0);
        assert!(evaluate(&cycle(6).unwrap(), &Bound::Clawfree).unwrap().evidence.holds);
        let line = family_a(2).unwrap().line_graph().graph;
        assert_eq!(clawfree_bound(&line).unwrap(), 0);
        let m5 = complete(5).unwrap().line_graph().graph;
        assert_eq!(clawfree_bound(&m5).unwrap(), -1);
        let claw = Graph::from_edge_list(&[0, 1, 2, 3], &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(matches!(clawfree_bound(&claw), Err(Error::ClawPresent { center: 0, .. })));
        let (ma, _) = matching_complex(&family_a(2).unwrap()).unwrap();
        assert_eq!(ma.dim(), 3);
    }

    #[test]
    fn extension_examples() {
        let c4 = cycle(4).unwrap();
        assert!(extension_hypothesis(&c4, &[0, 2], 0).unwrap());
        // {1} is adjacent to both 0 and 2
        assert_eq!(extension_failure(&c4, &[0, 2], 1).unwrap(), Some(vec![1]));
        assert!(extension_hypothesis(&c4, &[0], 0).unwrap());
        assert!(!extension_hypothesis(&c4, &[], 0).unwrap());
        assert!(matches!(extension_hypothesis(&c4, &[0, 1], 1), Err(Error::NotIndependent(_))));
        let p7 = path(7).unwrap();
        assert!(extension_hypothesis(&p7, &[0, 3, 6], 2).unwrap());
        // blocking 3 needs 2 or 4, each adjacent to a forced vertex 1 or 5
        assert!(extension_hypothesis(&p7, &[0, 3, 6], 7).unwrap());
        let c6 = cycle(6).unwrap();
        assert!(extension_hypothesis(&c6, &[0, 3], 1).unwrap());
        assert_eq!(extension_failure(&c6, &[0, 3], 2).unwrap(), Some(vec![1, 4]));
    }

    #[test]
    fn extension_agrees_with_brute_force() {
        for g in crate::graphs::all_labeled_graphs(5) {
            let k = independence_complex(&g);
            for sigma in k.faces() {
                for r in 0..=3 {
                    let brute = k.faces().into_iter().all(|tau| {
                        tau.len() > r
                            || sigma.vertices().iter().any(|&s| {
                                let mut t = tau.vertices().to_vec();
                                t.push(s);
                                t.sort_unstable();
                                t.dedup();
                                g.is_independent(&t)
                            })
                    });
                    assert_eq!(extension_hypothesis(&g, sigma.vertices(), r).unwrap(), brute);
                }
            }
        }
    }

    #[test]
    fn numeric_bounds() {
        let p7 = path(7).unwrap();
        assert_eq!(distance3_bound(&p7, &[0, 3, 6]).unwrap(), 1);
        assert!(matches!(distance3_bound(&p7, &[0, 2]), Err(Error::TooClose(0, 2, 2))));
        let r = evaluate(&p7, &Bound::Distance3 { s: vec![0, 3, 6] }).unwrap();
        assert!(r.evidence.holds);
        assert_eq!(diameter_bound(&cycle(9).unwrap()).unwrap(), 0);
        assert!(diameter_bound(&Graph::discrete([0, 1])).is_err());
        assert!(maxdeg_bound(&Graph::discrete([0])).is_err());
        for n in 3..=12 {
            let c = cycle(n).unwrap();
            let report = evaluate(&c, &Bound::Maxdeg).unwrap();
            assert_eq!(report.claimed, (n as i64 / 2 - 1).div_euclid(2) - 1);
            assert!(report.evidence.holds, "C_{n}");
        }
        assert_eq!(engstrom_clawfree_bound(&cycle(9).unwrap()).unwrap(), 17 / 8 - 1);
    }

    #[test]
    fn report_round_trips() {
        let r = evaluate(&cycle(9).unwrap(), &Bound::Diameter).unwrap();
        let back: BoundReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert!(back.recheck());
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        for key in ["bound_name", "inputs", "claimed", "evidence"] {
            assert!(v.get(key).is_some());
        }
    }

    #[test]
    fn covers() {
        let c5 = cycle(5).unwrap();
        let cover = catloc_cover(&c5, 0, DEFAULT_CHROMATIC_CAP).unwrap();
        assert_eq!(cover.pieces.len(), 2);
        assert_eq!(cover.pieces[1].generator.vertices(), &[1, 4]);
        assert!(cover.check().passed());
        let k4 = complete(4).unwrap();
        assert_eq!(catloc_cover(&k4, 2, DEFAULT_CHROMATIC_CAP).unwrap().pieces.len(), 4);
        let pet = chromatic_cover(&petersen(), DEFAULT_CHROMATIC_CAP).unwrap();
        assert_eq!(pet.pieces.len(), 3);
        assert!(pet.check().passed());
        let k3 = chromatic_cover(&complete(3).unwrap(), DEFAULT_CHROMATIC_CAP).unwrap();
        assert_eq!(k3.pieces.len(), 3);
        assert!(k3.check().passed());
        assert_eq!(chromatic_cover(&cycle(6).unwrap(), DEFAULT_CHROMATIC_CAP).unwrap().pieces.len(), 2);
        assert!(chromatic_cover(&petersen(), 5).is_err());
    }

    #[test]
    fn missing_piece_breaks_the_union() {
        let mut cover = catloc_cover(&cycle(5).unwrap(), 0, DEFAULT_CHROMATIC_CAP).unwrap();
        cover.pieces.pop();
        assert!(!cover.check().union_equals);
    }
}
