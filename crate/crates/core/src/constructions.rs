//! Graph constructions whose independence complexes are suspensions, and the
//! Dowker pair of a relation.
//!
//! New vertices always get labels above the current maximum, allocated in a
//! fixed order, and every output records where each vertex came from.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::complexes::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graphs::{maximal_independent_sets, Graph, Labeled, Origin, Vertex};

fn identity_origins(g: &Graph) -> BTreeMap<Vertex, Origin> {
    g.vertices()
        .map(|v| (v, Origin::Original { vertex: v }))
        .collect()
}

/// Bipartite graph on `V(K)` and the facets of `K`, joining `v` to `σ` when
/// `v ∉ σ`. Its independence complex is homotopy equivalent to `Σ K`.
///
/// Vertices of `K` keep their labels; facets get fresh labels in facet order.
pub fn jonsson_graph(k: &SimplicialComplex) -> Result<Labeled> {
    let vertices = k.vertices();
    if vertices.is_empty() {
        return Err(Error::param("complex has no vertices"));
    }
    let mut graph = Graph::discrete(vertices.iter().copied());
    let mut origin: BTreeMap<Vertex, Origin> = vertices
        .iter()
        .map(|&v| (v, Origin::Original { vertex: v }))
        .collect();
    let mut next = vertices.last().map_or(0, |&m| m + 1);
    for facet in k.facets() {
        let s = next;
        next += 1;
        graph.add_vertex(s);
        for &v in &vertices {
            if !facet.contains(v) {
                graph.add_edge(v, s);
            }
        }
        origin.insert(
            s,
            Origin::Simplex {
                vertices: facet.vertices().to_vec(),
            },
        );
    }
    Ok(Labeled { graph, origin })
}

/// Subdivides every edge once: `a–b` becomes `a–v_ab–b`. The independence
/// complex of the result is homotopy equivalent to `Σ (I_G)^*`.
///
/// New vertices are numbered in the lexicographic order of the edges.
pub fn csorba_full_subdivision(g: &Graph) -> Result<Labeled> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(Error::param("graph has no edges"));
    }
    let mut graph = Graph::discrete(g.vertices());
    let mut origin = identity_origins(g);
    let mut next = g.next_label();
    for (a, b) in edges {
        graph.add_vertex(next);
        graph.add_edge(a, next);
        graph.add_edge(next, b);
        origin.insert(next, Origin::Subdivision { a, b, step: 1 });
        next += 1;
    }
    Ok(Labeled { graph, origin })
}

/// Replaces the edge `(a, b)` by a path `a–x–y–z–b` on three fresh vertices.
/// The independence complex gets suspended once.
pub fn subdivide_edge_four(g: &Graph, a: Vertex, b: Vertex) -> Result<Labeled> {
    g.check_edge(a, b)?;
    let (a, b) = (a.min(b), a.max(b));
    let mut graph = g.clone();
    graph.remove_edge(a, b);
    let mut origin = identity_origins(g);
    let x = g.next_label();
    let path = [a, x, x + 1, x + 2, b];
    for (step, &v) in path[1..4].iter().enumerate() {
        graph.add_vertex(v);
        origin.insert(
            v,
            Origin::Subdivision {
                a,
                b,
                step: step as u8 + 1,
            },
        );
    }
    for w in path.windows(2) {
        graph.add_edge(w[0], w[1]);
    }
    Ok(Labeled { graph, origin })
}

/// `S(G, H)` for a subgraph `H` of `G`: delete the edges of `H`, add an apex
/// `v` and a vertex `v_M` for every maximal independent set `M` of `H`, join
/// `v` to every `v_M` and each `w ∈ V(H) ∖ M` to `v_M`. Its independence
/// complex is homotopy equivalent to `Σ I_G`.
///
/// The apex gets the first fresh label, then the `v_M` in the canonical order
/// of maximal independent sets.
pub fn graph_suspension(g: &Graph, h: &Graph) -> Result<Labeled> {
    for v in h.vertices() {
        g.check_vertex(v)?;
    }
    for (u, w) in h.edges() {
        g.check_edge(u, w)?;
    }
    let mut graph = g.clone();
    for (u, w) in h.edges() {
        graph.remove_edge(u, w);
    }
    let mut origin = identity_origins(g);
    let apex = g.next_label();
    graph.add_vertex(apex);
    origin.insert(apex, Origin::Apex);
    let hv = h.vertex_list();
    for (i, m) in maximal_independent_sets(h).into_iter().enumerate() {
        let vm = apex + 1 + i as Vertex;
        graph.add_vertex(vm);
        graph.add_edge(apex, vm);
        for &w in &hv {
            if m.binary_search(&w).is_err() {
                graph.add_edge(w, vm);
            }
        }
        origin.insert(vm, Origin::IndependentSet { set: m });
    }
    Ok(Labeled { graph, origin })
}

/// [`graph_suspension`] over the two disjoint edges `e1`, `e2`; adds five vertices.
pub fn crossing_resolution(g: &Graph, e1: (Vertex, Vertex), e2: (Vertex, Vertex)) -> Result<Labeled> {
    g.check_edge(e1.0, e1.1)?;
    g.check_edge(e2.0, e2.1)?;
    let ends: BTreeSet<Vertex> = [e1.0, e1.1, e2.0, e2.1].into();
    if ends.len() != 4 {
        return Err(Error::param(format!("edges {e1:?} and {e2:?} share an endpoint")));
    }
    let h = Graph::from_edge_list(&ends.iter().copied().collect::<Vec<_>>(), &[e1, e2])?;
    graph_suspension(g, &h)
}

/// `Σ max(deg − 3, 0)`, which every step of [`degree3_reduction`] lowers by one.
fn excess_degree(g: &Graph) -> usize {
    g.vertices().map(|v| g.degree(v).saturating_sub(3)).sum()
}

/// Repeatedly suspends over a two-edge star at the smallest vertex of degree
/// above three (using its two smallest neighbours) until the maximum degree
/// is at most three. Returns the final graph and the number `r` of
/// suspensions, so that `H̃_i` of the result is `H̃_{i−r}(I_G)`.
pub fn degree3_reduction(g: &Graph) -> (Labeled, usize) {
    let mut current = Labeled {
        graph: g.clone(),
        origin: identity_origins(g),
    };
    let mut r = 0;
    let mut measure = excess_degree(g);
    loop {
        let Some(w) = current.graph.vertices().find(|&v| current.graph.degree(v) > 3) else {
            break;
        };
        let mut nb = current.graph.neighbors(w).iter().copied();
        let (w1, w2) = (nb.next().unwrap(), nb.next().unwrap());
        let h = Graph::from_edge_list(&[w, w1, w2], &[(w, w1), (w, w2)]).expect("star");
        let next = graph_suspension(&current.graph, &h).expect("star is a subgraph");
        let new_measure = excess_degree(&next.graph);
        assert!(new_measure < measure, "degree reduction must make progress");
        measure = new_measure;
        for (v, o) in next.origin {
            current.origin.entry(v).or_insert(o);
        }
        current.graph = next.graph;
        r += 1;
    }
    (current, r)
}

/// Whether `S` is pairwise at distance at least 3 and every choice of one
/// neighbour per vertex of `S` contains two adjacent vertices. When this holds
/// `I_G` is the star cluster of `S`, hence contractible.
pub fn contractibility_criterion(g: &Graph, s: &[Vertex]) -> Result<bool> {
    for &v in s {
        g.check_vertex(v)?;
    }
    let s: Vec<Vertex> = s.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    for (i, &u) in s.iter().enumerate() {
        for &v in &s[i + 1..] {
            if let Some(d) = g.distance(u, v) {
                if d < 3 {
                    return Ok(false);
                }
            }
        }
    }
    let choices: Vec<Vec<Vertex>> = s.iter().map(|&v| g.neighbors(v).iter().copied().collect()).collect();
    Ok(!independent_transversal(g, &choices, &mut Vec::new()))
}

fn independent_transversal(g: &Graph, choices: &[Vec<Vertex>], picked: &mut Vec<Vertex>) -> bool {
    let Some((first, rest)) = choices.split_first() else {
        return true;
    };
    for &w in first {
        if picked.iter().any(|&p| p == w || g.has_edge(p, w)) {
            continue;
        }
        picked.push(w);
        let found = independent_transversal(g, rest, picked);
        picked.pop();
        if found {
            return true;
        }
    }
    false
}

/// A relation `R ⊆ X × Y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RelationJson", into = "RelationJson")]
pub struct Relation {
    x: Vec<Vertex>,
    y: Vec<Vertex>,
    pairs: BTreeSet<(Vertex, Vertex)>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct RelationJson {
    #[serde(rename = "X")]
    x: Vec<Vertex>,
    #[serde(rename = "Y")]
    y: Vec<Vertex>,
    pairs: Vec<[Vertex; 2]>,
}

impl Relation {
    pub fn new(
        x: impl IntoIterator<Item = Vertex>,
        y: impl IntoIterator<Item = Vertex>,
        pairs: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self> {
        let x: BTreeSet<Vertex> = x.into_iter().collect();
        let y: BTreeSet<Vertex> = y.into_iter().collect();
        let pairs: BTreeSet<(Vertex, Vertex)> = pairs.into_iter().collect();
        for &(a, b) in &pairs {
            if !x.contains(&a) {
                return Err(Error::OutsideGround { vertex: a });
            }
            if !y.contains(&b) {
                return Err(Error::OutsideGround { vertex: b });
            }
        }
        Ok(Relation {
            x: x.into_iter().collect(),
            y: y.into_iter().collect(),
            pairs,
        })
    }

    /// Each pair of `{0..nx} × {0..ny}` independently with probability `p`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, nx: u32, ny: u32, p: f64) -> Self {
        let mut pairs = Vec::new();
        for a in 0..nx {
            for b in 0..ny {
                if rng.gen_bool(p) {
                    pairs.push((a, b));
                }
            }
        }
        Relation::new(0..nx, 0..ny, pairs).expect("pairs lie in X × Y")
    }

    pub fn x(&self) -> &[Vertex] {
        &self.x
    }

    pub fn y(&self) -> &[Vertex] {
        &self.y
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn transpose(&self) -> Relation {
        Relation {
            x: self.y.clone(),
            y: self.x.clone(),
            pairs: self.pairs.iter().map(|&(a, b)| (b, a)).collect(),
        }
    }

    /// Complex on `X` whose simplices are the sets related to a common `y`.
    fn fiber_complex(&self) -> SimplicialComplex {
        let mut fibers: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
        for &(a, b) in &self.pairs {
            fibers.entry(b).or_default().push(a);
        }
        let simplices = fibers
            .into_values()
            .map(|f| Simplex::new(f).expect("fiber is a non-empty set"))
            .collect();
        SimplicialComplex::from_simplices(simplices).set_ground(self.x.iter().copied())
    }
}

impl TryFrom<RelationJson> for Relation {
    type Error = Error;

    fn try_from(j: RelationJson) -> Result<Self> {
        Relation::new(j.x, j.y, j.pairs.into_iter().map(|[a, b]| (a, b)))
    }
}

impl From<Relation> for RelationJson {
    fn from(r: Relation) -> Self {
        RelationJson {
            x: r.x,
            y: r.y,
            pairs: r.pairs.into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }
}

/// `(K_X, K_Y)`: subsets of `X` related to a common element of `Y`, and dually.
/// Both have the same homology.
pub fn dowker_pair(r: &Relation) -> Result<(SimplicialComplex, SimplicialComplex)> {
    if r.x.is_empty() || r.y.is_empty() {
        return Err(Error::param("both sides of the relation must be non-empty"));
    }
    Ok((r.fiber_complex(), r.transpose().fiber_complex()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{alexander_dual, independence_complex};
    use crate::graphs::are_isomorphic;
    use crate::homology::{independence_homology, reduced_homology, HomologyProfile};

    fn cycle(n: Vertex) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(&(0..n).collect::<Vec<_>>(), &edges).unwrap()
    }

    fn complete(n: Vertex) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Graph::from_edge_list(&(0..n).collect::<Vec<_>>(), &edges).unwrap()
    }

    #[test]
    fn jonsson_examples() {
        let point = SimplicialComplex::full_simplex([0]);
        let j = jonsson_graph(&point).unwrap();
        assert_eq!(j.graph.vertex_count(), 2);
        assert_eq!(j.graph.edge_count(), 0);
        assert!(independence_homology(&j.graph).is_zero());
        let tri = SimplicialComplex::from_facets([vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let j = jonsson_graph(&tri).unwrap();
        assert!(j.graph.is_bipartite());
        assert_eq!(independence_homology(&j.graph), HomologyProfile::sphere(2));
        let s0 = SimplicialComplex::from_facets([vec![0], vec![1]]).unwrap();
        assert_eq!(
            independence_homology(&jonsson_graph(&s0).unwrap().graph),
            HomologyProfile::sphere(1)
        );
        assert!(jonsson_graph(&SimplicialComplex::empty()).is_err());
    }

    #[test]
    fn csorba_examples() {
        let k3 = complete(3);
        let sd = csorba_full_subdivision(&k3).unwrap();
        assert!(are_isomorphic(&sd.graph, &cycle(6)));
        let dual = alexander_dual(&independence_complex(&k3)).unwrap();
        assert_eq!(
            independence_homology(&sd.graph),
            reduced_homology(&dual).suspend()
        );
        let edge = Graph::from_edge_list(&[0, 1], &[(0, 1)]).unwrap();
        let sd = csorba_full_subdivision(&edge).unwrap();
        // I of P_3 is S^0; the dual of S^0 on two vertices is the empty complex
        assert_eq!(independence_homology(&sd.graph), HomologyProfile::sphere(0));
        assert!(alexander_dual(&independence_complex(&edge)).unwrap().is_empty());
        assert!(csorba_full_subdivision(&Graph::discrete(0..3)).is_err());
    }

    #[test]
    fn edge_subdivision() {
        let c6 = subdivide_edge_four(&cycle(3), 0, 1).unwrap();
        assert!(are_isomorphic(&c6.graph, &cycle(6)));
        let c7 = subdivide_edge_four(&cycle(4), 2, 3).unwrap();
        assert!(are_isomorphic(&c7.graph, &cycle(7)));
        assert_eq!(
            subdivide_edge_four(&cycle(4), 0, 2).unwrap_err(),
            Error::NotAnEdge(0, 2)
        );
    }

    #[test]
    fn suspension_examples() {
        let g = cycle(5);
        let h = Graph::discrete([0, 2]);
        let s = graph_suspension(&g, &h).unwrap();
        let (expected, _) = g.disjoint_union(&Graph::from_edge_list(&[0, 1], &[(0, 1)]).unwrap());
        assert!(are_isomorphic(&s.graph, &expected));

        let single = Graph::from_edge_list(&[1, 2], &[(1, 2)]).unwrap();
        let s = graph_suspension(&g, &single).unwrap();
        let four = subdivide_edge_four(&g, 1, 2).unwrap();
        assert!(are_isomorphic(&s.graph, &four.graph));

        let k3 = complete(3);
        let s = graph_suspension(&k3, &k3).unwrap();
        assert!(s.graph.is_bipartite());
        assert_eq!(independence_homology(&s.graph), HomologyProfile::wedge_of_spheres(1, 2));

        let not_sub = Graph::from_edge_list(&[0, 2], &[(0, 2)]).unwrap();
        assert!(graph_suspension(&g, &not_sub).is_err());
    }

    #[test]
    fn crossing() {
        let two = Graph::from_edge_list(&[0, 1, 2, 3], &[(0, 1), (2, 3)]).unwrap();
        let out = crossing_resolution(&two, (0, 1), (2, 3)).unwrap();
        assert_eq!(out.graph.vertex_count(), 9);
        assert_eq!(independence_homology(&out.graph), HomologyProfile::sphere(2));
        let c4 = cycle(4);
        let out = crossing_resolution(&c4, (0, 1), (2, 3)).unwrap();
        assert_eq!(independence_homology(&out.graph), independence_homology(&c4).suspend());
        assert!(crossing_resolution(&c4, (0, 1), (1, 2)).is_err());
    }

    #[test]
    fn degree_reduction() {
        let c5 = cycle(5);
        let (out, r) = degree3_reduction(&c5);
        assert_eq!((out.graph, r), (c5, 0));
        let (out, r) = degree3_reduction(&complete(5));
        assert!(out.graph.max_degree() <= 3);
        assert_eq!(r, 5);
        assert_eq!(
            independence_homology(&out.graph),
            HomologyProfile::wedge_of_spheres(r as i32, 4)
        );
        let star = Graph::from_edge_list(&[0, 1, 2, 3, 4], &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let (out, r) = degree3_reduction(&star);
        assert_eq!(r, 1);
        assert_eq!(
            independence_homology(&out.graph),
            independence_homology(&star).shift(1).unwrap()
        );
    }

    #[test]
    fn criterion() {
        assert!(!contractibility_criterion(&cycle(6), &[0, 3]).unwrap());
        assert!(!contractibility_criterion(&cycle(6), &[0]).unwrap());
        assert!(!contractibility_criterion(&cycle(6), &[0, 2]).unwrap());
        assert!(contractibility_criterion(&cycle(6), &[9]).is_err());
    }

    #[test]
    fn dowker() {
        let full = Relation::new(0..3, 0..2, (0..3).flat_map(|a| (0..2).map(move |b| (a, b)))).unwrap();
        let (kx, ky) = dowker_pair(&full).unwrap();
        assert_eq!(kx, SimplicialComplex::full_simplex(0..3));
        assert_eq!(ky, SimplicialComplex::full_simplex(0..2));
        let eq = Relation::new(1..4, 1..4, (1..4).map(|a| (a, a))).unwrap();
        let (kx, ky) = dowker_pair(&eq).unwrap();
        assert_eq!(kx.facets().len(), 3);
        assert_eq!(kx, ky);
        assert!(dowker_pair(&Relation::new([], 0..2, []).unwrap()).is_err());
        assert!(Relation::new(0..2, 0..2, [(0, 5)]).is_err());
        let text = serde_json::to_string(&eq).unwrap();
        assert_eq!(text, r#"{"X":[1,2,3],"Y":[1,2,3],"pairs":[[1,1],[2,2],[3,3]]}"#);
        assert_eq!(serde_json::from_str::<Relation>(&text).unwrap(), eq);
    }
}
