//! Complexes derived from graphs, and graphs derived from complexes.

use std::collections::{BTreeMap, BTreeSet};

use super::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graphs::{maximal_independent_sets, Graph, Labeled, Origin, Vertex};

/// `I_G`: facets are the maximal independent sets, ground set is `V(G)`.
pub fn independence_complex(g: &Graph) -> SimplicialComplex {
    let facets = maximal_independent_sets(g)
        .into_iter()
        .filter(|s| !s.is_empty())
        .map(Simplex::from_sorted)
        .collect();
    SimplicialComplex::from_simplices(facets).set_ground(g.vertices())
}

pub fn clique_complex(g: &Graph) -> SimplicialComplex {
    independence_complex(&g.complement())
}

/// `M(G) = I` of the line graph; vertex `i` of the result is the `i`-th edge of `G`.
pub fn matching_complex(g: &Graph) -> Result<(SimplicialComplex, Labeled)> {
    if g.edge_count() == 0 {
        return Err(Error::param("matching complex needs at least one edge"));
    }
    let line = g.line_graph();
    Ok((independence_complex(&line.graph), line))
}

/// All non-empty simplices of `k` in lexicographic order; a simplex's position
/// is its label in [`barycentric_subdivision`] and [`incomparability_graph`].
pub fn face_labels(k: &SimplicialComplex) -> Vec<Simplex> {
    k.faces()
}

/// `K'`: vertices are the simplices of `K` (labelled by [`face_labels`]),
/// facets are maximal chains of faces.
pub fn barycentric_subdivision(k: &SimplicialComplex) -> SimplicialComplex {
    let faces = face_labels(k);
    let index: BTreeMap<&[Vertex], Vertex> = faces
        .iter()
        .enumerate()
        .map(|(i, f)| (f.vertices(), i as Vertex))
        .collect();
    let mut chains = Vec::new();
    for facet in k.facets() {
        let mut stack: Vec<(Vec<Vertex>, Vec<Vertex>)> = vec![(facet.vertices().to_vec(), Vec::new())];
        // peel one vertex at a time off the top face; every order gives a maximal chain
        while let Some((top, mut chain)) = stack.pop() {
            chain.push(index[top.as_slice()]);
            if top.len() == 1 {
                chain.sort_unstable();
                chains.push(Simplex::from_sorted(chain));
                continue;
            }
            for i in 0..top.len() {
                let mut sub = top.clone();
                sub.remove(i);
                stack.push((sub, chain.clone()));
            }
        }
    }
    SimplicialComplex::from_simplices(chains).set_ground(0..faces.len() as Vertex)
}

/// Graph on the simplices of `K` joining inclusion-incomparable pairs. Its
/// independence complex is `K'` with the same labels.
pub fn incomparability_graph(k: &SimplicialComplex) -> Labeled {
    let faces = face_labels(k);
    let mut graph = Graph::discrete(0..faces.len() as Vertex);
    for i in 0..faces.len() {
        for j in i + 1..faces.len() {
            if !faces[i].is_face_of(&faces[j]) && !faces[j].is_face_of(&faces[i]) {
                graph.add_edge(i as Vertex, j as Vertex);
            }
        }
    }
    let origin = faces
        .into_iter()
        .enumerate()
        .map(|(i, f)| {
            (
                i as Vertex,
                Origin::Simplex {
                    vertices: f.into_vertices(),
                },
            )
        })
        .collect();
    Labeled { graph, origin }
}

/// `(st(v) ∩ SC(N(v)), SC(N(v)))` inside `I_G`, for a vertex `v` that has a
/// neighbour and lies in no triangle.
pub fn theorem35_pieces(g: &Graph, v: Vertex) -> Result<(SimplicialComplex, SimplicialComplex)> {
    g.check_vertex(v)?;
    if g.degree(v) == 0 {
        return Err(Error::hypothesis(format!("vertex {v} is isolated")));
    }
    if g.in_triangle(v) {
        return Err(Error::hypothesis(format!("vertex {v} lies in a triangle")));
    }
    let ig = independence_complex(g);
    let nbhd = Simplex::from_sorted(g.neighbors(v).iter().copied().collect());
    let sc = ig.star_cluster(&nbhd)?;
    let st = ig.star(&Simplex::vertex(v))?;
    Ok((st.intersection(&sc), sc))
}

/// An induced copy of the spider `W`: a centre with three pairwise
/// non-adjacent neighbours, each carrying its own pendant vertex.
/// Returned as `[centre, u1, u2, u3, w1, w2, w3]` with `w_i` attached to `u_i`.
pub fn find_induced_w(g: &Graph) -> Option<[Vertex; 7]> {
    for v in g.vertices() {
        let nb: Vec<Vertex> = g.neighbors(v).iter().copied().collect();
        for a in 0..nb.len() {
            for b in a + 1..nb.len() {
                for c in b + 1..nb.len() {
                    let us = [nb[a], nb[b], nb[c]];
                    if !g.is_independent(&us) {
                        continue;
                    }
                    let mut legs = [0; 3];
                    if extend_legs(g, v, &us, 0, &mut legs) {
                        return Some([v, us[0], us[1], us[2], legs[0], legs[1], legs[2]]);
                    }
                }
            }
        }
    }
    None
}

fn extend_legs(g: &Graph, v: Vertex, us: &[Vertex; 3], i: usize, legs: &mut [Vertex; 3]) -> bool {
    if i == 3 {
        return true;
    }
    let blocked: BTreeSet<Vertex> = legs[..i].iter().chain(us.iter()).chain([&v]).copied().collect();
    for &w in g.neighbors(us[i]) {
        if blocked.contains(&w) || g.has_edge(w, v) {
            continue;
        }
        if (0..3).any(|j| j != i && g.has_edge(w, us[j])) {
            continue;
        }
        if legs[..i].iter().any(|&x| g.has_edge(w, x)) {
            continue;
        }
        legs[i] = w;
        if extend_legs(g, v, us, i + 1, legs) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: Vertex) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(&(0..n).collect::<Vec<_>>(), &edges).unwrap()
    }

    fn s(v: &[Vertex]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    #[test]
    fn independence_complexes() {
        let k3 = cycle(3);
        assert_eq!(independence_complex(&k3).facets(), &[s(&[0]), s(&[1]), s(&[2])]);
        let e3 = Graph::discrete(0..3);
        assert_eq!(independence_complex(&e3).facets(), &[s(&[0, 1, 2])]);
        assert!(independence_complex(&Graph::new()).is_empty());
        let c5 = independence_complex(&cycle(5));
        assert_eq!(c5.facets().len(), 5);
        assert_eq!(c5.dim(), 1);
        assert!(c5.is_clique());
        assert_eq!(
            c5.star(&s(&[0])).unwrap().facets(),
            &[s(&[0, 2]), s(&[0, 3])]
        );
    }

    #[test]
    fn clique_complex_is_flag() {
        let k = clique_complex(&cycle(3));
        assert_eq!(k.facets(), &[s(&[0, 1, 2])]);
    }

    #[test]
    fn matching_complexes() {
        let (m, _) = matching_complex(&cycle(3)).unwrap();
        assert_eq!(m.facets().len(), 3);
        assert_eq!(m.dim(), 0);
        let k22 = Graph::from_edge_list(&[0, 1, 2, 3], &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let (m, _) = matching_complex(&k22).unwrap();
        assert_eq!(m.facets().len(), 2);
        assert_eq!(m.dim(), 1);
        assert!(matching_complex(&Graph::discrete(0..3)).is_err());
    }

    #[test]
    fn subdivisions() {
        let point = SimplicialComplex::full_simplex([7]);
        assert_eq!(barycentric_subdivision(&point).facets(), &[s(&[0])]);
        let edge = SimplicialComplex::full_simplex([0, 1]);
        let sd = barycentric_subdivision(&edge);
        // faces: [0]=0, [0,1]=1, [1]=2
        assert_eq!(sd.facets(), &[s(&[0, 1]), s(&[1, 2])]);
        let tri = SimplicialComplex::from_facets([vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let hex = barycentric_subdivision(&tri);
        assert_eq!(hex.f_vector(), vec![6, 6]);
        let full = SimplicialComplex::full_simplex([0, 1, 2]);
        assert_eq!(barycentric_subdivision(&full).f_vector(), vec![7, 12, 6]);
    }

    #[test]
    fn incomparability_matches_subdivision() {
        let edge = SimplicialComplex::full_simplex([0, 1]);
        let inc = incomparability_graph(&edge);
        assert_eq!(inc.graph.edges(), vec![(0, 2)]);
        let k = SimplicialComplex::from_facets([vec![0, 1, 2], vec![2, 3], vec![4]]).unwrap();
        let inc = incomparability_graph(&k);
        assert_eq!(independence_complex(&inc.graph), barycentric_subdivision(&k));
    }

    #[test]
    fn theorem35_on_cycle() {
        let (inter, sc) = theorem35_pieces(&cycle(6), 4).unwrap();
        // st(4) ∩ SC({3,5}) is three points
        assert_eq!(inter.dim(), 0);
        assert_eq!(inter.facets().len(), 3);
        assert!(sc.is_subcomplex_of(&independence_complex(&cycle(6))));
        assert!(matches!(theorem35_pieces(&cycle(3), 0), Err(Error::Hypothesis(_))));
        assert!(matches!(
            theorem35_pieces(&Graph::discrete([0, 1]), 0),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn spider() {
        let w = Graph::from_edge_list(
            &[0, 1, 2, 3, 4, 5, 6],
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)],
        )
        .unwrap();
        assert_eq!(find_induced_w(&w), Some([0, 1, 2, 3, 4, 5, 6]));
        let (inter, _) = theorem35_pieces(&w, 0).unwrap();
        assert_eq!(inter.facets(), &[s(&[4, 5]), s(&[4, 6]), s(&[5, 6])]);
        assert!(!inter.is_clique());
        assert_eq!(find_induced_w(&cycle(7)), None);
    }
}
