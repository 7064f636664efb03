//! Elementary collapses and dominated-vertex deletion.
//!
//! A face `σ` is free when it is a proper face of exactly one simplex `τ`;
//! removing the pair `(σ, τ)` is an elementary collapse and keeps the
//! homotopy type. [`greedy_collapse`] always removes the lexicographically
//! smallest free face (comparing sorted vertex lists, so `[0] < [0, 1] < [1]`),
//! which makes traces reproducible by hand.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::complexes::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graphs::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// The greedy order reached a single vertex.
    Collapsible,
    /// The greedy order got stuck; this says nothing about other orders.
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseTrace {
    /// `(free face, coface)` in the order they were removed.
    pub steps: Vec<(Simplex, Simplex)>,
    pub residual: SimplicialComplex,
}

impl CollapseTrace {
    pub fn verdict(&self) -> Verdict {
        match self.residual.facets() {
            [f] if f.len() == 1 => Verdict::Collapsible,
            _ => Verdict::Unknown,
        }
    }
}

/// Face lattice with the number of immediate cofaces of every face.
struct Faces {
    up: HashMap<Vec<Vertex>, usize>,
}

impl Faces {
    fn new(k: &SimplicialComplex) -> Self {
        let mut up: HashMap<Vec<Vertex>, usize> = HashMap::new();
        for f in k.faces() {
            let v = f.into_vertices();
            for b in boundary(&v) {
                *up.entry(b).or_default() += 1;
            }
            up.entry(v).or_default();
        }
        Faces { up }
    }

    /// The unique immediate coface of `sigma`, when `sigma` is free.
    fn coface(&self, sigma: &[Vertex], ground: &[Vertex]) -> Option<Vec<Vertex>> {
        if self.up.get(sigma) != Some(&1) {
            return None;
        }
        ground.iter().find_map(|&x| {
            if sigma.binary_search(&x).is_ok() {
                return None;
            }
            let mut tau = sigma.to_vec();
            tau.insert(tau.partition_point(|&y| y < x), x);
            self.up.contains_key(&tau).then_some(tau)
        })
    }

    /// Removes `sigma` and `tau`; returns the faces whose coface count changed.
    fn remove(&mut self, sigma: &[Vertex], tau: &[Vertex]) -> Vec<Vec<Vertex>> {
        self.up.remove(tau);
        self.up.remove(sigma);
        let mut touched = Vec::new();
        for b in boundary(tau).into_iter().chain(boundary(sigma)) {
            if b.as_slice() == sigma {
                continue;
            }
            if let Some(c) = self.up.get_mut(&b) {
                *c -= 1;
                touched.push(b);
            }
        }
        touched
    }

    fn into_complex(self, ground: &[Vertex]) -> SimplicialComplex {
        let simplices = self
            .up
            .into_iter()
            .filter(|(_, c)| *c == 0)
            .map(|(v, _)| Simplex::new(v).expect("stored faces are valid"))
            .collect::<Vec<_>>();
        SimplicialComplex::from_simplices(simplices).set_ground(ground.iter().copied())
    }
}

/// Non-empty codimension-one faces.
fn boundary(v: &[Vertex]) -> Vec<Vec<Vertex>> {
    if v.len() < 2 {
        return Vec::new();
    }
    (0..v.len())
        .map(|i| {
            let mut b = v.to_vec();
            b.remove(i);
            b
        })
        .collect()
}

/// Collapses greedily, always taking the lex-smallest free face.
pub fn greedy_collapse(k: &SimplicialComplex) -> CollapseTrace {
    let ground = k.ground().to_vec();
    let mut faces = Faces::new(k);
    let mut free: BTreeSet<Vec<Vertex>> = faces
        .up
        .iter()
        .filter(|(_, c)| **c == 1)
        .map(|(v, _)| v.clone())
        .collect();
    let mut steps = Vec::new();
    while let Some(sigma) = free.pop_first() {
        let Some(tau) = faces.coface(&sigma, &ground) else {
            continue;
        };
        free.remove(&tau);
        for b in faces.remove(&sigma, &tau) {
            if faces.up.get(&b) == Some(&1) {
                free.insert(b);
            } else {
                free.remove(&b);
            }
        }
        steps.push((Simplex::from_sorted(sigma), Simplex::from_sorted(tau)));
    }
    CollapseTrace {
        steps,
        residual: faces.into_complex(&ground),
    }
}

/// Replays `steps` on `k`, checking that every removed face is free at its
/// turn, and returns the complex that is left.
pub fn replay(k: &SimplicialComplex, steps: &[(Simplex, Simplex)]) -> Result<SimplicialComplex> {
    let ground = k.ground().to_vec();
    let mut faces = Faces::new(k);
    for (i, (sigma, tau)) in steps.iter().enumerate() {
        match faces.coface(sigma.vertices(), &ground) {
            Some(t) if t.as_slice() == tau.vertices() => {
                faces.remove(sigma.vertices(), tau.vertices());
            }
            _ => {
                return Err(Error::param(format!(
                    "step {i}: {:?} is not a free face of {:?}",
                    sigma.vertices(),
                    tau.vertices()
                )))
            }
        }
    }
    Ok(faces.into_complex(&ground))
}

/// The lex-smallest pair `(v, w)`, `v ≠ w`, with `N(v) ⊆ N(w)`. Deleting `w`
/// does not change the homotopy type of `I_G`.
pub fn dominated_vertex(g: &Graph) -> Option<(Vertex, Vertex)> {
    for v in g.vertices() {
        let nv = g.neighbors(v);
        for w in g.vertices() {
            if v != w && nv.is_subset(g.neighbors(w)) {
                return Some((v, w));
            }
        }
    }
    None
}

/// Deletes dominating vertices (the `w` of [`dominated_vertex`]) until no pair is left.
pub fn strong_core(g: &Graph) -> Graph {
    strong_core_with_trace(g).0
}

/// [`strong_core`] together with the `(v, w)` pairs used, in order.
pub fn strong_core_with_trace(g: &Graph) -> (Graph, Vec<(Vertex, Vertex)>) {
    let mut g = g.clone();
    let mut trace = Vec::new();
    while let Some((v, w)) = dominated_vertex(&g) {
        g = g.without_vertices(&BTreeSet::from([w]));
        trace.push((v, w));
    }
    (g, trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::independence_complex;
    use crate::homology::reduced_homology;

    fn s(v: &[Vertex]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    #[test]
    fn full_simplex_collapses() {
        let t = greedy_collapse(&SimplicialComplex::full_simplex([0, 1, 2]));
        assert_eq!(t.verdict(), Verdict::Collapsible);
        assert_eq!(t.residual.facets(), &[s(&[2])]);
        assert_eq!(t.steps.len(), 3);
    }

    #[test]
    fn path_collapses_in_documented_order() {
        let path = SimplicialComplex::from_facets([vec![0, 1], vec![1, 2]]).unwrap();
        let t = greedy_collapse(&path);
        assert_eq!(t.steps, vec![(s(&[0]), s(&[0, 1])), (s(&[1]), s(&[1, 2]))]);
        assert_eq!(t.residual.facets(), &[s(&[2])]);
        assert_eq!(replay(&path, &t.steps).unwrap(), t.residual);
    }

    #[test]
    fn hollow_triangle_has_no_free_face() {
        let tri = SimplicialComplex::from_facets([vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let t = greedy_collapse(&tri);
        assert!(t.steps.is_empty());
        assert_eq!(t.residual, tri);
        assert_eq!(t.verdict(), Verdict::Unknown);
    }

    #[test]
    fn replay_rejects_non_free_steps() {
        let tri = SimplicialComplex::from_facets([vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert!(replay(&tri, &[(s(&[0]), s(&[0, 1]))]).is_err());
    }

    #[test]
    fn domination_on_a_path() {
        let p3 = Graph::from_edge_list(&[0, 1, 2], &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(dominated_vertex(&p3), Some((0, 2)));
        let core = strong_core(&p3);
        assert_eq!(core.edges(), vec![(0, 1)]);
        // I of P_3 is an edge plus a point, i.e. S^0, like I of a single edge
        assert_eq!(
            reduced_homology(&independence_complex(&core)),
            reduced_homology(&independence_complex(&p3))
        );
    }

    #[test]
    fn twins_are_dominated() {
        let g = Graph::from_edge_list(&[0, 1, 2], &[(0, 2), (1, 2)]).unwrap();
        assert_eq!(dominated_vertex(&g), Some((0, 1)));
    }
}
