use std::collections::{BTreeMap, BTreeSet};

use super::{clique_complex, Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graphs::{Graph, Vertex};

/// A finite poset given by its cover pairs `(a, b)`, meaning `a < b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    elements: Vec<Vertex>,
    covers: Vec<(Vertex, Vertex)>,
    above: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

impl Poset {
    pub fn new(elements: impl IntoIterator<Item = Vertex>, covers: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut above: BTreeMap<Vertex, BTreeSet<Vertex>> = BTreeMap::new();
        for v in elements {
            if above.insert(v, BTreeSet::new()).is_some() {
                return Err(Error::DuplicateVertex(v));
            }
        }
        for &(a, b) in covers {
            if !above.contains_key(&a) || !above.contains_key(&b) {
                return Err(Error::UndeclaredEndpoint(a, b));
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
        }
        let elements: Vec<Vertex> = above.keys().copied().collect();
        // transitive closure by DFS from each element
        for &start in &elements {
            let mut stack = vec![start];
            let mut seen = BTreeSet::new();
            while let Some(x) = stack.pop() {
                for &(a, b) in covers {
                    if a == x && seen.insert(b) {
                        stack.push(b);
                    }
                }
            }
            if seen.contains(&start) {
                return Err(Error::param(format!("cover relation has a cycle through {start}")));
            }
            above.insert(start, seen);
        }
        let mut covers = covers.to_vec();
        covers.sort_unstable();
        covers.dedup();
        Ok(Poset {
            elements,
            covers,
            above,
        })
    }

    /// The chain `0 < 1 < ... < n-1`.
    pub fn total(n: Vertex) -> Self {
        let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::new(0..n, &covers).expect("a chain is a poset")
    }

    /// Inclusion order on the non-empty faces of `k`, labelled by lex position.
    pub fn face_poset(k: &SimplicialComplex) -> Self {
        let faces = k.faces();
        let mut covers = Vec::new();
        for (i, f) in faces.iter().enumerate() {
            for (j, g) in faces.iter().enumerate() {
                if f.len() + 1 == g.len() && f.is_face_of(g) {
                    covers.push((i as Vertex, j as Vertex));
                }
            }
        }
        Poset::new(0..faces.len() as Vertex, &covers).expect("face inclusion is acyclic")
    }

    pub fn elements(&self) -> &[Vertex] {
        &self.elements
    }

    pub fn covers(&self) -> &[(Vertex, Vertex)] {
        &self.covers
    }

    /// Strict order test `a < b`.
    pub fn less(&self, a: Vertex, b: Vertex) -> bool {
        self.above.get(&a).is_some_and(|s| s.contains(&b))
    }

    pub fn comparable(&self, a: Vertex, b: Vertex) -> bool {
        a == b || self.less(a, b) || self.less(b, a)
    }

    pub fn comparability_graph(&self) -> Graph {
        let mut g = Graph::discrete(self.elements.iter().copied());
        for (&a, ups) in &self.above {
            for &b in ups {
                g.add_edge(a, b);
            }
        }
        g
    }

    pub fn is_chain(&self, set: &[Vertex]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &a)| set[i + 1..].iter().all(|&b| self.comparable(a, b)))
    }
}

/// `Δ(P)`: simplices are the non-empty chains.
pub fn order_complex(p: &Poset) -> SimplicialComplex {
    clique_complex(&p.comparability_graph())
}

/// The smallest (then lex-first) chain meeting every maximal chain, if any.
pub fn chain_hits_all_maximal_chains(p: &Poset) -> Option<Simplex> {
    let delta = order_complex(p);
    let mut chains = delta.faces();
    chains.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    chains
        .into_iter()
        .find(|c| delta.facets().iter().all(|m| m.meets(c)))
}
