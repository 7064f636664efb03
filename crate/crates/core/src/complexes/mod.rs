//! Finite abstract simplicial complexes stored by their facets.
//!
//! A [`SimplicialComplex`] keeps an explicit ground set next to its facet list.
//! The ground set is normally the union of the facets; Alexander duality and
//! complexes built from graphs may carry a larger one. The complex with no
//! facets is the *empty complex*: it contains only the empty simplex, has
//! dimension −1 and plays the role of the (−1)-sphere.

mod derived;
mod dual;
mod poset;
mod simplex;

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::Vertex;

pub use derived::{
    barycentric_subdivision, clique_complex, face_labels, incomparability_graph,
    find_induced_w, independence_complex, matching_complex, theorem35_pieces,
};
pub use dual::alexander_dual;
pub use poset::{chain_hits_all_maximal_chains, order_complex, Poset};
pub use simplex::Simplex;
pub(crate) use simplex::{is_sorted_subset, sorted_intersection, sorted_union};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ground: Vec<Vertex>,
    facets: Vec<Simplex>,
}

/// Wire format: `{"ground":[...],"facets":[[...],...]}` with lex-sorted facets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub ground: Vec<Vertex>,
    pub facets: Vec<Vec<Vertex>>,
}

impl SimplicialComplex {
    /// The empty complex on an empty ground set.
    pub fn empty() -> Self {
        SimplicialComplex {
            ground: Vec::new(),
            facets: Vec::new(),
        }
    }

    /// The empty complex on the given ground set.
    pub fn empty_on(ground: impl IntoIterator<Item = Vertex>) -> Self {
        let ground: BTreeSet<Vertex> = ground.into_iter().collect();
        SimplicialComplex {
            ground: ground.into_iter().collect(),
            facets: Vec::new(),
        }
    }

    /// The full simplex on `vertices` (the empty complex when `vertices` is empty).
    pub fn full_simplex(vertices: impl IntoIterator<Item = Vertex>) -> Self {
        let v: BTreeSet<Vertex> = vertices.into_iter().collect();
        let v: Vec<Vertex> = v.into_iter().collect();
        if v.is_empty() {
            return Self::empty();
        }
        SimplicialComplex {
            ground: v.clone(),
            facets: vec![Simplex::from_sorted(v)],
        }
    }

    /// Complex generated by `generators`; non-maximal generators are dropped.
    pub fn from_facets<I, S>(generators: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<Vec<Vertex>>,
    {
        let simplices = generators
            .into_iter()
            .map(|s| Simplex::new(s.into()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_simplices(simplices))
    }

    /// Same as [`Self::from_facets`] with an explicit ground set.
    pub fn with_ground<I, S>(ground: impl IntoIterator<Item = Vertex>, generators: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<Vec<Vertex>>,
    {
        let mut k = Self::from_facets(generators)?;
        let ground: BTreeSet<Vertex> = ground.into_iter().collect();
        for v in &k.ground {
            if !ground.contains(v) {
                return Err(Error::OutsideGround { vertex: *v });
            }
        }
        k.ground = ground.into_iter().collect();
        Ok(k)
    }

    pub(crate) fn from_simplices(simplices: Vec<Simplex>) -> Self {
        let facets = maximal(simplices);
        let ground: BTreeSet<Vertex> = facets.iter().flat_map(|f| f.vertices()).copied().collect();
        SimplicialComplex {
            ground: ground.into_iter().collect(),
            facets,
        }
    }

    pub(crate) fn set_ground(mut self, ground: impl IntoIterator<Item = Vertex>) -> Self {
        let mut g: BTreeSet<Vertex> = ground.into_iter().collect();
        g.extend(self.vertices());
        self.ground = g.into_iter().collect();
        self
    }

    pub fn ground(&self) -> &[Vertex] {
        &self.ground
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    /// Vertices that span a 0-simplex (the union of the facets).
    pub fn vertices(&self) -> Vec<Vertex> {
        let v: BTreeSet<Vertex> = self.facets.iter().flat_map(|f| f.vertices()).copied().collect();
        v.into_iter().collect()
    }

    /// Dimension; −1 for the empty complex.
    pub fn dim(&self) -> i32 {
        self.facets.iter().map(|f| f.dim() as i32).max().unwrap_or(-1)
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.facets.iter().any(|f| s.is_face_of(f))
    }

    pub fn contains_set(&self, vertices: &[Vertex]) -> bool {
        vertices.is_empty() || self.facets.iter().any(|f| is_sorted_subset(vertices, f.vertices()))
    }

    pub(crate) fn check_simplex(&self, s: &Simplex) -> Result<()> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(Error::NotASimplex(s.vertices().to_vec()))
        }
    }

    /// Whether the complex is a single simplex spanning its whole ground set.
    pub fn is_full_simplex(&self) -> bool {
        match self.facets.as_slice() {
            [f] => f.vertices() == self.ground.as_slice(),
            [] => self.ground.is_empty(),
            _ => false,
        }
    }

    /// Every non-empty simplex, in lexicographic order.
    pub fn faces(&self) -> Vec<Simplex> {
        let mut seen: HashSet<Vec<Vertex>> = HashSet::new();
        let mut stack: Vec<Vec<Vertex>> = Vec::new();
        for f in &self.facets {
            if seen.insert(f.vertices().to_vec()) {
                stack.push(f.vertices().to_vec());
            }
            while let Some(face) = stack.pop() {
                if face.len() == 1 {
                    continue;
                }
                for i in 0..face.len() {
                    let mut sub = face.clone();
                    sub.remove(i);
                    if seen.insert(sub.clone()) {
                        stack.push(sub);
                    }
                }
            }
        }
        let mut out: Vec<Simplex> = seen.into_iter().map(Simplex::from_sorted).collect();
        out.sort();
        out
    }

    /// Number of simplices of each dimension `0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; (self.dim() + 1) as usize];
        for s in self.faces() {
            f[s.dim()] += 1;
        }
        f
    }

    pub fn num_simplices(&self) -> usize {
        self.faces().len()
    }

    /// `st_K(σ)`: simplices `τ` with `τ ∪ σ ∈ K`.
    pub fn star(&self, s: &Simplex) -> Result<SimplicialComplex> {
        self.check_simplex(s)?;
        let facets = self.facets.iter().filter(|f| s.is_face_of(f)).cloned().collect();
        Ok(Self::from_simplices(facets))
    }

    /// `SC_K(σ)`: the union of the vertex stars of the vertices of `σ`.
    pub fn star_cluster(&self, s: &Simplex) -> Result<SimplicialComplex> {
        self.check_simplex(s)?;
        let facets = self.facets.iter().filter(|f| f.meets(s)).cloned().collect();
        Ok(Self::from_simplices(facets))
    }

    pub fn union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let facets = self.facets.iter().chain(&other.facets).cloned().collect();
        Self::from_simplices(facets)
    }

    pub fn intersection(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let mut pieces = Vec::new();
        for f in &self.facets {
            for g in &other.facets {
                let common = sorted_intersection(f.vertices(), g.vertices());
                if !common.is_empty() {
                    pieces.push(Simplex::from_sorted(common));
                }
            }
        }
        Self::from_simplices(pieces)
    }

    /// Whether every simplex of `self` lies in `other`.
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.facets.iter().all(|f| other.contains(f))
    }

    /// Simplicial join. `other` is shifted above this complex's ground set when
    /// the ground sets meet; the applied shift is returned (0 when disjoint).
    pub fn join(&self, other: &SimplicialComplex) -> (SimplicialComplex, Vertex) {
        let overlap = other.ground.iter().any(|v| self.ground.binary_search(v).is_ok());
        let shift = if overlap {
            self.ground.last().map_or(0, |&m| m + 1)
        } else {
            0
        };
        let lhs: Vec<Vec<Vertex>> = facets_or_empty(self);
        let rhs: Vec<Vec<Vertex>> = facets_or_empty(other)
            .into_iter()
            .map(|f| f.into_iter().map(|v| v + shift).collect())
            .collect();
        let mut facets = Vec::new();
        for f in &lhs {
            for g in &rhs {
                let u = sorted_union(f, g);
                if !u.is_empty() {
                    facets.push(Simplex::from_sorted(u));
                }
            }
        }
        let ground = self
            .ground
            .iter()
            .copied()
            .chain(other.ground.iter().map(|v| v + shift));
        (Self::from_simplices(facets).set_ground(ground), shift)
    }

    fn fresh_label(&self) -> Vertex {
        self.ground.last().map_or(0, |&m| m + 1)
    }

    /// Cone with apex one above the ground set.
    pub fn cone(&self) -> SimplicialComplex {
        self.join(&Self::full_simplex([self.fresh_label()])).0
    }

    /// Join with two new points.
    pub fn simplicial_suspension(&self) -> SimplicialComplex {
        let a = self.fresh_label();
        let s0 = Self::from_facets([vec![a], vec![a + 1]]).expect("two points");
        self.join(&s0).0
    }

    /// 1-skeleton as a graph on the vertices of the complex.
    pub fn one_skeleton(&self) -> crate::graphs::Graph {
        let mut g = crate::graphs::Graph::discrete(self.vertices());
        for f in &self.facets {
            let v = f.vertices();
            for i in 0..v.len() {
                for &w in &v[i + 1..] {
                    g.add_edge(v[i], w);
                }
            }
        }
        g
    }

    /// Whether every set of pairwise adjacent vertices spans a simplex.
    pub fn is_clique(&self) -> bool {
        let flag = clique_complex(&self.one_skeleton());
        flag.facets == self.facets
    }

    /// Relabels every vertex through `f`, which must be injective on the ground set.
    pub fn relabel(&self, f: impl Fn(Vertex) -> Vertex) -> SimplicialComplex {
        let facets = self
            .facets
            .iter()
            .map(|s| {
                let mut v: Vec<Vertex> = s.vertices().iter().map(|&x| f(x)).collect();
                v.sort_unstable();
                Simplex::from_sorted(v)
            })
            .collect();
        Self::from_simplices(facets).set_ground(self.ground.iter().map(|&x| f(x)))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("complex serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

fn facets_or_empty(k: &SimplicialComplex) -> Vec<Vec<Vertex>> {
    if k.facets.is_empty() {
        vec![Vec::new()]
    } else {
        k.facets.iter().map(|f| f.vertices().to_vec()).collect()
    }
}

/// Inclusion-maximal members of `simplices`, deduplicated and lex-sorted.
pub(crate) fn maximal(mut simplices: Vec<Simplex>) -> Vec<Simplex> {
    simplices.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    simplices.dedup();
    let mut kept: Vec<Simplex> = Vec::with_capacity(simplices.len());
    for s in simplices {
        if !kept.iter().any(|k| k.len() > s.len() && s.is_face_of(k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

impl From<&SimplicialComplex> for ComplexJson {
    fn from(k: &SimplicialComplex) -> Self {
        ComplexJson {
            ground: k.ground.clone(),
            facets: k.facets.iter().map(|f| f.vertices().to_vec()).collect(),
        }
    }
}

impl TryFrom<ComplexJson> for SimplicialComplex {
    type Error = Error;

    fn try_from(json: ComplexJson) -> Result<Self> {
        SimplicialComplex::with_ground(json.ground, json.facets)
    }
}

impl Serialize for SimplicialComplex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ComplexJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let json = ComplexJson::deserialize(d)?;
        SimplicialComplex::try_from(json).map_err(serde::de::Error::custom)
    }
}
