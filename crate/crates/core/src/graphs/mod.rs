//! Finite simple graphs with integer vertex labels.
//!
//! A [`Graph`] is immutable once built: every transform returns a new graph.
//! Vertex sets and neighbor sets are kept sorted so that every derived list
//! (edges, independent sets, colorings) comes out in a canonical order.

pub(crate) mod bitset;
mod coloring;
mod corpus;
mod io;
mod iso;
mod mis;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use coloring::{chromatic_coloring, chromatic_number, DEFAULT_CHROMATIC_CAP};
pub use corpus::{
    all_labeled_graphs, random_claw_free_graph, random_forest, random_graph, random_tree,
};
pub use io::{parse_edge_list_text, GraphJson};
pub use iso::{are_isomorphic, find_isomorphism};
pub(crate) use mis::Dense;
pub use mis::maximal_independent_sets;

pub type Vertex = u32;

/// A finite simple undirected graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

/// Where a vertex of a constructed graph came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Origin {
    /// Carried over from the input graph under the same label.
    Original { vertex: Vertex },
    /// The cone point `v` added by a graph suspension.
    Apex,
    /// The vertex `v_M` of a maximal independent set `M` of the suspended subgraph.
    IndependentSet { set: Vec<Vertex> },
    /// The `step`-th interior vertex of a subdivided edge `(a, b)`, counted from `a`.
    Subdivision { a: Vertex, b: Vertex, step: u8 },
    /// A vertex standing for an edge of another graph.
    Edge { a: Vertex, b: Vertex },
    /// A vertex standing for a simplex of a complex.
    Simplex { vertices: Vec<Vertex> },
}

/// A constructed graph together with the origin of each of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeled {
    pub graph: Graph,
    pub origin: BTreeMap<Vertex, Origin>,
}

impl Labeled {
    /// Vertices whose origin matches `pred`, in label order.
    pub fn vertices_where(&self, pred: impl Fn(&Origin) -> bool) -> Vec<Vertex> {
        self.origin
            .iter()
            .filter(|(_, o)| pred(o))
            .map(|(&v, _)| v)
            .collect()
    }
}

/// All-pairs hop distances. `None` marks unreachable pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    pub labels: Vec<Vertex>,
    pub dist: Vec<Vec<Option<usize>>>,
}

impl DistanceMatrix {
    pub fn get(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let i = self.labels.binary_search(&u).ok()?;
        let j = self.labels.binary_search(&v).ok()?;
        self.dist[i][j]
    }
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Edgeless graph on the given labels (duplicates collapse).
    pub fn discrete(vertices: impl IntoIterator<Item = Vertex>) -> Self {
        Graph {
            adj: vertices.into_iter().map(|v| (v, BTreeSet::new())).collect(),
        }
    }

    pub fn from_edge_list(vertices: &[Vertex], edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut adj: BTreeMap<Vertex, BTreeSet<Vertex>> = BTreeMap::new();
        for &v in vertices {
            if adj.insert(v, BTreeSet::new()).is_some() {
                return Err(Error::DuplicateVertex(v));
            }
        }
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !adj.contains_key(&u) || !adj.contains_key(&v) {
                return Err(Error::UndeclaredEndpoint(u, v));
            }
            adj.get_mut(&u).unwrap().insert(v);
            adj.get_mut(&v).unwrap().insert(u);
        }
        Ok(Graph { adj })
    }

    pub(crate) fn add_vertex(&mut self, v: Vertex) {
        self.adj.entry(v).or_default();
    }

    pub(crate) fn add_edge(&mut self, u: Vertex, v: Vertex) {
        debug_assert!(u != v);
        self.adj.entry(u).or_default().insert(v);
        self.adj.entry(v).or_default().insert(u);
    }

    pub(crate) fn remove_edge(&mut self, u: Vertex, v: Vertex) {
        if let Some(n) = self.adj.get_mut(&u) {
            n.remove(&v);
        }
        if let Some(n) = self.adj.get_mut(&v) {
            n.remove(&u);
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_list(&self) -> Vec<Vertex> {
        self.vertices().collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.adj
            .iter()
            .flat_map(|(&u, n)| n.range(u + 1..).map(move |&v| (u, v)))
            .collect()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|n| n.contains(&v))
    }

    /// Neighbor set of `v`; empty for unknown vertices.
    pub fn neighbors(&self, v: Vertex) -> &BTreeSet<Vertex> {
        static EMPTY: BTreeSet<Vertex> = BTreeSet::new();
        self.adj.get(&v).unwrap_or(&EMPTY)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(BTreeSet::len).max().unwrap_or(0)
    }

    /// Smallest label strictly above every current label.
    pub fn next_label(&self) -> Vertex {
        self.adj.keys().next_back().map_or(0, |&v| v + 1)
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub fn check_edge(&self, u: Vertex, v: Vertex) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if self.has_edge(u, v) {
            Ok(())
        } else {
            Err(Error::NotAnEdge(u, v))
        }
    }

    pub fn complement(&self) -> Graph {
        let vertices = self.vertex_list();
        let mut g = Graph::discrete(vertices.iter().copied());
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &vertices[i + 1..] {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// The line graph. Vertex `i` stands for the `i`-th edge of [`Graph::edges`].
    pub fn line_graph(&self) -> Labeled {
        let edges = self.edges();
        let mut g = Graph::discrete(0..edges.len() as Vertex);
        let mut origin = BTreeMap::new();
        for (i, &(a, b)) in edges.iter().enumerate() {
            origin.insert(i as Vertex, Origin::Edge { a, b });
            for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
                if a == c || a == d || b == c || b == d {
                    g.add_edge(i as Vertex, j as Vertex);
                }
            }
        }
        Labeled { graph: g, origin }
    }

    pub fn induced_subgraph(&self, subset: &BTreeSet<Vertex>) -> Result<Graph> {
        for &v in subset {
            self.check_vertex(v)?;
        }
        Ok(self.induced_unchecked(subset))
    }

    pub(crate) fn induced_unchecked(&self, subset: &BTreeSet<Vertex>) -> Graph {
        Graph {
            adj: subset
                .iter()
                .map(|&v| (v, self.neighbors(v).intersection(subset).copied().collect()))
                .collect(),
        }
    }

    /// The graph with the given vertices (and their edges) deleted.
    pub fn without_vertices(&self, removed: &BTreeSet<Vertex>) -> Graph {
        let keep = self.vertices().filter(|v| !removed.contains(v)).collect();
        self.induced_unchecked(&keep)
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_neighborhood(&self, v: Vertex) -> BTreeSet<Vertex> {
        let mut n = self.neighbors(v).clone();
        n.insert(v);
        n
    }

    /// Disjoint union; `other` is shifted above this graph's labels.
    /// Returns the union and the shift applied to `other`.
    pub fn disjoint_union(&self, other: &Graph) -> (Graph, Vertex) {
        let shift = self.next_label();
        let mut g = self.clone();
        for v in other.vertices() {
            g.add_vertex(v + shift);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + shift, v + shift);
        }
        (g, shift)
    }

    /// Relabels vertices `0..n` in increasing label order.
    pub fn normalized(&self) -> Graph {
        let index: BTreeMap<Vertex, Vertex> = self
            .vertices()
            .enumerate()
            .map(|(i, v)| (v, i as Vertex))
            .collect();
        let mut g = Graph::discrete(index.values().copied());
        for (u, v) in self.edges() {
            g.add_edge(index[&u], index[&v]);
        }
        g
    }

    pub fn is_independent(&self, set: &[Vertex]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }

    /// Some induced claw `K_{1,3}`: a center with three pairwise non-adjacent neighbors.
    pub fn find_claw(&self) -> Option<(Vertex, [Vertex; 3])> {
        for (&c, nbrs) in &self.adj {
            let n: Vec<Vertex> = nbrs.iter().copied().collect();
            for i in 0..n.len() {
                for j in i + 1..n.len() {
                    if self.has_edge(n[i], n[j]) {
                        continue;
                    }
                    for k in j + 1..n.len() {
                        if !self.has_edge(n[i], n[k]) && !self.has_edge(n[j], n[k]) {
                            return Some((c, [n[i], n[j], n[k]]));
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_claw_free(&self) -> bool {
        self.find_claw().is_none()
    }

    /// Whether `v` lies on some triangle.
    pub fn in_triangle(&self, v: Vertex) -> bool {
        let n = self.neighbors(v);
        n.iter()
            .any(|&a| n.range(a + 1..).any(|&b| self.has_edge(a, b)))
    }

    pub fn is_triangle_free(&self) -> bool {
        self.vertices().all(|v| !self.in_triangle(v))
    }

    /// Smallest vertex whose neighborhood is independent.
    pub fn vertex_in_no_triangle(&self) -> Option<Vertex> {
        self.vertices().find(|&v| !self.in_triangle(v))
    }

    fn bfs(&self, source: Vertex) -> BTreeMap<Vertex, usize> {
        let mut dist = BTreeMap::from([(source, 0)]);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[&u];
            for &w in self.neighbors(u) {
                if !dist.contains_key(&w) {
                    dist.insert(w, d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.bfs(u).get(&v).copied()
    }

    pub fn distance_matrix(&self) -> DistanceMatrix {
        let labels = self.vertex_list();
        let dist = labels
            .iter()
            .map(|&u| {
                let d = self.bfs(u);
                labels.iter().map(|v| d.get(v).copied()).collect()
            })
            .collect();
        DistanceMatrix { labels, dist }
    }

    pub fn is_connected(&self) -> bool {
        match self.vertices().next() {
            None => true,
            Some(v) => self.bfs(v).len() == self.vertex_count(),
        }
    }

    pub fn diameter(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self
            .vertices()
            .map(|v| self.bfs(v).into_values().max().unwrap_or(0))
            .max()
            .unwrap_or(0))
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<BTreeSet<Vertex>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for v in self.vertices() {
            if seen.contains(&v) {
                continue;
            }
            let comp: BTreeSet<Vertex> = self.bfs(v).into_keys().collect();
            seen.extend(comp.iter().copied());
            out.push(comp);
        }
        out
    }

    /// A proper 2-coloring as `(side_a, side_b)`, if one exists.
    pub fn bipartition(&self) -> Option<(BTreeSet<Vertex>, BTreeSet<Vertex>)> {
        let mut side: BTreeMap<Vertex, bool> = BTreeMap::new();
        for start in self.vertices() {
            if side.contains_key(&start) {
                continue;
            }
            side.insert(start, false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let s = side[&u];
                for &w in self.neighbors(u) {
                    match side.get(&w) {
                        Some(&t) if t == s => return None,
                        Some(_) => {}
                        None => {
                            side.insert(w, !s);
                            queue.push_back(w);
                        }
                    }
                }
            }
        }
        let a = side.iter().filter(|(_, &s)| !s).map(|(&v, _)| v).collect();
        let b = side.iter().filter(|(_, &s)| s).map(|(&v, _)| v).collect();
        Some((a, b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }
}
