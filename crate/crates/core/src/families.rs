//! Named graphs and complexes.

use std::collections::BTreeMap;

use crate::complexes::{independence_complex, matching_complex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graphs::{Graph, Vertex};

fn graph(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Graph {
    let mut g = Graph::discrete(0..n as Vertex);
    for (u, v) in edges {
        g.add_edge(u, v);
    }
    g
}

/// `C_n` on `0..n`, `n ≥ 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::param(format!("cycle needs n >= 3, got {n}")));
    }
    let n32 = n as Vertex;
    Ok(graph(n, (0..n32).map(|i| (i, (i + 1) % n32))))
}

/// The path on `n ≥ 1` vertices `0–1–…–(n−1)`.
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::param("path needs n >= 1"));
    }
    Ok(graph(n, (1..n as Vertex).map(|i| (i - 1, i))))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::param("complete graph needs n >= 1"));
    }
    let n32 = n as Vertex;
    Ok(graph(n, (0..n32).flat_map(|i| (i + 1..n32).map(move |j| (i, j)))))
}

/// `K_{n,m}` with parts `0..n` and `n..n+m`.
pub fn complete_bipartite(n: usize, m: usize) -> Result<Graph> {
    if n < 1 || m < 1 {
        return Err(Error::param("complete bipartite graph needs n, m >= 1"));
    }
    let (a, b) = (n as Vertex, m as Vertex);
    Ok(graph(n + m, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)))))
}

/// The `n`-subsets of `{1, …, N}` in colex order.
pub fn subsets_colex(universe: u32, n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(start: u32, universe: u32, n: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for x in start..=universe {
            current.push(x);
            rec(x + 1, universe, n, current, out);
            current.pop();
        }
    }
    rec(1, universe, n, &mut current, &mut out);
    out.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    out
}

fn disjoint(a: &[u32], b: &[u32]) -> bool {
    a.iter().all(|x| !b.contains(x))
}

fn kneser_on(subsets: &[Vec<u32>]) -> Graph {
    let mut edges = Vec::new();
    for i in 0..subsets.len() {
        for j in i + 1..subsets.len() {
            if disjoint(&subsets[i], &subsets[j]) {
                edges.push((i as Vertex, j as Vertex));
            }
        }
    }
    graph(subsets.len(), edges)
}

/// The `n`-subsets of `{1, …, 2n+k}` that become the vertices of [`kneser`], in label order.
pub fn kneser_vertices(n: usize, k: usize) -> Vec<Vec<u32>> {
    subsets_colex((2 * n + k) as u32, n)
}

/// `KG_{n,k}`: `n`-subsets of `{1, …, 2n+k}`, adjacent when disjoint. Vertex
/// `i` is the `i`-th subset in colex order.
pub fn kneser(n: usize, k: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::param("Kneser graph needs n >= 1"));
    }
    Ok(kneser_on(&kneser_vertices(n, k)))
}

/// Stable `n`-subsets of `{1, …, 2n+k}`: no two cyclically consecutive elements.
pub fn stable_kneser_vertices(n: usize, k: usize) -> Vec<Vec<u32>> {
    let top = (2 * n + k) as u32;
    kneser_vertices(n, k)
        .into_iter()
        .filter(|s| {
            s.windows(2).all(|w| w[1] != w[0] + 1) && !(s.len() > 1 && s[0] == 1 && s[s.len() - 1] == top)
        })
        .collect()
}

/// `SG_{n,k}`: the subgraph of `KG_{n,k}` induced by the stable subsets.
pub fn stable_kneser(n: usize, k: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::param("stable Kneser graph needs n >= 1"));
    }
    Ok(kneser_on(&stable_kneser_vertices(n, k)))
}

/// Lattice points of a grid family, sorted; vertex `i` is the `i`-th point.
pub type Points = Vec<(i64, i64)>;

fn lattice(pred: impl Fn(i64, i64) -> bool, bound: i64) -> Points {
    let mut pts = Vec::new();
    for x in -bound..=bound {
        for y in -bound..=bound {
            if pred(x, y) {
                pts.push((x, y));
            }
        }
    }
    pts
}

fn unit_distance_graph(points: &[(i64, i64)]) -> Graph {
    let index: BTreeMap<(i64, i64), Vertex> =
        points.iter().enumerate().map(|(i, &p)| (p, i as Vertex)).collect();
    let mut edges = Vec::new();
    for (&(x, y), &i) in &index {
        for q in [(x + 1, y), (x, y + 1)] {
            if let Some(&j) = index.get(&q) {
                edges.push((i, j));
            }
        }
    }
    graph(points.len(), edges)
}

fn in_g(n: i64, m: i64, x: i64, y: i64) -> bool {
    -x <= y && y <= x && x - m <= y && y <= -x + n
}

fn in_h(n: i64, m: i64, x: i64, y: i64) -> bool {
    -x - 1 <= y && y <= x && x - m <= y && y <= -x + n - 1
}

pub fn grid_g_points(n: usize, m: usize, k: usize) -> Points {
    let (n, m, k) = (n as i64, m as i64, k as i64);
    lattice(|x, y| in_g(n, m, x, y) && (y >= -x + k || y <= x - 3), n + m + 2)
}

pub fn grid_h_points(n: usize, m: usize, k: usize) -> Points {
    let (n, m, k) = (n as i64, m as i64, k as i64);
    lattice(|x, y| in_h(n, m, x, y) && (y >= -x + k - 1 || y <= x - 3), n + m + 2)
}

/// `G(n, m)`: points with `−x ≤ y ≤ x` and `x − m ≤ y ≤ −x + n`, adjacent at distance 1.
pub fn grid_g(n: usize, m: usize) -> Graph {
    tilde_g(n, m, 0)
}

/// `H(n, m)`: points with `−x − 1 ≤ y ≤ x` and `x − m ≤ y ≤ −x + n − 1`.
pub fn grid_h(n: usize, m: usize) -> Graph {
    tilde_h(n, m, 0)
}

/// The subgraph of `G(n, m)` induced by the points with `y ≥ −x + k` or `y ≤ x − 3`.
pub fn tilde_g(n: usize, m: usize, k: usize) -> Graph {
    unit_distance_graph(&grid_g_points(n, m, k))
}

/// The subgraph of `H(n, m)` induced by the points with `y ≥ −x + k − 1` or `y ≤ x − 3`.
pub fn tilde_h(n: usize, m: usize, k: usize) -> Graph {
    unit_distance_graph(&grid_h_points(n, m, k))
}

/// `M_n = M(K_n)`; vertex `i` is the `i`-th edge of `K_n` in lex order.
pub fn matching_complete(n: usize) -> Result<SimplicialComplex> {
    if n < 2 {
        return Err(Error::param("matching complex of K_n needs n >= 2"));
    }
    Ok(matching_complex(&complete(n)?)?.0)
}

/// `M_{n,m} = M(K_{n,m})`, the non-attacking rook placements on an `n × m` board.
pub fn chessboard(n: usize, m: usize) -> Result<SimplicialComplex> {
    Ok(matching_complex(&complete_bipartite(n, m)?)?.0)
}

/// The cells `(i, j)`, `1 ≤ i < j ≤ n`, that label the vertices of [`stirling`].
pub fn stirling_cells(n: usize) -> Vec<(u32, u32)> {
    let n = n as u32;
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect()
}

/// `Stir_n`: cells above the diagonal, simplices are sets of cells with
/// pairwise distinct rows and columns.
pub fn stirling(n: usize) -> Result<SimplicialComplex> {
    if n < 2 {
        return Err(Error::param("Stirling complex needs n >= 2"));
    }
    let cells = stirling_cells(n);
    let mut edges = Vec::new();
    for a in 0..cells.len() {
        for b in a + 1..cells.len() {
            if cells[a].0 == cells[b].0 || cells[a].1 == cells[b].1 {
                edges.push((a as Vertex, b as Vertex));
            }
        }
    }
    Ok(independence_complex(&graph(cells.len(), edges)))
}

fn squares(g: &mut Graph, first: Vertex, count: usize) {
    for c in 0..count as Vertex {
        let b = first + 4 * c;
        for i in 0..4 {
            g.add_vertex(b + i);
        }
        for i in 0..4 {
            g.add_edge(b + i, b + (i + 1) % 4);
        }
    }
}

/// `A_k`: `k` disjoint 4-cycles, the `c`-th on `4c..4c+4`.
pub fn family_a(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::param("family A needs k >= 1"));
    }
    let mut g = Graph::new();
    squares(&mut g, 0, k);
    Ok(g)
}

/// `B_k`: the path `0–1–2` plus `k − 1` disjoint 4-cycles from label 3 on.
pub fn family_b(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::param("family B needs k >= 1"));
    }
    let mut g = path(3)?;
    squares(&mut g, 3, k - 1);
    Ok(g)
}

/// Label of `(i, layer)` in [`pentagon_prism`]; layers `a, b, c` are `0, 1, 2`.
pub fn prism_label(i: usize, layer: usize) -> Vertex {
    (3 * i + layer) as Vertex
}

/// Vertex set `Z_n × {a, b, c}` with edges `(i,a)(i,b)`, `(i,b)(i,c)`,
/// `(i,a)(i+1,a)` and `(i,c)(i+1,c)`, for odd `n ≥ 3`.
pub fn pentagon_prism(n: usize) -> Result<Graph> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::param(format!("pentagon prism needs odd n >= 3, got {n}")));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        let j = (i + 1) % n;
        edges.push((prism_label(i, 0), prism_label(i, 1)));
        edges.push((prism_label(i, 1), prism_label(i, 2)));
        edges.push((prism_label(i, 0), prism_label(j, 0)));
        edges.push((prism_label(i, 2), prism_label(j, 2)));
    }
    Ok(graph(3 * n, edges))
}

/// The spider `W`: centre 0 joined to 1, 2, 3, with legs 1–4, 2–5, 3–6.
/// At the centre, `st(0) ∩ SC(N(0))` is the boundary of a triangle.
pub fn graph_w() -> Graph {
    graph(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])
}

/// The Petersen graph, as `KG_{2,1}`.
pub fn petersen() -> Graph {
    kneser(2, 1).expect("valid parameters")
}
