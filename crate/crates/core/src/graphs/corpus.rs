//! Exhaustive and random graph corpora.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{Graph, Vertex};

/// All labeled graphs on the vertex set `0..n` (2^(n choose 2) of them), in
/// order of the edge bitmask over the lexicographic pair list.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(Vertex, Vertex)> = (0..n as Vertex)
        .flat_map(|u| (u + 1..n as Vertex).map(move |v| (u, v)))
        .collect();
    let total: u64 = 1 << pairs.len();
    (0..total).map(move |mask| {
        let mut g = Graph::discrete(0..n as Vertex);
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        g
    })
}

/// Erdős–Rényi graph `G(n, p)` on `0..n`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::discrete(0..n as Vertex);
    for u in 0..n as Vertex {
        for v in u + 1..n as Vertex {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Uniform labeled tree on `0..n` via a random Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Graph {
    let mut g = Graph::discrete(0..n as Vertex);
    if n < 2 {
        return g;
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    for &s in &seq {
        let leaf = (0..n).find(|&i| degree[i] == 1).unwrap();
        g.add_edge(leaf as Vertex, s as Vertex);
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&i| degree[i] == 1).collect();
    g.add_edge(rest[0] as Vertex, rest[1] as Vertex);
    g
}

/// Random forest on `1..=max_vertices` vertices: the vertex set is split into
/// random blocks and each block carries a uniform random tree. Labels are shuffled.
pub fn random_forest<R: Rng + ?Sized>(rng: &mut R, max_vertices: usize) -> Graph {
    let n = rng.gen_range(1..=max_vertices.max(1));
    let mut labels: Vec<Vertex> = (0..n as Vertex).collect();
    labels.shuffle(rng);
    let mut g = Graph::discrete(0..n as Vertex);
    let mut start = 0;
    while start < n {
        let size = rng.gen_range(1..=n - start);
        let tree = random_tree(rng, size);
        for (u, v) in tree.edges() {
            g.add_edge(labels[start + u as usize], labels[start + v as usize]);
        }
        start += size;
    }
    g
}

/// Random claw-free graph: starts from `G(n, p)` and, while a claw exists,
/// joins a random pair of its leaves.
pub fn random_claw_free_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = random_graph(rng, n, p);
    while let Some((_, leaves)) = g.find_claw() {
        let i = rng.gen_range(0..3);
        let j = (i + rng.gen_range(1..3)) % 3;
        g.add_edge(leaves[i], leaves[j]);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn exhaustive_counts() {
        assert_eq!(all_labeled_graphs(0).count(), 1);
        assert_eq!(all_labeled_graphs(3).count(), 8);
        assert_eq!(all_labeled_graphs(4).count(), 64);
    }

    #[test]
    fn random_trees_are_trees() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..12 {
            let t = random_tree(&mut rng, n);
            assert_eq!(t.edge_count(), n - 1);
            assert!(t.is_connected());
        }
    }

    #[test]
    fn random_forests_are_acyclic() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let f = random_forest(&mut rng, 14);
            assert_eq!(f.edge_count() + f.components().len(), f.vertex_count());
        }
    }

    #[test]
    fn random_claw_free_graphs_have_no_claw() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 7..10 {
            assert!(random_claw_free_graph(&mut rng, n, 0.3).is_claw_free());
        }
    }
}
