//! Maximal independent sets by Bron–Kerbosch with Tomita pivoting on the complement.

use super::bitset::BitSet;
use super::{Graph, Vertex};

/// Dense re-indexing of a graph: vertex `i` is the `i`-th smallest label.
#[derive(Clone, Debug)]
pub(crate) struct Dense {
    pub labels: Vec<Vertex>,
    pub nbr: Vec<BitSet>,
}

impl Dense {
    pub fn new(g: &Graph) -> Self {
        let labels = g.vertex_list();
        let n = labels.len();
        let nbr = labels
            .iter()
            .map(|&v| {
                let mut set = BitSet::new(n);
                for w in g.neighbors(v) {
                    set.insert(labels.binary_search(w).unwrap());
                }
                set
            })
            .collect();
        Dense { labels, nbr }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }
}

/// Every inclusion-maximal independent set, each sorted, in lexicographic order.
///
/// The graph with no vertices has exactly one maximal independent set, the empty set.
pub fn maximal_independent_sets(g: &Graph) -> Vec<Vec<Vertex>> {
    let dense = Dense::new(g);
    let n = dense.len();
    let non_nbr: Vec<BitSet> = (0..n)
        .map(|i| {
            let mut s = BitSet::full(n).and_not(&dense.nbr[i]);
            s.remove(i);
            s
        })
        .collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    expand(&non_nbr, &mut current, BitSet::full(n), BitSet::new(n), &mut out);
    let mut sets: Vec<Vec<Vertex>> = out
        .into_iter()
        .map(|mut s: Vec<usize>| {
            s.sort_unstable();
            s.into_iter().map(|i| dense.labels[i]).collect()
        })
        .collect();
    sets.sort();
    sets
}

fn expand(
    non_nbr: &[BitSet],
    current: &mut Vec<usize>,
    mut candidates: BitSet,
    mut excluded: BitSet,
    out: &mut Vec<Vec<usize>>,
) {
    if candidates.is_empty() {
        if excluded.is_empty() {
            out.push(current.clone());
        }
        return;
    }
    let pivot = candidates
        .iter()
        .chain(excluded.iter())
        .max_by_key(|&u| candidates.intersection_count(&non_nbr[u]))
        .unwrap();
    let branch: Vec<usize> = candidates.and_not(&non_nbr[pivot]).iter().collect();
    for v in branch {
        current.push(v);
        expand(
            non_nbr,
            current,
            candidates.and(&non_nbr[v]),
            excluded.and(&non_nbr[v]),
            out,
        );
        current.pop();
        candidates.remove(v);
        excluded.insert(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force(g: &Graph) -> Vec<Vec<Vertex>> {
        let v = g.vertex_list();
        let n = v.len();
        let mut out = Vec::new();
        for mask in 0u32..1 << n {
            let set: Vec<Vertex> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| v[i]).collect();
            if !g.is_independent(&set) {
                continue;
            }
            let maximal = (0..n).filter(|i| mask >> i & 1 == 0).all(|i| {
                let mut bigger = set.clone();
                bigger.push(v[i]);
                !g.is_independent(&bigger)
            });
            if maximal {
                out.push(set);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn small_cases() {
        let k3 = Graph::discrete(0..3).complement();
        assert_eq!(maximal_independent_sets(&k3), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(maximal_independent_sets(&Graph::discrete([0, 1])), vec![vec![0, 1]]);
        assert_eq!(maximal_independent_sets(&Graph::new()), vec![Vec::<Vertex>::new()]);
        let c5 = Graph::from_edge_list(&[0, 1, 2, 3, 4], &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
            .unwrap();
        let sets = maximal_independent_sets(&c5);
        assert_eq!(sets.len(), 5);
        assert!(sets.iter().all(|s| s.len() == 2));
        assert_eq!(sets, brute_force(&c5));
    }

    #[test]
    fn matches_brute_force_on_all_small_graphs() {
        for g in crate::graphs::all_labeled_graphs(5) {
            assert_eq!(maximal_independent_sets(&g), brute_force(&g), "{g:?}");
        }
    }
}
