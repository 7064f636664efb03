//! Exact vertex coloring by DSATUR branch and bound.

use super::mis::Dense;
use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// Vertex cap for the exact solver.
pub const DEFAULT_CHROMATIC_CAP: usize = 20;

pub fn chromatic_number(g: &Graph, cap: usize) -> Result<usize> {
    Ok(chromatic_coloring(g, cap)?.len())
}

/// An optimal coloring as color classes: each class sorted, classes ordered by
/// their smallest vertex.
pub fn chromatic_coloring(g: &Graph, cap: usize) -> Result<Vec<Vec<Vertex>>> {
    if g.vertex_count() > cap {
        return Err(Error::TooLarge {
            size: g.vertex_count(),
            cap,
        });
    }
    let dense = Dense::new(g);
    let n = dense.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let adj: Vec<Vec<usize>> = dense.nbr.iter().map(|s| s.iter().collect()).collect();

    let lower = greedy_clique(&adj);
    let mut search = Search {
        adj: &adj,
        color: vec![usize::MAX; n],
        best: greedy_dsatur(&adj),
        lower,
    };
    let mut best_count = search.best.iter().max().unwrap() + 1;
    if best_count > lower {
        search.branch(0, 0, &mut best_count);
    }

    let mut classes: Vec<Vec<Vertex>> = vec![Vec::new(); best_count];
    for (i, &c) in search.best.iter().enumerate() {
        classes[c].push(dense.labels[i]);
    }
    classes.retain(|c| !c.is_empty());
    classes.sort();
    Ok(classes)
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    color: Vec<usize>,
    best: Vec<usize>,
    lower: usize,
}

impl Search<'_> {
    fn pick(&self) -> Option<usize> {
        let n = self.adj.len();
        (0..n)
            .filter(|&v| self.color[v] == usize::MAX)
            .max_by_key(|&v| {
                let mut seen: Vec<usize> = self.adj[v]
                    .iter()
                    .map(|&w| self.color[w])
                    .filter(|&c| c != usize::MAX)
                    .collect();
                seen.sort_unstable();
                seen.dedup();
                (seen.len(), self.adj[v].len(), std::cmp::Reverse(v))
            })
    }

    fn branch(&mut self, colored: usize, used: usize, best_count: &mut usize) {
        if *best_count <= self.lower {
            return;
        }
        if colored == self.adj.len() {
            if used < *best_count {
                *best_count = used;
                self.best = self.color.clone();
            }
            return;
        }
        let v = self.pick().unwrap();
        let limit = (used + 1).min(*best_count - 1);
        for c in 0..limit {
            if self.adj[v].iter().any(|&w| self.color[w] == c) {
                continue;
            }
            self.color[v] = c;
            self.branch(colored + 1, used.max(c + 1), best_count);
            self.color[v] = usize::MAX;
            if *best_count <= self.lower {
                return;
            }
        }
    }
}

fn greedy_dsatur(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut color = vec![usize::MAX; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by_key(|&v| {
                let mut seen: Vec<usize> =
                    adj[v].iter().map(|&w| color[w]).filter(|&c| c != usize::MAX).collect();
                seen.sort_unstable();
                seen.dedup();
                (seen.len(), adj[v].len(), std::cmp::Reverse(v))
            })
            .unwrap();
        color[v] = (0..).find(|&c| adj[v].iter().all(|&w| color[w] != c)).unwrap();
    }
    color
}

fn greedy_clique(adj: &[Vec<usize>]) -> usize {
    let n = adj.len();
    let mut best = 1;
    for start in 0..n {
        let mut clique = vec![start];
        let mut order: Vec<usize> = adj[start].clone();
        order.sort_by_key(|&v| std::cmp::Reverse(adj[v].len()));
        for v in order {
            if clique.iter().all(|u| adj[v].contains(u)) {
                clique.push(v);
            }
        }
        best = best.max(clique.len());
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_proper(g: &Graph, classes: &[Vec<Vertex>]) -> bool {
        let mut all: Vec<Vertex> = classes.concat();
        all.sort_unstable();
        all == g.vertex_list() && classes.iter().all(|c| g.is_independent(c))
    }

    fn brute_chromatic(g: &Graph) -> usize {
        let v = g.vertex_list();
        let n = v.len();
        if n == 0 {
            return 0;
        }
        for k in 1..=n {
            let mut assignment = vec![0usize; n];
            loop {
                let ok = g
                    .edges()
                    .iter()
                    .all(|&(a, b)| {
                        assignment[v.binary_search(&a).unwrap()]
                            != assignment[v.binary_search(&b).unwrap()]
                    });
                if ok {
                    return k;
                }
                let mut i = 0;
                while i < n && assignment[i] == k - 1 {
                    assignment[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
                assignment[i] += 1;
            }
        }
        unreachable!()
    }

    #[test]
    fn named_graphs() {
        let k4 = Graph::discrete(0..4).complement();
        assert_eq!(chromatic_number(&k4, 20), Ok(4));
        let c5 = Graph::from_edge_list(&[0, 1, 2, 3, 4], &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
            .unwrap();
        assert_eq!(chromatic_number(&c5, 20), Ok(3));
        let matching = Graph::from_edge_list(&[0, 1, 2, 3, 4, 5], &[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(chromatic_number(&matching, 20), Ok(2));
        assert_eq!(chromatic_number(&Graph::new(), 20), Ok(0));
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            chromatic_number(&Graph::discrete(0..21), 20),
            Err(Error::TooLarge { size: 21, cap: 20 })
        );
    }

    #[test]
    fn agrees_with_brute_force() {
        for g in crate::graphs::all_labeled_graphs(5) {
            let classes = chromatic_coloring(&g, 20).unwrap();
            assert!(is_proper(&g, &classes));
            assert_eq!(classes.len(), brute_chromatic(&g), "{g:?}");
        }
    }
}
