//! Homology of independence complexes computed on the graph.
//!
//! Before building any chain complex the graph is shrunk with moves that keep
//! the homotopy type of `I_G`: an isolated vertex makes `I_G` a cone; if
//! `N(v) ⊆ N(w)` then `w` can be deleted; a disjoint union gives a join. What
//! remains is split at a vertex `v`, using `I_G = I_{G−v} ∪ (v * I_{G−N[v]})`
//! and the Mayer–Vietoris sequence whenever it determines the answer.

use std::collections::HashMap;

use super::{chains_homology_of_graph, HomologyProfile};
use crate::graphs::bitset::BitSet;
use crate::graphs::{Dense, Graph};

/// Graphs at most this large go straight to the chain complex.
const DIRECT_LIMIT: usize = 14;

/// Reduced homology of `I_G`.
pub fn independence_homology(g: &Graph) -> HomologyProfile {
    let dense = Dense::new(g);
    let mut cache = HashMap::new();
    solve(dense.nbr, &mut cache)
}

type Cache = HashMap<Vec<BitSet>, HomologyProfile>;

fn solve(nbr: Vec<BitSet>, cache: &mut Cache) -> HomologyProfile {
    let nbr = match reduce(nbr) {
        Reduced::Cone => return HomologyProfile::zero(),
        Reduced::Graph(nbr) => nbr,
    };
    if nbr.is_empty() {
        return HomologyProfile::sphere(-1);
    }
    if let Some(p) = cache.get(&nbr) {
        return p.clone();
    }
    let result = split(&nbr, cache);
    cache.insert(nbr, result.clone());
    result
}

fn split(nbr: &[BitSet], cache: &mut Cache) -> HomologyProfile {
    let comps = components(nbr);
    if comps.len() > 1 {
        let mut acc = HomologyProfile::sphere(-1);
        for comp in comps {
            let part = solve(induced(nbr, &comp), cache);
            if part.is_zero() {
                return part;
            }
            acc = acc.join(&part);
        }
        return acc;
    }
    if nbr.len() <= DIRECT_LIMIT {
        return chains_homology_of_graph(nbr);
    }
    let n = nbr.len();
    let v = (0..n).max_by_key(|&v| (nbr[v].count(), std::cmp::Reverse(v))).expect("non-empty");
    let mut closed = nbr[v].clone();
    closed.insert(v);
    let mut keep_link = BitSet::full(n).and_not(&closed);
    let link = solve(induced(nbr, &keep_link), cache);
    keep_link = BitSet::full(n);
    keep_link.remove(v);
    let deletion = solve(induced(nbr, &keep_link), cache);
    match mayer_vietoris(&deletion, &link) {
        Some(p) => p,
        None => chains_homology_of_graph(nbr),
    }
}

/// `H̃(I_G)` from `A = H̃(I_{G−v})` and `B = H̃(I_{G−N[v]})` when the exact sequence
/// `H̃_n(B) → H̃_n(A) → H̃_n(I_G) → H̃_{n−1}(B) → H̃_{n−1}(A)` forces the result:
/// the outer maps vanish whenever source or target is zero, and the short
/// sequence splits when `H̃_{n−1}(B)` is free.
fn mayer_vietoris(a: &HomologyProfile, b: &HomologyProfile) -> Option<HomologyProfile> {
    for (k, _) in b.groups() {
        if a.get(k).is_some() {
            return None;
        }
    }
    for (k, g) in b.groups() {
        if !g.torsion.is_empty() && a.get(k + 1).is_some() {
            return None;
        }
    }
    let mut out = a.clone();
    for (k, g) in b.groups() {
        let mut merged = out.get(k + 1).cloned().unwrap_or_default();
        merged.direct_sum(g.clone());
        merged.normalize();
        out.insert(k + 1, merged);
    }
    Some(out)
}

enum Reduced {
    Cone,
    Graph(Vec<BitSet>),
}

/// Deletes dominating vertices until none is left; reports a cone on an isolated vertex.
fn reduce(mut nbr: Vec<BitSet>) -> Reduced {
    loop {
        let n = nbr.len();
        if (0..n).any(|v| nbr[v].is_empty()) {
            return Reduced::Cone;
        }
        let mut victim = None;
        'outer: for v in 0..n {
            for w in 0..n {
                if v != w && nbr[v].and_not(&nbr[w]).is_empty() {
                    victim = Some(w);
                    break 'outer;
                }
            }
        }
        match victim {
            Some(w) => {
                let mut keep = BitSet::full(n);
                keep.remove(w);
                nbr = induced(&nbr, &keep);
            }
            None => return Reduced::Graph(nbr),
        }
    }
}

fn induced(nbr: &[BitSet], keep: &BitSet) -> Vec<BitSet> {
    let old: Vec<usize> = keep.iter().collect();
    let mut index = vec![usize::MAX; nbr.len()];
    for (i, &v) in old.iter().enumerate() {
        index[v] = i;
    }
    old.iter()
        .map(|&v| {
            let mut set = BitSet::new(old.len());
            for w in nbr[v].and(keep).iter() {
                set.insert(index[w]);
            }
            set
        })
        .collect()
}

fn components(nbr: &[BitSet]) -> Vec<BitSet> {
    let n = nbr.len();
    let mut seen = BitSet::new(n);
    let mut out = Vec::new();
    for s in 0..n {
        if seen.contains(s) {
            continue;
        }
        let mut comp = BitSet::new(n);
        let mut stack = vec![s];
        comp.insert(s);
        seen.insert(s);
        while let Some(x) = stack.pop() {
            for y in nbr[x].iter() {
                if !seen.contains(y) {
                    seen.insert(y);
                    comp.insert(y);
                    stack.push(y);
                }
            }
        }
        out.push(comp);
    }
    out
}
