//! Simplices grouped by dimension, boundary columns and the homology they give.

use std::collections::HashSet;
use std::hash::Hash;

use rayon::prelude::*;

use super::snf::{sparse_invariants, Invariants, SparseColumn};
use super::{HomologyGroup, HomologyProfile};
use crate::graphs::bitset::BitSet;

/// A simplex on vertices `0..n`, stored so that levels can be sorted and
/// binary-searched.
pub(crate) trait FaceKey: Ord + Hash + Clone + Send + Sync {
    fn from_sorted(vertices: &[u32]) -> Self;
    fn vertices(&self, out: &mut Vec<u32>);
    fn without(&self, v: u32) -> Self;
}

impl FaceKey for u128 {
    fn from_sorted(vertices: &[u32]) -> Self {
        vertices.iter().fold(0, |acc, &v| acc | 1u128 << v)
    }

    fn vertices(&self, out: &mut Vec<u32>) {
        out.clear();
        let mut bits = *self;
        while bits != 0 {
            out.push(bits.trailing_zeros());
            bits &= bits - 1;
        }
    }

    fn without(&self, v: u32) -> Self {
        self & !(1u128 << v)
    }
}

impl FaceKey for Vec<u32> {
    fn from_sorted(vertices: &[u32]) -> Self {
        vertices.to_vec()
    }

    fn vertices(&self, out: &mut Vec<u32>) {
        out.clear();
        out.extend_from_slice(self);
    }

    fn without(&self, v: u32) -> Self {
        self.iter().copied().filter(|&x| x != v).collect()
    }
}

/// `levels[k]` holds the k-simplices in sorted key order.
pub(crate) struct Chains<K> {
    levels: Vec<Vec<K>>,
}

impl<K: FaceKey> Chains<K> {
    /// All faces of the given facets (vertex lists over `0..n`, sorted).
    pub fn from_facets(facets: &[Vec<u32>]) -> Self {
        let top = facets.iter().map(|f| f.len()).max().unwrap_or(0);
        let mut levels: Vec<Vec<K>> = vec![Vec::new(); top];
        let mut current: HashSet<K> = HashSet::new();
        let mut buf = Vec::new();
        for size in (1..=top).rev() {
            let mut next: HashSet<K> = HashSet::new();
            for f in facets.iter().filter(|f| f.len() == size) {
                current.insert(K::from_sorted(f));
            }
            if size > 1 {
                for face in &current {
                    face.vertices(&mut buf);
                    for &v in &buf {
                        next.insert(face.without(v));
                    }
                }
            }
            let mut level: Vec<K> = current.into_iter().collect();
            level.par_sort_unstable();
            levels[size - 1] = level;
            current = next;
        }
        Chains { levels }
    }

    /// All non-empty independent sets of a graph given by neighbour bitsets.
    pub fn from_independent_sets(nbr: &[BitSet]) -> Self {
        let n = nbr.len();
        let mut levels: Vec<Vec<K>> = Vec::new();
        let mut stack: Vec<u32> = Vec::new();
        let allowed = BitSet::full(n);
        grow(nbr, &allowed, 0, &mut stack, &mut levels);
        for level in &mut levels {
            level.par_sort_unstable();
        }
        Chains { levels }
    }

    pub fn count(&self, k: usize) -> usize {
        self.levels.get(k).map_or(0, |l| l.len())
    }

    /// Boundary columns of `∂_k` for `k ≥ 1`, rows indexed by position in level `k−1`.
    pub fn boundary_columns(&self, k: usize) -> Vec<SparseColumn<i64>> {
        let lower = &self.levels[k - 1];
        self.levels[k]
            .par_iter()
            .map_init(Vec::new, |buf, face| {
                face.vertices(buf);
                let mut col: Vec<(u32, i64)> = buf
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| {
                        let row = lower
                            .binary_search(&face.without(v))
                            .expect("faces of a simplex are present");
                        (row as u32, if i % 2 == 0 { 1 } else { -1 })
                    })
                    .collect();
                col.sort_unstable_by_key(|e| e.0);
                col
            })
            .collect()
    }

    /// Reduced homology over the integers.
    pub fn homology(&self) -> HomologyProfile {
        let dim = self.levels.iter().rposition(|l| !l.is_empty());
        let Some(dim) = dim else {
            return HomologyProfile::sphere(-1);
        };
        // invariants of ∂_k for k = 1..=dim; ∂_0 is the augmentation (rank 1)
        let invariants: Vec<Invariants> = (1..=dim)
            .into_par_iter()
            .map(|k| sparse_invariants(self.count(k - 1), self.boundary_columns(k)))
            .collect();
        let rank = |k: i64| -> usize {
            match k {
                0 => 1,
                k if k >= 1 && (k as usize) <= dim => invariants[k as usize - 1].rank,
                _ => 0,
            }
        };
        let mut profile = HomologyProfile::zero();
        for k in -1..=dim as i64 {
            let n_k = if k == -1 { 1 } else { self.count(k as usize) };
            let betti = n_k - rank(k) - rank(k + 1);
            let torsion = if k + 1 >= 1 && (k + 1) as usize <= dim {
                invariants[k as usize].torsion.clone()
            } else {
                Vec::new()
            };
            profile.insert(k as i32, HomologyGroup::new(betti, torsion));
        }
        profile
    }
}

fn grow<K: FaceKey>(
    nbr: &[BitSet],
    allowed: &BitSet,
    from: usize,
    stack: &mut Vec<u32>,
    levels: &mut Vec<Vec<K>>,
) {
    for v in allowed.iter().filter(|&v| v >= from) {
        stack.push(v as u32);
        if levels.len() < stack.len() {
            levels.push(Vec::new());
        }
        levels[stack.len() - 1].push(K::from_sorted(stack));
        let next = allowed.and_not(&nbr[v]);
        grow(nbr, &next, v + 1, stack, levels);
        stack.pop();
    }
}
