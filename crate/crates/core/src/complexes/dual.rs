use std::collections::HashSet;

use super::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graphs::Vertex;

/// `K^*` over the ground set `V` of `K`: proper subsets `σ` with `V ∖ σ ∉ K`.
///
/// Facets are the complements of the minimal non-faces of `K`.
pub fn alexander_dual(k: &SimplicialComplex) -> Result<SimplicialComplex> {
    if k.is_full_simplex() {
        return Err(Error::param("the Alexander dual of a full simplex is undefined"));
    }
    let ground = k.ground();
    let mut minimal_non_faces: HashSet<Vec<Vertex>> = HashSet::new();
    let present = k.vertices();
    for &v in ground {
        if present.binary_search(&v).is_err() {
            minimal_non_faces.insert(vec![v]);
        }
    }
    // a minimal non-face of size >= 2 is a face plus one vertex
    for face in k.faces() {
        for &x in &present {
            if face.contains(x) {
                continue;
            }
            let mut cand = face.vertices().to_vec();
            let pos = cand.partition_point(|&y| y < x);
            cand.insert(pos, x);
            if minimal_non_faces.contains(&cand) || k.contains_set(&cand) {
                continue;
            }
            let minimal = (0..cand.len()).all(|i| {
                let mut sub = cand.clone();
                sub.remove(i);
                k.contains_set(&sub)
            });
            if minimal {
                minimal_non_faces.insert(cand);
            }
        }
    }
    let facets = minimal_non_faces
        .into_iter()
        .map(|n| ground.iter().copied().filter(|v| n.binary_search(v).is_err()).collect::<Vec<_>>())
        .filter(|c| !c.is_empty())
        .map(Simplex::from_sorted)
        .collect();
    Ok(SimplicialComplex::from_simplices(facets).set_ground(ground.iter().copied()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_dual(k: &SimplicialComplex) -> SimplicialComplex {
        let ground = k.ground();
        let n = ground.len();
        let mut simplices = Vec::new();
        for mask in 1u32..(1 << n) - 1 {
            let sigma: Vec<Vertex> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| ground[i]).collect();
            let rest: Vec<Vertex> = (0..n).filter(|i| mask >> i & 1 == 0).map(|i| ground[i]).collect();
            if !k.contains_set(&rest) {
                simplices.push(Simplex::from_sorted(sigma));
            }
        }
        SimplicialComplex::from_simplices(simplices).set_ground(ground.iter().copied())
    }

    #[test]
    fn small_duals() {
        let points = SimplicialComplex::from_facets([vec![1], vec![2], vec![3]]).unwrap();
        let d = alexander_dual(&points).unwrap();
        assert_eq!(d, points);
        let edge_point = SimplicialComplex::from_facets([vec![1, 2], vec![3]]).unwrap();
        let d = alexander_dual(&edge_point).unwrap();
        // minimal non-faces {1,3} and {2,3}
        assert_eq!(d, SimplicialComplex::from_facets([vec![1], vec![2]]).unwrap().set_ground([1, 2, 3]));
        assert!(alexander_dual(&SimplicialComplex::full_simplex([0, 1])).is_err());
        let s0 = SimplicialComplex::from_facets([vec![0], vec![1]]).unwrap();
        assert!(alexander_dual(&s0).unwrap().is_empty());
    }

    #[test]
    fn matches_definition() {
        let cases = [
            SimplicialComplex::with_ground(0..5, [vec![0, 1, 2], vec![2, 3]]).unwrap(),
            SimplicialComplex::from_facets([vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]]).unwrap(),
            SimplicialComplex::empty_on(0..3),
            SimplicialComplex::from_facets([vec![0, 1, 2], vec![1, 2, 3], vec![0, 3]]).unwrap(),
        ];
        for k in cases {
            let d = alexander_dual(&k).unwrap();
            assert_eq!(d, brute_dual(&k), "{k:?}");
            assert!(d.facets().iter().all(|f| f.len() < k.ground().len()));
            // double dual
            assert_eq!(alexander_dual(&d).unwrap(), k);
        }
    }
}
