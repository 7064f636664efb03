use num_bigint::BigInt;

use super::*;
use crate::complexes::{independence_complex, SimplicialComplex};
use crate::graphs::Graph;

fn cycle(n: Vertex) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(&(0..n).collect::<Vec<_>>(), &edges).unwrap()
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Minimal 6-vertex triangulation of the real projective plane.
pub(crate) fn rp2() -> SimplicialComplex {
    SimplicialComplex::from_facets([
        vec![0, 1, 2],
        vec![0, 2, 3],
        vec![0, 3, 4],
        vec![0, 4, 5],
        vec![0, 1, 5],
        vec![1, 2, 4],
        vec![2, 3, 5],
        vec![1, 3, 4],
        vec![1, 3, 5],
        vec![2, 4, 5],
    ])
    .unwrap()
}

#[test]
fn smith_examples() {
    let id = IntegerMatrix::from_rows(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
    assert_eq!(id.smith_normal_form().diagonal, big(&[1, 1, 1]));
    let m = IntegerMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
    let snf = m.smith_normal_form();
    assert_eq!(snf.diagonal, big(&[2, 4]));
    assert_eq!(reference_smith_diagonal(&m.to_dense()), big(&[2, 4]));
    let z = IntegerMatrix::zeros(3, 2);
    assert_eq!(z.smith_normal_form(), SmithForm { diagonal: vec![], rank: 0 });
}

#[test]
fn overflow_falls_back_to_big_integers() {
    let huge = i64::MAX / 2;
    let m = IntegerMatrix::from_rows(&[vec![1, huge, 0], vec![huge, 1, 3], vec![5, huge, huge]]);
    let snf = m.smith_normal_form();
    assert_eq!(snf.diagonal, reference_smith_diagonal(&m.to_dense()));
}

#[test]
fn boundary_matrices() {
    let tri = SimplicialComplex::from_facets([vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
    let d1 = boundary_matrix(&tri, 1).unwrap();
    assert_eq!((d1.rows(), d1.cols()), (3, 3));
    assert_eq!(d1.smith_normal_form().rank, 2);
    let full = SimplicialComplex::full_simplex([0, 1, 2]);
    let d2 = boundary_matrix(&full, 2).unwrap();
    assert_eq!((d2.rows(), d2.cols()), (3, 1));
    let d1 = boundary_matrix(&full, 1).unwrap();
    assert!(d1.mul(&d2).is_zero());
    let d0 = boundary_matrix(&full, 0).unwrap();
    assert!(d0.mul(&d1).is_zero());
    assert!(boundary_matrix(&full, 3).is_err());
    assert!(boundary_matrix(&full, -2).is_err());
    assert_eq!(boundary_matrix(&full, -1).unwrap().cols(), 1);
}

#[test]
fn cycles() {
    assert_eq!(reduced_homology(&independence_complex(&cycle(5))), HomologyProfile::sphere(1));
    assert_eq!(
        reduced_homology(&independence_complex(&cycle(6))),
        HomologyProfile::wedge_of_spheres(1, 2)
    );
    assert_eq!(independence_homology(&cycle(6)), HomologyProfile::wedge_of_spheres(1, 2));
}

#[test]
fn projective_plane_has_two_torsion() {
    let h = reduced_homology(&rp2());
    assert_eq!(h.betti(1), 0);
    assert_eq!(h.torsion(1), &[2u32.into()]);
    assert_eq!(h.max_degree(), Some(1));
    assert_eq!(reference_homology(&rp2()), h);
}

#[test]
fn empty_and_point_conventions() {
    assert_eq!(reduced_homology(&SimplicialComplex::empty()), HomologyProfile::sphere(-1));
    assert!(reduced_homology(&SimplicialComplex::full_simplex([3])).is_zero());
    assert_eq!(independence_homology(&Graph::new()), HomologyProfile::sphere(-1));
    assert_eq!(
        homological_connectivity(&SimplicialComplex::empty()),
        Connectivity::UpTo(-2)
    );
    let s0 = SimplicialComplex::from_facets([vec![0], vec![1]]).unwrap();
    assert_eq!(homological_connectivity(&s0), Connectivity::UpTo(-1));
    assert_eq!(
        homological_connectivity(&SimplicialComplex::full_simplex([0, 1, 2])),
        Connectivity::All
    );
    let three_edges = Graph::from_edge_list(&[0, 1, 2, 3, 4, 5], &[(0, 1), (2, 3), (4, 5)]).unwrap();
    let k = independence_complex(&three_edges);
    assert_eq!(reduced_homology(&k), HomologyProfile::sphere(2));
    assert_eq!(homological_connectivity(&k), Connectivity::UpTo(1));
}

#[test]
fn joins_of_profiles() {
    let s0 = HomologyProfile::sphere(0);
    assert_eq!(s0.join(&s0), HomologyProfile::sphere(1));
    assert_eq!(HomologyProfile::sphere(-1).join(&s0), s0);
    let mut rp = HomologyProfile::zero();
    rp.insert(1, HomologyGroup::new(0, vec![BigInt::from(2)]));
    // Σ RP² has Z/2 in degree 2
    assert_eq!(rp.join(&s0), rp.shift(1).unwrap());
    // RP² * RP²: Z/2⊗Z/2 in degree 3, Tor in degree 4
    let j = rp.join(&rp);
    assert_eq!(j.torsion(3), &[2u32.into()]);
    assert_eq!(j.torsion(4), &[2u32.into()]);
    let direct = reduced_homology(&rp2().join(&rp2()).0);
    assert_eq!(direct, j);
}

#[test]
fn torsion_is_normalized() {
    let g = HomologyGroup::new(0, big(&[6, 4, 1]));
    assert_eq!(g.torsion, vec![2u32.into(), 12u32.into()]);
}

#[test]
fn json_round_trip() {
    let mut p = HomologyProfile::wedge_of_spheres(1, 2);
    p.insert(3, HomologyGroup::new(1, big(&[2, 2])));
    let text = p.to_json();
    assert_eq!(text, r#"{"1":{"betti":2,"torsion":[]},"3":{"betti":1,"torsion":[2,2]}}"#);
    assert_eq!(HomologyProfile::from_json(&text).unwrap(), p);
    assert_eq!(HomologyProfile::from_json("{}").unwrap(), HomologyProfile::zero());
    assert!(HomologyProfile::from_json(r#"{"-2":{"betti":1,"torsion":[]}}"#).is_err());
}

#[test]
fn graph_route_matches_complex_route_on_small_graphs() {
    for n in 0..=6 {
        for g in crate::graphs::all_labeled_graphs(n) {
            let direct = reduced_homology(&independence_complex(&g));
            assert_eq!(independence_homology(&g), direct, "{g:?}");
        }
    }
}
