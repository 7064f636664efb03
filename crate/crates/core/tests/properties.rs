use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use starclusters::collapses::{greedy_collapse, replay};
use starclusters::complexes::{alexander_dual, independence_complex, SimplicialComplex};
use starclusters::graphs::Graph;
use starclusters::homology::{
    independence_homology, reduced_homology, reference_homology, reference_smith_diagonal, IntegerMatrix,
};
use starclusters::verify::{case_rng, random_matrix};
use starclusters::HomologyProfile;

fn det(m: &[Vec<BigInt>]) -> BigInt {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let mut acc = BigInt::zero();
    for j in 0..m.len() {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * det(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors as quotients of consecutive gcds of `k × k` minors.
fn determinantal_factors(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let (rows, cols) = (m.len(), m[0].len());
    let mut out = Vec::new();
    let mut prev = BigInt::from(1);
    for k in 1..=rows.min(cols) {
        let mut g = BigInt::zero();
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<BigInt>> = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j].clone()).collect()).collect();
                g = g.gcd(&det(&sub));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

fn to_big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

#[test]
fn snf_matches_both_oracles_on_seeded_matrices() {
    for i in 0..1000 {
        let m = random_matrix(&mut case_rng(11, i));
        let engine = IntegerMatrix::from_rows(&m).smith_normal_form().diagonal;
        let big = to_big(&m);
        assert_eq!(engine, reference_smith_diagonal(&big), "matrix {m:?}");
        if m.len() <= 5 && m[0].len() <= 5 {
            assert_eq!(engine, determinantal_factors(&big), "matrix {m:?}");
        }
    }
}

#[test]
fn snf_handles_entries_beyond_machine_words() {
    let huge: BigInt = BigInt::from(i64::MAX) * 4;
    let m = vec![vec![huge.clone(), BigInt::from(0)], vec![BigInt::from(0), huge.clone() * 6]];
    let engine = IntegerMatrix::from_rows(&m).smith_normal_form().diagonal;
    assert_eq!(engine, vec![huge.clone(), huge * 6]);
    assert!(engine.iter().all(|d| d.is_positive()));
}

fn arb_complex() -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(prop::collection::btree_set(0u32..7, 1..5), 1..6)
        .prop_map(|fs| SimplicialComplex::from_facets(fs.into_iter().map(|s| s.into_iter().collect::<Vec<_>>())).unwrap())
}

fn arb_graph(max_n: u32) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), (n * (n - 1) / 2) as usize).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edge_list(&(0..n).collect::<Vec<_>>(), &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn engine_agrees_with_reference_homology(k in arb_complex()) {
        prop_assert_eq!(reduced_homology(&k), reference_homology(&k));
    }

    #[test]
    fn suspension_shifts_homology(k in arb_complex()) {
        prop_assert_eq!(reduced_homology(&k.simplicial_suspension()), reduced_homology(&k).suspend());
    }

    #[test]
    fn join_follows_kunneth(a in arb_complex(), b in arb_complex()) {
        let (j, _) = a.join(&b);
        prop_assert_eq!(reduced_homology(&j), reduced_homology(&a).join(&reduced_homology(&b)));
    }

    #[test]
    fn cone_is_contractible(k in arb_complex()) {
        prop_assert!(reduced_homology(&k.cone()).is_zero());
    }

    #[test]
    fn collapses_keep_homology(k in arb_complex()) {
        let t = greedy_collapse(&k);
        prop_assert_eq!(reduced_homology(&t.residual), reduced_homology(&k));
        prop_assert_eq!(replay(&k, &t.steps).unwrap(), t.residual);
    }

    #[test]
    fn alexander_duality_for_betti_numbers(k in arb_complex()) {
        // H̃_i(K*) and H̃^{n-i-3}(K) agree, so the free ranks match
        if let Ok(dual) = alexander_dual(&k) {
            let n = k.ground().len() as i32;
            let (hk, hd) = (reduced_homology(&k), reduced_homology(&dual));
            for i in -1..n {
                prop_assert_eq!(hd.betti(i), hk.betti(n - i - 3));
            }
            let back = alexander_dual(&dual).unwrap();
            prop_assert_eq!(back.facets(), k.facets());
        }
    }

    #[test]
    fn graph_route_matches_direct_route(g in arb_graph(11)) {
        prop_assert_eq!(independence_homology(&g), reduced_homology(&independence_complex(&g)));
    }

    #[test]
    fn profile_json_round_trips(k in arb_complex()) {
        let h = reduced_homology(&k);
        prop_assert_eq!(HomologyProfile::from_json(&h.to_json()).unwrap(), h);
        prop_assert_eq!(SimplicialComplex::from_json(&k.to_json()).unwrap(), k);
    }

    #[test]
    fn graph_json_round_trips(g in arb_graph(8)) {
        prop_assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);
    }
}

#[test]
fn graph_route_matches_direct_route_past_the_split_threshold() {
    use rand::Rng;
    use starclusters::graphs::random_graph;
    for i in 0..60 {
        let mut rng = case_rng(5, i);
        let n = rng.gen_range(15..=20);
        let p = rng.gen_range(0.15..0.5);
        let g = random_graph(&mut rng, n, p);
        assert_eq!(
            independence_homology(&g),
            reduced_homology(&independence_complex(&g)),
            "graph {}",
            g.to_json()
        );
    }
}
