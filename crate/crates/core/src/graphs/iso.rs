//! Brute-force graph isomorphism for small graphs.

use std::collections::BTreeMap;

use super::{Graph, Vertex};

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h, &[]).is_some()
}

/// A bijection `V(g) -> V(h)` preserving adjacency and extending the `fixed` pairs.
pub fn find_isomorphism(
    g: &Graph,
    h: &Graph,
    fixed: &[(Vertex, Vertex)],
) -> Option<BTreeMap<Vertex, Vertex>> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let sig_g = signatures(g);
    let sig_h = signatures(h);
    let mut a: Vec<_> = sig_g.values().cloned().collect();
    let mut b: Vec<_> = sig_h.values().cloned().collect();
    a.sort();
    b.sort();
    if a != b {
        return None;
    }

    let mut order: Vec<Vertex> = g.vertex_list();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut map = BTreeMap::new();
    let mut used = BTreeMap::new();
    for &(u, v) in fixed {
        if !g.contains(u) || !h.contains(v) || sig_g[&u] != sig_h[&v] {
            return None;
        }
        map.insert(u, v);
        used.insert(v, u);
    }
    for (&u, &v) in &map {
        for (&u2, &v2) in &map {
            if g.has_edge(u, u2) != h.has_edge(v, v2) {
                return None;
            }
        }
    }
    order.retain(|v| !map.contains_key(v));
    if extend(g, h, &sig_g, &sig_h, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

type Signature = (usize, Vec<usize>);

fn signatures(g: &Graph) -> BTreeMap<Vertex, Signature> {
    g.vertices()
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            nd.sort_unstable();
            (v, (g.degree(v), nd))
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    sig_g: &BTreeMap<Vertex, Signature>,
    sig_h: &BTreeMap<Vertex, Signature>,
    order: &[Vertex],
    depth: usize,
    map: &mut BTreeMap<Vertex, Vertex>,
    used: &mut BTreeMap<Vertex, Vertex>,
) -> bool {
    let Some(&u) = order.get(depth) else {
        return true;
    };
    for v in h.vertices() {
        if used.contains_key(&v) || sig_g[&u] != sig_h[&v] {
            continue;
        }
        let consistent = map
            .iter()
            .all(|(&u2, &v2)| g.has_edge(u, u2) == h.has_edge(v, v2));
        if !consistent {
            continue;
        }
        map.insert(u, v);
        used.insert(v, u);
        if extend(g, h, sig_g, sig_h, order, depth + 1, map, used) {
            return true;
        }
        map.remove(&u);
        used.remove(&v);
    }
    false
}
