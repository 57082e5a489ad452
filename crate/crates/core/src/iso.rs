//! Graph isomorphism by backtracking, adequate for the small graphs this
//! toolkit produces (tens of vertices).

use std::sync::Arc;

use crate::graph::{Graph, VertexId};
use crate::morphism::Morphism;

/// Searches for an isomorphism `g -> h`. Vertices of `g` are assigned in
/// an order that keeps the partial map connected, candidates are filtered
/// by degree and loop signature, and adjacency is checked incrementally.
pub fn are_isomorphic(g: &Arc<Graph>, h: &Arc<Graph>) -> Option<Morphism> {
    if g.order() != h.order() || g.size() != h.size() {
        return None;
    }
    let mut gd: Vec<(usize, bool)> = g.vertices().map(|v| (g.degree(v), g.is_looped(v))).collect();
    let mut hd: Vec<(usize, bool)> = h.vertices().map(|v| (h.degree(v), h.is_looped(v))).collect();
    gd.sort();
    hd.sort();
    if gd != hd {
        return None;
    }

    let order = assignment_order(g);
    let mut map: Vec<Option<VertexId>> = vec![None; g.order()];
    let mut used = vec![false; h.order()];
    if assign(g, h, &order, 0, &mut map, &mut used) {
        let map: Vec<VertexId> = map.into_iter().map(|m| m.unwrap()).collect();
        return Morphism::new(g.clone(), h.clone(), map).ok();
    }
    None
}

/// BFS order from the highest-degree vertex, so each new vertex (after the
/// first) has an already-assigned neighbor.
fn assignment_order(g: &Graph) -> Vec<VertexId> {
    let start = g.vertices().max_by_key(|&v| g.degree(v)).unwrap();
    let mut order = vec![start];
    let mut seen = vec![false; g.order()];
    seen[start.index()] = true;
    let mut i = 0;
    while i < order.len() {
        for &w in g.neighbors(order[i]) {
            if !seen[w.index()] {
                seen[w.index()] = true;
                order.push(w);
            }
        }
        i += 1;
    }
    order
}

fn assign(
    g: &Graph,
    h: &Graph,
    order: &[VertexId],
    pos: usize,
    map: &mut Vec<Option<VertexId>>,
    used: &mut Vec<bool>,
) -> bool {
    if pos == order.len() {
        return true;
    }
    let v = order[pos];
    'cand: for w in h.vertices() {
        if used[w.index()]
            || g.degree(v) != h.degree(w)
            || g.is_looped(v) != h.is_looped(w)
        {
            continue;
        }
        for u in g.vertices() {
            if let Some(mu) = map[u.index()] {
                if g.has_edge(v, u) != h.has_edge(w, mu) {
                    continue 'cand;
                }
            }
        }
        map[v.index()] = Some(w);
        used[w.index()] = true;
        if assign(g, h, order, pos + 1, map, used) {
            return true;
        }
        map[v.index()] = None;
        used[w.index()] = false;
    }
    false
}
