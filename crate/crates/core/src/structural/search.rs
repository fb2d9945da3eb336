//! Exact exponential searches: clique number, independence number,
//! chromatic number and Hamiltonicity. Bitmask based, so `n <= 64`.

use crate::graph::Graph;

pub(crate) fn clique_number_masks(adj: &[u64]) -> usize {
    let n = adj.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0;
    expand(adj, 0, all, &mut best);
    best
}

fn expand(adj: &[u64], size: usize, mut candidates: u64, best: &mut usize) {
    if candidates == 0 {
        *best = (*best).max(size);
        return;
    }
    while candidates != 0 {
        if size + candidates.count_ones() as usize <= *best {
            return;
        }
        let v = candidates.trailing_zeros() as usize;
        candidates &= !(1 << v);
        expand(adj, size + 1, candidates & adj[v], best);
    }
    *best = (*best).max(size);
}

pub fn clique_number(g: &Graph) -> usize {
    clique_number_masks(&g.adjacency_masks())
}

pub fn independence_number(g: &Graph) -> usize {
    let n = g.order();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let co: Vec<u64> = g
        .adjacency_masks()
        .iter()
        .enumerate()
        .map(|(v, &m)| !m & all & !(1 << v))
        .collect();
    clique_number_masks(&co)
}

/// Smallest `c` for which a proper c-coloring exists, searched upward from
/// the clique number.
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut colors = clique_number(g).max(1);
    loop {
        let mut assignment = vec![usize::MAX; n];
        if color_from(g, &order, 0, colors, 0, &mut assignment) {
            return colors;
        }
        colors += 1;
    }
}

fn color_from(
    g: &Graph,
    order: &[usize],
    idx: usize,
    colors: usize,
    used: usize,
    assignment: &mut [usize],
) -> bool {
    let Some(&v) = order.get(idx) else {
        return true;
    };
    // A fresh color is interchangeable with any other unused one.
    let limit = (used + 1).min(colors);
    for c in 0..limit {
        if g.neighbors(v).iter().any(|&w| assignment[w] == c) {
            continue;
        }
        assignment[v] = c;
        if color_from(g, order, idx + 1, colors, used.max(c + 1), assignment) {
            return true;
        }
    }
    assignment[v] = usize::MAX;
    false
}

/// Backtracking search for a spanning cycle.
pub fn has_hamiltonian_cycle(g: &Graph) -> bool {
    let n = g.order();
    if n < 3 || !g.is_connected() || (0..n).any(|v| g.degree(v) < 2) {
        return false;
    }
    let mut visited = vec![false; n];
    visited[0] = true;
    extend(g, 0, 1, &mut visited)
}

fn extend(g: &Graph, at: usize, count: usize, visited: &mut [bool]) -> bool {
    let n = g.order();
    if count == n {
        return g.has_edge(at, 0);
    }
    for &w in g.neighbors(at) {
        if visited[w] {
            continue;
        }
        visited[w] = true;
        if extend(g, w, count + 1, visited) {
            return true;
        }
        visited[w] = false;
    }
    false
}
