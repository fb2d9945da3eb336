//! Vertex and edge connectivity through unit-capacity max-flow.

use std::collections::VecDeque;

use crate::graph::Graph;

/// Dense residual network; the graphs handled here are small.
struct Network {
    size: usize,
    cap: Vec<i64>,
}

impl Network {
    fn new(size: usize) -> Self {
        Network {
            size,
            cap: vec![0; size * size],
        }
    }

    fn add(&mut self, u: usize, v: usize, c: i64) {
        self.cap[u * self.size + v] += c;
    }

    /// Edmonds-Karp, stopping early once `bound` units are pushed.
    fn max_flow(mut self, s: usize, t: usize, bound: i64) -> i64 {
        let n = self.size;
        let mut flow = 0;
        let mut parent = vec![usize::MAX; n];
        while flow < bound {
            parent.fill(usize::MAX);
            parent[s] = s;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if u == t {
                    break;
                }
                for v in 0..n {
                    if parent[v] == usize::MAX && self.cap[u * n + v] > 0 {
                        parent[v] = u;
                        queue.push_back(v);
                    }
                }
            }
            if parent[t] == usize::MAX {
                break;
            }
            let mut push = i64::MAX;
            let mut v = t;
            while v != s {
                let u = parent[v];
                push = push.min(self.cap[u * n + v]);
                v = u;
            }
            let mut v = t;
            while v != s {
                let u = parent[v];
                self.cap[u * n + v] -= push;
                self.cap[v * n + u] += push;
                v = u;
            }
            flow += push;
        }
        flow.min(bound)
    }
}

/// Minimum number of edges whose removal disconnects `g`; 0 for n ≤ 1.
pub fn edge_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n <= 1 {
        return 0;
    }
    let mut best = g.degrees().into_iter().min().unwrap();
    for t in 1..n {
        let mut net = Network::new(n);
        for &(u, v) in g.edges() {
            net.add(u, v, 1);
            net.add(v, u, 1);
        }
        best = best.min(net.max_flow(0, t, best as i64) as usize);
        if best == 0 {
            break;
        }
    }
    best
}

/// Maximum number of internally vertex-disjoint `s`-`t` paths (`s`, `t` non-adjacent).
fn local_vertex_connectivity(g: &Graph, s: usize, t: usize, bound: usize) -> usize {
    let n = g.order();
    let big = n as i64 + 1;
    // Vertex v splits into in-node 2v and out-node 2v+1.
    let mut net = Network::new(2 * n);
    for v in 0..n {
        let c = if v == s || v == t { big } else { 1 };
        net.add(2 * v, 2 * v + 1, c);
    }
    for &(u, v) in g.edges() {
        net.add(2 * u + 1, 2 * v, big);
        net.add(2 * v + 1, 2 * u, big);
    }
    net.max_flow(2 * s + 1, 2 * t, bound as i64) as usize
}

/// Minimum number of vertices whose removal leaves a disconnected or trivial
/// graph. Complete graphs `K_n` get `n - 1`.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n <= 1 {
        return 0;
    }
    if !g.is_connected() {
        return 0;
    }
    let mut best = n - 1;
    // Some vertex among the first best+1 lies outside a minimum separator.
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if !g.has_edge(i, j) {
                best = best.min(local_vertex_connectivity(g, i, j, best));
            }
        }
        i += 1;
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalescence::{coalesce, CliqueSpec};

    #[test]
    fn families() {
        for n in 2..7 {
            let k = Graph::complete(n).unwrap();
            assert_eq!(vertex_connectivity(&k), n - 1);
            assert_eq!(edge_connectivity(&k), n - 1);
        }
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!((vertex_connectivity(&c6), edge_connectivity(&c6)), (2, 2));
        let p5 = Graph::path(5).unwrap();
        assert_eq!((vertex_connectivity(&p5), edge_connectivity(&p5)), (1, 1));
        let k1 = Graph::complete(1).unwrap();
        assert_eq!((vertex_connectivity(&k1), edge_connectivity(&k1)), (0, 0));
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!((vertex_connectivity(&split), edge_connectivity(&split)), (0, 0));
    }

    #[test]
    fn coalesced_complete_graphs() {
        let k4 = Graph::complete(4).unwrap();
        let g = coalesce(&k4, &CliqueSpec::new([0, 1]), &k4, &CliqueSpec::new([0, 1]))
            .unwrap()
            .result;
        assert_eq!(vertex_connectivity(&g), 2);
        assert_eq!(edge_connectivity(&g), 3);
    }

    #[test]
    fn vertex_and_edge_differ() {
        // Two triangles sharing a vertex: κ = 1 but λ = 2.
        let k3 = Graph::complete(3).unwrap();
        let bowtie = coalesce(&k3, &CliqueSpec::vertex(0), &k3, &CliqueSpec::vertex(0))
            .unwrap()
            .result;
        assert_eq!(vertex_connectivity(&bowtie), 1);
        assert_eq!(edge_connectivity(&bowtie), 2);
    }
}
