//! Seeded random graphs for sweeps and property tests.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::coalescence::CliqueSpec;
use crate::error::Result;
use crate::graph::Graph;

/// Random connected graph: a random recursive tree plus each remaining pair
/// independently with probability `p`.
pub fn random_connected<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Result<Graph> {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.random_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(n, edges)
}

/// Random connected graph on `n >= k` vertices with a planted `k`-clique,
/// returned in random order.
pub fn random_with_clique<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    k: usize,
    p: f64,
) -> Result<(Graph, CliqueSpec)> {
    let base = random_connected(rng, n, p)?;
    let mut vertices: Vec<usize> = (0..n).collect();
    vertices.shuffle(rng);
    vertices.truncate(k);
    let mut edges = base.edges().to_vec();
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[..i] {
            edges.push((u.min(v), u.max(v)));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Ok((Graph::from_edges(n, edges)?, CliqueSpec::new(vertices)))
}
