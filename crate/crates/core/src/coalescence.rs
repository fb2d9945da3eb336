//! The k-coalescence `G1 ∘k G2`: identify a k-clique of one graph with a
//! k-clique of another, vertex by vertex.
//!
//! Result labeling is fixed: the merged clique occupies `0..k`, followed by
//! the remaining vertices of `G1` in their original order, then those of `G2`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Ordered list of clique vertices. Position `i` of the left spec is
/// identified with position `i` of the right spec.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CliqueSpec(pub Vec<usize>);

impl CliqueSpec {
    pub fn new(vertices: impl Into<Vec<usize>>) -> Self {
        CliqueSpec(vertices.into())
    }

    pub fn vertex(v: usize) -> Self {
        CliqueSpec(vec![v])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Checks that the spec names k ≥ 1 distinct vertices forming a clique of `host`.
    pub fn validate(&self, host: &Graph) -> Result<()> {
        if self.0.is_empty() {
            return Err(Error::EmptyClique);
        }
        for (i, &v) in self.0.iter().enumerate() {
            host.check_vertex(v)?;
            if self.0[..i].contains(&v) {
                return Err(Error::RepeatedVertex { vertex: v });
            }
        }
        if !host.is_clique(&self.0)? {
            return Err(Error::NotAClique {
                vertices: self.0.clone(),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoalescenceRecord {
    pub result: Graph,
    /// Indices of the merged clique in `result`; always `0..k`.
    pub merged: Vec<usize>,
    /// `left_map[v]` is the image of vertex `v` of `G1` in `result`.
    pub left_map: Vec<usize>,
    pub right_map: Vec<usize>,
}

impl CoalescenceRecord {
    pub fn k(&self) -> usize {
        self.merged.len()
    }
}

pub fn coalesce(g1: &Graph, q1: &CliqueSpec, g2: &Graph, q2: &CliqueSpec) -> Result<CoalescenceRecord> {
    if q1.len() != q2.len() {
        return Err(Error::SizeMismatch {
            left: q1.len(),
            right: q2.len(),
        });
    }
    q1.validate(g1)?;
    q2.validate(g2)?;
    let k = q1.len();

    let mut left_map = vec![usize::MAX; g1.order()];
    let mut right_map = vec![usize::MAX; g2.order()];
    for (i, (&a, &b)) in q1.0.iter().zip(&q2.0).enumerate() {
        left_map[a] = i;
        right_map[b] = i;
    }
    let mut next = k;
    for slot in left_map.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = next;
        next += 1;
    }
    for slot in right_map.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = next;
        next += 1;
    }

    let mut edges: Vec<(usize, usize)> = g1
        .edges()
        .iter()
        .map(|&(u, v)| (left_map[u], left_map[v]))
        .chain(g2.edges().iter().map(|&(u, v)| (right_map[u], right_map[v])))
        .map(|(u, v)| (u.min(v), u.max(v)))
        .collect();
    // Clique edges appear once from each side.
    edges.sort_unstable();
    edges.dedup();

    Ok(CoalescenceRecord {
        result: Graph::from_edges(next, edges)?,
        merged: (0..k).collect(),
        left_map,
        right_map,
    })
}

/// Named coalescence families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoalescenceFamily {
    /// `L(m, n-1)`: cycle `C_m` with a pendant vertex of `P_n` merged into it.
    Lollipop { m: usize, n: usize },
    /// `D_{l,m,n-3}`: cycle `C_l` merged with the free path end of `L(m, n-1)`.
    Dumbbell { l: usize, m: usize, n: usize },
    /// `D(m, n)`: star `S_n` merged at its center with a pendant vertex of `P_m`.
    Dandelion { m: usize, n: usize },
    /// `Ki_{n,m}`: complete graph `K_n` merged with a pendant vertex of `P_m`.
    Kite { n: usize, m: usize },
}

impl CoalescenceFamily {
    pub fn build(self) -> Result<CoalescenceRecord> {
        build_family(self)
    }

    pub fn order(self) -> usize {
        match self {
            CoalescenceFamily::Lollipop { m, n } => m + n - 1,
            CoalescenceFamily::Dumbbell { l, m, n } => l + m + n - 2,
            CoalescenceFamily::Dandelion { m, n } => m + n - 1,
            CoalescenceFamily::Kite { n, m } => n + m - 1,
        }
    }
}

fn require(what: &'static str, got: usize, min: usize) -> Result<()> {
    if got < min {
        Err(Error::OrderTooSmall { what, min, got })
    } else {
        Ok(())
    }
}

pub fn build_family(kind: CoalescenceFamily) -> Result<CoalescenceRecord> {
    let v0 = CliqueSpec::vertex(0);
    match kind {
        CoalescenceFamily::Lollipop { m, n } => {
            require("lollipop cycle", m, 3)?;
            require("lollipop path", n, 1)?;
            coalesce(&Graph::cycle(m)?, &v0, &Graph::path(n)?, &v0)
        }
        CoalescenceFamily::Dumbbell { l, m, n } => {
            require("dumbbell cycle", l, 3)?;
            require("dumbbell cycle", m, 3)?;
            require("dumbbell path", n, 2)?;
            let lollipop = build_family(CoalescenceFamily::Lollipop { m, n })?;
            let free_end = lollipop.right_map[n - 1];
            coalesce(
                &Graph::cycle(l)?,
                &v0,
                &lollipop.result,
                &CliqueSpec::vertex(free_end),
            )
        }
        CoalescenceFamily::Dandelion { m, n } => {
            require("dandelion path", m, 1)?;
            require("dandelion star", n, 1)?;
            coalesce(&Graph::star(n)?, &v0, &Graph::path(m)?, &v0)
        }
        CoalescenceFamily::Kite { n, m } => {
            require("kite clique", n, 1)?;
            require("kite path", m, 1)?;
            coalesce(&Graph::complete(n)?, &v0, &Graph::path(m)?, &v0)
        }
    }
}
