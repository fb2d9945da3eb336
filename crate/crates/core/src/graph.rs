//! Simple undirected graphs on contiguous vertex labels `0..n`.
//!
//! A [`Graph`] is immutable once built. Edges are kept in canonical form
//! `(u, v)` with `u < v`, sorted, which makes the edge-list serialization
//! deterministic.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Line, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Self> {
        Graph::from_edges(raw.n, raw.edges)
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph {
            n: g.n,
            edges: g.edges,
        }
    }
}

/// The named families every other construction starts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyKind {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    /// Star on `n` vertices: center 0 plus `n - 1` leaves.
    Star(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub max: usize,
    pub min: usize,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicates and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::build(n, edges.into_iter().map(|e| (e, None)))
    }

    fn build<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), Option<usize>)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut canon = Vec::new();
        for ((a, b), line) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(match line {
                        Some(line) => Error::Parse {
                            line,
                            message: format!("vertex {v} out of range for n = {n}"),
                        },
                        None => Error::InvalidVertex { vertex: v, n },
                    });
                }
            }
            if a == b {
                return Err(Error::SelfLoop {
                    line: Line(line),
                    v: a,
                });
            }
            let (u, v) = (a.min(b), a.max(b));
            canon.push(((u, v), line));
        }
        canon.sort_unstable();
        for pair in canon.windows(2) {
            if pair[0].0 == pair[1].0 {
                let (u, v) = pair[1].0;
                let line = pair[0].1.max(pair[1].1);
                return Err(Error::DuplicateEdge {
                    line: Line(line),
                    u,
                    v,
                });
            }
        }
        let edges: Vec<_> = canon.into_iter().map(|(e, _)| e).collect();
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Canonical labeled member of a named family.
    pub fn generate(kind: FamilyKind) -> Result<Self> {
        let edges: Vec<(usize, usize)> = match kind {
            FamilyKind::Complete(n) => {
                check_order("complete graph", n, 1)?;
                (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .collect()
            }
            FamilyKind::Cycle(n) => {
                check_order("cycle", n, 3)?;
                (0..n).map(|u| (u, (u + 1) % n)).collect()
            }
            FamilyKind::Path(n) => {
                check_order("path", n, 1)?;
                (1..n).map(|u| (u - 1, u)).collect()
            }
            FamilyKind::Star(n) => {
                check_order("star", n, 1)?;
                (1..n).map(|u| (0, u)).collect()
            }
        };
        let n = match kind {
            FamilyKind::Complete(n)
            | FamilyKind::Cycle(n)
            | FamilyKind::Path(n)
            | FamilyKind::Star(n) => n,
        };
        Self::from_edges(n, edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::generate(FamilyKind::Complete(n))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        Self::generate(FamilyKind::Cycle(n))
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::generate(FamilyKind::Path(n))
    }

    pub fn star(n: usize) -> Result<Self> {
        Self::generate(FamilyKind::Star(n))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// True iff every pair of listed vertices is adjacent. Empty and
    /// singleton lists are cliques.
    pub fn is_clique(&self, vertices: &[usize]) -> Result<bool> {
        for &v in vertices {
            self.check_vertex(v)?;
        }
        Ok(vertices.iter().enumerate().all(|(i, &u)| {
            vertices[i + 1..]
                .iter()
                .all(|&v| u != v && self.has_edge(u, v))
        }))
    }

    pub fn degree_profile(&self) -> Result<DegreeProfile> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let degrees = self.degrees();
        let max = *degrees.iter().max().unwrap();
        let min = *degrees.iter().min().unwrap();
        Ok(DegreeProfile { degrees, max, min })
    }

    /// Common degree if the graph is regular.
    pub fn regularity(&self) -> Option<usize> {
        let first = self.adj.first()?.len();
        self.adj.iter().all(|a| a.len() == first).then_some(first)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Subgraph induced on `keep` (in the given order), relabeled to `0..keep.len()`.
    pub fn induced(&self, keep: &[usize]) -> Result<Graph> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            self.check_vertex(v)?;
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        Self::from_edges(keep.len(), edges)
    }

    /// Graph with the listed vertices deleted; survivors keep their relative order.
    pub fn without(&self, removed: &[usize]) -> Result<Graph> {
        for &v in removed {
            self.check_vertex(v)?;
        }
        let keep: Vec<usize> = (0..self.n).filter(|v| !removed.contains(v)).collect();
        self.induced(&keep)
    }

    pub fn complement(&self) -> Graph {
        let edges = (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.has_edge(u, v));
        Self::from_edges(self.n, edges).expect("complement of a simple graph is simple")
    }

    /// Adjacency rows as bitmasks; only valid for `n <= 64`.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        debug_assert!(self.n <= 64);
        self.adj
            .iter()
            .map(|list| list.iter().fold(0u64, |m, &v| m | (1 << v)))
            .collect()
    }

    /// Edge-list document: `n m` header then one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing header line \"n m\"".into(),
        })?;
        let (n, m) = parse_pair(hline, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line, body) in lines.by_ref().take(m) {
            edges.push((parse_pair(line, body)?, Some(line)));
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: hline,
                message: format!("header announces {m} edges, found {}", edges.len()),
            });
        }
        if let Some((line, _)) = lines.next() {
            return Err(Error::Parse {
                line,
                message: format!("more than the {m} announced edge lines"),
            });
        }
        Self::build(n, edges)
    }
}

fn check_order(what: &'static str, got: usize, min: usize) -> Result<()> {
    if got < min {
        Err(Error::OrderTooSmall { what, min, got })
    } else {
        Ok(())
    }
}

fn parse_pair(line: usize, body: &str) -> Result<(usize, usize)> {
    let mut it = body.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::Parse {
            line,
            message: "expected two non-negative integers".into(),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line,
            message: format!("not a non-negative integer: {tok:?}"),
        })
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(Error::Parse {
            line,
            message: "trailing tokens".into(),
        });
    }
    Ok(pair)
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_edge_list(s)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}
