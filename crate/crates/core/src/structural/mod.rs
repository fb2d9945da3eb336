//! Structural invariants of graphs and the propositions predicting them for
//! a k-coalescence from the invariants of its two components.

mod flow;
mod search;

use std::fmt;

use serde::{Serialize, Serializer};

pub use flow::{edge_connectivity, vertex_connectivity};
pub use search::{chromatic_number, clique_number, has_hamiltonian_cycle, independence_number};

use crate::coalescence::{coalesce, CliqueSpec};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verify::VerificationRow;

/// Vertex budgets for the exponential searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Clique, independence and chromatic number.
    pub exact: usize,
    pub hamiltonian: usize,
}

pub const LIMIT_ENV: &str = "COALESCE_LIMIT";

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            exact: 30,
            hamiltonian: 20,
        }
    }
}

impl SearchLimits {
    /// Defaults, with the exact budget overridden by `COALESCE_LIMIT` when set.
    pub fn from_env() -> Self {
        let mut limits = Self::default();
        if let Some(v) = std::env::var(LIMIT_ENV).ok().and_then(|s| s.trim().parse().ok()) {
            limits.exact = v;
        }
        limits
    }

    pub fn with_exact(mut self, exact: usize) -> Self {
        self.exact = exact;
        self
    }

    fn check(&self, invariant: &'static str, g: &Graph) -> Result<()> {
        let limit = self.exact.min(64);
        if g.order() > limit {
            Err(Error::BudgetExceeded {
                invariant,
                n: g.order(),
                limit,
            })
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            Girth::Infinite => s.serialize_str("infinite"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Hamiltonicity {
    Yes,
    No,
    /// Order above the search limit.
    Unknown,
}

impl Hamiltonicity {
    pub fn known(self) -> Option<bool> {
        match self {
            Hamiltonicity::Yes => Some(true),
            Hamiltonicity::No => Some(false),
            Hamiltonicity::Unknown => None,
        }
    }
}

impl From<bool> for Hamiltonicity {
    fn from(b: bool) -> Self {
        if b {
            Hamiltonicity::Yes
        } else {
            Hamiltonicity::No
        }
    }
}

impl fmt::Display for Hamiltonicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Hamiltonicity::Yes => "true",
            Hamiltonicity::No => "false",
            Hamiltonicity::Unknown => "unknown",
        })
    }
}

/// Shortest cycle length via one BFS per root.
pub fn girth(g: &Graph) -> Girth {
    let n = g.order();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for root in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[root] = 0;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] >= best {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// Connected apart from isolated vertices, with every degree even.
pub fn is_eulerian(g: &Graph) -> bool {
    if g.degrees().iter().any(|d| d % 2 == 1) {
        return false;
    }
    let Some(start) = (0..g.order()).find(|&v| g.degree(v) > 0) else {
        return true;
    };
    let dist = g.bfs_distances(start);
    (0..g.order()).all(|v| g.degree(v) == 0 || dist[v].is_some())
}

pub fn hamiltonicity(g: &Graph, limit: usize) -> Hamiltonicity {
    if g.order() > limit {
        Hamiltonicity::Unknown
    } else {
        has_hamiltonian_cycle(g).into()
    }
}

/// The NP-hard invariants plus the two connectivities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExactInvariants {
    pub clique_number: usize,
    pub vertex_connectivity: usize,
    pub edge_connectivity: usize,
    pub independence_number: usize,
    pub chromatic_number: usize,
}

pub fn exact_invariants(g: &Graph, limits: SearchLimits) -> Result<ExactInvariants> {
    limits.check("clique number", g)?;
    limits.check("independence number", g)?;
    limits.check("chromatic number", g)?;
    Ok(ExactInvariants {
        clique_number: clique_number(g),
        vertex_connectivity: vertex_connectivity(g),
        edge_connectivity: edge_connectivity(g),
        independence_number: independence_number(g),
        chromatic_number: chromatic_number(g),
    })
}

/// Everything the structural propositions talk about, for one graph.
/// Search-bound fields are `None` when the graph exceeds the exact budget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub order: usize,
    pub size: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub regularity: Option<usize>,
    pub girth: Girth,
    pub clique_number: Option<usize>,
    pub vertex_connectivity: usize,
    pub edge_connectivity: usize,
    pub eulerian: bool,
    pub hamiltonian: Hamiltonicity,
    pub independence_number: Option<usize>,
    pub chromatic_number: Option<usize>,
}

pub fn analyze(g: &Graph, limits: SearchLimits) -> Result<StructureReport> {
    let profile = g.degree_profile()?;
    let within = limits.check("exact search", g).is_ok();
    Ok(StructureReport {
        order: g.order(),
        size: g.size(),
        max_degree: profile.max,
        min_degree: profile.min,
        regularity: g.regularity(),
        girth: girth(g),
        clique_number: within.then(|| clique_number(g)),
        vertex_connectivity: vertex_connectivity(g),
        edge_connectivity: edge_connectivity(g),
        eulerian: is_eulerian(g),
        hamiltonian: hamiltonicity(g, limits.hamiltonian),
        independence_number: within.then(|| independence_number(g)),
        chromatic_number: within.then(|| chromatic_number(g)),
    })
}

impl StructureReport {
    /// Violations of κ ≤ λ ≤ δ, ω ≤ χ ≤ Δ + 1 and β₀·χ ≥ n.
    pub fn sanity_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.vertex_connectivity > self.edge_connectivity {
            out.push("vertex connectivity exceeds edge connectivity".into());
        }
        if self.edge_connectivity > self.min_degree {
            out.push("edge connectivity exceeds minimum degree".into());
        }
        if let (Some(w), Some(x)) = (self.clique_number, self.chromatic_number) {
            if w > x {
                out.push("clique number exceeds chromatic number".into());
            }
            if x > self.max_degree + 1 {
                out.push("chromatic number exceeds max degree + 1".into());
            }
        }
        if let (Some(b), Some(x)) = (self.independence_number, self.chromatic_number) {
            if b * x < self.order {
                out.push("independence number below n / chromatic number".into());
            }
        }
        out
    }
}

/// Values the structural propositions predict for `G1 ∘k G2`. A slot is
/// `None` when its proposition's hypotheses do not hold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoalescencePrediction {
    pub k: usize,
    /// Both components regular.
    pub max_degree: Option<usize>,
    pub min_degree: Option<usize>,
    pub girth: Girth,
    pub clique_number: Option<usize>,
    /// Requires a proper coalescence (k below both orders).
    pub vertex_connectivity: Option<usize>,
    pub edge_connectivity: Option<usize>,
    /// Both components Eulerian.
    pub eulerian: Option<bool>,
    pub hamiltonian: Option<bool>,
    pub independence_bounds: Option<(usize, usize)>,
    pub chromatic_number: Option<usize>,
}

/// Evaluates every structural proposition whose hypotheses hold.
pub fn predict(c1: &StructureReport, c2: &StructureReport, k: usize) -> CoalescencePrediction {
    let (n1, n2) = (c1.order, c2.order);
    let proper = k < n1 && k < n2;
    let regular = c1.regularity.zip(c2.regularity);

    let max_degree = regular.map(|(r1, r2)| r1 + r2 + 1 - k);
    let min_degree = regular.map(|(r1, r2)| {
        if k == n1 || k == n2 {
            r1.max(r2)
        } else {
            r1.min(r2)
        }
    });
    let girth = if k >= 3 {
        Girth::Finite(3)
    } else {
        c1.girth.min(c2.girth)
    };
    let clique_number = c1.clique_number.zip(c2.clique_number).map(|(a, b)| a.max(b));
    let vertex_connectivity =
        proper.then(|| c1.vertex_connectivity.min(c2.vertex_connectivity).min(k));
    let edge_connectivity = proper.then(|| c1.edge_connectivity.min(c2.edge_connectivity));
    let eulerian = (c1.eulerian && c2.eulerian).then_some(k % 2 == 1);
    let hamiltonian = if k == 1 {
        (n1 >= 2 && n2 >= 2).then_some(false)
    } else if proper {
        c1.hamiltonian
            .known()
            .zip(c2.hamiltonian.known())
            .map(|(a, b)| a && b)
    } else {
        None
    };
    let independence_bounds = c1
        .independence_number
        .zip(c2.independence_number)
        .map(|(a, b)| ((a + b).saturating_sub(2), a + b));
    let chromatic_number = c1
        .chromatic_number
        .zip(c2.chromatic_number)
        .map(|(a, b)| k + a.saturating_sub(k).max(b.saturating_sub(k)));

    CoalescencePrediction {
        k,
        max_degree,
        min_degree,
        girth,
        clique_number,
        vertex_connectivity,
        edge_connectivity,
        eulerian,
        hamiltonian,
        independence_bounds,
        chromatic_number,
    }
}

/// Coalesces, predicts from the components, measures the result, and
/// emits one row per applicable proposition.
pub fn check_propositions(
    g1: &Graph,
    q1: &CliqueSpec,
    g2: &Graph,
    q2: &CliqueSpec,
    limits: SearchLimits,
) -> Result<Vec<VerificationRow>> {
    let record = coalesce(g1, q1, g2, q2)?;
    let k = record.k();
    let c1 = analyze(g1, limits)?;
    let c2 = analyze(g2, limits)?;
    let measured = analyze(&record.result, limits)?;
    let p = predict(&c1, &c2, k);
    let subject = format!("k={k} n1={} n2={}", c1.order, c2.order);
    let mut rows = Vec::new();
    let mut eq_row = |check: &str, pred: Option<String>, meas: Option<String>| {
        if let Some(pred) = pred {
            rows.push(match meas {
                Some(meas) => {
                    let ok = pred == meas;
                    VerificationRow::compare(&subject, check, pred, meas, ok)
                }
                None => VerificationRow::skipped(&subject, check, "exact search budget exceeded"),
            });
        }
    };

    eq_row("max degree", p.max_degree.map(|v| v.to_string()), Some(measured.max_degree.to_string()));
    eq_row("min degree", p.min_degree.map(|v| v.to_string()), Some(measured.min_degree.to_string()));
    eq_row("girth", Some(p.girth.to_string()), Some(measured.girth.to_string()));
    eq_row(
        "clique number",
        p.clique_number.map(|v| v.to_string()),
        measured.clique_number.map(|v| v.to_string()),
    );
    eq_row(
        "vertex connectivity",
        p.vertex_connectivity.map(|v| v.to_string()),
        Some(measured.vertex_connectivity.to_string()),
    );
    eq_row(
        "edge connectivity",
        p.edge_connectivity.map(|v| v.to_string()),
        Some(measured.edge_connectivity.to_string()),
    );
    eq_row("eulerian parity", p.eulerian.map(|v| v.to_string()), Some(measured.eulerian.to_string()));
    eq_row(
        "hamiltonicity",
        p.hamiltonian.map(|v| v.to_string()),
        measured.hamiltonian.known().map(|v| v.to_string()),
    );
    eq_row(
        "chromatic number",
        p.chromatic_number.map(|v| v.to_string()),
        measured.chromatic_number.map(|v| v.to_string()),
    );

    if let Some((lo, hi)) = p.independence_bounds {
        rows.push(match measured.independence_number {
            Some(b) => VerificationRow::compare(
                &subject,
                "independence bounds",
                format!("[{lo}, {hi}]"),
                b,
                lo <= b && b <= hi,
            ),
            None => VerificationRow::skipped(&subject, "independence bounds", "exact search budget exceeded"),
        });
    }
    Ok(rows)
}

/// All `k`-cliques of `g` as sorted vertex lists, in lexicographic order.
pub fn cliques_of_size(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    fn grow(g: &Graph, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..g.order() {
            if cur.iter().all(|&u| g.has_edge(u, v)) {
                cur.push(v);
                grow(g, k, v + 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if k > 0 {
        grow(g, k, 0, &mut Vec::new(), &mut out);
    }
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// One coalescence in a sweep.
#[derive(Debug, Clone)]
pub struct SweepCase {
    pub label: String,
    pub g1: Graph,
    pub q1: CliqueSpec,
    pub g2: Graph,
    pub q2: CliqueSpec,
}

/// Every unordered pair of named graphs (a graph may pair with itself),
/// every `k`-clique of the first in sorted order, and every ordering of every
/// `k`-clique of the second.
pub fn sweep_cases(graphs: &[(String, Graph)], ks: &[usize]) -> Vec<SweepCase> {
    let mut out = Vec::new();
    for &k in ks {
        for (i, (name1, g1)) in graphs.iter().enumerate() {
            let c1 = cliques_of_size(g1, k);
            for (name2, g2) in &graphs[i..] {
                let c2 = cliques_of_size(g2, k);
                for q1 in &c1 {
                    for base in &c2 {
                        for q2 in permutations(base) {
                            out.push(SweepCase {
                                label: format!("{name1}{q1:?} o{k} {name2}{q2:?}"),
                                g1: g1.clone(),
                                q1: CliqueSpec::new(q1.clone()),
                                g2: g2.clone(),
                                q2: CliqueSpec::new(q2),
                            });
                        }
                    }
                }
            }
        }
    }
    out
}

/// Runs [`check_propositions`] on every case in parallel; rows keep case order.
pub fn run_sweep(cases: &[SweepCase], limits: SearchLimits) -> Result<Vec<VerificationRow>> {
    use rayon::prelude::*;
    let per_case: Vec<Vec<VerificationRow>> = cases
        .par_iter()
        .map(|c| {
            let mut rows = check_propositions(&c.g1, &c.q1, &c.g2, &c.q2, limits)?;
            for row in &mut rows {
                row.subject = c.label.clone();
            }
            Ok(rows)
        })
        .collect::<Result<_>>()?;
    Ok(per_case.into_iter().flatten().collect())
}
