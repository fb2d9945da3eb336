//! Distance- and degree-based topological indices: Wiener (W), hyper-Wiener
//! (WW), forgotten (F), first Zagreb (M1) and Narumi-Katayama (NK).

mod families;

pub use families::{
    closed_form_audit, family_closed_form, AuditRow, FamilyClosedForm, IndexKind, Parity,
};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use serde::ser::{Error as _, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// All-pairs shortest-path lengths of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    dist: Vec<usize>,
}

impl DistanceTable {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.n + v]
    }

    /// `d(v) = Σ_u d(v, u)`.
    pub fn transmission(&self, v: usize) -> u64 {
        self.row(v).map(|d| d as u64).sum()
    }

    /// `d²(v) = Σ_u d(v, u)²`.
    pub fn squared_transmission(&self, v: usize) -> u64 {
        self.row(v).map(|d| (d * d) as u64).sum()
    }

    fn row(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.dist[v * self.n..(v + 1) * self.n].iter().copied()
    }

    fn pairs(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).map(move |v| self.get(u, v)))
    }

    pub fn wiener(&self) -> u64 {
        self.pairs().map(|d| d as u64).sum()
    }

    pub fn hyper_wiener(&self) -> BigRational {
        let w = self.wiener();
        let sq: u64 = self.pairs().map(|d| (d * d) as u64).sum();
        BigRational::new((w + sq).into(), 2.into())
    }

    pub fn diameter(&self) -> usize {
        self.dist.iter().copied().max().unwrap_or(0)
    }
}

pub fn distance_table(g: &Graph) -> Result<DistanceTable> {
    let n = g.order();
    let mut dist = Vec::with_capacity(n * n);
    for u in 0..n {
        for (v, d) in g.bfs_distances(u).into_iter().enumerate() {
            dist.push(d.ok_or(Error::Disconnected { u, v })?);
        }
    }
    Ok(DistanceTable { n, dist })
}

pub fn wiener(g: &Graph) -> Result<u64> {
    Ok(distance_table(g)?.wiener())
}

pub fn hyper_wiener(g: &Graph) -> Result<BigRational> {
    Ok(distance_table(g)?.hyper_wiener())
}

pub fn forgotten(g: &Graph) -> u64 {
    g.degrees().iter().map(|&d| (d * d * d) as u64).sum()
}

pub fn first_zagreb(g: &Graph) -> u64 {
    g.degrees().iter().map(|&d| (d * d) as u64).sum()
}

/// Product of all degrees; 0 when some vertex is isolated.
pub fn narumi_katayama(g: &Graph) -> BigUint {
    g.degrees().iter().map(|&d| BigUint::from(d)).product()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexReport {
    pub w: u64,
    pub ww: BigRational,
    pub f: u64,
    pub m1: u64,
    pub nk: BigUint,
}

impl IndexReport {
    /// Violated sanity inequalities, by name.
    pub fn sanity_violations(&self, g: &Graph) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.w < g.size() as u64 {
            out.push("W >= m");
        }
        if self.ww < BigRational::from_integer(self.w.into()) {
            out.push("WW >= W");
        }
        let min_deg = g.degrees().into_iter().min().unwrap_or(0);
        if min_deg >= 1 {
            if self.f < self.m1 {
                out.push("F >= M1");
            }
            if self.nk < BigUint::one() {
                out.push("NK >= 1");
            }
        }
        out
    }
}

impl Serialize for IndexReport {
    /// `{"W":343,"WW":"1032","F":150,"M1":66,"NK":36864}`; NK is an unbounded
    /// integer written as a bare JSON number.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let nk = serde_json::value::RawValue::from_string(self.nk.to_string()).map_err(S::Error::custom)?;
        let mut st = s.serialize_struct("IndexReport", 5)?;
        st.serialize_field("W", &self.w)?;
        st.serialize_field("WW", &self.ww.to_string())?;
        st.serialize_field("F", &self.f)?;
        st.serialize_field("M1", &self.m1)?;
        st.serialize_field("NK", &nk)?;
        st.end()
    }
}

pub fn index_report(g: &Graph) -> Result<IndexReport> {
    Ok(report_from(g, &distance_table(g)?))
}

fn report_from(g: &Graph, table: &DistanceTable) -> IndexReport {
    IndexReport {
        w: table.wiener(),
        ww: table.hyper_wiener(),
        f: forgotten(g),
        m1: first_zagreb(g),
        nk: narumi_katayama(g),
    }
}

/// What the composition formulas need to know about one side of a vertex merge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentData {
    pub order: usize,
    pub indices: IndexReport,
    pub transmission: u64,
    pub squared_transmission: u64,
    pub degree: usize,
    /// Product of the degrees of every other vertex.
    pub degree_product_rest: BigUint,
}

pub fn component_data(g: &Graph, v: usize) -> Result<ComponentData> {
    g.check_vertex(v)?;
    let table = distance_table(g)?;
    Ok(ComponentData {
        order: g.order(),
        indices: report_from(g, &table),
        transmission: table.transmission(v),
        squared_transmission: table.squared_transmission(v),
        degree: g.degree(v),
        degree_product_rest: (0..g.order())
            .filter(|&u| u != v)
            .map(|u| BigUint::from(g.degree(u)))
            .product(),
    })
}

/// Indices of `G1 ∘1 G2` from the data of the two sides alone.
pub fn compose(a: &ComponentData, b: &ComponentData) -> IndexReport {
    let (n1, n2) = (a.order as u64 - 1, b.order as u64 - 1);
    let (d1, d2) = (a.transmission, b.transmission);
    let (s1, s2) = (a.squared_transmission, b.squared_transmission);
    let (x, y) = (a.degree as u64, b.degree as u64);

    let w = a.indices.w + b.indices.w + n2 * d1 + n1 * d2;
    let cross = n2 * (d1 + s1) + n1 * (d2 + s2) + 2 * d1 * d2;
    let ww = &a.indices.ww + &b.indices.ww + BigRational::new(cross.into(), 2.into());
    let f = a.indices.f + b.indices.f + 3 * x * y * (x + y);
    let m1 = a.indices.m1 + b.indices.m1 + 2 * x * y;
    let nk = &a.degree_product_rest * &b.degree_product_rest * BigUint::from(x + y);
    IndexReport { w, ww, f, m1, nk }
}

/// Indices of the vertex coalescence merging `v1` of `g1` with `v2` of `g2`.
pub fn vertex_composition(g1: &Graph, v1: usize, g2: &Graph, v2: usize) -> Result<IndexReport> {
    Ok(compose(&component_data(g1, v1)?, &component_data(g2, v2)?))
}
