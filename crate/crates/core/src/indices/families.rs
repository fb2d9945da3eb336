//! Closed-form index values for the named coalescence families, and an audit
//! comparing them with brute force.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::{index_report, IndexReport};
use crate::coalescence::{build_family, CoalescenceFamily};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verify::{RowStatus, VerificationRow};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum IndexKind {
    W,
    WW,
    F,
    M1,
    NK,
}

impl IndexKind {
    pub const ALL: [IndexKind; 5] = [IndexKind::W, IndexKind::WW, IndexKind::F, IndexKind::M1, IndexKind::NK];

    pub fn name(self) -> &'static str {
        match self {
            IndexKind::W => "W",
            IndexKind::WW => "WW",
            IndexKind::F => "F",
            IndexKind::M1 => "M1",
            IndexKind::NK => "NK",
        }
    }

    pub fn of(self, r: &IndexReport) -> BigRational {
        let int = |v: u64| BigRational::from_integer(v.into());
        match self {
            IndexKind::W => int(r.w),
            IndexKind::WW => r.ww.clone(),
            IndexKind::F => int(r.f),
            IndexKind::M1 => int(r.m1),
            IndexKind::NK => BigRational::from_integer(BigInt::from(r.nk.clone())),
        }
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IndexKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        IndexKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::ParamOutOfRange(format!("unknown index `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    fn of(m: usize) -> Self {
        if m % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// A closed form evaluated term by term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyClosedForm {
    pub value: BigRational,
    pub terms: Vec<BigRational>,
    pub labels: Vec<&'static str>,
    /// Branch taken for formulas that split on the parity of the cycle length.
    pub branch: Option<Parity>,
}

fn fr(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

fn pow2(e: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(2).pow(e))
}

fn out_of_range(kind: CoalescenceFamily, why: &str) -> Error {
    Error::ParamOutOfRange(format!("{kind:?}: {why}"))
}

/// Literal evaluation of the printed closed form for `which` on `kind`.
pub fn family_closed_form(kind: CoalescenceFamily, which: IndexKind) -> Result<FamilyClosedForm> {
    // Same parameter constraints as the construction itself.
    build_family(kind).map_err(|e| out_of_range(kind, &e.to_string()))?;
    let three = |a: BigRational, b: BigRational, c: BigRational, head: &'static str| {
        (vec![a, b, c], vec![head, "path term", "cross term"])
    };
    let single = |v: BigRational| (vec![v], vec!["formula"]);

    let (branch, (terms, labels)) = match kind {
        CoalescenceFamily::Lollipop { m, n } => {
            let parity = Parity::of(m);
            let (m, n) = (m as i64, n as i64);
            let even = parity == Parity::Even;
            let t = match which {
                IndexKind::W => {
                    let path = fr(n * (n * n - 1), 6);
                    if even {
                        three(fr(m * m * m, 8), path, fr((n - 1) * (m * m + 2 * n * (m - 1)), 4), "cycle term")
                    } else {
                        three(
                            fr(m * (m * m - 1), 8),
                            path,
                            fr((n - 1) * (m - 1) * (m + 1 + 2 * n), 4),
                            "cycle term",
                        )
                    }
                }
                IndexKind::WW => {
                    let path = fr(n.pow(4) + 2 * n.pow(3) - n * n - 2 * n, 24);
                    if even {
                        three(
                            fr(m * m * (m + 1) * (m + 2), 48),
                            path,
                            fr(
                                (n - 1) * (m * (m * m + 3 * m + 2) + 4 * n * (m - 1) * (n + 1) + 3 * m * m * n),
                                24,
                            ),
                            "cycle term",
                        )
                    } else {
                        three(
                            fr(m * (m * m - 1) * (m + 3), 48),
                            path,
                            fr(
                                (m - 1) * (n - 1) * ((m + 1) * (m + 3) + 4 * n * (n + 1) + 3 * n * (m + 1)),
                                24,
                            ),
                            "cycle term",
                        )
                    }
                }
                IndexKind::F => single(fr(8 * (m + n) + 4, 1)),
                IndexKind::M1 => single(fr(4 * (m + n) - 2, 1)),
                IndexKind::NK => single(fr(3, 1) * pow2((m + n - 3) as usize)),
            };
            let branch = matches!(which, IndexKind::W | IndexKind::WW).then_some(parity);
            (branch, t)
        }
        CoalescenceFamily::Dumbbell { l, m, n } => {
            if l != m {
                return Err(out_of_range(kind, "closed forms exist only for equal cycles"));
            }
            let parity = Parity::of(m);
            let (m, n) = (m as i64, n as i64);
            let even = parity == Parity::Even;
            let t = match which {
                IndexKind::W => {
                    let path = fr(n * (n * n - 1), 6);
                    if even {
                        three(
                            fr(m * m * m, 4),
                            path,
                            fr(
                                m * (m * m + 3 * m * n - 4 * m + 4) + n * (4 - 6 * m + 2 * m * n - 2 * n) - 2,
                                2,
                            ),
                            "cycle term",
                        )
                    } else {
                        three(
                            fr(m * (m * m - 1), 4),
                            path,
                            fr((m - 1) * (m * m - 3 * m + 3 * m * n - 3 * n + 4 * n * n), 2),
                            "cycle term",
                        )
                    }
                }
                IndexKind::WW => {
                    let path = fr(n.pow(4) + 2 * n.pow(3) - n * n - 2 * n, 24);
                    if even {
                        three(
                            fr(m * m * (m + 1) * (m + 2), 24),
                            path,
                            fr(
                                7 * m.pow(4) + 4 * m.pow(3) * (-5 + 7 * n) - 8 * n * (1 - 3 * n + 2 * n * n)
                                    + 4 * m * m * (2 - 12 * n + 9 * n * n)
                                    + 8 * m * (-2 + 5 * n - 6 * n * n + 2 * n.pow(3)),
                                48,
                            ),
                            "cycle term",
                        )
                    } else {
                        three(
                            fr(m * (m * m - 1) * (m + 3), 24),
                            path,
                            fr(
                                (m - 1)
                                    * (-3 + 7 * m.pow(3) - 16 * n - 12 * n * n + 16 * n.pow(3)
                                        + m * m * (-13 + 28 * n)
                                        + m * (-23 - 20 * n + 36 * n * n)),
                                48,
                            ),
                            "cycle term",
                        )
                    }
                }
                IndexKind::F => single(fr(8 * (2 * m + n) + 22, 1)),
                IndexKind::M1 => single(fr(4 * (2 * m + n) + 2, 1)),
                IndexKind::NK => single(fr(9, 1) * pow2((2 * m + n - 4) as usize)),
            };
            let branch = matches!(which, IndexKind::W | IndexKind::WW).then_some(parity);
            (branch, t)
        }
        CoalescenceFamily::Dandelion { m, n } => {
            if m < 2 || n < 2 {
                return Err(out_of_range(kind, "closed forms need m >= 2 and n >= 2"));
            }
            let (mu, m, n) = (m, m as i64, n as i64);
            let t = match which {
                IndexKind::W => three(
                    fr((n - 1) * (n - 1), 1),
                    fr(m * (m * m - 1), 6),
                    fr((n - 1) * (m - 1) * (m + 2), 2),
                    "star term",
                ),
                IndexKind::WW => three(
                    fr((n - 1) * (3 * n - 4), 2),
                    fr(m * (m + 2) * (m * m - 1), 24),
                    fr((n - 1) * (m - 1) * (m * m + 4 * m + 6), 6),
                    "star term",
                ),
                IndexKind::F => single(fr(n.pow(3) + n - 16 + 8 * m, 1)),
                IndexKind::M1 => single(fr(n * n + n - 8 + 4 * m, 1)),
                IndexKind::NK => single(fr(n, 1) * pow2(mu - 2)),
            };
            (None, t)
        }
        CoalescenceFamily::Kite { n, m } => {
            if m < 2 || n < 2 {
                return Err(out_of_range(kind, "closed forms need n >= 2 and m >= 2"));
            }
            let (mu, nu, m, n) = (m, n, m as i64, n as i64);
            let t = match which {
                IndexKind::W => three(
                    fr(n * (n - 1), 2),
                    fr(m * (m * m - 1), 6),
                    fr((n - 1) * (m - 1) * (m + 2), 2),
                    "clique term",
                ),
                IndexKind::WW => three(
                    fr((n - 1) * (n - 1), 2),
                    fr(m * (m + 2) * (m * m - 1), 24),
                    fr((n - 1) * (m - 1) * (m * m + 4 * m + 6), 6),
                    "clique term",
                ),
                IndexKind::F => single(fr(n * (n - 1) * ((n - 1) * (n - 1) + 3) - 14 + 8 * m, 1)),
                IndexKind::M1 => single(fr((n - 1) * (n * n - n + 2) + 4 * m - 6, 1)),
                IndexKind::NK => single(
                    fr(n, 1) * BigRational::from_integer(BigInt::from(n - 1).pow(nu - 1)) * pow2(mu - 2),
                ),
            };
            (None, t)
        }
    };
    Ok(FamilyClosedForm {
        value: terms.iter().sum(),
        terms,
        labels,
        branch,
    })
}

/// The index of each summand's subgraph, in the order of the closed form's terms.
fn brute_force_terms(kind: CoalescenceFamily, which: IndexKind, total: &BigRational) -> Result<Vec<BigRational>> {
    let of = |g: Graph| -> Result<BigRational> { Ok(which.of(&index_report(&g)?)) };
    let (head, path) = match kind {
        CoalescenceFamily::Lollipop { m, n } => (of(Graph::cycle(m)?)?, of(Graph::path(n)?)?),
        CoalescenceFamily::Dumbbell { m, n, .. } => (
            of(Graph::cycle(m)?)? * BigRational::from_integer(2.into()),
            of(Graph::path(n)?)?,
        ),
        CoalescenceFamily::Dandelion { m, n } => (of(Graph::star(n)?)?, of(Graph::path(m)?)?),
        CoalescenceFamily::Kite { n, m } => (of(Graph::complete(n)?)?, of(Graph::path(m)?)?),
    };
    let cross = total - &head - &path;
    Ok(vec![head, path, cross])
}

fn family_name(kind: CoalescenceFamily) -> String {
    match kind {
        CoalescenceFamily::Lollipop { m, n } => format!("lollipop(m={m},n={n})"),
        CoalescenceFamily::Dumbbell { l, m, n } => format!("dumbbell(l={l},m={m},n={n})"),
        CoalescenceFamily::Dandelion { m, n } => format!("dandelion(m={m},n={n})"),
        CoalescenceFamily::Kite { n, m } => format!("kite(n={n},m={m})"),
    }
}

fn ser_rational<S: Serializer>(v: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditRow {
    pub family: String,
    pub index: IndexKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branch: Option<Parity>,
    #[serde(serialize_with = "ser_rational")]
    pub closed_form: BigRational,
    #[serde(serialize_with = "ser_rational")]
    pub brute_force: BigRational,
    pub status: RowStatus,
    /// Labels of printed terms that disagree with their brute-force counterpart.
    pub divergent_terms: Vec<String>,
    /// Whether the brute-force value is an integer (checked for WW only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub integral: Option<bool>,
}

impl AuditRow {
    pub fn to_row(&self) -> VerificationRow {
        let mut notes = Vec::new();
        if let Some(b) = self.branch {
            notes.push(format!("branch {}", if b == Parity::Even { "even" } else { "odd" }));
        }
        if !self.divergent_terms.is_empty() {
            notes.push(format!("divergent: {}", self.divergent_terms.join(", ")));
        }
        if self.integral == Some(false) {
            notes.push("non-integral WW".to_string());
        }
        let mut row = VerificationRow::compare(
            self.family.clone(),
            self.index.name(),
            &self.closed_form,
            &self.brute_force,
            self.status == RowStatus::Pass,
        );
        if !notes.is_empty() {
            row = row.with_note(notes.join("; "));
        }
        row
    }
}

fn audit_cell(kind: CoalescenceFamily, which: IndexKind) -> Result<AuditRow> {
    let closed = family_closed_form(kind, which)?;
    let g = build_family(kind)?.result;
    let brute = which.of(&index_report(&g)?);
    let divergent_terms = if closed.value == brute {
        Vec::new()
    } else if closed.terms.len() == 1 {
        vec![format!("formula: printed {}, brute force {brute}", closed.value)]
    } else {
        let expected = brute_force_terms(kind, which, &brute)?;
        closed
            .terms
            .iter()
            .zip(&expected)
            .zip(&closed.labels)
            .filter(|((p, e), _)| p != e)
            .map(|((p, e), label)| format!("{label}: printed {p}, brute force {e}"))
            .collect()
    };
    let integral = (which == IndexKind::WW).then(|| brute.denom().is_one());
    let ok = closed.value == brute && integral != Some(false);
    Ok(AuditRow {
        family: family_name(kind),
        index: which,
        branch: closed.branch,
        closed_form: closed.value,
        brute_force: brute,
        status: RowStatus::from_bool(ok),
        divergent_terms,
        integral,
    })
}

/// One row per (cell, index), in input order.
pub fn closed_form_audit(cells: &[CoalescenceFamily], which: &[IndexKind]) -> Result<Vec<AuditRow>> {
    let jobs: Vec<(CoalescenceFamily, IndexKind)> = cells
        .iter()
        .flat_map(|&c| which.iter().map(move |&w| (c, w)))
        .collect();
    jobs.into_par_iter().map(|(c, w)| audit_cell(c, w)).collect()
}
