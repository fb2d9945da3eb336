//! The block decomposition of `Φ(A_α(G1 ∘k G2))` in terms of the parts,
//! its adjacency special case, and the lollipop recursion.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::Serialize;

use super::{aalpha_char_poly, aalpha_matrix, char_poly, Alpha, RationalPolynomial};
use crate::coalescence::{build_family, coalesce, CliqueSpec, CoalescenceFamily};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// How `A_α(G \ Q)` is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SubgraphConvention {
    /// Delete the rows and columns of `Q` from `A_α(G)`; degrees stay those of `G`.
    #[default]
    PrincipalSubmatrix,
    /// Take `A_α` of the induced subgraph `G − Q`, with degrees recomputed.
    InducedSubgraph,
}

impl SubgraphConvention {
    pub fn name(self) -> &'static str {
        match self {
            SubgraphConvention::PrincipalSubmatrix => "principal",
            SubgraphConvention::InducedSubgraph => "induced",
        }
    }
}

impl fmt::Display for SubgraphConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SubgraphConvention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "principal" => Ok(SubgraphConvention::PrincipalSubmatrix),
            "induced" => Ok(SubgraphConvention::InducedSubgraph),
            _ => Err(Error::ParamOutOfRange(format!(
                "unknown convention `{s}` (expected principal or induced)"
            ))),
        }
    }
}

fn complement_of(g: &Graph, q: &[usize]) -> Vec<usize> {
    (0..g.order()).filter(|v| !q.contains(v)).collect()
}

/// `Φ(A_α(G \ Q))` under the given convention; the empty matrix gives 1.
fn deleted_char_poly(
    g: &Graph,
    q: &[usize],
    alpha: &Alpha,
    convention: SubgraphConvention,
) -> Result<RationalPolynomial> {
    let keep = complement_of(g, q);
    if keep.is_empty() {
        return Ok(RationalPolynomial::one());
    }
    match convention {
        SubgraphConvention::PrincipalSubmatrix => {
            char_poly(&aalpha_matrix(g, alpha)?.principal_submatrix(&keep)?)
        }
        SubgraphConvention::InducedSubgraph => aalpha_char_poly(&g.induced(&keep)?, alpha),
    }
}

fn validate(g1: &Graph, q1: &CliqueSpec, g2: &Graph, q2: &CliqueSpec) -> Result<()> {
    if q1.len() != q2.len() {
        return Err(Error::SizeMismatch {
            left: q1.len(),
            right: q2.len(),
        });
    }
    q1.validate(g1)?;
    q2.validate(g2)
}

fn rat(v: usize) -> BigRational {
    BigRational::from_integer(v.into())
}

/// `Φ1·Φ(G2\Q) + Φ2·Φ(G1\Q) − Φ(G1\Q)·Φ(G2\Q)·bracket`.
fn combine(
    g1: &Graph,
    q1: &CliqueSpec,
    g2: &Graph,
    q2: &CliqueSpec,
    alpha: &Alpha,
    convention: SubgraphConvention,
    bracket: RationalPolynomial,
) -> Result<RationalPolynomial> {
    let p1 = aalpha_char_poly(g1, alpha)?;
    let p2 = aalpha_char_poly(g2, alpha)?;
    let r1 = deleted_char_poly(g1, q1.vertices(), alpha, convention)?;
    let r2 = deleted_char_poly(g2, q2.vertices(), alpha, convention)?;
    Ok(&(&(&p1 * &r2) + &(&p2 * &r1)) - &(&(&r1 * &r2) * &bracket))
}

/// Right-hand side of the decomposition with the default convention.
pub fn decomposition_rhs(
    g1: &Graph,
    q1: &CliqueSpec,
    g2: &Graph,
    q2: &CliqueSpec,
    alpha: &Alpha,
) -> Result<RationalPolynomial> {
    decomposition_rhs_with(g1, q1, g2, q2, alpha, SubgraphConvention::default())
}

pub fn decomposition_rhs_with(
    g1: &Graph,
    q1: &CliqueSpec,
    g2: &Graph,
    q2: &CliqueSpec,
    alpha: &Alpha,
    convention: SubgraphConvention,
) -> Result<RationalPolynomial> {
    validate(g1, q1, g2, q2)?;
    let k = q1.len();
    let a = alpha.value();
    let b = alpha.complement();
    let shifted_det = |g: &Graph, q: &CliqueSpec| -> BigRational {
        q.vertices()
            .iter()
            .map(|&v| rat(g.degree(v)) - rat(k - 1))
            .product()
    };
    // The merged block αD1 + αD2 − α(k−1)I + (1−α)A(K_k).
    let block = super::RationalMatrix::from_fn(k, k, |i, j| {
        if i == j {
            a * (rat(g1.degree(q1.0[i]) + g2.degree(q2.0[i])) - rat(k - 1))
        } else {
            b.clone()
        }
    });
    let constant = a * (shifted_det(g1, q1) + shifted_det(g2, q2));
    let bracket = &char_poly(&block)? + &RationalPolynomial::constant(constant);
    combine(g1, q1, g2, q2, alpha, convention, bracket)
}

/// `(λ − k + 1)(λ + 1)^(k−1)`, the characteristic polynomial of `A(K_k)`.
fn complete_adjacency_poly(k: usize) -> RationalPolynomial {
    let one = BigRational::from_integer(1.into());
    &RationalPolynomial::linear(rat(k) - &one)
        * &RationalPolynomial::linear(-one).pow(k - 1)
}

/// Adjacency (α = 0) form of the decomposition.
pub fn adjacency_corollary_rhs(
    g1: &Graph,
    q1: &CliqueSpec,
    g2: &Graph,
    q2: &CliqueSpec,
) -> Result<RationalPolynomial> {
    validate(g1, q1, g2, q2)?;
    combine(
        g1,
        q1,
        g2,
        q2,
        &Alpha::zero(),
        SubgraphConvention::default(),
        complete_adjacency_poly(q1.len()),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub k: usize,
    pub alpha: Alpha,
    pub convention: SubgraphConvention,
    pub lhs: RationalPolynomial,
    pub rhs: RationalPolynomial,
    pub equal: bool,
    /// Whether `n1 + n2 > 3k`.
    pub hypothesis_met: bool,
}

pub fn identity_check(
    g1: &Graph,
    q1: &CliqueSpec,
    g2: &Graph,
    q2: &CliqueSpec,
    alpha: &Alpha,
) -> Result<IdentityCheck> {
    identity_check_with(g1, q1, g2, q2, alpha, SubgraphConvention::default())
}

pub fn identity_check_with(
    g1: &Graph,
    q1: &CliqueSpec,
    g2: &Graph,
    q2: &CliqueSpec,
    alpha: &Alpha,
    convention: SubgraphConvention,
) -> Result<IdentityCheck> {
    let rhs = decomposition_rhs_with(g1, q1, g2, q2, alpha, convention)?;
    let merged = coalesce(g1, q1, g2, q2)?;
    let lhs = aalpha_char_poly(&merged.result, alpha)?;
    let k = q1.len();
    Ok(IdentityCheck {
        k,
        alpha: alpha.clone(),
        convention,
        equal: lhs == rhs,
        lhs,
        rhs,
        hypothesis_met: g1.order() + g2.order() > 3 * k,
    })
}

/// The lollipop recursion
/// `Φ(P_n)Φ(P_{m−1}) + Φ(C_m)Φ(P_{n−1}) − λΦ(P_{n−1})Φ(P_{m−1})`.
pub fn lollipop_recursion(m: usize, n: usize, alpha: &Alpha) -> Result<RationalPolynomial> {
    lollipop_recursion_with(m, n, alpha, SubgraphConvention::default())
}

/// As [`lollipop_recursion`]; under the principal convention `P_{m−1}` and
/// `P_{n−1}` are the blocks left after deleting the merge vertex from
/// `A_α(C_m)` and `A_α(P_n)`, otherwise they are plain paths.
pub fn lollipop_recursion_with(
    m: usize,
    n: usize,
    alpha: &Alpha,
    convention: SubgraphConvention,
) -> Result<RationalPolynomial> {
    if m < 3 || n < 2 {
        return Err(Error::ParamOutOfRange(format!(
            "lollipop recursion needs m >= 3 and n >= 2, got m={m} n={n}"
        )));
    }
    let cycle = Graph::cycle(m)?;
    let path = Graph::path(n)?;
    let v0 = [0usize];
    let pc = aalpha_char_poly(&cycle, alpha)?;
    let pp = aalpha_char_poly(&path, alpha)?;
    let rc = deleted_char_poly(&cycle, &v0, alpha, convention)?;
    let rp = deleted_char_poly(&path, &v0, alpha, convention)?;
    let lam = RationalPolynomial::lambda();
    Ok(&(&(&pp * &rc) + &(&pc * &rp)) - &(&(&rp * &rc) * &lam))
}

/// Direct `Φ(A_α(L(m, n−1)))` for comparison with the recursion.
pub fn lollipop_direct(m: usize, n: usize, alpha: &Alpha) -> Result<RationalPolynomial> {
    let rec = build_family(CoalescenceFamily::Lollipop { m, n })?;
    aalpha_char_poly(&rec.result, alpha)
}
