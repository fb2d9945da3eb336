//! Closed forms for `K_m ∘k K_n`: the characteristic polynomial, its
//! spectrum, and the energy corollaries evaluated exactly as printed.

use std::fmt;
use std::str::FromStr;

use nalgebra::Complex;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::{eigenvalues, format_eigenvalue, polynomial_roots, residual, Alpha, RationalPolynomial, SpectrumReport};
use crate::coalescence::{coalesce, CliqueSpec};
use crate::error::{Error, Result};
use crate::graph::Graph;

fn r(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(p.into(), d.into())
}

fn f(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// `λ + c`.
fn shift(c: BigRational) -> RationalPolynomial {
    RationalPolynomial::linear(-c)
}

fn check_params(m: usize, n: usize, k: usize) -> Result<()> {
    if m < 2 || n < 2 || k == 0 || k >= m.min(n) {
        return Err(Error::ParamOutOfRange(format!(
            "need m, n > 1 and 1 <= k < min(m, n), got m={m} n={n} k={k}"
        )));
    }
    Ok(())
}

/// The cubic bracket of the closed form.
fn general_cubic(m: i64, n: i64, k: i64, a: &BigRational) -> RationalPolynomial {
    let b = r(1) - a;
    let p1 = shift(r(1 - m) + &b * r(k));
    let p2 = shift(r(1 - n) + &b * r(k));
    let p3 = shift(-(a * r(m + n - 2 * k)) + r(1 - k));
    let s = r(m + n - 2 * k);
    let inner = RationalPolynomial::new(vec![
        -(&s * a * r(k)) - r((m - k) * (n - k - 1)) - r((n - k) * (m - k - 1)),
        s,
    ]);
    &(&(&p1 * &p2) * &p3) - &inner.scale(&(&b * &b * r(k)))
}

/// Characteristic polynomial of `A_α(K_m ∘k K_n)` as given by the closed form.
pub fn complete_closed_form(m: usize, n: usize, k: usize, alpha: &Alpha) -> Result<RationalPolynomial> {
    check_params(m, n, k)?;
    let (mi, ni, ki) = (m as i64, n as i64, k as i64);
    let a = alpha.value();
    let f1 = shift(r(1) - a * r(mi + ni - ki)).pow(k - 1);
    let f2 = shift(r(1) - a * r(mi)).pow(m - k - 1);
    let f3 = shift(r(1) - a * r(ni)).pow(n - k - 1);
    Ok(&(&(&f1 * &f2) * &f3) * &general_cubic(mi, ni, ki, a))
}

/// Which printed energy formula to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EnergyVariant {
    General,
    K1,
    K2,
    MmK,
    Mm1,
    Mm2,
}

impl EnergyVariant {
    pub const ALL: [EnergyVariant; 6] = [
        EnergyVariant::General,
        EnergyVariant::K1,
        EnergyVariant::K2,
        EnergyVariant::MmK,
        EnergyVariant::Mm1,
        EnergyVariant::Mm2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EnergyVariant::General => "general",
            EnergyVariant::K1 => "k1",
            EnergyVariant::K2 => "k2",
            EnergyVariant::MmK => "mm_k",
            EnergyVariant::Mm1 => "mm_1",
            EnergyVariant::Mm2 => "mm_2",
        }
    }

    /// Whether `(m, n, k)` is inside this variant's domain.
    pub fn applies(self, m: usize, n: usize, k: usize) -> bool {
        check_params(m, n, k).is_ok()
            && match self {
                EnergyVariant::General => true,
                EnergyVariant::K1 => k == 1,
                EnergyVariant::K2 => k == 2,
                EnergyVariant::MmK => m == n,
                EnergyVariant::Mm1 => m == n && k == 1,
                EnergyVariant::Mm2 => m == n && k == 2,
            }
    }
}

impl fmt::Display for EnergyVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EnergyVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        EnergyVariant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::ParamOutOfRange(format!("unknown energy variant `{s}`")))
    }
}

/// Printed cubic (or quadratic) whose roots enter the variant's energy.
pub fn printed_root_polynomial(
    variant: EnergyVariant,
    m: usize,
    n: usize,
    k: usize,
    alpha: &Alpha,
) -> Result<RationalPolynomial> {
    require_variant(variant, m, n, k)?;
    let (m, n, k) = (m as i64, n as i64, k as i64);
    let a = alpha.value();
    let b = r(1) - a;
    let b2 = &b * &b;
    let lam = RationalPolynomial::lambda();
    Ok(match variant {
        EnergyVariant::General => general_cubic(m, n, k, a),
        EnergyVariant::K1 => {
            let p1 = shift(r(2 - m) - a);
            let p2 = shift(r(2 - n) - a);
            let p3 = shift(-(a * r(m + n - 2)));
            let s = r(m + n - 2);
            let inner = RationalPolynomial::new(vec![
                -(&s * a) - r((m - 1) * (n - 2)) - r((m - 2) * (n - 1)),
                s,
            ]);
            &(&(&p1 * &p2) * &p3) - &inner.scale(&b2)
        }
        EnergyVariant::K2 => {
            let p1 = shift(r(3 - m) - a * r(2));
            let p2 = shift(r(3 - n) - a * r(2));
            let p3 = shift(-(a * r(m + n - 4)) - r(1));
            let s = r(m + n - 4);
            let inner = RationalPolynomial::new(vec![
                -(a * r(2) * &s) - r((m - 2) * (n - 3)) - r((m - 3) * (n - 2)),
                s,
            ]);
            &(&(&p1 * &p2) * &p3) - &inner.scale(&(b2 * r(2)))
        }
        EnergyVariant::MmK => {
            let p1 = shift(r(1 - m) + &b * r(k));
            let p3 = shift(-(a * r(2 * (m - k))) + r(1 - k));
            let inner = RationalPolynomial::new(vec![
                -(a * r(2 * k * (m - k))) - r(2 * (m - k) * (m - k - 1)),
                r(2 * m - k),
            ]);
            &(&p1.pow(2) * &p3) - &inner.scale(&(b2 * r(k)))
        }
        EnergyVariant::Mm1 => {
            let lin = r(m - 2) + a * r(2 * m - 1);
            let c0 = r(2 * (m - 1)) * (a * r(m) - r(1));
            &lam.pow(2) + &RationalPolynomial::new(vec![c0, -lin])
        }
        EnergyVariant::Mm2 => {
            let lin = r(m - 2) + a * r(2 * (m - 1));
            let c0 = a * r(2 * m * m) - r(m) * (a * r(2) + r(3)) - a * r(2) + r(5);
            &lam.pow(2) + &RationalPolynomial::new(vec![c0, -lin])
        }
    })
}

fn require_variant(variant: EnergyVariant, m: usize, n: usize, k: usize) -> Result<()> {
    check_params(m, n, k)?;
    if variant.applies(m, n, k) {
        Ok(())
    } else {
        Err(Error::ParamOutOfRange(format!(
            "variant {variant} does not apply to m={m} n={n} k={k}"
        )))
    }
}

/// Printed mean shift `X` of the variant.
fn printed_mean(variant: EnergyVariant, m: i64, n: i64, k: i64, a: &BigRational) -> BigRational {
    match variant {
        EnergyVariant::General => {
            a * q(m * m + n * n - k * k - (m + n - k), m + n - k)
        }
        EnergyVariant::MmK => a * q(2 * m * m - k * k - (2 * m - k), 2 * m - k),
        EnergyVariant::K1 => a * q(m * m + n * n - m - n, m + n - 1),
        EnergyVariant::Mm1 => a * q(2 * m * (m - 1), 2 * m - 1),
        EnergyVariant::K2 => a * q(m * (m - 1) + n * (n - 1) - 2, m + n - 2),
        EnergyVariant::Mm2 => a * q(m * (m - 1) - 1, m - 1),
    }
}

/// Intermediate quantities of a closed-form energy: the mean shift `X`,
/// the cubic or quadratic, and its roots.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormEnergyTerms {
    pub mean_shift: BigRational,
    pub root_polynomial: RationalPolynomial,
    pub roots: Vec<Complex<f64>>,
    /// Largest `|p(root)|`.
    pub max_residual: f64,
}

impl ClosedFormEnergyTerms {
    fn new(mean_shift: BigRational, root_polynomial: RationalPolynomial) -> Self {
        let roots = polynomial_roots(&root_polynomial);
        let max_residual = roots
            .iter()
            .map(|&z| residual(&root_polynomial, z))
            .fold(0.0, f64::max);
        ClosedFormEnergyTerms {
            mean_shift,
            root_polynomial,
            roots,
            max_residual,
        }
    }

    pub fn all_real(&self) -> bool {
        self.roots.iter().all(|z| z.im.abs() < 1e-9)
    }

    /// `Σ |root − X|`, using the modulus for complex roots.
    pub fn root_deviation(&self) -> f64 {
        let x = f(&self.mean_shift);
        self.roots.iter().map(|z| (z - x).norm()).sum()
    }
}

fn format_complex(z: &Complex<f64>) -> String {
    if z.im.abs() < 1e-9 {
        format_eigenvalue(z.re)
    } else {
        let sign = if z.im < 0.0 { "-" } else { "+" };
        format!("{}{sign}{}i", format_eigenvalue(z.re), format_eigenvalue(z.im.abs()))
    }
}

impl Serialize for ClosedFormEnergyTerms {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ClosedFormEnergyTerms", 4)?;
        st.serialize_field("mean_shift", &self.mean_shift.to_string())?;
        st.serialize_field("root_polynomial", &self.root_polynomial)?;
        let roots: Vec<String> = self.roots.iter().map(format_complex).collect();
        st.serialize_field("roots", &roots)?;
        st.serialize_field("max_residual", &format!("{:e}", self.max_residual))?;
        st.end()
    }
}

fn merged_complete(m: usize, n: usize, k: usize) -> Result<Graph> {
    let q = CliqueSpec::new((0..k).collect::<Vec<_>>());
    Ok(coalesce(&Graph::complete(m)?, &q, &Graph::complete(n)?, &q)?.result)
}

/// Exact mean `2αm/n` of `K_m ∘k K_n`.
fn true_mean(m: i64, n: i64, k: i64, a: &BigRational) -> BigRational {
    let edges = (m * (m - 1) + n * (n - 1) - k * (k - 1)) / 2;
    a * q(2 * edges, m + n - k)
}

/// Fixed eigenvalues `α(m+n−k)−1`, `αm−1`, `αn−1` with multiplicities.
fn fixed_eigenvalues(m: i64, n: i64, k: i64, a: &BigRational) -> [(BigRational, i64); 3] {
    [
        (a * r(m + n - k) - r(1), k - 1),
        (a * r(m) - r(1), m - k - 1),
        (a * r(n) - r(1), n - k - 1),
    ]
}

/// Spectrum of `A_α(K_m ∘k K_n)` assembled from the fixed eigenvalues and
/// the cubic roots.
pub fn complete_spectrum(
    m: usize,
    n: usize,
    k: usize,
    alpha: &Alpha,
) -> Result<(SpectrumReport, ClosedFormEnergyTerms)> {
    check_params(m, n, k)?;
    let (mi, ni, ki) = (m as i64, n as i64, k as i64);
    let a = alpha.value();
    let terms = ClosedFormEnergyTerms::new(
        printed_mean(EnergyVariant::General, mi, ni, ki, a),
        general_cubic(mi, ni, ki, a),
    );
    let mut vals = Vec::with_capacity(m + n - k);
    for (value, mult) in fixed_eigenvalues(mi, ni, ki, a) {
        vals.extend(std::iter::repeat_n(f(&value), mult as usize));
    }
    vals.extend(terms.roots.iter().map(|z| z.re));
    let shift = f(&true_mean(mi, ni, ki, a));
    Ok((SpectrumReport::from_eigenvalues(alpha.clone(), vals, shift), terms))
}

/// One summand of a closed-form energy next to the value implied by the spectrum.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnergyTerm {
    pub index: usize,
    pub label: String,
    pub printed: f64,
    pub expected: f64,
}

impl EnergyTerm {
    /// Off by more than 1e-9, or NaN on either side.
    pub fn diverges(&self) -> bool {
        let gap = (self.printed - self.expected).abs();
        gap.is_nan() || gap > 1e-9
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnergyCorollaryReport {
    pub variant: EnergyVariant,
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub alpha: Alpha,
    /// The printed formula, evaluated literally.
    pub value: f64,
    /// Energy of the numerically computed spectrum.
    pub direct: f64,
    pub matches_direct: bool,
    pub terms: Vec<EnergyTerm>,
    pub closed_form: ClosedFormEnergyTerms,
    /// Index of the first term that disagrees with its spectral counterpart.
    pub mismatch_location: Option<usize>,
}

/// Evaluates one printed energy corollary and compares it, term by term,
/// with the energy of the actual spectrum.
pub fn energy_corollary(
    m: usize,
    n: usize,
    k: usize,
    alpha: &Alpha,
    variant: EnergyVariant,
) -> Result<EnergyCorollaryReport> {
    require_variant(variant, m, n, k)?;
    let (mi, ni, ki) = (m as i64, n as i64, k as i64);
    let a = alpha.value();
    let one = r(1);
    let mean = true_mean(mi, ni, ki, a);
    let dev = |eig: BigRational, mult: i64| (eig - &mean).abs() * r(mult);

    // (label, printed, expected), all exact.
    let fixed: Vec<(&str, BigRational, BigRational)> = match variant {
        EnergyVariant::General => {
            let nn = mi + ni - ki;
            let [e0, e1, e2] = fixed_eigenvalues(mi, ni, ki, a);
            vec![
                (
                    "k-1 term",
                    r(ki - 1)
                        * (a * r(1 - 2 * ki) + a * q(2 * mi * ni, mi + ni - 1) - &one).abs(),
                    dev(e0.0, e0.1),
                ),
                (
                    "m-k-1 term",
                    r(mi - ki - 1)
                        * (a * r(1 - ki) + a * q(ni * (mi - ni + ki), nn) - &one).abs(),
                    dev(e1.0, e1.1),
                ),
                (
                    "n-k-1 term",
                    r(ni - ki - 1)
                        * (a * r(1 - ki) + a * q(mi * (ni - mi + ki), nn) - &one).abs(),
                    dev(e2.0, e2.1),
                ),
            ]
        }
        EnergyVariant::MmK => vec![
            (
                "k-1 term",
                r(ki - 1) * (a * r(1 - 2 * ki) + a * q(2 * mi * mi, 2 * mi - 1) - &one).abs(),
                dev(a * r(2 * mi - ki) - &one, ki - 1),
            ),
            (
                "2(m-k-1) term",
                r(2 * (mi - ki - 1))
                    * (a * r(1 - ki) + a * q(mi * ki, 2 * mi - ki) - &one).abs(),
                dev(a * r(mi) - &one, 2 * (mi - ki - 1)),
            ),
        ],
        EnergyVariant::K1 => {
            let s = mi + ni - 1;
            vec![
                (
                    "m-2 term",
                    q(mi - 2, s) * (a * r(ni * (mi - ni + 1)) - r(s)).abs(),
                    dev(a * r(mi) - &one, mi - 2),
                ),
                (
                    "n-2 term",
                    q(ni - 2, s) * (a * r(mi * (ni - mi + 1)) - r(s)).abs(),
                    dev(a * r(ni) - &one, ni - 2),
                ),
            ]
        }
        EnergyVariant::Mm1 => vec![
            (
                "2(m-2) term",
                q(2 * (mi - 2), 2 * mi - 1) * (r(mi) * (r(2) - a) - &one),
                dev(a * r(mi) - &one, 2 * (mi - 2)),
            ),
            (
                "antisymmetric term",
                ((r(2 * mi * mi) * (&one - a) - r(5 * mi) + r(2) - a) / r(2 * mi - 1)).abs(),
                dev(r(mi - 2) + a, 1),
            ),
        ],
        EnergyVariant::K2 => {
            let s = mi + ni - 2;
            vec![
                (
                    "m-3 term",
                    q(mi - 3, s) * (a * r((mi - ni) * (ni - 1) + 2) - &one).abs(),
                    dev(a * r(mi) - &one, mi - 3),
                ),
                (
                    "n-3 term",
                    q(ni - 3, s) * (a * r((ni - mi) * (mi - 1) + 2) - &one).abs(),
                    dev(a * r(ni) - &one, ni - 3),
                ),
                (
                    "k-1 term",
                    q(1, s) * (a * r(2 * mi * ni - 3 * mi - 3 * ni + 6) - &one).abs(),
                    dev(a * r(mi + ni - 2) - &one, 1),
                ),
            ]
        }
        EnergyVariant::Mm2 => vec![
            (
                "2(m-3) term",
                q(mi - 3, mi - 1) * (a * r(2) - &one).abs(),
                dev(a * r(mi) - &one, 2 * (mi - 3)),
            ),
            (
                "k-1 term",
                q(1, 2 * mi - 2) * (a * r(2 * mi * mi - 6 * mi + 6) - &one).abs(),
                dev(a * r(2 * mi - 2) - &one, 1),
            ),
            (
                "antisymmetric term",
                ((r(mi * mi) * (&one - a) - r(mi) * (r(4) - a * r(3)) - a + r(3)) / r(mi - 1))
                    .abs(),
                dev(r(mi - 3) + a * r(2), 1),
            ),
        ],
    };

    let closed_form = ClosedFormEnergyTerms::new(
        printed_mean(variant, mi, ni, ki, a),
        printed_root_polynomial(variant, m, n, k, alpha)?,
    );
    let direct = eigenvalues(&merged_complete(m, n, k)?, alpha)?.energy;

    let mut terms: Vec<EnergyTerm> = fixed
        .into_iter()
        .enumerate()
        .map(|(index, (label, printed, expected))| EnergyTerm {
            index,
            label: label.to_string(),
            printed: f(&printed),
            expected: f(&expected),
        })
        .collect();
    let fixed_expected: f64 = terms.iter().map(|t| t.expected).sum();
    terms.push(EnergyTerm {
        index: terms.len(),
        label: "root term".to_string(),
        printed: closed_form.root_deviation(),
        expected: direct - fixed_expected,
    });
    let value: f64 = terms.iter().map(|t| t.printed).sum();
    let mismatch_location = terms.iter().find(|t| t.diverges()).map(|t| t.index);
    Ok(EnergyCorollaryReport {
        variant,
        m,
        n,
        k,
        alpha: alpha.clone(),
        value,
        direct,
        matches_direct: (value - direct).abs() <= 1e-9,
        terms,
        closed_form,
        mismatch_location,
    })
}
