//! A_α matrices, exact characteristic polynomials, numeric spectra and
//! energies, and the closed forms for coalescences built on them.

mod alpha;
mod closed_form;
mod decomposition;
mod eigen;
mod matrix;
mod poly;
mod roots;

pub use alpha::Alpha;
pub use closed_form::{
    complete_closed_form, complete_spectrum, energy_corollary, printed_root_polynomial,
    ClosedFormEnergyTerms, EnergyCorollaryReport, EnergyTerm, EnergyVariant,
};
pub use decomposition::{
    adjacency_corollary_rhs, decomposition_rhs, decomposition_rhs_with, identity_check,
    identity_check_with, lollipop_direct, lollipop_recursion, lollipop_recursion_with, IdentityCheck,
    SubgraphConvention,
};
pub use eigen::{eigenvalues, energy, format_eigenvalue, symmetric_eigenvalues, SpectrumReport};
pub use matrix::{aalpha_matrix, char_poly, RationalMatrix};
pub use poly::RationalPolynomial;
pub use roots::{polynomial_roots, residual};

use num_rational::BigRational;

use crate::error::Result;
use crate::graph::Graph;

/// `Φ(A_α(g), λ)`.
pub fn aalpha_char_poly(g: &Graph, alpha: &Alpha) -> Result<RationalPolynomial> {
    char_poly(&aalpha_matrix(g, alpha)?)
}

/// Mean A_α eigenvalue `2αm / n`, exactly.
pub fn mean_shift(g: &Graph, alpha: &Alpha) -> BigRational {
    let n = g.order().max(1);
    alpha.value() * BigRational::from_integer((2 * g.size()).into())
        / BigRational::from_integer(n.into())
}
