//! Roots of the small exact polynomials appearing in the closed forms.

use nalgebra::{Complex, DMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::RationalPolynomial;

/// Rational-root candidates are only enumerated below this magnitude.
const DIVISOR_LIMIT: u64 = 1 << 40;

/// All complex roots with multiplicity.
///
/// Exact rational roots are stripped first, the remaining quadratic (if
/// any) is solved from its exact discriminant, and anything of higher degree
/// goes through companion-matrix eigenvalues polished by Newton's method.
pub fn polynomial_roots(p: &RationalPolynomial) -> Vec<Complex<f64>> {
    let mut out = Vec::new();
    let mut rest = p.clone();
    if rest.degree().unwrap_or(0) == 0 {
        return out;
    }
    for r in rational_roots(p) {
        loop {
            let (q, rem) = rest.deflate(&r);
            if !rem.is_zero() || rest.degree() == Some(0) {
                break;
            }
            out.push(Complex::new(r.to_f64().unwrap_or(f64::NAN), 0.0));
            rest = q;
        }
    }
    match rest.degree() {
        None | Some(0) => {}
        Some(1) => {
            let r = -rest.coeff(0) / rest.coeff(1);
            out.push(Complex::new(r.to_f64().unwrap_or(f64::NAN), 0.0));
        }
        Some(2) => {
            let monic = monic_f64(&rest);
            out.extend(quadratic(&rest).map(|z| polish(&monic, z)));
        }
        Some(_) => out.extend(companion_roots(&rest)),
    }
    out
}

/// `|p(z)|` evaluated in floating point.
pub fn residual(p: &RationalPolynomial, z: Complex<f64>) -> f64 {
    p.to_f64_coeffs()
        .iter()
        .rev()
        .fold(Complex::new(0.0, 0.0), |acc, &c| acc * z + c)
        .norm()
}

fn monic_f64(p: &RationalPolynomial) -> Vec<f64> {
    let d = p.degree().unwrap_or(0);
    let lead = p.coeff(d);
    (0..=d)
        .map(|i| (p.coeff(i) / &lead).to_f64().unwrap_or(f64::NAN))
        .collect()
}

fn quadratic(p: &RationalPolynomial) -> [Complex<f64>; 2] {
    let (a, b, c) = (p.coeff(2), p.coeff(1), p.coeff(0));
    let disc = &b * &b - BigRational::from_integer(4.into()) * &a * &c;
    let a = a.to_f64().unwrap();
    let b = b.to_f64().unwrap();
    let d = disc.to_f64().unwrap();
    if disc.is_negative() {
        let re = -b / (2.0 * a);
        let im = (-d).sqrt() / (2.0 * a.abs());
        [Complex::new(re, im), Complex::new(re, -im)]
    } else {
        // Avoid cancellation in the smaller root.
        let q = -0.5 * (b + b.signum() * d.sqrt());
        let c = p.coeff(0).to_f64().unwrap();
        if q == 0.0 {
            [Complex::new(0.0, 0.0), Complex::new(0.0, 0.0)]
        } else {
            [Complex::new(q / a, 0.0), Complex::new(c / q, 0.0)]
        }
    }
}

fn companion_roots(p: &RationalPolynomial) -> Vec<Complex<f64>> {
    let d = p.degree().unwrap();
    let coeffs = monic_f64(p);
    let mut c = DMatrix::<f64>::zeros(d, d);
    for i in 1..d {
        c[(i, i - 1)] = 1.0;
    }
    for i in 0..d {
        c[(i, d - 1)] = -coeffs[i];
    }
    c.complex_eigenvalues()
        .iter()
        .map(|&z| polish(&coeffs, z))
        .collect()
}

/// A few Newton steps on the monic polynomial with the given coefficients.
fn polish(coeffs: &[f64], mut z: Complex<f64>) -> Complex<f64> {
    for _ in 0..50 {
        let (mut f, mut df) = (Complex::new(0.0, 0.0), Complex::new(0.0, 0.0));
        for &c in coeffs.iter().rev() {
            df = df * z + f;
            f = f * z + c;
        }
        if df.norm() == 0.0 {
            break;
        }
        let step = f / df;
        z -= step;
        if step.norm() <= 1e-16 * z.norm().max(1.0) {
            break;
        }
    }
    z
}

/// Distinct rational roots, found by the rational root theorem.
fn rational_roots(p: &RationalPolynomial) -> Vec<BigRational> {
    let Some(d) = p.degree() else {
        return Vec::new();
    };
    // Clear denominators.
    let l = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&l / c.denom()))
        .collect();
    let mut roots = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if low > 0 {
        roots.push(BigRational::zero());
    }
    let (a0, an) = (&ints[low], &ints[d]);
    let (Some(num), Some(den)) = (divisors(a0), divisors(an)) else {
        return roots;
    };
    let mut seen = std::collections::BTreeSet::new();
    for &u in &num {
        for &v in &den {
            for sign in [1i64, -1] {
                let r = BigRational::new(BigInt::from(sign) * BigInt::from(u), BigInt::from(v));
                if seen.insert(r.clone()) && p.eval(&r).is_zero() {
                    roots.push(r);
                }
            }
        }
    }
    roots
}

fn divisors(x: &BigInt) -> Option<Vec<u64>> {
    let x = x.abs().to_u64().filter(|&x| x > 0 && x < DIVISOR_LIMIT)?;
    let mut out = Vec::new();
    let mut i = 1u64;
    while i * i <= x {
        if x % i == 0 {
            out.push(i);
            if i * i != x {
                out.push(x / i);
            }
        }
        i += 1;
    }
    Some(out)
}
