use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::{Alpha, RationalPolynomial};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Dense row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RationalMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn trace(&self) -> Result<BigRational> {
        let n = self.require_square()?;
        Ok((0..n).map(|i| self.get(i, i).clone()).sum())
    }

    /// Rows and columns restricted to `keep`, in the given order.
    pub fn principal_submatrix(&self, keep: &[usize]) -> Result<RationalMatrix> {
        let n = self.require_square()?;
        if let Some(&v) = keep.iter().find(|&&v| v >= n) {
            return Err(Error::InvalidVertex { vertex: v, n });
        }
        Ok(Self::from_fn(keep.len(), keep.len(), |i, j| {
            self.get(keep[i], keep[j]).clone()
        }))
    }

    /// Entrywise `f64` copy for the numeric eigensolver.
    pub fn to_f64(&self) -> nalgebra::DMatrix<f64> {
        nalgebra::DMatrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j).to_f64().unwrap_or(f64::NAN)
        })
    }

    /// Determinant by Gaussian elimination with exact pivots.
    pub fn determinant(&self) -> Result<BigRational> {
        let n = self.require_square()?;
        let mut a = self.data.clone();
        let mut det = BigRational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return Ok(BigRational::zero());
            };
            if p != col {
                for j in 0..n {
                    a.swap(p * n + j, col * n + j);
                }
                det = -det;
            }
            let pivot = a[col * n + col].clone();
            det *= &pivot;
            for r in col + 1..n {
                if a[r * n + col].is_zero() {
                    continue;
                }
                let factor = &a[r * n + col] / &pivot;
                for j in col..n {
                    let delta = &factor * &a[col * n + j];
                    a[r * n + j] -= delta;
                }
            }
        }
        Ok(det)
    }

    /// `det(x·I − self)` at a single rational point.
    pub fn char_poly_at(&self, x: &BigRational) -> Result<BigRational> {
        let n = self.require_square()?;
        let shifted = Self::from_fn(n, n, |i, j| {
            let d = if i == j { x.clone() } else { BigRational::zero() };
            d - self.get(i, j)
        });
        shifted.determinant()
    }
}

/// `α·D(g) + (1 − α)·A(g)`.
pub fn aalpha_matrix(g: &Graph, alpha: &Alpha) -> Result<RationalMatrix> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut m = RationalMatrix::zeros(n, n);
    let off = alpha.complement();
    for v in 0..n {
        m.set(
            v,
            v,
            alpha.value() * BigRational::from_integer(g.degree(v).into()),
        );
    }
    for &(u, v) in g.edges() {
        m.set(u, v, off.clone());
        m.set(v, u, off.clone());
    }
    Ok(m)
}

/// Exact `det(λI − M)` by the Faddeev-LeVerrier recurrence.
///
/// The matrix is first scaled by the lcm `L` of its denominators so the
/// recurrence runs over integers; coefficient `i` is then divided by `L^(n−i)`.
pub fn char_poly(m: &RationalMatrix) -> Result<RationalPolynomial> {
    let n = m.require_square()?;
    let l = m
        .data
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let b: Vec<BigInt> = m
        .data
        .iter()
        .map(|c| c.numer() * (&l / c.denom()))
        .collect();

    // c[i] is the coefficient of λ^i of det(λI − B).
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    let mut mk = vec![BigInt::zero(); n * n];
    let mut prod = vec![BigInt::zero(); n * n];
    for k in 1..=n {
        // M_k = B·M_{k−1} + c_{n−k+1}·I, then c_{n−k} = −tr(B·M_k) / k.
        for i in 0..n {
            mk[i * n + i] += &c[n - k + 1];
        }
        matmul(&b, &mk, &mut prod, n);
        let tr: BigInt = (0..n).map(|i| &prod[i * n + i]).sum();
        c[n - k] = -(tr / BigInt::from(k));
        std::mem::swap(&mut mk, &mut prod);
    }

    let mut scale = BigInt::one();
    let mut out = vec![BigRational::zero(); n + 1];
    for i in (0..=n).rev() {
        out[i] = BigRational::new(c[i].clone(), scale.clone());
        scale *= &l;
    }
    Ok(RationalPolynomial::new(out))
}

fn matmul(a: &[BigInt], b: &[BigInt], out: &mut [BigInt], n: usize) {
    for i in 0..n {
        for j in 0..n {
            let mut acc = BigInt::zero();
            for t in 0..n {
                let x = &a[i * n + t];
                if !x.is_zero() {
                    acc += x * &b[t * n + j];
                }
            }
            out[i * n + j] = acc;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn aalpha_entries() {
        let k2 = Graph::complete(2).unwrap();
        let m = aalpha_matrix(&k2, &Alpha::half()).unwrap();
        assert!(m.data.iter().all(|c| *c == r(1, 2)));
        assert_eq!(aalpha_matrix(&Graph::empty(0), &Alpha::half()), Err(Error::EmptyGraph));
    }

    #[test]
    fn small_char_polys() {
        let k3 = Graph::complete(3).unwrap();
        let p = char_poly(&aalpha_matrix(&k3, &Alpha::zero()).unwrap()).unwrap();
        assert_eq!(p, RationalPolynomial::from_i64(&[-2, -3, 0, 1]));
        let z = RationalMatrix::zeros(1, 1);
        assert_eq!(char_poly(&z).unwrap(), RationalPolynomial::lambda());
        assert_eq!(
            char_poly(&RationalMatrix::zeros(2, 3)),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        );
        assert_eq!(char_poly(&RationalMatrix::zeros(0, 0)).unwrap(), RationalPolynomial::one());
    }

    #[test]
    fn k4_minus_edge_half() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let p = char_poly(&aalpha_matrix(&g, &Alpha::half()).unwrap()).unwrap();
        assert_eq!(p, RationalPolynomial::from_i64(&[1, -5, 8, -5, 1]));
    }

    #[test]
    fn agrees_with_determinant_oracle() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let m = aalpha_matrix(&g, &Alpha::ratio(1, 3).unwrap()).unwrap();
        let p = char_poly(&m).unwrap();
        for x in [r(0, 1), r(1, 1), r(-5, 2), r(7, 3), r(11, 1), r(-2, 7)] {
            assert_eq!(p.eval(&x), m.char_poly_at(&x).unwrap());
        }
        assert_eq!(m.determinant().unwrap() * r(-1, 1), p.coeff(0));
    }
}
