use nalgebra::DMatrix;
use num_traits::ToPrimitive;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::{aalpha_matrix, mean_shift, Alpha};
use crate::error::{Error, Result};
use crate::graph::Graph;

const MAX_SWEEPS: usize = 10_000;

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport {
    pub alpha: Alpha,
    /// Sorted descending.
    pub eigenvalues: Vec<f64>,
    pub energy: f64,
    pub mean_shift: f64,
}

impl SpectrumReport {
    /// Builds a report from an arbitrary eigenvalue list; energy is derived
    /// from the sorted list so it is reproducible from the report alone.
    pub fn from_eigenvalues(alpha: Alpha, mut eigenvalues: Vec<f64>, mean_shift: f64) -> Self {
        eigenvalues.sort_by(|a, b| b.total_cmp(a));
        let energy = energy_of(&eigenvalues, mean_shift);
        SpectrumReport {
            alpha,
            eigenvalues,
            energy,
            mean_shift,
        }
    }

    /// Distinct eigenvalues with multiplicities, merging neighbours closer than 1e-8.
    pub fn grouped(&self) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = Vec::new();
        for &x in &self.eigenvalues {
            match out.last_mut() {
                Some((rep, count)) if (*rep - x).abs() < 1e-8 => *count += 1,
                _ => out.push((x, 1)),
            }
        }
        out
    }
}

pub(crate) fn energy_of(eigenvalues: &[f64], shift: f64) -> f64 {
    eigenvalues.iter().map(|x| (x - shift).abs()).sum()
}

/// Decimal string with 15 significant digits; values within 1e-12 of zero print as `0`.
pub fn format_eigenvalue(x: f64) -> String {
    if x.abs() < 1e-12 {
        return "0".to_string();
    }
    let rounded: f64 = format!("{x:.14e}").parse().unwrap_or(x);
    format!("{rounded}")
}

impl Serialize for SpectrumReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SpectrumReport", 4)?;
        st.serialize_field("alpha", &self.alpha)?;
        let eig: Vec<String> = self.eigenvalues.iter().map(|&x| format_eigenvalue(x)).collect();
        st.serialize_field("eigenvalues", &eig)?;
        st.serialize_field("energy", &format_eigenvalue(self.energy))?;
        st.serialize_field("mean_shift", &format_eigenvalue(self.mean_shift))?;
        st.end()
    }
}

/// Eigenvalues of a real symmetric matrix, sorted descending.
pub fn symmetric_eigenvalues(m: DMatrix<f64>) -> Result<Vec<f64>> {
    if m.nrows() != m.ncols() {
        return Err(Error::NotSquare {
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    if m.nrows() == 0 {
        return Ok(Vec::new());
    }
    let eig = nalgebra::SymmetricEigen::try_new(m, f64::EPSILON, MAX_SWEEPS)
        .ok_or(Error::ConvergenceFailure)?;
    let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    vals.sort_by(|a, b| b.total_cmp(a));
    Ok(vals)
}

pub fn eigenvalues(g: &Graph, alpha: &Alpha) -> Result<SpectrumReport> {
    let m = aalpha_matrix(g, alpha)?;
    let vals = symmetric_eigenvalues(m.to_f64())?;
    let shift = mean_shift(g, alpha).to_f64().unwrap_or(f64::NAN);
    Ok(SpectrumReport::from_eigenvalues(alpha.clone(), vals, shift))
}

/// `Σ |λᵢ − 2αm/n|` over the A_α spectrum.
pub fn energy(g: &Graph, alpha: &Alpha) -> Result<f64> {
    Ok(eigenvalues(g, alpha)?.energy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalescence::{coalesce, CliqueSpec};

    fn close(a: &[f64], b: &[f64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-9)
    }

    #[test]
    fn complete_graph_half() {
        let s = eigenvalues(&Graph::complete(3).unwrap(), &Alpha::half()).unwrap();
        assert!(close(&s.eigenvalues, &[2.0, 0.5, 0.5]));
        assert_eq!(s.grouped().len(), 2);
    }

    #[test]
    fn bowtie_energy() {
        let k3 = Graph::complete(3).unwrap();
        let g = coalesce(&k3, &CliqueSpec::vertex(0), &k3, &CliqueSpec::vertex(0))
            .unwrap()
            .result;
        let s = eigenvalues(&g, &Alpha::zero()).unwrap();
        let r17 = 17f64.sqrt();
        assert!(close(&s.eigenvalues, &[(1.0 + r17) / 2.0, 1.0, -1.0, -1.0, (1.0 - r17) / 2.0]));
        assert!((s.energy - (3.0 + r17)).abs() < 1e-9);
    }

    #[test]
    fn endpoints() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(energy(&c4, &Alpha::one()).unwrap().abs() < 1e-12);
        let p = Graph::path(4).unwrap();
        let s = eigenvalues(&p, &Alpha::one()).unwrap();
        assert!(close(&s.eigenvalues, &[2.0, 2.0, 1.0, 1.0]));
        for n in 2..7 {
            let e = energy(&Graph::complete(n).unwrap(), &Alpha::zero()).unwrap();
            assert!((e - 2.0 * (n as f64 - 1.0)).abs() < 1e-9);
        }
    }

    #[test]
    fn formatting() {
        assert_eq!(format_eigenvalue(2.0), "2");
        assert_eq!(format_eigenvalue(-0.5), "-0.5");
        assert_eq!(format_eigenvalue(1e-15), "0");
        assert_eq!(format_eigenvalue((1.0 + 17f64.sqrt()) / 2.0), "2.56155281280883");
    }
}
