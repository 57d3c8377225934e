//! Floating eigenvalue extraction for real-spectrum matrices.
//!
//! Only symmetric matrices are handed to the eigensolver. A non-symmetric
//! matrix `M` is accepted when a positive diagonal witness `Δ` makes
//! `Δ^{1/2} M Δ^{-1/2}` symmetric; that condition (`δ_i m_ij = δ_j m_ji`) is
//! checked exactly before any floating arithmetic happens.

use serde::{Deserialize, Serialize};

use super::matrix::RationalMatrix;
use super::rational::Rational;
use crate::error::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-12;
pub const DEFAULT_CLUSTER_TOL: f64 = 1e-6;

const MAX_SWEEPS: usize = 200;

/// Distinct eigenvalues (descending) with multiplicities.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralData {
    pub eigenvalues: Vec<f64>,
    pub multiplicities: Vec<usize>,
    /// Every eigenvalue, descending, before clustering.
    pub raw: Vec<f64>,
    pub tol: f64,
    pub cluster_tol: f64,
}

impl SpectralData {
    pub fn dimension(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    pub fn distinct(&self) -> usize {
        self.eigenvalues.len()
    }

    /// `(value, multiplicity)` pairs, descending.
    pub fn pairs(&self) -> impl Iterator<Item = (f64, usize)> + '_ {
        self.eigenvalues
            .iter()
            .copied()
            .zip(self.multiplicities.iter().copied())
    }
}

/// Exact check that `diag(witness)^{1/2} m diag(witness)^{-1/2}` is symmetric.
pub fn is_symmetrizable_by(m: &RationalMatrix, witness: &[Rational]) -> bool {
    let n = m.rows();
    m.is_square()
        && witness.len() == n
        && witness.iter().all(Rational::is_positive)
        && (0..n).all(|i| (0..i).all(|j| &witness[i] * &m[(i, j)] == &witness[j] * &m[(j, i)]))
}

/// Eigenvalues of a real-spectrum matrix, clustered into distinct values.
pub fn real_eigenvalues(
    m: &RationalMatrix,
    witness: Option<&[Rational]>,
    tol: f64,
    cluster_tol: f64,
) -> Result<SpectralData> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "eigenvalues of non-square {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let sym: Vec<Vec<f64>> = match witness {
        None if m.is_symmetric() => m.to_f64_rows(),
        None => return Err(Error::NotSymmetric),
        Some(w) => {
            if !is_symmetrizable_by(m, w) {
                return Err(Error::BadWitness(
                    "diag(w)^(1/2) M diag(w)^(-1/2) is not symmetric".into(),
                ));
            }
            let wf: Vec<f64> = w.iter().map(Rational::to_f64).collect();
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            if i == j {
                                m[(i, i)].to_f64()
                            } else {
                                // geometric mean of the two mirrored entries keeps exact symmetry
                                let a = m[(i, j)].to_f64() * (wf[i] / wf[j]).sqrt();
                                let b = m[(j, i)].to_f64() * (wf[j] / wf[i]).sqrt();
                                0.5 * (a + b)
                            }
                        })
                        .collect()
                })
                .collect()
        }
    };
    let mut values = jacobi_eigenvalues(sym, tol)?;
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(cluster(values, tol, cluster_tol))
}

fn cluster(raw: Vec<f64>, tol: f64, cluster_tol: f64) -> SpectralData {
    let mut groups: Vec<Vec<f64>> = Vec::new();
    for &v in &raw {
        match groups.last_mut() {
            Some(g) if (g[g.len() - 1] - v).abs() < cluster_tol => g.push(v),
            _ => groups.push(vec![v]),
        }
    }
    SpectralData {
        eigenvalues: groups
            .iter()
            .map(|g| g.iter().sum::<f64>() / g.len() as f64)
            .collect(),
        multiplicities: groups.iter().map(Vec::len).collect(),
        raw,
        tol,
        cluster_tol,
    }
}

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below `tol`.
fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>, tol: f64) -> Result<Vec<f64>> {
    let n = a.len();
    let off = |a: &Vec<Vec<f64>>| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i][j] * a[i][j];
                }
            }
        }
        s.sqrt()
    };
    for _ in 0..MAX_SWEEPS {
        if off(&a) < tol {
            return Ok((0..n).map(|i| a[i][i]).collect());
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    if off(&a) < tol {
        return Ok((0..n).map(|i| a[i][i]).collect());
    }
    Err(Error::Consistency(format!(
        "Jacobi did not converge to {tol:e} in {MAX_SWEEPS} sweeps"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn identity_has_single_eigenvalue() {
        let s = real_eigenvalues(&RationalMatrix::identity(4), None, DEFAULT_TOL, DEFAULT_CLUSTER_TOL)
            .unwrap();
        assert_eq!(s.multiplicities, vec![4]);
        assert!((s.eigenvalues[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn non_symmetric_without_witness_is_rejected() {
        let m = RationalMatrix::from_i64_rows(&[vec![0, 2], vec![1, 0]]);
        assert_eq!(
            real_eigenvalues(&m, None, DEFAULT_TOL, DEFAULT_CLUSTER_TOL),
            Err(Error::NotSymmetric)
        );
        let bad = [Rational::one(), Rational::one()];
        assert!(matches!(
            real_eigenvalues(&m, Some(&bad), DEFAULT_TOL, DEFAULT_CLUSTER_TOL),
            Err(Error::BadWitness(_))
        ));
        // diag(1, 2): 1*2 == 2*1
        let good = [Rational::one(), Rational::from_int(2)];
        let s = real_eigenvalues(&m, Some(&good), DEFAULT_TOL, DEFAULT_CLUSTER_TOL).unwrap();
        let r2 = 2f64.sqrt();
        assert!((s.eigenvalues[0] - r2).abs() < 1e-12);
        assert!((s.eigenvalues[1] + r2).abs() < 1e-12);
    }

    #[test]
    fn two_by_two_closed_form() {
        let m = RationalMatrix::from_i64_rows(&[vec![2, 1], vec![1, 2]]);
        let s = real_eigenvalues(&m, None, DEFAULT_TOL, DEFAULT_CLUSTER_TOL).unwrap();
        assert_eq!(s.raw.len(), 2);
        assert!((s.eigenvalues[0] - 3.0).abs() < 1e-12);
        assert!((s.eigenvalues[1] - 1.0).abs() < 1e-12);
    }

    fn arb_sym_int() -> impl Strategy<Value = RationalMatrix> {
        (1usize..=8).prop_flat_map(|n| {
            proptest::collection::vec(-5i64..=5, n * n).prop_map(move |v| {
                let mut rows = vec![vec![0i64; n]; n];
                for i in 0..n {
                    for j in 0..=i {
                        rows[i][j] = v[i * n + j];
                        rows[j][i] = v[i * n + j];
                    }
                }
                RationalMatrix::from_i64_rows(&rows)
            })
        })
    }

    proptest! {
        #[test]
        fn eigenvalue_sum_is_trace(m in arb_sym_int()) {
            let s = real_eigenvalues(&m, None, DEFAULT_TOL, DEFAULT_CLUSTER_TOL).unwrap();
            let n = m.rows();
            prop_assert_eq!(s.dimension(), n);
            prop_assert!(s.eigenvalues.windows(2).all(|w| w[0] > w[1]));
            let total: f64 = s.pairs().map(|(v, k)| v * k as f64).sum();
            prop_assert!((total - m.trace().unwrap().to_f64()).abs() < n as f64 * DEFAULT_CLUSTER_TOL);
        }
    }
}
