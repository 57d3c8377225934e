//! Vertex partitions, characteristic matrices and quotient matrices.
//!
//! For a partition `P = {U_1..U_m}` with characteristic matrix `T` and
//! `D = TᵀT = diag(|U_i|)`, the quotient of `A` is `B = SᵀAT = D⁻¹TᵀAT`
//! with `S = TD⁻¹`. Entry `b_ij` is the average row sum of block `A_{ij}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::DistanceData;
use crate::linalg::{real_eigenvalues, IntMatrix, Rational, RationalMatrix, SpectralData};

/// Eigensolver tolerances shared by every spectral computation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Off-diagonal residual at which Jacobi iteration stops.
    pub tol: f64,
    /// Eigenvalues closer than this are merged; also the comparison
    /// tolerance for interlacing.
    pub cluster_tol: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            tol: crate::linalg::DEFAULT_TOL,
            cluster_tol: crate::linalg::DEFAULT_CLUSTER_TOL,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    classes: Vec<Vec<usize>>,
}

impl Partition {
    /// Validates that `classes` are non-empty, disjoint and cover `0..n`.
    pub fn new(classes: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        let mut seen = vec![false; n];
        for (ci, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::Dimension(format!("class {ci} is empty")));
            }
            for &v in class {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::Dimension(format!("vertex {v} appears twice")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::Dimension(format!("vertex {v} not covered")));
        }
        Ok(Partition { classes })
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn n(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }

    fn class_of(&self) -> Vec<usize> {
        let mut of = vec![0; self.n()];
        for (c, class) in self.classes.iter().enumerate() {
            for &v in class {
                of[v] = c;
            }
        }
        of
    }

    fn indicator(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.n(), self.len());
        for (c, class) in self.classes.iter().enumerate() {
            for &v in class {
                t[(v, c)] = 1;
            }
        }
        t
    }
}

/// Distance partition `Γ_0(u), Γ_1(u), .., Γ_ecc(u)(u)`.
pub fn distance_partition(dd: &DistanceData, u: usize) -> Partition {
    Partition {
        classes: dd.shells(u).to_vec(),
    }
}

/// Characteristic matrices `(T, S, D)` of a partition of `0..n`.
pub fn characteristic_matrices(
    p: &Partition,
    n: usize,
) -> Result<(RationalMatrix, RationalMatrix, RationalMatrix)> {
    if p.n() != n {
        return Err(Error::Dimension(format!(
            "partition covers {} vertices, expected {n}",
            p.n()
        )));
    }
    let t = p.indicator().to_rational();
    let sizes: Vec<Rational> = p.sizes().into_iter().map(Rational::from).collect();
    let d = RationalMatrix::diagonal(&sizes);
    let inv: Vec<Rational> = sizes.iter().map(Rational::recip).collect();
    let s = t.mul(&RationalMatrix::diagonal(&inv))?;
    Ok((t, s, d))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Interlacing {
    pub holds: bool,
    pub tight: bool,
    /// Eigenvalues of the quotient matrix.
    pub mu: SpectralData,
    /// Eigenvalues of the host matrix.
    pub theta: SpectralData,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuotientResult {
    #[serde(rename = "B")]
    pub b: RationalMatrix,
    #[serde(rename = "T")]
    pub t: RationalMatrix,
    #[serde(rename = "S")]
    pub s: RationalMatrix,
    pub equitable: bool,
    pub interlacing: Interlacing,
}

/// `θ_i ≥ μ_i ≥ θ_{n-m+i}` for `i = 1..m`, each up to `tol`.
pub fn interlaces(theta: &[f64], mu: &[f64], tol: f64) -> bool {
    let (n, m) = (theta.len(), mu.len());
    m <= n
        && (0..m).all(|i| theta[i] >= mu[i] - tol && mu[i] >= theta[n - m + i] - tol)
}

/// Tight interlacing: some `k` with `μ_i = θ_i` for `i < k` and
/// `μ_i = θ_{n-m+i}` for `i >= k` (0-based, sequences descending with
/// multiplicity).
pub fn interlacing_is_tight(theta: &[f64], mu: &[f64], tol: f64) -> bool {
    let (n, m) = (theta.len(), mu.len());
    if m > n {
        return false;
    }
    (0..=m).any(|k| {
        (0..k).all(|i| (mu[i] - theta[i]).abs() < tol)
            && (k..m).all(|i| (mu[i] - theta[n - m + i]).abs() < tol)
    })
}

/// Quotient of a symmetric matrix `a` with respect to `p`, with exact
/// equitability and floating interlacing diagnostics.
pub fn quotient_matrix(
    a: &RationalMatrix,
    p: &Partition,
    tols: Tolerances,
) -> Result<QuotientResult> {
    let (b, t, s, equitable) = quotient_matrix_exact(a, p)?;
    let theta = real_eigenvalues(a, None, tols.tol, tols.cluster_tol)?;
    finish_quotient(b, t, s, equitable, theta, p, tols)
}

type ExactQuotient = (RationalMatrix, RationalMatrix, RationalMatrix, bool);

fn quotient_matrix_exact(a: &RationalMatrix, p: &Partition) -> Result<ExactQuotient> {
    let n = a.rows();
    if !a.is_square() || p.n() != n {
        return Err(Error::Dimension(format!(
            "matrix {}x{} vs partition of {} vertices",
            a.rows(),
            a.cols(),
            p.n()
        )));
    }
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let (t, s, _) = characteristic_matrices(p, n)?;
    let b = s.transpose().mul(a)?.mul(&t)?;

    let class_of = p.class_of();
    let m = p.len();
    let equitable = p.classes().iter().all(|class| {
        let row_block_sums = |v: usize| {
            let mut sums = vec![Rational::zero(); m];
            for (w, x) in a.row(v).iter().enumerate() {
                sums[class_of[w]] += x;
            }
            sums
        };
        let first = row_block_sums(class[0]);
        class[1..].iter().all(|&v| row_block_sums(v) == first)
    });
    Ok((b, t, s, equitable))
}

/// As [`quotient_matrix`], reusing an already computed spectrum of `a`.
pub fn quotient_matrix_with_spectrum(
    a: &RationalMatrix,
    p: &Partition,
    theta: &SpectralData,
    tols: Tolerances,
) -> Result<QuotientResult> {
    let q = quotient_matrix_exact(a, p)?;
    finish_quotient(q.0, q.1, q.2, q.3, theta.clone(), p, tols)
}

fn finish_quotient(
    b: RationalMatrix,
    t: RationalMatrix,
    s: RationalMatrix,
    equitable: bool,
    theta: SpectralData,
    p: &Partition,
    tols: Tolerances,
) -> Result<QuotientResult> {
    let sizes: Vec<Rational> = p.sizes().into_iter().map(Rational::from).collect();
    let mu = real_eigenvalues(&b, Some(&sizes), tols.tol, tols.cluster_tol)?;
    let holds = interlaces(&theta.raw, &mu.raw, tols.cluster_tol);
    let tight = interlacing_is_tight(&theta.raw, &mu.raw, tols.cluster_tol);
    Ok(QuotientResult {
        b,
        t,
        s,
        equitable,
        interlacing: Interlacing {
            holds,
            tight,
            mu,
            theta,
        },
    })
}

/// `B̄_i(u) = SᵀA_iT` for the distance partition of `u`; entry `(h, j)` is
/// `(1/k_h) Σ_{v∈Γ_h(u)} |Γ_i(v) ∩ Γ_j(u)|`.
///
/// Computed as `D⁻¹ (TᵀA_iT)` with an integer middle product.
pub fn proper_mean_matrix(dd: &DistanceData, u: usize, i: usize) -> Result<RationalMatrix> {
    let diameter = dd.diameter();
    if u >= dd.n() {
        return Err(Error::VertexOutOfRange {
            vertex: u,
            n: dd.n(),
        });
    }
    if i > diameter {
        return Err(Error::Dimension(format!("distance {i} exceeds diameter {diameter}")));
    }
    let ecc = dd.eccentricity(u);
    if ecc < diameter {
        return Err(Error::Eccentricity {
            vertex: u,
            ecc,
            diameter,
        });
    }
    let p = distance_partition(dd, u);
    let t = p.indicator();
    let mut tt = IntMatrix::zeros(t.cols(), t.rows());
    for r in 0..t.rows() {
        for c in 0..t.cols() {
            tt[(c, r)] = t[(r, c)];
        }
    }
    let counts = tt.mul(dd.distance_matrix(i))?.mul(&t)?;
    let sizes = p.sizes();
    let mut out = RationalMatrix::zeros(sizes.len(), sizes.len());
    for h in 0..sizes.len() {
        for j in 0..sizes.len() {
            out[(h, j)] = Rational::new(counts[(h, j)], sizes[h] as i64);
        }
    }
    Ok(out)
}
