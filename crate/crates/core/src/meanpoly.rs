//! Distance mean-polynomials, pseudo-multiplicities and the matrices
//! `Ā_i = p̄_i(A)` and `p̄_i(B̄)`.

use serde::{Deserialize, Serialize};

use crate::analysis::DmrProfile;
use crate::error::{Error, Result};
use crate::graph::DistanceData;
use crate::linalg::{real_eigenvalues, Rational, RationalMatrix, RationalPoly, SpectralData};
use crate::partition::Tolerances;

const DEGENERATE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeanPolySystem {
    pub polys: Vec<RationalPoly>,
    /// Spectrum of `B̄`.
    pub mu: SpectralData,
    /// `π_i = Π_{j≠i} |μ_i − μ_j|`.
    pub pi_prods: Vec<f64>,
    pub w: Vec<f64>,
    #[serde(rename = "Abar")]
    pub abar: Vec<RationalMatrix>,
    #[serde(rename = "PofB")]
    pub pofb: Vec<RationalMatrix>,
}

/// `p̄_0 = 1` and `c̄_{i+1} p̄_{i+1} = (x − ā_i) p̄_i − b̄_{i−1} p̄_{i−1}`.
pub fn build_polynomials(profile: &DmrProfile) -> Result<Vec<RationalPoly>> {
    let d = profile.diameter;
    let mut polys = vec![RationalPoly::constant(Rational::one())];
    for i in 0..d {
        let c = profile.c(i + 1);
        if c.is_zero() {
            return Err(Error::ZeroC(i + 1));
        }
        let mut next = polys[i].shift().sub(&polys[i].scale(profile.a(i)));
        if i > 0 {
            next = next.sub(&polys[i - 1].scale(&profile.b(i - 1)));
        }
        polys.push(next.scale(&c.recip()));
    }
    Ok(polys)
}

/// Distinct eigenvalues of `B̄`, symmetrized by `diag(k)`.
pub fn mean_spectrum(profile: &DmrProfile, tols: Tolerances) -> Result<SpectralData> {
    let k: Vec<Rational> = profile.k.iter().map(|&x| Rational::from(x)).collect();
    real_eigenvalues(&profile.bbar, Some(&k), tols.tol, tols.cluster_tol)
}

/// `π_i` and `w_i = π_0 p̄_D(μ_0) / (σ_i π_i p̄_D(μ_i))` where `σ_i = (−1)^i`
/// is the sign of `Π_{j≠i}(μ_i − μ_j)` for `μ` in decreasing order.
pub fn pseudo_multiplicities(polys: &[RationalPoly], mu: &[f64]) -> Result<(Vec<f64>, Vec<f64>)> {
    let pd = polys.last().ok_or_else(|| Error::Dimension("no polynomials".into()))?;
    let pi: Vec<f64> = (0..mu.len())
        .map(|i| {
            (0..mu.len())
                .filter(|&j| j != i)
                .map(|j| (mu[i] - mu[j]).abs())
                .product()
        })
        .collect();
    let vals: Vec<f64> = mu.iter().map(|&m| pd.eval_f64(m)).collect();
    if let Some(index) = vals.iter().position(|v| v.abs() < DEGENERATE) {
        return Err(Error::DegenerateEvaluation {
            index,
            value: vals[index],
        });
    }
    let w = (0..mu.len())
        .map(|i| {
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            pi[0] * vals[0] / (sign * pi[i] * vals[i])
        })
        .collect();
    Ok((pi, w))
}

/// `⟨f, g⟩★ = (1/n) Σ_i w_i f(μ_i) g(μ_i)`.
pub fn star_inner(f: &RationalPoly, g: &RationalPoly, sys: &MeanPolySystem, n: usize) -> f64 {
    sys.mu
        .eigenvalues
        .iter()
        .zip(&sys.w)
        .map(|(&m, &w)| w * f.eval_f64(m) * g.eval_f64(m))
        .sum::<f64>()
        / n as f64
}

/// `(p̄_i(A))_i` and `(p̄_i(B̄))_i`.
pub fn build_matrices(
    polys: &[RationalPoly],
    dd: &DistanceData,
    profile: &DmrProfile,
) -> Result<(Vec<RationalMatrix>, Vec<RationalMatrix>)> {
    let a = dd.adjacency().to_rational();
    let abar = polys.iter().map(|p| p.eval_matrix(&a)).collect::<Result<_>>()?;
    let pofb = polys
        .iter()
        .map(|p| p.eval_matrix(&profile.bbar))
        .collect::<Result<_>>()?;
    Ok((abar, pofb))
}

impl MeanPolySystem {
    pub fn build(profile: &DmrProfile, dd: &DistanceData, tols: Tolerances) -> Result<Self> {
        let polys = build_polynomials(profile)?;
        let mu = mean_spectrum(profile, tols)?;
        if mu.distinct() != profile.diameter + 1 {
            return Err(Error::Consistency(format!(
                "Bbar has {} distinct eigenvalues, expected {}",
                mu.distinct(),
                profile.diameter + 1
            )));
        }
        let (pi_prods, w) = pseudo_multiplicities(&polys, &mu.eigenvalues)?;
        let (abar, pofb) = build_matrices(&polys, dd, profile)?;
        Ok(MeanPolySystem {
            polys,
            mu,
            pi_prods,
            w,
            abar,
            pofb,
        })
    }

    /// `G_ij = ⟨p̄_i, p̄_j⟩★`.
    pub fn gram(&self, n: usize) -> Vec<Vec<f64>> {
        self.polys
            .iter()
            .map(|f| self.polys.iter().map(|g| star_inner(f, g, self, n)).collect())
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrenceCheck {
    /// `AĀ_i = b̄_{i−1}Ā_{i−1} + ā_iĀ_i + c̄_{i+1}Ā_{i+1}` for every `i < D`.
    pub holds: bool,
    pub first_failure: Option<usize>,
    /// `AĀ_D − b̄_{D−1}Ā_{D−1} − ā_DĀ_D`.
    pub residual_at_d: RationalMatrix,
    pub residual_at_d_is_zero: bool,
}

/// Matrix form of the three-term recurrence.
pub fn recurrence_check(
    sys: &MeanPolySystem,
    dd: &DistanceData,
    profile: &DmrProfile,
) -> Result<RecurrenceCheck> {
    let d = profile.diameter;
    let a = dd.adjacency().to_rational();
    let rhs_without_next = |i: usize| -> Result<RationalMatrix> {
        let mut m = sys.abar[i].scale(profile.a(i));
        if i > 0 {
            m = m.add(&sys.abar[i - 1].scale(&profile.b(i - 1)))?;
        }
        Ok(m)
    };
    let mut first_failure = None;
    for i in 0..d {
        let lhs = a.mul(&sys.abar[i])?;
        let rhs = rhs_without_next(i)?.add(&sys.abar[i + 1].scale(&profile.c(i + 1)))?;
        if lhs != rhs {
            first_failure = Some(i);
            break;
        }
    }
    let residual_at_d = a.mul(&sys.abar[d])?.sub(&rhs_without_next(d)?)?;
    Ok(RecurrenceCheck {
        holds: first_failure.is_none(),
        first_failure,
        residual_at_d_is_zero: residual_at_d.is_zero(),
        residual_at_d,
    })
}
