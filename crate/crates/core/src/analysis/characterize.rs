//! Edge counts `ω_ij`, triple counts `t_hij` and the Hadamard-product test.

use serde::{Deserialize, Serialize};

use super::{DmrProfile, MeanTable, Witness};
use crate::error::{Error, Result};
use crate::graph::DistanceData;
use crate::linalg::{matrix_inner, IntMatrix, Rational, RationalMatrix};

/// Band of the `ω` table: `diag[i] = ω_ii`, `upper[i] = ω_{i,i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaTable {
    pub diag: Vec<usize>,
    pub upper: Vec<usize>,
}

impl OmegaTable {
    /// `ω_ij` for any `i, j`; zero off the band.
    pub fn get(&self, i: usize, j: usize) -> usize {
        match (i.min(j), i.max(j)) {
            (a, b) if a == b => self.diag.get(a).copied().unwrap_or(0),
            (a, b) if b == a + 1 => self.upper.get(a).copied().unwrap_or(0),
            _ => 0,
        }
    }
}

/// `ω_ij(u)`: edges with one end in `Γ_i(u)` and the other in `Γ_j(u)`.
pub fn edge_counts(dd: &DistanceData, u: usize) -> Result<OmegaTable> {
    let d = dd.diameter();
    let mut diag = vec![0; d + 1];
    let mut upper = vec![0; d];
    for v in 0..dd.n() {
        for &w in dd.neighbors(v) {
            if v >= w {
                continue;
            }
            let (a, b) = (dd.dist(u, v), dd.dist(u, w));
            match (a.min(b), a.max(b)) {
                (x, y) if x == y => diag[x] += 1,
                (x, y) if y == x + 1 => upper[x] += 1,
                (x, y) => {
                    return Err(Error::Consistency(format!(
                        "edge {v}-{w} joins shells {x} and {y}"
                    )))
                }
            }
        }
    }
    Ok(OmegaTable { diag, upper })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaResult {
    pub well_defined: bool,
    /// `ω_ii` alone is vertex independent.
    pub diagonal_well_defined: bool,
    pub table: Option<OmegaTable>,
    pub witness: Option<Witness>,
}

fn first_omega_difference(a: &OmegaTable, b: &OmegaTable, u: usize, v: usize) -> Option<Witness> {
    let m = a.diag.len();
    for i in 0..m {
        for j in i..(i + 2).min(m) {
            if a.get(i, j) != b.get(i, j) {
                return Some(Witness::EdgeCount {
                    u,
                    v,
                    i,
                    j,
                    at_u: a.get(i, j),
                    at_v: b.get(i, j),
                });
            }
        }
    }
    None
}

/// `ω_ij(u)` independent of `u`. When it is and `profile` is given, the
/// mean parameters rebuilt from `ω` must match it exactly.
pub fn omega_characterization(
    dd: &DistanceData,
    profile: Option<&DmrProfile>,
) -> Result<OmegaResult> {
    let base = edge_counts(dd, 0)?;
    let mut witness = None;
    let mut diagonal_well_defined = true;
    for v in 1..dd.n() {
        let other = edge_counts(dd, v)?;
        if other.diag != base.diag {
            diagonal_well_defined = false;
        }
        if witness.is_none() {
            witness = first_omega_difference(&base, &other, 0, v);
        }
    }
    if witness.is_some() {
        return Ok(OmegaResult {
            well_defined: false,
            diagonal_well_defined,
            table: None,
            witness,
        });
    }
    if let Some(p) = profile {
        check_omega_against(&base, p)?;
    }
    Ok(OmegaResult {
        well_defined: true,
        diagonal_well_defined,
        table: Some(base),
        witness: None,
    })
}

fn check_omega_against(w: &OmegaTable, p: &DmrProfile) -> Result<()> {
    let d = p.diameter;
    // k_i from degree sums: k·k_i = ω_{i-1,i} + 2ω_ii + ω_{i,i+1}
    let deg = w.get(0, 1);
    for i in 0..=d {
        let lower = if i > 0 { w.get(i - 1, i) } else { 0 };
        let total = lower + 2 * w.get(i, i) + w.get(i, i + 1);
        let ki = total.checked_div(deg).unwrap_or(1);
        if ki != p.k[i] || (deg > 0 && ki * deg != total) {
            return Err(Error::Consistency(format!("k_{i} rebuilt from omega differs")));
        }
        let k = Rational::from(ki);
        let a = Rational::from(2 * w.get(i, i)) / &k;
        if &a != p.a(i) {
            return Err(Error::Consistency(format!("a_{i} rebuilt from omega differs")));
        }
        if i < d && Rational::from(w.get(i, i + 1)) / &k != p.b(i) {
            return Err(Error::Consistency(format!("b_{i} rebuilt from omega differs")));
        }
        if i > 0 && Rational::from(w.get(i - 1, i)) / &k != p.c(i) {
            return Err(Error::Consistency(format!("c_{i} rebuilt from omega differs")));
        }
    }
    Ok(())
}

/// `t[h][i][j]` = number of `(v, w)` with `dist(u,v)=h`, `dist(u,w)=i`,
/// `dist(v,w)=j`. Both summation orders are evaluated and compared.
pub fn triple_counts(dd: &DistanceData, u: usize) -> Result<Vec<Vec<Vec<usize>>>> {
    let d = dd.diameter();
    let mut t = vec![vec![vec![0usize; d + 1]; d + 1]; d + 1];
    for v in 0..dd.n() {
        for w in 0..dd.n() {
            t[dd.dist(u, v)][dd.dist(u, w)][dd.dist(v, w)] += 1;
        }
    }
    for h in 0..=d {
        for i in 0..=d {
            for j in 0..=d {
                // Σ_{w∈Γ_i(u)} |Γ_j(w) ∩ Γ_h(u)|
                let other: usize = dd
                    .shell(u, i)
                    .iter()
                    .map(|&w| dd.intersection_number(h, j, u, w))
                    .sum();
                if other != t[h][i][j] {
                    return Err(Error::Consistency(format!(
                        "triple count t_{h}{i}{j}({u}) depends on summation order"
                    )));
                }
            }
        }
    }
    Ok(t)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleResult {
    pub well_defined: bool,
    pub table: Option<Vec<Vec<Vec<usize>>>>,
    pub witness: Option<Witness>,
}

/// `t_hij(u)` independent of `u`; when it is and `profile` is given,
/// `t_hij / k_h = p̄_ji^h` is checked exactly.
pub fn triple_characterization(
    dd: &DistanceData,
    profile: Option<&DmrProfile>,
) -> Result<TripleResult> {
    let base = triple_counts(dd, 0)?;
    let m = dd.diameter() + 1;
    for v in 1..dd.n() {
        let other = triple_counts(dd, v)?;
        for h in 0..m {
            for i in 0..m {
                for j in 0..m {
                    if base[h][i][j] != other[h][i][j] {
                        return Ok(TripleResult {
                            well_defined: false,
                            table: None,
                            witness: Some(Witness::TripleCount {
                                u: 0,
                                v,
                                h,
                                i,
                                j,
                                at_u: base[h][i][j],
                                at_v: other[h][i][j],
                            }),
                        });
                    }
                }
            }
        }
    }
    if let Some(p) = profile {
        for h in 0..m {
            for i in 0..m {
                for j in 0..m {
                    let ratio = Rational::new(base[h][i][j] as i64, base[h][h][0] as i64);
                    if &ratio != p.p(h, j, i) {
                        return Err(Error::Consistency(format!(
                            "t_{h}{i}{j}/k_{h} differs from the mean number"
                        )));
                    }
                }
            }
        }
    }
    Ok(TripleResult {
        well_defined: true,
        table: Some(base),
        witness: None,
    })
}

/// `⟨M, A_h⟩ / ‖A_h‖²` with `⟨X, Y⟩ = tr(XY)/n`.
pub fn fourier_coefficient(m: &RationalMatrix, dd: &DistanceData, h: usize) -> Result<Rational> {
    let ah = dd.distance_matrix(h).to_rational();
    let norm = matrix_inner(&ah, &ah)?;
    Ok(matrix_inner(m, &ah)? / norm)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HadamardResult {
    pub holds: bool,
    /// `coefficients[h][i][j] = ⟨A_iA_j, A_h⟩ / ‖A_h‖²` when `holds`.
    pub coefficients: Option<MeanTable>,
    pub witness: Option<Witness>,
}

fn first_off(sums: &[i64]) -> Option<(usize, i64)> {
    sums.iter()
        .position(|s| *s != sums[0])
        .map(|p| (p, sums[p]))
}

/// `A_iA_j ∘ A_h` has constant row sums and constant column sums for all
/// `h, i, j`; the common row sum over `k_h` must equal the Fourier
/// coefficient of `A_iA_j` on `A_h`.
pub fn hadamard_characterization(dd: &DistanceData) -> Result<HadamardResult> {
    let m = dd.diameter() + 1;
    let mats = dd.distance_matrices();
    // (h, h, 0) first: A_h itself must have constant row sums
    for (h, a) in mats.iter().enumerate() {
        if let Some((index, sum)) = first_off(&a.row_sums()) {
            return Ok(HadamardResult {
                holds: false,
                coefficients: None,
                witness: Some(Witness::HadamardSums {
                    h,
                    i: h,
                    j: 0,
                    axis: "row".into(),
                    index,
                    sum,
                    expected: a.row_sums()[0],
                }),
            });
        }
    }
    let products: Vec<Vec<IntMatrix>> = (0..m)
        .map(|i| (0..m).map(|j| mats[i].mul(&mats[j])).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let mut coefficients = vec![vec![vec![Rational::zero(); m]; m]; m];
    for h in 0..m {
        for i in 0..m {
            for j in 0..m {
                let had = products[i][j].hadamard(&mats[h])?;
                let rows = had.row_sums();
                let cols = had.col_sums();
                for (axis, sums) in [("row", &rows), ("column", &cols)] {
                    if let Some((index, sum)) = first_off(sums) {
                        return Ok(HadamardResult {
                            holds: false,
                            coefficients: None,
                            witness: Some(Witness::HadamardSums {
                                h,
                                i,
                                j,
                                axis: axis.into(),
                                index,
                                sum,
                                expected: sums[0],
                            }),
                        });
                    }
                }
                let kh = mats[h].row_sums()[0];
                let mean = Rational::new(rows[0], kh);
                let fourier = fourier_coefficient(&products[i][j].to_rational(), dd, h)?;
                if mean != fourier {
                    return Err(Error::Consistency(format!(
                        "row-sum mean {mean} differs from Fourier coefficient {fourier} at ({h},{i},{j})"
                    )));
                }
                coefficients[h][i][j] = fourier;
            }
        }
    }
    for (h, layer) in coefficients.iter().enumerate() {
        for i in 0..m {
            for j in 0..m {
                if layer[i][j] != layer[j][i] {
                    return Err(Error::Consistency(format!("p^{h}_{i}{j} != p^{h}_{j}{i}")));
                }
            }
        }
    }
    Ok(HadamardResult {
        holds: true,
        coefficients: Some(coefficients),
        witness: None,
    })
}
