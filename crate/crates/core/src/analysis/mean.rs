use serde::{Deserialize, Serialize};

use super::{DmrProfile, MeanArray, MeanTable, Witness};
use crate::error::{Error, Result};
use crate::graph::DistanceData;
use crate::linalg::{Rational, RationalMatrix};
use crate::partition::proper_mean_matrix;

/// `p̄_ij^h(u)` by direct counting over `Γ_h(u)`.
pub fn mean_numbers_at(dd: &DistanceData, u: usize) -> Result<MeanTable> {
    let d = dd.diameter();
    let ecc = dd.eccentricity(u);
    if ecc < d {
        return Err(Error::Eccentricity {
            vertex: u,
            ecc,
            diameter: d,
        });
    }
    let mut table = vec![vec![vec![Rational::zero(); d + 1]; d + 1]; d + 1];
    for (h, layer) in table.iter_mut().enumerate() {
        let shell = dd.shell(u, h);
        // counts[i][j] = Σ_{v∈Γ_h(u)} |Γ_i(u) ∩ Γ_j(v)|
        let mut counts = vec![vec![0i64; d + 1]; d + 1];
        for &v in shell {
            for w in 0..dd.n() {
                counts[dd.dist(u, w)][dd.dist(v, w)] += 1;
            }
        }
        let kh = shell.len() as i64;
        for i in 0..=d {
            for j in 0..=d {
                layer[i][j] = Rational::new(counts[i][j], kh);
            }
        }
    }
    Ok(table)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DmrVerdict {
    pub dmr: bool,
    pub reason: String,
    pub witness: Option<Witness>,
    /// Smallest `i` whose proper mean-matrix differs between vertices.
    pub first_differing_i: Option<usize>,
    pub profile: Option<DmrProfile>,
}

/// Compares `SᵀA_iT` over all vertices and all `i`; on agreement builds the
/// profile and checks its invariants.
pub fn is_distance_mean_regular(dd: &DistanceData) -> Result<DmrVerdict> {
    let d = dd.diameter();
    if let Some(u) = dd.short_eccentricity() {
        return Ok(DmrVerdict {
            dmr: false,
            reason: "eccentricity".into(),
            witness: Some(Witness::Eccentricity {
                vertex: u,
                ecc: dd.eccentricity(u),
                diameter: d,
            }),
            first_differing_i: None,
            profile: None,
        });
    }
    let per_vertex = |u: usize| -> Result<Vec<RationalMatrix>> {
        (0..=d).map(|i| proper_mean_matrix(dd, u, i)).collect()
    };
    let base = per_vertex(0)?;
    let mut first_i: Option<usize> = None;
    let mut witness = None;
    for v in 1..dd.n() {
        let other = per_vertex(v)?;
        if let Some(i) = (0..=d).find(|&i| other[i] != base[i]) {
            first_i = Some(first_i.map_or(i, |f| f.min(i)));
        }
        if witness.is_none() {
            witness = first_difference(&base, &other, 0, v);
        }
    }
    if let Some(w) = witness {
        return Ok(DmrVerdict {
            dmr: false,
            reason: format!(
                "proper mean-matrix B_{} differs between vertices",
                first_i.unwrap_or(0)
            ),
            witness: Some(w),
            first_differing_i: first_i,
            profile: None,
        });
    }
    let profile = build_profile(dd, base)?;
    Ok(DmrVerdict {
        dmr: true,
        reason: "mean numbers agree at every vertex".into(),
        witness: None,
        first_differing_i: None,
        profile: Some(profile),
    })
}

/// First `(h, i, j)` with `(B_i)_{hj}` different at `u` and `v`.
fn first_difference(
    at_u: &[RationalMatrix],
    at_v: &[RationalMatrix],
    u: usize,
    v: usize,
) -> Option<Witness> {
    let m = at_u.len();
    for h in 0..m {
        for i in 0..m {
            for j in 0..m {
                if at_u[i][(h, j)] != at_v[i][(h, j)] {
                    return Some(Witness::MeanNumber {
                        u,
                        v,
                        h,
                        i,
                        j,
                        at_u: at_u[i][(h, j)].clone(),
                        at_v: at_v[i][(h, j)].clone(),
                    });
                }
            }
        }
    }
    None
}

fn consistency(msg: String) -> Error {
    Error::Consistency(msg)
}

fn build_profile(dd: &DistanceData, proper_bi: Vec<RationalMatrix>) -> Result<DmrProfile> {
    let d = dd.diameter();
    let k: Vec<usize> = (0..=d).map(|i| dd.shell_size(0, i)).collect();
    let bbar = proper_bi
        .get(1)
        .cloned()
        .unwrap_or_else(|| RationalMatrix::zeros(1, 1));
    let abar: Vec<Rational> = (0..=d).map(|i| bbar[(i, i)].clone()).collect();
    let b: Vec<Rational> = (0..d).map(|i| bbar[(i, i + 1)].clone()).collect();
    let c: Vec<Rational> = (1..=d).map(|i| bbar[(i, i - 1)].clone()).collect();
    let profile = DmrProfile {
        n: dd.n(),
        diameter: d,
        k,
        bbar,
        mean_array: MeanArray { b, c },
        abar,
        proper_bi,
    };
    check_profile(&profile)?;
    Ok(profile)
}

/// Structural invariants every profile must satisfy.
pub(crate) fn check_profile(p: &DmrProfile) -> Result<()> {
    let d = p.diameter;
    if p.proper_bi[0] != RationalMatrix::identity(d + 1) {
        return Err(consistency("B_0 is not the identity".into()));
    }
    if d == 0 {
        return Ok(());
    }
    if !p.a(0).is_zero() {
        return Err(consistency("a_0 is nonzero".into()));
    }
    for h in 0..=d {
        for j in 0..=d {
            if h.abs_diff(j) > 1 && !p.bbar[(h, j)].is_zero() {
                return Err(consistency(format!("Bbar not tridiagonal at ({h},{j})")));
            }
        }
    }
    let k = Rational::from(p.degree());
    if let Some(h) = p.bbar.row_sums().iter().position(|s| *s != k) {
        return Err(consistency(format!("row {h} of Bbar does not sum to k")));
    }
    for i in 0..d {
        let lhs = Rational::from(p.k[i]) * p.b(i);
        let rhs = Rational::from(p.k[i + 1]) * p.c(i + 1);
        if lhs != rhs {
            return Err(consistency(format!("k_{i} b_{i} != k_{} c_{}", i + 1, i + 1)));
        }
    }
    for h in 0..=d {
        for i in 0..=d {
            for j in 0..=d {
                if p.p(h, i, j) != p.p(h, j, i) {
                    return Err(consistency(format!("p^{h}_{i}{j} != p^{h}_{j}{i}")));
                }
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrgVerdict {
    pub drg: bool,
    pub witness: Option<Witness>,
}

/// Brute force: `|Γ_i(u) ∩ Γ_j(v)|` depends only on `(i, j, dist(u, v))`.
pub fn is_distance_regular(dd: &DistanceData) -> DrgVerdict {
    let n = dd.n();
    let d = dd.diameter();
    // reference[h] = (pair, counts) for the first pair seen at distance h
    type Counts = Vec<Vec<usize>>;
    let mut reference: Vec<Option<((usize, usize), Counts)>> = vec![None; d + 1];
    for u in 0..n {
        for v in 0..n {
            let h = dd.dist(u, v);
            let mut counts = vec![vec![0usize; d + 1]; d + 1];
            for w in 0..n {
                counts[dd.dist(u, w)][dd.dist(v, w)] += 1;
            }
            match &reference[h] {
                None => reference[h] = Some(((u, v), counts)),
                Some((pair, r)) => {
                    for i in 0..=d {
                        for j in 0..=d {
                            if r[i][j] != counts[i][j] {
                                return DrgVerdict {
                                    drg: false,
                                    witness: Some(Witness::IntersectionNumber {
                                        first: *pair,
                                        second: (u, v),
                                        h,
                                        i,
                                        j,
                                        at_first: r[i][j],
                                        at_second: counts[i][j],
                                    }),
                                };
                            }
                        }
                    }
                }
            }
        }
    }
    DrgVerdict {
        drg: true,
        witness: None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuperRegularVerdict {
    pub super_regular: bool,
    pub witness: Option<Witness>,
}

/// `k_i(u)` independent of `u` for every `i` (missing shells count as 0).
pub fn super_regularity(dd: &DistanceData) -> SuperRegularVerdict {
    for v in 1..dd.n() {
        for i in 0..=dd.diameter() {
            let (ku, kv) = (dd.shell_size(0, i), dd.shell_size(v, i));
            if ku != kv {
                return SuperRegularVerdict {
                    super_regular: false,
                    witness: Some(Witness::ShellSizes {
                        u: 0,
                        v,
                        i,
                        k_u: ku,
                        k_v: kv,
                    }),
                };
            }
        }
    }
    SuperRegularVerdict {
        super_regular: true,
        witness: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog::catalog;
    use crate::graph::compute_distances;

    fn dd(name: &str) -> DistanceData {
        compute_distances(&catalog(name).unwrap()).unwrap()
    }

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn mean_numbers_worked_values() {
        let z8 = dd("cay_z8");
        for u in 0..8 {
            assert_eq!(mean_numbers_at(&z8, u).unwrap()[2][1][2], r("3/2"));
        }
        let g = catalog("prism_c5k2").unwrap();
        let prism = compute_distances(&g).unwrap();
        let u = g.vertex_by_name("1").unwrap();
        let t = mean_numbers_at(&prism, u).unwrap();
        assert_eq!(t[2][1][1], r("3/2"));
        for h in 0..=3 {
            assert_eq!(t[h][0][h], Rational::one());
        }
        assert!(mean_numbers_at(&dd("path(3)"), 1).is_err());
    }

    #[test]
    fn direct_count_matches_proper_mean_matrices() {
        // (S^T A_i T)_{hj} = p̄_ji^h(u) by the definition's index order
        for name in ["prism_c5k2", "truncated_tetrahedron", "petersen", "path(5)", "cycle(7)"] {
            let data = dd(name);
            for u in 0..data.n() {
                let Ok(t) = mean_numbers_at(&data, u) else {
                    continue;
                };
                let d = data.diameter();
                for i in 0..=d {
                    let b = proper_mean_matrix(&data, u, i).unwrap();
                    for h in 0..=d {
                        for j in 0..=d {
                            assert_eq!(b[(h, j)], t[h][j][i], "{name} u={u} h={h} i={i} j={j}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn worked_dmr_verdicts() {
        let v = is_distance_mean_regular(&dd("cay_z8")).unwrap();
        assert!(v.dmr);
        assert_eq!(
            v.profile.unwrap().bbar,
            RationalMatrix::from_str_rows(&[&["0", "3", "0"], &["1", "0", "2"], &["0", "3/2", "3/2"]])
        );
        let v = is_distance_mean_regular(&dd("cay_z21")).unwrap();
        assert_eq!(
            v.profile.unwrap().bbar,
            RationalMatrix::from_i64_rows(&[vec![0, 10, 0], vec![1, 6, 3], vec![0, 3, 7]])
        );
        assert!(is_distance_mean_regular(&dd("petersen")).unwrap().dmr);
        let p3 = is_distance_mean_regular(&dd("path(3)")).unwrap();
        assert!(!p3.dmr);
        assert_eq!(p3.reason, "eccentricity");
        assert_eq!(
            p3.witness,
            Some(Witness::Eccentricity {
                vertex: 1,
                ecc: 1,
                diameter: 2
            })
        );
    }

    #[test]
    fn prism_profile() {
        let p = is_distance_mean_regular(&dd("prism_c5k2")).unwrap().profile.unwrap();
        assert_eq!(p.k, vec![1, 3, 4, 2]);
        assert_eq!(p.mean_array.b, vec![r("3"), r("2"), r("1")]);
        assert_eq!(p.mean_array.c, vec![r("1"), r("3/2"), r("2")]);
        assert_eq!(p.abar, vec![r("0"), r("0"), r("1/2"), r("1")]);
        assert_eq!(p.proper_bi[1], p.bbar);
        assert_eq!(p.c(0), Rational::zero());
        assert_eq!(p.b(3), Rational::zero());
    }

    #[test]
    fn truncated_tetrahedron_monotonicity() {
        let p = is_distance_mean_regular(&dd("truncated_tetrahedron"))
            .unwrap()
            .profile
            .unwrap();
        let v = p.monotonicity_violations();
        assert!(v.iter().any(|m| m.parameter == "b" && m.i == 1 && m.value == r("4/3") && m.next == r("3/2")));
    }

    #[test]
    fn drg_brute_force() {
        assert!(is_distance_regular(&dd("petersen")).drg);
        for n in 2..=6 {
            assert!(is_distance_regular(&dd(&format!("complete({n})"))).drg);
        }
        let prism = is_distance_regular(&dd("prism_c5k2"));
        assert!(!prism.drg);
        assert!(prism.witness.is_some());
        assert!(!is_distance_regular(&dd("cay_z21")).drg);
        assert!(is_distance_regular(&dd("hypercube(4)")).drg);
    }

    #[test]
    fn super_regularity_of_path() {
        let v = super_regularity(&dd("path(3)"));
        assert!(!v.super_regular);
        assert_eq!(
            v.witness,
            Some(Witness::ShellSizes {
                u: 0,
                v: 1,
                i: 1,
                k_u: 1,
                k_v: 2
            })
        );
        assert!(super_regularity(&dd("prism_c5k2")).super_regular);
    }

    #[test]
    fn profile_check_rejects_corruption() {
        let mut p = is_distance_mean_regular(&dd("prism_c5k2")).unwrap().profile.unwrap();
        p.proper_bi[2][(1, 3)] = r("1");
        assert!(matches!(check_profile(&p), Err(Error::Consistency(_))));
    }
}
