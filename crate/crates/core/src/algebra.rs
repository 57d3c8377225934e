//! The star product on `span(A_0..A_D)` and the identities around it.

use serde::{Deserialize, Serialize};

use crate::analysis::DmrProfile;
use crate::error::{Error, Result};
use crate::graph::DistanceData;
use crate::linalg::solve::express_in_span;
use crate::linalg::{Rational, RationalMatrix};
use crate::meanpoly::{star_inner, MeanPolySystem};

pub use crate::analysis::fourier_coefficient;

/// `Σ_i x_i A_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarElement {
    pub coeffs: Vec<Rational>,
}

impl StarElement {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        StarElement { coeffs }
    }

    /// `A_i` in a basis of size `dim`.
    pub fn basis(i: usize, dim: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); dim];
        coeffs[i] = Rational::one();
        StarElement { coeffs }
    }

    pub fn to_matrix(&self, dd: &DistanceData) -> RationalMatrix {
        let n = dd.n();
        let mut m = RationalMatrix::zeros(n, n);
        for (x, a) in self.coeffs.iter().zip(dd.distance_matrices()) {
            for u in 0..n {
                for v in 0..n {
                    if a[(u, v)] != 0 {
                        m[(u, v)] = x.clone();
                    }
                }
            }
        }
        m
    }
}

/// `(X★Y)_h = Σ_ij x_i y_j p̄_ij^h`.
pub fn star_product(x: &StarElement, y: &StarElement, profile: &DmrProfile) -> StarElement {
    let m = profile.diameter + 1;
    let coeffs = (0..m)
        .map(|h| {
            let mut s = Rational::zero();
            for (i, xi) in x.coeffs.iter().enumerate() {
                if xi.is_zero() {
                    continue;
                }
                for (j, yj) in y.coeffs.iter().enumerate() {
                    if !yj.is_zero() {
                        s += &(xi * yj * profile.p(h, i, j));
                    }
                }
            }
            s
        })
        .collect();
    StarElement { coeffs }
}

/// Orthogonal projection of the ordinary product `XY` onto the distance
/// matrices, coefficient by coefficient.
pub fn projected_product(x: &StarElement, y: &StarElement, dd: &DistanceData) -> Result<StarElement> {
    let xy = x.to_matrix(dd).mul(&y.to_matrix(dd))?;
    let coeffs = (0..=dd.diameter())
        .map(|h| fourier_coefficient(&xy, dd, h))
        .collect::<Result<_>>()?;
    Ok(StarElement { coeffs })
}

/// `(i, j, row, col)` where `M_iM_j` and `M_jM_i` first differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutationWitness {
    pub i: usize,
    pub j: usize,
    pub row: usize,
    pub col: usize,
}

pub fn commutativity_check(mats: &[RationalMatrix]) -> Result<Option<CommutationWitness>> {
    for i in 0..mats.len() {
        for j in (i + 1)..mats.len() {
            let ab = mats[i].mul(&mats[j])?;
            let ba = mats[j].mul(&mats[i])?;
            if let Some(&(row, col)) = ab.diff_positions(&ba).first() {
                return Ok(Some(CommutationWitness { i, j, row, col }));
            }
        }
    }
    Ok(None)
}

/// `(A_i★A_j)★A_k ≠ A_i★(A_j★A_k)` at coefficient `l`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssociativityWitness {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
}

/// Checks associativity on basis triples with the star product and, in
/// parallel, through `(B̄_kB̄_i)_{lj} = (B̄_iB̄_k)_{lj}`; the two must agree.
pub fn associativity_check(profile: &DmrProfile) -> Result<Option<AssociativityWitness>> {
    let m = profile.diameter + 1;
    let bi = &profile.proper_bi;
    let mut first = None;
    for i in 0..m {
        for k in 0..m {
            let ki = bi[k].mul(&bi[i])?;
            let ik = bi[i].mul(&bi[k])?;
            for j in 0..m {
                let (ei, ej, ek) = (
                    StarElement::basis(i, m),
                    StarElement::basis(j, m),
                    StarElement::basis(k, m),
                );
                let left = star_product(&star_product(&ei, &ej, profile), &ek, profile);
                let right = star_product(&ei, &star_product(&ej, &ek, profile), profile);
                for l in 0..m {
                    let star_eq = left.coeffs[l] == right.coeffs[l];
                    let matrix_eq = ki[(l, j)] == ik[(l, j)];
                    if star_eq != matrix_eq {
                        return Err(Error::Consistency(format!(
                            "associativity routes disagree at ({i},{j},{k},{l})"
                        )));
                    }
                    if !star_eq && first.is_none() {
                        first = Some(AssociativityWitness { i, j, k, l });
                    }
                }
            }
        }
    }
    Ok(first)
}

/// Nonzero difference `lhs − rhs` for one identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Residual {
    pub identity: String,
    pub index: Vec<usize>,
    pub residual: RationalMatrix,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpansionReport {
    /// The `B̄_i` commute pairwise.
    pub hypothesis_holds: bool,
    /// `B̄_iB̄_j = Σ_h p̄_ij^h B̄_h` for all `i, j`.
    pub product_expansion_holds: bool,
    /// `B̄B̄_i = b̄_{i−1}B̄_{i−1} + ā_iB̄_i + c̄_{i+1}B̄_{i+1}` for all `i`.
    pub recurrence_holds: bool,
    /// `B̄_i = p̄_i(B̄)` for all `i`.
    pub polynomial_form_holds: bool,
    /// `max |p̄_ij^h − ⟨p̄_ip̄_j, p̄_h⟩★ / ‖p̄_h‖²★|`.
    pub fourier_route_max_error: f64,
    pub residuals: Vec<Residual>,
}

/// Runs whether or not the hypothesis holds, collecting residuals.
pub fn expansion_check(profile: &DmrProfile, sys: &MeanPolySystem) -> Result<ExpansionReport> {
    let m = profile.diameter + 1;
    let bi = &profile.proper_bi;
    let hypothesis_holds = commutativity_check(bi)?.is_none();
    let mut residuals = Vec::new();

    let mut product_expansion_holds = true;
    for i in 0..m {
        for j in 0..m {
            let lhs = bi[i].mul(&bi[j])?;
            let mut rhs = RationalMatrix::zeros(m, m);
            for (h, bh) in bi.iter().enumerate() {
                rhs = rhs.add(&bh.scale(profile.p(h, i, j)))?;
            }
            let r = lhs.sub(&rhs)?;
            if !r.is_zero() {
                product_expansion_holds = false;
                residuals.push(Residual {
                    identity: "product_expansion".into(),
                    index: vec![i, j],
                    residual: r,
                });
            }
        }
    }

    let mut recurrence_holds = true;
    for i in 0..m {
        let lhs = profile.bbar.mul(&bi[i])?;
        let mut rhs = bi[i].scale(profile.a(i));
        if i > 0 {
            rhs = rhs.add(&bi[i - 1].scale(&profile.b(i - 1)))?;
        }
        if i + 1 < m {
            rhs = rhs.add(&bi[i + 1].scale(&profile.c(i + 1)))?;
        }
        let r = lhs.sub(&rhs)?;
        if !r.is_zero() {
            recurrence_holds = false;
            residuals.push(Residual {
                identity: "recurrence".into(),
                index: vec![i],
                residual: r,
            });
        }
    }

    let mut polynomial_form_holds = true;
    for i in 0..m {
        let r = bi[i].sub(&sys.pofb[i])?;
        if !r.is_zero() {
            polynomial_form_holds = false;
            residuals.push(Residual {
                identity: "polynomial_form".into(),
                index: vec![i],
                residual: r,
            });
        }
    }

    let n = profile.n;
    let mut fourier_route_max_error: f64 = 0.0;
    for h in 0..m {
        let norm = star_inner(&sys.polys[h], &sys.polys[h], sys, n);
        for i in 0..m {
            for j in 0..m {
                let prod = sys.polys[i].mul(&sys.polys[j]);
                let coef = star_inner(&prod, &sys.polys[h], sys, n) / norm;
                fourier_route_max_error =
                    fourier_route_max_error.max((coef - profile.p(h, i, j).to_f64()).abs());
            }
        }
    }

    Ok(ExpansionReport {
        hypothesis_holds,
        product_expansion_holds,
        recurrence_holds,
        polynomial_form_holds,
        fourier_route_max_error,
        residuals,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeWitness {
    pub r: usize,
    pub s: usize,
    pub i: usize,
    pub j: usize,
}

/// `Σ_h p̄_sh^r p̄_ij^h = Σ_h p̄_ih^r p̄_sj^h` for all `r, s, i, j`.
pub fn scheme_identity_check(profile: &DmrProfile) -> Option<SchemeWitness> {
    let m = profile.diameter + 1;
    let p = |h, i, j| profile.p(h, i, j);
    for r in 0..m {
        for s in 0..m {
            for i in 0..m {
                for j in 0..m {
                    let mut lhs = Rational::zero();
                    let mut rhs = Rational::zero();
                    for h in 0..m {
                        lhs += &(p(r, s, h) * p(h, i, j));
                        rhs += &(p(r, i, h) * p(h, s, j));
                    }
                    if lhs != rhs {
                        return Some(SchemeWitness { r, s, i, j });
                    }
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductMembership {
    pub i: usize,
    pub j: usize,
    /// `Ā_iĀ_j ∈ span(Ā_0..Ā_D)`.
    pub in_span: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubalgebraReport {
    /// `D + 1`, the number of matrices `Ā_i`.
    pub mean_span_size: usize,
    /// `d + 1`, the dimension of the adjacency algebra.
    pub adjacency_algebra_dim: usize,
    pub closed: bool,
    pub products: Vec<ProductMembership>,
}

/// Powers `I, A, .., A^d` until the next power is dependent.
pub fn adjacency_power_basis(dd: &DistanceData) -> Result<Vec<RationalMatrix>> {
    let a = dd.adjacency().to_rational();
    let mut basis = vec![RationalMatrix::identity(dd.n())];
    loop {
        let next = basis.last().expect("nonempty").mul(&a)?;
        if express_in_span(&basis, &next).is_some() {
            return Ok(basis);
        }
        basis.push(next);
    }
}

/// Expresses each `Ā_iĀ_j` in the power basis of `A` and decides membership
/// in `span(Ā_0..Ā_D)` exactly.
pub fn subalgebra_check(sys: &MeanPolySystem, dd: &DistanceData) -> Result<SubalgebraReport> {
    let powers = adjacency_power_basis(dd)?;
    let m = sys.abar.len();
    let mut products = Vec::new();
    for i in 0..m {
        for j in i..m {
            let prod = sys.abar[i].mul(&sys.abar[j])?;
            if express_in_span(&powers, &prod).is_none() {
                return Err(Error::Consistency(format!(
                    "product of mean matrices {i},{j} is not a polynomial in A"
                )));
            }
            products.push(ProductMembership {
                i,
                j,
                in_span: express_in_span(&sys.abar, &prod).is_some(),
            });
        }
    }
    Ok(SubalgebraReport {
        mean_span_size: m,
        adjacency_algebra_dim: powers.len(),
        closed: products.iter().all(|p| p.in_span),
        products,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgebraWitnesses {
    pub bi_commute: Option<CommutationWitness>,
    pub ai_commute: Option<CommutationWitness>,
    pub associativity: Option<AssociativityWitness>,
    pub scheme_identity: Option<SchemeWitness>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgebraReport {
    #[serde(rename = "D")]
    pub diameter: usize,
    /// Number of distinct adjacency eigenvalues minus one.
    pub d: usize,
    #[serde(rename = "Bi_commute")]
    pub bi_commute: bool,
    #[serde(rename = "Ai_commute")]
    pub ai_commute: bool,
    pub star_associative: bool,
    #[serde(rename = "BiBj_expansion_holds")]
    pub bibj_expansion_holds: bool,
    pub scheme_identity_holds: bool,
    pub expansion: ExpansionReport,
    pub subalgebra: SubalgebraReport,
    pub witnesses: AlgebraWitnesses,
}

pub fn algebra_report(
    profile: &DmrProfile,
    sys: &MeanPolySystem,
    dd: &DistanceData,
) -> Result<AlgebraReport> {
    let bi_w = commutativity_check(&profile.proper_bi)?;
    let ai: Vec<RationalMatrix> = dd.distance_matrices().iter().map(|a| a.to_rational()).collect();
    let ai_w = commutativity_check(&ai)?;
    let assoc = associativity_check(profile)?;
    let scheme = scheme_identity_check(profile);
    let expansion = expansion_check(profile, sys)?;
    let subalgebra = subalgebra_check(sys, dd)?;
    let d = subalgebra.adjacency_algebra_dim - 1;
    if profile.diameter > d {
        return Err(Error::Consistency(format!(
            "D={} exceeds d={d}",
            profile.diameter
        )));
    }
    Ok(AlgebraReport {
        diameter: profile.diameter,
        d,
        bi_commute: bi_w.is_none(),
        ai_commute: ai_w.is_none(),
        star_associative: assoc.is_none(),
        bibj_expansion_holds: expansion.product_expansion_holds,
        scheme_identity_holds: scheme.is_none(),
        expansion,
        subalgebra,
        witnesses: AlgebraWitnesses {
            bi_commute: bi_w,
            ai_commute: ai_w,
            associativity: assoc,
            scheme_identity: scheme,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::is_distance_mean_regular;
    use crate::graph::catalog::{catalog, standard_instances};
    use crate::graph::compute_distances;
    use crate::partition::Tolerances;
    use proptest::prelude::*;

    fn setup(name: &str) -> (DistanceData, DmrProfile, MeanPolySystem) {
        let dd = compute_distances(&catalog(name).unwrap()).unwrap();
        let p = is_distance_mean_regular(&dd).unwrap().profile.unwrap();
        let sys = MeanPolySystem::build(&p, &dd, Tolerances::default()).unwrap();
        (dd, p, sys)
    }

    fn el(v: &[i64]) -> StarElement {
        StarElement::new(v.iter().map(|&x| Rational::from_int(x)).collect())
    }

    #[test]
    fn star_product_worked_values() {
        let (_, p, _) = setup("prism_c5k2");
        let a1 = StarElement::basis(1, 4);
        let sq = star_product(&a1, &a1, &p);
        assert_eq!(sq.coeffs, vec![Rational::from_int(3), Rational::zero(), Rational::new(3, 2), Rational::zero()]);
        for j in 0..4 {
            let aj = StarElement::basis(j, 4);
            assert_eq!(star_product(&StarElement::basis(0, 4), &aj, &p), aj);
        }
    }

    #[test]
    fn fourier_of_basis() {
        let (dd, _, _) = setup("prism_c5k2");
        for h in 0..=3 {
            let ah = dd.distance_matrix(h).to_rational();
            assert_eq!(fourier_coefficient(&ah, &dd, h).unwrap(), Rational::one());
        }
    }

    #[test]
    fn worked_algebra_reports() {
        let (dd, p, sys) = setup("petersen");
        let r = algebra_report(&p, &sys, &dd).unwrap();
        assert!(r.bi_commute && r.ai_commute && r.star_associative);
        assert!(r.bibj_expansion_holds && r.scheme_identity_holds);
        assert!(r.expansion.recurrence_holds && r.expansion.polynomial_form_holds);
        assert!(r.expansion.fourier_route_max_error < 1e-9);
        assert!(r.subalgebra.closed);
        assert_eq!((r.diameter, r.d), (2, 2));

        let (dd, p, sys) = setup("truncated_tetrahedron");
        let r = algebra_report(&p, &sys, &dd).unwrap();
        assert!(!r.bi_commute && !r.star_associative && !r.scheme_identity_holds);
        assert!(r.witnesses.associativity.is_some() && r.witnesses.scheme_identity.is_some());
        assert!(!r.expansion.polynomial_form_holds);
        let b2 = r
            .expansion
            .residuals
            .iter()
            .find(|x| x.identity == "polynomial_form" && x.index == vec![2])
            .unwrap();
        assert_eq!(b2.residual.diff_positions(&RationalMatrix::zeros(4, 4)), vec![(2, 2), (2, 3), (3, 2), (3, 3)]);

        let (_, p, sys) = setup("prism_c5k2");
        assert!(expansion_check(&p, &sys).unwrap().polynomial_form_holds);

        let (dd, p, sys) = setup("complete(5)");
        let r = algebra_report(&p, &sys, &dd).unwrap();
        assert!(r.star_associative && r.scheme_identity_holds && r.subalgebra.closed);
    }

    #[test]
    fn z21_circulant_dimensions() {
        let (dd, _, sys) = setup("cay_z21");
        let s = subalgebra_check(&sys, &dd).unwrap();
        assert_eq!((s.mean_span_size, s.adjacency_algebra_dim), (3, 11));
    }

    #[test]
    fn commutativity_edge_cases() {
        assert_eq!(commutativity_check(&[RationalMatrix::identity(3)]).unwrap(), None);
        let a = RationalMatrix::from_i64_rows(&[vec![0, 1], vec![0, 0]]);
        let b = RationalMatrix::from_i64_rows(&[vec![0, 0], vec![1, 0]]);
        assert!(commutativity_check(&[a, b]).unwrap().is_some());
    }

    #[test]
    fn catalog_equivalences() {
        for g in standard_instances() {
            let dd = compute_distances(&g).unwrap();
            let Some(p) = is_distance_mean_regular(&dd).unwrap().profile else {
                continue;
            };
            let sys = MeanPolySystem::build(&p, &dd, Tolerances::default()).unwrap();
            let r = algebra_report(&p, &sys, &dd).unwrap();
            let name = g.label().unwrap_or_default().to_string();
            assert_eq!(r.star_associative, r.bi_commute, "{name}");
            assert_eq!(r.bi_commute, r.ai_commute, "{name}");
            assert_eq!(r.scheme_identity_holds, r.bi_commute, "{name}");
            if r.bi_commute {
                assert!(r.expansion.polynomial_form_holds, "{name}");
                assert!(r.bibj_expansion_holds, "{name}");
            }
            assert!(r.diameter <= r.d, "{name}");
        }
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-6i64..=6, 1i64..=4).prop_map(|(a, b)| Rational::new(a, b))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn star_is_commutative_and_a_projection(
            idx in 0usize..4,
            xs in proptest::collection::vec(small_rational(), 4),
            ys in proptest::collection::vec(small_rational(), 4),
        ) {
            let name = ["prism_c5k2", "truncated_tetrahedron", "petersen", "cay_z8"][idx];
            let (dd, p, _) = setup(name);
            let m = p.diameter + 1;
            let x = StarElement::new(xs[..m].to_vec());
            let y = StarElement::new(ys[..m].to_vec());
            let xy = star_product(&x, &y, &p);
            prop_assert_eq!(&xy, &star_product(&y, &x, &p));
            prop_assert_eq!(xy, projected_product(&x, &y, &dd).unwrap());
        }
    }

    #[test]
    fn element_helpers() {
        let (dd, _, _) = setup("cycle(4)");
        let m = el(&[1, 0, 0]).to_matrix(&dd);
        assert_eq!(m, RationalMatrix::identity(4));
    }
}
