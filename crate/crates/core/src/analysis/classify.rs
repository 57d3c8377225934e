use serde::{Deserialize, Serialize};

use super::characterize::{hadamard_characterization, omega_characterization, triple_characterization};
use super::mean::{is_distance_mean_regular, is_distance_regular, mean_numbers_at, super_regularity};
use super::Witness;
use crate::error::{Error, Result};
use crate::graph::DistanceData;
use crate::linalg::real_eigenvalues;
use crate::partition::{distance_partition, quotient_matrix_with_spectrum, Tolerances};

/// DMR verdict of each independent route.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    /// Direct counting of `p̄_ij^h(u)` at every vertex.
    pub definition: bool,
    /// `SᵀA_iT` equal at every vertex, all `i`.
    pub quotient: bool,
    /// `SᵀAT` (adjacency only) equal at every vertex.
    pub adjacency_quotient: bool,
    pub omega: bool,
    pub triples: bool,
    pub hadamard: bool,
}

impl Verdicts {
    fn all(&self) -> [(&'static str, bool); 6] {
        [
            ("definition", self.definition),
            ("quotient", self.quotient),
            ("adjacency_quotient", self.adjacency_quotient),
            ("omega", self.omega),
            ("triples", self.triples),
            ("hadamard", self.hadamard),
        ]
    }

    pub fn agree(&self) -> bool {
        let all = self.all();
        all.iter().all(|(_, v)| *v == all[0].1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reasons {
    pub distance_regular: String,
    pub distance_mean_regular: String,
    pub super_regular: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub distance_regular: bool,
    pub distance_mean_regular: bool,
    pub super_regular: bool,
    pub reasons: Reasons,
    pub characterizations: Verdicts,
    /// Quotient interlacing is tight for the distance partition of every vertex.
    pub tight_interlacing: bool,
    /// `ω_ii` alone is vertex independent.
    pub omega_diagonal_well_defined: bool,
    pub distinct_eigenvalues: usize,
    pub witnesses: Vec<Witness>,
}

fn definition_route(dd: &DistanceData) -> Result<bool> {
    if dd.short_eccentricity().is_some() {
        return Ok(false);
    }
    let base = mean_numbers_at(dd, 0)?;
    for u in 1..dd.n() {
        if mean_numbers_at(dd, u)? != base {
            return Ok(false);
        }
    }
    Ok(true)
}

fn adjacency_quotient_route(dd: &DistanceData) -> Result<bool> {
    if dd.short_eccentricity().is_some() || dd.diameter() == 0 {
        return Ok(dd.short_eccentricity().is_none());
    }
    let base = crate::partition::proper_mean_matrix(dd, 0, 1)?;
    for u in 1..dd.n() {
        if crate::partition::proper_mean_matrix(dd, u, 1)? != base {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Runs every characterization, requires them to agree and checks the
/// chain distance-regular ⇒ distance mean-regular ⇒ super-regular.
pub fn classify(dd: &DistanceData, tols: Tolerances) -> Result<Classification> {
    let sr = super_regularity(dd);
    let dmr = is_distance_mean_regular(dd)?;
    let drg = is_distance_regular(dd);
    let profile = dmr.profile.as_ref();
    let omega = omega_characterization(dd, profile)?;
    let triples = triple_characterization(dd, profile)?;
    let hadamard = hadamard_characterization(dd)?;
    let verdicts = Verdicts {
        definition: definition_route(dd)?,
        quotient: dmr.dmr,
        adjacency_quotient: adjacency_quotient_route(dd)?,
        omega: omega.well_defined,
        triples: triples.well_defined,
        hadamard: hadamard.holds,
    };
    if !verdicts.agree() {
        return Err(Error::Consistency(format!(
            "characterizations disagree: {verdicts:?}"
        )));
    }

    let a = dd.adjacency().to_rational();
    let theta = real_eigenvalues(&a, None, tols.tol, tols.cluster_tol)?;
    let mut tight_interlacing = true;
    for u in 0..dd.n() {
        let q = quotient_matrix_with_spectrum(&a, &distance_partition(dd, u), &theta, tols)?;
        if !q.interlacing.holds {
            return Err(Error::Consistency(format!("quotient at vertex {u} does not interlace")));
        }
        tight_interlacing &= q.interlacing.tight;
    }
    let distinct = theta.distinct();

    if drg.drg && !dmr.dmr {
        return Err(Error::Consistency("distance-regular but not distance mean-regular".into()));
    }
    if dmr.dmr && !sr.super_regular {
        return Err(Error::Consistency("distance mean-regular but not super-regular".into()));
    }
    // only this direction holds: C_7 is distance-regular without tight interlacing
    if tight_interlacing && dmr.dmr && !drg.drg {
        return Err(Error::Consistency("tight interlacing without distance-regularity".into()));
    }
    if drg.drg && distinct != dd.diameter() + 1 {
        return Err(Error::Consistency(format!(
            "distance-regular with D={} but {distinct} distinct eigenvalues",
            dd.diameter()
        )));
    }
    if sr.super_regular && omega.diagonal_well_defined != dmr.dmr {
        return Err(Error::Consistency(
            "super-regular graph: omega_ii well-definedness differs from the verdict".into(),
        ));
    }

    let mut witnesses = Vec::new();
    let drg_reason = if drg.drg {
        "intersection numbers depend only on distances".to_string()
    } else if distinct != dd.diameter() + 1 {
        witnesses.push(Witness::SpectrumSize {
            diameter: dd.diameter(),
            distinct,
        });
        format!("D={} but {distinct} distinct eigenvalues", dd.diameter())
    } else {
        "intersection numbers differ between pairs at equal distance".to_string()
    };
    witnesses.extend(drg.witness.clone());
    witnesses.extend(dmr.witness.clone());
    witnesses.extend(sr.witness.clone());
    witnesses.extend(omega.witness.clone());
    witnesses.extend(triples.witness.clone());
    witnesses.extend(hadamard.witness.clone());

    Ok(Classification {
        distance_regular: drg.drg,
        distance_mean_regular: dmr.dmr,
        super_regular: sr.super_regular,
        reasons: Reasons {
            distance_regular: drg_reason,
            distance_mean_regular: dmr.reason.clone(),
            super_regular: if sr.super_regular {
                "shell sizes agree at every vertex".into()
            } else {
                "shell sizes differ between vertices".into()
            },
        },
        characterizations: verdicts,
        tight_interlacing,
        omega_diagonal_well_defined: omega.diagonal_well_defined,
        distinct_eigenvalues: distinct,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog::{catalog, standard_instances};
    use crate::graph::compute_distances;

    fn classify_name(name: &str) -> Classification {
        classify(&compute_distances(&catalog(name).unwrap()).unwrap(), Tolerances::default()).unwrap()
    }

    #[test]
    fn worked_classifications() {
        let p = classify_name("petersen");
        assert!(p.distance_regular && p.distance_mean_regular && p.super_regular);
        assert!(p.tight_interlacing);
        let c7 = classify_name("cycle(7)");
        assert!(c7.distance_regular && !c7.tight_interlacing);
        assert!(classify_name("path(3)").tight_interlacing);
        let prism = classify_name("prism_c5k2");
        assert!(!prism.distance_regular && prism.distance_mean_regular && prism.super_regular);
        let z21 = classify_name("cay_z21");
        assert!(!z21.distance_regular && z21.distance_mean_regular);
        assert_eq!(z21.distinct_eigenvalues, 11);
        assert_eq!(z21.reasons.distance_regular, "D=2 but 11 distinct eigenvalues");
        let p3 = classify_name("path(3)");
        assert!(!p3.distance_mean_regular && !p3.super_regular);
        assert_eq!(p3.reasons.distance_mean_regular, "eccentricity");
    }

    #[test]
    fn catalog_chain_holds() {
        for g in standard_instances() {
            let c = classify(&compute_distances(&g).unwrap(), Tolerances::default()).unwrap();
            assert!(!c.distance_regular || c.distance_mean_regular, "{:?}", g.label());
            assert!(!c.distance_mean_regular || c.super_regular, "{:?}", g.label());
            assert!(c.characterizations.agree());
        }
    }
}
