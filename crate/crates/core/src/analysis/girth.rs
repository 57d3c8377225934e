//! Odd and even girth, read off the mean-array and computed directly.

use serde::{Deserialize, Serialize};

use super::DmrProfile;
use crate::error::{Error, Result};
use crate::graph::DistanceData;
use crate::linalg::Rational;

/// `None` stands for "no such cycle".
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GirthReport {
    /// `2m + 1` with `m = min{i : ā_i ≠ 0}`.
    pub odd_from_profile: Option<usize>,
    /// `2i` with `i = min{i : c̄_i > 1}`.
    pub even_from_profile: Option<usize>,
    pub odd_direct: Option<usize>,
    pub even_direct: Option<usize>,
}

impl GirthReport {
    pub fn odd_matches(&self) -> bool {
        self.odd_from_profile == self.odd_direct
    }

    pub fn even_matches(&self) -> bool {
        self.even_from_profile == self.even_direct
    }
}

/// Both girth values from the mean-array next to the direct ones.
pub fn girth_report(profile: &DmrProfile, dd: &DistanceData) -> GirthReport {
    let d = profile.diameter;
    let odd_from_profile = (1..=d).find(|&i| !profile.a(i).is_zero()).map(|m| 2 * m + 1);
    let one = Rational::one();
    let even_from_profile = (1..=d).find(|&i| profile.c(i) > one).map(|i| 2 * i);
    GirthReport {
        odd_from_profile,
        even_from_profile,
        odd_direct: direct_odd_girth(dd),
        even_direct: direct_even_girth(dd),
    }
}

/// As [`girth_report`], failing when either value disagrees with the
/// direct computation.
pub fn girth_from_profile(profile: &DmrProfile, dd: &DistanceData) -> Result<GirthReport> {
    let r = girth_report(profile, dd);
    if !r.odd_matches() {
        return Err(Error::Consistency(format!(
            "odd girth from mean-array {:?} but direct {:?}",
            r.odd_from_profile, r.odd_direct
        )));
    }
    if !r.even_matches() {
        return Err(Error::Consistency(format!(
            "even girth from mean-array {:?} but direct {:?}",
            r.even_from_profile, r.even_direct
        )));
    }
    Ok(r)
}

/// Shortest odd cycle: an edge inside `Γ_i(u)` closes an odd closed walk of
/// length `2i + 1`, and on a shortest odd cycle this bound is attained.
pub fn direct_odd_girth(dd: &DistanceData) -> Option<usize> {
    let mut best = None;
    for u in 0..dd.n() {
        for v in 0..dd.n() {
            for &w in dd.neighbors(v) {
                if dd.dist(u, v) == dd.dist(u, w) {
                    let len = 2 * dd.dist(u, v) + 1;
                    best = Some(best.map_or(len, |b: usize| b.min(len)));
                }
            }
        }
    }
    best
}

/// Shortest even cycle by exhaustive search over simple cycles of length
/// 4, 6, ... through their least vertex.
pub fn direct_even_girth(dd: &DistanceData) -> Option<usize> {
    let n = dd.n();
    (4..=n).step_by(2).find(|&len| {
        (0..n).any(|s| {
            let mut on_path = vec![false; n];
            on_path[s] = true;
            closes_cycle(dd, s, s, 1, len, &mut on_path)
        })
    })
}

fn closes_cycle(
    dd: &DistanceData,
    start: usize,
    cur: usize,
    depth: usize,
    len: usize,
    on_path: &mut [bool],
) -> bool {
    if depth == len {
        return dd.neighbors(cur).contains(&start);
    }
    for &next in dd.neighbors(cur) {
        // remaining steps must be able to return to start
        if next <= start || on_path[next] || dd.dist(next, start) > len - depth {
            continue;
        }
        on_path[next] = true;
        let found = closes_cycle(dd, start, next, depth + 1, len, on_path);
        on_path[next] = false;
        if found {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::is_distance_mean_regular;
    use crate::graph::catalog::catalog;
    use crate::graph::{compute_distances, Graph};

    fn dd(name: &str) -> DistanceData {
        compute_distances(&catalog(name).unwrap()).unwrap()
    }

    fn report(name: &str) -> GirthReport {
        let data = dd(name);
        let p = is_distance_mean_regular(&data).unwrap().profile.unwrap();
        girth_report(&p, &data)
    }

    /// All simple cycles by brute-force enumeration of vertex sequences.
    fn brute_cycle_lengths(g: &Graph) -> Vec<usize> {
        fn walk(g: &Graph, path: &mut Vec<usize>, out: &mut Vec<usize>) {
            let cur = *path.last().unwrap();
            for &next in g.neighbors(cur) {
                if next == path[0] && path.len() >= 3 {
                    out.push(path.len());
                } else if next > path[0] && !path.contains(&next) {
                    path.push(next);
                    walk(g, path, out);
                    path.pop();
                }
            }
        }
        let mut out = Vec::new();
        for s in 0..g.n() {
            walk(g, &mut vec![s], &mut out);
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    #[test]
    fn direct_girths_match_brute_force() {
        for name in ["petersen", "prism_c5k2", "cay_z8", "cycle(6)", "cycle(7)", "complete(4)", "hypercube(3)", "path(4)"] {
            let g = catalog(name).unwrap();
            let data = compute_distances(&g).unwrap();
            let lengths = brute_cycle_lengths(&g);
            let odd = lengths.iter().copied().find(|l| l % 2 == 1);
            let even = lengths.iter().copied().find(|l| l % 2 == 0);
            assert_eq!(direct_odd_girth(&data), odd, "{name}");
            assert_eq!(direct_even_girth(&data), even, "{name}");
        }
    }

    #[test]
    fn worked_girths() {
        let z8 = report("cay_z8");
        assert_eq!((z8.odd_from_profile, z8.odd_direct), (Some(5), Some(5)));
        let prism = report("prism_c5k2");
        assert_eq!((prism.odd_from_profile, prism.odd_direct), (Some(5), Some(5)));
        let c6 = report("cycle(6)");
        assert_eq!(c6.odd_from_profile, None);
        assert_eq!(c6.even_from_profile, Some(6));
        assert!(c6.odd_matches() && c6.even_matches());
    }

    #[test]
    fn even_rule_disagrees_on_petersen() {
        // c̄ = (1, 1) never exceeds 1, yet the graph has 6-cycles
        let r = report("petersen");
        assert_eq!(r.even_from_profile, None);
        assert_eq!(r.even_direct, Some(6));
        let data = dd("petersen");
        let p = is_distance_mean_regular(&data).unwrap().profile.unwrap();
        assert!(matches!(girth_from_profile(&p, &data), Err(Error::Consistency(_))));
    }
}
