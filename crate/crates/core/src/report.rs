//! Full analysis pipeline and its JSON and text renderings.
//!
//! JSON output has sorted keys and every float rounded to 12 significant
//! digits, so `from_json(to_json(r)) == r` for any report built here.

use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{algebra_report, AlgebraReport};
use crate::analysis::{
    classify, edge_counts, girth_report, is_distance_mean_regular, Classification, DmrProfile,
    GirthReport, MonotonicityViolation, OmegaTable,
};
use crate::error::{Error, Result};
use crate::graph::{compute_distances, encode_graph6, Graph};
use crate::linalg::{real_eigenvalues, SpectralData};
use crate::meanpoly::{recurrence_check, MeanPolySystem, RecurrenceCheck};
use crate::partition::Tolerances;

pub const SCHEMA: &str = "dmr-report/1";
pub const SIGNIFICANT_DIGITS: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDescriptor {
    /// `catalog`, `edges`, `graph6` or `circulant`.
    pub kind: String,
    pub source: String,
    pub n: usize,
    pub edges: usize,
    pub graph6: String,
}

impl InputDescriptor {
    pub fn new(kind: &str, source: &str, g: &Graph) -> Self {
        InputDescriptor {
            kind: kind.into(),
            source: source.into(),
            n: g.n(),
            edges: g.edge_count(),
            graph6: encode_graph6(g),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tool {
    pub name: String,
    pub version: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectra {
    pub adjacency: SpectralData,
    #[serde(rename = "Bbar")]
    pub bbar: Option<SpectralData>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub tool: Tool,
    pub input: InputDescriptor,
    pub tolerances: Tolerances,
    #[serde(rename = "D")]
    pub diameter: usize,
    pub classification: Classification,
    pub profile: Option<DmrProfile>,
    pub spectra: Spectra,
    pub polynomials: Option<MeanPolySystem>,
    /// Why the polynomial system could not be built, if it could not.
    pub polynomials_error: Option<String>,
    pub recurrence: Option<RecurrenceCheck>,
    pub omega: Option<OmegaTable>,
    pub girth: Option<GirthReport>,
    pub monotonicity: Vec<MonotonicityViolation>,
    pub algebra: Option<AlgebraReport>,
    pub timing_ms: f64,
}

impl Report {
    pub fn is_dmr(&self) -> bool {
        self.classification.distance_mean_regular
    }

    /// Pretty JSON with sorted keys and rounded floats.
    pub fn to_json(&self) -> Result<String> {
        let v = normalized_value(self)?;
        serde_json::to_string_pretty(&v).map_err(|e| Error::Consistency(e.to_string()))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        })
    }

    /// The report as it reads back from JSON.
    pub fn normalized(&self) -> Result<Self> {
        serde_json::from_value(normalized_value(self)?)
            .map_err(|e| Error::Consistency(e.to_string()))
    }
}

/// `x` rounded to [`SIGNIFICANT_DIGITS`] significant digits.
pub fn round_significant(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .unwrap_or(x)
}

fn round_floats(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(x) = n.as_f64() {
                if let Some(r) = serde_json::Number::from_f64(round_significant(x)) {
                    *n = r;
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_floats),
        Value::Object(map) => map.values_mut().for_each(round_floats),
        _ => {}
    }
}

fn normalized_value<T: Serialize>(x: &T) -> Result<Value> {
    let mut v = serde_json::to_value(x).map_err(|e| Error::Consistency(e.to_string()))?;
    round_floats(&mut v);
    Ok(v)
}

/// Distances, classification and, for distance mean-regular graphs, the
/// profile, polynomials, spectra, girth and algebra diagnostics.
pub fn build_report(g: &Graph, input: InputDescriptor, tols: Tolerances) -> Result<Report> {
    let start = Instant::now();
    let dd = compute_distances(g)?;
    let classification = classify(&dd, tols)?;
    let adjacency = real_eigenvalues(&dd.adjacency().to_rational(), None, tols.tol, tols.cluster_tol)?;
    let profile = is_distance_mean_regular(&dd)?.profile;

    let mut report = Report {
        schema: SCHEMA.into(),
        tool: Tool {
            name: env!("CARGO_PKG_NAME").into(),
            version: env!("CARGO_PKG_VERSION").into(),
        },
        input,
        tolerances: tols,
        diameter: dd.diameter(),
        classification,
        profile: None,
        spectra: Spectra {
            adjacency,
            bbar: None,
        },
        polynomials: None,
        polynomials_error: None,
        recurrence: None,
        omega: None,
        girth: None,
        monotonicity: Vec::new(),
        algebra: None,
        timing_ms: 0.0,
    };

    if let Some(p) = profile {
        report.omega = Some(edge_counts(&dd, 0)?);
        report.girth = Some(girth_report(&p, &dd));
        report.monotonicity = p.monotonicity_violations();
        match MeanPolySystem::build(&p, &dd, tols) {
            Ok(sys) => {
                report.spectra.bbar = Some(sys.mu.clone());
                report.recurrence = Some(recurrence_check(&sys, &dd, &p)?);
                report.algebra = Some(algebra_report(&p, &sys, &dd)?);
                report.polynomials = Some(sys);
            }
            Err(e) => report.polynomials_error = Some(e.to_string()),
        }
        report.profile = Some(p);
    }
    report.timing_ms = start.elapsed().as_secs_f64() * 1e3;
    report.normalized()
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn fmt_opt(x: Option<usize>) -> String {
    x.map_or_else(|| "none".to_string(), |v| v.to_string())
}

fn fmt_floats(xs: &[f64]) -> String {
    xs.iter()
        .map(|x| format!("{:.6}", x))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Human-readable summary.
pub fn render_text(r: &Report) -> String {
    let mut s = String::new();
    let c = &r.classification;
    let _ = writeln!(s, "graph: {} ({}), n={}, edges={}, D={}", r.input.source, r.input.kind, r.input.n, r.input.edges, r.diameter);
    let _ = writeln!(s, "distance-regular:       {}  ({})", yes(c.distance_regular), c.reasons.distance_regular);
    let _ = writeln!(s, "distance mean-regular:  {}  ({})", yes(c.distance_mean_regular), c.reasons.distance_mean_regular);
    let _ = writeln!(s, "super-regular:          {}  ({})", yes(c.super_regular), c.reasons.super_regular);
    let _ = writeln!(s, "tight interlacing:      {}", yes(c.tight_interlacing));
    let spec: Vec<String> = r
        .spectra
        .adjacency
        .pairs()
        .map(|(x, m)| format!("{x:.6}^{m}"))
        .collect();
    let _ = writeln!(s, "spectrum of A:          {}", spec.join(", "));
    for w in &c.witnesses {
        let _ = writeln!(s, "witness: {}", serde_json::to_string(w).unwrap_or_default());
    }
    let Some(p) = &r.profile else {
        return s;
    };
    let _ = writeln!(s, "k: {:?}", p.k);
    let _ = writeln!(s, "Bbar:\n{}", p.bbar);
    let b: Vec<String> = p.mean_array.b.iter().map(|x| x.to_string()).collect();
    let cc: Vec<String> = p.mean_array.c.iter().map(|x| x.to_string()).collect();
    let _ = writeln!(s, "mean-array: {{{}; {}}}", b.join(", "), cc.join(", "));
    for (i, m) in p.proper_bi.iter().enumerate().skip(2) {
        let _ = writeln!(s, "B_{i}:\n{m}");
    }
    for v in &r.monotonicity {
        let _ = writeln!(s, "monotonicity: {}_{} = {} vs {}_{} = {}", v.parameter, v.i, v.value, v.parameter, v.i + 1, v.next);
    }
    if let Some(g) = &r.girth {
        let _ = writeln!(
            s,
            "odd girth: {} from mean-array, {} direct",
            fmt_opt(g.odd_from_profile),
            fmt_opt(g.odd_direct)
        );
        let _ = writeln!(
            s,
            "even girth: {} from mean-array, {} direct{}",
            fmt_opt(g.even_from_profile),
            fmt_opt(g.even_direct),
            if g.even_matches() { "" } else { " (mismatch)" }
        );
    }
    if let Some(sys) = &r.polynomials {
        for (i, f) in sys.polys.iter().enumerate() {
            let _ = writeln!(s, "p_{i}(x) = {f}");
        }
        let _ = writeln!(s, "mu: {}", fmt_floats(&sys.mu.eigenvalues));
        let _ = writeln!(s, "w:  {}", fmt_floats(&sys.w));
    }
    if let Some(e) = &r.polynomials_error {
        let _ = writeln!(s, "polynomials: {e}");
    }
    if let Some(a) = &r.algebra {
        let _ = writeln!(s, "D={} d={}", a.diameter, a.d);
        let _ = writeln!(s, "Bi_commute={} Ai_commute={} star_associative={}", a.bi_commute, a.ai_commute, a.star_associative);
        let _ = writeln!(s, "BiBj_expansion_holds={} scheme_identity_holds={}", a.bibj_expansion_holds, a.scheme_identity_holds);
        let _ = writeln!(s, "Bi = p_i(Bbar): {}", a.expansion.polynomial_form_holds);
        let _ = writeln!(s, "mean matrices closed under product: {}", a.subalgebra.closed);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog::catalog;
    use crate::linalg::RationalMatrix;

    fn report(name: &str) -> Report {
        let g = catalog(name).unwrap();
        build_report(&g, InputDescriptor::new("catalog", name, &g), Tolerances::default()).unwrap()
    }

    #[test]
    fn rounding() {
        assert_eq!(round_significant(1.0 / 3.0), 0.333333333333);
        assert_eq!(round_significant(2.0000000000000036), 2.0);
        assert_eq!(round_significant(0.0), 0.0);
        assert_eq!(round_significant(-1234567.891234567), -1234567.89123);
    }

    #[test]
    fn json_round_trip() {
        for name in ["prism_c5k2", "path(3)", "truncated_tetrahedron", "petersen"] {
            let r = report(name);
            let s = r.to_json().unwrap();
            assert_eq!(Report::from_json(&s).unwrap(), r, "{name}");
            assert_eq!(r.to_json().unwrap(), s);
        }
    }

    #[test]
    fn json_has_schema_and_sorted_keys() {
        let s = report("prism_c5k2").to_json().unwrap();
        let v: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["schema"], SCHEMA);
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        let bbar: RationalMatrix = serde_json::from_value(v["profile"]["Bbar"].clone()).unwrap();
        assert_eq!(
            bbar,
            RationalMatrix::from_str_rows(&[
                &["0", "3", "0", "0"],
                &["1", "0", "2", "0"],
                &["0", "3/2", "1/2", "1"],
                &["0", "0", "2", "1"],
            ])
        );
    }

    #[test]
    fn text_rendering() {
        let t = render_text(&report("prism_c5k2"));
        assert!(t.contains("distance mean-regular:  yes"));
        assert!(t.contains("p_2(x) = (2/3)x^2 - 2"));
        let t = render_text(&report("path(3)"));
        assert!(t.contains("eccentricity"));
    }

    #[test]
    fn disconnected_input_fails() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let d = InputDescriptor::new("edges", "x", &g);
        assert_eq!(build_report(&g, d, Tolerances::default()), Err(Error::Disconnected));
    }
}
