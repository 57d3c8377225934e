//! Named graphs.

use super::generators::{self, circulant};
use super::Graph;
use crate::error::{Error, Result};

/// One line of the catalog listing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    /// Order for fixed graphs; `None` for parameterized families.
    pub n: Option<usize>,
    pub note: &'static str,
}

/// Edges of the prism `C_5 □ K_2` as drawn: pairs of drawing positions
/// `P1..P10`, with [`PRISM_POSITION_LABELS`] giving the vertex label printed
/// at each position. Vertex "1" then has distance partition
/// {1} ∪ {2,6,5} ∪ {7,3,4,10} ∪ {8,9}.
const PRISM_C5K2_EDGES: [(usize, usize); 15] = [
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 5),
    (2, 7),
    (3, 7),
    (8, 3),
    (6, 4),
    (8, 4),
    (9, 5),
    (10, 6),
    (7, 9),
    (10, 8),
    (10, 9),
    (6, 5),
];

const PRISM_POSITION_LABELS: [usize; 10] = [1, 2, 6, 5, 3, 4, 7, 10, 8, 9];

pub const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "petersen",
        n: Some(10),
        note: "Petersen graph; distance-regular with intersection array {3,2;1,1}",
    },
    CatalogEntry {
        name: "prism_c5k2",
        n: Some(10),
        note: "prism C5 x K2, vertices labelled 1..10; distance mean-regular, not distance-regular",
    },
    CatalogEntry {
        name: "truncated_tetrahedron",
        n: Some(12),
        note: "K4[triangle], 12 vertices, 18 edges; proper mean-matrices do not commute",
    },
    CatalogEntry {
        name: "cay_z8",
        n: Some(8),
        note: "Cay(Z8; {±1, 4}): 8-cycle plus its 4 long diagonals. The generator set \
               written as ±4 alone would give a perfect matching; {±1, 4} matches the \
               drawing and the mean-matrix with b0 = 3",
    },
    CatalogEntry {
        name: "cay_z21",
        n: Some(21),
        note: "Cay(Z21; ±1..±5): integer mean-matrix [[0,10,0],[1,6,3],[0,3,7]] but 11 \
               distinct eigenvalues, so not distance-regular",
    },
    CatalogEntry {
        name: "cycle(n)",
        n: None,
        note: "cycle C_n, n >= 3",
    },
    CatalogEntry {
        name: "complete(n)",
        n: None,
        note: "complete graph K_n",
    },
    CatalogEntry {
        name: "path(n)",
        n: None,
        note: "path P_n on n vertices (not regular for n >= 3)",
    },
    CatalogEntry {
        name: "hypercube(d)",
        n: None,
        note: "d-cube Q_d on 2^d vertices",
    },
    CatalogEntry {
        name: "prism(n)",
        n: None,
        note: "C_n x K_2, n >= 3",
    },
];

pub fn prism_c5k2() -> Graph {
    let vertex = |p: usize| PRISM_POSITION_LABELS[p - 1] - 1;
    let g = Graph::from_edges(10, PRISM_C5K2_EDGES.iter().map(|&(p, q)| (vertex(p), vertex(q))))
        .expect("static edge list");
    g.with_label("prism_c5k2")
        .with_vertex_labels((1..=10).map(|v| v.to_string()).collect())
}

pub fn cay_z8() -> Graph {
    circulant(8, &[1, 4])
        .expect("static generators")
        .with_label("cay_z8")
}

pub fn cay_z21() -> Graph {
    circulant(21, &[1, 2, 3, 4, 5])
        .expect("static generators")
        .with_label("cay_z21")
}

fn parse_param(name: &str, family: &str) -> Option<Result<usize>> {
    let rest = name.strip_prefix(family)?;
    let inner = rest.strip_prefix('(')?.strip_suffix(')')?;
    Some(
        inner
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::UnknownCatalog(name.to_string())),
    )
}

/// Looks up a catalog graph by name, e.g. `petersen` or `cycle(6)`.
pub fn catalog(name: &str) -> Result<Graph> {
    let name = name.trim();
    match name {
        "petersen" => return Ok(generators::petersen()),
        "prism_c5k2" => return Ok(prism_c5k2()),
        "truncated_tetrahedron" => return Ok(generators::truncated_tetrahedron()),
        "cay_z8" => return Ok(cay_z8()),
        "cay_z21" => return Ok(cay_z21()),
        _ => {}
    }
    if let Some(n) = parse_param(name, "cycle") {
        return generators::cycle(n?);
    }
    if let Some(n) = parse_param(name, "complete") {
        return generators::complete(n?);
    }
    if let Some(n) = parse_param(name, "path") {
        return generators::path(n?);
    }
    if let Some(d) = parse_param(name, "hypercube") {
        let d = d?;
        if d > 16 {
            return Err(Error::UnknownCatalog(name.to_string()));
        }
        return generators::hypercube(d);
    }
    if let Some(n) = parse_param(name, "prism") {
        return generators::prism(n?);
    }
    Err(Error::UnknownCatalog(name.to_string()))
}

/// Concrete instances used for catalog-wide sweeps in tests and benchmarks.
pub fn standard_instance_names() -> Vec<String> {
    let mut names: Vec<String> = [
        "petersen",
        "prism_c5k2",
        "truncated_tetrahedron",
        "cay_z8",
        "cay_z21",
        "hypercube(3)",
        "hypercube(4)",
        "prism(3)",
        "prism(4)",
        "prism(6)",
        "path(3)",
        "path(5)",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    names.extend((3..=9).map(|n| format!("cycle({n})")));
    names.extend((2..=6).map(|n| format!("complete({n})")));
    names
}

pub fn standard_instances() -> Vec<Graph> {
    standard_instance_names()
        .iter()
        .map(|n| catalog(n).expect("standard instance"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup() {
        assert_eq!(catalog("cycle(4)").unwrap().n(), 4);
        assert_eq!(catalog("complete(5)").unwrap().edge_count(), 10);
        assert_eq!(catalog("hypercube(3)").unwrap().n(), 8);
        assert!(matches!(catalog("nope"), Err(Error::UnknownCatalog(_))));
        assert!(matches!(catalog("cycle(x)"), Err(Error::UnknownCatalog(_))));
        assert!(catalog("cycle(2)").is_err());
    }

    #[test]
    fn prism_labels_follow_positions() {
        let g = catalog("prism_c5k2").unwrap();
        let one = g.vertex_by_name("1").unwrap();
        let mut nb: Vec<String> = g.neighbors(one).iter().map(|&v| g.vertex_name(v)).collect();
        nb.sort();
        assert_eq!(nb, vec!["2", "5", "6"]);
    }

    #[test]
    fn every_standard_instance_resolves() {
        let gs = standard_instances();
        assert_eq!(gs.len(), standard_instance_names().len());
        assert!(gs.iter().all(|g| g.label().is_some()));
    }
}
