//! Parameterized graph families.

use std::collections::BTreeSet;

use super::Graph;
use crate::error::{Error, Result};

/// Circulant graph on `Z_n`: `i ~ i ± s` for each connection `s`. The
/// connection set is closed under negation automatically.
pub fn circulant(n: usize, connections: &[usize]) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Circulant(format!("n must be at least 3, got {n}")));
    }
    if connections.is_empty() {
        return Err(Error::Circulant("empty connection set".into()));
    }
    let mut set = BTreeSet::new();
    for &s in connections {
        if s == 0 || s >= n {
            return Err(Error::Circulant(format!(
                "connection {s} not in 1..{}",
                n - 1
            )));
        }
        set.insert(s);
        set.insert(n - s);
    }
    let edges = (0..n).flat_map(|i| set.iter().map(move |&s| (i, (i + s) % n)));
    Graph::from_edges(n, edges)
}

/// Cartesian product `g □ h`; vertex `(a, b)` has index `a * h.n() + b`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.n() == 0 || h.n() == 0 {
        return Err(Error::Empty);
    }
    let m = h.n();
    let idx = |a: usize, b: usize| a * m + b;
    let mut edges = Vec::new();
    for a in 0..g.n() {
        for (b, b2) in h.edges() {
            edges.push((idx(a, b), idx(a, b2)));
        }
    }
    for (a, a2) in g.edges() {
        for b in 0..m {
            edges.push((idx(a, b), idx(a2, b)));
        }
    }
    Graph::from_edges(g.n() * m, edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Circulant(format!("cycle needs n >= 3, got {n}")));
    }
    Ok(circulant(n, &[1])?.with_label(format!("cycle({n})")))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Empty);
    }
    let edges = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
    Ok(Graph::from_edges(n, edges)?.with_label(format!("complete({n})")))
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Empty);
    }
    Ok(Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))?.with_label(format!("path({n})")))
}

/// `d`-dimensional hypercube on bit strings of length `d`.
pub fn hypercube(d: usize) -> Result<Graph> {
    let n = 1usize << d;
    let edges = (0..n).flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b)))).filter(|(u, v)| u < v);
    Ok(Graph::from_edges(n, edges)?.with_label(format!("hypercube({d})")))
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i ~ i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, edges)
        .expect("static edge list")
        .with_label("petersen")
}

/// Truncated tetrahedron `K_4[△]`: vertex `(t, s)` (`t != s`) is the corner
/// of triangle `t` pointing at triangle `s`. Corners of one triangle are
/// mutually adjacent and `(t, s) ~ (s, t)`.
pub fn truncated_tetrahedron() -> Graph {
    let corners: Vec<(usize, usize)> = (0..4)
        .flat_map(|t| (0..4).filter(move |&s| s != t).map(move |s| (t, s)))
        .collect();
    let idx = |c: (usize, usize)| corners.iter().position(|&x| x == c).expect("corner");
    let mut edges = Vec::new();
    for &(t, s) in &corners {
        for s2 in (0..4).filter(|&x| x != t && x != s) {
            edges.push((idx((t, s)), idx((t, s2))));
        }
        edges.push((idx((t, s)), idx((s, t))));
    }
    Graph::from_edges(12, edges)
        .expect("static edge list")
        .with_label("truncated_tetrahedron")
}

/// `C_n □ K_2`.
pub fn prism(n: usize) -> Result<Graph> {
    Ok(cartesian_product(&cycle(n)?, &complete(2)?)?.with_label(format!("prism({n})")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::compute_distances;

    #[test]
    fn circulant_closure() {
        let g = circulant(8, &[1, 4]).unwrap();
        assert!((0..8).all(|v| g.degree(v) == 3));
        assert_eq!(g.edge_count(), 12);
        // the literal ±4 set alone is a perfect matching
        let m = circulant(8, &[4]).unwrap();
        assert!((0..8).all(|v| m.degree(v) == 1));
        assert_eq!(circulant(5, &[1]).unwrap(), cycle(5).unwrap().clone_unlabelled());
        assert!(circulant(5, &[]).is_err());
        assert!(circulant(5, &[5]).is_err());
        assert!(circulant(2, &[1]).is_err());
    }

    #[test]
    fn z21_circulant_is_ten_regular() {
        let g = circulant(21, &[1, 2, 3, 4, 5]).unwrap();
        assert!((0..21).all(|v| g.degree(v) == 10));
    }

    #[test]
    fn products() {
        let k2 = complete(2).unwrap();
        let c4 = cartesian_product(&k2, &k2).unwrap();
        assert_eq!(c4.n(), 4);
        assert!((0..4).all(|v| c4.degree(v) == 2));
        assert_eq!(compute_distances(&c4).unwrap().diameter(), 2);

        let p3 = cartesian_product(&cycle(3).unwrap(), &k2).unwrap();
        assert_eq!(p3.n(), 6);
        assert_eq!(compute_distances(&p3).unwrap().diameter(), 2);

        let p5 = prism(5).unwrap();
        assert_eq!(p5.n(), 10);
        assert!((0..10).all(|v| p5.degree(v) == 3));
        assert_eq!(compute_distances(&p5).unwrap().diameter(), 3);
    }

    #[test]
    fn product_degrees_add() {
        let g = path(3).unwrap();
        let h = cycle(4).unwrap();
        let p = cartesian_product(&g, &h).unwrap();
        for a in 0..g.n() {
            for b in 0..h.n() {
                assert_eq!(p.degree(a * h.n() + b), g.degree(a) + h.degree(b));
            }
        }
    }

    #[test]
    fn fixed_graphs() {
        let p = petersen();
        assert_eq!((p.n(), p.edge_count()), (10, 15));
        assert!(p.is_regular());
        let t = truncated_tetrahedron();
        assert_eq!((t.n(), t.edge_count()), (12, 18));
        assert!((0..12).all(|v| t.degree(v) == 3));
        let q = hypercube(3).unwrap();
        assert_eq!((q.n(), q.edge_count()), (8, 12));
    }

    impl Graph {
        fn clone_unlabelled(&self) -> Graph {
            Graph::from_edges(self.n(), self.edges()).unwrap()
        }
    }
}
