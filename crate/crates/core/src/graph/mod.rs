//! Simple undirected graphs on dense vertex indices `0..n`.

pub mod catalog;
pub mod distance;
pub mod edgelist;
pub mod generators;
pub mod graph6;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

pub use catalog::catalog;
pub use distance::{compute_distances, DistanceData};
pub use edgelist::parse_edge_list;
pub use generators::{cartesian_product, circulant};
pub use graph6::{encode_graph6, parse_graph6};

/// Immutable simple graph. Neighbor lists are sorted and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    label: Option<String>,
    vertex_labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph {
            adj,
            label: None,
            vertex_labels: None,
        })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// Attaches display names for vertices. Panics if the count differs from `n`.
    pub fn with_vertex_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n(), "vertex label count");
        self.vertex_labels = Some(labels);
        self
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn vertex_labels(&self) -> Option<&[String]> {
        self.vertex_labels.as_deref()
    }

    /// Display name of vertex `v`: its label if one is attached, else the index.
    pub fn vertex_name(&self, v: usize) -> String {
        match &self.vertex_labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Index of the vertex carrying display name `name`.
    pub fn vertex_by_name(&self, name: &str) -> Option<usize> {
        match &self.vertex_labels {
            Some(l) => l.iter().position(|x| x == name),
            None => name.parse().ok().filter(|&v| v < self.n()),
        }
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        let n = self.n();
        let mut a = IntMatrix::zeros(n, n);
        for (u, v) in self.edges() {
            a[(u, v)] = 1;
            a[(v, u)] = 1;
        }
        a
    }

    pub fn is_regular(&self) -> bool {
        self.adj.windows(2).all(|w| w[0].len() == w[1].len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dedup_and_symmetry() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(1, 0) && g.has_edge(0, 1));
        assert!(!g.has_edge(0, 2));
        let a = g.adjacency_matrix();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(a[(i, j)], a[(j, i)]);
            }
            assert_eq!(a[(i, i)], 0);
        }
    }

    #[test]
    fn rejects_loops_and_range() {
        assert_eq!(Graph::from_edges(2, [(1, 1)]), Err(Error::LoopEdge(1)));
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn vertex_names() {
        let g = Graph::from_edges(2, [(0, 1)])
            .unwrap()
            .with_vertex_labels(vec!["a".into(), "b".into()]);
        assert_eq!(g.vertex_by_name("b"), Some(1));
        assert_eq!(g.vertex_name(0), "a");
        let h = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(h.vertex_by_name("1"), Some(1));
        assert_eq!(h.vertex_by_name("2"), None);
    }
}
