//! All-pairs hop distances, distance matrices `A_0..A_D` and distance shells.

use std::collections::VecDeque;

use super::Graph;
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Immutable all-pairs distance data of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceData {
    dist: Vec<Vec<usize>>,
    diameter: usize,
    distance_matrices: Vec<IntMatrix>,
    /// `shells[u][i]` = vertices at distance `i` from `u`, ascending, for `i <= ecc(u)`.
    shells: Vec<Vec<Vec<usize>>>,
    adjacency: Vec<Vec<usize>>,
    adjacency_matrix: IntMatrix,
}

fn bfs(g: &Graph, src: usize) -> Vec<Option<usize>> {
    let mut d = vec![None; g.n()];
    d[src] = Some(0);
    let mut q = VecDeque::from([src]);
    while let Some(u) = q.pop_front() {
        let du = d[u].expect("visited");
        for &v in g.neighbors(u) {
            if d[v].is_none() {
                d[v] = Some(du + 1);
                q.push_back(v);
            }
        }
    }
    d
}

/// BFS from every vertex. Fails on empty or disconnected graphs.
pub fn compute_distances(g: &Graph) -> Result<DistanceData> {
    let n = g.n();
    if n == 0 {
        return Err(Error::Empty);
    }
    let mut dist = Vec::with_capacity(n);
    for u in 0..n {
        let row = bfs(g, u)
            .into_iter()
            .collect::<Option<Vec<usize>>>()
            .ok_or(Error::Disconnected)?;
        dist.push(row);
    }
    let diameter = dist.iter().flatten().copied().max().unwrap_or(0);
    let mut distance_matrices = vec![IntMatrix::zeros(n, n); diameter + 1];
    let mut shells = Vec::with_capacity(n);
    for u in 0..n {
        let ecc = dist[u].iter().copied().max().unwrap_or(0);
        let mut s = vec![Vec::new(); ecc + 1];
        for v in 0..n {
            let d = dist[u][v];
            distance_matrices[d][(u, v)] = 1;
            s[d].push(v);
        }
        shells.push(s);
    }
    Ok(DistanceData {
        dist,
        diameter,
        distance_matrices,
        shells,
        adjacency: (0..n).map(|v| g.neighbors(v).to_vec()).collect(),
        adjacency_matrix: g.adjacency_matrix(),
    })
}

impl DistanceData {
    pub fn n(&self) -> usize {
        self.dist.len()
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    pub fn dist(&self, u: usize, v: usize) -> usize {
        self.dist[u][v]
    }

    pub fn eccentricity(&self, u: usize) -> usize {
        self.shells[u].len() - 1
    }

    /// `Γ_i(u)`; empty when `i > ecc(u)`.
    pub fn shell(&self, u: usize, i: usize) -> &[usize] {
        self.shells[u].get(i).map_or(&[], Vec::as_slice)
    }

    /// All shells of `u`, `Γ_0(u)..Γ_ecc(u)(u)`.
    pub fn shells(&self, u: usize) -> &[Vec<usize>] {
        &self.shells[u]
    }

    /// `k_i(u) = |Γ_i(u)|`.
    pub fn shell_size(&self, u: usize, i: usize) -> usize {
        self.shell(u, i).len()
    }

    /// `A_i`; panics if `i > D`.
    pub fn distance_matrix(&self, i: usize) -> &IntMatrix {
        &self.distance_matrices[i]
    }

    pub fn distance_matrices(&self) -> &[IntMatrix] {
        &self.distance_matrices
    }

    pub fn adjacency(&self) -> &IntMatrix {
        &self.adjacency_matrix
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// `|Γ_i(u) ∩ Γ_j(v)|`.
    pub fn intersection_number(&self, i: usize, j: usize, u: usize, v: usize) -> usize {
        self.shell(u, i)
            .iter()
            .filter(|&&w| self.dist[v][w] == j)
            .count()
    }

    /// First vertex whose eccentricity is below the diameter.
    pub fn short_eccentricity(&self) -> Option<usize> {
        (0..self.n()).find(|&u| self.eccentricity(u) < self.diameter)
    }
}
