//! Distance mean-regularity: the definition, its characterizations, the
//! intersection mean-matrix and the resulting classification.

mod characterize;
mod classify;
mod girth;
mod mean;

use serde::{Deserialize, Serialize};

use crate::linalg::{Rational, RationalMatrix};

pub use characterize::{
    edge_counts, fourier_coefficient, hadamard_characterization, omega_characterization,
    triple_characterization, triple_counts, HadamardResult, OmegaResult, OmegaTable,
    TripleResult,
};
pub use classify::{classify, Classification, Reasons, Verdicts};
pub use girth::{direct_even_girth, direct_odd_girth, girth_from_profile, girth_report, GirthReport};
pub use mean::{
    is_distance_mean_regular, is_distance_regular, mean_numbers_at, super_regularity, DmrVerdict,
    DrgVerdict, SuperRegularVerdict,
};

/// `table[h][i][j] = p̄_ij^h`.
pub type MeanTable = Vec<Vec<Vec<Rational>>>;

/// The datum that first differs between two vertices or pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Some vertex does not reach the diameter.
    Eccentricity {
        vertex: usize,
        ecc: usize,
        diameter: usize,
    },
    /// `k_i(u) != k_i(v)`.
    ShellSizes {
        u: usize,
        v: usize,
        i: usize,
        k_u: usize,
        k_v: usize,
    },
    /// `p̄_ij^h(u) != p̄_ij^h(v)`.
    MeanNumber {
        u: usize,
        v: usize,
        h: usize,
        i: usize,
        j: usize,
        at_u: Rational,
        at_v: Rational,
    },
    /// `p_ij^h(u, v) != p_ij^h(x, y)` for two pairs at distance `h`.
    IntersectionNumber {
        first: (usize, usize),
        second: (usize, usize),
        h: usize,
        i: usize,
        j: usize,
        at_first: usize,
        at_second: usize,
    },
    /// Edge count `ω_ij` differs between two vertices.
    EdgeCount {
        u: usize,
        v: usize,
        i: usize,
        j: usize,
        at_u: usize,
        at_v: usize,
    },
    /// Triple count `t_hij` differs between two vertices.
    TripleCount {
        u: usize,
        v: usize,
        h: usize,
        i: usize,
        j: usize,
        at_u: usize,
        at_v: usize,
    },
    /// Row or column sums of `A_iA_j ∘ A_h` are not constant.
    HadamardSums {
        h: usize,
        i: usize,
        j: usize,
        /// `"row"` or `"column"`.
        axis: String,
        index: usize,
        sum: i64,
        expected: i64,
    },
    /// Number of distinct adjacency eigenvalues differs from `D + 1`.
    SpectrumSize { diameter: usize, distinct: usize },
}

/// `(b̄_0..b̄_{D-1}; c̄_1..c̄_D)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeanArray {
    pub b: Vec<Rational>,
    pub c: Vec<Rational>,
}

/// Parameters of a distance mean-regular graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DmrProfile {
    pub n: usize,
    #[serde(rename = "D")]
    pub diameter: usize,
    pub k: Vec<usize>,
    #[serde(rename = "Bbar")]
    pub bbar: RationalMatrix,
    pub mean_array: MeanArray,
    pub abar: Vec<Rational>,
    /// `proper_bi[i][(h, j)] = p̄_ij^h`.
    #[serde(rename = "proper_Bi")]
    pub proper_bi: Vec<RationalMatrix>,
}

impl DmrProfile {
    /// `p̄_ij^h`.
    pub fn p(&self, h: usize, i: usize, j: usize) -> &Rational {
        &self.proper_bi[i][(h, j)]
    }

    pub fn degree(&self) -> usize {
        self.k.get(1).copied().unwrap_or(0)
    }

    pub fn a(&self, i: usize) -> &Rational {
        &self.abar[i]
    }

    /// `b̄_i`, zero for `i >= D`.
    pub fn b(&self, i: usize) -> Rational {
        self.mean_array.b.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `c̄_i`, zero for `i == 0` or `i > D`.
    pub fn c(&self, i: usize) -> Rational {
        if i == 0 {
            return Rational::zero();
        }
        self.mean_array.c.get(i - 1).cloned().unwrap_or_else(Rational::zero)
    }

    /// Indices `i` where `b̄_i < b̄_{i+1}` or `c̄_i > c̄_{i+1}`; for a
    /// distance-regular graph both sequences are monotone.
    pub fn monotonicity_violations(&self) -> Vec<MonotonicityViolation> {
        let mut out = Vec::new();
        for i in 0..self.diameter.saturating_sub(1) {
            if self.b(i) < self.b(i + 1) {
                out.push(MonotonicityViolation {
                    parameter: "b".into(),
                    i,
                    value: self.b(i),
                    next: self.b(i + 1),
                });
            }
        }
        for i in 1..self.diameter {
            if self.c(i) > self.c(i + 1) {
                out.push(MonotonicityViolation {
                    parameter: "c".into(),
                    i,
                    value: self.c(i),
                    next: self.c(i + 1),
                });
            }
        }
        out
    }

    /// The full table `p̄_ij^h`.
    pub fn table(&self) -> MeanTable {
        let m = self.diameter + 1;
        (0..m)
            .map(|h| {
                (0..m)
                    .map(|i| (0..m).map(|j| self.p(h, i, j).clone()).collect())
                    .collect()
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonotonicityViolation {
    pub parameter: String,
    pub i: usize,
    pub value: Rational,
    pub next: Rational,
}
