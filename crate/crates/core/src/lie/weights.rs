use std::fmt;

use crate::error::{Error, Result};

/// The algebra `A_n`, acting on `C^{n+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rank(u32);

impl Rank {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRank(n));
        }
        Ok(Rank(n))
    }

    pub fn n(self) -> u32 {
        self.0
    }

    /// `n + 1`, the number of ε-coordinates.
    pub fn size(self) -> usize {
        self.0 as usize + 1
    }

    /// `ρ` in ε-coordinates: `(n, n-1, …, 0)`.
    pub fn rho(self) -> Vec<i64> {
        (0..=self.0 as i64).rev().collect()
    }

    /// Dimension of the adjoint representation, `(n+1)^2 - 1`.
    pub fn adjoint_dimension(self) -> u64 {
        let s = self.size() as u64;
        s * s - 1
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A_{}", self.0)
    }
}

/// Highest weight in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DynkinLabels(Vec<u32>);

impl DynkinLabels {
    pub fn new(labels: Vec<u32>, rank: Rank) -> Result<Self> {
        if labels.len() != rank.n() as usize {
            return Err(Error::LabelLength {
                expected: rank.n() as usize,
                got: labels.len(),
            });
        }
        Ok(DynkinLabels(labels))
    }

    pub fn trivial(rank: Rank) -> Self {
        DynkinLabels(vec![0; rank.n() as usize])
    }

    /// `[1, 0, …, 0, 1]`; `[2]` for `A_1`.
    pub fn adjoint(rank: Rank) -> Self {
        let mut a = vec![0; rank.n() as usize];
        a[0] += 1;
        a[rank.n() as usize - 1] += 1;
        DynkinLabels(a)
    }

    /// `[1, 0, …, 0]`
    pub fn defining(rank: Rank) -> Self {
        let mut a = vec![0; rank.n() as usize];
        a[0] = 1;
        DynkinLabels(a)
    }

    pub fn rank(&self) -> Rank {
        Rank(self.0.len() as u32)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Labels of the dual representation.
    pub fn reversed(&self) -> Self {
        DynkinLabels(self.0.iter().rev().copied().collect())
    }

    /// The highest weight as a partition with `n + 1` parts, the last one zero.
    pub fn to_partition(&self) -> Vec<i64> {
        let mut parts = vec![0i64; self.0.len() + 1];
        for i in (0..self.0.len()).rev() {
            parts[i] = parts[i + 1] + self.0[i] as i64;
        }
        parts
    }

    /// Inverse of [`to_partition`](Self::to_partition); any uniform shift of a
    /// non-increasing vector gives the same labels.
    pub fn from_partition(parts: &[i64]) -> Self {
        debug_assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "{parts:?} is not dominant"
        );
        DynkinLabels(parts.windows(2).map(|w| (w[0] - w[1]) as u32).collect())
    }
}

impl fmt::Display for DynkinLabels {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// A weight in ε-coordinates, shifted so that its smallest entry is zero.
///
/// Weights of `A_n` are only defined modulo `(1, …, 1)`; normalizing makes
/// equality a plain comparison.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVector(Vec<i64>);

impl WeightVector {
    pub fn new(mut coords: Vec<i64>) -> Self {
        if let Some(&min) = coords.iter().min() {
            coords.iter_mut().for_each(|c| *c -= min);
        }
        WeightVector(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// Sorted into non-increasing order, i.e. the dominant weight of its Weyl orbit.
    pub fn dominant(&self) -> WeightVector {
        let mut c = self.0.clone();
        c.sort_unstable_by(|a, b| b.cmp(a));
        WeightVector(c)
    }
}
