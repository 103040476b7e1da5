//! Rank-independent names for the irreducibles of mixed tensors.
//!
//! A pair of partitions `(λ, μ)` names the `A_n` module whose highest weight in
//! ε-coordinates is `(λ_1, …, λ_a, 0, …, 0, -μ_b, …, -μ_1)`. Reading the labels
//! back requires the weight to lie in the root lattice: shifting it to zero
//! coordinate sum recovers `λ` from the positive entries and `μ` from the negative ones.

use std::fmt;

use super::weights::{DynkinLabels, Rank};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StableLabel {
    left: Vec<u32>,
    right: Vec<u32>,
}

fn check_partition(p: &[u32], side: &str) -> Result<()> {
    if p.contains(&0) {
        return Err(Error::InvalidStableLabel(format!(
            "{side} partition {p:?} has a zero part"
        )));
    }
    if p.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidStableLabel(format!(
            "{side} partition {p:?} is not non-increasing"
        )));
    }
    Ok(())
}

impl StableLabel {
    pub fn new(left: Vec<u32>, right: Vec<u32>) -> Result<Self> {
        check_partition(&left, "left")?;
        check_partition(&right, "right")?;
        let (l, r): (u32, u32) = (left.iter().sum(), right.iter().sum());
        if l != r {
            return Err(Error::InvalidStableLabel(format!(
                "sizes differ: |{left:?}| = {l}, |{right:?}| = {r}"
            )));
        }
        Ok(StableLabel { left, right })
    }

    pub fn trivial() -> Self {
        StableLabel {
            left: vec![],
            right: vec![],
        }
    }

    /// `((p), (p))`, the highest-weight piece `[p, 0, …, 0, p]` of `Y_p`.
    pub fn leading(p: u32) -> Self {
        if p == 0 {
            return Self::trivial();
        }
        StableLabel {
            left: vec![p],
            right: vec![p],
        }
    }

    pub fn left(&self) -> &[u32] {
        &self.left
    }

    pub fn right(&self) -> &[u32] {
        &self.right
    }

    /// `|λ| = |μ|`
    pub fn degree(&self) -> u32 {
        self.left.iter().sum()
    }

    /// Number of ε-coordinates the label occupies.
    pub fn depth(&self) -> usize {
        self.left.len() + self.right.len()
    }
}

impl fmt::Display for StableLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |p: &[u32]| p.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "(({}),({}))", join(&self.left), join(&self.right))
    }
}

/// Dynkin labels of `(λ, μ)` at rank `n`; needs `len(λ) + len(μ) <= n + 1`.
///
/// When `len(λ) + len(μ) <= n` this is `a_i = λ_i - λ_{i+1}` from the left and
/// `a_{n+1-i} = μ_i - μ_{i+1}` from the right with zeros between. At
/// `len(λ) + len(μ) = n + 1` the two ends share one label, `λ_a + μ_b`.
pub fn stable_to_dynkin(label: &StableLabel, rank: Rank) -> Result<DynkinLabels> {
    let size = rank.size();
    if label.depth() > size {
        return Err(Error::RankTooSmall {
            needed: label.depth(),
            rank: rank.n(),
            available: size,
        });
    }
    let mut weight = vec![0i64; size];
    for (i, &part) in label.left.iter().enumerate() {
        weight[i] = part as i64;
    }
    for (i, &part) in label.right.iter().enumerate() {
        weight[size - 1 - i] = -(part as i64);
    }
    Ok(DynkinLabels::from_partition(&weight))
}

/// Inverse of [`stable_to_dynkin`]. Fails when the weight is not in the root
/// lattice, i.e. the module does not occur in any mixed tensor with equal numbers
/// of upper and lower indices.
pub fn dynkin_to_stable(labels: &DynkinLabels) -> Result<StableLabel> {
    let parts = labels.to_partition();
    let size = parts.len() as i64;
    let total: i64 = parts.iter().sum();
    if total % size != 0 {
        return Err(Error::NotStable(labels.as_slice().to_vec()));
    }
    let shift = total / size;
    let weight: Vec<i64> = parts.iter().map(|p| p - shift).collect();
    let left = weight
        .iter()
        .filter(|&&w| w > 0)
        .map(|&w| w as u32)
        .collect();
    let right = weight
        .iter()
        .rev()
        .filter(|&&w| w < 0)
        .map(|&w| (-w) as u32)
        .collect();
    Ok(StableLabel { left, right })
}

/// Like [`dynkin_to_stable`] but also requires `|λ| <= max_degree`, which holds
/// for every constituent of `ad^{⊗k}` with `k = max_degree`.
pub fn dynkin_to_stable_bounded(labels: &DynkinLabels, max_degree: u32) -> Result<StableLabel> {
    let label = dynkin_to_stable(labels)?;
    if label.degree() > max_degree {
        return Err(Error::NotStable(labels.as_slice().to_vec()));
    }
    Ok(label)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank(n: u32) -> Rank {
        Rank::new(n).unwrap()
    }

    #[test]
    fn adjoint_label() {
        let l = StableLabel::new(vec![1], vec![1]).unwrap();
        assert_eq!(
            stable_to_dynkin(&l, rank(5)).unwrap().as_slice(),
            &[1, 0, 0, 0, 1]
        );
    }

    #[test]
    fn leading_labels() {
        for n in 2..9 {
            for p in 1..5 {
                let a = stable_to_dynkin(&StableLabel::leading(p), rank(n)).unwrap();
                let mut expected = vec![0; n as usize];
                expected[0] = p;
                expected[n as usize - 1] = p;
                assert_eq!(a.as_slice(), expected.as_slice());
            }
        }
    }

    #[test]
    fn roundtrip_from_dynkin() {
        let a = DynkinLabels::new(vec![2, 1, 0, 0, 1, 2], rank(6)).unwrap();
        let s = dynkin_to_stable(&a).unwrap();
        assert_eq!(s, StableLabel::new(vec![3, 1], vec![3, 1]).unwrap());
        assert_eq!(stable_to_dynkin(&s, rank(6)).unwrap(), a);
    }

    #[test]
    fn boundary_depth_shares_a_label() {
        // ((1,1),(1,1)) at n = 3 is the 20-dimensional [0,2,0]
        let s = StableLabel::new(vec![1, 1], vec![1, 1]).unwrap();
        let a = stable_to_dynkin(&s, rank(3)).unwrap();
        assert_eq!(a.as_slice(), &[0, 2, 0]);
        assert_eq!(dynkin_to_stable(&a).unwrap(), s);
    }

    #[test]
    fn rank_too_small() {
        let s = StableLabel::new(vec![1, 1], vec![1, 1]).unwrap();
        assert!(matches!(
            stable_to_dynkin(&s, rank(2)),
            Err(Error::RankTooSmall { .. })
        ));
    }

    #[test]
    fn not_in_root_lattice() {
        let a = DynkinLabels::new(vec![1, 0, 0], rank(3)).unwrap();
        assert!(matches!(dynkin_to_stable(&a), Err(Error::NotStable(_))));
    }

    #[test]
    fn bounded_reverse() {
        let a = DynkinLabels::new(vec![2, 0, 0, 0, 2], rank(5)).unwrap();
        assert!(dynkin_to_stable_bounded(&a, 2).is_ok());
        assert!(dynkin_to_stable_bounded(&a, 1).is_err());
    }

    #[test]
    fn invalid_labels() {
        assert!(StableLabel::new(vec![1, 2], vec![3]).is_err());
        assert!(StableLabel::new(vec![2], vec![1]).is_err());
        assert!(StableLabel::new(vec![1, 0], vec![1]).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(
            StableLabel::new(vec![2, 1], vec![3]).unwrap().to_string(),
            "((2,1),(3))"
        );
        assert_eq!(StableLabel::trivial().to_string(), "((),())");
    }
}
