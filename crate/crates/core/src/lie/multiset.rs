use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::weights::DynkinLabels;
use super::weyl::weyl_dimension;

/// Labels with exact integer multiplicities. Zero entries are never stored.
///
/// Negative multiplicities are representable so that differences can be formed;
/// callers decide whether they are legal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multiset<L: Ord> {
    entries: BTreeMap<L, BigInt>,
}

/// Irreducible content of a representation, keyed by highest weight.
pub type IrrepMultiset = Multiset<DynkinLabels>;

impl<L: Ord> Default for Multiset<L> {
    fn default() -> Self {
        Multiset {
            entries: BTreeMap::new(),
        }
    }
}

impl<L: Ord + Clone> Multiset<L> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(label: L) -> Self {
        let mut m = Self::new();
        m.add(label, BigInt::from(1));
        m
    }

    pub fn add(&mut self, label: L, amount: BigInt) {
        if amount.is_zero() {
            return;
        }
        let slot = self
            .entries
            .entry(label.clone())
            .or_insert_with(BigInt::zero);
        *slot += amount;
        if slot.is_zero() {
            self.entries.remove(&label);
        }
    }

    /// `self += factor * other`
    pub fn add_scaled(&mut self, other: &Multiset<L>, factor: &BigInt) {
        for (label, m) in &other.entries {
            self.add(label.clone(), m * factor);
        }
    }

    /// `self - other`
    pub fn difference(&self, other: &Multiset<L>) -> Multiset<L> {
        let mut out = self.clone();
        out.add_scaled(other, &BigInt::from(-1));
        out
    }

    pub fn get(&self, label: &L) -> BigInt {
        self.entries.get(label).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&L, &BigInt)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn has_negative(&self) -> bool {
        self.entries.values().any(|m| m.is_negative())
    }

    pub fn map_labels<M: Ord + Clone, E>(
        &self,
        mut f: impl FnMut(&L) -> Result<M, E>,
    ) -> Result<Multiset<M>, E> {
        let mut out = Multiset::new();
        for (label, m) in &self.entries {
            out.add(f(label)?, m.clone());
        }
        Ok(out)
    }
}

impl<L: Ord + Clone> FromIterator<(L, BigInt)> for Multiset<L> {
    fn from_iter<I: IntoIterator<Item = (L, BigInt)>>(iter: I) -> Self {
        let mut m = Multiset::new();
        for (label, amount) in iter {
            m.add(label, amount);
        }
        m
    }
}

impl IrrepMultiset {
    /// `Σ multiplicity · dim`
    pub fn total_dimension(&self) -> BigInt {
        self.iter()
            .map(|(labels, m)| m * weyl_dimension(labels))
            .sum()
    }
}
