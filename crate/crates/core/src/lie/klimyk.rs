//! Tensor products with the adjoint by Klimyk's formula.
//!
//! For each irreducible `V(λ)` and each weight `ν` of the adjoint, the vector
//! `λ + ν + ρ` is either fixed by a reflection (two equal ε-coordinates, no
//! contribution) or sorts into a strictly decreasing vector `w(λ+ν+ρ)`. In
//! the latter case `V(w(λ+ν+ρ) - ρ)` gains `sign(w) · mult(ν)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::multiset::IrrepMultiset;
use super::weights::{DynkinLabels, Rank, WeightVector};

/// Roots `ε_i - ε_j` (`i ≠ j`) with multiplicity 1 and the zero weight with multiplicity `n`.
pub fn adjoint_weight_system(rank: Rank) -> BTreeMap<WeightVector, BigInt> {
    let size = rank.size();
    let mut out = BTreeMap::new();
    out.insert(WeightVector::new(vec![0; size]), BigInt::from(rank.n()));
    for i in 0..size {
        for j in 0..size {
            if i != j {
                let mut v = vec![0i64; size];
                v[i] = 1;
                v[j] = -1;
                out.insert(WeightVector::new(v), BigInt::one());
            }
        }
    }
    out
}

/// Sorts `v` into strictly decreasing order. Returns the sign of the sorting
/// permutation, or `None` when two coordinates coincide.
fn reflect_to_dominant(v: &mut [i64]) -> Option<i32> {
    let mut sign = 1;
    // insertion sort; each adjacent swap flips the sign
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] < v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && v[j - 1] == v[j] {
            return None;
        }
    }
    Some(sign)
}

/// Decomposes `state ⊗ W`, where `W` is the module with weight system `weights`.
///
/// The state must be an honest (nonnegative) representation; the result is
/// checked to be one too.
pub fn tensor_with_weights(
    state: &IrrepMultiset,
    weights: &BTreeMap<WeightVector, BigInt>,
    rank: Rank,
) -> IrrepMultiset {
    let rho = rank.rho();
    let mut out = IrrepMultiset::new();
    let mut shifted = vec![0i64; rank.size()];
    for (labels, mult) in state.iter() {
        assert_eq!(
            labels.rank(),
            rank,
            "irrep {labels} is not a label of {rank}"
        );
        let base: Vec<i64> = labels
            .to_partition()
            .iter()
            .zip(&rho)
            .map(|(l, r)| l + r)
            .collect();
        for (nu, nu_mult) in weights {
            for ((s, b), c) in shifted.iter_mut().zip(&base).zip(nu.coords()) {
                *s = b + c;
            }
            let Some(sign) = reflect_to_dominant(&mut shifted) else {
                continue;
            };
            let highest: Vec<i64> = shifted.iter().zip(&rho).map(|(s, r)| s - r).collect();
            let amount = mult * nu_mult;
            out.add(
                DynkinLabels::from_partition(&highest),
                if sign > 0 { amount } else { -amount },
            );
        }
    }
    if let Some((labels, m)) = out.iter().find(|(_, m)| m.is_negative()) {
        panic!("Klimyk produced negative multiplicity {m} for {labels}: reflection sign bug");
    }
    out
}

/// `state ⊗ ad`
pub fn tensor_with_adjoint(state: &IrrepMultiset, rank: Rank) -> IrrepMultiset {
    tensor_with_weights(state, &adjoint_weight_system(rank), rank)
}

/// `ad^{⊗k}`, starting from the trivial module.
pub fn adjoint_power(k: u32, rank: Rank) -> IrrepMultiset {
    adjoint_powers(k, rank)
        .pop()
        .expect("at least the zeroth power")
}

/// `[ad^{⊗0}, ad^{⊗1}, …, ad^{⊗k}]`
pub fn adjoint_powers(k: u32, rank: Rank) -> Vec<IrrepMultiset> {
    let weights = adjoint_weight_system(rank);
    let mut powers = vec![IrrepMultiset::singleton(DynkinLabels::trivial(rank))];
    for _ in 0..k {
        let next = tensor_with_weights(powers.last().expect("nonempty"), &weights, rank);
        powers.push(next);
    }
    powers
}
