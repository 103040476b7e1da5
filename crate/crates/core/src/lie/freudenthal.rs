//! Weight multiplicities by Freudenthal's recursion.
//!
//! Computed in ε-coordinates without normalization: every weight of the module
//! has the same coordinate sum as the highest weight, so the plain dot product
//! differs from the invariant form only by a constant that cancels in
//! `|λ+ρ|² - |μ+ρ|²`, and positive roots `e_a - e_b` are already traceless.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use super::weights::{DynkinLabels, WeightVector};
use crate::combinatorics::exact_div;

/// Full weight system of the irreducible module with highest weight `labels`.
pub fn freudenthal_weights(labels: &DynkinLabels) -> BTreeMap<WeightVector, BigInt> {
    let mut out = BTreeMap::new();
    for (dominant, m) in dominant_multiplicities(labels) {
        let mut perm = dominant.clone();
        perm.reverse();
        loop {
            out.insert(WeightVector::new(perm.clone()), m.clone());
            if !next_permutation(&mut perm) {
                break;
            }
        }
    }
    out
}

/// Multiplicities of the dominant weights, as non-increasing ε-vectors with the
/// same coordinate sum as the highest weight.
pub fn dominant_multiplicities(labels: &DynkinLabels) -> Vec<(Vec<i64>, BigInt)> {
    let top = labels.to_partition();
    let size = top.len();
    let rho = labels.rank().rho();
    let norm = |v: &[i64]| -> i64 { v.iter().zip(&rho).map(|(x, r)| (x + r) * (x + r)).sum() };

    let mut dominant = dominated_partitions(&top);
    dominant.sort_by_key(|mu| std::cmp::Reverse(norm(mu)));
    let top_norm = norm(&top);

    let mut mult: HashMap<Vec<i64>, BigInt> = HashMap::new();
    let lookup = |mult: &HashMap<Vec<i64>, BigInt>, v: &[i64]| -> Option<BigInt> {
        let mut sorted = v.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        mult.get(&sorted).cloned()
    };

    let mut result = Vec::with_capacity(dominant.len());
    for mu in dominant {
        let m = if mu == top {
            BigInt::from(1)
        } else {
            let mut sum = BigInt::zero();
            for a in 0..size {
                for b in a + 1..size {
                    let mut shifted = mu.clone();
                    loop {
                        shifted[a] += 1;
                        shifted[b] -= 1;
                        // Weight strings are unbroken, so the first miss ends the string.
                        let Some(m_shift) = lookup(&mult, &shifted) else {
                            break;
                        };
                        sum += m_shift * (shifted[a] - shifted[b]);
                    }
                }
            }
            let gap = top_norm - norm(&mu);
            assert!(gap > 0, "Freudenthal denominator vanished at {mu:?}");
            exact_div(&(sum * 2), &BigInt::from(gap), "Freudenthal recursion")
        };
        mult.insert(mu.clone(), m.clone());
        result.push((mu, m));
    }
    result
}

/// Partitions with `top.len()` parts (zeros allowed) and the same size as `top`
/// that are dominated by `top`.
fn dominated_partitions(top: &[i64]) -> Vec<Vec<i64>> {
    let total: i64 = top.iter().sum();
    let bounds: Vec<i64> = top
        .iter()
        .scan(0, |acc, x| {
            *acc += x;
            Some(*acc)
        })
        .collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(top.len());
    fill(&bounds, total, top[0], 0, &mut current, &mut out);
    out
}

fn fill(
    bounds: &[i64],
    remaining: i64,
    max_part: i64,
    partial: i64,
    current: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    let i = current.len();
    if i == bounds.len() {
        if remaining == 0 {
            out.push(current.clone());
        }
        return;
    }
    let slots = (bounds.len() - i) as i64;
    let hi = max_part.min(remaining).min(bounds[i] - partial);
    for part in (0..=hi).rev() {
        // remaining parts are at most `part` each
        if part * slots < remaining {
            break;
        }
        current.push(part);
        fill(bounds, remaining - part, part, partial + part, current, out);
        current.pop();
    }
}

pub(crate) fn next_permutation(a: &mut [i64]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}
