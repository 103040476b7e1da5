use num_bigint::BigInt;
use num_traits::One;

use super::weights::DynkinLabels;
use crate::combinatorics::exact_div;

/// Dimension of the irreducible `A_n` module with the given highest weight.
///
/// With `l = λ + ρ` in ε-coordinates, `dim = Π_{i<j} (l_i - l_j) / (j - i)`.
pub fn weyl_dimension(labels: &DynkinLabels) -> BigInt {
    let rho = labels.rank().rho();
    let shifted: Vec<i64> = labels
        .to_partition()
        .iter()
        .zip(&rho)
        .map(|(l, r)| l + r)
        .collect();
    let mut numerator = BigInt::one();
    let mut denominator = BigInt::one();
    for i in 0..shifted.len() {
        for j in i + 1..shifted.len() {
            numerator *= shifted[i] - shifted[j];
            denominator *= (j - i) as i64;
        }
    }
    exact_div(&numerator, &denominator, "Weyl dimension")
}
