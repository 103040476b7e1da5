//! Truncated exponential generating functions `e^{-x} / (1-x)^{k+1}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::exact::{binomial, factorials};

/// Coefficients of `x^0 ..= x^order` of `e^{-x} / (1-x)^{k+1}`.
///
/// The coefficient of `x^m` is `d_{m+k}^k / m!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    pub k: u32,
    pub order: u32,
    pub coefficients: Vec<BigRational>,
}

impl PowerSeries {
    pub fn coefficient(&self, m: u32) -> &BigRational {
        &self.coefficients[m as usize]
    }
}

pub fn egf_coefficients(k: u32, order: u32) -> PowerSeries {
    let facts = factorials(order);
    let exp_neg: Vec<BigRational> = (0..=order as usize)
        .map(|i| {
            let sign = if i % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            BigRational::new(sign, facts[i].clone())
        })
        .collect();
    let geometric: Vec<BigInt> = (0..=order).map(|m| binomial(m + k, k)).collect();

    let coefficients = (0..=order as usize)
        .map(|m| {
            (0..=m).fold(BigRational::zero(), |acc, i| {
                acc + &exp_neg[i] * BigRational::from_integer(geometric[m - i].clone())
            })
        })
        .collect();
    PowerSeries {
        k,
        order,
        coefficients,
    }
}
