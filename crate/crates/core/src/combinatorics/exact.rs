//! Arbitrary-precision integer helpers shared by every table in the crate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Signed integer of unbounded magnitude.
pub type ExactInteger = BigInt;

/// Rational number kept in lowest terms with a positive denominator.
pub type ExactRational = BigRational;

/// Divides `numerator` by `divisor`, panicking if the division leaves a remainder.
///
/// Every division in the derangement recurrences is exact in theory. A nonzero
/// remainder means a table or recurrence was filled incorrectly, so this aborts
/// with the operands instead of truncating.
pub fn exact_div(numerator: &BigInt, divisor: &BigInt, context: &str) -> BigInt {
    assert!(!divisor.is_zero(), "{context}: division by zero");
    let (quotient, remainder) = numerator.div_rem(divisor);
    assert!(
        remainder.is_zero(),
        "{context}: {numerator} is not divisible by {divisor} (remainder {remainder})"
    );
    quotient
}

/// `k!`
pub fn factorial(k: u32) -> BigInt {
    (2..=k).fold(BigInt::one(), |acc, i| acc * i)
}

/// Binomial coefficient `C(k, j)`; zero when `j > k`.
pub fn binomial(k: u32, j: u32) -> BigInt {
    if j > k {
        return BigInt::zero();
    }
    let j = j.min(k - j);
    // Each partial product C(k-j+i, i) is an integer, so the running division is exact.
    (1..=j).fold(BigInt::one(), |acc, i| acc * (k - j + i) / i)
}

/// `factorials(m)[i] == i!` for `0 <= i <= m`.
pub fn factorials(max: u32) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(max as usize + 1);
    let mut acc = BigInt::one();
    out.push(acc.clone());
    for i in 1..=max {
        acc *= i;
        out.push(acc.clone());
    }
    out
}
