//! Multiplicities `c_j^k` of the contraction blocks `Y_j` inside `ad^{⊗k}`.
//!
//! Three routes compute the same numbers:
//! * [`coefficient_main`]: `C(k,j) · d_k^j`,
//! * [`coefficient_contraction`]: `C(k,p) / p! · Σ_l C(p,l) d_{k-l}`,
//! * [`coefficient_rows_recurrence`]: row-to-row recurrence seeded by `c_0^k = d_k`.

use num_bigint::BigInt;

use crate::combinatorics::{
    binomial, derangements, exact_div, factorial, higher_derangement, HigherDerangementMethod,
};
use crate::error::{Error, Result};

/// `(c_0^k, …, c_k^k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientRow {
    pub k: u32,
    pub values: Vec<BigInt>,
}

/// Rows `k = 1 ..= max_power`, sorted by `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionTable {
    pub max_power: u32,
    pub rows: Vec<CoefficientRow>,
}

impl DecompositionTable {
    pub fn row(&self, k: u32) -> Option<&CoefficientRow> {
        self.rows.iter().find(|r| r.k == k)
    }
}

fn check_order(k: u32, j: u32) -> Result<()> {
    if j > k {
        return Err(Error::IndexOrder {
            lower_name: "j",
            lower: j,
            upper_name: "k",
            upper: k,
        });
    }
    Ok(())
}

pub fn coefficient_main(k: u32, j: u32) -> Result<BigInt> {
    check_order(k, j)?;
    Ok(binomial(k, j) * higher_derangement(k, j, HigherDerangementMethod::Table)?)
}

/// Counts contraction patterns directly; the `1/p!` is applied as an exact division.
pub fn coefficient_contraction(k: u32, p: u32) -> Result<BigInt> {
    check_order(k, p)?;
    let d = derangements(k);
    let sum = (0..=p).fold(BigInt::from(0), |acc, l| {
        acc + binomial(p, l) * &d[(k - l) as usize]
    });
    let inner = exact_div(&sum, &factorial(p), "contraction count: sum / p!");
    Ok(binomial(k, p) * inner)
}

/// The full row `k` by [`coefficient_main`]; `k = 0` gives `[1]`.
pub fn coefficient_row(k: u32) -> CoefficientRow {
    let values = (0..=k)
        .map(|j| coefficient_main(k, j).expect("j <= k"))
        .collect();
    CoefficientRow { k, values }
}

/// Builds rows `1 ..= max_power` with
/// `c_{j+1}^k = ((k-j) c_j^k + k c_j^{k-1}) / (j+1)^2` starting from `c_0^k = d_k`.
pub fn coefficient_rows_recurrence(max_power: u32) -> DecompositionTable {
    let d = derangements(max_power);
    let mut prev = vec![BigInt::from(1)];
    let mut rows = Vec::with_capacity(max_power as usize);
    for k in 1..=max_power {
        let mut values = Vec::with_capacity(k as usize + 1);
        values.push(d[k as usize].clone());
        for j in 0..k {
            let c = &values[j as usize];
            let numerator: BigInt = c * (k - j) + &prev[j as usize] * k;
            let divisor = BigInt::from((j + 1) * (j + 1));
            values.push(exact_div(
                &numerator,
                &divisor,
                &format!("c_{}^{k} recurrence", j + 1),
            ));
        }
        prev = values.clone();
        rows.push(CoefficientRow { k, values });
    }
    DecompositionTable { max_power, rows }
}

/// Rows `1 ..= max_power` by [`coefficient_main`].
pub fn decomposition_table(max_power: u32) -> DecompositionTable {
    DecompositionTable {
        max_power,
        rows: (1..=max_power).map(coefficient_row).collect(),
    }
}
