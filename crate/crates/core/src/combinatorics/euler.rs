//! Euler's difference table, derangement numbers and higher derangement numbers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::exact::{binomial, exact_div, factorial, factorials};
use crate::error::{Error, Result};

/// Triangular table `e[k][j]`, `0 <= j <= k <= max_index`.
///
/// Seeded with `e[k][k] = k!` and filled leftwards with
/// `e[k][j] = e[k][j+1] - e[k-1][j]`. The first column holds the derangement
/// numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerTable {
    rows: Vec<Vec<BigInt>>,
}

impl EulerTable {
    pub fn new(max_index: u32) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_index as usize + 1);
        let facts = factorials(max_index);
        for k in 0..=max_index as usize {
            let mut row = vec![BigInt::zero(); k + 1];
            row[k] = facts[k].clone();
            for j in (0..k).rev() {
                row[j] = &row[j + 1] - &rows[k - 1][j];
            }
            rows.push(row);
        }
        EulerTable { rows }
    }

    pub fn max_index(&self) -> u32 {
        (self.rows.len() - 1) as u32
    }

    /// `e[k][j]`; panics outside the triangle.
    pub fn get(&self, k: u32, j: u32) -> &BigInt {
        assert!(j <= k, "e[{k}][{j}] lies above the diagonal");
        &self.rows[k as usize][j as usize]
    }

    pub fn row(&self, k: u32) -> &[BigInt] {
        &self.rows[k as usize]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }
}

/// Triangular table `d[n][k] = e[n][k] / k!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HigherDerangementTable {
    rows: Vec<Vec<BigInt>>,
}

impl HigherDerangementTable {
    pub fn new(max_index: u32) -> Self {
        Self::from_euler(&EulerTable::new(max_index))
    }

    pub fn from_euler(euler: &EulerTable) -> Self {
        let facts = factorials(euler.max_index());
        let rows = euler
            .rows()
            .iter()
            .enumerate()
            .map(|(n, row)| {
                row.iter()
                    .enumerate()
                    .map(|(k, e)| {
                        exact_div(e, &facts[k], &format!("d[{n}][{k}] = e[{n}][{k}] / {k}!"))
                    })
                    .collect()
            })
            .collect();
        HigherDerangementTable { rows }
    }

    pub fn max_index(&self) -> u32 {
        (self.rows.len() - 1) as u32
    }

    pub fn get(&self, n: u32, k: u32) -> &BigInt {
        assert!(k <= n, "d[{n}][{k}] lies above the diagonal");
        &self.rows[n as usize][k as usize]
    }

    pub fn row(&self, n: u32) -> &[BigInt] {
        &self.rows[n as usize]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerangementMethod {
    /// `d_k = (k-1)(d_{k-1} + d_{k-2})`
    Adjacent,
    /// `d_k = k d_{k-1} + (-1)^k`
    Alternating,
    /// First column of the Euler table.
    Table,
}

impl DerangementMethod {
    pub const ALL: [DerangementMethod; 3] = [Self::Adjacent, Self::Alternating, Self::Table];
}

/// The derangement number `d_k`.
pub fn derangement(k: u32, method: DerangementMethod) -> BigInt {
    match method {
        DerangementMethod::Adjacent => {
            let (mut prev, mut cur) = (BigInt::one(), BigInt::zero());
            if k == 0 {
                return prev;
            }
            for i in 2..=k {
                let next = (&prev + &cur) * (i - 1);
                prev = std::mem::replace(&mut cur, next);
            }
            cur
        }
        DerangementMethod::Alternating => (1..=k).fold(BigInt::one(), |d, i| {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            d * i + sign
        }),
        DerangementMethod::Table => EulerTable::new(k).get(k, 0).clone(),
    }
}

/// `d_0 ..= d_max` via the alternating recurrence.
pub fn derangements(max: u32) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(max as usize + 1);
    let mut d = BigInt::one();
    out.push(d.clone());
    for i in 1..=max {
        d = d * i + if i % 2 == 0 { 1 } else { -1 };
        out.push(d.clone());
    }
    out
}

pub const ENUMERATION_LIMIT: u32 = 10;

/// Counts fixed-point-free permutations of `{0..k}` one by one.
pub fn derangement_enumeration_oracle(k: u32) -> Result<BigInt> {
    if k > ENUMERATION_LIMIT {
        return Err(Error::CostLimit {
            k,
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut perm: Vec<usize> = (0..k as usize).collect();
    let mut count: u64 = 0;
    loop {
        if perm.iter().enumerate().all(|(i, &p)| i != p) {
            count += 1;
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(BigInt::from(count))
}

// Lexicographic successor; false once the sequence is the last permutation.
fn next_permutation(a: &mut [usize]) -> bool {
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

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HigherDerangementMethod {
    /// `e[n][k] / k!`
    Table,
    /// `d[n][k] = (d[n][k-1] + d[n-1][k-1]) / k`
    Recurrence,
    /// `d[n][k] = (1/k!) sum_j C(k,j) d_{n-j}`
    ClosedForm,
}

impl HigherDerangementMethod {
    pub const ALL: [HigherDerangementMethod; 3] = [Self::Table, Self::Recurrence, Self::ClosedForm];
}

/// The higher derangement number `d_n^k`, defined for `0 <= k <= n`.
pub fn higher_derangement(n: u32, k: u32, method: HigherDerangementMethod) -> Result<BigInt> {
    if k > n {
        return Err(Error::IndexOrder {
            lower_name: "k",
            lower: k,
            upper_name: "n",
            upper: n,
        });
    }
    let value = match method {
        HigherDerangementMethod::Table => {
            let e = EulerTable::new(n);
            exact_div(e.get(n, k), &factorial(k), "e[n][k] / k!")
        }
        HigherDerangementMethod::Recurrence => {
            // column[i] holds d[n-k+i][level] while sweeping level = 0..=k
            let d = derangements(n);
            let lo = (n - k) as usize;
            let mut column: Vec<BigInt> = d[lo..].to_vec();
            for level in 1..=k {
                let divisor = BigInt::from(level);
                column = column
                    .windows(2)
                    .map(|w| exact_div(&(&w[1] + &w[0]), &divisor, "(d[n][k-1] + d[n-1][k-1]) / k"))
                    .collect();
            }
            column.pop().expect("column holds d[n][k]")
        }
        HigherDerangementMethod::ClosedForm => {
            let d = derangements(n);
            let sum = (0..=k).fold(BigInt::zero(), |acc, j| {
                acc + binomial(k, j) * &d[(n - j) as usize]
            });
            exact_div(&sum, &factorial(k), "sum_j C(k,j) d_(n-j) / k!")
        }
    };
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn euler_spot_values() {
        assert_eq!(EulerTable::new(3).get(3, 2), &BigInt::from(4));
        assert_eq!(EulerTable::new(9).get(9, 1), &BigInt::from(148_329));
        assert_eq!(EulerTable::new(4).get(4, 0), &BigInt::from(9));
    }

    #[test]
    fn euler_table_is_consistent() {
        let e = EulerTable::new(30);
        for k in 0..=30u32 {
            assert_eq!(e.get(k, k), &factorial(k));
            for j in 0..k {
                assert_eq!(e.get(k, j), &(e.get(k, j + 1) - e.get(k - 1, j)));
            }
        }
    }

    #[test]
    fn euler_table_zero() {
        let e = EulerTable::new(0);
        assert_eq!(e.max_index(), 0);
        assert_eq!(e.row(0), ints(&[1]).as_slice());
    }

    #[test]
    fn derangement_seeds() {
        for m in DerangementMethod::ALL {
            assert_eq!(derangement(0, m), BigInt::from(1), "{m:?}");
            assert_eq!(derangement(1, m), BigInt::from(0), "{m:?}");
            assert_eq!(derangement(6, m), BigInt::from(265), "{m:?}");
            assert_eq!(derangement(10, m), BigInt::from(1_334_961), "{m:?}");
        }
    }

    #[test]
    fn enumeration_small() {
        assert_eq!(derangement_enumeration_oracle(0).unwrap(), BigInt::from(1));
        assert_eq!(derangement_enumeration_oracle(1).unwrap(), BigInt::from(0));
        assert_eq!(derangement_enumeration_oracle(3).unwrap(), BigInt::from(2));
        assert_eq!(derangement_enumeration_oracle(4).unwrap(), BigInt::from(9));
    }

    #[test]
    fn enumeration_cost_limit() {
        assert_eq!(
            derangement_enumeration_oracle(11),
            Err(Error::CostLimit { k: 11, limit: 10 })
        );
    }

    #[test]
    fn higher_spot_values() {
        for m in HigherDerangementMethod::ALL {
            assert_eq!(higher_derangement(4, 2, m).unwrap(), BigInt::from(7));
            assert_eq!(higher_derangement(9, 3, m).unwrap(), BigInt::from(30_637));
            assert_eq!(higher_derangement(10, 5, m).unwrap(), BigInt::from(18_089));
            assert_eq!(higher_derangement(0, 0, m).unwrap(), BigInt::from(1));
        }
    }

    #[test]
    fn higher_hand_sum_for_10_5() {
        // (d_10 + 5 d_9 + 10 d_8 + 10 d_7 + 5 d_6 + d_5) / 120 with table values
        let sum: i64 = 1_334_961 + 5 * 133_496 + 10 * 14_833 + 10 * 1_854 + 5 * 265 + 44;
        assert_eq!(sum % 120, 0);
        assert_eq!(sum / 120, 18_089);
    }

    #[test]
    fn higher_rejects_k_above_n() {
        for m in HigherDerangementMethod::ALL {
            assert!(matches!(
                higher_derangement(3, 4, m),
                Err(Error::IndexOrder { .. })
            ));
        }
    }

    #[test]
    fn higher_table_diagonals() {
        let d = HigherDerangementTable::new(30);
        for n in 1..=30u32 {
            assert_eq!(d.get(n, n), &BigInt::one());
            assert_eq!(d.get(n, n - 1), &BigInt::from(n - 1));
        }
    }

    #[test]
    fn permutation_walk_visits_everything() {
        let mut p = vec![0, 1, 2, 3];
        let mut n = 1;
        while next_permutation(&mut p) {
            n += 1;
        }
        assert_eq!(n, 24);
        assert_eq!(p, vec![3, 2, 1, 0]);
    }
}
