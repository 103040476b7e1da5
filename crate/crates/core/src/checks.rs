//! Cross-formula consistency checks over the combinatorial tables.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::coefficients::{coefficient_contraction, coefficient_main, coefficient_rows_recurrence};
use crate::combinatorics::{
    derangement, derangement_enumeration_oracle, egf_coefficients, factorial, factorials,
    higher_derangement, DerangementMethod, EulerTable, HigherDerangementMethod,
    HigherDerangementTable,
};

/// Largest `k` checked against brute-force enumeration.
pub const ENUMERATION_CHECK_MAX: u32 = 9;
/// Largest `k` and series order used for the generating-function check.
pub const SERIES_CHECK_MAX_K: u32 = 8;
pub const SERIES_CHECK_ORDER: u32 = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// Number of individual comparisons made.
    pub cases: usize,
    /// First failing case, if any.
    pub failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub max: u32,
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "combinatorics verification up to {}: {}\n",
            self.max,
            if self.pass() { "PASS" } else { "FAIL" }
        );
        for c in &self.checks {
            out.push_str(&format!(
                "  [{}] {} ({} cases)\n",
                if c.passed { "ok" } else { "FAILED" },
                c.name,
                c.cases
            ));
            if let Some(f) = &c.failure {
                out.push_str(&format!("      first failure: {f}\n"));
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "pass": c.passed,
                    "cases": c.cases,
                    "failure": c.failure,
                })
            })
            .collect();
        json!({
            "report": "combinatorics",
            "max": self.max,
            "pass": self.pass(),
            "checks": checks,
        })
    }
}

struct Tally {
    name: &'static str,
    cases: usize,
    failure: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            cases: 0,
            failure: None,
        }
    }

    fn expect(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }

    fn finish(self) -> Check {
        Check {
            name: self.name,
            passed: self.failure.is_none(),
            cases: self.cases,
            failure: self.failure,
        }
    }
}

/// Runs every cross-formula invariant for indices up to `max`.
pub fn verify_combinatorics(max: u32) -> CheckReport {
    let euler = EulerTable::new(max);
    let higher = HigherDerangementTable::from_euler(&euler);
    let facts = factorials(max);
    let mut checks = Vec::new();

    let mut t = Tally::new("Euler table: diagonal j! and backward-difference recurrence");
    for k in 0..=max {
        t.expect(euler.get(k, k) == &facts[k as usize], || {
            format!("e[{k}][{k}] != {k}!")
        });
        for j in 0..k {
            t.expect(
                euler.get(k, j) == &(euler.get(k, j + 1) - euler.get(k - 1, j)),
                || format!("e[{k}][{j}] breaks the recurrence"),
            );
        }
    }
    checks.push(t.finish());

    let mut t = Tally::new("Euler table: e[k][j] divisible by j!");
    for k in 0..=max {
        for j in 0..=k {
            let r = euler.get(k, j) % &facts[j as usize];
            t.expect(r.is_zero(), || format!("e[{k}][{j}] mod {j}! = {r}"));
        }
    }
    checks.push(t.finish());

    let mut t = Tally::new("derangements: adjacent = alternating = Euler first column");
    for k in 0..=max {
        let a = derangement(k, DerangementMethod::Adjacent);
        let b = derangement(k, DerangementMethod::Alternating);
        let c = euler.get(k, 0);
        t.expect(a == b && &b == c, || format!("d_{k}: {a} / {b} / {c}"));
    }
    checks.push(t.finish());

    let mut t = Tally::new("derangements: brute-force enumeration");
    for k in 0..=max.min(ENUMERATION_CHECK_MAX) {
        let brute = derangement_enumeration_oracle(k).expect("within the enumeration limit");
        let d = euler.get(k, 0);
        t.expect(&brute == d, || {
            format!("d_{k}: enumeration {brute}, table {d}")
        });
    }
    checks.push(t.finish());

    let mut t = Tally::new("higher derangements: table = recurrence = closed form");
    for n in 0..=max {
        for k in 0..=n {
            let values: Vec<BigInt> = HigherDerangementMethod::ALL
                .iter()
                .map(|&m| higher_derangement(n, k, m).expect("k <= n"))
                .collect();
            let ok = values.iter().all(|v| v == higher.get(n, k));
            t.expect(ok, || format!("d_{n}^{k}: {values:?}"));
        }
    }
    checks.push(t.finish());

    let mut t =
        Tally::new("higher derangements: d[n][k] k! = e[n][k], unit diagonal, d[n][n-1] = n-1");
    for n in 0..=max {
        for k in 0..=n {
            t.expect(
                &(higher.get(n, k) * factorial(k)) == euler.get(n, k),
                || format!("d[{n}][{k}] * {k}! != e[{n}][{k}]"),
            );
        }
        t.expect(higher.get(n, n) == &BigInt::from(1), || {
            format!("d[{n}][{n}] != 1")
        });
        if n >= 1 {
            t.expect(higher.get(n, n - 1) == &BigInt::from(n - 1), || {
                format!("d[{n}][{}] != {}", n - 1, n - 1)
            });
        }
    }
    checks.push(t.finish());

    let mut t = Tally::new("generating functions: m! [x^m] e^-x/(1-x)^(k+1) = d_(m+k)^k");
    for k in 0..=max.min(SERIES_CHECK_MAX_K) {
        let series = egf_coefficients(k, SERIES_CHECK_ORDER);
        let all_facts = factorials(SERIES_CHECK_ORDER);
        for m in 0..=SERIES_CHECK_ORDER {
            let scaled = series.coefficient(m)
                * num_rational::BigRational::from_integer(all_facts[m as usize].clone());
            let d = higher_derangement(m + k, k, HigherDerangementMethod::Recurrence)
                .expect("k <= m+k");
            t.expect(scaled.is_integer() && scaled.numer() == &d, || {
                format!("k={k} m={m}: {scaled} vs {d}")
            });
        }
    }
    checks.push(t.finish());

    let recurrence = coefficient_rows_recurrence(max);
    let mut t = Tally::new("coefficients: main = contraction = row recurrence");
    for k in 0..=max {
        for j in 0..=k {
            let main = coefficient_main(k, j).expect("j <= k");
            let contraction = coefficient_contraction(k, j).expect("j <= k");
            let from_rows = if k == 0 {
                BigInt::from(1)
            } else {
                recurrence.row(k).expect("row present").values[j as usize].clone()
            };
            t.expect(main == contraction && contraction == from_rows, || {
                format!("c_{j}^{k}: {main} / {contraction} / {from_rows}")
            });
        }
    }
    checks.push(t.finish());

    let mut t =
        Tally::new("coefficients: c_0 = d_k, c_k = 1, c_(k-1) = k(k-1), positive for k >= 2");
    for row in &recurrence.rows {
        let k = row.k;
        t.expect(&row.values[0] == euler.get(k, 0), || {
            format!("c_0^{k} != d_{k}")
        });
        t.expect(row.values[k as usize] == BigInt::from(1), || {
            format!("c_{k}^{k} != 1")
        });
        if k >= 2 {
            t.expect(
                row.values[k as usize - 1] == BigInt::from(k * (k - 1)),
                || format!("c_{}^{k} != {}", k - 1, k * (k - 1)),
            );
            t.expect(row.values.iter().all(|v| v.is_positive()), || {
                format!("row {k} has a non-positive entry")
            });
        }
    }
    checks.push(t.finish());

    CheckReport { max, checks }
}
