//! Exit criteria. Every comparison is exact; each criterion prints one
//! PASS/FAIL line with its runtime against the stated budget.
//!
//! Run with `cargo test -p adpow-core --test acceptance -- --nocapture`.

mod common;

use std::time::{Duration, Instant};

use adpow_core::coefficients::{
    coefficient_contraction, coefficient_main, coefficient_rows_recurrence,
};
use adpow_core::combinatorics::{
    derangement, derangement_enumeration_oracle, egf_coefficients, factorial, factorials,
    higher_derangement, DerangementMethod, EulerTable, HigherDerangementMethod,
    HigherDerangementTable,
};
use adpow_core::lie::{extract_y_contents, verify_stable_decomposition, Rank, StableLabel};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use common::{big, decomposition_rows, DERANGEMENTS, EULER, HIGHER};

struct Outcome {
    id: u32,
    title: &'static str,
    failures: Vec<String>,
    elapsed: Duration,
    budget: Duration,
}

impl Outcome {
    fn passed(&self) -> bool {
        self.failures.is_empty() && self.elapsed <= self.budget
    }
}

fn run(
    id: u32,
    title: &'static str,
    budget: Duration,
    body: impl FnOnce(&mut Vec<String>),
) -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    body(&mut failures);
    Outcome {
        id,
        title,
        failures,
        elapsed: start.elapsed(),
        budget,
    }
}

fn check(failures: &mut Vec<String>, ok: bool, what: impl FnOnce() -> String) {
    if !ok {
        failures.push(what());
    }
}

fn golden_tables(f: &mut Vec<String>) {
    for (k, &d) in DERANGEMENTS.iter().enumerate() {
        let got = derangement(k as u32, DerangementMethod::Alternating);
        check(f, got == big(d), || format!("d_{k} = {got}, expected {d}"));
    }
    let e = EulerTable::new(9);
    let h = HigherDerangementTable::from_euler(&e);
    let mut entries = 0;
    for k in 0..10usize {
        for j in 0..=k {
            entries += 1;
            let (ge, gh) = (e.get(k as u32, j as u32), h.get(k as u32, j as u32));
            check(f, ge == &big(EULER[k][j]), || format!("e[{k}][{j}] = {ge}"));
            check(f, gh == &big(HIGHER[k][j]), || {
                format!("d[{k}][{j}] = {gh}")
            });
        }
    }
    check(f, entries == 55, || {
        format!("{entries} triangle entries, expected 55")
    });
}

fn first_ten_powers(f: &mut Vec<String>) {
    let rows = decomposition_rows();
    let recurrence = coefficient_rows_recurrence(10);
    let mut count = 0;
    for (i, row) in rows.iter().enumerate() {
        let k = i as u32 + 1;
        let rec = &recurrence.row(k).expect("row").values;
        check(f, rec.len() == row.len(), || {
            format!("row {k} has {} entries", rec.len())
        });
        for (j, &c) in row.iter().enumerate() {
            count += 1;
            let c = big(c);
            let main = coefficient_main(k, j as u32).unwrap();
            let contraction = coefficient_contraction(k, j as u32).unwrap();
            check(f, main == c, || {
                format!("main c_{j}^{k} = {main}, expected {c}")
            });
            check(f, contraction == c, || {
                format!("contraction c_{j}^{k} = {contraction}")
            });
            check(f, rec[j] == c, || {
                format!("recurrence c_{j}^{k} = {}", rec[j])
            });
        }
    }
    check(f, count == 65, || {
        format!("{count} coefficients, expected 65")
    });
}

fn equivalence_sweep(f: &mut Vec<String>) {
    let recurrence = coefficient_rows_recurrence(30);
    for k in 0..=30u32 {
        for j in 0..=k {
            let main = coefficient_main(k, j).unwrap();
            let contraction = coefficient_contraction(k, j).unwrap();
            let rec = if k == 0 {
                BigInt::one()
            } else {
                recurrence.row(k).unwrap().values[j as usize].clone()
            };
            check(f, main == contraction && contraction == rec, || {
                format!("c_{j}^{k}: {main} / {contraction} / {rec}")
            });
        }
    }
    for n in 0..=30u32 {
        for k in 0..=n {
            let v: Vec<BigInt> = HigherDerangementMethod::ALL
                .iter()
                .map(|&m| higher_derangement(n, k, m).unwrap())
                .collect();
            check(f, v[0] == v[1] && v[1] == v[2], || {
                format!("d_{n}^{k}: {v:?}")
            });
        }
    }
    // divisibility behind every exact division
    let e = EulerTable::new(30);
    let facts = factorials(30);
    for k in 0..=30u32 {
        for j in 0..=k {
            check(
                f,
                (e.get(k, j) % &facts[j as usize]) == BigInt::from(0),
                || format!("e[{k}][{j}] not divisible by {j}!"),
            );
        }
    }
}

fn enumeration(f: &mut Vec<String>) {
    for k in 0..=9u32 {
        let brute = derangement_enumeration_oracle(k).unwrap();
        for m in DerangementMethod::ALL {
            let d = derangement(k, m);
            check(f, d == brute, || {
                format!("d_{k} via {m:?} = {d}, enumeration {brute}")
            });
        }
    }
}

fn generating_functions(f: &mut Vec<String>) {
    for k in 0..=8u32 {
        let series = egf_coefficients(k, 20);
        for m in 0..=20u32 {
            let scaled = series.coefficient(m) * BigRational::from_integer(factorial(m));
            let d = higher_derangement(m + k, k, HigherDerangementMethod::Table).unwrap();
            check(f, scaled == BigRational::from_integer(d.clone()), || {
                format!("k={k} m={m}: m! [x^m] = {scaled}, d = {d}")
            });
        }
    }
}

fn lie_certification(f: &mut Vec<String>) {
    for (k_max, n) in [(2u32, 3u32), (3, 5), (3, 6), (4, 7)] {
        let report = verify_stable_decomposition(k_max, Rank::new(n).unwrap()).unwrap();
        println!(
            "    oracle k_max={k_max} n={n}: {} ({:.2?})",
            if report.pass { "pass" } else { "FAIL" },
            report.elapsed
        );
        check(f, report.pass, || {
            format!("k_max={k_max} n={n}:\n{}", report.to_text())
        });
        for c in &report.powers {
            let ctx = format!("k_max={k_max} n={n} k={}", c.k);
            check(f, c.residual.is_empty(), || {
                format!("{ctx}: nonzero residual")
            });
            check(f, c.dimension_balanced(), || {
                format!("{ctx}: dimension imbalance")
            });
            check(f, c.trivial_multiplicity == c.derangement, || {
                format!(
                    "{ctx}: trivial {} vs d_k {}",
                    c.trivial_multiplicity, c.derangement
                )
            });
            let y = &report.library.contents[c.k as usize];
            check(f, !y.iter().any(|(_, m)| m.is_negative()), || {
                format!("{ctx}: negative Y")
            });
            check(f, y.get(&StableLabel::leading(c.k)).is_one(), || {
                format!(
                    "{ctx}: leading term multiplicity {}",
                    y.get(&StableLabel::leading(c.k))
                )
            });
        }
        check(f, report.powers.len() == k_max as usize + 1, || {
            format!("{k_max}: missing powers")
        });
    }
    let at5 = extract_y_contents(3, Rank::new(5).unwrap()).unwrap();
    let at7 = extract_y_contents(3, Rank::new(7).unwrap()).unwrap();
    for p in [2usize, 3] {
        check(f, at5.contents[p] == at7.contents[p], || {
            format!("Y_{p} differs between n=5 and n=7")
        });
    }
}

fn full_range_oracle(f: &mut Vec<String>) {
    let report = verify_stable_decomposition(10, Rank::new(19).unwrap()).unwrap();
    check(f, report.pass, || report.to_text());
    let rows = decomposition_rows();
    for c in report.powers.iter().skip(1) {
        let expected: Vec<BigInt> = rows[c.k as usize - 1].iter().map(|&x| big(x)).collect();
        check(f, c.coefficients == expected, || {
            format!("k={} consumed a different row", c.k)
        });
    }
}

#[test]
fn acceptance() {
    let outcomes = vec![
        run(
            1,
            "golden tables of d_k, e_k^j, d_n^k",
            Duration::from_secs(1),
            golden_tables,
        ),
        run(
            2,
            "first ten powers via all three coefficient routes",
            Duration::from_secs(1),
            first_ten_powers,
        ),
        run(
            3,
            "cross-formula equivalence sweep to 30",
            Duration::from_secs(5),
            equivalence_sweep,
        ),
        run(
            4,
            "derangements against brute-force enumeration, k <= 9",
            Duration::from_secs(10),
            enumeration,
        ),
        run(
            5,
            "generating functions, k <= 8, m <= 20",
            Duration::from_secs(1),
            generating_functions,
        ),
        run(
            6,
            "Lie-theoretic certification and rank stability",
            Duration::from_secs(120),
            lie_certification,
        ),
    ];

    let mut all = true;
    for o in &outcomes {
        all &= o.passed();
        println!(
            "criterion {}: {} - {} ({:.2?}, budget {:?})",
            o.id,
            if o.passed() { "PASS" } else { "FAIL" },
            o.title,
            o.elapsed,
            o.budget
        );
        for msg in o.failures.iter().take(10) {
            println!("    {msg}");
        }
    }
    // Criterion 7: for k >= 5 the stated substitute is criteria 2, 3 and the stability
    // check of 6. The oracle turns out to be cheap enough to also cover every row
    // k <= 10 directly at n = 19.
    let substitute = outcomes
        .iter()
        .filter(|o| [2, 3, 6].contains(&o.id))
        .all(Outcome::passed);
    let full = run(7, "", Duration::from_secs(120), full_range_oracle);
    for msg in full.failures.iter().take(10) {
        println!("    {msg}");
    }
    let seventh = substitute && full.passed();
    println!(
        "criterion 7: {} - k >= 5 via criteria 2, 3, 6 and a direct oracle run k <= 10 at n = 19 ({:.2?}, budget {:?})",
        if seventh { "PASS" } else { "FAIL" },
        full.elapsed,
        full.budget
    );
    assert!(all && seventh, "acceptance criteria failed");
}
