//! Extraction of the blocks `Y_p` from `ad^{⊗k}` and certification of
//! `ad^{⊗k} = Σ_p c_p^k Y_p` at a fixed rank.
//!
//! `Y_k` is defined as `ad^{⊗k} - Σ_{p<k} c_p^k Y_p`. The claim is falsifiable
//! through the properties the extracted blocks must have: nonnegative contents,
//! the leading piece `((k),(k))` exactly once, no invariants beyond those
//! counted by `c_0^k = d_k`, and independence of the rank.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed};
use serde_json::{json, Value};

use super::klimyk::adjoint_powers;
use super::multiset::{IrrepMultiset, Multiset};
use super::stable::{dynkin_to_stable, stable_to_dynkin, StableLabel};
use super::weights::{DynkinLabels, Rank};
use crate::coefficients::coefficient_row;
use crate::combinatorics::derangements;
use crate::error::{Error, Result};

fn check_stable_range(k_max: u32, rank: Rank) -> Result<()> {
    if 2 * k_max > rank.n() + 1 {
        return Err(Error::OutsideStableRange {
            k: k_max,
            n: rank.n(),
        });
    }
    Ok(())
}

/// Irreducible contents of `Y_0 ..= Y_{k_max}` at one rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YLibrary {
    pub rank: Rank,
    /// `contents[p]` is `Y_p` over rank-free labels.
    pub contents: Vec<Multiset<StableLabel>>,
    /// The same blocks as `A_n` highest weights.
    pub dynkin: Vec<IrrepMultiset>,
}

impl YLibrary {
    pub fn k_max(&self) -> u32 {
        (self.contents.len() - 1) as u32
    }

    /// Invariant violations of block `p`; empty when the block is well formed.
    pub fn violations(&self, p: u32) -> Vec<String> {
        let y = &self.contents[p as usize];
        let mut out = Vec::new();
        for (label, m) in y.iter() {
            if m.is_negative() {
                out.push(format!("Y_{p} has negative multiplicity {m} on {label}"));
            }
        }
        let lead = y.get(&StableLabel::leading(p));
        if !lead.is_one() {
            out.push(format!(
                "Y_{p} contains {} with multiplicity {lead}, expected 1",
                StableLabel::leading(p)
            ));
        }
        out
    }
}

/// Builds the library from already computed powers `ad^{⊗0} ..= ad^{⊗k_max}`.
/// Does not check the block invariants.
fn extract_from_powers(powers: &[IrrepMultiset], rank: Rank) -> YLibrary {
    let mut dynkin: Vec<IrrepMultiset> = Vec::with_capacity(powers.len());
    for (k, power) in powers.iter().enumerate() {
        let row = coefficient_row(k as u32);
        let mut y = power.clone();
        for (p, block) in dynkin.iter().enumerate() {
            y.add_scaled(block, &-&row.values[p]);
        }
        dynkin.push(y);
    }
    let contents = dynkin
        .iter()
        .map(|y| {
            y.map_labels(dynkin_to_stable)
                .expect("constituents of adjoint powers lie in the root lattice")
        })
        .collect();
    YLibrary {
        rank,
        contents,
        dynkin,
    }
}

/// Extracts `Y_0 ..= Y_{k_max}` at `rank`. Requires `2 k_max <= n + 1`.
///
/// Fails if any block has a negative multiplicity or lacks its leading piece.
pub fn extract_y_contents(k_max: u32, rank: Rank) -> Result<YLibrary> {
    check_stable_range(k_max, rank)?;
    let library = extract_from_powers(&adjoint_powers(k_max, rank), rank);
    let problems: Vec<String> = (0..=k_max).flat_map(|p| library.violations(p)).collect();
    if !problems.is_empty() {
        return Err(Error::ExtractionFailed(problems.join("; ")));
    }
    Ok(library)
}

/// One discrepancy between `ad^{⊗k}` and `Σ c_p^k Y_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualEntry {
    pub labels: DynkinLabels,
    pub expected: BigInt,
    pub observed: BigInt,
}

/// Checks for a single tensor power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerCheck {
    pub k: u32,
    pub coefficients: Vec<BigInt>,
    pub irreps: usize,
    /// `((n+1)^2 - 1)^k`
    pub expected_dimension: BigInt,
    /// `Σ mult · dim` over `ad^{⊗k}`
    pub observed_dimension: BigInt,
    /// `Σ_p c_p^k dim(Y_p)`
    pub block_dimension: BigInt,
    pub residual: Vec<ResidualEntry>,
    pub block_violations: Vec<String>,
    pub trivial_multiplicity: BigInt,
    pub derangement: BigInt,
    pub elapsed: Duration,
}

impl PowerCheck {
    pub fn dimension_balanced(&self) -> bool {
        self.observed_dimension == self.expected_dimension
            && self.block_dimension == self.expected_dimension
    }

    pub fn passed(&self) -> bool {
        self.residual.is_empty()
            && self.block_violations.is_empty()
            && self.dimension_balanced()
            && self.trivial_multiplicity == self.derangement
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub k_max: u32,
    pub rank: Rank,
    pub pass: bool,
    pub powers: Vec<PowerCheck>,
    pub library: YLibrary,
    pub elapsed: Duration,
}

/// Certifies `ad^{⊗k} = Σ_p c_p^k Y_p` for `k <= k_max` at `rank`.
///
/// Failures are recorded in the report rather than returned as errors; only a
/// request outside the stable range is an error.
pub fn verify_stable_decomposition(k_max: u32, rank: Rank) -> Result<VerificationReport> {
    check_stable_range(k_max, rank)?;
    let start = Instant::now();
    let mut powers = Vec::with_capacity(k_max as usize + 1);
    let mut timings = Vec::with_capacity(k_max as usize + 1);
    {
        let weights = super::klimyk::adjoint_weight_system(rank);
        let mut current = IrrepMultiset::singleton(DynkinLabels::trivial(rank));
        let mut tick = Instant::now();
        for k in 0..=k_max {
            if k > 0 {
                current = super::klimyk::tensor_with_weights(&current, &weights, rank);
            }
            powers.push(current.clone());
            timings.push(tick.elapsed());
            tick = Instant::now();
        }
    }
    let library = extract_from_powers(&powers, rank);
    let d = derangements(k_max);
    let trivial = DynkinLabels::trivial(rank);
    let block_dims: Vec<BigInt> = library.dynkin.iter().map(|y| y.total_dimension()).collect();

    let checks: Vec<PowerCheck> = powers
        .iter()
        .enumerate()
        .map(|(k, power)| {
            let row = coefficient_row(k as u32);
            let mut reassembled = IrrepMultiset::new();
            for (p, c) in row.values.iter().enumerate() {
                reassembled.add_scaled(&library.dynkin[p], c);
            }
            let residual = reassembled
                .difference(power)
                .iter()
                .map(|(labels, _)| ResidualEntry {
                    labels: labels.clone(),
                    expected: reassembled.get(labels),
                    observed: power.get(labels),
                })
                .collect();
            let block_dimension = row
                .values
                .iter()
                .zip(&block_dims)
                .map(|(c, dim)| c * dim)
                .sum();
            PowerCheck {
                k: k as u32,
                irreps: power.len(),
                expected_dimension: Pow::pow(BigInt::from(rank.adjoint_dimension()), k as u32),
                observed_dimension: power.total_dimension(),
                block_dimension,
                residual,
                block_violations: library.violations(k as u32),
                trivial_multiplicity: power.get(&trivial),
                derangement: d[k].clone(),
                coefficients: row.values,
                elapsed: timings[k],
            }
        })
        .collect();

    let pass = checks.iter().all(PowerCheck::passed);
    Ok(VerificationReport {
        k_max,
        rank,
        pass,
        powers: checks,
        library,
        elapsed: start.elapsed(),
    })
}

/// `[[λ...], [μ...]]`
pub fn stable_label_json(label: &StableLabel) -> Value {
    json!([label.left(), label.right()])
}

fn strings(values: &[BigInt]) -> Vec<String> {
    values.iter().map(BigInt::to_string).collect()
}

impl VerificationReport {
    /// JSON form with big integers as decimal strings. Timings are left out so
    /// that identical runs serialize identically.
    pub fn to_json(&self) -> Value {
        let powers: Vec<Value> = self
            .powers
            .iter()
            .map(|c| {
                let residual: Vec<Value> = c
                    .residual
                    .iter()
                    .map(|r| {
                        json!({
                            "labels": r.labels.as_slice(),
                            "expected": r.expected.to_string(),
                            "observed": r.observed.to_string(),
                        })
                    })
                    .collect();
                json!({
                    "k": c.k,
                    "pass": c.passed(),
                    "coefficients": strings(&c.coefficients),
                    "irreps": c.irreps,
                    "expected_dimension": c.expected_dimension.to_string(),
                    "observed_dimension": c.observed_dimension.to_string(),
                    "block_dimension": c.block_dimension.to_string(),
                    "trivial_multiplicity": c.trivial_multiplicity.to_string(),
                    "derangement": c.derangement.to_string(),
                    "residual": residual,
                    "block_violations": c.block_violations,
                })
            })
            .collect();
        let blocks: Vec<Value> = self
            .library
            .contents
            .iter()
            .enumerate()
            .map(|(p, y)| {
                let entries: Vec<Value> = y
                    .iter()
                    .map(|(label, m)| {
                        json!({
                            "label": stable_label_json(label),
                            "dynkin": stable_to_dynkin(label, self.rank)
                                .map(|a| a.as_slice().to_vec())
                                .unwrap_or_default(),
                            "multiplicity": m.to_string(),
                        })
                    })
                    .collect();
                json!({ "p": p, "contents": entries })
            })
            .collect();
        json!({
            "report": "oracle",
            "k_max": self.k_max,
            "n": self.rank.n(),
            "pass": self.pass,
            "powers": powers,
            "y_library": blocks,
        })
    }

    /// Human-readable summary; failing powers list their residual diff.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "oracle verification for {} with k <= {}: {}\n",
            self.rank,
            self.k_max,
            if self.pass { "PASS" } else { "FAIL" }
        );
        for c in &self.powers {
            out.push_str(&format!(
                "  k={} {} irreps={} dim={} (expected {}) trivial={} (d_k={}) coefficients=[{}]\n",
                c.k,
                if c.passed() { "ok" } else { "FAILED" },
                c.irreps,
                c.observed_dimension,
                c.expected_dimension,
                c.trivial_multiplicity,
                c.derangement,
                strings(&c.coefficients).join(", "),
            ));
            for r in &c.residual {
                out.push_str(&format!(
                    "    residual {}: expected {} observed {}\n",
                    r.labels, r.expected, r.observed
                ));
            }
            for v in &c.block_violations {
                out.push_str(&format!("    {v}\n"));
            }
        }
        for (p, y) in self.library.contents.iter().enumerate() {
            let parts: Vec<String> = y.iter().map(|(l, m)| format!("{m}×{l}")).collect();
            out.push_str(&format!("  Y_{p} = {}\n", parts.join(" + ")));
        }
        out
    }
}
