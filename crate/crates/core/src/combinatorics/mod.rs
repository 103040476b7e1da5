//! Factorials, binomials, Euler's difference table and the derangement families.

mod euler;
mod exact;
mod series;

pub use euler::{
    derangement, derangement_enumeration_oracle, derangements, higher_derangement,
    DerangementMethod, EulerTable, HigherDerangementMethod, HigherDerangementTable,
    ENUMERATION_LIMIT,
};
pub use exact::{binomial, exact_div, factorial, factorials, ExactInteger, ExactRational};
pub use series::{egf_coefficients, PowerSeries};
