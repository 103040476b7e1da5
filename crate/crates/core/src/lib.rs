//! Exact decomposition of tensor powers of the adjoint representation of `A_n`
//! in the stable range `2k <= n + 1`.
//!
//! The multiplicity of the block `Y_j` in `ad^{⊗k}` is `c_j^k = C(k,j) · d_k^j`,
//! where `d_k^j` are higher derangement numbers read off Euler's difference
//! table. [`coefficients`] computes these numbers three ways; [`lie`] checks
//! them against an explicit Klimyk decomposition of `ad^{⊗k}`.

pub mod checks;
pub mod coefficients;
pub mod combinatorics;
mod error;
pub mod lie;
pub mod render;

pub use error::{Error, Result};
