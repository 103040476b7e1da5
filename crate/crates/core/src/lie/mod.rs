//! Representation-theoretic oracle for `A_n`: Weyl dimensions, Freudenthal
//! weight systems, Klimyk products with the adjoint, and the extraction of
//! the `Y_p` blocks from adjoint tensor powers.

mod extract;
mod freudenthal;
mod klimyk;
mod multiset;
mod stable;
mod weights;
mod weyl;

pub use extract::{
    extract_y_contents, stable_label_json, verify_stable_decomposition, PowerCheck, ResidualEntry,
    VerificationReport, YLibrary,
};
pub use freudenthal::{dominant_multiplicities, freudenthal_weights};
pub use klimyk::{
    adjoint_power, adjoint_powers, adjoint_weight_system, tensor_with_adjoint, tensor_with_weights,
};
pub use multiset::{IrrepMultiset, Multiset};
pub use stable::{dynkin_to_stable, dynkin_to_stable_bounded, stable_to_dynkin, StableLabel};
pub use weights::{DynkinLabels, Rank, WeightVector};
pub use weyl::weyl_dimension;
