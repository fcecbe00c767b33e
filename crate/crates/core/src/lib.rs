//! Explicit type-A data of the generalized Springer correspondence for `SL_n(C)`.
//!
//! Everything here is exact integer arithmetic. The center `Z ≅ Z/n` is
//! handled through exponents, weights through numerators over the fixed
//! denominator `n`, and points of the toric variety through the set of
//! simple-root coordinates that vanish.
//!
//! - [`partitions`]: Jordan types, divisibility and contraction, standard
//!   tableaux, irreducible `S_n` dimensions.
//! - [`characters`]: central characters, kernels, orders, Levi pullbacks.
//! - [`weights`]: fundamental and reduced weights, occurrence, toric relations.
//! - [`strata`]: stabilizers and stratum membership from vanishing patterns.
//! - [`correspondence`]: cuspidal data, Lusztig-sheaf decompositions and the
//!   full correspondence table.
//! - [`oracle`]: brute-force reference computations used by the checks.
//! - [`golden`]: stored transcriptions of the published `n = 4, 6, 12` data.

pub mod characters;
pub mod correspondence;
mod error;
pub mod golden;
pub mod oracle;
pub mod partitions;
pub mod strata;
pub mod weights;

pub use characters::{CentralCharacter, CentralSubgroup};
pub use correspondence::{CorrespondenceTable, CuspidalDatum, SheafSummand};
pub use error::{Error, Result};
pub use partitions::{Partition, StandardTableau};
pub use strata::VanishingPattern;
pub use weights::{MonomialRelation, WeightExpansion, WeightKind};
