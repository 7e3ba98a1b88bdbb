//! Exact computation of quantum weighted double Hurwitz numbers.
//!
//! Everything is exact: rationals are arbitrary precision and series carry an
//! explicit order below which every coefficient is known.

pub mod characters;
pub mod error;
pub mod hurwitz;
pub mod measures;
pub mod partitions;
pub mod weighted;
pub mod report;
pub mod series;
pub mod tau;
pub mod verify;
pub mod weights;

pub use characters::{character, schur_in_powersums, CharacterTable};
pub use error::{Error, Result};
pub use hurwitz::{brute_force_hurwitz, euler_characteristic, hurwitz, simple_hurwitz, ProfileList};
pub use partitions::{enumerate_partitions, partition_count, special_partition, Partition};
pub use report::{ExpansionClaim, OrderStatus, VerificationReport};
pub use series::{format_rational, parse_rational, LaurentSeries, Rational, Var};
pub use weights::WeightModel;
