//! Exact combinatorics for orderings of ℓ-multipartitions.
//!
//! The crate works entirely over the rationals. Parameter points live in
//! [`params`], the affine symmetric group action and alcove classification in
//! [`weyl`], the scalar functions and partial orders in [`orders`], and batch
//! consistency checks in [`verify`].

pub mod error;
pub mod multipartitions;
pub mod orders;
pub mod params;
pub mod partitions;
pub mod rat;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use multipartitions::{Charge, MultiPartition, Perm};
pub use orders::OrderRelation;
pub use params::{ParamPoint, WallForm};
pub use partitions::{Partition, Rel};
pub use rat::Q;
pub use weyl::{AlcoveData, AlcoveMode};
