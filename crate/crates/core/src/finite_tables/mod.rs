//! Cayley tables of finite magmas, groups, and Rees matrix semigroups.

mod catalog;
mod group;
mod rees;
mod table;

pub use catalog::{group_by_name, groups_of_order, CATALOG_MAX_ORDER};
pub use group::{verify_group, GroupError, GroupTable, ISOMORPHISM_CAP};
pub use rees::{
    rees_decompose, rees_decompose_at, rees_semigroup, ReesCoord, ReesError, ReesStructure,
    DEFAULT_REES_CAP,
};
pub use table::{verify_semigroup, OpTable, VerificationReport, DEFAULT_MAX_VIOLATIONS};

/// An ordered triple of carrier elements, used for law violations.
pub type Triple = (usize, usize, usize);
