//! Finite left semi-braces and the set-theoretic Yang-Baxter solutions they carry.
//!
//! A left semi-brace is a set with a semigroup operation `·` and a group
//! operation `∘` such that `a ∘ (b·c) = (a∘b) · (a ∘ (ā·c))`, where `ā` is the
//! `∘`-inverse of `a`. Everything here works on dense carrier indices
//! `0..n` and Cayley tables, so every law can be checked exhaustively.
//!
//! The crate is organised bottom-up:
//!
//! * [`finite_tables`]: Cayley tables, group tables, Rees matrix semigroups.
//! * [`semibrace`]: the semi-brace type, `λ`/`ρ` maps, corner sets.
//! * [`constructions`]: matched products, product and zero semi-braces,
//!   decompositions and small-order enumeration.
//! * [`ideals`]: ideals, socle, quotients and morphisms.
//! * [`ybe`]: the associated solution `r(x,y) = (λ_x(y), ρ_y(x))`.
//! * [`structure_monoid`]: graded word classes of the structure monoid and
//!   growth estimates.

pub mod constructions;
mod error;
pub mod finite_tables;
pub mod ideals;
pub mod semibrace;
pub mod structure_monoid;
mod union_find;
pub mod ybe;

pub use error::{Error, Result};
pub use finite_tables::{GroupTable, OpTable, Triple};
pub use semibrace::LeftSemiBrace;
