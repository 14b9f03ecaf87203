//! Building semi-braces: matched products, Rees products, zero semi-braces,
//! the six-element example, decompositions and small-order enumeration.

mod basic;
mod decompose;
mod enumerate;
mod matched;

pub use basic::{example_c6, product_semibrace, zero_semibrace, Side};
pub use decompose::{check_isomorphism, decompose, Decomposition};
pub use enumerate::{
    enumerate_circ, isomorphism_classes, semibrace_isomorphism, DEFAULT_ENUMERATION_CAP,
};
pub use matched::{
    matched_product, trivial_actions, verify_matched_data, MatchedData, MatchedFailure, MatchedLaw,
    MatchedReport,
};
