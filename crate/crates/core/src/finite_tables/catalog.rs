//! Hard-coded abstract groups of small order, and group names.

use crate::error::{check_cap, Result};

use super::GroupTable;

/// Largest order covered by [`groups_of_order`].
pub const CATALOG_MAX_ORDER: usize = 8;

/// One representative of every isomorphism class of groups of order `n`.
pub fn groups_of_order(n: usize) -> Result<Vec<(&'static str, GroupTable)>> {
    check_cap("group catalog order", n, CATALOG_MAX_ORDER)?;
    let c = GroupTable::cyclic;
    Ok(match n {
        0 => Vec::new(),
        1 => vec![("C1", c(1))],
        2 => vec![("C2", c(2))],
        3 => vec![("C3", c(3))],
        4 => vec![("C4", c(4)), ("C2xC2", c(2).direct_product(&c(2)))],
        5 => vec![("C5", c(5))],
        6 => vec![("C6", c(6)), ("S3", GroupTable::dihedral(3))],
        7 => vec![("C7", c(7))],
        8 => vec![
            ("C8", c(8)),
            ("C4xC2", c(4).direct_product(&c(2))),
            ("C2xC2xC2", c(2).direct_product(&c(2)).direct_product(&c(2))),
            ("D4", GroupTable::dihedral(4)),
            ("Q8", GroupTable::quaternion()),
        ],
        _ => unreachable!("guarded by cap"),
    })
}

/// Parses names such as `C5`, `S3`, `D4`, `Q8`, `trivial` and direct
/// products written `C2xC3`.
pub fn group_by_name(name: &str) -> Option<GroupTable> {
    let name = name.trim();
    if name.eq_ignore_ascii_case("trivial") {
        return Some(GroupTable::trivial());
    }
    let mut factors = name.split(['x', 'X', '*']);
    let first = single_factor(factors.next()?)?;
    factors.try_fold(first, |acc, f| Some(acc.direct_product(&single_factor(f)?)))
}

fn single_factor(name: &str) -> Option<GroupTable> {
    let name = name.trim();
    let (kind, order) = name.split_at(name.find(|c: char| c.is_ascii_digit())?);
    let k: usize = order.parse().ok()?;
    match kind {
        "C" | "c" | "Z" | "z" if k >= 1 => Some(GroupTable::cyclic(k)),
        "D" | "d" if k >= 3 => Some(GroupTable::dihedral(k)),
        "S" | "s" if k == 3 => Some(GroupTable::dihedral(3)),
        "Q" | "q" if k == 8 => Some(GroupTable::quaternion()),
        _ => None,
    }
}
