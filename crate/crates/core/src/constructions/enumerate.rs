use std::collections::HashSet;

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{check_cap, Error, Result};
use crate::finite_tables::{groups_of_order, verify_semigroup, OpTable, DEFAULT_MAX_VIOLATIONS};
use crate::semibrace::LeftSemiBrace;

/// Default largest carrier for [`enumerate_circ`].
pub const DEFAULT_ENUMERATION_CAP: usize = 8;

/// Every group structure on the carrier of `dot` that makes it a left
/// semi-brace. Candidate groups are all relabellings of the catalog groups;
/// results are sorted by circ table.
pub fn enumerate_circ(dot: &OpTable, cap: usize) -> Result<Vec<LeftSemiBrace>> {
    let n = dot.size();
    check_cap(
        "enumeration carrier",
        n,
        cap.min(crate::finite_tables::CATALOG_MAX_ORDER),
    )?;
    let report = verify_semigroup(dot, DEFAULT_MAX_VIOLATIONS);
    if !report.valid {
        return Err(Error::DotNotSemigroup(report.violations));
    }
    let idempotent: Vec<bool> = (0..n).map(|x| dot.op(x, x) == x).collect();
    let mut candidates = HashSet::new();
    for (_, group) in groups_of_order(n)? {
        for perm in (0..n).permutations(n) {
            // the circ identity is always a dot idempotent
            if idempotent[perm[group.identity()]] {
                candidates.insert(group.relabel(&perm));
            }
        }
    }
    let mut found: Vec<LeftSemiBrace> = candidates
        .into_par_iter()
        .filter_map(|circ| LeftSemiBrace::new(dot.clone(), circ).ok())
        .collect();
    found.sort_by(|a, b| {
        a.circ_group()
            .table()
            .entries()
            .cmp(b.circ_group().table().entries())
    });
    Ok(found)
}

/// An isomorphism `a → b` of semi-braces, if any. Searches the group
/// isomorphisms of the circ groups and keeps one that also respects dot.
pub fn semibrace_isomorphism(a: &LeftSemiBrace, b: &LeftSemiBrace) -> Result<Option<Vec<usize>>> {
    if a.size() != b.size() {
        return Ok(None);
    }
    let n = a.size();
    let mut found = None;
    a.circ_group().for_each_isomorphism(b.circ_group(), |map| {
        let ok = (0..n).all(|x| (0..n).all(|y| map[a.dot(x, y)] == b.dot(map[x], map[y])));
        if ok {
            found = Some(map.to_vec());
        }
        ok
    })?;
    Ok(found)
}

/// Partitions `braces` into isomorphism classes, listing indices.
pub fn isomorphism_classes(braces: &[LeftSemiBrace]) -> Result<Vec<Vec<usize>>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, b) in braces.iter().enumerate() {
        let mut placed = false;
        for class in &mut classes {
            if semibrace_isomorphism(&braces[class[0]], b)?.is_some() {
                class.push(i);
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push(vec![i]);
        }
    }
    Ok(classes)
}
