use std::collections::{HashSet, VecDeque};

use thiserror::Error;

use crate::error::{check_cap, Result};

use super::{OpTable, Triple};

/// Largest order accepted by the isomorphism search.
pub const ISOMORPHISM_CAP: usize = 24;

/// Why a table fails to be a group. Laws are checked in the order
/// identity, inverses, associativity.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("no two-sided identity")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("not associative at {0:?}")]
    NotAssociative(Triple),
}

/// A verified finite group on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupTable {
    op: OpTable,
    identity: usize,
    inverses: Vec<usize>,
}

pub fn verify_group(t: &OpTable) -> Result<GroupTable, GroupError> {
    let n = t.size();
    let identity = (0..n)
        .find(|&e| (0..n).all(|x| t.op(e, x) == x && t.op(x, e) == x))
        .ok_or(GroupError::NoIdentity)?;
    let mut inverses = Vec::with_capacity(n);
    for x in 0..n {
        let inv = (0..n)
            .find(|&y| t.op(x, y) == identity && t.op(y, x) == identity)
            .ok_or(GroupError::NoInverse(x))?;
        inverses.push(inv);
    }
    let report = super::verify_semigroup(t, 1);
    if let Some(&triple) = report.violations.first() {
        return Err(GroupError::NotAssociative(triple));
    }
    Ok(GroupTable {
        op: t.clone(),
        identity,
        inverses,
    })
}

impl GroupTable {
    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group of order 0");
        let op = OpTable::from_fn(n, |a, b| (a + b) % n).expect("valid table");
        Self {
            op,
            identity: 0,
            inverses: (0..n).map(|a| (n - a) % n).collect(),
        }
    }

    /// Pairs `(a, b)` are stored at index `a * |other| + b`.
    pub fn direct_product(&self, other: &GroupTable) -> Self {
        let m = other.size();
        let n = self.size() * m;
        let op = OpTable::from_fn(n, |x, y| self.op(x / m, y / m) * m + other.op(x % m, y % m))
            .expect("valid table");
        Self {
            op,
            identity: self.identity * m + other.identity,
            inverses: (0..n)
                .map(|x| self.inverse(x / m) * m + other.inverse(x % m))
                .collect(),
        }
    }

    /// Symmetries of the regular `m`-gon, order `2m`. Element `s*m + k` is
    /// `t^s r^k` with `r` a rotation and `t` a reflection.
    pub fn dihedral(m: usize) -> Self {
        assert!(m >= 1, "dihedral group of a 0-gon");
        let n = 2 * m;
        let op = OpTable::from_fn(n, |x, y| {
            let (s1, k1) = (x / m, x % m);
            let (s2, k2) = (y / m, y % m);
            // r^k t = t r^{-k}
            let k1 = if s2 == 1 { (m - k1) % m } else { k1 };
            ((s1 + s2) % 2) * m + (k1 + k2) % m
        })
        .expect("valid table");
        verify_group(&op).expect("dihedral table is a group")
    }

    /// The quaternion group `{±1, ±i, ±j, ±k}` as `sign*4 + unit`.
    pub fn quaternion() -> Self {
        // unit products on 1, i, j, k as (sign, unit)
        const UNIT: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let op = OpTable::from_fn(8, |x, y| {
            let (s, u) = UNIT[x % 4][y % 4];
            ((x / 4 + y / 4 + s) % 2) * 4 + u
        })
        .expect("valid table");
        verify_group(&op).expect("quaternion table is a group")
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.op.size()
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.op.op(a, b)
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverses
    }

    pub fn table(&self) -> &OpTable {
        &self.op
    }

    /// Transports the group along `perm`, where `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let mut inverses = vec![0; self.size()];
        for (x, &inv) in self.inverses.iter().enumerate() {
            inverses[perm[x]] = perm[inv];
        }
        Self {
            op: self.op.relabel(perm),
            identity: perm[self.identity],
            inverses,
        }
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.op(x, a);
            k += 1;
        }
        k
    }

    /// Sorted multiset of element orders.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.size()).map(|a| self.element_order(a)).collect();
        v.sort_unstable();
        v
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.size()).all(|a| (0..a).all(|b| self.op(a, b) == self.op(b, a)))
    }

    /// Membership mask of the subgroup generated by `gens`.
    pub fn subgroup_closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut mask = vec![false; self.size()];
        mask[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.op(x, g);
                if !mask[y] {
                    mask[y] = true;
                    queue.push_back(y);
                }
            }
        }
        mask
    }

    /// A generating set found greedily in index order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.subgroup_closure(&gens);
        // prefer high-order elements so the generating set stays small
        let mut candidates: Vec<usize> = (0..self.size()).collect();
        candidates.sort_by_key(|&a| std::cmp::Reverse(self.element_order(a)));
        for a in candidates {
            if !span[a] {
                gens.push(a);
                span = self.subgroup_closure(&gens);
            }
        }
        gens
    }

    pub fn is_subgroup(&self, mask: &[bool]) -> bool {
        let n = self.size();
        mask[self.identity]
            && (0..n).filter(|&a| mask[a]).all(|a| {
                mask[self.inverse(a)] && (0..n).filter(|&b| mask[b]).all(|b| mask[self.op(a, b)])
            })
    }

    pub fn is_normal_subgroup(&self, mask: &[bool]) -> bool {
        let n = self.size();
        self.is_subgroup(mask)
            && (0..n).all(|g| {
                (0..n)
                    .filter(|&h| mask[h])
                    .all(|h| mask[self.op(self.op(g, h), self.inverse(g))])
            })
    }

    /// All subgroups as membership masks, in discovery order starting with
    /// the trivial subgroup. Built by repeatedly adjoining one element.
    pub fn subgroups(&self, cap: usize) -> Result<Vec<Vec<bool>>> {
        check_cap("subgroup enumeration", self.size(), cap)?;
        let trivial = self.subgroup_closure(&[]);
        let mut seen = HashSet::from([trivial.clone()]);
        let mut out = vec![trivial];
        let mut next = 0;
        while next < out.len() {
            let h = out[next].clone();
            next += 1;
            let gens: Vec<usize> = (0..self.size()).filter(|&a| h[a]).collect();
            for x in (0..self.size()).filter(|&x| !h[x]) {
                let mut with_x = gens.clone();
                with_x.push(x);
                let k = self.subgroup_closure(&with_x);
                if seen.insert(k.clone()) {
                    out.push(k);
                }
            }
        }
        Ok(out)
    }

    /// Calls `visit` with every isomorphism `self → other` (as an image
    /// array) until it returns `true`. Returns whether a visit stopped early.
    pub fn for_each_isomorphism(
        &self,
        other: &GroupTable,
        mut visit: impl FnMut(&[usize]) -> bool,
    ) -> Result<bool> {
        check_cap("group isomorphism search", self.size(), ISOMORPHISM_CAP)?;
        if self.size() != other.size() || self.order_profile() != other.order_profile() {
            return Ok(false);
        }
        let gens = self.generators();
        let orders: Vec<usize> = gens.iter().map(|&g| self.element_order(g)).collect();
        let other_orders: Vec<usize> = (0..other.size()).map(|a| other.element_order(a)).collect();
        let mut images = Vec::with_capacity(gens.len());
        Ok(self.assign_generators(
            other,
            &gens,
            &orders,
            &other_orders,
            &mut images,
            &mut visit,
        ))
    }

    fn assign_generators(
        &self,
        other: &GroupTable,
        gens: &[usize],
        orders: &[usize],
        other_orders: &[usize],
        images: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if images.len() == gens.len() {
            return match self.extend_homomorphism(other, gens, images) {
                Some(map) => visit(&map),
                None => false,
            };
        }
        let want = orders[images.len()];
        for y in 0..other.size() {
            if other_orders[y] != want || images.contains(&y) {
                continue;
            }
            images.push(y);
            if self.assign_generators(other, gens, orders, other_orders, images, visit) {
                return true;
            }
            images.pop();
        }
        false
    }

    /// Extends generator images to the whole group, returning the map only if
    /// it is a well-defined bijective homomorphism.
    fn extend_homomorphism(
        &self,
        other: &GroupTable,
        gens: &[usize],
        images: &[usize],
    ) -> Option<Vec<usize>> {
        let n = self.size();
        let mut map = vec![usize::MAX; n];
        map[self.identity] = other.identity;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for (&g, &img) in gens.iter().zip(images) {
                let y = self.op(x, g);
                let fy = other.op(map[x], img);
                if map[y] == usize::MAX {
                    map[y] = fy;
                    queue.push_back(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        let mut hit = vec![false; n];
        for &fx in &map {
            if fx == usize::MAX || std::mem::replace(&mut hit[fx], true) {
                return None;
            }
        }
        let hom = (0..n).all(|a| (0..n).all(|b| map[self.op(a, b)] == other.op(map[a], map[b])));
        hom.then_some(map)
    }

    pub fn find_isomorphism(&self, other: &GroupTable) -> Result<Option<Vec<usize>>> {
        let mut found = None;
        self.for_each_isomorphism(other, |map| {
            found = Some(map.to_vec());
            true
        })?;
        Ok(found)
    }

    pub fn is_isomorphic(&self, other: &GroupTable) -> Result<bool> {
        Ok(self.find_isomorphism(other)?.is_some())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_group_laws(g: &GroupTable) {
        let n = g.size();
        for x in 0..n {
            assert_eq!(g.op(g.identity(), x), x);
            assert_eq!(g.op(x, g.identity()), x);
            assert_eq!(g.op(x, g.inverse(x)), g.identity());
            assert_eq!(g.op(g.inverse(x), x), g.identity());
        }
        assert!(g.table().is_associative());
    }

    #[test]
    fn cyclic_three() {
        let t = OpTable::from_fn(3, |a, b| (a + b) % 3).unwrap();
        let g = verify_group(&t).unwrap();
        assert_eq!(g.identity(), 0);
        assert_group_laws(&g);
    }

    #[test]
    fn right_zero_has_no_identity() {
        let t = OpTable::right_zero(2).unwrap();
        assert_eq!(verify_group(&t), Err(GroupError::NoIdentity));
    }

    #[test]
    fn monoid_without_inverse() {
        // {1, 0} under multiplication
        let t = OpTable::from_rows(&[[0, 0], [0, 1]]).unwrap();
        assert_eq!(verify_group(&t), Err(GroupError::NoInverse(0)));
    }

    #[test]
    fn non_associative_loop() {
        // a Latin square with identity 0 that is not associative
        let t = OpTable::from_rows(&[
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ])
        .unwrap();
        assert!(matches!(
            verify_group(&t),
            Err(GroupError::NotAssociative(_))
        ));
    }

    #[test]
    fn circ_of_six_element_example_is_cyclic() {
        // (i, j) in Z3 x Z2 stored at i + 3j
        let t = OpTable::from_fn(6, |a, b| {
            let i = (a % 3 + b % 3) % 3;
            let j = (a / 3 + b / 3) % 2;
            i + 3 * j
        })
        .unwrap();
        let g = verify_group(&t).unwrap();
        assert_group_laws(&g);
        assert!(g.is_isomorphic(&GroupTable::cyclic(6)).unwrap());
    }

    #[test]
    fn standard_families_are_groups() {
        for g in [
            GroupTable::dihedral(3),
            GroupTable::dihedral(4),
            GroupTable::quaternion(),
            GroupTable::cyclic(4).direct_product(&GroupTable::cyclic(2)),
        ] {
            assert_group_laws(&g);
        }
        assert!(!GroupTable::dihedral(3).is_abelian());
        assert!(!GroupTable::quaternion().is_abelian());
        assert!(GroupTable::cyclic(4)
            .direct_product(&GroupTable::cyclic(2))
            .is_abelian());
    }

    #[test]
    fn isomorphism_detection() {
        let c6 = GroupTable::cyclic(6);
        let c2c3 = GroupTable::cyclic(2).direct_product(&GroupTable::cyclic(3));
        assert!(c6.is_isomorphic(&c2c3).unwrap());
        assert!(!c6.is_isomorphic(&GroupTable::dihedral(3)).unwrap());
        assert!(!GroupTable::dihedral(4)
            .is_isomorphic(&GroupTable::quaternion())
            .unwrap());
        let c4 = GroupTable::cyclic(4);
        assert!(!c4
            .is_isomorphic(&GroupTable::cyclic(2).direct_product(&GroupTable::cyclic(2)))
            .unwrap());
    }

    #[test]
    fn counts_automorphisms() {
        let mut count = 0;
        let s3 = GroupTable::dihedral(3);
        s3.for_each_isomorphism(&s3, |_| {
            count += 1;
            false
        })
        .unwrap();
        assert_eq!(count, 6);
        let mut count = 0;
        let v4 = GroupTable::cyclic(2).direct_product(&GroupTable::cyclic(2));
        v4.for_each_isomorphism(&v4, |_| {
            count += 1;
            false
        })
        .unwrap();
        assert_eq!(count, 6);
    }

    #[test]
    fn subgroup_counts() {
        let count = |g: &GroupTable| g.subgroups(24).unwrap().len();
        assert_eq!(count(&GroupTable::cyclic(2)), 2);
        assert_eq!(count(&GroupTable::cyclic(6)), 4);
        assert_eq!(count(&GroupTable::dihedral(3)), 6);
        assert_eq!(count(&GroupTable::dihedral(4)), 10);
        assert_eq!(count(&GroupTable::quaternion()), 6);
        let normal = GroupTable::dihedral(3)
            .subgroups(24)
            .unwrap()
            .into_iter()
            .filter(|h| GroupTable::dihedral(3).is_normal_subgroup(h))
            .count();
        assert_eq!(normal, 3);
    }

    #[test]
    fn isomorphism_search_is_capped() {
        let big = GroupTable::cyclic(25);
        assert!(big.find_isomorphism(&big).is_err());
    }
}
