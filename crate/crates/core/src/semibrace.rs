//! The left semi-brace type, its `λ`/`ρ` maps and corner sets.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::finite_tables::{
    rees_decompose_at, verify_group, verify_semigroup, GroupTable, OpTable, ReesCoord,
    ReesStructure, Triple, DEFAULT_MAX_VIOLATIONS,
};

/// A finite left semi-brace `(B, ·, ∘)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftSemiBrace {
    dot: OpTable,
    circ: GroupTable,
}

/// Checks that `dot` is a semigroup, `circ` a group, and that
/// `a∘(b·c) = (a∘b)·(a∘(ā·c))` holds on every triple.
pub fn verify_left_semibrace(dot: &OpTable, circ: &OpTable) -> Result<LeftSemiBrace> {
    if dot.size() != circ.size() {
        return Err(Error::SizeMismatch(dot.size(), circ.size()));
    }
    let report = verify_semigroup(dot, DEFAULT_MAX_VIOLATIONS);
    if !report.valid {
        return Err(Error::DotNotSemigroup(report.violations));
    }
    let circ = verify_group(circ).map_err(Error::CircNotGroup)?;
    LeftSemiBrace::new(dot.clone(), circ)
}

/// Outcome of the anti-homomorphism test for `ρ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntiHomReport {
    pub holds: bool,
    /// `(a, b, c)` with `c·(a∘(1∘·b)) ≠ c·(a∘b)`.
    pub witness: Option<Triple>,
}

/// Corner sets of a semi-brace whose dot semigroup is completely simple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerData {
    /// `B·1∘`.
    pub k: Vec<usize>,
    /// `1∘·B`.
    pub r: Vec<usize>,
    /// `1∘·B·1∘`.
    pub g: Vec<usize>,
    pub idempotents: Vec<usize>,
    pub idempotents_k: Vec<usize>,
    pub idempotents_r: Vec<usize>,
    /// Rees coordinates with `1∘` at `(1, 1, 1)`.
    pub rees: ReesStructure,
    /// For each element, the element of `G` carrying its group coordinate.
    pub component_of: Vec<usize>,
}

impl CornerData {
    pub fn in_k(&self, x: usize) -> bool {
        self.k.binary_search(&x).is_ok()
    }

    pub fn in_r(&self, x: usize) -> bool {
        self.r.binary_search(&x).is_ok()
    }

    pub fn in_g(&self, x: usize) -> bool {
        self.g.binary_search(&x).is_ok()
    }
}

impl LeftSemiBrace {
    /// Validates the semi-brace identity for a semigroup and a group table.
    pub fn new(dot: OpTable, circ: GroupTable) -> Result<Self> {
        if dot.size() != circ.size() {
            return Err(Error::SizeMismatch(dot.size(), circ.size()));
        }
        let b = Self { dot, circ };
        let fails = b.identity_violations(DEFAULT_MAX_VIOLATIONS);
        if fails.is_empty() {
            Ok(b)
        } else {
            Err(Error::IdentityFails(fails))
        }
    }

    fn identity_violations(&self, limit: usize) -> Vec<Triple> {
        let n = self.size();
        let per_a: Vec<Vec<Triple>> = (0..n)
            .into_par_iter()
            .map(|a| {
                let abar = self.bar(a);
                let mut out = Vec::new();
                for b in 0..n {
                    let ab = self.circ(a, b);
                    for c in 0..n {
                        let lhs = self.circ(a, self.dot(b, c));
                        let rhs = self.dot(ab, self.circ(a, self.dot(abar, c)));
                        if lhs != rhs {
                            out.push((a, b, c));
                            if out.len() >= limit {
                                return out;
                            }
                        }
                    }
                }
                out
            })
            .collect();
        per_a.into_iter().flatten().take(limit).collect()
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.dot.size()
    }

    #[inline]
    pub fn dot(&self, a: usize, b: usize) -> usize {
        self.dot.op(a, b)
    }

    #[inline]
    pub fn circ(&self, a: usize, b: usize) -> usize {
        self.circ.op(a, b)
    }

    /// The identity `1∘` of `(B, ∘)`.
    #[inline]
    pub fn one(&self) -> usize {
        self.circ.identity()
    }

    /// The `∘`-inverse `ā`.
    #[inline]
    pub fn bar(&self, a: usize) -> usize {
        self.circ.inverse(a)
    }

    pub fn dot_table(&self) -> &OpTable {
        &self.dot
    }

    pub fn circ_group(&self) -> &GroupTable {
        &self.circ
    }

    /// `λ_a(b) = a∘(ā·b)`.
    #[inline]
    pub fn lambda(&self, a: usize, b: usize) -> usize {
        self.circ(a, self.dot(self.bar(a), b))
    }

    /// `ρ_a(b) = (b̄·a)‾∘a`.
    #[inline]
    pub fn rho(&self, a: usize, b: usize) -> usize {
        self.circ(self.bar(self.dot(self.bar(b), a)), a)
    }

    pub fn idempotents(&self) -> Vec<usize> {
        self.dot.idempotents()
    }

    pub fn is_circ_closed(&self, set: &[usize]) -> bool {
        let mut mask = vec![false; self.size()];
        for &x in set {
            mask[x] = true;
        }
        set.iter()
            .all(|&a| mask[self.bar(a)] && set.iter().all(|&b| mask[self.circ(a, b)]))
    }

    /// Tests whether `ρ` is an anti-homomorphism, via
    /// `c·(a∘(1∘·b)) = c·(a∘b)` and directly via `ρ_{a∘b} = ρ_b ρ_a`.
    pub fn is_rho_antihomomorphism(&self) -> Result<AntiHomReport> {
        let n = self.size();
        let one = self.one();
        let witness = (0..n).into_par_iter().find_map_first(|a| {
            for b in 0..n {
                let left = self.circ(a, self.dot(one, b));
                let right = self.circ(a, b);
                for c in 0..n {
                    if self.dot(c, left) != self.dot(c, right) {
                        return Some((a, b, c));
                    }
                }
            }
            None
        });
        let direct = (0..n).into_par_iter().all(|a| {
            (0..n).all(|b| {
                let ab = self.circ(a, b);
                (0..n).all(|x| self.rho(ab, x) == self.rho(b, self.rho(a, x)))
            })
        });
        if direct != witness.is_none() {
            return Err(Error::Inconsistency(format!(
                "anti-homomorphism criteria disagree (direct check {direct}, witness {witness:?})"
            )));
        }
        Ok(AntiHomReport {
            holds: direct,
            witness,
        })
    }

    /// Errors with [`Error::RhoNotAntihomomorphism`] unless `ρ` is one.
    pub fn require_rho_antihomomorphism(&self) -> Result<()> {
        match self.is_rho_antihomomorphism()? {
            AntiHomReport {
                witness: Some(w), ..
            } => Err(Error::RhoNotAntihomomorphism(w)),
            _ => Ok(()),
        }
    }

    pub fn corners(&self) -> Result<CornerData> {
        let n = self.size();
        let one = self.one();
        let rees = rees_decompose_at(&self.dot, one)?;
        let k: Vec<usize> = (0..n).filter(|&x| self.dot(x, one) == x).collect();
        let r: Vec<usize> = (0..n).filter(|&x| self.dot(one, x) == x).collect();
        let g: Vec<usize> = k.iter().copied().filter(|x| r.contains(x)).collect();
        let idempotents = self.idempotents();
        let idempotents_k = idempotents
            .iter()
            .copied()
            .filter(|x| k.contains(x))
            .collect();
        let idempotents_r = idempotents
            .iter()
            .copied()
            .filter(|x| r.contains(x))
            .collect();
        let component_of = (0..n)
            .map(|x| {
                let c = rees.coord(x);
                rees.element(ReesCoord { g: c.g, i: 0, j: 0 })
            })
            .collect();
        let data = CornerData {
            k,
            r,
            g,
            idempotents,
            idempotents_k,
            idempotents_r,
            rees,
            component_of,
        };
        self.check_corners(&data)?;
        Ok(data)
    }

    fn check_corners(&self, c: &CornerData) -> Result<()> {
        let fail = |what: &str| Err(Error::Inconsistency(format!("corner sets: {what}")));
        if !self.is_circ_closed(&c.k) || !self.is_circ_closed(&c.r) {
            return fail("B·1∘ or 1∘·B is not a ∘-subgroup");
        }
        let rees_group: Vec<usize> = {
            let mut v: Vec<usize> = (0..self.size())
                .filter(|&x| {
                    let rc = c.rees.coord(x);
                    rc.i == 0 && rc.j == 0
                })
                .collect();
            v.sort_unstable();
            v
        };
        if rees_group != c.g || !c.g.contains(&self.one()) {
            return fail("1∘·B·1∘ differs from the Rees group component");
        }
        if !c.rees.normalized {
            return fail("sandwich matrix is not normalized");
        }
        Ok(())
    }

    /// True iff `(B, ·)` is a group; then the skew-brace identity
    /// `a∘(b·c) = (a∘b)·a⁻¹·(a∘c)` is re-checked.
    pub fn is_skew_brace(&self) -> Result<bool> {
        let Ok(dot) = verify_group(&self.dot) else {
            return Ok(false);
        };
        let n = self.size();
        for a in 0..n {
            let ainv = dot.inverse(a);
            for b in 0..n {
                for c in 0..n {
                    let lhs = self.circ(a, self.dot(b, c));
                    let rhs = self.dot(self.dot(self.circ(a, b), ainv), self.circ(a, c));
                    if lhs != rhs {
                        return Err(Error::Inconsistency(format!(
                            "skew brace identity fails at {:?}",
                            (a, b, c)
                        )));
                    }
                }
            }
        }
        Ok(true)
    }

    /// The unique `(g, e)` with `b = g∘e`, `g ∈ 1∘B1∘`, `e ∈ E(B1∘)`.
    pub fn idempotent_decomposition(&self, b: usize) -> Result<(usize, usize)> {
        self.require_rho_antihomomorphism()?;
        let corners = self.corners()?;
        self.idempotent_decomposition_with(&corners, b)
    }

    /// As [`Self::idempotent_decomposition`], reusing precomputed corners.
    /// The caller is responsible for the anti-homomorphism hypothesis.
    pub fn idempotent_decomposition_with(
        &self,
        corners: &CornerData,
        b: usize,
    ) -> Result<(usize, usize)> {
        if b >= self.size() {
            return Err(Error::ElementOutOfRange(b));
        }
        if !corners.in_k(b) {
            return Err(Error::NotInK(b));
        }
        let mut found = corners.g.iter().flat_map(|&g| {
            corners
                .idempotents_k
                .iter()
                .filter(move |&&e| self.circ(g, e) == b)
                .map(move |&e| (g, e))
        });
        match (found.next(), found.next()) {
            (Some(pair), None) if pair.0 == corners.component_of[b] => Ok(pair),
            (first, second) => Err(Error::Inconsistency(format!(
                "decomposition of {b} as g∘e is not unique or misplaced: {first:?}, {second:?}"
            ))),
        }
    }

    /// The sub-semi-brace on a subset closed under both operations,
    /// relabelled in increasing order. Returns it with the embedding.
    pub fn restrict(&self, subset: &[usize]) -> Result<(LeftSemiBrace, Vec<usize>)> {
        let mut elems = subset.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if let Some(&x) = elems.iter().find(|&&x| x >= self.size()) {
            return Err(Error::ElementOutOfRange(x));
        }
        let mut pos = vec![usize::MAX; self.size()];
        for (k, &x) in elems.iter().enumerate() {
            pos[x] = k;
        }
        let lookup = |x: usize| {
            if pos[x] == usize::MAX {
                Err(Error::MalformedTable(format!(
                    "subset not closed, produces {x}"
                )))
            } else {
                Ok(pos[x])
            }
        };
        let m = elems.len();
        let mut dot = Vec::with_capacity(m * m);
        let mut circ = Vec::with_capacity(m * m);
        for &a in &elems {
            for &b in &elems {
                dot.push(lookup(self.dot(a, b))?);
                circ.push(lookup(self.circ(a, b))?);
            }
        }
        let sub = verify_left_semibrace(&OpTable::new(m, dot)?, &OpTable::new(m, circ)?)?;
        Ok((sub, elems))
    }
}
