//! Ideals, the socle, quotients by ideals, morphisms and kernels.

use std::fmt;

use rayon::prelude::*;

use crate::error::{check_cap, Error, Result};
use crate::finite_tables::OpTable;
use crate::semibrace::{verify_left_semibrace, CornerData, LeftSemiBrace};

/// Default largest carrier for [`all_ideals`].
pub const DEFAULT_IDEAL_CAP: usize = 12;

/// Membership flags over a carrier.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubsetMask(Vec<bool>);

impl SubsetMask {
    pub fn empty(n: usize) -> Self {
        Self(vec![false; n])
    }

    pub fn full(n: usize) -> Self {
        Self(vec![true; n])
    }

    pub fn from_elements(n: usize, elements: &[usize]) -> Result<Self> {
        let mut m = Self::empty(n);
        for &x in elements {
            *m.0.get_mut(x).ok_or(Error::ElementOutOfRange(x))? = true;
        }
        Ok(m)
    }

    pub fn from_flags(flags: Vec<bool>) -> Self {
        Self(flags)
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0[x]
    }

    pub fn flags(&self) -> &[bool] {
        &self.0
    }

    pub fn elements(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&x| self.0[x]).collect()
    }

    pub fn count(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    pub fn carrier_size(&self) -> usize {
        self.0.len()
    }

    pub fn is_subset_of(&self, other: &SubsetMask) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| !a || b)
    }
}

/// Status of each defining condition of an ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealReport {
    pub dot_closed: bool,
    /// `(I ∩ G, ·)` is a normal subgroup of `(G, ·)`.
    pub normal_in_group_component: bool,
    /// `(I, ∘)` is a normal subgroup of `(B, ∘)`.
    pub circ_normal: bool,
    /// `ρ_b(I) ⊆ I` for `b ∈ 1∘B`.
    pub rho_stable: bool,
    /// `λ_a(I) ⊆ I` for `a ∈ B1∘`.
    pub lambda_stable: bool,
}

impl IdealReport {
    pub fn is_ideal(&self) -> bool {
        self.dot_closed
            && self.normal_in_group_component
            && self.circ_normal
            && self.rho_stable
            && self.lambda_stable
    }
}

impl fmt::Display for IdealReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed: Vec<&str> = [
            (self.dot_closed, "dot closure"),
            (self.normal_in_group_component, "normal in 1∘B1∘"),
            (self.circ_normal, "normal in (B,∘)"),
            (self.rho_stable, "ρ-stability"),
            (self.lambda_stable, "λ-stability"),
        ]
        .into_iter()
        .filter(|(ok, _)| !ok)
        .map(|(_, name)| name)
        .collect();
        if failed.is_empty() {
            write!(f, "all conditions hold")
        } else {
            write!(f, "fails {}", failed.join(", "))
        }
    }
}

/// Checks the ideal conditions. Requires `ρ` to be an anti-homomorphism.
pub fn is_ideal(b: &LeftSemiBrace, ideal: &SubsetMask) -> Result<IdealReport> {
    b.require_rho_antihomomorphism()?;
    let corners = b.corners()?;
    ideal_report(b, &corners, ideal)
}

fn ideal_report(b: &LeftSemiBrace, c: &CornerData, ideal: &SubsetMask) -> Result<IdealReport> {
    let n = b.size();
    if ideal.carrier_size() != n {
        return Err(Error::SizeMismatch(ideal.carrier_size(), n));
    }
    let members = ideal.elements();
    let dot_closed = members
        .iter()
        .all(|&x| members.iter().all(|&y| ideal.contains(b.dot(x, y))));

    // (G, ·) has identity 1∘; its inverses are found by search
    let g_inverse = |x: usize| c.g.iter().copied().find(|&y| b.dot(x, y) == b.one());
    let in_both: Vec<usize> = members.iter().copied().filter(|&x| c.in_g(x)).collect();
    let normal_in_group_component = ideal.contains(b.one())
        && in_both.iter().all(|&x| {
            g_inverse(x).is_some_and(|xi| ideal.contains(xi))
                && in_both.iter().all(|&y| ideal.contains(b.dot(x, y)))
                && c.g
                    .iter()
                    .all(|&g| g_inverse(g).is_some_and(|gi| ideal.contains(b.dot(b.dot(g, x), gi))))
        });

    let circ_normal = b.circ_group().is_normal_subgroup(ideal.flags());
    let rho_stable =
        c.r.iter()
            .all(|&r| members.iter().all(|&x| ideal.contains(b.rho(r, x))));
    let lambda_stable =
        c.k.iter()
            .all(|&k| members.iter().all(|&x| ideal.contains(b.lambda(k, x))));
    Ok(IdealReport {
        dot_closed,
        normal_in_group_component,
        circ_normal,
        rho_stable,
        lambda_stable,
    })
}

/// `{x | λ_x = λ_{1∘} and ρ_x = ρ_{1∘}}`, by pointwise comparison.
///
/// When `ρ` is an anti-homomorphism the result is also compared against the
/// characterisation `x̄∘(1∘·b) = x̄·b` and `x∘(b·1∘) = b·x` for all `b`, and
/// checked to lie inside the socle of `1∘B1∘`.
pub fn socle(b: &LeftSemiBrace) -> Result<SubsetMask> {
    let n = b.size();
    let one = b.one();
    let flags: Vec<bool> = (0..n)
        .into_par_iter()
        .map(|x| (0..n).all(|y| b.lambda(x, y) == b.lambda(one, y) && b.rho(x, y) == b.rho(one, y)))
        .collect();
    let soc = SubsetMask(flags);
    if b.is_rho_antihomomorphism()?.holds {
        let by_characterisation = (0..n).all(|x| {
            let xb = b.bar(x);
            let char_holds = (0..n).all(|y| {
                b.circ(xb, b.dot(one, y)) == b.dot(xb, y) && b.circ(x, b.dot(y, one)) == b.dot(y, x)
            });
            char_holds == soc.contains(x)
        });
        if !by_characterisation {
            return Err(Error::Inconsistency(
                "socle differs from its elementwise characterisation".into(),
            ));
        }
        let group_socle = group_component_socle(b, &b.corners()?);
        if !soc.is_subset_of(&group_socle) {
            return Err(Error::Inconsistency(
                "socle is not contained in the socle of 1∘B1∘".into(),
            ));
        }
    }
    Ok(soc)
}

/// `{x ∈ G | x∘y = x·y = y·x for all y ∈ G}` with `G = 1∘B1∘`.
pub fn group_component_socle(b: &LeftSemiBrace, c: &CornerData) -> SubsetMask {
    let mut m = SubsetMask::empty(b.size());
    for &x in &c.g {
        if c.g
            .iter()
            .all(|&y| b.circ(x, y) == b.dot(x, y) && b.dot(x, y) == b.dot(y, x))
        {
            m.0[x] = true;
        }
    }
    m
}

/// A map between semi-braces, not yet known to be a homomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub source: LeftSemiBrace,
    pub target: LeftSemiBrace,
    pub map: Vec<usize>,
}

impl Morphism {
    pub fn identity(b: &LeftSemiBrace) -> Self {
        Self {
            source: b.clone(),
            target: b.clone(),
            map: (0..b.size()).collect(),
        }
    }
}

pub fn verify_morphism(f: &Morphism) -> Result<()> {
    let n = f.source.size();
    if f.map.len() != n {
        return Err(Error::SizeMismatch(f.map.len(), n));
    }
    if let Some(&y) = f.map.iter().find(|&&y| y >= f.target.size()) {
        return Err(Error::ElementOutOfRange(y));
    }
    for x in 0..n {
        for y in 0..n {
            let (fx, fy) = (f.map[x], f.map[y]);
            if f.map[f.source.dot(x, y)] != f.target.dot(fx, fy) {
                return Err(Error::NotAMorphism {
                    op: "dot",
                    pair: (x, y),
                });
            }
            if f.map[f.source.circ(x, y)] != f.target.circ(fx, fy) {
                return Err(Error::NotAMorphism {
                    op: "circ",
                    pair: (x, y),
                });
            }
        }
    }
    Ok(())
}

/// Preimage of the target's `1∘`. When the source has `ρ` anti-homomorphic
/// the kernel is re-checked to be an ideal.
pub fn kernel(f: &Morphism) -> Result<SubsetMask> {
    verify_morphism(f)?;
    let one = f.target.one();
    let ker = SubsetMask(f.map.iter().map(|&y| y == one).collect());
    if f.source.is_rho_antihomomorphism()?.holds {
        let report = is_ideal(&f.source, &ker)?;
        if !report.is_ideal() {
            return Err(Error::Inconsistency(format!(
                "kernel is not an ideal: {report}"
            )));
        }
    }
    Ok(ker)
}

/// The quotient `B/∼_I` where `x ∼_I y` iff `ȳ∘x ∈ I`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub brace: LeftSemiBrace,
    pub projection: Morphism,
    /// Members of each class, classes ordered by least member.
    pub classes: Vec<Vec<usize>>,
}

pub fn quotient(b: &LeftSemiBrace, ideal: &SubsetMask) -> Result<Quotient> {
    let report = is_ideal(b, ideal)?;
    if !report.is_ideal() {
        return Err(Error::NotAnIdeal(report));
    }
    let n = b.size();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = (0..n)
            .filter(|&y| ideal.contains(b.circ(b.bar(x), y)))
            .collect();
        for &y in &members {
            class_of[y] = classes.len();
        }
        classes.push(members);
    }
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let m = classes.len();
    let dot = OpTable::from_fn(m, |p, q| class_of[b.dot(reps[p], reps[q])])?;
    let circ = OpTable::from_fn(m, |p, q| class_of[b.circ(reps[p], reps[q])])?;
    for x in 0..n {
        for y in 0..n {
            let (p, q) = (class_of[x], class_of[y]);
            if class_of[b.dot(x, y)] != dot.op(p, q) {
                return Err(Error::CongruenceBroken {
                    op: "dot",
                    pair: (x, y),
                });
            }
            if class_of[b.circ(x, y)] != circ.op(p, q) {
                return Err(Error::CongruenceBroken {
                    op: "circ",
                    pair: (x, y),
                });
            }
        }
    }
    let brace = verify_left_semibrace(&dot, &circ)
        .map_err(|e| Error::Inconsistency(format!("quotient is not a semi-brace: {e}")))?;
    let projection = Morphism {
        source: b.clone(),
        target: brace.clone(),
        map: class_of,
    };
    verify_morphism(&projection)?;
    Ok(Quotient {
        brace,
        projection,
        classes,
    })
}

/// All ideals: normal subgroups of `(B, ∘)` passing [`is_ideal`].
pub fn all_ideals(b: &LeftSemiBrace, cap: usize) -> Result<Vec<SubsetMask>> {
    b.require_rho_antihomomorphism()?;
    check_cap("ideal enumeration carrier", b.size(), cap)?;
    let corners = b.corners()?;
    let group = b.circ_group();
    let subgroups = group.subgroups(cap)?;
    let verdicts = subgroups
        .par_iter()
        .map(|h| {
            if !group.is_normal_subgroup(h) {
                return Ok(None);
            }
            let mask = SubsetMask(h.clone());
            let report = ideal_report(b, &corners, &mask)?;
            Ok(report.is_ideal().then_some(mask))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut ideals: Vec<SubsetMask> = verdicts.into_iter().flatten().collect();
    ideals.sort_by_key(|m| (m.count(), m.elements()));
    Ok(ideals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{example_c6, product_semibrace, zero_semibrace, Side};
    use crate::finite_tables::GroupTable;

    fn trivial_brace(g: &GroupTable) -> LeftSemiBrace {
        LeftSemiBrace::new(g.table().clone(), g.clone()).unwrap()
    }

    fn product_c2_c2_1() -> LeftSemiBrace {
        let c2 = GroupTable::cyclic(2);
        product_semibrace(&trivial_brace(&c2), &c2, &GroupTable::trivial())
            .unwrap()
            .0
    }

    #[test]
    fn whole_carrier_is_ideal() {
        let b = product_c2_c2_1();
        assert!(is_ideal(&b, &SubsetMask::full(4)).unwrap().is_ideal());
    }

    #[test]
    fn socle_examples() {
        let c3 = trivial_brace(&GroupTable::cyclic(3));
        assert_eq!(socle(&c3).unwrap(), SubsetMask::full(3));
        let s3 = trivial_brace(&GroupTable::dihedral(3));
        assert_eq!(socle(&s3).unwrap().elements(), vec![s3.one()]);
        let e = zero_semibrace(&GroupTable::cyclic(3), Side::Right);
        assert_eq!(socle(&e).unwrap().elements(), vec![e.one()]);
    }

    #[test]
    fn socle_of_product_is_ideal() {
        let b = product_c2_c2_1();
        let soc = socle(&b).unwrap();
        assert!(is_ideal(&b, &soc).unwrap().is_ideal());
        let q = quotient(&b, &soc).unwrap();
        assert_eq!(q.brace.size() * soc.count(), b.size());
        assert_eq!(kernel(&q.projection).unwrap(), soc);
    }

    #[test]
    fn non_subgroup_fails_circ_normality() {
        // right-zero on C3: {1∘, e} is not a subgroup of C3
        let e = zero_semibrace(&GroupTable::cyclic(3), Side::Right);
        let mask = SubsetMask::from_elements(3, &[0, 1]).unwrap();
        let report = is_ideal(&e, &mask).unwrap();
        assert!(!report.circ_normal);
        assert!(!report.is_ideal());
        assert!(matches!(quotient(&e, &mask), Err(Error::NotAnIdeal(_))));
    }

    #[test]
    fn trivial_quotients() {
        let b = product_c2_c2_1();
        let all = quotient(&b, &SubsetMask::full(4)).unwrap();
        assert_eq!(all.brace.size(), 1);
        let none = quotient(&b, &SubsetMask::from_elements(4, &[b.one()]).unwrap()).unwrap();
        assert_eq!(none.brace.size(), 4);
        let iso = crate::constructions::semibrace_isomorphism(&none.brace, &b).unwrap();
        assert!(iso.is_some());
    }

    #[test]
    fn morphisms_and_kernels() {
        let b = product_c2_c2_1();
        assert_eq!(
            kernel(&Morphism::identity(&b)).unwrap().elements(),
            vec![b.one()]
        );
        let v4 = GroupTable::cyclic(2).direct_product(&GroupTable::cyclic(2));
        let t = trivial_brace(&v4);
        let swap = Morphism {
            source: t.clone(),
            target: t.clone(),
            map: vec![1, 0, 2, 3],
        };
        assert!(matches!(
            verify_morphism(&swap),
            Err(Error::NotAMorphism { .. })
        ));
    }

    #[test]
    fn ideal_enumeration() {
        let one = trivial_brace(&GroupTable::trivial());
        assert_eq!(all_ideals(&one, DEFAULT_IDEAL_CAP).unwrap().len(), 1);
        let c2 = trivial_brace(&GroupTable::cyclic(2));
        let ideals = all_ideals(&c2, DEFAULT_IDEAL_CAP).unwrap();
        assert_eq!(
            ideals,
            vec![
                SubsetMask::from_elements(2, &[0]).unwrap(),
                SubsetMask::full(2)
            ]
        );
        assert!(matches!(
            all_ideals(&example_c6(), DEFAULT_IDEAL_CAP),
            Err(Error::RhoNotAntihomomorphism(_))
        ));
    }

    #[test]
    fn ideals_split_into_coordinates() {
        let c2 = GroupTable::cyclic(2);
        let (b, _) = product_semibrace(&trivial_brace(&c2), &c2, &c2).unwrap();
        let c = b.corners().unwrap();
        for ideal in all_ideals(&b, DEFAULT_IDEAL_CAP).unwrap() {
            for x in ideal.elements() {
                let rc = c.rees.coord(x);
                for (g, i, j) in [(rc.g, 0, 0), (0, rc.i, 0), (0, 0, rc.j)] {
                    let y = c.rees.element(crate::finite_tables::ReesCoord { g, i, j });
                    assert!(ideal.contains(y));
                }
            }
        }
    }
}
