//! Degree components of the structure monoid `M(r)`, growth counts and the
//! normal-form checks for monoids of semi-braces.
//!
//! Words of length `d` over `0..n` are encoded base `n` with the first letter
//! most significant, so numeric order on codes is lexicographic order on
//! words.

use std::collections::HashSet;

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{check_cap, Error, Result};
use crate::finite_tables::Triple;
use crate::semibrace::LeftSemiBrace;
use crate::union_find::UnionFind;
use crate::ybe::{solution_from_semibrace, SetSolution};

/// Default cap on the number of words `n^d` enumerated in one degree.
pub const DEFAULT_WORD_CAP: usize = 1_000_000;

const CHUNK: usize = 1 << 14;

/// A defining relation `xy = uv`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub lhs: (usize, usize),
    pub rhs: (usize, usize),
}

/// Length-preserving relations `xy = uv`, one per pair with `r(x,y) ≠ (x,y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticPresentation {
    pub n: usize,
    pub relations: Vec<Relation>,
}

pub fn presentation(s: &SetSolution) -> QuadraticPresentation {
    let n = s.size();
    let relations = (0..n)
        .cartesian_product(0..n)
        .filter_map(|(x, y)| {
            let rhs = s.apply(x, y);
            (rhs != (x, y)).then_some(Relation { lhs: (x, y), rhs })
        })
        .collect();
    QuadraticPresentation { n, relations }
}

/// Order in which words and positions are visited when merging classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Traversal {
    Forward,
    Reverse,
}

/// The classes of words of one length under the presentation's congruence.
/// Classes are numbered by their lexicographically least member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreePartition {
    n: usize,
    degree: usize,
    class_of: Vec<u32>,
    representatives: Vec<usize>,
}

impl DegreePartition {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn class_count(&self) -> usize {
        self.representatives.len()
    }

    pub fn word_count(&self) -> usize {
        self.class_of.len()
    }

    pub fn encode(&self, word: &[usize]) -> usize {
        assert_eq!(word.len(), self.degree, "word length");
        word.iter().fold(0, |acc, &x| acc * self.n + x)
    }

    pub fn decode(&self, mut code: usize) -> Vec<usize> {
        let mut w = vec![0; self.degree];
        for slot in w.iter_mut().rev() {
            *slot = code % self.n;
            code /= self.n;
        }
        w
    }

    pub fn class_of(&self, word: &[usize]) -> usize {
        self.class_of[self.encode(word)] as usize
    }

    /// Least member of class `c`.
    pub fn representative(&self, c: usize) -> Vec<usize> {
        self.decode(self.representatives[c])
    }

    pub fn representatives(&self) -> Vec<Vec<usize>> {
        (0..self.class_count())
            .map(|c| self.representative(c))
            .collect()
    }

    /// Greatest member of each class.
    pub fn largest_members(&self) -> Vec<Vec<usize>> {
        let mut last = vec![0; self.class_count()];
        for (code, &c) in self.class_of.iter().enumerate() {
            last[c as usize] = code;
        }
        last.into_iter().map(|code| self.decode(code)).collect()
    }

    pub fn members(&self, c: usize) -> Vec<Vec<usize>> {
        self.class_of
            .iter()
            .enumerate()
            .filter(|&(_, &k)| k as usize == c)
            .map(|(code, _)| self.decode(code))
            .collect()
    }

    /// Two words of one class on which `f` differs, if any.
    pub fn invariant_violation<T: PartialEq>(
        &self,
        f: impl Fn(&[usize]) -> T,
    ) -> Option<(Vec<usize>, Vec<usize>)> {
        let values: Vec<T> = (0..self.class_count())
            .map(|c| f(&self.representative(c)))
            .collect();
        (0..self.word_count()).find_map(|code| {
            let w = self.decode(code);
            let c = self.class_of[code] as usize;
            (f(&w) != values[c]).then(|| (self.representative(c), w))
        })
    }
}

fn power_checked(n: usize, d: usize) -> usize {
    u32::try_from(d)
        .ok()
        .and_then(|d| n.checked_pow(d))
        .unwrap_or(usize::MAX)
}

pub fn degree_classes(
    p: &QuadraticPresentation,
    d: usize,
    word_cap: usize,
) -> Result<DegreePartition> {
    degree_classes_with(p, d, word_cap, Traversal::Forward)
}

/// Connected components of the graph on words of length `d` whose edges
/// apply one relation at one position.
pub fn degree_classes_with(
    p: &QuadraticPresentation,
    d: usize,
    word_cap: usize,
    traversal: Traversal,
) -> Result<DegreePartition> {
    let n = p.n;
    let total = power_checked(n, d);
    check_cap("words per degree", total, word_cap.min(u32::MAX as usize))?;
    let mut rewrite = vec![None; n * n];
    for rel in &p.relations {
        rewrite[rel.lhs.0 * n + rel.lhs.1] = Some(rel.rhs);
    }
    // place value of each position
    let weights: Vec<usize> = (0..d).map(|k| power_checked(n, d - 1 - k)).collect();
    let positions: Vec<usize> = match traversal {
        Traversal::Forward => (0..d.saturating_sub(1)).collect(),
        Traversal::Reverse => (0..d.saturating_sub(1)).rev().collect(),
    };

    let mut chunks: Vec<(usize, usize)> = (0..total)
        .step_by(CHUNK)
        .map(|lo| (lo, (lo + CHUNK).min(total)))
        .collect();
    if traversal == Traversal::Reverse {
        chunks.reverse();
    }
    let edge_blocks: Vec<Vec<(u32, u32)>> = chunks
        .par_iter()
        .map(|&(lo, hi)| {
            let mut edges = Vec::new();
            let mut visit = |code: usize| {
                for &k in &positions {
                    let x = (code / weights[k]) % n;
                    let y = (code / weights[k + 1]) % n;
                    if let Some((u, v)) = rewrite[x * n + y] {
                        let image = code - x * weights[k] - y * weights[k + 1]
                            + u * weights[k]
                            + v * weights[k + 1];
                        edges.push((code as u32, image as u32));
                    }
                }
            };
            match traversal {
                Traversal::Forward => (lo..hi).for_each(&mut visit),
                Traversal::Reverse => (lo..hi).rev().for_each(&mut visit),
            }
            edges
        })
        .collect();

    let mut uf = UnionFind::new(total);
    for (a, b) in edge_blocks.into_iter().flatten() {
        uf.union(a as usize, b as usize);
    }
    let mut class_of = vec![0u32; total];
    let mut root_class = vec![u32::MAX; total];
    let mut representatives = Vec::new();
    for (code, slot) in class_of.iter_mut().enumerate() {
        let root = uf.find(code);
        if root_class[root] == u32::MAX {
            root_class[root] = representatives.len() as u32;
            representatives.push(code);
        }
        *slot = root_class[root];
    }
    Ok(DegreePartition {
        n,
        degree: d,
        class_of,
        representatives,
    })
}

/// Which finite-degree statistic the growth estimate is based on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GkMethod {
    /// `1 + log₂(d_{2m} / d_m)` on per-degree counts.
    DegreeDoubling,
}

/// A numerical stand-in for the Gelfand-Kirillov dimension at degrees
/// `m` and `2m`.
#[derive(Clone, Debug, PartialEq)]
pub struct GkEstimate {
    pub value: f64,
    pub method: GkMethod,
    pub m: usize,
    /// `log₂(c_{2m} / c_m)` on cumulative counts, for comparison.
    pub cumulative_doubling: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrowthReport {
    /// Class counts `d_0, …, d_max`.
    pub per_degree: Vec<usize>,
    /// Running sums `c_k = d_0 + … + d_k`.
    pub cumulative: Vec<usize>,
    /// Present when the largest degree is at least 2.
    pub gk_estimate: Option<GkEstimate>,
}

impl GrowthReport {
    /// Lines `degree,count,cumulative` after a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("degree,count,cumulative\n");
        for (k, (d, c)) in self.per_degree.iter().zip(&self.cumulative).enumerate() {
            out.push_str(&format!("{k},{d},{c}\n"));
        }
        out
    }
}

pub fn growth_series(
    p: &QuadraticPresentation,
    max_d: usize,
    word_cap: usize,
) -> Result<GrowthReport> {
    check_cap("words per degree", power_checked(p.n, max_d), word_cap)?;
    let per_degree = (0..=max_d)
        .map(|d| Ok(degree_classes(p, d, word_cap)?.class_count()))
        .collect::<Result<Vec<_>>>()?;
    let cumulative: Vec<usize> = per_degree
        .iter()
        .scan(0, |acc, &d| {
            *acc += d;
            Some(*acc)
        })
        .collect();
    let m = max_d / 2;
    let gk_estimate = (m >= 1).then(|| GkEstimate {
        value: 1.0 + (per_degree[2 * m] as f64 / per_degree[m] as f64).log2(),
        method: GkMethod::DegreeDoubling,
        m,
        cumulative_doubling: (cumulative[2 * m] as f64 / cumulative[m] as f64).log2(),
    });
    Ok(GrowthReport {
        per_degree,
        cumulative,
        gk_estimate,
    })
}

fn circ_product(b: &LeftSemiBrace, word: &[usize]) -> usize {
    word.iter().fold(b.one(), |acc, &x| b.circ(acc, x))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDegree {
    pub degree: usize,
    pub classes: usize,
    /// `|1∘B|·|1∘B1∘|^{n-2}·|B1∘|`.
    pub bound: usize,
    /// Every class contains a word `x₁…x_n` with `x₁ ∈ 1∘B`,
    /// `x₂ … x_{n-1} ∈ 1∘B1∘` and `x_n ∈ B1∘`.
    pub normal_forms_cover: bool,
    /// The `∘`-product of letters is constant on classes.
    pub circ_invariant: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedReport {
    pub per_degree: Vec<GradedDegree>,
}

impl GradedReport {
    pub fn holds(&self) -> bool {
        self.per_degree
            .iter()
            .all(|g| g.normal_forms_cover && g.circ_invariant && g.classes <= g.bound)
    }
}

/// Checks normal forms and the class-count bound in degrees `2..=max_d`.
pub fn verify_graded_decomposition(
    b: &LeftSemiBrace,
    max_d: usize,
    word_cap: usize,
) -> Result<GradedReport> {
    let s = solution_from_semibrace(b)?;
    let corners = b.corners()?;
    let p = presentation(&s);
    let mut per_degree = Vec::new();
    for d in 2..=max_d {
        let part = degree_classes(&p, d, word_cap)?;
        let mut covered = vec![false; part.class_count()];
        let slots = std::iter::once(&corners.r)
            .chain(std::iter::repeat_n(&corners.g, d - 2))
            .chain(std::iter::once(&corners.k));
        for word in slots
            .map(|set| set.iter().copied())
            .multi_cartesian_product()
        {
            covered[part.class_of(&word)] = true;
        }
        per_degree.push(GradedDegree {
            degree: d,
            classes: part.class_count(),
            bound: corners.r.len() * power_checked(corners.g.len(), d - 2) * corners.k.len(),
            normal_forms_cover: covered.iter().all(|&c| c),
            circ_invariant: part.invariant_violation(|w| circ_product(b, w)).is_none(),
        });
    }
    Ok(GradedReport { per_degree })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterchangeReport {
    /// `G*K = K*G` in degree 2, with `G = 1∘B1∘`, `K = B1∘`.
    pub group_left_equal: bool,
    /// `R*G = G*R` in degree 2, with `R = 1∘B`.
    pub group_right_equal: bool,
    /// `r(fs, t) = (g, eh)` for all `g, h ∈ G`, `e ∈ E(K)` with the explicit
    /// `f, s, t`; first failing `(g, h, e)` if any.
    pub first_witness_failure: Option<Triple>,
    /// `r(t, sf) = (ge, h)` for all `g, h ∈ G`, `e ∈ E(R)`; measured only.
    pub second_witness_failure: Option<Triple>,
}

impl InterchangeReport {
    pub fn holds(&self) -> bool {
        self.group_left_equal && self.group_right_equal && self.first_witness_failure.is_none()
    }
}

/// Compares the degree-2 class sets `G*K` with `K*G` and `R*G` with `G*R`,
/// and re-checks the explicit rewriting witnesses.
pub fn verify_interchange(b: &LeftSemiBrace) -> Result<InterchangeReport> {
    let s = solution_from_semibrace(b)?;
    let c = b.corners()?;
    let part = degree_classes(&presentation(&s), 2, DEFAULT_WORD_CAP)?;
    let classes = |first: &[usize], second: &[usize]| -> HashSet<usize> {
        first
            .iter()
            .flat_map(|&x| second.iter().map(move |&y| [x, y]))
            .map(|w| part.class_of(&w))
            .collect()
    };
    let group_left_equal = classes(&c.g, &c.k) == classes(&c.k, &c.g);
    let group_right_equal = classes(&c.r, &c.g) == classes(&c.g, &c.r);

    let g_inverse = |x: usize| -> Result<usize> {
        c.g.iter()
            .copied()
            .find(|&y| b.dot(x, y) == b.one())
            .ok_or_else(|| Error::Inconsistency(format!("{x} has no inverse in 1∘B1∘")))
    };
    let mut first_witness_failure = None;
    let mut second_witness_failure = None;
    for &g in &c.g {
        let gi = g_inverse(g)?;
        for &h in &c.g {
            for &e in &c.idempotents_k {
                let f = b.dot(b.circ(g, e), gi);
                let s_ = b.dot(b.dot(g, b.lambda(g, h)), gi);
                let eh = b.dot(e, h);
                let t = b.lambda(b.bar(b.dot(b.circ(g, eh), gi)), g);
                if first_witness_failure.is_none() && s.apply(b.dot(f, s_), t) != (g, eh) {
                    first_witness_failure = Some((g, h, e));
                }
            }
            for &e in &c.idempotents_r {
                let ge = b.dot(g, e);
                let t = b.bar(b.rho(b.bar(ge), b.bar(h)));
                let s_ = b.lambda(b.bar(t), g);
                let f = b.lambda(b.bar(t), e);
                if second_witness_failure.is_none() && s.apply(t, b.dot(s_, f)) != (ge, h) {
                    second_witness_failure = Some((g, h, e));
                }
            }
        }
    }
    Ok(InterchangeReport {
        group_left_equal,
        group_right_equal,
        first_witness_failure,
        second_witness_failure,
    })
}

/// Which zero semigroup a semi-brace's dot is.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroSide {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroDegree {
    pub degree: usize,
    pub classes: usize,
    /// The map `class(f₁…f_n) ↦ (f₁∘…∘f_n, n)` is well defined and
    /// bijective onto `E × {n}` (onto the adjoined identity when `n = 0`).
    pub bijective: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroMonoidReport {
    pub side: ZeroSide,
    pub per_degree: Vec<ZeroDegree>,
    /// Concatenating members of two classes lands in the class modelled by
    /// `(f∘g, k + l)`.
    pub multiplicative: bool,
}

impl ZeroMonoidReport {
    pub fn holds(&self) -> bool {
        self.multiplicative && self.per_degree.iter().all(|d| d.bijective)
    }
}

/// Compares the structure monoid of a left or right zero semi-brace `E`
/// with its model `(E × ℕ)¹` in degrees `0..=max_d`.
pub fn right_zero_monoid_check(
    e: &LeftSemiBrace,
    max_d: usize,
    word_cap: usize,
) -> Result<ZeroMonoidReport> {
    let n = e.size();
    let all = |f: &dyn Fn(usize, usize) -> bool| (0..n).all(|x| (0..n).all(|y| f(x, y)));
    let side = if all(&|x, y| e.dot(x, y) == y) {
        ZeroSide::Right
    } else if all(&|x, y| e.dot(x, y) == x) {
        ZeroSide::Left
    } else {
        return Err(Error::NotZeroSemibrace);
    };
    let p = presentation(&solution_from_semibrace(e)?);
    let parts = (0..=max_d)
        .map(|d| degree_classes(&p, d, word_cap))
        .collect::<Result<Vec<_>>>()?;

    let mut per_degree = Vec::new();
    for part in &parts {
        let well_defined = part.invariant_violation(|w| circ_product(e, w)).is_none();
        let mut images: Vec<usize> = part
            .representatives()
            .iter()
            .map(|w| circ_product(e, w))
            .collect();
        images.sort_unstable();
        images.dedup();
        let bijective = well_defined
            && images.len() == part.class_count()
            && if part.degree() == 0 {
                part.class_count() == 1
            } else {
                images.len() == n
            };
        per_degree.push(ZeroDegree {
            degree: part.degree(),
            classes: part.class_count(),
            bijective,
        });
    }

    let mut multiplicative = true;
    for (d1, d2) in (1..=max_d).cartesian_product(1..=max_d) {
        if d1 + d2 > max_d {
            continue;
        }
        let (a, b, ab) = (&parts[d1], &parts[d2], &parts[d1 + d2]);
        for (left, right) in [
            (a.representatives(), b.representatives()),
            (a.largest_members(), b.largest_members()),
        ] {
            for (u, v) in left.iter().cartesian_product(&right) {
                let joined: Vec<usize> = u.iter().chain(v).copied().collect();
                let class = ab.class_of(&joined);
                let model = e.circ(circ_product(e, u), circ_product(e, v));
                if circ_product(e, &ab.representative(class)) != model {
                    multiplicative = false;
                }
            }
        }
    }
    Ok(ZeroMonoidReport {
        side,
        per_degree,
        multiplicative,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{product_semibrace, zero_semibrace, Side};
    use crate::finite_tables::GroupTable;

    fn trivial_brace(g: &GroupTable) -> LeftSemiBrace {
        LeftSemiBrace::new(g.table().clone(), g.clone()).unwrap()
    }

    fn right_zero(n: usize) -> LeftSemiBrace {
        zero_semibrace(&GroupTable::cyclic(n), Side::Right)
    }

    #[test]
    fn presentations() {
        let swap = presentation(&SetSolution::swap(2));
        assert_eq!(
            swap.relations,
            vec![
                Relation {
                    lhs: (0, 1),
                    rhs: (1, 0)
                },
                Relation {
                    lhs: (1, 0),
                    rhs: (0, 1)
                }
            ]
        );
        let id = SetSolution::from_fn(3, |x, y| (x, y), "identity").unwrap();
        assert!(presentation(&id).relations.is_empty());
        let e = right_zero(2);
        let p = presentation(&solution_from_semibrace(&e).unwrap());
        for rel in &p.relations {
            assert_eq!(rel.rhs, (e.circ(rel.lhs.0, rel.lhs.1), e.one()));
        }
    }

    #[test]
    fn degree_two_classes() {
        let e = right_zero(2);
        let p = presentation(&solution_from_semibrace(&e).unwrap());
        let part = degree_classes(&p, 2, DEFAULT_WORD_CAP).unwrap();
        assert_eq!(part.class_count(), 2);
        assert_eq!(part.members(0), vec![vec![0, 0], vec![1, 1]]);
        assert_eq!(part.members(1), vec![vec![0, 1], vec![1, 0]]);

        let swap = presentation(&SetSolution::swap(2));
        let part = degree_classes(&swap, 2, DEFAULT_WORD_CAP).unwrap();
        assert_eq!(
            part.representatives(),
            vec![vec![0, 0], vec![0, 1], vec![1, 1]]
        );

        assert_eq!(
            degree_classes(&swap, 0, DEFAULT_WORD_CAP)
                .unwrap()
                .class_count(),
            1
        );
    }

    #[test]
    fn word_cap_enforced() {
        let swap = presentation(&SetSolution::swap(10));
        assert!(matches!(
            degree_classes(&swap, 7, DEFAULT_WORD_CAP),
            Err(Error::CapExceeded { .. })
        ));
        assert!(growth_series(&swap, 7, DEFAULT_WORD_CAP).is_err());
    }

    #[test]
    fn growth_examples() {
        let p = presentation(&solution_from_semibrace(&right_zero(3)).unwrap());
        let g = growth_series(&p, 6, DEFAULT_WORD_CAP).unwrap();
        assert_eq!(g.per_degree, vec![1, 3, 3, 3, 3, 3, 3]);
        assert_eq!(g.gk_estimate.unwrap().value, 1.0);

        let swap = presentation(&SetSolution::swap(2));
        let g = growth_series(&swap, 10, DEFAULT_WORD_CAP).unwrap();
        assert_eq!(g.per_degree, (1..=11).collect::<Vec<_>>());
        let gk = g.gk_estimate.unwrap();
        assert_eq!(gk.m, 5);
        assert!((gk.value - (1.0 + (11.0f64 / 6.0).log2())).abs() < 1e-12);
        assert!((gk.cumulative_doubling - (66.0f64 / 21.0).log2()).abs() < 1e-12);

        let single = presentation(&SetSolution::swap(1));
        let g = growth_series(&single, 4, DEFAULT_WORD_CAP).unwrap();
        assert_eq!(g.per_degree, vec![1; 5]);
        assert_eq!(g.gk_estimate.as_ref().unwrap().value, 1.0);
        assert!(g
            .to_csv()
            .starts_with("degree,count,cumulative\n0,1,1\n1,1,2\n"));
    }

    #[test]
    fn traversal_order_does_not_matter() {
        let c2 = GroupTable::cyclic(2);
        let (b, _) = product_semibrace(&trivial_brace(&c2), &c2, &c2).unwrap();
        let p = presentation(&solution_from_semibrace(&b).unwrap());
        for d in 0..=4 {
            let f = degree_classes_with(&p, d, DEFAULT_WORD_CAP, Traversal::Forward).unwrap();
            let r = degree_classes_with(&p, d, DEFAULT_WORD_CAP, Traversal::Reverse).unwrap();
            assert_eq!(f, r);
        }
    }

    #[test]
    fn graded_decomposition_examples() {
        let c2 = GroupTable::cyclic(2);
        let (b, _) = product_semibrace(&trivial_brace(&c2), &c2, &c2).unwrap();
        let report = verify_graded_decomposition(&b, 3, DEFAULT_WORD_CAP).unwrap();
        assert!(report.holds());
        assert_eq!(report.per_degree[1].bound, 4 * 2 * 4);

        let e = right_zero(3);
        assert!(verify_graded_decomposition(&e, 4, DEFAULT_WORD_CAP)
            .unwrap()
            .holds());
        let t = trivial_brace(&GroupTable::dihedral(3));
        assert!(verify_graded_decomposition(&t, 2, DEFAULT_WORD_CAP)
            .unwrap()
            .holds());
    }

    #[test]
    fn interchange_examples() {
        let c2 = GroupTable::cyclic(2);
        let (b, _) = product_semibrace(&trivial_brace(&c2), &c2, &GroupTable::trivial()).unwrap();
        assert!(verify_interchange(&b).unwrap().holds());
        assert!(verify_interchange(&right_zero(3)).unwrap().holds());
        assert!(verify_interchange(&trivial_brace(&GroupTable::dihedral(3)))
            .unwrap()
            .holds());
    }

    #[test]
    fn zero_monoid_model() {
        for (n, d) in [(2, 6), (3, 5), (1, 4)] {
            let r = right_zero_monoid_check(&right_zero(n), d, DEFAULT_WORD_CAP).unwrap();
            assert!(r.holds());
            assert_eq!(r.side, ZeroSide::Right);
            assert!(r.per_degree[1..].iter().all(|x| x.classes == n));
        }
        let left = zero_semibrace(&GroupTable::cyclic(3), Side::Left);
        let r = right_zero_monoid_check(&left, 4, DEFAULT_WORD_CAP).unwrap();
        assert_eq!(r.side, ZeroSide::Left);
        assert!(r.holds());
        let t = trivial_brace(&GroupTable::cyclic(2));
        assert_eq!(
            right_zero_monoid_check(&t, 3, DEFAULT_WORD_CAP).unwrap_err(),
            Error::NotZeroSemibrace
        );
    }
}
