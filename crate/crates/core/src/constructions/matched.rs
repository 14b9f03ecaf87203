use std::fmt;

use crate::error::{Error, Result};
use crate::finite_tables::{OpTable, Triple, DEFAULT_MAX_VIOLATIONS};
use crate::semibrace::{verify_left_semibrace, LeftSemiBrace};

/// Data for a matched product `B ⋈ S`.
///
/// `delta[a]` is the bijection `δ_a` of `S` for `a ∈ B`, and `sigma[x]` the
/// bijection `σ_x` of `B` for `x ∈ S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedData {
    pub b: LeftSemiBrace,
    pub s: LeftSemiBrace,
    pub delta: Vec<Vec<usize>>,
    pub sigma: Vec<Vec<usize>>,
}

/// The law a failing matched-product datum breaks. Witness triples use the
/// variable order given on each variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatchedLaw {
    /// Tables have the wrong dimensions or entries out of range; no witness.
    Shape,
    /// `δ_a` is not a bijection; `(a, 0, 0)`.
    DeltaBijective,
    /// `σ_x` is not a bijection; `(x, 0, 0)`.
    SigmaBijective,
    /// `δ_{a∘b} = δ_b δ_a`; `(a, b, x)`.
    DeltaRightAction,
    /// `σ_{x∘y} = σ_x σ_y`; `(x, y, a)`.
    SigmaLeftAction,
    /// `δ_a(x·y) = δ_a(x)·δ_a(y)`; `(a, x, y)`.
    DeltaAutomorphism,
    /// `σ_x(a∘b) = σ_x(a)∘σ_{δ_a(x)}(b)`; `(a, b, x)`.
    Condition1,
    /// `σ_x(1∘) = 1∘`; `(x, 0, 0)`.
    Condition2,
    /// `δ_a(x∘y) = δ_{σ_y(a)}(x)∘δ_a(y)`; `(a, x, y)`.
    Condition3,
    /// `δ_a(1∘) = 1∘`; `(a, 0, 0)`.
    Condition4,
    /// `(δ_a((x·y)‾))‾ = (δ_a(x̄))‾·(δ_a(ȳ))‾`; `(a, x, y)`.
    Condition5,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedFailure {
    pub law: MatchedLaw,
    /// Lexicographically first witnesses, capped.
    pub witnesses: Vec<Triple>,
}

impl fmt::Display for MatchedFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} fails", self.law)?;
        if let Some(w) = self.witnesses.first() {
            write!(f, " at {w:?}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedReport {
    pub failure: Option<MatchedFailure>,
    /// Whether every `σ_x` is also an automorphism of `(B, ·)`. Informational.
    pub sigma_automorphic: bool,
}

impl MatchedReport {
    pub fn is_valid(&self) -> bool {
        self.failure.is_none()
    }
}

fn first_failures(
    law: MatchedLaw,
    dims: (usize, usize, usize),
    holds: impl Fn(usize, usize, usize) -> bool,
) -> Option<MatchedFailure> {
    let mut witnesses = Vec::new();
    'outer: for p in 0..dims.0 {
        for q in 0..dims.1 {
            for r in 0..dims.2 {
                if !holds(p, q, r) {
                    witnesses.push((p, q, r));
                    if witnesses.len() >= DEFAULT_MAX_VIOLATIONS {
                        break 'outer;
                    }
                }
            }
        }
    }
    (!witnesses.is_empty()).then_some(MatchedFailure { law, witnesses })
}

type LawCheck<'a> = dyn Fn(usize, usize, usize) -> bool + 'a;

fn is_bijection(map: &[usize]) -> bool {
    let mut hit = vec![false; map.len()];
    map.iter()
        .all(|&y| y < map.len() && !std::mem::replace(&mut hit[y], true))
}

/// Checks bijectivity, the two action laws, that each `δ_a` is a dot
/// automorphism, and the five compatibility conditions, in that order.
pub fn verify_matched_data(d: &MatchedData) -> MatchedReport {
    let (b, s) = (&d.b, &d.s);
    let (nb, ns) = (b.size(), s.size());
    let shape_ok = d.delta.len() == nb
        && d.sigma.len() == ns
        && d.delta.iter().all(|m| m.len() == ns)
        && d.sigma.iter().all(|m| m.len() == nb);
    if !shape_ok {
        return MatchedReport {
            failure: Some(MatchedFailure {
                law: MatchedLaw::Shape,
                witnesses: Vec::new(),
            }),
            sigma_automorphic: false,
        };
    }
    let sigma_automorphic = (0..ns).all(|x| {
        (0..nb).all(|a| {
            (0..nb).all(|c| {
                is_bijection(&d.sigma[x])
                    && d.sigma[x][b.dot(a, c)] == b.dot(d.sigma[x][a], d.sigma[x][c])
            })
        })
    });
    let report = |failure| MatchedReport {
        failure,
        sigma_automorphic,
    };

    let delta = |a: usize, x: usize| d.delta[a][x];
    let sigma = |x: usize, a: usize| d.sigma[x][a];

    let checks: [(MatchedLaw, Triple, &LawCheck); 10] = [
        (MatchedLaw::DeltaBijective, (nb, 1, 1), &|a, _, _| {
            is_bijection(&d.delta[a])
        }),
        (MatchedLaw::SigmaBijective, (ns, 1, 1), &|x, _, _| {
            is_bijection(&d.sigma[x])
        }),
        (MatchedLaw::DeltaRightAction, (nb, nb, ns), &|a, c, x| {
            delta(b.circ(a, c), x) == delta(c, delta(a, x))
        }),
        (MatchedLaw::SigmaLeftAction, (ns, ns, nb), &|x, y, a| {
            sigma(s.circ(x, y), a) == sigma(x, sigma(y, a))
        }),
        (MatchedLaw::DeltaAutomorphism, (nb, ns, ns), &|a, x, y| {
            delta(a, s.dot(x, y)) == s.dot(delta(a, x), delta(a, y))
        }),
        (MatchedLaw::Condition1, (nb, nb, ns), &|a, c, x| {
            sigma(x, b.circ(a, c)) == b.circ(sigma(x, a), sigma(delta(a, x), c))
        }),
        (MatchedLaw::Condition2, (ns, 1, 1), &|x, _, _| {
            sigma(x, b.one()) == b.one()
        }),
        (MatchedLaw::Condition3, (nb, ns, ns), &|a, x, y| {
            delta(a, s.circ(x, y)) == s.circ(delta(sigma(y, a), x), delta(a, y))
        }),
        (MatchedLaw::Condition4, (nb, 1, 1), &|a, _, _| {
            delta(a, s.one()) == s.one()
        }),
        (MatchedLaw::Condition5, (nb, ns, ns), &|a, x, y| {
            let lhs = s.bar(delta(a, s.bar(s.dot(x, y))));
            let rhs = s.dot(s.bar(delta(a, s.bar(x))), s.bar(delta(a, s.bar(y))));
            lhs == rhs
        }),
    ];
    for (law, dims, holds) in checks {
        if let Some(f) = first_failures(law, dims, holds) {
            return report(Some(f));
        }
    }
    report(None)
}

/// The semi-brace on `B × S` with `(a, x)` stored at `a·|S| + x`:
/// `(a,x)(b,y) = (ab, xy)` and
/// `(a,x)∘(b,y) = (a∘σ_{(δ_a(x̄))‾}(b), x∘(δ_{(σ_{x̄}(a))‾}(ȳ))‾)`.
pub fn matched_product(d: &MatchedData) -> Result<LeftSemiBrace> {
    if let Some(f) = verify_matched_data(d).failure {
        return Err(Error::InvalidMatchedData(f));
    }
    let (b, s) = (&d.b, &d.s);
    let ns = s.size();
    let n = b.size() * ns;
    let dot = OpTable::from_fn(n, |p, q| {
        let (a, x, c, y) = (p / ns, p % ns, q / ns, q % ns);
        b.dot(a, c) * ns + s.dot(x, y)
    })?;
    let circ = OpTable::from_fn(n, |p, q| {
        let (a, x, c, y) = (p / ns, p % ns, q / ns, q % ns);
        let first = b.circ(a, d.sigma[s.bar(d.delta[a][s.bar(x)])][c]);
        let second = s.circ(x, s.bar(d.delta[b.bar(d.sigma[s.bar(x)][a])][s.bar(y)]));
        first * ns + second
    })?;
    verify_left_semibrace(&dot, &circ)
        .map_err(|e| Error::Inconsistency(format!("matched product is not a semi-brace: {e}")))
}

/// Matched data with both actions trivial.
pub fn trivial_actions(b: LeftSemiBrace, s: LeftSemiBrace) -> MatchedData {
    let (nb, ns) = (b.size(), s.size());
    MatchedData {
        delta: vec![(0..ns).collect(); nb],
        sigma: vec![(0..nb).collect(); ns],
        b,
        s,
    }
}
