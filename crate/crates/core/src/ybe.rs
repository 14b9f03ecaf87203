//! Set-theoretic solutions `r: X² → X²` of the Yang-Baxter equation.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::finite_tables::Triple;
use crate::semibrace::LeftSemiBrace;

/// A map on ordered pairs over `0..n`, stored as `table[x*n + y] = r(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSolution {
    n: usize,
    table: Vec<(usize, usize)>,
    pub provenance: String,
}

impl SetSolution {
    pub fn new(
        n: usize,
        table: Vec<(usize, usize)>,
        provenance: impl Into<String>,
    ) -> Result<Self> {
        if table.len() != n * n {
            return Err(Error::MalformedTable(format!(
                "pair map needs {} entries, got {}",
                n * n,
                table.len()
            )));
        }
        if let Some(&(u, v)) = table.iter().find(|&&(u, v)| u >= n || v >= n) {
            return Err(Error::ElementOutOfRange(u.max(v)));
        }
        Ok(Self {
            n,
            table,
            provenance: provenance.into(),
        })
    }

    pub fn from_fn(
        n: usize,
        f: impl Fn(usize, usize) -> (usize, usize),
        provenance: impl Into<String>,
    ) -> Result<Self> {
        let table = (0..n * n).map(|p| f(p / n, p % n)).collect();
        Self::new(n, table, provenance)
    }

    /// `r(x, y) = (y, x)`.
    pub fn swap(n: usize) -> Self {
        Self::from_fn(n, |x, y| (y, x), "swap").expect("valid")
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        self.table[x * self.n + y]
    }

    pub fn table(&self) -> &[(usize, usize)] {
        &self.table
    }

    /// `self ∘ other`, applying `other` first.
    pub fn compose(&self, other: &SetSolution) -> SetSolution {
        assert_eq!(self.n, other.n, "carrier sizes");
        let table = other.table.iter().map(|&(x, y)| self.apply(x, y)).collect();
        SetSolution {
            n: self.n,
            table,
            provenance: format!("({}) ∘ ({})", self.provenance, other.provenance),
        }
    }

    /// One `x y -> u v` line per pair, in lexicographic order.
    pub fn to_pair_table(&self) -> String {
        let mut out = String::new();
        for x in 0..self.n {
            for y in 0..self.n {
                let (u, v) = self.apply(x, y);
                writeln!(out, "{x} {y} -> {u} {v}").expect("writing to a string");
            }
        }
        out
    }

    /// Parses the format written by [`Self::to_pair_table`]; every pair must
    /// appear exactly once. Blank lines and `#` comments are ignored.
    pub fn from_pair_table(text: &str, n: usize) -> Result<Self> {
        let mut table = vec![None; n * n];
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad =
                || Error::MalformedTable(format!("line {}: expected `x y -> u v`", lineno + 1));
            let (lhs, rhs) = line.split_once("->").ok_or_else(bad)?;
            let nums = |s: &str| -> Result<Vec<usize>> {
                s.split_whitespace()
                    .map(|t| t.parse().map_err(|_| bad()))
                    .collect()
            };
            let (l, r) = (nums(lhs)?, nums(rhs)?);
            let [x, y]: [usize; 2] = l.try_into().map_err(|_| bad())?;
            let [u, v]: [usize; 2] = r.try_into().map_err(|_| bad())?;
            if let Some(&z) = [x, y, u, v].iter().find(|&&z| z >= n) {
                return Err(Error::ElementOutOfRange(z));
            }
            if table[x * n + y].replace((u, v)).is_some() {
                return Err(Error::MalformedTable(format!(
                    "line {}: pair ({x}, {y}) given twice",
                    lineno + 1
                )));
            }
        }
        let table = table
            .into_iter()
            .enumerate()
            .map(|(p, e)| {
                e.ok_or_else(|| {
                    Error::MalformedTable(format!("pair ({}, {}) missing", p / n, p % n))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, table, "pair table")
    }
}

/// `r(x, y) = (λ_x(y), ρ_y(x))`. Requires `ρ` to be an anti-homomorphism;
/// the braid relation is then re-verified.
pub fn solution_from_semibrace(b: &LeftSemiBrace) -> Result<SetSolution> {
    b.require_rho_antihomomorphism()?;
    let s = solution_from_semibrace_forced(b);
    if let Some(w) = verify_ybe(&s).witness {
        return Err(Error::Inconsistency(format!(
            "associated solution violates the braid relation at {w:?}"
        )));
    }
    Ok(s)
}

/// Tabulates `r(x, y) = (λ_x(y), ρ_y(x))` without any hypothesis.
pub fn solution_from_semibrace_forced(b: &LeftSemiBrace) -> SetSolution {
    SetSolution::from_fn(
        b.size(),
        |x, y| (b.lambda(x, y), b.rho(y, x)),
        "semi-brace (λ_x(y), ρ_y(x))",
    )
    .expect("λ and ρ stay in the carrier")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YbeReport {
    pub holds: bool,
    /// The lexicographically first `(x, y, z)` where the braid relation fails.
    pub witness: Option<Triple>,
}

/// Checks `(r×id)(id×r)(r×id) = (id×r)(r×id)(id×r)` on every triple.
pub fn verify_ybe(s: &SetSolution) -> YbeReport {
    let n = s.n;
    let r12 = |(a, b, c): Triple| {
        let (u, v) = s.apply(a, b);
        (u, v, c)
    };
    let r23 = |(a, b, c): Triple| {
        let (u, v) = s.apply(b, c);
        (a, u, v)
    };
    let witness = (0..n).into_par_iter().find_map_first(|x| {
        for y in 0..n {
            for z in 0..n {
                let t = (x, y, z);
                if r12(r23(r12(t))) != r23(r12(r23(t))) {
                    return Some(t);
                }
            }
        }
        None
    });
    YbeReport {
        holds: witness.is_none(),
        witness,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PowerProperties {
    pub bijective: bool,
    /// `r² = id`.
    pub involutive: bool,
    /// `r² = r`.
    pub idempotent_r2: bool,
    /// `r³ = r`.
    pub cubic_r3: bool,
}

pub fn power_properties(s: &SetSolution) -> PowerProperties {
    let r2 = s.compose(s);
    let r3 = s.compose(&r2);
    let mut hit = vec![false; s.n * s.n];
    let bijective = s
        .table
        .iter()
        .all(|&(u, v)| !std::mem::replace(&mut hit[u * s.n + v], true));
    PowerProperties {
        bijective,
        involutive: r2
            .table
            .iter()
            .enumerate()
            .all(|(p, &pair)| pair == (p / s.n, p % s.n)),
        idempotent_r2: r2.table == s.table,
        cubic_r3: r3.table == s.table,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyReport {
    /// Every `σ_x = first(r(x, ·))` is a bijection.
    pub left_nondegenerate: bool,
    /// Every `γ_y = second(r(·, y))` is a bijection.
    pub right_nondegenerate: bool,
    /// Some `x` with `σ_x` not bijective.
    pub left_witness: Option<usize>,
    /// Some `y` with `γ_y` not bijective.
    pub right_witness: Option<usize>,
}

pub fn degeneracy_report(s: &SetSolution) -> DegeneracyReport {
    let n = s.n;
    let bijective = |f: &dyn Fn(usize) -> usize| {
        let mut hit = vec![false; n];
        (0..n).all(|t| !std::mem::replace(&mut hit[f(t)], true))
    };
    let left_witness = (0..n).find(|&x| !bijective(&|y| s.apply(x, y).0));
    let right_witness = (0..n).find(|&y| !bijective(&|x| s.apply(x, y).1));
    DegeneracyReport {
        left_nondegenerate: left_witness.is_none(),
        right_nondegenerate: right_witness.is_none(),
        left_witness,
        right_witness,
    }
}
