use crate::error::{Error, Result};

use super::Triple;

/// Default number of violations kept by verification reports.
pub const DEFAULT_MAX_VIOLATIONS: usize = 10;

/// A binary operation on the carrier `0..n`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OpTable {
    n: usize,
    entries: Vec<usize>,
}

impl OpTable {
    pub fn new(n: usize, entries: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::MalformedTable("carrier must be nonempty".into()));
        }
        if entries.len() != n * n {
            return Err(Error::MalformedTable(format!(
                "expected {} entries for n = {n}, got {}",
                n * n,
                entries.len()
            )));
        }
        if let Some(pos) = entries.iter().position(|&e| e >= n) {
            return Err(Error::MalformedTable(format!(
                "entry ({}, {}) = {} is outside 0..{n}",
                pos / n,
                pos % n,
                entries[pos]
            )));
        }
        Ok(Self { n, entries })
    }

    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::MalformedTable(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            entries.extend_from_slice(row);
        }
        Self::new(n, entries)
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        let mut entries = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                entries.push(f(a, b));
            }
        }
        Self::new(n, entries)
    }

    /// `xy = y`.
    pub fn right_zero(n: usize) -> Result<Self> {
        Self::from_fn(n, |_, b| b)
    }

    /// `xy = x`.
    pub fn left_zero(n: usize) -> Result<Self> {
        Self::from_fn(n, |a, _| a)
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.entries[a * self.n + b]
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.entries.chunks(self.n)
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        self.rows().map(<[usize]>::to_vec).collect()
    }

    /// Transports the table along `perm`, where `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length");
        let mut entries = vec![0; self.n * self.n];
        for a in 0..self.n {
            for b in 0..self.n {
                entries[perm[a] * self.n + perm[b]] = perm[self.op(a, b)];
            }
        }
        Self { n: self.n, entries }
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_violations(1).is_empty()
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.op(x, x) == x).collect()
    }

    fn associativity_violations(&self, limit: usize) -> Vec<Triple> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in 0..self.n {
                let xy = self.op(x, y);
                for z in 0..self.n {
                    if self.op(xy, z) != self.op(x, self.op(y, z)) {
                        out.push((x, y, z));
                        if out.len() >= limit {
                            return out;
                        }
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub valid: bool,
    /// The first violating triples in lexicographic order, capped.
    pub violations: Vec<Triple>,
}

/// Checks `(xy)z = x(yz)` on all triples.
pub fn verify_semigroup(t: &OpTable, max_violations: usize) -> VerificationReport {
    let violations = t.associativity_violations(max_violations.max(1));
    VerificationReport {
        valid: violations.is_empty(),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed() {
        assert!(OpTable::new(0, vec![]).is_err());
        assert!(OpTable::new(2, vec![0, 1, 2, 0]).is_err());
        assert!(OpTable::new(2, vec![0, 1, 1]).is_err());
        assert!(OpTable::from_rows(&[vec![0, 1], vec![0]]).is_err());
    }

    #[test]
    fn cyclic_two_is_a_semigroup() {
        let t = OpTable::from_rows(&[[0, 1], [1, 0]]).unwrap();
        assert!(verify_semigroup(&t, DEFAULT_MAX_VIOLATIONS).valid);
    }

    #[test]
    fn right_zero_is_a_semigroup() {
        let t = OpTable::right_zero(3).unwrap();
        let r = verify_semigroup(&t, DEFAULT_MAX_VIOLATIONS);
        assert!(r.valid);
        assert!(r.violations.is_empty());
    }

    #[test]
    fn non_associative_two_element_table() {
        let t = OpTable::from_rows(&[[0, 1], [0, 0]]).unwrap();
        let r = verify_semigroup(&t, DEFAULT_MAX_VIOLATIONS);
        assert!(!r.valid);
        assert!(r.violations.contains(&(1, 1, 1)));
        // (1·1)·1 = 0·1 = 1 but 1·(1·1) = 1·0 = 0
        assert_eq!(t.op(t.op(1, 1), 1), 1);
        assert_eq!(t.op(1, t.op(1, 1)), 0);
    }

    #[test]
    fn violation_list_is_capped() {
        let t = OpTable::from_fn(4, |a, b| (a + 2 * b + 1) % 4).unwrap();
        let r = verify_semigroup(&t, 3);
        assert!(!r.valid);
        assert_eq!(r.violations.len(), 3);
    }

    #[test]
    fn relabel_transports_structure() {
        let t = OpTable::from_fn(3, |a, b| (a + b) % 3).unwrap();
        let perm = [2, 0, 1];
        let u = t.relabel(&perm);
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(u.op(perm[a], perm[b]), perm[t.op(a, b)]);
            }
        }
    }
}
