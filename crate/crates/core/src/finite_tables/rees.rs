use thiserror::Error;

use crate::error::{check_cap, Error, Result};

use super::{verify_group, verify_semigroup, GroupTable, OpTable, Triple};

/// Default cap on `|G|·|I|·|J|` for [`rees_semigroup`].
pub const DEFAULT_REES_CAP: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReesError {
    #[error("not a semigroup, associativity fails at {0:?}")]
    NotASemigroup(Triple),
    #[error("S·{0}·S is a proper subset of S")]
    NotSimple(usize),
    #[error("no idempotent e with eSe a group")]
    NoPrimitiveIdempotent,
    #[error("base point {0} is not an idempotent")]
    NotIdempotent(usize),
}

/// Zero-based Rees coordinates `(g, i, j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReesCoord {
    pub g: usize,
    pub i: usize,
    pub j: usize,
}

/// Coordinates identifying a semigroup with `M(G, I, J, P)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReesStructure {
    pub group: GroupTable,
    pub rows: usize,
    pub cols: usize,
    /// `sandwich[j][i]` is an element of `group`.
    pub sandwich: Vec<Vec<usize>>,
    /// Carrier element to coordinates.
    pub coords: Vec<ReesCoord>,
    /// Coordinates (flattened as `(g*rows + i)*cols + j`) to carrier element.
    pub elements: Vec<usize>,
    pub normalized: bool,
}

impl ReesStructure {
    pub fn size(&self) -> usize {
        self.coords.len()
    }

    pub fn coord(&self, x: usize) -> ReesCoord {
        self.coords[x]
    }

    pub fn element(&self, c: ReesCoord) -> usize {
        self.elements[(c.g * self.rows + c.i) * self.cols + c.j]
    }

    /// `(g,i,j)(h,k,l) = (g·p_{jk}·h, i, l)`.
    pub fn product(&self, a: ReesCoord, b: ReesCoord) -> ReesCoord {
        let g = &self.group;
        ReesCoord {
            g: g.op(g.op(a.g, self.sandwich[a.j][b.i]), b.g),
            i: a.i,
            j: b.j,
        }
    }

    /// Whether the product law reproduces `t` under the coordinates.
    pub fn reproduces(&self, t: &OpTable) -> bool {
        let n = t.size();
        n == self.size()
            && (0..n).all(|x| {
                (0..n).all(|y| self.coord(t.op(x, y)) == self.product(self.coord(x), self.coord(y)))
            })
    }
}

/// Cayley table of `M(G, rows, cols, sandwich)`, with `sandwich` given as
/// `cols` rows of `rows` group elements.
pub fn rees_semigroup(
    group: &GroupTable,
    rows: usize,
    cols: usize,
    sandwich: &[Vec<usize>],
    max_size: usize,
) -> Result<(OpTable, ReesStructure)> {
    if rows == 0 || cols == 0 {
        return Err(Error::MalformedTable(
            "Rees index sets must be nonempty".into(),
        ));
    }
    if sandwich.len() != cols || sandwich.iter().any(|r| r.len() != rows) {
        return Err(Error::MalformedTable(format!(
            "sandwich matrix must be {cols}×{rows}"
        )));
    }
    if sandwich.iter().flatten().any(|&p| p >= group.size()) {
        return Err(Error::MalformedTable(
            "sandwich entry outside the group".into(),
        ));
    }
    let n = group
        .size()
        .checked_mul(rows)
        .and_then(|x| x.checked_mul(cols))
        .unwrap_or(usize::MAX);
    check_cap("Rees semigroup size", n, max_size)?;
    let coords: Vec<ReesCoord> = (0..n)
        .map(|x| ReesCoord {
            g: x / (rows * cols),
            i: (x / cols) % rows,
            j: x % cols,
        })
        .collect();
    let rs = ReesStructure {
        group: group.clone(),
        rows,
        cols,
        sandwich: sandwich.to_vec(),
        elements: (0..n).collect(),
        normalized: sandwich.iter().flatten().all(|&p| p == group.identity()),
        coords,
    };
    let table = OpTable::from_fn(n, |x, y| rs.element(rs.product(rs.coord(x), rs.coord(y))))?;
    Ok((table, rs))
}

/// Rees coordinates based at the smallest idempotent.
pub fn rees_decompose(t: &OpTable) -> Result<ReesStructure, ReesError> {
    let base = *t
        .idempotents()
        .first()
        .ok_or(ReesError::NoPrimitiveIdempotent)?;
    rees_decompose_at(t, base)
}

/// Rees coordinates in which the idempotent `base` becomes `(1, 1, 1)`.
///
/// The group is `base·S·base` (base first, then by index), rows are the
/// idempotents of `S·base` and columns those of `base·S`, each listed with
/// `base` first. The sandwich entry for column `b` and row `f` is `b·f`,
/// which is the identity in the first row and column.
pub fn rees_decompose_at(t: &OpTable, base: usize) -> Result<ReesStructure, ReesError> {
    let n = t.size();
    let report = verify_semigroup(t, 1);
    if let Some(&triple) = report.violations.first() {
        return Err(ReesError::NotASemigroup(triple));
    }
    for b in 0..n {
        let mut left = vec![false; n];
        for s in 0..n {
            left[t.op(s, b)] = true;
        }
        let mut ideal = vec![false; n];
        for x in (0..n).filter(|&x| left[x]) {
            for s in 0..n {
                ideal[t.op(x, s)] = true;
            }
        }
        if ideal.contains(&false) {
            return Err(ReesError::NotSimple(b));
        }
    }
    let e = base;
    if e >= n || t.op(e, e) != e {
        return Err(ReesError::NotIdempotent(base));
    }

    let mut corner: Vec<usize> = (0..n).map(|s| t.op(t.op(e, s), e)).collect();
    corner.sort_unstable();
    corner.dedup();
    corner.retain(|&x| x != e);
    corner.insert(0, e);
    let mut gpos = vec![usize::MAX; n];
    for (k, &x) in corner.iter().enumerate() {
        gpos[x] = k;
    }
    let induced = OpTable::from_fn(corner.len(), |a, b| gpos[t.op(corner[a], corner[b])])
        .map_err(|_| ReesError::NoPrimitiveIdempotent)?;
    let group = verify_group(&induced).map_err(|_| ReesError::NoPrimitiveIdempotent)?;

    let idempotents = t.idempotents();
    let with_base_first = |mut v: Vec<usize>| {
        v.retain(|&x| x != e);
        v.insert(0, e);
        v
    };
    let row_idem = with_base_first(
        idempotents
            .iter()
            .copied()
            .filter(|&f| t.op(f, e) == f)
            .collect(),
    );
    let col_idem = with_base_first(
        idempotents
            .iter()
            .copied()
            .filter(|&f| t.op(e, f) == f)
            .collect(),
    );
    let (rows, cols) = (row_idem.len(), col_idem.len());
    if group.size() * rows * cols != n {
        return Err(ReesError::NoPrimitiveIdempotent);
    }

    let mut coords = Vec::with_capacity(n);
    let mut elements = vec![usize::MAX; n];
    for s in 0..n {
        let unique = |cands: &[usize], fixes: &dyn Fn(usize) -> bool| {
            let mut it = cands.iter().enumerate().filter(|&(_, &f)| fixes(f));
            match (it.next(), it.next()) {
                (Some((k, _)), None) => Ok(k),
                _ => Err(ReesError::NoPrimitiveIdempotent),
            }
        };
        let i = unique(&row_idem, &|f| t.op(f, s) == s)?;
        let j = unique(&col_idem, &|b| t.op(s, b) == s)?;
        let c = ReesCoord {
            g: gpos[t.op(t.op(e, s), e)],
            i,
            j,
        };
        let flat = (c.g * rows + c.i) * cols + c.j;
        if elements[flat] != usize::MAX {
            return Err(ReesError::NoPrimitiveIdempotent);
        }
        elements[flat] = s;
        coords.push(c);
    }
    let sandwich: Vec<Vec<usize>> = col_idem
        .iter()
        .map(|&b| row_idem.iter().map(|&f| gpos[t.op(b, f)]).collect())
        .collect();
    let rs = ReesStructure {
        normalized: sandwich.iter().flatten().all(|&p| p == group.identity()),
        group,
        rows,
        cols,
        sandwich,
        coords,
        elements,
    };
    debug_assert!(rs.reproduces(t));
    Ok(rs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c6_dot() -> OpTable {
        OpTable::from_fn(6, |a, b| a % 3 + 3 * ((a / 3 + b / 3) % 2)).unwrap()
    }

    #[test]
    fn trivial_group_two_columns_is_right_zero() {
        let g = GroupTable::trivial();
        let (t, rs) = rees_semigroup(&g, 1, 2, &[vec![0], vec![0]], DEFAULT_REES_CAP).unwrap();
        assert_eq!(t, OpTable::right_zero(2).unwrap());
        assert!(rs.normalized);
    }

    #[test]
    fn c2_three_rows_matches_six_element_example() {
        let g = GroupTable::cyclic(2);
        let (t, rs) = rees_semigroup(&g, 3, 1, &[vec![0, 0, 0]], DEFAULT_REES_CAP).unwrap();
        // carrier index g*3 + i is exactly the example's x + 3y labelling
        assert_eq!(t, c6_dot());
        assert_eq!(rs.coord(4), ReesCoord { g: 1, i: 1, j: 0 });
    }

    #[test]
    fn one_by_one_is_the_group() {
        let g = GroupTable::cyclic(2);
        let (t, _) = rees_semigroup(&g, 1, 1, &[vec![0]], DEFAULT_REES_CAP).unwrap();
        assert_eq!(&t, g.table());
    }

    #[test]
    fn rejects_bad_input() {
        let g = GroupTable::cyclic(2);
        assert!(rees_semigroup(&g, 2, 1, &[vec![0]], 100).is_err());
        assert!(rees_semigroup(&g, 1, 1, &[vec![2]], 100).is_err());
        assert!(matches!(
            rees_semigroup(&g, 10, 10, &vec![vec![0; 10]; 10], 100),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn decomposes_six_element_example() {
        let rs = rees_decompose(&c6_dot()).unwrap();
        assert_eq!(rs.group.size(), 2);
        assert_eq!((rs.rows, rs.cols), (3, 1));
        assert!(rs.normalized);
        assert!(rs.reproduces(&c6_dot()));
        assert_eq!(rs.coord(0), ReesCoord { g: 0, i: 0, j: 0 });
    }

    #[test]
    fn decomposes_right_zero() {
        let t = OpTable::right_zero(3).unwrap();
        let rs = rees_decompose(&t).unwrap();
        assert_eq!((rs.group.size(), rs.rows, rs.cols), (1, 1, 3));
    }

    #[test]
    fn semilattice_is_not_simple() {
        let t = OpTable::from_rows(&[[0, 0], [0, 1]]).unwrap();
        assert_eq!(rees_decompose(&t), Err(ReesError::NotSimple(0)));
    }

    #[test]
    fn non_associative_rejected() {
        let t = OpTable::from_rows(&[[0, 1], [0, 0]]).unwrap();
        assert!(matches!(
            rees_decompose(&t),
            Err(ReesError::NotASemigroup(_))
        ));
    }

    #[test]
    fn non_normalized_sandwich() {
        // M(C2, 2, 2, [[1,1],[1,g]]) is completely simple but not a
        // rectangular group
        let g = GroupTable::cyclic(2);
        let (t, _) = rees_semigroup(&g, 2, 2, &[vec![0, 0], vec![0, 1]], 100).unwrap();
        let rs = rees_decompose(&t).unwrap();
        assert!(rs.reproduces(&t));
        assert!(!rs.normalized);
        assert_eq!(rs.sandwich[0], vec![0, 0]);
        assert_eq!(rs.sandwich[1][0], 0);
    }

    #[test]
    fn decompose_at_rejects_non_idempotent() {
        let t = GroupTable::cyclic(2).table().clone();
        assert_eq!(rees_decompose_at(&t, 1), Err(ReesError::NotIdempotent(1)));
    }
}
