use crate::error::{Error, Result};
use crate::finite_tables::{
    rees_semigroup, verify_group, GroupTable, OpTable, ReesStructure, DEFAULT_REES_CAP,
};
use crate::semibrace::LeftSemiBrace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// Dot is the left (`xy = x`) or right (`xy = y`) zero semigroup on the
/// carrier of `h`, and `∘` is `h`.
pub fn zero_semibrace(h: &GroupTable, side: Side) -> LeftSemiBrace {
    let dot = match side {
        Side::Left => OpTable::left_zero(h.size()),
        Side::Right => OpTable::right_zero(h.size()),
    }
    .expect("nonempty carrier");
    LeftSemiBrace::new(dot, h.clone()).expect("zero semigroups carry a semi-brace over any group")
}

/// The semi-brace on `G × I × J` with dot the Rees product over `(G, ·)`
/// with identity sandwich and `∘` componentwise. Element `(g, i, j)` is
/// stored at `(g·|I| + i)·|J| + j`.
pub fn product_semibrace(
    g: &LeftSemiBrace,
    i: &GroupTable,
    j: &GroupTable,
) -> Result<(LeftSemiBrace, ReesStructure)> {
    let dot_group = verify_group(g.dot_table()).map_err(|_| Error::NotSkewBrace)?;
    let (rows, cols) = (i.size(), j.size());
    let sandwich = vec![vec![dot_group.identity(); rows]; cols];
    let (dot, rees) = rees_semigroup(&dot_group, rows, cols, &sandwich, DEFAULT_REES_CAP)?;
    let circ = OpTable::from_fn(dot.size(), |x, y| {
        let (a, b) = (rees.coord(x), rees.coord(y));
        let c = crate::finite_tables::ReesCoord {
            g: g.circ(a.g, b.g),
            i: i.op(a.i, b.i),
            j: j.op(a.j, b.j),
        };
        rees.element(c)
    })?;
    let circ = verify_group(&circ)
        .map_err(|e| Error::Inconsistency(format!("componentwise ∘ is not a group: {e}")))?;
    let b = LeftSemiBrace::new(dot, circ)
        .map_err(|e| Error::Inconsistency(format!("product structure is not a semi-brace: {e}")))?;
    Ok((b, rees))
}

/// The six-element semi-brace on `Z₃ × Z₂` with `(x,y)(z,w) = (x, y+w)` and
/// `∘` transported from `C₆` along `(i, j) ↦ ξ^{i+3j}`. Element `t` is `ξ^t`.
pub fn example_c6() -> LeftSemiBrace {
    let dot = OpTable::from_fn(6, |a, b| a % 3 + 3 * ((a / 3 + b / 3) % 2)).expect("valid table");
    LeftSemiBrace::new(dot, GroupTable::cyclic(6)).expect("the six-element example is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semibrace::verify_left_semibrace;

    fn trivial_brace(g: &GroupTable) -> LeftSemiBrace {
        LeftSemiBrace::new(g.table().clone(), g.clone()).unwrap()
    }

    #[test]
    fn zero_semibraces() {
        let rz = zero_semibrace(&GroupTable::cyclic(2), Side::Right);
        assert_eq!(rz.dot_table(), &OpTable::right_zero(2).unwrap());
        let lz = zero_semibrace(&GroupTable::cyclic(3), Side::Left);
        // a right semi-brace as well: (c·b)∘a = ((c·ā)∘a)·(b∘a)
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    let lhs = lz.circ(lz.dot(c, b), a);
                    let rhs = lz.dot(lz.circ(lz.dot(c, lz.bar(a)), a), lz.circ(b, a));
                    assert_eq!(lhs, rhs);
                }
            }
        }
        assert_eq!(
            zero_semibrace(&GroupTable::trivial(), Side::Right).size(),
            1
        );
    }

    #[test]
    fn c6_example_from_raw_tables() {
        let b = example_c6();
        let again = verify_left_semibrace(b.dot_table(), b.circ_group().table()).unwrap();
        assert_eq!(again, b);
        assert_eq!(b.idempotents(), vec![0, 1, 2]);
    }

    #[test]
    fn products() {
        let c2 = GroupTable::cyclic(2);
        let c3 = GroupTable::cyclic(3);
        let one = GroupTable::trivial();
        let (b, rees) = product_semibrace(&trivial_brace(&c2), &c2, &one).unwrap();
        assert_eq!(b.size(), 4);
        assert_eq!((rees.rows, rees.cols), (2, 1));
        assert!(b.is_rho_antihomomorphism().unwrap().holds);
        // right cancellative: xz = yz implies x = y
        for z in 0..4 {
            let mut col: Vec<usize> = (0..4).map(|x| b.dot(x, z)).collect();
            col.sort_unstable();
            col.dedup();
            assert_eq!(col.len(), 4);
        }

        let (b, _) = product_semibrace(&trivial_brace(&one), &one, &one).unwrap();
        assert_eq!(b.size(), 1);

        let (b, _) = product_semibrace(&trivial_brace(&one), &one, &c3).unwrap();
        assert_eq!(b.dot_table(), &OpTable::right_zero(3).unwrap());
    }

    #[test]
    fn product_requires_skew_brace() {
        let c2 = GroupTable::cyclic(2);
        let rz = zero_semibrace(&c2, Side::Right);
        assert_eq!(
            product_semibrace(&rz, &c2, &c2).unwrap_err(),
            Error::NotSkewBrace
        );
    }
}
