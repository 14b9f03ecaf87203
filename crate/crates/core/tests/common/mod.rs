//! Instance corpus and independent oracles shared by the integration tests.
//! Oracles work on raw tables and do not call the library's algorithms.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};

use semibrace::constructions::{enumerate_circ, product_semibrace, DEFAULT_ENUMERATION_CAP};
use semibrace::{GroupTable, LeftSemiBrace, OpTable};

pub struct Instance {
    pub name: String,
    pub brace: LeftSemiBrace,
}

pub fn trivial_brace(g: &GroupTable) -> LeftSemiBrace {
    LeftSemiBrace::new(g.table().clone(), g.clone()).unwrap()
}

/// Products over trivial braces `C1..C3` with index groups `C1..C3`.
pub fn product_corpus() -> Vec<Instance> {
    let mut out = Vec::new();
    for g in 1..=3 {
        for i in 1..=3 {
            for j in 1..=3 {
                let (brace, _) = product_semibrace(
                    &trivial_brace(&GroupTable::cyclic(g)),
                    &GroupTable::cyclic(i),
                    &GroupTable::cyclic(j),
                )
                .unwrap();
                out.push(Instance {
                    name: format!("product(C{g}, C{i}, C{j})"),
                    brace,
                });
            }
        }
    }
    out
}

/// Every enumerated semi-brace on left and right zero semigroups of size
/// 1 to 4, without repeats.
pub fn zero_corpus() -> Vec<Instance> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for n in 1..=4 {
        for (side, dot) in [
            ("right", OpTable::right_zero(n).unwrap()),
            ("left", OpTable::left_zero(n).unwrap()),
        ] {
            for (k, brace) in enumerate_circ(&dot, DEFAULT_ENUMERATION_CAP)
                .unwrap()
                .into_iter()
                .enumerate()
            {
                let key = (
                    brace.dot_table().entries().to_vec(),
                    brace.circ_group().table().entries().to_vec(),
                );
                if seen.insert(key) {
                    out.push(Instance {
                        name: format!("{side}-zero n={n} #{k}"),
                        brace,
                    });
                }
            }
        }
    }
    out
}

pub fn corpus() -> Vec<Instance> {
    let mut v = product_corpus();
    v.extend(zero_corpus());
    v
}

/// Raw-table view of a semi-brace.
pub struct Tables {
    pub n: usize,
    pub dot: Vec<Vec<usize>>,
    pub circ: Vec<Vec<usize>>,
    pub one: usize,
    pub inv: Vec<usize>,
}

impl Tables {
    pub fn of(b: &LeftSemiBrace) -> Self {
        let dot = b.dot_table().to_rows();
        let circ = b.circ_group().table().to_rows();
        let n = dot.len();
        let one = (0..n)
            .find(|&e| (0..n).all(|x| circ[e][x] == x && circ[x][e] == x))
            .unwrap();
        let inv = (0..n)
            .map(|x| (0..n).find(|&y| circ[x][y] == one).unwrap())
            .collect();
        Self {
            n,
            dot,
            circ,
            one,
            inv,
        }
    }

    pub fn lambda(&self, a: usize, b: usize) -> usize {
        self.circ[a][self.dot[self.inv[a]][b]]
    }

    pub fn rho(&self, a: usize, b: usize) -> usize {
        self.circ[self.inv[self.dot[self.inv[b]][a]]][a]
    }

    pub fn r(&self, x: usize, y: usize) -> (usize, usize) {
        (self.lambda(x, y), self.rho(y, x))
    }

    pub fn rho_antihom(&self) -> bool {
        let n = self.n;
        (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n).all(|x| self.rho(self.circ[a][b], x) == self.rho(b, self.rho(a, x)))
            })
        })
    }

    /// `1∘B1∘`.
    pub fn group_component(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| self.dot[self.one][x] == x && self.dot[x][self.one] == x)
            .collect()
    }
}

/// Naive braid check over all triples.
pub fn braid_holds(n: usize, r: impl Fn(usize, usize) -> (usize, usize)) -> bool {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (a1, b1) = r(x, y);
                let (b2, c2) = r(b1, z);
                let (a3, b3) = r(a1, b2);
                let left = (a3, b3, c2);
                let (b4, c4) = r(y, z);
                let (a5, b5) = r(x, b4);
                let (b6, c6) = r(b5, c4);
                let right = (a5, b6, c6);
                if left != right {
                    return false;
                }
            }
        }
    }
    true
}

/// Degree-`d` class counts by breadth-first search over words, applying
/// every relation in both directions.
pub fn word_class_count(n: usize, d: usize, r: impl Fn(usize, usize) -> (usize, usize)) -> usize {
    let mut forward: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();
    for x in 0..n {
        for y in 0..n {
            let (u, v) = r(x, y);
            if (u, v) != (x, y) {
                forward.entry((x, y)).or_default().push((u, v));
                forward.entry((u, v)).or_default().push((x, y));
            }
        }
    }
    let words: Vec<Vec<usize>> = (0..d).map(|_| 0..n).fold(vec![Vec::new()], |acc, letters| {
        acc.into_iter()
            .flat_map(|w| {
                letters.clone().map(move |l| {
                    let mut w = w.clone();
                    w.push(l);
                    w
                })
            })
            .collect()
    });
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut classes = 0;
    for w in words {
        if seen.contains_key(&w) {
            continue;
        }
        classes += 1;
        seen.insert(w.clone(), classes);
        let mut queue = VecDeque::from([w]);
        while let Some(w) = queue.pop_front() {
            for p in 0..w.len().saturating_sub(1) {
                if let Some(images) = forward.get(&(w[p], w[p + 1])) {
                    for &(u, v) in images {
                        let mut next = w.clone();
                        next[p] = u;
                        next[p + 1] = v;
                        if !seen.contains_key(&next) {
                            seen.insert(next.clone(), classes);
                            queue.push_back(next);
                        }
                    }
                }
            }
        }
    }
    classes
}
