//! Operation tables over a poset's carrier.
//!
//! Both kinds store an `n × n` grid of optional cells indexed `x * n + y`.
//! A [`PartialTable`] is defined exactly on the star domain `{(x, y) : y ≤ x}`;
//! a [`TotalTable`] is defined everywhere.

use crate::elemset::Elem;
use crate::error::{Error, Result};
use crate::poset::Poset;

/// A star operation `*`, defined exactly on pairs `(x, y)` with `y ≤ x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialTable {
    n: usize,
    cells: Vec<Option<Elem>>,
}

impl PartialTable {
    pub fn new(p: &Poset, cells: Vec<Option<Elem>>) -> Result<PartialTable> {
        let n = p.n();
        check_len(n, cells.len())?;
        for x in 0..n {
            for y in 0..n {
                match (p.leq(y, x), cells[x * n + y]) {
                    (true, None) => {
                        return Err(Error::TableShape(format!(
                            "star cell ({}, {}) must be defined",
                            p.label(x),
                            p.label(y)
                        )))
                    }
                    (false, Some(_)) => {
                        return Err(Error::TableShape(format!(
                            "star cell ({}, {}) must be undefined",
                            p.label(x),
                            p.label(y)
                        )))
                    }
                    (_, Some(v)) if v >= n => return Err(Error::IndexOutOfRange(v)),
                    _ => {}
                }
            }
        }
        Ok(PartialTable { n, cells })
    }

    /// Builds a table from a function evaluated on the star domain only.
    pub fn from_fn(p: &Poset, mut f: impl FnMut(Elem, Elem) -> Elem) -> PartialTable {
        let n = p.n();
        let mut cells = vec![None; n * n];
        for x in 0..n {
            for y in p.down(x) {
                cells[x * n + y] = Some(f(x, y));
            }
        }
        PartialTable { n, cells }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, x: Elem, y: Elem) -> Option<Elem> {
        self.cells[x * self.n + y]
    }

    pub fn cells(&self) -> &[Option<Elem>] {
        &self.cells
    }

    /// Whether every section `[q)` is closed under the operation.
    pub fn is_sectional(&self, p: &Poset) -> bool {
        (0..self.n).all(|q| {
            let sec = p.up(q);
            sec.iter().all(|x| {
                sec.iter()
                    .filter(|&y| p.leq(y, x))
                    .all(|y| self.get(x, y).is_some_and(|v| sec.contains(v)))
            })
        })
    }

    /// Restriction to the sub-poset on `subset`, when `subset` is closed.
    pub fn restrict_to(&self, p: &Poset, sub: &Poset, members: &[Elem]) -> Option<PartialTable> {
        let index = |v: Elem| members.iter().position(|&m| m == v);
        let m = members.len();
        let mut cells = vec![None; m * m];
        for (i, &x) in members.iter().enumerate() {
            for (j, &y) in members.iter().enumerate() {
                if p.leq(y, x) {
                    cells[i * m + j] = Some(index(self.get(x, y)?)?);
                }
            }
        }
        debug_assert_eq!(sub.n(), m);
        Some(PartialTable { n: m, cells })
    }
}

/// An arrow operation `→`, defined on all pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TotalTable {
    n: usize,
    cells: Vec<Option<Elem>>,
}

impl TotalTable {
    pub fn new(n: usize, values: Vec<Elem>) -> Result<TotalTable> {
        check_len(n, values.len())?;
        if let Some(&v) = values.iter().find(|&&v| v >= n) {
            return Err(Error::IndexOutOfRange(v));
        }
        Ok(TotalTable {
            n,
            cells: values.into_iter().map(Some).collect(),
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(Elem, Elem) -> Elem) -> TotalTable {
        let mut cells = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                cells.push(Some(f(x, y)));
            }
        }
        TotalTable { n, cells }
    }

    /// Wraps a fully assigned grid; `None` if any cell is missing.
    pub fn from_cells(n: usize, cells: Vec<Option<Elem>>) -> Option<TotalTable> {
        (cells.len() == n * n && cells.iter().all(|c| c.is_some_and(|v| v < n)))
            .then_some(TotalTable { n, cells })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, x: Elem, y: Elem) -> Elem {
        self.cells[x * self.n + y].expect("total table cell")
    }

    pub fn cells(&self) -> &[Option<Elem>] {
        &self.cells
    }

    pub fn values(&self) -> impl Iterator<Item = Elem> + '_ {
        self.cells.iter().map(|c| c.expect("total table cell"))
    }

    /// The restriction to the star domain `{(x, y) : y ≤ x}`.
    pub fn restrict(&self, p: &Poset) -> PartialTable {
        PartialTable::from_fn(p, |x, y| self.get(x, y))
    }

    /// Whether `self` agrees with `s` on the star domain.
    pub fn extends(&self, p: &Poset, s: &PartialTable) -> bool {
        self.restrict(p) == *s
    }

    /// First cell, row-major, where the two tables differ.
    pub fn first_difference(&self, other: &TotalTable) -> Option<(Elem, Elem)> {
        (0..self.n * self.n)
            .find(|&i| self.cells[i] != other.cells[i])
            .map(|i| (i / self.n, i % self.n))
    }

    /// Restriction to the sub-poset on `members`, if `members` is closed.
    pub fn restrict_to(&self, members: &[Elem]) -> Option<TotalTable> {
        let m = members.len();
        let mut values = Vec::with_capacity(m * m);
        for &x in members {
            for &y in members {
                values.push(members.iter().position(|&v| v == self.get(x, y))?);
            }
        }
        Some(TotalTable {
            n: m,
            cells: values.into_iter().map(Some).collect(),
        })
    }
}

fn check_len(n: usize, len: usize) -> Result<()> {
    if len != n * n {
        return Err(Error::TableShape(format!(
            "expected {} cells for {n} elements, got {len}",
            n * n
        )));
    }
    Ok(())
}
