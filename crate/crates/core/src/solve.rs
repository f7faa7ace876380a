//! Backtracking search for operation tables satisfying a set of items.
//!
//! Unassigned cells read as undefined, which makes every instance needing
//! them vacuous, so a violation found on a partial assignment is final.
//! Each item instance waits on the first unassigned cell it reads and is
//! re-evaluated only when that cell receives a value.

use std::cell::Cell;

use crate::axioms::{Ctx, Item, Reading};
use crate::elemset::{Elem, ElemSet};
use crate::poset::Poset;
use crate::selection::LocalSelection;

#[derive(Debug, Clone, Copy)]
struct Instance {
    item: u16,
    tuple: u32,
}

enum Eval {
    Done,
    Violated,
    Waits(usize),
}

/// Depth-first enumeration of all completions; yields full grids in
/// lexicographic order of the free cells' values.
pub struct Solver<'a> {
    p: &'a Poset,
    sel: Option<&'a LocalSelection>,
    reading: Reading,
    items: Vec<Item>,
    cells: Vec<Option<Elem>>,
    free: Vec<usize>,
    domains: Vec<ElemSet>,
    remaining: Vec<ElemSet>,
    watches: Vec<Vec<Instance>>,
    /// Cells whose watch list grew, for undoing.
    trail: Vec<usize>,
    /// Trail length before the assignment at each depth.
    marks: Vec<usize>,
    depth: usize,
    state: State,
    nodes: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

impl<'a> Solver<'a> {
    /// `fixed` holds preassigned cells; `free` lists the cells to fill, in
    /// search order.
    pub fn new(
        p: &'a Poset,
        items: &[Item],
        sel: Option<&'a LocalSelection>,
        reading: Reading,
        fixed: Vec<Option<Elem>>,
        free: Vec<usize>,
    ) -> Solver<'a> {
        debug_assert_eq!(fixed.len(), p.n() * p.n());
        debug_assert!(free.iter().all(|&c| fixed[c].is_none()));
        let mut s = Solver {
            p,
            sel,
            reading,
            items: items.to_vec(),
            watches: vec![Vec::new(); fixed.len()],
            cells: fixed,
            domains: Vec::new(),
            remaining: vec![ElemSet::EMPTY; free.len()],
            marks: vec![0; free.len()],
            trail: Vec::new(),
            free,
            depth: 0,
            state: State::Fresh,
            nodes: 0,
        };
        let n = p.n() as u32;
        for (i, item) in s.items.iter().enumerate() {
            for tuple in 0..n.pow(item.arity() as u32) {
                let inst = Instance {
                    item: i as u16,
                    tuple,
                };
                match s.eval(inst) {
                    Eval::Done => {}
                    Eval::Violated => {
                        s.state = State::Done;
                        return s;
                    }
                    Eval::Waits(c) => s.watches[c].push(inst),
                }
            }
        }
        // prune values that fail with only their own cell assigned
        let all = p.all();
        s.domains = (0..s.free.len())
            .map(|i| {
                let c = s.free[i];
                let dom = all
                    .iter()
                    .filter(|&v| {
                        s.cells[c] = Some(v);
                        let ok = s.watches[c]
                            .iter()
                            .all(|&inst| !matches!(s.eval(inst), Eval::Violated));
                        s.cells[c] = None;
                        ok
                    })
                    .collect();
                dom
            })
            .collect();
        s
    }

    fn eval(&self, inst: Instance) -> Eval {
        let item = &self.items[inst.item as usize];
        let n = self.p.n() as u32;
        let mut args = [0; 8];
        let mut t = inst.tuple;
        for a in args[..item.arity()].iter_mut().rev() {
            *a = (t % n) as Elem;
            t /= n;
        }
        let miss = Cell::new(None);
        let ctx = Ctx::new(self.p, &self.cells)
            .with_selection(self.sel)
            .with_reading(self.reading)
            .with_miss(&miss);
        match ((item.pred)(&ctx, &args[..item.arity()]), miss.get()) {
            (Some(false), _) => Eval::Violated,
            (None, Some(c)) => Eval::Waits(c),
            _ => Eval::Done,
        }
    }

    /// Re-evaluates the instances waiting on `c`, which was just assigned.
    fn propagate(&mut self, c: usize) -> bool {
        for k in 0..self.watches[c].len() {
            let inst = self.watches[c][k];
            match self.eval(inst) {
                Eval::Done => {}
                Eval::Violated => return false,
                Eval::Waits(c2) => {
                    self.watches[c2].push(inst);
                    self.trail.push(c2);
                }
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let c = self.trail.pop().expect("nonempty trail");
            self.watches[c].pop();
        }
    }

    /// Number of assignments tried so far.
    pub fn nodes(&self) -> u64 {
        self.nodes
    }
}

impl Iterator for Solver<'_> {
    type Item = Vec<Option<Elem>>;

    fn next(&mut self) -> Option<Vec<Option<Elem>>> {
        match self.state {
            State::Done => return None,
            State::Fresh => {
                if self.free.is_empty() {
                    self.state = State::Done;
                    return Some(self.cells.clone());
                }
                self.state = State::Running;
                self.depth = 0;
                self.remaining[0] = self.domains[0];
                self.marks[0] = self.trail.len();
            }
            State::Running => {}
        }
        loop {
            let d = self.depth;
            let c = self.free[d];
            self.undo_to(self.marks[d]);
            let Some(v) = self.remaining[d].first() else {
                self.cells[c] = None;
                if d == 0 {
                    self.state = State::Done;
                    return None;
                }
                self.depth -= 1;
                continue;
            };
            self.remaining[d].remove(v);
            self.cells[c] = Some(v);
            self.nodes += 1;
            if !self.propagate(c) {
                continue;
            }
            if d + 1 == self.free.len() {
                return Some(self.cells.clone());
            }
            self.depth += 1;
            self.remaining[d + 1] = self.domains[d + 1];
            self.marks[d + 1] = self.trail.len();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::System;
    use crate::catalog::chain;

    #[test]
    fn unconstrained_search_counts_everything() {
        let p = chain(&["0", "1"]);
        let n = p.n();
        let free: Vec<usize> = (0..n * n).collect();
        let s = Solver::new(&p, &[], None, Reading::default(), vec![None; 4], free);
        assert_eq!(s.count(), 16);
    }

    #[test]
    fn esp_on_two_chain_fixes_star_cells() {
        let p = chain(&["0", "1"]);
        let s = Solver::new(
            &p,
            System::Esp.items(),
            None,
            Reading::default(),
            vec![None; 4],
            (0..4).collect(),
        );
        let tables: Vec<_> = s.collect();
        // 1→1 = 1, 1→0 = 0, 0→0 = 1; 0→1 is free
        assert_eq!(tables.len(), 2);
        for t in &tables {
            assert_eq!((t[0], t[2], t[3]), (Some(1), Some(0), Some(1)));
        }
    }

    #[test]
    fn no_free_cells_yields_fixed_grid_once() {
        let p = chain(&["0"]);
        let s = Solver::new(&p, &[], None, Reading::default(), vec![Some(0)], vec![]);
        assert_eq!(s.collect::<Vec<_>>(), vec![vec![Some(0)]]);
    }
}
