//! Exhaustive generation of small posets and of operation tables.
//!
//! Labeled posets on `{0..n}` are produced by adding element `k` to every
//! poset on `{0..k}` in all consistent ways: a down-set `D` of elements
//! below it and an up-set `U ⊆ U(D) \ D` above it. Each labeled poset
//! arises exactly once. The up-to-isomorphism mode keeps one canonical
//! representative per class at every level.

use std::collections::BTreeMap;
use std::sync::Arc;

use itertools::Itertools;

use crate::axioms::{Item, Reading, System};
use crate::elemset::{Elem, ElemSet};
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::selection::LocalSelection;
use crate::solve::Solver;
use crate::table::PartialTable;

pub const MAX_LABELED_N: usize = 7;
pub const MAX_ISO_N: usize = 8;
/// Default ceiling on free cells when sweeping extensions.
pub const DEFAULT_FREE_CELL_BUDGET: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Dedup {
    #[default]
    Labeled,
    UpToIso,
}

/// Generic element labels `e0, e1, ...`.
pub fn default_labels(n: usize) -> Arc<[String]> {
    (0..n).map(|i| format!("e{i}")).collect()
}

/// All ways to add element `k = up.len()` on top of the order `up`.
fn extension_choices(up: &[ElemSet]) -> Vec<(ElemSet, ElemSet)> {
    let k = up.len();
    let down: Vec<ElemSet> = (0..k)
        .map(|x| (0..k).filter(|&y| up[y].contains(x)).collect())
        .collect();
    let is_down = |s: ElemSet| s.iter().all(|x| down[x].is_subset(s));
    let is_up = |s: ElemSet| s.iter().all(|x| up[x].is_subset(s));
    let mut out = Vec::new();
    for d in 0..1u64 << k {
        let d = ElemSet::from_bits(d);
        if !is_down(d) {
            continue;
        }
        let above = d
            .iter()
            .fold(ElemSet::full(k), |acc, x| acc.intersection(up[x]))
            .difference(d);
        // every submask of `above`, ascending
        let mut sub = 0u64;
        loop {
            let u = ElemSet::from_bits(sub);
            if is_up(u) {
                out.push((d, u));
            }
            if sub == above.bits() {
                break;
            }
            sub = (sub.wrapping_sub(above.bits())) & above.bits();
        }
    }
    out
}

fn extend_order(up: &[ElemSet], (d, u): (ElemSet, ElemSet)) -> Vec<ElemSet> {
    let k = up.len();
    let mut next: Vec<ElemSet> = up
        .iter()
        .enumerate()
        .map(|(x, &s)| if d.contains(x) { s.with(k) } else { s })
        .collect();
    next.push(u.with(k));
    next
}

fn check_n(n: usize, dedup: Dedup) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyPoset);
    }
    let cap = match dedup {
        Dedup::Labeled => MAX_LABELED_N,
        Dedup::UpToIso => MAX_ISO_N,
    };
    if n > cap {
        return Err(Error::SizeCap {
            what: format!("{dedup:?} poset enumeration size"),
            requested: n,
            cap,
        });
    }
    Ok(())
}

/// Every partial order on `n` labeled points, as up-set vectors.
pub struct LabeledOrders {
    n: usize,
    stack: Vec<Frame>,
    started: bool,
}

struct Frame {
    up: Vec<ElemSet>,
    choices: Vec<(ElemSet, ElemSet)>,
    next: usize,
}

impl LabeledOrders {
    pub fn new(n: usize) -> Result<LabeledOrders> {
        check_n(n, Dedup::Labeled)?;
        Ok(LabeledOrders {
            n,
            stack: Vec::new(),
            started: false,
        })
    }

    fn frame(up: Vec<ElemSet>) -> Frame {
        Frame {
            choices: extension_choices(&up),
            up,
            next: 0,
        }
    }
}

impl Iterator for LabeledOrders {
    type Item = Vec<ElemSet>;

    fn next(&mut self) -> Option<Vec<ElemSet>> {
        if !self.started {
            self.started = true;
            let one = vec![ElemSet::singleton(0)];
            if self.n == 1 {
                return Some(one);
            }
            self.stack.push(Self::frame(one));
        }
        while let Some(top) = self.stack.last_mut() {
            if top.next == top.choices.len() {
                self.stack.pop();
                continue;
            }
            let choice = top.choices[top.next];
            top.next += 1;
            let up = extend_order(&top.up, choice);
            if up.len() == self.n {
                return Some(up);
            }
            self.stack.push(Self::frame(up));
        }
        None
    }
}

/// Canonical form of an order: the minimal relation bit-matrix over all
/// relabelings compatible with an invariant refinement of the elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: usize,
    pub key: u64,
}

/// Own rank, down-set size, up-set size, sorted ranks above, sorted ranks below.
type RankKey = (usize, usize, usize, Vec<usize>, Vec<usize>);

fn refine(up: &[ElemSet]) -> Vec<usize> {
    let n = up.len();
    let down: Vec<ElemSet> = (0..n)
        .map(|x| (0..n).filter(|&y| up[y].contains(x)).collect())
        .collect();
    let mut rank: Vec<usize> = vec![0; n];
    let mut classes = 1;
    loop {
        let keys: Vec<RankKey> = (0..n)
            .map(|x| {
                let ups = up[x].without(x).iter().map(|y| rank[y]).sorted().collect();
                let downs = down[x]
                    .without(x)
                    .iter()
                    .map(|y| rank[y])
                    .sorted()
                    .collect();
                (rank[x], down[x].len(), up[x].len(), ups, downs)
            })
            .collect();
        let uniq: Vec<_> = keys.iter().sorted().dedup().collect();
        let next: Vec<usize> = keys
            .iter()
            .map(|k| uniq.binary_search(&k).expect("present"))
            .collect();
        let count = uniq.len();
        rank = next;
        if count == classes {
            return rank;
        }
        classes = count;
    }
}

/// Returns the canonical form and the ordering `perm[i]` = original element
/// placed at position `i`.
pub fn canonicalize(up: &[ElemSet]) -> (CanonicalForm, Vec<Elem>) {
    let n = up.len();
    let rank = refine(up);
    let cells: Vec<Vec<Elem>> = (0..n)
        .sorted_by_key(|&x| rank[x])
        .chunk_by(|&x| rank[x])
        .into_iter()
        .map(|(_, g)| g.collect())
        .collect();
    let key_of = |perm: &[Elem]| {
        let mut key = 0u64;
        for i in 0..n {
            for j in 0..n {
                if up[perm[i]].contains(perm[j]) {
                    key |= 1 << (i * n + j);
                }
            }
        }
        key
    };
    let mut best: Option<(u64, Vec<Elem>)> = None;
    for parts in cells
        .iter()
        .map(|c| c.iter().copied().permutations(c.len()).collect::<Vec<_>>())
        .multi_cartesian_product()
    {
        let perm: Vec<Elem> = parts.concat();
        let key = key_of(&perm);
        if best.as_ref().is_none_or(|(b, _)| key < *b) {
            best = Some((key, perm));
        }
    }
    let (key, perm) = best.expect("at least one permutation");
    (CanonicalForm { n, key }, perm)
}

pub fn canonical_form(p: &Poset) -> CanonicalForm {
    canonicalize(p.up_sets()).0
}

pub fn is_isomorphic(p: &Poset, q: &Poset) -> bool {
    p.n() == q.n() && canonical_form(p) == canonical_form(q)
}

fn relabel(up: &[ElemSet], perm: &[Elem]) -> Vec<ElemSet> {
    let n = up.len();
    (0..n)
        .map(|i| (0..n).filter(|&j| up[perm[i]].contains(perm[j])).collect())
        .collect()
}

/// One canonically labeled order per isomorphism class, sorted by key.
pub fn unlabeled_orders(n: usize) -> Result<Vec<Vec<ElemSet>>> {
    check_n(n, Dedup::UpToIso)?;
    let mut level = vec![vec![ElemSet::singleton(0)]];
    for _ in 1..n {
        let mut next: BTreeMap<u64, Vec<ElemSet>> = BTreeMap::new();
        for up in &level {
            for choice in extension_choices(up) {
                let grown = extend_order(up, choice);
                let (form, perm) = canonicalize(&grown);
                next.entry(form.key)
                    .or_insert_with(|| relabel(&grown, &perm));
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

/// Stream of posets of size `n`, deterministic in order.
pub enum PosetStream {
    Labeled(LabeledOrders, Arc<[String]>),
    Iso(std::vec::IntoIter<Vec<ElemSet>>, Arc<[String]>),
}

impl Iterator for PosetStream {
    type Item = Poset;

    fn next(&mut self) -> Option<Poset> {
        let (up, labels) = match self {
            PosetStream::Labeled(it, l) => (it.next()?, l.clone()),
            PosetStream::Iso(it, l) => (it.next()?, l.clone()),
        };
        let n = up.len();
        Some(Poset::from_up_sets(format!("P{n}"), labels, up))
    }
}

pub fn enumerate_posets(n: usize, dedup: Dedup) -> Result<PosetStream> {
    let labels = default_labels(n);
    Ok(match dedup {
        Dedup::Labeled => PosetStream::Labeled(LabeledOrders::new(n)?, labels),
        Dedup::UpToIso => PosetStream::Iso(unlabeled_orders(n)?.into_iter(), labels),
    })
}

/// All tables (partial for SP, total otherwise) satisfying `items`.
pub fn solve_tables<'a>(
    p: &'a Poset,
    items: &[Item],
    partial: bool,
    sel: Option<&'a LocalSelection>,
    reading: Reading,
) -> Solver<'a> {
    let n = p.n();
    let free: Vec<usize> = (0..n * n)
        .filter(|&c| !partial || p.leq(c % n, c / n))
        .collect();
    Solver::new(p, items, sel, reading, vec![None; n * n], free)
}

/// All tables satisfying `system` on `p`.
pub fn solve_system<'a>(
    p: &'a Poset,
    system: System,
    sel: Option<&'a LocalSelection>,
) -> Result<Solver<'a>> {
    system.admits(p, sel)?;
    Ok(solve_tables(
        p,
        system.items(),
        system.is_partial(),
        sel,
        Reading::default(),
    ))
}

/// Total tables extending `s` that satisfy `system`.
pub fn enumerate_extensions<'a>(
    p: &'a Poset,
    s: &PartialTable,
    system: System,
    sel: Option<&'a LocalSelection>,
    budget: usize,
) -> Result<Solver<'a>> {
    if system.is_partial() {
        return Err(Error::StructureMismatch {
            system: system.id().to_string(),
            required: "a total (arrow) table".to_string(),
        });
    }
    system.admits(p, sel)?;
    let n = p.n();
    let fixed = s.cells().to_vec();
    let free: Vec<usize> = (0..n * n).filter(|&c| fixed[c].is_none()).collect();
    if free.len() > budget {
        return Err(Error::SizeCap {
            what: "free cells in extension sweep".to_string(),
            requested: free.len(),
            cap: budget,
        });
    }
    Ok(Solver::new(
        p,
        system.items(),
        sel,
        Reading::default(),
        fixed,
        free,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::hexagon;

    #[test]
    fn labeled_counts_small() {
        let counts: Vec<usize> = (1..=4)
            .map(|n| LabeledOrders::new(n).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 3, 19, 219]);
    }

    #[test]
    fn unlabeled_counts_small() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| unlabeled_orders(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 5, 16, 63]);
    }

    #[test]
    fn caps() {
        assert!(matches!(LabeledOrders::new(8), Err(Error::SizeCap { .. })));
        assert!(matches!(unlabeled_orders(9), Err(Error::SizeCap { .. })));
        assert!(matches!(LabeledOrders::new(0), Err(Error::EmptyPoset)));
    }

    #[test]
    fn canonical_form_ignores_labels() {
        let p = hexagon();
        let up = p.up_sets().to_vec();
        // reverse the labeling
        let perm: Vec<Elem> = (0..6).rev().collect();
        let q = relabel(&up, &perm);
        assert_eq!(canonicalize(&up).0, canonicalize(&q).0);
        let (_, perm) = canonicalize(&up);
        assert_eq!(canonicalize(&relabel(&up, &perm)).0, canonicalize(&up).0);
    }

    #[test]
    fn hexagon_has_no_normal_esp_table() {
        let p = hexagon();
        let s = crate::pseudo::star_table(&p).unwrap();
        let mut it = enumerate_extensions(&p, &s, System::Nrm, None, 30).unwrap();
        assert!(it.next().is_none());
    }
}
