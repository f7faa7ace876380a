//! Finite posets and the order-theoretic queries the pseudocomplement
//! definitions are phrased in.
//!
//! Elements are addressed by their index in declaration order. The order is
//! stored twice, as per-element up-sets and down-sets, so every section,
//! segment and bound computation is a handful of mask operations.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::elemset::{Elem, ElemSet, MAX_ELEMENTS};
use crate::error::{Error, Result};

/// Default cap on the number of elements accepted by [`Poset::build`].
pub const DEFAULT_ELEMENT_CAP: usize = 16;

const NONE: u8 = u8::MAX;

/// One order declaration; covers and plain `≤` facts feed the same closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decl {
    Cover(String, String),
    Le(String, String),
}

impl Decl {
    pub fn pair(&self) -> (&str, &str) {
        match self {
            Decl::Cover(x, y) | Decl::Le(x, y) => (x, y),
        }
    }
}

/// A finite partially ordered set.
#[derive(Clone)]
pub struct Poset {
    name: String,
    labels: Arc<[String]>,
    up: Vec<ElemSet>,
    down: Vec<ElemSet>,
    meets: Vec<u8>,
    joins: Vec<u8>,
    tops: Vec<u8>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.labels == other.labels && self.up == other.up
    }
}

impl Eq for Poset {}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .covers()
            .into_iter()
            .map(|(x, y)| format!("{}<{}", self.label(x), self.label(y)))
            .collect();
        f.debug_struct("Poset")
            .field("name", &self.name)
            .field("elements", &self.labels)
            .field("covers", &covers)
            .finish()
    }
}

impl Poset {
    /// Builds a poset from element identifiers and order declarations, using
    /// the default element cap.
    pub fn build<S: AsRef<str>>(name: &str, elements: &[S], decls: &[Decl]) -> Result<Poset> {
        Self::build_with_cap(name, elements, decls, DEFAULT_ELEMENT_CAP)
    }

    pub fn build_with_cap<S: AsRef<str>>(
        name: &str,
        elements: &[S],
        decls: &[Decl],
        cap: usize,
    ) -> Result<Poset> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::EmptyPoset);
        }
        let cap = cap.min(MAX_ELEMENTS);
        if n > cap {
            return Err(Error::TooManyElements { n, cap });
        }
        let mut index = HashMap::with_capacity(n);
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.as_ref(), i).is_some() {
                return Err(Error::DuplicateElement(e.as_ref().to_string()));
            }
        }
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| Error::UnknownElement(s.to_string()))
        };
        let mut edges = vec![ElemSet::EMPTY; n];
        for d in decls {
            let (x, y) = d.pair();
            let (x, y) = (lookup(x)?, lookup(y)?);
            edges[x].insert(y);
        }
        let up = reflexive_transitive_closure(&edges);
        for x in 0..n {
            for y in up[x].without(x) {
                if up[y].contains(x) {
                    let cycle = find_cycle(&edges, x, y)
                        .into_iter()
                        .map(|i| elements[i].as_ref().to_string())
                        .collect();
                    return Err(Error::AntisymmetryViolation { cycle });
                }
            }
        }
        let labels: Arc<[String]> = elements.iter().map(|e| e.as_ref().to_string()).collect();
        Ok(Self::from_up_sets(name.to_string(), labels, up))
    }

    /// Builds a poset from already closed up-sets (`up[x]` = `{z : x ≤ z}`).
    ///
    /// The caller guarantees the relation is a partial order; this is checked
    /// in debug builds only.
    pub fn from_up_sets(name: String, labels: Arc<[String]>, up: Vec<ElemSet>) -> Poset {
        let n = up.len();
        assert_eq!(labels.len(), n);
        let mut down = vec![ElemSet::EMPTY; n];
        for (x, row) in up.iter().enumerate() {
            for z in row.iter() {
                down[z].insert(x);
            }
        }
        debug_assert!(is_partial_order(&up));
        let mut p = Poset {
            name,
            labels,
            up,
            down,
            meets: vec![NONE; n * n],
            joins: vec![NONE; n * n],
            tops: vec![NONE; n],
        };
        for x in 0..n {
            for y in 0..n {
                let lb = p.down[x].intersection(p.down[y]);
                if let Some(m) = p.greatest(lb) {
                    p.meets[x * n + y] = m as u8;
                }
                let ub = p.up[x].intersection(p.up[y]);
                if let Some(j) = p.least(ub) {
                    p.joins[x * n + y] = j as u8;
                }
            }
            if let Some(t) = p.greatest(p.up[x]) {
                p.tops[x] = t as u8;
            }
        }
        p
    }

    /// Builds a poset from a full `leq` matrix, checking the order laws.
    pub fn from_relation<S: AsRef<str>>(
        name: &str,
        elements: &[S],
        leq: &[Vec<bool>],
    ) -> Result<Poset> {
        let n = elements.len();
        if leq.len() != n || leq.iter().any(|r| r.len() != n) {
            return Err(Error::TableShape(format!("relation must be {n}x{n}")));
        }
        let mut decls = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if leq[x][y] && x != y {
                    decls.push(Decl::Le(
                        elements[x].as_ref().to_string(),
                        elements[y].as_ref().to_string(),
                    ));
                }
            }
        }
        let p = Self::build_with_cap(name, elements, &decls, MAX_ELEMENTS)?;
        for x in 0..n {
            for y in 0..n {
                if p.leq(x, y) != (leq[x][y] || x == y) {
                    return Err(Error::TableShape(format!(
                        "relation is not transitively closed at ({}, {})",
                        p.label(x),
                        p.label(y)
                    )));
                }
            }
        }
        Ok(p)
    }

    /// The sub-poset induced on `subset`, keeping declaration order.
    pub fn induced(&self, name: &str, subset: ElemSet) -> Result<Poset> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        let members: Vec<Elem> = subset.iter().collect();
        if let Some(&x) = members.iter().find(|&&x| x >= self.n()) {
            return Err(Error::IndexOutOfRange(x));
        }
        let labels: Arc<[String]> = members.iter().map(|&x| self.labels[x].clone()).collect();
        let up = members
            .iter()
            .map(|&x| {
                members
                    .iter()
                    .enumerate()
                    .filter(|&(_, &z)| self.leq(x, z))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        Ok(Poset::from_up_sets(name.to_string(), labels, up))
    }

    pub fn renamed(mut self, name: &str) -> Poset {
        self.name = name.to_string();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n(&self) -> usize {
        self.up.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: Elem) -> &str {
        &self.labels[x]
    }

    pub fn elem(&self, label: &str) -> Result<Elem> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    /// Resolves a list of labels into a set.
    pub fn set_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<ElemSet> {
        labels.iter().map(|l| self.elem(l.as_ref())).collect()
    }

    /// Labels of the members of `s`, in declaration order.
    pub fn names(&self, s: ElemSet) -> Vec<&str> {
        s.iter().map(|x| self.label(x)).collect()
    }

    pub fn all(&self) -> ElemSet {
        ElemSet::full(self.n())
    }

    pub fn elems(&self) -> std::ops::Range<Elem> {
        0..self.n()
    }

    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.up[x].contains(y)
    }

    pub fn lt(&self, x: Elem, y: Elem) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: Elem, y: Elem) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// `[x) = {z : x ≤ z}`.
    pub fn up(&self, x: Elem) -> ElemSet {
        self.up[x]
    }

    /// `(x] = {z : z ≤ x}`.
    pub fn down(&self, x: Elem) -> ElemSet {
        self.down[x]
    }

    /// `[x, y] = {z : x ≤ z ≤ y}`; empty unless `x ≤ y`.
    pub fn segment(&self, x: Elem, y: Elem) -> ElemSet {
        self.up[x].intersection(self.down[y])
    }

    /// `U(X)`; `U(∅)` is the whole carrier.
    pub fn upper_bounds(&self, set: ElemSet) -> ElemSet {
        set.iter()
            .fold(self.all(), |acc, x| acc.intersection(self.up[x]))
    }

    /// `L(X)`; `L(∅)` is the whole carrier.
    pub fn lower_bounds(&self, set: ElemSet) -> ElemSet {
        set.iter()
            .fold(self.all(), |acc, x| acc.intersection(self.down[x]))
    }

    pub fn is_down_set(&self, set: ElemSet) -> bool {
        set.iter().all(|x| self.down[x].is_subset(set))
    }

    pub fn is_up_set(&self, set: ElemSet) -> bool {
        set.iter().all(|x| self.up[x].is_subset(set))
    }

    /// Down-closure of `set`.
    pub fn down_closure(&self, set: ElemSet) -> ElemSet {
        set.iter()
            .fold(ElemSet::EMPTY, |acc, x| acc.union(self.down[x]))
    }

    pub fn maximal(&self, set: ElemSet) -> ElemSet {
        set.iter()
            .filter(|&x| self.up[x].intersection(set) == ElemSet::singleton(x))
            .collect()
    }

    pub fn minimal(&self, set: ElemSet) -> ElemSet {
        set.iter()
            .filter(|&x| self.down[x].intersection(set) == ElemSet::singleton(x))
            .collect()
    }

    pub fn greatest(&self, set: ElemSet) -> Option<Elem> {
        set.iter().find(|&x| set.is_subset(self.down[x]))
    }

    pub fn least(&self, set: ElemSet) -> Option<Elem> {
        set.iter().find(|&x| set.is_subset(self.up[x]))
    }

    /// `x ⊥_base y`: `[base, x] ∩ [base, y] ⊆ {base}`.
    pub fn disjoint_over(&self, x: Elem, y: Elem, base: Elem) -> bool {
        self.segment(base, x)
            .intersection(self.segment(base, y))
            .is_subset(ElemSet::singleton(base))
    }

    /// `x ∧_base y`: the `z` with `[base, x] ∩ [base, y] = [base, z] ≠ ∅`.
    pub fn meet_over(&self, x: Elem, y: Elem, base: Elem) -> Option<Elem> {
        let common = self.segment(base, x).intersection(self.segment(base, y));
        // Nonempty forces base ∈ common, and then common is [base, z]
        // exactly when it has a greatest element z.
        if !common.contains(base) {
            return None;
        }
        self.greatest(common)
    }

    pub fn meet(&self, x: Elem, y: Elem) -> Option<Elem> {
        decode(self.meets[x * self.n() + y])
    }

    pub fn join(&self, x: Elem, y: Elem) -> Option<Elem> {
        decode(self.joins[x * self.n() + y])
    }

    /// Maximal elements of `L({x, y})`.
    pub fn maximal_lower_bounds(&self, x: Elem, y: Elem) -> ElemSet {
        self.maximal(self.down[x].intersection(self.down[y]))
    }

    /// Greatest element of `[x)`, written `1_x`.
    pub fn section_top(&self, x: Elem) -> Option<Elem> {
        decode(self.tops[x])
    }

    /// Frink ideal generated by `x` and `y`: `L([x) ∩ [y))`.
    pub fn frink_ideal(&self, x: Elem, y: Elem) -> ElemSet {
        self.lower_bounds(self.up[x].intersection(self.up[y]))
    }

    pub fn greatest_element(&self) -> Option<Elem> {
        self.greatest(self.all())
    }

    pub fn least_element(&self) -> Option<Elem> {
        self.least(self.all())
    }

    pub fn is_sectionally_bounded(&self) -> bool {
        self.tops.iter().all(|&t| t != NONE)
    }

    pub fn is_upper_semilattice(&self) -> bool {
        self.joins.iter().all(|&j| j != NONE)
    }

    pub fn is_lower_semilattice(&self) -> bool {
        self.meets.iter().all(|&m| m != NONE)
    }

    pub fn is_lattice(&self) -> bool {
        self.is_upper_semilattice() && self.is_lower_semilattice()
    }

    pub fn is_chain(&self) -> bool {
        self.elems()
            .all(|x| self.up[x].union(self.down[x]) == self.all())
    }

    pub fn is_up_directed(&self) -> bool {
        self.elems().all(|x| {
            self.elems()
                .all(|y| !self.up[x].intersection(self.up[y]).is_empty())
        })
    }

    /// Cover pairs `(x, y)`, `x ≺ y`, in lexicographic declaration order.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for x in self.elems() {
            let above = self.up[x].without(x);
            for y in self.minimal(above) {
                out.push((x, y));
            }
        }
        out
    }

    /// Same order, different labels or name, is still the same relation.
    pub fn same_relation(&self, other: &Poset) -> bool {
        self.up == other.up
    }

    pub fn up_sets(&self) -> &[ElemSet] {
        &self.up
    }

    pub fn classify(&self) -> StructureReport {
        let n = self.n();
        let pairs = || (0..n).flat_map(move |x| (x + 1..n).map(move |y| (x, y)));
        let first = |pred: &dyn Fn(Elem, Elem) -> bool| {
            Flag::from_witness(pairs().find(|&(x, y)| pred(x, y)))
        };

        let is_chain = first(&|x, y| !self.comparable(x, y));
        let is_up_directed = first(&|x, y| self.up[x].intersection(self.up[y]).is_empty());
        let two = |s: ElemSet| {
            let mut it = s.iter();
            match (it.next(), it.next()) {
                (Some(a), Some(b)) => Flag::fails(a, b),
                _ => Flag::holds(),
            }
        };
        let has_greatest = two(self.maximal(self.all()));
        let has_least = two(self.minimal(self.all()));
        let is_sectionally_bounded = self
            .elems()
            .find(|&x| self.section_top(x).is_none())
            .map(|x| two(self.maximal(self.up[x])))
            .unwrap_or_else(Flag::holds);
        let is_upper_semilattice = first(&|x, y| self.join(x, y).is_none());
        let is_lower_semilattice = first(&|x, y| self.meet(x, y).is_none());
        let is_lattice = if !is_upper_semilattice.holds {
            is_upper_semilattice
        } else {
            is_lower_semilattice
        };
        let is_nearlattice = if !is_upper_semilattice.holds {
            is_upper_semilattice
        } else {
            first(&|x, y| {
                !self.down[x].intersection(self.down[y]).is_empty() && self.meet(x, y).is_none()
            })
        };
        let all_lower_sections_chains = first(&|x, y| {
            !self.comparable(x, y) && !self.down[x].intersection(self.down[y]).is_empty()
        });
        StructureReport {
            is_chain,
            is_up_directed,
            has_greatest,
            has_least,
            is_sectionally_bounded,
            is_upper_semilattice,
            is_lower_semilattice,
            is_lattice,
            is_nearlattice,
            all_lower_sections_chains,
        }
    }
}

fn decode(v: u8) -> Option<Elem> {
    (v != NONE).then_some(v as Elem)
}

fn reflexive_transitive_closure(edges: &[ElemSet]) -> Vec<ElemSet> {
    let n = edges.len();
    let mut up: Vec<ElemSet> = (0..n).map(|x| edges[x].with(x)).collect();
    // Warshall over rows: if k ∈ up[x] then up[k] ⊆ up[x].
    for k in 0..n {
        for x in 0..n {
            if up[x].contains(k) {
                up[x] = up[x].union(up[k]);
            }
        }
    }
    up
}

/// A declared path `x → … → y → … → x`, closed back at `x`.
fn find_cycle(edges: &[ElemSet], x: Elem, y: Elem) -> Vec<Elem> {
    let mut cycle = path(edges, x, y);
    let back = path(edges, y, x);
    cycle.extend(back.into_iter().skip(1));
    cycle
}

fn path(edges: &[ElemSet], from: Elem, to: Elem) -> Vec<Elem> {
    let n = edges.len();
    let mut prev = vec![usize::MAX; n];
    let mut queue = VecDeque::from([from]);
    prev[from] = from;
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for w in edges[v] {
            if prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    let mut out = vec![to];
    let mut v = to;
    while v != from {
        v = prev[v];
        out.push(v);
    }
    out.reverse();
    out
}

pub(crate) fn is_partial_order(up: &[ElemSet]) -> bool {
    let n = up.len();
    (0..n).all(|x| {
        up[x].contains(x)
            && up[x]
                .iter()
                .all(|y| (y == x || !up[y].contains(x)) && up[y].is_subset(up[x]))
    })
}

/// A boolean structure flag; failing flags carry a witness pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Flag {
    pub holds: bool,
    pub witness: Option<(Elem, Elem)>,
}

impl Flag {
    fn holds() -> Flag {
        Flag {
            holds: true,
            witness: None,
        }
    }

    fn fails(x: Elem, y: Elem) -> Flag {
        Flag {
            holds: false,
            witness: Some((x, y)),
        }
    }

    fn from_witness(w: Option<(Elem, Elem)>) -> Flag {
        match w {
            Some((x, y)) => Flag::fails(x, y),
            None => Flag::holds(),
        }
    }
}

/// Exhaustive structural classification of a poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub is_chain: Flag,
    pub is_up_directed: Flag,
    pub has_greatest: Flag,
    pub has_least: Flag,
    pub is_sectionally_bounded: Flag,
    pub is_upper_semilattice: Flag,
    pub is_lower_semilattice: Flag,
    pub is_lattice: Flag,
    pub is_nearlattice: Flag,
    pub all_lower_sections_chains: Flag,
}

impl StructureReport {
    pub fn flags(&self) -> [(&'static str, Flag); 10] {
        [
            ("chain", self.is_chain),
            ("up-directed", self.is_up_directed),
            ("has-greatest", self.has_greatest),
            ("has-least", self.has_least),
            ("sectionally-bounded", self.is_sectionally_bounded),
            ("upper-semilattice", self.is_upper_semilattice),
            ("lower-semilattice", self.is_lower_semilattice),
            ("lattice", self.is_lattice),
            ("nearlattice", self.is_nearlattice),
            ("lower-sections-chains", self.all_lower_sections_chains),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{hexagon, two_chains};

    fn set(p: &Poset, xs: &[&str]) -> ElemSet {
        p.set_of(xs).unwrap()
    }

    #[test]
    fn singleton_and_antisymmetry() {
        let p = Poset::build("one", &["x"], &[]).unwrap();
        assert_eq!(p.n(), 1);
        assert!(p.leq(0, 0));
        assert_eq!(p.down(0), ElemSet::singleton(0));

        let err = Poset::build(
            "bad",
            &["p", "q"],
            &[
                Decl::Le("p".into(), "q".into()),
                Decl::Le("q".into(), "p".into()),
            ],
        )
        .unwrap_err();
        assert_eq!(
            err,
            Error::AntisymmetryViolation {
                cycle: vec!["p".into(), "q".into(), "p".into()]
            }
        );
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Poset::build::<&str>("e", &[], &[]).unwrap_err(),
            Error::EmptyPoset
        );
        assert_eq!(
            Poset::build("d", &["a", "a"], &[]).unwrap_err(),
            Error::DuplicateElement("a".into())
        );
        assert_eq!(
            Poset::build("u", &["a"], &[Decl::Cover("a".into(), "b".into())]).unwrap_err(),
            Error::UnknownElement("b".into())
        );
        let many: Vec<String> = (0..17).map(|i| i.to_string()).collect();
        assert!(matches!(
            Poset::build("big", &many, &[]),
            Err(Error::TooManyElements { n: 17, cap: 16 })
        ));
        assert!(Poset::build_with_cap("big", &many, &[], 20).is_ok());
    }

    #[test]
    fn hexagon_sections_and_bounds() {
        let p = hexagon();
        let a = p.elem("a").unwrap();
        let c = p.elem("c").unwrap();
        let d = p.elem("d").unwrap();
        assert_eq!(p.up(a), set(&p, &["a", "c", "d", "1"]));
        assert_eq!(p.segment(c, d), ElemSet::EMPTY);
        assert_eq!(
            p.lower_bounds(set(&p, &["c", "d", "1"])),
            set(&p, &["0", "a", "b"])
        );
        assert_eq!(p.upper_bounds(ElemSet::EMPTY), p.all());
        assert_eq!(p.lower_bounds(ElemSet::EMPTY), p.all());
        assert_eq!(
            p.upper_bounds(set(&p, &["a", "b"])),
            set(&p, &["c", "d", "1"])
        );
    }

    #[test]
    fn hexagon_disjointness_and_local_meets() {
        let p = hexagon();
        let e = |s| p.elem(s).unwrap();
        assert!(p.disjoint_over(e("c"), e("d"), e("a")));
        assert!(!p.disjoint_over(e("c"), e("d"), e("0")));
        // base not below x: vacuous
        assert!(p.disjoint_over(e("a"), e("b"), e("c")));
        assert_eq!(p.meet_over(e("c"), e("d"), e("b")), Some(e("b")));
        assert_eq!(p.meet(e("c"), e("d")), None);
        assert_eq!(p.meet_over(e("a"), e("a"), e("a")), Some(e("a")));
        assert_eq!(p.maximal_lower_bounds(e("c"), e("d")), set(&p, &["a", "b"]));
        assert_eq!(p.join(e("a"), e("b")), None);
    }

    #[test]
    fn chain_meet() {
        let p = Poset::build("c2", &["0", "1"], &[Decl::Cover("0".into(), "1".into())]).unwrap();
        assert_eq!(p.meet(0, 1), Some(0));
        let r = p.classify();
        for (_, f) in r.flags() {
            assert!(f.holds);
        }
    }

    #[test]
    fn classify_examples() {
        let p = hexagon();
        let r = p.classify();
        let e = |s| p.elem(s).unwrap();
        assert!(!r.is_lattice.holds);
        assert_eq!(r.is_upper_semilattice.witness, Some((e("a"), e("b"))));
        assert!(r.is_up_directed.holds);
        assert!(r.has_greatest.holds);

        let q = two_chains();
        let r = q.classify();
        assert!(!r.is_up_directed.holds);
        assert!(r.is_sectionally_bounded.holds);
        assert!(r.all_lower_sections_chains.holds);
    }

    #[test]
    fn frink_ideals() {
        let p = hexagon();
        let e = |s| p.elem(s).unwrap();
        assert_eq!(
            p.frink_ideal(e("c"), e("a")),
            set(&p, &["0", "a", "b", "c"])
        );
        assert_eq!(p.frink_ideal(e("a"), e("b")), set(&p, &["0", "a", "b"]));
        for x in p.elems() {
            for y in p.down(x) {
                assert_eq!(p.frink_ideal(x, y), p.down(x));
            }
        }
        let q = two_chains();
        assert_eq!(
            q.frink_ideal(q.elem("a").unwrap(), q.elem("c").unwrap()),
            q.all()
        );
    }

    #[test]
    fn covers_of_hexagon() {
        let p = hexagon();
        let got: Vec<(&str, &str)> = p
            .covers()
            .into_iter()
            .map(|(x, y)| (p.label(x), p.label(y)))
            .collect();
        assert_eq!(
            got,
            vec![
                ("0", "a"),
                ("0", "b"),
                ("a", "c"),
                ("a", "d"),
                ("b", "c"),
                ("b", "d"),
                ("c", "1"),
                ("d", "1")
            ]
        );
    }

    #[test]
    fn induced_subposet() {
        let p = hexagon();
        let q = p.induced("q", set(&p, &["0", "c", "d", "1"])).unwrap();
        assert_eq!(q.labels(), &["0", "c", "d", "1"]);
        assert!(q.leq(0, 1) && q.leq(0, 2) && !q.comparable(1, 2));
        assert!(q.is_lattice());
    }
}
