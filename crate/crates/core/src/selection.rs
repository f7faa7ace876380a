//! Local subset selections: pair-indexed down-sets `I(x, y)`.

use crate::elemset::{Elem, ElemSet};
use crate::error::{Error, Result};
use crate::poset::Poset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SelectionKind {
    /// `(x] ∪ (y]`.
    Union,
    /// `L([x) ∩ [y))`.
    Frink,
    /// Supplied pair by pair.
    Custom,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalSelection {
    kind: SelectionKind,
    name: String,
    n: usize,
    sets: Vec<ElemSet>,
}

impl LocalSelection {
    pub fn union(p: &Poset) -> LocalSelection {
        Self::from_fn(p, SelectionKind::Union, "union", |x, y| {
            p.down(x).union(p.down(y))
        })
    }

    pub fn frink(p: &Poset) -> LocalSelection {
        Self::from_fn(p, SelectionKind::Frink, "frink", |x, y| p.frink_ideal(x, y))
    }

    /// A selection given on some incomparable pairs; comparable pairs take
    /// the larger principal ideal and the table is symmetrized.
    pub fn custom(
        p: &Poset,
        name: &str,
        entries: &[(Elem, Elem, ElemSet)],
    ) -> Result<LocalSelection> {
        let n = p.n();
        let mut sets: Vec<Option<ElemSet>> = vec![None; n * n];
        for x in p.elems() {
            for y in p.down(x) {
                sets[x * n + y] = Some(p.down(x));
                sets[y * n + x] = Some(p.down(x));
            }
        }
        for &(x, y, set) in entries {
            let fixed = |v: Option<ElemSet>| v.is_some_and(|v| v != set);
            if p.comparable(x, y) && fixed(sets[x * n + y]) {
                return Err(violation(p, "I2", x, y));
            }
            if fixed(sets[x * n + y]) || fixed(sets[y * n + x]) {
                return Err(violation(p, "I1", x, y));
            }
            sets[x * n + y] = Some(set);
            sets[y * n + x] = Some(set);
        }
        if let Some(i) = sets.iter().position(|s| s.is_none()) {
            return Err(Error::SelectionAxiomViolation {
                axiom: "completeness".to_string(),
                witness: format!("no set given for ({}, {})", p.label(i / n), p.label(i % n)),
            });
        }
        let sel = LocalSelection {
            kind: SelectionKind::Custom,
            name: name.to_string(),
            n,
            sets: sets.into_iter().map(Option::unwrap).collect(),
        };
        sel.validate(p)?;
        Ok(sel)
    }

    fn from_fn(
        p: &Poset,
        kind: SelectionKind,
        name: &str,
        f: impl Fn(Elem, Elem) -> ElemSet,
    ) -> LocalSelection {
        let n = p.n();
        let mut sets = Vec::with_capacity(n * n);
        for x in p.elems() {
            for y in p.elems() {
                sets.push(f(x, y));
            }
        }
        LocalSelection {
            kind,
            name: name.to_string(),
            n,
            sets,
        }
    }

    pub fn kind(&self) -> SelectionKind {
        self.kind
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, x: Elem, y: Elem) -> ElemSet {
        self.sets[x * self.n + y]
    }

    /// Whether `I(x, y) ⊆ other(x, y)` for all pairs.
    pub fn is_within(&self, other: &LocalSelection) -> bool {
        self.sets
            .iter()
            .zip(&other.sets)
            .all(|(a, b)| a.is_subset(*b))
    }

    /// Checks the down-set condition and (I0)-(I3), then the derived
    /// (I4) and (I5).
    pub fn validate(&self, p: &Poset) -> Result<()> {
        let n = p.n();
        if self.n != n {
            return Err(Error::TableShape(format!(
                "selection over {} elements, poset has {n}",
                self.n
            )));
        }
        let all = || p.elems().flat_map(|x| p.elems().map(move |y| (x, y)));
        let check = |axiom: &str, ok: &dyn Fn(Elem, Elem) -> bool| -> Result<()> {
            match all().find(|&(x, y)| !ok(x, y)) {
                Some((x, y)) => Err(violation(p, axiom, x, y)),
                None => Ok(()),
            }
        };
        let i = |x, y| self.get(x, y);
        check("down-set", &|x, y| p.is_down_set(i(x, y)))?;
        check("I0", &|x, y| i(x, y).contains(x) && i(x, y).contains(y))?;
        check("I1", &|x, y| i(x, y) == i(y, x))?;
        check("I2", &|x, y| !p.leq(y, x) || i(x, y) == p.down(x))?;
        check("I3", &|x, y| {
            p.up(x).iter().all(|x2| i(x, y).is_subset(i(x2, y)))
        })?;
        // consequences of the above
        check("I4", &|x, y| {
            p.up(x)
                .iter()
                .all(|x2| p.up(y).iter().all(|y2| i(x, y).is_subset(i(x2, y2))))
        })?;
        check("I5", &|x, y| {
            let ub = p.up(x).intersection(p.up(y));
            let cap = ub
                .iter()
                .fold(p.all(), |acc, z| acc.intersection(p.down(z)));
            p.down(x).union(p.down(y)).is_subset(i(x, y)) && i(x, y).is_subset(cap)
        })
    }
}

fn violation(p: &Poset, axiom: &str, x: Elem, y: Elem) -> Error {
    Error::SelectionAxiomViolation {
        axiom: axiom.to_string(),
        witness: format!("({}, {})", p.label(x), p.label(y)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::hexagon;

    #[test]
    fn builtins_validate_on_hexagon() {
        let p = hexagon();
        let u = LocalSelection::union(&p);
        let f = LocalSelection::frink(&p);
        u.validate(&p).unwrap();
        f.validate(&p).unwrap();
        assert!(u.is_within(&f));
        let [a, b, c] = ["a", "b", "c"].map(|l| p.elem(l).unwrap());
        let ab = p.set_of(&["0", "a", "b"]).unwrap();
        assert_eq!(u.get(a, b), ab);
        assert_eq!(f.get(a, b), ab);
        assert_eq!(f.get(c, a), p.down(c));
    }

    #[test]
    fn custom_rejects_non_down_set_and_bad_i2() {
        let p = hexagon();
        let [a, b, c, d] = ["a", "b", "c", "d"].map(|l| p.elem(l).unwrap());
        let cd = (c, d, p.down(c).union(p.down(d)));
        let err = LocalSelection::custom(&p, "s", &[(a, b, p.set_of(&["a", "b"]).unwrap()), cd])
            .unwrap_err();
        assert!(
            matches!(err, Error::SelectionAxiomViolation { ref axiom, .. } if axiom == "down-set")
        );
        let err = LocalSelection::custom(&p, "s", &[(c, a, p.down(a))]).unwrap_err();
        assert!(matches!(err, Error::SelectionAxiomViolation { ref axiom, .. } if axiom == "I2"));
    }

    #[test]
    fn custom_fills_and_checks_monotonicity() {
        let p = hexagon();
        let [a, b, c, d] = ["a", "b", "c", "d"].map(|l| p.elem(l).unwrap());
        let ab = p.set_of(&["0", "a", "b"]).unwrap();
        let mut entries = vec![(a, b, ab)];
        // c, d incomparable: a large choice
        let cd = p.set_of(&["0", "a", "b", "c", "d"]).unwrap();
        entries.push((c, d, cd));
        for (x, y) in [(a, d), (b, c), (b, d), (a, c)] {
            if !p.comparable(x, y) {
                entries.push((x, y, p.down(x).union(p.down(y))));
            }
        }
        let sel = LocalSelection::custom(&p, "big", &entries).unwrap();
        assert_eq!(sel.get(d, c), cd);
        // missing pair
        assert!(LocalSelection::custom(&p, "s", &[]).is_err());
    }
}
