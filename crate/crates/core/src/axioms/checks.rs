//! Whole-table predicates that are not plain axiom sweeps.

use super::{Ctx, Op, STRONG};
use crate::elemset::{Elem, ElemSet};
use crate::error::{Error, Result};
use crate::extend::normal_extension;
use crate::poset::Poset;
use crate::pseudo::{star_table, MissingWitness};
use crate::table::{PartialTable, TotalTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EspCheck {
    Holds,
    /// The poset has no sp table.
    NotSp(MissingWitness),
    /// The restriction differs from `*` at `(x, y)`.
    Differs {
        x: Elem,
        y: Elem,
        got: Elem,
        expected: Elem,
    },
}

impl EspCheck {
    pub fn holds(&self) -> bool {
        *self == EspCheck::Holds
    }
}

/// Whether `t` restricts to the sp table of `p`.
pub fn is_esp(p: &Poset, t: &TotalTable) -> EspCheck {
    let s = match star_table(p) {
        Ok(s) => s,
        Err(w) => return EspCheck::NotSp(w),
    };
    esp_against(p, &s, t)
}

pub(crate) fn esp_against(p: &Poset, s: &PartialTable, t: &TotalTable) -> EspCheck {
    for x in p.elems() {
        for y in p.down(x) {
            let expected = s.get(x, y).expect("star cell");
            let got = t.get(x, y);
            if got != expected {
                return EspCheck::Differs {
                    x,
                    y,
                    got,
                    expected,
                };
            }
        }
    }
    EspCheck::Holds
}

/// First failing pair for each implicativity law; `None` means it holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Implicativity {
    /// `x ≤ y ⇔ x→y = 1_x`.
    pub left: Option<(Elem, Elem)>,
    /// `x ≤ y ⇔ x→y = 1_y`.
    pub right: Option<(Elem, Elem)>,
}

impl Implicativity {
    pub fn is_left(&self) -> bool {
        self.left.is_none()
    }

    pub fn is_right(&self) -> bool {
        self.right.is_none()
    }
}

pub fn implicativity(p: &Poset, t: &TotalTable) -> Result<Implicativity> {
    let tops: Vec<Elem> = p
        .elems()
        .map(|x| {
            p.section_top(x)
                .ok_or_else(|| Error::NotSectionallyBounded(p.label(x).to_string()))
        })
        .collect::<Result<_>>()?;
    let first = |which: fn(Elem, Elem) -> Elem| {
        p.elems()
            .flat_map(|x| p.elems().map(move |y| (x, y)))
            .find(|&(x, y)| p.leq(x, y) != (t.get(x, y) == tops[which(x, y)]))
    };
    Ok(Implicativity {
        left: first(|x, _| x),
        right: first(|_, y| y),
    })
}

/// First pair violating `x ≤ (x→y)→y`.
pub fn is_strong(p: &Poset, t: &TotalTable) -> Option<(Elem, Elem)> {
    STRONG
        .first_violation(&Ctx::new(p, t.cells()))
        .map(|w| (w[0], w[1]))
}

/// First `(v, x, y)` violating
/// `v ≤ x→y ⇔ ∃ u ≥ v, z ≥ x with u ∧_y z = y`.
pub fn jext_characterization(p: &Poset, t: &TotalTable) -> Option<(Elem, Elem, Elem)> {
    for v in p.elems() {
        for x in p.elems() {
            for y in p.elems() {
                let lhs = p.leq(v, t.get(x, y));
                let rhs = p
                    .up(v)
                    .iter()
                    .any(|u| p.up(x).iter().any(|z| p.meet_over(u, z, y) == Some(y)));
                if lhs != rhs {
                    return Some((v, x, y));
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormalCheck {
    /// `t` equals the (total) normal extension of `s`.
    pub normal: bool,
    /// First cell where `t` differs from the normal rule, or where the
    /// rule is undefined.
    pub witness: Option<(Elem, Elem)>,
    /// First violation of the bound-witness characterization.
    pub characterization: Option<(Elem, Elem, Elem)>,
}

/// `s` must be the sp table of `p`.
pub fn is_normal(p: &Poset, s: &PartialTable, t: &TotalTable) -> NormalCheck {
    let r = normal_extension(p, s);
    let witness = match (&r.table, r.undefined.first()) {
        (Some(n), _) => n.first_difference(t),
        (None, Some(u)) => Some((u.x, u.y)),
        (None, None) => unreachable!("partial result without gaps"),
    };
    NormalCheck {
        normal: witness.is_none(),
        witness,
        characterization: jext_characterization(p, t),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubalgebraCheck {
    pub closed: bool,
    /// The induced structure is again sp (partial) or esp (total).
    pub induced_is_same_kind: bool,
    /// First cell, in the ambient indexing, where the induced operation
    /// differs from the sub-poset's own sp table.
    pub mismatch: Option<(Elem, Elem)>,
    /// First pair whose value leaves the subset.
    pub escape: Option<(Elem, Elem)>,
}

pub fn subalgebra_closed(p: &Poset, op: Op, subset: ElemSet) -> Result<SubalgebraCheck> {
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    let members: Vec<Elem> = subset.iter().collect();
    let escape = members
        .iter()
        .flat_map(|&x| members.iter().map(move |&y| (x, y)))
        .find(|&(x, y)| op.cells()[x * p.n() + y].is_some_and(|v| !subset.contains(v)));
    if escape.is_some() {
        return Ok(SubalgebraCheck {
            closed: false,
            induced_is_same_kind: false,
            mismatch: None,
            escape,
        });
    }
    let sub = p.induced(&format!("{}|sub", p.name()), subset)?;
    let back = |(i, j): (Elem, Elem)| (members[i], members[j]);
    let (same, mismatch) = match op {
        Op::Partial(s) => {
            let induced = s
                .restrict_to(p, &sub, &members)
                .expect("closed subset restricts");
            match star_table(&sub) {
                Ok(own) => {
                    let diff = (0..sub.n())
                        .flat_map(|i| (0..sub.n()).map(move |j| (i, j)))
                        .find(|&(i, j)| own.get(i, j) != induced.get(i, j));
                    (diff.is_none(), diff.map(back))
                }
                Err(w) => (false, Some(back((w.x, w.y)))),
            }
        }
        Op::Total(t) => {
            let induced = t.restrict_to(&members).expect("closed subset restricts");
            match is_esp(&sub, &induced) {
                EspCheck::Holds => (true, None),
                EspCheck::NotSp(w) => (false, Some(back((w.x, w.y)))),
                EspCheck::Differs { x, y, .. } => (false, Some(back((x, y)))),
            }
        }
    };
    Ok(SubalgebraCheck {
        closed: true,
        induced_is_same_kind: same,
        mismatch,
        escape: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{hexagon, two_chains};
    use crate::extend::{natural_extension, pure_extension};
    use crate::pseudo::{notion_table, Notion};

    #[test]
    fn esp_and_strongness_on_hexagon() {
        let p = hexagon();
        let s = star_table(&p).unwrap();
        let pure = pure_extension(&p, &s).unwrap();
        assert!(is_esp(&p, &pure).holds());
        assert_eq!(is_strong(&p, &pure), None);
        let rp = notion_table(&p, Notion::Rp).table.unwrap();
        let [a, c, d] = ["a", "c", "d"].map(|l| p.elem(l).unwrap());
        assert_eq!(
            is_esp(&p, &rp),
            EspCheck::Differs {
                x: c,
                y: a,
                got: a,
                expected: d
            }
        );
        let n = is_normal(&p, &s, &pure);
        assert!(!n.normal);
    }

    #[test]
    fn natural_on_two_chains_is_left_only() {
        let p = two_chains();
        let s = star_table(&p).unwrap();
        let t = natural_extension(&p, &s).unwrap();
        let imp = implicativity(&p, &t).unwrap();
        assert!(imp.is_left());
        let [a, c] = ["a", "c"].map(|l| p.elem(l).unwrap());
        assert_eq!(imp.right, Some((a, c)));
    }

    #[test]
    fn subalgebra_of_full_carrier() {
        let p = hexagon();
        let s = star_table(&p).unwrap();
        let r = subalgebra_closed(&p, Op::Partial(&s), p.all()).unwrap();
        assert!(r.closed && r.induced_is_same_kind);
        assert_eq!(
            subalgebra_closed(&p, Op::Partial(&s), ElemSet::EMPTY),
            Err(Error::EmptySubset)
        );
    }
}
