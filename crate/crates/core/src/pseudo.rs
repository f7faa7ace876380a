//! Local pseudocomplements and the star-poset layer.
//!
//! The four notions (sp, rp, wrp, CLP) differ only in the comprehension
//! defining their candidate set; each value is that set's maximum.

use std::fmt;

use crate::axioms::{verify_lemma_suite, Op, PropertyReport, Suite};
use crate::elemset::{Elem, ElemSet};
use crate::error::{Error, Result};
use crate::extend::ExtensionResult;
use crate::poset::Poset;
use crate::table::{PartialTable, TotalTable};

/// Which local pseudocomplement to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Notion {
    /// `max{u : u ∧_y x = y}`.
    Sp,
    /// `max{u : (u] ∩ (x] ⊆ (y]}`.
    Rp,
    /// `max{u : (u] ∩ (x] = (y]}`.
    Wrp,
    /// `max{u : L([x) ∩ [y)) ∩ (u] = (y]}`.
    Clp,
}

impl Notion {
    pub fn id(self) -> &'static str {
        match self {
            Notion::Sp => "sp",
            Notion::Rp => "rp",
            Notion::Wrp => "wrp",
            Notion::Clp => "clp",
        }
    }
}

/// Why a max or min rule has no value at a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gap {
    /// The candidate set is empty.
    Empty,
    /// Several maximal (or minimal) candidates.
    Antichain(ElemSet),
}

impl fmt::Display for Gap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gap::Empty => f.write_str("no candidates"),
            Gap::Antichain(s) => write!(f, "antichain {s:?}"),
        }
    }
}

/// The greatest member of `set`, or why there is none.
pub fn greatest_of(p: &Poset, set: ElemSet) -> std::result::Result<Elem, Gap> {
    let top = p.maximal(set);
    match top.single() {
        Some(u) => Ok(u),
        None if top.is_empty() => Err(Gap::Empty),
        None => Err(Gap::Antichain(top)),
    }
}

/// The least member of `set`, or why there is none.
pub fn least_of(p: &Poset, set: ElemSet) -> std::result::Result<Elem, Gap> {
    let bottom = p.minimal(set);
    match bottom.single() {
        Some(u) => Ok(u),
        None if bottom.is_empty() => Err(Gap::Empty),
        None => Err(Gap::Antichain(bottom)),
    }
}

/// The defining set of `notion` at `(x, y)`.
pub fn candidates(p: &Poset, notion: Notion, x: Elem, y: Elem) -> ElemSet {
    let dx = p.down(x);
    let dy = p.down(y);
    let test = |u: Elem| match notion {
        Notion::Sp => p.meet_over(u, x, y) == Some(y),
        Notion::Rp => p.down(u).intersection(dx).is_subset(dy),
        Notion::Wrp => p.down(u).intersection(dx) == dy,
        Notion::Clp => p.frink_ideal(x, y).intersection(p.down(u)) == dy,
    };
    p.elems().filter(|&u| test(u)).collect()
}

pub fn complement(p: &Poset, notion: Notion, x: Elem, y: Elem) -> std::result::Result<Elem, Gap> {
    greatest_of(p, candidates(p, notion, x, y))
}

/// `x * y`, the pseudocomplement of `x` in `[y)`.
pub fn sp_complement(p: &Poset, x: Elem, y: Elem) -> Result<Option<Elem>> {
    if !p.leq(y, x) {
        return Err(Error::NotInSection {
            x: p.label(x).to_string(),
            y: p.label(y).to_string(),
        });
    }
    Ok(complement(p, Notion::Sp, x, y).ok())
}

/// `x * y` via `max{u : (u] ∩ (x] ∩ [y) = {y}}`.
pub fn sp_complement_set_form(p: &Poset, x: Elem, y: Elem) -> Option<Elem> {
    let cut = ElemSet::singleton(y);
    let set: ElemSet = p
        .elems()
        .filter(|&u| p.down(u).intersection(p.down(x)).intersection(p.up(y)) == cut)
        .collect();
    greatest_of(p, set).ok()
}

pub fn rp_complement(p: &Poset, x: Elem, y: Elem) -> Option<Elem> {
    complement(p, Notion::Rp, x, y).ok()
}

pub fn wrp_complement(p: &Poset, x: Elem, y: Elem) -> Option<Elem> {
    complement(p, Notion::Wrp, x, y).ok()
}

pub fn clp_complement(p: &Poset, x: Elem, y: Elem) -> Option<Elem> {
    complement(p, Notion::Clp, x, y).ok()
}

/// `1_x`, the greatest element of `[x)`.
pub fn section_top(p: &Poset, x: Elem) -> Option<Elem> {
    p.section_top(x)
}

/// A sectioned pair without a pseudocomplement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MissingWitness {
    pub x: Elem,
    pub y: Elem,
    pub gap: Gap,
}

/// The `*` table, or the first pair `y ≤ x` (row-major) lacking a value.
pub fn star_table(p: &Poset) -> std::result::Result<PartialTable, MissingWitness> {
    star_table_for(p, Notion::Sp)
}

/// The table of `notion` restricted to the star domain.
pub fn star_table_for(
    p: &Poset,
    notion: Notion,
) -> std::result::Result<PartialTable, MissingWitness> {
    let n = p.n();
    let mut cells = vec![None; n * n];
    for x in p.elems() {
        for y in p.down(x) {
            match complement(p, notion, x, y) {
                Ok(v) => cells[x * n + y] = Some(v),
                Err(gap) => return Err(MissingWitness { x, y, gap }),
            }
        }
    }
    Ok(PartialTable::new(p, cells).expect("star domain"))
}

/// Total table of `notion` over all pairs, with pointwise gaps.
pub fn notion_table(p: &Poset, notion: Notion) -> ExtensionResult {
    ExtensionResult::from_fn(p.n(), |x, y| complement(p, notion, x, y))
}

/// Whether `p` is sectionally pseudocomplemented.
pub fn is_sp_poset(p: &Poset) -> bool {
    star_table(p).is_ok()
}

/// Restriction of an arrow table to the star domain.
pub fn restrict(p: &Poset, t: &TotalTable) -> PartialTable {
    t.restrict(p)
}

/// Lettered properties of sp-complementation, checked on `s`.
pub fn verify_sp_properties(p: &Poset, s: &PartialTable) -> PropertyReport {
    verify_lemma_suite(p, Op::Partial(s), Suite::Sp, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{chain, hexagon, vee};

    fn el(p: &Poset, l: &str) -> Elem {
        p.elem(l).unwrap()
    }

    #[test]
    fn hexagon_values() {
        let p = hexagon();
        let e = |l| el(&p, l);
        assert_eq!(sp_complement(&p, e("c"), e("a")).unwrap(), Some(e("d")));
        assert_eq!(sp_complement(&p, e("a"), e("0")).unwrap(), Some(e("b")));
        assert_eq!(sp_complement(&p, e("c"), e("0")).unwrap(), Some(e("0")));
        assert!(matches!(
            sp_complement(&p, e("a"), e("c")),
            Err(Error::NotInSection { .. })
        ));
        assert_eq!(rp_complement(&p, e("c"), e("a")), Some(e("a")));
        assert_eq!(wrp_complement(&p, e("c"), e("a")), Some(e("a")));
        for x in p.elems() {
            assert_eq!(sp_complement(&p, x, x).unwrap(), p.section_top(x));
        }
    }

    #[test]
    fn vee_lacks_top_of_lowest_section() {
        let p = vee();
        assert_eq!(
            sp_complement(&p, el(&p, "a"), el(&p, "0")).unwrap(),
            Some(el(&p, "b"))
        );
        // [0) has two maximal elements, so 0*0 has no value
        let w = star_table(&p).unwrap_err();
        assert_eq!((w.x, w.y), (0, 0));
        assert_eq!(w.gap, Gap::Antichain(p.set_of(&["a", "b"]).unwrap()));
        assert_eq!(section_top(&p, el(&p, "0")), None);
    }

    #[test]
    fn set_form_agrees_on_chain() {
        let p = chain(&["0", "a", "b"]);
        for x in p.elems() {
            for y in p.down(x) {
                assert_eq!(
                    sp_complement(&p, x, y).unwrap(),
                    sp_complement_set_form(&p, x, y)
                );
            }
        }
    }
}
