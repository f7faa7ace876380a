//! Extension rules: total operations agreeing with `*` on `y ≤ x`.
//!
//! Max/min rules may fail pointwise; they return an [`ExtensionResult`]
//! carrying either the table or every gap. Rules with an equivalent second
//! formulation compute both and fail loudly on disagreement.

use crate::elemset::{Elem, ElemSet};
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::pseudo::{greatest_of, least_of, Gap};
use crate::selection::LocalSelection;
use crate::table::{PartialTable, TotalTable};

/// A pair at which a rule has no value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UndefinedCell {
    pub x: Elem,
    pub y: Elem,
    pub gap: Gap,
}

/// The table, when total, or the cells where the rule fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionResult {
    pub table: Option<TotalTable>,
    pub undefined: Vec<UndefinedCell>,
    /// Row-major values, `None` where the rule is undefined.
    pub cells: Vec<Option<Elem>>,
}

impl ExtensionResult {
    pub fn from_fn(
        n: usize,
        mut f: impl FnMut(Elem, Elem) -> std::result::Result<Elem, Gap>,
    ) -> ExtensionResult {
        let mut cells = Vec::with_capacity(n * n);
        let mut undefined = Vec::new();
        for x in 0..n {
            for y in 0..n {
                match f(x, y) {
                    Ok(v) => cells.push(Some(v)),
                    Err(gap) => {
                        cells.push(None);
                        undefined.push(UndefinedCell { x, y, gap });
                    }
                }
            }
        }
        let table = if undefined.is_empty() {
            TotalTable::from_cells(n, cells.clone())
        } else {
            None
        };
        ExtensionResult {
            table,
            undefined,
            cells,
        }
    }

    pub fn is_total(&self) -> bool {
        self.table.is_some()
    }

    /// The value at `(x, y)`, if defined.
    pub fn get(&self, x: Elem, y: Elem) -> Option<Elem> {
        let n = self.cells.len().isqrt();
        self.cells[x * n + y]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Pure,
    Natural,
    NaturalMin,
    Normal,
    INatural,
    IMin,
    DualJ,
    M,
    Mlb,
    /// `min{x*z : z ≤ x, y}`; no totality claim.
    MeetMin,
}

impl Method {
    pub const ALL: [Method; 10] = [
        Method::Pure,
        Method::Natural,
        Method::NaturalMin,
        Method::Normal,
        Method::INatural,
        Method::IMin,
        Method::DualJ,
        Method::M,
        Method::Mlb,
        Method::MeetMin,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Method::Pure => "pure",
            Method::Natural => "natural",
            Method::NaturalMin => "natural-min",
            Method::Normal => "normal",
            Method::INatural => "i-natural",
            Method::IMin => "i-min",
            Method::DualJ => "dual-j",
            Method::M => "m",
            Method::Mlb => "mlb",
            Method::MeetMin => "meet-min",
        }
    }

    pub fn needs_selection(self) -> bool {
        matches!(self, Method::INatural | Method::IMin)
    }

    pub fn parse(s: &str) -> Option<Method> {
        Method::ALL.into_iter().find(|m| m.id() == s)
    }
}

/// Runs `method`; `s` must be the star table of `p`.
pub fn extend(
    p: &Poset,
    s: &PartialTable,
    method: Method,
    sel: Option<&LocalSelection>,
) -> Result<ExtensionResult> {
    let total = |t: TotalTable| ExtensionResult {
        cells: t.cells().to_vec(),
        table: Some(t),
        undefined: Vec::new(),
    };
    let selection = || sel.ok_or_else(|| Error::MissingSelection(method.id().to_string()));
    Ok(match method {
        Method::Pure => total(pure_extension(p, s)?),
        Method::Natural => total(natural_extension(p, s)?),
        Method::NaturalMin => total(natural_min_form(p, s)?),
        Method::Normal => normal_extension(p, s),
        Method::INatural => i_natural_extension(p, selection()?),
        Method::IMin => i_min_extension(p, s, selection()?),
        Method::DualJ => dual_j_extension(p, s)?,
        Method::M => total(m_extension(p, s)?),
        Method::Mlb => mlb_extension(p),
        Method::MeetMin => meet_min_extension(p, s),
    })
}

fn star(s: &PartialTable, x: Elem, y: Elem) -> Elem {
    s.get(x, y).expect("star cell on its domain")
}

fn top(p: &Poset, x: Elem) -> Result<Elem> {
    p.section_top(x)
        .ok_or_else(|| Error::NotSectionallyBounded(p.label(x).to_string()))
}

fn disagreement(p: &Poset, what: &str, x: Elem, y: Elem) -> Error {
    Error::InternalDisagreement {
        what: what.to_string(),
        x: p.label(x).to_string(),
        y: p.label(y).to_string(),
    }
}

/// `x*y` if `y ≤ x`; `1_x` if `x < y`; `y` otherwise.
pub fn pure_extension(p: &Poset, s: &PartialTable) -> Result<TotalTable> {
    let mut values = Vec::with_capacity(p.n() * p.n());
    for x in p.elems() {
        for y in p.elems() {
            values.push(if p.leq(y, x) {
                star(s, x, y)
            } else if p.lt(x, y) {
                top(p, x)?
            } else {
                y
            });
        }
    }
    TotalTable::new(p.n(), values)
}

/// `x*y` if `y ≤ x`, else `1_y`; checked against the max-form.
pub fn natural_extension(p: &Poset, s: &PartialTable) -> Result<TotalTable> {
    let mut values = Vec::with_capacity(p.n() * p.n());
    for x in p.elems() {
        for y in p.elems() {
            values.push(if p.leq(y, x) {
                star(s, x, y)
            } else {
                top(p, y)?
            });
        }
    }
    let t = TotalTable::new(p.n(), values)?;
    let max_form = natural_max_form(p);
    for x in p.elems() {
        for y in p.elems() {
            if max_form.get(x, y) != Some(t.get(x, y)) {
                return Err(disagreement(p, "natural rule and its max-form", x, y));
            }
        }
    }
    Ok(t)
}

/// `max{u ≥ y : u ⊥_y x}`.
pub fn natural_max_form(p: &Poset) -> ExtensionResult {
    ExtensionResult::from_fn(p.n(), |x, y| {
        let set: ElemSet = p
            .up(y)
            .iter()
            .filter(|&u| p.disjoint_over(u, x, y))
            .collect();
        greatest_of(p, set)
    })
}

/// `min{z*y : z ∈ [y, x] ∪ {y}}`, cross-checked against the second
/// min-form over `((x] ∪ (y]) ∩ [y)` and the max-form.
pub fn natural_min_form(p: &Poset, s: &PartialTable) -> Result<TotalTable> {
    let min_over = |zs: ElemSet, y: Elem| {
        let values: ElemSet = zs.iter().map(|z| star(s, z, y)).collect();
        least_of(p, values)
    };
    let first = ExtensionResult::from_fn(p.n(), |x, y| min_over(p.segment(y, x).with(y), y));
    let second = ExtensionResult::from_fn(p.n(), |x, y| {
        min_over(p.down(x).union(p.down(y)).intersection(p.up(y)), y)
    });
    let max_form = natural_max_form(p);
    let Some(t) = first.table else {
        let u = first.undefined[0];
        return Err(disagreement(p, "natural min-form totality", u.x, u.y));
    };
    for x in p.elems() {
        for y in p.elems() {
            let v = Some(t.get(x, y));
            if second.get(x, y) != v {
                return Err(disagreement(p, "the two natural min-forms", x, y));
            }
            if max_form.get(x, y) != v {
                return Err(disagreement(p, "natural min-form and max-form", x, y));
            }
        }
    }
    Ok(t)
}

/// `max{z*y : x, y ≤ z}`.
pub fn normal_extension(p: &Poset, s: &PartialTable) -> ExtensionResult {
    ExtensionResult::from_fn(p.n(), |x, y| {
        let ub = p.up(x).intersection(p.up(y));
        let values: ElemSet = ub.iter().map(|z| star(s, z, y)).collect();
        greatest_of(p, values)
    })
}

/// `max{u : (u] ∩ I(x, y) ∩ [y) = {y}}`.
pub fn i_natural_extension(p: &Poset, sel: &LocalSelection) -> ExtensionResult {
    ExtensionResult::from_fn(p.n(), |x, y| {
        let base = sel.get(x, y).intersection(p.up(y));
        let cut = ElemSet::singleton(y);
        let set: ElemSet = p
            .elems()
            .filter(|&u| p.down(u).intersection(base) == cut)
            .collect();
        greatest_of(p, set)
    })
}

/// `min{z*y : z ∈ I(x, y) ∩ [y)}`.
pub fn i_min_extension(p: &Poset, s: &PartialTable, sel: &LocalSelection) -> ExtensionResult {
    ExtensionResult::from_fn(p.n(), |x, y| {
        let zs = sel.get(x, y).intersection(p.up(y));
        let values: ElemSet = zs.iter().map(|z| star(s, z, y)).collect();
        least_of(p, values)
    })
}

/// `min{z*y : [x) ∩ [y) ⊆ [z) ⊆ [y)}`, cross-checked against the
/// Frink-selection min rule.
pub fn dual_j_extension(p: &Poset, s: &PartialTable) -> Result<ExtensionResult> {
    let r = ExtensionResult::from_fn(p.n(), |x, y| {
        let common = p.up(x).intersection(p.up(y));
        let values: ElemSet = p
            .up(y)
            .iter()
            .filter(|&z| common.is_subset(p.up(z)))
            .map(|z| star(s, z, y))
            .collect();
        least_of(p, values)
    });
    let check = i_min_extension(p, s, &LocalSelection::frink(p));
    if r != check {
        let (x, y) = first_mismatch(p, &r, &check);
        return Err(disagreement(p, "dual-j rule and Frink min rule", x, y));
    }
    Ok(r)
}

fn first_mismatch(p: &Poset, a: &ExtensionResult, b: &ExtensionResult) -> (Elem, Elem) {
    let gap_at = |r: &ExtensionResult, x, y| {
        r.undefined
            .iter()
            .find(|u| (u.x, u.y) == (x, y))
            .map(|u| u.gap)
    };
    for x in p.elems() {
        for y in p.elems() {
            if a.get(x, y) != b.get(x, y) || gap_at(a, x, y) != gap_at(b, x, y) {
                return (x, y);
            }
        }
    }
    (0, 0)
}

/// `x*(x ∧ y)` on lower semilattices, checked against
/// `max{u : u ∧ x = x ∧ y}`.
pub fn m_extension(p: &Poset, s: &PartialTable) -> Result<TotalTable> {
    let mut values = Vec::with_capacity(p.n() * p.n());
    for x in p.elems() {
        for y in p.elems() {
            let m = p.meet(x, y).ok_or_else(|| Error::NotMeetSemilattice {
                x: p.label(x).to_string(),
                y: p.label(y).to_string(),
            })?;
            values.push(star(s, x, m));
        }
    }
    let t = TotalTable::new(p.n(), values)?;
    for x in p.elems() {
        for y in p.elems() {
            let m = p.meet(x, y);
            let set: ElemSet = p.elems().filter(|&u| p.meet(u, x) == m).collect();
            if greatest_of(p, set) != Ok(t.get(x, y)) {
                return Err(Error::MextSchDisagreement {
                    x: p.label(x).to_string(),
                    y: p.label(y).to_string(),
                });
            }
        }
    }
    Ok(t)
}

/// `max{u : mlb(u, x) = mlb(x, y)}`.
pub fn mlb_extension(p: &Poset) -> ExtensionResult {
    ExtensionResult::from_fn(p.n(), |x, y| {
        let target = p.maximal_lower_bounds(x, y);
        let set: ElemSet = p
            .elems()
            .filter(|&u| p.maximal_lower_bounds(u, x) == target)
            .collect();
        greatest_of(p, set)
    })
}

/// `min{x*z : z ≤ x, y}`.
pub fn meet_min_extension(p: &Poset, s: &PartialTable) -> ExtensionResult {
    ExtensionResult::from_fn(p.n(), |x, y| {
        let lb = p.down(x).intersection(p.down(y));
        let values: ElemSet = lb.iter().map(|z| star(s, x, z)).collect();
        least_of(p, values)
    })
}

/// `(x ∨ y)*y` on upper semilattices.
pub fn join_extension(p: &Poset, s: &PartialTable) -> Option<TotalTable> {
    let mut values = Vec::with_capacity(p.n() * p.n());
    for x in p.elems() {
        for y in p.elems() {
            values.push(star(s, p.join(x, y)?, y));
        }
    }
    TotalTable::new(p.n(), values).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{chain, hexagon};
    use crate::pseudo::star_table;

    #[test]
    fn hexagon_rules() {
        let p = hexagon();
        let s = star_table(&p).unwrap();
        let e = |l| p.elem(l).unwrap();
        let pure = pure_extension(&p, &s).unwrap();
        assert_eq!(pure.get(e("a"), e("b")), e("b"));
        assert_eq!(pure.get(e("c"), e("d")), e("d"));
        let nat = natural_extension(&p, &s).unwrap();
        assert_eq!(nat.get(e("c"), e("d")), e("1"));
        assert_eq!(natural_min_form(&p, &s).unwrap(), nat);
        assert_eq!(
            i_natural_extension(&p, &LocalSelection::union(&p)).table,
            Some(nat.clone())
        );
        assert_eq!(
            i_min_extension(&p, &s, &LocalSelection::union(&p)).table,
            Some(nat)
        );

        let normal = normal_extension(&p, &s);
        let undefined: Vec<_> = normal.undefined.iter().map(|u| (u.x, u.y, u.gap)).collect();
        let cd = Gap::Antichain(p.set_of(&["c", "d"]).unwrap());
        assert_eq!(undefined, vec![(e("a"), e("b"), cd), (e("b"), e("a"), cd)]);

        let fnat = i_natural_extension(&p, &LocalSelection::frink(&p))
            .table
            .unwrap();
        assert_eq!(fnat.get(e("a"), e("b")), e("1"));
        assert_eq!(fnat.get(e("c"), e("d")), e("d"));

        let dj = dual_j_extension(&p, &s).unwrap();
        assert_eq!(dj.get(e("a"), e("b")), Some(e("1")));

        assert_eq!(mlb_extension(&p).get(e("a"), e("b")), Some(e("b")));
        assert!(matches!(
            m_extension(&p, &s),
            Err(Error::NotMeetSemilattice { .. })
        ));
    }

    #[test]
    fn chain_rules() {
        let p = chain(&["0", "a", "b", "1"]);
        let s = star_table(&p).unwrap();
        let m = m_extension(&p, &s).unwrap();
        assert_eq!(m.get(2, 1), 1);
        assert_eq!(mlb_extension(&p).table, Some(m.clone()));
        let normal = normal_extension(&p, &s).table.unwrap();
        for x in p.elems() {
            for y in p.elems() {
                assert_eq!(normal.get(x, y), if y < x { y } else { 3 });
            }
        }
        assert_eq!(join_extension(&p, &s), Some(normal.clone()));
        assert_eq!(dual_j_extension(&p, &s).unwrap().table, Some(normal));
    }
}
