//! Property suites: lettered consequences of the axiom systems, checked
//! exhaustively on concrete tables.

use std::fmt;
use std::str::FromStr;

use super::{check_system, Ctx, Item, Op, System, NRM0, NRM1, NRM2, NRM3};
use crate::elemset::Elem;
use crate::extend::i_natural_extension;
use crate::poset::Poset;
use crate::pseudo::star_table;
use crate::selection::LocalSelection;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Properties of sp-complementation (partial tables).
    Sp,
    /// Properties of esp-complementation.
    Esp,
    /// Consequences of (nrm1), with guarded groups.
    Jext,
    /// Properties of selection-natural extensions.
    INat,
    /// Selection-free rewriting of the selection condition.
    SimplI,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Sp,
        Suite::Esp,
        Suite::Jext,
        Suite::INat,
        Suite::SimplI,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Suite::Sp => "sp-prop",
            Suite::Esp => "esp-prop",
            Suite::Jext => "jext-prop",
            Suite::INat => "Inat-prop",
            Suite::SimplI => "simplI",
        }
    }

    pub fn needs_selection(self) -> bool {
        matches!(self, Suite::INat | Suite::SimplI)
    }

    pub fn for_partial(self) -> bool {
        self == Suite::Sp
    }

    fn items(self) -> &'static [(Item, Guard)] {
        match self {
            Suite::Sp => SP_PROP,
            Suite::Esp => ESP_PROP,
            Suite::Jext => JEXT_PROP,
            Suite::INat => INAT_PROP,
            Suite::SimplI => SIMPL_I,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Suite, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// Side condition under which a group of items is asserted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Guard {
    Always,
    Nrm1,
    Nrm1Nrm0,
    TopNrm1Nrm3,
    TopNrm123,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ItemOutcome {
    /// Held on every applicable instance; carries the applicable count.
    Pass(u64),
    Fail(Vec<Elem>),
    Skipped(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub suite: Suite,
    /// Whether the structure is of the kind the suite is stated for.
    pub hypothesis: bool,
    pub items: Vec<(&'static str, &'static [&'static str], ItemOutcome)>,
}

impl PropertyReport {
    pub fn holds(&self) -> bool {
        !self
            .items
            .iter()
            .any(|(_, _, o)| matches!(o, ItemOutcome::Fail(_)))
    }

    pub fn failures(&self) -> impl Iterator<Item = (&'static str, &[Elem])> {
        self.items.iter().filter_map(|(id, _, o)| match o {
            ItemOutcome::Fail(w) => Some((*id, w.as_slice())),
            _ => None,
        })
    }
}

/// Checks every lettered item of `suite` on `op`.
///
/// Panics if the table kind or selection does not fit the suite.
pub fn verify_lemma_suite(
    p: &Poset,
    op: Op,
    suite: Suite,
    sel: Option<&LocalSelection>,
) -> PropertyReport {
    assert_eq!(
        suite.for_partial(),
        op.is_partial(),
        "table kind for {suite}"
    );
    assert!(
        !suite.needs_selection() || sel.is_some(),
        "{suite} needs a selection"
    );
    let ctx = Ctx::new(p, op.cells()).with_selection(sel);
    let axiom = |s: &Item| s.first_violation(&ctx).is_none();
    let top = p.greatest_element().is_some();
    let guard_holds = |g: Guard| match g {
        Guard::Always => true,
        Guard::Nrm1 => axiom(&NRM1),
        Guard::Nrm1Nrm0 => axiom(&NRM1) && axiom(&NRM0),
        Guard::TopNrm1Nrm3 => top && axiom(&NRM1) && axiom(&NRM3),
        Guard::TopNrm123 => top && axiom(&NRM1) && axiom(&NRM2) && axiom(&NRM3),
    };
    let items = suite
        .items()
        .iter()
        .map(|(it, g)| {
            let outcome = if !guard_holds(*g) {
                ItemOutcome::Skipped(guard_text(*g))
            } else if let Some(w) = it.first_violation(&ctx) {
                ItemOutcome::Fail(w)
            } else {
                ItemOutcome::Pass(it.applicable_instances(&ctx))
            };
            (it.id, it.vars, outcome)
        })
        .collect();
    let hypothesis = match (suite, op) {
        (Suite::Sp, Op::Partial(s)) => star_table(p).is_ok_and(|t| t == *s),
        (Suite::Esp, Op::Total(t)) => {
            check_system(p, Op::Total(t), System::Esp, None).is_ok_and(|r| r.holds)
        }
        (Suite::Jext, _) => guard_holds(Guard::Nrm1),
        (Suite::INat, Op::Total(t)) => sel
            .map(|s| i_natural_extension(p, s).table.as_ref() == Some(t))
            .unwrap_or(false),
        _ => true,
    };
    PropertyReport {
        suite,
        hypothesis,
        items,
    }
}

fn guard_text(g: Guard) -> &'static str {
    match g {
        Guard::Always => "",
        Guard::Nrm1 => "nrm1 fails",
        Guard::Nrm1Nrm0 => "nrm1 or nrm0 fails",
        Guard::TopNrm1Nrm3 => "no greatest element, or nrm1 or nrm3 fails",
        Guard::TopNrm123 => "no greatest element, or one of nrm1-nrm3 fails",
    }
}

macro_rules! lemma {
    ($id:literal, [$($v:literal),*], |$c:ident, $a:ident| $body:expr) => {
        Item {
            id: $id,
            vars: &[$($v),*],
            pred: {
                fn pred($c: &Ctx, $a: &[Elem]) -> Option<bool> {
                    $body
                }
                pred
            },
        }
    };
}

fn when(cond: bool, concl: impl FnOnce() -> Option<bool>) -> Option<bool> {
    if cond {
        concl()
    } else {
        None
    }
}

use Guard::*;

static SP_PROP: &[(Item, Guard)] = &[
    (
        lemma!("a", ["x", "y"], |c, a| {
            let (x, y) = (a[0], a[1]);
            Some(c.le(y, c.at(x, y)?))
        }),
        Always,
    ),
    (
        lemma!("b", ["x", "y"], |c, a| {
            let (x, y) = (a[0], a[1]);
            Some(c.p.disjoint_over(c.at(x, y)?, x, y))
        }),
        Always,
    ),
    (
        lemma!("c", ["x", "y", "z"], |c, a| {
            let (x, y, z) = (a[0], a[1], a[2]);
            when(c.le(x, y), || Some(c.le(c.at(y, z)?, c.at(x, z)?)))
        }),
        Always,
    ),
    (
        lemma!("d", ["x", "y", "z"], |c, a| {
            let (x, y, z) = (a[0], a[1], a[2]);
            let v = c.at(y, z)?;
            when(c.le(x, v), || Some(c.le(y, c.at(x, z)?)))
        }),
        Always,
    ),
    (
        lemma!("e", ["x", "y"], |c, a| {
            let (x, y) = (a[0], a[1]);
            let v = c.at(x, y)?;
            Some(c.le(x, c.at(v, y)?))
        }),
        Always,
    ),
    (
        lemma!("f", ["x", "y"], |c, a| {
            let (x, y) = (a[0], a[1]);
            let v = c.at(x, y)?;
            Some(c.le(y, c.at(v, y)?))
        }),
        Always,
    ),
    (
        lemma!("g", ["x", "y"], |c, a| {
            let (x, y) = (a[0], a[1]);
            when(c.le(y, x), || Some(c.le(x, c.at(y, y)?)))
        }),
        Always,
    ),
    (
        lemma!("h", ["x", "y"], |c, a| {
            let (x, y) = (a[0], a[1]);
            when(c.le(y, x), || Some(c.at(c.at(y, y)?, x)? == x))
        }),
        Always,
    ),
    (
        lemma!("i", ["x", "y"], |c, a| {
            let (x, y) = (a[0], a[1]);
            let v = c.at(x, y)?;
            let w = c.at(v, y)?;
            Some(c.at(w, y)? == v)
        }),
        Always,
    ),
    (
        lemma!("j", ["x", "y"], |c, a| {
            let (x, y) = (a[0], a[1]);
            let v = c.at(x, y)?;
            when(c.le(x, v), || Some(c.le(x, y)))
        }),
        Always,
    ),
    (
        lemma!("k", ["x", "y"], |c, a| {
            let (x, y) = (a[0], a[1]);
            when(c.le(y, x), || Some(c.at(x, x)? == c.at(y, y)?))
        }),
        Always,
    ),
    (
        lemma!("l", ["x", "y"], |c, a| {
            let (x, y) = (a[0], a[1]);
            let v = c.at(x, y)?;
            when(v == c.at(y, y)?, || Some(x == y))
        }),
        Always,
    ),
    (
        lemma!("m", ["x", "y", "z"], |c, a| {
            let (x, y, z) = (a[0], a[1], a[2]);
            when(c.is_mlb(z, x, y), || Some(c.le(x, c.at(y, z)?)))
        }),
        Always,
    ),
];

static ESP_PROP: &[(Item, Guard)] = &[
    (
        lemma!("a", ["x", "y"], |c, a| {
            let (x, y) = (a[0], a[1]);
            when(c.le(y, x), || Some(c.le(y, c.at(x, y)?)))
        }),
        Always,
    ),
    (
        lemma!("b", ["x", "y"], |c, a| {
            let (x, y) = (a[0], a[1]);
            when(c.le(y, x), || Some(c.le(x, c.at(c.at(x, y)?, y)?)))
        }),
        Always,
    ),
    (
        lemma!("c", ["x", "y", "z"], |c, a| {
            let (x, y, z) = (a[0], a[1], a[2]);
            when(c.le(z, x) && c.le(z, y) && c.le(x, c.at(y, z)?), || {
                Some(c.le(y, c.at(x, z)?))
            })
        }),
        Always,
    ),
    (
        lemma!("d", ["x", "y"], |c, a| {
            let (x, y) = (a[0], a[1]);
            when(c.le(y, x), || Some(c.le(y, c.at(c.at(x, y)?, y)?)))
        }),
        Always,
    ),
    (
        lemma!("e", ["x", "y"], |c, a| {
            let (x, y) = (a[0], a[1]);
            when(c.le(y, x), || {
                let v = c.at(x, y)?;
                Some(c.at(c.at(v, y)?, y)? == v)
            })
        }),
        Always,
    ),
    (
        lemma!("f", ["x"], |c, a| {
            let x = a[0];
            Some(Some(c.at(x, x)?) == c.p.section_top(x))
        }),
        Always,
    ),
    (
        lemma!("g", ["x", "y"], |c, a| {
            let (x, y) = (a[0], a[1]);
            when(c.le(y, x), || {
                Some(c.p.section_top(y).is_some_and(|t| c.le(x, t)))
            })
        }),
        Always,
    ),
    (
        lemma!("h", ["x", "y"], |c, a| {
            let (x, y) = (a[0], a[1]);
            when(c.le(y, x), || {
                let t = c.p.section_top(y)?;
                Some(c.at(t, x)? == x)
            })
        }),
        Always,
    ),
    (
        lemma!("i", ["x", "y"], |c, a| {
            let (x, y) = (a[0], a[1]);
            when(c.le(y, x), || {
                Some(c.p.section_top(x) == c.p.section_top(y))
            })
        }),
        Always,
    ),
];

static JEXT_PROP: &[(Item, Guard)] = &[
    (
        lemma!("a", ["x", "y"], |c, a| {
            let (x, y) = (a[0], a[1]);
            Some(c.le(x, c.at(c.at(x, y)?, y)?))
        }),
        Nrm1,
    ),
    (
        lemma!("b", ["x", "y", "z"], |c, a| {
            let (x, y, z) = (a[0], a[1], a[2]);
            when(c.le(x, y), || Some(c.le(c.at(y, z)?, c.at(x, z)?)))
        }),
        Nrm1,
    ),
    (
        lemma!("c", ["x", "y"], |c, a| {
            let (x, y) = (a[0], a[1]);
            let v = c.at(x, y)?;
            Some(c.at(c.at(v, y)?, y)? == v)
        }),
        Nrm1,
    ),
    (
        lemma!("d", ["x", "y"], |c, a| {
            let (x, y) = (a[0], a[1]);
            Some(c.le(x, c.at(y, y)?))
        }),
        Nrm1Nrm0,
    ),
    (
        lemma!("e", ["x"], |c, a| {
            let x = a[0];
            Some(Some(c.at(x, x)?) == c.p.greatest_element())
        }),
        TopNrm1Nrm3,
    ),
    (
        lemma!("f", ["x", "y"], |c, a| {
            let (x, y) = (a[0], a[1]);
            Some(c.le(y, c.at(x, y)?))
        }),
        TopNrm1Nrm3,
    ),
    (
        lemma!("g", ["x", "y"], |c, a| {
            let (x, y) = (a[0], a[1]);
            Some(c.le(y, c.at(c.at(x, y)?, y)?))
        }),
        TopNrm1Nrm3,
    ),
    (
        lemma!("h", ["x"], |c, a| {
            let one = c.p.greatest_element()?;
            Some(c.at(a[0], one)? == one)
        }),
        TopNrm1Nrm3,
    ),
    (
        lemma!("i", ["x"], |c, a| {
            let one = c.p.greatest_element()?;
            Some(c.at(one, a[0])? == a[0])
        }),
        TopNrm123,
    ),
    (
        lemma!("j", ["x", "y"], |c, a| {
            let (x, y) = (a[0], a[1]);
            let one = c.p.greatest_element()?;
            Some(c.le(x, y) == (c.at(x, y)? == one))
        }),
        TopNrm123,
    ),
];

static INAT_PROP: &[(Item, Guard)] = &[
    (
        lemma!("a", ["x", "y"], |c, a| {
            let (x, y) = (a[0], a[1]);
            Some(c.le(y, c.at(x, y)?))
        }),
        Always,
    ),
    (
        lemma!("b", ["x", "y"], |c, a| {
            let (x, y) = (a[0], a[1]);
            Some(c.le(y, c.at(c.at(x, y)?, y)?))
        }),
        Always,
    ),
    (
        lemma!("c", ["x", "y"], |c, a| {
            let (x, y) = (a[0], a[1]);
            when(c.le(x, y), || {
                let v = c.at(x, y)?;
                Some(Some(v) == c.p.section_top(x) && Some(v) == c.p.section_top(y))
            })
        }),
        Always,
    ),
    (
        lemma!("d", ["x", "y", "z"], |c, a| {
            let (x, y, z) = (a[0], a[1], a[2]);
            when(c.le(x, y), || Some(c.le(c.at(y, z)?, c.at(x, z)?)))
        }),
        Always,
    ),
    (
        lemma!("e", ["x", "y", "z"], |c, a| {
            let (x, y, z) = (a[0], a[1], a[2]);
            when(c.le(z, y) && c.le(x, c.at(y, z)?), || {
                Some(c.le(y, c.at(x, z)?))
            })
        }),
        Always,
    ),
    (
        lemma!("f", ["x", "y"], |c, a| {
            let (x, y) = (a[0], a[1]);
            let v = c.at(x, y)?;
            Some(c.p.section_top(y).is_some_and(|t| c.le(v, t)))
        }),
        Always,
    ),
    (
        lemma!("g", ["x", "y"], |c, a| {
            let (x, y) = (a[0], a[1]);
            let t = c.p.section_top(y)?;
            Some(c.at(x, t)? == t)
        }),
        Always,
    ),
];

static SIMPL_I: &[(Item, Guard)] = &[
    (
        lemma!("a", ["u", "x", "y"], |c, a| {
            let (u, x, y) = (a[0], a[1], a[2]);
            let i = c.sel?.get(x, y);
            let lhs =
                c.p.down(u)
                    .intersection(i)
                    .intersection(c.p.up(y))
                    .without(y)
                    .is_empty();
            let rhs = i.iter().all(|z| c.p.disjoint_over(u, z, y));
            Some(lhs == rhs)
        }),
        Always,
    ),
    (
        lemma!("b", ["u", "x", "y"], |c, a| {
            let (u, x, y) = (a[0], a[1], a[2]);
            let i = c.sel?.get(x, y);
            let cut = c.p.down(u).intersection(i).intersection(c.p.up(y));
            let lhs = cut.single() == Some(y);
            let rhs = i
                .intersection(c.p.up(y))
                .iter()
                .all(|z| c.p.meet_over(u, z, y) == Some(y));
            Some(lhs == rhs)
        }),
        Always,
    ),
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{chain, hexagon};
    use crate::extend::{natural_extension, pure_extension};
    use crate::table::{PartialTable, TotalTable};

    #[test]
    fn sp_suite_on_hexagon_star() {
        let p = hexagon();
        let s = star_table(&p).unwrap();
        let r = verify_lemma_suite(&p, Op::Partial(&s), Suite::Sp, None);
        assert!(r.holds(), "{r:?}");
        assert!(r.hypothesis);
        assert_eq!(r.items.len(), 13);
    }

    #[test]
    fn sp_suite_reports_mlb_failure_on_rp_star() {
        let p = hexagon();
        let rp = crate::pseudo::notion_table(&p, crate::pseudo::Notion::Rp)
            .table
            .unwrap();
        let s = rp.restrict(&p);
        let r = verify_lemma_suite(&p, Op::Partial(&s), Suite::Sp, None);
        let [c, d, a] = ["c", "d", "a"].map(|l| p.elem(l).unwrap());
        assert!(!r.hypothesis);
        assert_eq!(
            r.failures().collect::<Vec<_>>(),
            vec![("m", &[c, d, a][..])]
        );
    }

    #[test]
    fn jext_guards_skip_on_pure_hexagon() {
        let p = hexagon();
        let s = star_table(&p).unwrap();
        let t = pure_extension(&p, &s).unwrap();
        let r = verify_lemma_suite(&p, Op::Total(&t), Suite::Esp, None);
        assert!(r.holds() && r.hypothesis);
        let r = verify_lemma_suite(&p, Op::Total(&t), Suite::Jext, None);
        // the pure table violates nrm1, so every group is skipped
        assert!(!r.hypothesis);
        assert!(r
            .items
            .iter()
            .all(|(_, _, o)| matches!(o, ItemOutcome::Skipped(_))));
    }

    #[test]
    fn inat_and_simpl_on_natural_chain() {
        let p = chain(&["0", "a", "1"]);
        let s = star_table(&p).unwrap();
        let t = natural_extension(&p, &s).unwrap();
        let sel = LocalSelection::union(&p);
        for suite in [Suite::INat, Suite::SimplI] {
            let r = verify_lemma_suite(&p, Op::Total(&t), suite, Some(&sel));
            assert!(r.holds() && r.hypothesis, "{r:?}");
        }
    }

    #[test]
    fn singleton_is_vacuous() {
        let p = chain(&["x"]);
        let s = PartialTable::new(&p, vec![Some(0)]).unwrap();
        assert!(verify_lemma_suite(&p, Op::Partial(&s), Suite::Sp, None).holds());
        let t = TotalTable::new(1, vec![0]).unwrap();
        let sel = LocalSelection::union(&p);
        for suite in [Suite::Esp, Suite::Jext, Suite::INat, Suite::SimplI] {
            assert!(verify_lemma_suite(&p, Op::Total(&t), suite, Some(&sel)).holds());
        }
    }
}
