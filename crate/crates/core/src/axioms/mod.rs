//! Axiom systems over star and arrow posets.
//!
//! Every axiom is an [`Item`]: a predicate over a tuple of elements, swept
//! over all tuples in lexicographic declaration order. A predicate returns
//! `None` when the instance does not apply (a guard is false or a needed
//! cell is undefined), so the same items drive exhaustive checking of
//! complete tables and pruning of partially assigned ones.

mod checks;
mod lemmas;

pub use checks::{
    implicativity, is_esp, is_normal, is_strong, jext_characterization, subalgebra_closed,
    EspCheck, Implicativity, NormalCheck, SubalgebraCheck,
};
pub use lemmas::{verify_lemma_suite, ItemOutcome, PropertyReport, Suite};

use std::cell::Cell;
use std::fmt;
use std::str::FromStr;

use crate::elemset::Elem;
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::selection::LocalSelection;
use crate::table::{PartialTable, TotalTable};

/// How a partial-meet equation is read when one of its sides is undefined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Reading {
    /// Both sides are defined, and they are equal.
    #[default]
    Existential,
    /// If both sides are defined, then they are equal.
    IfBothDefined,
    /// If one side is defined, then so is the other and they are equal.
    IfEitherDefined,
}

impl Reading {
    pub fn equal(self, lhs: Option<Elem>, rhs: Option<Elem>) -> bool {
        match (self, lhs, rhs) {
            (_, Some(a), Some(b)) => a == b,
            (Reading::Existential, _, _) => false,
            (Reading::IfBothDefined, _, _) => true,
            (Reading::IfEitherDefined, None, None) => true,
            (Reading::IfEitherDefined, _, _) => false,
        }
    }
}

/// Evaluation context: a poset, an operation grid and an optional selection.
#[derive(Clone, Copy)]
pub struct Ctx<'a> {
    pub p: &'a Poset,
    pub op: &'a [Option<Elem>],
    pub sel: Option<&'a LocalSelection>,
    pub reading: Reading,
    /// Receives the index of an undefined cell when one is read.
    miss: Option<&'a Cell<Option<usize>>>,
}

impl<'a> Ctx<'a> {
    pub fn new(p: &'a Poset, op: &'a [Option<Elem>]) -> Self {
        Ctx {
            p,
            op,
            sel: None,
            reading: Reading::default(),
            miss: None,
        }
    }

    pub fn with_selection(mut self, sel: Option<&'a LocalSelection>) -> Self {
        self.sel = sel;
        self
    }

    pub fn with_reading(mut self, reading: Reading) -> Self {
        self.reading = reading;
        self
    }

    pub(crate) fn with_miss(mut self, miss: &'a Cell<Option<usize>>) -> Self {
        self.miss = Some(miss);
        self
    }

    #[inline]
    pub fn at(&self, x: Elem, y: Elem) -> Option<Elem> {
        let i = x * self.p.n() + y;
        let v = self.op[i];
        if v.is_none() {
            if let Some(m) = self.miss {
                m.set(Some(i));
            }
        }
        v
    }

    #[inline]
    pub fn le(&self, x: Elem, y: Elem) -> bool {
        self.p.leq(x, y)
    }

    #[inline]
    pub fn is_mlb(&self, z: Elem, x: Elem, y: Elem) -> bool {
        self.p.maximal_lower_bounds(x, y).contains(z)
    }
}

/// A universally quantified statement over `arity` element variables.
#[derive(Clone, Copy)]
pub struct Item {
    pub id: &'static str,
    /// Variable names, in sweep order.
    pub vars: &'static [&'static str],
    pub pred: fn(&Ctx, &[Elem]) -> Option<bool>,
}

impl fmt::Debug for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Item({})", self.id)
    }
}

impl Item {
    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    /// Whether the instance at `args` is violated.
    pub fn fails_at(&self, ctx: &Ctx, args: &[Elem]) -> bool {
        (self.pred)(ctx, args) == Some(false)
    }

    /// Lexicographically first violating tuple.
    pub fn first_violation(&self, ctx: &Ctx) -> Option<Vec<Elem>> {
        let n = ctx.p.n();
        let k = self.arity();
        let mut args = [0usize; 4];
        loop {
            if self.fails_at(ctx, &args[..k]) {
                return Some(args[..k].to_vec());
            }
            if !advance(&mut args[..k], n) {
                return None;
            }
        }
    }

    /// Number of tuples on which the statement is not vacuous.
    pub fn applicable_instances(&self, ctx: &Ctx) -> u64 {
        let n = ctx.p.n();
        let k = self.arity();
        let mut args = [0usize; 4];
        let mut count = 0;
        loop {
            if (self.pred)(ctx, &args[..k]).is_some() {
                count += 1;
            }
            if !advance(&mut args[..k], n) {
                return count;
            }
        }
    }
}

/// Odometer increment over `{0..n}^k`; `false` after the last tuple.
fn advance(args: &mut [Elem], n: usize) -> bool {
    for i in (0..args.len()).rev() {
        args[i] += 1;
        if args[i] < n {
            return true;
        }
        args[i] = 0;
    }
    false
}

/// True if any item has a violated instance.
pub fn any_violation(ctx: &Ctx, items: &[Item]) -> bool {
    items.iter().any(|it| it.first_violation(ctx).is_some())
}

// ---------------------------------------------------------------------------
// Axiom items. Variables are bound in the order of `vars`.

macro_rules! item {
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

/// `if cond then concl`, vacuous when `cond` is false.
#[inline]
fn when(cond: bool, concl: impl FnOnce() -> Option<bool>) -> Option<bool> {
    if cond {
        concl()
    } else {
        None
    }
}

pub(crate) const SP1: Item = item!("sp1", ["x", "y", "z"], |c, a| {
    let (x, y, z) = (a[0], a[1], a[2]);
    when(c.le(x, y), || Some(c.le(c.at(y, z)?, c.at(x, z)?)))
});
pub(crate) const SP2: Item = item!("sp2", ["x", "y"], |c, a| {
    let (x, y) = (a[0], a[1]);
    let v = c.at(x, y)?;
    when(c.le(x, v), || Some(c.le(x, y)))
});
pub(crate) const SP3: Item = item!("sp3", ["x", "y", "z"], |c, a| {
    let (x, y, z) = (a[0], a[1], a[2]);
    when(c.is_mlb(z, x, y), || Some(c.le(x, c.at(y, z)?)))
});

pub(crate) const ESP1: Item = item!("esp1", ["x", "y", "z"], |c, a| {
    let (x, y, z) = (a[0], a[1], a[2]);
    when(c.le(z, x) && c.le(x, y), || {
        Some(c.le(c.at(y, z)?, c.at(x, z)?))
    })
});
pub(crate) const ESP2: Item = item!("esp2", ["x", "y"], |c, a| {
    let (x, y) = (a[0], a[1]);
    when(c.le(y, x), || {
        let v = c.at(x, y)?;
        Some(!c.le(x, v) || c.le(x, y))
    })
});
pub(crate) const ESP3: Item = item!("esp3", ["x", "y", "z"], |c, a| {
    let (x, y, z) = (a[0], a[1], a[2]);
    when(c.is_mlb(z, x, y), || Some(c.le(x, c.at(y, z)?)))
});

pub(crate) const ESPW1: Item = item!("esp^1", ["x", "y"], |c, a| {
    let (x, y) = (a[0], a[1]);
    let m = c.p.meet(x, y)?;
    let v = c.at(x, m)?;
    Some(c.p.meet(x, v) == Some(m))
});
pub(crate) const ESPW1_WEAK: Item = item!("esp^1'", ["x", "y"], |c, a| {
    let (x, y) = (a[0], a[1]);
    let m = c.p.meet(x, y)?;
    let v = c.at(x, m)?;
    Some(c.p.meet(x, v).is_some_and(|w| c.le(w, y)))
});
pub(crate) const ESPW2: Item = item!("esp^2", ["x", "y"], |c, a| {
    let (x, y) = (a[0], a[1]);
    let m = c.p.meet(x, y)?;
    Some(c.le(x, c.at(y, m)?))
});

pub(crate) const NAT1: Item = item!("nat1", ["x", "y", "z"], |c, a| {
    let (x, y, z) = (a[0], a[1], a[2]);
    when(c.le(x, y), || Some(c.le(c.at(y, z)?, c.at(x, z)?)))
});
pub(crate) const NAT2: Item = item!("nat2", ["x", "y"], |c, a| (ESP2.pred)(c, a));
pub(crate) const NAT3: Item = item!("nat3", ["x", "y", "z"], |c, a| {
    let (x, y, z) = (a[0], a[1], a[2]);
    when(c.le(z, x) && c.p.disjoint_over(x, y, z), || {
        Some(c.le(x, c.at(y, z)?))
    })
});
pub(crate) const NATI3: Item = item!("natI3", ["x", "y", "z"], |c, a| {
    let (x, y, z) = (a[0], a[1], a[2]);
    let sel = c.sel?;
    when(
        c.le(z, x) && sel.get(y, z).iter().all(|w| c.p.disjoint_over(x, w, z)),
        || Some(c.le(x, c.at(y, z)?)),
    )
});

pub(crate) const NRM0: Item = item!("nrm0", ["x", "y"], |c, a| {
    let (x, y) = (a[0], a[1]);
    Some(c.le(y, c.at(x, y)?))
});
pub(crate) const NRM1: Item = item!("nrm1", ["x", "y", "z"], |c, a| {
    let (x, y, z) = (a[0], a[1], a[2]);
    let v = c.at(y, z)?;
    when(c.le(x, v), || Some(c.le(y, c.at(x, z)?)))
});
pub(crate) const NRM2: Item = item!("nrm2", ["x", "y"], |c, a| (ESP2.pred)(c, a));
pub(crate) const NRM3: Item = item!("nrm3", ["x", "y", "z"], |c, a| (ESP3.pred)(c, a));

pub(crate) const NRMW0: Item = item!("nrm^0", ["x", "y"], |c, a| (NRM0.pred)(c, a));
pub(crate) const NRMW1: Item = item!("nrm^1", ["x", "y"], |c, a| {
    let (x, y) = (a[0], a[1]);
    let v = c.at(x, y)?;
    Some(c.le(x, c.at(v, y)?))
});
pub(crate) const NRMW2: Item = item!("nrm^2", ["x", "y", "z"], |c, a| {
    let (x, y, z) = (a[0], a[1], a[2]);
    let m = c.p.meet(x, y)?;
    Some(c.le(c.at(x, z)?, c.at(m, z)?))
});
pub(crate) const NRMW3: Item = item!("nrm^3", ["x", "y"], |c, a| {
    let (x, y) = (a[0], a[1]);
    let v = c.at(x, y)?;
    Some(c.p.meet(x, v).is_some_and(|w| c.le(w, y)))
});
pub(crate) const NRMW4: Item = item!("nrm^4", ["x", "y"], |c, a| (ESPW2.pred)(c, a));
pub(crate) const NRMW3_EQ: Item = item!("nrm^3'", ["x", "y"], |c, a| {
    let (x, y) = (a[0], a[1]);
    let v = c.at(x, y)?;
    Some(c.p.meet(x, v).is_some() && c.p.meet(x, v) == c.p.meet(x, y))
});

pub(crate) const J1: Item = item!("j1", ["x", "y", "z"], |c, a| (NRM1.pred)(c, a));
pub(crate) const J2: Item = item!("j2", ["x", "y"], |c, a| {
    let (x, y) = (a[0], a[1]);
    let v = c.at(x, y)?;
    when(c.le(x, v), || Some(c.le(x, y)))
});
pub(crate) const J3: Item = item!("j3", ["x", "y"], |c, a| {
    let (x, y) = (a[0], a[1]);
    let m = c.p.meet(x, y)?;
    Some(c.le(x, c.at(y, m)?))
});

pub(crate) const JWV1: Item = item!("j^1", ["x", "y"], |c, a| {
    let (x, y) = (a[0], a[1]);
    let v = c.at(x, y)?;
    let lhs = c.p.join(x, y).and_then(|j| c.p.meet(v, j));
    Some(c.reading.equal(lhs, Some(y)))
});
pub(crate) const JWV2: Item = item!("j^2", ["x", "y", "z"], |c, a| {
    let (x, y, z) = (a[0], a[1], a[2]);
    let m = match (c.p.join(z, y), c.p.join(x, y)) {
        (Some(zy), Some(xy)) => c.p.meet(zy, xy),
        _ => None,
    };
    // z ≤ x→m read as the equation z ∨ (x→m) = x→m
    let (lhs, rhs) = match m {
        Some(m) => {
            let v = c.at(x, m)?;
            (c.p.join(z, v), Some(v))
        }
        None => (None, None),
    };
    Some(c.reading.equal(lhs, rhs))
});
pub(crate) const JWV2_PRIME: Item = item!("j^2'", ["x", "y", "z"], |c, a| {
    let (x, y, z) = (a[0], a[1], a[2]);
    let m = c.p.join(x, y).and_then(|j| c.p.meet(z, j))?;
    Some(c.le(z, c.at(x, m)?))
});

/// Strongness, `x ≤ (x→y)→y`.
pub(crate) const STRONG: Item = item!("S", ["x", "y"], |c, a| (NRMW1.pred)(c, a));

/// The built-in axiom systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum System {
    /// Sectional pseudocomplementation on star posets.
    Sp,
    /// Extended sectional pseudocomplementation.
    Esp,
    /// Meet-semilattice identities for extended sp-complementation.
    EspMeet,
    /// Natural extensions.
    Nat,
    /// Selection-natural extensions.
    NatSel,
    /// Normal extensions.
    Nrm,
    /// Meet-semilattice identities for normal extensions.
    NrmMeet,
    /// Sectional j-pseudocomplementation.
    J,
    /// Nearlattice identities for join extensions.
    JoinMeet,
    /// Lattice identities for Frink-natural extensions.
    JoinMeetPrime,
}

/// Structural precondition of a system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Requirement {
    Nothing,
    LowerSemilattice,
    UpperSemilattice,
    Lattice,
}

impl System {
    pub const ALL: [System; 10] = [
        System::Sp,
        System::Esp,
        System::EspMeet,
        System::Nat,
        System::NatSel,
        System::Nrm,
        System::NrmMeet,
        System::J,
        System::JoinMeet,
        System::JoinMeetPrime,
    ];

    pub fn id(self) -> &'static str {
        match self {
            System::Sp => "SP",
            System::Esp => "ESP",
            System::EspMeet => "ESPW",
            System::Nat => "NAT",
            System::NatSel => "NATI",
            System::Nrm => "NRM",
            System::NrmMeet => "NRMW",
            System::J => "J",
            System::JoinMeet => "JWV",
            System::JoinMeetPrime => "JWV2",
        }
    }

    pub fn items(self) -> &'static [Item] {
        match self {
            System::Sp => &[SP1, SP2, SP3],
            System::Esp => &[ESP1, ESP2, ESP3],
            System::EspMeet => &[ESPW1, ESPW2, ESPW1_WEAK],
            System::Nat => &[NAT1, NAT2, NAT3],
            System::NatSel => &[NAT1, NAT2, NATI3],
            System::Nrm => &[NRM0, NRM1, NRM2, NRM3],
            System::NrmMeet => &[NRMW0, NRMW1, NRMW2, NRMW3, NRMW4, NRMW3_EQ],
            System::J => &[J1, J2, J3],
            System::JoinMeet => &[JWV1, JWV2],
            System::JoinMeetPrime => &[JWV1, JWV2_PRIME],
        }
    }

    /// Whether the system is about partial (star) operations.
    pub fn is_partial(self) -> bool {
        self == System::Sp
    }

    pub fn needs_selection(self) -> bool {
        self == System::NatSel
    }

    pub fn requirement(self) -> Requirement {
        match self {
            System::EspMeet | System::NrmMeet => Requirement::LowerSemilattice,
            System::JoinMeet => Requirement::UpperSemilattice,
            System::JoinMeetPrime => Requirement::Lattice,
            _ => Requirement::Nothing,
        }
    }

    /// Checks structural preconditions and selection presence.
    pub fn admits(self, p: &Poset, sel: Option<&LocalSelection>) -> Result<()> {
        let ok = match self.requirement() {
            Requirement::Nothing => true,
            Requirement::LowerSemilattice => p.is_lower_semilattice(),
            Requirement::UpperSemilattice => p.is_upper_semilattice(),
            Requirement::Lattice => p.is_lattice(),
        };
        if !ok {
            return Err(Error::StructureMismatch {
                system: self.id().to_string(),
                required: format!("{:?}", self.requirement()),
            });
        }
        if self.needs_selection() && sel.is_none() {
            return Err(Error::MissingSelection(self.id().to_string()));
        }
        Ok(())
    }
}

impl fmt::Display for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for System {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<System, String> {
        System::ALL
            .into_iter()
            .find(|sys| sys.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown system `{s}`"))
    }
}

/// Either kind of operation table.
#[derive(Debug, Clone, Copy)]
pub enum Op<'a> {
    Partial(&'a PartialTable),
    Total(&'a TotalTable),
}

impl<'a> Op<'a> {
    pub fn cells(&self) -> &'a [Option<Elem>] {
        match self {
            Op::Partial(t) => t.cells(),
            Op::Total(t) => t.cells(),
        }
    }

    pub fn is_partial(&self) -> bool {
        matches!(self, Op::Partial(_))
    }

    pub fn n(&self) -> usize {
        match self {
            Op::Partial(t) => t.n(),
            Op::Total(t) => t.n(),
        }
    }
}

/// One violated axiom with its lexicographically first witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: &'static str,
    pub vars: &'static [&'static str],
    pub witness: Vec<Elem>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub system: System,
    pub holds: bool,
    pub violations: Vec<Violation>,
}

/// Sweeps every axiom of `system` over `op`.
pub fn check_system(
    p: &Poset,
    op: Op,
    system: System,
    sel: Option<&LocalSelection>,
) -> Result<AxiomReport> {
    check_system_with(p, op, system, sel, Reading::default())
}

pub fn check_system_with(
    p: &Poset,
    op: Op,
    system: System,
    sel: Option<&LocalSelection>,
    reading: Reading,
) -> Result<AxiomReport> {
    if op.n() != p.n() {
        return Err(Error::TableShape(format!(
            "table has {} elements, poset {} has {}",
            op.n(),
            p.name(),
            p.n()
        )));
    }
    if system.is_partial() != op.is_partial() {
        return Err(Error::StructureMismatch {
            system: system.id().to_string(),
            required: if system.is_partial() {
                "a partial (star) table".to_string()
            } else {
                "a total (arrow) table".to_string()
            },
        });
    }
    system.admits(p, sel)?;
    let ctx = Ctx::new(p, op.cells())
        .with_selection(sel)
        .with_reading(reading);
    let violations: Vec<Violation> = system
        .items()
        .iter()
        .filter_map(|it| {
            it.first_violation(&ctx).map(|witness| Violation {
                axiom: it.id,
                vars: it.vars,
                witness,
            })
        })
        .collect();
    Ok(AxiomReport {
        system,
        holds: violations.is_empty(),
        violations,
    })
}

/// Looks up an axiom item by id, across all systems and strongness.
pub fn item_by_id(id: &str) -> Option<Item> {
    System::ALL
        .iter()
        .flat_map(|s| s.items().iter())
        .chain(std::iter::once(&STRONG))
        .find(|it| it.id == id)
        .copied()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{chain, hexagon};

    #[test]
    fn readings() {
        use Reading::*;
        assert!(Existential.equal(Some(1), Some(1)));
        assert!(!Existential.equal(None, Some(1)));
        assert!(!Existential.equal(None, None));
        assert!(IfBothDefined.equal(None, Some(1)));
        assert!(IfBothDefined.equal(None, None));
        assert!(!IfEitherDefined.equal(None, Some(1)));
        assert!(IfEitherDefined.equal(None, None));
        assert!(!IfEitherDefined.equal(Some(2), Some(1)));
    }

    #[test]
    fn advance_visits_all_tuples_in_order() {
        let mut args = [0usize; 2];
        let mut seen = vec![args.to_vec()];
        while advance(&mut args, 3) {
            seen.push(args.to_vec());
        }
        assert_eq!(seen.len(), 9);
        assert_eq!(seen[1], vec![0, 1]);
        assert_eq!(seen[8], vec![2, 2]);
    }

    #[test]
    fn structure_and_kind_mismatch() {
        let p = hexagon();
        let t = TotalTable::from_fn(p.n(), |_, _| 5);
        assert!(matches!(
            check_system(&p, Op::Total(&t), System::EspMeet, None),
            Err(Error::StructureMismatch { .. })
        ));
        assert!(matches!(
            check_system(&p, Op::Total(&t), System::Sp, None),
            Err(Error::StructureMismatch { .. })
        ));
        assert!(matches!(
            check_system(&p, Op::Total(&t), System::NatSel, None),
            Err(Error::MissingSelection(_))
        ));
        let c = chain(&["0", "1"]);
        let t = TotalTable::from_fn(2, |_, _| 1);
        assert!(check_system(&c, Op::Total(&t), System::JoinMeetPrime, None).is_ok());
    }

    #[test]
    fn system_ids_round_trip() {
        for s in System::ALL {
            assert_eq!(s.id().parse::<System>().unwrap(), s);
        }
        assert!("nope".parse::<System>().is_err());
    }
}
