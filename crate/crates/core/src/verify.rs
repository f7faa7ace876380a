//! Exhaustive verification of theorems and counterexample hunts over all
//! small posets.
//!
//! Each theorem is a per-poset check returning whether the poset is in the
//! hypothesis class, how many instances were examined, and the first
//! failure. Posets are processed in enumeration order (in parallel chunks);
//! the reported counterexample is always the earliest one.

use std::fmt;

use rayon::prelude::*;

use crate::axioms::{
    check_system, implicativity, is_esp, is_normal, is_strong, jext_characterization,
    subalgebra_closed, EspCheck, Item, Op, Reading, System, NRM1, NRM2, NRM3, STRONG,
};
use crate::elemset::ElemSet;
use crate::enumerate::{
    enumerate_extensions, enumerate_posets, solve_tables, Dedup, DEFAULT_FREE_CELL_BUDGET,
};
use crate::error::{Error, Result};
use crate::extend::{
    i_min_extension, i_natural_extension, join_extension, natural_extension, natural_min_form,
    normal_extension,
};
use crate::poset::Poset;
use crate::pseudo::{notion_table, star_table, star_table_for, Notion};
use crate::selection::LocalSelection;
use crate::table::{PartialTable, TotalTable};

const CHUNK: usize = 2048;

/// Built-in theorems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    SpChar,
    Glb,
    NatEq,
    JextFin,
    NrmImpl,
    NrmAx,
    StrNrm,
    NatImplic,
    JEqNrm,
    LatFEqJ,
    Iso,
    IsoStrong,
    NatIAx,
    NatIAxStrong,
    Mono,
    RightImpl,
    Subalg,
}

impl Theorem {
    pub const ALL: [Theorem; 17] = [
        Theorem::SpChar,
        Theorem::Glb,
        Theorem::NatEq,
        Theorem::JextFin,
        Theorem::NrmImpl,
        Theorem::NrmAx,
        Theorem::StrNrm,
        Theorem::NatImplic,
        Theorem::JEqNrm,
        Theorem::LatFEqJ,
        Theorem::Iso,
        Theorem::IsoStrong,
        Theorem::NatIAx,
        Theorem::NatIAxStrong,
        Theorem::Mono,
        Theorem::RightImpl,
        Theorem::Subalg,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::SpChar => "T-SPCHAR",
            Theorem::Glb => "T-GLB",
            Theorem::NatEq => "T-NAT-EQ",
            Theorem::JextFin => "T-JEXT-FIN",
            Theorem::NrmImpl => "T-NRM-IMPL",
            Theorem::NrmAx => "T-NRM-AX",
            Theorem::StrNrm => "T-STR-NRM",
            Theorem::NatImplic => "T-NAT-IMPLIC",
            Theorem::JEqNrm => "T-J-EQ-NRM",
            Theorem::LatFEqJ => "T-LAT-F-EQ-J",
            Theorem::Iso => "T-ISO",
            Theorem::IsoStrong => "T-ISO-S",
            Theorem::NatIAx => "T-NATI-AX",
            Theorem::NatIAxStrong => "T-NATI-AX-S",
            Theorem::Mono => "T-MONO",
            Theorem::RightImpl => "T-RIGHT-IMPL",
            Theorem::Subalg => "T-SUBALG",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Theorem::SpChar => "a star table satisfies sp1-sp3 iff it is the sp table",
            Theorem::Glb => {
                "in upper or lower semilattices: maximal lower bound = meet = meet over z"
            }
            Theorem::NatEq => "natural rule = max-form = both min-forms = union-selection rules",
            Theorem::JextFin => "an SP poset has a total normal extension iff it is an upper semilattice",
            Theorem::NrmImpl => "the normal extension is left and right implicative",
            Theorem::NrmAx => {
                "tables satisfying nrm0-nrm3 (or nrm1-nrm3 with a top) are exactly the normal extension"
            }
            Theorem::StrNrm => "a strong selection-natural esp table is normal",
            Theorem::NatImplic => {
                "natural extension: left implicative iff lower sections are chains; right iff chain"
            }
            Theorem::JEqNrm => "on lower semilattices with a top, J tables = NRM tables",
            Theorem::LatFEqJ => {
                "on lattices: Frink-natural = join extension = unique JWV2 table = unique JWV table"
            }
            Theorem::Iso => "up-directed: union-natural table is also Frink-natural",
            Theorem::IsoStrong => "up-directed, strong: union-natural table is also Frink-natural",
            Theorem::NatIAx => {
                "up-directed: tables satisfying nat1, nat2, natI3 are exactly the I-natural table"
            }
            Theorem::NatIAxStrong => {
                "tables satisfying S, nat1, nat2, natI3 are exactly the I-natural table when strong"
            }
            Theorem::Mono => "a larger selection gives pointwise smaller natural values",
            Theorem::RightImpl => {
                "a right-implicative esp table with y <= x->y everywhere is left implicative"
            }
            Theorem::Subalg => "a subset is closed under * iff it is closed under the natural extension",
        }
    }

    pub fn parse(s: &str) -> Result<Theorem> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }

    /// Largest `n` accepted for this theorem in labeled mode.
    pub fn max_n(self) -> usize {
        match self {
            Theorem::NrmAx | Theorem::JEqNrm | Theorem::NatIAx | Theorem::NatIAxStrong => 5,
            _ => 6,
        }
    }

    fn check(self, p: &Poset) -> Verdict {
        match self {
            Theorem::SpChar => check_sp_char(p),
            Theorem::Glb => check_glb(p),
            Theorem::NatEq => check_nat_eq(p),
            Theorem::JextFin => check_jext_fin(p),
            Theorem::NrmImpl => check_nrm_impl(p),
            Theorem::NrmAx => check_nrm_ax(p),
            Theorem::StrNrm => check_str_nrm(p),
            Theorem::NatImplic => check_nat_implic(p),
            Theorem::JEqNrm => check_j_eq_nrm(p),
            Theorem::LatFEqJ => check_lat_f_eq_j(p),
            Theorem::Iso => check_iso(p, false),
            Theorem::IsoStrong => check_iso(p, true),
            Theorem::NatIAx => check_nati_ax(p, false),
            Theorem::NatIAxStrong => check_nati_ax(p, true),
            Theorem::Mono => check_mono(p),
            Theorem::RightImpl => check_right_impl(p),
            Theorem::Subalg => check_subalg(p),
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Built-in counterexample searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Hunt {
    /// Tables satisfying j1-j3 are esp tables.
    JImpliesEsp,
    /// A total CLP table is an esp table.
    ClpImpliesEsp,
    /// A total rp table is an esp table.
    RpImpliesEsp,
    /// Esp tables satisfy j1-j3.
    EspImpliesJ,
    /// Computed sp tables satisfy sp1-sp3.
    SpImpliesSp,
}

impl Hunt {
    pub const ALL: [Hunt; 5] = [
        Hunt::JImpliesEsp,
        Hunt::ClpImpliesEsp,
        Hunt::RpImpliesEsp,
        Hunt::EspImpliesJ,
        Hunt::SpImpliesSp,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Hunt::JImpliesEsp => "J⇒ESP",
            Hunt::ClpImpliesEsp => "CLP⇒ESP",
            Hunt::RpImpliesEsp => "RP⇒ESP",
            Hunt::EspImpliesJ => "ESP⇒J",
            Hunt::SpImpliesSp => "sp⇒sp",
        }
    }

    /// Accepts `⇒` or `=>`, case-insensitively.
    pub fn parse(s: &str) -> Result<Hunt> {
        let norm = |t: &str| t.replace("=>", "⇒").replace(' ', "").to_lowercase();
        Hunt::ALL
            .into_iter()
            .find(|h| norm(h.id()) == norm(s))
            .ok_or_else(|| Error::UnknownPredicate(s.to_string()))
    }

    pub fn max_n(self) -> usize {
        match self {
            Hunt::EspImpliesJ => 5,
            _ => 6,
        }
    }

    fn check(self, p: &Poset) -> Verdict {
        match self {
            Hunt::JImpliesEsp => hunt_j_esp(p),
            Hunt::ClpImpliesEsp => hunt_notion_esp(p, Notion::Clp),
            Hunt::RpImpliesEsp => hunt_notion_esp(p, Notion::Rp),
            Hunt::EspImpliesJ => hunt_esp_j(p),
            Hunt::SpImpliesSp => hunt_sp_sp(p),
        }
    }
}

impl fmt::Display for Hunt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LevelStats {
    pub n: usize,
    pub posets: u64,
    /// Posets in the hypothesis class.
    pub in_class: u64,
    pub instances: u64,
}

/// A failing instance, replayable from its poset and tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub n: usize,
    /// Position of the poset in the enumeration at size `n`.
    pub index: u64,
    pub poset: Poset,
    pub star: Option<PartialTable>,
    pub table: Option<TotalTable>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Verified,
    Counterexample(Box<Counterexample>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub id: String,
    pub max_n: usize,
    pub dedup: Dedup,
    pub levels: Vec<LevelStats>,
    pub outcome: Outcome,
}

impl VerificationReport {
    pub fn verified(&self) -> bool {
        self.outcome == Outcome::Verified
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        match &self.outcome {
            Outcome::Counterexample(c) => Some(c),
            Outcome::Verified => None,
        }
    }

    pub fn posets(&self) -> u64 {
        self.levels.iter().map(|l| l.posets).sum()
    }

    pub fn instances(&self) -> u64 {
        self.levels.iter().map(|l| l.instances).sum()
    }
}

/// Result of checking one poset.
#[derive(Debug, Default)]
struct Verdict {
    in_class: bool,
    instances: u64,
    failure: Option<Failure>,
}

#[derive(Debug)]
struct Failure {
    star: Option<PartialTable>,
    table: Option<TotalTable>,
    detail: String,
}

impl Verdict {
    fn skip() -> Verdict {
        Verdict::default()
    }

    fn pass(instances: u64) -> Verdict {
        Verdict {
            in_class: true,
            instances,
            failure: None,
        }
    }

    fn fail(instances: u64, table: Option<TotalTable>, detail: String) -> Verdict {
        Verdict {
            in_class: true,
            instances,
            failure: Some(Failure {
                star: None,
                table,
                detail,
            }),
        }
    }
}

pub fn verify_theorem(theorem: Theorem, max_n: usize, dedup: Dedup) -> Result<VerificationReport> {
    verify_theorem_capped(theorem, max_n, dedup, theorem.max_n())
}

/// As [`verify_theorem`], with `cap` replacing the theorem's labeled size
/// cap. Enumeration limits still apply.
pub fn verify_theorem_capped(
    theorem: Theorem,
    max_n: usize,
    dedup: Dedup,
    cap: usize,
) -> Result<VerificationReport> {
    check_cap(theorem.id(), max_n, cap, dedup)?;
    sweep(theorem.id(), max_n, dedup, |p| theorem.check(p))
}

pub fn find_counterexample(hunt: Hunt, max_n: usize, dedup: Dedup) -> Result<VerificationReport> {
    find_counterexample_capped(hunt, max_n, dedup, hunt.max_n())
}

pub fn find_counterexample_capped(
    hunt: Hunt,
    max_n: usize,
    dedup: Dedup,
    cap: usize,
) -> Result<VerificationReport> {
    check_cap(hunt.id(), max_n, cap, dedup)?;
    sweep(hunt.id(), max_n, dedup, |p| hunt.check(p))
}

fn check_cap(id: &str, max_n: usize, cap: usize, dedup: Dedup) -> Result<()> {
    let cap = match dedup {
        Dedup::Labeled => cap,
        Dedup::UpToIso => cap + 1,
    };
    if max_n == 0 || max_n > cap {
        return Err(Error::SizeCap {
            what: format!("{id} sweep size"),
            requested: max_n,
            cap,
        });
    }
    Ok(())
}

fn sweep(
    id: &str,
    max_n: usize,
    dedup: Dedup,
    check: impl Fn(&Poset) -> Verdict + Sync,
) -> Result<VerificationReport> {
    let mut levels = Vec::new();
    for n in 1..=max_n {
        let mut stats = LevelStats {
            n,
            ..LevelStats::default()
        };
        let mut stream = enumerate_posets(n, dedup)?;
        loop {
            let chunk: Vec<Poset> = stream.by_ref().take(CHUNK).collect();
            if chunk.is_empty() {
                break;
            }
            let verdicts: Vec<Verdict> = chunk.par_iter().map(&check).collect();
            for (p, v) in chunk.into_iter().zip(verdicts) {
                let index = stats.posets;
                stats.posets += 1;
                stats.in_class += u64::from(v.in_class);
                stats.instances += v.instances;
                if let Some(f) = v.failure {
                    levels.push(stats);
                    return Ok(VerificationReport {
                        id: id.to_string(),
                        max_n,
                        dedup,
                        levels,
                        outcome: Outcome::Counterexample(Box::new(Counterexample {
                            n,
                            index,
                            poset: p,
                            star: f.star,
                            table: f.table,
                            detail: f.detail,
                        })),
                    });
                }
            }
        }
        levels.push(stats);
    }
    Ok(VerificationReport {
        id: id.to_string(),
        max_n,
        dedup,
        levels,
        outcome: Outcome::Verified,
    })
}

// ---------------------------------------------------------------------------
// Per-poset checks.

fn pairs(p: &Poset) -> impl Iterator<Item = (usize, usize)> + '_ {
    p.elems().flat_map(move |x| p.elems().map(move |y| (x, y)))
}

fn label_pair(p: &Poset, (x, y): (usize, usize)) -> String {
    format!("({}, {})", p.label(x), p.label(y))
}

/// All tables satisfying `items`, with the number of search nodes.
fn solutions(
    p: &Poset,
    items: &[Item],
    partial: bool,
    sel: Option<&LocalSelection>,
) -> (Vec<Vec<Option<usize>>>, u64) {
    let mut solver = solve_tables(p, items, partial, sel, Reading::default());
    let found: Vec<_> = solver.by_ref().collect();
    (found, solver.nodes())
}

fn check_sp_char(p: &Poset) -> Verdict {
    let (found, nodes) = solutions(p, System::Sp.items(), true, None);
    let expected: Vec<Vec<Option<usize>>> = match star_table(p) {
        Ok(s) => vec![s.cells().to_vec()],
        Err(_) => Vec::new(),
    };
    if found == expected {
        Verdict::pass(nodes.max(1))
    } else {
        Verdict::fail(
            nodes,
            None,
            format!(
                "{} star tables satisfy sp1-sp3, expected {}",
                found.len(),
                expected.len()
            ),
        )
    }
}

fn check_glb(p: &Poset) -> Verdict {
    if !(p.is_upper_semilattice() || p.is_lower_semilattice()) {
        return Verdict::skip();
    }
    let mut count = 0;
    for x in p.elems() {
        for y in p.elems() {
            let mlb = p.maximal_lower_bounds(x, y);
            for z in p.elems() {
                count += 1;
                let a = mlb.contains(z);
                let b = p.meet(x, y) == Some(z);
                let c = p.meet_over(x, y, z) == Some(z);
                if a != b || b != c {
                    return Verdict::fail(
                        count,
                        None,
                        format!(
                            "x={} y={} z={}: mlb={a} meet={b} meet-over={c}",
                            p.label(x),
                            p.label(y),
                            p.label(z)
                        ),
                    );
                }
            }
        }
    }
    Verdict::pass(count)
}

fn check_nat_eq(p: &Poset) -> Verdict {
    let Ok(s) = star_table(p) else {
        return Verdict::skip();
    };
    let cells = (p.n() * p.n()) as u64;
    let nat = match natural_extension(p, &s).and_then(|t| natural_min_form(p, &s).map(|m| (t, m))) {
        Ok((t, m)) if t == m => t,
        Ok((t, _)) => return Verdict::fail(cells, Some(t), "min-form differs".into()),
        Err(e) => return Verdict::fail(cells, None, e.to_string()),
    };
    let union = LocalSelection::union(p);
    let inat = i_natural_extension(p, &union);
    let imin = i_min_extension(p, &s, &union);
    if inat.table.as_ref() != Some(&nat) {
        return Verdict::fail(cells, Some(nat), "union-natural rule differs".into());
    }
    if imin.table.as_ref() != Some(&nat) {
        return Verdict::fail(cells, Some(nat), "union min rule differs".into());
    }
    Verdict::pass(cells)
}

fn check_jext_fin(p: &Poset) -> Verdict {
    let Ok(s) = star_table(p) else {
        return Verdict::skip();
    };
    let r = normal_extension(p, &s);
    if r.is_total() == p.is_upper_semilattice() {
        Verdict::pass(1)
    } else {
        let total = r.is_total();
        Verdict::fail(
            1,
            r.table,
            format!(
                "normal extension total = {total}, upper semilattice = {}",
                p.is_upper_semilattice()
            ),
        )
    }
}

fn check_nrm_impl(p: &Poset) -> Verdict {
    let Ok(s) = star_table(p) else {
        return Verdict::skip();
    };
    let Some(t) = normal_extension(p, &s).table else {
        return Verdict::skip();
    };
    let cells = (p.n() * p.n()) as u64;
    match implicativity(p, &t) {
        Ok(imp) if imp.is_left() && imp.is_right() => Verdict::pass(cells),
        Ok(imp) => {
            let w = imp.left.or(imp.right).expect("a failing law");
            Verdict::fail(
                cells,
                Some(t),
                format!("implicativity fails at {}", label_pair(p, w)),
            )
        }
        Err(e) => Verdict::fail(cells, Some(t), e.to_string()),
    }
}

fn expected_normal(p: &Poset) -> Option<TotalTable> {
    let s = star_table(p).ok()?;
    normal_extension(p, &s).table
}

fn check_nrm_ax(p: &Poset) -> Verdict {
    let expected: Vec<Vec<Option<usize>>> = expected_normal(p)
        .map(|t| vec![t.cells().to_vec()])
        .unwrap_or_default();
    let (found, nodes) = solutions(p, System::Nrm.items(), false, None);
    if found != expected {
        return Verdict::fail(
            nodes,
            found
                .first()
                .and_then(|c| TotalTable::from_cells(p.n(), c.clone())),
            format!(
                "{} tables satisfy nrm0-nrm3, expected {}",
                found.len(),
                expected.len()
            ),
        );
    }
    let mut instances = nodes;
    for cells in &found {
        let t = TotalTable::from_cells(p.n(), cells.clone()).expect("total");
        if let Some((v, x, y)) = jext_characterization(p, &t) {
            return Verdict::fail(
                instances,
                Some(t),
                format!(
                    "bound-witness characterization fails at v={} x={} y={}",
                    p.label(v),
                    p.label(x),
                    p.label(y)
                ),
            );
        }
    }
    if p.greatest_element().is_some() {
        let (found, nodes) = solutions(p, &[NRM1, NRM2, NRM3], false, None);
        instances += nodes;
        if found != expected {
            return Verdict::fail(
                instances,
                found
                    .first()
                    .and_then(|c| TotalTable::from_cells(p.n(), c.clone())),
                format!(
                    "{} tables satisfy nrm1-nrm3 with a top, expected {}",
                    found.len(),
                    expected.len()
                ),
            );
        }
    }
    Verdict::pass(instances)
}

fn check_str_nrm(p: &Poset) -> Verdict {
    let Ok(s) = star_table(p) else {
        return Verdict::skip();
    };
    let mut strong_tables = 0;
    for sel in [LocalSelection::union(p), LocalSelection::frink(p)] {
        let Some(t) = i_natural_extension(p, &sel).table else {
            continue;
        };
        if is_strong(p, &t).is_some() {
            continue;
        }
        strong_tables += 1;
        let n = is_normal(p, &s, &t);
        if !n.normal {
            return Verdict::fail(
                strong_tables,
                Some(t),
                format!("strong {}-natural table is not normal", sel.name()),
            );
        }
    }
    Verdict::pass(strong_tables)
}

fn check_nat_implic(p: &Poset) -> Verdict {
    let Ok(s) = star_table(p) else {
        return Verdict::skip();
    };
    let t = match natural_extension(p, &s) {
        Ok(t) => t,
        Err(e) => return Verdict::fail(1, None, e.to_string()),
    };
    let imp = match implicativity(p, &t) {
        Ok(i) => i,
        Err(e) => return Verdict::fail(1, Some(t), e.to_string()),
    };
    let sections_chains = p.elems().all(|x| {
        let d = p.down(x);
        d.iter().all(|a| d.iter().all(|b| p.comparable(a, b)))
    });
    if imp.is_left() != sections_chains {
        return Verdict::fail(
            1,
            Some(t),
            format!(
                "left implicative = {}, lower sections chains = {sections_chains}",
                imp.is_left()
            ),
        );
    }
    if imp.is_right() != p.is_chain() {
        return Verdict::fail(
            1,
            Some(t),
            format!(
                "right implicative = {}, chain = {}",
                imp.is_right(),
                p.is_chain()
            ),
        );
    }
    Verdict::pass(1)
}

fn check_j_eq_nrm(p: &Poset) -> Verdict {
    if !(p.is_lower_semilattice() && p.greatest_element().is_some()) {
        return Verdict::skip();
    }
    let (j, nodes_j) = solutions(p, System::J.items(), false, None);
    let (nrm, nodes_n) = solutions(p, System::Nrm.items(), false, None);
    let instances = nodes_j + nodes_n;
    if j != nrm {
        return Verdict::fail(
            instances,
            j.iter()
                .chain(&nrm)
                .find(|c| !(j.contains(c) && nrm.contains(c)))
                .and_then(|c| TotalTable::from_cells(p.n(), c.clone())),
            format!("{} J tables vs {} NRM tables", j.len(), nrm.len()),
        );
    }
    Verdict::pass(instances)
}

fn check_lat_f_eq_j(p: &Poset) -> Verdict {
    if !p.is_lattice() {
        return Verdict::skip();
    }
    let expected: Vec<Vec<Option<usize>>> = match star_table(p) {
        Ok(s) => {
            let fnat = i_natural_extension(p, &LocalSelection::frink(p)).table;
            let join = join_extension(p, &s);
            let normal = normal_extension(p, &s).table;
            if fnat.is_none() || fnat != join || join != normal {
                return Verdict::fail(
                    1,
                    fnat,
                    "Frink-natural, join and normal rules differ".into(),
                );
            }
            vec![fnat.expect("total").cells().to_vec()]
        }
        Err(_) => Vec::new(),
    };
    let mut instances = 1;
    for sys in [System::JoinMeetPrime, System::JoinMeet] {
        let (found, nodes) = solutions(p, sys.items(), false, None);
        instances += nodes;
        if found != expected {
            return Verdict::fail(
                instances,
                found
                    .first()
                    .and_then(|c| TotalTable::from_cells(p.n(), c.clone())),
                format!(
                    "{} tables satisfy {sys}, expected {}",
                    found.len(),
                    expected.len()
                ),
            );
        }
    }
    Verdict::pass(instances)
}

fn check_iso(p: &Poset, strong: bool) -> Verdict {
    if !p.is_up_directed() {
        return Verdict::skip();
    }
    if star_table(p).is_err() {
        return Verdict::skip();
    }
    let Some(t) = i_natural_extension(p, &LocalSelection::union(p)).table else {
        return Verdict::skip();
    };
    if strong && is_strong(p, &t).is_some() {
        return Verdict::skip();
    }
    let f = i_natural_extension(p, &LocalSelection::frink(p));
    match &f.table {
        Some(ft) if *ft == t => Verdict::pass(1),
        Some(ft) => {
            let w = t.first_difference(ft).expect("tables differ");
            Verdict::fail(
                1,
                Some(t.clone()),
                format!(
                    "union-natural and Frink-natural differ at {}: {} vs {}",
                    label_pair(p, w),
                    p.label(t.get(w.0, w.1)),
                    p.label(ft.get(w.0, w.1))
                ),
            )
        }
        None => {
            let u = f.undefined[0];
            Verdict::fail(
                1,
                Some(t),
                format!(
                    "Frink-natural rule undefined at {}",
                    label_pair(p, (u.x, u.y))
                ),
            )
        }
    }
}

fn check_nati_ax(p: &Poset, strong: bool) -> Verdict {
    if !strong && !p.is_up_directed() {
        return Verdict::skip();
    }
    let mut instances = 0;
    for sel in [LocalSelection::union(p), LocalSelection::frink(p)] {
        let expected: Vec<Vec<Option<usize>>> = i_natural_extension(p, &sel)
            .table
            .filter(|t| !strong || is_strong(p, t).is_none())
            .map(|t| vec![t.cells().to_vec()])
            .unwrap_or_default();
        let mut items = System::NatSel.items().to_vec();
        if strong {
            items.push(STRONG);
        }
        let (found, nodes) = solutions(p, &items, false, Some(&sel));
        instances += nodes;
        if found != expected {
            return Verdict::fail(
                instances,
                found
                    .first()
                    .and_then(|c| TotalTable::from_cells(p.n(), c.clone())),
                format!(
                    "{} tables satisfy the {} axioms, expected {}",
                    found.len(),
                    sel.name(),
                    expected.len()
                ),
            );
        }
    }
    Verdict::pass(instances)
}

fn check_mono(p: &Poset) -> Verdict {
    if star_table(p).is_err() {
        return Verdict::skip();
    }
    let small = i_natural_extension(p, &LocalSelection::union(p));
    let large = i_natural_extension(p, &LocalSelection::frink(p));
    let mut compared = 0;
    for (x, y) in pairs(p) {
        if let (Some(a), Some(b)) = (small.get(x, y), large.get(x, y)) {
            compared += 1;
            if !p.leq(b, a) {
                return Verdict::fail(
                    compared,
                    small.table.clone(),
                    format!("Frink value above union value at {}", label_pair(p, (x, y))),
                );
            }
        }
    }
    Verdict::pass(compared)
}

/// The esp axioms only constrain cells with `y ≤ x`, and the three
/// conditions are per-cell, so the esp tables form a product over the
/// remaining cells and each cell can be checked alone.
fn check_right_impl(p: &Poset) -> Verdict {
    if star_table(p).is_err() {
        return Verdict::skip();
    }
    let top = |x| p.section_top(x).expect("sp posets are sectionally bounded");
    let mut count = 0;
    for (x, y) in pairs(p) {
        if p.leq(y, x) {
            continue;
        }
        for v in p.up(y) {
            let right = p.leq(x, y) == (v == top(y));
            if !right {
                continue;
            }
            count += 1;
            let left = p.leq(x, y) == (v == top(x));
            if !left {
                return Verdict::fail(
                    count,
                    None,
                    format!(
                        "{}->{} = {} breaks left implicativity",
                        p.label(x),
                        p.label(y),
                        p.label(v)
                    ),
                );
            }
        }
    }
    Verdict::pass(count.max(1))
}

fn check_subalg(p: &Poset) -> Verdict {
    let Ok(s) = star_table(p) else {
        return Verdict::skip();
    };
    let t = match natural_extension(p, &s) {
        Ok(t) => t,
        Err(e) => return Verdict::fail(0, None, e.to_string()),
    };
    let mut count = 0;
    for bits in 1..1u64 << p.n() {
        let q = ElemSet::from_bits(bits);
        count += 1;
        let a = subalgebra_closed(p, Op::Partial(&s), q)
            .expect("nonempty")
            .closed;
        let b = subalgebra_closed(p, Op::Total(&t), q)
            .expect("nonempty")
            .closed;
        if a != b {
            return Verdict::fail(
                count,
                Some(t),
                format!(
                    "subset {:?}: closed under * = {a}, under natural = {b}",
                    p.names(q)
                ),
            );
        }
    }
    Verdict::pass(count)
}

/// Restricted to posets with a top, where the j-axioms are stated.
fn hunt_j_esp(p: &Poset) -> Verdict {
    if p.greatest_element().is_none() {
        return Verdict::skip();
    }
    let (found, nodes) = solutions(p, System::J.items(), false, None);
    for cells in found {
        let t = TotalTable::from_cells(p.n(), cells).expect("total");
        let check = is_esp(p, &t);
        if !check.holds() {
            let mut v = Verdict::fail(nodes, Some(t.clone()), esp_detail(p, &t, check));
            v.failure.as_mut().expect("failure").star = Some(t.restrict(p));
            return v;
        }
    }
    Verdict::pass(nodes)
}

fn esp_detail(p: &Poset, t: &TotalTable, check: EspCheck) -> String {
    let restricted = t.restrict(p);
    let wrp = star_table_for(p, Notion::Wrp).is_ok_and(|w| w == restricted);
    let what = match check {
        EspCheck::Holds => unreachable!("only called on failures"),
        EspCheck::NotSp(w) => format!(
            "poset has no sp table (missing at {})",
            label_pair(p, (w.x, w.y))
        ),
        EspCheck::Differs {
            x,
            y,
            got,
            expected,
        } => format!(
            "{}->{} = {} but {}*{} = {}",
            p.label(x),
            p.label(y),
            p.label(got),
            p.label(x),
            p.label(y),
            p.label(expected)
        ),
    };
    format!("{what}; restriction is a wrp table: {wrp}")
}

fn hunt_notion_esp(p: &Poset, notion: Notion) -> Verdict {
    let Some(t) = notion_table(p, notion).table else {
        return Verdict::skip();
    };
    let check = is_esp(p, &t);
    if check.holds() {
        Verdict::pass(1)
    } else {
        let detail = esp_detail(p, &t, check);
        let mut v = Verdict::fail(1, Some(t.clone()), detail);
        v.failure.as_mut().expect("failure").star = Some(t.restrict(p));
        v
    }
}

fn hunt_esp_j(p: &Poset) -> Verdict {
    let Ok(s) = star_table(p) else {
        return Verdict::skip();
    };
    let solver = match enumerate_extensions(p, &s, System::Esp, None, DEFAULT_FREE_CELL_BUDGET) {
        Ok(solver) => solver,
        Err(e) => return Verdict::fail(0, None, e.to_string()),
    };
    let mut count = 0;
    for cells in solver {
        count += 1;
        let t = TotalTable::from_cells(p.n(), cells).expect("total");
        let r = check_system(p, Op::Total(&t), System::J, None).expect("J has no precondition");
        if let Some(v) = r.violations.first() {
            let w: Vec<&str> = v.witness.iter().map(|&e| p.label(e)).collect();
            return Verdict::fail(count, Some(t), format!("{} fails at {:?}", v.axiom, w));
        }
    }
    Verdict::pass(count)
}

fn hunt_sp_sp(p: &Poset) -> Verdict {
    let Ok(s) = star_table(p) else {
        return Verdict::skip();
    };
    let r = check_system(p, Op::Partial(&s), System::Sp, None).expect("SP has no precondition");
    if r.holds {
        Verdict::pass(1)
    } else {
        Verdict::fail(1, None, format!("{:?}", r.violations[0]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_ids() {
        assert_eq!(Theorem::parse("t-jext-fin").unwrap(), Theorem::JextFin);
        assert!(matches!(
            Theorem::parse("T-NOPE"),
            Err(Error::UnknownTheorem(_))
        ));
        assert_eq!(Hunt::parse("J=>ESP").unwrap(), Hunt::JImpliesEsp);
        assert_eq!(Hunt::parse("j⇒esp").unwrap(), Hunt::JImpliesEsp);
        assert!(matches!(Hunt::parse("x"), Err(Error::UnknownPredicate(_))));
    }

    #[test]
    fn trivial_sweeps() {
        let r = verify_theorem(Theorem::SpChar, 1, Dedup::Labeled).unwrap();
        assert!(r.verified());
        assert_eq!(r.levels[0].posets, 1);
        let r = find_counterexample(Hunt::SpImpliesSp, 3, Dedup::Labeled).unwrap();
        assert!(r.verified());
    }

    #[test]
    fn esp_does_not_imply_j_on_two_chain() {
        let r = find_counterexample(Hunt::EspImpliesJ, 3, Dedup::Labeled).unwrap();
        let c = r.counterexample().expect("counterexample");
        assert_eq!(c.n, 2);
    }

    #[test]
    fn caps_are_enforced() {
        assert!(matches!(
            verify_theorem(Theorem::JextFin, 7, Dedup::Labeled),
            Err(Error::SizeCap { .. })
        ));
        assert!(matches!(
            verify_theorem(Theorem::JextFin, 0, Dedup::Labeled),
            Err(Error::SizeCap { .. })
        ));
    }
}
