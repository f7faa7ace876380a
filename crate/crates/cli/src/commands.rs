//! Command-line commands. Exit codes: 0 success, holds or verified; 1 fails
//! or counterexample; 2 usage or input error.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use espkit::axioms::{check_system_with, verify_lemma_suite, ItemOutcome, Reading, Suite, System};
use espkit::enumerate::Dedup;
use espkit::extend::{extend, join_extension, ExtensionResult, Method};
use espkit::pseudo::{notion_table, star_table, Gap, Notion};
use espkit::verify::{
    find_counterexample_capped, verify_theorem_capped, Hunt, Outcome, Theorem, VerificationReport,
};
use espkit::{Elem, ElemSet, LocalSelection, Poset};
use thiserror::Error;

use crate::document::{self, emit_cells, emit_poset, emit_table, Document, Op};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Largest poset accepted from input files.
pub const POSET_CAP_VAR: &str = "ESPKIT_POSET_CAP";
/// Replaces the per-theorem sweep size caps.
pub const MAX_N_VAR: &str = "ESPKIT_MAX_N";

#[derive(Debug, Parser)]
#[command(
    name = "espkit",
    version,
    about = "Sectionally pseudocomplemented posets and their extensions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a file and report its sections.
    Validate { file: PathBuf },
    /// Structural classification of a poset.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        poset: String,
    },
    /// Compute the sp-complementation table.
    Star {
        file: PathBuf,
        #[arg(long)]
        poset: String,
    },
    /// Extend the sp table to a total operation.
    Extend {
        file: PathBuf,
        #[arg(long)]
        poset: String,
        /// pure, natural, natural-min, normal, i-natural, i-min, dual-j, m,
        /// mlb, meet-min, join, rp, wrp or clp.
        #[arg(long)]
        method: String,
        /// A selection in the file, or `union` / `frink`.
        #[arg(long)]
        selection: Option<String>,
    },
    /// Check a table against an axiom system.
    Check {
        file: PathBuf,
        #[arg(long)]
        table: String,
        #[arg(long)]
        system: String,
        #[arg(long)]
        selection: Option<String>,
        #[arg(long, value_enum, default_value_t = ReadingArg::Existential)]
        reading: ReadingArg,
    },
    /// Check a table against a lettered property suite.
    Props {
        file: PathBuf,
        #[arg(long)]
        table: String,
        #[arg(long)]
        suite: String,
        #[arg(long)]
        selection: Option<String>,
    },
    /// Verify a built-in theorem over all posets up to a size.
    Verify {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        max_n: usize,
        /// One poset per isomorphism class.
        #[arg(long)]
        iso: bool,
    },
    /// Search for the first poset violating a built-in property.
    Hunt {
        #[arg(long)]
        predicate: String,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        iso: bool,
    },
    /// List theorem, predicate, system, suite and method ids.
    List,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReadingArg {
    Existential,
    IfBoth,
    IfEither,
}

impl From<ReadingArg> for Reading {
    fn from(r: ReadingArg) -> Reading {
        match r {
            ReadingArg::Existential => Reading::Existential,
            ReadingArg::IfBoth => Reading::IfBothDefined,
            ReadingArg::IfEither => Reading::IfEitherDefined,
        }
    }
}

#[derive(Debug, Error)]
pub enum Failure {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: String,
        source: document::ParseError,
    },
    #[error(transparent)]
    Model(#[from] espkit::Error),
    #[error("output: {0}")]
    Output(#[from] std::io::Error),
}

type CmdResult = Result<i32, Failure>;

/// Runs one command line, writing results to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_ERROR
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Validate { file } => validate(&file, out),
        Command::Analyze { file, poset } => analyze(&file, &poset, out),
        Command::Star { file, poset } => star(&file, &poset, out),
        Command::Extend {
            file,
            poset,
            method,
            selection,
        } => extend_cmd(&file, &poset, &method, selection.as_deref(), out),
        Command::Check {
            file,
            table,
            system,
            selection,
            reading,
        } => check(
            &file,
            &table,
            &system,
            selection.as_deref(),
            reading.into(),
            out,
        ),
        Command::Props {
            file,
            table,
            suite,
            selection,
        } => props(&file, &table, &suite, selection.as_deref(), out),
        Command::Verify {
            theorem,
            max_n,
            iso,
        } => {
            let t = Theorem::parse(&theorem)?;
            let cap = env_usize(MAX_N_VAR)?.unwrap_or(t.max_n());
            let start = Instant::now();
            let r = verify_theorem_capped(t, max_n, dedup(iso), cap)?;
            writeln!(out, "{}: {}", t.id(), t.statement())?;
            report(&r, start, out, err)
        }
        Command::Hunt {
            predicate,
            max_n,
            iso,
        } => {
            let h = Hunt::parse(&predicate)?;
            let cap = env_usize(MAX_N_VAR)?.unwrap_or(h.max_n());
            let start = Instant::now();
            let r = find_counterexample_capped(h, max_n, dedup(iso), cap)?;
            writeln!(out, "{}", h.id())?;
            report(&r, start, out, err)
        }
        Command::List => list(out),
    }
}

fn dedup(iso: bool) -> Dedup {
    if iso {
        Dedup::UpToIso
    } else {
        Dedup::Labeled
    }
}

fn env_usize(var: &str) -> Result<Option<usize>, Failure> {
    match std::env::var(var) {
        Ok(v) => {
            v.trim().parse().map(Some).map_err(|_| {
                Failure::Usage(format!("{var} must be a nonnegative integer, got `{v}`"))
            })
        }
        Err(_) => Ok(None),
    }
}

pub fn load(path: &Path) -> Result<Document, Failure> {
    let text = std::fs::read_to_string(path).map_err(|source| Failure::Io {
        path: path.display().to_string(),
        source,
    })?;
    let cap = env_usize(POSET_CAP_VAR)?.unwrap_or(espkit::poset::DEFAULT_ELEMENT_CAP);
    document::parse_with_cap(&text, cap).map_err(|source| Failure::Parse {
        path: path.display().to_string(),
        source,
    })
}

fn poset<'d>(doc: &'d Document, name: &str) -> Result<&'d Poset, Failure> {
    doc.poset(name)
        .ok_or_else(|| Failure::Usage(format!("no poset named `{name}`")))
}

fn selection(
    doc: &Document,
    p: &Poset,
    name: Option<&str>,
) -> Result<Option<LocalSelection>, Failure> {
    Ok(match name {
        None => None,
        Some("union") => Some(LocalSelection::union(p)),
        Some("frink") => Some(LocalSelection::frink(p)),
        Some(name) => {
            let s = doc
                .selection(name)
                .ok_or_else(|| Failure::Usage(format!("no selection named `{name}`")))?;
            if s.over != p.name() {
                return Err(Failure::Usage(format!(
                    "selection `{name}` is over `{}`, not `{}`",
                    s.over,
                    p.name()
                )));
            }
            Some(s.sel.clone())
        }
    })
}

fn set_names(p: &Poset, s: ElemSet) -> String {
    format!("{{{}}}", p.names(s).join(", "))
}

fn pair(p: &Poset, x: Elem, y: Elem) -> String {
    format!("({}, {})", p.label(x), p.label(y))
}

fn gap(p: &Poset, g: Gap) -> String {
    match g {
        Gap::Empty => "no candidates".to_string(),
        Gap::Antichain(s) => format!("maximal candidates {}", set_names(p, s)),
    }
}

fn validate(file: &Path, out: &mut dyn Write) -> CmdResult {
    let doc = load(file)?;
    for s in &doc.sections {
        match s {
            document::Section::Poset(p) => writeln!(
                out,
                "poset {}: {} elements, {} covers",
                p.name(),
                p.n(),
                p.covers().len()
            )?,
            document::Section::Table(t) => {
                let kind = match t.op {
                    Op::Partial(_) => "partial",
                    Op::Total(_) => "total",
                };
                writeln!(out, "optable {} over {}: {kind}", t.name, t.over)?
            }
            document::Section::Selection(s) => {
                writeln!(out, "selection {} over {}", s.name, s.over)?
            }
        }
    }
    Ok(EXIT_OK)
}

fn analyze(file: &Path, name: &str, out: &mut dyn Write) -> CmdResult {
    let doc = load(file)?;
    let p = poset(&doc, name)?;
    writeln!(out, "poset {}: {} elements", p.name(), p.n())?;
    for (id, flag) in p.classify().flags() {
        match flag.witness {
            Some((x, y)) if !flag.holds => writeln!(out, "{id:<22} no   {}", pair(p, x, y))?,
            _ => writeln!(out, "{id:<22} {}", if flag.holds { "yes" } else { "no" })?,
        }
    }
    match star_table(p) {
        Ok(_) => writeln!(out, "{:<22} yes", "sp-poset")?,
        Err(w) => writeln!(
            out,
            "{:<22} no   {} {}",
            "sp-poset",
            pair(p, w.x, w.y),
            gap(p, w.gap)
        )?,
    }
    for notion in [Notion::Rp, Notion::Wrp, Notion::Clp] {
        let r = notion_table(p, notion);
        let id = format!("{}-total", notion.id());
        match r.undefined.first() {
            None => writeln!(out, "{id:<22} yes")?,
            Some(u) => writeln!(out, "{id:<22} no   {} {}", pair(p, u.x, u.y), gap(p, u.gap))?,
        }
    }
    Ok(EXIT_OK)
}

fn star(file: &Path, name: &str, out: &mut dyn Write) -> CmdResult {
    let doc = load(file)?;
    let p = poset(&doc, name)?;
    match star_table(p) {
        Ok(s) => {
            write!(
                out,
                "{}\n{}",
                emit_poset(p),
                emit_table(p, "star", &Op::Partial(s))
            )?;
            Ok(EXIT_OK)
        }
        Err(w) => {
            writeln!(
                out,
                "no sp-complement at {}: {}",
                pair(p, w.x, w.y),
                gap(p, w.gap)
            )?;
            Ok(EXIT_FAILS)
        }
    }
}

fn extend_cmd(
    file: &Path,
    name: &str,
    method: &str,
    sel_name: Option<&str>,
    out: &mut dyn Write,
) -> CmdResult {
    let doc = load(file)?;
    let p = poset(&doc, name)?;
    let sel = selection(&doc, p, sel_name)?;
    let notion = match method {
        "rp" => Some(Notion::Rp),
        "wrp" => Some(Notion::Wrp),
        "clp" => Some(Notion::Clp),
        _ => None,
    };
    let result = if let Some(notion) = notion {
        notion_table(p, notion)
    } else {
        let s = match star_table(p) {
            Ok(s) => s,
            Err(w) => {
                writeln!(
                    out,
                    "no sp-complement at {}: {}",
                    pair(p, w.x, w.y),
                    gap(p, w.gap)
                )?;
                return Ok(EXIT_FAILS);
            }
        };
        if method == "join" {
            match join_extension(p, &s) {
                Some(t) => ExtensionResult {
                    cells: t.cells().to_vec(),
                    table: Some(t),
                    undefined: Vec::new(),
                },
                None => {
                    writeln!(out, "join extension needs an upper semilattice")?;
                    return Ok(EXIT_FAILS);
                }
            }
        } else {
            let m = Method::parse(method)
                .ok_or_else(|| Failure::Usage(format!("unknown method `{method}`")))?;
            extend(p, &s, m, sel.as_ref())?
        }
    };
    let table_name = match sel_name {
        Some(s) => format!("{method}-{s}"),
        None => method.to_string(),
    };
    match result.table {
        Some(t) => {
            write!(
                out,
                "{}\n{}",
                emit_poset(p),
                emit_table(p, &table_name, &Op::Total(t))
            )?;
            Ok(EXIT_OK)
        }
        None => {
            for u in &result.undefined {
                writeln!(out, "undefined at {}: {}", pair(p, u.x, u.y), gap(p, u.gap))?;
            }
            writeln!(out, "# defined cells:")?;
            for line in emit_cells(p, &table_name, "total", &result.cells).lines() {
                writeln!(out, "# {line}")?;
            }
            Ok(EXIT_FAILS)
        }
    }
}

fn table_and_poset<'d>(
    doc: &'d Document,
    table: &str,
) -> Result<(&'d document::Table, &'d Poset), Failure> {
    let t = doc
        .table(table)
        .ok_or_else(|| Failure::Usage(format!("no table named `{table}`")))?;
    let p = poset(doc, &t.over)?;
    Ok((t, p))
}

fn check(
    file: &Path,
    table: &str,
    system: &str,
    sel_name: Option<&str>,
    reading: Reading,
    out: &mut dyn Write,
) -> CmdResult {
    let doc = load(file)?;
    let (t, p) = table_and_poset(&doc, table)?;
    let system: System = system.parse().map_err(Failure::Usage)?;
    let sel = selection(&doc, p, sel_name)?;
    let r = check_system_with(p, t.op.as_axiom_op(), system, sel.as_ref(), reading)?;
    if r.holds {
        writeln!(out, "{} satisfies {system}", t.name)?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "{} violates {system}", t.name)?;
    for v in &r.violations {
        writeln!(
            out,
            "  {} at {}",
            v.axiom,
            assignment(p, v.vars, &v.witness)
        )?;
    }
    Ok(EXIT_FAILS)
}

fn assignment(p: &Poset, vars: &[&str], witness: &[Elem]) -> String {
    vars.iter()
        .zip(witness)
        .map(|(v, &e)| format!("{v}={}", p.label(e)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn props(
    file: &Path,
    table: &str,
    suite: &str,
    sel_name: Option<&str>,
    out: &mut dyn Write,
) -> CmdResult {
    let doc = load(file)?;
    let (t, p) = table_and_poset(&doc, table)?;
    let suite: Suite = suite
        .parse()
        .map_err(|_| Failure::Usage(format!("unknown suite `{suite}`")))?;
    let sel = selection(&doc, p, sel_name)?;
    let partial = matches!(t.op, Op::Partial(_));
    if suite.for_partial() != partial {
        let kind = if suite.for_partial() {
            "partial"
        } else {
            "total"
        };
        return Err(Failure::Usage(format!(
            "suite {suite} needs a {kind} table"
        )));
    }
    if suite.needs_selection() && sel.is_none() {
        return Err(Failure::Usage(format!("suite {suite} needs --selection")));
    }
    let r = verify_lemma_suite(p, t.op.as_axiom_op(), suite, sel.as_ref());
    writeln!(
        out,
        "{suite} on {}: hypothesis {}",
        t.name,
        if r.hypothesis { "holds" } else { "fails" }
    )?;
    for (id, vars, outcome) in &r.items {
        match outcome {
            ItemOutcome::Pass(k) => writeln!(out, "  ({id}) pass, {k} instances")?,
            ItemOutcome::Fail(w) => writeln!(out, "  ({id}) FAIL at {}", assignment(p, vars, w))?,
            ItemOutcome::Skipped(why) => writeln!(out, "  ({id}) skipped: {why}")?,
        }
    }
    Ok(if r.holds() { EXIT_OK } else { EXIT_FAILS })
}

fn report(
    r: &VerificationReport,
    start: Instant,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    writeln!(
        out,
        "{:>3} {:>9} {:>9} {:>12}",
        "n", "posets", "in-class", "instances"
    )?;
    for l in &r.levels {
        writeln!(
            out,
            "{:>3} {:>9} {:>9} {:>12}",
            l.n, l.posets, l.in_class, l.instances
        )?;
    }
    let mode = match r.dedup {
        Dedup::Labeled => "labeled",
        Dedup::UpToIso => "up to isomorphism",
    };
    writeln!(err, "elapsed {:.2?}", start.elapsed())?;
    match &r.outcome {
        Outcome::Verified => {
            writeln!(
                out,
                "verified for all posets with n <= {} ({mode})",
                r.max_n
            )?;
            Ok(EXIT_OK)
        }
        Outcome::Counterexample(c) => {
            writeln!(
                out,
                "counterexample at n = {}, poset #{} ({mode}): {}",
                c.n, c.index, c.detail
            )?;
            let p = c.poset.clone().renamed("witness");
            let mut text = emit_poset(&p);
            if let Some(s) = &c.star {
                let _ = write!(
                    text,
                    "\n{}",
                    emit_cells(&p, "restriction", "partial", s.cells())
                );
            }
            if let Some(t) = &c.table {
                let _ = write!(text, "\n{}", emit_cells(&p, "table", "total", t.cells()));
            }
            write!(out, "\n{text}")?;
            Ok(EXIT_FAILS)
        }
    }
}

fn list(out: &mut dyn Write) -> CmdResult {
    writeln!(out, "theorems:")?;
    for t in Theorem::ALL {
        writeln!(
            out,
            "  {:<14} max-n {}  {}",
            t.id(),
            t.max_n(),
            t.statement()
        )?;
    }
    writeln!(out, "predicates:")?;
    for h in Hunt::ALL {
        writeln!(out, "  {:<14} max-n {}", h.id(), h.max_n())?;
    }
    let systems: Vec<String> = System::ALL.iter().map(|s| s.to_string()).collect();
    writeln!(out, "systems: {}", systems.join(" "))?;
    let suites: Vec<String> = Suite::ALL.iter().map(|s| s.to_string()).collect();
    writeln!(out, "suites: {}", suites.join(" "))?;
    let methods: Vec<&str> = Method::ALL.iter().map(|m| m.id()).collect();
    writeln!(out, "methods: {} join rp wrp clp", methods.join(" "))?;
    Ok(EXIT_OK)
}
