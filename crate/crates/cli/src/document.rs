//! The line-oriented text format for posets, operation tables and local
//! selections.
//!
//! ```text
//! poset hex
//! elements 0 a b c d 1
//! cover 0 a
//! le a d
//! end
//!
//! optable star over hex kind partial
//! row 0 : 1 - - - - -
//! ...
//! end
//!
//! selection s over hex
//! pair a b : 0 a b
//! end
//! ```
//!
//! `#` starts a comment; tokens are whitespace separated.

use std::fmt::Write as _;

use espkit::{Decl, Elem, ElemSet, LocalSelection, PartialTable, Poset, TotalTable};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("no sections")]
    NoSections,

    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },

    #[error("line {line}: {source}")]
    Model {
        line: usize,
        #[source]
        source: espkit::Error,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Op {
    Partial(PartialTable),
    Total(TotalTable),
}

impl Op {
    pub fn cells(&self) -> &[Option<Elem>] {
        match self {
            Op::Partial(t) => t.cells(),
            Op::Total(t) => t.cells(),
        }
    }

    pub fn as_axiom_op(&self) -> espkit::axioms::Op<'_> {
        match self {
            Op::Partial(t) => espkit::axioms::Op::Partial(t),
            Op::Total(t) => espkit::axioms::Op::Total(t),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub name: String,
    pub over: String,
    pub op: Op,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Selection {
    pub name: String,
    pub over: String,
    pub sel: LocalSelection,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Section {
    Poset(Poset),
    Table(Table),
    Selection(Selection),
}

impl Section {
    pub fn name(&self) -> &str {
        match self {
            Section::Poset(p) => p.name(),
            Section::Table(t) => &t.name,
            Section::Selection(s) => &s.name,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Document {
    pub sections: Vec<Section>,
}

impl Document {
    pub fn poset(&self, name: &str) -> Option<&Poset> {
        self.sections.iter().find_map(|s| match s {
            Section::Poset(p) if p.name() == name => Some(p),
            _ => None,
        })
    }

    pub fn table(&self, name: &str) -> Option<&Table> {
        self.sections.iter().find_map(|s| match s {
            Section::Table(t) if t.name == name => Some(t),
            _ => None,
        })
    }

    pub fn selection(&self, name: &str) -> Option<&Selection> {
        self.sections.iter().find_map(|s| match s {
            Section::Selection(s) if s.name == name => Some(s),
            _ => None,
        })
    }
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    /// Next non-blank line with comments stripped, as tokens.
    fn next(&mut self) -> Option<(usize, Vec<&'a str>)> {
        for (i, raw) in self.inner.by_ref() {
            self.last = i + 1;
            let text = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = text.split_whitespace().collect();
            if !tokens.is_empty() {
                return Some((i + 1, tokens));
            }
        }
        None
    }
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

fn model(line: usize) -> impl Fn(espkit::Error) -> ParseError {
    move |source| ParseError::Model { line, source }
}

pub fn parse(text: &str) -> Result<Document, ParseError> {
    parse_with_cap(text, espkit::poset::DEFAULT_ELEMENT_CAP)
}

/// Parses with `cap` as the largest accepted poset size.
pub fn parse_with_cap(text: &str, cap: usize) -> Result<Document, ParseError> {
    let mut lines = Lines {
        inner: text.lines().enumerate(),
        last: 0,
    };
    let mut doc = Document::default();
    while let Some((line, tokens)) = lines.next() {
        let section = match tokens.as_slice() {
            ["poset", name] => Section::Poset(parse_poset(&mut lines, name, cap)?),
            ["optable", name, "over", over, "kind", kind] => {
                let p = doc
                    .poset(over)
                    .ok_or_else(|| syntax(line, format!("unknown poset `{over}`")))?;
                let partial = match *kind {
                    "partial" => true,
                    "total" => false,
                    other => return Err(syntax(line, format!("unknown table kind `{other}`"))),
                };
                Section::Table(parse_table(&mut lines, p, name, partial)?)
            }
            ["selection", name, "over", over] => {
                let p = doc
                    .poset(over)
                    .ok_or_else(|| syntax(line, format!("unknown poset `{over}`")))?;
                Section::Selection(parse_selection(&mut lines, p, name)?)
            }
            _ => {
                return Err(syntax(
                    line,
                    format!("expected a section header, found `{}`", tokens.join(" ")),
                ))
            }
        };
        if doc.sections.iter().any(|s| s.name() == section.name()) {
            return Err(syntax(line, format!("duplicate name `{}`", section.name())));
        }
        doc.sections.push(section);
    }
    if doc.sections.is_empty() {
        return Err(ParseError::NoSections);
    }
    Ok(doc)
}

fn parse_poset(lines: &mut Lines, name: &str, cap: usize) -> Result<Poset, ParseError> {
    let mut elements: Option<(usize, Vec<String>)> = None;
    let mut decls = Vec::new();
    loop {
        let Some((line, tokens)) = lines.next() else {
            return Err(syntax(
                lines.last,
                format!("poset `{name}` is missing `end`"),
            ));
        };
        match tokens.as_slice() {
            ["elements", rest @ ..] if elements.is_none() => {
                elements = Some((line, rest.iter().map(|s| s.to_string()).collect()));
            }
            ["cover", x, y] => decls.push(Decl::Cover(x.to_string(), y.to_string())),
            ["le", x, y] => decls.push(Decl::Le(x.to_string(), y.to_string())),
            ["end"] => {
                let (line, elems) =
                    elements.ok_or_else(|| syntax(line, "poset has no `elements` line"))?;
                return Poset::build_with_cap(name, &elems, &decls, cap).map_err(model(line));
            }
            _ => {
                return Err(syntax(
                    line,
                    format!("unexpected `{}` in poset", tokens.join(" ")),
                ))
            }
        }
    }
}

fn parse_table(
    lines: &mut Lines,
    p: &Poset,
    name: &str,
    partial: bool,
) -> Result<Table, ParseError> {
    let n = p.n();
    let mut cells = vec![None; n * n];
    let mut next_row = 0;
    loop {
        let Some((line, tokens)) = lines.next() else {
            return Err(syntax(
                lines.last,
                format!("table `{name}` is missing `end`"),
            ));
        };
        match tokens.as_slice() {
            ["row", x, ":", values @ ..] => {
                if next_row == n {
                    return Err(syntax(line, "more rows than elements"));
                }
                if *x != p.label(next_row) {
                    return Err(syntax(
                        line,
                        format!("expected row `{}`, found `{x}`", p.label(next_row)),
                    ));
                }
                if values.len() != n {
                    return Err(syntax(
                        line,
                        format!("row has {} values, expected {n}", values.len()),
                    ));
                }
                for (y, v) in values.iter().enumerate() {
                    cells[next_row * n + y] = match *v {
                        "-" => None,
                        v => Some(p.elem(v).map_err(model(line))?),
                    };
                }
                next_row += 1;
            }
            ["end"] => {
                if next_row != n {
                    return Err(syntax(
                        line,
                        format!("table has {next_row} rows, expected {n}"),
                    ));
                }
                let op = if partial {
                    Op::Partial(PartialTable::new(p, cells).map_err(model(line))?)
                } else {
                    let missing = cells.iter().position(Option::is_none);
                    if let Some(i) = missing {
                        return Err(syntax(
                            line,
                            format!(
                                "total table undefined at ({}, {})",
                                p.label(i / n),
                                p.label(i % n)
                            ),
                        ));
                    }
                    Op::Total(TotalTable::from_cells(n, cells).expect("all cells defined"))
                };
                return Ok(Table {
                    name: name.to_string(),
                    over: p.name().to_string(),
                    op,
                });
            }
            _ => {
                return Err(syntax(
                    line,
                    format!("unexpected `{}` in table", tokens.join(" ")),
                ))
            }
        }
    }
}

fn parse_selection(lines: &mut Lines, p: &Poset, name: &str) -> Result<Selection, ParseError> {
    let mut entries: Vec<(Elem, Elem, ElemSet)> = Vec::new();
    loop {
        let Some((line, tokens)) = lines.next() else {
            return Err(syntax(
                lines.last,
                format!("selection `{name}` is missing `end`"),
            ));
        };
        match tokens.as_slice() {
            ["pair", x, y, ":", members @ ..] => {
                let x = p.elem(x).map_err(model(line))?;
                let y = p.elem(y).map_err(model(line))?;
                let set = p.set_of(members).map_err(model(line))?;
                entries.push((x, y, set));
            }
            ["end"] => {
                let sel = LocalSelection::custom(p, name, &entries).map_err(model(line))?;
                return Ok(Selection {
                    name: name.to_string(),
                    over: p.name().to_string(),
                    sel,
                });
            }
            _ => {
                return Err(syntax(
                    line,
                    format!("unexpected `{}` in selection", tokens.join(" ")),
                ))
            }
        }
    }
}

pub fn emit(doc: &Document) -> String {
    let mut out = String::new();
    for (i, s) in doc.sections.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        match s {
            Section::Poset(p) => out.push_str(&emit_poset(p)),
            Section::Table(t) => {
                let p = doc.poset(&t.over).expect("table over a known poset");
                out.push_str(&emit_table(p, &t.name, &t.op));
            }
            Section::Selection(s) => {
                let p = doc.poset(&s.over).expect("selection over a known poset");
                out.push_str(&emit_selection(p, &s.name, &s.sel));
            }
        }
    }
    out
}

pub fn emit_poset(p: &Poset) -> String {
    let mut out = format!("poset {}\nelements {}\n", p.name(), p.labels().join(" "));
    for (x, y) in p.covers() {
        let _ = writeln!(out, "cover {} {}", p.label(x), p.label(y));
    }
    out.push_str("end\n");
    out
}

pub fn emit_table(p: &Poset, name: &str, op: &Op) -> String {
    let kind = match op {
        Op::Partial(_) => "partial",
        Op::Total(_) => "total",
    };
    emit_cells(p, name, kind, op.cells())
}

/// Emits a grid that may have undefined cells anywhere.
pub fn emit_cells(p: &Poset, name: &str, kind: &str, cells: &[Option<Elem>]) -> String {
    let n = p.n();
    let mut out = format!("optable {name} over {} kind {kind}\n", p.name());
    for x in p.elems() {
        let row: Vec<&str> = (0..n)
            .map(|y| cells[x * n + y].map_or("-", |v| p.label(v)))
            .collect();
        let _ = writeln!(out, "row {} : {}", p.label(x), row.join(" "));
    }
    out.push_str("end\n");
    out
}

/// Lists every incomparable pair once; comparable pairs are implied.
pub fn emit_selection(p: &Poset, name: &str, sel: &LocalSelection) -> String {
    let mut out = format!("selection {name} over {}\n", p.name());
    for x in p.elems() {
        for y in x + 1..p.n() {
            if !p.comparable(x, y) {
                let _ = writeln!(
                    out,
                    "pair {} {} : {}",
                    p.label(x),
                    p.label(y),
                    p.names(sel.get(x, y)).join(" ")
                );
            }
        }
    }
    out.push_str("end\n");
    out
}
