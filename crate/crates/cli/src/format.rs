//! The `wb-format 1` text format: a header line, then declarations
//!
//! ```text
//! kind name dim [over X | source C target D]
//! [degrees d_1 … d_dim]
//! section
//! entry i j value
//! …
//! end
//! ```
//!
//! Entries not listed are zero. Lines starting with `#` are comments.

use std::fmt::{self, Write as _};

use thiserror::Error;
use wb_core::adjlift::LaxStructure;
use wb_core::comodcat::Comodule;
use wb_core::exactlin::{LinMap, Scalar};
use wb_core::oplaxfun::OplaxStructure;
use wb_core::structures::{FinAlgebra, FinBialgebra, FinCoalgebra};

pub const HEADER: &str = "wb-format 1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Coalgebra,
    Algebra,
    Bialgebra,
    Comodule,
    Oplax,
    Lax,
    Adjunction,
    Complex,
    DgComodule,
}

impl Kind {
    const ALL: [Kind; 9] = [
        Kind::Coalgebra,
        Kind::Algebra,
        Kind::Bialgebra,
        Kind::Comodule,
        Kind::Oplax,
        Kind::Lax,
        Kind::Adjunction,
        Kind::Complex,
        Kind::DgComodule,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            Kind::Coalgebra => "coalgebra",
            Kind::Algebra => "algebra",
            Kind::Bialgebra => "bialgebra",
            Kind::Comodule => "comodule",
            Kind::Oplax => "oplax",
            Kind::Lax => "lax",
            Kind::Adjunction => "adjunction",
            Kind::Complex => "complex",
            Kind::DgComodule => "dgcomodule",
        }
    }

    fn sections(self) -> &'static [&'static str] {
        match self {
            Kind::Coalgebra => &["comult", "counit"],
            Kind::Algebra => &["mult", "unit"],
            Kind::Bialgebra => &["comult", "counit", "mult", "unit"],
            Kind::Comodule => &["coaction"],
            Kind::Oplax => &["b"],
            Kind::Lax => &["bhat"],
            Kind::Adjunction => &["pairing"],
            Kind::Complex => &["differential"],
            Kind::DgComodule => &["differential", "coaction"],
        }
    }

    fn keys(self) -> &'static [&'static str] {
        match self {
            Kind::Comodule | Kind::DgComodule => &["over"],
            Kind::Oplax | Kind::Lax => &["source", "target"],
            _ => &[],
        }
    }

    fn has_degrees(self) -> bool {
        matches!(self, Kind::Complex | Kind::DgComodule)
    }
}

/// One declared object. Structures are stored as declared; validators run later.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Coalgebra(FinCoalgebra),
    Algebra(FinAlgebra),
    Bialgebra(FinBialgebra),
    Comodule { over: String, comodule: Comodule },
    Oplax { source: String, target: String, structure: OplaxStructure },
    Lax { source: String, target: String, structure: LaxStructure },
    Adjunction { pairing: LinMap },
    Complex { degrees: Vec<i64>, differential: LinMap },
    DgComodule { over: String, degrees: Vec<i64>, differential: LinMap, coaction: LinMap },
}

impl Value {
    pub fn kind(&self) -> Kind {
        match self {
            Value::Coalgebra(_) => Kind::Coalgebra,
            Value::Algebra(_) => Kind::Algebra,
            Value::Bialgebra(_) => Kind::Bialgebra,
            Value::Comodule { .. } => Kind::Comodule,
            Value::Oplax { .. } => Kind::Oplax,
            Value::Lax { .. } => Kind::Lax,
            Value::Adjunction { .. } => Kind::Adjunction,
            Value::Complex { .. } => Kind::Complex,
            Value::DgComodule { .. } => Kind::DgComodule,
        }
    }

    /// Names this declaration refers to.
    pub fn references(&self) -> Vec<&str> {
        match self {
            Value::Comodule { over, .. } | Value::DgComodule { over, .. } => vec![over],
            Value::Oplax { source, target, .. } | Value::Lax { source, target, .. } => vec![source, target],
            _ => vec![],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Declaration {
    pub name: String,
    pub value: Value,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WorkbenchFile {
    pub decls: Vec<Declaration>,
}

impl WorkbenchFile {
    pub fn get(&self, name: &str) -> Option<&Value> {
        self.decls.iter().find(|d| d.name == name).map(|d| &d.value)
    }

    /// The coalgebra a name denotes (a coalgebra or the coalgebra of a bialgebra).
    pub fn coalgebra(&self, name: &str) -> Option<FinCoalgebra> {
        match self.get(name)? {
            Value::Coalgebra(c) => Some(c.clone()),
            Value::Bialgebra(h) => Some(h.coalgebra().clone()),
            _ => None,
        }
    }
}

struct Token<'a> {
    text: &'a str,
    col: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push(Token {
                    text: &line[s..i],
                    col: line[..s].chars().count() + 1,
                });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    out
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> ParseError {
    ParseError { line, col, msg: msg.into() }
}

pub fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || "_.-".contains(c))
}

fn parse_usize(t: &Token, line: usize, what: &str) -> Result<usize, ParseError> {
    t.text
        .parse()
        .map_err(|_| err(line, t.col, format!("expected {what}, found `{}`", t.text)))
}

/// Shapes of the sections of a declaration, given the dims of referenced coalgebras.
fn section_shape(kind: Kind, section: &str, dim: usize, refs: &[usize]) -> (usize, usize) {
    match (kind, section) {
        (_, "comult") => (dim * dim, dim),
        (_, "counit") => (1, dim),
        (_, "mult") => (dim, dim * dim),
        (_, "unit") => (dim, 1),
        (_, "coaction") => (dim * refs[0], dim),
        (Kind::Oplax, "b") => (dim * refs[1], refs[0] * dim),
        (Kind::Lax, "bhat") => (refs[1] * dim, dim * refs[0]),
        (_, "pairing") | (_, "differential") => (dim, dim),
        _ => unreachable!("unknown section {section}"),
    }
}

struct Pending {
    kind: Kind,
    name: String,
    dim: usize,
    line: usize,
    keys: Vec<(String, String)>,
    ref_dims: Vec<usize>,
    degrees: Option<Vec<i64>>,
    sections: Vec<(String, LinMap)>,
    current: Option<usize>,
}

pub fn parse(text: &str) -> Result<WorkbenchFile, ParseError> {
    let mut file = WorkbenchFile::default();
    let mut seen_header = false;
    let mut pending: Option<Pending> = None;
    for (idx, raw) in text.lines().enumerate() {
        let ln = idx + 1;
        let toks = tokens(raw);
        let Some(first) = toks.first() else { continue };
        if first.text.starts_with('#') {
            continue;
        }
        if !seen_header {
            if raw.trim() != HEADER {
                return Err(err(ln, first.col, format!("expected `{HEADER}`")));
            }
            seen_header = true;
            continue;
        }
        match pending.as_mut() {
            None => pending = Some(parse_header(&file, &toks, ln)?),
            Some(p) => {
                if first.text == "end" {
                    if toks.len() > 1 {
                        return Err(err(ln, toks[1].col, "unexpected token after `end`"));
                    }
                    let p = pending.take().unwrap();
                    let value = finish(&file, p, ln)?;
                    file.decls.push(value);
                } else {
                    parse_body_line(p, &toks, ln)?;
                }
            }
        }
    }
    if let Some(p) = pending {
        return Err(err(p.line, 1, format!("declaration `{}` is missing `end`", p.name)));
    }
    Ok(file)
}

fn parse_header(file: &WorkbenchFile, toks: &[Token], ln: usize) -> Result<Pending, ParseError> {
    let first = &toks[0];
    let kind = Kind::ALL
        .into_iter()
        .find(|k| k.keyword() == first.text)
        .ok_or_else(|| err(ln, first.col, format!("unknown declaration kind `{}`", first.text)))?;
    let name_tok = toks.get(1).ok_or_else(|| err(ln, first.col, "missing name"))?;
    if !is_name(name_tok.text) {
        return Err(err(ln, name_tok.col, format!("invalid name `{}`", name_tok.text)));
    }
    if file.get(name_tok.text).is_some() {
        return Err(err(ln, name_tok.col, format!("`{}` is already declared", name_tok.text)));
    }
    let dim_tok = toks.get(2).ok_or_else(|| err(ln, name_tok.col, "missing dimension"))?;
    let dim = parse_usize(dim_tok, ln, "a dimension")?;
    let want = kind.keys();
    let rest = &toks[3..];
    if rest.len() != 2 * want.len() {
        let col = rest.first().map_or(dim_tok.col, |t| t.col);
        return Err(err(ln, col, format!("`{}` takes: {}", kind.keyword(), want.join(" X "))));
    }
    let mut keys = Vec::new();
    let mut ref_dims = Vec::new();
    for (pair, key) in rest.chunks(2).zip(want) {
        if pair[0].text != *key {
            return Err(err(ln, pair[0].col, format!("expected `{key}`, found `{}`", pair[0].text)));
        }
        let target = pair[1].text;
        let c = file
            .coalgebra(target)
            .ok_or_else(|| err(ln, pair[1].col, format!("`{target}` is not a declared coalgebra or bialgebra")))?;
        if kind == Kind::DgComodule && !matches!(file.get(target), Some(Value::Bialgebra(_))) {
            return Err(err(ln, pair[1].col, format!("`{target}` is not a declared bialgebra")));
        }
        ref_dims.push(c.dim());
        keys.push((key.to_string(), target.to_string()));
    }
    Ok(Pending {
        kind,
        name: name_tok.text.to_string(),
        dim,
        line: ln,
        keys,
        ref_dims,
        degrees: None,
        sections: Vec::new(),
        current: None,
    })
}

fn parse_body_line(p: &mut Pending, toks: &[Token], ln: usize) -> Result<(), ParseError> {
    let first = &toks[0];
    if first.text == "degrees" && p.kind.has_degrees() {
        if p.degrees.is_some() {
            return Err(err(ln, first.col, "duplicate `degrees`"));
        }
        let degs = toks[1..]
            .iter()
            .map(|t| {
                t.text
                    .parse::<i64>()
                    .map_err(|_| err(ln, t.col, format!("expected a degree, found `{}`", t.text)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if degs.len() != p.dim {
            return Err(err(ln, first.col, format!("expected {} degrees, found {}", p.dim, degs.len())));
        }
        if degs.windows(2).any(|w| w[0] > w[1]) {
            return Err(err(ln, first.col, "degrees must be nondecreasing"));
        }
        p.degrees = Some(degs);
        return Ok(());
    }
    if first.text == "entry" {
        let k = p.current.ok_or_else(|| err(ln, first.col, "`entry` outside a section"))?;
        if toks.len() != 4 {
            return Err(err(ln, first.col, "expected `entry i j value`"));
        }
        let i = parse_usize(&toks[1], ln, "a row index")?;
        let j = parse_usize(&toks[2], ln, "a column index")?;
        let v: Scalar = toks[3]
            .text
            .parse()
            .map_err(|e| err(ln, toks[3].col, format!("bad rational `{}`: {e}", toks[3].text)))?;
        let (name, m) = &mut p.sections[k];
        if i >= m.rows() || j >= m.cols() {
            return Err(err(
                ln,
                toks[1].col,
                format!("entry ({i}, {j}) outside the {}x{} section `{name}`", m.rows(), m.cols()),
            ));
        }
        m.set(i, j, v);
        return Ok(());
    }
    if let Some(&sec) = p.kind.sections().iter().find(|s| **s == first.text) {
        if toks.len() > 1 {
            return Err(err(ln, toks[1].col, "unexpected token after section name"));
        }
        if p.sections.iter().any(|(n, _)| n == sec) {
            return Err(err(ln, first.col, format!("duplicate section `{sec}`")));
        }
        let (r, c) = section_shape(p.kind, sec, p.dim, &p.ref_dims);
        p.sections.push((sec.to_string(), LinMap::zeros(r, c)));
        p.current = Some(p.sections.len() - 1);
        return Ok(());
    }
    Err(err(
        ln,
        first.col,
        format!("unexpected `{}` in `{}` declaration", first.text, p.kind.keyword()),
    ))
}

fn finish(file: &WorkbenchFile, p: Pending, ln: usize) -> Result<Declaration, ParseError> {
    let mut sections = p.sections;
    let mut take = |name: &str| -> Result<LinMap, ParseError> {
        let k = sections
            .iter()
            .position(|(n, _)| n == name)
            .ok_or_else(|| err(ln, 1, format!("`{}` is missing section `{name}`", p.name)))?;
        Ok(sections.swap_remove(k).1)
    };
    let key = |k: usize| p.keys[k].1.clone();
    let coalg = |k: usize| file.coalgebra(&p.keys[k].1).expect("checked in header");
    let shape = |e: wb_core::Error| err(p.line, 1, e.to_string());
    let degrees = || {
        p.degrees
            .clone()
            .ok_or_else(|| err(ln, 1, format!("`{}` is missing `degrees`", p.name)))
    };
    let value = match p.kind {
        Kind::Coalgebra => {
            let (d, e) = (take("comult")?, take("counit")?);
            Value::Coalgebra(FinCoalgebra::new(p.dim, d, e).map_err(shape)?)
        }
        Kind::Algebra => {
            let (m, u) = (take("mult")?, take("unit")?);
            Value::Algebra(FinAlgebra::new(p.dim, m, u).map_err(shape)?)
        }
        Kind::Bialgebra => {
            let (d, e, m, u) = (take("comult")?, take("counit")?, take("mult")?, take("unit")?);
            let c = FinCoalgebra::new(p.dim, d, e).map_err(shape)?;
            let a = FinAlgebra::new(p.dim, m, u).map_err(shape)?;
            Value::Bialgebra(FinBialgebra::new(c, a).map_err(shape)?)
        }
        Kind::Comodule => Value::Comodule {
            over: key(0),
            comodule: Comodule::new(coalg(0), p.dim, take("coaction")?).map_err(shape)?,
        },
        Kind::Oplax => Value::Oplax {
            source: key(0),
            target: key(1),
            structure: OplaxStructure::new(coalg(0), coalg(1), p.dim, take("b")?).map_err(shape)?,
        },
        Kind::Lax => Value::Lax {
            source: key(0),
            target: key(1),
            structure: LaxStructure::new(coalg(0), coalg(1), p.dim, take("bhat")?).map_err(shape)?,
        },
        Kind::Adjunction => Value::Adjunction { pairing: take("pairing")? },
        Kind::Complex => Value::Complex {
            degrees: degrees()?,
            differential: take("differential")?,
        },
        Kind::DgComodule => Value::DgComodule {
            over: key(0),
            degrees: degrees()?,
            differential: take("differential")?,
            coaction: take("coaction")?,
        },
    };
    Ok(Declaration { name: p.name, value })
}

fn write_matrix(out: &mut String, section: &str, m: &LinMap) {
    let _ = writeln!(out, "{section}");
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let v = m.get(i, j);
            if !v.is_zero() {
                let _ = writeln!(out, "entry {i} {j} {v}");
            }
        }
    }
}

fn write_degrees(out: &mut String, degrees: &[i64]) {
    out.push_str("degrees");
    for d in degrees {
        let _ = write!(out, " {d}");
    }
    out.push('\n');
}

/// Canonical text of one declaration.
pub fn print_decl(d: &Declaration) -> String {
    let mut out = String::new();
    let kw = d.value.kind().keyword();
    let name = &d.name;
    match &d.value {
        Value::Coalgebra(c) => {
            let _ = writeln!(out, "{kw} {name} {}", c.dim());
            write_matrix(&mut out, "comult", c.comult());
            write_matrix(&mut out, "counit", c.counit());
        }
        Value::Algebra(a) => {
            let _ = writeln!(out, "{kw} {name} {}", a.dim());
            write_matrix(&mut out, "mult", a.mult());
            write_matrix(&mut out, "unit", a.unit());
        }
        Value::Bialgebra(h) => {
            let _ = writeln!(out, "{kw} {name} {}", h.dim());
            write_matrix(&mut out, "comult", h.coalgebra().comult());
            write_matrix(&mut out, "counit", h.coalgebra().counit());
            write_matrix(&mut out, "mult", h.algebra().mult());
            write_matrix(&mut out, "unit", h.algebra().unit());
        }
        Value::Comodule { over, comodule } => {
            let _ = writeln!(out, "{kw} {name} {} over {over}", comodule.dim());
            write_matrix(&mut out, "coaction", comodule.coaction());
        }
        Value::Oplax { source, target, structure } => {
            let _ = writeln!(out, "{kw} {name} {} source {source} target {target}", structure.carrier());
            write_matrix(&mut out, "b", structure.b());
        }
        Value::Lax { source, target, structure } => {
            let _ = writeln!(out, "{kw} {name} {} source {source} target {target}", structure.carrier());
            write_matrix(&mut out, "bhat", structure.bhat());
        }
        Value::Adjunction { pairing } => {
            let _ = writeln!(out, "{kw} {name} {}", pairing.rows());
            write_matrix(&mut out, "pairing", pairing);
        }
        Value::Complex { degrees, differential } => {
            let _ = writeln!(out, "{kw} {name} {}", degrees.len());
            write_degrees(&mut out, degrees);
            write_matrix(&mut out, "differential", differential);
        }
        Value::DgComodule { over, degrees, differential, coaction } => {
            let _ = writeln!(out, "{kw} {name} {} over {over}", degrees.len());
            write_degrees(&mut out, degrees);
            write_matrix(&mut out, "differential", differential);
            write_matrix(&mut out, "coaction", coaction);
        }
    }
    out.push_str("end\n");
    out
}

impl fmt::Display for WorkbenchFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{HEADER}")?;
        for d in &self.decls {
            writeln!(f)?;
            f.write_str(&print_decl(d))?;
        }
        Ok(())
    }
}
