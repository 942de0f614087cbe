//! The `encat/1` document format and the command-line driver.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::equiv::{bimodule_completion, cylinder_to_module, cylinder_to_tensored, module_to_cylinder, tensored_to_cylinder};
use crate::fincat::{validate_category, FinCategory};
use crate::instances::{build_bool, build_cyc, build_trop, module_self, poset_diamond, Instance};
use crate::monoidal::{check_closed, check_monoidal, check_symmetry, ClosedData, MonoidalData, SymmetryData};
use crate::vcat::{associated_vcategory, check_tensored, check_vcategory, underlying_category, TensoredData, VCategoryData};
use crate::vmodule::{
    check_closed_bimodule, check_closed_module, check_tensor_closed, check_vmodule, induced_vstructure, ClosedBimoduleData,
    ClosedVModuleData, TensorClosedModuleData, VModuleData,
};
use crate::vstruct::{check_cylinder, check_path, check_vstructure, CylinderAssignment, PathAssignment, VStructureData};
use crate::{CheckReport, Error, LAW_REGISTRY};

pub const FORMAT_VERSION: &str = "encat/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidalDoc {
    pub monoidal: MonoidalData,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetry: Option<SymmetryData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed: Option<ClosedData>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VCategoryDoc {
    pub vcategory: VCategoryData,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed: Option<ClosedData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tensored: Option<TensoredData>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CylinderDoc {
    pub vstructure: VStructureData,
    pub closed: ClosedData,
    pub cylinder: CylinderAssignment,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathDoc {
    pub vstructure: VStructureData,
    pub closed: ClosedData,
    pub symmetry: SymmetryData,
    pub path: PathAssignment,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleDoc<M> {
    pub module: M,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed: Option<ClosedData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetry: Option<SymmetryData>,
}

/// A parsed document. The variant is the document's `kind`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    FinCategory(FinCategory),
    Monoidal(MonoidalDoc),
    VCategory(VCategoryDoc),
    VStructure(VStructureData),
    Cylinder(CylinderDoc),
    Path(PathDoc),
    VModule(VModuleData),
    TensorClosed(ModuleDoc<TensorClosedModuleData>),
    ClosedModule(ModuleDoc<ClosedVModuleData>),
    Bimodule(ModuleDoc<ClosedBimoduleData>),
}

pub const KINDS: &[&str] = &[
    "fincategory",
    "monoidal",
    "vcategory",
    "vstructure",
    "cylinder",
    "path",
    "vmodule",
    "tensorclosed",
    "closedmodule",
    "bimodule",
];

#[derive(Deserialize)]
struct Raw {
    meta: String,
    kind: String,
    body: Value,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    UnresolvedReference,
    DuplicateId,
    VersionMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{kind:?} at line {line}, column {column}: {message}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: usize,
    pub column: usize,
    /// The offending token, when there is one.
    pub token: Option<String>,
    pub message: String,
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::FinCategory(_) => "fincategory",
            Document::Monoidal(_) => "monoidal",
            Document::VCategory(_) => "vcategory",
            Document::VStructure(_) => "vstructure",
            Document::Cylinder(_) => "cylinder",
            Document::Path(_) => "path",
            Document::VModule(_) => "vmodule",
            Document::TensorClosed(_) => "tensorclosed",
            Document::ClosedModule(_) => "closedmodule",
            Document::Bimodule(_) => "bimodule",
        }
    }

    fn text<T: Serialize>(&self, body: &T) -> String {
        #[derive(Serialize)]
        struct Out<'a, T> {
            meta: &'a str,
            kind: &'a str,
            body: &'a T,
        }
        let mut s = serde_json::to_string_pretty(&Out { meta: FORMAT_VERSION, kind: self.kind(), body }).expect("tables serialize");
        s.push('\n');
        s
    }
}

/// Canonical text: pretty JSON with fields in declaration order (objects,
/// then morphisms, then tables) and every table sorted by key.
pub fn serialize(doc: &Document) -> String {
    match doc {
        Document::FinCategory(b) => doc.text(b),
        Document::Monoidal(b) => doc.text(b),
        Document::VCategory(b) => doc.text(b),
        Document::VStructure(b) => doc.text(b),
        Document::Cylinder(b) => doc.text(b),
        Document::Path(b) => doc.text(b),
        Document::VModule(b) => doc.text(b),
        Document::TensorClosed(b) => doc.text(b),
        Document::ClosedModule(b) => doc.text(b),
        Document::Bimodule(b) => doc.text(b),
    }
}

fn position(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.rfind('\n').map(|i| before[i + 1..].chars().count()).unwrap_or(before.chars().count()) + 1;
    (line, column)
}

fn at_token(text: &str, kind: ParseErrorKind, token: &str, message: String) -> ParseError {
    let needle = serde_json::to_string(token).unwrap_or_default();
    let (line, column) = text.find(&needle).map(|i| position(text, i)).unwrap_or((0, 0));
    ParseError { kind, line, column, token: Some(token.to_string()), message }
}

fn from_serde(e: serde_json::Error) -> ParseError {
    let msg = e.to_string();
    if let Some(rest) = msg.strip_prefix("duplicate-id ") {
        let token = rest.split(" at line").next().unwrap_or(rest).trim_matches('"').to_string();
        return ParseError { kind: ParseErrorKind::DuplicateId, line: e.line(), column: e.column(), token: Some(token), message: msg };
    }
    ParseError { kind: ParseErrorKind::Syntax, line: e.line(), column: e.column(), token: None, message: msg }
}

/// Ids declared by the body: every entry of an `objects` list and every
/// key of a `morphisms` table, at any depth.
fn declared(v: &Value, out: &mut BTreeSet<String>) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match (k.as_str(), x) {
                    ("objects", Value::Array(xs)) => out.extend(xs.iter().filter_map(|x| x.as_str().map(String::from))),
                    ("morphisms", Value::Array(xs)) => out.extend(
                        xs.iter().filter_map(|e| e.as_array().and_then(|e| e.first()).and_then(|x| x.as_str()).map(String::from)),
                    ),
                    _ => {}
                }
                declared(x, out);
            }
        }
        Value::Array(xs) => xs.iter().for_each(|x| declared(x, out)),
        _ => {}
    }
}

/// The first string leaf that is not a declared id.
fn unresolved<'a>(v: &'a Value, known: &BTreeSet<String>) -> Option<&'a str> {
    match v {
        Value::String(s) if !known.contains(s) => Some(s),
        Value::Object(map) => map.values().find_map(|x| unresolved(x, known)),
        Value::Array(xs) => xs.iter().find_map(|x| unresolved(x, known)),
        _ => None,
    }
}

fn body<T: serde::de::DeserializeOwned>(text: &str, v: Value) -> Result<T, ParseError> {
    serde_json::from_value(v).map_err(|e| {
        let msg = e.to_string();
        match msg.strip_prefix("duplicate-id ") {
            Some(rest) => {
                let token = rest.trim_matches('"').to_string();
                at_token(text, ParseErrorKind::DuplicateId, &token, msg.clone())
            }
            None => ParseError { kind: ParseErrorKind::Syntax, line: 0, column: 0, token: None, message: msg },
        }
    })
}

pub fn parse(text: &str) -> Result<Document, ParseError> {
    let raw: Raw = serde_json::from_str(text).map_err(from_serde)?;
    if raw.meta != FORMAT_VERSION {
        let meta = raw.meta.clone();
        return Err(at_token(text, ParseErrorKind::VersionMismatch, &meta, format!("expected {FORMAT_VERSION}, found {meta}")));
    }
    let mut known = BTreeSet::new();
    declared(&raw.body, &mut known);
    if let Some(bad) = unresolved(&raw.body, &known) {
        let bad = bad.to_string();
        return Err(at_token(text, ParseErrorKind::UnresolvedReference, &bad, format!("undeclared id `{bad}`")));
    }
    let b = raw.body;
    Ok(match raw.kind.as_str() {
        "fincategory" => Document::FinCategory(body(text, b)?),
        "monoidal" => Document::Monoidal(body(text, b)?),
        "vcategory" => Document::VCategory(body(text, b)?),
        "vstructure" => Document::VStructure(body(text, b)?),
        "cylinder" => Document::Cylinder(body(text, b)?),
        "path" => Document::Path(body(text, b)?),
        "vmodule" => Document::VModule(body(text, b)?),
        "tensorclosed" => Document::TensorClosed(body(text, b)?),
        "closedmodule" => Document::ClosedModule(body(text, b)?),
        "bimodule" => Document::Bimodule(body(text, b)?),
        other => {
            return Err(at_token(text, ParseErrorKind::Syntax, other, format!("unknown kind `{other}`, expected one of {KINDS:?}")))
        }
    })
}

fn need<'a, T>(x: &'a Option<T>, what: &str) -> crate::Result<&'a T> {
    x.as_ref().ok_or_else(|| Error::ShapeMismatch(format!("document has no `{what}` section")))
}

/// Runs every checker that applies to the document's kind.
pub fn check_document(doc: &Document) -> crate::Result<Vec<CheckReport>> {
    let mut out = match doc {
        Document::FinCategory(c) => validate_category(c)?,
        Document::Monoidal(d) => {
            let mut r = check_monoidal(&d.monoidal)?;
            if r.is_empty() {
                if let Some(s) = &d.symmetry {
                    r.extend(check_symmetry(&d.monoidal, s)?);
                }
                if let Some(cl) = &d.closed {
                    r.extend(check_closed(&d.monoidal, cl)?);
                }
            }
            r
        }
        Document::VCategory(d) => {
            let mut r = check_vcategory(&d.vcategory)?;
            if let (true, Some(td)) = (r.is_empty(), &d.tensored) {
                r.extend(check_tensored(&d.vcategory, need(&d.closed, "closed")?, td)?);
            }
            r
        }
        Document::VStructure(vs) => check_vstructure(vs)?,
        Document::Cylinder(d) => {
            let mut r = check_vstructure(&d.vstructure)?;
            if r.is_empty() {
                r = check_cylinder(&d.vstructure, &d.closed, &d.cylinder)?;
            }
            r
        }
        Document::Path(d) => {
            let mut r = check_vstructure(&d.vstructure)?;
            if r.is_empty() {
                r = check_path(&d.vstructure, &d.closed, &d.symmetry, &d.path)?;
            }
            r
        }
        Document::VModule(md) => check_vmodule(md)?,
        Document::TensorClosed(d) => check_tensor_closed(&d.module)?,
        Document::ClosedModule(d) => check_closed_module(&d.module)?,
        Document::Bimodule(d) => check_closed_bimodule(&d.module, need(&d.closed, "closed")?, need(&d.symmetry, "symmetry")?)?,
    };
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Op {
    Underlying,
    AssociatedVcat,
    InducedVstructure,
    ModuleToCylinder,
    CylinderToModule,
    TensoredToCylinder,
    CylinderToTensored,
    BimoduleComplete,
}

fn tensor_closed(doc: &Document) -> Option<(&TensorClosedModuleData, Option<&ClosedData>, Option<&SymmetryData>)> {
    match doc {
        Document::TensorClosed(d) => Some((&d.module, d.closed.as_ref(), d.symmetry.as_ref())),
        Document::ClosedModule(d) => Some((&d.module.tensor_closed, d.closed.as_ref(), d.symmetry.as_ref())),
        Document::Bimodule(d) => Some((&d.module.closed_module.tensor_closed, d.closed.as_ref(), d.symmetry.as_ref())),
        _ => None,
    }
}

fn wrong_kind(op: Op, doc: &Document) -> Error {
    Error::ShapeMismatch(format!("{op:?} does not apply to a {} document", doc.kind()))
}

/// Runs a named construction.
pub fn construct(doc: &Document, op: Op) -> crate::Result<Document> {
    match (op, doc) {
        (Op::Underlying, Document::VCategory(d)) => Ok(Document::VStructure(underlying_category(&d.vcategory)?.1)),
        (Op::AssociatedVcat, Document::VStructure(vs)) => {
            Ok(Document::VCategory(VCategoryDoc { vcategory: associated_vcategory(vs)?, closed: None, tensored: None }))
        }
        (Op::AssociatedVcat, Document::Cylinder(d)) => Ok(Document::VCategory(VCategoryDoc {
            vcategory: associated_vcategory(&d.vstructure)?,
            closed: Some(d.closed.clone()),
            tensored: None,
        })),
        (Op::InducedVstructure, d) => match tensor_closed(d) {
            Some((tc, _, _)) => Ok(Document::VStructure(induced_vstructure(tc)?)),
            None => Err(wrong_kind(op, doc)),
        },
        (Op::ModuleToCylinder, d) => match tensor_closed(d) {
            Some((tc, cl, _)) => {
                let cl = need(&cl.cloned(), "closed")?.clone();
                let (vstructure, cylinder) = module_to_cylinder(tc, &cl)?;
                Ok(Document::Cylinder(CylinderDoc { vstructure, closed: cl, cylinder }))
            }
            None => Err(wrong_kind(op, doc)),
        },
        (Op::CylinderToModule, Document::Cylinder(d)) => Ok(Document::TensorClosed(ModuleDoc {
            module: cylinder_to_module(&d.vstructure, &d.closed, &d.cylinder)?,
            closed: Some(d.closed.clone()),
            symmetry: None,
        })),
        (Op::CylinderToTensored, Document::Cylinder(d)) => {
            let (vcategory, td) = cylinder_to_tensored(&d.vstructure, &d.cylinder)?;
            Ok(Document::VCategory(VCategoryDoc { vcategory, closed: Some(d.closed.clone()), tensored: Some(td) }))
        }
        (Op::TensoredToCylinder, Document::VCategory(d)) => {
            let cl = need(&d.closed, "closed")?;
            let td = need(&d.tensored, "tensored")?;
            let cylinder = tensored_to_cylinder(&d.vcategory, cl, td)?;
            let (_, vstructure) = underlying_category(&d.vcategory)?;
            Ok(Document::Cylinder(CylinderDoc { vstructure, closed: cl.clone(), cylinder }))
        }
        (Op::BimoduleComplete, Document::ClosedModule(d)) => Ok(Document::Bimodule(ModuleDoc {
            module: bimodule_completion(&d.module, need(&d.symmetry, "symmetry")?)?,
            closed: d.closed.clone(),
            symmetry: d.symmetry.clone(),
        })),
        _ => Err(wrong_kind(op, doc)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Pair {
    ModuleCylinder,
    CylinderTensored,
}

/// Path to the first place two JSON values differ.
pub fn first_difference(a: &Value, b: &Value) -> Option<String> {
    match (a, b) {
        (Value::Object(x), Value::Object(y)) => {
            let keys: BTreeSet<&String> = x.keys().chain(y.keys()).collect();
            keys.into_iter().find_map(|k| match (x.get(k), y.get(k)) {
                (Some(u), Some(v)) => first_difference(u, v).map(|p| format!("{k}{p}")).map(|p| format!(".{p}")),
                _ => Some(format!(".{k}")),
            })
        }
        (Value::Array(x), Value::Array(y)) => {
            // entry tables: report the key rather than the index
            let label = |e: &Value, i: usize| match e.as_array().and_then(|e| e.first()) {
                Some(k) if e.as_array().map(|e| e.len()) == Some(2) => format!("[{k}]"),
                _ => format!("[{i}]"),
            };
            for i in 0..x.len().max(y.len()) {
                match (x.get(i), y.get(i)) {
                    (Some(u), Some(v)) => {
                        if let Some(p) = first_difference(u, v) {
                            return Some(format!("{}{p}", label(u, i)));
                        }
                    }
                    (Some(u), None) | (None, Some(u)) => return Some(label(u, i)),
                    (None, None) => unreachable!(),
                }
            }
            None
        }
        _ if a == b => None,
        _ => Some(format!(" ({a} vs {b})")),
    }
}

/// `None` when the round trip reproduces the input byte for byte, else the
/// first differing table entry.
pub fn roundtrip(doc: &Document, pair: Pair) -> crate::Result<Option<String>> {
    let (before, after) = match (pair, doc) {
        (Pair::ModuleCylinder, Document::Cylinder(d)) => {
            let tc = cylinder_to_module(&d.vstructure, &d.closed, &d.cylinder)?;
            let (vstructure, cylinder) = module_to_cylinder(&tc, &d.closed)?;
            (doc.clone(), Document::Cylinder(CylinderDoc { vstructure, closed: d.closed.clone(), cylinder }))
        }
        (Pair::ModuleCylinder, d) => match tensor_closed(d) {
            Some((tc, cl, _)) => {
                let cl = need(&cl.cloned(), "closed")?.clone();
                let (vs, cyl) = module_to_cylinder(tc, &cl)?;
                let back = cylinder_to_module(&vs, &cl, &cyl)?;
                (Document::TensorClosed(plain(tc)), Document::TensorClosed(plain(&back)))
            }
            None => return Err(Error::ShapeMismatch(format!("module-cylinder does not apply to a {} document", d.kind()))),
        },
        (Pair::CylinderTensored, Document::Cylinder(d)) => {
            let (vc, td) = cylinder_to_tensored(&d.vstructure, &d.cylinder)?;
            let cylinder = tensored_to_cylinder(&vc, &d.closed, &td)?;
            (doc.clone(), Document::Cylinder(CylinderDoc { cylinder, ..d.clone() }))
        }
        (Pair::CylinderTensored, d) => {
            return Err(Error::ShapeMismatch(format!("cylinder-tensored does not apply to a {} document", d.kind())))
        }
    };
    let (a, b) = (serialize(&before), serialize(&after));
    if a == b {
        return Ok(None);
    }
    let (va, vb): (Value, Value) = (serde_json::from_str(&a).expect("own output"), serde_json::from_str(&b).expect("own output"));
    Ok(Some(first_difference(&va, &vb).unwrap_or_else(|| "(byte order)".into())))
}

fn plain(tc: &TensorClosedModuleData) -> ModuleDoc<TensorClosedModuleData> {
    ModuleDoc { module: tc.clone(), closed: None, symmetry: None }
}

/// A builtin by name: `bool`, `trop<n>`, `cyc<n>`, `poset-diamond`, or
/// `self-<base>` for a base among the first three.
pub fn instance(name: &str) -> crate::Result<Document> {
    let n: String = name.to_lowercase().chars().filter(|c| !matches!(c, '(' | ')' | ' ')).collect();
    let base = |s: &str| -> crate::Result<Instance> {
        let num = |p: &str| s[p.len()..].parse::<usize>().map_err(|_| Error::Parameter(format!("bad size in `{name}`")));
        if s == "bool" {
            Ok(build_bool())
        } else if s.starts_with("trop") {
            build_trop(num("trop")?)
        } else if s.starts_with("cyc") {
            build_cyc(num("cyc")?)
        } else {
            Err(Error::Parameter(format!("unknown instance `{name}`")))
        }
    };
    if n == "poset-diamond" || n == "poset" {
        let b = build_bool();
        return Ok(Document::ClosedModule(ModuleDoc { module: poset_diamond(), closed: Some(b.closed), symmetry: Some(b.symmetry) }));
    }
    if let Some(rest) = n.strip_prefix("self-").or_else(|| n.strip_prefix("self")) {
        let v = base(rest)?;
        return Ok(Document::ClosedModule(ModuleDoc { module: module_self(&v)?, closed: Some(v.closed), symmetry: Some(v.symmetry) }));
    }
    let v = base(&n)?;
    Ok(Document::Monoidal(MonoidalDoc { monoidal: v.monoidal, symmetry: Some(v.symmetry), closed: Some(v.closed) }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(name = "encat", version, about = "Check and transform finite enriched structures")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the checker for the document's kind.
    Check {
        file: PathBuf,
        /// Comma-separated registry laws to report.
        #[arg(long, value_delimiter = ',')]
        laws: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a construction and write the resulting document.
    Construct {
        file: PathBuf,
        #[arg(long, value_enum)]
        op: Op,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Compare a document with its image under a correspondence and back.
    Roundtrip {
        file: PathBuf,
        #[arg(long, value_enum)]
        pair: Pair,
    },
    /// Write a builtin instance.
    Instance {
        name: String,
        #[arg(short, long)]
        out: PathBuf,
    },
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CONSTRUCTION: i32 = 3;

fn error_code(e: &Error) -> i32 {
    if e.is_input_error() {
        EXIT_INPUT
    } else {
        EXIT_CONSTRUCTION
    }
}

fn load(path: &PathBuf) -> Result<Document, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn render(r: &CheckReport, color: bool) -> String {
    let law = if color { format!("\x1b[31m{}\x1b[0m", r.law) } else { r.law.clone() };
    let site = r.site.join(",");
    match (&r.lhs, &r.rhs, r.witnesses) {
        (Some(l), Some(rh), _) => format!("FAIL {law} [{site}]: {l} != {rh}"),
        (_, _, Some(n)) => format!("FAIL {law} [{site}]: {n} witnesses"),
        _ => format!("FAIL {law} [{site}]"),
    }
}

/// The CLI entry point; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_INPUT;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    let color = std::env::var("ENCAT_COLOR").map(|v| v == "1").unwrap_or(false);
    macro_rules! fail {
        ($code:expr, $($arg:tt)*) => {{
            let _ = writeln!(err, $($arg)*);
            return $code;
        }};
    }
    match cli.cmd {
        Cmd::Check { file, laws, format } => {
            let unknown: Vec<&String> = laws.iter().filter(|l| !LAW_REGISTRY.contains(&l.as_str())).collect();
            if !unknown.is_empty() {
                fail!(EXIT_INPUT, "unknown laws {unknown:?}; known laws: {}", LAW_REGISTRY.join(", "));
            }
            let doc = match load(&file) {
                Ok(d) => d,
                Err(e) => fail!(EXIT_INPUT, "{e}"),
            };
            let mut reports = match check_document(&doc) {
                Ok(r) => r,
                Err(e) => fail!(error_code(&e), "{e}"),
            };
            if !laws.is_empty() {
                reports.retain(|r| laws.contains(&r.law));
            }
            for r in &reports {
                let line = match format {
                    Format::Text => render(r, color),
                    Format::Json => serde_json::to_string(r).expect("report serializes"),
                };
                let _ = writeln!(out, "{line}");
            }
            if reports.is_empty() {
                if format == Format::Text {
                    let _ = writeln!(out, "pass: {} document", doc.kind());
                }
                EXIT_OK
            } else {
                EXIT_FAIL
            }
        }
        Cmd::Construct { file, op, out: path } => {
            let doc = match load(&file) {
                Ok(d) => d,
                Err(e) => fail!(EXIT_INPUT, "{e}"),
            };
            match construct(&doc, op) {
                Ok(res) => match std::fs::write(&path, serialize(&res)) {
                    Ok(()) => {
                        let _ = writeln!(out, "wrote {} document to {}", res.kind(), path.display());
                        EXIT_OK
                    }
                    Err(e) => fail!(EXIT_INPUT, "{}: {e}", path.display()),
                },
                Err(e) => fail!(error_code(&e), "{e}"),
            }
        }
        Cmd::Roundtrip { file, pair } => {
            let doc = match load(&file) {
                Ok(d) => d,
                Err(e) => fail!(EXIT_INPUT, "{e}"),
            };
            match roundtrip(&doc, pair) {
                Ok(None) => {
                    let _ = writeln!(out, "equal");
                    EXIT_OK
                }
                Ok(Some(diff)) => {
                    let _ = writeln!(out, "unequal at {diff}");
                    EXIT_FAIL
                }
                Err(e) => fail!(error_code(&e), "{e}"),
            }
        }
        Cmd::Instance { name, out: path } => match instance(&name) {
            Ok(doc) => match std::fs::write(&path, serialize(&doc)) {
                Ok(()) => EXIT_OK,
                Err(e) => fail!(EXIT_INPUT, "{}: {e}", path.display()),
            },
            Err(e) => fail!(error_code(&e), "{e}"),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn builtins() -> Vec<Document> {
        ["bool", "trop3", "cyc2", "poset-diamond", "self-trop3"].iter().map(|n| instance(n).unwrap()).collect()
    }

    #[test]
    fn builtins_reparse_equal() {
        for d in builtins() {
            let text = serialize(&d);
            let back = parse(&text).unwrap();
            assert_eq!(back, d);
            assert_eq!(serialize(&back), text);
        }
    }

    #[test]
    fn undeclared_object_is_reported_at_its_position() {
        let text = serialize(&Document::FinCategory(crate::instances::thin_category(&["a", "b"], |x, y| x <= y)));
        let bad = text.replacen("\"dst\": \"b\"", "\"dst\": \"zz\"", 1);
        let e = parse(&bad).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnresolvedReference);
        assert_eq!(e.token.as_deref(), Some("zz"));
        let line = bad.lines().nth(e.line - 1).unwrap();
        assert_eq!(&line[e.column - 1..e.column + 3], "\"zz\"");
    }

    #[test]
    fn duplicate_morphism_is_named() {
        let text = r#"{"meta":"encat/1","kind":"fincategory","body":{"objects":["a"],
            "morphisms":[["f",{"src":"a","dst":"a"}],["f",{"src":"a","dst":"a"}]],"identity":[],"comp":[]}}"#;
        let e = parse(text).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::DuplicateId);
        assert_eq!(e.token.as_deref(), Some("f"));
    }

    #[test]
    fn version_and_syntax_errors() {
        let text = serialize(&instance("cyc1").unwrap()).replace("encat/1", "encat/0");
        assert_eq!(parse(&text).unwrap_err().kind, ParseErrorKind::VersionMismatch);
        let e = parse("{\"meta\": \"encat/1\",\n \"kind\": ").unwrap_err();
        assert_eq!((e.kind, e.line), (ParseErrorKind::Syntax, 2));
        let e = parse(r#"{"meta":"encat/1","kind":"nonsense","body":{}}"#).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Syntax);
    }

    #[test]
    fn first_difference_names_the_entry() {
        let a = instance("cyc3").unwrap();
        let mut b = a.clone();
        if let Document::Monoidal(d) = &mut b {
            d.monoidal.assoc.insert(crate::tables::t("*", "*", "*"), "1".into());
        }
        let va: Value = serde_json::from_str(&serialize(&a)).unwrap();
        let vb: Value = serde_json::from_str(&serialize(&b)).unwrap();
        let diff = first_difference(&va, &vb).unwrap();
        assert!(diff.starts_with(".body.monoidal.assoc[[\"*\",\"*\",\"*\"]]"), "{diff}");
    }

    #[test]
    fn constructions_reject_the_wrong_kind() {
        let e = construct(&instance("bool").unwrap(), Op::CylinderToModule).unwrap_err();
        assert!(e.is_input_error());
    }
}
