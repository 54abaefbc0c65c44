//! Command-line front end: JSON algebra documents, subcommands and reports.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::algebra::{format_element, StructureConstants};
use crate::catalog::{
    catalog_entry, catalog_get, catalog_list, induced_classification, parse_params, recognize_induced,
    reference_table6, table6_of, InducedFlag, Params, Table6Row,
};
use crate::cohomology::{cohomology_report, Coeffs, Cochain, Theory};
use crate::error::{Error, Result};
use crate::exactlin::{format_rational, parse_rational, Rational, Subspace};
use crate::extensions::{central_extend, induce_extension, is_trivial_extension};
use crate::induce::{check_trace, induce_bracket, trace_space, LinearForm};
use crate::structure::{center, central_series, check_series_inclusion, derived_series, SeriesReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketDoc {
    /// 1-based basis indices.
    pub args: Vec<usize>,
    /// Basis index to rational literal.
    pub value: BTreeMap<usize, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub name: String,
    pub dim: usize,
    pub arity: usize,
    #[serde(default)]
    pub brackets: Vec<BracketDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<String>>,
}

fn parse_err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse { location: location.into(), message: message.into() }
}

fn literal(text: &str, location: &str) -> Result<Rational> {
    parse_rational(text).ok_or_else(|| parse_err(location, format!("malformed rational `{text}`")))
}

fn check_args(args: &[usize], arity: usize, dim: usize, location: &str) -> Result<Vec<usize>> {
    if args.len() != arity {
        return Err(parse_err(location, format!("expected {arity} arguments, got {}", args.len())));
    }
    if let Some(i) = args.iter().find(|&&i| i == 0 || i > dim) {
        return Err(parse_err(location, format!("index {i} out of range 1..={dim}")));
    }
    let mut sorted = args.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(parse_err(location, "repeated index"));
    }
    Ok(sorted)
}

/// Parses a document without interpreting it.
pub fn parse_document(text: &str) -> Result<AlgebraDocument> {
    serde_json::from_str(text)
        .map_err(|e| parse_err(format!("line {}, column {}", e.line(), e.column()), e.to_string()))
}

pub fn print_document(doc: &AlgebraDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

pub fn parse_trace(text: &str, dim: usize) -> Result<LinearForm> {
    let coeffs = text
        .split(',')
        .enumerate()
        .map(|(i, t)| literal(t.trim(), &format!("trace[{}]", i + 1)))
        .collect::<Result<Vec<_>>>()?;
    if coeffs.len() != dim {
        return Err(parse_err("trace", format!("expected {dim} coefficients, got {}", coeffs.len())));
    }
    Ok(LinearForm::new(coeffs))
}

impl AlgebraDocument {
    pub fn from_algebra(name: &str, a: &StructureConstants, trace: Option<&LinearForm>) -> Self {
        let brackets = a
            .to_raw()
            .into_iter()
            .map(|(args, v)| BracketDoc {
                args,
                value: v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| **c != Rational::from_integer(0.into()))
                    .map(|(i, c)| (i + 1, format_rational(c)))
                    .collect(),
            })
            .collect();
        Self {
            name: name.into(),
            dim: a.dim(),
            arity: a.arity(),
            brackets,
            trace: trace.map(|t| t.coeffs().iter().map(format_rational).collect()),
        }
    }

    pub fn to_algebra(&self) -> Result<(StructureConstants, Option<LinearForm>)> {
        if self.arity < 2 {
            return Err(parse_err("arity", "arity must be at least 2"));
        }
        let mut seen = BTreeSet::new();
        let mut raw = Vec::new();
        for (n, b) in self.brackets.iter().enumerate() {
            let loc = format!("brackets[{}]", n + 1);
            let sorted = check_args(&b.args, self.arity, self.dim, &loc)?;
            if !seen.insert(sorted) {
                return Err(parse_err(&loc, "bracket defined twice"));
            }
            let mut v = vec![Rational::from_integer(0.into()); self.dim];
            for (&i, text) in &b.value {
                let vloc = format!("{loc}.value.{i}");
                if i == 0 || i > self.dim {
                    return Err(parse_err(&vloc, format!("index {i} out of range 1..={}", self.dim)));
                }
                v[i - 1] = literal(text, &vloc)?;
            }
            raw.push((b.args.clone(), v));
        }
        let a = StructureConstants::canonicalize(self.arity, self.dim, raw)?;
        let trace = match &self.trace {
            None => None,
            Some(t) => {
                if t.len() != self.dim {
                    return Err(parse_err("trace", format!("expected {} coefficients, got {}", self.dim, t.len())));
                }
                let coeffs = t
                    .iter()
                    .enumerate()
                    .map(|(i, s)| literal(s, &format!("trace[{}]", i + 1)))
                    .collect::<Result<Vec<_>>>()?;
                Some(LinearForm::new(coeffs))
            }
        };
        Ok((a, trace))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CocycleValue {
    pub args: Vec<usize>,
    pub value: String,
}

/// A scalar 2-cochain: `ω(e_{i},e_{j})` for Lie algebras, `ω(e_i,e_j,e_k)`
/// for 3-Lie algebras.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CocycleDocument {
    pub dim: usize,
    pub arity: usize,
    #[serde(default)]
    pub values: Vec<CocycleValue>,
}

impl CocycleDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| parse_err(format!("line {}, column {}", e.line(), e.column()), e.to_string()))
    }

    pub fn to_cochain(&self) -> Result<Cochain> {
        let theory = match self.arity {
            2 => Theory::Lie,
            3 => Theory::TriLie,
            n => return Err(parse_err("arity", format!("cocycles need arity 2 or 3, got {n}"))),
        };
        let mut raw = Vec::new();
        for (n, v) in self.values.iter().enumerate() {
            let loc = format!("values[{}]", n + 1);
            check_args(&v.args, self.arity, self.dim, &loc)?;
            raw.push((v.args.clone(), vec![literal(&v.value, &format!("{loc}.value"))?]));
        }
        Cochain::from_assignments(theory, Coeffs::Scalar, 2, self.dim, raw)
            .map_err(|e| parse_err("values", e.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TheoryArg {
    Lie,
    Trilie,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CoeffsArg {
    Adjoint,
    Scalar,
}

#[derive(Debug, Parser)]
#[command(name = "trilie", version, about = "Lie algebras and the 3-Lie algebras they induce")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Path to an algebra document, or a catalog id.
    pub algebra: String,
    /// Catalog parameter bindings, e.g. "a=1,b=2".
    #[arg(long)]
    pub params: Option<String>,
    /// Trace coefficients "t1,...,td"; overrides the document trace.
    #[arg(long, allow_hyphen_values = true)]
    pub trace: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the fundamental identity (and the trace, if given).
    Verify(Input),
    /// Trace space and the induced bracket of each basis trace.
    Traces(Input),
    /// Induced 3-Lie bracket for a trace.
    Induce(Input),
    /// Derived and central series; with a trace, also of the induced algebra.
    Series(Input),
    Center(Input),
    Cohomology {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        theory: TheoryArg,
        #[arg(long, value_enum)]
        coeffs: CoeffsArg,
        #[arg(long)]
        degree: usize,
    },
    /// Central extension by a scalar 2-cocycle document.
    Extend {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        cocycle: PathBuf,
    },
    /// Search the given basis for a Lie algebra inducing a 3-Lie algebra.
    /// Without an algebra, flag every 3-Lie catalog entry.
    Recognize {
        algebra: Option<String>,
        #[arg(long)]
        params: Option<String>,
    },
    /// List catalog entries, or show one.
    Catalog {
        id: Option<String>,
        #[arg(long)]
        arity: Option<usize>,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        params: Option<String>,
        /// Print the entry as an algebra document.
        #[arg(long)]
        document: bool,
    },
    /// Trace table rows of Lie catalog entries.
    Table6 {
        id: Option<String>,
        #[arg(long)]
        params: Option<String>,
    },
    /// First adjoint cohomology of gl2, M4, M5, M8 and their induced algebras.
    Table7 { id: Option<String> },
}

/// Ordered `key: value` report.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub fields: Vec<(String, String)>,
    /// Replaces the aligned field listing in human format.
    pub human: Option<String>,
    /// A mathematical check failed.
    pub violation: bool,
}

impl Report {
    fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.fields.push((key.into(), value.to_string()));
    }

    pub fn render(&self, format: Format) -> String {
        match (format, &self.human) {
            (Format::Human, Some(h)) => h.clone(),
            (Format::Human, None) => {
                let width = self.fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                self.fields.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
            }
            (Format::Machine, _) => self.fields.iter().map(|(k, v)| format!("{k}: {v}\n")).collect(),
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn basis_text(s: &Subspace) -> String {
    if s.is_zero() {
        return "0".into();
    }
    s.basis_vectors().iter().map(|v| format_element(v)).collect::<Vec<_>>().join(", ")
}

fn bracket_lines(a: &StructureConstants) -> Vec<String> {
    a.to_raw()
        .into_iter()
        .map(|(k, v)| {
            let args: Vec<String> = k.iter().map(|i| format!("e{i}")).collect();
            format!("[{}] = {}", args.join(","), format_element(&v))
        })
        .collect()
}

fn push_brackets(r: &mut Report, key: &str, a: &StructureConstants) {
    let lines = bracket_lines(a);
    if lines.is_empty() {
        r.push(key, "abelian");
    }
    for l in lines {
        r.push(key, l);
    }
}

struct Loaded {
    name: String,
    algebra: StructureConstants,
    trace: Option<LinearForm>,
}

fn load(algebra: &str, params: Option<&str>, trace: Option<&str>) -> Result<Loaded> {
    let path = Path::new(algebra);
    let (name, a, doc_trace) = if path.is_file() {
        if params.is_some() {
            return Err(parse_err("--params", "parameters apply to catalog ids only"));
        }
        let text = std::fs::read_to_string(path).map_err(|e| parse_err(algebra, e.to_string()))?;
        let doc = parse_document(&text).map_err(|e| match e {
            Error::Parse { location, message } => parse_err(format!("{algebra}: {location}"), message),
            other => other,
        })?;
        let (a, t) = doc.to_algebra()?;
        (doc.name, a, t)
    } else {
        let p = parse_params(params.unwrap_or(""))?;
        (algebra.to_string(), catalog_get(algebra, &p)?, None)
    };
    let trace = match trace {
        Some(t) => Some(parse_trace(t, a.dim())?),
        None => doc_trace,
    };
    Ok(Loaded { name, algebra: a, trace })
}

fn load_input(i: &Input) -> Result<Loaded> {
    load(&i.algebra, i.params.as_deref(), i.trace.as_deref())
}

fn require_trace(l: &Loaded) -> Result<&LinearForm> {
    l.trace.as_ref().ok_or_else(|| parse_err("--trace", "a trace is required"))
}

fn require_lie(a: &StructureConstants) -> Result<()> {
    if a.arity() != 2 {
        return Err(Error::Arity { expected: 2, got: a.arity() });
    }
    Ok(())
}

fn header(r: &mut Report, l: &Loaded) {
    r.push("algebra", &l.name);
    r.push("arity", l.algebra.arity());
    r.push("dim", l.algebra.dim());
}

fn cmd_verify(l: &Loaded) -> Result<Report> {
    let mut r = Report::default();
    header(&mut r, l);
    let report = l.algebra.verify_identity();
    r.push("identity", if report.is_ok() { "ok" } else { "fails" });
    if let Some(v) = report.violations.first() {
        r.violation = true;
        r.push("violations", report.violations.len());
        r.push("first_violation", format!("x = {:?}, y = {:?}, defect = {}", v.x, v.y, format_element(&v.defect)));
    }
    if let Some(tau) = &l.trace {
        r.push("trace", tau);
        match check_trace(&l.algebra, tau) {
            Ok(()) => r.push("trace_check", "ok"),
            Err(Error::NotATrace { tuple }) => {
                r.violation = true;
                r.push("trace_check", format!("fails on {tuple:?}"));
            }
            Err(e) => return Err(e),
        }
    }
    Ok(r)
}

fn cmd_traces(l: &Loaded) -> Result<Report> {
    let mut r = Report::default();
    header(&mut r, l);
    let space = trace_space(&l.algebra);
    r.push("trace_dim", space.dim());
    for tau in space.basis() {
        r.push("trace", &tau);
        if l.algebra.arity() == 2 {
            r.push("induced", induce_bracket(&l.algebra, &tau)?);
        }
    }
    Ok(r)
}

fn cmd_induce(l: &Loaded) -> Result<Report> {
    require_lie(&l.algebra)?;
    let tau = require_trace(l)?;
    let induced = induce_bracket(&l.algebra, tau)?;
    let mut r = Report::default();
    header(&mut r, l);
    r.push("trace", tau);
    push_brackets(&mut r, "bracket", &induced);
    let ok = induced.verify_identity().is_ok();
    r.violation = !ok;
    r.push("identity", if ok { "ok" } else { "fails" });
    r.push("derived_dims", dims_text(&derived_series(&induced)));
    Ok(r)
}

fn dims_text(s: &SeriesReport) -> String {
    s.dims().iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn class_text(c: Option<usize>) -> String {
    c.map_or_else(|| "none".into(), |c| c.to_string())
}

fn push_series(r: &mut Report, prefix: &str, a: &StructureConstants) {
    let d = derived_series(a);
    let c = central_series(a);
    r.push(format!("{prefix}derived_dims"), dims_text(&d));
    for (p, t) in d.terms.iter().enumerate() {
        r.push(format!("{prefix}derived[{p}]"), basis_text(t));
    }
    r.push(format!("{prefix}solvability_class"), class_text(d.class));
    r.push(format!("{prefix}central_dims"), dims_text(&c));
    for (p, t) in c.terms.iter().enumerate() {
        r.push(format!("{prefix}central[{p}]"), basis_text(t));
    }
    r.push(format!("{prefix}nilpotency_class"), class_text(c.class));
}

fn cmd_series(l: &Loaded) -> Result<Report> {
    let mut r = Report::default();
    header(&mut r, l);
    push_series(&mut r, "", &l.algebra);
    if let Some(tau) = &l.trace {
        require_lie(&l.algebra)?;
        let induced = induce_bracket(&l.algebra, tau)?;
        r.push("trace", tau);
        push_series(&mut r, "induced_", &induced);
        let second = derived_series(&induced).term(2).is_zero();
        let inc = check_series_inclusion(&l.algebra, tau)?;
        r.violation = !second || !inc.holds;
        r.push("induced_D2_zero", yes_no(second));
        r.push("central_inclusion", yes_no(inc.holds));
        r.push("central_equal", yes_no(inc.equal));
        r.push(
            "equality_witness",
            inc.equality_hypothesis.as_deref().map_or_else(|| "none".into(), format_element),
        );
    }
    Ok(r)
}

fn cmd_center(l: &Loaded) -> Result<Report> {
    let mut r = Report::default();
    header(&mut r, l);
    let z = center(&l.algebra);
    r.push("center_dim", z.dim());
    r.push("center", basis_text(&z));
    Ok(r)
}

fn cochain_text(c: &Cochain) -> Result<String> {
    if c.coeffs() == Coeffs::Adjoint && c.degree() == 1 {
        let m = c.to_matrix()?;
        return Ok(m
            .row_vecs()
            .iter()
            .map(|row| row.iter().map(format_rational).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("; "));
    }
    Ok(c.coords().iter().map(format_rational).collect::<Vec<_>>().join(" "))
}

fn cmd_cohomology(l: &Loaded, theory: TheoryArg, coeffs: CoeffsArg, degree: usize) -> Result<Report> {
    let coeffs = match coeffs {
        CoeffsArg::Adjoint => Coeffs::Adjoint,
        CoeffsArg::Scalar => Coeffs::Scalar,
    };
    let (theory, target) = match (theory, l.algebra.arity()) {
        (TheoryArg::Lie, 2) => (Theory::Lie, l.algebra.clone()),
        (TheoryArg::Trilie, 3) => (Theory::TriLie, l.algebra.clone()),
        (TheoryArg::Trilie, 2) => (Theory::TriLie, induce_bracket(&l.algebra, require_trace(l)?)?),
        (TheoryArg::Lie, n) => return Err(Error::Arity { expected: 2, got: n }),
        (TheoryArg::Trilie, n) => return Err(Error::Arity { expected: 3, got: n }),
    };
    let rep = cohomology_report(&target, theory, coeffs, degree)?;
    let mut r = Report::default();
    header(&mut r, l);
    if target != l.algebra {
        r.push("trace", require_trace(l)?);
    }
    r.push("theory", theory.name());
    r.push("coeffs", coeffs.name());
    r.push("degree", degree);
    r.push("dim_Z", rep.dim_z);
    r.push("dim_B", rep.dim_b);
    r.push("dim_H", rep.dim_h);
    let dim = target.dim();
    for (key, space) in [("Z", &rep.z), ("B", &rep.b)] {
        for v in space.basis_vectors() {
            let c = Cochain::from_coords(theory, coeffs, degree, dim, &v)?;
            r.push(key, cochain_text(&c)?);
        }
    }
    Ok(r)
}

fn cmd_extend(l: &Loaded, cocycle: &Path) -> Result<Report> {
    let text = std::fs::read_to_string(cocycle).map_err(|e| parse_err(cocycle.display().to_string(), e.to_string()))?;
    let omega = CocycleDocument::parse(&text)?.to_cochain()?;
    let mut r = Report::default();
    header(&mut r, l);
    match (&l.trace, l.algebra.arity()) {
        (Some(tau), 2) => {
            let ext = induce_extension(&l.algebra, tau, &omega)?;
            push_brackets(&mut r, "extension", &ext.lie.total);
            r.push("trivial", yes_no(is_trivial_extension(&l.algebra, &omega)?));
            r.push("trace", tau);
            push_brackets(&mut r, "induced_extension", &ext.trilie.total);
            let induced = induce_bracket(&l.algebra, tau)?;
            r.push("omega_tau_zero", yes_no(ext.omega_tau.is_zero()));
            r.push("induced_trivial", yes_no(is_trivial_extension(&induced, &ext.omega_tau)?));
            r.push("square_commutes", "yes");
        }
        _ => {
            let ext = central_extend(&l.algebra, &omega)?;
            push_brackets(&mut r, "extension", &ext.total);
            r.push("trivial", yes_no(is_trivial_extension(&l.algebra, &omega)?));
        }
    }
    Ok(r)
}

fn cmd_recognize(algebra: Option<&str>, params: Option<&str>) -> Result<Report> {
    let mut r = Report::default();
    let Some(algebra) = algebra else {
        for row in induced_classification(5) {
            let listed = match row.listed_induced {
                Some(true) => "induced",
                Some(false) => "not-induced",
                None => "not listed",
            };
            r.push(row.id, format!("{} (listed: {listed})", row.flag.name()));
            if row.agrees() == Some(false) || row.flag == InducedFlag::Unknown {
                r.violation = true;
            }
        }
        return Ok(r);
    };
    let l = load(algebra, params, None)?;
    if l.algebra.arity() != 3 {
        return Err(Error::Arity { expected: 3, got: l.algebra.arity() });
    }
    header(&mut r, &l);
    match recognize_induced(&l.algebra) {
        Some(rec) => {
            r.push("recognized", "yes");
            r.push("i0", rec.i0 + 1);
            push_brackets(&mut r, "lie", &rec.lie);
            r.push("trace", &rec.tau);
            r.push("flag", InducedFlag::Induced.name());
        }
        None => {
            r.push("recognized", "no");
            r.push("D2_zero", yes_no(derived_series(&l.algebra).term(2).is_zero()));
            r.push("flag", crate::catalog::classify_induced(&l.algebra).name());
        }
    }
    Ok(r)
}

fn cmd_catalog(
    id: Option<&str>,
    arity: Option<usize>,
    dim: Option<usize>,
    params: Option<&str>,
    document: bool,
) -> Result<Report> {
    let mut r = Report::default();
    let Some(id) = id else {
        for c in catalog_list(arity, dim) {
            let params = c.params.iter().map(|(k, v)| format!("{k}={}", format_rational(v))).collect::<Vec<_>>();
            let params = if params.is_empty() { String::new() } else { format!(" [{}]", params.join(",")) };
            r.push(c.id, format!("arity {}, dim {}{}", c.arity, c.dim, params));
        }
        return Ok(r);
    };
    let c = catalog_entry(id)?;
    let p = c.resolve(&parse_params(params.unwrap_or(""))?)?;
    let a = c.instantiate(&p)?;
    if document {
        let text = print_document(&AlgebraDocument::from_algebra(c.id, &a, None));
        r.human = Some(text.clone());
        r.fields.push(("document".into(), text.trim_end().replace('\n', " ")));
        return Ok(r);
    }
    r.push("id", c.id);
    r.push("label", c.label);
    r.push("arity", c.arity);
    r.push("dim", c.dim);
    for (k, v) in &p {
        r.push(format!("param.{k}"), format_rational(v));
    }
    r.push("predicate", c.predicate);
    if !c.note.is_empty() {
        r.push("note", c.note);
    }
    push_brackets(&mut r, "bracket", &a);
    Ok(r)
}

fn table6_fields(r: &mut Report, row: &Table6Row, matches: bool) {
    r.push("id", &row.id);
    r.push("trace", row.trace_text());
    let lines = row.bracket_lines();
    if lines.is_empty() {
        r.push("induced", "abelian");
    }
    for l in lines {
        r.push("induced", l);
    }
    r.push("matches_reference", yes_no(matches));
}

fn cmd_table6(id: Option<&str>, params: Option<&str>) -> Result<Report> {
    let p = parse_params(params.unwrap_or(""))?;
    let ids: Vec<&str> = match id {
        Some(id) => vec![catalog_entry(id)?.id],
        None => {
            if !p.is_empty() {
                return Err(parse_err("--params", "parameters need a single id"));
            }
            catalog_list(Some(2), None).iter().map(|c| c.id).collect()
        }
    };
    let mut r = Report::default();
    let mut human = String::new();
    for id in ids {
        let a = catalog_get(id, &p)?;
        let row = table6_of(id, &a)?;
        let reference = reference_table6(id, &p)?;
        let matches = row == reference;
        table6_fields(&mut r, &row, matches);
        human.push_str(&row.to_string());
        if !matches {
            human.push_str("  reference differs:\n");
            for l in reference.to_string().lines().skip(1) {
                human.push_str(&format!("  |{l}\n"));
            }
        }
    }
    r.human = Some(human);
    Ok(r)
}

/// The four algebras of the first-cohomology tables with their traces.
pub fn table7_cases() -> Vec<(&'static str, Vec<i64>)> {
    vec![
        ("gl2", vec![0, 0, 0, 1]),
        ("M4", vec![1, 1, 0, 1]),
        ("M5", vec![1, 0, 0, 0]),
        ("M8", vec![1, 0, 1, 0]),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table7Row {
    pub id: &'static str,
    pub trace: LinearForm,
    /// `(dim Z¹, dim B¹, dim H¹)` of the Lie algebra.
    pub lie: (usize, usize, usize),
    /// The same for the induced 3-Lie algebra.
    pub induced: (usize, usize, usize),
}

pub fn table7_row(id: &'static str, trace: &[i64]) -> Result<Table7Row> {
    let a = catalog_get(id, &Params::new())?;
    let tau = LinearForm::new(trace.iter().map(|&t| Rational::from_integer(t.into())).collect());
    let lie = cohomology_report(&a, Theory::Lie, Coeffs::Adjoint, 1)?;
    let tri = cohomology_report(&induce_bracket(&a, &tau)?, Theory::TriLie, Coeffs::Adjoint, 1)?;
    Ok(Table7Row {
        id,
        trace: tau,
        lie: (lie.dim_z, lie.dim_b, lie.dim_h),
        induced: (tri.dim_z, tri.dim_b, tri.dim_h),
    })
}

fn cmd_table7(id: Option<&str>) -> Result<Report> {
    let cases: Vec<_> = table7_cases().into_iter().filter(|(c, _)| id.map_or(true, |i| i == *c)).collect();
    if cases.is_empty() {
        return Err(Error::UnknownCatalogId(id.unwrap_or_default().into()));
    }
    let mut r = Report::default();
    let mut human = format!("{:<6}{:<14}{:>5}{:>5}{:>5}{:>8}{:>5}{:>5}\n", "", "trace", "Z1", "B1", "H1", "Z1_t", "B1_t", "H1_t");
    for (id, t) in cases {
        let row = table7_row(id, &t)?;
        r.push("id", row.id);
        r.push("trace", &row.trace);
        r.push("lie", format!("dim Z1 = {}, dim B1 = {}, dim H1 = {}", row.lie.0, row.lie.1, row.lie.2));
        r.push(
            "induced",
            format!("dim Z1 = {}, dim B1 = {}, dim H1 = {}", row.induced.0, row.induced.1, row.induced.2),
        );
        human.push_str(&format!(
            "{:<6}{:<14}{:>5}{:>5}{:>5}{:>8}{:>5}{:>5}\n",
            row.id,
            row.trace.to_string(),
            row.lie.0,
            row.lie.1,
            row.lie.2,
            row.induced.0,
            row.induced.1,
            row.induced.2
        ));
    }
    r.human = Some(human);
    Ok(r)
}

pub fn execute(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Verify(i) => cmd_verify(&load_input(i)?),
        Command::Traces(i) => cmd_traces(&load_input(i)?),
        Command::Induce(i) => cmd_induce(&load_input(i)?),
        Command::Series(i) => cmd_series(&load_input(i)?),
        Command::Center(i) => cmd_center(&load_input(i)?),
        Command::Cohomology { input, theory, coeffs, degree } => {
            cmd_cohomology(&load_input(input)?, *theory, *coeffs, *degree)
        }
        Command::Extend { input, cocycle } => cmd_extend(&load_input(input)?, cocycle),
        Command::Recognize { algebra, params } => cmd_recognize(algebra.as_deref(), params.as_deref()),
        Command::Catalog { id, arity, dim, params, document } => {
            cmd_catalog(id.as_deref(), *arity, *dim, params.as_deref(), *document)
        }
        Command::Table6 { id, params } => cmd_table6(id.as_deref(), params.as_deref()),
        Command::Table7 { id } => cmd_table7(id.as_deref()),
    }
}

/// 1 for failed mathematical checks, 2 for malformed input or usage.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotATrace { .. }
        | Error::NotAnIdeal
        | Error::NotADerivation { .. }
        | Error::NotACocycle { .. }
        | Error::Lift { .. }
        | Error::Contract(_) => 1,
        _ => 2,
    }
}

/// Runs the CLI on `argv` (including the program name) and returns the exit
/// code with the text for stdout and stderr.
pub fn run<I, T>(argv: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { (0, text, String::new()) } else { (2, String::new(), text) };
        }
    };
    match execute(&cli) {
        Ok(report) => (i32::from(report.violation), report.render(cli.format), String::new()),
        Err(e) => (exit_code(&e), String::new(), format!("error: {e}\n")),
    }
}
