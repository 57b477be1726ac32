//! Tables for the command line: per-index sequence reports and
//! single-ideal invariant summaries, rendered as CSV, JSON or text.
//!
//! Exact values are serialized as `p/q`; every exact column has a
//! companion with a 12-significant-digit decimal rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use serde_json::{json, Value as Json};

use crate::error::{Error, Result};
use crate::groebner::{colength_poly, initial_ideal, samuel_multiplicity, MonomialOrder, PolynomialIdeal};
use crate::monomial::{Exponent, MonomialIdeal};
use crate::multiplier::{asymptotic_multiplier, multiplier_ideal};
use crate::newton::{lct, multiplicity, ord_weight, WeightVector};
use crate::rational::{factorial, format_rational, parse_rational, pow, to_decimal, Rational};
use crate::sequences::{parse_descriptor, saturate, Direction, GradedSequence, LimitEstimate};

pub const DECIMAL_DIGITS: u32 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Format {
    Csv,
    Json,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "text" | "txt" => Ok(Format::Text),
            other => Err(Error::invalid(format!("unknown format {other:?}"))),
        }
    }
}

/// Output groups of a sequence report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Column {
    /// `e(a_m)/m^n`.
    Mult,
    /// `n!·len(R/a_m)/m^n`.
    Vol,
    /// `m·lct(a_m)`.
    Lct,
    /// `m·lct(b_m)` and whether the multiplier chain stabilized.
    Bracket,
    /// `ord(a_m)/m`.
    Ord,
    /// `e(a'_m)/m^n` for the saturated sequence.
    Saturate,
    /// `e(a_m : b_m)` and whether `X^e` lies in the colon.
    Colon,
}

impl Column {
    pub const ALL: [Column; 7] = [
        Column::Mult,
        Column::Vol,
        Column::Lct,
        Column::Bracket,
        Column::Ord,
        Column::Saturate,
        Column::Colon,
    ];

    pub const DEFAULT: [Column; 3] = [Column::Mult, Column::Vol, Column::Lct];

    fn needs_b(self) -> bool {
        matches!(self, Column::Bracket | Column::Colon)
    }
}

impl FromStr for Column {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "mult" => Ok(Column::Mult),
            "vol" => Ok(Column::Vol),
            "lct" => Ok(Column::Lct),
            "bracket" => Ok(Column::Bracket),
            "ord" => Ok(Column::Ord),
            "saturate" | "sat" => Ok(Column::Saturate),
            "colon" => Ok(Column::Colon),
            other => Err(Error::invalid(format!("unknown column {other:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ExperimentSpec {
    pub descriptor: Vec<String>,
    pub dim: Option<usize>,
    pub max_index: u64,
    pub p_budget: u64,
    pub r_budget: u64,
    pub columns: Vec<Column>,
}

impl ExperimentSpec {
    pub fn new(descriptor: Vec<String>) -> Self {
        ExperimentSpec {
            descriptor,
            dim: None,
            max_index: crate::sequences::DEFAULT_M,
            p_budget: crate::sequences::DEFAULT_P_BUDGET,
            r_budget: crate::sequences::DEFAULT_R_BUDGET,
            columns: Column::DEFAULT.to_vec(),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.max_index == 0 || self.p_budget == 0 || self.r_budget == 0 {
            return Err(Error::ZeroBudget);
        }
        if self.columns.is_empty() {
            return Err(Error::invalid("at least one output column is required"));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    Exact(Rational),
    Flag(bool),
    Missing,
}

impl Cell {
    fn exact(&self) -> Option<&Rational> {
        match self {
            Cell::Exact(r) => Some(r),
            _ => None,
        }
    }
}

/// Field names of a column group, and whether each one is exact.
fn fields(c: Column) -> &'static [(&'static str, bool)] {
    match c {
        Column::Mult => &[("mult", true)],
        Column::Vol => &[("vol", true)],
        Column::Lct => &[("lct", true)],
        Column::Bracket => &[("lct_b", true), ("b_stable", false)],
        Column::Ord => &[("ord", true)],
        Column::Saturate => &[("sat_mult", true)],
        Column::Colon => &[("colon_mult", true), ("colon_has_e", false)],
    }
}

fn direction_of(field: &str) -> Option<Direction> {
    match field {
        "mult" | "lct_b" | "ord" | "sat_mult" => Some(Direction::Upper),
        "lct" => Some(Direction::Lower),
        "vol" => Some(Direction::Window),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Envelope {
    pub field: String,
    pub estimate: LimitEstimate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceReport {
    pub label: String,
    pub dim: usize,
    pub column_groups: Vec<Column>,
    pub max_index: u64,
    pub p_budget: u64,
    pub r_budget: u64,
    pub fields: Vec<String>,
    pub rows: Vec<(u64, Vec<Cell>)>,
    pub envelopes: Vec<Envelope>,
}

impl SequenceReport {
    /// `inf m·lct(b_m) - sup m·lct(a_m)` when both are present.
    pub fn bracket_width(&self) -> Option<Rational> {
        let best = |f: &str| {
            self.envelopes
                .iter()
                .find(|e| e.field == f)
                .map(|e| e.estimate.best_bound.clone())
        };
        Some(best("lct_b")? - best("lct")?)
    }

    pub fn column(&self, field: &str) -> Option<Vec<(u64, Cell)>> {
        let k = self.fields.iter().position(|f| f == field)?;
        Some(self.rows.iter().map(|(m, cells)| (*m, cells[k].clone())).collect())
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => Ok(serde_json::to_string_pretty(&self.to_json()).expect("json") + "\n"),
            Format::Text => Ok(self.to_text()),
        }
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["m".to_string()];
        for (f, exact) in self.field_kinds() {
            header.push(f.clone());
            if exact {
                header.push(format!("{f}_decimal"));
            }
        }
        w.write_record(&header).map_err(csv_err)?;
        for (m, cells) in &self.rows {
            let mut rec = vec![m.to_string()];
            for cell in cells {
                match cell {
                    Cell::Exact(r) => {
                        rec.push(format_rational(r));
                        rec.push(to_decimal(r, DECIMAL_DIGITS));
                    }
                    Cell::Flag(b) => rec.push(b.to_string()),
                    Cell::Missing => {
                        rec.push(String::new());
                        if self.is_exact_position(rec.len()) {
                            rec.push(String::new());
                        }
                    }
                }
            }
            w.write_record(&rec).map_err(csv_err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("utf-8"))
    }

    fn field_kinds(&self) -> Vec<(String, bool)> {
        self.column_groups
            .iter()
            .flat_map(|&c| fields(c).iter().map(|&(f, e)| (f.to_string(), e)))
            .collect()
    }

    /// Whether the CSV record position just written (1-based count of
    /// pushed cells) belongs to an exact field.
    fn is_exact_position(&self, pushed: usize) -> bool {
        let mut pos = 1;
        for (_, exact) in self.field_kinds() {
            pos += 1;
            if pos == pushed {
                return exact;
            }
            if exact {
                pos += 1;
            }
        }
        false
    }

    pub fn to_json(&self) -> Json {
        let rows: Vec<Json> = self
            .rows
            .iter()
            .map(|(m, cells)| {
                let mut obj = serde_json::Map::new();
                obj.insert("m".into(), json!(m));
                for (f, cell) in self.fields.iter().zip(cells) {
                    let v = match cell {
                        Cell::Exact(r) => json!({"exact": format_rational(r), "decimal": to_decimal(r, DECIMAL_DIGITS)}),
                        Cell::Flag(b) => json!(b),
                        Cell::Missing => Json::Null,
                    };
                    obj.insert(f.clone(), v);
                }
                Json::Object(obj)
            })
            .collect();
        let envelopes: Vec<Json> = self.envelopes.iter().map(envelope_json).collect();
        let mut meta = json!({
            "sequence": self.label,
            "dim": self.dim,
            "M": self.max_index,
            "p_budget": self.p_budget,
            "r_budget": self.r_budget,
            "columns": self.fields,
            "order": Json::Null,
            "seed": Json::Null,
            "limsup_window": "last half of the samples",
            "version": crate::VERSION,
        });
        if let Some(w) = self.bracket_width() {
            meta["bracket_width"] = json!({"exact": format_rational(&w), "decimal": to_decimal(&w, DECIMAL_DIGITS)});
        }
        json!({"meta": meta, "rows": rows, "envelopes": envelopes})
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "sequence: {} (n={}, M={}, p_budget={}, r_budget={})",
            self.label, self.dim, self.max_index, self.p_budget, self.r_budget
        );
        let width = 16;
        let _ = write!(out, "{:>5}", "m");
        for f in &self.fields {
            let _ = write!(out, " {f:>width$}");
        }
        out.push('\n');
        for (m, cells) in &self.rows {
            let _ = write!(out, "{m:>5}");
            for cell in cells {
                let s = match cell {
                    Cell::Exact(r) => to_decimal(r, DECIMAL_DIGITS),
                    Cell::Flag(b) => b.to_string(),
                    Cell::Missing => "-".to_string(),
                };
                let _ = write!(out, " {s:>width$}");
            }
            out.push('\n');
        }
        for e in &self.envelopes {
            let est = &e.estimate;
            let kind = match est.direction {
                Direction::Upper => "inf (upper bound)".to_string(),
                Direction::Lower => "sup (lower bound)".to_string(),
                Direction::Window => format!("max over m >= {}", est.window_start.unwrap_or(1)),
            };
            let _ = writeln!(
                out,
                "{:>10}: {kind} = {} ≈ {}",
                e.field,
                format_rational(&est.best_bound),
                to_decimal(&est.best_bound, DECIMAL_DIGITS)
            );
        }
        if let Some(w) = self.bracket_width() {
            let _ = writeln!(out, "bracket width = {} ≈ {}", format_rational(&w), to_decimal(&w, DECIMAL_DIGITS));
        }
        out
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

fn envelope_json(e: &Envelope) -> Json {
    let est = &e.estimate;
    json!({
        "field": e.field,
        "direction": match est.direction {
            Direction::Upper => "upper",
            Direction::Lower => "lower",
            Direction::Window => "window",
        },
        "best_bound": {"exact": format_rational(&est.best_bound), "decimal": to_decimal(&est.best_bound, DECIMAL_DIGITS)},
        "window_start": est.window_start,
        "samples": est.samples.len(),
    })
}

/// Parsed CSV table: exact fields only, keyed by name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedTable {
    pub fields: Vec<String>,
    pub rows: Vec<(u64, BTreeMap<String, Option<Rational>>)>,
}

/// Reads back the exact columns of a CSV report.
pub fn parse_csv(text: &str) -> Result<ParsedTable> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = r.headers().map_err(csv_err)?.iter().map(String::from).collect();
    if header.first().map(String::as_str) != Some("m") {
        return Err(Error::invalid("report must start with an `m` column"));
    }
    let exact: Vec<(usize, String)> = header
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, h)| !h.ends_with("_decimal") && direction_of(h).is_some() || h.as_str() == "colon_mult")
        .map(|(i, h)| (i, h.clone()))
        .collect();
    let mut rows = Vec::new();
    for rec in r.records() {
        let rec = rec.map_err(csv_err)?;
        let m: u64 = rec[0]
            .parse()
            .map_err(|_| Error::invalid(format!("bad index {:?}", &rec[0])))?;
        let mut cells = BTreeMap::new();
        for (i, h) in &exact {
            let v = &rec[*i];
            cells.insert(h.clone(), if v.is_empty() { None } else { Some(parse_rational(v)?) });
        }
        rows.push((m, cells));
    }
    Ok(ParsedTable {
        fields: exact.into_iter().map(|(_, h)| h).collect(),
        rows,
    })
}

fn scaled(value: u64, m: u64, n: usize) -> Rational {
    Rational::new(value.into(), num_bigint::BigInt::from(m).pow(n as u32))
}

pub fn sequence_report(spec: &ExperimentSpec) -> Result<SequenceReport> {
    let seq = parse_descriptor(&spec.descriptor, spec.dim)?;
    sequence_report_for(&seq, spec)
}

/// Builds the per-index table; rows are computed in parallel and sorted
/// by `m`.
pub fn sequence_report_for(seq: &GradedSequence, spec: &ExperimentSpec) -> Result<SequenceReport> {
    spec.validate()?;
    let mut columns = spec.columns.clone();
    columns.sort();
    columns.dedup();
    let n = seq.dim();
    let nfact = Rational::from_integer(factorial(n as u32));
    let sat = if columns.contains(&Column::Saturate) {
        Some(saturate(seq, spec.r_budget)?)
    } else {
        None
    };
    let e = Exponent::ones(n);
    let row = |m: u64| -> Result<Vec<Cell>> {
        let a = seq.get(m)?;
        let b = if columns.iter().any(|c| c.needs_b()) {
            Some(asymptotic_multiplier(seq, m, spec.p_budget)?)
        } else {
            None
        };
        let mut cells = Vec::new();
        for c in &columns {
            match c {
                Column::Mult => cells.push(Cell::Exact(scaled(multiplicity(&a)?, m, n))),
                Column::Vol => cells.push(Cell::Exact(&nfact * scaled(a.colength()?, m, n))),
                Column::Lct => cells.push(Cell::Exact(lct(&a)? * Rational::from_integer(m.into()))),
                Column::Bracket => {
                    let b = b.as_ref().expect("computed");
                    cells.push(if b.ideal.is_unit() {
                        Cell::Missing
                    } else {
                        Cell::Exact(lct(&b.ideal)? * Rational::from_integer(m.into()))
                    });
                    cells.push(Cell::Flag(b.stabilized));
                }
                Column::Ord => cells.push(Cell::Exact(
                    ord_weight(&a, &WeightVector::ones(n))? / Rational::from_integer(m.into()),
                )),
                Column::Saturate => {
                    let s = sat.as_ref().expect("computed").get(m)?;
                    cells.push(Cell::Exact(scaled(multiplicity(&s)?, m, n)));
                }
                Column::Colon => {
                    let c = a.colon(&b.as_ref().expect("computed").ideal)?;
                    cells.push(Cell::Exact(Rational::from_integer(multiplicity(&c)?.into())));
                    cells.push(Cell::Flag(c.contains_monomial(&e)?));
                }
            }
        }
        Ok(cells)
    };

    let next = AtomicU64::new(1);
    let results: Mutex<Vec<(u64, Result<Vec<Cell>>)>> = Mutex::new(Vec::new());
    let workers = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(8);
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let m = next.fetch_add(1, Ordering::Relaxed);
                if m > spec.max_index {
                    break;
                }
                let r = row(m);
                results.lock().expect("results lock").push((m, r));
            });
        }
    });
    let mut results = results.into_inner().expect("results lock");
    results.sort_by_key(|(m, _)| *m);
    let mut rows = Vec::with_capacity(results.len());
    for (m, r) in results {
        rows.push((m, r?));
    }

    let field_names: Vec<String> = columns
        .iter()
        .flat_map(|&c| fields(c).iter().map(|&(f, _)| f.to_string()))
        .collect();
    let mut envelopes = Vec::new();
    for (k, f) in field_names.iter().enumerate() {
        if let Some(dir) = direction_of(f) {
            let samples: Vec<(u64, Rational)> = rows
                .iter()
                .filter_map(|(m, cells)| cells[k].exact().map(|r| (*m, r.clone())))
                .collect();
            if !samples.is_empty() {
                envelopes.push(Envelope {
                    field: f.clone(),
                    estimate: LimitEstimate::from_samples(samples, dir)?,
                });
            }
        }
    }
    Ok(SequenceReport {
        label: seq.label().to_string(),
        dim: n,
        column_groups: columns,
        max_index: spec.max_index,
        p_budget: spec.p_budget,
        r_budget: spec.r_budget,
        fields: field_names,
        rows,
        envelopes,
    })
}

/// `e >= n^n / lct^n`, both sides exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LctCheck {
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialInvariants {
    pub ideal: MonomialIdeal,
    pub multiplicity: Option<u64>,
    pub colength: Option<u64>,
    pub lct: Option<Rational>,
    pub order: Option<u64>,
    pub check: Option<LctCheck>,
    pub multiplier: Option<(Rational, MonomialIdeal)>,
}

pub fn monomial_invariants(a: &MonomialIdeal, lambda: Option<&Rational>) -> Result<MonomialInvariants> {
    if a.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let zero_dim = a.is_zero_dimensional();
    let n = a.dim() as u32;
    let (e, len) = if zero_dim {
        (Some(multiplicity(a)?), Some(a.colength()?))
    } else {
        (None, None)
    };
    let l = if zero_dim && !a.is_unit() { Some(lct(a)?) } else { None };
    let check = match (e, &l) {
        (Some(e), Some(l)) => {
            let lhs = Rational::from_integer(e.into());
            let rhs = Rational::from_integer((n as u64).pow(n).into()) / pow(l, n);
            Some(LctCheck {
                holds: lhs >= rhs,
                lhs,
                rhs,
            })
        }
        _ => None,
    };
    let multiplier = match lambda {
        Some(lam) if zero_dim => Some((lam.clone(), multiplier_ideal(a, lam)?)),
        Some(_) => return Err(Error::NotZeroDimensional),
        None => None,
    };
    Ok(MonomialInvariants {
        ideal: a.clone(),
        multiplicity: e,
        colength: len,
        lct: l,
        order: Some(a.order()?),
        check,
        multiplier,
    })
}

impl MonomialInvariants {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "ideal: {} (n={})", self.ideal, self.ideal.dim());
        let opt = |v: Option<String>| v.unwrap_or_else(|| "undefined".into());
        let _ = writeln!(out, "e = {}", opt(self.multiplicity.map(|e| e.to_string())));
        let _ = writeln!(out, "len = {}", opt(self.colength.map(|e| e.to_string())));
        let _ = writeln!(
            out,
            "lct = {}",
            opt(self.lct.as_ref().map(|l| format!("{} ≈ {}", format_rational(l), to_decimal(l, DECIMAL_DIGITS))))
        );
        let _ = writeln!(out, "ord = {}", opt(self.order.map(|o| o.to_string())));
        if let Some(c) = &self.check {
            let _ = writeln!(
                out,
                "check e >= n^n/lct^n: {} >= {} ({})",
                format_rational(&c.lhs),
                format_rational(&c.rhs),
                if c.holds { "holds" } else { "FAILS" }
            );
        }
        if let Some((lam, j)) = &self.multiplier {
            let _ = writeln!(out, "I({}·a) = {}", format_rational(lam), j);
        }
        out
    }

    pub fn to_json(&self) -> Json {
        let exact = |r: &Rational| json!({"exact": format_rational(r), "decimal": to_decimal(r, DECIMAL_DIGITS)});
        json!({
            "meta": {"kind": "monomial", "dim": self.ideal.dim(), "version": crate::VERSION},
            "ideal": self.ideal.to_string(),
            "multiplicity": self.multiplicity,
            "colength": self.colength,
            "lct": self.lct.as_ref().map(exact),
            "order": self.order,
            "check": self.check.as_ref().map(|c| json!({"lhs": exact(&c.lhs), "rhs": exact(&c.rhs), "holds": c.holds})),
            "multiplier": self.multiplier.as_ref().map(|(l, j)| json!({"lambda": format_rational(l), "ideal": j.to_string()})),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialInvariants {
    pub order: MonomialOrder,
    pub basis: Vec<String>,
    pub initial: MonomialIdeal,
    pub colength: Option<u64>,
    pub initial_multiplicity: Option<u64>,
    pub samuel: Option<LimitEstimate>,
}

pub fn polynomial_invariants(
    ideal: &PolynomialIdeal,
    order: &MonomialOrder,
    max_power: Option<u32>,
) -> Result<PolynomialInvariants> {
    let gb = ideal.groebner_basis(order)?;
    let initial = initial_ideal(ideal, order)?;
    let zero_dim = initial.is_zero_dimensional();
    let colength = if zero_dim { Some(colength_poly(ideal, order)?) } else { None };
    let initial_multiplicity = if zero_dim { Some(multiplicity(&initial)?) } else { None };
    let samuel = match max_power {
        Some(m) if zero_dim => Some(samuel_multiplicity(ideal, order, m)?),
        Some(_) => return Err(Error::NotZeroDimensional),
        None => None,
    };
    Ok(PolynomialInvariants {
        order: order.clone(),
        basis: gb.iter().map(|g| g.to_string()).collect(),
        initial,
        colength,
        initial_multiplicity,
        samuel,
    })
}

impl PolynomialInvariants {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "order: {}", self.order);
        let _ = writeln!(out, "groebner basis: {}", self.basis.join(", "));
        let _ = writeln!(out, "initial ideal: {}", self.initial);
        match self.colength {
            Some(l) => {
                let _ = writeln!(out, "len = {l}");
            }
            None => {
                let _ = writeln!(out, "len = infinite");
            }
        }
        if let Some(e) = self.initial_multiplicity {
            let _ = writeln!(out, "e(in(I)) = {e}");
        }
        if let Some(s) = &self.samuel {
            let _ = writeln!(out, "{:>5} {:>20} {:>16}", "m", "e(in(I^m))/m^n", "decimal");
            for (m, v) in &s.samples {
                let _ = writeln!(out, "{m:>5} {:>20} {:>16}", format_rational(v), to_decimal(v, DECIMAL_DIGITS));
            }
            let _ = writeln!(
                out,
                "e(I) <= {} ≈ {}",
                format_rational(&s.best_bound),
                to_decimal(&s.best_bound, DECIMAL_DIGITS)
            );
        }
        out
    }

    pub fn to_json(&self) -> Json {
        let exact = |r: &Rational| json!({"exact": format_rational(r), "decimal": to_decimal(r, DECIMAL_DIGITS)});
        json!({
            "meta": {"kind": "polynomial", "order": self.order.to_string(), "version": crate::VERSION},
            "basis": self.basis,
            "initial_ideal": self.initial.to_string(),
            "colength": self.colength,
            "initial_multiplicity": self.initial_multiplicity,
            "rows": self.samuel.as_ref().map(|s| s.samples.iter().map(|(m, v)| json!({"m": m, "value": exact(v)})).collect::<Vec<_>>()),
            "envelopes": self.samuel.as_ref().map(|s| json!([{"field": "samuel", "direction": "upper", "best_bound": exact(&s.best_bound)}])),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_monomial_ideal;
    use crate::rational::{int, ratio};

    fn words(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    #[test]
    fn powers_report_is_constant() {
        let mut spec = ExperimentSpec::new(words("powers x^2, y^3"));
        spec.max_index = 6;
        let r = sequence_report(&spec).unwrap();
        let mult = r.column("mult").unwrap();
        assert!(mult.iter().all(|(_, c)| *c == Cell::Exact(int(6))));
        let lct = r.column("lct").unwrap();
        assert!(lct.iter().all(|(_, c)| *c == Cell::Exact(ratio(5, 6))));
    }

    #[test]
    fn csv_round_trip() {
        let mut spec = ExperimentSpec::new(words("weighted 5 7 5"));
        spec.max_index = 8;
        spec.p_budget = 4;
        spec.columns = Column::ALL.to_vec();
        let r = sequence_report(&spec).unwrap();
        let text = r.to_csv().unwrap();
        let parsed = parse_csv(&text).unwrap();
        for (k, f) in r.fields.iter().enumerate() {
            if parsed.fields.contains(f) {
                for ((m, cells), (pm, pcells)) in r.rows.iter().zip(&parsed.rows) {
                    assert_eq!(m, pm);
                    assert_eq!(cells[k].exact(), pcells[f].as_ref());
                }
            }
        }
        assert_eq!(parsed.rows.len(), 8);
    }

    #[test]
    fn invariants_check() {
        let a = parse_monomial_ideal("x^2, y^3", None).unwrap();
        let inv = monomial_invariants(&a, Some(&int(1))).unwrap();
        assert_eq!(inv.multiplicity, Some(6));
        assert_eq!(inv.colength, Some(6));
        assert_eq!(inv.lct, Some(ratio(5, 6)));
        let c = inv.check.unwrap();
        assert_eq!(c.rhs, ratio(144, 25));
        assert!(c.holds);
        let m = monomial_invariants(&MonomialIdeal::maximal(3), None).unwrap();
        let c = m.check.unwrap();
        assert_eq!((c.lhs, c.rhs), (int(1), int(1)));
    }
}
