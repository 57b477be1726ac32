//! Graded sequences of monomial ideals and the constructions built on them.

mod limits;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::Path;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::monomial::{Exponent, MonomialIdeal};
use crate::newton::{build_polyhedron, region_ideal};
use crate::parse::parse_monomial_ideal;
use crate::rational::Rational;

pub use limits::{
    fekete_limit, lct_bracket, lct_limit, multiplicity_limit, ord_limit, positivity_certificate,
    volume_limsup, volume_limsup_with_window, Direction, FeketeMode, FeketeResult, LctBracket,
    LimitEstimate, Positivity,
};

pub const DEFAULT_M: u64 = 50;
pub const DEFAULT_P_BUDGET: u64 = 16;
pub const DEFAULT_R_BUDGET: u64 = 16;

type Oracle = dyn Fn(u64) -> Result<(MonomialIdeal, Option<u64>)> + Send + Sync;

type Memo = HashMap<u64, (MonomialIdeal, Option<u64>)>;

/// An indexed family `m ↦ a_m` of monomial ideals with a memo cache.
/// `a_0` is the unit ideal. Gradedness `a_p·a_q ⊆ a_{p+q}` is not assumed;
/// see [`verify_graded_prefix`].
#[derive(Clone)]
pub struct GradedSequence {
    dim: usize,
    label: String,
    oracle: Arc<Oracle>,
    cache: Arc<Mutex<Memo>>,
}

impl fmt::Debug for GradedSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedSequence")
            .field("dim", &self.dim)
            .field("label", &self.label)
            .finish()
    }
}

impl GradedSequence {
    pub fn new<F>(dim: usize, label: impl Into<String>, oracle: F) -> Result<Self>
    where
        F: Fn(u64) -> Result<MonomialIdeal> + Send + Sync + 'static,
    {
        Self::with_notes(dim, label, move |m| oracle(m).map(|a| (a, None)))
    }

    /// Like [`GradedSequence::new`], but the oracle also returns a
    /// per-index note (the saturation witness `r`).
    fn with_notes<F>(dim: usize, label: impl Into<String>, oracle: F) -> Result<Self>
    where
        F: Fn(u64) -> Result<(MonomialIdeal, Option<u64>)> + Send + Sync + 'static,
    {
        if dim == 0 {
            return Err(Error::EmptyDimension);
        }
        Ok(GradedSequence {
            dim,
            label: label.into(),
            oracle: Arc::new(oracle),
            cache: Arc::new(Mutex::new(HashMap::new())),
        })
    }

    /// `a_m = I^m`.
    pub fn powers(i: MonomialIdeal) -> Self {
        let label = format!("powers {i}");
        let dim = i.dim();
        let base = i.clone();
        Self::new(dim, label, move |m| {
            let k = u32::try_from(m).map_err(|_| Error::Overflow)?;
            Ok(base.power(k))
        })
        .expect("ideal has positive dimension")
    }

    /// `a_m = (X^u : <w, u> >= c·m)` for positive integer weights.
    pub fn weighted(weights: Vec<u64>, c: u64) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::EmptyDimension);
        }
        if weights.contains(&0) || c == 0 {
            return Err(Error::invalid("weights and threshold must be positive"));
        }
        let dim = weights.len();
        let label = format!(
            "weighted {} {c}",
            weights.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
        );
        Self::new(dim, label, move |m| weighted_ideal(&weights, c.checked_mul(m).ok_or(Error::Overflow)?))
    }

    /// `a_m = 𝔪^{k·m}`.
    pub fn maxpow(dim: usize, k: u32) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyDimension);
        }
        let max = MonomialIdeal::maximal(dim);
        Self::new(dim, format!("maxpow {k}"), move |m| {
            let e = u32::try_from(m)
                .ok()
                .and_then(|m| m.checked_mul(k))
                .ok_or(Error::Overflow)?;
            Ok(max.power(e))
        })
    }

    /// `a_m = (x1^m, ..., xn^m)`. Not graded for `n >= 2`.
    pub fn pure_powers(dim: usize) -> Result<Self> {
        Self::new(dim, format!("purepow {dim}"), move |m| {
            let e = u32::try_from(m).map_err(|_| Error::Overflow)?;
            MonomialIdeal::diagonal(&vec![e; dim])
        })
    }

    /// The same ideal at every positive index.
    pub fn constant(i: MonomialIdeal) -> Self {
        let label = format!("constant {i}");
        Self::new(i.dim(), label, move |_| Ok(i.clone())).expect("positive dimension")
    }

    /// Explicit ideals for the listed indices; other indices are errors.
    pub fn table(dim: usize, rows: BTreeMap<u64, MonomialIdeal>) -> Result<Self> {
        if let Some(bad) = rows.values().find(|a| a.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.dim(),
            });
        }
        let label = format!("table ({} rows)", rows.len());
        Self::new(dim, label, move |m| rows.get(&m).cloned().ok_or(Error::IndexOutOfRange(m)))
    }

    /// Reads a table file: one ideal per line, either `m: <ideal>` or
    /// bare (then numbered from 1). Blank lines and `#` comments are
    /// skipped.
    pub fn table_file(path: &Path, dim: Option<usize>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let mut rows = BTreeMap::new();
        let mut next = 1u64;
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (m, body) = match line.split_once(':') {
                Some((m, body)) => {
                    let m: u64 = m
                        .trim()
                        .parse()
                        .map_err(|_| Error::invalid(format!("bad table index {m:?}")))?;
                    (m, body)
                }
                None => (next, line),
            };
            if m == 0 {
                return Err(Error::invalid("table indices start at 1"));
            }
            next = m + 1;
            rows.insert(m, parse_monomial_ideal(body, dim)?);
        }
        let dim = match dim {
            Some(d) => d,
            None => rows.values().map(MonomialIdeal::dim).max().ok_or(Error::EmptyInput)?,
        };
        let rows = rows
            .into_iter()
            .map(|(m, a)| Ok((m, pad(a, dim)?)))
            .collect::<Result<_>>()?;
        Self::table(dim, rows)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// `a_m`, evaluated at most once per index.
    pub fn get(&self, m: u64) -> Result<MonomialIdeal> {
        if m == 0 {
            return Ok(MonomialIdeal::unit(self.dim));
        }
        if let Some((a, _)) = self.cache.lock().expect("cache lock").get(&m) {
            return Ok(a.clone());
        }
        let (a, note) = (self.oracle)(m)?;
        if a.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: a.dim(),
            });
        }
        self.cache
            .lock()
            .expect("cache lock")
            .entry(m)
            .or_insert((a.clone(), note));
        Ok(a)
    }

    /// Saturation witness `r` recorded for an evaluated index.
    pub fn witness(&self, m: u64) -> Option<u64> {
        self.cache
            .lock()
            .expect("cache lock")
            .get(&m)
            .and_then(|(_, w)| *w)
    }

    pub fn cached_indices(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.cache.lock().expect("cache lock").keys().copied().collect();
        v.sort_unstable();
        v
    }
}

fn pad(a: MonomialIdeal, dim: usize) -> Result<MonomialIdeal> {
    if a.dim() == dim {
        return Ok(a);
    }
    if a.dim() > dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: a.dim(),
        });
    }
    let gens = a
        .gens()
        .iter()
        .map(|g| {
            let mut c = g.coords().to_vec();
            c.resize(dim, 0);
            Exponent::new(c)
        })
        .collect();
    MonomialIdeal::minimalize(dim, gens)
}

/// Minimal generators of `(X^u : <w, u> >= t)`.
pub fn weighted_ideal(weights: &[u64], t: u64) -> Result<MonomialIdeal> {
    let n = weights.len();
    if t == 0 {
        return Ok(MonomialIdeal::unit(n));
    }
    let bounds: Vec<u32> = weights
        .iter()
        .map(|&w| u32::try_from(t.div_ceil(w)).map_err(|_| Error::Overflow))
        .collect::<Result<_>>()?;
    let last = n - 1;
    let mut prefix = vec![0u32; last];
    let mut raw = Vec::new();
    loop {
        let partial: u64 = prefix.iter().zip(weights).map(|(&u, &w)| u as u64 * w).sum();
        let need = t.saturating_sub(partial).div_ceil(weights[last]);
        let mut c = prefix.clone();
        c.push(need as u32);
        raw.push(Exponent::new(c));
        let mut k = 0;
        loop {
            if k == last {
                return MonomialIdeal::minimalize(n, raw);
            }
            if prefix[k] < bounds[k] {
                prefix[k] += 1;
                break;
            }
            prefix[k] = 0;
            k += 1;
        }
    }
}

/// A pair `(p, q)` with `a_p·a_q ⊄ a_{p+q}` and a generator of the product
/// outside `a_{p+q}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradednessViolation {
    pub p: u64,
    pub q: u64,
    pub witness: Exponent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradednessAudit {
    pub max_index: u64,
    pub pairs_checked: usize,
    pub violations: Vec<GradednessViolation>,
}

impl GradednessAudit {
    pub fn is_graded(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `a_p·a_q ⊆ a_{p+q}` for all `1 <= p <= q` with `p + q <= M`.
pub fn verify_graded_prefix(seq: &GradedSequence, max_index: u64) -> Result<GradednessAudit> {
    if max_index < 2 {
        return Err(Error::invalid("gradedness audit needs M >= 2"));
    }
    let mut violations = Vec::new();
    let mut pairs_checked = 0;
    for s in 2..=max_index {
        let target = seq.get(s)?;
        for p in 1..=s / 2 {
            let q = s - p;
            pairs_checked += 1;
            let prod = seq.get(p)?.product(&seq.get(q)?)?;
            if let Some(w) = prod.gens().iter().find(|g| !target.contains_monomial(g).unwrap_or(false)) {
                violations.push(GradednessViolation {
                    p,
                    q,
                    witness: w.clone(),
                });
            }
        }
    }
    Ok(GradednessAudit {
        max_index,
        pairs_checked,
        violations,
    })
}

/// `a'_{m,r} = (X^u : u ∈ (1/r)·P_{a_{mr}})`.
pub fn saturation_step(seq: &GradedSequence, m: u64, r: u64) -> Result<MonomialIdeal> {
    let a = seq.get(m.checked_mul(r).ok_or(Error::Overflow)?)?;
    let p = build_polyhedron(&a)?;
    region_ideal(&p, &Rational::new(1.into(), r.into()), 0, false)
}

/// The saturated sequence: `a'_m` is the largest `a'_{m,r}` along
/// `r = 1, 2, 4, ... <= r_budget`, with the first `r` reaching it recorded
/// as the witness.
pub fn saturate(seq: &GradedSequence, r_budget: u64) -> Result<GradedSequence> {
    if r_budget == 0 {
        return Err(Error::ZeroBudget);
    }
    let inner = seq.clone();
    let label = format!("saturate({}, r<={r_budget})", seq.label());
    GradedSequence::with_notes(seq.dim(), label, move |m| {
        let mut steps: Vec<(u64, MonomialIdeal)> = Vec::new();
        let mut r = 1u64;
        while r <= r_budget {
            steps.push((r, saturation_step(&inner, m, r)?));
            r = match r.checked_mul(2) {
                Some(next) => next,
                None => break,
            };
        }
        let (_, last) = steps.last().cloned().expect("budget is positive");
        let witness = steps.iter().find(|(_, a)| *a == last).map(|(r, _)| *r);
        Ok((last, witness))
    })
}

/// `c_m = a_m : b_m`.
pub fn colon_sequence(a: &GradedSequence, b: &GradedSequence) -> Result<GradedSequence> {
    check_same_dim(a, b)?;
    let (a2, b2) = (a.clone(), b.clone());
    GradedSequence::new(a.dim(), format!("({}) : ({})", a.label(), b.label()), move |m| {
        a2.get(m)?.colon(&b2.get(m)?)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Combine {
    Product,
    Intersection,
}

/// Indexwise product or intersection.
pub fn combine(a: &GradedSequence, b: &GradedSequence, op: Combine) -> Result<GradedSequence> {
    check_same_dim(a, b)?;
    let (a2, b2) = (a.clone(), b.clone());
    let sym = match op {
        Combine::Product => "*",
        Combine::Intersection => "∩",
    };
    GradedSequence::new(a.dim(), format!("({}) {sym} ({})", a.label(), b.label()), move |m| {
        let (x, y) = (a2.get(m)?, b2.get(m)?);
        match op {
            Combine::Product => x.product(&y),
            Combine::Intersection => x.intersection(&y),
        }
    })
}

fn check_same_dim(a: &GradedSequence, b: &GradedSequence) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(())
}

/// Parses a sequence descriptor: `powers <ideal>`, `weighted w1 .. wn c`,
/// `maxpow k`, `purepow n` or `table <file>`. `dim` is needed by `maxpow`
/// and optional elsewhere.
pub fn parse_descriptor(words: &[String], dim: Option<usize>) -> Result<GradedSequence> {
    let (head, rest) = words.split_first().ok_or(Error::EmptyInput)?;
    let int = |s: &String| -> Result<u64> {
        s.trim()
            .parse()
            .map_err(|_| Error::invalid(format!("expected a positive integer, got {s:?}")))
    };
    match head.to_ascii_lowercase().as_str() {
        "powers" => {
            let text = rest.join(" ");
            Ok(GradedSequence::powers(parse_monomial_ideal(&text, dim)?))
        }
        "weighted" => {
            if rest.len() < 2 {
                return Err(Error::invalid("weighted needs n weights and a threshold"));
            }
            let nums: Vec<u64> = rest.iter().map(int).collect::<Result<_>>()?;
            let (c, w) = nums.split_last().expect("nonempty");
            if let Some(d) = dim {
                if d != w.len() {
                    return Err(Error::DimensionMismatch {
                        expected: d,
                        found: w.len(),
                    });
                }
            }
            GradedSequence::weighted(w.to_vec(), *c)
        }
        "maxpow" => {
            let [k] = rest else {
                return Err(Error::invalid("maxpow takes exactly one argument"));
            };
            let k = u32::try_from(int(k)?).map_err(|_| Error::Overflow)?;
            GradedSequence::maxpow(dim.unwrap_or(2), k)
        }
        "purepow" => {
            let n = match rest {
                [] => dim.unwrap_or(2),
                [n] => int(n)? as usize,
                _ => return Err(Error::invalid("purepow takes at most one argument")),
            };
            GradedSequence::pure_powers(n)
        }
        "table" => {
            let [file] = rest else {
                return Err(Error::invalid("table takes exactly one file"));
            };
            GradedSequence::table_file(Path::new(file), dim)
        }
        other => Err(Error::invalid(format!("unknown sequence kind {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(text: &str) -> MonomialIdeal {
        parse_monomial_ideal(text, Some(2)).unwrap()
    }

    #[test]
    fn weighted_generators() {
        let a = weighted_ideal(&[5, 7], 5).unwrap();
        assert_eq!(a, ideal("x, y"));
        let a = weighted_ideal(&[5, 7], 10).unwrap();
        assert_eq!(a, ideal("x^2, x*y, y^2"));
        let a = weighted_ideal(&[5, 7], 15).unwrap();
        // 5i + 7j >= 15.
        assert_eq!(a, ideal("x^3, x^2*y, x*y^2, y^3"));
        let a = weighted_ideal(&[1, 1, 1], 2).unwrap();
        assert_eq!(a, MonomialIdeal::maximal(3).power(2));
    }

    #[test]
    fn gradedness_audits() {
        let powers = GradedSequence::powers(ideal("x^2, y^3"));
        assert!(verify_graded_prefix(&powers, 10).unwrap().is_graded());
        let w = GradedSequence::weighted(vec![5, 7], 5).unwrap();
        assert!(verify_graded_prefix(&w, 10).unwrap().is_graded());
        let ex = GradedSequence::pure_powers(2).unwrap();
        let audit = verify_graded_prefix(&ex, 4).unwrap();
        assert!(!audit.is_graded());
        let first = &audit.violations[0];
        assert_eq!((first.p, first.q), (1, 1));
        assert_eq!(first.witness, Exponent::from([1, 1]));
    }

    #[test]
    fn saturation_contains_and_is_idempotent() {
        let seq = GradedSequence::weighted(vec![5, 7], 5).unwrap();
        let sat = saturate(&seq, 8).unwrap();
        let sat2 = saturate(&sat, 8).unwrap();
        for m in 1..=5 {
            let a = seq.get(m).unwrap();
            let s = sat.get(m).unwrap();
            assert!(s.contains(&a).unwrap());
            assert_eq!(sat2.get(m).unwrap(), s);
            assert!(sat.witness(m).is_some());
        }
    }

    #[test]
    fn colon_and_combine() {
        let a = GradedSequence::powers(ideal("x^2, y^3"));
        let unit = GradedSequence::constant(MonomialIdeal::unit(2));
        let c = colon_sequence(&a, &unit).unwrap();
        assert_eq!(c.get(3).unwrap(), a.get(3).unwrap());
        let i = GradedSequence::powers(ideal("x, y^2"));
        let prod = combine(&a, &i, Combine::Product).unwrap();
        let direct = GradedSequence::powers(ideal("x^2, y^3").product(&ideal("x, y^2")).unwrap());
        for m in 1..4 {
            assert_eq!(prod.get(m).unwrap(), direct.get(m).unwrap());
        }
    }

    #[test]
    fn descriptors() {
        let w = |s: &str| s.split_whitespace().map(String::from).collect::<Vec<_>>();
        let s = parse_descriptor(&w("powers x^2, y^3"), None).unwrap();
        assert_eq!(s.get(2).unwrap(), ideal("x^4, x^2*y^3, y^6"));
        let s = parse_descriptor(&w("maxpow 2"), Some(2)).unwrap();
        assert_eq!(s.get(1).unwrap(), MonomialIdeal::maximal(2).power(2));
        let s = parse_descriptor(&w("weighted 5 7 5"), None).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(parse_descriptor(&w("bogus 1"), None).is_err());
        assert!(parse_descriptor(&w("weighted 5 7 5"), Some(3)).is_err());
    }

    #[test]
    fn table_files() {
        let dir = std::env::temp_dir().join(format!("ai-core-table-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("t.txt");
        std::fs::write(&path, "# a table\n1: x, y\n2: x^2, x*y, y^2\n").unwrap();
        let s = GradedSequence::table_file(&path, None).unwrap();
        assert_eq!(s.get(2).unwrap(), MonomialIdeal::maximal(2).power(2));
        assert_eq!(s.get(3), Err(Error::IndexOutOfRange(3)));
        std::fs::remove_dir_all(dir).ok();
    }
}
