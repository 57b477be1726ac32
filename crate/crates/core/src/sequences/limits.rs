//! Limit estimators for asymptotic invariants of graded sequences.
//!
//! Nothing here extrapolates. An estimate carries its raw samples and an
//! envelope whose direction says which side of the true limit it is on.

use std::collections::BTreeMap;

use num_traits::Signed;

use super::GradedSequence;
use crate::error::{Error, Result};
use crate::multiplier::asymptotic_multiplier;
use crate::newton::{lct, multiplicity, ord_weight, WeightVector};
use crate::rational::{factorial, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// The limit is the infimum; every sample bounds it from above.
    Upper,
    /// The limit is the supremum; every sample bounds it from below.
    Lower,
    /// Maximum over a trailing window, a limsup estimate with no bound
    /// direction.
    Window,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitEstimate {
    pub samples: Vec<(u64, Rational)>,
    pub best_bound: Rational,
    pub direction: Direction,
    pub claimed_limit: Option<Rational>,
    /// First index of the trailing window for [`Direction::Window`].
    pub window_start: Option<u64>,
}

impl LimitEstimate {
    /// Sorts samples by index; `best_bound` is the min (`Upper`) or max
    /// (`Lower`) sample, or the max over the last half (`Window`).
    pub fn from_samples(mut samples: Vec<(u64, Rational)>, direction: Direction) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::EmptyInput);
        }
        samples.sort_by_key(|(m, _)| *m);
        let mut window_start = None;
        let best_bound = match direction {
            Direction::Upper => samples.iter().map(|(_, v)| v).min(),
            Direction::Lower => samples.iter().map(|(_, v)| v).max(),
            Direction::Window => {
                let tail = &samples[samples.len() / 2..];
                window_start = Some(tail[0].0);
                tail.iter().map(|(_, v)| v).max()
            }
        }
        .expect("nonempty")
        .clone();
        Ok(LimitEstimate {
            samples,
            best_bound,
            direction,
            claimed_limit: None,
            window_start,
        })
    }

    pub fn with_claim(mut self, limit: Rational) -> Self {
        self.claimed_limit = Some(limit);
        self
    }

    /// Running min (`Upper`) or max (`Lower`) by index. For `Window` the
    /// raw samples are returned.
    pub fn envelope(&self) -> Vec<(u64, Rational)> {
        let mut out: Vec<(u64, Rational)> = Vec::with_capacity(self.samples.len());
        for (m, v) in &self.samples {
            let next = match (self.direction, out.last()) {
                (Direction::Upper, Some((_, prev))) if prev < v => prev.clone(),
                (Direction::Lower, Some((_, prev))) if prev > v => prev.clone(),
                _ => v.clone(),
            };
            out.push((*m, next));
        }
        out
    }

    /// `|best_bound - x|`.
    pub fn distance_to(&self, x: &Rational) -> Rational {
        (&self.best_bound - x).abs()
    }

    pub fn sample(&self, m: u64) -> Option<&Rational> {
        self.samples.iter().find(|(k, _)| *k == m).map(|(_, v)| v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FeketeMode {
    Subadditive,
    Superadditive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeketeResult {
    pub estimate: LimitEstimate,
    pub mode: FeketeMode,
    /// Sampled pairs `(p, q)` where the additivity hypothesis fails.
    pub violations: Vec<(u64, u64)>,
}

impl FeketeResult {
    pub fn hypothesis_holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Largest `p` used when auditing additivity; pairs `(p, q)` with
/// `p <= min(q, AUDIT_SPAN)` are checked.
const AUDIT_SPAN: u64 = 32;

/// Fekete envelope of `α_m / m`: inf for subadditive sequences, sup for
/// superadditive ones. The hypothesis is audited on sampled pairs.
pub fn fekete_limit(values: &[(u64, Rational)], mode: FeketeMode) -> Result<FeketeResult> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut table: BTreeMap<u64, &Rational> = BTreeMap::new();
    for (m, v) in values {
        if *m == 0 {
            return Err(Error::invalid("indices must be positive"));
        }
        if table.insert(*m, v).is_some() {
            return Err(Error::invalid(format!("duplicate index {m}")));
        }
    }
    let mut violations = Vec::new();
    for (&p, &ap) in table.range(1..=AUDIT_SPAN) {
        for (&q, &aq) in table.range(p..) {
            if let Some(&apq) = table.get(&(p + q)) {
                let sum = ap + aq;
                let ok = match mode {
                    FeketeMode::Subadditive => *apq <= sum,
                    FeketeMode::Superadditive => *apq >= sum,
                };
                if !ok {
                    violations.push((p, q));
                }
            }
        }
    }
    let samples = table
        .iter()
        .map(|(&m, &v)| (m, v / Rational::from_integer(m.into())))
        .collect();
    let direction = match mode {
        FeketeMode::Subadditive => Direction::Upper,
        FeketeMode::Superadditive => Direction::Lower,
    };
    Ok(FeketeResult {
        estimate: LimitEstimate::from_samples(samples, direction)?,
        mode,
        violations,
    })
}

fn m_pow_n(m: u64, n: usize) -> Rational {
    Rational::from_integer(num_bigint::BigInt::from(m).pow(n as u32))
}

fn check_budget(max_index: u64) -> Result<()> {
    if max_index == 0 {
        return Err(Error::ZeroBudget);
    }
    Ok(())
}

/// Samples `e(a_m)/m^n` for `m <= M`; the limit is their infimum.
pub fn multiplicity_limit(seq: &GradedSequence, max_index: u64) -> Result<LimitEstimate> {
    check_budget(max_index)?;
    let n = seq.dim();
    let samples = (1..=max_index)
        .map(|m| {
            let e = multiplicity(&seq.get(m)?)?;
            Ok((m, Rational::from_integer(e.into()) / m_pow_n(m, n)))
        })
        .collect::<Result<_>>()?;
    LimitEstimate::from_samples(samples, Direction::Upper)
}

/// Samples `n!·length(R/a_m)/m^n`; the estimate is the maximum over the
/// last half of the samples.
pub fn volume_limsup(seq: &GradedSequence, max_index: u64) -> Result<LimitEstimate> {
    volume_limsup_with_window(seq, 1..=max_index)
}

pub fn volume_limsup_with_window(
    seq: &GradedSequence,
    indices: impl IntoIterator<Item = u64>,
) -> Result<LimitEstimate> {
    let n = seq.dim();
    let nfact = Rational::from_integer(factorial(n as u32));
    let samples = indices
        .into_iter()
        .map(|m| {
            let len = seq.get(m)?.colength()?;
            Ok((m, &nfact * Rational::from_integer(len.into()) / m_pow_n(m, n)))
        })
        .collect::<Result<Vec<_>>>()?;
    LimitEstimate::from_samples(samples, Direction::Window)
}

/// Samples `m·lct(a_m)`; the limit is their supremum.
pub fn lct_limit(seq: &GradedSequence, max_index: u64) -> Result<LimitEstimate> {
    check_budget(max_index)?;
    let samples = (1..=max_index)
        .map(|m| Ok((m, lct(&seq.get(m)?)? * Rational::from_integer(m.into()))))
        .collect::<Result<_>>()?;
    LimitEstimate::from_samples(samples, Direction::Lower)
}

/// Two-sided bracket on `lct(a_•)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LctBracket {
    /// `m·lct(a_m)`, a lower bound at every `m`.
    pub lower: LimitEstimate,
    /// `m·lct(b_m)`, an upper bound at every `m` where `b_m` is proper.
    /// `None` if every computed `b_m` is the unit ideal.
    pub upper: Option<LimitEstimate>,
    /// Indices whose asymptotic multiplier chain did not stabilize.
    pub unstabilized: Vec<u64>,
}

impl LctBracket {
    pub fn width(&self) -> Option<Rational> {
        self.upper
            .as_ref()
            .map(|u| &u.best_bound - &self.lower.best_bound)
    }
}

pub fn lct_bracket(seq: &GradedSequence, max_index: u64, p_budget: u64) -> Result<LctBracket> {
    let lower = lct_limit(seq, max_index)?;
    let mut samples = Vec::new();
    let mut unstabilized = Vec::new();
    for m in 1..=max_index {
        let b = asymptotic_multiplier(seq, m, p_budget)?;
        if !b.stabilized {
            unstabilized.push(m);
        }
        if !b.ideal.is_unit() {
            samples.push((m, lct(&b.ideal)? * Rational::from_integer(m.into())));
        }
    }
    let upper = if samples.is_empty() {
        None
    } else {
        Some(LimitEstimate::from_samples(samples, Direction::Upper)?)
    };
    Ok(LctBracket {
        lower,
        upper,
        unstabilized,
    })
}

/// Samples `ord_w(a_m)/m`; the limit is their infimum. With `w = e` this
/// is the Lelong number.
pub fn ord_limit(seq: &GradedSequence, w: &WeightVector, max_index: u64) -> Result<LimitEstimate> {
    check_budget(max_index)?;
    let samples = (1..=max_index)
        .map(|m| Ok((m, ord_weight(&seq.get(m)?, w)? / Rational::from_integer(m.into()))))
        .collect::<Result<_>>()?;
    LimitEstimate::from_samples(samples, Direction::Upper)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Positivity {
    /// `b_q` is proper, hence `a_p ⊆ 𝔪^{⌊p/q⌋}` for all `p`.
    Positive(u64),
    /// No certificate within the budgets; finite data cannot show
    /// vanishing.
    Unknown,
}

pub fn positivity_certificate(seq: &GradedSequence, m_budget: u64, p_budget: u64) -> Result<Positivity> {
    for m in 1..=m_budget {
        if !asymptotic_multiplier(seq, m, p_budget)?.ideal.is_unit() {
            return Ok(Positivity::Positive(m));
        }
    }
    Ok(Positivity::Unknown)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialIdeal;
    use crate::parse::parse_monomial_ideal;
    use crate::rational::{int, ratio};

    #[test]
    fn envelopes() {
        let e = LimitEstimate::from_samples(vec![(2, int(3)), (1, int(5)), (3, int(4))], Direction::Upper).unwrap();
        assert_eq!(e.best_bound, int(3));
        assert_eq!(e.envelope(), vec![(1, int(5)), (2, int(3)), (3, int(3))]);
        let w = LimitEstimate::from_samples(vec![(1, int(9)), (2, int(1)), (3, int(2)), (4, int(1))], Direction::Window).unwrap();
        assert_eq!(w.best_bound, int(2));
        assert_eq!(w.window_start, Some(3));
        assert!(LimitEstimate::from_samples(vec![], Direction::Lower).is_err());
    }

    #[test]
    fn fekete_examples() {
        let c = ratio(314159, 100000);
        let values: Vec<(u64, Rational)> = (1..=1000)
            .map(|m| (m, (&c * Rational::from_integer(m.into())).ceil()))
            .collect();
        let r = fekete_limit(&values, FeketeMode::Subadditive).unwrap();
        assert!(r.hypothesis_holds());
        assert!(r.estimate.distance_to(&c) < ratio(1, 1000));

        let sq: Vec<(u64, Rational)> = (1..=20).map(|m| (m, int((m * m) as i64))).collect();
        let r = fekete_limit(&sq, FeketeMode::Subadditive).unwrap();
        assert!(!r.hypothesis_holds());

        let half: Vec<(u64, Rational)> = (1..=200).map(|m| (m, int((m / 2) as i64))).collect();
        let r = fekete_limit(&half, FeketeMode::Superadditive).unwrap();
        assert!(r.hypothesis_holds());
        assert_eq!(r.estimate.best_bound, ratio(1, 2));
        assert_eq!(r.estimate.direction, Direction::Lower);
        assert!(fekete_limit(&[], FeketeMode::Subadditive).is_err());
    }

    #[test]
    fn sequence_limits() {
        let seq = GradedSequence::maxpow(2, 2).unwrap();
        let e = multiplicity_limit(&seq, 6).unwrap();
        assert!(e.samples.iter().all(|(_, v)| *v == int(4)));
        let v = volume_limsup(&seq, 6).unwrap();
        for (m, s) in &v.samples {
            assert_eq!(*s, int(4) + ratio(2, *m as i64));
        }
        let l = lct_limit(&GradedSequence::maxpow(3, 1).unwrap(), 5).unwrap();
        assert!(l.samples.iter().all(|(_, v)| *v == int(3)));
        let i = parse_monomial_ideal("x^2, y^3", None).unwrap();
        let o = ord_limit(&GradedSequence::powers(i), &WeightVector::ones(2), 5).unwrap();
        assert!(o.samples.iter().all(|(_, v)| *v == int(2)));
    }

    #[test]
    fn positivity() {
        let i = parse_monomial_ideal("x^2, y^3", None).unwrap();
        assert_eq!(positivity_certificate(&GradedSequence::powers(i), 3, 4).unwrap(), Positivity::Positive(1));
        let unit = GradedSequence::constant(MonomialIdeal::unit(2));
        assert_eq!(positivity_certificate(&unit, 3, 4).unwrap(), Positivity::Unknown);
        let w = GradedSequence::weighted(vec![5, 7], 5).unwrap();
        assert!(matches!(positivity_certificate(&w, 5, 16).unwrap(), Positivity::Positive(q) if q <= 5));
    }
}
