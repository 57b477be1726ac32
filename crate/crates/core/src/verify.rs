//! Seeded property suites over pseudo-random monomial ideals.
//!
//! Each suite checks known inequalities or containments on exact data.
//! Comparisons of n-th roots use outward rational bounds; when the bounds
//! cannot decide, the check is counted as inconclusive, never as failed.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{Exponent, MonomialIdeal};
use crate::multiplier::{asymptotic_multiplier, multiplier_ideal};
use crate::newton::{build_polyhedron, complement_volume, lct, multiplicity};
use crate::rational::{factorial, int, nth_root_bounds, pow, ratio, Rational};
use crate::sequences::{saturate, GradedSequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Suite {
    /// `e(ab)^(1/n) <= e(a)^(1/n) + e(b)^(1/n)` and
    /// `1/lct(ab) <= 1/lct(a) + 1/lct(b)`.
    Teissier,
    /// `I(λ·ab) ⊆ I(λ·a)·I(λ·b)`.
    Subadd,
    /// `1/lct(I(λ·a)) >= λ/lct(a) - 1` whenever `I(λ·a)` is proper.
    LcBound,
    /// `a_m ⊆ b_m`, multiplicity and colength comparisons, and the
    /// reverse-graded laws on prefixes of asymptotic multiplier ideals.
    Chain,
    /// `X^e ∈ (a'_m : b'_m)` for saturated sequences, plus idempotence.
    Saturation,
    /// `n!·vol(Q)` is a positive integer within the classical bounds.
    Integrality,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Teissier,
        Suite::Subadd,
        Suite::LcBound,
        Suite::Chain,
        Suite::Saturation,
        Suite::Integrality,
    ];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Teissier => "teissier",
            Suite::Subadd => "subadd",
            Suite::LcBound => "lcbound",
            Suite::Chain => "chain",
            Suite::Saturation => "saturation",
            Suite::Integrality => "integrality",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::invalid(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub count: usize,
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub inconclusive: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite, seed: u64, count: usize) -> Self {
        SuiteReport {
            suite,
            seed,
            count,
            checks: 0,
            passed: 0,
            failed: 0,
            inconclusive: 0,
            failures: vec![],
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    fn record(&mut self, outcome: Outcome, what: impl FnOnce() -> String) {
        self.checks += 1;
        match outcome {
            Outcome::Pass => self.passed += 1,
            Outcome::Inconclusive => self.inconclusive += 1,
            Outcome::Fail => {
                self.failed += 1;
                self.failures.push(what());
            }
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.record(if ok { Outcome::Pass } else { Outcome::Fail }, what);
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} seed={} count={}: {} checks, {} passed, {} failed, {} inconclusive",
            self.suite, self.seed, self.count, self.checks, self.passed, self.failed, self.inconclusive
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Inconclusive,
}

/// Random zero-dimensional monomial ideal: pure powers `x_i^{a_i}` with
/// `1 <= a_i <= max_power` plus up to `extra` nonconstant generators inside the
/// box.
pub fn random_ideal(rng: &mut impl Rng, n: usize, max_power: u32, extra: usize) -> MonomialIdeal {
    let powers: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=max_power)).collect();
    let mut gens: Vec<Exponent> = (0..n).map(|i| Exponent::pure_power(n, i, powers[i])).collect();
    for _ in 0..rng.gen_range(0..=extra) {
        let u = Exponent::new(powers.iter().map(|&a| rng.gen_range(0..a)).collect());
        if !u.is_zero() {
            gens.push(u);
        }
    }
    MonomialIdeal::minimalize(n, gens).expect("dimension is consistent")
}

/// Decides `x^(1/n) <= y^(1/n) + z^(1/n)` with outward bounds.
pub fn root_sum_inequality(x: u64, y: u64, z: u64, n: u32) -> Outcome {
    let b = |v: u64| nth_root_bounds(&BigUint::from(v), n);
    let ((xl, xh), (yl, yh), (zl, zh)) = (b(x), b(y), b(z));
    if xh <= &yl + &zl {
        Outcome::Pass
    } else if xl > yh + zh {
        Outcome::Fail
    } else {
        Outcome::Inconclusive
    }
}

/// Runs `suite` on `count` seeded cases.
pub fn run_suite(suite: Suite, seed: u64, count: usize) -> Result<SuiteReport> {
    if count == 0 {
        return Err(Error::ZeroBudget);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new(suite, seed, count);
    for case in 0..count {
        let n = 2 + case % 2;
        match suite {
            Suite::Teissier => teissier_case(&mut rng, n, &mut report)?,
            Suite::Subadd => subadd_case(&mut rng, n, &mut report)?,
            Suite::LcBound => lcbound_case(&mut rng, n, &mut report)?,
            Suite::Chain => chain_case(&mut rng, case, &mut report)?,
            Suite::Saturation => saturation_case(&mut rng, case, &mut report)?,
            Suite::Integrality => integrality_case(&mut rng, 1 + case % 3, &mut report)?,
        }
    }
    Ok(report)
}

fn teissier_case(rng: &mut ChaCha8Rng, n: usize, report: &mut SuiteReport) -> Result<()> {
    let a = random_ideal(rng, n, 6, 3);
    let b = random_ideal(rng, n, 6, 3);
    let ab = a.product(&b)?;
    let (ea, eb, eab) = (multiplicity(&a)?, multiplicity(&b)?, multiplicity(&ab)?);
    report.record(root_sum_inequality(eab, ea, eb, n as u32), || {
        format!("teissier: e({ab})={eab}, e({a})={ea}, e({b})={eb}")
    });
    let inv = |x: Rational| Rational::one() / x;
    let (la, lb, lab) = (lct(&a)?, lct(&b)?, lct(&ab)?);
    report.check(inv(lab.clone()) <= inv(la.clone()) + inv(lb.clone()), || {
        format!("lct analogue: lct({ab})={lab}, lct({a})={la}, lct({b})={lb}")
    });
    Ok(())
}

fn subadd_case(rng: &mut ChaCha8Rng, n: usize, report: &mut SuiteReport) -> Result<()> {
    let (max_power, extra) = if n == 2 { (6, 3) } else { (4, 2) };
    let a = random_ideal(rng, n, max_power, extra);
    let b = random_ideal(rng, n, max_power, extra);
    let lambda = ratio(rng.gen_range(1..=6), 2);
    let lhs = multiplier_ideal(&a.product(&b)?, &lambda)?;
    let rhs = multiplier_ideal(&a, &lambda)?.product(&multiplier_ideal(&b, &lambda)?)?;
    report.check(rhs.contains(&lhs)?, || {
        format!("subadditivity at λ={lambda}: a=({a}), b=({b}), I(λab)=({lhs})")
    });
    Ok(())
}

fn lcbound_case(rng: &mut ChaCha8Rng, n: usize, report: &mut SuiteReport) -> Result<()> {
    let a = random_ideal(rng, n, 6, 3);
    let la = lct(&a)?;
    for lambda in [int(1), ratio(3, 2), int(2)] {
        let j = multiplier_ideal(&a, &lambda)?;
        if j.is_unit() {
            continue;
        }
        let lj = lct(&j)?;
        let bound = &lambda / &la - int(1);
        report.check(Rational::one() / &lj >= bound, || {
            format!("bound_lc at λ={lambda}: a=({a}), lct(a)={la}, lct(I)={lj}")
        });
    }
    Ok(())
}

/// Two-variable test sequences: powers of a random ideal or a random
/// weighted family.
fn random_sequence(rng: &mut ChaCha8Rng, case: usize) -> Result<GradedSequence> {
    if case.is_multiple_of(2) {
        Ok(GradedSequence::powers(random_ideal(rng, 2, 4, 2)))
    } else {
        let w = vec![rng.gen_range(1..=7), rng.gen_range(1..=7)];
        GradedSequence::weighted(w, rng.gen_range(1..=5))
    }
}

const CHAIN_M: u64 = 6;
const CHAIN_P: u64 = 8;

fn chain_case(rng: &mut ChaCha8Rng, case: usize, report: &mut SuiteReport) -> Result<()> {
    let seq = random_sequence(rng, case)?;
    let label = seq.label().to_string();
    let n = seq.dim() as u32;
    let mut bs = Vec::new();
    for m in 1..=CHAIN_M {
        let a = seq.get(m)?;
        let b = asymptotic_multiplier(&seq, m, CHAIN_P)?;
        report.check(b.ideal.contains(&a)?, || format!("{label}: a_{m} ⊄ b_{m}"));
        report.check(multiplicity(&b.ideal)? <= multiplicity(&a)?, || {
            format!("{label}: e(b_{m}) > e(a_{m})")
        });
        report.check(b.ideal.colength()? <= a.colength()?, || {
            format!("{label}: len(b_{m}) > len(a_{m})")
        });
        bs.push(b);
    }
    let scaled = |e: u64, m: u64| Rational::new(e.into(), num_bigint::BigInt::from(m).pow(n));
    let upper: Vec<Rational> = (1..=CHAIN_M)
        .map(|m| Ok(scaled(multiplicity(&seq.get(m)?)?, m)))
        .collect::<Result<_>>()?;
    let best_upper = upper.iter().min().expect("nonempty").clone();
    for (i, b) in bs.iter().enumerate() {
        let m = i as u64 + 1;
        if !b.stabilized {
            report.record(Outcome::Inconclusive, String::new);
            continue;
        }
        let lower = scaled(multiplicity(&b.ideal)?, m);
        report.check(lower <= best_upper, || {
            format!("{label}: e(b_{m})/m^n = {lower} exceeds e(a_m')/m'^n = {best_upper}")
        });
    }
    for p in 1..=CHAIN_M as usize {
        for q in 1..p {
            let (bp, bq) = (&bs[p - 1], &bs[q - 1]);
            if bp.stabilized && bq.stabilized {
                report.check(bq.ideal.contains(&bp.ideal)?, || format!("{label}: b_{p} ⊄ b_{q}"));
            }
            if p + q <= CHAIN_M as usize {
                let bpq = &bs[p + q - 1];
                if bp.stabilized && bq.stabilized && bpq.stabilized {
                    let prod = bp.ideal.product(&bq.ideal)?;
                    report.check(prod.contains(&bpq.ideal)?, || {
                        format!("{label}: b_{} ⊄ b_{p}·b_{q}", p + q)
                    });
                }
            }
        }
    }
    Ok(())
}

const SAT_M: u64 = 10;
const SAT_BUDGET: u64 = 8;

fn saturation_case(rng: &mut ChaCha8Rng, case: usize, report: &mut SuiteReport) -> Result<()> {
    let seq = random_sequence(rng, case)?;
    let label = seq.label().to_string();
    let sat = saturate(&seq, SAT_BUDGET)?;
    let sat2 = saturate(&sat, SAT_BUDGET)?;
    let e = Exponent::ones(seq.dim());
    for m in 1..=SAT_M {
        let a = seq.get(m)?;
        let s = sat.get(m)?;
        report.check(s.contains(&a)?, || format!("{label}: a_{m} ⊄ a'_{m}"));
        report.check(multiplicity(&s)? <= multiplicity(&a)?, || format!("{label}: e(a'_{m}) > e(a_{m})"));
        report.check(sat2.get(m)? == s, || format!("{label}: saturation not idempotent at {m}"));
        let b = asymptotic_multiplier(&sat, m, SAT_BUDGET)?;
        let c = s.colon(&b.ideal)?;
        report.check(c.contains_monomial(&e)?, || {
            format!("{label}: X^e ∉ (a'_{m} : b'_{m}) = ({c})")
        });
    }
    Ok(())
}

fn integrality_case(rng: &mut ChaCha8Rng, n: usize, report: &mut SuiteReport) -> Result<()> {
    let a = random_ideal(rng, n, 5, 4);
    let p = build_polyhedron(&a)?;
    let e = complement_volume(&p)? * Rational::from_integer(factorial(n as u32));
    report.check(e.is_integer() && e > int(0), || format!("n!·vol(Q) = {e} for ({a})"));
    let e = multiplicity(&a)?;
    let len = a.colength()?;
    let nfact: u64 = (1..=n as u64).product();
    report.check(len <= e && e <= nfact * len, || {
        format!("len={len}, e={e} out of [len, n!·len] for ({a})")
    });
    let ord = a.order()?;
    report.check(e >= ord.pow(n as u32), || format!("e={e} < ord^n={}^{n} for ({a})", ord));
    let l = lct(&a)?;
    let rhs = Rational::from_integer((n as u64).pow(n as u32).into()) / pow(&l, n as u32);
    report.check(Rational::from_integer(e.into()) >= rhs, || {
        format!("e={e} < n^n/lct^n = {rhs} for ({a})")
    });
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_inequality_outcomes() {
        assert_eq!(root_sum_inequality(4, 1, 1, 2), Outcome::Pass);
        assert_eq!(root_sum_inequality(9, 1, 1, 2), Outcome::Fail);
        assert_eq!(root_sum_inequality(8, 2, 2, 2), Outcome::Inconclusive);
    }

    #[test]
    fn suites_are_reproducible() {
        let a = run_suite(Suite::Teissier, 3, 10).unwrap();
        let b = run_suite(Suite::Teissier, 3, 10).unwrap();
        assert_eq!(a, b);
        assert!(a.ok());
        assert_eq!("SUBADD".parse::<Suite>().unwrap(), Suite::Subadd);
    }
}
