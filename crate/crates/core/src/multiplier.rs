//! Multiplier ideals of monomial ideals and asymptotic multiplier ideals
//! of graded sequences.
//!
//! For a monomial ideal `a`, `I(λ·a)` is generated by the monomials `X^u`
//! with `u + e` in the interior of `λ·P_a`.

use std::collections::BTreeSet;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::monomial::{advance, MonomialIdeal};
use crate::newton::{build_polyhedron, region_ideal, NewtonPolyhedron};
use crate::rational::{ceil_int, to_u64, Rational};
use crate::sequences::GradedSequence;

pub fn multiplier_ideal(a: &MonomialIdeal, lambda: &Rational) -> Result<MonomialIdeal> {
    if !lambda.is_positive() {
        return Err(Error::NonPositiveScale(lambda.to_string()));
    }
    multiplier_ideal_of(&build_polyhedron(a)?, lambda)
}

pub fn multiplier_ideal_of(p: &NewtonPolyhedron, lambda: &Rational) -> Result<MonomialIdeal> {
    region_ideal(p, lambda, 1, true)
}

/// Breakpoints of `λ ↦ I(λ·a)` on `(0, λ_max]`, each with the ideal that
/// starts there. The first entry, if any, sits at `lct(a)`.
pub fn jumping_scan(a: &MonomialIdeal, lambda_max: &Rational) -> Result<Vec<(Rational, MonomialIdeal)>> {
    if !lambda_max.is_positive() {
        return Err(Error::NonPositiveScale(lambda_max.to_string()));
    }
    let p = build_polyhedron(a)?;
    let n = p.dim();
    let bound = to_u64(&ceil_int(
        &(lambda_max * Rational::from_integer(p.box_bound().into())),
    ))?;
    let bound = u32::try_from(bound).map_err(|_| Error::Overflow)? + 1;
    let mut candidates = BTreeSet::new();
    let mut u = vec![0u32; n];
    loop {
        for f in p.facets() {
            let s: i128 = f
                .normal()
                .iter()
                .zip(&u)
                .map(|(&w, &c)| w * (c as i128 + 1))
                .sum();
            let lambda = Rational::new(s.into(), f.offset().into());
            if &lambda <= lambda_max {
                candidates.insert(lambda);
            }
        }
        if !advance(&mut u, bound) {
            break;
        }
    }
    let mut out = Vec::new();
    let mut current = MonomialIdeal::unit(n);
    for lambda in candidates {
        let ideal = multiplier_ideal_of(&p, &lambda)?;
        if ideal != current {
            current = ideal.clone();
            out.push((lambda, ideal));
        }
    }
    Ok(out)
}

/// The chain `p ↦ I((1/p)·a_{mp})` along `p = 1, 2, 4, ...` and its
/// largest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsymptoticResult {
    pub ideal: MonomialIdeal,
    /// Smallest `p` on the chain at which `ideal` is reached.
    pub witness_p: u64,
    /// The last two chain members agree.
    pub stabilized: bool,
    pub chain: Vec<(u64, MonomialIdeal)>,
}

/// Budgeted approximation of the asymptotic multiplier ideal
/// `I(m·‖a_•‖)`. The chain is monotone along divisibility, so it only
/// grows; there is no effective bound on where it stops growing.
pub fn asymptotic_multiplier(seq: &GradedSequence, m: u64, p_budget: u64) -> Result<AsymptoticResult> {
    if p_budget == 0 {
        return Err(Error::ZeroBudget);
    }
    if m == 0 {
        return Err(Error::invalid("index must be at least 1"));
    }
    let mut chain: Vec<(u64, MonomialIdeal)> = Vec::new();
    let mut p = 1u64;
    while p <= p_budget {
        let a = seq.get(m.checked_mul(p).ok_or(Error::Overflow)?)?;
        let lambda = Rational::new(1.into(), p.into());
        chain.push((p, multiplier_ideal(&a, &lambda)?));
        p = match p.checked_mul(2) {
            Some(q) => q,
            None => break,
        };
    }
    let (_, last) = chain.last().cloned().expect("budget is positive");
    let witness_p = chain
        .iter()
        .find(|(_, b)| *b == last)
        .map(|(p, _)| *p)
        .expect("last is present");
    let stabilized = chain.len() >= 2 && chain[chain.len() - 2].1 == last;
    Ok(AsymptoticResult {
        ideal: last,
        witness_p,
        stabilized,
        chain,
    })
}
