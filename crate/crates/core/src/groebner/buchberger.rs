//! Division algorithm and Buchberger's algorithm over the rationals.
//!
//! Internally a polynomial is a vector of terms sorted ascending under the
//! active order, so the leading term is the last element.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::order::MonomialOrder;
use super::poly::Polynomial;
use crate::error::{Error, Result};
use crate::monomial::Exponent;
use crate::rational::Rational;

/// Environment variable overriding the default S-pair cap.
pub const WORK_LIMIT_ENV: &str = "AI_WORK_LIMIT";

/// Cap on the number of S-pairs reduced by one Buchberger run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WorkLimit(pub usize);

impl Default for WorkLimit {
    fn default() -> Self {
        WorkLimit(50_000)
    }
}

impl WorkLimit {
    /// Default cap, overridden by `AI_WORK_LIMIT` when it parses.
    pub fn from_env() -> Self {
        std::env::var(WORK_LIMIT_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(WorkLimit)
            .unwrap_or_default()
    }
}

type Terms = Vec<(Exponent, Rational)>;

struct Ctx<'a> {
    order: &'a MonomialOrder,
}

impl Ctx<'_> {
    fn to_terms(&self, f: &Polynomial) -> Terms {
        let mut v = f.sorted_terms(self.order);
        v.reverse();
        v
    }

    fn to_poly(&self, dim: usize, t: Terms) -> Polynomial {
        Polynomial::from_terms(dim, t).expect("dimension preserved")
    }

    /// `p - c * x^shift * g`, all sorted ascending.
    fn sub_mul(&self, p: &[(Exponent, Rational)], c: &Rational, shift: &Exponent, g: &[(Exponent, Rational)]) -> Terms {
        let mut out = Vec::with_capacity(p.len() + g.len());
        let mut i = 0;
        let mut j = 0;
        let shifted = |k: usize| g[k].0.add(shift);
        let mut gj = if g.is_empty() { None } else { Some(shifted(0)) };
        while i < p.len() || j < g.len() {
            let ord = match (p.get(i), gj.as_ref()) {
                (Some(a), Some(b)) => self.order.cmp(&a.0, b),
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (None, None) => unreachable!(),
            };
            match ord {
                Ordering::Less => {
                    out.push(p[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((gj.take().expect("present"), -(c * &g[j].1)));
                    j += 1;
                    gj = (j < g.len()).then(|| shifted(j));
                }
                Ordering::Equal => {
                    let v = &p[i].1 - c * &g[j].1;
                    if !v.is_zero() {
                        out.push((p[i].0.clone(), v));
                    }
                    i += 1;
                    j += 1;
                    gj = (j < g.len()).then(|| shifted(j));
                }
            }
        }
        out
    }

    /// Full reduction of `p` by monic `basis` (each sorted ascending).
    fn reduce(&self, mut p: Terms, basis: &[Terms]) -> Terms {
        let mut rem: Terms = Vec::new();
        while let Some((lt, lc)) = p.last().cloned() {
            let divisor = basis
                .iter()
                .find(|g| g.last().map(|(lm, _)| lm.divides(&lt)).unwrap_or(false));
            match divisor {
                Some(g) => {
                    let lm = &g.last().expect("nonzero").0;
                    let shift = lt.saturating_sub(lm);
                    p = self.sub_mul(&p, &lc, &shift, g);
                }
                None => {
                    p.pop();
                    rem.push((lt, lc));
                }
            }
        }
        rem.reverse();
        rem
    }

    fn monic(&self, mut t: Terms) -> Terms {
        if let Some((_, lc)) = t.last() {
            if !lc.is_one() {
                let inv = Rational::one() / lc;
                for term in t.iter_mut() {
                    term.1 = &term.1 * &inv;
                }
            }
        }
        t
    }
}

/// Remainder of `f` on division by `basis`: no remaining term is divisible
/// by any basis leading monomial.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Result<Polynomial> {
    let ctx = Ctx { order };
    let mut b = Vec::with_capacity(basis.len());
    for g in basis {
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if g.dim() != f.dim() {
            return Err(Error::DimensionMismatch {
                expected: f.dim(),
                found: g.dim(),
            });
        }
        b.push(ctx.monic(ctx.to_terms(g)));
    }
    let r = ctx.reduce(ctx.to_terms(f), &b);
    Ok(ctx.to_poly(f.dim(), r))
}

/// Reduced Gröbner basis with the default work limit.
pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder) -> Result<Vec<Polynomial>> {
    buchberger_with_limit(gens, order, WorkLimit::default())
}

/// Reduced Gröbner basis, sorted ascending by leading monomial.
///
/// Uses the coprime and chain criteria and selects pairs by smallest lcm.
pub fn buchberger_with_limit(
    gens: &[Polynomial],
    order: &MonomialOrder,
    limit: WorkLimit,
) -> Result<Vec<Polynomial>> {
    let dim = gens.first().map(Polynomial::dim).ok_or(Error::EmptyInput)?;
    if order.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: order.dim(),
        });
    }
    if let Some(g) = gens.iter().find(|g| g.dim() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: g.dim(),
        });
    }
    let ctx = Ctx { order };
    let mut basis: Vec<Terms> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let t = ctx.monic(ctx.to_terms(g));
        if !basis.contains(&t) {
            basis.push(t);
        }
    }
    if basis.is_empty() {
        return Err(Error::ZeroPolynomial);
    }

    let lm = |t: &Terms| t.last().expect("nonzero").0.clone();
    let mut lms: Vec<Exponent> = basis.iter().map(lm).collect();
    let mut pairs: Vec<(usize, usize, Exponent)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j, lms[i].join(&lms[j])));
        }
    }
    let in_queue = |pairs: &[(usize, usize, Exponent)], a: usize, b: usize| {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        pairs.iter().any(|&(i, j, _)| i == a && j == b)
    };

    let mut processed = 0usize;
    while !pairs.is_empty() {
        let pick = (0..pairs.len())
            .min_by(|&x, &y| {
                order
                    .cmp(&pairs[x].2, &pairs[y].2)
                    .then((pairs[x].1, pairs[x].0).cmp(&(pairs[y].1, pairs[y].0)))
            })
            .expect("nonempty");
        let (i, j, lcm) = pairs.swap_remove(pick);

        if lcm == lms[i].add(&lms[j]) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lms[k].divides(&lcm)
                && !in_queue(&pairs, i, k)
                && !in_queue(&pairs, j, k)
        });
        if chain {
            continue;
        }

        processed += 1;
        if processed > limit.0 {
            return Err(Error::WorkLimit(limit.0));
        }
        let si = lcm.saturating_sub(&lms[i]);
        let sj = lcm.saturating_sub(&lms[j]);
        let left: Terms = basis[i]
            .iter()
            .map(|(u, c)| (u.add(&si), c.clone()))
            .collect();
        let s = ctx.sub_mul(&left, &Rational::one(), &sj, &basis[j]);
        let h = ctx.reduce(s, &basis);
        if h.is_empty() {
            continue;
        }
        let h = ctx.monic(h);
        let t = basis.len();
        lms.push(lm(&h));
        basis.push(h);
        for k in 0..t {
            pairs.push((k, t, lms[k].join(&lms[t])));
        }
    }

    // Minimal basis: drop elements whose leading monomial is divisible by
    // another's (earliest wins on ties).
    let mut keep: Vec<usize> = Vec::new();
    for a in 0..basis.len() {
        let redundant = (0..basis.len()).any(|b| {
            b != a && lms[b].divides(&lms[a]) && (lms[b] != lms[a] || b < a)
        });
        if !redundant {
            keep.push(a);
        }
    }
    let minimal: Vec<Terms> = keep.iter().map(|&a| basis[a].clone()).collect();

    // Interreduce tails.
    let mut reduced: Vec<Terms> = Vec::with_capacity(minimal.len());
    for (a, g) in minimal.iter().enumerate() {
        let others: Vec<Terms> = minimal
            .iter()
            .enumerate()
            .filter(|&(b, _)| b != a)
            .map(|(_, t)| t.clone())
            .collect();
        let mut g = g.clone();
        let head = g.pop().expect("nonzero");
        let mut tail = ctx.reduce(g, &others);
        tail.push(head);
        reduced.push(ctx.monic(tail));
    }
    reduced.sort_by(|a, b| order.cmp(&a.last().expect("nonzero").0, &b.last().expect("nonzero").0));
    Ok(reduced
        .into_iter()
        .map(|t| ctx.to_poly(dim, t))
        .collect())
}
