use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::order::MonomialOrder;
use crate::error::{Error, Result};
use crate::monomial::{write_monomial, Exponent};
use crate::rational::Rational;

/// Multivariate polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    dim: usize,
    terms: BTreeMap<Exponent, Rational>,
}

impl Polynomial {
    pub fn zero(dim: usize) -> Self {
        Polynomial {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: Rational) -> Self {
        Self::monomial(Exponent::zeros(dim), c)
    }

    pub fn monomial(u: Exponent, c: Rational) -> Self {
        let dim = u.dim();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(u, c);
        }
        Polynomial { dim, terms }
    }

    /// Sums like terms; zero results are dropped.
    pub fn from_terms<I>(dim: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, Rational)>,
    {
        let mut p = Polynomial::zero(dim);
        for (u, c) in terms {
            if u.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: u.dim(),
                });
            }
            p.add_term(u, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, u: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(u) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, u: &Exponent) -> Rational {
        self.terms.get(u).cloned().unwrap_or_else(Rational::zero)
    }

    /// Single term with unit-free monomial support, if this is a monomial.
    pub fn as_monomial(&self) -> Option<&Exponent> {
        if self.terms.len() == 1 {
            self.terms.keys().next()
        } else {
            None
        }
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Exponent, &Rational)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Exponent::degree).max()
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (u, c) in &other.terms {
            out.add_term(u.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (u, c) in &other.terms {
            out.add_term(u.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_dim(other)?;
        let mut out = Polynomial::zero(self.dim);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.add(v), a * b);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.dim);
        }
        Polynomial {
            dim: self.dim,
            terms: self.terms.iter().map(|(u, a)| (u.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, u: &Exponent) -> Polynomial {
        Polynomial {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(v, a)| (v.add(u), a.clone()))
                .collect(),
        }
    }

    /// Scales so that the leading coefficient under `order` is 1.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            Some((_, lc)) => self.scale(&(Rational::one() / lc)),
            None => self.clone(),
        }
    }

    /// The form `l(f)`: the sum of the terms of smallest total degree.
    pub fn lowest_degree_part(&self) -> Result<Polynomial> {
        let low = self
            .terms
            .keys()
            .map(Exponent::degree)
            .min()
            .ok_or(Error::ZeroPolynomial)?;
        Ok(Polynomial {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(u, _)| u.degree() == low)
                .map(|(u, c)| (u.clone(), c.clone()))
                .collect(),
        })
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Exponent::degree);
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    fn check_dim(&self, other: &Polynomial) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    /// Terms sorted from largest to smallest under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Exponent, Rational)> {
        let mut v: Vec<(Exponent, Rational)> = self
            .terms
            .iter()
            .map(|(u, c)| (u.clone(), c.clone()))
            .collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let order = MonomialOrder::grevlex(self.dim);
        for (k, (u, c)) in self.sorted_terms(&order).iter().enumerate() {
            let negative = c.is_negative();
            let a = c.abs();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if u.is_zero() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write_monomial(f, u)?;
            }
        }
        Ok(())
    }
}
