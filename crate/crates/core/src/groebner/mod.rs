//! Gröbner bases over the rationals and the deformation of a polynomial
//! ideal to its initial monomial ideals.

mod buchberger;
mod order;
mod poly;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

pub use buchberger::{buchberger, buchberger_with_limit, normal_form, WorkLimit, WORK_LIMIT_ENV};
pub use order::{MonomialOrder, OrderKind};
pub use poly::Polynomial;

use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::newton::multiplicity;
use crate::rational::Rational;
use crate::sequences::{Direction, LimitEstimate};

/// Default cap on the number of generators produced by [`ideal_power`].
pub const DEFAULT_GENERATOR_CAP: usize = 10_000;

/// An ideal of `Q[x1..xn]` given by generators, with reduced Gröbner bases
/// memoized per monomial order.
#[derive(Clone)]
pub struct PolynomialIdeal {
    dim: usize,
    generators: Vec<Polynomial>,
    limit: WorkLimit,
    cache: Arc<Mutex<HashMap<MonomialOrder, Arc<Vec<Polynomial>>>>>,
}

impl fmt::Debug for PolynomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PolynomialIdeal")
            .field("dim", &self.dim)
            .field("generators", &self.generators)
            .finish()
    }
}

impl fmt::Display for PolynomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join(", "))
    }
}

impl PolynomialIdeal {
    /// Zero generators are dropped. The work limit comes from
    /// [`WorkLimit::from_env`].
    pub fn new(dim: usize, generators: Vec<Polynomial>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyDimension);
        }
        if let Some(g) = generators.iter().find(|g| g.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: g.dim(),
            });
        }
        Ok(PolynomialIdeal {
            dim,
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            limit: WorkLimit::from_env(),
            cache: Arc::new(Mutex::new(HashMap::new())),
        })
    }

    pub fn from_monomial(a: &MonomialIdeal) -> Self {
        let one = Rational::from_integer(1.into());
        let gens = a
            .gens()
            .iter()
            .map(|u| Polynomial::monomial(u.clone(), one.clone()))
            .collect();
        Self::new(a.dim(), gens).expect("dimensions agree")
    }

    pub fn with_work_limit(mut self, limit: WorkLimit) -> Self {
        self.limit = limit;
        self.cache = Arc::new(Mutex::new(HashMap::new()));
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn work_limit(&self) -> WorkLimit {
        self.limit
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// The monomial ideal generated by the generators, if they are all
    /// monomials.
    pub fn as_monomial(&self) -> Option<MonomialIdeal> {
        let gens: Option<Vec<_>> = self.generators.iter().map(|g| g.as_monomial().cloned()).collect();
        MonomialIdeal::minimalize(self.dim, gens?).ok()
    }

    /// Reduced Gröbner basis, sorted ascending by leading monomial.
    pub fn groebner_basis(&self, order: &MonomialOrder) -> Result<Arc<Vec<Polynomial>>> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if let Some(gb) = self.cache.lock().expect("cache lock").get(order) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(buchberger_with_limit(&self.generators, order, self.limit)?);
        self.cache
            .lock()
            .expect("cache lock")
            .entry(order.clone())
            .or_insert_with(|| gb.clone());
        Ok(gb)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        if self.is_zero() {
            return Ok(false);
        }
        let order = MonomialOrder::grevlex(self.dim);
        let gb = self.groebner_basis(&order)?;
        Ok(normal_form(f, &gb, &order)?.is_zero())
    }

    pub fn initial_ideal(&self, order: &MonomialOrder) -> Result<MonomialIdeal> {
        initial_ideal(self, order)
    }

    pub fn power(&self, m: u32) -> Result<PolynomialIdeal> {
        ideal_power(self, m)
    }
}

/// `in_>(I)`: the leading monomials of the reduced Gröbner basis.
pub fn initial_ideal(ideal: &PolynomialIdeal, order: &MonomialOrder) -> Result<MonomialIdeal> {
    let gb = ideal.groebner_basis(order)?;
    let lead = gb
        .iter()
        .map(|g| g.leading_term(order).expect("nonzero").0.clone())
        .collect();
    MonomialIdeal::minimalize(ideal.dim, lead)
}

/// `I^m`, generated by all `m`-fold products of generators.
pub fn ideal_power(ideal: &PolynomialIdeal, m: u32) -> Result<PolynomialIdeal> {
    ideal_power_capped(ideal, m, DEFAULT_GENERATOR_CAP)
}

pub fn ideal_power_capped(ideal: &PolynomialIdeal, m: u32, cap: usize) -> Result<PolynomialIdeal> {
    if m == 0 {
        return Err(Error::invalid("power must be at least 1"));
    }
    let k = ideal.generators.len();
    // Number of multisets of size m from k generators.
    let mut count: u128 = 1;
    for i in 0..m as u128 {
        count = count * (k as u128 + i) / (i + 1);
        if count > cap as u128 {
            return Err(Error::GeneratorExplosion {
                count: usize::try_from(count).unwrap_or(usize::MAX),
                cap,
            });
        }
    }
    // Each entry is a product together with the smallest generator index
    // still allowed, so every multiset is produced once.
    let mut layer: Vec<(Polynomial, usize)> = vec![(Polynomial::constant(ideal.dim, Rational::from_integer(1.into())), 0)];
    for _ in 0..m {
        let mut next = Vec::with_capacity(layer.len() * k);
        for (f, start) in &layer {
            for (i, g) in ideal.generators.iter().enumerate().skip(*start) {
                next.push((f.mul(g)?, i));
            }
        }
        layer = next;
    }
    let mut gens: Vec<Polynomial> = Vec::with_capacity(layer.len());
    for (f, _) in layer {
        if !gens.contains(&f) {
            gens.push(f);
        }
    }
    Ok(PolynomialIdeal {
        dim: ideal.dim,
        generators: gens,
        limit: ideal.limit,
        cache: Arc::new(Mutex::new(HashMap::new())),
    })
}

/// `length(R/I)`, read off the initial ideal.
pub fn colength_poly(ideal: &PolynomialIdeal, order: &MonomialOrder) -> Result<u64> {
    let init = initial_ideal(ideal, order)?;
    if !init.is_zero_dimensional() {
        return Err(Error::InfiniteColength);
    }
    init.colength()
}

/// Samples `e(in_>(I^m))/m^n` for `m = 1..=M`. Each sample bounds `e(I)`
/// from above and their infimum equals it.
pub fn samuel_multiplicity(ideal: &PolynomialIdeal, order: &MonomialOrder, max_power: u32) -> Result<LimitEstimate> {
    if max_power == 0 {
        return Err(Error::ZeroBudget);
    }
    samuel_multiplicity_at(ideal, order, 1..=max_power)
}

/// As [`samuel_multiplicity`] at the chosen powers, e.g. a doubling chain.
pub fn samuel_multiplicity_at(
    ideal: &PolynomialIdeal,
    order: &MonomialOrder,
    powers: impl IntoIterator<Item = u32>,
) -> Result<LimitEstimate> {
    let n = ideal.dim as u32;
    let samples = powers
        .into_iter()
        .map(|m| {
            let init = initial_ideal(&ideal_power(ideal, m)?, order)?;
            if !init.is_zero_dimensional() {
                return Err(Error::NotZeroDimensional);
            }
            let e = multiplicity(&init)?;
            let scale = num_bigint::BigInt::from(m).pow(n);
            Ok((m as u64, Rational::new(e.into(), scale)))
        })
        .collect::<Result<Vec<_>>>()?;
    LimitEstimate::from_samples(samples, Direction::Upper)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_monomial_ideal, parse_polynomials};
    use crate::rational::int;

    fn ideal(text: &str) -> PolynomialIdeal {
        let (dim, gens) = parse_polynomials(text, None).unwrap();
        PolynomialIdeal::new(dim, gens).unwrap()
    }

    #[test]
    fn initial_ideals() {
        let g = MonomialOrder::grevlex(2);
        let i = ideal("x^2 + y^2, x*y");
        assert_eq!(i.initial_ideal(&g).unwrap(), parse_monomial_ideal("x^2, x*y, y^3", None).unwrap());
        let m = ideal("x^2*y, y^4, x^3");
        assert_eq!(m.initial_ideal(&g).unwrap(), m.as_monomial().unwrap());
        let lex_yx = MonomialOrder::with_ranking(OrderKind::Lex, vec![1, 0]).unwrap();
        assert_eq!(
            ideal("y - x^2").initial_ideal(&lex_yx).unwrap(),
            parse_monomial_ideal("y", Some(2)).unwrap()
        );
    }

    #[test]
    fn colengths() {
        let g = MonomialOrder::grevlex(2);
        assert_eq!(colength_poly(&ideal("x^2 + y^2, x*y"), &g).unwrap(), 4);
        assert_eq!(colength_poly(&ideal("x^2, y^3"), &g).unwrap(), 6);
        let lex_yx = MonomialOrder::with_ranking(OrderKind::Lex, vec![1, 0]).unwrap();
        assert_eq!(colength_poly(&ideal("y - x^2, x^3"), &lex_yx).unwrap(), 3);
        assert_eq!(colength_poly(&ideal("x*y"), &g), Err(Error::InfiniteColength));
    }

    #[test]
    fn powers() {
        let i = ideal("x^2 + y^2, x*y");
        let sq = i.power(2).unwrap();
        assert_eq!(sq.generators().len(), 3);
        let a = parse_monomial_ideal("x^2, y^3", None).unwrap();
        let p = PolynomialIdeal::from_monomial(&a).power(3).unwrap();
        assert_eq!(p.as_monomial().unwrap(), a.power(3));
        assert!(matches!(
            ideal_power_capped(&i, 10, 5),
            Err(Error::GeneratorExplosion { cap: 5, .. })
        ));
    }

    #[test]
    fn samuel_samples() {
        let g = MonomialOrder::grevlex(2);
        let i = ideal("x^2 + y^2, x*y");
        let est = samuel_multiplicity_at(&i, &g, [1, 2, 4]).unwrap();
        assert_eq!(est.samples[0].1, int(5));
        assert!(est.samples.windows(2).all(|w| w[1].1 <= w[0].1));
        assert!(est.samples.iter().all(|(_, v)| *v >= int(4)));
        let m = ideal("x, y");
        let est = samuel_multiplicity(&m, &g, 3).unwrap();
        assert!(est.samples.iter().all(|(_, v)| *v == int(1)));
    }

    #[test]
    fn membership() {
        let i = ideal("x^2 + y^2, x*y");
        assert!(i.contains(&crate::parse::parse_polynomial("y^3", Some(2)).unwrap()).unwrap());
        assert!(!i.contains(&crate::parse::parse_polynomial("y^2", Some(2)).unwrap()).unwrap());
    }
}
