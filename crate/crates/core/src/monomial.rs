//! Monomial ideals in `K[x1, ..., xn]`, stored as antichains of exponent
//! vectors.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Exponent vector `u` of the monomial `x^u`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponent(Vec<u32>);

impl Exponent {
    pub fn new(coords: Vec<u32>) -> Self {
        Exponent(coords)
    }

    pub fn zeros(n: usize) -> Self {
        Exponent(vec![0; n])
    }

    /// The all-ones vector `e`.
    pub fn ones(n: usize) -> Self {
        Exponent(vec![1; n])
    }

    /// `x_i^k`.
    pub fn pure_power(n: usize, i: usize, k: u32) -> Self {
        let mut v = vec![0; n];
        v[i] = k;
        Exponent(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&c| c as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Componentwise `self <= other`, i.e. `x^self` divides `x^other`.
    pub fn divides(&self, other: &Exponent) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise maximum (the lcm of two monomials).
    pub fn join(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Componentwise `max(self - other, 0)`.
    pub fn saturating_sub(&self, other: &Exponent) -> Exponent {
        Exponent(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    /// If this is a pure power `x_i^k` with `k > 0`, returns `(i, k)`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &c) in self.0.iter().enumerate() {
            if c > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, c));
            }
        }
        found
    }
}

impl From<Vec<u32>> for Exponent {
    fn from(v: Vec<u32>) -> Self {
        Exponent(v)
    }
}

impl<const N: usize> From<[u32; N]> for Exponent {
    fn from(v: [u32; N]) -> Self {
        Exponent(v.to_vec())
    }
}

/// Formats a monomial with canonical variable names `x1..xn`.
pub(crate) fn write_monomial(f: &mut fmt::Formatter<'_>, u: &Exponent) -> fmt::Result {
    if u.is_zero() {
        return write!(f, "1");
    }
    let mut first = true;
    for (i, &c) in u.coords().iter().enumerate() {
        if c == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "x{}", i + 1)?;
        if c > 1 {
            write!(f, "^{c}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_monomial(f, self)
    }
}

/// A monomial ideal given by its minimal generators.
///
/// The generator list is an antichain under divisibility, sorted
/// lexicographically, so structural equality is ideal equality. No
/// generators encodes the zero ideal; the single generator `0` encodes the
/// unit ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    dim: usize,
    gens: Vec<Exponent>,
}

impl MonomialIdeal {
    pub fn zero(dim: usize) -> Self {
        MonomialIdeal { dim, gens: vec![] }
    }

    pub fn unit(dim: usize) -> Self {
        MonomialIdeal {
            dim,
            gens: vec![Exponent::zeros(dim)],
        }
    }

    /// The maximal ideal `(x1, ..., xn)`.
    pub fn maximal(dim: usize) -> Self {
        let gens = (0..dim).map(|i| Exponent::pure_power(dim, i, 1)).collect();
        Self::minimalize(dim, gens).expect("well-formed")
    }

    /// `(x1^a1, ..., xn^an)`.
    pub fn diagonal(powers: &[u32]) -> Result<Self> {
        let n = powers.len();
        let gens = powers
            .iter()
            .enumerate()
            .map(|(i, &k)| Exponent::pure_power(n, i, k))
            .collect();
        Self::minimalize(n, gens)
    }

    /// Reduces `raw` to its minimal elements under divisibility.
    pub fn minimalize(dim: usize, raw: Vec<Exponent>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyDimension);
        }
        if let Some(bad) = raw.iter().find(|u| u.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.dim(),
            });
        }
        Ok(MonomialIdeal {
            dim,
            gens: minimal_elements(dim, raw),
        })
    }

    pub fn from_exponents<I, E>(dim: usize, raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<Exponent>,
    {
        Self::minimalize(dim, raw.into_iter().map(Into::into).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[Exponent] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_zero()
    }

    fn check_dim(&self, other_dim: usize) -> Result<()> {
        if self.dim != other_dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other_dim,
            });
        }
        Ok(())
    }

    pub fn contains_monomial(&self, u: &Exponent) -> Result<bool> {
        self.check_dim(u.dim())?;
        Ok(self.gens.iter().any(|g| g.divides(u)))
    }

    /// Ideal containment `other ⊆ self`.
    pub fn contains(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_dim(other.dim)?;
        Ok(other
            .gens
            .iter()
            .all(|u| self.gens.iter().any(|g| g.divides(u))))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other.dim)?;
        let raw = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.add(b)))
            .collect();
        Self::minimalize(self.dim, raw)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other.dim)?;
        let raw = self.gens.iter().chain(&other.gens).cloned().collect();
        Self::minimalize(self.dim, raw)
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other.dim)?;
        let raw = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.join(b)))
            .collect();
        Self::minimalize(self.dim, raw)
    }

    /// `(self : x^g)`.
    pub fn colon_monomial(&self, g: &Exponent) -> Result<MonomialIdeal> {
        self.check_dim(g.dim())?;
        let raw = self.gens.iter().map(|h| h.saturating_sub(g)).collect();
        Self::minimalize(self.dim, raw)
    }

    /// `(self : other)`, the intersection of the colons by each generator.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other.dim)?;
        if other.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let mut acc: Option<MonomialIdeal> = None;
        for g in &other.gens {
            let c = self.colon_monomial(g)?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersection(&c)?,
            });
        }
        Ok(acc.expect("other is nonzero"))
    }

    pub fn power(&self, k: u32) -> MonomialIdeal {
        let mut result = MonomialIdeal::unit(self.dim);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.product(&base).expect("same dimension");
            }
            k >>= 1;
            if k > 0 {
                base = base.product(&base).expect("same dimension");
            }
        }
        result
    }

    /// Exponent of the minimal pure power of each variable, if any.
    pub fn pure_powers(&self) -> Vec<Option<u32>> {
        let mut out = vec![None; self.dim];
        for g in &self.gens {
            if g.is_zero() {
                return vec![Some(0); self.dim];
            }
            if let Some((i, k)) = g.as_pure_power() {
                out[i] = Some(out[i].map_or(k, |c: u32| c.min(k)));
            }
        }
        out
    }

    /// Every variable has a pure power among the generators.
    pub fn is_zero_dimensional(&self) -> bool {
        !self.is_zero() && self.pure_powers().iter().all(Option::is_some)
    }

    /// Largest pure-power exponent; every standard monomial lies in
    /// `[0, M)^n`.
    pub fn box_bound(&self) -> Result<u32> {
        if !self.is_zero_dimensional() {
            return Err(Error::NotZeroDimensional);
        }
        Ok(self.pure_powers().into_iter().flatten().max().unwrap_or(0))
    }

    /// `length(R / a)`: the number of monomials outside the ideal.
    pub fn colength(&self) -> Result<u64> {
        let bound = self.box_bound()?;
        if self.is_unit() {
            return Ok(0);
        }
        let n = self.dim;
        let last = n - 1;
        let mut prefix = vec![0u32; last];
        let mut total = 0u64;
        // For each prefix in [0, M)^(n-1), count the last coordinates below
        // the smallest generator height reachable from that prefix.
        loop {
            let height = self
                .gens
                .iter()
                .filter(|g| g.coords()[..last].iter().zip(&prefix).all(|(a, b)| a <= b))
                .map(|g| g.coords()[last])
                .min()
                .unwrap_or(bound);
            total += height as u64;
            if !advance(&mut prefix, bound) {
                break;
            }
        }
        Ok(total)
    }

    /// `max{p : a ⊆ m^p}`, the smallest total degree of a generator.
    pub fn order(&self) -> Result<u64> {
        self.gens
            .iter()
            .map(Exponent::degree)
            .min()
            .ok_or(Error::ZeroIdeal)
    }
}

/// Odometer over `[0, bound)^len`; returns false once it wraps around.
pub(crate) fn advance(v: &mut [u32], bound: u32) -> bool {
    for c in v.iter_mut() {
        *c += 1;
        if *c < bound {
            return true;
        }
        *c = 0;
    }
    false
}

fn minimal_elements(dim: usize, mut raw: Vec<Exponent>) -> Vec<Exponent> {
    if raw.is_empty() {
        return raw;
    }
    if dim == 1 {
        let m = raw.into_iter().min().expect("nonempty");
        return vec![m];
    }
    if dim == 2 {
        // Staircase sweep: ascending first coordinate, keep strict drops.
        raw.sort_unstable_by(|a, b| a.0[0].cmp(&b.0[0]).then(a.0[1].cmp(&b.0[1])));
        let mut out: Vec<Exponent> = Vec::new();
        let mut best = u32::MAX;
        for u in raw {
            if u.0[1] < best {
                best = u.0[1];
                out.push(u);
            }
        }
        return out;
    }
    raw.sort_unstable_by(|a, b| match a.degree().cmp(&b.degree()) {
        Ordering::Equal => a.cmp(b),
        o => o,
    });
    raw.dedup();
    let mut out: Vec<Exponent> = Vec::new();
    for u in raw {
        if !out.iter().any(|g| g.divides(&u)) {
            out.push(u);
        }
    }
    out.sort_unstable();
    out
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write_monomial(f, g)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(dim: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(dim, gens.iter().map(|g| g.to_vec())).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        let a = ideal(2, &[&[2, 0], &[3, 1], &[0, 3]]);
        assert_eq!(a.gens(), &[Exponent::from([0, 3]), Exponent::from([2, 0])]);
        assert!(ideal(2, &[]).is_zero());
        let u = ideal(2, &[&[0, 0], &[1, 2]]);
        assert!(u.is_unit());
        assert!(matches!(
            MonomialIdeal::from_exponents(2, vec![vec![1, 2], vec![1]]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert_eq!(
            MonomialIdeal::minimalize(0, vec![]),
            Err(Error::EmptyDimension)
        );
    }

    #[test]
    fn minimalize_general_dimension() {
        let a = ideal(3, &[&[1, 1, 0], &[1, 1, 1], &[0, 0, 2], &[2, 1, 0], &[1, 1, 0]]);
        assert_eq!(a.gens().len(), 2);
    }

    #[test]
    fn membership() {
        let a = ideal(2, &[&[2, 0], &[0, 3]]);
        assert!(a.contains_monomial(&[1, 3].into()).unwrap());
        assert!(!a.contains_monomial(&[1, 2].into()).unwrap());
        assert!(MonomialIdeal::unit(2).contains_monomial(&[0, 0].into()).unwrap());
        assert!(a.contains_monomial(&[1, 2, 3].into()).is_err());
    }

    #[test]
    fn products() {
        let x = ideal(2, &[&[1, 0]]);
        let y = ideal(2, &[&[0, 1]]);
        assert_eq!(x.product(&y).unwrap(), ideal(2, &[&[1, 1]]));
        let m = MonomialIdeal::maximal(2);
        assert_eq!(m.product(&m).unwrap(), ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]));
        assert!(MonomialIdeal::zero(2).product(&m).unwrap().is_zero());
    }

    #[test]
    fn intersections() {
        let x = ideal(2, &[&[1, 0]]);
        let y = ideal(2, &[&[0, 1]]);
        assert_eq!(x.intersection(&y).unwrap(), ideal(2, &[&[1, 1]]));
        let a = ideal(2, &[&[2, 0], &[0, 1]]);
        let b = ideal(2, &[&[1, 0], &[0, 2]]);
        assert_eq!(
            a.intersection(&b).unwrap(),
            ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])
        );
        assert_eq!(a.intersection(&MonomialIdeal::unit(2)).unwrap(), a);
    }

    #[test]
    fn colons() {
        let a = ideal(2, &[&[2, 0], &[0, 2]]);
        let m = MonomialIdeal::maximal(2);
        assert_eq!(a.colon(&m).unwrap(), ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]));
        assert_eq!(a.colon(&MonomialIdeal::unit(2)).unwrap(), a);
        assert_eq!(a.colon(&MonomialIdeal::zero(2)), Err(Error::ZeroIdeal));
        assert!(MonomialIdeal::zero(2).colon(&m).unwrap().is_zero());
    }

    #[test]
    fn powers() {
        let m = MonomialIdeal::maximal(2);
        assert_eq!(m.power(2), ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]));
        let a = ideal(2, &[&[2, 0], &[0, 3]]);
        assert_eq!(a.power(2), ideal(2, &[&[4, 0], &[2, 3], &[0, 6]]));
        assert!(a.power(0).is_unit());
        assert_eq!(a.power(5), a.power(2).product(&a.power(3)).unwrap());
    }

    #[test]
    fn zero_dimensionality() {
        assert!(ideal(2, &[&[2, 0], &[0, 3]]).is_zero_dimensional());
        assert!(!ideal(2, &[&[1, 1]]).is_zero_dimensional());
        assert!(MonomialIdeal::unit(3).is_zero_dimensional());
        assert!(!MonomialIdeal::zero(3).is_zero_dimensional());
    }

    #[test]
    fn colengths() {
        assert_eq!(ideal(2, &[&[2, 0], &[0, 3]]).colength().unwrap(), 6);
        assert_eq!(MonomialIdeal::maximal(2).colength().unwrap(), 1);
        assert_eq!(ideal(2, &[&[4, 0], &[2, 1], &[0, 3]]).colength().unwrap(), 8);
        assert_eq!(MonomialIdeal::unit(2).colength().unwrap(), 0);
        assert_eq!(
            MonomialIdeal::diagonal(&[2, 3, 4]).unwrap().colength().unwrap(),
            24
        );
        assert_eq!(ideal(2, &[&[1, 1]]).colength(), Err(Error::NotZeroDimensional));
        assert_eq!(ideal(1, &[&[7]]).colength().unwrap(), 7);
    }

    #[test]
    fn orders() {
        assert_eq!(ideal(2, &[&[2, 0], &[0, 3]]).order().unwrap(), 2);
        assert_eq!(MonomialIdeal::maximal(3).power(4).order().unwrap(), 4);
        assert_eq!(MonomialIdeal::unit(2).order().unwrap(), 0);
        assert_eq!(MonomialIdeal::zero(2).order(), Err(Error::ZeroIdeal));
    }

    #[test]
    fn display_uses_canonical_names() {
        let a = ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]);
        assert_eq!(a.to_string(), "x2^3, x1*x2, x1^2");
        assert_eq!(MonomialIdeal::unit(2).to_string(), "1");
        assert_eq!(MonomialIdeal::zero(2).to_string(), "0");
    }
}
