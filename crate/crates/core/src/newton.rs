//! Newton polyhedra of zero-dimensional monomial ideals.
//!
//! `P` is the convex hull of the exponents of an ideal plus the positive
//! orthant, `Q` the closure of its complement in the orthant. Every facet
//! of `P` that is not a coordinate hyperplane has a strictly positive
//! normal, because each variable has a pure power in the ideal; such facets
//! are bounded and spanned by generators. `Q` is the union of the cones
//! from the origin over these facets, which is how its volume is computed.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Exponent, MonomialIdeal};
use crate::rational::{ceil_int, factorial, to_i128, Rational};

/// Nonnegative weights, not all zero; the monomial valuation
/// `u ↦ <w, u>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<Rational>);

impl WeightVector {
    pub fn new(weights: Vec<Rational>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::EmptyDimension);
        }
        if weights.iter().any(Signed::is_negative) {
            return Err(Error::invalid("weights must be nonnegative"));
        }
        if weights.iter().all(Zero::is_zero) {
            return Err(Error::invalid("weights must not all vanish"));
        }
        Ok(WeightVector(weights))
    }

    pub fn from_integers(weights: &[u64]) -> Result<Self> {
        Self::new(
            weights
                .iter()
                .map(|&w| Rational::from_integer(BigInt::from(w)))
                .collect(),
        )
    }

    /// `e = (1, ..., 1)`; the valuation is the order at the maximal ideal.
    pub fn ones(dim: usize) -> Self {
        WeightVector(vec![Rational::from_integer(1.into()); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn weights(&self) -> &[Rational] {
        &self.0
    }

    pub fn eval(&self, u: &Exponent) -> Rational {
        self.0
            .iter()
            .zip(u.coords())
            .map(|(w, &c)| w * Rational::from_integer(c.into()))
            .sum()
    }
}

/// A facet `<normal, u> >= offset` of `P` with primitive integer normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Facet {
    normal: Vec<i128>,
    offset: i128,
    /// Generators lying on the facet (at least its vertices).
    points: Vec<Exponent>,
}

impl Facet {
    pub fn normal(&self) -> &[i128] {
        &self.normal
    }

    pub fn offset(&self) -> i128 {
        self.offset
    }

    pub fn points(&self) -> &[Exponent] {
        &self.points
    }

    pub fn normal_rational(&self) -> Vec<Rational> {
        self.normal.iter().map(|&w| Rational::from_integer(w.into())).collect()
    }

    pub fn offset_rational(&self) -> Rational {
        Rational::from_integer(self.offset.into())
    }

    fn eval(&self, u: &Exponent) -> i128 {
        self.normal
            .iter()
            .zip(u.coords())
            .map(|(&w, &c)| w * c as i128)
            .sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Location {
    Interior,
    Boundary,
    Outside,
}

/// H-representation of `P` together with the box bound `M`.
///
/// Only the non-coordinate facets are stored; the inequalities `u_i >= 0`
/// are implicit. Vertices of `P ∩ [0, M]^n` are computed on demand.
#[derive(Debug)]
pub struct NewtonPolyhedron {
    dim: usize,
    generators: Vec<Exponent>,
    facets: Vec<Facet>,
    box_bound: u32,
    vertices: OnceLock<Vec<Vec<Rational>>>,
}

impl Clone for NewtonPolyhedron {
    fn clone(&self) -> Self {
        NewtonPolyhedron {
            dim: self.dim,
            generators: self.generators.clone(),
            facets: self.facets.clone(),
            box_bound: self.box_bound,
            vertices: self.vertices.clone(),
        }
    }
}

impl NewtonPolyhedron {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Exponent] {
        &self.generators
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn box_bound(&self) -> u32 {
        self.box_bound
    }

    /// Vertices of `P ∩ [0, M]^n`, sorted lexicographically.
    pub fn vertices(&self) -> &[Vec<Rational>] {
        self.vertices.get_or_init(|| box_vertices(self))
    }

    /// Whether `u` satisfies every facet inequality of `P`.
    pub fn contains_exponent(&self, u: &Exponent) -> bool {
        self.facets.iter().all(|f| f.eval(u) >= f.offset)
    }
}

/// Builds `P` for a nonzero zero-dimensional monomial ideal.
pub fn build_polyhedron(a: &MonomialIdeal) -> Result<NewtonPolyhedron> {
    if a.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let box_bound = a.box_bound()?;
    let n = a.dim();
    let gens = a.gens().to_vec();
    let facets = if a.is_unit() {
        vec![]
    } else {
        match n {
            1 => vec![Facet {
                normal: vec![1],
                offset: gens[0].coords()[0] as i128,
                points: gens.clone(),
            }],
            2 => lower_hull_2d(&gens),
            _ => positive_facets(&gens)?,
        }
    };
    Ok(NewtonPolyhedron {
        dim: n,
        generators: gens,
        facets,
        box_bound,
        vertices: OnceLock::new(),
    })
}

fn lower_hull_2d(gens: &[Exponent]) -> Vec<Facet> {
    // Minimal generators in two variables come sorted by ascending first
    // coordinate with strictly descending second coordinate.
    let mut pts: Vec<(i128, i128)> = gens
        .iter()
        .map(|g| (g.coords()[0] as i128, g.coords()[1] as i128))
        .collect();
    pts.sort();
    let mut hull: Vec<(i128, i128)> = Vec::new();
    for p in pts {
        while hull.len() >= 2 {
            let (o, a) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (a.0 - o.0) * (p.1 - o.1) - (a.1 - o.1) * (p.0 - o.0);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    hull.windows(2)
        .map(|w| {
            let ((u1, v1), (u2, v2)) = (w[0], w[1]);
            let (mut a, mut b) = (v1 - v2, u2 - u1);
            let g = a.gcd(&b);
            a /= g;
            b /= g;
            Facet {
                normal: vec![a, b],
                offset: a * u1 + b * v1,
                points: vec![
                    Exponent::new(vec![u1 as u32, v1 as u32]),
                    Exponent::new(vec![u2 as u32, v2 as u32]),
                ],
            }
        })
        .collect()
}

/// Brute-force facet enumeration: hyperplanes through `n` affinely
/// independent generators with strictly positive normal that leave every
/// generator on the nonnegative side.
fn positive_facets(gens: &[Exponent]) -> Result<Vec<Facet>> {
    let n = gens[0].dim();
    let pts: Vec<Vec<i128>> = gens
        .iter()
        .map(|g| g.coords().iter().map(|&c| c as i128).collect())
        .collect();
    let mut found: Vec<(Vec<i128>, i128)> = Vec::new();
    let mut idx: Vec<usize> = (0..n).collect();
    if pts.len() < n {
        return Ok(vec![]);
    }
    loop {
        let chosen: Vec<&Vec<i128>> = idx.iter().map(|&i| &pts[i]).collect();
        if let Some((w, c)) = hyperplane(&chosen)? {
            let sign = if w.iter().all(|&x| x > 0) {
                Some(1)
            } else if w.iter().all(|&x| x < 0) {
                Some(-1)
            } else {
                None
            };
            if let Some(s) = sign {
                let w: Vec<i128> = w.iter().map(|x| x * s).collect();
                let c = c * s;
                if c > 0
                    && !found.iter().any(|(fw, fc)| *fw == w && *fc == c)
                    && pts.iter().all(|p| dot(&w, p) >= c)
                {
                    found.push((w, c));
                }
            }
        }
        if !next_combination(&mut idx, pts.len()) {
            break;
        }
    }
    found.sort();
    Ok(found
        .into_iter()
        .map(|(w, c)| {
            let points = gens
                .iter()
                .zip(&pts)
                .filter(|(_, p)| dot(&w, p) == c)
                .map(|(g, _)| g.clone())
                .collect();
            Facet {
                normal: w,
                offset: c,
                points,
            }
        })
        .collect())
}

fn dot(w: &[i128], p: &[i128]) -> i128 {
    w.iter().zip(p).map(|(a, b)| a * b).sum()
}

/// Advances a sorted index combination of `0..len`.
fn next_combination(idx: &mut [usize], len: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < len - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Primitive integer normal and offset of the hyperplane through `d`
/// points of `Z^d`, or `None` when they are affinely dependent.
fn hyperplane(points: &[&Vec<i128>]) -> Result<Option<(Vec<i128>, i128)>> {
    let d = points[0].len();
    let base = points[0];
    let rows: Vec<Vec<i128>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    // Generalized cross product: cofactors of the (d-1) x d matrix.
    let mut w = Vec::with_capacity(d);
    for k in 0..d {
        let minor: Vec<Vec<i128>> = rows
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &x)| x).collect())
            .collect();
        let det = determinant(minor)?;
        w.push(if k % 2 == 0 { det } else { -det });
    }
    let g = w.iter().fold(0i128, |acc, &x| acc.gcd(&x));
    if g == 0 {
        return Ok(None);
    }
    let w: Vec<i128> = w.iter().map(|x| x / g).collect();
    let c = dot(&w, base);
    Ok(Some((w, c)))
}

/// Fraction-free Gaussian elimination (Bareiss) with overflow checks.
fn determinant(mut m: Vec<Vec<i128>>) -> Result<i128> {
    let n = m.len();
    if n == 0 {
        return Ok(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[i][j].checked_mul(m[k][k]).ok_or(Error::Overflow)?;
                let b = m[i][k].checked_mul(m[k][j]).ok_or(Error::Overflow)?;
                m[i][j] = a.checked_sub(b).ok_or(Error::Overflow)? / prev;
            }
        }
        prev = m[k][k];
    }
    Ok(sign * m[n - 1][n - 1])
}

/// Volume of the convex hull of a full-dimensional point set in `Z^d`.
///
/// Pyramids from the first point over every facet not containing it; each
/// facet is measured in the coordinate projection that drops one index
/// where its normal is nonzero, which avoids square roots.
fn hull_volume(points: &[Vec<i128>]) -> Result<Rational> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    let d = pts.first().map(Vec::len).unwrap_or(0);
    if d == 0 {
        return Ok(Rational::from_integer(1.into()));
    }
    if d == 1 {
        let lo = pts.iter().map(|p| p[0]).min().expect("nonempty");
        let hi = pts.iter().map(|p| p[0]).max().expect("nonempty");
        return Ok(Rational::from_integer((hi - lo).into()));
    }
    if pts.len() <= d {
        return Ok(Rational::zero());
    }
    let apex = pts[0].clone();
    let mut seen: Vec<(Vec<i128>, i128)> = Vec::new();
    let mut total = Rational::zero();
    let mut idx: Vec<usize> = (0..d).collect();
    loop {
        let chosen: Vec<&Vec<i128>> = idx.iter().map(|&i| &pts[i]).collect();
        if let Some((mut w, mut c)) = hyperplane(&chosen)? {
            let above = pts.iter().all(|p| dot(&w, p) >= c);
            let below = pts.iter().all(|p| dot(&w, p) <= c);
            if above || below {
                if below {
                    w.iter_mut().for_each(|x| *x = -*x);
                    c = -c;
                }
                let height = dot(&w, &apex) - c;
                if height != 0 && !seen.iter().any(|(fw, fc)| *fw == w && *fc == c) {
                    let k = (0..d).rev().find(|&k| w[k] != 0).expect("nonzero normal");
                    let face: Vec<Vec<i128>> = pts
                        .iter()
                        .filter(|p| dot(&w, p) == c)
                        .map(|p| drop_coord(p, k))
                        .collect();
                    let area = hull_volume(&face)?;
                    total += area * Rational::new(height.into(), (w[k].abs() * d as i128).into());
                    seen.push((w, c));
                }
            }
        }
        if !next_combination(&mut idx, pts.len()) {
            break;
        }
    }
    Ok(total)
}

fn drop_coord(p: &[i128], k: usize) -> Vec<i128> {
    p.iter()
        .enumerate()
        .filter(|&(j, _)| j != k)
        .map(|(_, &x)| x)
        .collect()
}

/// Classifies `point` against `λ·P`. Points with a zero coordinate are
/// never interior.
pub fn locate(p: &NewtonPolyhedron, point: &[Rational], lambda: &Rational) -> Result<Location> {
    if !lambda.is_positive() {
        return Err(Error::NonPositiveScale(lambda.to_string()));
    }
    if point.len() != p.dim {
        return Err(Error::DimensionMismatch {
            expected: p.dim,
            found: point.len(),
        });
    }
    let mut boundary = false;
    for x in point {
        if x.is_negative() {
            return Ok(Location::Outside);
        }
        boundary |= x.is_zero();
    }
    for f in &p.facets {
        let lhs: Rational = f
            .normal
            .iter()
            .zip(point)
            .map(|(&w, x)| Rational::from_integer(w.into()) * x)
            .sum();
        let rhs = lambda * Rational::from_integer(f.offset.into());
        if lhs < rhs {
            return Ok(Location::Outside);
        }
        boundary |= lhs == rhs;
    }
    Ok(if boundary {
        Location::Boundary
    } else {
        Location::Interior
    })
}

/// Exact `vol(Q)`.
pub fn complement_volume(p: &NewtonPolyhedron) -> Result<Rational> {
    let n = p.dim;
    let mut total = Rational::zero();
    for f in &p.facets {
        let face: Vec<Vec<i128>> = f
            .points
            .iter()
            .map(|u| u.coords()[..n - 1].iter().map(|&c| c as i128).collect())
            .collect();
        let area = hull_volume(&face)?;
        total += area * Rational::new(f.offset.into(), (f.normal[n - 1] * n as i128).into());
    }
    Ok(total)
}

/// `M^n - vol(P ∩ [0, M]^n)`, computed from the vertex list. Slower than
/// [`complement_volume`]; kept as an independent cross-check.
pub fn complement_volume_via_box(p: &NewtonPolyhedron) -> Result<Rational> {
    let n = p.dim;
    let m = Rational::from_integer(p.box_bound.into());
    let cube = (0..n).fold(Rational::from_integer(1.into()), |acc, _| acc * &m);
    let verts = p.vertices();
    let lcm = verts
        .iter()
        .flatten()
        .fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<Vec<i128>> = verts
        .iter()
        .map(|v| {
            v.iter()
                .map(|x| to_i128(&(x.numer() * (&lcm / x.denom()))))
                .collect::<Result<Vec<i128>>>()
        })
        .collect::<Result<_>>()?;
    let vol = hull_volume(&scaled)?;
    let scale = (0..n).fold(BigInt::from(1), |acc, _| acc * &lcm);
    Ok(cube - vol / Rational::from_integer(scale))
}

/// Constraint `<a, u> >= b` used during vertex enumeration.
struct Halfspace {
    a: Vec<Rational>,
    b: Rational,
}

fn box_vertices(p: &NewtonPolyhedron) -> Vec<Vec<Rational>> {
    let n = p.dim;
    let one = Rational::from_integer(1.into());
    let m = Rational::from_integer(p.box_bound.into());
    let mut cons: Vec<Halfspace> = p
        .facets
        .iter()
        .map(|f| Halfspace {
            a: f.normal_rational(),
            b: f.offset_rational(),
        })
        .collect();
    for i in 0..n {
        let mut e = vec![Rational::zero(); n];
        e[i] = one.clone();
        cons.push(Halfspace {
            a: e.clone(),
            b: Rational::zero(),
        });
        e[i] = -one.clone();
        cons.push(Halfspace {
            a: e,
            b: -m.clone(),
        });
    }
    let mut out: Vec<Vec<Rational>> = Vec::new();
    let mut idx: Vec<usize> = (0..n).collect();
    loop {
        let rows: Vec<&Halfspace> = idx.iter().map(|&i| &cons[i]).collect();
        if let Some(x) = solve(&rows) {
            let feasible = cons.iter().all(|h| {
                let lhs: Rational = h.a.iter().zip(&x).map(|(a, b)| a * b).sum();
                lhs >= h.b
            });
            if feasible && !out.contains(&x) {
                out.push(x);
            }
        }
        if !next_combination(&mut idx, cons.len()) {
            break;
        }
    }
    out.sort();
    out
}

/// Solves `<a_i, x> = b_i` for a square system; `None` when singular.
fn solve(rows: &[&Halfspace]) -> Option<Vec<Rational>> {
    let n = rows.len();
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .map(|h| {
            let mut r = h.a.clone();
            r.push(h.b.clone());
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = Rational::from_integer(1.into()) / &m[col][col];
        for x in m[col][col..].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row[col..].iter_mut().zip(&pivot[col..]) {
                    *x -= &f * p;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n].clone()).collect())
}

/// Hilbert–Samuel multiplicity `e(a) = n!·vol(Q)`; zero for the unit ideal.
pub fn multiplicity(a: &MonomialIdeal) -> Result<u64> {
    let p = build_polyhedron(a)?;
    multiplicity_of(&p)
}

pub fn multiplicity_of(p: &NewtonPolyhedron) -> Result<u64> {
    let vol = complement_volume(p)?;
    let e = vol * Rational::from_integer(factorial(p.dim as u32));
    if !e.is_integer() || e.is_negative() {
        return Err(Error::NonIntegralMultiplicity(e.to_string()));
    }
    e.to_integer().to_u64().ok_or(Error::Overflow)
}

/// Log canonical threshold `1/μ*` where `μ*` is the largest `c/<w, e>`
/// over the non-coordinate facets.
pub fn lct(a: &MonomialIdeal) -> Result<Rational> {
    if a.is_unit() {
        return Err(Error::UnitIdeal);
    }
    lct_of(&build_polyhedron(a)?)
}

pub fn lct_of(p: &NewtonPolyhedron) -> Result<Rational> {
    p.facets
        .iter()
        .map(|f| Rational::new(f.normal.iter().sum::<i128>().into(), f.offset.into()))
        .min()
        .ok_or(Error::UnitIdeal)
}

/// `min <w, g>` over the generators; with `w = e` this is the order.
pub fn ord_weight(a: &MonomialIdeal, w: &WeightVector) -> Result<Rational> {
    if w.dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: w.dim(),
        });
    }
    a.gens()
        .iter()
        .map(|g| w.eval(g))
        .min()
        .ok_or(Error::ZeroIdeal)
}

/// The monomial ideal of `u` with `u + shift·e` in `λ·P` (closed) or its
/// interior (`strict`). All minimal generators lie in `[0, ⌈λM⌉]^n`.
pub(crate) fn region_ideal(
    p: &NewtonPolyhedron,
    lambda: &Rational,
    shift: u32,
    strict: bool,
) -> Result<MonomialIdeal> {
    if !lambda.is_positive() {
        return Err(Error::NonPositiveScale(lambda.to_string()));
    }
    let n = p.dim;
    if p.facets.is_empty() {
        return Ok(MonomialIdeal::unit(n));
    }
    let num = to_i128(lambda.numer())?;
    let den = to_i128(lambda.denom())?;
    let bound = to_i128(&ceil_int(
        &(lambda * Rational::from_integer(p.box_bound.into())),
    ))?;
    let bound = u32::try_from(bound).map_err(|_| Error::Overflow)?;
    let last = n - 1;
    let mut prefix = vec![0u32; last];
    let mut raw = Vec::new();
    loop {
        // Smallest last coordinate t with den·<w, u + shift·e> (>|>=) num·c
        // for every facet.
        let mut t: i128 = 0;
        for f in &p.facets {
            let partial: i128 = f.normal[..last]
                .iter()
                .zip(&prefix)
                .map(|(&w, &u)| w * (u as i128 + shift as i128))
                .sum();
            let rhs = num.checked_mul(f.offset).ok_or(Error::Overflow)?
                - den.checked_mul(partial).ok_or(Error::Overflow)?;
            let wn = den * f.normal[last];
            // Need wn·(t + shift) > rhs (strict) or >= rhs.
            let need = if strict {
                Integer::div_floor(&rhs, &wn) + 1
            } else {
                Integer::div_ceil(&rhs, &wn)
            } - shift as i128;
            t = t.max(need);
        }
        let t = u32::try_from(t.min(bound as i128)).map_err(|_| Error::Overflow)?;
        let mut coords = prefix.clone();
        coords.push(t);
        raw.push(Exponent::new(coords));
        if !advance_inclusive(&mut prefix, bound) {
            break;
        }
    }
    MonomialIdeal::minimalize(n, raw)
}

fn advance_inclusive(v: &mut [u32], bound: u32) -> bool {
    for c in v.iter_mut() {
        if *c < bound {
            *c += 1;
            return true;
        }
        *c = 0;
    }
    false
}
