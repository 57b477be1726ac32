//! Independent oracles. None of these call into the library's geometry or
//! Gröbner code; they use brute force on small inputs.
#![allow(dead_code)]

use ai_core::rational::Rational;
use num_traits::{One, Signed, Zero};

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn qi(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shoelace area of a simple polygon.
pub fn shoelace(poly: &[(Rational, Rational)]) -> Rational {
    let mut twice = Rational::zero();
    for k in 0..poly.len() {
        let (x0, y0) = &poly[k];
        let (x1, y1) = &poly[(k + 1) % poly.len()];
        twice += x0 * y1 - x1 * y0;
    }
    (twice / qi(2)).abs()
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Lower-left boundary of the Newton polygon of a zero-dimensional ideal
/// in two variables, from `(0, b)` to `(a, 0)`. An edge `p -> q` is kept
/// when every exponent lies on or above its supporting line.
pub fn newton_boundary_2d(gens: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let start = *gens.iter().filter(|g| g.0 == 0).min_by_key(|g| g.1).expect("pure power of y");
    let end = *gens.iter().filter(|g| g.1 == 0).min_by_key(|g| g.0).expect("pure power of x");
    let mut path = vec![start];
    let mut cur = start;
    while cur != end {
        let mut best: Option<(i64, i64)> = None;
        for &c in gens {
            if c.0 <= cur.0 || c.1 >= cur.1 {
                continue;
            }
            let supporting = gens.iter().all(|&g| cross(cur, c, g) >= 0);
            if supporting && best.is_none_or(|b| c.0 > b.0) {
                best = Some(c);
            }
        }
        cur = best.expect("boundary continues");
        path.push(cur);
    }
    path
}

/// `2·area` of the region under the Newton boundary.
pub fn multiplicity_2d(gens: &[(i64, i64)]) -> Rational {
    let path = newton_boundary_2d(gens);
    let mut poly: Vec<(Rational, Rational)> = vec![(qi(0), qi(0))];
    poly.extend(path.iter().map(|&(x, y)| (qi(x), qi(y))));
    shoelace(&poly) * qi(2)
}

/// Smallest `t` with `(t, t)` in the Newton polygon: the minimum of
/// `max(c)` over points `c` on segments between generators.
pub fn diagonal_hit_2d(gens: &[(i64, i64)]) -> Rational {
    let mut best: Option<Rational> = None;
    let mut consider = |t: Rational| {
        if best.as_ref().is_none_or(|b| t < *b) {
            best = Some(t);
        }
    };
    for &(x, y) in gens {
        consider(qi(x.max(y)));
    }
    for &p in gens {
        for &r in gens {
            // Minimize max(p.0 + s(r.0-p.0), p.1 + s(r.1-p.1)) over s in [0, 1].
            let (dx, dy) = (r.0 - p.0, r.1 - p.1);
            if dx == dy {
                continue;
            }
            let s = q(p.1 - p.0, dx - dy);
            if s >= Rational::zero() && s <= Rational::one() {
                consider(qi(p.0) + &s * qi(dx));
            }
        }
    }
    best.expect("nonempty")
}

pub fn lct_2d(gens: &[(i64, i64)]) -> Rational {
    Rational::one() / diagonal_hit_2d(gens)
}

/// Whether `v` is interior to the Newton polygon: some convex combination
/// of two generators is strictly below `v` in both coordinates.
pub fn interior_2d(gens: &[(i64, i64)], v: (&Rational, &Rational)) -> bool {
    for &p in gens {
        for &r in gens {
            // p + s(r - p) < v, for some s in [0, 1].
            let mut lo = Rational::zero();
            let mut hi = Rational::one();
            let mut strict_ok = true;
            for (pc, rc, vc) in [(p.0, r.0, v.0), (p.1, r.1, v.1)] {
                let d = qi(rc - pc);
                let room = vc - qi(pc);
                if d.is_zero() {
                    strict_ok &= room > Rational::zero();
                } else if d > Rational::zero() {
                    let bound = &room / &d;
                    if bound < hi {
                        hi = bound;
                    }
                } else {
                    let bound = &room / &d;
                    if bound > lo {
                        lo = bound;
                    }
                }
            }
            // The strict inequalities need an open interval, or a point
            // where the bounds are not attained.
            if strict_ok && lo < hi {
                return true;
            }
        }
    }
    false
}

/// Generators of `I(λ·a)` by enumeration: `u` with `(u + 1)/λ` interior.
pub fn multiplier_2d(gens: &[(i64, i64)], lambda: &Rational, bound: i64) -> Vec<(i64, i64)> {
    let mut members = Vec::new();
    for i in 0..=bound {
        for j in 0..=bound {
            let v = (qi(i + 1) / lambda, qi(j + 1) / lambda);
            if interior_2d(gens, (&v.0, &v.1)) {
                members.push((i, j));
            }
        }
    }
    minimal_2d(&members)
}

pub fn minimal_2d(points: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut out: Vec<(i64, i64)> = points
        .iter()
        .copied()
        .filter(|&u| !points.iter().any(|&v| v != u && v.0 <= u.0 && v.1 <= u.1))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Number of exponents in `[0, bound)^n` divisible by no generator.
pub fn brute_colength(gens: &[Vec<u32>], n: usize, bound: u32) -> u64 {
    let mut count = 0;
    let mut u = vec![0u32; n];
    loop {
        if !gens.iter().any(|g| g.iter().zip(&u).all(|(a, b)| a <= b)) {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == n {
                return count;
            }
            u[k] += 1;
            if u[k] < bound {
                break;
            }
            u[k] = 0;
            k += 1;
        }
    }
}

/// A polynomial over the integers in two variables.
pub type IntPoly = Vec<((u32, u32), i64)>;

fn rank_mod(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = pow_mod(rows[rank][c], p - 2, p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c];
                for (x, v) in row[c..].iter_mut().zip(&pivot[c..]) {
                    *x = (*x + p - f * v % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// `dim R_{<=d} / span{x^a y^b f : deg <= d}` with the rank taken modulo
/// two primes (the larger rank wins).
pub fn macaulay_quotient_dim(polys: &[IntPoly], d: u32) -> u64 {
    let monos: Vec<(u32, u32)> = (0..=d).flat_map(|t| (0..=t).map(move |i| (i, t - i))).collect();
    let index = |m: (u32, u32)| monos.iter().position(|&x| x == m).expect("in range");
    let mut best = 0;
    for p in [1_000_000_007u64, 998_244_353] {
        let mut rows = Vec::new();
        for f in polys {
            let deg = f.iter().map(|((a, b), _)| a + b).max().unwrap_or(0);
            if deg > d {
                continue;
            }
            for &(sa, sb) in &monos {
                if sa + sb + deg > d {
                    continue;
                }
                let mut row = vec![0u64; monos.len()];
                for &((a, b), c) in f {
                    let k = index((a + sa, b + sb));
                    row[k] = (row[k] + c.rem_euclid(p as i64) as u64) % p;
                }
                rows.push(row);
            }
        }
        best = best.max(rank_mod(rows, p));
    }
    monos.len() as u64 - best as u64
}

/// Colength of a zero-dimensional ideal: the Macaulay quotient dimension
/// once it has been constant for three consecutive degrees.
pub fn macaulay_colength(polys: &[IntPoly]) -> u64 {
    let start = polys
        .iter()
        .flat_map(|f| f.iter().map(|((a, b), _)| a + b))
        .max()
        .unwrap_or(0);
    let mut history: Vec<u64> = Vec::new();
    for d in start..start + 40 {
        history.push(macaulay_quotient_dim(polys, d));
        let k = history.len();
        if k >= 3 && history[k - 1] == history[k - 2] && history[k - 2] == history[k - 3] {
            return history[k - 1];
        }
    }
    panic!("Macaulay quotient did not stabilize: {history:?}");
}

pub fn int_poly_text(f: &IntPoly) -> String {
    let parts: Vec<String> = f
        .iter()
        .map(|&((a, b), c)| format!("{}{c}*x^{a}*y^{b}", if c >= 0 { "+" } else { "" }))
        .collect();
    parts.concat()
}
