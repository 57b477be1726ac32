//! Text format for monomials, polynomials and ideals.
//!
//! An ideal is a comma-separated list of polynomials. A polynomial is a
//! `+`/`-` separated list of terms `c*x1^a*x2^b`, where the optional
//! coefficient is `p` or `p/q`. Variables are `x1, x2, ...`; `x`, `y`, `z`
//! are aliases for the first three. Whitespace is ignored. The number of
//! variables is the highest index seen unless given explicitly.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::{Polynomial, PolynomialIdeal};
use crate::monomial::{Exponent, MonomialIdeal};
use crate::rational::Rational;

/// Result of [`parse_ideal`]: monomial generators give a monomial ideal.
#[derive(Clone, Debug)]
pub enum ParsedIdeal {
    Monomial(MonomialIdeal),
    Polynomial(PolynomialIdeal),
}

impl ParsedIdeal {
    pub fn dim(&self) -> usize {
        match self {
            ParsedIdeal::Monomial(a) => a.dim(),
            ParsedIdeal::Polynomial(i) => i.dim(),
        }
    }
}

/// A term before the number of variables is known.
struct RawTerm {
    coeff: Rational,
    powers: Vec<(usize, u32)>,
}

type RawPoly = Vec<RawTerm>;

struct Parser<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            text,
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::parse(self.pos, msg))
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        Ok(&self.text[start..self.pos])
    }

    fn ideal(&mut self) -> Result<Vec<RawPoly>> {
        let mut polys = vec![self.polynomial()?];
        while self.eat(b',') {
            polys.push(self.polynomial()?);
        }
        if self.peek().is_some() {
            return self.err(format!("unexpected character {:?}", self.bytes[self.pos] as char));
        }
        Ok(polys)
    }

    fn polynomial(&mut self) -> Result<RawPoly> {
        let mut terms = Vec::new();
        let mut negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let mut t = self.term()?;
            if negative {
                t.coeff = -t.coeff;
            }
            terms.push(t);
            negative = match self.peek() {
                Some(b'+') => false,
                Some(b'-') => true,
                _ => break,
            };
            self.pos += 1;
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<RawTerm> {
        let mut coeff = Rational::one();
        let mut powers = Vec::new();
        let mut first = true;
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let start = self.pos;
                    let num: BigInt = self.digits()?.parse().expect("digits");
                    let mut r = Rational::from_integer(num);
                    if self.eat(b'/') {
                        let den: BigInt = self.digits()?.parse().expect("digits");
                        if den.is_zero() {
                            return Err(Error::parse(start, "zero denominator"));
                        }
                        r /= Rational::from_integer(den);
                    }
                    coeff *= r;
                }
                Some(b'x') | Some(b'y') | Some(b'z') => powers.push(self.factor()?),
                Some(c) => {
                    return self.err(if first {
                        format!("expected a term, found {:?}", c as char)
                    } else {
                        format!("expected a factor, found {:?}", c as char)
                    })
                }
                None => return self.err("unexpected end of input"),
            }
            first = false;
            if !self.eat(b'*') {
                break;
            }
        }
        Ok(RawTerm { coeff, powers })
    }

    fn factor(&mut self) -> Result<(usize, u32)> {
        let start = self.pos;
        let name = self.bytes[self.pos];
        self.pos += 1;
        let index = if name == b'x' && self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            let d = self.digits()?;
            let i: usize = d.parse().map_err(|_| Error::parse(start, "variable index too large"))?;
            if i == 0 {
                return Err(Error::parse(start, "variables are numbered from x1"));
            }
            i - 1
        } else {
            match name {
                b'x' => 0,
                b'y' => 1,
                _ => 2,
            }
        };
        let exp = if self.eat(b'^') {
            let at = self.pos;
            self.digits()?
                .parse::<u32>()
                .map_err(|_| Error::parse(at, "exponent too large"))?
        } else {
            1
        };
        Ok((index, exp))
    }
}

fn infer_dim(polys: &[RawPoly], dim: Option<usize>) -> Result<usize> {
    let highest = polys
        .iter()
        .flatten()
        .flat_map(|t| t.powers.iter().map(|(i, _)| i + 1))
        .max();
    match (dim, highest) {
        (Some(0), _) => Err(Error::EmptyDimension),
        (Some(d), Some(h)) if h > d => Err(Error::DimensionMismatch { expected: d, found: h }),
        (Some(d), _) => Ok(d),
        (None, Some(h)) => Ok(h),
        (None, None) => Err(Error::DimensionInference),
    }
}

fn build(poly: RawPoly, dim: usize) -> Polynomial {
    let terms = poly.into_iter().map(|t| {
        let mut coords = vec![0u32; dim];
        for (i, e) in t.powers {
            coords[i] += e;
        }
        (Exponent::new(coords), t.coeff)
    });
    Polynomial::from_terms(dim, terms).expect("dimension fixed")
}

/// Parses a comma-separated list of polynomials.
pub fn parse_polynomials(text: &str, dim: Option<usize>) -> Result<(usize, Vec<Polynomial>)> {
    if text.trim().is_empty() {
        return Err(Error::EmptyInput);
    }
    let raw = Parser::new(text).ideal()?;
    let dim = infer_dim(&raw, dim)?;
    Ok((dim, raw.into_iter().map(|p| build(p, dim)).collect()))
}

pub fn parse_polynomial(text: &str, dim: Option<usize>) -> Result<Polynomial> {
    let (_, mut polys) = parse_polynomials(text, dim)?;
    if polys.len() != 1 {
        return Err(Error::parse(0, "expected a single polynomial"));
    }
    Ok(polys.pop().expect("one polynomial"))
}

/// Parses an ideal. If every generator is a single term (or zero) the
/// result is a monomial ideal.
pub fn parse_ideal(text: &str, dim: Option<usize>) -> Result<ParsedIdeal> {
    let (dim, polys) = parse_polynomials(text, dim)?;
    if polys.iter().all(|p| p.len() <= 1) {
        let gens = polys.iter().filter_map(|p| p.as_monomial().cloned()).collect();
        return Ok(ParsedIdeal::Monomial(MonomialIdeal::minimalize(dim, gens)?));
    }
    Ok(ParsedIdeal::Polynomial(PolynomialIdeal::new(dim, polys)?))
}

pub fn parse_monomial_ideal(text: &str, dim: Option<usize>) -> Result<MonomialIdeal> {
    match parse_ideal(text, dim)? {
        ParsedIdeal::Monomial(a) => Ok(a),
        ParsedIdeal::Polynomial(_) => Err(Error::parse(0, "expected monomial generators")),
    }
}
