use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::monomial::Exponent;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    Grlex,
    Grevlex,
}

/// A monomial order together with a variable ranking.
///
/// `ranking[0]` is the index of the most significant variable; the identity
/// ranking means `x1 > x2 > ... > xn`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    ranking: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, dim: usize) -> Self {
        MonomialOrder {
            kind,
            ranking: (0..dim).collect(),
        }
    }

    pub fn lex(dim: usize) -> Self {
        Self::new(OrderKind::Lex, dim)
    }

    pub fn grlex(dim: usize) -> Self {
        Self::new(OrderKind::Grlex, dim)
    }

    pub fn grevlex(dim: usize) -> Self {
        Self::new(OrderKind::Grevlex, dim)
    }

    /// Order with an explicit variable ranking (a permutation of `0..n`).
    pub fn with_ranking(kind: OrderKind, ranking: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; ranking.len()];
        for &r in &ranking {
            if r >= ranking.len() || seen[r] {
                return Err(Error::invalid(format!(
                    "variable ranking {ranking:?} is not a permutation"
                )));
            }
            seen[r] = true;
        }
        Ok(MonomialOrder { kind, ranking })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.ranking.len()
    }

    pub fn ranking(&self) -> &[usize] {
        &self.ranking
    }

    pub fn cmp(&self, a: &Exponent, b: &Exponent) -> Ordering {
        let (a, b) = (a.coords(), b.coords());
        let lex = || {
            for &i in &self.ranking {
                match a[i].cmp(&b[i]) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        };
        let degree = || {
            let da: u64 = a.iter().map(|&c| c as u64).sum();
            let db: u64 = b.iter().map(|&c| c as u64).sum();
            da.cmp(&db)
        };
        match self.kind {
            OrderKind::Lex => lex(),
            OrderKind::Grlex => degree().then_with(lex),
            OrderKind::Grevlex => degree().then_with(|| {
                for &i in self.ranking.iter().rev() {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Lex => "lex",
            OrderKind::Grlex => "grlex",
            OrderKind::Grevlex => "grevlex",
        })
    }
}

impl FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "lex" => Ok(OrderKind::Lex),
            "grlex" | "deglex" => Ok(OrderKind::Grlex),
            "grevlex" | "degrevlex" => Ok(OrderKind::Grevlex),
            other => Err(Error::invalid(format!("unknown monomial order {other:?}"))),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        if self.ranking.iter().enumerate().any(|(k, &i)| k != i) {
            let names: Vec<String> = self.ranking.iter().map(|i| format!("x{}", i + 1)).collect();
            write!(f, "({})", names.join(">"))?;
        }
        Ok(())
    }
}
