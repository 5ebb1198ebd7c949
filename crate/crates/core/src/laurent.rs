//! Laurent polynomials in one variable q with arbitrary-precision integer
//! coefficients: the scalar ring for every other module.
//!
//! Values are immutable after construction and every operation is a pure
//! function. Zero is represented uniquely as the empty term set, so equality
//! is structural. The canonical order for display and serialization is
//! strictly decreasing exponent.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// Exact element of Z[q,q^-1]. Zero coefficients are never stored and
/// exponent keys are unique.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    /// The zero polynomial (empty term set).
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// q^e.
    pub fn monomial(e: i64) -> Self {
        Self::term(BigInt::one(), e)
    }

    /// c * q^e.
    pub fn term(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// The constant polynomial c.
    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, 0)
    }

    /// Builds a polynomial from (exponent, coefficient) pairs, summing
    /// duplicates and dropping zero results.
    pub fn from_terms<C: Into<BigInt>>(pairs: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in pairs {
            let c = c.into();
            if c.is_zero() {
                continue;
            }
            let entry = terms.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(&e);
            }
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Coefficient of q^e (zero if absent).
    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Nonzero terms in canonical order (strictly decreasing exponent).
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().rev().map(|(&e, c)| (e, c))
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies every exponent's monomial by q^e; the scalar shadow of a
    /// degree shift by e.
    pub fn shift(&self, e: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&d, c)| (d + e, c.clone())).collect(),
        }
    }

    /// Substitutes q -> q^-1 (negates every exponent).
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&d, c)| (-d, c.clone())).collect(),
        }
    }

    /// Evaluation at q = 1: the sum of all coefficients. Collapses a graded
    /// dimension to a total dimension.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Multiplies every coefficient by c.
    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, k)| (e, k * c)).collect(),
        }
    }
}

impl std::ops::Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (&e, c) in &rhs.terms {
            let entry = terms.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(&e);
            }
        }
        LaurentPoly { terms }
    }
}

impl std::ops::Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (&e, c) in &rhs.terms {
            let entry = terms.entry(e).or_insert_with(BigInt::zero);
            *entry -= c;
            if entry.is_zero() {
                terms.remove(&e);
            }
        }
        LaurentPoly { terms }
    }
}

impl std::ops::Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                let entry = terms.entry(e1 + e2).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { terms }
    }
}

impl std::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

/// Canonical text form: terms in decreasing exponent joined by " + "/" - ",
/// coefficient 1 elided, e.g. "1 + q^-2 + 2*q^-4".
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (&e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.sign() == Sign::Minus;
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.magnitude();
            if e == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "q^{e}")?;
            } else {
                write!(f, "{abs}*q^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut pairs: Vec<(i64, BigInt)> = Vec::new();
        let mut rest = s;
        let mut negative = false;
        if let Some(r) = rest.strip_prefix('-') {
            rest = r;
            negative = true;
        }
        loop {
            let split = match (rest.find(" + "), rest.find(" - ")) {
                (Some(a), Some(b)) if a < b => Some((a, false)),
                (Some(_), Some(b)) => Some((b, true)),
                (Some(a), None) => Some((a, false)),
                (None, Some(b)) => Some((b, true)),
                (None, None) => None,
            };
            let (token, next) = match split {
                Some((at, neg_next)) => (&rest[..at], Some((&rest[at + 3..], neg_next))),
                None => (rest, None),
            };
            let (e, c) = parse_term(token)?;
            pairs.push((e, if negative { -c } else { c }));
            match next {
                Some((r, neg_next)) => {
                    rest = r;
                    negative = neg_next;
                }
                None => break,
            }
        }
        Ok(Self::from_terms(pairs))
    }
}

fn parse_term(token: &str) -> Result<(i64, BigInt)> {
    let bad = || Error::Parse(format!("bad term {token:?}"));
    if let Some(e) = token.strip_prefix("q^") {
        let e: i64 = e.parse().map_err(|_| bad())?;
        return Ok((e, BigInt::one()));
    }
    if let Some((c, rest)) = token.split_once("*q^") {
        let c = BigInt::from_str(c).map_err(|_| bad())?;
        let e: i64 = rest.parse().map_err(|_| bad())?;
        return Ok((e, c));
    }
    let c = BigInt::from_str(token).map_err(|_| bad())?;
    Ok((0, c))
}

/// JSON form: `{"terms": [[e, "c"], ...]}` with coefficients as decimal
/// strings, sorted by decreasing exponent.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<(i64, String)> =
            self.terms.iter().rev().map(|(&e, c)| (e, c.to_string())).collect();
        let mut st = serializer.serialize_struct("LaurentPoly", 1)?;
        st.serialize_field("terms", &pairs)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            terms: Vec<(i64, String)>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let mut pairs = Vec::with_capacity(repr.terms.len());
        for (e, c) in repr.terms {
            let c = BigInt::from_str(&c)
                .map_err(|_| D::Error::custom(format!("bad coefficient {c:?}")))?;
            pairs.push((e, c));
        }
        Ok(Self::from_terms(pairs))
    }
}
