//! Hilbert-series model of the equivariant derived category of a point.
//!
//! The invariant algebra of GL(n) is the symmetric polynomials A_n with
//! generator degrees 2, 4, ..., 2n, so Hilb(A_n) = prod_{j<=n} 1/(1-t^j)
//! where t tracks cohomological degree 2. Tensor factors multiply. The
//! graded rank of multiplication on constant objects is the series quotient
//! Hilb(A_k (x) A_l)/Hilb(A_{k+l}); it must terminate at degree kl and then
//! equals the Gaussian binomial after the substitution t = q^-2.
//!
//! The grading dictionary (cohomological degree 2i <-> t^i <-> q^-2i) is
//! fixed here and nowhere else.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::orbits::Composition;
use crate::qcomb::gaussian;
use crate::{Error, LaurentPoly, Result};

/// Power series in t cut at a chosen order; coefficient i is the dimension
/// in cohomological degree 2i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// The series 1 truncated at the given order.
    pub fn one(cutoff: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); cutoff + 1];
        coeffs[0] = BigInt::one();
        Self { coeffs }
    }

    /// A series with the given coefficients c_0..c_cutoff.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series has at least c_0");
        Self { coeffs }
    }

    pub fn cutoff(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Truncated product.
    pub fn mul(&self, other: &Self) -> Self {
        let cutoff = self.cutoff().min(other.cutoff());
        let mut coeffs = vec![BigInt::zero(); cutoff + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(cutoff + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(cutoff + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        Self { coeffs }
    }

    /// Re-truncates to a smaller cutoff.
    pub fn truncate(&self, cutoff: usize) -> Self {
        assert!(cutoff <= self.cutoff());
        Self { coeffs: self.coeffs[..=cutoff].to_vec() }
    }

    /// Multiplies in place by 1/(1 - t^j), the Hilbert series of one free
    /// generator in degree 2j.
    fn divide_by_one_minus_power(&mut self, j: usize) {
        if j == 0 {
            return;
        }
        for i in j..self.coeffs.len() {
            let prev = self.coeffs[i - j].clone();
            self.coeffs[i] += prev;
        }
    }

    /// Coefficient-recursive quotient; the divisor must have constant term
    /// 1, so the division stays in integers.
    fn div(&self, den: &Self) -> Self {
        assert!(den.coeffs[0].is_one(), "divisor must have constant term 1");
        let cutoff = self.cutoff().min(den.cutoff());
        let mut quot = vec![BigInt::zero(); cutoff + 1];
        for i in 0..=cutoff {
            let mut c = self.coeffs[i].clone();
            for j in 1..=i {
                c -= &den.coeffs[j] * &quot[i - j];
            }
            quot[i] = c;
        }
        Self { coeffs: quot }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// JSON form: `{"cutoff":c,"coeffs":["...", ...]}` with decimal strings.
impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        let mut st = serializer.serialize_struct("TruncatedSeries", 2)?;
        st.serialize_field("cutoff", &self.cutoff())?;
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            cutoff: usize,
            coeffs: Vec<String>,
        }
        let repr = Repr::deserialize(deserializer)?;
        if repr.coeffs.len() != repr.cutoff + 1 {
            return Err(serde::de::Error::custom("coefficient count does not match cutoff"));
        }
        let mut coeffs = Vec::with_capacity(repr.coeffs.len());
        for c in repr.coeffs {
            coeffs.push(
                BigInt::from_str(&c)
                    .map_err(|_| serde::de::Error::custom(format!("bad coefficient {c:?}")))?,
            );
        }
        Ok(Self { coeffs })
    }
}

/// Hilbert series of A_{n_1} (x) ... (x) A_{n_k}: the truncated product of
/// prod_{j<=n_i} 1/(1-t^j) over the parts.
pub fn hilbert_series(c: &Composition, cutoff: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(cutoff);
    for &part in &c.parts {
        for j in 1..=part {
            s.divide_by_one_minus_power(j);
        }
    }
    s
}

/// Graded rank of multiplication on the constant object: the quotient
/// Hilb(A_k (x) A_l)/Hilb(A_{k+l}) read off as a Laurent polynomial in q
/// via t = q^-2. The quotient must vanish identically beyond degree kl up
/// to the cutoff; a nonzero tail is surfaced as an error, never dropped.
pub fn graded_rank(k: usize, l: usize, cutoff: usize) -> Result<LaurentPoly> {
    let top = k * l;
    if cutoff < top {
        return Err(Error::CutoffTooSmall { cutoff, required: top });
    }
    let num = hilbert_series(&Composition::new([k, l]), cutoff);
    let den = hilbert_series(&Composition::new([k + l]), cutoff);
    let quot = num.div(&den);
    for i in top + 1..=cutoff {
        if !quot.coeff(i).is_zero() {
            return Err(Error::NonvanishingTail { degree: i, value: quot.coeff(i).to_string() });
        }
    }
    Ok(LaurentPoly::from_terms(
        (0..=top).map(|i| (-2 * i as i64, quot.coeff(i).clone())),
    ))
}

/// Coefficient of the constant object under multiplication: the Poincare
/// polynomial of the Grassmannian, computed through the Hilbert-series
/// model and cross-checked against the Gaussian binomial.
pub fn mult_on_constant(k: usize, l: usize) -> LaurentPoly {
    let rank = graded_rank(k, l, k * l).expect("cutoff k*l is always sufficient");
    assert_eq!(rank, gaussian(k + l, k), "Hilbert-series model disagrees with q-combinatorics");
    rank
}

/// Coefficient of the constant object under comultiplication; the
/// comultiplication sends constants to constants on the nose.
pub fn comult_on_constant(_k: usize, _l: usize) -> LaurentPoly {
    LaurentPoly::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcomb::q_binomial;

    fn coeffs(s: &TruncatedSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn hilbert_examples() {
        let s = hilbert_series(&Composition::new([1]), 4);
        assert_eq!(coeffs(&s), vec![1, 1, 1, 1, 1]);
        let s = hilbert_series(&Composition::new([]), 3);
        assert_eq!(coeffs(&s), vec![1, 0, 0, 0]);
        let s = hilbert_series(&Composition::new([2]), 4);
        assert_eq!(coeffs(&s), vec![1, 1, 2, 2, 3]);
    }

    #[test]
    fn graded_rank_examples() {
        assert_eq!(graded_rank(1, 1, 6).unwrap(), "1 + q^-2".parse().unwrap());
        assert_eq!(graded_rank(1, 2, 8).unwrap(), "1 + q^-2 + q^-4".parse().unwrap());
        for l in 0..5 {
            assert_eq!(graded_rank(0, l, 7).unwrap(), LaurentPoly::one());
        }
    }

    #[test]
    fn graded_rank_cutoff_error() {
        assert_eq!(
            graded_rank(2, 3, 5),
            Err(Error::CutoffTooSmall { cutoff: 5, required: 6 })
        );
    }

    #[test]
    fn mult_on_constant_examples() {
        assert_eq!(mult_on_constant(1, 1), "1 + q^-2".parse().unwrap());
        assert_eq!(mult_on_constant(2, 2), "1 + q^-2 + 2*q^-4 + q^-6 + q^-8".parse().unwrap());
        for n in 0..6 {
            assert_eq!(mult_on_constant(n, 0), LaurentPoly::one());
        }
    }

    #[test]
    fn comult_on_constant_examples() {
        assert_eq!(comult_on_constant(1, 1), LaurentPoly::one());
        assert_eq!(comult_on_constant(0, 4), LaurentPoly::one());
        assert_eq!(comult_on_constant(3, 4), LaurentPoly::one());
    }

    #[test]
    fn model_matches_binomial() {
        for k in 0..=6 {
            for l in 0..=6 {
                assert_eq!(graded_rank(k, l, k * l).unwrap(), q_binomial(k + l, k).unwrap());
            }
        }
    }

    #[test]
    fn series_json_schema() {
        let s = hilbert_series(&Composition::new([2]), 4);
        let js = serde_json::to_string(&s).unwrap();
        assert_eq!(js, r#"{"cutoff":4,"coeffs":["1","1","2","2","3"]}"#);
        let back: TruncatedSeries = serde_json::from_str(&js).unwrap();
        assert_eq!(back, s);
    }
}
