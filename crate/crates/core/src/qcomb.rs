//! q-integers, q-factorials and Gaussian binomials in the q^-2 convention,
//! Grassmannian Betti vectors, and an independent partitions-in-a-box oracle.
//!
//! Everything lives in powers of q^-2: (m) = 1 + q^-2 + ... + q^-2(m-1),
//! so a Gaussian binomial is the Poincare polynomial of a Grassmannian with
//! cohomological degree 2i carried by q^-2i. No positive-q mirror is
//! exposed; the one grading dictionary lives in [`crate::graded`].

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, LaurentPoly, Result};

/// Enumeration guard for [`box_partitions`].
const BOX_CELL_LIMIT: usize = 400;

/// The q-integer (m)_{q^-2} = (1 - q^-2m)/(1 - q^-2) = sum of q^-2i for
/// i < m. Zero for m = 0.
pub fn q_integer(m: usize) -> LaurentPoly {
    LaurentPoly::from_terms((0..m).map(|i| (-2 * i as i64, 1)))
}

/// The q-factorial (n)_{q^-2}! = product of (1)...(n). One for n = 0.
pub fn q_factorial(n: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for m in 1..=n {
        acc = &acc * &q_integer(m);
    }
    acc
}

/// Gaussian binomial [n choose k]_{q^-2} = (n)!/((k)!(n-k)!), computed by
/// exact division of q-factorials. Fails only on k > n.
pub fn q_binomial(n: usize, k: usize) -> Result<LaurentPoly> {
    if k > n {
        return Err(Error::BinomialDomain { n, k });
    }
    Ok(gaussian(n, k))
}

/// Infallible Gaussian binomial for callers that already know k <= n.
pub(crate) fn gaussian(n: usize, k: usize) -> LaurentPoly {
    assert!(k <= n, "gaussian binomial needs k <= n");
    let den = &q_factorial(k) * &q_factorial(n - k);
    exact_div(&q_factorial(n), &den)
}

/// Gaussian multinomial (sum parts)! / prod (part)! in q^-2-factorials.
pub fn q_multinomial(parts: &[usize]) -> LaurentPoly {
    let total: usize = parts.iter().sum();
    let mut acc = q_factorial(total);
    for &p in parts {
        acc = exact_div(&acc, &q_factorial(p));
    }
    acc
}

/// Divides two polynomials in q^-2 exactly. The division asserting zero
/// remainder is itself a structural check: q-factorial quotients must come
/// out polynomial, anything else is a broken invariant upstream.
fn exact_div(num: &LaurentPoly, den: &LaurentPoly) -> LaurentPoly {
    let n = dense_in_q2(num);
    let d = dense_in_q2(den);
    assert!(d[0].is_one(), "divisor must have constant term 1");
    assert!(n.len() >= d.len(), "quotient would have negative degree");
    let qlen = n.len() - d.len() + 1;
    let mut quot = vec![BigInt::zero(); qlen];
    for i in 0..qlen {
        let mut c = n[i].clone();
        for j in 1..d.len().min(i + 1) {
            c -= &d[j] * &quot[i - j];
        }
        quot[i] = c;
    }
    // reconstruct to certify that the remainder vanishes
    let mut check = vec![BigInt::zero(); n.len()];
    for (i, qc) in quot.iter().enumerate() {
        for (j, dc) in d.iter().enumerate() {
            check[i + j] += qc * dc;
        }
    }
    assert_eq!(check, n, "non-exact division of q-factorials");
    LaurentPoly::from_terms(quot.into_iter().enumerate().map(|(i, c)| (-2 * i as i64, c)))
}

/// Coefficient vector of a polynomial supported on exponents 0, -2, -4, ...;
/// index i holds the coefficient of q^-2i.
fn dense_in_q2(p: &LaurentPoly) -> Vec<BigInt> {
    let deg = match p.min_exp() {
        None => return vec![BigInt::zero()],
        Some(e) => {
            assert!(e <= 0 && e % 2 == 0, "expected support in powers of q^-2");
            (-e / 2) as usize
        }
    };
    assert!(p.max_exp() == Some(0), "expected constant term");
    let mut v = vec![BigInt::zero(); deg + 1];
    for (e, c) in p.terms() {
        assert!(e % 2 == 0 && e <= 0, "expected support in powers of q^-2");
        v[(-e / 2) as usize] = c.clone();
    }
    v
}

/// Betti numbers beta_0..beta_kl of the Grassmannian of k-subspaces in
/// k+l-space, indexed by half cohomological degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiVector {
    pub k: usize,
    pub l: usize,
    pub values: Vec<BigUint>,
}

impl BettiVector {
    /// Reads beta_i off the coefficient of q^-2i in the Gaussian binomial
    /// [k+l choose k]_{q^-2}.
    pub fn from_poly(k: usize, l: usize, poly: &LaurentPoly) -> Self {
        let mut values = vec![BigUint::zero(); k * l + 1];
        for (e, c) in poly.terms() {
            assert!(e <= 0 && e % 2 == 0 && -e <= 2 * (k * l) as i64, "coefficient outside the expected degree window");
            let c = c.to_biguint().expect("negative Betti number");
            values[(-e / 2) as usize] = c;
        }
        Self { k, l, values }
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// JSON form: `{"k":k,"l":l,"betti":[...]}` with exact integer literals.
impl Serialize for BettiVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let nums: Vec<serde_json::Number> = self
            .values
            .iter()
            .map(|v| serde_json::Number::from_str(&v.to_string()).expect("decimal digits"))
            .collect();
        let mut st = serializer.serialize_struct("BettiVector", 3)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("l", &self.l)?;
        st.serialize_field("betti", &nums)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for BettiVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            k: usize,
            l: usize,
            betti: Vec<serde_json::Number>,
        }
        let repr = Repr::deserialize(deserializer)?;
        if repr.betti.len() != repr.k * repr.l + 1 {
            return Err(serde::de::Error::custom("betti length must be k*l + 1"));
        }
        let mut values = Vec::with_capacity(repr.betti.len());
        for n in repr.betti {
            let v = BigUint::from_str(&n.to_string())
                .map_err(|_| serde::de::Error::custom(format!("bad Betti number {n}")))?;
            values.push(v);
        }
        Ok(Self { k: repr.k, l: repr.l, values })
    }
}

/// Betti vector of Gr_k^{k+l} read off the Gaussian binomial.
pub fn betti(k: usize, l: usize) -> BettiVector {
    BettiVector::from_poly(k, l, &gaussian(k + l, k))
}

/// Independent oracle for [`betti`]: counts partitions with at most k parts,
/// each part at most l, grouped by size. Pure counting, no polynomial
/// division anywhere on this route.
pub fn box_partitions(k: usize, l: usize) -> Result<BettiVector> {
    if k * l > BOX_CELL_LIMIT {
        return Err(Error::ResourceLimit(format!(
            "box {k}x{l} has {} cells, limit {BOX_CELL_LIMIT}",
            k * l
        )));
    }
    let size = k * l;
    // counts[parts][sum], extended one part value at a time
    let mut counts = vec![vec![BigUint::zero(); size + 1]; k + 1];
    counts[0][0] = BigUint::one();
    for value in 1..=l {
        let mut next = vec![vec![BigUint::zero(); size + 1]; k + 1];
        for parts in 0..=k {
            for sum in 0..=size {
                if counts[parts][sum].is_zero() {
                    continue;
                }
                let mut extra = 0;
                while parts + extra <= k && sum + extra * value <= size {
                    let c = counts[parts][sum].clone();
                    next[parts + extra][sum + extra * value] += c;
                    extra += 1;
                }
            }
        }
        counts = next;
    }
    let mut values = vec![BigUint::zero(); size + 1];
    for row in &counts {
        for (sum, c) in row.iter().enumerate() {
            values[sum] += c;
        }
    }
    Ok(BettiVector { k, l, values })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn betti_of(vals: &[u32]) -> Vec<BigUint> {
        vals.iter().map(|&v| BigUint::from(v)).collect()
    }

    #[test]
    fn q_integer_examples() {
        assert_eq!(q_integer(0), LaurentPoly::zero());
        assert_eq!(q_integer(1), LaurentPoly::one());
        // (1 - q^-6)/(1 - q^-2) by long division
        assert_eq!(q_integer(3), p("1 + q^-2 + q^-4"));
    }

    #[test]
    fn q_factorial_examples() {
        assert_eq!(q_factorial(0), LaurentPoly::one());
        assert_eq!(q_factorial(2), p("1 + q^-2"));
        assert_eq!(q_factorial(3), p("1 + 2*q^-2 + 2*q^-4 + q^-6"));
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(q_binomial(2, 1).unwrap(), p("1 + q^-2"));
        assert_eq!(q_binomial(4, 2).unwrap(), p("1 + q^-2 + 2*q^-4 + q^-6 + q^-8"));
        for n in 0..8 {
            assert_eq!(q_binomial(n, 0).unwrap(), LaurentPoly::one());
        }
    }

    #[test]
    fn q_binomial_domain_error() {
        assert_eq!(q_binomial(2, 3), Err(Error::BinomialDomain { n: 2, k: 3 }));
    }

    #[test]
    fn q_binomial_shape() {
        // only nonpositive even exponents, nonnegative coefficients, constant term 1
        for n in 0..=10 {
            for k in 0..=n {
                let b = q_binomial(n, k).unwrap();
                assert_eq!(b.coeff(0), BigInt::one());
                for (e, c) in b.terms() {
                    assert!(e <= 0 && e % 2 == 0);
                    assert!(c > &BigInt::zero());
                }
            }
        }
    }

    #[test]
    fn betti_examples() {
        assert_eq!(betti(1, 1).values, betti_of(&[1, 1]));
        assert_eq!(betti(2, 2).values, betti_of(&[1, 1, 2, 1, 1]));
        assert_eq!(betti(0, 5).values, betti_of(&[1]));
    }

    #[test]
    fn box_partitions_examples() {
        assert_eq!(box_partitions(1, 1).unwrap().values, betti_of(&[1, 1]));
        // sizes 0..4: {}, (1), (2)+(1,1), (2,1), (2,2)
        assert_eq!(box_partitions(2, 2).unwrap().values, betti_of(&[1, 1, 2, 1, 1]));
        assert_eq!(box_partitions(7, 0).unwrap().values, betti_of(&[1]));
    }

    #[test]
    fn box_partitions_bound() {
        assert!(matches!(box_partitions(21, 21), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn q_multinomial_examples() {
        assert_eq!(q_multinomial(&[1, 1]), q_binomial(2, 1).unwrap());
        assert_eq!(q_multinomial(&[9]), LaurentPoly::one());
        let lhs = q_multinomial(&[1, 1, 1]);
        let rhs = &q_binomial(3, 1).unwrap() * &q_binomial(2, 1).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn betti_json_schema() {
        let b = betti(2, 2);
        let js = serde_json::to_string(&b).unwrap();
        assert_eq!(js, r#"{"k":2,"l":2,"betti":[1,1,2,1,1]}"#);
        let back: BettiVector = serde_json::from_str(&js).unwrap();
        assert_eq!(back, b);
    }

    #[test]
    fn big_factorials_stay_exact() {
        // classical limit of (25)! is 25!, far past machine-integer range
        let mut classical = BigInt::one();
        for m in 1..=25 {
            classical *= m;
        }
        assert_eq!(q_factorial(25).eval_one(), classical);
        assert_eq!(classical.to_string(), "15511210043330985984000000");
    }

    #[test]
    fn betti_palindromic() {
        for k in 0..=6 {
            for l in 0..=6 {
                let b = betti(k, l);
                assert_eq!(b.values.len(), k * l + 1);
                let rev: Vec<_> = b.values.iter().rev().cloned().collect();
                assert_eq!(b.values, rev);
                assert!(b.values[0].is_one());
            }
        }
    }
}
