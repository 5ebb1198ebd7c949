//! The braided Hopf algebra H in its canonical basis (y_n): multiplication
//! y_k y_l = [k+l choose k]_{q^-2} y_{k+l}, comultiplication
//! y_n -> sum y_k (x) y_l over k+l = n, braiding c(y_k (x) y_l) =
//! q^-2kl y_l (x) y_k, and the coherence equation expanded per orbit.
//!
//! Neither a counit nor an antipode is provided: the source structure never
//! defines them for H, so their absence here is deliberate rather than an
//! omission.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::qcomb::{gaussian, q_multinomial};
use crate::{Error, LaurentPoly, Result};

/// Finitely supported R-linear combination sum c_n(q) y_n, degrees >= 0,
/// zero coefficients never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HopfElement {
    coeffs: BTreeMap<usize, LaurentPoly>,
}

impl HopfElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis element y_n.
    pub fn basis(n: usize) -> Self {
        Self::from_terms([(n, LaurentPoly::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, LaurentPoly)>) -> Self {
        let mut coeffs: BTreeMap<usize, LaurentPoly> = BTreeMap::new();
        for (n, c) in terms {
            if c.is_zero() {
                continue;
            }
            let entry = coeffs.entry(n).or_insert_with(LaurentPoly::zero);
            *entry = &*entry + &c;
            if entry.is_zero() {
                coeffs.remove(&n);
            }
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of y_n (zero if absent).
    pub fn coeff(&self, n: usize) -> LaurentPoly {
        self.coeffs.get(&n).cloned().unwrap_or_default()
    }

    /// Terms in increasing degree.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &LaurentPoly)> {
        self.coeffs.iter().map(|(&n, c)| (n, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_terms(
            self.terms()
                .chain(other.terms())
                .map(|(n, c)| (n, c.clone())),
        )
    }

    pub fn scale(&self, s: &LaurentPoly) -> Self {
        Self::from_terms(self.terms().map(|(n, c)| (n, c * s)))
    }
}

/// Finitely supported combination sum c_{n,m}(q) y_n (x) y_m.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorElement {
    coeffs: BTreeMap<(usize, usize), LaurentPoly>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis element y_n (x) y_m.
    pub fn basis(n: usize, m: usize) -> Self {
        Self::from_terms([((n, m), LaurentPoly::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((usize, usize), LaurentPoly)>) -> Self {
        let mut coeffs: BTreeMap<(usize, usize), LaurentPoly> = BTreeMap::new();
        for (nm, c) in terms {
            if c.is_zero() {
                continue;
            }
            let entry = coeffs.entry(nm).or_insert_with(LaurentPoly::zero);
            *entry = &*entry + &c;
            if entry.is_zero() {
                coeffs.remove(&nm);
            }
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, n: usize, m: usize) -> LaurentPoly {
        self.coeffs.get(&(n, m)).cloned().unwrap_or_default()
    }

    /// Terms in increasing bidegree (lexicographic).
    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &LaurentPoly)> {
        self.coeffs.iter().map(|(&nm, c)| (nm, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_terms(
            self.terms()
                .chain(other.terms())
                .map(|(nm, c)| (nm, c.clone())),
        )
    }

    pub fn scale(&self, s: &LaurentPoly) -> Self {
        Self::from_terms(self.terms().map(|(nm, c)| (nm, c * s)))
    }
}

/// Bilinear product: y_k y_l = [k+l choose k]_{q^-2} y_{k+l}.
pub fn multiply(u: &HopfElement, v: &HopfElement) -> HopfElement {
    let mut out = Vec::new();
    for (a, ca) in u.terms() {
        for (b, cb) in v.terms() {
            let c = &(ca * cb) * &gaussian(a + b, a);
            out.push((a + b, c));
        }
    }
    HopfElement::from_terms(out)
}

/// Linear coproduct: y_n -> sum over k+l = n of y_k (x) y_l.
pub fn comultiply(u: &HopfElement) -> TensorElement {
    let mut out = Vec::new();
    for (n, c) in u.terms() {
        for k in 0..=n {
            out.push(((k, n - k), c.clone()));
        }
    }
    TensorElement::from_terms(out)
}

/// Braiding: y_k (x) y_l -> q^-2kl y_l (x) y_k, extended linearly.
pub fn braid(t: &TensorElement) -> TensorElement {
    let mut out = Vec::new();
    for ((k, l), c) in t.terms() {
        out.push(((l, k), c.shift(-2 * (k as i64) * (l as i64))));
    }
    TensorElement::from_terms(out)
}

/// The (i,j,k,l) summand of (m (x) m)(1 (x) c (x) 1)(Delta (x) Delta) on
/// y_{i+j} (x) y_{k+l}: the middle braiding contributes q^-2jk, the two
/// multiplications contribute [i+k choose i] and [j+l choose j].
pub fn orbit_coefficient(i: usize, j: usize, k: usize, l: usize) -> LaurentPoly {
    let prod = &gaussian(i + k, i) * &gaussian(j + l, j);
    prod.shift(-2 * (j as i64) * (k as i64))
}

/// One orbit summand of a coherence report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoherenceTerm {
    pub quadruple: [usize; 4],
    pub coeff: LaurentPoly,
}

/// Both sides of the coherence equation on y_n (x) y_m in output bidegree
/// (p,q), together with the per-orbit breakdown of the right-hand side.
/// `equal == false` is a correctness failure of this library, surfaced for
/// inspection, never silently repaired.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoherenceReport {
    pub lhs: LaurentPoly,
    pub terms: Vec<CoherenceTerm>,
    pub rhs: LaurentPoly,
    pub equal: bool,
}

impl<'de> Deserialize<'de> for CoherenceReport {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            lhs: LaurentPoly,
            terms: Vec<CoherenceTerm>,
            rhs: LaurentPoly,
            equal: bool,
        }
        let r = Repr::deserialize(deserializer)?;
        let sum = r
            .terms
            .iter()
            .fold(LaurentPoly::zero(), |acc, t| &acc + &t.coeff);
        if sum != r.rhs {
            return Err(serde::de::Error::custom("rhs is not the sum of the term polynomials"));
        }
        if r.equal != (r.lhs == r.rhs) {
            return Err(serde::de::Error::custom("equal flag contradicts lhs and rhs"));
        }
        Ok(Self { lhs: r.lhs, terms: r.terms, rhs: r.rhs, equal: r.equal })
    }
}

/// Expands the coherence equation on y_n (x) y_m at output bidegree
/// (p, q_deg). The left side is the (p,q_deg)-component of Delta after m;
/// the right side sums [`orbit_coefficient`] over all quadruples with
/// i+j = n, k+l = m, i+k = p, j+l = q_deg, listed by increasing i.
pub fn coherence_check(n: usize, m: usize, p: usize, q_deg: usize) -> Result<CoherenceReport> {
    if n + m != p + q_deg {
        return Err(Error::DegreeMismatch { n, m, p, q: q_deg });
    }
    let lhs = gaussian(n + m, n);
    let mut terms = Vec::new();
    let mut rhs = LaurentPoly::zero();
    for i in p.saturating_sub(m)..=n.min(p) {
        let j = n - i;
        let k = p - i;
        let l = m - k;
        let coeff = orbit_coefficient(i, j, k, l);
        rhs = &rhs + &coeff;
        terms.push(CoherenceTerm { quadruple: [i, j, k, l], coeff });
    }
    let equal = lhs == rhs;
    Ok(CoherenceReport { lhs, terms, rhs, equal })
}

/// Checks (y_a y_b) y_c = y_a (y_b y_c) and that both orders carry the
/// Gaussian multinomial coefficient on y_{a+b+c}.
pub fn associativity_check(a: usize, b: usize, c: usize) -> bool {
    let (ya, yb, yc) = (HopfElement::basis(a), HopfElement::basis(b), HopfElement::basis(c));
    let left = multiply(&multiply(&ya, &yb), &yc);
    let right = multiply(&ya, &multiply(&yb, &yc));
    let expected = HopfElement::from_terms([(a + b + c, q_multinomial(&[a, b, c]))]);
    left == right && left == expected
}

/// Checks (Delta (x) 1)Delta = (1 (x) Delta)Delta on y_n: both sides must
/// list every weak composition a+b+c = n exactly once with coefficient 1.
pub fn coassociativity_check(n: usize) -> bool {
    let mut left: BTreeMap<[usize; 3], LaurentPoly> = BTreeMap::new();
    let mut right: BTreeMap<[usize; 3], LaurentPoly> = BTreeMap::new();
    for ((a, b), c) in comultiply(&HopfElement::basis(n)).terms() {
        for ((x, y), d) in comultiply(&HopfElement::basis(a)).terms() {
            let entry = left.entry([x, y, b]).or_insert_with(LaurentPoly::zero);
            *entry = &*entry + &(c * d);
        }
        for ((x, y), d) in comultiply(&HopfElement::basis(b)).terms() {
            let entry = right.entry([a, x, y]).or_insert_with(LaurentPoly::zero);
            *entry = &*entry + &(c * d);
        }
    }
    let mut expected: BTreeMap<[usize; 3], LaurentPoly> = BTreeMap::new();
    for a in 0..=n {
        for b in 0..=n - a {
            expected.insert([a, b, n - a - b], LaurentPoly::one());
        }
    }
    left == right && left == expected
}

impl fmt::Display for HopfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (n, c)) in self.terms().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "y{n}")?;
            } else {
                write!(f, "({c}) y{n}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, ((n, m), c)) in self.terms().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "y{n} \u{2297} y{m}")?;
            } else {
                write!(f, "({c}) y{n} \u{2297} y{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct HopfTermRepr {
    degree: usize,
    coeff: LaurentPoly,
}

/// JSON form: `{"terms":[{"degree":n,"coeff":...}]}` in increasing degree.
impl Serialize for HopfElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<HopfTermRepr> = self
            .terms()
            .map(|(n, c)| HopfTermRepr { degree: n, coeff: c.clone() })
            .collect();
        let mut st = serializer.serialize_struct("HopfElement", 1)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for HopfElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            terms: Vec<HopfTermRepr>,
        }
        let repr = Repr::deserialize(deserializer)?;
        Ok(Self::from_terms(repr.terms.into_iter().map(|t| (t.degree, t.coeff))))
    }
}

#[derive(Serialize, Deserialize)]
struct TensorTermRepr {
    bidegree: [usize; 2],
    coeff: LaurentPoly,
}

/// JSON form: `{"terms":[{"bidegree":[n,m],"coeff":...}]}`.
impl Serialize for TensorElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TensorTermRepr> = self
            .terms()
            .map(|((n, m), c)| TensorTermRepr { bidegree: [n, m], coeff: c.clone() })
            .collect();
        let mut st = serializer.serialize_struct("TensorElement", 1)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for TensorElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            terms: Vec<TensorTermRepr>,
        }
        let repr = Repr::deserialize(deserializer)?;
        Ok(Self::from_terms(
            repr.terms.into_iter().map(|t| ((t.bidegree[0], t.bidegree[1]), t.coeff)),
        ))
    }
}
