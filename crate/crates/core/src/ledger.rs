//! Grothendieck-group bookkeeping over stratified parameter sets.
//!
//! A distinguished triangle S -> Y -> F contributes the additive relation
//! [Y] = [S] + [F] and nothing more: no splitting is ever encoded, only sum
//! relations. Strata are opaque labels; closures and orbit dimensions are
//! not modeled, so filtration orders are supplied by the caller.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::hopf::orbit_coefficient;
use crate::orbits::quadruples;
use crate::qcomb::gaussian;
use crate::{Error, LaurentPoly, Result};

/// Formal Z[q,q^-1]-linear combination of stratum labels; zero coefficients
/// are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct KClass {
    combo: BTreeMap<String, LaurentPoly>,
}

impl<'de> Deserialize<'de> for KClass {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let combo = BTreeMap::<String, LaurentPoly>::deserialize(d)?;
        Ok(Self::from_terms(combo))
    }
}

impl KClass {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The class of a single stratum with coefficient 1.
    pub fn singleton(label: impl Into<String>) -> Self {
        Self::from_terms([(label.into(), LaurentPoly::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (String, LaurentPoly)>) -> Self {
        let mut combo: BTreeMap<String, LaurentPoly> = BTreeMap::new();
        for (label, c) in terms {
            if c.is_zero() {
                continue;
            }
            let entry = combo.entry(label.clone()).or_insert_with(LaurentPoly::zero);
            *entry = &*entry + &c;
            if entry.is_zero() {
                combo.remove(&label);
            }
        }
        Self { combo }
    }

    pub fn is_zero(&self) -> bool {
        self.combo.is_empty()
    }

    pub fn coeff(&self, label: &str) -> LaurentPoly {
        self.combo.get(label).cloned().unwrap_or_default()
    }

    /// Terms in increasing label order.
    pub fn terms(&self) -> impl Iterator<Item = (&str, &LaurentPoly)> {
        self.combo.iter().map(|(l, c)| (l.as_str(), c))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_terms(
            self.terms()
                .chain(other.terms())
                .map(|(l, c)| (l.to_owned(), c.clone())),
        )
    }

    pub fn scale(&self, s: &LaurentPoly) -> Self {
        Self::from_terms(self.terms().map(|(l, c)| (l.to_owned(), c * s)))
    }

    /// Replaces a label by a whole class, distributing the coefficient.
    pub fn substitute(&self, label: &str, replacement: &Self) -> Self {
        match self.combo.get(label) {
            None => self.clone(),
            Some(c) => {
                let mut rest = self.clone();
                rest.combo.remove(label);
                rest.add(&replacement.scale(c))
            }
        }
    }

    /// The label if this class is a single stratum with coefficient 1.
    pub fn as_single_label(&self) -> Option<&str> {
        if self.combo.len() != 1 {
            return None;
        }
        let (label, c) = self.combo.iter().next().unwrap();
        c.is_one().then_some(label.as_str())
    }

    /// Evaluates the class under an assignment of polynomial values to
    /// every label it mentions.
    pub fn evaluate(&self, assignment: &BTreeMap<String, LaurentPoly>) -> Result<LaurentPoly> {
        let mut total = LaurentPoly::zero();
        for (label, c) in &self.combo {
            let value = assignment
                .get(label)
                .ok_or_else(|| Error::UnassignedLabel(label.clone()))?;
            total = &total + &(c * value);
        }
        Ok(total)
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.combo.is_empty() {
            return write!(f, "0");
        }
        for (idx, (label, c)) in self.combo.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "[{label}]")?;
            } else {
                write!(f, "({c})*[{label}]")?;
            }
        }
        Ok(())
    }
}

/// Where an additive relation came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RelationOrigin {
    #[serde(rename = "triangle")]
    Triangle,
    #[serde(rename = "octahedron-face")]
    OctahedronFace,
    #[serde(rename = "decomposition")]
    Decomposition,
}

impl fmt::Display for RelationOrigin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::Triangle => "triangle",
            Self::OctahedronFace => "octahedron-face",
            Self::Decomposition => "decomposition",
        };
        write!(f, "{s}")
    }
}

/// An additive relation lhs = rhs between formal classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KRelation {
    pub lhs: KClass,
    pub rhs: KClass,
    pub origin: RelationOrigin,
}

impl KRelation {
    /// True when both sides evaluate to the same polynomial under the
    /// assignment.
    pub fn satisfied_by(&self, assignment: &BTreeMap<String, LaurentPoly>) -> Result<bool> {
        Ok(self.lhs.evaluate(assignment)? == self.rhs.evaluate(assignment)?)
    }
}

impl fmt::Display for KRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

fn require_distinct(labels: &[&str]) -> Result<()> {
    for (i, a) in labels.iter().enumerate() {
        for b in &labels[i + 1..] {
            if a == b {
                return Err(Error::DuplicateLabel((*a).to_owned()));
            }
        }
    }
    Ok(())
}

/// The structure-triangle relation [y] = [s] + [f] for a closed stratum f
/// inside y with open complement s.
pub fn triangle_relation(s: &str, y: &str, f: &str) -> Result<KRelation> {
    require_distinct(&[s, y, f])?;
    Ok(KRelation {
        lhs: KClass::singleton(y),
        rhs: KClass::singleton(s).add(&KClass::singleton(f)),
        origin: RelationOrigin::Triangle,
    })
}

/// The four triangle relations of the octahedron attached to closed
/// subsets f inside z inside y, together with the two elimination orders
/// reducing [y] to [r] + [q] + [f].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OctahedronReport {
    pub relations: Vec<KRelation>,
    pub via_z: KClass,
    pub via_s: KClass,
    pub consistent: bool,
}

/// Given F closed in Z closed in Y and names for the complements S = Y-F,
/// Q = Z-F, R = Y-Z, produces the triangles (R,Y,Z), (Q,Z,F), (R,S,Q),
/// (S,Y,F) and checks that eliminating via Z or via S yields the same
/// decomposition of [y].
pub fn octahedron_relations(
    y: &str,
    z: &str,
    f: &str,
    s: &str,
    q: &str,
    r: &str,
) -> Result<OctahedronReport> {
    require_distinct(&[y, z, f, s, q, r])?;
    let relations = vec![
        triangle_relation(r, y, z)?,
        triangle_relation(q, z, f)?,
        triangle_relation(r, s, q)?,
        triangle_relation(s, y, f)?,
    ];
    let relations: Vec<KRelation> = relations
        .into_iter()
        .map(|mut rel| {
            rel.origin = RelationOrigin::OctahedronFace;
            rel
        })
        .collect();
    let via_z = relations[0].rhs.substitute(z, &relations[1].rhs);
    let via_s = relations[3].rhs.substitute(s, &relations[2].rhs);
    let consistent = via_z == via_s;
    Ok(OctahedronReport { relations, via_z, via_s, consistent })
}

/// The orbit decomposition of the full operation at (n,m,p,q) together
/// with its numerical verification: the full-operation label is assigned
/// the Gaussian binomial, each orbit label its orbit coefficient, and the
/// two sides of the relation are compared exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitDecomposition {
    pub relation: KRelation,
    pub lhs_value: LaurentPoly,
    pub rhs_value: LaurentPoly,
    pub verified: bool,
}

pub fn orbit_decomposition(n: usize, m: usize, p: usize, q_deg: usize) -> Result<OrbitDecomposition> {
    let quads = quadruples(n, m, p, q_deg)?;
    let total_label = format!("GL({})", n + m);
    let mut assignment: BTreeMap<String, LaurentPoly> = BTreeMap::new();
    assignment.insert(total_label.clone(), gaussian(n + m, n));
    let mut rhs = KClass::zero();
    for [i, j, k, l] in quads {
        let label = format!("O({i},{j},{k},{l})");
        assignment.insert(label.clone(), orbit_coefficient(i, j, k, l));
        rhs = rhs.add(&KClass::singleton(label));
    }
    let relation = KRelation {
        lhs: KClass::singleton(total_label),
        rhs,
        origin: RelationOrigin::Decomposition,
    };
    let lhs_value = relation.lhs.evaluate(&assignment)?;
    let rhs_value = relation.rhs.evaluate(&assignment)?;
    let verified = lhs_value == rhs_value;
    Ok(OrbitDecomposition { relation, lhs_value, rhs_value, verified })
}

/// Iterated structure triangles along a user-supplied linear order: with
/// partial totals Y_1..Y_N, emits [Y_1] = [o_1] and [Y_t] = [Y_{t-1}] +
/// [o_t]. The telescoped total is order-independent.
pub fn filtration_chain(labels: &[String]) -> Result<Vec<KRelation>> {
    if labels.is_empty() {
        return Err(Error::EmptyFiltration);
    }
    let mut all: Vec<&str> = labels.iter().map(String::as_str).collect();
    let partials: Vec<String> = (1..=labels.len()).map(|t| format!("Y_{t}")).collect();
    all.extend(partials.iter().map(String::as_str));
    require_distinct(&all)?;
    let mut relations = Vec::with_capacity(labels.len());
    for (t, label) in labels.iter().enumerate() {
        let mut rhs = KClass::singleton(label.clone());
        if t > 0 {
            rhs = rhs.add(&KClass::singleton(partials[t - 1].clone()));
        }
        relations.push(KRelation {
            lhs: KClass::singleton(partials[t].clone()),
            rhs,
            origin: RelationOrigin::Triangle,
        });
    }
    Ok(relations)
}

/// Collapses a filtration chain by back-substituting every partial total,
/// leaving the decomposition [Y_N] = sum of the orbit classes.
pub fn telescope(chain: &[KRelation]) -> Result<KRelation> {
    let last = chain.last().ok_or(Error::EmptyFiltration)?;
    let mut rhs = last.rhs.clone();
    for rel in chain[..chain.len() - 1].iter().rev() {
        let label = rel
            .lhs
            .as_single_label()
            .ok_or_else(|| Error::Parse("chain link with composite left side".into()))?;
        rhs = rhs.substitute(label, &rel.rhs);
    }
    Ok(KRelation { lhs: last.lhs.clone(), rhs, origin: RelationOrigin::Decomposition })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn assign(pairs: &[(&str, &str)]) -> BTreeMap<String, LaurentPoly> {
        pairs.iter().map(|(l, v)| ((*l).to_owned(), p(v))).collect()
    }

    #[test]
    fn triangle_examples() {
        let rel = triangle_relation("S", "Y", "F").unwrap();
        assert_eq!(rel.to_string(), "[Y] = [F] + [S]");
        assert_eq!(rel.origin, RelationOrigin::Triangle);
        let good = assign(&[("S", "1"), ("F", "q^-2"), ("Y", "1 + q^-2")]);
        assert!(rel.satisfied_by(&good).unwrap());
        let bad = assign(&[("S", "1"), ("F", "1"), ("Y", "1")]);
        assert!(!rel.satisfied_by(&bad).unwrap());
        assert!(matches!(
            triangle_relation("S", "S", "F"),
            Err(Error::DuplicateLabel(_))
        ));
    }

    #[test]
    fn triangle_missing_assignment() {
        let rel = triangle_relation("S", "Y", "F").unwrap();
        let partial = assign(&[("S", "1"), ("Y", "1")]);
        assert_eq!(
            rel.satisfied_by(&partial),
            Err(Error::UnassignedLabel("F".into()))
        );
    }

    #[test]
    fn octahedron_generic() {
        let report = octahedron_relations("Y", "Z", "F", "S", "Q", "R").unwrap();
        assert!(report.consistent);
        let rendered: Vec<String> = report.relations.iter().map(|r| r.to_string()).collect();
        assert_eq!(
            rendered,
            vec![
                "[Y] = [R] + [Z]",
                "[Z] = [F] + [Q]",
                "[S] = [Q] + [R]",
                "[Y] = [F] + [S]",
            ]
        );
        assert_eq!(report.via_z.to_string(), "[F] + [Q] + [R]");
        assert_eq!(report.via_z, report.via_s);
        assert!(matches!(
            octahedron_relations("Y", "Z", "F", "S", "Q", "Z"),
            Err(Error::DuplicateLabel(_))
        ));
    }

    #[test]
    fn octahedron_forced_assignment() {
        let report = octahedron_relations("Y", "Z", "F", "S", "Q", "R").unwrap();
        let a = assign(&[
            ("R", "1"),
            ("Q", "q^-2"),
            ("F", "q^-4"),
            ("Z", "q^-2 + q^-4"),
            ("S", "1 + q^-2"),
            ("Y", "1 + q^-2 + q^-4"),
        ]);
        for rel in &report.relations {
            assert!(rel.satisfied_by(&a).unwrap());
        }
    }

    #[test]
    fn octahedron_degenerate_f() {
        // F empty: the octahedron collapses to a single triangle
        let report = octahedron_relations("Y", "Z", "F", "S", "Q", "R").unwrap();
        let a = assign(&[
            ("R", "1"),
            ("Q", "q^-2"),
            ("F", "0"),
            ("Z", "q^-2"),
            ("S", "1 + q^-2"),
            ("Y", "1 + q^-2"),
        ]);
        for rel in &report.relations {
            assert!(rel.satisfied_by(&a).unwrap());
        }
        assert!(report.consistent);
    }

    #[test]
    fn orbit_decomposition_examples() {
        let d = orbit_decomposition(1, 1, 1, 1).unwrap();
        assert!(d.verified);
        assert_eq!(d.lhs_value, p("1 + q^-2"));
        assert_eq!(
            d.relation.to_string(),
            "[GL(2)] = [O(0,1,1,0)] + [O(1,0,0,1)]"
        );

        let d = orbit_decomposition(3, 0, 3, 0).unwrap();
        assert!(d.verified);
        assert_eq!(d.relation.rhs.terms().count(), 1);

        let d = orbit_decomposition(2, 1, 1, 2).unwrap();
        assert!(d.verified);
        assert_eq!(d.lhs_value, p("1 + q^-2 + q^-4"));

        assert!(orbit_decomposition(2, 1, 2, 2).is_err());
    }

    #[test]
    fn filtration_examples() {
        let one = filtration_chain(&["A".into()]).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].to_string(), "[Y_1] = [A]");

        let two = filtration_chain(&["A".into(), "B".into()]).unwrap();
        assert_eq!(two[1].to_string(), "[Y_2] = [B] + [Y_1]");
        let total = telescope(&two).unwrap();
        assert_eq!(total.to_string(), "[Y_2] = [A] + [B]");

        assert!(matches!(filtration_chain(&[]), Err(Error::EmptyFiltration)));
        assert!(matches!(
            filtration_chain(&["A".into(), "A".into()]),
            Err(Error::DuplicateLabel(_))
        ));
        assert!(matches!(
            filtration_chain(&["Y_1".into(), "B".into()]),
            Err(Error::DuplicateLabel(_))
        ));
    }

    #[test]
    fn filtration_order_invariance() {
        let quads = quadruples(2, 2, 2, 2).unwrap();
        let labels: Vec<String> = quads
            .iter()
            .map(|[i, j, k, l]| format!("O({i},{j},{k},{l})"))
            .collect();
        let mut totals = Vec::new();
        // all 3! = 6 orders of the three orbit labels
        let perms: [[usize; 3]; 6] =
            [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        for perm in perms {
            let order: Vec<String> = perm.iter().map(|&i| labels[i].clone()).collect();
            let chain = filtration_chain(&order).unwrap();
            totals.push(telescope(&chain).unwrap().rhs);
        }
        for t in &totals[1..] {
            assert_eq!(t, &totals[0]);
        }
    }

    #[test]
    fn kclass_json() {
        let c = KClass::from_terms([
            ("S".to_owned(), p("1")),
            ("F".to_owned(), p("1 + q^-2")),
        ]);
        let js = serde_json::to_string(&c).unwrap();
        assert_eq!(js, r#"{"F":{"terms":[[0,"1"],[-2,"1"]]},"S":{"terms":[[0,"1"]]}}"#);
        let rel = triangle_relation("S", "Y", "F").unwrap();
        let js = serde_json::to_string(&rel).unwrap();
        assert!(js.contains(r#""origin":"triangle""#));
        let back: KRelation = serde_json::from_str(&js).unwrap();
        assert_eq!(back, rel);
    }
}
