//! Python bindings: the main types and operations of the kernel exposed as
//! the `nplus_py` extension module. Laurent polynomials, Hopf elements and
//! tensors are classes; the combinatorial checks are plain functions
//! returning native Python values.

use num_bigint::{BigInt, BigUint};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use nplus::graded;
use nplus::hopf;
use nplus::ledger;
use nplus::orbits;
use nplus::qcomb;
use nplus::LaurentPoly;

fn err(e: nplus::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Exact Laurent polynomial in q with integer coefficients.
#[pyclass(eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct Laurent(LaurentPoly);

#[pymethods]
impl Laurent {
    /// Build from (exponent, coefficient) pairs; duplicates are summed.
    #[new]
    #[pyo3(signature = (terms=None))]
    fn new(terms: Option<Vec<(i64, BigInt)>>) -> Self {
        Self(LaurentPoly::from_terms(terms.unwrap_or_default()))
    }

    /// Parse the canonical text form, e.g. "1 + q^-2 + 2*q^-4".
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(Self).map_err(err)
    }

    #[staticmethod]
    fn zero() -> Self {
        Self(LaurentPoly::zero())
    }

    #[staticmethod]
    fn one() -> Self {
        Self(LaurentPoly::one())
    }

    /// q^e.
    #[staticmethod]
    fn monomial(e: i64) -> Self {
        Self(LaurentPoly::monomial(e))
    }

    fn terms(&self) -> Vec<(i64, BigInt)> {
        self.0.terms().map(|(e, c)| (e, c.clone())).collect()
    }

    fn coeff(&self, e: i64) -> BigInt {
        self.0.coeff(e)
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn shift(&self, e: i64) -> Self {
        Self(self.0.shift(e))
    }

    fn bar(&self) -> Self {
        Self(self.0.bar())
    }

    fn eval_one(&self) -> BigInt {
        self.0.eval_one()
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("serializable")
    }

    #[staticmethod]
    fn from_json(js: &str) -> PyResult<Self> {
        serde_json::from_str(js).map(Self).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __add__(&self, other: &Self) -> Self {
        Self(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        Self(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        Self(&self.0 * &other.0)
    }

    fn __neg__(&self) -> Self {
        Self(-&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Laurent({:?})", self.0.to_string())
    }
}

/// Element of the canonical-basis algebra: a sum of c_n(q) y_n.
#[pyclass(eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct Hopf(hopf::HopfElement);

#[pymethods]
impl Hopf {
    #[new]
    #[pyo3(signature = (terms=None))]
    fn new(terms: Option<Vec<(usize, Laurent)>>) -> Self {
        Self(hopf::HopfElement::from_terms(
            terms.unwrap_or_default().into_iter().map(|(n, c)| (n, c.0)),
        ))
    }

    /// The basis element y_n.
    #[staticmethod]
    fn basis(n: usize) -> Self {
        Self(hopf::HopfElement::basis(n))
    }

    fn terms(&self) -> Vec<(usize, Laurent)> {
        self.0.terms().map(|(n, c)| (n, Laurent(c.clone()))).collect()
    }

    fn coeff(&self, n: usize) -> Laurent {
        Laurent(self.0.coeff(n))
    }

    fn scale(&self, s: &Laurent) -> Self {
        Self(self.0.scale(&s.0))
    }

    /// Coproduct into the tensor square.
    fn coproduct(&self) -> Tensor {
        Tensor(hopf::comultiply(&self.0))
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("serializable")
    }

    fn __add__(&self, other: &Self) -> Self {
        Self(self.0.add(&other.0))
    }

    fn __mul__(&self, other: &Self) -> Self {
        Self(hopf::multiply(&self.0, &other.0))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Hopf({:?})", self.0.to_string())
    }
}

/// Element of the tensor square: a sum of c_{n,m}(q) y_n (x) y_m.
#[pyclass(eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct Tensor(hopf::TensorElement);

#[pymethods]
impl Tensor {
    #[new]
    #[pyo3(signature = (terms=None))]
    fn new(terms: Option<Vec<((usize, usize), Laurent)>>) -> Self {
        Self(hopf::TensorElement::from_terms(
            terms.unwrap_or_default().into_iter().map(|(nm, c)| (nm, c.0)),
        ))
    }

    /// The basis element y_n (x) y_m.
    #[staticmethod]
    fn basis(n: usize, m: usize) -> Self {
        Self(hopf::TensorElement::basis(n, m))
    }

    fn terms(&self) -> Vec<((usize, usize), Laurent)> {
        self.0.terms().map(|(nm, c)| (nm, Laurent(c.clone()))).collect()
    }

    fn coeff(&self, n: usize, m: usize) -> Laurent {
        Laurent(self.0.coeff(n, m))
    }

    fn scale(&self, s: &Laurent) -> Self {
        Self(self.0.scale(&s.0))
    }

    /// Braiding: swaps the factors and multiplies by q^-2kl per bidegree.
    fn braid(&self) -> Self {
        Self(hopf::braid(&self.0))
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("serializable")
    }

    fn __add__(&self, other: &Self) -> Self {
        Self(self.0.add(&other.0))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Tensor({:?})", self.0.to_string())
    }
}

/// Both sides of the coherence equation with the per-orbit breakdown.
#[pyclass]
struct Coherence(hopf::CoherenceReport);

#[pymethods]
impl Coherence {
    #[getter]
    fn lhs(&self) -> Laurent {
        Laurent(self.0.lhs.clone())
    }

    #[getter]
    fn rhs(&self) -> Laurent {
        Laurent(self.0.rhs.clone())
    }

    #[getter]
    fn equal(&self) -> bool {
        self.0.equal
    }

    fn terms(&self) -> Vec<((usize, usize, usize, usize), Laurent)> {
        self.0
            .terms
            .iter()
            .map(|t| {
                let [i, j, k, l] = t.quadruple;
                ((i, j, k, l), Laurent(t.coeff.clone()))
            })
            .collect()
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("serializable")
    }

    fn __repr__(&self) -> String {
        format!("Coherence(equal={}, terms={})", self.0.equal, self.0.terms.len())
    }
}

#[pyfunction]
fn q_integer(m: usize) -> Laurent {
    Laurent(qcomb::q_integer(m))
}

#[pyfunction]
fn q_factorial(n: usize) -> Laurent {
    Laurent(qcomb::q_factorial(n))
}

#[pyfunction]
fn q_binomial(n: usize, k: usize) -> PyResult<Laurent> {
    qcomb::q_binomial(n, k).map(Laurent).map_err(err)
}

#[pyfunction]
fn q_multinomial(parts: Vec<usize>) -> Laurent {
    Laurent(qcomb::q_multinomial(&parts))
}

/// Betti numbers of the Grassmannian of k-planes in (k+l)-space.
#[pyfunction]
fn betti(k: usize, l: usize) -> Vec<BigUint> {
    qcomb::betti(k, l).values
}

/// Counting oracle: partitions in a k x l box grouped by size.
#[pyfunction]
fn box_partitions(k: usize, l: usize) -> PyResult<Vec<BigUint>> {
    qcomb::box_partitions(k, l).map(|b| b.values).map_err(err)
}

#[pyfunction]
fn orbit_coefficient(i: usize, j: usize, k: usize, l: usize) -> Laurent {
    Laurent(hopf::orbit_coefficient(i, j, k, l))
}

#[pyfunction]
fn coherence_check(n: usize, m: usize, p: usize, q: usize) -> PyResult<Coherence> {
    hopf::coherence_check(n, m, p, q).map(Coherence).map_err(err)
}

/// Checks every tuple with n+m = p+q <= bound; returns (checked, failures).
#[pyfunction]
fn coherence_sweep(bound: usize) -> PyResult<(usize, usize)> {
    let mut checked = 0;
    let mut failures = 0;
    for s in 0..=bound {
        for n in 0..=s {
            for p in 0..=s {
                let r = hopf::coherence_check(n, s - n, p, s - p).map_err(err)?;
                checked += 1;
                if !r.equal {
                    failures += 1;
                }
            }
        }
    }
    Ok((checked, failures))
}

#[pyfunction]
fn associativity_check(a: usize, b: usize, c: usize) -> bool {
    hopf::associativity_check(a, b, c)
}

#[pyfunction]
fn coassociativity_check(n: usize) -> bool {
    hopf::coassociativity_check(n)
}

/// Quadruples (i,j,k,l) with i+j=n, k+l=m, i+k=p, j+l=q.
#[pyfunction]
fn quadruples(n: usize, m: usize, p: usize, q: usize) -> PyResult<Vec<(usize, usize, usize, usize)>> {
    Ok(orbits::quadruples(n, m, p, q)
        .map_err(err)?
        .into_iter()
        .map(|[i, j, k, l]| (i, j, k, l))
        .collect())
}

/// Entry matrices of all double cosets with the given margins.
#[pyfunction]
fn double_cosets(rows: Vec<usize>, cols: Vec<usize>) -> PyResult<Vec<Vec<Vec<usize>>>> {
    Ok(
        orbits::double_cosets(&orbits::Composition::new(rows), &orbits::Composition::new(cols))
            .map_err(err)?
            .into_iter()
            .map(|c| c.entries().to_vec())
            .collect(),
    )
}

/// (dim G, dim L, dim U, dim P) for the parabolic attached to the parts.
#[pyfunction]
fn group_dims(parts: Vec<usize>) -> (u64, u64, u64, u64) {
    let d = orbits::group_dims(&orbits::Composition::new(parts));
    (d.dim_g, d.dim_l, d.dim_u, d.dim_p)
}

/// Images of the block-transposition permutation s_{k,l} on 1..kl.
#[pyfunction]
fn braid_permutation(k: usize, l: usize) -> Vec<usize> {
    orbits::braid_permutation(k, l).images().to_vec()
}

#[pyfunction]
fn weighted_inversions(images: Vec<usize>, weights: Vec<u64>) -> PyResult<u64> {
    let p = orbits::Permutation::from_images(images).map_err(err)?;
    orbits::weighted_inversions(&p, &weights).map_err(err)
}

#[pyfunction]
fn shift_dimension(grid: Vec<Vec<u64>>) -> PyResult<u64> {
    Ok(orbits::shift_dimension(&orbits::DimsGrid::new(grid).map_err(err)?))
}

/// (dim U_W, dim U_W meet P_V, dim quotient).
#[pyfunction]
fn unipotent_dims(grid: Vec<Vec<u64>>) -> PyResult<(u64, u64, u64)> {
    let d = orbits::unipotent_dims(&orbits::DimsGrid::new(grid).map_err(err)?);
    Ok((d.dim_uw, d.dim_uw_cap_pv, d.dim_quotient))
}

#[pyfunction]
fn braiding_shift(a: Vec<usize>, b: Vec<usize>) -> u64 {
    orbits::braiding_shift(&orbits::Composition::new(a), &orbits::Composition::new(b))
}

/// Coefficients of the Hilbert series of A_{n_1} (x) ... (x) A_{n_k}.
#[pyfunction]
fn hilbert_series(parts: Vec<usize>, cutoff: usize) -> Vec<BigInt> {
    graded::hilbert_series(&orbits::Composition::new(parts), cutoff).coeffs().to_vec()
}

#[pyfunction]
fn graded_rank(k: usize, l: usize, cutoff: usize) -> PyResult<Laurent> {
    graded::graded_rank(k, l, cutoff).map(Laurent).map_err(err)
}

#[pyfunction]
fn mult_on_constant(k: usize, l: usize) -> Laurent {
    Laurent(graded::mult_on_constant(k, l))
}

#[pyfunction]
fn comult_on_constant(k: usize, l: usize) -> Laurent {
    Laurent(graded::comult_on_constant(k, l))
}

/// Renders the triangle relation [y] = [s] + [f] as text and JSON.
#[pyfunction]
fn triangle_relation(s: &str, y: &str, f: &str) -> PyResult<(String, String)> {
    let rel = ledger::triangle_relation(s, y, f).map_err(err)?;
    let js = serde_json::to_string(&rel).expect("serializable");
    Ok((rel.to_string(), js))
}

/// The four octahedron relations and whether both elimination orders agree.
#[pyfunction]
#[pyo3(signature = (y="Y", z="Z", f="F", s="S", q="Q", r="R"))]
fn octahedron_relations(
    y: &str,
    z: &str,
    f: &str,
    s: &str,
    q: &str,
    r: &str,
) -> PyResult<(Vec<String>, bool)> {
    let report = ledger::octahedron_relations(y, z, f, s, q, r).map_err(err)?;
    let rels = report.relations.iter().map(ToString::to_string).collect();
    Ok((rels, report.consistent))
}

/// (relation text, lhs value, rhs value, verified) of the orbit
/// decomposition at (n,m) -> (p,q).
#[pyfunction]
fn orbit_decomposition(
    n: usize,
    m: usize,
    p: usize,
    q: usize,
) -> PyResult<(String, Laurent, Laurent, bool)> {
    let d = ledger::orbit_decomposition(n, m, p, q).map_err(err)?;
    Ok((
        d.relation.to_string(),
        Laurent(d.lhs_value),
        Laurent(d.rhs_value),
        d.verified,
    ))
}

/// Iterated triangle relations along the given label order, rendered.
#[pyfunction]
fn filtration_chain(labels: Vec<String>) -> PyResult<Vec<String>> {
    let chain = ledger::filtration_chain(&labels).map_err(err)?;
    Ok(chain.iter().map(ToString::to_string).collect())
}

#[pymodule]
fn nplus_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Laurent>()?;
    m.add_class::<Hopf>()?;
    m.add_class::<Tensor>()?;
    m.add_class::<Coherence>()?;
    m.add_function(wrap_pyfunction!(q_integer, m)?)?;
    m.add_function(wrap_pyfunction!(q_factorial, m)?)?;
    m.add_function(wrap_pyfunction!(q_binomial, m)?)?;
    m.add_function(wrap_pyfunction!(q_multinomial, m)?)?;
    m.add_function(wrap_pyfunction!(betti, m)?)?;
    m.add_function(wrap_pyfunction!(box_partitions, m)?)?;
    m.add_function(wrap_pyfunction!(orbit_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(coherence_check, m)?)?;
    m.add_function(wrap_pyfunction!(coherence_sweep, m)?)?;
    m.add_function(wrap_pyfunction!(associativity_check, m)?)?;
    m.add_function(wrap_pyfunction!(coassociativity_check, m)?)?;
    m.add_function(wrap_pyfunction!(quadruples, m)?)?;
    m.add_function(wrap_pyfunction!(double_cosets, m)?)?;
    m.add_function(wrap_pyfunction!(group_dims, m)?)?;
    m.add_function(wrap_pyfunction!(braid_permutation, m)?)?;
    m.add_function(wrap_pyfunction!(weighted_inversions, m)?)?;
    m.add_function(wrap_pyfunction!(shift_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(unipotent_dims, m)?)?;
    m.add_function(wrap_pyfunction!(braiding_shift, m)?)?;
    m.add_function(wrap_pyfunction!(hilbert_series, m)?)?;
    m.add_function(wrap_pyfunction!(graded_rank, m)?)?;
    m.add_function(wrap_pyfunction!(mult_on_constant, m)?)?;
    m.add_function(wrap_pyfunction!(comult_on_constant, m)?)?;
    m.add_function(wrap_pyfunction!(triangle_relation, m)?)?;
    m.add_function(wrap_pyfunction!(octahedron_relations, m)?)?;
    m.add_function(wrap_pyfunction!(orbit_decomposition, m)?)?;
    m.add_function(wrap_pyfunction!(filtration_chain, m)?)?;
    Ok(())
}
