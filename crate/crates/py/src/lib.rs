//! Python bindings: affine sl2 elements, the Onsager-type algebras, the
//! enveloping algebra, and the verification checks.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use frt_core::cli::{run_suite, Format, Suite, SuiteConfig};
use frt_core::currents::BFamily;
use frt_core::envelope as env;
use frt_core::kacmoody as km;
use frt_core::onsager as ons;
use frt_core::report;

fn err(e: frt_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse<T: std::str::FromStr<Err = frt_core::Error>>(s: &str) -> PyResult<T> {
    s.parse().map_err(err)
}

/// Element of affine sl2 with parameter-polynomial coefficients.
#[pyclass(name = "LieElt", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyLieElt(km::LieElt);

#[pymethods]
impl PyLieElt {
    #[staticmethod]
    fn e(n: i64) -> Self {
        PyLieElt(km::LieElt::e(n))
    }

    #[staticmethod]
    fn f(n: i64) -> Self {
        PyLieElt(km::LieElt::f(n))
    }

    #[staticmethod]
    fn h(n: i64) -> Self {
        PyLieElt(km::LieElt::h(n))
    }

    #[staticmethod]
    fn c() -> Self {
        PyLieElt(km::LieElt::c())
    }

    #[staticmethod]
    fn zero() -> Self {
        PyLieElt(km::LieElt::zero())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn __add__(&self, o: &Self) -> Self {
        PyLieElt(&self.0 + &o.0)
    }

    fn __sub__(&self, o: &Self) -> Self {
        PyLieElt(&self.0 - &o.0)
    }

    fn __neg__(&self) -> Self {
        PyLieElt(-&self.0)
    }

    fn __mul__(&self, k: i64) -> Self {
        PyLieElt(self.0.scale_int(k))
    }

    fn __rmul__(&self, k: i64) -> Self {
        self.__mul__(k)
    }

    fn bracket(&self, o: &Self) -> Self {
        PyLieElt(km::bracket(&self.0, &o.0))
    }

    /// Applies `theta1`, `theta2`, `lusztig_plus` or `lusztig_minus`.
    fn apply(&self, map: &str) -> PyResult<Self> {
        Ok(PyLieElt(km::apply_map(map, &self.0).map_err(err)?))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("LieElt({})", self.0)
    }
}

/// Element of the Onsager, augmented Onsager or sl2-invariant Onsager algebra.
#[pyclass(name = "OnsElt", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyOnsElt(ons::OnsElt);

fn kind(s: &str) -> PyResult<ons::OnsKind> {
    use ons::OnsKind::*;
    Ok(match s {
        "A" => A,
        "G" => G,
        "K" => K,
        "Z+" => Zp,
        "Z-" => Zm,
        "H" => H,
        "E" => E,
        "F" => F,
        _ => return Err(PyValueError::new_err(format!("unknown generator `{s}`"))),
    })
}

#[pymethods]
impl PyOnsElt {
    /// The generator `kind_n`, reduced to canonical form; `kind` is one of
    /// A, G, K, Z+, Z-, H, E, F.
    #[new]
    fn new(kind_name: &str, n: i64) -> PyResult<Self> {
        Ok(PyOnsElt(ons::canonicalize(kind(kind_name)?, n)))
    }

    fn bracket(&self, o: &Self) -> PyResult<Self> {
        Ok(PyOnsElt(ons::abstract_bracket(&self.0, &o.0).map_err(err)?))
    }

    /// Image in affine sl2.
    fn image(&self) -> PyLieElt {
        PyLieElt(self.0.map_lie(ons::morphism_image))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn __add__(&self, o: &Self) -> Self {
        PyOnsElt(&self.0 + &o.0)
    }

    fn __sub__(&self, o: &Self) -> Self {
        PyOnsElt(&self.0 - &o.0)
    }

    fn __mul__(&self, k: i64) -> Self {
        PyOnsElt(self.0.scale_int(k))
    }

    fn __rmul__(&self, k: i64) -> Self {
        self.__mul__(k)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("OnsElt({})", self.0)
    }
}

/// Element of the enveloping algebra of affine sl2, in PBW normal form.
#[pyclass(name = "UeaElt", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyUeaElt(env::UeaElt);

#[pymethods]
impl PyUeaElt {
    #[new]
    fn new(a: &PyLieElt) -> Self {
        PyUeaElt(env::UeaElt::from_lie(&a.0))
    }

    fn __mul__(&self, o: &Self) -> Self {
        PyUeaElt(env::uea_mul(&self.0, &o.0))
    }

    fn __add__(&self, o: &Self) -> Self {
        PyUeaElt(&self.0 + &o.0)
    }

    fn __sub__(&self, o: &Self) -> Self {
        PyUeaElt(&self.0 - &o.0)
    }

    fn commutator(&self, o: &Self) -> Self {
        PyUeaElt(env::uea_commutator(&self.0, &o.0))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

/// Result of one check.
#[pyclass(name = "CheckReport", frozen)]
struct PyReport(report::CheckReport);

#[pymethods]
impl PyReport {
    #[getter]
    fn name(&self) -> String {
        self.0.name.clone()
    }

    #[getter]
    fn passed(&self) -> bool {
        self.0.passed()
    }

    #[getter]
    fn residual_terms(&self) -> usize {
        self.0.residual_term_count
    }

    #[getter]
    fn region(&self) -> String {
        self.0.region.clone()
    }

    /// `(position, residual)` pairs.
    #[getter]
    fn witnesses(&self) -> Vec<(String, String)> {
        self.0
            .details
            .iter()
            .map(|w| (w.position.clone(), w.residual.clone()))
            .collect()
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("report serializes")
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

fn wrap(r: frt_core::Result<report::CheckReport>) -> PyResult<PyReport> {
    r.map(PyReport).map_err(err)
}

#[pyfunction]
fn bracket(a: &PyLieElt, b: &PyLieElt) -> PyLieElt {
    a.bracket(b)
}

#[pyfunction]
fn check_cybe() -> PyResult<PyReport> {
    wrap(frt_core::tensormat::check_cybe(&frt_core::tensormat::build_r(frt_core::vars::u())))
}

#[pyfunction]
fn check_frt_relations(window: i64) -> PyResult<PyReport> {
    wrap(frt_core::currents::check_frt_relations(window))
}

/// `family` is onsager, augmented, invariant or kappa_minus.
#[pyfunction]
fn check_exchange(family: &str, window: i64) -> PyResult<PyReport> {
    wrap(frt_core::currents::check_exchange(parse::<BFamily>(family)?, window))
}

#[pyfunction]
fn check_jacobi(family: &str, window: i64) -> PyResult<PyReport> {
    wrap(ons::check_jacobi(parse(family)?, window))
}

#[pyfunction]
fn check_morphism(family: &str, window: i64) -> PyResult<PyReport> {
    wrap(ons::check_morphism(parse(family)?, window))
}

#[pyfunction]
fn check_dolan_grady(family: &str) -> PyResult<PyReport> {
    wrap(ons::check_dolan_grady(parse(family)?))
}

#[pyfunction]
fn check_fixed_point(family: &str, window: i64) -> PyResult<PyReport> {
    wrap(ons::check_fixed_point(parse(family)?, window))
}

#[pyfunction]
fn check_kappa_isomorphism(window: i64) -> PyResult<PyReport> {
    wrap(ons::check_kappa_isomorphism(window))
}

/// `kind` is `linear` or `quadratic`.
#[pyfunction]
fn check_charge_commutativity(family: &str, kind: &str, max_k: i64, window: i64) -> PyResult<PyReport> {
    wrap(env::check_charge_commutativity(parse(family)?, parse(kind)?, max_k, window))
}

#[pyfunction]
fn build_linear_charge(family: &str, k: i64) -> PyResult<PyLieElt> {
    Ok(PyLieElt(env::build_linear_charge(parse(family)?, k).map_err(err)?))
}

#[pyfunction]
fn build_quadratic_charge(family: &str, k: i64, window: i64) -> PyResult<PyUeaElt> {
    let f = env::b_family(parse(family)?);
    Ok(PyUeaElt(env::build_quadratic_charge(f, k, window).map_err(err)?))
}

/// Runs a suite and returns the JSON report.
#[pyfunction]
#[pyo3(signature = (suite, window=6, max_k=4, seed=0, parallel=false))]
fn run(suite: &str, window: i64, max_k: i64, seed: u64, parallel: bool) -> PyResult<String> {
    let suite: Suite = serde_json::from_value(serde_json::Value::String(suite.to_lowercase()))
        .map_err(|_| PyValueError::new_err(format!("unknown suite `{suite}`")))?;
    let cfg = SuiteConfig {
        suite,
        window,
        max_k,
        format: Format::Json,
        seed,
        parallel,
    };
    let report = run_suite(&cfg).map_err(err)?;
    Ok(serde_json::to_string(&report).expect("report serializes"))
}

#[pymodule]
fn frt(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLieElt>()?;
    m.add_class::<PyOnsElt>()?;
    m.add_class::<PyUeaElt>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(bracket, m)?)?;
    m.add_function(wrap_pyfunction!(check_cybe, m)?)?;
    m.add_function(wrap_pyfunction!(check_frt_relations, m)?)?;
    m.add_function(wrap_pyfunction!(check_exchange, m)?)?;
    m.add_function(wrap_pyfunction!(check_jacobi, m)?)?;
    m.add_function(wrap_pyfunction!(check_morphism, m)?)?;
    m.add_function(wrap_pyfunction!(check_dolan_grady, m)?)?;
    m.add_function(wrap_pyfunction!(check_fixed_point, m)?)?;
    m.add_function(wrap_pyfunction!(check_kappa_isomorphism, m)?)?;
    m.add_function(wrap_pyfunction!(check_charge_commutativity, m)?)?;
    m.add_function(wrap_pyfunction!(build_linear_charge, m)?)?;
    m.add_function(wrap_pyfunction!(build_quadratic_charge, m)?)?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    Ok(())
}
