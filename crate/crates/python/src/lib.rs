use std::time::Duration;

use hyperturan_core::constructors::{codegree_peel, partite_extract, predicted_exponents, PeelParams};
use hyperturan_core::experiments::{build_report, fit_exponent, run_build, search_json, BuildKind, BuildSpec, FitBuilder};
use hyperturan_core::{
    cancellativity_witness, check, exact_max, Hypergraph, Property, SearchProblem, SparsityConstraint,
    SymmetryMode,
};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// serde_json values cross the boundary as plain dicts and lists.
fn to_py<'py>(py: Python<'py>, v: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

#[pyclass(name = "Hypergraph", module = "hyperturan_py", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyHypergraph {
    inner: Hypergraph,
}

#[pymethods]
impl PyHypergraph {
    /// `edges` are 1-based vertex lists.
    #[new]
    fn new(n: usize, r: usize, edges: Vec<Vec<usize>>) -> PyResult<Self> {
        Hypergraph::new(n, r, edges).map(|inner| Self { inner }).map_err(err)
    }

    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        text.parse().map(|inner| Self { inner }).map_err(err)
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn r(&self) -> usize {
        self.inner.r()
    }

    fn edges(&self) -> Vec<Vec<usize>> {
        self.inner.edge_lists()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Hypergraph(n={}, r={}, m={})", self.inner.n(), self.inner.r(), self.inner.len())
    }
}

fn wrap(inner: Hypergraph) -> PyHypergraph {
    PyHypergraph { inner }
}

/// Returns `{"holds": bool, "certificate": dict | None}`.
#[pyfunction]
#[pyo3(signature = (h, property, t=None, v=None, e=None))]
fn check_property<'py>(
    py: Python<'py>,
    h: &PyHypergraph,
    property: &str,
    t: Option<usize>,
    v: Option<usize>,
    e: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let p = Property::parse(property, t, v, e).map_err(err)?;
    let verdict = py.detach(|| check(&h.inner, &p)).map_err(err)?;
    to_py(py, &verdict.to_json())
}

/// Runs one of the builders; returns the hypergraph and its build report.
#[pyfunction]
#[pyo3(signature = (kind, n, r=3, t=None, k=None, constraints=Vec::new(), c=0.5, seed=0))]
#[allow(clippy::too_many_arguments)]
fn build<'py>(
    py: Python<'py>,
    kind: &str,
    n: usize,
    r: usize,
    t: Option<usize>,
    k: Option<usize>,
    constraints: Vec<(usize, usize)>,
    c: f64,
    seed: u64,
) -> PyResult<(PyHypergraph, Bound<'py, PyAny>)> {
    let kind: BuildKind = kind.parse().map_err(err)?;
    let r = match (kind, k) {
        (BuildKind::Cancellative2Odd, Some(k)) => 2 * k + 1,
        _ => r,
    };
    let constraints = constraints
        .into_iter()
        .map(|(v, e)| SparsityConstraint::new(r, v, e))
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    let spec = BuildSpec { kind, n, r, t, k, constraints, density: c, seed };
    let out = py.detach(|| run_build(&spec)).map_err(err)?;
    let report = build_report(&spec, &out, None);
    Ok((wrap(out.hypergraph), to_py(py, &report)?))
}

/// Returns the part lists and the crossing subhypergraph.
#[pyfunction]
fn partite(h: &PyHypergraph) -> (Vec<Vec<usize>>, PyHypergraph) {
    let (p, out) = partite_extract(&h.inner);
    (p.part_lists(), wrap(out))
}

#[pyfunction]
fn peel(h: &PyHypergraph, k: usize, s: usize) -> PyResult<PyHypergraph> {
    codegree_peel(&h.inner, PeelParams { k, s }).map(wrap).map_err(err)
}

#[pyfunction]
fn predict<'py>(py: Python<'py>, r: usize, t: usize) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &predicted_exponents(r, t).map_err(err)?.to_json())
}

#[pyfunction]
#[pyo3(signature = (property, n, r, t=None, v=None, e=None, budget=None, symmetry=true))]
#[allow(clippy::too_many_arguments)]
fn search_max<'py>(
    py: Python<'py>,
    property: &str,
    n: usize,
    r: usize,
    t: Option<usize>,
    v: Option<usize>,
    e: Option<usize>,
    budget: Option<f64>,
    symmetry: bool,
) -> PyResult<Bound<'py, PyAny>> {
    let mut p = SearchProblem::new(n, r, Property::parse(property, t, v, e).map_err(err)?);
    p.time_budget = budget.map(Duration::from_secs_f64);
    if !symmetry {
        p.symmetry = SymmetryMode::None;
    }
    let res = py.detach(|| exact_max(&p)).map_err(err)?;
    to_py(py, &search_json(&p, &res, None))
}

/// Returns the witness as a cancellative certificate dict.
#[pyfunction]
fn witness<'py>(py: Python<'py>, h: &PyHypergraph, t_half: usize, k: usize) -> PyResult<Bound<'py, PyAny>> {
    let w = cancellativity_witness(&h.inner, t_half, k).map_err(err)?;
    to_py(py, &w.to_certificate().to_json())
}

#[pyfunction]
#[pyo3(signature = (kind, r, t, n_list, reps=5, seed=0))]
fn fit<'py>(
    py: Python<'py>,
    kind: &str,
    r: usize,
    t: usize,
    n_list: Vec<usize>,
    reps: usize,
    seed: u64,
) -> PyResult<Bound<'py, PyAny>> {
    let builder: FitBuilder = kind.parse().map_err(err)?;
    let f = py.detach(|| fit_exponent(builder, r, t, &n_list, reps, seed)).map_err(err)?;
    to_py(py, &f.to_json())
}

#[pymodule]
fn hyperturan_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyHypergraph>()?;
    m.add_function(wrap_pyfunction!(check_property, m)?)?;
    m.add_function(wrap_pyfunction!(build, m)?)?;
    m.add_function(wrap_pyfunction!(partite, m)?)?;
    m.add_function(wrap_pyfunction!(peel, m)?)?;
    m.add_function(wrap_pyfunction!(predict, m)?)?;
    m.add_function(wrap_pyfunction!(search_max, m)?)?;
    m.add_function(wrap_pyfunction!(witness, m)?)?;
    m.add_function(wrap_pyfunction!(fit, m)?)?;
    Ok(())
}
