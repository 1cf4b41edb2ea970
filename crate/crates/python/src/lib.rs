//! Python bindings: graphs, drawings, solvers, certificates and constructions.
//!
//! Structured results (reports, witnesses, certificates) are returned as plain
//! Python dicts and lists with the same shape as the CLI's JSON payloads.

use oneplane::algorithms::{self, TutteBergeMode};
use oneplane::constructions::{self, GeometricOptions};
use oneplane::reduction;
use oneplane::{Edge, Error, VertexSet};
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde::Serialize;
use serde_json::Value;

create_exception!(oneplane, GuardError, PyRuntimeError, "An input exceeded a size guard.");
create_exception!(oneplane, InvalidDrawingError, PyValueError, "The drawing violates 1-planarity or its rotation.");

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::Guard { .. } => GuardError::new_err(e.to_string()),
        Error::InvalidDrawing(_) => InvalidDrawingError::new_err(e.to_string()),
        Error::Invariant(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn value_to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => match n.as_i64() {
            Some(i) => i.into_pyobject(py)?.into_any(),
            None => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(xs) => {
            let list = PyList::empty(py);
            for x in xs {
                list.append(value_to_py(py, x)?)?;
            }
            list.into_any()
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, x) in map {
                dict.set_item(k, value_to_py(py, x)?)?;
            }
            dict.into_any()
        }
    })
}

fn to_py<'py, T: Serialize>(py: Python<'py>, x: &T) -> PyResult<Bound<'py, PyAny>> {
    let v = serde_json::to_value(x).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    value_to_py(py, &v)
}

fn edge_pair(e: &Edge) -> (String, String) {
    (e.u().to_string(), e.v().to_string())
}

/// A simple undirected graph with string vertex ids.
#[pyclass(name = "Graph", module = "oneplane", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyGraph {
    inner: oneplane::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(vertices: Vec<String>, edges: Vec<(String, String)>) -> PyResult<Self> {
        let edges = edges.into_iter().map(|(u, v)| Edge::new(u, v)).collect::<Result<Vec<_>, _>>();
        let edges = edges.map_err(|e| to_py_err(e.into()))?;
        let inner = oneplane::Graph::from_parts(vertices, edges).map_err(|e| to_py_err(e.into()))?;
        Ok(PyGraph { inner })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        oneplane::Graph::from_json(text).map(|inner| PyGraph { inner }).map_err(to_py_err)
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn e(&self) -> usize {
        self.inner.e()
    }

    fn vertices(&self) -> Vec<String> {
        self.inner.vertices().map(str::to_string).collect()
    }

    fn edges(&self) -> Vec<(String, String)> {
        self.inner.edges().map(|e| edge_pair(&e)).collect()
    }

    fn degree(&self, v: &str) -> PyResult<usize> {
        if !self.inner.has_vertex(v) {
            return Err(PyValueError::new_err(format!("unknown vertex '{v}'")));
        }
        Ok(self.inner.degree(v))
    }

    fn components(&self) -> Vec<Vec<String>> {
        self.inner.components().into_iter().map(|c| c.into_iter().collect()).collect()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, e={})", self.inner.n(), self.inner.e())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

/// A 1-plane drawing: a graph, its crossing pairs and an optional rotation system.
#[pyclass(name = "Drawing", module = "oneplane", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyDrawing {
    inner: oneplane::OnePlaneDrawing,
}

#[pymethods]
impl PyDrawing {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        oneplane::OnePlaneDrawing::from_json(text).map(|inner| PyDrawing { inner }).map_err(to_py_err)
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn to_dot(&self) -> String {
        self.inner.to_dot()
    }

    #[getter]
    fn graph(&self) -> PyGraph {
        PyGraph { inner: self.inner.graph().clone() }
    }

    fn crossings(&self) -> Vec<((String, String), (String, String))> {
        self.inner.crossings().iter().map(|p| (edge_pair(p.first()), edge_pair(p.second()))).collect()
    }

    fn has_rotation(&self) -> bool {
        self.inner.rotation().is_some()
    }

    /// The validation report as a dict.
    fn validate<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &self.inner.validate())
    }

    /// One dict per crossing; raises on invalid drawings.
    fn classify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let (classes, _) = self.inner.classify().map_err(to_py_err)?;
        to_py(py, &classes)
    }

    fn is_type_2a(&self) -> bool {
        self.inner.validate().is_type_2a_drawing
    }

    fn is_nice(&self) -> bool {
        self.inner.validate().is_nice
    }

    fn contract_uncrossed(&self, u: &str, v: &str) -> PyResult<Self> {
        let e = Edge::new(u, v).map_err(|e| to_py_err(e.into()))?;
        self.inner.contract_uncrossed(&e).map(|inner| PyDrawing { inner }).map_err(to_py_err)
    }

    #[pyo3(signature = (keep=None, drop=None))]
    fn subdrawing(&self, keep: Option<Vec<String>>, drop: Option<Vec<(String, String)>>) -> PyResult<Self> {
        let keep: Option<VertexSet> = keep.map(|k| k.into_iter().collect());
        let drop = drop
            .map(|d| d.into_iter().map(|(u, v)| Edge::new(u, v)).collect::<Result<_, _>>())
            .transpose()
            .map_err(|e| to_py_err(e.into()))?;
        self.inner.subdrawing(keep.as_ref(), drop.as_ref()).map(|inner| PyDrawing { inner }).map_err(to_py_err)
    }

    fn __repr__(&self) -> String {
        let g = self.inner.graph();
        format!("Drawing(n={}, e={}, crossings={})", g.n(), g.e(), self.inner.crossings().len())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

fn drawing(inner: oneplane::OnePlaneDrawing) -> PyDrawing {
    PyDrawing { inner }
}

#[pyfunction]
fn maximum_matching(g: &PyGraph) -> Vec<(String, String)> {
    algorithms::maximum_matching(&g.inner).edges.iter().map(edge_pair).collect()
}

#[pyfunction]
fn matching_oracle(g: &PyGraph) -> PyResult<Vec<(String, String)>> {
    let m = algorithms::matching_oracle(&g.inner).map_err(to_py_err)?;
    Ok(m.edges.iter().map(edge_pair).collect())
}

/// `(alpha' == floor(n/2), matching)`.
#[pyfunction]
fn near_perfect_verdict(g: &PyGraph) -> (bool, Vec<(String, String)>) {
    let (ok, m) = algorithms::near_perfect_verdict(&g.inner);
    (ok, m.edges.iter().map(edge_pair).collect())
}

#[pyfunction]
fn vertex_connectivity(g: &PyGraph) -> PyResult<usize> {
    algorithms::vertex_connectivity(&g.inner).map_err(to_py_err)
}

#[pyfunction]
fn vertex_connectivity_oracle(g: &PyGraph) -> PyResult<usize> {
    algorithms::vertex_connectivity_oracle(&g.inner).map_err(to_py_err)
}

#[pyfunction]
#[pyo3(signature = (g, mode="exhaustive"))]
fn tutte_berge<'py>(py: Python<'py>, g: &PyGraph, mode: &str) -> PyResult<Bound<'py, PyAny>> {
    let mode = match mode {
        "exhaustive" => TutteBergeMode::Exhaustive,
        "gallai-edmonds" => TutteBergeMode::GallaiEdmonds,
        other => return Err(PyValueError::new_err(format!("unknown mode '{other}'"))),
    };
    to_py(py, &algorithms::tutte_berge_in(&g.inner, mode).map_err(to_py_err)?)
}

#[pyfunction]
#[pyo3(signature = (g, max_n=algorithms::DEFAULT_MAX_N))]
fn scattering_number<'py>(py: Python<'py>, g: &PyGraph, max_n: usize) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &algorithms::scattering_number_with_limit(&g.inner, max_n).map_err(to_py_err)?)
}

#[pyfunction]
fn certify_cut<'py>(py: Python<'py>, d: &PyDrawing, s: Vec<String>) -> PyResult<Bound<'py, PyAny>> {
    let s: VertexSet = s.into_iter().collect();
    to_py(py, &reduction::certify_cut(&d.inner, &s).map_err(to_py_err)?)
}

#[pyfunction]
fn certify_all_cuts<'py>(py: Python<'py>, d: &PyDrawing, max_size: usize) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &reduction::certify_all_cuts(&d.inner, max_size).map_err(to_py_err)?)
}

#[pyfunction]
fn build_figure1() -> PyDrawing {
    drawing(constructions::build_figure1())
}

#[pyfunction]
fn build_g0() -> PyDrawing {
    drawing(constructions::build_g0())
}

#[pyfunction]
fn build_cocktail8() -> PyDrawing {
    drawing(constructions::build_cocktail8())
}

#[pyfunction]
fn g0_black_set() -> Vec<String> {
    constructions::g0_black_set().into_iter().collect()
}

#[pyfunction]
#[pyo3(signature = (n, seed=0, sparsify=false))]
fn quad_diag(n: usize, seed: u64, sparsify: bool) -> PyResult<PyDrawing> {
    constructions::quad_diag_instance(n, seed, sparsify).map(drawing).map_err(to_py_err)
}

#[pyfunction]
#[pyo3(signature = (n, seed=0, density=0.6, type_2a=false))]
fn random_geometric(n: usize, seed: u64, density: f64, type_2a: bool) -> PyResult<PyDrawing> {
    if !(0.0..=1.0).contains(&density) {
        return Err(PyValueError::new_err("density must lie in [0, 1]"));
    }
    Ok(drawing(constructions::random_geometric_drawing(n, seed, GeometricOptions { density, type_2a })))
}

#[pymodule]
#[pyo3(name = "oneplane")]
fn oneplane_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add_class::<PyGraph>()?;
    m.add_class::<PyDrawing>()?;
    m.add("GuardError", py.get_type::<GuardError>())?;
    m.add("InvalidDrawingError", py.get_type::<InvalidDrawingError>())?;
    m.add_function(wrap_pyfunction!(maximum_matching, m)?)?;
    m.add_function(wrap_pyfunction!(matching_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(near_perfect_verdict, m)?)?;
    m.add_function(wrap_pyfunction!(vertex_connectivity, m)?)?;
    m.add_function(wrap_pyfunction!(vertex_connectivity_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(tutte_berge, m)?)?;
    m.add_function(wrap_pyfunction!(scattering_number, m)?)?;
    m.add_function(wrap_pyfunction!(certify_cut, m)?)?;
    m.add_function(wrap_pyfunction!(certify_all_cuts, m)?)?;
    m.add_function(wrap_pyfunction!(build_figure1, m)?)?;
    m.add_function(wrap_pyfunction!(build_g0, m)?)?;
    m.add_function(wrap_pyfunction!(build_cocktail8, m)?)?;
    m.add_function(wrap_pyfunction!(g0_black_set, m)?)?;
    m.add_function(wrap_pyfunction!(quad_diag, m)?)?;
    m.add_function(wrap_pyfunction!(random_geometric, m)?)?;
    Ok(())
}
