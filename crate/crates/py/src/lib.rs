use bergeth_core::bounds::{compose_bounds, BoundsOptions, Target};
use bergeth_core::extremal::{self, ExtremalOptions, ExtremalResult};
use bergeth_core::graph::{chromatic_number, clique_number, encode_graph6, parse_graph6};
use bergeth_core::{berge, partitions, ramsey, Error, FamilySpec, SearchBudget};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

const DEFAULT_NODES: u64 = 100_000_000;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Parse { .. } | Error::Validation(_) => PyValueError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn budget(max_nodes: u64) -> PyResult<SearchBudget> {
    SearchBudget::nodes(max_nodes).map_err(py_err)
}

/// Round-trips a serializable value through JSON into Python objects.
fn to_py<T: serde::Serialize>(py: Python<'_>, value: &T) -> PyResult<PyObject> {
    let text = serde_json::to_string(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    Ok(py.import_bound("json")?.call_method1("loads", (text,))?.unbind())
}

/// A simple graph on at most 64 vertices.
#[pyclass(module = "bergeth", frozen, eq)]
#[derive(Clone, PartialEq)]
struct Graph(bergeth_core::Graph);

#[pymethods]
impl Graph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        bergeth_core::Graph::from_edges(n, &edges).map(Graph).map_err(py_err)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        parse_graph6(text).map(Graph).map_err(py_err)
    }

    /// Builds a named family such as `fan:2` or `genbook:2,3,4`.
    #[staticmethod]
    fn family(spec: &str) -> PyResult<Self> {
        let spec: FamilySpec = spec.parse().map_err(py_err)?;
        spec.build().map(Graph).map_err(py_err)
    }

    fn graph6(&self) -> PyResult<String> {
        encode_graph6(&self.0).map_err(py_err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edge_vec()
    }

    fn edge_count(&self) -> usize {
        self.0.edge_count()
    }

    fn chromatic_number(&self) -> usize {
        chromatic_number(&self.0)
    }

    fn clique_number(&self) -> usize {
        clique_number(&self.0)
    }

    fn __repr__(&self) -> String {
        format!("Graph.from_graph6({:?})", self.graph6().unwrap_or_default())
    }
}

/// A multi-hypergraph; hyperedges keep their input order.
#[pyclass(module = "bergeth", frozen, eq)]
#[derive(Clone, PartialEq)]
struct Hypergraph(bergeth_core::Hypergraph);

#[pymethods]
impl Hypergraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<Vec<usize>>) -> PyResult<Self> {
        bergeth_core::Hypergraph::from_edges(n, edges).map(Hypergraph).map_err(py_err)
    }

    /// Parses the line format: an `n m` header, then one hyperedge per line.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(Hypergraph).map_err(py_err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn edges(&self) -> Vec<Vec<usize>> {
        (0..self.0.len()).map(|i| self.0.edge(i)).collect()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn shadow(&self) -> Graph {
        Graph(berge::shadow_graph(&self.0))
    }

    fn sample(&self, seed: u64) -> Graph {
        Graph(berge::sample_subedge_graph(&self.0, seed))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Hypergraph({}, {:?})", self.0.n(), self.edges())
    }
}

/// `(core_map, edge_assignment)` of a Berge copy of `f`, or `None`.
#[pyfunction]
fn find_berge(f: &Graph, h: &Hypergraph) -> Option<(Vec<usize>, Vec<usize>)> {
    berge::find_berge(&f.0, &h.0).map(|w| (w.core_map, w.edge_assignment))
}

#[pyfunction]
fn is_berge_free(f: &Graph, h: &Hypergraph) -> bool {
    berge::is_berge_free(&f.0, &h.0)
}

/// `(c_t(f), blocks)` for a minimizing t-admissible partition.
#[pyfunction]
fn c_t(f: &Graph, t: usize) -> PyResult<(usize, Vec<Vec<usize>>)> {
    let r = partitions::c_t(&f.0, t).map_err(py_err)?;
    Ok((r.value, r.partition.blocks().to_vec()))
}

#[pyfunction]
fn lower_bound(py: Python<'_>, f: &Graph) -> PyResult<PyObject> {
    to_py(py, &partitions::gmt_lower_bound(&f.0).map_err(py_err)?)
}

/// `{"status", "value" | "lo", "witness", "nodes"}`; the witness is the blue
/// graph of an avoiding colouring one vertex short.
#[pyfunction]
#[pyo3(signature = (h, g, max_nodes = DEFAULT_NODES))]
fn ramsey_number<'py>(py: Python<'py>, h: &Graph, g: &Graph, max_nodes: u64) -> PyResult<Bound<'py, PyDict>> {
    let r = ramsey::ramsey_number(&h.0, &g.0, &budget(max_nodes)?).map_err(py_err)?;
    let out = to_py(py, &r.value)?.into_bound(py).downcast_into::<PyDict>()?;
    out.set_item("witness", Graph(r.witness.blue().clone()).into_py(py))?;
    out.set_item("nodes", r.nodes)?;
    Ok(out)
}

/// `"true"`, `"false"` or `"unknown"`.
#[pyfunction]
#[pyo3(signature = (g, p, max_nodes = DEFAULT_NODES))]
fn is_p_good(g: &Graph, p: usize, max_nodes: u64) -> PyResult<&'static str> {
    let r = ramsey::is_p_good(&g.0, p, &budget(max_nodes)?).map_err(py_err)?;
    Ok(match r.verdict {
        ramsey::PGood::True => "true",
        ramsey::PGood::False => "false",
        ramsey::PGood::Unknown => "unknown",
    })
}

fn options(max_nodes: u64) -> PyResult<ExtremalOptions> {
    Ok(ExtremalOptions::from(budget(max_nodes)?))
}

fn extremal_out(r: bergeth_core::Result<ExtremalResult>) -> PyResult<(u64, bool)> {
    let r = r.map_err(py_err)?;
    Ok((r.value, r.complete))
}

/// `(ex(n, f), complete)`.
#[pyfunction]
#[pyo3(signature = (n, f, max_nodes = DEFAULT_NODES))]
fn turan_ex(n: usize, f: &Graph, max_nodes: u64) -> PyResult<(u64, bool)> {
    extremal_out(extremal::turan_ex(n, &f.0, &options(max_nodes)?))
}

/// `(ex(n, h, f), complete)`.
#[pyfunction]
#[pyo3(signature = (n, h, f, max_nodes = DEFAULT_NODES))]
fn gen_turan_ex(n: usize, h: &Graph, f: &Graph, max_nodes: u64) -> PyResult<(u64, bool)> {
    extremal_out(extremal::gen_turan_ex(n, &h.0, &f.0, &options(max_nodes)?))
}

/// `(ex_r(n, Berge-f), complete)`.
#[pyfunction]
#[pyo3(signature = (r, n, f, max_nodes = DEFAULT_NODES))]
fn berge_ex(r: usize, n: usize, f: &Graph, max_nodes: u64) -> PyResult<(u64, bool)> {
    extremal_out(extremal::berge_ex(r, n, &f.0, &options(max_nodes)?))
}

/// `(size, edges)` of a minimum set of edges of `g` hitting every copy of `h`.
#[pyfunction]
fn cover_number(h: &Graph, g: &Graph) -> PyResult<(usize, Vec<(usize, usize)>)> {
    let c = extremal::cover_number(&h.0, &g.0).map_err(py_err)?;
    Ok((c.size, c.edges))
}

/// Lower and upper bounds on the threshold, as the CLI's `bounds --json`.
#[pyfunction]
#[pyo3(signature = (f, thorough = false, max_nodes = DEFAULT_NODES))]
fn bounds(py: Python<'_>, f: &Bound<'_, PyAny>, thorough: bool, max_nodes: u64) -> PyResult<PyObject> {
    let target = match f.extract::<Graph>() {
        Ok(g) => Target::Graph(g.0),
        Err(_) => Target::Family(f.extract::<String>()?.parse().map_err(py_err)?),
    };
    let opts = BoundsOptions {
        budget: budget(max_nodes)?,
        thorough,
        ..BoundsOptions::default()
    };
    to_py(py, &compose_bounds(&target, &opts).map_err(py_err)?)
}

#[pymodule]
fn bergeth(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_class::<Hypergraph>()?;
    m.add_function(wrap_pyfunction!(find_berge, m)?)?;
    m.add_function(wrap_pyfunction!(is_berge_free, m)?)?;
    m.add_function(wrap_pyfunction!(c_t, m)?)?;
    m.add_function(wrap_pyfunction!(lower_bound, m)?)?;
    m.add_function(wrap_pyfunction!(ramsey_number, m)?)?;
    m.add_function(wrap_pyfunction!(is_p_good, m)?)?;
    m.add_function(wrap_pyfunction!(turan_ex, m)?)?;
    m.add_function(wrap_pyfunction!(gen_turan_ex, m)?)?;
    m.add_function(wrap_pyfunction!(berge_ex, m)?)?;
    m.add_function(wrap_pyfunction!(cover_number, m)?)?;
    m.add_function(wrap_pyfunction!(bounds, m)?)?;
    Ok(())
}
