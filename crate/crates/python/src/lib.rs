//! Python bindings: `ival.Interval` over binary64 plus the expression
//! evaluator and the exhaustive minifloat check.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyList;

use ival_core::expr::{evaluate, DivMode};
use ival_core::oracle::sweep::{sweep, SweepOp};
use ival_core::oracle::Oracle;
use ival_core::render::{render_interval, Style};
use ival_core::{ops, MiniParams};

type Core = ival_core::Interval<f64>;

fn value_error(err: ival_core::Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

/// A closed interval of doubles, or Empty.
#[pyclass(name = "Interval", module = "ival", frozen, eq, skip_from_py_object)]
#[derive(Clone, Copy, PartialEq)]
struct PyInterval(Core);

#[pymethods]
impl PyInterval {
    #[new]
    fn new(lo: f64, hi: f64) -> PyResult<Self> {
        Core::new(lo, hi).map(PyInterval).map_err(value_error)
    }

    #[staticmethod]
    fn empty() -> Self {
        PyInterval(Core::empty())
    }

    #[staticmethod]
    fn entire() -> Self {
        PyInterval(Core::entire())
    }

    #[staticmethod]
    fn zero() -> Self {
        PyInterval(Core::zero())
    }

    /// Lower bound, or None for Empty.
    #[getter]
    fn lo(&self) -> Option<f64> {
        self.0.lo()
    }

    #[getter]
    fn hi(&self) -> Option<f64> {
        self.0.hi()
    }

    fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// One of "M", "Z", "P0", "P1", "N0", "N1".
    fn classify(&self) -> PyResult<&'static str> {
        self.0.classify().map(|c| c.name()).map_err(value_error)
    }

    fn contains(&self, x: f64) -> bool {
        self.0.contains(x)
    }

    /// Relational quotient as a list of zero, one or two intervals.
    fn div(&self, other: &PyInterval) -> Vec<PyInterval> {
        ops::div(self.0, other.0).parts().into_iter().map(PyInterval).collect()
    }

    /// Bounds as exact hexadecimal significands.
    fn hex(&self) -> String {
        render_interval(&self.0, Style { hex: true, ascii: true })
    }

    fn __add__(&self, other: &PyInterval) -> Self {
        PyInterval(self.0 + other.0)
    }

    fn __sub__(&self, other: &PyInterval) -> Self {
        PyInterval(self.0 - other.0)
    }

    fn __mul__(&self, other: &PyInterval) -> Self {
        PyInterval(self.0 * other.0)
    }

    /// Hull of the relational quotient.
    fn __truediv__(&self, other: &PyInterval) -> Self {
        PyInterval(ops::div_hull(self.0, other.0))
    }

    fn __neg__(&self) -> Self {
        PyInterval(-self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        match self.0.bounds() {
            Some((lo, hi)) => format!("Interval({lo:?}, {hi:?})"),
            None => "Interval.empty()".to_string(),
        }
    }
}

/// Evaluate an expression. Returns the parts of the result: an empty list
/// for Empty, two intervals for a split quotient when `split` is set.
#[pyfunction]
#[pyo3(signature = (expr, split = false))]
fn eval(expr: &str, split: bool) -> PyResult<Vec<PyInterval>> {
    let mode = if split { DivMode::Split } else { DivMode::Hull };
    let evaluation = evaluate(expr, mode).map_err(value_error)?;
    Ok(evaluation.value.parts().into_iter().map(PyInterval).collect())
}

/// Check operations against the exact oracle over every pair of intervals
/// in a minifloat format. Returns one dict per operation.
#[pyfunction]
#[pyo3(signature = (p = 3, emin = -2, emax = 2, op = "all"))]
fn exhaust<'py>(py: Python<'py>, p: u32, emin: i32, emax: i32, op: &str) -> PyResult<Bound<'py, PyList>> {
    let params = MiniParams::new(p, emin, emax).map_err(value_error)?;
    let selected = match op {
        "all" => SweepOp::ALL.to_vec(),
        name => vec![name.parse::<SweepOp>().map_err(PyValueError::new_err)?],
    };
    let oracle = py.detach(|| Oracle::new(params));
    let json = py.import("json")?;
    let reports = PyList::empty(py);
    for op in selected {
        let line = py.detach(|| sweep(&oracle, op).to_json_line());
        reports.append(json.call_method1("loads", (line,))?)?;
    }
    Ok(reports)
}

#[pymodule]
fn ival(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyInterval>()?;
    m.add_function(wrap_pyfunction!(eval, m)?)?;
    m.add_function(wrap_pyfunction!(exhaust, m)?)?;
    Ok(())
}
