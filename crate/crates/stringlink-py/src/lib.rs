//! Python bindings. Builders are module functions, everything else hangs off
//! the `StringLink` class; library errors surface as `ValueError`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyTuple};

use stringlink::{
    arf, classify_full_2comp, classify_linking, classify_zero, component_knot, linking_number,
    milnor, parse_diagram, report_with_truncation, run_all, sato_levine, triple_linking, verdict,
    write_diagram, StringLinkDiagram, DEFAULT_TRUNCATION,
};

fn err(e: stringlink::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An m-component string link diagram.
#[pyclass(frozen, eq, name = "StringLink", module = "stringlink_py")]
#[derive(Clone, PartialEq)]
struct PyStringLink {
    inner: StringLinkDiagram,
}

#[pymethods]
impl PyStringLink {
    /// Parse a diagram from the text format (`strands m` header, then
    /// `x i +|-` / `cup i` / `cap i` lines).
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(PyStringLink { inner: parse_diagram(text).map_err(err)? })
    }

    #[getter]
    fn num_strands(&self) -> usize {
        self.inner.num_strands()
    }

    #[getter]
    fn crossing_count(&self) -> usize {
        self.inner.crossing_count()
    }

    fn to_text(&self) -> String {
        write_diagram(&self.inner)
    }

    fn stack(&self, other: &PyStringLink) -> PyResult<PyStringLink> {
        Ok(PyStringLink { inner: self.inner.stack(&other.inner).map_err(err)? })
    }

    fn inverse(&self) -> PyStringLink {
        PyStringLink { inner: self.inner.inverse() }
    }

    fn commutator(&self, other: &PyStringLink) -> PyResult<PyStringLink> {
        Ok(PyStringLink { inner: self.inner.commutator(&other.inner).map_err(err)? })
    }

    fn mirror(&self) -> PyStringLink {
        PyStringLink { inner: self.inner.mirror() }
    }

    fn linking_number(&self, i: usize, j: usize) -> PyResult<i64> {
        linking_number(&self.inner, i, j).map_err(err)
    }

    /// Sato-Levine invariant mu(iijj); requires lk(i,j) = 0.
    fn sato_levine(&self, i: usize, j: usize) -> PyResult<i64> {
        sato_levine(&self.inner, i, j).map_err(err)
    }

    /// Triple linking number mu(ijk); requires the three pairwise lk to vanish.
    fn triple_linking(&self, i: usize, j: usize, k: usize) -> PyResult<i64> {
        triple_linking(&self.inner, i, j, k).map_err(err)
    }

    /// Raw Magnus coefficient for a supported index (ij, ijk, iijj).
    fn milnor(&self, index: Vec<usize>) -> PyResult<i64> {
        milnor(&self.inner, &index).map_err(err)
    }

    /// All supported Milnor invariants as a dict keyed by index tuples.
    #[pyo3(signature = (truncation=None))]
    fn report<'py>(
        &self,
        py: Python<'py>,
        truncation: Option<usize>,
    ) -> PyResult<Bound<'py, PyDict>> {
        let q = truncation.unwrap_or(DEFAULT_TRUNCATION);
        let rep = report_with_truncation(&self.inner, q).map_err(err)?;
        let dict = PyDict::new_bound(py);
        for (index, value) in rep.iter() {
            dict.set_item(PyTuple::new_bound(py, index), value)?;
        }
        Ok(dict)
    }

    /// Arf invariant of the closed i-th component.
    fn component_arf(&self, i: usize) -> PyResult<u8> {
        Ok(arf(&component_knot(&self.inner, i).map_err(err)?).map_err(err)?.value())
    }

    /// Pairwise linking numbers in lexicographic pair order.
    fn classify_linking(&self) -> Vec<i64> {
        classify_linking(&self.inner)
    }

    /// Order-0 classification (requires all lk = 0): dict with keys
    /// "lk", "triple", "sl_mod2", "arf".
    fn classify_zero<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let cv = classify_zero(&self.inner).map_err(err)?;
        let dict = PyDict::new_bound(py);
        dict.set_item("lk", cv.lk)?;
        dict.set_item("triple", cv.triple)?;
        dict.set_item("sl_mod2", cv.sl_mod2)?;
        dict.set_item("arf", cv.arf)?;
        Ok(dict)
    }

    /// Full 2-strand class (arf 1, arf 2, sl 12 mod 2, lk 12).
    fn classify_full_2comp(&self) -> PyResult<(u8, u8, u8, i64)> {
        classify_full_2comp(&self.inner).map_err(err)
    }

    /// Solvability verdict with the 0.5-level obstruction, rendered as text.
    fn verdict(&self) -> PyResult<String> {
        Ok(verdict(&self.inner).map_err(err)?.to_string())
    }

    fn __repr__(&self) -> String {
        format!(
            "StringLink(strands={}, crossings={})",
            self.inner.num_strands(),
            self.inner.crossing_count()
        )
    }
}

fn wrap(inner: StringLinkDiagram) -> PyStringLink {
    PyStringLink { inner }
}

#[pyfunction]
fn trivial(m: usize) -> PyStringLink {
    wrap(stringlink::trivial(m))
}

#[pyfunction]
fn whitehead(m: usize) -> PyResult<PyStringLink> {
    Ok(wrap(stringlink::whitehead(m).map_err(err)?))
}

#[pyfunction]
fn borromean() -> PyStringLink {
    wrap(stringlink::borromean())
}

#[pyfunction]
fn twisted_hopf(n: i64) -> PyStringLink {
    wrap(stringlink::twisted_hopf(n))
}

#[pyfunction]
fn braid_generator_a(m: usize, i: usize, j: usize) -> PyResult<PyStringLink> {
    Ok(wrap(stringlink::braid_generator_a(m, i, j).map_err(err)?))
}

#[pyfunction]
fn figure_eight_component() -> PyStringLink {
    wrap(stringlink::figure_eight_component())
}

/// Run the built-in verification suite; returns (name, passed) pairs.
#[pyfunction]
fn verify_suite(seed: u64) -> Vec<(String, bool)> {
    run_all(seed).into_iter().map(|r| (r.name, r.passed)).collect()
}

#[pymodule]
fn stringlink_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyStringLink>()?;
    m.add_function(wrap_pyfunction!(trivial, m)?)?;
    m.add_function(wrap_pyfunction!(whitehead, m)?)?;
    m.add_function(wrap_pyfunction!(borromean, m)?)?;
    m.add_function(wrap_pyfunction!(twisted_hopf, m)?)?;
    m.add_function(wrap_pyfunction!(braid_generator_a, m)?)?;
    m.add_function(wrap_pyfunction!(figure_eight_component, m)?)?;
    m.add_function(wrap_pyfunction!(verify_suite, m)?)?;
    Ok(())
}
