//! Python bindings for the one-row crystals, the R matrix and the verifier.

#![allow(clippy::useless_conversion)]
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use crystal_rmatrix::crystal::{self, indices};
use crystal_rmatrix::insertion::Inserter;
use crystal_rmatrix::{oracle, Affine, Crystal, Family, Letter, Tableau};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn family(fam: &str, n: u8) -> PyResult<Family> {
    let affine: Affine = fam.parse().map_err(err)?;
    Family::new(affine, n).map_err(err)
}

/// An element of a one-row crystal B_l.
#[pyclass(name = "Element", module = "crystal_rmatrix_py", frozen, eq, hash)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyElement(crystal::Element);

#[pymethods]
impl PyElement {
    /// Parse "FAM:n=N,l=L:[...]".
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        crystal::Element::parse(text).map(PyElement).map_err(err)
    }

    /// Build from a family tag, rank, capacity and the bracketed coordinate list.
    #[staticmethod]
    fn from_coords(fam: &str, n: u8, l: u32, coords: &str) -> PyResult<Self> {
        crystal::Element::parse_coords(family(fam, n)?, l, coords).map(PyElement).map_err(err)
    }

    #[getter]
    fn coords(&self) -> String {
        self.0.coords_text()
    }

    #[getter]
    fn circ(&self) -> u8 {
        self.0.circ()
    }

    #[getter]
    fn capacity(&self) -> u32 {
        self.0.capacity()
    }

    fn tableau(&self) -> String {
        self.0.tableau().render()
    }

    fn weight(&self) -> Vec<i64> {
        self.0.weight()
    }

    fn e(&self, i: u8) -> PyResult<Option<Self>> {
        Ok(self.0.e(i).map_err(err)?.map(PyElement))
    }

    fn f(&self, i: u8) -> PyResult<Option<Self>> {
        Ok(self.0.f(i).map_err(err)?.map(PyElement))
    }

    fn eps(&self, i: u8) -> PyResult<usize> {
        self.0.eps(i).map_err(err)
    }

    fn phi(&self, i: u8) -> PyResult<usize> {
        self.0.phi(i).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Element('{}')", self.0)
    }
}

/// b1 ⊗ b2 with b1 in B_l and b2 in B_k.
#[pyclass(name = "TensorElement", module = "crystal_rmatrix_py", frozen, eq, hash)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyTensor(crystal::TensorElement);

#[pymethods]
impl PyTensor {
    #[new]
    fn new(b1: &PyElement, b2: &PyElement) -> PyResult<Self> {
        crystal::TensorElement::pair(b1.0.clone(), b2.0.clone()).map(PyTensor).map_err(err)
    }

    #[getter]
    fn left(&self) -> PyElement {
        PyElement(self.0.left.clone())
    }

    #[getter]
    fn right(&self) -> PyElement {
        PyElement(self.0.right.clone())
    }

    fn e(&self, i: u8) -> PyResult<Option<Self>> {
        Ok(self.0.e(i).map_err(err)?.map(PyTensor))
    }

    fn f(&self, i: u8) -> PyResult<Option<Self>> {
        Ok(self.0.f(i).map_err(err)?.map(PyTensor))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

/// Image b2' ⊗ b1', energy and pipeline diagnostics.
#[pyclass(name = "RResult", module = "crystal_rmatrix_py", frozen, get_all)]
struct PyRResult {
    image: PyTensor,
    energy: i64,
    z: usize,
    l_prime: usize,
    k_prime: usize,
    m: usize,
    t0: String,
    bumped: Vec<String>,
}

#[pymethods]
impl PyRResult {
    fn __repr__(&self) -> String {
        format!("RResult(image='{}', energy={})", self.image.0, self.energy)
    }
}

#[pyfunction]
fn r_apply(t: &PyTensor) -> PyResult<PyRResult> {
    let r = crystal_rmatrix::r_apply(&t.0).map_err(err)?;
    Ok(PyRResult {
        image: PyTensor(r.image),
        energy: r.energy,
        z: r.diag.z,
        l_prime: r.diag.l_prime,
        k_prime: r.diag.k_prime,
        m: r.diag.m,
        t0: r.diag.t0.render(),
        bumped: r.diag.bumped.iter().map(Letter::to_string).collect(),
    })
}

#[pyfunction]
fn r_inverse(t: &PyTensor) -> PyResult<PyTensor> {
    crystal_rmatrix::r_inverse(&t.0).map(PyTensor).map_err(err)
}

#[pyfunction]
fn enumerate(fam: &str, n: u8, l: u32) -> PyResult<Vec<PyElement>> {
    Ok(crystal::enumerate(family(fam, n)?, l).into_iter().map(PyElement).collect())
}

/// Operator indices of the family, including 0 when it has a 0-arrow.
#[pyfunction]
fn operator_indices(fam: &str, n: u8) -> PyResult<Vec<u8>> {
    Ok(indices(family(fam, n)?).collect())
}

/// Run the verifier; returns (all_pass, report lines).
#[pyfunction]
fn verify(py: Python<'_>, fam: &str, n: u8, l: u32, k: u32) -> PyResult<(bool, Vec<String>)> {
    let fam = family(fam, n)?;
    let report = py.allow_threads(|| oracle::verify(fam, l, k));
    Ok((report.all_pass(), report.lines()))
}

/// Insert a letter into a tableau; returns (result, [(column, case, in, out)]).
#[pyfunction]
#[allow(clippy::type_complexity)]
fn insert(
    fam: &str,
    n: u8,
    tableau: &str,
    letter: &str,
) -> PyResult<(String, Vec<(usize, String, String, Option<String>)>)> {
    let alphabet = family(fam, n)?.alphabet();
    let t = Tableau::parse(tableau, alphabet).map_err(err)?;
    let a: Letter = letter.parse().map_err(err)?;
    let (out, route) = Inserter::new(alphabet).insert(&t, a).map_err(err)?;
    let steps = route
        .steps
        .iter()
        .map(|s| (s.column, s.case.to_string(), s.incoming.to_string(), s.outgoing.map(|b| b.to_string())))
        .collect();
    Ok((out.render(), steps))
}

#[pymodule]
fn crystal_rmatrix_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyElement>()?;
    m.add_class::<PyTensor>()?;
    m.add_class::<PyRResult>()?;
    m.add_function(wrap_pyfunction!(r_apply, m)?)?;
    m.add_function(wrap_pyfunction!(r_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(operator_indices, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(insert, m)?)?;
    Ok(())
}
