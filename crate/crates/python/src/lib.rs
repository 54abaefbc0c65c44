//! Python bindings for `trilie-core`. Rationals cross the boundary as
//! `fractions.Fraction` (anything whose `str` is `p` or `p/q` is accepted).

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyTuple};

use trilie_core::catalog::{self, Params};
use trilie_core::cli::{parse_document, print_document, AlgebraDocument};
use trilie_core::cohomology::{cohomology_report, Coeffs, Cochain, Theory};
use trilie_core::exactlin::{format_rational, parse_rational};
use trilie_core::extensions::{central_extend, is_trivial_extension};
use trilie_core::induce::{induce_bracket, trace_space, LinearForm};
use trilie_core::structure::{center, central_series, derived_series};
use trilie_core::{Error, Rational, StructureConstants};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    let text = obj.str()?.to_string();
    parse_rational(&text).ok_or_else(|| PyValueError::new_err(format!("not a rational: {text}")))
}

fn to_fraction<'py>(py: Python<'py>, q: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((format_rational(q),))
}

fn fractions<'py>(py: Python<'py>, v: &[Rational]) -> PyResult<Vec<Bound<'py, PyAny>>> {
    v.iter().map(|q| to_fraction(py, q)).collect()
}

fn to_form(coeffs: &[Bound<'_, PyAny>]) -> PyResult<LinearForm> {
    Ok(LinearForm::new(coeffs.iter().map(to_rational).collect::<PyResult<_>>()?))
}

fn to_params(params: Option<&Bound<'_, PyDict>>) -> PyResult<Params> {
    let mut out = Params::new();
    if let Some(d) = params {
        for (k, v) in d.iter() {
            out.insert(k.extract::<String>()?, to_rational(&v)?);
        }
    }
    Ok(out)
}

/// An algebra given by structure constants; arity 2 is a Lie bracket,
/// arity 3 a 3-Lie bracket.
#[pyclass(name = "Algebra", module = "trilie", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyAlgebra {
    inner: StructureConstants,
}

#[pymethods]
impl PyAlgebra {
    /// `brackets` maps 1-based index tuples to `{basis index: coefficient}`.
    #[new]
    #[pyo3(signature = (arity, dim, brackets = None))]
    fn new(arity: usize, dim: usize, brackets: Option<&Bound<'_, PyDict>>) -> PyResult<Self> {
        let mut raw = Vec::new();
        if let Some(b) = brackets {
            for (k, v) in b.iter() {
                let args: Vec<usize> = k.extract()?;
                let mut value = vec![Rational::from_integer(0.into()); dim];
                for (i, c) in v.cast::<PyDict>()?.iter() {
                    let i: usize = i.extract()?;
                    if i == 0 || i > dim {
                        return Err(err(Error::IndexOutOfRange { index: i, dim }));
                    }
                    value[i - 1] = to_rational(&c)?;
                }
                raw.push((args, value));
            }
        }
        Ok(Self { inner: StructureConstants::canonicalize(arity, dim, raw).map_err(err)? })
    }

    #[staticmethod]
    #[pyo3(signature = (id, params = None))]
    fn from_catalog(id: &str, params: Option<&Bound<'_, PyDict>>) -> PyResult<Self> {
        Ok(Self { inner: catalog::catalog_get(id, &to_params(params)?).map_err(err)? })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let (inner, _) = parse_document(text).and_then(|d| d.to_algebra()).map_err(err)?;
        Ok(Self { inner })
    }

    #[pyo3(signature = (name = "algebra"))]
    fn to_json(&self, name: &str) -> String {
        print_document(&AlgebraDocument::from_algebra(name, &self.inner, None))
    }

    #[getter]
    fn arity(&self) -> usize {
        self.inner.arity()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn brackets<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let out = PyDict::new(py);
        for (args, v) in self.inner.to_raw() {
            let value = PyDict::new(py);
            for (i, c) in v.iter().enumerate().filter(|(_, c)| **c != Rational::from_integer(0.into())) {
                value.set_item(i + 1, to_fraction(py, c)?)?;
            }
            out.set_item(PyTuple::new(py, args)?, value)?;
        }
        Ok(out)
    }

    /// Whether the Jacobi (arity 2) or fundamental identity holds.
    fn verify(&self) -> bool {
        self.inner.verify_identity().is_ok()
    }

    /// Basis of the trace space, each form as a list of coefficients.
    fn trace_space<'py>(&self, py: Python<'py>) -> PyResult<Vec<Vec<Bound<'py, PyAny>>>> {
        trace_space(&self.inner).basis().iter().map(|t| fractions(py, t.coeffs())).collect()
    }

    fn induce(&self, trace: Vec<Bound<'_, PyAny>>) -> PyResult<Self> {
        Ok(Self { inner: induce_bracket(&self.inner, &to_form(&trace)?).map_err(err)? })
    }

    fn derived_series_dims(&self) -> Vec<usize> {
        derived_series(&self.inner).dims()
    }

    fn central_series_dims(&self) -> Vec<usize> {
        central_series(&self.inner).dims()
    }

    fn center<'py>(&self, py: Python<'py>) -> PyResult<Vec<Vec<Bound<'py, PyAny>>>> {
        center(&self.inner).basis_vectors().iter().map(|v| fractions(py, v)).collect()
    }

    /// `(dim Z, dim B, dim H)`; `theory` is "lie" or "trilie", `coeffs`
    /// is "adjoint" or "scalar".
    fn cohomology(&self, theory: &str, coeffs: &str, degree: usize) -> PyResult<(usize, usize, usize)> {
        let theory = match theory {
            "lie" => Theory::Lie,
            "trilie" => Theory::TriLie,
            other => return Err(PyValueError::new_err(format!("unknown theory {other}"))),
        };
        let coeffs = match coeffs {
            "adjoint" => Coeffs::Adjoint,
            "scalar" => Coeffs::Scalar,
            other => return Err(PyValueError::new_err(format!("unknown coefficients {other}"))),
        };
        let r = cohomology_report(&self.inner, theory, coeffs, degree).map_err(err)?;
        Ok((r.dim_z, r.dim_b, r.dim_h))
    }

    /// `(i0, lie algebra, trace)` with 1-based `i0`, or `None`.
    fn recognize<'py>(&self, py: Python<'py>) -> PyResult<Option<(usize, Self, Vec<Bound<'py, PyAny>>)>> {
        catalog::recognize_induced(&self.inner)
            .map(|r| Ok((r.i0 + 1, Self { inner: r.lie }, fractions(py, r.tau.coeffs())?)))
            .transpose()
    }

    /// Central extension by a scalar 2-cocycle given as `{index tuple: value}`.
    fn central_extend(&self, cocycle: &Bound<'_, PyDict>) -> PyResult<Self> {
        let omega = scalar_cochain(&self.inner, cocycle)?;
        Ok(Self { inner: central_extend(&self.inner, &omega).map_err(err)?.total })
    }

    fn is_trivial_extension(&self, cocycle: &Bound<'_, PyDict>) -> PyResult<bool> {
        let omega = scalar_cochain(&self.inner, cocycle)?;
        is_trivial_extension(&self.inner, &omega).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Algebra(arity={}, dim={}, {})", self.inner.arity(), self.inner.dim(), self.inner)
    }
}

fn scalar_cochain(a: &StructureConstants, cocycle: &Bound<'_, PyDict>) -> PyResult<Cochain> {
    let theory = if a.arity() == 2 { Theory::Lie } else { Theory::TriLie };
    let mut raw = Vec::new();
    for (k, v) in cocycle.iter() {
        raw.push((k.extract::<Vec<usize>>()?, vec![to_rational(&v)?]));
    }
    Cochain::from_assignments(theory, Coeffs::Scalar, 2, a.dim(), raw).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (arity = None, dim = None))]
fn catalog_ids(arity: Option<usize>, dim: Option<usize>) -> Vec<&'static str> {
    catalog::catalog_list(arity, dim).iter().map(|c| c.id).collect()
}

/// `(id, flag)` for every 3-Lie catalog entry of dimension at most 5.
#[pyfunction]
fn induced_classification() -> Vec<(&'static str, &'static str)> {
    catalog::induced_classification(5).iter().map(|r| (r.id, r.flag.name())).collect()
}

/// Rendered trace-table row of a Lie catalog entry.
#[pyfunction]
#[pyo3(signature = (id, params = None))]
fn table6(id: &str, params: Option<&Bound<'_, PyDict>>) -> PyResult<String> {
    Ok(catalog::table6(id, &to_params(params)?).map_err(err)?.to_string())
}

#[pymodule]
fn trilie(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlgebra>()?;
    m.add_function(wrap_pyfunction!(catalog_ids, m)?)?;
    m.add_function(wrap_pyfunction!(induced_classification, m)?)?;
    m.add_function(wrap_pyfunction!(table6, m)?)?;
    Ok(())
}
