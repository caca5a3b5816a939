//! Python bindings. Reports are returned as plain dicts and lists, built from
//! the same JSON the command-line tool prints.

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use hnkac_core as core;
use hnkac_core::json::{PolynomialJson, QuiverFile};
use hnkac_core::{DimVector, Guards, HnType, LaurentPolynomial, Stability};

create_exception!(hnkac, GuardExceeded, PyRuntimeError);
create_exception!(hnkac, InconsistencyError, PyRuntimeError);

fn to_py(e: core::Error) -> PyErr {
    match e.exit_code() {
        2 => PyValueError::new_err(e.to_string()),
        3 => GuardExceeded::new_err(e.to_string()),
        _ => InconsistencyError::new_err(e.to_string()),
    }
}

fn json_value<'py, T: serde::Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text =
        serde_json::to_string(value).map_err(|e| InconsistencyError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

/// A loop-free quiver with arrow multiplicities.
#[pyclass(name = "Quiver", module = "hnkac", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyQuiver {
    inner: core::Quiver,
}

#[pymethods]
impl PyQuiver {
    /// `Quiver(["1", "2"], [("1", "2", 3)])`
    #[new]
    fn new(vertices: Vec<String>, arrows: Vec<(String, String, u32)>) -> PyResult<Self> {
        let names: Vec<&str> = vertices.iter().map(String::as_str).collect();
        let arrows: Vec<(&str, &str, u32)> = arrows
            .iter()
            .map(|(s, t, m)| (s.as_str(), t.as_str(), *m))
            .collect();
        let inner = core::Quiver::from_named(&names, &arrows).map_err(to_py)?;
        Ok(PyQuiver { inner })
    }

    #[staticmethod]
    fn kronecker(m: u32) -> PyResult<Self> {
        if m == 0 {
            return Err(PyValueError::new_err(
                "Kronecker quiver needs at least one arrow",
            ));
        }
        Ok(PyQuiver {
            inner: core::Quiver::kronecker(m),
        })
    }

    #[staticmethod]
    fn point() -> Self {
        PyQuiver {
            inner: core::Quiver::point(),
        }
    }

    #[staticmethod]
    fn triangle() -> Self {
        PyQuiver {
            inner: core::Quiver::triangle(),
        }
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyQuiver {
            inner: core::json::parse_quiver(text).map_err(to_py)?,
        })
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&QuiverFile::from_quiver(&self.inner))
            .map_err(|e| InconsistencyError::new_err(e.to_string()))
    }

    #[getter]
    fn vertices(&self) -> Vec<String> {
        self.inner.vertices().to_vec()
    }

    #[getter]
    fn arrows(&self) -> Vec<(String, String, u32)> {
        let names = self.inner.vertices();
        self.inner
            .arrows()
            .iter()
            .map(|a| (names[a.source].clone(), names[a.target].clone(), a.mult))
            .collect()
    }

    fn multiply_edges(&self, n: u32) -> PyResult<Self> {
        Ok(PyQuiver {
            inner: self.inner.multiply_edges(n).map_err(to_py)?,
        })
    }

    fn double(&self) -> Self {
        PyQuiver {
            inner: self.inner.double(),
        }
    }

    fn opposite(&self) -> Self {
        PyQuiver {
            inner: self.inner.opposite(),
        }
    }

    fn euler_form(&self, v: Vec<u32>, w: Vec<u32>) -> PyResult<i64> {
        self.inner
            .euler_form(&DimVector::new(v), &DimVector::new(w))
            .map_err(to_py)
    }

    fn sym_euler_form(&self, v: Vec<u32>, w: Vec<u32>) -> PyResult<i64> {
        self.inner
            .sym_euler_form(&DimVector::new(v), &DimVector::new(w))
            .map_err(to_py)
    }

    /// `"real"`, `"imaginary"` or `"not_root"`.
    fn classify_root(&self, alpha: Vec<u32>) -> PyResult<String> {
        let class = self
            .inner
            .classify_root(&DimVector::new(alpha))
            .map_err(to_py)?;
        Ok(match class {
            core::RootClass::RealRoot => "real",
            core::RootClass::ImaginaryRoot => "imaginary",
            core::RootClass::NotRoot => "not_root",
        }
        .to_string())
    }

    fn dim_rep(&self, alpha: Vec<u32>) -> PyResult<i64> {
        self.inner.dim_rep(&DimVector::new(alpha)).map_err(to_py)
    }

    fn dim_mu_zero(&self, alpha: Vec<u32>) -> PyResult<i64> {
        self.inner
            .dim_mu_zero(&DimVector::new(alpha))
            .map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!("Quiver({:?}, {:?})", self.vertices(), self.arrows())
    }
}

/// Laurent polynomial in `q` with exact rational coefficients.
#[pyclass(name = "Polynomial", module = "hnkac", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyPolynomial {
    inner: LaurentPolynomial,
}

#[pymethods]
impl PyPolynomial {
    /// Integer coefficients, constant term first.
    #[new]
    fn new(coeffs: Vec<i64>) -> Self {
        PyPolynomial {
            inner: LaurentPolynomial::from_coeffs(&coeffs),
        }
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyPolynomial {
            inner: core::json::parse_polynomial(text).map_err(to_py)?,
        })
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&PolynomialJson::from_polynomial(&self.inner))
            .map_err(|e| InconsistencyError::new_err(e.to_string()))
    }

    /// `[(exponent, fractions.Fraction)]` in increasing exponent order.
    fn terms<'py>(&self, py: Python<'py>) -> PyResult<Vec<(i64, Bound<'py, PyAny>)>> {
        let fraction = py.import("fractions")?.getattr("Fraction")?;
        self.inner
            .terms()
            .map(|(e, c)| Ok((e, fraction.call1((c.numer().clone(), c.denom().clone()))?)))
            .collect()
    }

    #[getter]
    fn degree(&self) -> Option<i64> {
        self.inner.degree().ok()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// Value at an integer point, as a `fractions.Fraction`.
    fn __call__<'py>(&self, py: Python<'py>, q: i64) -> PyResult<Bound<'py, PyAny>> {
        let v = self.inner.eval_at(&core::poly::integer(q)).map_err(to_py)?;
        let fraction = py.import("fractions")?.getattr("Fraction")?;
        fraction.call1((v.numer().clone(), v.denom().clone()))
    }

    fn __add__(&self, other: &Self) -> Self {
        PyPolynomial {
            inner: &self.inner + &other.inner,
        }
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyPolynomial {
            inner: &self.inner * &other.inner,
        }
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial({})", self.inner)
    }
}

fn hn_type(parts: Vec<Vec<u32>>) -> PyResult<HnType> {
    HnType::new(parts.into_iter().map(DimVector::new).collect()).map_err(to_py)
}

fn guards() -> PyResult<Guards> {
    match std::env::var("HNKAC_GUARD_SCALE") {
        Ok(s) => Guards::default()
            .scaled(&core::parse_scale(&s).map_err(to_py)?)
            .map_err(to_py),
        Err(_) => Ok(Guards::default()),
    }
}

/// Kac polynomial of an indivisible dimension vector.
#[pyfunction]
fn kac_polynomial(quiver: &PyQuiver, alpha: Vec<u32>) -> PyResult<PyPolynomial> {
    Ok(PyPolynomial {
        inner: core::kac_polynomial(&quiver.inner, &DimVector::new(alpha)).map_err(to_py)?,
    })
}

#[pyfunction]
fn hn_types(quiver: &PyQuiver, alpha: Vec<u32>, theta: Vec<i64>) -> PyResult<Vec<Vec<Vec<u32>>>> {
    let types = core::enumerate_hn_types(
        &quiver.inner,
        &DimVector::new(alpha),
        &Stability::new(theta),
    )
    .map_err(to_py)?;
    Ok(types
        .iter()
        .map(|t| t.parts().iter().map(|p| p.coords().to_vec()).collect())
        .collect())
}

#[pyfunction]
fn strata_report<'py>(
    py: Python<'py>,
    quiver: &PyQuiver,
    alpha: Vec<u32>,
    theta: Vec<i64>,
) -> PyResult<Bound<'py, PyAny>> {
    let r = core::strata_report(
        &quiver.inner,
        &DimVector::new(alpha),
        &Stability::new(theta),
        &guards()?,
    )
    .map_err(to_py)?;
    json_value(py, &r)
}

/// Buckets as `(key, Polynomial)` pairs plus the Kac polynomial and the
/// degree/codimension checks.
#[pyfunction]
fn decompose<'py>(
    py: Python<'py>,
    quiver: &PyQuiver,
    alpha: Vec<u32>,
    theta: Vec<i64>,
) -> PyResult<Bound<'py, PyAny>> {
    let r = core::stratified_decomposition(
        &quiver.inner,
        &DimVector::new(alpha),
        &Stability::new(theta),
    )
    .map_err(to_py)?;
    let out = pyo3::types::PyDict::new(py);
    let buckets = r
        .buckets
        .iter()
        .map(|b| {
            Ok((
                b.key.to_string(),
                PyPolynomial {
                    inner: b.polynomial.clone(),
                },
            ))
        })
        .collect::<PyResult<Vec<_>>>()?;
    out.set_item("buckets", buckets)?;
    out.set_item(
        "kac",
        PyPolynomial {
            inner: r.kac.clone(),
        },
    )?;
    out.set_item("checks", json_value(py, &r.checks)?)?;
    Ok(out.into_any())
}

#[pyfunction]
fn verify_shift<'py>(
    py: Python<'py>,
    quiver: &PyQuiver,
    alpha: Vec<u32>,
    theta: Vec<i64>,
    n1: u32,
    n2: u32,
) -> PyResult<Bound<'py, PyAny>> {
    let r = core::verify_bucket_shift(
        &quiver.inner,
        &DimVector::new(alpha),
        &Stability::new(theta),
        n1,
        n2,
    )
    .map_err(to_py)?;
    json_value(py, &r)
}

#[pyfunction]
fn stabilization<'py>(
    py: Python<'py>,
    quiver: &PyQuiver,
    alpha: Vec<u32>,
    n_from: u32,
    n_to: u32,
    k: u32,
) -> PyResult<Bound<'py, PyAny>> {
    let r = core::stabilization_study(&quiver.inner, &DimVector::new(alpha), n_from, n_to, k)
        .map_err(to_py)?;
    json_value(py, &r)
}

/// Brute-force count over `F_q` next to the engine value.
#[pyfunction]
fn oracle<'py>(
    py: Python<'py>,
    quiver: &PyQuiver,
    alpha: Vec<u32>,
    q: u32,
) -> PyResult<Bound<'py, PyAny>> {
    let r = core::check_against_engine(&quiver.inner, &DimVector::new(alpha), q, &guards()?)
        .map_err(to_py)?;
    json_value(py, &r)
}

#[pyfunction]
fn epsilon(parts: Vec<Vec<u32>>) -> PyResult<u32> {
    Ok(hn_type(parts)?.epsilon())
}

#[pyfunction]
fn codim_moment(quiver: &PyQuiver, parts: Vec<Vec<u32>>) -> PyResult<i64> {
    core::strata::codim_moment(&quiver.inner, &hn_type(parts)?).map_err(to_py)
}

#[pyfunction]
fn s0_commutant_dim(quiver: &PyQuiver, parts: Vec<Vec<u32>>) -> PyResult<u64> {
    core::strata::s0_commutant_dim(&quiver.inner, &hn_type(parts)?, &guards()?).map_err(to_py)
}

#[pymodule]
fn hnkac(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyQuiver>()?;
    m.add_class::<PyPolynomial>()?;
    m.add("GuardExceeded", m.py().get_type::<GuardExceeded>())?;
    m.add(
        "InconsistencyError",
        m.py().get_type::<InconsistencyError>(),
    )?;
    m.add_function(wrap_pyfunction!(kac_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(hn_types, m)?)?;
    m.add_function(wrap_pyfunction!(strata_report, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(verify_shift, m)?)?;
    m.add_function(wrap_pyfunction!(stabilization, m)?)?;
    m.add_function(wrap_pyfunction!(oracle, m)?)?;
    m.add_function(wrap_pyfunction!(epsilon, m)?)?;
    m.add_function(wrap_pyfunction!(codim_moment, m)?)?;
    m.add_function(wrap_pyfunction!(s0_commutant_dim, m)?)?;
    Ok(())
}
