//! Python bindings. Structured values cross the boundary as JSON strings in the same
//! schemas the command-line tool uses.

use engine::chern::{nonempty_verdict, reduce_class, ChernData as CoreChern};
use engine::extension::{end0t_dimension, stratum_classify, ExtParams};
use engine::higgs::{graded_object, is_integrable, section_q, stability_classify, validate_field};
use engine::json::*;
use engine::spectral::{fibre_decomposability, hitchin_map, rho_consistent};
use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;
use serde_json::Value;

fn domain(e: engine::Error) -> PyErr {
    PyArithmeticError::new_err(format!("{}: {}", e.kind(), e))
}

fn parse(s: &str) -> PyResult<Value> {
    serde_json::from_str(s).map_err(|e| PyValueError::new_err(e.to_string()))
}

fn schema(e: SchemaError) -> PyErr {
    PyValueError::new_err(e.0)
}

fn dump<T: serde::Serialize>(x: &T) -> String {
    serde_json::to_string(x).expect("plain data serializes")
}

fn rat(s: &str) -> PyResult<engine::Rat> {
    engine::exactalg::parse_rat(s)
        .ok_or_else(|| PyValueError::new_err(format!("not a rational: {s}")))
}

/// Chern data `c1 = alpha C0 + beta F`, `c2 = gamma`.
#[pyclass(frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct ChernData(CoreChern);

#[pymethods]
impl ChernData {
    #[new]
    fn new(alpha: i64, beta: i64, gamma: i64) -> Self {
        ChernData(CoreChern::new(alpha, beta, gamma))
    }

    #[getter]
    fn alpha(&self) -> i64 {
        self.0.alpha
    }

    #[getter]
    fn beta(&self) -> i64 {
        self.0.beta
    }

    #[getter]
    fn gamma(&self) -> i64 {
        self.0.gamma
    }

    fn twist(&self, a: i64, b: i64) -> Self {
        ChernData(self.0.twist(engine::cohomology::LineBundle::new(a, b)))
    }

    fn nonempty(&self) -> bool {
        nonempty_verdict(self.0).nonempty
    }

    fn verdict(&self) -> String {
        dump(&nonempty_verdict(self.0))
    }

    fn reduced(&self) -> String {
        dump(&reduce_class(self.0))
    }

    fn __repr__(&self) -> String {
        format!(
            "ChernData({}, {}, {})",
            self.0.alpha, self.0.beta, self.0.gamma
        )
    }
}

/// Co-Higgs field on a split bundle.
#[pyclass(frozen)]
struct HiggsField(engine::higgs::HiggsField);

#[pymethods]
impl HiggsField {
    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        Ok(HiggsField(field_from_json(&parse(s)?).map_err(schema)?))
    }

    fn to_json(&self) -> String {
        field_to_json(&self.0).to_string()
    }

    fn is_valid(&self) -> bool {
        validate_field(&self.0)
    }

    fn is_integrable(&self) -> bool {
        is_integrable(&self.0)
    }

    fn stability(&self) -> PyResult<String> {
        let s = stability_classify(&self.0).map_err(domain)?;
        Ok(dump(&s).trim_matches('"').to_string())
    }

    fn graded(&self) -> PyResult<Self> {
        graded_object(&self.0).map(HiggsField).map_err(domain)
    }

    /// `(rho1, rho12, rho2)` as spectral-data JSON.
    fn hitchin(&self) -> PyResult<String> {
        let s = hitchin_map(&self.0).map_err(domain)?;
        Ok(spectral_to_json(&s).to_string())
    }
}

#[pyfunction]
fn h_dims(a: i64, b: i64) -> (u64, u64, u64) {
    let h = engine::cohomology::h_dims(a, b);
    (h.h0, h.h1, h.h2)
}

#[pyfunction]
fn ext_dims(u: &str, v: &str) -> PyResult<(usize, usize, usize)> {
    let d = end0t_dimension(&ExtParams::new(rat(u)?, rat(v)?)).map_err(domain)?;
    Ok((d.dim20, d.dim02, d.total))
}

#[pyfunction]
fn classify_point(point_json: &str) -> PyResult<String> {
    let m = point_from_json(&parse(point_json)?).map_err(schema)?;
    Ok(point_to_json(&stratum_classify(&m).map_err(domain)?).to_string())
}

/// `Q(rho)` for a polynomial in JSON form; `axis` is 1 or 2.
#[pyfunction]
fn section_q_field(rho_json: &str, axis: u8) -> PyResult<HiggsField> {
    let rho = bipoly_from_json(&parse(rho_json)?).map_err(schema)?;
    let axis = engine::Axis::from_index(axis)
        .ok_or_else(|| PyValueError::new_err("axis must be 1 or 2"))?;
    section_q(&rho, axis).map(HiggsField).map_err(domain)
}

#[pyfunction]
fn spectral_class(rho_json: &str) -> PyResult<String> {
    let s = spectral_from_json(&parse(rho_json)?).map_err(schema)?;
    let c = fibre_decomposability(&s).map_err(domain)?;
    Ok(dump(&c).trim_matches('"').to_string())
}

#[pyfunction]
fn spectral_consistent(rho_json: &str) -> PyResult<bool> {
    Ok(rho_consistent(
        &spectral_from_json(&parse(rho_json)?).map_err(schema)?,
    ))
}

#[pymodule]
fn cohiggs(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<ChernData>()?;
    m.add_class::<HiggsField>()?;
    m.add_function(wrap_pyfunction!(h_dims, m)?)?;
    m.add_function(wrap_pyfunction!(ext_dims, m)?)?;
    m.add_function(wrap_pyfunction!(classify_point, m)?)?;
    m.add_function(wrap_pyfunction!(section_q_field, m)?)?;
    m.add_function(wrap_pyfunction!(spectral_class, m)?)?;
    m.add_function(wrap_pyfunction!(spectral_consistent, m)?)?;
    Ok(())
}
