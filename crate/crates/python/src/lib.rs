//! Python bindings: exact series, mock theta coefficients, partition family
//! counts and the identity verifier.
//!
//! Coefficients cross the boundary as Python ints, so nothing overflows.

use num_bigint::BigInt;
use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;

use qplab_core::partitions::{self, Family, FamilySpec};
use qplab_core::qengine::{self, DenominatorFactor, Parameter};
use qplab_core::registry::{self, IdentityReport, Status, Verifier};
use qplab_core::special::{self, Argument, Form, MockTheta, MockThetaForm};
use qplab_core::{Comparison, Series};

fn value_error(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A power series known exactly through `q^order`.
#[pyclass(name = "Series", module = "qplab", frozen, from_py_object)]
#[derive(Clone)]
pub struct PySeries {
    inner: Series,
}

impl From<Series> for PySeries {
    fn from(inner: Series) -> Self {
        PySeries { inner }
    }
}

#[derive(FromPyObject)]
enum Operand {
    Series(PySeries),
    Int(BigInt),
}

#[pymethods]
impl PySeries {
    /// `Series(coeffs, order=None)`; a missing order means `len(coeffs) - 1`.
    #[new]
    #[pyo3(signature = (coeffs, order=None))]
    fn new(coeffs: Vec<BigInt>, order: Option<usize>) -> PyResult<Self> {
        let order = match (order, coeffs.len()) {
            (Some(o), _) => o,
            (None, 0) => return Err(value_error("empty coefficient list needs an order")),
            (None, n) => n - 1,
        };
        Ok(Series::from_coeffs(coeffs, order).into())
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn coeffs(&self) -> Vec<BigInt> {
        self.inner.coeffs().to_vec()
    }

    fn __len__(&self) -> usize {
        self.inner.order() + 1
    }

    fn __getitem__(&self, n: usize) -> PyResult<BigInt> {
        self.inner
            .coeff_at(n)
            .cloned()
            .map_err(|e| pyo3::exceptions::PyIndexError::new_err(e.to_string()))
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        let c: Vec<String> = self
            .inner
            .coeffs()
            .iter()
            .map(ToString::to_string)
            .collect();
        format!("Series([{}], order={})", c.join(", "), self.inner.order())
    }

    fn __add__(&self, other: &Self) -> Self {
        (&self.inner + &other.inner).into()
    }

    fn __sub__(&self, other: &Self) -> Self {
        (&self.inner - &other.inner).into()
    }

    fn __neg__(&self) -> Self {
        (-&self.inner).into()
    }

    fn __mul__(&self, other: Operand) -> Self {
        match other {
            Operand::Series(s) => self.inner.mul(&s.inner).into(),
            Operand::Int(c) => self.inner.scale(&c).into(),
        }
    }

    fn __rmul__(&self, other: BigInt) -> Self {
        self.inner.scale(&other).into()
    }

    fn __pow__(&self, k: u32, _modulo: Option<Py<PyAny>>) -> Self {
        self.inner.pow(k).into()
    }

    fn invert(&self) -> PyResult<Self> {
        self.inner.invert().map(Into::into).map_err(value_error)
    }

    fn truncate(&self, order: usize) -> Self {
        self.inner.truncate(order).into()
    }

    /// Multiply by `q^k`; the order stays the same.
    fn shift(&self, k: usize) -> Self {
        self.inner.shift(k).into()
    }

    /// `q -> q^k`
    fn substitute_power(&self, k: usize) -> PyResult<Self> {
        self.inner
            .substitute_power(k)
            .map(Into::into)
            .map_err(value_error)
    }

    /// `q -> -q`
    fn negate_variable(&self) -> Self {
        self.inner.negate_variable().into()
    }

    /// `None` when equal through `q^n`, else `(index, lhs, rhs)` of the
    /// first difference.
    fn first_mismatch(&self, other: &Self, n: usize) -> PyResult<Option<(usize, BigInt, BigInt)>> {
        match self
            .inner
            .equal_up_to(&other.inner, n)
            .map_err(value_error)?
        {
            Comparison::Equal { .. } => Ok(None),
            Comparison::Mismatch { index, lhs, rhs } => Ok(Some((index, lhs, rhs))),
        }
    }
}

/// Outcome of checking one registered identity.
#[pyclass(name = "Report", module = "qplab", frozen, get_all)]
pub struct PyReport {
    id: String,
    order: usize,
    /// "pass", "mismatch" or "skipped"
    status: String,
    /// `(n, lhs, rhs)` for a mismatch
    mismatch: Option<(usize, BigInt, BigInt)>,
    notes: String,
    elapsed_ms: u64,
    negative_control: bool,
}

#[pymethods]
impl PyReport {
    #[getter]
    fn passed(&self) -> bool {
        self.status == "pass"
    }

    fn __repr__(&self) -> String {
        format!(
            "Report(id={:?}, order={}, status={:?})",
            self.id, self.order, self.status
        )
    }
}

impl From<IdentityReport> for PyReport {
    fn from(r: IdentityReport) -> Self {
        let status = r.status.label().to_string();
        let (mismatch, notes) = match r.status {
            Status::Mismatch { index, lhs, rhs } => (Some((index, lhs, rhs)), r.notes),
            Status::Skipped { reason } if r.notes.is_empty() => (None, reason),
            Status::Skipped { reason } => (None, format!("{} | {reason}", r.notes)),
            Status::Pass => (None, r.notes),
        };
        PyReport {
            id: r.id,
            order: r.order,
            status,
            mismatch,
            notes,
            elapsed_ms: r.elapsed.as_millis() as u64,
            negative_control: r.negative_control,
        }
    }
}

fn family(name: &str) -> PyResult<Family> {
    name.parse().map_err(value_error)
}

fn spec(name: &str) -> PyResult<FamilySpec> {
    Ok(family(name)?.spec())
}

/// `mock_theta("omega" | "psi" | "nu", order, form="defining" | "fine" | "ady", argument="q" | "-q")`
#[pyfunction]
#[pyo3(signature = (function, order, form="defining", argument="q"))]
fn mock_theta(function: &str, order: usize, form: &str, argument: &str) -> PyResult<PySeries> {
    let function = match function {
        "omega" => MockTheta::Omega,
        "psi" => MockTheta::Psi,
        "nu" => MockTheta::Nu,
        other => {
            return Err(value_error(format!(
                "unknown mock theta function '{other}'"
            )))
        }
    };
    let form = match form {
        "defining" => Form::Defining,
        "fine" => Form::Fine,
        "ady" => Form::Ady,
        other => return Err(value_error(format!("unknown form '{other}'"))),
    };
    let argument = match argument {
        "q" => Argument::Q,
        "-q" => Argument::NegQ,
        other => return Err(value_error(format!("unknown argument '{other}'"))),
    };
    special::mock_theta(MockThetaForm::new(function, form, argument), order)
        .map(Into::into)
        .map_err(value_error)
}

/// `sum_{n in Z} q^{n^2}`, alternating with `(-1)^n` on request.
#[pyfunction]
#[pyo3(signature = (order, alternating=false))]
fn theta_squares(order: usize, alternating: bool) -> PySeries {
    special::theta_squares(order, alternating).into()
}

/// `(a;q^base)_length` with `a = q^exponent`, or `-q^exponent` when negated;
/// infinite when `length` is omitted.
#[pyfunction]
#[pyo3(signature = (exponent, base, order, negated=false, length=None))]
fn poch(
    exponent: u32,
    base: u32,
    order: usize,
    negated: bool,
    length: Option<u32>,
) -> PyResult<PySeries> {
    let a = if negated {
        Parameter::neg_q(exponent)
    } else {
        Parameter::q(exponent)
    };
    match length {
        Some(m) => Ok(qengine::poch_finite(a, base, m, order).into()),
        None => qengine::poch_infinite(a, base, order)
            .map(Into::into)
            .map_err(value_error),
    }
}

/// Expansion of `numerator / prod (1 -/+ q^e)^m`; each denominator factor is
/// `(sign, e, m)` with sign `"-"` or `"+"`.
#[pyfunction]
fn rational_series(
    numerator: Vec<i64>,
    denominator: Vec<(String, u32, u32)>,
    order: usize,
) -> PyResult<PySeries> {
    let factors = denominator
        .into_iter()
        .map(|(sign, e, m)| match sign.as_str() {
            "-" => Ok(DenominatorFactor::minus(e, m)),
            "+" => Ok(DenominatorFactor::plus(e, m)),
            other => Err(value_error(format!(
                "factor sign must be '-' or '+', got '{other}'"
            ))),
        })
        .collect::<PyResult<Vec<_>>>()?;
    qengine::rational_series(&numerator, &factors, order)
        .map(Into::into)
        .map_err(value_error)
}

/// The family's generating function from its smallest-part template.
#[pyfunction]
#[pyo3(signature = (family_id, order, signed=false))]
fn family_series(family_id: &str, order: usize, signed: bool) -> PyResult<PySeries> {
    family(family_id)?
        .generating_function(signed)
        .expand(order)
        .map(Into::into)
        .map_err(value_error)
}

/// The family's series by exhaustive enumeration.
#[pyfunction]
#[pyo3(signature = (family_id, order, weighted=false, budget=partitions::DEFAULT_ENUMERATION_BUDGET))]
fn brute_force_series(
    family_id: &str,
    order: usize,
    weighted: bool,
    budget: usize,
) -> PyResult<PySeries> {
    partitions::brute_force_series(&spec(family_id)?, order, weighted, budget)
        .map(Into::into)
        .map_err(value_error)
}

/// Members of size `n` in listing order, rendered like `3b+1g`.
#[pyfunction]
fn enumerate_family(family_id: &str, n: u32) -> PyResult<Vec<String>> {
    Ok(partitions::enumerate_family(&spec(family_id)?, n)
        .iter()
        .map(ToString::to_string)
        .collect())
}

#[pyfunction]
#[pyo3(signature = (family_id, n, weighted=false))]
fn count_family(family_id: &str, n: u32, weighted: bool) -> PyResult<i64> {
    Ok(partitions::count_family(&spec(family_id)?, n, weighted))
}

/// Parity breakdown: `(even_evens, odd_evens, even_length, odd_length)`.
#[pyfunction]
fn family_statistics(family_id: &str, n: u32) -> PyResult<(i64, i64, i64, i64)> {
    let s = partitions::statistics(&spec(family_id)?, n);
    Ok((s.even_evens, s.odd_evens, s.even_length, s.odd_length))
}

#[pyfunction]
#[pyo3(signature = (n, odd_only=false))]
fn count_overpartitions(n: u32, odd_only: bool) -> u64 {
    partitions::count_overpartitions(n, odd_only)
}

#[pyfunction]
#[pyo3(signature = (n, distinct=false, allow_zero=false))]
fn count_ady(n: u32, distinct: bool, allow_zero: bool) -> PyResult<u64> {
    partitions::count_ady(n, distinct, allow_zero).map_err(value_error)
}

/// Registered identity ids, sorted.
#[pyfunction]
fn list_identities() -> Vec<String> {
    registry::list_identities()
        .into_iter()
        .map(|c| c.id)
        .collect()
}

/// Checks one identity; `order` defaults to the case's own.
#[pyfunction]
#[pyo3(signature = (id, order=None, enum_order=registry::DEFAULT_ENUMERATION_ORDER))]
fn verify(id: &str, order: Option<usize>, enum_order: usize) -> PyResult<PyReport> {
    let case = registry::find_identity(id).map_err(|e| PyKeyError::new_err(e.to_string()))?;
    let order = order.unwrap_or(case.default_order);
    Ok(Verifier::new(enum_order).verify_case(&case, order).into())
}

#[pyfunction]
#[pyo3(signature = (order=registry::DEFAULT_SERIES_ORDER, enum_order=registry::DEFAULT_ENUMERATION_ORDER))]
fn verify_all(py: Python<'_>, order: usize, enum_order: usize) -> Vec<PyReport> {
    py.detach(|| Verifier::new(enum_order).verify_all(order))
        .into_iter()
        .map(Into::into)
        .collect()
}

#[pymodule]
fn qplab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySeries>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(mock_theta, m)?)?;
    m.add_function(wrap_pyfunction!(theta_squares, m)?)?;
    m.add_function(wrap_pyfunction!(poch, m)?)?;
    m.add_function(wrap_pyfunction!(rational_series, m)?)?;
    m.add_function(wrap_pyfunction!(family_series, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_series, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_family, m)?)?;
    m.add_function(wrap_pyfunction!(count_family, m)?)?;
    m.add_function(wrap_pyfunction!(family_statistics, m)?)?;
    m.add_function(wrap_pyfunction!(count_overpartitions, m)?)?;
    m.add_function(wrap_pyfunction!(count_ady, m)?)?;
    m.add_function(wrap_pyfunction!(list_identities, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all, m)?)?;
    Ok(())
}
