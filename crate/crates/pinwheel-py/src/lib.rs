//! Python bindings: exact psi/omega/kappa intersection numbers as
//! `fractions.Fraction` values, plus the symbolic pinwheel expansion.
//!
//! One process-wide oracle backs every call, so repeated queries share the
//! memo table exactly like the Rust API and the CLI do.

use std::sync::OnceLock;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use pinwheel::expansion::{
    expand_graph_formula, expand_graph_formula_simplified, OmegaMonomial, PinwheelTerm,
};
use pinwheel::omega_kappa::KappaMonomial;
use pinwheel::render::{render_expansion, OutputFormat};
use pinwheel::{Error, PsiOracle, Rational};

fn oracle() -> &'static PsiOracle {
    static ORACLE: OnceLock<PsiOracle> = OnceLock::new();
    ORACLE.get_or_init(PsiOracle::new)
}

fn to_py_err(err: Error) -> PyErr {
    match err {
        Error::InvalidInput(msg) => PyValueError::new_err(msg),
        other => PyRuntimeError::new_err(other.to_string()),
    }
}

/// `<tau_{k_1} ... tau_{k_n}>_g` as an exact Fraction.
#[pyfunction]
fn psi_top(genus: u32, exponents: Vec<u64>) -> PyResult<Rational> {
    oracle().psi_top(genus, &exponents).map_err(to_py_err)
}

/// Genus-zero closed form `(n-3)! / prod k_i!`; errors off its domain.
#[pyfunction]
fn psi_top_genus0_closed(exponents: Vec<u64>) -> PyResult<Rational> {
    pinwheel::psi_top_genus0_closed(&exponents).map_err(to_py_err)
}

/// Top intersection of `prod omega_i^{k_i}` on the genus-g n-marked space.
#[pyfunction]
fn omega_top(genus: u32, exponents: Vec<u64>) -> PyResult<Rational> {
    let monomial = OmegaMonomial::new(genus, exponents).map_err(to_py_err)?;
    pinwheel::omega_top(oracle(), &monomial).map_err(to_py_err)
}

/// Top intersection of `prod kappa_{l_i}` on the unmarked genus-g space.
#[pyfunction]
fn kappa_top(genus: u32, indices: Vec<u64>) -> PyResult<Rational> {
    let monomial = KappaMonomial::new(genus, indices).map_err(to_py_err)?;
    pinwheel::kappa_top(oracle(), &monomial).map_err(to_py_err)
}

/// Expand, then integrate term by term; must agree with `omega_top`.
#[pyfunction]
fn integrate_expansion(genus: u32, exponents: Vec<u64>) -> PyResult<Rational> {
    let monomial = OmegaMonomial::new(genus, exponents).map_err(to_py_err)?;
    pinwheel::integrate_expansion(oracle(), &monomial).map_err(to_py_err)
}

/// Whether `omega_top(g, l+1) == kappa_top(g, l)`; true on every valid input.
#[pyfunction]
fn check_pushforward_identity(genus: u32, indices: Vec<u64>) -> PyResult<bool> {
    pinwheel::check_pushforward_identity(oracle(), genus, &indices).map_err(to_py_err)
}

/// All set partitions of `{1, ..., n}` in canonical form.
#[pyfunction]
fn enumerate_set_partitions(n: usize) -> PyResult<Vec<Vec<Vec<usize>>>> {
    Ok(pinwheel::enumerate_set_partitions(n)
        .map_err(to_py_err)?
        .into_iter()
        .map(|p| p.parts().to_vec())
        .collect())
}

fn term_to_dict<'py>(py: Python<'py>, term: &PinwheelTerm) -> PyResult<Bound<'py, PyDict>> {
    let dict = PyDict::new(py);
    dict.set_item("partition", term.parts().to_vec())?;
    dict.set_item("sign", term.sign())?;
    dict.set_item("spine_exponents", term.spine_exponents().to_vec())?;
    dict.set_item("tail_exponents", term.tail_exponents().to_vec())?;
    Ok(dict)
}

fn expand_terms(genus: u32, exponents: Vec<u64>, simplify: bool) -> PyResult<Vec<PinwheelTerm>> {
    let monomial = OmegaMonomial::new(genus, exponents).map_err(to_py_err)?;
    Ok(if simplify {
        expand_graph_formula_simplified(&monomial)
    } else {
        expand_graph_formula(&monomial)
    })
}

/// Pinwheel-stratum expansion of an omega monomial, as a list of dicts with
/// keys `partition`, `sign`, `spine_exponents`, `tail_exponents`. With
/// `simplify=True`, series terms that die on their tail for dimension
/// reasons are dropped.
#[pyfunction]
#[pyo3(signature = (genus, exponents, simplify = false))]
fn expand(
    py: Python<'_>,
    genus: u32,
    exponents: Vec<u64>,
    simplify: bool,
) -> PyResult<Vec<Py<PyDict>>> {
    expand_terms(genus, exponents, simplify)?
        .iter()
        .map(|t| term_to_dict(py, t).map(Bound::unbind))
        .collect()
}

/// The same expansion rendered as LaTeX.
#[pyfunction]
#[pyo3(signature = (genus, exponents, simplify = false))]
fn expand_latex(genus: u32, exponents: Vec<u64>, simplify: bool) -> PyResult<String> {
    Ok(render_expansion(
        &expand_terms(genus, exponents, simplify)?,
        OutputFormat::Latex,
    ))
}

/// Run the built-in verification suite; returns `(name, passed, detail)`
/// triples.
#[pyfunction]
fn selftest() -> Vec<(String, bool, String)> {
    pinwheel::selftest::run_all(oracle())
        .into_iter()
        .map(|report| (report.name.to_string(), report.passed, report.detail))
        .collect()
}

#[pymodule]
fn pinwheel_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(psi_top, m)?)?;
    m.add_function(wrap_pyfunction!(psi_top_genus0_closed, m)?)?;
    m.add_function(wrap_pyfunction!(omega_top, m)?)?;
    m.add_function(wrap_pyfunction!(kappa_top, m)?)?;
    m.add_function(wrap_pyfunction!(integrate_expansion, m)?)?;
    m.add_function(wrap_pyfunction!(check_pushforward_identity, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_set_partitions, m)?)?;
    m.add_function(wrap_pyfunction!(expand, m)?)?;
    m.add_function(wrap_pyfunction!(expand_latex, m)?)?;
    m.add_function(wrap_pyfunction!(selftest, m)?)?;
    Ok(())
}
