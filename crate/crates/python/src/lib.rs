//! Python bindings: parse an arrangement document, run the jump analysis or
//! the affine oracle, and hand the results back as exact-rational strings or
//! JSON documents.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use arrjump::building::{BuildingKind, Model};
use arrjump::jump::{analyze, AnalyzeOptions, Analysis};
use arrjump::oracle::Oracle;
use arrjump::rational::{format_rat, parse_rat};
use arrjump::report::{report_to_json, ring_info};
use arrjump::ring::build_presentation;
use arrjump::ArrangementInput;

fn value_err(e: arrjump::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn building_kind(name: &str) -> PyResult<BuildingKind> {
    match name {
        "full" => Ok(BuildingKind::Full),
        "minimal" => Ok(BuildingKind::Minimal),
        other => Err(PyValueError::new_err(format!(
            "unknown building set {other:?}; use \"full\" or \"minimal\""
        ))),
    }
}

/// A validated central hyperplane arrangement with multiplicities.
#[pyclass]
struct Arrangement {
    input: ArrangementInput,
}

#[pymethods]
impl Arrangement {
    /// Parse the JSON document format also accepted by the CLI.
    #[new]
    fn new(document: &str) -> PyResult<Self> {
        let input = arrjump::parse_arrangement(document).map_err(value_err)?;
        Ok(Arrangement { input })
    }

    fn __repr__(&self) -> String {
        format!(
            "Arrangement(affine_dim={}, hyperplanes={}, degree={})",
            self.input.affine_dim,
            self.input.hyperplanes.len(),
            self.input.total_degree()
        )
    }

    /// Jumping numbers in (0,1) as exact "p/q" strings.
    #[pyo3(signature = (building_set = "full"))]
    fn jumping_numbers(&self, building_set: &str) -> PyResult<Vec<String>> {
        let report = analyze(
            &self.input,
            AnalyzeOptions {
                kind: building_kind(building_set)?,
                with_oracle: false,
                diagnostics: false,
            },
        )
        .map_err(value_err)?;
        Ok(report.jumping_numbers.iter().map(format_rat).collect())
    }

    /// (c, multiplicity) pairs for every candidate c in (0,1] with c*d
    /// integral; for c in (0,1] these are the Hodge-spectrum multiplicities
    /// at the cone point.
    #[pyo3(signature = (building_set = "full"))]
    fn inner_multiplicities(&self, building_set: &str) -> PyResult<Vec<(String, u64)>> {
        let report = analyze(
            &self.input,
            AnalyzeOptions {
                kind: building_kind(building_set)?,
                with_oracle: false,
                diagnostics: false,
            },
        )
        .map_err(value_err)?;
        report
            .inner_multiplicities
            .iter()
            .map(|(c, n)| {
                let n: u64 = n
                    .try_into()
                    .map_err(|_| PyValueError::new_err("multiplicity does not fit in u64"))?;
                Ok((format_rat(c), n))
            })
            .collect()
    }

    /// Full analysis report as a JSON string.
    #[pyo3(signature = (building_set = "full", oracle = false, diagnostics = false))]
    fn report_json(&self, building_set: &str, oracle: bool, diagnostics: bool) -> PyResult<String> {
        let report = analyze(
            &self.input,
            AnalyzeOptions {
                kind: building_kind(building_set)?,
                with_oracle: oracle,
                diagnostics,
            },
        )
        .map_err(value_err)?;
        serde_json::to_string_pretty(&report_to_json(&report))
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    /// Whether the affine oracle agrees with the jump criterion on every
    /// candidate.
    #[pyo3(signature = (building_set = "full"))]
    fn oracle_agrees(&self, building_set: &str) -> PyResult<bool> {
        let report = analyze(
            &self.input,
            AnalyzeOptions {
                kind: building_kind(building_set)?,
                with_oracle: true,
                diagnostics: false,
            },
        )
        .map_err(value_err)?;
        Ok(report.oracle_all_agree == Some(true))
    }

    /// Jumping numbers in (0,1) recomputed by the affine oracle alone.
    fn oracle_jumping_set(&self) -> Vec<String> {
        let mut oracle = Oracle::new(&self.input);
        oracle.jumping_set().iter().map(format_rat).collect()
    }

    /// Cohomology-ring presentation summary as a JSON string.
    #[pyo3(signature = (building_set = "full"))]
    fn ring_info_json(&self, building_set: &str) -> PyResult<String> {
        let model = Model::build(&self.input, building_kind(building_set)?);
        let p = build_presentation(&model);
        let info = ring_info(&model, &p).map_err(value_err)?;
        serde_json::to_string_pretty(&info).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    /// Verdict of the jump criterion for an arbitrary "p/q" in (0,1).
    #[pyo3(signature = (c, building_set = "full"))]
    fn is_jumping(&self, c: &str, building_set: &str) -> PyResult<bool> {
        let c = parse_rat(c).map_err(value_err)?;
        let analysis =
            Analysis::new(&self.input, building_kind(building_set)?).map_err(value_err)?;
        let cand = analysis.candidate_for(&c);
        analysis.is_jumping(&cand).map_err(value_err)
    }
}

/// Coefficients of x/(1 - exp(-x)) through the given degree, as "p/q"
/// strings.
#[pyfunction]
fn q_series(order: usize) -> Vec<String> {
    arrjump::series::q_series(order)
        .coeffs()
        .iter()
        .map(format_rat)
        .collect()
}

#[pymodule]
fn arrjump_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Arrangement>()?;
    m.add_function(wrap_pyfunction!(q_series, m)?)?;
    Ok(())
}
