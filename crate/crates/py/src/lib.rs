//! Python bindings for `subword_shell`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use subword_shell::cli::{self, AnalyzeOptions, Corpus, VerifyOptions};
use subword_shell::complexes;
use subword_shell::ideals;
use subword_shell::special;
use subword_shell::words::{self, DEFAULT_CENSUS_LIMIT};
use subword_shell::{CoxeterSystem, Error, GroupElement, Word};

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report serializes")
}

/// An element of a finite Coxeter group.
#[pyclass(name = "Element", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyElement(GroupElement);

#[pymethods]
impl PyElement {
    #[getter]
    fn length(&self) -> usize {
        self.0.length()
    }

    /// One-line notation for types A and B, `None` for dihedral groups.
    fn one_line(&self) -> Option<Vec<i64>> {
        self.0.one_line()
    }

    /// `(rotation, reflection)` for dihedral groups.
    fn dihedral(&self) -> Option<(usize, bool)> {
        self.0.dihedral()
    }

    fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    fn __repr__(&self) -> String {
        format!("Element({})", self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

/// A finite Coxeter system of type A, B or I2.
#[pyclass(name = "CoxeterSystem", frozen)]
struct PyCoxeterSystem(CoxeterSystem);

#[pymethods]
impl PyCoxeterSystem {
    #[new]
    #[pyo3(signature = (family, rank = None, m = None))]
    fn new(family: &str, rank: Option<usize>, m: Option<usize>) -> PyResult<Self> {
        let family = cli::parse_family(family, rank, m).map_err(py_err)?;
        CoxeterSystem::new(family)
            .map(PyCoxeterSystem)
            .map_err(py_err)
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    #[getter]
    fn family(&self) -> String {
        self.0.family().to_string()
    }

    fn coxeter_matrix(&self) -> Vec<Vec<usize>> {
        self.0.coxeter_matrix().to_vec()
    }

    fn identity(&self) -> PyElement {
        PyElement(self.0.identity())
    }

    fn element(&self, word: Vec<usize>) -> PyResult<PyElement> {
        self.0
            .element_of_word(&Word::new(word))
            .map(PyElement)
            .map_err(py_err)
    }

    #[pyo3(name = "from_one_line")]
    fn element_from_one_line(&self, one_line: Vec<i64>) -> PyResult<PyElement> {
        self.0
            .element_from_one_line(&one_line)
            .map(PyElement)
            .map_err(py_err)
    }

    #[pyo3(name = "from_dihedral")]
    fn element_from_dihedral(&self, rotation: usize, reflection: bool) -> PyResult<PyElement> {
        self.0
            .element_from_dihedral(rotation, reflection)
            .map(PyElement)
            .map_err(py_err)
    }

    fn multiply(&self, g: &PyElement, h: &PyElement) -> PyElement {
        PyElement(self.0.multiply(&g.0, &h.0))
    }

    fn inverse(&self, g: &PyElement) -> PyElement {
        PyElement(self.0.inverse(&g.0))
    }

    fn is_reduced(&self, word: Vec<usize>) -> PyResult<bool> {
        self.0.is_reduced_word(&Word::new(word)).map_err(py_err)
    }

    fn reduced_word(&self, g: &PyElement) -> Vec<usize> {
        self.0.reduced_word(&g.0).letters().to_vec()
    }

    fn reduced_words(&self, g: &PyElement) -> Vec<Vec<usize>> {
        self.0
            .reduced_words(&g.0)
            .into_iter()
            .map(|w| w.letters().to_vec())
            .collect()
    }

    fn bruhat_leq(&self, u: &PyElement, w: &PyElement) -> bool {
        self.0.bruhat_leq(&u.0, &w.0)
    }

    fn demazure_product(&self, word: Vec<usize>) -> PyResult<PyElement> {
        self.0
            .demazure_product(&Word::new(word))
            .map(PyElement)
            .map_err(py_err)
    }

    fn elements(&self) -> Vec<PyElement> {
        self.0.elements().into_iter().map(PyElement).collect()
    }

    fn longest_element(&self) -> PyElement {
        PyElement(self.0.longest_element())
    }

    fn contains(&self, word: Vec<usize>, pi: &PyElement) -> PyResult<bool> {
        words::contains(&self.0, &Word::new(word), &pi.0).map_err(py_err)
    }

    /// Position lists of the reduced subwords of `word` equal to `pi`, in lex order.
    fn representations(&self, word: Vec<usize>, pi: &PyElement) -> PyResult<Vec<Vec<usize>>> {
        let reps = words::representations(&self.0, &Word::new(word), &pi.0).map_err(py_err)?;
        Ok(reps
            .subwords()
            .iter()
            .map(|p| p.positions().to_vec())
            .collect())
    }

    /// Facets of the subword complex, in lex-dual shelling order.
    fn facets(&self, word: Vec<usize>, pi: &PyElement) -> PyResult<Vec<Vec<usize>>> {
        let complex =
            complexes::subword_complex(&self.0, &Word::new(word), &pi.0).map_err(py_err)?;
        Ok(complex.facets().iter().map(|f| f.to_vec()).collect())
    }

    fn vertex_decomposition(&self, word: Vec<usize>, pi: &PyElement) -> PyResult<Vec<Vec<usize>>> {
        let order = complexes::vertex_decompose_shelling(&self.0, &Word::new(word), &pi.0)
            .map_err(py_err)?;
        Ok(order.facets().iter().map(|f| f.to_vec()).collect())
    }

    /// `(generators, colon sets, d)` of the lex linear-quotient certificate.
    #[allow(clippy::type_complexity)]
    fn certificate(
        &self,
        word: Vec<usize>,
        pi: &PyElement,
    ) -> PyResult<(Vec<Vec<usize>>, Vec<Vec<usize>>, Vec<usize>)> {
        let complex =
            complexes::subword_complex(&self.0, &Word::new(word), &pi.0).map_err(py_err)?;
        let cert = ideals::lex_certificate(&complex.alexander_dual_ideal()).map_err(py_err)?;
        Ok((
            cert.order.iter().map(|u| u.support().to_vec()).collect(),
            cert.sets.iter().map(|s| s.to_vec()).collect(),
            cert.d.clone(),
        ))
    }

    /// Demazure census as `{subword size: count}`.
    #[pyo3(signature = (word, pi, limit = DEFAULT_CENSUS_LIMIT))]
    fn census(
        &self,
        word: Vec<usize>,
        pi: &PyElement,
        limit: usize,
    ) -> PyResult<std::collections::BTreeMap<usize, u64>> {
        words::demazure_census(&self.0, &Word::new(word), &pi.0, limit).map_err(py_err)
    }

    /// Full analysis report as a JSON string.
    #[pyo3(signature = (word, pi, census_limit = DEFAULT_CENSUS_LIMIT))]
    fn analyze(&self, word: Vec<usize>, pi: &PyElement, census_limit: usize) -> PyResult<String> {
        let report = cli::analyze_instance(
            &self.0,
            &Word::new(word),
            &pi.0,
            &AnalyzeOptions { census_limit },
        )
        .map_err(py_err)?;
        Ok(to_json(&report))
    }

    /// Special-class report as a JSON string.
    #[pyo3(signature = (word, pi, census_limit = DEFAULT_CENSUS_LIMIT))]
    fn special(&self, word: Vec<usize>, pi: &PyElement, census_limit: usize) -> PyResult<String> {
        let report = special::analyze_special(&self.0, &Word::new(word), &pi.0, census_limit)
            .map_err(py_err)?;
        Ok(to_json(&report))
    }

    /// Runs the invariant suites over a corpus; returns the summary as JSON.
    #[pyo3(signature = (count = 100, seed = 0, max_word = 8, constructed = false))]
    fn verify(
        &self,
        py: Python<'_>,
        count: usize,
        seed: u64,
        max_word: usize,
        constructed: bool,
    ) -> PyResult<String> {
        let mut options = VerifyOptions::new(self.0.family());
        options.count = count;
        options.seed = seed;
        options.max_word = max_word;
        options.threads = cli::threads_from_env();
        if constructed {
            options.corpus = Corpus::Constructed;
        }
        let summary = py.detach(|| cli::run_verify(&options)).map_err(py_err)?;
        Ok(to_json(&summary))
    }

    fn __repr__(&self) -> String {
        format!("CoxeterSystem({})", self.0.family())
    }
}

#[pymodule]
fn pysubword(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCoxeterSystem>()?;
    m.add_class::<PyElement>()?;
    Ok(())
}
