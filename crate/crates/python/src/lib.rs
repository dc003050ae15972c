//! Python bindings for `pclwords`. Words cross the boundary as strings.

use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use pclwords::factorization::{self, SpecialFactorization};
use pclwords::morphism::{self, Automorphism, AutomorphismName, FreeGroupWord};
use pclwords::verify::{self, MembershipVerdict, Side};
use pclwords::{bwt as transform, palindrome, OrderedAlphabet, Word};

fn value_error(e: pclwords::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Parses over `alphabet`, or over the word's own letters in code point order.
fn generic(word: &str, alphabet: Option<&str>) -> PyResult<Word> {
    let alphabet = match alphabet {
        Some(symbols) => OrderedAlphabet::new(symbols),
        None if word.is_empty() => return Ok(Word::empty(&OrderedAlphabet::abc())),
        None => OrderedAlphabet::natural(word),
    }
    .map_err(value_error)?;
    Word::parse(word, &Arc::new(alphabet)).map_err(value_error)
}

fn ternary(word: &str) -> PyResult<Word> {
    Word::ternary(word).map_err(value_error)
}

#[pyclass(frozen, get_all, module = "pclwords_py")]
struct ClusteringReport {
    bwt: String,
    runs: Vec<(char, usize)>,
    permutation: Option<Vec<usize>>,
    perfect: bool,
}

#[pymethods]
impl ClusteringReport {
    fn __repr__(&self) -> String {
        format!(
            "ClusteringReport(bwt={:?}, runs={:?}, permutation={:?}, perfect={})",
            self.bwt,
            self.runs,
            self.permutation,
            if self.perfect { "True" } else { "False" }
        )
    }
}

#[pyclass(frozen, get_all, module = "pclwords_py")]
struct Factorization {
    separators: String,
    parts: Vec<String>,
    text: String,
}

impl From<&SpecialFactorization> for Factorization {
    fn from(f: &SpecialFactorization) -> Self {
        Self {
            separators: f.separators().into_iter().collect(),
            parts: f.parts().iter().map(Word::to_string).collect(),
            text: f.to_string(),
        }
    }
}

#[pymethods]
impl Factorization {
    #[getter]
    fn pi1(&self) -> Option<String> {
        self.parts.first().cloned()
    }

    #[getter]
    fn pi2(&self) -> Option<String> {
        self.parts.get(1).cloned()
    }

    fn __str__(&self) -> String {
        self.text.clone()
    }

    fn __repr__(&self) -> String {
        format!("Factorization({:?})", self.text)
    }
}

#[pyclass(frozen, get_all, module = "pclwords_py")]
struct VerificationReport {
    claim: String,
    bound: usize,
    status: String,
    counterexamples: Vec<String>,
    notes: Vec<String>,
    words_checked: u64,
    elapsed_ms: u64,
    json: String,
}

#[pymethods]
impl VerificationReport {
    #[getter]
    fn passed(&self) -> bool {
        self.status == "pass"
    }

    fn __repr__(&self) -> String {
        format!("VerificationReport(claim={:?}, bound={}, status={:?})", self.claim, self.bound, self.status)
    }
}

#[pyfunction]
#[pyo3(signature = (word, alphabet=None))]
fn bwt(word: &str, alphabet: Option<&str>) -> PyResult<String> {
    Ok(transform::bwt(&generic(word, alphabet)?).map_err(value_error)?.to_string())
}

#[pyfunction]
#[pyo3(signature = (word, alphabet=None))]
fn is_perfectly_clustering(word: &str, alphabet: Option<&str>) -> PyResult<bool> {
    transform::is_perfectly_clustering(&generic(word, alphabet)?).map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (word, alphabet=None))]
fn clustering_report(word: &str, alphabet: Option<&str>) -> PyResult<ClusteringReport> {
    let r = transform::clustering_report(&generic(word, alphabet)?).map_err(value_error)?;
    Ok(ClusteringReport { bwt: r.bwt.to_string(), runs: r.runs, permutation: r.permutation, perfect: r.perfect })
}

#[pyfunction]
#[pyo3(signature = (word, alphabet=None))]
fn is_lyndon(word: &str, alphabet: Option<&str>) -> PyResult<bool> {
    generic(word, alphabet)?.is_lyndon().map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (directive, alphabet=None))]
fn pal(directive: &str, alphabet: Option<&str>) -> PyResult<String> {
    Ok(palindrome::pal(&generic(directive, alphabet)?).to_string())
}

#[pyfunction]
#[pyo3(signature = (word, alphabet=None))]
fn directive_of(word: &str, alphabet: Option<&str>) -> PyResult<Option<String>> {
    Ok(palindrome::directive_of(&generic(word, alphabet)?).map(|d| d.word().to_string()))
}

#[pyfunction]
#[pyo3(signature = (word, alphabet=None))]
fn palindromic_closure(word: &str, alphabet: Option<&str>) -> PyResult<String> {
    Ok(palindrome::palindromic_closure(&generic(word, alphabet)?).to_string())
}

#[pyfunction]
fn is_christoffel(word: &str) -> PyResult<bool> {
    palindrome::is_christoffel(&generic(word, None)?).map_err(value_error)
}

/// Palindromic special factorization over `abc`, or `None`.
#[pyfunction]
fn factorize(word: &str) -> PyResult<Option<Factorization>> {
    let f = factorization::palindromic_special_factorization(&ternary(word)?).map_err(value_error)?;
    Ok(f.as_ref().map(Factorization::from))
}

/// Leftmost factorization with every letter of `alphabet` as a separator.
#[pyfunction]
fn factorize_general(word: &str, alphabet: &str) -> PyResult<Option<Factorization>> {
    Ok(factorization::general_palindromic_factorization(&generic(word, Some(alphabet))?)
        .as_ref()
        .map(Factorization::from))
}

#[pyfunction]
fn product_of_two_palindromes(word: &str) -> PyResult<Option<(String, String)>> {
    Ok(factorization::product_of_two_palindromes(&generic(word, None)?)
        .map(|p| (p.left.to_string(), p.right.to_string())))
}

#[pyfunction]
fn is_pcl(word: &str) -> PyResult<bool> {
    factorization::is_pcl(&ternary(word)?).map_err(value_error)
}

#[pyfunction]
fn is_pcl_via_bwt(word: &str) -> PyResult<bool> {
    factorization::is_pcl_via_bwt(&ternary(word)?).map_err(value_error)
}

#[pyfunction]
fn theta(word: &str) -> PyResult<String> {
    Ok(morphism::theta(&ternary(word)?).map_err(value_error)?.to_string())
}

#[pyfunction]
fn omega(word: &str) -> PyResult<String> {
    Ok(morphism::omega(&ternary(word)?).map_err(value_error)?.to_string())
}

/// Image of a word under `lambda_a`, `lambda_b`, `rho_b` or `rho_c`
/// (or its inverse), in free-group notation.
#[pyfunction]
#[pyo3(signature = (name, word, inverse=false))]
fn apply_automorphism(name: &str, word: &str, inverse: bool) -> PyResult<String> {
    let name: AutomorphismName = name.parse().map_err(value_error)?;
    let f = Automorphism::new(name);
    let f = if inverse { f.inverse() } else { f };
    Ok(f.apply(&FreeGroupWord::from(&ternary(word)?)).to_string())
}

#[pyfunction]
#[pyo3(signature = (directive, side="p1"))]
fn witness_from_directive(directive: &str, side: &str) -> PyResult<String> {
    let u = ternary(directive)?;
    let built = match side.parse::<Side>().map_err(value_error)? {
        Side::P1 => morphism::witness_from_directive(&u),
        Side::P2 => morphism::witness_p2_from_directive(&u),
    };
    Ok(built.map_err(value_error)?.to_string())
}

/// `(automorphism id, preimage)` or `None`.
#[pyfunction]
fn decompose(word: &str) -> PyResult<Option<(String, String)>> {
    let d = morphism::decompose(&ternary(word)?).map_err(value_error)?;
    Ok(d.map(|d| (d.automorphism.id().to_string(), d.preimage.to_string())))
}

#[pyfunction]
fn language_membership(word: &str, language: &str) -> PyResult<bool> {
    verify::language_membership(&ternary(word)?, language).map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (bound, workers=0))]
fn enumerate_pcl(py: Python<'_>, bound: usize, workers: usize) -> PyResult<Vec<String>> {
    let catalog = py.detach(|| verify::enumerate_pcl_with(bound, workers)).map_err(value_error)?;
    Ok(catalog.words().map(Word::to_string).collect())
}

/// `(status, detail)` where detail is the witness, the certificate factors
/// or `None`.
#[pyfunction]
fn membership(py: Python<'_>, side: &str, candidate: &str, bound: usize) -> PyResult<(String, Option<Vec<String>>)> {
    let side: Side = side.parse().map_err(value_error)?;
    let candidate = ternary(candidate)?;
    let verdict = py.detach(|| verify::membership(side, &candidate, bound)).map_err(value_error)?;
    let detail = match &verdict {
        MembershipVerdict::Member { witness } => Some(vec![witness.to_string()]),
        MembershipVerdict::NonMemberDecisive { certificate } => Some(certificate.iter().map(Word::to_string).collect()),
        MembershipVerdict::UnknownUpTo { .. } => None,
    };
    Ok((verdict.status().to_string(), detail))
}

#[pyfunction]
fn verify_claim(py: Python<'_>, claim: &str, bound: usize) -> PyResult<VerificationReport> {
    let report = py.detach(|| verify::verify_claim(claim, bound)).map_err(value_error)?;
    let json = serde_json::to_string(&report).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(VerificationReport {
        claim: report.claim,
        bound: report.bound,
        status: report.status.to_string(),
        counterexamples: report.counterexamples,
        notes: report.notes,
        words_checked: report.stats.words_checked,
        elapsed_ms: report.stats.elapsed_ms,
        json,
    })
}

#[pyfunction]
fn claims() -> Vec<&'static str> {
    verify::Claim::ALL.iter().map(|c| c.id()).collect()
}

#[pymodule]
fn pclwords_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<ClusteringReport>()?;
    m.add_class::<Factorization>()?;
    m.add_class::<VerificationReport>()?;
    m.add_function(wrap_pyfunction!(bwt, m)?)?;
    m.add_function(wrap_pyfunction!(is_perfectly_clustering, m)?)?;
    m.add_function(wrap_pyfunction!(clustering_report, m)?)?;
    m.add_function(wrap_pyfunction!(is_lyndon, m)?)?;
    m.add_function(wrap_pyfunction!(pal, m)?)?;
    m.add_function(wrap_pyfunction!(directive_of, m)?)?;
    m.add_function(wrap_pyfunction!(palindromic_closure, m)?)?;
    m.add_function(wrap_pyfunction!(is_christoffel, m)?)?;
    m.add_function(wrap_pyfunction!(factorize, m)?)?;
    m.add_function(wrap_pyfunction!(factorize_general, m)?)?;
    m.add_function(wrap_pyfunction!(product_of_two_palindromes, m)?)?;
    m.add_function(wrap_pyfunction!(is_pcl, m)?)?;
    m.add_function(wrap_pyfunction!(is_pcl_via_bwt, m)?)?;
    m.add_function(wrap_pyfunction!(theta, m)?)?;
    m.add_function(wrap_pyfunction!(omega, m)?)?;
    m.add_function(wrap_pyfunction!(apply_automorphism, m)?)?;
    m.add_function(wrap_pyfunction!(witness_from_directive, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(language_membership, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_pcl, m)?)?;
    m.add_function(wrap_pyfunction!(membership, m)?)?;
    m.add_function(wrap_pyfunction!(verify_claim, m)?)?;
    m.add_function(wrap_pyfunction!(claims, m)?)?;
    Ok(())
}
