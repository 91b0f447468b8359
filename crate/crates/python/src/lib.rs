//! Python bindings: the `tableaux_lab` extension module.

use num::complex::Complex64;
use num::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use tableaux_lab::{brownian, combinat, exactdist, harness, rmt, rng};

fn py_err(e: tableaux_lab::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn dist(probs: &[f64]) -> PyResult<combinat::AlphabetDistribution> {
    combinat::AlphabetDistribution::new(probs).map_err(py_err)
}

fn partition(parts: Vec<u32>) -> PyResult<combinat::Partition> {
    combinat::Partition::new(parts).map_err(py_err)
}

/// Letter probabilities with their block structure.
#[pyclass(name = "AlphabetDistribution", frozen)]
struct PyAlphabet {
    inner: combinat::AlphabetDistribution,
}

#[pymethods]
impl PyAlphabet {
    #[new]
    fn new(probs: Vec<f64>) -> PyResult<Self> {
        Ok(Self { inner: dist(&probs)? })
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.k()
    }

    #[getter]
    fn probs(&self) -> Vec<f64> {
        self.inner.probs().to_vec()
    }

    #[getter]
    fn sorted_probs(&self) -> Vec<f64> {
        self.inner.sorted_probs()
    }

    /// Block sizes `d_1..d_K`.
    #[getter]
    fn mults(&self) -> Vec<usize> {
        self.inner.mults().to_vec()
    }

    /// 1-based letters in order of non-increasing probability.
    #[getter]
    fn tau(&self) -> Vec<usize> {
        self.inner.tau().iter().map(|t| t + 1).collect()
    }

    fn __repr__(&self) -> String {
        format!("AlphabetDistribution({:?})", self.inner.probs())
    }
}

/// Random word of length `n` (letters `1..=M`).
#[pyfunction]
fn sample_word(probs: Vec<f64>, n: usize, seed: u64) -> PyResult<Vec<u32>> {
    let d = dist(&probs)?;
    Ok(combinat::sample_word(&d, n, &mut rng::seeded(seed)).letters().to_vec())
}

/// `(P, Q, shape)` of the RSK correspondence.
#[pyfunction]
fn rsk(word: Vec<u32>, m: usize) -> PyResult<(Vec<Vec<u32>>, Vec<Vec<u32>>, Vec<u32>)> {
    let w = combinat::Word::new(word, m).map_err(py_err)?;
    let t = combinat::rsk(&w);
    Ok((t.p_tableau, t.q_tableau, t.shape.parts().to_vec()))
}

#[pyfunction]
fn rsk_shape(word: Vec<u32>, m: usize) -> PyResult<Vec<u32>> {
    let w = combinat::Word::new(word, m).map_err(py_err)?;
    Ok(combinat::rsk_shape(w.letters(), m).parts().to_vec())
}

/// Maximal number of letters collected by `l` disjoint paths.
#[pyfunction]
fn greene_sums(word: Vec<u32>, m: usize, l: usize) -> PyResult<usize> {
    let w = combinat::Word::new(word, m).map_err(py_err)?;
    combinat::greene_sums(&w, l).map_err(py_err)
}

/// `[(shape, probability), …]` for words of length `n`.
#[pyfunction]
fn shape_pmf(probs: Vec<f64>, n: usize) -> PyResult<Vec<(Vec<u32>, f64)>> {
    let pmf = exactdist::shape_pmf(&dist(&probs)?, n).map_err(py_err)?;
    Ok(pmf.iter().map(|(s, x)| (s.parts().to_vec(), x)).collect())
}

/// Schur polynomial `s_λ(p)` by the repeated-variable determinant.
#[pyfunction]
fn schur(shape: Vec<u32>, probs: Vec<f64>) -> PyResult<f64> {
    Ok(exactdist::schur_repeated_det(&partition(shape)?, &dist(&probs)?)
        .map_err(py_err)?
        .value)
}

/// Number of standard Young tableaux of `shape`.
#[pyfunction]
fn syt_count(shape: Vec<u32>) -> PyResult<BigUint> {
    let p = partition(shape)?;
    let n = p.size() as usize;
    exactdist::syt_count(&p, p.len().max(1), n).map_err(py_err)
}

#[pyfunction]
fn charlier_pmf(shape: Vec<u32>, alpha: f64, probs: Vec<f64>) -> PyResult<f64> {
    exactdist::charlier_pmf(&partition(shape)?, alpha, &dist(&probs)?).map_err(py_err)
}

/// `n×n` GUE sample as `(real part, imaginary part)` row lists.
#[pyfunction]
fn sample_gue(n: usize, seed: u64) -> (Vec<Vec<f64>>, Vec<Vec<f64>>) {
    let x = rmt::sample_gue(n, &mut rng::seeded(seed));
    let re = (0..n).map(|i| (0..n).map(|j| x.get(i, j).re).collect()).collect();
    let im = (0..n).map(|i| (0..n).map(|j| x.get(i, j).im).collect()).collect();
    (re, im)
}

/// Eigenvalues (ascending) of a Hermitian matrix given by its real and
/// optional imaginary parts.
#[pyfunction]
#[pyo3(signature = (re, im = None))]
fn eigvals(re: Vec<Vec<f64>>, im: Option<Vec<Vec<f64>>>) -> PyResult<Vec<f64>> {
    let n = re.len();
    let mut data = Vec::with_capacity(n * n);
    for i in 0..n {
        if re[i].len() != n || im.as_ref().is_some_and(|m| m.len() != n || m[i].len() != n) {
            return Err(PyValueError::new_err("matrix must be square"));
        }
        for j in 0..n {
            let b = im.as_ref().map_or(0.0, |m| m[i][j]);
            data.push(Complex64::new(re[i][j], b));
        }
    }
    let x = rmt::HermitianMatrix::from_row_major(n, data).map_err(py_err)?;
    Ok(rmt::eigvals(&x).map_err(py_err)?.values)
}

/// `(ξ, ξ₀)`: block-GUE spectrum ordered within blocks and its traceless
/// shift.
#[pyfunction]
fn ordered_block_spectrum(probs: Vec<f64>, seed: u64) -> PyResult<(Vec<f64>, Vec<f64>)> {
    let s = rmt::ordered_block_spectrum(&dist(&probs)?, &mut rng::seeded(seed)).map_err(py_err)?;
    Ok((s.xi.values, s.xi0.values))
}

#[pyfunction]
fn eigen_shape_density(x: Vec<f64>, probs: Vec<f64>) -> PyResult<f64> {
    Ok(rmt::eigen_shape_density(&x, &dist(&probs)?))
}

/// `(L̂¹, L̂² − L̂¹, …)` on a grid of resolution `n`.
#[pyfunction]
fn lhat_shape_sample(probs: Vec<f64>, n: usize, seed: u64) -> PyResult<Vec<f64>> {
    brownian::lhat_shape_sample(&dist(&probs)?, n, &mut rng::seeded(seed)).map_err(py_err)
}

#[pyfunction]
fn ks_two_sample(a: Vec<f64>, b: Vec<f64>) -> PyResult<f64> {
    harness::ks_two_sample(&a, &b).map_err(py_err)
}

/// Runs an experiment from a JSON config; returns `(passed, report_json)`.
#[pyfunction]
fn run_experiment(experiment: &str, config_json: &str) -> PyResult<(bool, String)> {
    let e: harness::Experiment = experiment.parse().map_err(py_err)?;
    let cfg = harness::ExperimentConfig::from_json(config_json).map_err(py_err)?;
    let out = harness::run(e, &cfg).map_err(py_err)?;
    Ok((out.report.passed, out.report.to_json().map_err(py_err)?))
}

#[pymodule]
#[pyo3(name = "tableaux_lab")]
fn tableaux_lab_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlphabet>()?;
    m.add_function(wrap_pyfunction!(sample_word, m)?)?;
    m.add_function(wrap_pyfunction!(rsk, m)?)?;
    m.add_function(wrap_pyfunction!(rsk_shape, m)?)?;
    m.add_function(wrap_pyfunction!(greene_sums, m)?)?;
    m.add_function(wrap_pyfunction!(shape_pmf, m)?)?;
    m.add_function(wrap_pyfunction!(schur, m)?)?;
    m.add_function(wrap_pyfunction!(syt_count, m)?)?;
    m.add_function(wrap_pyfunction!(charlier_pmf, m)?)?;
    m.add_function(wrap_pyfunction!(sample_gue, m)?)?;
    m.add_function(wrap_pyfunction!(eigvals, m)?)?;
    m.add_function(wrap_pyfunction!(ordered_block_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(eigen_shape_density, m)?)?;
    m.add_function(wrap_pyfunction!(lhat_shape_sample, m)?)?;
    m.add_function(wrap_pyfunction!(ks_two_sample, m)?)?;
    m.add_function(wrap_pyfunction!(run_experiment, m)?)?;
    Ok(())
}
