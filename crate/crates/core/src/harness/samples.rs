//! Parallel sample generators. Sample `i` of stream `s` always uses the
//! generator `substream(seed, s, i)`, so outputs do not depend on thread
//! scheduling.

use rand::Rng as _;
use rand_distr::{Distribution, Poisson};
use rayon::prelude::*;

use crate::brownian::lhat_shape_sample;
use crate::combinat::{sample_letters, longest_weakly_increasing, rsk_shape, AlphabetDistribution};
use crate::rmt::{ordered_block_spectrum, sample_degenerate_gaussian};
use crate::rng::{substream, Rng};
use crate::Result;

pub(crate) mod stream {
    pub const WORDS: u64 = 1;
    pub const TRACELESS: u64 = 2;
    pub const BLOCK: u64 = 3;
    pub const DECOMPOSED: u64 = 4;
    pub const POISSON_WORDS: u64 = 5;
    pub const GRIDS: u64 = 6;
    pub const GRIDS_COARSE: u64 = 7;
    pub const TRIDIAGONAL: u64 = 8;
    pub const DENSE: u64 = 9;
    pub const SHIFTS: u64 = 10;
    pub const DIAGONALS: u64 = 11;
    pub const LI: u64 = 12;
    pub const CONCENTRATION: u64 = 13;
    pub const EIGEN: u64 = 14;
    pub const GREENE: u64 = 15;
    pub const SMALL_GRIDS: u64 = 16;
    pub const MATRICES: u64 = 17;
}

pub(crate) fn par_samples<T: Send>(count: usize, seed: u64, stream: u64, f: impl Fn(&mut Rng) -> T + Sync) -> Vec<T> {
    (0..count)
        .into_par_iter()
        .map(|i| f(&mut substream(seed, stream, i as u64)))
        .collect()
}

pub(crate) fn par_try_samples<T: Send>(
    count: usize,
    seed: u64,
    stream: u64,
    f: impl Fn(&mut Rng) -> Result<T> + Sync,
) -> Result<Vec<T>> {
    (0..count)
        .into_par_iter()
        .map(|i| f(&mut substream(seed, stream, i as u64)))
        .collect()
}

/// Coordinate `i` of every sample.
pub fn column(samples: &[Vec<f64>], i: usize) -> Vec<f64> {
    samples.iter().map(|s| s[i]).collect()
}

/// `(λ_i − c q_i)/√(c q_i)` for a shape padded to `M` parts, where `q` is
/// the sorted probability vector and `c` the word length (or its mean).
pub fn scaled_shape(parts: &[u32], q: &[f64], c: f64) -> Vec<f64> {
    parts
        .iter()
        .zip(q)
        .map(|(&l, &p)| (l as f64 - c * p) / (c * p).sqrt())
        .collect()
}

/// RSK shapes (padded to `M`) of `count` random words of length `n`.
pub fn word_shapes(dist: &AlphabetDistribution, n: usize, count: usize, seed: u64) -> Vec<Vec<u32>> {
    par_samples(count, seed, stream::WORDS, |rng| {
        rsk_shape(&sample_letters(dist, n, rng), dist.m()).padded(dist.m())
    })
}

/// RSK shapes of words with `Poisson(α)` length.
pub fn poissonized_shapes(dist: &AlphabetDistribution, alpha: f64, count: usize, seed: u64) -> Vec<Vec<u32>> {
    let poisson = Poisson::new(alpha).expect("positive mean");
    par_samples(count, seed, stream::POISSON_WORDS, |rng| {
        let n = poisson.sample(rng) as usize;
        rsk_shape(&sample_letters(dist, n, rng), dist.m()).padded(dist.m())
    })
}

/// Ordered traceless spectra `ξ₀`.
pub fn traceless_spectra(dist: &AlphabetDistribution, count: usize, seed: u64, stream: u64) -> Result<Vec<Vec<f64>>> {
    par_try_samples(count, seed, stream, |rng| Ok(ordered_block_spectrum(dist, rng)?.xi0.values))
}

/// Ordered block-GUE spectra `ξ`.
pub fn block_spectra(dist: &AlphabetDistribution, count: usize, seed: u64, stream: u64) -> Result<Vec<Vec<f64>>> {
    par_try_samples(count, seed, stream, |rng| Ok(ordered_block_spectrum(dist, rng)?.xi.values))
}

/// `ξ₀ + Z` with `Z` an independent degenerate Gaussian.
pub fn decomposed_spectra(dist: &AlphabetDistribution, count: usize, seed: u64) -> Result<Vec<Vec<f64>>> {
    par_try_samples(count, seed, stream::DECOMPOSED, |rng| {
        let xi0 = ordered_block_spectrum(dist, rng)?.xi0.values;
        let z = sample_degenerate_gaussian(dist, rng);
        Ok(xi0.iter().zip(&z).map(|(a, b)| a + b).collect())
    })
}

/// Brownian shape vectors `(L̂¹, L̂² − L̂¹, …)` on grids of resolution `n`.
pub fn lhat_samples(
    dist: &AlphabetDistribution,
    n: usize,
    count: usize,
    seed: u64,
    stream: u64,
) -> Result<Vec<Vec<f64>>> {
    par_try_samples(count, seed, stream, |rng| lhat_shape_sample(dist, n, rng))
}

/// `(LI_N − Np_max − 2√(d Np_max)) / (d^{−1/6} √(Np_max))` for uniform
/// words over `d` letters.
pub fn scaled_li_samples(d: usize, n: usize, count: usize, seed: u64) -> Vec<f64> {
    let np = n as f64 / d as f64;
    let center = np + 2.0 * (d as f64 * np).sqrt();
    let scale = (d as f64).powf(-1.0 / 6.0) * np.sqrt();
    par_samples(count, seed, stream::LI ^ ((d as u64) << 16), |rng| {
        let letters: Vec<u32> = (0..n).map(|_| rng.random_range(1..=d as u32)).collect();
        (longest_weakly_increasing(&letters) as f64 - center) / scale
    })
}

/// `λ₁` of random words of length `n`.
pub fn first_row_samples(dist: &AlphabetDistribution, n: usize, count: usize, seed: u64) -> Vec<f64> {
    par_samples(count, seed, stream::CONCENTRATION, |rng| {
        longest_weakly_increasing(&sample_letters(dist, n, rng)) as f64
    })
}
