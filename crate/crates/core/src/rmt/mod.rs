//! Random-matrix side: GUE and block-GUE samplers, the generalized
//! traceless transform, the Hermitian eigensolver and eigenvalue densities.

mod density;
mod eigen;
mod matrix;
mod sample;
mod scaling;
mod spectrum;

pub use density::{block_gue_density, eigen_shape_density, hyperplane_integral, HYPERPLANE_TOLERANCE};
pub use eigen::{
    eigh, eigvals, eigvals_tridiagonal, householder_tridiagonalize, tridiagonalize_with_unitary,
    Eigen, TridiagonalModel, MAX_QL_ITERATIONS,
};
pub use matrix::{BlockSpec, HermitianMatrix, HERMITIAN_TOLERANCE};
pub use sample::{
    block_eigenvalues, ordered_block_spectrum, sample_block_gue, sample_chi,
    sample_degenerate_gaussian, sample_gue, sample_tridiagonal_gue, traceless_covariance,
    traceless_transform, BlockSpectrumSample,
};
pub use scaling::{chi_square_max_bound, scaling_stats, semicircle_cdf, ScalingReport};
pub use spectrum::Spectrum;
