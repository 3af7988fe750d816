#pragma once

#include <complex>
#include <span>
#include <vector>

#include "abc/matrices.hpp"

namespace abc {

/// Output of the dense Jacobi eigensolver.
struct OracleSpectrum {
    std::vector<double> values;  // ascending
    int iterations = 0;          // sweeps performed
    double offdiag_norm = 0.0;   // final off-diagonal Frobenius norm
};

/// Cyclic-by-row Jacobi diagonalization of a dense symmetric matrix.
///
/// Sweeps until the off-diagonal Frobenius norm drops to `tol`
/// (tol <= 0 selects the default 1e-12 * ||M||_F). Deterministic for a given
/// input. Throws NoConvergenceError after 100 sweeps.
OracleSpectrum jacobi_eigenvalues(const DenseSymmetricMatrix& m, double tol = 0.0);

/// Normalized eigenpair residual ||M v - lambda v||_inf / ((1 + ||M||_inf) * ||v||_inf).
/// Throws ZeroVectorError when v is zero.
double residual(const DenseMatrix& m, double lambda, std::span<const std::complex<double>> v);
double residual(const DenseMatrix& m, double lambda, std::span<const double> v);

/// Number of `values` within `eps` of `target` (inclusive). `values` sorted ascending.
int count_near(std::span<const double> values, double target, double eps);

}  // namespace abc
