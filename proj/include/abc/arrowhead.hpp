#pragma once

#include <vector>

#include "abc/matrices.hpp"

namespace abc {

/// Closed-form spectrum of a regular arrowhead matrix A_n(h, b, d):
/// lambda_{-+} = (h + d -+ sqrt(D))/2 with D = (h - d)^2 + 4 n b^2, plus the
/// eigenvalue d of multiplicity n - 1 (present for n > 1).
struct ArrowheadSpectrum {
    double lambda_minus = 0;
    double lambda_plus = 0;
    double lambda_d = 0;      // value d; multiplicity n - 1 when n > 1
    double discriminant = 0;  // (h - d)^2 + 4 n b^2
    int n = 1;

    /// All n + 1 eigenvalues: lambda_-, then n - 1 copies of d, then lambda_+.
    std::vector<double> values() const;
};

ArrowheadSpectrum arrowhead_eigenvalues(const ArrowheadParams& p);

/// |sigma(A_n(h, b, d))| for b != 0: 2 when n = 1, else 3.
/// Throws ZeroBorderError when b = 0.
int arrowhead_spectrum_cardinality(const ArrowheadParams& p);

}  // namespace abc
