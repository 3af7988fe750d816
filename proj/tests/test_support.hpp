#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "abc/matrices.hpp"
#include "abc/oracle.hpp"

namespace test_support {

inline std::vector<double> sorted(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v;
}

/// det(A - shift I) by Gaussian elimination with partial pivoting.
inline double shifted_determinant(const abc::DenseMatrix& m, double shift) {
    const std::size_t n = m.order();
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c) - (r == c ? shift : 0.0);

    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (std::abs(a[r][k]) > std::abs(a[pivot][k])) pivot = r;
        if (a[pivot][k] == 0.0) return 0.0;
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t r = k + 1; r < n; ++r) {
            const double f = a[r][k] / a[k][k];
            for (std::size_t c = k; c < n; ++c) a[r][c] -= f * a[k][c];
        }
    }
    return det;
}

/// Extreme singular values of a set of complex columns, via the Hermitian Gram
/// matrix embedded as the real symmetric [[Re G, -Im G], [Im G, Re G]] and the
/// Jacobi oracle. Returns {smallest, largest}.
inline std::pair<double, double> singular_value_range(
    const std::vector<std::vector<std::complex<double>>>& cols) {
    const std::size_t m = cols.size();
    abc::DenseSymmetricMatrix embedded(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            std::complex<double> g = 0.0;
            for (std::size_t r = 0; r < cols[i].size(); ++r) g += std::conj(cols[i][r]) * cols[j][r];
            const double re = g.real();
            const double im = i == j ? 0.0 : g.imag();
            embedded.set(i, j, re);
            embedded.set(i + m, j + m, re);
            // Im G is antisymmetric: block (i+m, j) holds Im g_ij, (j+m, i) holds -Im g_ij
            embedded.set(i + m, j, im);
            if (i != j) embedded.set(j + m, i, -im);
        }
    }
    const auto eig = abc::jacobi_eigenvalues(embedded);
    const double lo = std::max(0.0, eig.values.front());
    const double hi = std::max(0.0, eig.values.back());
    return {std::sqrt(lo), std::sqrt(hi)};
}

}  // namespace test_support
