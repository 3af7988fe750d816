#pragma once

#include <complex>
#include <vector>

#include "abc/matrices.hpp"

namespace abc {

struct ComplexEigenpair {
    std::complex<double> value;
    std::vector<std::complex<double>> vector;
};

/// Powers 1, w, w^2, ..., w^{n-1} of the first primitive n-th root of unity
/// w = exp(2 pi i / n). Each power is evaluated from its reduced angle
/// 2 pi (m mod n) / n, keeping the phase error flat in m.
std::vector<std::complex<double>> unit_root_powers(std::size_t n);

/// Closed-form eigenpairs of circ(c0, ..., c_{n-1}): pair k has value
/// sum_j c_j w^{jk} and eigenvector [1, w^k, ..., w^{(n-1)k}].
std::vector<ComplexEigenpair> circulant_eigenpairs(const CirculantParams& p);

}  // namespace abc
