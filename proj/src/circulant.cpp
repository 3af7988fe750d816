#include "abc/circulant.hpp"

#include <cmath>
#include <numbers>

#include "abc/errors.hpp"

namespace abc {

std::vector<std::complex<double>> unit_root_powers(std::size_t n) {
    std::vector<std::complex<double>> w(n);
    for (std::size_t m = 0; m < n; ++m) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
        w[m] = {std::cos(angle), std::sin(angle)};
    }
    return w;
}

std::vector<ComplexEigenpair> circulant_eigenpairs(const CirculantParams& p) {
    const std::size_t n = p.order();
    if (n < 1) throw UnsupportedOrderError("circulant matrix needs order >= 1");

    const auto w = unit_root_powers(n);
    std::vector<ComplexEigenpair> pairs(n);
    for (std::size_t k = 0; k < n; ++k) {
        auto& pair = pairs[k];
        pair.vector.resize(n);
        std::complex<double> value = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const auto& wjk = w[(j * k) % n];
            pair.vector[j] = wjk;
            value += p.row[j] * wjk;
        }
        pair.value = value;
    }
    return pairs;
}

}  // namespace abc
