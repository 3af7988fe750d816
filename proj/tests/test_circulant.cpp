#include "abc/circulant.hpp"

#include <cmath>
#include <complex>

#include "doctest.h"

#include "abc/oracle.hpp"
#include "abc/verify.hpp"
#include "test_support.hpp"

using namespace abc;

namespace {

// Residual with a complex eigenvalue (general, possibly asymmetric circulant).
double complex_residual(const DenseMatrix& m, const ComplexEigenpair& pair) {
    const std::size_t n = m.order();
    double rmax = 0.0;
    double vmax = 0.0;
    for (const auto& z : pair.vector) vmax = std::max(vmax, std::abs(z));
    for (std::size_t r = 0; r < n; ++r) {
        std::complex<double> acc = 0.0;
        for (std::size_t c = 0; c < n; ++c) acc += m(r, c) * pair.vector[c];
        acc -= pair.value * pair.vector[r];
        rmax = std::max(rmax, std::abs(acc));
    }
    return rmax / ((1.0 + m.inf_norm()) * vmax);
}

}  // namespace

TEST_CASE("circulant eigenpairs on fixtures") {
    SUBCASE("order 1") {
        const auto pairs = circulant_eigenpairs({{5.0}});
        REQUIRE(pairs.size() == 1);
        CHECK(pairs[0].value.real() == 5.0);
        CHECK(pairs[0].value.imag() == 0.0);
        REQUIRE(pairs[0].vector.size() == 1);
        CHECK(pairs[0].vector[0] == std::complex<double>(1.0, 0.0));
    }
    SUBCASE("circ(0,1,0,1): 2 cos(pi k / 2)") {
        const auto pairs = circulant_eigenpairs({{0, 1, 0, 1}});
        const double expected[4] = {2.0, 0.0, -2.0, 0.0};
        for (std::size_t k = 0; k < 4; ++k) {
            CHECK(pairs[k].value.real() == doctest::Approx(expected[k]).epsilon(1e-14));
            CHECK(std::abs(pairs[k].value.imag()) <= 1e-12);
        }
    }
    SUBCASE("circ(3,2,0,0,0,2): 3 + 4 cos(pi k / 3)") {
        const auto pairs = circulant_eigenpairs({{3, 2, 0, 0, 0, 2}});
        const double expected[6] = {7.0, 5.0, 1.0, -1.0, 1.0, 5.0};
        for (std::size_t k = 0; k < 6; ++k) {
            CHECK(pairs[k].value.real() == doctest::Approx(expected[k]).epsilon(1e-13));
            CHECK(std::abs(pairs[k].value.imag()) <= 1e-12);
        }
    }
}

TEST_CASE("symmetric circulants agree with the Jacobi oracle") {
    for (const CirculantParams p :
         {CirculantParams{{0, 1, 0, 1}}, CirculantParams{{3, 2, 0, 0, 0, 2}},
          CirculantParams{{1, -2, 4, 4, -2}}}) {
        std::vector<double> analytic;
        for (const auto& pair : circulant_eigenpairs(p)) {
            CHECK(std::abs(pair.value.imag()) <= 1e-12);
            analytic.push_back(pair.value.real());
        }
        const auto m = materialize_circulant(p);
        const auto oracle = jacobi_eigenvalues(DenseSymmetricMatrix::from_dense(m));
        const auto expect = test_support::sorted(analytic);
        for (std::size_t i = 0; i < expect.size(); ++i)
            CHECK(oracle.values[i] == doctest::Approx(expect[i]).epsilon(1e-12));
    }
}

TEST_CASE("circulant eigenpair properties on random rows") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 8; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 24));
        CirculantParams p;
        p.row.resize(n);
        for (auto& x : p.row) x = rng.uniform(-4.0, 4.0);
        const auto m = materialize_circulant(p);
        const auto pairs = circulant_eigenpairs(p);

        // eigenpair residuals (complex eigenvalues in general)
        for (const auto& pair : pairs) CHECK(complex_residual(m, pair) <= 1e-10);

        // trace identity
        std::complex<double> sum = 0.0;
        for (const auto& pair : pairs) sum += pair.value;
        const double trace = static_cast<double>(n) * p.row[0];
        CHECK(std::abs(sum - trace) <= 1e-10 * (1.0 + std::abs(trace)));

        // DFT orthogonality: V^H V = n I
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::complex<double> dot = 0.0;
                for (std::size_t r = 0; r < n; ++r)
                    dot += std::conj(pairs[i].vector[r]) * pairs[j].vector[r];
                const double expect = i == j ? static_cast<double>(n) : 0.0;
                CHECK(std::abs(dot - expect) <= 1e-10 * static_cast<double>(n));
            }
    }
}
