#include "abc/oracle.hpp"

#include <cmath>
#include <complex>

#include "doctest.h"

#include "abc/errors.hpp"
#include "abc/matrices.hpp"
#include "abc/verify.hpp"
#include "test_support.hpp"

using namespace abc;

namespace {

DenseSymmetricMatrix random_symmetric(SplitMix64& rng, std::size_t order) {
    DenseSymmetricMatrix m(order);
    for (std::size_t r = 0; r < order; ++r)
        for (std::size_t c = r; c < order; ++c) m.set(r, c, rng.uniform(-5.0, 5.0));
    return m;
}

}  // namespace

TEST_CASE("jacobi on tiny fixtures") {
    DenseSymmetricMatrix swap2(2);
    swap2.set(0, 1, 1.0);
    const auto e2 = jacobi_eigenvalues(swap2);
    CHECK(e2.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(e2.values[1] == doctest::Approx(1.0).epsilon(1e-14));

    // complete graph K3
    DenseSymmetricMatrix k3(3);
    k3.set(0, 1, 1.0);
    k3.set(0, 2, 1.0);
    k3.set(1, 2, 1.0);
    const auto e3 = jacobi_eigenvalues(k3);
    CHECK(e3.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(e3.values[1] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(e3.values[2] == doctest::Approx(2.0).epsilon(1e-14));

    DenseSymmetricMatrix one(1);
    one.set(0, 0, 4.5);
    const auto e1 = jacobi_eigenvalues(one);
    CHECK(e1.values[0] == 4.5);
    CHECK(e1.iterations == 0);
}

TEST_CASE("jacobi matches the frozen m6(2,1,0) spectrum") {
    const auto m = materialize_abc({.n = 6, .a = 2, .b = 1, .c = 0});
    const auto eig = jacobi_eigenvalues(m);
    const double r10 = std::sqrt(10.0);
    const std::vector<double> expected{-4.0, -2.0, -2.0, 2.0 - r10, 2.0, 2.0, 2.0 + r10};
    REQUIRE(eig.values.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(eig.values[i] == doctest::Approx(expected[i]).epsilon(1e-13));
    CHECK(eig.offdiag_norm <= 1e-12 * m.frobenius_norm());
}

TEST_CASE("jacobi preserves trace and Frobenius norm") {
    SplitMix64 rng(3);
    for (std::size_t order : {2u, 5u, 17u, 33u}) {
        const auto m = random_symmetric(rng, order);
        const auto eig = jacobi_eigenvalues(m);

        double trace = 0.0;
        for (std::size_t i = 0; i < order; ++i) trace += m(i, i);
        double sum = 0.0, sumsq = 0.0;
        for (double v : eig.values) {
            sum += v;
            sumsq += v * v;
        }
        CHECK(std::abs(sum - trace) <= 1e-10 * static_cast<double>(order) * m.inf_norm());
        const double frob2 = m.frobenius_norm() * m.frobenius_norm();
        CHECK(sumsq == doctest::Approx(frob2).epsilon(1e-9));
    }
}

TEST_CASE("jacobi is deterministic") {
    SplitMix64 rng(5);
    const auto m = random_symmetric(rng, 12);
    const auto e1 = jacobi_eigenvalues(m);
    const auto e2 = jacobi_eigenvalues(m);
    CHECK(e1.iterations == e2.iterations);
    CHECK(e1.offdiag_norm == e2.offdiag_norm);
    for (std::size_t i = 0; i < e1.values.size(); ++i) CHECK(e1.values[i] == e2.values[i]);
}

TEST_CASE("residual separates right from wrong eigenpairs") {
    DenseSymmetricMatrix eye(4);
    for (std::size_t i = 0; i < 4; ++i) eye.set(i, i, 1.0);
    const std::vector<double> v{0.3, -2.0, 0.0, 1.0};
    CHECK(residual(eye, 1.0, std::span<const double>(v)) <= 1e-15);

    const auto m = materialize_abc({.n = 6, .a = 2, .b = 1, .c = 0});
    const double r10 = std::sqrt(10.0);
    const std::vector<double> w_plus{-2.0 + r10, 1, 1, 1, 1, 1, 1};
    CHECK(residual(m, 2.0 + r10, std::span<const double>(w_plus)) <= 1e-10);
    CHECK(residual(m, 0.0, std::span<const double>(w_plus)) >= 0.1);

    const std::vector<double> zero(7, 0.0);
    CHECK_THROWS_AS(residual(m, 1.0, std::span<const double>(zero)), ZeroVectorError);
}

TEST_CASE("count_near") {
    const std::vector<double> values{-1.0, -1.0, 2.0};
    CHECK(count_near(values, -1.0, 1e-9) == 2);
    CHECK(count_near(values, 3.0, 1e-9) == 0);
    CHECK(count_near(values, 2.0 + 5e-10, 1e-9) == 1);
}

TEST_CASE("count_near degeneracies at the crossing abscissas of m6(2,1,c)") {
    // at c_3 = 13/28 the unpaired tire eigenvalue merges with lambda_- into a
    // double; the triple sits at c_1 = -5/7 where a tire PAIR meets lambda_-
    const auto at = [](double c) {
        return jacobi_eigenvalues(materialize_abc({.n = 6, .a = 2, .b = 1, .c = c}));
    };
    CHECK(count_near(at(13.0 / 28.0).values, -99.0 / 28.0, 1e-7) == 2);
    CHECK(count_near(at(-5.0 / 7.0).values, 9.0 / 7.0, 1e-7) == 3);
}
