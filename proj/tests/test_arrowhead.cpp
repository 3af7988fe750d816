#include "abc/arrowhead.hpp"

#include <cmath>

#include "doctest.h"

#include "abc/errors.hpp"
#include "abc/oracle.hpp"
#include "abc/verify.hpp"
#include "test_support.hpp"

using namespace abc;

TEST_CASE("arrowhead closed forms on fixtures") {
    const auto s1 = arrowhead_eigenvalues({.n = 1, .h = 0, .b = 1, .d = 0});
    CHECK(s1.lambda_minus == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(s1.lambda_plus == doctest::Approx(1.0).epsilon(1e-15));

    const auto s2 = arrowhead_eigenvalues({.n = 2, .h = 0, .b = 1, .d = 0});
    CHECK(s2.discriminant == doctest::Approx(8.0));
    CHECK(s2.lambda_minus == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-14));
    CHECK(s2.lambda_plus == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(s2.lambda_d == 0.0);

    const auto s3 = arrowhead_eigenvalues({.n = 3, .h = 5, .b = 2, .d = -1});
    CHECK(s3.discriminant == doctest::Approx(84.0));
    CHECK(s3.lambda_minus == doctest::Approx((4.0 - std::sqrt(84.0)) / 2.0).epsilon(1e-14));
    CHECK(s3.lambda_plus == doctest::Approx((4.0 + std::sqrt(84.0)) / 2.0).epsilon(1e-14));
    CHECK(s3.values() == std::vector<double>{s3.lambda_minus, -1.0, -1.0, s3.lambda_plus});
}

TEST_CASE("arrowhead spectrum cardinality") {
    CHECK(arrowhead_spectrum_cardinality({.n = 1, .h = 3, .b = 1, .d = 7}) == 2);
    CHECK(arrowhead_spectrum_cardinality({.n = 5, .h = 0, .b = 1, .d = 0}) == 3);
    CHECK_THROWS_AS(arrowhead_spectrum_cardinality({.n = 2, .h = 0, .b = 0, .d = 1}), ZeroBorderError);
}

TEST_CASE("arrowhead properties on random parameters") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        ArrowheadParams p;
        p.n = rng.uniform_int(1, 40);
        p.h = rng.uniform(-6.0, 6.0);
        p.d = rng.uniform(-6.0, 6.0);
        do {
            p.b = rng.uniform(-3.0, 3.0);
        } while (p.b == 0.0);

        const auto s = arrowhead_eigenvalues(p);

        // strict interlacing of the diagonal value
        CHECK(s.lambda_minus < p.d);
        CHECK(p.d < s.lambda_plus);

        // trace identity
        const double trace = p.h + p.n * p.d;
        const double sum = s.lambda_minus + s.lambda_plus + (p.n - 1) * p.d;
        CHECK(std::abs(sum - trace) <= 1e-10 * (1.0 + std::abs(trace)));

        // multiset equals the oracle spectrum
        const auto m = materialize_arrowhead(p);
        const auto oracle = jacobi_eigenvalues(m);
        const auto expect = test_support::sorted(s.values());
        for (std::size_t i = 0; i < expect.size(); ++i)
            CHECK(std::abs(oracle.values[i] - expect[i]) <= 1e-10 * (1.0 + m.inf_norm()));

        // characteristic polynomial factorization at a random probe point
        const double x = rng.uniform(-8.0, 8.0);
        const double det = test_support::shifted_determinant(m, x);
        const double closed = std::pow(p.d - x, p.n - 1) * ((p.h - x) * (p.d - x) - p.n * p.b * p.b);
        CHECK(std::abs(det - closed) <= 1e-8 * std::max(1.0, std::abs(closed)));
    }
}

TEST_CASE("arrowhead closed forms handle b = 0 degenerately") {
    const auto s = arrowhead_eigenvalues({.n = 3, .h = 2, .b = 0, .d = -1});
    CHECK(s.lambda_plus == doctest::Approx(2.0));
    CHECK(s.lambda_minus == doctest::Approx(-1.0));
}
