#include "abc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

#include "abc/errors.hpp"
#include "abc/oracle.hpp"
#include "abc/spectrum.hpp"

namespace abc {

namespace {

std::string describe(const AbcParams& p) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "n=%d a=%.17g b=%.17g c=%.17g", p.n, p.a, p.b, p.c);
    return buf;
}

// Runs `deviation` over all cases; a case fails when its deviation exceeds tol.
SuiteResult run_suite(const std::string& name, const std::vector<AbcParams>& cases, double tol,
                      const std::function<double(const AbcParams&)>& deviation) {
    SuiteResult r;
    r.name = name;
    r.cases = static_cast<int>(cases.size());
    r.tolerance = tol;
    r.worst = -std::numeric_limits<double>::infinity();
    for (const auto& p : cases) {
        double dev = 0.0;
        try {
            dev = deviation(p);
        } catch (const NoConvergenceError& e) {
            throw Error(std::string(e.what()) + " [" + describe(p) + "]");
        }
        if (dev > r.worst) {
            r.worst = dev;
            r.worst_case = describe(p);
        }
        if (dev > tol) ++r.failures;
    }
    return r;
}

std::vector<double> sorted(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

AbcParams sample_abc_params(SplitMix64& rng) {
    AbcParams p;
    p.n = rng.uniform_int(3, 64);
    p.a = rng.uniform(-5.0, 5.0);
    p.c = rng.uniform(-5.0, 5.0);
    do {
        p.b = rng.uniform(-3.0, 3.0);
    } while (p.b == 0.0);
    return p;
}

std::vector<SuiteResult> run_property_suites(const VerifyOptions& options) {
    SplitMix64 rng(options.seed);
    std::vector<AbcParams> cases(options.trials);
    for (auto& p : cases) p = sample_abc_params(rng);

    std::vector<SuiteResult> results;

    results.push_back(run_suite("oracle_equivalence", cases, options.oracle_tol, [](const AbcParams& p) {
        const auto m = materialize_abc(p);
        const auto analytic = sorted(abc_spectrum(p).values());
        const auto numeric = jacobi_eigenvalues(m).values;
        double dev = 0.0;
        for (std::size_t i = 0; i < analytic.size(); ++i)
            dev = std::max(dev, std::abs(analytic[i] - numeric[i]));
        return dev / (1.0 + m.inf_norm());
    }));

    results.push_back(run_suite("trace_zero", cases, 1e-10, [](const AbcParams& p) {
        const auto values = abc_spectrum(p).values();
        double sum = 0.0;
        double peak = 0.0;
        for (double v : values) {
            sum += v;
            peak = std::max(peak, std::abs(v));
        }
        return std::abs(sum) / (static_cast<double>(values.size()) * peak);
    }));

    results.push_back(run_suite("residual", cases, 1e-10, [](const AbcParams& p) {
        const auto m = materialize_abc(p);
        const auto s = abc_spectrum(p);
        const auto basis = abc_eigenbasis(p);
        double dev = residual(m, s.lambda_minus, std::span<const double>(basis.w_minus));
        dev = std::max(dev, residual(m, s.lambda_plus, std::span<const double>(basis.w_plus)));
        for (std::size_t k = 1; k < basis.w_k.size() + 1; ++k)
            dev = std::max(dev, residual(m, s.lambda_k[k - 1],
                                         std::span<const std::complex<double>>(basis.w_k[k - 1])));
        return dev;
    }));

    // strict separation lambda_- < c + 2a < lambda_+; deviation is the signed
    // violation (negative margins pass)
    results.push_back(run_suite("separation", cases, 0.0, [](const AbcParams& p) {
        const auto s = abc_spectrum(p);
        const double sep = p.c + 2.0 * effective_tire_weight(p);
        return std::max(s.lambda_minus - sep, sep - s.lambda_plus);
    }));

    results.push_back(run_suite("pairing", cases, 0.0, [](const AbcParams& p) {
        const auto s = abc_spectrum(p);
        double dev = 0.0;
        for (int k = 1; k <= s.p; ++k)
            if (s.lambda_k[k - 1] != s.lambda_k[p.n - k - 1]) dev = 1.0;
        return dev;
    }));

    results.push_back(run_suite("sign_of_b", cases, 0.0, [](const AbcParams& p) {
        AbcParams flipped = p;
        flipped.b = -p.b;
        const auto v1 = abc_spectrum(p).values();
        const auto v2 = abc_spectrum(flipped).values();
        double dev = 0.0;
        for (std::size_t i = 0; i < v1.size(); ++i)
            if (v1[i] != v2[i]) dev = std::max(dev, std::abs(v1[i] - v2[i]));
        return dev;
    }));

    results.push_back(run_suite("scaling", cases, 1e-10, [](const AbcParams& p) {
        const auto [scale, normalized] = normalize_b(p);
        const auto original = sorted(abc_spectrum(p).values());
        auto rescaled = abc_spectrum(normalized).values();
        for (double& v : rescaled) v *= scale;
        std::sort(rescaled.begin(), rescaled.end());
        double dev = 0.0;
        for (std::size_t i = 0; i < original.size(); ++i)
            dev = std::max(dev, std::abs(original[i] - rescaled[i]) / std::max(1.0, std::abs(original[i])));
        return dev;
    }));

    return results;
}

}  // namespace abc
