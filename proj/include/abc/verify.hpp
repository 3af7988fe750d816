#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abc/matrices.hpp"

namespace abc {

/// Deterministic, platform-independent 64-bit generator for reproducible
/// parameter sampling (splitmix64).
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    /// Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::uint64_t state_;
};

/// Random abc parameters: n in [3, 64], a, c in [-5, 5], b in [-3, 3] \ {0}.
AbcParams sample_abc_params(SplitMix64& rng);

/// Outcome of one property suite over a shared randomized parameter set.
struct SuiteResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    double worst = 0.0;      // suite-specific deviation measure, larger is worse
    double tolerance = 0.0;  // the deviation bound the suite enforces
    std::string worst_case;  // parameters attaining the worst deviation

    bool passed() const noexcept { return failures == 0; }
};

struct VerifyOptions {
    int trials = 200;
    std::uint64_t seed = 42;
    double oracle_tol = 1e-9;  // oracle-equivalence bound, relative to 1 + ||M||_inf
};

/// Runs the analytic-vs-oracle equivalence suite plus the structural suites
/// (trace-zero, eigenpair residuals, separation, tire pairing, sign-of-b
/// invariance, b-scaling covariance) over one shared randomized parameter set.
std::vector<SuiteResult> run_property_suites(const VerifyOptions& options);

}  // namespace abc
