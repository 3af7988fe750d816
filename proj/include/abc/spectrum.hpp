#pragma once

#include <complex>
#include <vector>

#include "abc/matrices.hpp"

namespace abc {

/// Closed-form spectrum of the traceless regular abc matrix m_n(a, b, c), n >= 2:
///
///   D        = (2a + (n+1)c)^2 + 4 n b^2
///   beta_-+  = -(2a + (n+1)c +- sqrt(D)) / (2b)
///   lambda_-+ = b beta_-+ + 2a + c = (2a - (n-1)c -+ sqrt(D)) / 2
///   lambda_k = c + 2a cos(2 pi k / n),  k = 1..n-1
///
/// For n = 2 the Tilde convention replaces the doubled tire coupling 2a by a,
/// i.e. the forms are evaluated at a/2.
struct AbcSpectrum {
    double lambda_minus = 0;
    double lambda_plus = 0;
    double beta_minus = 0;
    double beta_plus = 0;
    double discriminant = 0;
    std::vector<double> lambda_k;  // tire family, index k-1 holds lambda_k
    int p = 0;                     // floor((n-1)/2): number of equal tire pairs
    int q = 0;                     // floor(n/2)

    /// All n + 1 eigenvalues: lambda_-, lambda_1..lambda_{n-1}, lambda_+.
    std::vector<double> values() const;
};

/// Tire weight entering the n >= 2 closed forms: a/2 under the n = 2 Tilde
/// convention (one tire edge instead of the doubled pair), a otherwise.
double effective_tire_weight(const AbcParams& p);

/// Spectrum for n >= 2 (n = 2 served through the variant-aware small-n path).
/// Throws UnsupportedOrderError for n < 2, ZeroBorderError for b = 0.
AbcSpectrum abc_spectrum(const AbcParams& p);

/// Spectra of the order-2 and order-3 matrices (n = 1, 2), both conventions.
/// n = 1 Tilde: {-+sqrt(b^2 + c^2)}; n = 1 Doubled: arrowhead A_1(-c, b, c + 2a).
/// Throws ZeroBorderError for b = 0, UnsupportedOrderError for n not in {1, 2}.
AbcSpectrum small_n_spectrum(const AbcParams& p);

/// Eigenvectors: w_-+ = [beta_-+, 1, ..., 1]; w_k = [0, 1, w^k, ..., w^{(n-1)k}].
struct AbcEigenbasis {
    std::vector<double> w_minus;
    std::vector<double> w_plus;
    std::vector<std::vector<std::complex<double>>> w_k;  // k = 1..n-1 at index k-1
};

/// Throws as abc_spectrum; n >= 2.
AbcEigenbasis abc_eigenbasis(const AbcParams& p);

/// Abscissas c_k, k = 1..floor(n/2), where the tire eigenline lambda_k(c) meets
/// lambda_-(c) for a > 0 (lambda_+(c) for a < 0), under |b| = 1:
///
///   c_k = (4a^2 cos(k phi)(1 - cos(k phi)) + n) / (2(n+1) a (cos(k phi) - 1))
///
/// Strictly increasing in k for a > 0, decreasing for a < 0.
/// Throws ZeroTireError for a = 0, UnsupportedOrderError for n < 2.
std::vector<double> crossing_abscissas(int n, double a);

/// Number of distinct eigenvalues of m_n(a, b, c): floor(n/2) + 1 when c sits on
/// a crossing abscissa (within eps_c = 1e-9 (1 + |c|)), floor(n/2) + 2 otherwise;
/// min(n + 1, 3) for a = 0. General b is routed through normalize_b (the count is
/// scale invariant). Throws ZeroBorderError for b = 0.
int spectrum_cardinality(const AbcParams& p);

struct EigenvalueGroup {
    double value;
    int multiplicity;
};

/// Spectrum grouped into (value, multiplicity) pairs using the structural
/// identities (lambda_k = lambda_{n-k} exactly; lambda_k = lambda_-+ iff c = c_k)
/// rather than floating comparison of computed values. Sorted by value.
std::vector<EigenvalueGroup> multiplicity_profile(const AbcParams& p);

}  // namespace abc
