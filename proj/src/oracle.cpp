#include "abc/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "abc/errors.hpp"

namespace abc {

namespace {

constexpr int kMaxSweeps = 100;

double offdiag_frobenius(const DenseMatrix& a) {
    const std::size_t n = a.order();
    double sum = 0.0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c) sum += a(r, c) * a(r, c);
    return std::sqrt(2.0 * sum);
}

// One cyclic-by-row sweep of two-sided Jacobi rotations.
void jacobi_sweep(DenseMatrix& a) {
    const std::size_t n = a.order();
    for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            const double apq = a(p, q);
            if (apq == 0.0) continue;
            const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
            const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
            const double c = 1.0 / std::sqrt(t * t + 1.0);
            const double s = t * c;

            a(p, p) -= t * apq;
            a(q, q) += t * apq;
            a(p, q) = 0.0;
            a(q, p) = 0.0;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == p || r == q) continue;
                const double arp = a(r, p);
                const double arq = a(r, q);
                a(r, p) = c * arp - s * arq;
                a(r, q) = s * arp + c * arq;
                a(p, r) = a(r, p);
                a(q, r) = a(r, q);
            }
        }
    }
}

}  // namespace

OracleSpectrum jacobi_eigenvalues(const DenseSymmetricMatrix& m, double tol) {
    DenseMatrix a = m.dense();
    if (tol <= 0.0) tol = 1e-12 * a.frobenius_norm();

    OracleSpectrum out;
    double off = offdiag_frobenius(a);
    int sweeps = 0;
    while (off > tol) {
        if (sweeps >= kMaxSweeps) throw NoConvergenceError(off);
        jacobi_sweep(a);
        ++sweeps;
        off = offdiag_frobenius(a);
    }
    out.iterations = sweeps;
    out.offdiag_norm = off;
    out.values.resize(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) out.values[i] = a(i, i);
    std::sort(out.values.begin(), out.values.end());
    return out;
}

namespace {

template <class Scalar>
double residual_impl(const DenseMatrix& m, double lambda, std::span<const Scalar> v) {
    const std::size_t n = m.order();
    if (v.size() != n) throw Error("residual: vector length does not match matrix order");
    double vmax = 0.0;
    for (const auto& x : v) vmax = std::max(vmax, std::abs(x));
    if (vmax == 0.0) throw ZeroVectorError();

    double rmax = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        Scalar acc{};
        for (std::size_t c = 0; c < n; ++c) acc += m(r, c) * v[c];
        acc -= lambda * v[r];
        rmax = std::max(rmax, std::abs(acc));
    }
    return rmax / ((1.0 + m.inf_norm()) * vmax);
}

}  // namespace

double residual(const DenseMatrix& m, double lambda, std::span<const std::complex<double>> v) {
    return residual_impl(m, lambda, v);
}

double residual(const DenseMatrix& m, double lambda, std::span<const double> v) {
    return residual_impl(m, lambda, v);
}

int count_near(std::span<const double> values, double target, double eps) {
    const auto lo = std::lower_bound(values.begin(), values.end(), target - eps);
    const auto hi = std::upper_bound(values.begin(), values.end(), target + eps);
    return static_cast<int>(hi - lo);
}

}  // namespace abc
