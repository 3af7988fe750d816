#include "abc/arrowhead.hpp"

#include <cmath>

#include "abc/errors.hpp"

namespace abc {

std::vector<double> ArrowheadSpectrum::values() const {
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(n) + 1);
    v.push_back(lambda_minus);
    for (int k = 1; k < n; ++k) v.push_back(lambda_d);
    v.push_back(lambda_plus);
    return v;
}

ArrowheadSpectrum arrowhead_eigenvalues(const ArrowheadParams& p) {
    if (p.n < 1) throw UnsupportedOrderError("arrowhead matrix needs n >= 1");

    const double diff = p.h - p.d;
    const double disc = diff * diff + 4.0 * p.n * p.b * p.b;
    const double root = std::sqrt(disc);
    const double sum = p.h + p.d;

    ArrowheadSpectrum out;
    out.n = p.n;
    out.lambda_d = p.d;
    out.discriminant = disc;
    if (root == 0.0) {
        // h == d with b == 0
        out.lambda_minus = out.lambda_plus = sum / 2.0;
    } else if (sum >= 0.0) {
        // solve the quadratic from the non-cancelling root; product is h d - n b^2
        out.lambda_plus = (sum + root) / 2.0;
        out.lambda_minus = (p.h * p.d - p.n * p.b * p.b) / out.lambda_plus;
    } else {
        out.lambda_minus = (sum - root) / 2.0;
        out.lambda_plus = (p.h * p.d - p.n * p.b * p.b) / out.lambda_minus;
    }
    return out;
}

int arrowhead_spectrum_cardinality(const ArrowheadParams& p) {
    if (p.b == 0.0) throw ZeroBorderError();
    if (p.n < 1) throw UnsupportedOrderError("arrowhead matrix needs n >= 1");
    return p.n == 1 ? 2 : 3;
}

}  // namespace abc
