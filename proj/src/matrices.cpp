#include "abc/matrices.hpp"

#include <cmath>
#include <cstdlib>

#include "abc/errors.hpp"

namespace abc {

double DenseMatrix::inf_norm() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < order_; ++r) {
        double row_sum = 0.0;
        for (std::size_t c = 0; c < order_; ++c) row_sum += std::abs((*this)(r, c));
        worst = std::max(worst, row_sum);
    }
    return worst;
}

double DenseMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (double v : data_) sum += v * v;
    return std::sqrt(sum);
}

bool DenseMatrix::is_symmetric() const {
    for (std::size_t r = 0; r < order_; ++r)
        for (std::size_t c = r + 1; c < order_; ++c)
            if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
}

DenseSymmetricMatrix DenseSymmetricMatrix::from_dense(const DenseMatrix& m) {
    if (!m.is_symmetric()) throw Error("matrix is not bit-exactly symmetric");
    DenseSymmetricMatrix s(m.order());
    s.m_ = m;
    return s;
}

DenseMatrix materialize_circulant(const CirculantParams& p) {
    const std::size_t n = p.order();
    if (n < 1) throw UnsupportedOrderError("circulant matrix needs order >= 1");
    DenseMatrix m(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = p.row[(c + n - r) % n];
    return m;
}

DenseSymmetricMatrix materialize_arrowhead(const ArrowheadParams& p) {
    if (p.n < 1) throw UnsupportedOrderError("arrowhead matrix needs n >= 1");
    const auto n = static_cast<std::size_t>(p.n);
    DenseSymmetricMatrix m(n + 1);
    m.set(0, 0, p.h);
    for (std::size_t j = 1; j <= n; ++j) {
        m.set(0, j, p.b);
        m.set(j, j, p.d);
    }
    return m;
}

DenseSymmetricMatrix materialize_abc(const AbcParams& p) {
    if (p.n < 1) throw UnsupportedOrderError("abc matrix needs n >= 1");
    const auto n = static_cast<std::size_t>(p.n);
    DenseSymmetricMatrix m(n + 1);
    m.set(0, 0, -(static_cast<double>(p.n) * p.c));
    for (std::size_t j = 1; j <= n; ++j) {
        m.set(0, j, p.b);
        m.set(j, j, p.c);
    }
    if (p.n >= 3) {
        for (std::size_t j = 1; j <= n; ++j) m.set(j, j % n + 1, p.a);
    } else if (p.n == 2) {
        m.set(1, 2, p.n2_variant == N2Variant::Doubled ? 2 * p.a : p.a);
    } else if (p.n2_variant == N2Variant::Doubled) {
        m.set(1, 1, p.c + 2 * p.a);
    }
    return m;
}

BScaling normalize_b(const AbcParams& p) {
    if (p.b == 0.0) throw ZeroBorderError();
    AbcParams q = p;
    q.a = p.a / p.b;
    q.b = 1.0;
    q.c = p.c / p.b;
    return {p.b, q};
}

}  // namespace abc
