#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace abc {

/// Convention for the order-3 abc matrix (n = 2), where the wrap-around of the
/// cyclic tire makes two inequivalent definitions possible.
///
/// Doubled: tire block circ(c, 2a) — the two parallel tire edges add up, and
///          the general n >= 3 closed forms apply verbatim. Default.
/// Tilde:   tire block [[c, a], [a, c]] — a plain weighted triangle.
///
/// Ignored for n >= 3. For n = 1, Tilde gives the traceless [[ -c, b ], [ b, c ]]
/// and Doubled gives [[ -c, b ], [ b, c + 2a ]] (trace 2a).
enum class N2Variant { Tilde, Doubled };

/// circ(c0, c1, ..., c_{n-1}): row j is the first row shifted j positions right.
struct CirculantParams {
    std::vector<double> row;

    std::size_t order() const noexcept { return row.size(); }
};

/// Regular arrowhead matrix A_n(h, b, d) of order n + 1: headpoint h, constant
/// border b, constant diagonal block d·I.
struct ArrowheadParams {
    int n = 1;     // block size; matrix order is n + 1
    double h = 0;  // headpoint entry
    double b = 0;  // border weight
    double d = 0;  // diagonal weight
};

/// Traceless regular abc matrix m_n(a, b, c): circulant tire circ(c, a, 0, ..., 0, a)
/// of order n, bordered by constant b, headpoint -n c.
struct AbcParams {
    int n = 3;
    double a = 0;  // tire (cyclic) weight
    double b = 1;  // spoke weight; b != 0 required at analytic entry points
    double c = 0;  // tire vertex weight (circulant diagonal)
    N2Variant n2_variant = N2Variant::Doubled;

    /// False only for the n = 1 Doubled matrix, whose trace is 2a.
    bool traceless() const noexcept { return n >= 2 || n2_variant == N2Variant::Tilde; }
};

/// Dense square matrix, row-major.
class DenseMatrix {
  public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t order) : order_(order), data_(order * order, 0.0) {}

    std::size_t order() const noexcept { return order_; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * order_ + c]; }
    double& operator()(std::size_t r, std::size_t c) { return data_[r * order_ + c]; }
    std::span<const double> entries() const noexcept { return data_; }

    /// Maximum absolute row sum.
    double inf_norm() const;
    /// Frobenius norm.
    double frobenius_norm() const;
    /// Bit-exact symmetry test.
    bool is_symmetric() const;

  private:
    std::size_t order_ = 0;
    std::vector<double> data_;
};

/// Dense symmetric matrix; symmetry holds bit-exactly by construction
/// (mirror entries are assigned, never recomputed).
class DenseSymmetricMatrix {
  public:
    DenseSymmetricMatrix() = default;
    explicit DenseSymmetricMatrix(std::size_t order) : m_(order) {}

    /// Checked conversion; throws Error if the argument is not bit-symmetric.
    static DenseSymmetricMatrix from_dense(const DenseMatrix& m);

    std::size_t order() const noexcept { return m_.order(); }
    double operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

    /// Assign entry (r, c) and its mirror.
    void set(std::size_t r, std::size_t c, double v) {
        m_(r, c) = v;
        m_(c, r) = v;
    }
    /// Accumulate onto entry (r, c) and copy the result to the mirror.
    void add(std::size_t r, std::size_t c, double v) {
        m_(r, c) += v;
        m_(c, r) = m_(r, c);
    }

    const DenseMatrix& dense() const noexcept { return m_; }
    operator const DenseMatrix&() const noexcept { return m_; }
    double inf_norm() const { return m_.inf_norm(); }
    double frobenius_norm() const { return m_.frobenius_norm(); }

  private:
    DenseMatrix m_;
};

DenseMatrix materialize_circulant(const CirculantParams& p);
DenseSymmetricMatrix materialize_arrowhead(const ArrowheadParams& p);
DenseSymmetricMatrix materialize_abc(const AbcParams& p);

/// Result of factoring out the spoke weight: m_n(a, b, c) = scale * m_n(a/b, 1, c/b).
/// The spectrum of the original is scale times the spectrum of `normalized`
/// (as a multiset; ordering reverses when scale < 0).
struct BScaling {
    double scale;
    AbcParams normalized;
};

/// Throws ZeroBorderError when b = 0 (use the diagonal-block decomposition instead).
BScaling normalize_b(const AbcParams& p);

}  // namespace abc
