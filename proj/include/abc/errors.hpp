#pragma once

#include <stdexcept>
#include <string>

namespace abc {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The spoke weight b is zero; the matrix decomposes into diagonal blocks
/// and the bordered closed forms do not apply.
struct ZeroBorderError : Error {
    ZeroBorderError() : Error("zero border weight b: matrix is block diagonal, closed forms need b != 0") {}
};

/// The tire weight a is zero; crossing/transition quantities are undefined.
struct ZeroTireError : Error {
    ZeroTireError() : Error("zero tire weight a: eigenline crossings and transition point do not exist") {}
};

/// The limit transition curve lambda = c + 1/(2c) has a pole at c = 0.
struct ZeroAbscissaError : Error {
    ZeroAbscissaError() : Error("limit transition curve is undefined at c = 0") {}
};

struct ZeroVectorError : Error {
    ZeroVectorError() : Error("residual of a zero vector is undefined") {}
};

struct UnsupportedOrderError : Error {
    explicit UnsupportedOrderError(const std::string& what) : Error(what) {}
};

struct UnsupportedDegeneracyError : Error {
    explicit UnsupportedDegeneracyError(int degeneracy)
        : Error("degeneracy " + std::to_string(degeneracy) +
                " has no configuration label (only 1, 2, 3 are classified)") {}
};

/// Jacobi sweep limit exceeded; carries the final off-diagonal norm.
struct NoConvergenceError : Error {
    double offdiag_norm;
    explicit NoConvergenceError(double offdiag)
        : Error("Jacobi eigensolver did not converge within the sweep limit (offdiag norm " +
                std::to_string(offdiag) + ")"),
          offdiag_norm(offdiag) {}
};

}  // namespace abc
