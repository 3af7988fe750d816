#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "abc/matrices.hpp"

namespace abc::cli {

enum class Format { Text, Json, Csv, Dot };

// Exit codes shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct SpectrumRequest {
    int n = 6;
    double a = 0;
    double b = 1;
    double c = 0;
    std::optional<N2Variant> variant;  // mandatory for n = 1
    bool allow_diagonal = false;       // b = 0: report the block decomposition
    bool eigenvectors = false;
    Format format = Format::Text;
};

/// Eigenvalues, multiplicity profile and cardinality for one parameter set.
int cmd_spectrum(const SpectrumRequest& req, std::ostream& out, std::ostream& err);

/// One eigenline sweep: lambda(c) for every analytic family plus the two
/// asymptote columns lambda_sep = c + 2a and lambda = -n c.
struct SweepSpec {
    int n = 6;
    double a = 0;
    double b = 1;
    double c_min = -3;
    double c_max = 3;
    int steps = 601;
};

int cmd_eigenlines(const SweepSpec& spec, std::ostream& out, std::ostream& err);

struct TransitionCurveRequest {
    std::vector<int> n_list;
    double a_min = 0.25;
    double a_max = 4.0;
    int steps = 100;
    std::vector<double> mark_a;  // extra rows at exactly these abscissas
    N2Variant n2_variant = N2Variant::Doubled;
};

/// Transition curves T_n(a) as CSV, with `n=inf` rows for the limit curve.
int cmd_transition_curve(const TransitionCurveRequest& req, std::ostream& out, std::ostream& err);

struct ExtremesRequest {
    int n = 6;
    double a = 0;
    Format format = Format::Text;
};

/// Special points, regime, and the extreme extrema with degeneracy labels.
int cmd_extremes(const ExtremesRequest& req, std::ostream& out, std::ostream& err);

struct VerifyRequest {
    int trials = 200;
    std::uint64_t seed = 42;
    double tol = 1e-9;
    Format format = Format::Text;
};

/// Analytic-vs-oracle and structural property suites over random parameters.
int cmd_verify(const VerifyRequest& req, std::ostream& out, std::ostream& err);

struct GraphRequest {
    int n = 6;
    double a = 0;
    double b = 1;
    double c = 0;
    std::optional<N2Variant> variant;
    Format format = Format::Dot;
};

/// Weighted wheel graph export (DOT or JSON).
int cmd_graph(const GraphRequest& req, std::ostream& out, std::ostream& err);

}  // namespace abc::cli
