#pragma once

#include <optional>
#include <utility>

#include "abc/matrices.hpp"
#include "abc/spectrum.hpp"

namespace abc {

/// A point of the (c, lambda) plane.
struct SpectralPoint {
    double c = 0;
    double lambda = 0;
};

enum class TransitionBranch { OnLambdaMinus, OnLambdaPlus };

/// Position of the tire weight a relative to the critical couplings +-1/4.
enum class CouplingRegime {
    BelowCriticalNeg,  // a < -1/4
    CriticalNeg,       // a = -1/4
    NegSmall,          // -1/4 < a < 0
    ZeroTire,          // a = 0
    PosSmall,          // 0 < a < 1/4
    CriticalPos,       // a = 1/4
    AboveCriticalPos   // a > 1/4
};

/// Distinguished points of the eigenline picture at fixed (n, a), |b| = 1:
///
///   uppermost U:  global maximum of lambda_-(c),
///                 c = -((n-1) + 2a)/(n+1),  lambda = 2n(a-1)/(n+1)
///   lowermost L:  global minimum of lambda_+(c),
///                 c = ((n-1) - 2a)/(n+1),   lambda = 2n(a+1)/(n+1)
///   transition T: lambda_-+ meets the limit line lambda = c - 2a (a != 0),
///                 c = (8a^2 - n)/(4(n+1)a), lambda = -n(8a^2 + 1)/(4(n+1)a)
///   limit T_inf:  n -> infinity limit of T, (-1/(4a)) (1, 8a^2 + 1)
///
/// The n = 2 Tilde convention replaces 2a by a throughout (evaluation at a/2).
struct SpecialPoints {
    SpectralPoint uppermost;
    SpectralPoint lowermost;
    std::optional<SpectralPoint> transition;        // absent for a = 0
    TransitionBranch transition_branch = TransitionBranch::OnLambdaMinus;
    std::optional<SpectralPoint> limit_transition;  // absent for a = 0
    CouplingRegime regime = CouplingRegime::ZeroTire;
    bool transition_actual = false;  // an eigenvalue branch switch occurs only for even n
};

/// Throws UnsupportedOrderError for n < 2.
SpecialPoints special_points(int n, double a, N2Variant variant = N2Variant::Doubled);

/// The limit transition curve lambda = c + 1/(2c). Throws ZeroAbscissaError at c = 0.
double limit_transition_curve(double c);

enum class Branch { LambdaMinus, LambdaPlus, LambdaHalf, LambdaQ };

/// Extreme eigenvalues of m_n(a, b, c) at the given c, with the analytic family
/// attaining each one. Even n uses the closed-form piecewise rule
/// (a > 0: lambda_min follows c - 2a up to the transition, lambda_-(c) beyond;
/// mirrored for a < 0; plain lambda_-+ for a = 0); odd n falls back to direct
/// comparison over the full analytic spectrum.
struct ExtremeEigenvalues {
    double lambda_min = 0;
    double lambda_max = 0;
    Branch active_branch_min = Branch::LambdaMinus;
    Branch active_branch_max = Branch::LambdaPlus;
};

/// Throws as abc_spectrum. The c field of `p` is ignored in favor of the argument.
ExtremeEigenvalues extreme_eigenvalues(const AbcParams& p, double c);

enum class ExtremumKind { MinOfMax, MaxOfMin };
enum class Configuration { Collinear, Coplanar, Spatial };

/// One extremum of the piecewise extreme eigenvalue over the gauge c.
/// The degeneracy counts how often the extremal value occurs in the spectrum
/// at that c; it labels the matching ground-state configuration.
struct ExtremeExtremum {
    SpectralPoint location;
    ExtremumKind kind = ExtremumKind::MinOfMax;
    int degeneracy = 1;
    Configuration configuration = Configuration::Collinear;
};

/// (min-of-max, max-of-min) for even n, |b| = 1. The min of lambda_max sits at
/// the transition point for a <= -1/4 and at L otherwise; the max of lambda_min
/// sits at the transition point for a >= 1/4 and at U otherwise. Degeneracy is
/// 2 at a transition-point extremum and 1 at U/L; at the critical couplings
/// a = +-1/4 exactly (where T coincides with U/L) it is counted from the
/// numeric oracle instead of asserted.
std::pair<ExtremeExtremum, ExtremeExtremum> extreme_extrema(int n, double a);

/// 1 -> Collinear, 2 -> Coplanar, 3 -> Spatial; anything else throws
/// UnsupportedDegeneracyError (higher degeneracy is reported, not classified).
Configuration classify_configuration(int degeneracy);

}  // namespace abc
