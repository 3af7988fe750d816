#include "abc/special_points.hpp"

#include <cmath>

#include "abc/errors.hpp"
#include "abc/oracle.hpp"

namespace abc {

namespace {

CouplingRegime classify_regime(double a) {
    if (a < -0.25) return CouplingRegime::BelowCriticalNeg;
    if (a == -0.25) return CouplingRegime::CriticalNeg;
    if (a < 0.0) return CouplingRegime::NegSmall;
    if (a == 0.0) return CouplingRegime::ZeroTire;
    if (a < 0.25) return CouplingRegime::PosSmall;
    if (a == 0.25) return CouplingRegime::CriticalPos;
    return CouplingRegime::AboveCriticalPos;
}

}  // namespace

SpecialPoints special_points(int n, double a, N2Variant variant) {
    if (n < 2) throw UnsupportedOrderError("special points need n >= 2");
    const double ae = (n == 2 && variant == N2Variant::Tilde) ? a / 2.0 : a;
    const double np1 = n + 1;

    SpecialPoints sp;
    sp.uppermost = {-((n - 1) + 2.0 * ae) / np1, 2.0 * n * (ae - 1.0) / np1};
    sp.lowermost = {((n - 1) - 2.0 * ae) / np1, 2.0 * n * (ae + 1.0) / np1};
    if (ae != 0.0) {
        sp.transition = SpectralPoint{(8.0 * ae * ae - n) / (4.0 * np1 * ae),
                                      -n * (8.0 * ae * ae + 1.0) / (4.0 * np1 * ae)};
        sp.limit_transition = SpectralPoint{-1.0 / (4.0 * ae), -(8.0 * ae * ae + 1.0) / (4.0 * ae)};
        sp.transition_branch = ae > 0.0 ? TransitionBranch::OnLambdaMinus : TransitionBranch::OnLambdaPlus;
    }
    sp.regime = classify_regime(ae);
    sp.transition_actual = (n % 2 == 0);
    return sp;
}

double limit_transition_curve(double c) {
    if (c == 0.0) throw ZeroAbscissaError();
    return c + 1.0 / (2.0 * c);
}

namespace {

struct Candidate {
    double value;
    Branch branch;
};

// Extreme of the tire family by direct scan; ties keep the smallest k.
Candidate tire_extreme(const AbcSpectrum& s, int n, bool want_min) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < s.lambda_k.size(); ++i) {
        const bool better = want_min ? s.lambda_k[i] < s.lambda_k[best] : s.lambda_k[i] > s.lambda_k[best];
        if (better) best = i;
    }
    const bool half = n % 2 == 0 && static_cast<int>(best) + 1 == n / 2;
    return {s.lambda_k[best], half ? Branch::LambdaHalf : Branch::LambdaQ};
}

}  // namespace

ExtremeEigenvalues extreme_eigenvalues(const AbcParams& params, double c) {
    AbcParams p = params;
    p.c = c;
    const AbcSpectrum s = abc_spectrum(p);
    const double ae = effective_tire_weight(p);

    ExtremeEigenvalues out;
    if (p.n % 2 == 0 && ae != 0.0) {
        // Closed-form fast path. The branch choice compares the two candidate
        // values, which is the c <-> c_trans threshold (the crossing is unique,
        // and the tire branch is the stated one at equality).
        const double half = s.lambda_k[p.n / 2 - 1];  // = c - 2a
        if (ae > 0.0) {
            out.lambda_max = s.lambda_plus;
            out.active_branch_max = Branch::LambdaPlus;
            if (half <= s.lambda_minus) {
                out.lambda_min = half;
                out.active_branch_min = Branch::LambdaHalf;
            } else {
                out.lambda_min = s.lambda_minus;
                out.active_branch_min = Branch::LambdaMinus;
            }
        } else {
            out.lambda_min = s.lambda_minus;
            out.active_branch_min = Branch::LambdaMinus;
            if (half >= s.lambda_plus) {
                out.lambda_max = half;
                out.active_branch_max = Branch::LambdaHalf;
            } else {
                out.lambda_max = s.lambda_plus;
                out.active_branch_max = Branch::LambdaPlus;
            }
        }
    } else if (ae == 0.0) {
        out.lambda_min = s.lambda_minus;
        out.active_branch_min = Branch::LambdaMinus;
        out.lambda_max = s.lambda_plus;
        out.active_branch_max = Branch::LambdaPlus;
    } else {
        // odd order: no closed-form transition; compare the full spectrum
        Candidate cmin = tire_extreme(s, p.n, true);
        if (s.lambda_minus < cmin.value) cmin = {s.lambda_minus, Branch::LambdaMinus};
        out.lambda_min = cmin.value;
        out.active_branch_min = cmin.branch;

        Candidate cmax = tire_extreme(s, p.n, false);
        if (s.lambda_plus > cmax.value) cmax = {s.lambda_plus, Branch::LambdaPlus};
        out.lambda_max = cmax.value;
        out.active_branch_max = cmax.branch;
    }
    return out;
}

namespace {

int oracle_degeneracy(int n, double a, const SpectralPoint& at) {
    const auto oracle = jacobi_eigenvalues(materialize_abc({.n = n, .a = a, .b = 1.0, .c = at.c}));
    return count_near(oracle.values, at.lambda, 1e-7);
}

ExtremeExtremum make_extremum(int n, double a, ExtremumKind kind, const SpecialPoints& sp) {
    const bool at_transition =
        kind == ExtremumKind::MinOfMax ? a <= -0.25 : a >= 0.25;

    ExtremeExtremum ex;
    ex.kind = kind;
    if (at_transition) {
        ex.location = *sp.transition;
        const bool critical = a == -0.25 || a == 0.25;
        ex.degeneracy = critical ? oracle_degeneracy(n, a, ex.location) : 2;
    } else {
        ex.location = kind == ExtremumKind::MinOfMax ? sp.lowermost : sp.uppermost;
        ex.degeneracy = 1;
    }
    ex.configuration = classify_configuration(ex.degeneracy);
    return ex;
}

}  // namespace

std::pair<ExtremeExtremum, ExtremeExtremum> extreme_extrema(int n, double a) {
    if (n < 2 || n % 2 != 0)
        throw UnsupportedOrderError("closed-form extreme extrema need an even n >= 2");
    const SpecialPoints sp = special_points(n, a);
    return {make_extremum(n, a, ExtremumKind::MinOfMax, sp),
            make_extremum(n, a, ExtremumKind::MaxOfMin, sp)};
}

Configuration classify_configuration(int degeneracy) {
    switch (degeneracy) {
        case 1: return Configuration::Collinear;
        case 2: return Configuration::Coplanar;
        case 3: return Configuration::Spatial;
        default: throw UnsupportedDegeneracyError(degeneracy);
    }
}

}  // namespace abc
