#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "json.hpp"

#include "abc/circulant.hpp"
#include "abc/errors.hpp"
#include "abc/golden_section.hpp"
#include "abc/oracle.hpp"
#include "abc/special_points.hpp"
#include "abc/spectrum.hpp"
#include "abc/verify.hpp"
#include "abc/wheel.hpp"

namespace abc::cli {

namespace {

using nlohmann::json;

constexpr const char* kSchemaVersion = "1";

// 17 significant digits: enough to round-trip a double, locale independent.
std::string fmt_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

const char* variant_name(N2Variant v) { return v == N2Variant::Tilde ? "tilde" : "doubled"; }

const char* regime_name(CouplingRegime r) {
    switch (r) {
        case CouplingRegime::BelowCriticalNeg: return "below_critical_neg";
        case CouplingRegime::CriticalNeg: return "critical_neg";
        case CouplingRegime::NegSmall: return "neg_small";
        case CouplingRegime::ZeroTire: return "zero_tire";
        case CouplingRegime::PosSmall: return "pos_small";
        case CouplingRegime::CriticalPos: return "critical_pos";
        default: return "above_critical_pos";
    }
}

const char* configuration_name(Configuration c) {
    switch (c) {
        case Configuration::Collinear: return "collinear";
        case Configuration::Coplanar: return "coplanar";
        default: return "spatial";
    }
}

const char* kind_name(WheelKind k) {
    switch (k) {
        case WheelKind::Wheel: return "wheel";
        case WheelKind::Triangle: return "triangle";
        case WheelKind::Digon: return "digon";
        default: return "star";
    }
}

int usage_error(std::ostream& err, const std::string& message) {
    err << "error: " << message << "\n";
    return kExitUsage;
}

// Distinct count by adjacent gaps on sorted values (diagnostic paths only).
int distinct_count(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    double peak = 1.0;
    for (double v : values) peak = std::max(peak, std::abs(v));
    int distinct = values.empty() ? 0 : 1;
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] - values[i - 1] > 1e-9 * peak) ++distinct;
    return distinct;
}

json params_json(const AbcParams& p) {
    json j{{"n", p.n}, {"a", p.a}, {"b", p.b}, {"c", p.c}};
    if (p.n <= 2) j["variant"] = variant_name(p.n2_variant);
    return j;
}

void print_kv(std::ostream& out, const char* key, const std::string& value) {
    out << key << " = " << value << "\n";
}

// b = 0 diagnostic: spectrum of diag(-nc) + tire block.
int spectrum_diagonal_block(const SpectrumRequest& req, const AbcParams& p, std::ostream& out) {
    CirculantParams tire;
    if (p.n >= 3) {
        tire.row.assign(p.n, 0.0);
        tire.row[0] = p.c;
        tire.row[1] = p.a;
        tire.row[p.n - 1] = p.a;
    } else if (p.n == 2) {
        tire.row = {p.c, p.n2_variant == N2Variant::Doubled ? 2 * p.a : p.a};
    } else {
        tire.row = {p.n2_variant == N2Variant::Doubled ? p.c + 2 * p.a : p.c};
    }

    std::vector<double> values{-(static_cast<double>(p.n) * p.c)};
    for (const auto& pair : circulant_eigenpairs(tire)) values.push_back(pair.value.real());
    std::sort(values.begin(), values.end());

    if (req.format == Format::Json) {
        json j{{"schema_version", kSchemaVersion},
               {"command", "spectrum"},
               {"params", params_json(p)},
               {"diagonal_block", true},
               {"values_sorted", values},
               {"cardinality", distinct_count(values)}};
        out << j.dump(2) << "\n";
    } else {
        out << "# b = 0: block decomposition {-n c} + tire spectrum\n";
        for (double v : values) out << fmt_real(v) << "\n";
    }
    return kExitOk;
}

}  // namespace

int cmd_spectrum(const SpectrumRequest& req, std::ostream& out, std::ostream& err) {
    if (req.n < 1) return usage_error(err, "spectrum needs --n >= 1");
    if (req.format != Format::Json && req.format != Format::Text)
        return usage_error(err, "spectrum supports --format json or text");
    if (req.n == 1 && !req.variant)
        return usage_error(err,
                           "n = 1 needs an explicit --variant: 'tilde' is the traceless order-2 form, "
                           "'doubled' has trace 2a and sits outside the traceless family");

    AbcParams p{.n = req.n, .a = req.a, .b = req.b, .c = req.c,
                .n2_variant = req.variant.value_or(N2Variant::Doubled)};

    if (p.b == 0.0) {
        if (p.n >= 2 && !req.allow_diagonal)
            return usage_error(err,
                               "b = 0 splits the matrix into the single entry -n c and the tire block; "
                               "rerun with --allow-diagonal for the block decomposition");
        if (p.n == 1 && !req.allow_diagonal)
            return usage_error(err, "b = 0 is diagonal; rerun with --allow-diagonal");
        return spectrum_diagonal_block(req, p, out);
    }

    const AbcSpectrum s = p.n == 1 ? small_n_spectrum(p) : abc_spectrum(p);
    auto values = s.values();
    std::sort(values.begin(), values.end());

    std::vector<EigenvalueGroup> profile;
    int cardinality = 2;
    if (p.n >= 2) {
        profile = multiplicity_profile(p);
        cardinality = spectrum_cardinality(p);
    } else {
        profile = {{s.lambda_minus, 1}, {s.lambda_plus, 1}};
    }

    if (req.format == Format::Json) {
        json j{{"schema_version", kSchemaVersion},
               {"command", "spectrum"},
               {"params", params_json(p)},
               {"traceless", p.traceless()},
               {"discriminant", s.discriminant},
               {"lambda_minus", s.lambda_minus},
               {"lambda_plus", s.lambda_plus},
               {"beta_minus", s.beta_minus},
               {"beta_plus", s.beta_plus},
               {"lambda_k", s.lambda_k},
               {"values_sorted", values},
               {"cardinality", cardinality}};
        if (effective_tire_weight(p) == 0.0 && p.n >= 2) j["reduction"] = "arrowhead";
        json groups = json::array();
        for (const auto& g : profile) groups.push_back({{"value", g.value}, {"multiplicity", g.multiplicity}});
        j["multiplicity_profile"] = groups;
        if (req.eigenvectors) {
            if (p.n >= 2) {
                const auto basis = abc_eigenbasis(p);
                json wk = json::array();
                for (const auto& w : basis.w_k) {
                    json row = json::array();
                    for (const auto& z : w) row.push_back({z.real(), z.imag()});
                    wk.push_back(row);
                }
                j["eigenvectors"] = {{"w_minus", basis.w_minus}, {"w_plus", basis.w_plus}, {"w_k", wk}};
            } else {
                j["eigenvectors"] = {{"w_minus", {s.beta_minus, 1.0}}, {"w_plus", {s.beta_plus, 1.0}}};
            }
        }
        out << j.dump(2) << "\n";
    } else {
        print_kv(out, "n", std::to_string(p.n));
        if (p.n <= 2) print_kv(out, "variant", variant_name(p.n2_variant));
        print_kv(out, "a", fmt_real(p.a));
        print_kv(out, "b", fmt_real(p.b));
        print_kv(out, "c", fmt_real(p.c));
        print_kv(out, "traceless", p.traceless() ? "yes" : "no");
        print_kv(out, "discriminant", fmt_real(s.discriminant));
        print_kv(out, "lambda_minus", fmt_real(s.lambda_minus));
        print_kv(out, "lambda_plus", fmt_real(s.lambda_plus));
        print_kv(out, "beta_minus", fmt_real(s.beta_minus));
        print_kv(out, "beta_plus", fmt_real(s.beta_plus));
        for (std::size_t k = 1; k <= s.lambda_k.size(); ++k)
            print_kv(out, ("lambda_" + std::to_string(k)).c_str(), fmt_real(s.lambda_k[k - 1]));
        out << "multiplicity_profile:\n";
        for (const auto& g : profile)
            out << "  " << fmt_real(g.value) << " x" << g.multiplicity << "\n";
        print_kv(out, "cardinality", std::to_string(cardinality));
        if (req.eigenvectors) out << "# eigenvectors available with --format json\n";
    }
    return kExitOk;
}

int cmd_eigenlines(const SweepSpec& spec, std::ostream& out, std::ostream& err) {
    if (spec.n < 2) return usage_error(err, "eigenlines needs --n >= 2");
    if (spec.b == 0.0) return usage_error(err, "eigenlines needs b != 0");
    if (spec.steps < 2) return usage_error(err, "eigenlines needs --steps >= 2");
    if (!(spec.c_min < spec.c_max)) return usage_error(err, "eigenlines needs c_min < c_max");

    out << "c,lambda_minus,lambda_plus";
    for (int k = 1; k < spec.n; ++k) out << ",lambda_" << k;
    out << ",lambda_sep,lambda_neg_nc\n";

    AbcParams p{.n = spec.n, .a = spec.a, .b = spec.b, .c = 0.0, .n2_variant = N2Variant::Doubled};
    const double ae = effective_tire_weight(p);
    for (int i = 0; i < spec.steps; ++i) {
        const double c = spec.c_min + (spec.c_max - spec.c_min) * i / (spec.steps - 1);
        p.c = c;
        const AbcSpectrum s = abc_spectrum(p);
        out << fmt_real(c) << ',' << fmt_real(s.lambda_minus) << ',' << fmt_real(s.lambda_plus);
        for (double v : s.lambda_k) out << ',' << fmt_real(v);
        out << ',' << fmt_real(c + 2.0 * ae) << ',' << fmt_real(-(static_cast<double>(spec.n) * c)) << "\n";
    }
    return kExitOk;
}

namespace {

void transition_rows(double a, const TransitionCurveRequest& req, std::ostream& out, std::ostream& err) {
    if (a == 0.0) {
        err << "warning: skipping a = 0 (no transition point exists)\n";
        return;
    }
    for (int n : req.n_list) {
        const auto sp = special_points(n, a, req.n2_variant);
        out << fmt_real(a) << ',' << n << ',' << fmt_real(sp.transition->c) << ','
            << fmt_real(sp.transition->lambda) << "\n";
    }
    const double ae = a;  // the limit curve is variant independent in its own a
    out << fmt_real(a) << ",inf," << fmt_real(-1.0 / (4.0 * ae)) << ','
        << fmt_real(-(8.0 * ae * ae + 1.0) / (4.0 * ae)) << "\n";
}

}  // namespace

int cmd_transition_curve(const TransitionCurveRequest& req, std::ostream& out, std::ostream& err) {
    if (req.n_list.empty()) return usage_error(err, "transition-curve needs at least one --n value");
    for (int n : req.n_list)
        if (n < 2) return usage_error(err, "transition-curve needs n >= 2");
    if (req.steps < 1) return usage_error(err, "transition-curve needs --steps >= 1");
    if (!(req.a_min <= req.a_max)) return usage_error(err, "transition-curve needs a_min <= a_max");

    out << "a,n,c_trans,lambda_trans\n";
    for (int i = 0; i < req.steps; ++i) {
        const double a = req.steps == 1
                             ? req.a_min
                             : req.a_min + (req.a_max - req.a_min) * i / (req.steps - 1);
        transition_rows(a, req, out, err);
    }
    for (double a : req.mark_a) transition_rows(a, req, out, err);
    return kExitOk;
}

namespace {

json point_json(const SpectralPoint& pt) { return json{{"c", pt.c}, {"lambda", pt.lambda}}; }

json extremum_json(const ExtremeExtremum& ex) {
    return json{{"c", ex.location.c},
                {"lambda", ex.location.lambda},
                {"degeneracy", ex.degeneracy},
                {"configuration", configuration_name(ex.configuration)}};
}

std::string point_text(const SpectralPoint& pt) {
    return "(" + fmt_real(pt.c) + ", " + fmt_real(pt.lambda) + ")";
}

// Odd tire orders have no closed-form branch switch; locate the extreme
// extrema numerically on the analytic piecewise curves.
std::pair<ExtremeExtremum, ExtremeExtremum> numeric_extrema(int n, double a) {
    const AbcParams base{.n = n, .a = a, .b = 1.0, .c = 0.0, .n2_variant = N2Variant::Doubled};
    const auto sp = special_points(n, a);
    double reach = 2.0 + 2.0 * std::abs(a) +
                   std::max(std::abs(sp.uppermost.c), std::abs(sp.lowermost.c));
    if (a != 0.0) {
        const auto cks = crossing_abscissas(n, a);
        for (double ck : cks) reach = std::max(reach, std::abs(ck) + 1.0);
    }

    const auto min_curve = [&](double c) { return extreme_eigenvalues(base, c).lambda_min; };
    const auto max_curve = [&](double c) { return extreme_eigenvalues(base, c).lambda_max; };
    const auto lo = golden_section_minimize(max_curve, -reach, reach, 1e-10);
    const auto hi = golden_section_maximize(min_curve, -reach, reach, 1e-10);

    const auto degeneracy_at = [&](const SpectralPoint& pt) {
        AbcParams p = base;
        p.c = pt.c;
        return count_near(jacobi_eigenvalues(materialize_abc(p)).values, pt.lambda, 1e-7);
    };

    ExtremeExtremum minmax{{lo.x, lo.value}, ExtremumKind::MinOfMax, 1, Configuration::Collinear};
    minmax.degeneracy = degeneracy_at(minmax.location);
    minmax.configuration = classify_configuration(minmax.degeneracy);
    ExtremeExtremum maxmin{{hi.x, hi.value}, ExtremumKind::MaxOfMin, 1, Configuration::Collinear};
    maxmin.degeneracy = degeneracy_at(maxmin.location);
    maxmin.configuration = classify_configuration(maxmin.degeneracy);
    return {minmax, maxmin};
}

}  // namespace

int cmd_extremes(const ExtremesRequest& req, std::ostream& out, std::ostream& err) {
    if (req.n < 2) return usage_error(err, "extremes needs --n >= 2");
    if (req.format != Format::Json && req.format != Format::Text)
        return usage_error(err, "extremes supports --format json or text");

    const auto sp = special_points(req.n, req.a);
    const bool even = req.n % 2 == 0;
    const auto [minmax, maxmin] = even ? extreme_extrema(req.n, req.a) : numeric_extrema(req.n, req.a);
    const char* notice = even ? nullptr
                              : "closed-form transition and extreme extrema apply to even tire orders; "
                                "extrema below were located numerically on the analytic curves";

    if (req.format == Format::Json) {
        json j{{"schema_version", kSchemaVersion},
               {"command", "extremes"},
               {"n", req.n},
               {"a", req.a},
               {"regime", regime_name(sp.regime)},
               {"uppermost", point_json(sp.uppermost)},
               {"lowermost", point_json(sp.lowermost)},
               {"min_of_max", extremum_json(minmax)},
               {"max_of_min", extremum_json(maxmin)}};
        if (sp.transition) {
            j["transition"] = point_json(*sp.transition);
            j["transition_branch"] = sp.transition_branch == TransitionBranch::OnLambdaMinus
                                         ? "lambda_minus"
                                         : "lambda_plus";
            j["limit_transition"] = point_json(*sp.limit_transition);
        }
        if (notice) j["notice"] = notice;
        out << j.dump(2) << "\n";
    } else {
        print_kv(out, "n", std::to_string(req.n));
        print_kv(out, "a", fmt_real(req.a));
        print_kv(out, "regime", regime_name(sp.regime));
        print_kv(out, "uppermost", point_text(sp.uppermost));
        print_kv(out, "lowermost", point_text(sp.lowermost));
        if (sp.transition) {
            print_kv(out, "transition", point_text(*sp.transition));
            print_kv(out, "transition_branch",
                     sp.transition_branch == TransitionBranch::OnLambdaMinus ? "lambda_minus" : "lambda_plus");
            print_kv(out, "limit_transition", point_text(*sp.limit_transition));
        } else {
            print_kv(out, "transition", "none (a = 0)");
        }
        out << "min_of_max " << point_text(minmax.location) << " degeneracy " << minmax.degeneracy
            << " " << configuration_name(minmax.configuration) << "\n";
        out << "max_of_min " << point_text(maxmin.location) << " degeneracy " << maxmin.degeneracy
            << " " << configuration_name(maxmin.configuration) << "\n";
        if (notice) out << "# " << notice << "\n";
    }
    return kExitOk;
}

int cmd_verify(const VerifyRequest& req, std::ostream& out, std::ostream& err) {
    if (req.trials < 1) return usage_error(err, "verify needs --trials >= 1");
    if (req.format != Format::Json && req.format != Format::Text)
        return usage_error(err, "verify supports --format json or text");

    std::vector<SuiteResult> results;
    try {
        results = run_property_suites({.trials = req.trials, .seed = req.seed, .oracle_tol = req.tol});
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }

    bool all_passed = true;
    for (const auto& r : results) all_passed = all_passed && r.passed();

    if (req.format == Format::Json) {
        json suites = json::array();
        for (const auto& r : results)
            suites.push_back({{"name", r.name},
                              {"cases", r.cases},
                              {"failures", r.failures},
                              {"worst_deviation", r.worst},
                              {"tolerance", r.tolerance},
                              {"worst_case", r.worst_case},
                              {"passed", r.passed()}});
        json j{{"schema_version", kSchemaVersion},
               {"command", "verify"},
               {"trials", req.trials},
               {"seed", req.seed},
               {"tolerance", req.tol},
               {"suites", suites},
               {"passed", all_passed}};
        out << j.dump(2) << "\n";
    } else {
        out << "verify: trials=" << req.trials << " seed=" << req.seed << " tol=" << fmt_real(req.tol)
            << "\n";
        for (const auto& r : results) {
            out << (r.passed() ? "PASS" : "FAIL") << "  " << r.name << "  worst=" << fmt_real(r.worst)
                << " tol=" << fmt_real(r.tolerance) << " failures=" << r.failures << "/" << r.cases
                << "  [" << r.worst_case << "]\n";
        }
        out << (all_passed ? "all suites passed" : "SUITE FAILURES PRESENT") << "\n";
    }
    return all_passed ? kExitOk : kExitFailure;
}

int cmd_graph(const GraphRequest& req, std::ostream& out, std::ostream& err) {
    if (req.n < 2) return usage_error(err, "graph needs --n >= 2");
    if (req.format != Format::Dot && req.format != Format::Json)
        return usage_error(err, "graph supports --format dot or json");

    const AbcParams p{.n = req.n, .a = req.a, .b = req.b, .c = req.c,
                      .n2_variant = req.variant.value_or(N2Variant::Doubled)};
    const WeightedWheel w = build_wheel(p);

    if (req.format == Format::Json) {
        json vertices = json::array();
        for (int j = 0; j <= w.n; ++j) vertices.push_back({{"id", j}, {"weight", w.vertex_weights[j]}});
        json edges = json::array();
        for (const auto& e : w.edges) edges.push_back({{"u", e.u}, {"v", e.v}, {"weight", e.weight}});
        json j{{"schema_version", kSchemaVersion},
               {"command", "graph"},
               {"kind", kind_name(w.kind)},
               {"n", w.n},
               {"vertices", vertices},
               {"edges", edges}};
        out << j.dump(2) << "\n";
    } else {
        out << "graph " << kind_name(w.kind) << " {\n";
        out << "  // " << kind_name(w.kind) << " on " << w.vertex_count()
            << " vertices; hub 0 carries weight " << fmt_real(w.vertex_weights[0]) << "\n";
        for (int j = 0; j <= w.n; ++j)
            out << "  " << j << " [label=\"" << j << " (" << fmt_real(w.vertex_weights[j]) << ")\"];\n";
        for (const auto& e : w.edges)
            out << "  " << e.u << " -- " << e.v << " [label=\"" << fmt_real(e.weight) << "\"];\n";
        out << "}\n";
    }
    return kExitOk;
}

}  // namespace abc::cli
