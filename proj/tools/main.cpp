#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "commands.hpp"

namespace {

using abc::N2Variant;
using namespace abc::cli;

const std::map<std::string, Format> kFormatNames{
    {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}, {"dot", Format::Dot}};

const std::map<std::string, N2Variant> kVariantNames{
    {"tilde", N2Variant::Tilde}, {"doubled", N2Variant::Doubled}};

// Runs `body(out)` with stdout or the --out file, surfacing I/O errors with
// the path attached.
template <class Body>
int with_output(const std::string& out_path, Body&& body) {
    if (out_path.empty()) return body(std::cout);
    std::ofstream file(out_path);
    if (!file) {
        std::cerr << "error: cannot open output file '" << out_path << "'\n";
        return kExitFailure;
    }
    const int rc = body(file);
    file.flush();
    if (!file) {
        std::cerr << "error: failed writing output file '" << out_path << "'\n";
        return kExitFailure;
    }
    return rc;
}

double default_verify_tol() {
    if (const char* env = std::getenv("ABC_SPECTRA_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0) return v;
        std::cerr << "warning: ignoring unparsable ABC_SPECTRA_TOL='" << env << "'\n";
    }
    return 1e-9;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed-form spectra of arrow-bordered circulant matrices and their wheel graphs"};
    app.require_subcommand(1);

    std::string out_path;

    // spectrum
    SpectrumRequest spectrum;
    std::string spectrum_format = "text";
    std::string spectrum_variant;
    auto* sc_spectrum = app.add_subcommand("spectrum", "Eigenvalues, multiplicities and cardinality");
    sc_spectrum->add_option("--n", spectrum.n, "Tire order n (matrix order n + 1)")->required();
    sc_spectrum->add_option("--a", spectrum.a, "Tire edge weight");
    sc_spectrum->add_option("--b", spectrum.b, "Spoke weight (default 1)");
    sc_spectrum->add_option("--c", spectrum.c, "Tire vertex weight");
    sc_spectrum->add_option("--variant", spectrum_variant, "n <= 2 convention: tilde or doubled")
        ->check(CLI::IsMember({"tilde", "doubled"}));
    sc_spectrum->add_flag("--allow-diagonal", spectrum.allow_diagonal,
                          "Accept b = 0 and report the block decomposition");
    sc_spectrum->add_flag("--eigenvectors", spectrum.eigenvectors, "Include eigenvectors (json)");
    sc_spectrum->add_option("--format", spectrum_format)->check(CLI::IsMember({"text", "json"}));
    sc_spectrum->add_option("--out", out_path, "Output path (default stdout)");

    // eigenlines
    SweepSpec sweep;
    auto* sc_lines = app.add_subcommand("eigenlines", "CSV sweep of all eigenlines lambda(c)");
    sc_lines->add_option("--n", sweep.n)->required();
    sc_lines->add_option("--a", sweep.a);
    sc_lines->add_option("--b", sweep.b);
    sc_lines->add_option("--c-min", sweep.c_min);
    sc_lines->add_option("--c-max", sweep.c_max);
    sc_lines->add_option("--steps", sweep.steps);
    sc_lines->add_option("--out", out_path);

    // transition-curve
    TransitionCurveRequest curve;
    std::string curve_variant = "doubled";
    auto* sc_curve = app.add_subcommand("transition-curve", "CSV transition curves T_n(a) plus the limit curve");
    sc_curve->add_option("--n", curve.n_list, "Tire orders (repeatable)")->required();
    sc_curve->add_option("--a-min", curve.a_min);
    sc_curve->add_option("--a-max", curve.a_max);
    sc_curve->add_option("--steps", curve.steps);
    sc_curve->add_option("--mark-a", curve.mark_a, "Extra rows at exactly these a values");
    sc_curve->add_option("--variant", curve_variant)->check(CLI::IsMember({"tilde", "doubled"}));
    sc_curve->add_option("--out", out_path);

    // extremes
    ExtremesRequest extremes;
    std::string extremes_format = "text";
    auto* sc_extremes = app.add_subcommand("extremes", "Special points, regime, extreme extrema");
    sc_extremes->add_option("--n", extremes.n)->required();
    sc_extremes->add_option("--a", extremes.a)->required();
    sc_extremes->add_option("--format", extremes_format)->check(CLI::IsMember({"text", "json"}));
    sc_extremes->add_option("--out", out_path);

    // verify
    VerifyRequest verify;
    verify.tol = default_verify_tol();
    std::string verify_format = "text";
    auto* sc_verify = app.add_subcommand("verify", "Run the analytic-vs-oracle property suites");
    sc_verify->add_option("--trials", verify.trials);
    sc_verify->add_option("--seed", verify.seed);
    sc_verify->add_option("--tol", verify.tol, "Oracle-equivalence tolerance (ABC_SPECTRA_TOL overrides default)");
    sc_verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));
    sc_verify->add_option("--out", out_path);

    // graph
    GraphRequest graph;
    std::string graph_format = "dot";
    std::string graph_variant;
    auto* sc_graph = app.add_subcommand("graph", "Export the weighted wheel graph");
    sc_graph->add_option("--n", graph.n)->required();
    sc_graph->add_option("--a", graph.a);
    sc_graph->add_option("--b", graph.b);
    sc_graph->add_option("--c", graph.c);
    sc_graph->add_option("--variant", graph_variant)->check(CLI::IsMember({"tilde", "doubled"}));
    sc_graph->add_option("--format", graph_format)->check(CLI::IsMember({"dot", "json"}));
    sc_graph->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sc_spectrum->parsed()) {
            spectrum.format = kFormatNames.at(spectrum_format);
            if (!spectrum_variant.empty()) spectrum.variant = kVariantNames.at(spectrum_variant);
            return with_output(out_path, [&](std::ostream& out) { return cmd_spectrum(spectrum, out, std::cerr); });
        }
        if (sc_lines->parsed())
            return with_output(out_path, [&](std::ostream& out) { return cmd_eigenlines(sweep, out, std::cerr); });
        if (sc_curve->parsed()) {
            curve.n2_variant = kVariantNames.at(curve_variant);
            return with_output(out_path,
                               [&](std::ostream& out) { return cmd_transition_curve(curve, out, std::cerr); });
        }
        if (sc_extremes->parsed()) {
            extremes.format = kFormatNames.at(extremes_format);
            return with_output(out_path, [&](std::ostream& out) { return cmd_extremes(extremes, out, std::cerr); });
        }
        if (sc_verify->parsed()) {
            verify.format = kFormatNames.at(verify_format);
            return with_output(out_path, [&](std::ostream& out) { return cmd_verify(verify, out, std::cerr); });
        }
        if (sc_graph->parsed()) {
            graph.format = kFormatNames.at(graph_format);
            if (!graph_variant.empty()) graph.variant = kVariantNames.at(graph_variant);
            return with_output(out_path, [&](std::ostream& out) { return cmd_graph(graph, out, std::cerr); });
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
