// critcurv: command-line front end.
//
// Exit status: 0 success, 1 usage error (bad flag or out-of-domain parameter),
// 2 verification failure (an acceptance criterion or an asserted invariant).

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "critcurv/acceptance.hpp"
#include "critcurv/extrinsic.hpp"
#include "critcurv/isoparametric.hpp"
#include "critcurv/projective.hpp"
#include "critcurv/report.hpp"
#include "critcurv/sp2.hpp"
#include "critcurv/warped.hpp"

namespace {

using namespace critcurv;

constexpr int exit_usage = 1;
constexpr int exit_verification = 2;

/// Thrown when a computation completed but an asserted property does not hold.
struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string format = "table";
    std::string output;
};

std::int64_t i64(int v) { return v; }

// ---------------------------------------------------------------------------
// isoparam
// ---------------------------------------------------------------------------

struct IsoparamArgs {
    int n = 0;
    std::string functional = "pi";
    std::optional<double> t;
    int samples = RootScanOptions{}.samples;
};

Table run_isoparam(const IsoparamArgs& a)
{
    const Functional f = parse_functional(a.functional);
    Table table;
    if (a.t) {
        const auto spectrum = nomizu_spectrum(a.n, *a.t);
        table.columns = {"n", "functional", "t", "h", "alpha_norm_sq", "trace_a3", "residual", "density"};
        table.add_row({i64(a.n), std::string(to_string(f)), *a.t, mean_curvature(spectrum), alpha_norm_sq(spectrum),
                       trace_a3(spectrum), nomizu_residual(a.n, *a.t, f), nomizu_density(a.n, *a.t, f)});
        return table;
    }
    RootScanOptions options;
    options.samples = a.samples;
    table.columns = {"n", "functional", "t", "density", "residual", "bracket_lo", "bracket_hi"};
    for (const CriticalRoot& r : find_critical(a.n, f, options)) {
        table.add_row({i64(r.n), std::string(to_string(r.functional)), r.t, r.density, r.residual, r.bracket.lo,
                       r.bracket.hi});
    }
    return table;
}

// ---------------------------------------------------------------------------
// sp2
// ---------------------------------------------------------------------------

struct Sp2Args {
    double lambda = 0.5;
    double mu = 0.5;
    int samples = 10;
    std::uint64_t seed = 7;
};

Table run_sp2_scalar(const Sp2Args& a)
{
    const auto g = MetricParams<double>::make(a.lambda, a.mu);
    const auto s = scalar_curvature(g);
    Table t;
    t.columns = {"lambda", "mu", "closed_form", "basis_sum"};
    t.add_row({a.lambda, a.mu, s.closed_form, s.basis_sum});
    return t;
}

Table run_sp2_sectional(const Sp2Args& a)
{
    const auto g = MetricParams<double>::make(a.lambda, a.mu);
    const Sp2Geometry<double> geo(g);
    Rng rng(a.seed);
    Table t;
    t.columns = {"sample", "closed_form", "koszul", "abs_diff"};
    for (int s = 0; s < a.samples; ++s) {
        const auto [x, y] = random_orthonormal_pair(g, rng);
        const double closed = sectional_closed_form(g, x, y);
        const double koszul = geo.sectional_koszul(x, y);
        t.add_row({i64(s), closed, koszul, std::abs(closed - koszul)});
    }
    return t;
}

Table run_sp2_scan(const Sp2Args& a)
{
    const auto g = MetricParams<double>::make(a.lambda, a.mu);
    const SectionalScan scan = nonnegativity_scan(g, a.samples, a.seed);
    Table t;
    t.columns = {"lambda", "mu", "samples", "minimum"};
    t.add_row({a.lambda, a.mu, i64(scan.samples), scan.minimum});
    return t;
}

Table run_sp2_fiber(const Sp2Args& a)
{
    const auto g = MetricParams<double>::make(a.lambda, a.mu);
    Table t;
    t.columns = {"lambda", "mu", "second_fundamental", "fiber_volume"};
    t.add_row({a.lambda, a.mu, fiber_second_fundamental(g), fiber_volume(a.mu)});
    return t;
}

// ---------------------------------------------------------------------------
// projective
// ---------------------------------------------------------------------------

struct ProjectiveArgs {
    int d = 1;
    int d_max = 12;
    std::vector<double> r{0.5, 1.0, 2.0};
    double eps = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
};

Table run_curve(const ProjectiveArgs& a)
{
    Table t;
    t.columns = {"d", "pi_value", "theta_value", "genus", "area", "c1_dot", "gauss_bonnet_closes"};
    for (int d = 1; d <= a.d_max; ++d) {
        const CurveInvariants c = curve_invariants(d);
        t.add_row({i64(d), c.pi_value(), c.theta_value(), c.genus, c.area(), c.c1_dot, c.gauss_bonnet_closes()});
    }
    return t;
}

Table run_bounds(const ProjectiveArgs& a)
{
    const MinimizingBounds b = minimizing_bounds(a.d);
    Table t;
    t.columns = {"d", "genus_max", "area_min", "area_max", "genus_min"};
    t.add_row({i64(a.d), b.genus_max, b.area_min, b.area_max, curve_invariants(a.d).genus});
    return t;
}

Table run_desing(const ProjectiveArgs& a)
{
    Table t;
    t.columns = {"r", "eps", "quadrature", "closed_form", "two_disc_exact"};
    for (const double r : a.r) {
        const DesingArea d = desing_area(r, a.eps);
        t.add_row({r, a.eps, d.quadrature, d.closed_form, d.two_disc_exact});
    }
    return t;
}

Table run_diagonal()
{
    const DiagonalConstants d = diagonal_constants();
    Table t;
    t.columns = {"volume", "ambient_sectional_on_diagonal", "scalar_curvature", "euler_characteristic", "closure"};
    t.add_row({d.volume, d.ambient_sectional_on_diagonal, d.scalar_curvature, i64(d.euler_characteristic), d.closure()});
    return t;
}

Table run_bubbles(const ProjectiveArgs& a)
{
    Table t;
    t.columns = {"c1", "c2", "max_bubbles"};
    t.add_row({a.c1, a.c2, max_bubbles(a.c1, a.c2)});
    return t;
}

// ---------------------------------------------------------------------------
// warped
// ---------------------------------------------------------------------------

struct WarpedArgs {
    std::string background = "schwarzschild";
    double param = 1.0;
    std::optional<double> r_max;
    std::optional<double> step;
    std::size_t stride = 100;
    std::vector<double> r{1.0, 10.0, 100.0, 1000.0};
};

WarpedProfile build_profile(const WarpedArgs& a)
{
    const Background kind = parse_background(a.background);
    const double r_max = a.r_max.value_or(default_r_max(kind, a.param));
    return solve_profile(kind, a.param, r_max, a.step.value_or(default_step(r_max)));
}

Table run_profile(const WarpedArgs& a)
{
    if (a.stride == 0) throw std::invalid_argument("--stride must be >= 1");
    return profile_table(build_profile(a), a.stride);
}

Table run_slice(const WarpedArgs& a)
{
    const WarpedProfile p = build_profile(a);
    Table t;
    t.columns = {"r", "k1", "k2", "K1", "K2", "C", "S", "s_residual", "tangential_sum", "intrinsic_scalar"};
    for (const double r : a.r) {
        const SliceReport rep = slice_curvatures(p, r);
        const auto& e = rep.spectrum.entries();
        t.add_row({r, e[0].curvature, e[1].curvature, rep.normal_sectionals[0], rep.normal_sectionals[1], rep.C, rep.S,
                   s_residual_einstein(rep.spectrum, rep.normal_sectionals), tangential_sectional_sum(p, r),
                   slice_intrinsic_scalar(p, r)});
    }
    return t;
}

Table run_critical(const WarpedArgs& a)
{
    const WarpedProfile p = build_profile(a);
    double r0 = 0.0;
    try {
        r0 = find_critical_slice(p);
    } catch (const std::runtime_error& e) {
        throw VerificationFailure(e.what());
    }
    Table t;
    t.columns = {"background", "param", "r0", "C", "S"};
    t.add_row({std::string(to_string(p.kind())), p.param(), r0, criticality_C(p, r0), slice_scalar(p, r0)});
    return t;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyArgs {
    bool all = false;
    std::vector<int> criteria;
    std::uint64_t seed = 7;
    bool verbose = false;
};

int run_verify(const VerifyArgs& a, std::ostream& out)
{
    std::vector<int> ids = a.criteria;
    if (a.all || ids.empty()) {
        ids.resize(criterion_count);
        std::iota(ids.begin(), ids.end(), 1);
    }
    int failures = 0;
    for (const int id : ids) {
        const CriterionResult r = run_criterion(id, AcceptanceOptions{a.seed});
        print_result_line(out, r);
        if (a.verbose) print_result_checks(out, r);
        std::cerr << "criterion " << id << ": " << format_number(r.seconds, 3) << " s\n";
        failures += r.pass() ? 0 : 1;
    }
    return failures == 0 ? EXIT_SUCCESS : exit_verification;
}

// ---------------------------------------------------------------------------

std::filesystem::path resolve_output(const std::string& output)
{
    std::filesystem::path path(output);
    if (path.is_relative()) {
        if (const char* dir = std::getenv("CRITCURV_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
            path = std::filesystem::path(dir) / path;
        }
    }
    return path;
}

void write_text(const Common& common, const std::string& text)
{
    if (common.output.empty()) {
        std::cout << text;
        return;
    }
    const auto path = resolve_output(common.output);
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file " + path.string());
    file << text;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Curvature functionals of submanifolds: criticality residuals, Sp(2) and Fubini-Study curvature, "
                 "warped backgrounds"};
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    app.add_option("--format", common.format, "json, csv or table")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
    app.add_option("--output", common.output,
                   "write the report to this file (relative paths resolve against $CRITCURV_OUTPUT_DIR)");

    Table table;
    std::optional<int> status;

    IsoparamArgs iso;
    auto* isoparam = app.add_subcommand("isoparam", "Nomizu family: critical parameters or evaluation at t");
    isoparam->add_option("--n", iso.n, "half dimension of M^{2n} in S^{2n+1}")->required()->check(CLI::PositiveNumber);
    isoparam->add_option("--functional", iso.functional, "pi, psi, s or minimal")
        ->check(CLI::IsMember({"pi", "psi", "s", "minimal"}, CLI::ignore_case))
        ->capture_default_str();
    isoparam->add_option("--t", iso.t, "evaluate at this parameter instead of root finding");
    isoparam->add_option("--samples", iso.samples, "sign-scan samples")->check(CLI::Range(2, 100000000))->capture_default_str();
    isoparam->callback([&] { table = run_isoparam(iso); });

    Sp2Args sp2a;
    auto* sp2 = app.add_subcommand("sp2", "Sp(2) with the metric g(lambda, mu)");
    sp2->require_subcommand(1);
    const auto add_metric = [&](CLI::App* sub) {
        sub->add_option("--lambda", sp2a.lambda)->check(CLI::PositiveNumber)->capture_default_str();
        sub->add_option("--mu", sp2a.mu)->check(CLI::PositiveNumber)->capture_default_str();
    };
    auto* sp2_scalar = sp2->add_subcommand("scalar", "scalar curvature, closed form and basis trace");
    add_metric(sp2_scalar);
    sp2_scalar->callback([&] { table = run_sp2_scalar(sp2a); });
    auto* sp2_sectional = sp2->add_subcommand("sectional", "closed-form vs Koszul sectional curvature on random pairs");
    add_metric(sp2_sectional);
    sp2_sectional->add_option("--samples", sp2a.samples)->check(CLI::PositiveNumber)->capture_default_str();
    sp2_sectional->add_option("--seed", sp2a.seed)->capture_default_str();
    sp2_sectional->callback([&] { table = run_sp2_sectional(sp2a); });
    auto* sp2_scan = sp2->add_subcommand("scan", "minimum sampled sectional curvature");
    add_metric(sp2_scan);
    sp2_scan->add_option("--samples", sp2a.samples)->check(CLI::PositiveNumber);
    sp2_scan->add_option("--seed", sp2a.seed)->capture_default_str();
    sp2_scan->callback([&] { table = run_sp2_scan(sp2a); });
    auto* sp2_fiber = sp2->add_subcommand("fiber", "second fundamental form and volume of the fibres");
    add_metric(sp2_fiber);
    sp2_fiber->callback([&] { table = run_sp2_fiber(sp2a); });

    ProjectiveArgs pa;
    auto* projective = app.add_subcommand("projective", "Fubini-Study curves, bounds and desingularization areas");
    projective->require_subcommand(1);
    auto* curve = projective->add_subcommand("curve", "invariants of degree-d curves for d = 1..d-max");
    curve->add_option("--d-max", pa.d_max)->check(CLI::PositiveNumber)->capture_default_str();
    curve->callback([&] { table = run_curve(pa); });
    auto* bounds = projective->add_subcommand("bounds", "genus and area bounds along minimizing sequences");
    bounds->add_option("--d", pa.d)->check(CLI::PositiveNumber)->capture_default_str();
    bounds->callback([&] { table = run_bounds(pa); });
    auto* desing = projective->add_subcommand("desing", "8 x area of z1 z2 = eps inside the ball of radius r");
    desing->add_option("--r", pa.r, "radii")->check(CLI::PositiveNumber)->capture_default_str();
    desing->add_option("--eps", pa.eps)->check(CLI::NonNegativeNumber)->capture_default_str();
    desing->callback([&] { table = run_desing(pa); });
    auto* diagonal = projective->add_subcommand("diagonal", "constants of the diagonal in S^2 x S^2");
    diagonal->callback([&] { table = run_diagonal(); });
    auto* bubbles = projective->add_subcommand("bubbles", "largest number of bubble points");
    bubbles->add_option("--c1", pa.c1)->check(CLI::NonNegativeNumber)->capture_default_str();
    bubbles->add_option("--c2", pa.c2)->check(CLI::NonNegativeNumber)->capture_default_str();
    bubbles->callback([&] { table = run_bubbles(pa); });

    WarpedArgs wa;
    auto* warped = app.add_subcommand("warped", "Schwarzschild and Eguchi-Hanson backgrounds");
    warped->require_subcommand(1);
    const auto add_background = [&](CLI::App* sub) {
        sub->add_option("--background", wa.background, "schwarzschild or eguchi-hanson")
            ->check(CLI::IsMember({"schwarzschild", "schw", "eguchi-hanson", "eh"}, CLI::ignore_case))
            ->capture_default_str();
        sub->add_option("--param", wa.param, "beta or k")->check(CLI::PositiveNumber)->capture_default_str();
        sub->add_option("--r-max", wa.r_max, "default 1e3 x natural length")->check(CLI::PositiveNumber);
        sub->add_option("--step", wa.step, "default 1e-4 x r-max")->check(CLI::PositiveNumber);
    };
    auto* profile = warped->add_subcommand("profile", "warp factors with C and S on the grid");
    add_background(profile);
    profile->add_option("--stride", wa.stride, "keep every stride-th node")->capture_default_str();
    profile->callback([&] { table = run_profile(wa); });
    auto* slice = warped->add_subcommand("slice", "slice curvatures at given radii");
    add_background(slice);
    slice->add_option("--r", wa.r, "radii")->check(CLI::PositiveNumber)->capture_default_str();
    slice->callback([&] { table = run_slice(wa); });
    auto* critical = warped->add_subcommand("critical", "zero of the criticality function C");
    add_background(critical);
    critical->callback([&] { table = run_critical(wa); });

    VerifyArgs va;
    std::ostringstream verify_out;
    auto* verify = app.add_subcommand("verify", "run the acceptance suite");
    verify->add_flag("--all", va.all, "every criterion (default when none is named)");
    verify->add_option("--criterion", va.criteria, "criterion id, repeatable")->check(CLI::Range(1, criterion_count));
    verify->add_option("--seed", va.seed)->capture_default_str();
    verify->add_flag("--verbose", va.verbose, "list every check");
    verify->callback([&] { status = run_verify(va, verify_out); });

    try {
        app.parse(argc, argv);
        if (status) {
            write_text(common, verify_out.str());
            return *status;
        }
        write_text(common, emit_report(table, parse_format(common.format)));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? EXIT_SUCCESS : exit_usage;
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return exit_verification;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_verification;
    }
    return EXIT_SUCCESS;
}
