#include "critcurv/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "critcurv/extrinsic.hpp"
#include "critcurv/isoparametric.hpp"
#include "critcurv/projective.hpp"
#include "critcurv/random.hpp"
#include "critcurv/report.hpp"
#include "critcurv/sp2.hpp"
#include "critcurv/warped.hpp"

namespace critcurv {

namespace {

constexpr double pi = std::numbers::pi;

std::string num(double v) { return format_number(v, 12); }
std::string small(double v) { return format_number(v, 3); }

class Recorder {
public:
    explicit Recorder(CriterionResult& r) : r_(r) {}

    void near(std::string name, double value, double target, double tol)
    {
        const double diff = std::abs(value - target);
        truth(std::move(name), diff <= tol,
              num(value) + " vs " + num(target) + " (|diff| " + small(diff) + ", tol " + small(tol) + ")");
    }

    void at_most(std::string name, double value, double bound)
    {
        truth(std::move(name), value <= bound, small(value) + " <= " + small(bound));
    }

    void at_least(std::string name, double value, double bound)
    {
        truth(std::move(name), value >= bound, num(value) + " >= " + small(bound));
    }

    void truth(std::string name, bool ok, std::string detail) { r_.checks.push_back({std::move(name), ok, std::move(detail)}); }

    /// Runs body; an exception becomes a failed check carrying its message.
    void guarded(const std::string& name, const std::function<void()>& body)
    {
        try {
            body();
        } catch (const std::exception& e) {
            truth(name, false, std::string("threw: ") + e.what());
        }
    }

private:
    CriterionResult& r_;
};

const CriticalRoot* closest_root(const std::vector<CriticalRoot>& roots, double t)
{
    const CriticalRoot* best = nullptr;
    for (const auto& root : roots) {
        if (best == nullptr || std::abs(root.t - t) < std::abs(best->t - t)) best = &root;
    }
    return best;
}

void expect_root(Recorder& rec, const std::string& label, const std::vector<CriticalRoot>& roots, double t,
                 double t_tol, std::optional<double> density, double d_tol)
{
    const CriticalRoot* root = closest_root(roots, t);
    if (root == nullptr) {
        rec.truth(label + " root", false, "no root found, expected " + num(t));
        return;
    }
    rec.near(label + " root", root->t, t, t_tol);
    if (density) rec.near(label + " density", root->density, *density, d_tol);
}

// ---------------------------------------------------------------------------

void nomizu_pi_n2(Recorder& rec, const AcceptanceOptions&)
{
    const auto roots = find_critical(2, Functional::Pi);
    rec.truth("n=2 Pi root count", roots.size() == 1, std::to_string(roots.size()) + " root(s)");
    expect_root(rec, "n=2 Pi", roots, pi / 8, 1e-10, 12.0, 1e-12);
}

void nomizu_pi_n3(Recorder& rec, const AcceptanceOptions&)
{
    const auto roots = find_critical(3, Functional::Pi);
    rec.truth("n=3 Pi root count", roots.size() == 1, std::to_string(roots.size()) + " root(s)");
    expect_root(rec, "n=3 Pi", roots, 0.3775786497, 5e-10, 18.57333958, 5e-8);
    const auto minimal = find_critical(3, Functional::Minimal);
    rec.truth("n=3 minimal root count", minimal.size() == 1, std::to_string(minimal.size()) + " root(s)");
    expect_root(rec, "n=3 minimal", minimal, 0.4776583091, 5e-10, std::nullopt, 0.0);
}

void nomizu_psi_n4(Recorder& rec, const AcceptanceOptions&)
{
    const auto roots = find_critical(4, Functional::Psi);
    expect_root(rec, "n=4 Psi", roots, 0.2153460562, 5e-10, 147.3776409, 5e-7);
    // The other reading of the coefficient: 2n h instead of 2 dim(M) h.
    const auto spectrum = nomizu_spectrum(4, 0.2153460562);
    const double h = mean_curvature(spectrum);
    const double rejected = 2.0 * 4.0 * h + 2.0 * h * alpha_norm_sq(spectrum) - h * h * h;
    rec.at_least("rejected coefficient residual magnitude", std::abs(rejected), 1.0);
}

void s_roots(Recorder& rec, const AcceptanceOptions&)
{
    struct Expected {
        double t;
        double density;
    };
    const std::vector<std::pair<int, std::vector<Expected>>> table{
        {1, {}},
        {2, {{pi / 8, 12.0}}},
        {3, {{0.5268183350, 19.71086118}}},
        {4, {{0.1830436696, -131.2969104}, {0.5770248421, 27.29691039}}},
    };
    for (const auto& [n, expected] : table) {
        const auto roots = find_critical(n, Functional::S);
        const std::string label = "n=" + std::to_string(n) + " S";
        rec.truth(label + " root count", roots.size() == expected.size(),
                  std::to_string(roots.size()) + " vs " + std::to_string(expected.size()));
        for (const auto& e : expected) {
            expect_root(rec, label, roots, e.t, 5e-10, e.density, 5e-7);
        }
    }
}

void sp2_oracles(Recorder& rec, const AcceptanceOptions& opt)
{
    Rng rng(opt.seed);
    constexpr double rel_tol = 1e-9;
    double worst_rel = 0.0;
    for (int point = 0; point < 100; ++point) {
        const auto g = MetricParams<double>::make(2.0 * (1.0 - rng.canonical()), 2.0 * (1.0 - rng.canonical()));
        const Sp2Geometry<double> geo(g);
        for (int s = 0; s < 1000; ++s) {
            const auto x = random_sp2_vector(rng);
            const auto y = random_sp2_vector(rng);
            const double closed = sectional_closed_form(g, x, y);
            const double koszul = geo.sectional_koszul(x, y);
            worst_rel = std::max(worst_rel, std::abs(closed - koszul) / std::max(1.0, std::abs(koszul)));
        }
    }
    rec.at_most("closed-form vs Koszul sectional, max relative gap", worst_rel, rel_tol);

    double worst_scalar = 0.0;
    for (int point = 0; point < 50; ++point) {
        const auto g = MetricParams<double>::make(2.0 * (1.0 - rng.canonical()), 2.0 * (1.0 - rng.canonical()));
        const auto s = scalar_curvature(g);
        worst_scalar = std::max(worst_scalar, std::abs(s.closed_form - s.basis_sum) / std::max(1.0, std::abs(s.closed_form)));
    }
    rec.at_most("scalar curvature closed form vs basis trace", worst_scalar, 1e-9);

    const auto bi = MetricParams<double>::make(0.5, 0.5);
    double worst_bi = 0.0;
    for (int s = 0; s < 1000; ++s) {
        const auto [x, y] = random_orthonormal_pair(bi, rng);
        worst_bi = std::max(worst_bi, std::abs(sectional_closed_form(bi, x, y) - 0.25 * norm_sq(bi, bracket(x, y))));
    }
    rec.at_most("bi-invariant K = |[Z0,Z1]|^2 / 4", worst_bi, 1e-10);

    double minimum = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= 10; ++i) {
        for (int j = 1; j <= 10; ++j) {
            const auto g = MetricParams<double>::make(0.05 * i, 0.05 * j);
            minimum = std::min(minimum, nonnegativity_scan(g, 10000, rng.derive()).minimum);
        }
    }
    rec.at_least("minimum sampled sectional on (0,1/2]^2", minimum, -1e-12);

    double worst_fiber = 0.0;
    for (int point = 0; point < 20; ++point) {
        const auto g = MetricParams<double>::make(2.0 * (1.0 - rng.canonical()), 2.0 * (1.0 - rng.canonical()));
        worst_fiber = std::max(worst_fiber, fiber_second_fundamental(g));
    }
    rec.at_most("fibre second fundamental form", worst_fiber, 1e-13);
}

void fubini_study(Recorder& rec, const AcceptanceOptions& opt)
{
    Rng rng(opt.seed);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int s = 0; s < 100000; ++s) {
        const int n = 1 + s % 4;
        Eigen::VectorXd u(2 * n);
        Eigen::VectorXd v(2 * n);
        for (int i = 0; i < 2 * n; ++i) {
            u(i) = rng.uniform(-1.0, 1.0);
            v(i) = rng.uniform(-1.0, 1.0);
        }
        u.normalize();
        v -= v.dot(u) * u;
        if (v.norm() < 1e-6) continue;
        v.normalize();
        const double k = fs_sectional(TangentPairFS::make(u, v));
        lo = std::min(lo, k);
        hi = std::max(hi, k);
    }
    rec.at_least("minimum sampled FS sectional", lo, 1.0 - 1e-12);
    rec.at_most("maximum sampled FS sectional", hi, 4.0 + 1e-12);

    bool closes = true;
    bool formulas = true;
    for (int d = 1; d <= 12; ++d) {
        const CurveInvariants c = curve_invariants(d);
        closes = closes && c.gauss_bonnet_closes();
        formulas = formulas && std::abs(c.pi_value() - 4.0 * pi * d * (d - 1)) <= 1e-12 * (1.0 + c.pi_value()) &&
                   2 * c.genus == static_cast<std::int64_t>(d - 1) * (d - 2) &&
                   std::abs(c.theta_value() - 8.0 * pi * d) <= 1e-12 * c.theta_value();
    }
    rec.truth("Gauss-Bonnet closure d=1..12 (exact)", closes, closes ? "Pi = Theta - 4 pi chi" : "mismatch");
    rec.truth("curve invariant formulas d=1..12", formulas, formulas ? "Pi, genus, Theta" : "mismatch");
}

void desingularization(Recorder& rec, const AcceptanceOptions&)
{
    const DesingArea far = desing_area(100.0, 0.0);
    rec.near("eps=0, r=100 area x 8 vs 16 pi", far.quadrature, 16.0 * pi, 1e-3 * 16.0 * pi);
    for (const double r : {0.5, 1.0, 2.0}) {
        const DesingArea a = desing_area(r, 0.0);
        const std::string label = "r=" + format_number(r, 3);
        rec.near(label + " quadrature vs two-disc exact", a.quadrature, a.two_disc_exact, 1e-8);
        rec.truth(label + " closed form (recorded)", true,
                  "quadrature " + num(a.quadrature) + ", closed form " + num(a.closed_form));
    }
    // Observed order of composite Simpson against the exact eps = 0 value.
    const double exact = 16.0 * pi * 4.0 / 5.0;
    const double e1 = std::abs(desing_area_composite(2.0, 0.0, 4) - exact);
    const double e2 = std::abs(desing_area_composite(2.0, 0.0, 8) - exact);
    const double e3 = std::abs(desing_area_composite(2.0, 0.0, 16) - exact);
    const double order = std::min(std::log2(e1 / e2), std::log2(e2 / e3));
    rec.at_least("quadrature convergence order, eps=0", order, 2.0);
    // eps > 0: order from successive differences.
    const double d1 = desing_area_composite(2.0, 0.01, 32) - desing_area_composite(2.0, 0.01, 64);
    const double d2 = desing_area_composite(2.0, 0.01, 64) - desing_area_composite(2.0, 0.01, 128);
    rec.at_least("quadrature convergence order, eps=0.01", std::log2(std::abs(d1 / d2)), 2.0);
}

void warped_backgrounds(Recorder& rec, const AcceptanceOptions&)
{
    for (const Background kind : {Background::Schwarzschild, Background::EguchiHanson}) {
        const std::string label(to_string(kind));
        const WarpedProfile p = solve_profile(kind, 1.0);
        double constraint = 0.0;
        double ricci = 0.0;
        for (const WarpState& s : p.nodes()) {
            constraint = std::max(constraint, constraint_residual(kind, 1.0, s));
            if (s.r > 0.0) ricci = std::max(ricci, std::abs(ricci_flat_residual(kind, s)));
        }
        rec.at_most(label + " constraint residual", constraint, 1e-7);
        rec.at_most(label + " Ricci-flat residual", ricci, 1e-7);
        const int changes = count_sign_changes_C(p);
        rec.truth(label + " sign changes of C", changes == 1, std::to_string(changes) + " (expected 1)");

        const double r_far = p.r_max();
        const double target = kind == Background::Schwarzschild ? 1.0 : 3.0;
        rec.near(label + " S r^2 / 2 at r = 1e3 scale", slice_scalar(p, r_far) * r_far * r_far / 2.0, target,
                 1e-2 * target);

        rec.guarded(label + " S(r0) > 0", [&] {
            const double r0 = find_critical_slice(p);
            rec.truth(label + " S(r0) > 0", slice_scalar(p, r0) > 0.0, "S(r0) = " + num(slice_scalar(p, r0)));
        });

        const auto regression =
            kind == Background::Schwarzschild ? schwarzschild_r0_regression : eguchi_hanson_r0_regression;
        rec.guarded(label + " r0 regression", [&] {
            const double r0 = find_critical_slice(p);
            if (!regression) {
                rec.truth(label + " r0 regression", false, "r0 = " + num(r0) + " but no constant committed");
                return;
            }
            rec.near(label + " r0 regression", r0, *regression, 1e-9);
        });
    }

    rec.guarded("Schwarzschild r0 scaling", [&] {
        const double r1 = find_critical_slice(solve_profile(Background::Schwarzschild, 1.0));
        for (const double beta : {0.5, 2.0}) {
            const double rb = find_critical_slice(solve_profile(Background::Schwarzschild, beta));
            rec.near("Schwarzschild r0 scaling beta=" + format_number(beta, 3), rb / (beta * r1), 1.0, 1e-6);
        }
    });
}

void property_suites(Recorder& rec, const AcceptanceOptions& opt)
{
    Rng rng(opt.seed);
    const auto random_spectrum = [&rng] {
        const int entries = 1 + static_cast<int>(rng.canonical() * 4);
        std::vector<CurvatureEntry<double>> e;
        for (int i = 0; i < entries; ++i) {
            e.push_back({rng.uniform(-3.0, 3.0), 1 + static_cast<int>(rng.canonical() * 3)});
        }
        return PrincipalSpectrum(std::move(e));
    };

    double diff_gap = 0.0;
    double flip_gap = 0.0;
    for (int s = 0; s < 1000; ++s) {
        const PrincipalSpectrum spectrum = random_spectrum();
        std::vector<double> k(static_cast<std::size_t>(spectrum.dimension()));
        for (double& v : k) v = rng.uniform(-2.0, 2.0);
        const double pi_r = pi_residual_einstein(spectrum, k);
        const double psi_r = psi_residual_einstein(spectrum, k);
        const double s_r = s_residual_einstein(spectrum, k);
        diff_gap = std::max(diff_gap, std::abs(s_r - (pi_r - psi_r)) / (1.0 + std::abs(s_r)));
        const PrincipalSpectrum flipped = spectrum.flipped();
        flip_gap = std::max({flip_gap, std::abs(pi_residual_einstein(flipped, k) + pi_r) / (1.0 + std::abs(pi_r)),
                             std::abs(psi_residual_einstein(flipped, k) + psi_r) / (1.0 + std::abs(psi_r)),
                             std::abs(s_residual_einstein(flipped, k) + s_r) / (1.0 + std::abs(s_r)),
                             std::abs(alpha_norm_sq(flipped) - alpha_norm_sq(spectrum))});
    }
    rec.at_most("difference identity S = Pi - Psi", diff_gap, 1e-12);
    rec.at_most("sign-flip laws", flip_gap, 1e-12);

    double cubic_gap = 0.0;
    for (int s = 0; s < 1000; ++s) {
        const int dim = 1 + static_cast<int>(rng.canonical() * 6);
        const int codim = 1 + static_cast<int>(rng.canonical() * 4);
        std::vector<ShapeOperator<double>> alpha;
        for (int m = 0; m < codim; ++m) {
            ShapeOperator<double> a(dim, dim);
            for (int i = 0; i < dim; ++i) {
                for (int j = i; j < dim; ++j) {
                    a(i, j) = a(j, i) = rng.uniform(-1.0, 1.0);
                }
            }
            alpha.push_back(std::move(a));
        }
        const int m = static_cast<int>(rng.canonical() * codim);
        cubic_gap = std::max(cubic_gap, std::abs(cubic_contraction<double>(alpha, m) - cubic_contraction_trace<double>(alpha, m)));
    }
    rec.at_most("cubic contraction brute force vs trace (1000 cases)", cubic_gap, 1e-10);

    double lie_gap = 0.0;
    for (int s = 0; s < 1000; ++s) {
        const auto x = random_sp2_vector(rng);
        const auto y = random_sp2_vector(rng);
        const auto z = random_sp2_vector(rng);
        const auto anti = bracket(x, y) + bracket(y, x);
        const auto jacobi = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
        lie_gap = std::max({lie_gap, anti.coordinates().cwiseAbs().maxCoeff(), jacobi.coordinates().cwiseAbs().maxCoeff()});
    }
    rec.at_most("bracket antisymmetry and Jacobi", lie_gap, 1e-13);

    double sym_gap = 0.0;
    double bianchi_gap = 0.0;
    for (int point = 0; point < 20; ++point) {
        const auto g = MetricParams<double>::make(2.0 * (1.0 - rng.canonical()), 2.0 * (1.0 - rng.canonical()));
        const Sp2Geometry<double> geo(g);
        const auto& e = geo.engine();
        for (int s = 0; s < 50; ++s) {
            using V = Sp2Geometry<double>::Coordinates;
            V x, y, z, w;
            for (int a = 0; a < 10; ++a) {
                x(a) = rng.uniform(-1.0, 1.0);
                y(a) = rng.uniform(-1.0, 1.0);
                z(a) = rng.uniform(-1.0, 1.0);
                w(a) = rng.uniform(-1.0, 1.0);
            }
            const double r = e.curvature4(x, y, z, w);
            sym_gap = std::max({sym_gap, std::abs(r + e.curvature4(y, x, z, w)), std::abs(r + e.curvature4(x, y, w, z)),
                                std::abs(r - e.curvature4(z, w, x, y))});
            const V b = e.curvature(x, y, z) + e.curvature(y, z, x) + e.curvature(z, x, y);
            bianchi_gap = std::max(bianchi_gap, b.cwiseAbs().maxCoeff());
        }
    }
    rec.at_most("curvature tensor symmetries", sym_gap, 1e-10);
    rec.at_most("first Bianchi identity", bianchi_gap, 1e-10);
}

struct Entry {
    const char* title;
    double budget;
    void (*body)(Recorder&, const AcceptanceOptions&);
};

constexpr Entry entries[criterion_count] = {
    {"Nomizu Pi roots, n=2", 1.0, nomizu_pi_n2},
    {"Nomizu Pi and minimal roots, n=3", 1.0, nomizu_pi_n3},
    {"Nomizu Psi root, n=4", 1.0, nomizu_psi_n4},
    {"S-functional roots, n=1..4", 2.0, s_roots},
    {"Sp(2) curvature oracle pair", 30.0, sp2_oracles},
    {"Fubini-Study pinching and curve invariants", 5.0, fubini_study},
    {"desingularization quadrature", 10.0, desingularization},
    {"warped backgrounds", 60.0, warped_backgrounds},
    {"property suites", 30.0, property_suites},
};

}  // namespace

bool CriterionResult::pass() const
{
    return within_budget() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

CriterionResult run_criterion(int id, const AcceptanceOptions& options)
{
    if (id < 1 || id > criterion_count) {
        throw std::out_of_range("criterion id must be in 1.." + std::to_string(criterion_count));
    }
    const Entry& entry = entries[id - 1];
    CriterionResult result;
    result.id = id;
    result.title = entry.title;
    result.budget_seconds = entry.budget;
    Recorder rec(result);
    const auto start = std::chrono::steady_clock::now();
    rec.guarded("criterion body", [&] { entry.body(rec, options); });
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::vector<CriterionResult> run_acceptance(std::span<const int> ids, const AcceptanceOptions& options)
{
    std::vector<CriterionResult> out;
    out.reserve(ids.size());
    for (const int id : ids) out.push_back(run_criterion(id, options));
    return out;
}

void print_result_line(std::ostream& out, const CriterionResult& r)
{
    const auto passed = std::count_if(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.pass; });
    out << (r.pass() ? "PASS" : "FAIL") << ' ' << r.id << ' ' << r.title << " [" << passed << '/' << r.checks.size()
        << " checks]";
    bool first = true;
    for (const Check& c : r.checks) {
        if (c.pass) continue;
        out << (first ? ": " : "; ") << c.name << ": " << c.detail;
        first = false;
    }
    if (!r.within_budget()) {
        out << (first ? ": " : "; ") << "over budget (" << format_number(r.seconds, 3) << " s > "
            << format_number(r.budget_seconds, 3) << " s)";
    }
    out << '\n';
}

void print_result_checks(std::ostream& out, const CriterionResult& r)
{
    for (const Check& c : r.checks) {
        out << "    " << (c.pass ? "ok   " : "FAIL ") << c.name << ": " << c.detail << '\n';
    }
}

}  // namespace critcurv
