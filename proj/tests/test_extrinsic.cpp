#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "critcurv/extrinsic.hpp"
#include "critcurv/isoparametric.hpp"
#include "support.hpp"

using namespace critcurv;
using testing::Rational;

namespace {

// Residuals recomputed from an expanded list with the ambient sectional
// K(e_i, nu) given per direction. Shares nothing with the library sums.
struct ExpandedOracle {
    std::vector<double> k;
    std::vector<double> K;

    double h() const { return testing::expanded_power_sum(k, 1); }
    double a2() const { return testing::expanded_power_sum(k, 2); }
    double a3() const { return testing::expanded_power_sum(k, 3); }
    double weighted() const
    {
        double s = 0;
        for (std::size_t i = 0; i < k.size(); ++i) s += k[i] * K[i];
        return s;
    }
    double total() const
    {
        double s = 0;
        for (const double v : K) s += v;
        return s;
    }
    double pi() const { return 2 * weighted() - h() * a2() + 2 * a3(); }
    double psi() const { return 2 * h() * total() + 2 * h() * a2() - h() * h() * h(); }
};

ExpandedOracle oracle_for(const PrincipalSpectrum& spectrum, critcurv::Rng& rng, std::vector<double>& per_entry)
{
    ExpandedOracle o{testing::expand_by_hand(spectrum), {}};
    per_entry.clear();
    for (const auto& e : spectrum.entries()) {
        const double K = rng.uniform(-2, 2);
        per_entry.push_back(K);
        o.K.insert(o.K.end(), static_cast<std::size_t>(e.multiplicity), K);
    }
    return o;
}

double scale_of(const ExpandedOracle& o)
{
    double m = 1;
    for (const double v : o.k) m = std::max(m, std::abs(v));
    return m * m * m * static_cast<double>(o.k.size() * o.k.size() * o.k.size());
}

}  // namespace

TEST_CASE("worked invariants of small spectra")
{
    CHECK(mean_curvature(PrincipalSpectrum{{1.0, 1}, {-1.0, 1}}) == 0.0);
    CHECK(alpha_norm_sq(PrincipalSpectrum{{1.0, 2}, {-1.0, 2}}) == 4.0);
    CHECK(trace_a3(PrincipalSpectrum{{1.0, 3}}) == 3.0);
    CHECK(psi_residual_spaceform(PrincipalSpectrum{{1.0, 2}}, 1.0) == 8.0);

    const auto nomizu = nomizu_spectrum(2, std::numbers::pi / 8);
    CHECK(std::abs(mean_curvature(nomizu)) < 1e-14);
    CHECK(alpha_norm_sq(nomizu) == doctest::Approx(12.0).epsilon(1e-14));
    CHECK(std::abs(pi_residual_spaceform(nomizu, 1.0)) < 1e-12);
}

TEST_CASE("residuals at the reference critical parameters vanish")
{
    CHECK(std::abs(nomizu_residual(3, 0.3775786497, Functional::Pi)) < 1e-6);
    CHECK(std::abs(nomizu_residual(3, 0.5268183350, Functional::S)) < 1e-6);
}

TEST_CASE("Gauss relation on the Clifford torus and a round fibre")
{
    // flat torus in S^3: ambient sectional sum 2, intrinsic scalar 0
    CHECK(gauss_scalar(PrincipalSpectrum{{1.0, 1}, {-1.0, 1}}, 2.0) == doctest::Approx(0.0));
    // totally geodesic round S^3 of radius sqrt(mu): s = 6/mu
    for (const double mu : {0.25, 0.5, 2.0}) {
        CHECK(gauss_scalar(PrincipalSpectrum{{0.0, 3}}, 6.0 / mu) == doctest::Approx(6.0 / mu));
    }
}

TEST_CASE("library sums agree with the expanded-list oracle")
{
    critcurv::Rng rng(101);
    std::vector<double> per_entry;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto spectrum = testing::random_spectrum(rng, 5);
        const auto o = oracle_for(spectrum, rng, per_entry);
        const double tol = 1e-12 * scale_of(o);
        CHECK(std::abs(mean_curvature(spectrum) - o.h()) <= tol);
        CHECK(std::abs(alpha_norm_sq(spectrum) - o.a2()) <= tol);
        CHECK(std::abs(trace_a3(spectrum) - o.a3()) <= tol);
        CHECK(std::abs(pi_residual_einstein(spectrum, per_entry) - o.pi()) <= tol);
        CHECK(std::abs(psi_residual_einstein(spectrum, per_entry) - o.psi()) <= tol);
        // per-direction sectionals give the same answer
        CHECK(std::abs(pi_residual_einstein(spectrum, o.K) - o.pi()) <= tol);
    }
}

TEST_CASE("S residual equals Pi minus Psi exactly over the rationals")
{
    critcurv::Rng rng(202);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<CurvatureEntry<Rational>> entries;
        std::vector<Rational> sectionals;
        const int count = 1 + static_cast<int>(rng.canonical() * 4);
        for (int i = 0; i < count; ++i) {
            const auto num = static_cast<std::int64_t>(rng.uniform(-20, 20));
            const auto den = 1 + static_cast<std::int64_t>(rng.canonical() * 6);
            entries.push_back({Rational(num, den), 1 + static_cast<int>(rng.canonical() * 3)});
            sectionals.push_back(Rational(static_cast<std::int64_t>(rng.uniform(-9, 9)), 1 + trial % 4));
        }
        const BasicSpectrum<Rational> spectrum(std::move(entries));
        const Rational s = s_residual_einstein(spectrum, sectionals);
        const Rational diff = pi_residual_einstein(spectrum, sectionals) - psi_residual_einstein(spectrum, sectionals);
        CHECK(s == diff);
    }
}

TEST_CASE("orientation reversal flips every residual sign")
{
    critcurv::Rng rng(303);
    std::vector<double> per_entry;
    for (int trial = 0; trial < 500; ++trial) {
        const auto spectrum = testing::random_spectrum(rng);
        const auto o = oracle_for(spectrum, rng, per_entry);
        const auto flip = spectrum.flipped();
        const double tol = 1e-12 * scale_of(o);
        CHECK(std::abs(pi_residual_einstein(flip, per_entry) + pi_residual_einstein(spectrum, per_entry)) <= tol);
        CHECK(std::abs(psi_residual_einstein(flip, per_entry) + psi_residual_einstein(spectrum, per_entry)) <= tol);
        CHECK(std::abs(s_residual_einstein(flip, per_entry) + s_residual_einstein(spectrum, per_entry)) <= tol);
    }
}

TEST_CASE("spectra symmetric under negation are critical for every functional")
{
    critcurv::Rng rng(404);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<CurvatureEntry<double>> entries;
        std::vector<double> sectionals;
        const int pairs = 1 + static_cast<int>(rng.canonical() * 3);
        for (int i = 0; i < pairs; ++i) {
            const double k = rng.uniform(-4, 4);
            const int m = 1 + static_cast<int>(rng.canonical() * 3);
            const double K = rng.uniform(-1, 1);
            entries.push_back({k, m});
            entries.push_back({-k, m});
            sectionals.insert(sectionals.end(), {K, K});
        }
        const PrincipalSpectrum spectrum(std::move(entries));
        CHECK(std::abs(mean_curvature(spectrum)) < 1e-13);
        CHECK(std::abs(pi_residual_einstein(spectrum, sectionals)) < 1e-11);
        CHECK(std::abs(psi_residual_einstein(spectrum, sectionals)) < 1e-11);
        CHECK(std::abs(s_residual_einstein(spectrum, sectionals)) < 1e-11);
    }
}

TEST_CASE("entry order does not matter")
{
    critcurv::Rng rng(505);
    std::vector<double> per_entry;
    for (int trial = 0; trial < 300; ++trial) {
        const auto spectrum = testing::random_spectrum(rng, 5);
        oracle_for(spectrum, rng, per_entry);
        auto entries = spectrum.entries();
        std::reverse(entries.begin(), entries.end());
        auto reversed_K = per_entry;
        std::reverse(reversed_K.begin(), reversed_K.end());
        const PrincipalSpectrum rev(std::move(entries));
        CHECK(s_residual_einstein(rev, reversed_K) ==
              doctest::Approx(s_residual_einstein(spectrum, per_entry)).epsilon(1e-12).scale(1e3));
    }
}

TEST_CASE("|alpha|^2 >= h^2 / dim")
{
    critcurv::Rng rng(606);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto spectrum = testing::random_spectrum(rng, 5);
        const double h = mean_curvature(spectrum);
        CHECK(alpha_norm_sq(spectrum) >= h * h / spectrum.dimension() - 1e-12 * (1 + h * h));
    }
}

TEST_CASE("malformed inputs are rejected")
{
    CHECK_THROWS_AS(PrincipalSpectrum({{1.0, 0}}), std::invalid_argument);
    const PrincipalSpectrum spectrum{{1.0, 2}, {2.0, 1}};
    const std::vector<double> wrong{1.0, 1.0, 1.0, 1.0};
    CHECK_THROWS_AS(pi_residual_einstein(spectrum, wrong), std::invalid_argument);
    const std::vector<double> per_entry{1.0, 1.0};
    const std::vector<double> per_direction{1.0, 1.0, 1.0};
    CHECK(pi_residual_einstein(spectrum, per_entry) == pi_residual_einstein(spectrum, per_direction));
}

namespace {

ShapeOperator<double> random_symmetric(critcurv::Rng& rng, int n)
{
    ShapeOperator<double> a(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = rng.uniform(-2, 2);
    }
    return a;
}

}  // namespace

TEST_CASE("cubic contraction in codimension one reduces to tr A^3")
{
    const std::vector<ShapeOperator<double>> diag{Eigen::Vector3d(1, 2, -1).asDiagonal().toDenseMatrix()};
    CHECK(cubic_contraction<double>(diag, 0) == doctest::Approx(8.0));
    const std::vector<ShapeOperator<double>> cancel{Eigen::Vector2d(1, -1).asDiagonal().toDenseMatrix()};
    CHECK(cubic_contraction<double>(cancel, 0) == doctest::Approx(0.0));
}

TEST_CASE("cubic contraction agrees with tr(A_m sum_k A_k^2)")
{
    critcurv::Rng rng(707);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng.canonical() * 5);
        const int q = 1 + static_cast<int>(rng.canonical() * 3);
        std::vector<ShapeOperator<double>> alpha;
        for (int k = 0; k < q; ++k) alpha.push_back(random_symmetric(rng, n));
        const int m = static_cast<int>(rng.canonical() * q);
        const double direct = cubic_contraction<double>(alpha, m);
        CHECK(direct == doctest::Approx(cubic_contraction_trace<double>(alpha, m)).epsilon(1e-12).scale(1e2));
    }
}

TEST_CASE("cubic contraction rejects malformed forms")
{
    ShapeOperator<double> asym(2, 2);
    asym << 1, 2, 3, 4;
    const std::vector<ShapeOperator<double>> bad{asym};
    CHECK_THROWS_AS(cubic_contraction<double>(bad, 0), std::invalid_argument);
    const std::vector<ShapeOperator<double>> good{ShapeOperator<double>::Identity(2, 2)};
    CHECK_THROWS_AS(cubic_contraction<double>(good, 1), std::out_of_range);
    CHECK_THROWS_AS(cubic_contraction<double>(std::vector<ShapeOperator<double>>{}, 0), std::invalid_argument);
}
