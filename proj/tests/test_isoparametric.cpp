#include <doctest.h>

#include <cmath>
#include <numbers>

#include "critcurv/isoparametric.hpp"

using namespace critcurv;

TEST_CASE("Nomizu spectrum at t = pi/8")
{
    const auto spectrum = nomizu_spectrum(2, std::numbers::pi / 8);
    const double r2 = std::numbers::sqrt2;
    const double want[] = {r2 + 1, 1 - r2, r2 - 1, -(r2 + 1)};
    REQUIRE(spectrum.entries().size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(spectrum.entries()[i].curvature == doctest::Approx(want[i]).epsilon(1e-14));
        CHECK(spectrum.entries()[i].multiplicity == 1);
    }
}

TEST_CASE("Nomizu curvatures pair up with product -1")
{
    for (int n = 1; n <= 6; ++n) {
        for (int i = 1; i < 100; ++i) {
            const double t = i * (std::numbers::pi / 4) / 100;
            const auto spectrum = nomizu_spectrum(n, t);
            const auto& e = spectrum.entries();
            CHECK(e[0].curvature * e[1].curvature == doctest::Approx(-1.0).epsilon(1e-12));
            if (n > 1) {
                CHECK(e[2].curvature * e[3].curvature == doctest::Approx(-1.0).epsilon(1e-12));
                CHECK(e[2].multiplicity == n - 1);
            } else {
                CHECK(e.size() == 2);
            }
            CHECK(spectrum.dimension() == 2 * n);
        }
    }
}

TEST_CASE("Nomizu parameter outside (0, pi/4) is rejected")
{
    CHECK_THROWS_AS(nomizu_spectrum(2, 0.0), std::domain_error);
    CHECK_THROWS_AS(nomizu_spectrum(2, std::numbers::pi / 4), std::domain_error);
    CHECK_THROWS_AS(nomizu_spectrum(2, 0.9), std::domain_error);
    CHECK_THROWS_AS(nomizu_spectrum(0, 0.3), std::invalid_argument);
    CHECK_THROWS_AS(parse_functional("willmore"), std::invalid_argument);
    CHECK(parse_functional("PSI") == Functional::Psi);
}

TEST_CASE("every reported root is bracketed by a sign change in extended precision")
{
    for (const auto f : {Functional::Pi, Functional::Psi, Functional::S, Functional::Minimal}) {
        for (int n = 1; n <= 5; ++n) {
            for (const auto& root : find_critical(n, f)) {
                const long double t = root.t;
                const long double lo = nomizu_residual<long double>(n, t - 1e-9L, f);
                const long double hi = nomizu_residual<long double>(n, t + 1e-9L, f);
                CHECK(lo * hi <= 0.0L);
                CHECK(root.density == doctest::Approx(nomizu_density(n, root.t, f)));
                CHECK(root.bracket.lo <= root.t);
                CHECK(root.t <= root.bracket.hi);
            }
        }
    }
}

TEST_CASE("a ten times finer scan reproduces the root set")
{
    RootScanOptions fine;
    fine.samples = 100000;
    for (const auto f : {Functional::Pi, Functional::Psi, Functional::S, Functional::Minimal}) {
        for (int n = 1; n <= 4; ++n) {
            const auto coarse = find_critical(n, f);
            const auto refined = find_critical(n, f, fine);
            REQUIRE(coarse.size() == refined.size());
            for (std::size_t i = 0; i < coarse.size(); ++i) {
                CHECK(std::abs(coarse[i].t - refined[i].t) < 1e-10);
            }
        }
    }
}

TEST_CASE("in dimension four the minimal leaf is the Pi-critical leaf")
{
    const auto minimal = find_critical(2, Functional::Minimal);
    const auto pi = find_critical(2, Functional::Pi);
    REQUIRE(minimal.size() == 1);
    REQUIRE(pi.size() == 1);
    CHECK(minimal[0].t == doctest::Approx(std::numbers::pi / 8).epsilon(1e-11));
    CHECK(pi[0].t == doctest::Approx(minimal[0].t).epsilon(1e-11));
    // higher n: the minimal leaf is not Pi-critical
    for (int n = 3; n <= 5; ++n) {
        const double t = find_critical(n, Functional::Minimal).at(0).t;
        CHECK(std::abs(nomizu_residual(n, t, Functional::Pi)) > 1e-3);
        CHECK(std::abs(nomizu_residual(n, t, Functional::Psi)) < 1e-9);
    }
}

TEST_CASE("empty root sets")
{
    CHECK(find_critical(1, Functional::S).empty());
    CHECK(find_critical(4, Functional::Pi).empty());
}

TEST_CASE("Clifford products are minimal with Pi residual 2(m^2 - n^2)/sqrt(mn)")
{
    CHECK(clifford_pi_residual(1, 2) == doctest::Approx(-3 * std::numbers::sqrt2).epsilon(1e-13));
    for (int m = 1; m <= 6; ++m) {
        for (int n = 1; n <= 6; ++n) {
            const auto spectrum = clifford_spectrum(m, n);
            CHECK(spectrum.dimension() == m + n);
            CHECK(std::abs(mean_curvature(spectrum)) < 1e-13);
            const double closed = 2.0 * (m * m - n * n) / std::sqrt(double(m) * n);
            CHECK(clifford_pi_residual(m, n) == doctest::Approx(closed).epsilon(1e-12).scale(1));
            CHECK(clifford_pi_residual(m, n) == doctest::Approx(-clifford_pi_residual(n, m)).scale(1));
            CHECK((std::abs(clifford_pi_residual(m, n)) < 1e-12) == (m == n));
        }
    }
    CHECK_THROWS_AS(clifford_spectrum(0, 2), std::invalid_argument);
}
