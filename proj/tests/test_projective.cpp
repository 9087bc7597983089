#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "critcurv/projective.hpp"
#include "critcurv/random.hpp"

using namespace critcurv;
using std::numbers::pi;

namespace {

Eigen::VectorXd random_vector(Rng& rng, int dim)
{
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i) v(i) = rng.uniform(-1, 1);
    return v;
}

TangentPairFS random_pair(Rng& rng, int n)
{
    Eigen::VectorXd u = random_vector(rng, 2 * n).normalized();
    Eigen::VectorXd v = random_vector(rng, 2 * n);
    v -= v.dot(u) * u;
    return TangentPairFS::make(u, v.normalized());
}

// Curvature tensor of constant holomorphic sectional curvature 4, written out
// from the metric and J alone:
// R(X,Y)Z = <Y,Z>X - <X,Z>Y + <JY,Z>JX - <JX,Z>JY + 2<X,JY>JZ.
Eigen::VectorXd fs_tensor(const Eigen::VectorXd& x, const Eigen::VectorXd& y, const Eigen::VectorXd& z)
{
    const auto J = [](const Eigen::VectorXd& a) { return complex_structure(a); };
    return y.dot(z) * x - x.dot(z) * y + J(y).dot(z) * J(x) - J(x).dot(z) * J(y) + 2 * x.dot(J(y)) * J(z);
}

// FS area density of a holomorphic curve f: C -> C^3 with derivative df,
// (|f|^2 |f'|^2 - |<f', f>|^2) / |f|^4.
double gram_density(std::complex<double> z, double eps)
{
    using C = std::complex<double>;
    const C f[3] = {1.0, z, eps / z};
    const C df[3] = {0.0, 1.0, -eps / (z * z)};
    double ff = 0, dd = 0;
    C fd = 0;
    for (int i = 0; i < 3; ++i) {
        ff += std::norm(f[i]);
        dd += std::norm(df[i]);
        fd += df[i] * std::conj(f[i]);
    }
    return (ff * dd - std::norm(fd)) / (ff * ff);
}

}  // namespace

TEST_CASE("holomorphic and totally real planes attain the curvature extremes")
{
    Eigen::VectorXd u(4), v(4);
    u << 1, 0, 0, 0;
    v = complex_structure(u);
    CHECK(fs_sectional(TangentPairFS::make(u, v)) == doctest::Approx(4.0));
    v << 0, 0, 1, 0;
    CHECK(fs_sectional(TangentPairFS::make(u, v)) == doctest::Approx(1.0));
    CHECK(complex_structure(complex_structure(u)).isApprox(-u));
}

TEST_CASE("sectional curvature lies in [1, 4] and matches the full curvature tensor")
{
    Rng rng(31);
    for (int trial = 0; trial < 20000; ++trial) {
        const int n = 1 + trial % 4;
        const auto pair = random_pair(rng, n);
        const double k = fs_sectional(pair);
        CHECK(k >= 1 - 1e-12);
        CHECK(k <= 4 + 1e-12);
        CHECK(fs_tensor(pair.u, pair.v, pair.v).dot(pair.u) == doctest::Approx(k).epsilon(1e-12));
    }
}

TEST_CASE("curvature vector R(v,u)u")
{
    Rng rng(32);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto pair = random_pair(rng, 1 + trial % 4);
        const auto dec = fs_decompose(pair);
        const Eigen::VectorXd r = fs_curvature_vector(pair, dec.t);
        CHECK((r - fs_tensor(pair.v, pair.u, pair.u)).norm() < 1e-12);
        CHECK(r.dot(pair.v) == doctest::Approx(fs_sectional(pair)).epsilon(1e-12));
        CHECK(std::abs(dec.v0.dot(pair.u)) < 1e-12);
        CHECK(std::abs(dec.v0.dot(complex_structure(pair.u))) < 1e-12);
    }
    Eigen::VectorXd u(4), v0(4);
    u << 1, 0, 0, 0;
    v0 << 0, 0, 1, 0;
    const Eigen::VectorXd Ju = complex_structure(u);
    CHECK(fs_curvature_vector(TangentPairFS::make(u, Ju), pi / 2).isApprox(4 * Ju));
    CHECK(fs_curvature_vector(TangentPairFS::make(u, v0), 0.0).isApprox(v0));
    CHECK_THROWS_AS(fs_curvature_vector(TangentPairFS::make(u, v0), 0.3), std::invalid_argument);
}

TEST_CASE("tangent pairs are validated")
{
    Eigen::VectorXd u(4), v(4);
    u << 1, 0, 0, 0;
    v << 1, 1, 0, 0;
    CHECK_THROWS_AS(TangentPairFS::make(u, v), std::invalid_argument);
    CHECK_THROWS_AS(TangentPairFS::make(Eigen::VectorXd::Unit(3, 0), Eigen::VectorXd::Unit(3, 1)),
                    std::invalid_argument);
}

TEST_CASE("plane curve invariants")
{
    const auto line = curve_invariants(1);
    CHECK(line.pi_coeff == 0);
    CHECK(line.genus == 0);
    CHECK(line.theta_coeff == 8);
    CHECK(line.area_coeff == 1);
    const auto cubic = curve_invariants(3);
    CHECK(cubic.pi_coeff == 24);
    CHECK(cubic.genus == 1);
    CHECK(cubic.c1_dot == 0);
    const auto quintic = curve_invariants(5);
    CHECK(quintic.pi_coeff == 80);
    CHECK(quintic.genus == 6);
    CHECK_THROWS_AS(curve_invariants(0), std::invalid_argument);
}

TEST_CASE("Gauss-Bonnet closure and quadratic growth of Pi")
{
    for (int d = 1; d <= 12; ++d) {
        const auto c = curve_invariants(d);
        CHECK(c.gauss_bonnet_closes());
        // integral of |alpha|^2 = integral (8 - s) = 8 area - 4 pi chi
        CHECK(c.pi_coeff == 8 * c.area_coeff - 4 * c.euler_characteristic());
        CHECK(intrinsic_alpha_norm(1, 8.0) == 0.0);
        if (d >= 2 && d < 12) {
            CHECK(curve_invariants(d + 1).pi_coeff - 2 * c.pi_coeff + curve_invariants(d - 1).pi_coeff == 8);
        }
    }
    CHECK(totally_real_torus_alpha_norm == 2.0);
    CHECK(intrinsic_alpha_norm(2, 20.0) == 4.0);
}

TEST_CASE("genus and area bounds")
{
    CHECK(genus_lower_bound(3, 1));
    CHECK_FALSE(genus_lower_bound(4, 2));
    CHECK(genus_lower_bound(1, 0));
    const auto b1 = minimizing_bounds(1);
    CHECK(b1.genus_max == doctest::Approx(0.75));
    CHECK(b1.area_min == doctest::Approx(pi));
    CHECK(b1.area_max == doctest::Approx(4 * pi));
    const auto b3 = minimizing_bounds(3);
    CHECK(b3.genus_max == doctest::Approx(1 + 9.0 / 4));
    CHECK(b3.area_min == doctest::Approx(3 * pi));
    CHECK(b3.area_max == doctest::Approx(16 * pi));
    CHECK(minimizing_bounds(2).area_min == doctest::Approx(2 * pi));
}

TEST_CASE("bubble inequality and bubble count")
{
    CHECK(bubble_inequality({pi, 0.0}));
    CHECK_FALSE(bubble_inequality({0.1, 0.0}));
    CHECK_FALSE(bubble_inequality({0.0, 1e9}));
    CHECK(max_bubbles(0.0, 5.0) == 0);
    CHECK(max_bubbles(1.0, 0.0) == 0);
    const double c1 = 2 * pi * (2 * 1 + 2);
    CHECK(max_bubbles(c1, 100.0) ==
          static_cast<std::int64_t>(std::floor(std::sqrt(64 * c1 * c1 + c1 * 100.0) / (2 * std::numbers::sqrt2 * pi))));
    Rng rng(33);
    for (int trial = 0; trial < 1000; ++trial) {
        const double a = rng.uniform(0, 50), b = rng.uniform(0, 500);
        const double da = rng.uniform(0, 5), db = rng.uniform(0, 50);
        CHECK(max_bubbles(a + da, b) >= max_bubbles(a, b));
        CHECK(max_bubbles(a, b + db) >= max_bubbles(a, b));
    }
}

TEST_CASE("sheet density matches the Gram-determinant pullback at any angle")
{
    Rng rng(34);
    for (int trial = 0; trial < 1000; ++trial) {
        const double eps = trial % 5 == 0 ? 0.0 : rng.uniform(0, 0.5);
        const double rho = rng.uniform(0.05, 5);
        const double theta = rng.uniform(0, 2 * pi);
        const double want = gram_density(std::polar(rho, theta), eps);
        CHECK(sheet_area_density(rho, eps) == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("desingularization area")
{
    // eps = 0: two discs, exact value known
    for (const double r : {0.5, 1.0, 2.0, 7.0}) {
        const auto a = desing_area(r, 0.0);
        CHECK(a.quadrature == doctest::Approx(16 * pi * r * r / (1 + r * r)).epsilon(1e-9));
        CHECK(a.two_disc_exact == doctest::Approx(16 * pi * r * r / (1 + r * r)));
        CHECK(a.closed_form == doctest::Approx(8 * pi * 2 * r * r / (2 + r * r)));
    }
    CHECK(desing_area(1.0, 0.0).closed_form == doctest::Approx(16 * pi / 3));
    CHECK(desing_area(1.0, 0.01).closed_form == doctest::Approx(8 * pi + 4 * pi));
    // whole lines, and the whole conic, both have 8 x area 16 pi
    CHECK(desing_area(1000.0, 0.0).quadrature == doctest::Approx(16 * pi).epsilon(1e-5));
    CHECK(desing_area(1000.0, 0.01).quadrature == doctest::Approx(16 * pi).epsilon(1e-5));
    // smoothing converges back to the node as eps -> 0
    double previous = 1e9;
    for (const double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
        const auto a = desing_area(1.0, eps);
        const double gap = std::abs(a.quadrature - a.two_disc_exact);
        CHECK(gap < previous);
        previous = gap;
    }
    CHECK(previous < 1e-2);
    CHECK_THROWS_AS(desing_area(-1.0, 0.0), std::invalid_argument);
}

TEST_CASE("composite Simpson is fourth order on the smooth sheet")
{
    const double exact = desing_area(1.0, 0.0).two_disc_exact;
    const double e1 = std::abs(desing_area_composite(1.0, 0.0, 8) - exact);
    const double e2 = std::abs(desing_area_composite(1.0, 0.0, 16) - exact);
    CHECK(std::log2(e1 / e2) > 3.5);
    CHECK(desing_area_composite(1.0, 0.05, 256) == doctest::Approx(desing_area(1.0, 0.05).quadrature).epsilon(1e-8));
}

TEST_CASE("diagonal of the product of spheres")
{
    const auto c = diagonal_constants();
    CHECK(c.volume == doctest::Approx(8 * pi));
    CHECK(c.closure() == 0.0);
    const double s = 1 / std::numbers::sqrt2;
    const Eigen::Vector3d e1(1, 0, 0), e2(0, 1, 0), zero(0, 0, 0);
    CHECK(product_sphere_sectional(s * e1, s * e1, s * e2, s * e2) == doctest::Approx(c.ambient_sectional_on_diagonal));
    // a factor sphere is totally geodesic with K = 1: Pi = 2 K area - 4 pi chi = 0
    const double k = product_sphere_sectional(e1, zero, e2, zero);
    CHECK(k == doctest::Approx(1.0));
    CHECK(2 * k * 4 * pi - 4 * pi * 2 == doctest::Approx(0.0));
}
