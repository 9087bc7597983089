#ifndef CRITCURV_SP2_HPP
#define CRITCURV_SP2_HPP

// The compact symplectic group Sp(2) with the two-parameter family of
// left-invariant metrics
//
//   g_{lambda,mu}(Z1, Z2) = Re(lambda conj(p1) p2 + conj(u1) u2 + mu conj(r1) r2)
//
// on sp(2) = { [[p, -conj(u)], [u, r]] : Re p = Re r = 0 }. The r-block spans
// the fibres of Sp(2) -> S^7; the (p, u) blocks are horizontal.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <utility>

#include <Eigen/Core>

#include "critcurv/left_invariant.hpp"
#include "critcurv/quaternion.hpp"
#include "critcurv/random.hpp"

namespace critcurv {

template <typename Scalar>
struct MetricParams {
    Scalar lambda{0.5};
    Scalar mu{0.5};

    static MetricParams make(Scalar lambda, Scalar mu)
    {
        if (!(lambda > Scalar(0)) || !(mu > Scalar(0))) {
            throw std::invalid_argument("metric parameters lambda and mu must be positive");
        }
        return {lambda, mu};
    }
};

/// Tangent vector at the identity in (p, u, r) block coordinates.
template <typename Scalar>
struct Sp2Vector {
    using Quat = Quaternion<Scalar>;
    using Coordinates = Eigen::Matrix<Scalar, 10, 1>;

    Quat p;  // imaginary
    Quat u;
    Quat r;  // imaginary

    static Sp2Vector make(const Quat& p, const Quat& u, const Quat& r)
    {
        if (p.w != Scalar(0) || r.w != Scalar(0)) {
            throw std::invalid_argument("diagonal blocks of sp(2) must be purely imaginary");
        }
        return {p, u, r};
    }

    /// (p.x, p.y, p.z, u.w, u.x, u.y, u.z, r.x, r.y, r.z)
    Coordinates coordinates() const
    {
        Coordinates c;
        c << p.x, p.y, p.z, u.w, u.x, u.y, u.z, r.x, r.y, r.z;
        return c;
    }

    static Sp2Vector from_coordinates(const Coordinates& c)
    {
        return {{Scalar(0), c(0), c(1), c(2)}, {c(3), c(4), c(5), c(6)}, {Scalar(0), c(7), c(8), c(9)}};
    }

    Sp2Vector horizontal() const { return {p, u, Quat{}}; }
    Sp2Vector vertical() const { return {Quat{}, Quat{}, r}; }

    friend Sp2Vector operator+(const Sp2Vector& a, const Sp2Vector& b) { return {a.p + b.p, a.u + b.u, a.r + b.r}; }
    friend Sp2Vector operator-(const Sp2Vector& a, const Sp2Vector& b) { return {a.p - b.p, a.u - b.u, a.r - b.r}; }
    friend Sp2Vector operator*(Scalar s, const Sp2Vector& a) { return {s * a.p, s * a.u, s * a.r}; }
};

/// Matrix commutator [Z0, Z1] written back in block coordinates.
template <typename Scalar>
Sp2Vector<Scalar> bracket(const Sp2Vector<Scalar>& a, const Sp2Vector<Scalar>& b)
{
    // [[p, -u*], [u, r]] products, blockwise
    const auto p = a.p * b.p - b.p * a.p - a.u.conj() * b.u + b.u.conj() * a.u;
    const auto u = a.u * b.p + a.r * b.u - b.u * a.p - b.r * a.u;
    const auto r = a.r * b.r - b.r * a.r - a.u * b.u.conj() + b.u * a.u.conj();
    // diagonal real parts cancel identically
    return {p.imag(), u, r.imag()};
}

template <typename Scalar>
Scalar metric_eval(const MetricParams<Scalar>& g, const Sp2Vector<Scalar>& a, const Sp2Vector<Scalar>& b)
{
    return g.lambda * re_conj_mul(a.p, b.p) + re_conj_mul(a.u, b.u) + g.mu * re_conj_mul(a.r, b.r);
}

template <typename Scalar>
Scalar norm_sq(const MetricParams<Scalar>& g, const Sp2Vector<Scalar>& a)
{
    return metric_eval(g, a, a);
}

/// Unnormalized sectional curvature <R(Z0,Z1)Z1, Z0> from the closed-form
/// nine-term expression in the block entries Z0 = (p,u,r), Z1 = (q,w,z).
template <typename Scalar>
Scalar sectional_closed_form(const MetricParams<Scalar>& g, const Sp2Vector<Scalar>& z0, const Sp2Vector<Scalar>& z1)
{
    const Scalar l = g.lambda;
    const Scalar m = g.mu;
    const auto& p = z0.p;
    const auto& u = z0.u;
    const auto& r = z0.r;
    const auto& q = z1.p;
    const auto& w = z1.u;
    const auto& z = z1.r;

    const Scalar uw = re_conj_mul(u, w);
    const Scalar pq = re_conj_mul(p, q);
    const Scalar rz = re_conj_mul(r, z);
    const Scalar nu = u.norm_sq(), nw = w.norm_sq();
    const Scalar np = p.norm_sq(), nq = q.norm_sq();
    const Scalar nr = r.norm_sq(), nz = z.norm_sq();
    const Scalar one(1), two(2);

    Scalar k = (Scalar(4) - Scalar(3) * (l + m)) * (nu * nw - uw * uw);
    k += l * l * (nq * nu + np * nw);
    k += l * (np * nq - pq * pq);
    k -= two * uw * (l * pq + m * rz);
    k += two * l * (one - l) * (two * ((w * q).conj() * u * p) - (u * q).conj() * w * p).re();
    k += m * m * (nu * nz + nw * nr);
    k += m * (nr * nz - rz * rz);
    k += two * l * m * ((u * q * u.conj() - u * p * w.conj()) * z + (w * p * w.conj() - w * q * u.conj()) * r).re();
    k += two * m * (one - m) * (two * ((z * w).conj() * r * u) - (z * u).conj() * r * w).re();
    return k;
}

/// nabla_{Z0} Z1 from the explicit blockwise expression of the Levi-Civita
/// connection (first rendering).
template <typename Scalar>
Sp2Vector<Scalar> connection_closed_form(const MetricParams<Scalar>& g, const Sp2Vector<Scalar>& z0,
                                         const Sp2Vector<Scalar>& z1)
{
    const Scalar l = g.lambda;
    const Scalar m = g.mu;
    const Scalar half(0.5), one(1);
    const auto& p = z0.p;
    const auto& u = z0.u;
    const auto& r = z0.r;
    const auto& q = z1.p;
    const auto& w = z1.u;
    const auto& z = z1.r;
    const auto top = half * (p * q - q * p - u.conj() * w + w.conj() * u);
    const auto low = l * (u * q) - m * (z * u) - (one - l) * (w * p) + (one - m) * (r * w);
    const auto bot = half * (w * u.conj() - u * w.conj() + r * z - z * r);
    return {top.imag(), low, bot.imag()};
}

/// Sp(2) with g_{lambda,mu} as a left-invariant geometry. The internal basis is
/// g-orthonormal: i, j, k in the p-block scaled by 1/sqrt(lambda), 1, i, j, k in
/// the u-block, and i, j, k in the r-block scaled by 1/sqrt(mu).
template <typename Scalar>
class Sp2Geometry {
public:
    using Vec = Sp2Vector<Scalar>;
    using Engine = LeftInvariantGeometry<Scalar, 10>;
    using Coordinates = typename Vec::Coordinates;

    explicit Sp2Geometry(const MetricParams<Scalar>& g) : g_(g), scale_(scales(g)), engine_(build(g, scale_)) {}

    const MetricParams<Scalar>& params() const noexcept { return g_; }
    const Engine& engine() const noexcept { return engine_; }

    /// e_a of the orthonormal basis, a in [0, 10).
    Vec basis_vector(int a) const
    {
        return Vec::from_coordinates(Coordinates::Unit(a) / scale_(a));
    }

    Coordinates to_orthonormal(const Vec& v) const { return v.coordinates().cwiseProduct(scale_); }
    Vec from_orthonormal(const Coordinates& c) const { return Vec::from_coordinates(c.cwiseQuotient(scale_)); }

    Vec connection(const Vec& x, const Vec& y) const
    {
        return from_orthonormal(engine_.connection(to_orthonormal(x), to_orthonormal(y)));
    }

    Vec curvature(const Vec& x, const Vec& y, const Vec& z) const
    {
        return from_orthonormal(engine_.curvature(to_orthonormal(x), to_orthonormal(y), to_orthonormal(z)));
    }

    /// <R(Z0,Z1)Z1, Z0> assembled from the Koszul connection.
    Scalar sectional_koszul(const Vec& z0, const Vec& z1) const
    {
        return engine_.unnormalized_sectional(to_orthonormal(z0), to_orthonormal(z1));
    }

    /// 2 sum_{a<b} K(e_a, e_b) over the orthonormal basis.
    Scalar scalar_curvature_basis_sum() const
    {
        Scalar s(0);
        for (int a = 0; a < 10; ++a) {
            for (int b = a + 1; b < 10; ++b) {
                s += Scalar(2) * engine_.unnormalized_sectional(Coordinates::Unit(a), Coordinates::Unit(b));
            }
        }
        return s;
    }

    /// Largest g-norm of the horizontal part of nabla_X Y over pairs of
    /// orthonormal vertical basis vectors; zero when the fibres are totally geodesic.
    Scalar fiber_second_fundamental() const
    {
        using std::sqrt;
        Scalar worst(0);
        for (int a = 7; a < 10; ++a) {
            for (int b = 7; b < 10; ++b) {
                const Vec h = connection(basis_vector(a), basis_vector(b)).horizontal();
                worst = std::max(worst, sqrt(norm_sq(g_, h)));
            }
        }
        return worst;
    }

private:
    static Coordinates scales(const MetricParams<Scalar>& g)
    {
        using std::sqrt;
        Coordinates s;
        const Scalar sl = sqrt(g.lambda);
        const Scalar sm = sqrt(g.mu);
        s << sl, sl, sl, Scalar(1), Scalar(1), Scalar(1), Scalar(1), sm, sm, sm;
        return s;
    }

    static Engine build(const MetricParams<Scalar>& g, const Coordinates& scale)
    {
        if (!(g.lambda > Scalar(0)) || !(g.mu > Scalar(0))) {
            throw std::invalid_argument("metric parameters lambda and mu must be positive");
        }
        typename Engine::Operators ad;
        for (int a = 0; a < 10; ++a) {
            const Vec ea = Vec::from_coordinates(Coordinates::Unit(a) / scale(a));
            for (int b = 0; b < 10; ++b) {
                const Vec eb = Vec::from_coordinates(Coordinates::Unit(b) / scale(b));
                ad[a].col(b) = bracket(ea, eb).coordinates().cwiseProduct(scale);
            }
        }
        return Engine(ad, Engine::Matrix::Identity());
    }

    MetricParams<Scalar> g_;
    Coordinates scale_;
    Engine engine_;
};

template <typename Scalar>
Scalar sectional_from_koszul(const MetricParams<Scalar>& g, const Sp2Vector<Scalar>& z0, const Sp2Vector<Scalar>& z1)
{
    return Sp2Geometry<Scalar>(g).sectional_koszul(z0, z1);
}

template <typename Scalar>
Sp2Vector<Scalar> koszul_connection(const MetricParams<Scalar>& g, const Sp2Vector<Scalar>& x, const Sp2Vector<Scalar>& y)
{
    return Sp2Geometry<Scalar>(g).connection(x, y);
}

/// 2(3/lambda + 24 - 6(lambda + mu) + 3/mu)
template <typename Scalar>
Scalar scalar_curvature_closed_form(const MetricParams<Scalar>& g)
{
    return Scalar(2) * (Scalar(3) / g.lambda + Scalar(24) - Scalar(6) * (g.lambda + g.mu) + Scalar(3) / g.mu);
}

template <typename Scalar>
struct ScalarCurvature {
    Scalar closed_form{};
    Scalar basis_sum{};
};

template <typename Scalar>
ScalarCurvature<Scalar> scalar_curvature(const MetricParams<Scalar>& g)
{
    return {scalar_curvature_closed_form(g), Sp2Geometry<Scalar>(g).scalar_curvature_basis_sum()};
}

template <typename Scalar>
Scalar fiber_second_fundamental(const MetricParams<Scalar>& g)
{
    return Sp2Geometry<Scalar>(g).fiber_second_fundamental();
}

/// Volume of a fibre: a round 3-sphere of curvature 1/mu.
inline double fiber_volume(double mu)
{
    if (!(mu > 0.0)) {
        throw std::invalid_argument("mu must be positive");
    }
    return 2.0 * std::numbers::pi * std::numbers::pi * std::pow(mu, 1.5);
}

// ---------------------------------------------------------------------------
// Random sampling
// ---------------------------------------------------------------------------

struct SectionalScan {
    double minimum = 0.0;
    Sp2Vector<double> argmin_z0;
    Sp2Vector<double> argmin_z1;
    int samples = 0;
};

/// Random vector with block components uniform in [-1, 1].
Sp2Vector<double> random_sp2_vector(Rng& rng);

/// Random g-orthonormal pair (uniform components, then Gram-Schmidt).
std::pair<Sp2Vector<double>, Sp2Vector<double>> random_orthonormal_pair(const MetricParams<double>& g, Rng& rng);

/// Minimum of the closed-form sectional curvature over random orthonormal pairs.
SectionalScan nonnegativity_scan(const MetricParams<double>& g, int samples, std::uint64_t seed);

}  // namespace critcurv

#endif  // CRITCURV_SP2_HPP
