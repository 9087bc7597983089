#include "critcurv/projective.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include <Eigen/Geometry>

namespace critcurv {

namespace {

constexpr double pi = std::numbers::pi;

void require_even(const Eigen::VectorXd& v)
{
    if (v.size() == 0 || v.size() % 2 != 0) {
        throw std::invalid_argument("tangent vectors must live in R^{2n}, got size " + std::to_string(v.size()));
    }
}

double simpson(double fa, double fm, double fb, double h) { return h / 6.0 * (fa + 4.0 * fm + fb); }

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth)
{
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    if (depth <= 0) {
        throw std::runtime_error("desingularization quadrature did not converge");
    }
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol)
{
    if (!(b > a)) return 0.0;
    const double fa = f(a);
    const double fm = f(0.5 * (a + b));
    const double fb = f(b);
    return adaptive_simpson(f, a, b, fa, fm, fb, simpson(fa, fm, fb, b - a), tol, 50);
}

// The sheet {z1 z2 = eps} inside |z1|^2 + |z2|^2 <= r^2 is invariant under
// z -> eps / z, which swaps rho in [sqrt(eps), rho_max] with the inner half.
struct RadialRange {
    double lo = 0.0;
    double hi = 0.0;
};

RadialRange half_sheet(double r, double eps)
{
    if (!(r > 0.0)) throw std::invalid_argument("desingularization radius must be positive");
    if (eps < 0.0) throw std::invalid_argument("desingularization eps must be nonnegative");
    const double disc = r * r * r * r - 4.0 * eps * eps;
    if (disc < 0.0) return {};
    return {std::sqrt(eps), std::sqrt(0.5 * (r * r + std::sqrt(disc)))};
}

double radial_integrand(double rho, double eps) { return 2.0 * pi * rho * sheet_area_density(rho, eps); }

}  // namespace

Eigen::VectorXd complex_structure(const Eigen::VectorXd& v)
{
    require_even(v);
    Eigen::VectorXd out(v.size());
    for (Eigen::Index i = 0; i < v.size(); i += 2) {
        out(i) = -v(i + 1);
        out(i + 1) = v(i);
    }
    return out;
}

TangentPairFS TangentPairFS::make(Eigen::VectorXd u, Eigen::VectorXd v, double tol)
{
    require_even(u);
    if (u.size() != v.size()) throw std::invalid_argument("tangent pair has mismatched sizes");
    if (std::abs(u.squaredNorm() - 1.0) > tol || std::abs(v.squaredNorm() - 1.0) > tol || std::abs(u.dot(v)) > tol) {
        throw std::invalid_argument("tangent pair is not orthonormal");
    }
    return {std::move(u), std::move(v)};
}

double fs_sectional(const TangentPairFS& pair)
{
    const TangentPairFS checked = TangentPairFS::make(pair.u, pair.v);
    const double c = checked.u.dot(complex_structure(checked.v));
    return 1.0 + 3.0 * c * c;
}

FsDecomposition fs_decompose(const TangentPairFS& pair)
{
    const TangentPairFS checked = TangentPairFS::make(pair.u, pair.v);
    const Eigen::VectorXd ju = complex_structure(checked.u);
    const double s = std::clamp(checked.v.dot(ju), -1.0, 1.0);
    // cos t = |v - s Ju| directly; sqrt(1 - s^2) cancels for nearly holomorphic pairs
    Eigen::VectorXd w = checked.v - s * ju;
    w -= w.dot(checked.u) * checked.u + w.dot(ju) * ju;
    const double c = w.norm();
    FsDecomposition out;
    out.t = std::atan2(s, c);
    if (c > 1e-12) {
        out.v0 = w / c;
    } else {
        out.v0 = Eigen::VectorXd::Zero(checked.v.size());
    }
    return out;
}

Eigen::VectorXd fs_curvature_vector(const TangentPairFS& pair, double t)
{
    const FsDecomposition dec = fs_decompose(pair);
    if (std::abs(std::sin(t) - std::sin(dec.t)) > 1e-9 || std::abs(std::cos(t) - std::cos(dec.t)) > 1e-9) {
        throw std::invalid_argument("angle does not decompose v along J u");
    }
    return std::cos(t) * dec.v0 + 4.0 * std::sin(t) * complex_structure(pair.u);
}

CurveInvariants curve_invariants(int d)
{
    if (d < 1) throw std::invalid_argument("curve degree must be >= 1, got " + std::to_string(d));
    const std::int64_t dd = d;
    CurveInvariants out;
    out.d = d;
    out.pi_coeff = 4 * dd * (dd - 1);
    out.theta_coeff = 8 * dd;
    out.genus = (dd - 1) * (dd - 2) / 2;
    out.area_coeff = dd;
    out.c1_dot = (3 - dd) * dd;
    return out;
}

double intrinsic_alpha_norm(int m, double s_g)
{
    if (m < 1) throw std::invalid_argument("complex dimension must be >= 1");
    return 4.0 * m * (m + 1) - s_g;
}

bool genus_lower_bound(int d, int g)
{
    const std::int64_t dd = d;
    return 2 * static_cast<std::int64_t>(g) >= (dd - 1) * (dd - 2);
}

MinimizingBounds minimizing_bounds(int d)
{
    if (d < 1) throw std::invalid_argument("class multiple must be >= 1");
    const double dd = d;
    return {(dd - 2.0) * (dd - 1.0) / 2.0 + 0.75 * dd, pi * dd, 2.0 * pi * (dd * (dd - 1.0) + 2.0)};
}

bool bubble_inequality(const BubbleData& b)
{
    if (b.area < 0.0 || b.energy < 0.0) throw std::invalid_argument("bubble data must be nonnegative");
    return b.area * (64.0 * b.area + b.energy) >= 8.0 * pi * pi;
}

std::int64_t max_bubbles(double c1, double c2)
{
    if (c1 < 0.0 || c2 < 0.0) throw std::invalid_argument("bubble class bounds must be nonnegative");
    return static_cast<std::int64_t>(std::floor(std::sqrt(64.0 * c1 * c1 + c1 * c2) / (2.0 * std::sqrt(2.0) * pi)));
}

double sheet_area_density(double rho, double eps)
{
    if (eps == 0.0) {
        const double q = 1.0 + rho * rho;
        return 1.0 / (q * q);
    }
    const double r2 = rho * rho;
    const double e2 = eps * eps;
    // |f'|^2 = eps^2/rho^4, |z f' - f|^2 = 4 eps^2/rho^2 for f = eps/z
    const double num = 1.0 + 4.0 * e2 / r2 + e2 / (r2 * r2);
    const double den = 1.0 + r2 + e2 / r2;
    return num / (den * den);
}

DesingArea desing_area(double r, double eps, double tol)
{
    const RadialRange range = half_sheet(r, eps);
    const auto f = [eps](double rho) { return radial_integrand(rho, eps); };
    DesingArea out;
    out.quadrature = 8.0 * 2.0 * integrate(f, range.lo, range.hi, tol / 16.0);
    const double r2 = r * r;
    out.closed_form = eps == 0.0 ? 8.0 * pi * 2.0 * r2 / (2.0 + r2) : 8.0 * pi + 8.0 * pi * r2 / (1.0 + r2);
    out.two_disc_exact = 16.0 * pi * r2 / (1.0 + r2);
    return out;
}

double desing_area_composite(double r, double eps, int panels)
{
    if (panels < 1) throw std::invalid_argument("panel count must be >= 1");
    const RadialRange range = half_sheet(r, eps);
    const double h = (range.hi - range.lo) / panels;
    double sum = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double a = range.lo + i * h;
        sum += simpson(radial_integrand(a, eps), radial_integrand(a + 0.5 * h, eps), radial_integrand(a + h, eps), h);
    }
    return 16.0 * sum;
}

DiagonalConstants diagonal_constants() { return {}; }

double product_sphere_sectional(const Eigen::Vector3d& x1, const Eigen::Vector3d& x2, const Eigen::Vector3d& y1,
                                const Eigen::Vector3d& y2)
{
    const double num = x1.cross(y1).squaredNorm() + x2.cross(y2).squaredNorm();
    const double xx = x1.squaredNorm() + x2.squaredNorm();
    const double yy = y1.squaredNorm() + y2.squaredNorm();
    const double xy = x1.dot(y1) + x2.dot(y2);
    return num / (xx * yy - xy * xy);
}

}  // namespace critcurv
