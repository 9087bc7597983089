#ifndef CRITCURV_ROOTS_HPP
#define CRITCURV_ROOTS_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

namespace critcurv {

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
};

/// Samples f uniformly on [a, b] and returns every interval on which it changes
/// sign. A sample that is exactly zero yields a degenerate bracket [t, t].
template <typename F>
std::vector<Bracket> scan_sign_changes(F&& f, double a, double b, int samples)
{
    if (samples < 2 || !(a < b)) {
        throw std::invalid_argument("sign scan needs samples >= 2 and a < b");
    }
    std::vector<Bracket> out;
    const double h = (b - a) / (samples - 1);
    double t_prev = a;
    double f_prev = f(a);
    if (f_prev == 0.0) {
        out.push_back({a, a});
    }
    for (int i = 1; i < samples; ++i) {
        const double t = (i == samples - 1) ? b : a + i * h;
        const double ft = f(t);
        if (ft == 0.0) {
            out.push_back({t, t});
        }
        else if (f_prev != 0.0 && std::signbit(ft) != std::signbit(f_prev)) {
            out.push_back({t_prev, t});
        }
        t_prev = t;
        f_prev = ft;
    }
    return out;
}

/// Plain bisection on a sign-changing bracket until its width is below tol.
template <typename F>
double bisect(F&& f, Bracket br, double tol)
{
    double lo = br.lo;
    double hi = br.hi;
    if (lo == hi) {
        return lo;
    }
    double f_lo = f(lo);
    if (f_lo == 0.0) {
        return lo;
    }
    const double f_hi = f(hi);
    if (f_hi == 0.0) {
        return hi;
    }
    if (std::signbit(f_lo) == std::signbit(f_hi)) {
        throw std::invalid_argument("bisect: bracket does not change sign");
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;  // no representable midpoint left
        }
        const double f_mid = f(mid);
        if (f_mid == 0.0) {
            return mid;
        }
        if (std::signbit(f_mid) == std::signbit(f_lo)) {
            lo = mid;
            f_lo = f_mid;
        }
        else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace critcurv

#endif  // CRITCURV_ROOTS_HPP
