#include "critcurv/sp2.hpp"

#include <limits>

namespace critcurv {

Sp2Vector<double> random_sp2_vector(Rng& rng)
{
    Sp2Vector<double>::Coordinates c;
    for (int a = 0; a < 10; ++a) {
        c(a) = rng.uniform(-1.0, 1.0);
    }
    return Sp2Vector<double>::from_coordinates(c);
}

std::pair<Sp2Vector<double>, Sp2Vector<double>> random_orthonormal_pair(const MetricParams<double>& g, Rng& rng)
{
    for (;;) {
        auto x = random_sp2_vector(rng);
        auto y = random_sp2_vector(rng);
        const double nx = norm_sq(g, x);
        if (nx < 1e-8) {
            continue;
        }
        x = (1.0 / std::sqrt(nx)) * x;
        y = y - metric_eval(g, x, y) * x;
        const double ny = norm_sq(g, y);
        if (ny < 1e-8) {
            continue;
        }
        y = (1.0 / std::sqrt(ny)) * y;
        return {x, y};
    }
}

SectionalScan nonnegativity_scan(const MetricParams<double>& g, int samples, std::uint64_t seed)
{
    if (samples < 1) {
        throw std::invalid_argument("nonnegativity scan needs at least one sample");
    }
    Rng rng(seed);
    SectionalScan scan;
    scan.minimum = std::numeric_limits<double>::infinity();
    scan.samples = samples;
    for (int s = 0; s < samples; ++s) {
        const auto [x, y] = random_orthonormal_pair(g, rng);
        const double k = sectional_closed_form(g, x, y);
        if (k < scan.minimum) {
            scan.minimum = k;
            scan.argmin_z0 = x;
            scan.argmin_z1 = y;
        }
    }
    return scan;
}

}  // namespace critcurv
