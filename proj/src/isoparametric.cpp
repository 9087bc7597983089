#include "critcurv/isoparametric.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace critcurv {

std::string_view to_string(Functional f) noexcept
{
    switch (f) {
    case Functional::Pi: return "pi";
    case Functional::Psi: return "psi";
    case Functional::S: return "s";
    case Functional::Minimal: return "minimal";
    }
    return "?";
}

Functional parse_functional(std::string_view name)
{
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "pi") return Functional::Pi;
    if (lower == "psi") return Functional::Psi;
    if (lower == "s") return Functional::S;
    if (lower == "minimal" || lower == "min") return Functional::Minimal;
    throw std::invalid_argument("unknown functional '" + std::string(name) + "'");
}

std::vector<CriticalRoot> find_critical(int n, Functional f, const RootScanOptions& options)
{
    if (n < 1) {
        throw std::invalid_argument("Nomizu family needs n >= 1, got " + std::to_string(n));
    }
    const auto residual = [n, f](double t) { return nomizu_residual(n, t, f); };
    const double lo = options.margin;
    const double hi = std::numbers::pi / 4 - options.margin;

    std::vector<CriticalRoot> roots;
    for (const auto& br : scan_sign_changes(residual, lo, hi, options.samples)) {
        const double t = bisect(residual, br, options.t_tolerance);
        const double r = residual(t);
        // A sign change across a pole would refine to a huge residual; skip it.
        if (br.lo != br.hi && std::abs(r) > std::max(std::abs(residual(br.lo)), std::abs(residual(br.hi)))) {
            continue;
        }
        roots.push_back({n, f, t, nomizu_density(n, t, f), r, br});
    }
    return roots;
}

PrincipalSpectrum clifford_spectrum(int m, int n)
{
    if (m < 1 || n < 1) {
        throw std::invalid_argument("Clifford product needs m, n >= 1");
    }
    const double md = m;
    const double nd = n;
    // sqrt(m/n) carries multiplicity n so that the product is minimal.
    if (m == n) {
        return PrincipalSpectrum({{1.0, n}, {-1.0, m}});
    }
    return PrincipalSpectrum({{std::sqrt(md / nd), n}, {-std::sqrt(nd / md), m}});
}

double clifford_pi_residual(int m, int n)
{
    return pi_residual_spaceform(clifford_spectrum(m, n), 1.0);
}

}  // namespace critcurv
