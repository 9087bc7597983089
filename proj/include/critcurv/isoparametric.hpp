#ifndef CRITCURV_ISOPARAMETRIC_HPP
#define CRITCURV_ISOPARAMETRIC_HPP

// Isoparametric hypersurfaces of round spheres with closed-form principal
// curvatures:
//
//  * the Nomizu family M_t^{2n} = { F(z) = cos^2 2t } in S^{2n+1}, 0 < t < pi/4,
//    with curvatures (1 + sin 2t)/cos 2t, (-1 + sin 2t)/cos 2t (multiplicity 1)
//    and tan t, -cot t (multiplicity n - 1);
//  * the minimal Clifford products S^m x S^n in S^{m+n+1}.

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "critcurv/extrinsic.hpp"
#include "critcurv/roots.hpp"

namespace critcurv {

enum class Functional { Pi, Psi, S, Minimal };

std::string_view to_string(Functional f) noexcept;
Functional parse_functional(std::string_view name);

/// Admissible values of |alpha|^2 / (n - 1) for Cartan's isoparametric families
/// (Peng-Terng). Kept for reference; nothing here computes them.
inline constexpr std::array<int, 5> cartan_alpha_norm_multiples{0, 1, 2, 3, 5};

template <typename Scalar = double>
BasicSpectrum<Scalar> nomizu_spectrum(int n, Scalar t)
{
    using std::cos;
    using std::sin;
    using std::tan;
    if (n < 1) {
        throw std::invalid_argument("Nomizu family needs n >= 1, got " + std::to_string(n));
    }
    const Scalar quarter_pi = std::numbers::pi_v<Scalar> / Scalar(4);
    if (!(t > Scalar(0) && t < quarter_pi)) {
        throw std::domain_error("Nomizu parameter t must lie in (0, pi/4)");
    }
    const Scalar s2 = sin(Scalar(2) * t);
    const Scalar c2 = cos(Scalar(2) * t);
    std::vector<CurvatureEntry<Scalar>> entries{{(Scalar(1) + s2) / c2, 1}, {(s2 - Scalar(1)) / c2, 1}};
    if (n > 1) {
        entries.push_back({tan(t), n - 1});
        entries.push_back({-Scalar(1) / tan(t), n - 1});
    }
    return BasicSpectrum<Scalar>(std::move(entries));
}

/// Residual of the named functional for M_t^{2n} in the unit sphere.
template <typename Scalar = double>
Scalar nomizu_residual(int n, Scalar t, Functional f)
{
    const auto spectrum = nomizu_spectrum<Scalar>(n, t);
    switch (f) {
    case Functional::Pi: return pi_residual_spaceform(spectrum, Scalar(1));
    case Functional::Psi: return psi_residual_spaceform(spectrum, Scalar(1));
    case Functional::S: return s_residual_spaceform(spectrum, Scalar(1));
    case Functional::Minimal: return mean_curvature(spectrum);
    }
    throw std::invalid_argument("unknown functional");
}

/// Critical value per unit volume: |alpha|^2 for Pi, h^2 for Psi,
/// |alpha|^2 - h^2 for S and 0 for minimality.
template <typename Scalar = double>
Scalar nomizu_density(int n, Scalar t, Functional f)
{
    const auto spectrum = nomizu_spectrum<Scalar>(n, t);
    const Scalar h = mean_curvature(spectrum);
    switch (f) {
    case Functional::Pi: return alpha_norm_sq(spectrum);
    case Functional::Psi: return h * h;
    case Functional::S: return alpha_norm_sq(spectrum) - h * h;
    case Functional::Minimal: return Scalar(0);
    }
    throw std::invalid_argument("unknown functional");
}

struct CriticalRoot {
    int n = 0;
    Functional functional = Functional::Pi;
    double t = 0.0;
    double density = 0.0;
    double residual = 0.0;
    Bracket bracket;
};

struct RootScanOptions {
    int samples = 10000;
    double margin = 1e-6;  // keeps the scan off the cot pole at 0 and the sec pole at pi/4
    double t_tolerance = 1e-12;
};

/// All sign changes of the residual on (0, pi/4), refined by bisection.
std::vector<CriticalRoot> find_critical(int n, Functional f, const RootScanOptions& options = {});

PrincipalSpectrum clifford_spectrum(int m, int n);

/// Pi residual of S^m x S^n in S^{m+n+1}; equals 2(m^2 - n^2)/sqrt(mn).
double clifford_pi_residual(int m, int n);

}  // namespace critcurv

#endif  // CRITCURV_ISOPARAMETRIC_HPP
